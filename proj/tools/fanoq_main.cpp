// Command-line front end: hypothesis checks and invariants for a single
// (quiver, dimension vector), exhaustive inequality sweeps, and the
// partial-sum lemma tools.
//
// Exit codes: 0 success, 1 usage/input errors, 2 a sweep found a
// counterexample or an unexpected equality case.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "fanoq/bitkernels.hpp"
#include "fanoq/json_io.hpp"
#include "fanoq/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCounterexample = 2;

std::vector<std::int64_t> parse_int_list(const std::string& csv, const std::string& flag) {
  std::vector<std::int64_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "'" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw CLI::ValidationError(flag, "expected a comma-separated list");
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << text;
  if (!out) throw std::runtime_error(path + ": write failed");
}

void apply_kernel_choice(const std::string& kernel) {
  if (kernel == "auto") return;
  fanoq::set_active_kernels(kernel == "scalar" ? fanoq::KernelKind::scalar
                                               : fanoq::KernelKind::avx2);
}

unsigned default_workers() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fano invariants of quiver moduli: hypothesis checks, exhaustive "
               "inequality sweeps and the partial-sum lemma tools"};
  app.require_subcommand(1);

  std::string kernel = "auto";
  app.add_option("--kernel", kernel, "bit kernel implementation")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}))
      ->capture_default_str();

  // --- check ---------------------------------------------------------
  auto* check = app.add_subcommand(
      "check", "hypotheses, invariants and classification for one (quiver, d)");
  std::string quiver_path, dim_path;
  std::string engine_name = "dp";
  check->add_option("quiver", quiver_path, "quiver JSON file")->required();
  check->add_option("dimvec", dim_path, "dimension vector JSON file")->required();
  check->add_option("--engine", engine_name, "coprimality engine")
      ->check(CLI::IsMember({"dp", "naive"}))
      ->capture_default_str();

  // --- invariants ----------------------------------------------------
  auto* invs = app.add_subcommand(
      "invariants", "invariants only; hypotheses are skipped, not asserted");
  std::string inv_quiver_path, inv_dim_path;
  invs->add_option("quiver", inv_quiver_path, "quiver JSON file")->required();
  invs->add_option("dimvec", inv_dim_path, "dimension vector JSON file")->required();

  // --- sweep ---------------------------------------------------------
  auto* sweep = app.add_subcommand("sweep", "exhaustive (quiver, d) inequality sweep");
  fanoq::SweepConfig scfg;
  scfg.worker_count = default_workers();
  std::string report_path, csv_path;
  sweep->add_option("--max-vertices", scfg.max_vertices)->capture_default_str();
  sweep->add_option("--max-mult", scfg.max_multiplicity)->capture_default_str();
  sweep->add_option("--max-dim", scfg.max_dim_entry)->capture_default_str();
  sweep->add_flag("--no-dedupe", [&](std::int64_t) { scfg.dedupe_isomorphic = false; },
                  "enumerate all labelings instead of one per isomorphism class");
  sweep->add_option("--workers", scfg.worker_count)->capture_default_str();
  sweep->add_option("--budget", scfg.pair_budget, "max (matrix, d) pairs")
      ->capture_default_str();
  sweep->add_flag("--force", scfg.force, "run even above the budget");
  sweep->add_option("--report", report_path, "write the JSON report here");
  sweep->add_option("--csv", csv_path, "write equality cases as CSV here");

  // --- lemma ---------------------------------------------------------
  auto* lemma = app.add_subcommand("lemma", "partial-sum lemma tools");
  lemma->require_subcommand(1);

  auto* lcheck = lemma->add_subcommand("check", "verdict for one instance");
  std::string a_csv, b_csv;
  lcheck->add_option("--a", a_csv, "comma-separated positive integers")->required();
  lcheck->add_option("--b", b_csv, "comma-separated positive integers")->required();

  auto* lsweep = lemma->add_subcommand("sweep", "exhaustive lemma verification");
  fanoq::LemmaSearchConfig lcfg;
  lcfg.workers = default_workers();
  std::string lemma_report_path;
  lsweep->add_option("--max-k", lcfg.max_k)->capture_default_str();
  lsweep->add_option("--max-l", lcfg.max_l)->capture_default_str();
  lsweep->add_option("--max-value", lcfg.max_value)->capture_default_str();
  lsweep->add_flag("--canonical", lcfg.canonical_only,
                   "enumerate non-decreasing sequences only");
  lsweep->add_option("--workers", lcfg.workers)->capture_default_str();
  lsweep->add_option("--budget", lcfg.budget, "max instances")->capture_default_str();
  lsweep->add_option("--report", lemma_report_path, "write the JSON report here");

  CLI11_PARSE(app, argc, argv);

  try {
    apply_kernel_choice(kernel);

    if (*check) {
      auto nq = fanoq::load_quiver_file(quiver_path);
      if (!fanoq::is_valid(nq.quiver))
        throw std::runtime_error(quiver_path +
                                 ": quiver is not connected, acyclic and loop-free");
      auto d = fanoq::load_dimension_vector_file(dim_path, nq);
      auto engine = engine_name == "naive" ? fanoq::CoprimeEngine::naive
                                           : fanoq::CoprimeEngine::dp;
      auto hyp = fanoq::full_report(nq.quiver, d, /*want_witnesses=*/true, engine);
      nlohmann::json out{{"quiver", fanoq::quiver_to_json(nq.quiver, nq.names)},
                         {"hypotheses", fanoq::hypothesis_report_to_json(hyp, nq.names)}};
      if (nq.quiver.vertex_count() >= 2) {
        bool met = hyp.coprime && hyp.interior;
        out["verdict"] = fanoq::verdict_to_json(
            fanoq::mukai_verdict(nq.quiver, d, /*hypotheses_met=*/met));
      } else {
        out["verdict"] = nullptr;
        out["note"] = "invariants need at least two vertices";
      }
      std::cout << out.dump(2) << '\n';
      return kExitOk;
    }

    if (*invs) {
      auto nq = fanoq::load_quiver_file(inv_quiver_path);
      if (!fanoq::is_valid(nq.quiver))
        throw std::runtime_error(inv_quiver_path +
                                 ": quiver is not connected, acyclic and loop-free");
      auto d = fanoq::load_dimension_vector_file(inv_dim_path, nq);
      auto v = fanoq::mukai_verdict(nq.quiver, d, /*hypotheses_met=*/false);
      std::cout << fanoq::verdict_to_json(v).dump(2) << '\n';
      return kExitOk;
    }

    if (*sweep) {
      auto rep = fanoq::run_sweep(scfg);
      nlohmann::json j = fanoq::sweep_report_to_json(rep);
      if (!report_path.empty()) write_text_file(report_path, j.dump(2) + "\n");
      if (!csv_path.empty()) write_text_file(csv_path, fanoq::sweep_equality_csv(rep));
      std::cout << "quivers " << rep.totals.quivers << ", pairs " << rep.totals.pairs_tested
                << ", passing " << rep.totals.pairs_passing_hypotheses << ", holds "
                << rep.totals.mukai_holds << ", equality " << rep.totals.equality_count
                << ", unexpected " << rep.totals.unexpected_equality << ", counterexamples "
                << rep.counterexamples.size() << " (" << rep.wall_ms << " ms)\n";
      if (rep.partial) {
        std::cerr << "sweep aborted: " << rep.error << '\n';
        return kExitError;
      }
      return rep.clean() ? kExitOk : kExitCounterexample;
    }

    if (*lcheck) {
      fanoq::PartialSumInstance inst(parse_int_list(a_csv, "--a"),
                                     parse_int_list(b_csv, "--b"));
      auto v = fanoq::lemma_verdict(inst);
      std::cout << fanoq::lemma_verdict_to_json(v).dump(2) << '\n';
      return kExitOk;
    }

    if (*lsweep) {
      auto rep = fanoq::exhaustive_lemma_search(lcfg);
      nlohmann::json j = fanoq::lemma_search_report_to_json(rep);
      if (!lemma_report_path.empty()) write_text_file(lemma_report_path, j.dump(2) + "\n");
      std::cout << "instances " << rep.instances << ", hypothesis ok " << rep.hypothesis_ok
                << ", equality " << rep.equality_count << ", bound violations "
                << rep.bound_violations << ", uncharacterized "
                << rep.uncharacterized_equalities << ", grid violations "
                << rep.grid_violations << " (" << rep.wall_ms << " ms)\n";
      return rep.clean() ? kExitOk : kExitCounterexample;
    }
  } catch (const fanoq::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
