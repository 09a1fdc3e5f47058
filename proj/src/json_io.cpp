#include "fanoq/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace fanoq {

namespace {

using nlohmann::json;

// Line of a byte offset inside text, 1-based; nlohmann reports byte
// positions on syntax errors.
std::size_t line_of_offset(const std::string& text, std::size_t offset) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

json parse_text(const std::string& text, const std::string& filename) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(filename + ": line " + std::to_string(line_of_offset(text, e.byte)) +
                     ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

[[noreturn]] void fail_field(const std::string& filename, const std::string& field,
                             const std::string& what) {
  throw ParseError(filename + ": field '" + field + "': " + what);
}

}  // namespace

NamedQuiver parse_quiver_json(const std::string& text, const std::string& filename) {
  json j = parse_text(text, filename);
  if (!j.is_object()) fail_field(filename, "(root)", "expected a JSON object");
  if (!j.contains("vertices")) fail_field(filename, "vertices", "missing");
  const json& verts = j["vertices"];
  if (!verts.is_array() || verts.empty())
    fail_field(filename, "vertices", "expected a nonempty array of names");

  NamedQuiver nq{Quiver(static_cast<std::int64_t>(verts.size())), {}};
  std::map<std::string, std::int64_t> index_of;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (!verts[i].is_string())
      fail_field(filename, "vertices[" + std::to_string(i) + "]", "expected a string");
    std::string name = verts[i].get<std::string>();
    if (!index_of.emplace(name, static_cast<std::int64_t>(i)).second)
      fail_field(filename, "vertices[" + std::to_string(i) + "]",
                 "duplicate vertex name '" + name + "'");
    nq.names.push_back(std::move(name));
  }

  const json arrows = j.value("arrows", json::array());
  if (!arrows.is_array()) fail_field(filename, "arrows", "expected an array");
  for (std::size_t k = 0; k < arrows.size(); ++k) {
    const std::string field = "arrows[" + std::to_string(k) + "]";
    const json& a = arrows[k];
    if (!a.is_array() || a.size() < 2 || a.size() > 3)
      fail_field(filename, field, "expected [source, target] or [source, target, mult]");
    if (!a[0].is_string() || !a[1].is_string())
      fail_field(filename, field, "source and target must be vertex names");
    auto src = index_of.find(a[0].get<std::string>());
    if (src == index_of.end())
      fail_field(filename, field, "unknown vertex '" + a[0].get<std::string>() + "'");
    auto dst = index_of.find(a[1].get<std::string>());
    if (dst == index_of.end())
      fail_field(filename, field, "unknown vertex '" + a[1].get<std::string>() + "'");
    std::int64_t mult = 1;
    if (a.size() == 3) {
      if (!a[2].is_number_integer())
        fail_field(filename, field, "multiplicity must be an integer");
      mult = a[2].get<std::int64_t>();
      if (mult < 0) fail_field(filename, field, "multiplicity must be nonnegative");
    }
    nq.quiver.add_arrows(src->second, dst->second, mult);
  }
  return nq;
}

NamedQuiver load_quiver_file(const std::string& path) {
  return parse_quiver_json(read_file(path), path);
}

DimensionVector parse_dimension_vector_json(const std::string& text, const NamedQuiver& nq,
                                            const std::string& filename) {
  json j = parse_text(text, filename);
  if (!j.is_object()) fail_field(filename, "(root)", "expected an object of vertex -> dim");
  std::vector<std::int64_t> d(nq.names.size(), 0);
  for (const auto& [key, value] : j.items()) {
    auto it = std::find(nq.names.begin(), nq.names.end(), key);
    if (it == nq.names.end()) fail_field(filename, key, "unknown vertex name");
    if (!value.is_number_integer()) fail_field(filename, key, "expected an integer");
    std::int64_t v = value.get<std::int64_t>();
    if (v < 1) fail_field(filename, key, "dimension entries must be positive");
    d[static_cast<std::size_t>(it - nq.names.begin())] = v;
  }
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] == 0) fail_field(filename, nq.names[i], "missing dimension entry");
  return DimensionVector(std::move(d));
}

DimensionVector load_dimension_vector_file(const std::string& path, const NamedQuiver& nq) {
  return parse_dimension_vector_json(read_file(path), nq, path);
}

std::vector<std::string> default_vertex_names(std::int64_t n) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  return names;
}

json quiver_to_json(const Quiver& q, const std::vector<std::string>& names) {
  json verts = json::array();
  for (const auto& n : names) verts.push_back(n);
  json arrows = json::array();
  for (std::int64_t i = 0; i < q.vertex_count(); ++i)
    for (std::int64_t j = 0; j < q.vertex_count(); ++j)
      if (std::int64_t m = q.arrows(i, j); m != 0)
        arrows.push_back(json::array({names[static_cast<std::size_t>(i)],
                                      names[static_cast<std::size_t>(j)], m}));
  return json{{"vertices", verts}, {"arrows", arrows}};
}

json hypothesis_report_to_json(const HypothesisReport& r,
                               const std::vector<std::string>& names) {
  json j{{"coprime", r.coprime},
         {"fundamental_domain", r.fundamental_domain},
         {"interior", r.interior},
         {"thin", r.thin},
         {"amply_stable", r.amply_stable}};
  if (r.coprime_witness) {
    json w = json::object();
    for (std::size_t i = 0; i < r.coprime_witness->size(); ++i)
      w[names[i]] = (*r.coprime_witness)[i];
    j["coprime_witness"] = w;
  }
  if (r.fundamental_domain_witness)
    j["fundamental_domain_witness"] =
        names[static_cast<std::size_t>(*r.fundamental_domain_witness)];
  if (r.interior_witness)
    j["interior_witness"] = names[static_cast<std::size_t>(*r.interior_witness)];
  return j;
}

json invariants_to_json(const FanoInvariants& inv) {
  return json{{"dimension", inv.dimension},  {"picard_rank", inv.picard_rank},
              {"index", inv.index},          {"mukai_lhs", inv.mukai_lhs},
              {"mukai_rhs", inv.mukai_rhs},  {"mukai_holds", inv.holds},
              {"mukai_equality", inv.equality}};
}

json classification_to_json(const EqualityClassification& c) {
  json j{{"kind", to_string(c.kind)}};
  if (c.detail) {
    j["s"] = c.detail->s;
    j["t"] = c.detail->t;
    j["orientation"] = to_string(c.detail->orientation);
    j["thin"] = c.detail->thin;
    j["sink_vertex"] = c.detail->sink_vertex;
  }
  return j;
}

json verdict_to_json(const MukaiVerdict& v) {
  json j = invariants_to_json(v.invariants);
  j["classification"] = classification_to_json(v.classification);
  j["hypotheses_checked"] = v.hypotheses_met;
  return j;
}

json sweep_report_to_json(const SweepReport& rep) {
  json cfg{{"max_vertices", rep.config.max_vertices},
           {"max_multiplicity", rep.config.max_multiplicity},
           {"max_dim_entry", rep.config.max_dim_entry},
           {"dedupe_isomorphic", rep.config.dedupe_isomorphic},
           {"worker_count", rep.config.worker_count},
           {"pair_budget", rep.config.pair_budget}};
  json totals{{"quivers", rep.totals.quivers},
              {"pairs_tested", rep.totals.pairs_tested},
              {"pairs_passing_hypotheses", rep.totals.pairs_passing_hypotheses},
              {"mukai_holds", rep.totals.mukai_holds},
              {"equality_count", rep.totals.equality_count},
              {"unexpected_equality", rep.totals.unexpected_equality}};
  json eq = json::array();
  for (const auto& c : rep.equality_cases) {
    auto names = default_vertex_names(c.quiver.vertex_count());
    json e{{"quiver", quiver_to_json(c.quiver, names)},
           {"d", c.d},
           {"invariants", invariants_to_json(c.invariants)},
           {"classification", classification_to_json(c.classification)}};
    eq.push_back(std::move(e));
  }
  json cex = json::array();
  for (const auto& c : rep.counterexamples) {
    auto names = default_vertex_names(c.quiver.vertex_count());
    cex.push_back(json{{"quiver", quiver_to_json(c.quiver, names)},
                       {"d", c.d},
                       {"invariants", invariants_to_json(c.invariants)},
                       {"reason", c.reason}});
  }
  json j{{"schema_version", 1},
         {"config", cfg},
         {"totals", totals},
         {"equality_cases", eq},
         {"counterexamples", cex},
         {"wall_ms", rep.wall_ms}};
  if (rep.partial) {
    j["partial"] = true;
    j["error"] = rep.error;
  }
  return j;
}

json lemma_verdict_to_json(const LemmaVerdict& v) {
  json j{{"hypothesis_holds", v.hypothesis_holds},
         {"total", v.total},
         {"bound", v.bound},
         {"bound_holds", v.bound_holds},
         {"equality", v.equality},
         {"equality_characterized", v.equality_characterized}};
  if (v.hypothesis_witness) {
    j["witness"] = json{{"sum", v.hypothesis_witness->sum},
                        {"i_subset", v.hypothesis_witness->i_subset},
                        {"j_subset", v.hypothesis_witness->j_subset}};
  }
  return j;
}

json lemma_search_report_to_json(const LemmaSearchReport& rep) {
  json cfg{{"max_k", rep.config.max_k},
           {"max_l", rep.config.max_l},
           {"max_value", rep.config.max_value},
           {"canonical_only", rep.config.canonical_only},
           {"workers", rep.config.workers}};
  auto inst_list = [](const std::vector<PartialSumInstance>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(json{{"a", x.a}, {"b", x.b}});
    return out;
  };
  return json{{"schema_version", 1},
              {"config", cfg},
              {"instances", rep.instances},
              {"hypothesis_ok", rep.hypothesis_ok},
              {"equality_count", rep.equality_count},
              {"bound_violations", rep.bound_violations},
              {"uncharacterized_equalities", rep.uncharacterized_equalities},
              {"grid_violations", rep.grid_violations},
              {"equality_cases", inst_list(rep.equality_cases)},
              {"violations", inst_list(rep.violations)},
              {"wall_ms", rep.wall_ms}};
}

std::string sweep_equality_csv(const SweepReport& rep) {
  std::ostringstream out;
  out << "n,arrows,d,dimension,picard_rank,index\n";
  for (const auto& c : rep.equality_cases) {
    const Quiver& q = c.quiver;
    out << q.vertex_count() << ",\"";
    bool first = true;
    for (std::int64_t i = 0; i < q.vertex_count(); ++i)
      for (std::int64_t j = 0; j < q.vertex_count(); ++j)
        if (std::int64_t m = q.arrows(i, j); m != 0) {
          if (!first) out << ';';
          out << i << "->" << j << "x" << m;
          first = false;
        }
    out << "\",\"";
    for (std::size_t i = 0; i < c.d.size(); ++i) {
      if (i) out << ' ';
      out << c.d[i];
    }
    out << "\"," << c.invariants.dimension << ',' << c.invariants.picard_rank << ','
        << c.invariants.index << '\n';
  }
  return out.str();
}

}  // namespace fanoq
