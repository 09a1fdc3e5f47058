#include "fanoq/sweep.hpp"

#include <chrono>
#include <stdexcept>

#include "fanoq/parallel.hpp"

namespace fanoq {

namespace {

struct Chunk {
  std::int64_t n;
  std::uint64_t begin;
  std::uint64_t end;
};

struct ChunkResult {
  SweepTotals totals;
  std::vector<SweepEqualityCase> equality_cases;
  std::vector<SweepCounterexample> counterexamples;
};

void scan_quiver(const Quiver& q, const SweepConfig& cfg, ChunkResult& out) {
  ++out.totals.quivers;
  const std::int64_t n = q.vertex_count();
  for_each_dimension_vector(n, cfg.max_dim_entry, [&](const std::vector<std::int64_t>& d) {
    ++out.totals.pairs_tested;
    DimensionVector dv(d);
    if (!interior_check(q, dv).ok) return true;  // cheap gate first
    if (!is_coprime(q, dv, CoprimeEngine::dp)) return true;
    ++out.totals.pairs_passing_hypotheses;
    MukaiVerdict v = mukai_verdict(q, dv, /*hypotheses_met=*/true);
    if (v.invariants.holds) {
      ++out.totals.mukai_holds;
    } else {
      out.counterexamples.push_back({q, d, v.invariants, "mukai_inequality_violated"});
    }
    if (v.invariants.equality) {
      ++out.totals.equality_count;
      out.equality_cases.push_back({q, d, v.invariants, v.classification});
      if (v.classification.kind == EqualityKind::unexpected_equality) {
        ++out.totals.unexpected_equality;
        out.counterexamples.push_back({q, d, v.invariants, "unexpected_equality"});
      }
    }
    return true;
  });
}

void reverify_equality_cases(const SweepReport& rep) {
  for (const auto& c : rep.equality_cases) {
    DimensionVector dv(c.d);
    auto hyp = full_report(c.quiver, dv, /*want_witnesses=*/false);
    if (!hyp.coprime || !hyp.interior)
      throw std::logic_error("equality case fails hypotheses on re-verification");
    MukaiVerdict v = mukai_verdict(c.quiver, dv, /*hypotheses_met=*/true);
    if (!(v.invariants == c.invariants) ||
        v.classification.kind != c.classification.kind)
      throw std::logic_error("equality case changed under re-verification");
  }
}

}  // namespace

std::uint64_t estimate_pairs(const SweepConfig& cfg) {
  std::uint64_t pairs = 0;
  for (std::int64_t n = 1; n <= cfg.max_vertices; ++n) {
    std::uint64_t m = matrix_count(n, cfg.max_multiplicity);
    std::uint64_t dcount = dimension_vector_count(n, cfg.max_dim_entry);
    if (dcount != 0 && m > UINT64_MAX / dcount)
      throw std::overflow_error("pair estimate overflow");
    std::uint64_t p = m * dcount;
    if (pairs > UINT64_MAX - p) throw std::overflow_error("pair estimate overflow");
    pairs += p;
  }
  return pairs;
}

SweepReport run_sweep(const SweepConfig& cfg) {
  if (cfg.max_vertices < 1 || cfg.max_multiplicity < 1 || cfg.max_dim_entry < 1)
    throw std::invalid_argument("sweep bounds must be >= 1");
  if (cfg.worker_count < 1)
    throw std::invalid_argument("worker count must be positive");

  std::uint64_t estimated = estimate_pairs(cfg);
  if (estimated > cfg.pair_budget && !cfg.force)
    throw std::runtime_error("budget exceeded: estimated " + std::to_string(estimated) +
                             " pairs over limit " + std::to_string(cfg.pair_budget));

  auto start = std::chrono::steady_clock::now();

  // Chunks partition the raw matrix-index space per vertex count; merging
  // in chunk order reproduces the single-threaded enumeration order.
  constexpr std::uint64_t kChunkMatrices = 1024;
  std::vector<Chunk> chunks;
  for (std::int64_t n = 1; n <= cfg.max_vertices; ++n) {
    const std::uint64_t count = matrix_count(n, cfg.max_multiplicity);
    for (std::uint64_t b = 0; b < count; b += kChunkMatrices)
      chunks.push_back({n, b, std::min(count, b + kChunkMatrices)});
  }

  std::vector<ChunkResult> partial(chunks.size());
  SweepReport rep;
  rep.config = cfg;
  try {
    run_chunked(chunks.size(), cfg.worker_count, [&](std::size_t ci) {
      const Chunk& ch = chunks[ci];
      ChunkResult& out = partial[ci];
      for (std::uint64_t idx = ch.begin; idx < ch.end; ++idx) {
        Quiver q = quiver_from_index(ch.n, cfg.max_multiplicity, idx);
        if (!enumeration_accepts(q, cfg.dedupe_isomorphic)) continue;
        scan_quiver(q, cfg, out);
      }
    });
  } catch (const std::exception& e) {
    rep.partial = true;
    rep.error = e.what();
  }

  for (auto& p : partial) {
    rep.totals.quivers += p.totals.quivers;
    rep.totals.pairs_tested += p.totals.pairs_tested;
    rep.totals.pairs_passing_hypotheses += p.totals.pairs_passing_hypotheses;
    rep.totals.mukai_holds += p.totals.mukai_holds;
    rep.totals.equality_count += p.totals.equality_count;
    rep.totals.unexpected_equality += p.totals.unexpected_equality;
    for (auto& e : p.equality_cases) rep.equality_cases.push_back(std::move(e));
    for (auto& c : p.counterexamples) rep.counterexamples.push_back(std::move(c));
  }

  if (!rep.partial) reverify_equality_cases(rep);

  rep.wall_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start)
          .count());
  return rep;
}

}  // namespace fanoq
