#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fanoq/enumerate.hpp"
#include "fanoq/hypotheses.hpp"
#include "fanoq/invariants.hpp"
#include "fanoq/quiver.hpp"

namespace fanoq {

struct SweepConfig {
  std::int64_t max_vertices = 4;
  std::int64_t max_multiplicity = 5;
  std::int64_t max_dim_entry = 5;
  bool dedupe_isomorphic = true;
  unsigned worker_count = 1;
  // Upper bound on (matrix, dimension-vector) pairs, checked before the
  // run starts; force overrides.
  std::uint64_t pair_budget = 100'000'000;
  bool force = false;
};

struct SweepTotals {
  std::uint64_t quivers = 0;
  std::uint64_t pairs_tested = 0;
  std::uint64_t pairs_passing_hypotheses = 0;  // coprime and interior
  std::uint64_t mukai_holds = 0;
  std::uint64_t equality_count = 0;
  std::uint64_t unexpected_equality = 0;

  bool operator==(const SweepTotals&) const = default;
};

struct SweepEqualityCase {
  Quiver quiver;
  std::vector<std::int64_t> d;
  FanoInvariants invariants;
  EqualityClassification classification;
};

struct SweepCounterexample {
  Quiver quiver;
  std::vector<std::int64_t> d;
  FanoInvariants invariants;
  std::string reason;  // "mukai_inequality_violated" or "unexpected_equality"
};

struct SweepReport {
  SweepConfig config;
  SweepTotals totals;
  std::vector<SweepEqualityCase> equality_cases;
  std::vector<SweepCounterexample> counterexamples;
  std::uint64_t wall_ms = 0;
  bool partial = false;    // a worker aborted; counts cover completed chunks only
  std::string error;

  bool clean() const { return !partial && counterexamples.empty(); }
};

// Enumerates every (quiver, dimension vector) pair within bounds, gates on
// coprime + interior, evaluates the inequality and classifies equality
// cases. Output is deterministic for a fixed config regardless of
// worker_count; equality cases are re-verified single-threadedly before
// the report is returned.
SweepReport run_sweep(const SweepConfig& config);

// Estimated pair count used by the budget guard.
std::uint64_t estimate_pairs(const SweepConfig& config);

}  // namespace fanoq
