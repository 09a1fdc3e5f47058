#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace fanoq {

// Two lists of positive integers, the a_i and b_j of the partial-sum
// lemma: if no proper partial sums coincide then
// sum a + sum b >= 2(k + l - 1), with equality only when one side is a
// single entry and the other is all ones.
struct PartialSumInstance {
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;

  PartialSumInstance(std::vector<std::int64_t> a_in, std::vector<std::int64_t> b_in);
};

// 1-based index subsets (I, J) with equal sums violating the hypothesis.
struct CoincidingSums {
  std::vector<std::int64_t> i_subset;
  std::vector<std::int64_t> j_subset;
  std::int64_t sum = 0;
};

struct HypothesisCheck {
  bool holds = false;
  std::optional<CoincidingSums> witness;
};

// True iff the only subset pairs with coinciding sums are (empty, empty)
// and (full, full). Witness: smallest violating sum, lexicographically
// smallest index subsets at that sum. Passing want_witness = false skips
// the subset reconstruction on failure.
HypothesisCheck check_hypothesis(const PartialSumInstance& inst, bool want_witness = true);

struct LemmaVerdict {
  bool hypothesis_holds = false;
  std::optional<CoincidingSums> hypothesis_witness;
  std::int64_t total = 0;  // sum a + sum b
  std::int64_t bound = 0;  // 2 (k + l - 1)
  bool bound_holds = false;
  bool equality = false;
  bool equality_characterized = false;  // (l=1, all a_i=1) or (k=1, all b_j=1)
};

LemmaVerdict lemma_verdict(const PartialSumInstance& inst, bool want_witness = true);

// d[i][j] = (a_1 + ... + a_i) - (b_1 + ... + b_j), a (k+1) x (l+1) grid.
std::vector<std::vector<std::int64_t>> d_grid(const PartialSumInstance& inst);

std::int64_t d_grid_distinct_count(const PartialSumInstance& inst);

struct LemmaSearchConfig {
  std::int64_t max_k = 3;
  std::int64_t max_l = 3;
  std::int64_t max_value = 8;
  // Enumerate only non-decreasing sequences (the verdict is permutation
  // invariant); off runs the fully naive oracle over all orderings.
  bool canonical_only = false;
  unsigned workers = 1;
  std::uint64_t budget = 100'000'000;  // max instances
};

struct LemmaSearchReport {
  LemmaSearchConfig config;
  std::uint64_t instances = 0;
  std::uint64_t hypothesis_ok = 0;
  std::uint64_t equality_count = 0;
  std::uint64_t bound_violations = 0;
  std::uint64_t uncharacterized_equalities = 0;
  std::uint64_t grid_violations = 0;  // distinct d_{i,j} count below (k+1)(l+1)-1
  std::vector<PartialSumInstance> equality_cases;
  std::vector<PartialSumInstance> violations;
  std::uint64_t wall_ms = 0;

  bool clean() const {
    return bound_violations == 0 && uncharacterized_equalities == 0 &&
           grid_violations == 0;
  }
};

// Iterates every instance within the bounds and checks the lemma's bound,
// the equality characterization and the grid-distinctness argument on all
// hypothesis-satisfying instances. Deterministic for a fixed config
// regardless of worker count.
LemmaSearchReport exhaustive_lemma_search(const LemmaSearchConfig& config);

}  // namespace fanoq
