#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fanoq/quiver.hpp"

namespace fanoq {

// Coprimality of d: {d,e} != 0 for every componentwise subvector
// 0 != e < d (proper on at least one coordinate). Two engines with
// identical verdicts:
//   naive - enumerate all prod(d_i + 1) subvectors;
//   dp    - reachable-sum tables over [-sum_{c_i<0}|c_i|d_i, sum_{c_i>0}c_i d_i]
//           with c_i = {d, unit_i}, excluding exactly e = 0 and e = d.
enum class CoprimeEngine { naive, dp };

bool is_coprime(const Quiver& q, const DimensionVector& d,
                CoprimeEngine engine = CoprimeEngine::dp);

// Lexicographically smallest e with 0 != e < d and {d,e} = 0, or nullopt
// when d is coprime.
std::optional<std::vector<std::int64_t>> coprime_witness(
    const Quiver& q, const DimensionVector& d,
    CoprimeEngine engine = CoprimeEngine::dp);

// Result of a per-vertex threshold check; `vertex` is the smallest
// violating index when the check fails.
struct VertexCheck {
  bool ok = false;
  std::optional<std::int64_t> vertex;
};

// (d, unit_i) <= 0 for all i.
VertexCheck in_fundamental_domain(const Quiver& q, const DimensionVector& d);
// (d, unit_i) <= -2 for all i.
VertexCheck interior_check(const Quiver& q, const DimensionVector& d);

bool is_thin(const DimensionVector& d);

struct HypothesisReport {
  bool coprime = false;
  std::optional<std::vector<std::int64_t>> coprime_witness;
  bool fundamental_domain = false;
  std::optional<std::int64_t> fundamental_domain_witness;
  bool interior = false;
  std::optional<std::int64_t> interior_witness;
  bool thin = false;
  // The ample-stability hypothesis has no criterion here; it is reported
  // verbatim as unchecked, never guessed.
  std::string amply_stable = "not checked";
};

// Bundled checks. Witness extraction costs an extra pass; bulk callers
// that only need verdicts pass want_witnesses = false.
HypothesisReport full_report(const Quiver& q, const DimensionVector& d,
                             bool want_witnesses = true,
                             CoprimeEngine engine = CoprimeEngine::dp);

}  // namespace fanoq
