#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fanoq/quiver.hpp"

namespace fanoq {

// Integer invariants of the moduli space attached to (Q,d):
// dimension 1 - <d,d>, Picard rank |Q_0| - 1, index gcd_i |{d,unit_i}|,
// and the two sides of the inequality dim >= rank * (index - 1).
struct FanoInvariants {
  std::int64_t dimension = 0;
  std::int64_t picard_rank = 0;
  std::int64_t index = 0;  // positive under coprimality; 0 only when every {d,unit_i} = 0
  std::int64_t mukai_lhs = 0;
  std::int64_t mukai_rhs = 0;
  bool holds = false;     // lhs >= rhs
  bool equality = false;  // lhs == rhs

  bool operator==(const FanoInvariants&) const = default;
};

// Needs at least two vertices. With assert_coprime set, a vanishing
// {d,unit_i} is an internal consistency error (it cannot happen for a
// coprime d on >= 2 vertices).
FanoInvariants compute_invariants(const Quiver& q, const DimensionVector& d,
                                  bool assert_coprime = false);

// alpha_i = sum over arrows i->j of d_j, beta_i dually, so that
// alpha_i - beta_i = {d,unit_i} = epsilon_i * gamma_i * m with m the index.
// epsilon_i is +1 whenever gamma_i = 0.
struct ProofDecomposition {
  std::vector<std::int64_t> alpha;
  std::vector<std::int64_t> beta;
  std::vector<std::int64_t> gamma;
  std::vector<int> epsilon;  // +1 / -1
  std::int64_t m = 0;
};

// Requires index >= 1 (guaranteed under coprimality with >= 2 vertices).
ProofDecomposition proof_decomposition(const Quiver& q, const DimensionVector& d);

enum class EqualityKind {
  strict_inequality,    // lhs > rhs
  subspace_equality,    // equality, recognized thickened subspace shape, thin d
  unexpected_equality,  // equality without the expected shape; flagged for inspection
  inequality_violated,  // lhs < rhs; impossible under the hypotheses
};

struct SubspaceEqualityDetail {
  std::int64_t s = 0;
  std::int64_t t = 0;
  SubspaceOrientation orientation = SubspaceOrientation::standard;
  bool thin = false;
  // Distinguished vertex: the unique sink (standard) or unique source
  // (opposite orientation).
  std::int64_t sink_vertex = 0;
};

struct EqualityClassification {
  EqualityKind kind = EqualityKind::strict_inequality;
  std::optional<SubspaceEqualityDetail> detail;
};

struct MukaiVerdict {
  FanoInvariants invariants;
  EqualityClassification classification;
  // False when the caller bypassed the coprime/interior hypotheses.
  bool hypotheses_met = false;
};

MukaiVerdict mukai_verdict(const Quiver& q, const DimensionVector& d,
                           bool hypotheses_met);

const char* to_string(EqualityKind k);
const char* to_string(SubspaceOrientation o);

}  // namespace fanoq
