#include "fanoq/invariants.hpp"

#include <stdexcept>

#include "fanoq/checked.hpp"
#include "fanoq/hypotheses.hpp"

namespace fanoq {

FanoInvariants compute_invariants(const Quiver& q, const DimensionVector& d,
                                  bool assert_coprime) {
  if (q.vertex_count() < 2)
    throw std::invalid_argument(
        "invariants need at least two vertices; a single vertex never satisfies "
        "the interior condition");
  if (d.size() != q.vertex_count())
    throw std::invalid_argument("dimension vector length does not match vertex count");

  FanoInvariants inv;
  inv.dimension = checked_sub(1, euler_form(q, d.entries(), d.entries()));
  inv.picard_rank = q.vertex_count() - 1;

  std::int64_t g = 0;
  for (std::int64_t c : antisym_units(q, d.entries())) {
    if (c == 0 && assert_coprime)
      throw std::logic_error("{d,unit_i} = 0 contradicts asserted coprimality");
    g = gcd_abs(g, c);
  }
  inv.index = g;

  inv.mukai_lhs = inv.dimension;
  inv.mukai_rhs = checked_mul(inv.picard_rank, checked_sub(inv.index, 1));
  inv.holds = inv.mukai_lhs >= inv.mukai_rhs;
  inv.equality = inv.mukai_lhs == inv.mukai_rhs;
  return inv;
}

ProofDecomposition proof_decomposition(const Quiver& q, const DimensionVector& d) {
  FanoInvariants inv = compute_invariants(q, d);
  if (inv.index < 1)
    throw std::invalid_argument("proof decomposition needs a positive index");

  ProofDecomposition pd;
  pd.alpha = out_weights(q, d.entries());
  pd.beta = in_weights(q, d.entries());
  pd.m = inv.index;
  const std::size_t n = pd.alpha.size();
  pd.gamma.resize(n);
  pd.epsilon.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t diff = checked_sub(pd.alpha[i], pd.beta[i]);
    if (diff % pd.m != 0)
      throw std::logic_error("index does not divide alpha_i - beta_i");
    pd.gamma[i] = checked_abs(diff) / pd.m;
    pd.epsilon[i] = diff >= 0 ? 1 : -1;  // +1 at gamma_i = 0 by convention
  }
  return pd;
}

MukaiVerdict mukai_verdict(const Quiver& q, const DimensionVector& d,
                           bool hypotheses_met) {
  MukaiVerdict v;
  v.hypotheses_met = hypotheses_met;
  v.invariants = compute_invariants(q, d, /*assert_coprime=*/hypotheses_met);

  if (v.invariants.equality) {
    auto shape = recognize_thickened_subspace(q);
    bool thin = is_thin(d);
    if (shape && thin) {
      v.classification.kind = EqualityKind::subspace_equality;
      v.classification.detail = SubspaceEqualityDetail{
          shape->sources, shape->thickness, shape->orientation, thin, shape->hub};
    } else {
      v.classification.kind = EqualityKind::unexpected_equality;
    }
  } else if (v.invariants.mukai_lhs > v.invariants.mukai_rhs) {
    v.classification.kind = EqualityKind::strict_inequality;
  } else {
    v.classification.kind = EqualityKind::inequality_violated;
  }
  return v;
}

const char* to_string(EqualityKind k) {
  switch (k) {
    case EqualityKind::strict_inequality: return "strict_inequality";
    case EqualityKind::subspace_equality: return "subspace_equality";
    case EqualityKind::unexpected_equality: return "unexpected_equality";
    case EqualityKind::inequality_violated: return "inequality_violated";
  }
  return "?";
}

const char* to_string(SubspaceOrientation o) {
  return o == SubspaceOrientation::standard ? "standard" : "opposite";
}

}  // namespace fanoq
