#include <doctest.h>

#include <random>

#include "fanoq/checked.hpp"
#include "fanoq/hypotheses.hpp"
#include "fanoq/invariants.hpp"
#include "test_util.hpp"

using namespace fanoq;
using namespace fanoq::testutil;

namespace {

Quiver kronecker(std::int64_t m) { return thickened_subspace_quiver(1, m); }

}  // namespace

TEST_CASE("invariants on pinned instances") {
  auto inv = compute_invariants(kronecker(4), DimensionVector({1, 1}));
  CHECK(inv.dimension == 3);
  CHECK(inv.picard_rank == 1);
  CHECK(inv.index == 4);
  CHECK(inv.mukai_lhs == 3);
  CHECK(inv.mukai_rhs == 3);
  CHECK(inv.holds);
  CHECK(inv.equality);

  auto s24 = compute_invariants(thickened_subspace_quiver(2, 4), DimensionVector({1, 1, 1}));
  CHECK(s24.dimension == 6);
  CHECK(s24.picard_rank == 2);
  CHECK(s24.index == 4);
  CHECK(s24.mukai_rhs == 6);
  CHECK(s24.equality);

  auto s34 = compute_invariants(thickened_subspace_quiver(3, 4), DimensionVector({1, 1, 1, 1}));
  CHECK(s34.dimension == 9);
  CHECK(s34.picard_rank == 3);
  CHECK(s34.index == 4);
  CHECK(s34.equality);

  auto k23 = compute_invariants(kronecker(4), DimensionVector({2, 3}));
  CHECK(k23.dimension == 12);
  CHECK(k23.picard_rank == 1);
  CHECK(k23.index == 4);
  CHECK(k23.mukai_rhs == 3);
  CHECK(k23.holds);
  CHECK_FALSE(k23.equality);
}

TEST_CASE("invariants input validation") {
  CHECK_THROWS_AS(compute_invariants(Quiver(1), DimensionVector({1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(compute_invariants(kronecker(2), DimensionVector({1, 1, 1})),
                  std::invalid_argument);

  // path with d = (1,2,1) has {d,unit_1} = 0; asserting coprimality there
  // is an internal inconsistency
  Quiver path(3);
  path.add_arrows(0, 1, 1);
  path.add_arrows(1, 2, 1);
  DimensionVector d({1, 2, 1});
  CHECK_THROWS_AS(compute_invariants(path, d, true), std::logic_error);
  CHECK_NOTHROW(compute_invariants(path, d, false));
}

TEST_CASE("proof decomposition on pinned instances") {
  auto pd = proof_decomposition(thickened_subspace_quiver(2, 4), DimensionVector({1, 1, 1}));
  CHECK(pd.alpha == std::vector<std::int64_t>{4, 4, 0});
  CHECK(pd.beta == std::vector<std::int64_t>{0, 0, 8});
  CHECK(pd.m == 4);
  CHECK(pd.gamma == std::vector<std::int64_t>{1, 1, 2});
  CHECK(pd.epsilon == std::vector<int>{1, 1, -1});

  auto k23 = proof_decomposition(kronecker(4), DimensionVector({2, 3}));
  CHECK(k23.alpha == std::vector<std::int64_t>{12, 0});
  CHECK(k23.beta == std::vector<std::int64_t>{0, 8});
  CHECK(k23.m == 4);
  CHECK(k23.gamma == std::vector<std::int64_t>{3, 2});
  CHECK(k23.epsilon == std::vector<int>{1, -1});
}

TEST_CASE("decomposition identities on random instances") {
  std::mt19937_64 rng(53);
  for (int iter = 0; iter < 400; ++iter) {
    Quiver q = random_quiver(rng, 4, 5);
    const std::int64_t n = q.vertex_count();
    DimensionVector d(random_vector(rng, n, 1, 5));
    auto alpha = out_weights(q, d.entries());
    auto beta = in_weights(q, d.entries());

    // alpha_i - beta_i = {d,unit_i} and (d,unit_i) = 2 d_i - alpha_i - beta_i
    for (std::int64_t i = 0; i < n; ++i) {
      auto u = unit_vector(n, i);
      std::size_t si = static_cast<std::size_t>(i);
      CHECK(alpha[si] - beta[si] == antisym_form(q, d.entries(), u));
      CHECK(2 * d[i] - alpha[si] - beta[si] == sym_form(q, d.entries(), u));
      CHECK(alpha[si] >= 0);
      CHECK(beta[si] >= 0);
    }

    // doubled dimension identity and sum d_i (alpha_i - beta_i) = 0
    std::int64_t dim2 = checked_mul(2, checked_sub(1, euler_form(q, d.entries(), d.entries())));
    std::int64_t rhs = 2, wsum = 0;
    for (std::int64_t i = 0; i < n; ++i) {
      std::size_t si = static_cast<std::size_t>(i);
      rhs = checked_add(rhs, checked_mul(alpha[si] + beta[si] - 2 * d[i], d[i]));
      wsum += d[i] * (alpha[si] - beta[si]);
    }
    CHECK(dim2 == rhs);
    CHECK(wsum == 0);

    if (n >= 2) {
      auto inv = compute_invariants(q, d);
      // opposite invariance, field by field
      CHECK(compute_invariants(opposite(q), d) == inv);
      if (inv.index >= 1) {
        auto pd = proof_decomposition(q, d);
        CHECK(pd.m == inv.index);
        for (std::int64_t i = 0; i < n; ++i) {
          std::size_t si = static_cast<std::size_t>(i);
          CHECK(pd.alpha[si] - pd.beta[si] == pd.epsilon[si] * pd.gamma[si] * pd.m);
          CHECK((pd.epsilon[si] == 1 || pd.epsilon[si] == -1));
          if (pd.gamma[si] == 0) CHECK(pd.epsilon[si] == 1);
        }
        // the index divides {d,e} for arbitrary integer e
        auto e = random_vector(rng, n, -5, 5);
        CHECK(antisym_form(q, d.entries(), e) % pd.m == 0);
      }
    }
  }
}

TEST_CASE("gamma is positive under coprimality") {
  std::mt19937_64 rng(59);
  int seen = 0;
  for (int iter = 0; iter < 400; ++iter) {
    Quiver q = random_quiver(rng, 4, 5);
    if (q.vertex_count() < 2) continue;
    DimensionVector d(random_vector(rng, q.vertex_count(), 1, 5));
    if (!is_coprime(q, d)) continue;
    ++seen;
    for (auto g : proof_decomposition(q, d).gamma) CHECK(g > 0);
  }
  CHECK(seen > 50);
}

TEST_CASE("mukai verdict classification on pinned instances") {
  auto eq = mukai_verdict(kronecker(4), DimensionVector({1, 1}), true);
  CHECK(eq.invariants.equality);
  CHECK(eq.classification.kind == EqualityKind::subspace_equality);
  REQUIRE(eq.classification.detail.has_value());
  CHECK(eq.classification.detail->s == 1);
  CHECK(eq.classification.detail->t == 4);
  CHECK(eq.classification.detail->thin);
  CHECK(eq.hypotheses_met);

  auto strict = mukai_verdict(kronecker(4), DimensionVector({2, 3}), true);
  CHECK(strict.classification.kind == EqualityKind::strict_inequality);
  CHECK_FALSE(strict.classification.detail.has_value());

  auto opp = mukai_verdict(opposite(thickened_subspace_quiver(3, 4)),
                           DimensionVector({1, 1, 1, 1}), true);
  CHECK(opp.invariants.equality);
  CHECK(opp.classification.kind == EqualityKind::subspace_equality);
  REQUIRE(opp.classification.detail.has_value());
  CHECK(opp.classification.detail->orientation == SubspaceOrientation::opposite);
  CHECK(opp.classification.detail->s == 3);
  CHECK(opp.classification.detail->t == 4);

  // hypotheses bypassed and the inequality fails: Kronecker 1, d = (5,1)
  auto bad = mukai_verdict(kronecker(1), DimensionVector({5, 1}), false);
  CHECK_FALSE(bad.hypotheses_met);
  CHECK_FALSE(bad.invariants.holds);
  CHECK(bad.classification.kind == EqualityKind::inequality_violated);
}
