#include <doctest.h>

#include <random>

#include "fanoq/checked.hpp"
#include "fanoq/quiver.hpp"
#include "test_util.hpp"

using namespace fanoq;
using namespace fanoq::testutil;

namespace {

Quiver kronecker(std::int64_t m) { return thickened_subspace_quiver(1, m); }

}  // namespace

TEST_CASE("euler form on pinned instances") {
  Quiver single(1);
  std::vector<std::int64_t> one{1};
  CHECK(euler_form(single, one, one) == 1);

  Quiver k4 = kronecker(4);
  std::vector<std::int64_t> thin{1, 1}, d23{2, 3};
  CHECK(euler_form(k4, thin, thin) == -2);
  CHECK(euler_form(k4, d23, d23) == -11);

  CHECK(sym_form(k4, thin, unit_vector(2, 0)) == -2);
  CHECK(sym_form(single, one, one) == 2);

  CHECK(antisym_form(k4, d23, unit_vector(2, 0)) == 12);
  CHECK(antisym_form(k4, d23, unit_vector(2, 1)) == -8);
}

TEST_CASE("euler form errors") {
  Quiver k4 = kronecker(4);
  std::vector<std::int64_t> bad{1, 1, 1};
  std::vector<std::int64_t> thin{1, 1};
  CHECK_THROWS_AS(euler_form(k4, bad, thin), std::invalid_argument);
  std::vector<std::int64_t> huge{INT64_MAX / 2, INT64_MAX / 2};
  CHECK_THROWS_AS(euler_form(k4, huge, huge), std::overflow_error);
}

TEST_CASE("form identities on random instances") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 300; ++iter) {
    Quiver q = random_quiver(rng, 4, 5);
    const std::int64_t n = q.vertex_count();
    auto d = random_vector(rng, n, -6, 6);
    auto d2 = random_vector(rng, n, -6, 6);
    auto e = random_vector(rng, n, -6, 6);

    // oracle agreement
    CHECK(static_cast<__int128>(euler_form(q, d, e)) == euler_oracle(q, d, e));

    // bilinearity in the first slot
    auto sum = d;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += d2[i];
    CHECK(euler_form(q, sum, e) == euler_form(q, d, e) + euler_form(q, d2, e));
    // and the second
    auto esum = e;
    for (std::size_t i = 0; i < esum.size(); ++i) esum[i] += d2[i];
    CHECK(euler_form(q, d, esum) == euler_form(q, d, e) + euler_form(q, d, d2));

    CHECK(sym_form(q, d, e) == euler_form(q, d, e) + euler_form(q, e, d));
    CHECK(antisym_form(q, d, e) == euler_form(q, d, e) - euler_form(q, e, d));
    CHECK(sym_form(q, d, e) + antisym_form(q, d, e) == 2 * euler_form(q, d, e));
    CHECK(sym_form(q, d, d) == 2 * euler_form(q, d, d));
    CHECK(antisym_form(q, d, d) == 0);
    CHECK(sym_form(q, d, e) == sym_form(q, e, d));
    CHECK(antisym_form(q, d, e) == -antisym_form(q, e, d));

    // {d,e} = sum_i e_i {d,unit_i}
    auto c = antisym_units(q, d);
    std::int64_t lin = 0;
    for (std::size_t i = 0; i < c.size(); ++i) lin += c[i] * e[i];
    CHECK(antisym_form(q, d, e) == lin);
    for (std::int64_t i = 0; i < n; ++i) {
      CHECK(c[static_cast<std::size_t>(i)] == antisym_form(q, d, unit_vector(n, i)));
      CHECK(sym_units(q, d)[static_cast<std::size_t>(i)] ==
            sym_form(q, d, unit_vector(n, i)));
    }

    // sum_i d_i {d,unit_i} = {d,d} = 0
    std::int64_t wsum = 0;
    for (std::size_t i = 0; i < c.size(); ++i) wsum += c[i] * d[i];
    CHECK(wsum == 0);

    // transposition
    Quiver op = opposite(q);
    CHECK(euler_form(op, d, e) == euler_form(q, e, d));
    CHECK(opposite(op) == q);
  }
}

TEST_CASE("validity") {
  Quiver arrow(2);
  arrow.add_arrows(0, 1, 1);
  CHECK(is_valid(arrow));

  Quiver disconnected(2);
  CHECK_FALSE(is_valid(disconnected));

  Quiver two_cycle(2);
  two_cycle.add_arrows(0, 1, 1);
  two_cycle.add_arrows(1, 0, 1);
  CHECK_FALSE(is_valid(two_cycle));

  Quiver loop(2);
  loop.add_arrows(0, 0, 1);
  loop.add_arrows(0, 1, 1);
  CHECK_FALSE(is_valid(loop));

  Quiver single(1);
  CHECK(is_valid(single));

  CHECK_THROWS_AS(Quiver(0), std::invalid_argument);
  CHECK_THROWS_AS(Quiver(2).add_arrows(0, 1, -1), std::invalid_argument);
  CHECK_THROWS_AS(DimensionVector({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(DimensionVector({}), std::invalid_argument);
}

TEST_CASE("acyclic quivers admit a strictly upper triangular relabeling") {
  // Enumerated UT matrices are acyclic by shape; verify the checker on a
  // few hand cases plus random UT instances.
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 100; ++iter) {
    Quiver q = random_quiver(rng, 4, 3);
    CHECK(is_acyclic(q));
  }
  Quiver cyc(3);
  cyc.add_arrows(0, 1, 1);
  cyc.add_arrows(1, 2, 1);
  cyc.add_arrows(2, 0, 1);
  CHECK_FALSE(is_acyclic(cyc));
}

TEST_CASE("thickened subspace construction") {
  Quiver k4 = thickened_subspace_quiver(1, 4);
  CHECK(k4.vertex_count() == 2);
  CHECK(k4.arrows(0, 1) == 4);

  Quiver s2t4 = thickened_subspace_quiver(2, 4);
  CHECK(s2t4.vertex_count() == 3);
  CHECK(s2t4.arrows(0, 2) == 4);
  CHECK(s2t4.arrows(1, 2) == 4);
  CHECK(s2t4.arrows(0, 1) == 0);
  CHECK(is_valid(s2t4));

  CHECK_THROWS_AS(thickened_subspace_quiver(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(thickened_subspace_quiver(1, 0), std::invalid_argument);
}

TEST_CASE("thickened subspace recognition") {
  auto shape = recognize_thickened_subspace(thickened_subspace_quiver(2, 4));
  REQUIRE(shape.has_value());
  CHECK(shape->sources == 2);
  CHECK(shape->thickness == 4);
  CHECK(shape->orientation == SubspaceOrientation::standard);
  CHECK(shape->hub == 2);

  // round trip across the test range
  for (std::int64_t s = 1; s <= 4; ++s)
    for (std::int64_t t = 1; t <= 4; ++t) {
      auto r = recognize_thickened_subspace(thickened_subspace_quiver(s, t));
      REQUIRE(r.has_value());
      CHECK(r->sources == s);
      CHECK(r->thickness == t);
      CHECK(r->orientation == SubspaceOrientation::standard);

      auto ro = recognize_thickened_subspace(opposite(thickened_subspace_quiver(s, t)));
      REQUIRE(ro.has_value());
      CHECK(ro->sources == s);
      CHECK(ro->thickness == t);
      // Kronecker is self-opposite and stays standard
      CHECK(ro->orientation == (s == 1 ? SubspaceOrientation::standard
                                       : SubspaceOrientation::opposite));
    }

  Quiver path(3);
  path.add_arrows(0, 1, 1);
  path.add_arrows(1, 2, 1);
  CHECK_FALSE(recognize_thickened_subspace(path).has_value());

  Quiver fan(3);  // one source, two sinks, equal thickness
  fan.add_arrows(0, 1, 2);
  fan.add_arrows(0, 2, 2);
  auto r = recognize_thickened_subspace(fan);
  REQUIRE(r.has_value());
  CHECK(r->sources == 2);
  CHECK(r->thickness == 2);
  CHECK(r->orientation == SubspaceOrientation::opposite);
  CHECK(r->hub == 0);

  Quiver uneven(3);
  uneven.add_arrows(0, 2, 1);
  uneven.add_arrows(1, 2, 2);
  CHECK_FALSE(recognize_thickened_subspace(uneven).has_value());

  CHECK_FALSE(recognize_thickened_subspace(Quiver(1)).has_value());
}

TEST_CASE("checked arithmetic") {
  CHECK(checked_add(2, 3) == 5);
  CHECK_THROWS_AS(checked_add(INT64_MAX, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(INT64_MAX / 2, 3), std::overflow_error);
  CHECK_THROWS_AS(checked_sub(INT64_MIN, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_abs(INT64_MIN), std::overflow_error);
  CHECK(gcd_abs(-12, 8) == 4);
  CHECK(gcd_abs(0, -7) == 7);
  CHECK(gcd_abs(0, 0) == 0);
  // |INT64_MIN| = 2^63 does not fit back into int64
  CHECK_THROWS_AS(gcd_abs(INT64_MIN, 0), std::overflow_error);
}
