#include <doctest.h>

#include <random>

#include "fanoq/hypotheses.hpp"
#include "test_util.hpp"

using namespace fanoq;
using namespace fanoq::testutil;

namespace {

Quiver kronecker(std::int64_t m) { return thickened_subspace_quiver(1, m); }

}  // namespace

TEST_CASE("coprimality on pinned instances") {
  Quiver k4 = kronecker(4);
  CHECK(is_coprime(k4, DimensionVector({2, 3}), CoprimeEngine::naive));
  CHECK(is_coprime(k4, DimensionVector({2, 3}), CoprimeEngine::dp));

  DimensionVector d22({2, 2});
  CHECK_FALSE(is_coprime(k4, d22, CoprimeEngine::naive));
  CHECK_FALSE(is_coprime(k4, d22, CoprimeEngine::dp));
  auto w = coprime_witness(k4, d22, CoprimeEngine::dp);
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<std::int64_t>{1, 1});
  CHECK(coprime_witness(k4, d22, CoprimeEngine::naive) == w);

  // single vertex: no proper nonzero subvector exists
  Quiver single(1);
  CHECK(is_coprime(single, DimensionVector({1}), CoprimeEngine::naive));
  CHECK(is_coprime(single, DimensionVector({1}), CoprimeEngine::dp));
  // ... but d = (2) has e = (1)
  CHECK_FALSE(is_coprime(single, DimensionVector({2}), CoprimeEngine::dp));
  auto w1 = coprime_witness(single, DimensionVector({2}), CoprimeEngine::dp);
  REQUIRE(w1.has_value());
  CHECK(*w1 == std::vector<std::int64_t>{1});
}

TEST_CASE("dp engine matches naive engine with identical witnesses") {
  std::mt19937_64 rng(31);
  int noncoprime_seen = 0;
  for (int iter = 0; iter < 400; ++iter) {
    Quiver q = random_quiver(rng, 4, 4);
    DimensionVector d(random_vector(rng, q.vertex_count(), 1, 4));
    auto wn = coprime_witness(q, d, CoprimeEngine::naive);
    auto wd = coprime_witness(q, d, CoprimeEngine::dp);
    CHECK(wn == wd);
    CHECK(is_coprime(q, d, CoprimeEngine::naive) == is_coprime(q, d, CoprimeEngine::dp));
    if (wn) {
      ++noncoprime_seen;
      // the witness is a proper nonzero subvector with {d,e} = 0
      bool zero = true, full = true;
      for (std::size_t i = 0; i < wn->size(); ++i) {
        if ((*wn)[i] != 0) zero = false;
        if ((*wn)[i] != d.entries()[i]) full = false;
        CHECK((*wn)[i] >= 0);
        CHECK((*wn)[i] <= d.entries()[i]);
      }
      CHECK_FALSE(zero);
      CHECK_FALSE(full);
      CHECK(antisym_form(q, d.entries(), *wn) == 0);
    }
  }
  CHECK(noncoprime_seen > 20);  // the sample exercises both verdicts
}

TEST_CASE("coprimality is invariant under passing to the opposite quiver") {
  std::mt19937_64 rng(37);
  for (int iter = 0; iter < 200; ++iter) {
    Quiver q = random_quiver(rng, 4, 4);
    DimensionVector d(random_vector(rng, q.vertex_count(), 1, 4));
    CHECK(is_coprime(q, d) == is_coprime(opposite(q), d));
  }
}

TEST_CASE("fundamental domain and interior on pinned instances") {
  DimensionVector thin2({1, 1});
  CHECK(in_fundamental_domain(kronecker(4), thin2).ok);
  CHECK(interior_check(kronecker(4), thin2).ok);

  auto k1 = in_fundamental_domain(kronecker(1), thin2);
  CHECK_FALSE(k1.ok);
  CHECK(k1.vertex == 0);

  Quiver single(1);
  auto s = in_fundamental_domain(single, DimensionVector({1}));
  CHECK_FALSE(s.ok);
  CHECK(s.vertex == 0);

  auto k3 = interior_check(kronecker(3), thin2);
  CHECK_FALSE(k3.ok);
  CHECK(k3.vertex == 0);

  CHECK(interior_check(thickened_subspace_quiver(3, 4), DimensionVector({1, 1, 1, 1})).ok);
}

TEST_CASE("interior implies fundamental domain") {
  std::mt19937_64 rng(41);
  for (int iter = 0; iter < 300; ++iter) {
    Quiver q = random_quiver(rng, 4, 5);
    DimensionVector d(random_vector(rng, q.vertex_count(), 1, 5));
    if (interior_check(q, d).ok) CHECK(in_fundamental_domain(q, d).ok);
  }
}

TEST_CASE("coprime on >= 2 vertices forces nonzero {d,unit_i}") {
  std::mt19937_64 rng(43);
  for (int iter = 0; iter < 300; ++iter) {
    Quiver q = random_quiver(rng, 4, 4);
    if (q.vertex_count() < 2) continue;
    DimensionVector d(random_vector(rng, q.vertex_count(), 1, 4));
    if (!is_coprime(q, d)) continue;
    for (auto c : antisym_units(q, d.entries())) CHECK(c != 0);
  }
}

TEST_CASE("thinness") {
  CHECK(is_thin(DimensionVector({1, 1, 1})));
  CHECK_FALSE(is_thin(DimensionVector({1, 2})));
}

TEST_CASE("full report on pinned instances") {
  auto r = full_report(kronecker(4), DimensionVector({1, 1}));
  CHECK(r.coprime);
  CHECK_FALSE(r.coprime_witness.has_value());
  CHECK(r.fundamental_domain);
  CHECK(r.interior);
  CHECK(r.thin);
  CHECK(r.amply_stable == "not checked");

  auto r22 = full_report(kronecker(4), DimensionVector({2, 2}));
  CHECK_FALSE(r22.coprime);
  REQUIRE(r22.coprime_witness.has_value());
  CHECK(*r22.coprime_witness == std::vector<std::int64_t>{1, 1});
  CHECK_FALSE(r22.thin);

  Quiver path(3);
  path.add_arrows(0, 1, 1);
  path.add_arrows(1, 2, 1);
  auto rp = full_report(path, DimensionVector({1, 1, 1}));
  CHECK_FALSE(rp.interior);
  // (d,unit) = (1, 0, 1): vertex 0 is the first violator of both thresholds
  CHECK(rp.interior_witness == 0);
  CHECK_FALSE(rp.fundamental_domain);
  CHECK(rp.fundamental_domain_witness == 0);

  // witness-free path computes the same verdicts
  auto quick = full_report(kronecker(4), DimensionVector({2, 2}), false);
  CHECK_FALSE(quick.coprime);
  CHECK_FALSE(quick.coprime_witness.has_value());
}

TEST_CASE("length mismatch is rejected") {
  CHECK_THROWS_AS(is_coprime(kronecker(2), DimensionVector({1, 1, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(full_report(kronecker(2), DimensionVector({1})),
                  std::invalid_argument);
}
