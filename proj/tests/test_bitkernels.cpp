#include <doctest.h>

#include <random>
#include <vector>

#include "fanoq/bitkernels.hpp"
#include "fanoq/bittable.hpp"

using namespace fanoq;

namespace {

// Per-bit reference: dst |= src shifted by delta bits, out-of-range bits
// dropped.
std::vector<std::uint64_t> naive_shift_or(std::vector<std::uint64_t> dst,
                                          const std::vector<std::uint64_t>& src,
                                          std::int64_t delta) {
  const std::int64_t nbits = static_cast<std::int64_t>(src.size()) * 64;
  for (std::int64_t i = 0; i < nbits; ++i) {
    if (!((src[static_cast<std::size_t>(i / 64)] >> (i % 64)) & 1)) continue;
    std::int64_t t = i + delta;
    if (t < 0 || t >= nbits) continue;
    dst[static_cast<std::size_t>(t / 64)] |= std::uint64_t{1} << (t % 64);
  }
  return dst;
}

void run_kernel(const BitKernels& k, std::vector<std::uint64_t>& dst,
                const std::vector<std::uint64_t>& src, std::int64_t delta) {
  if (delta >= 0)
    k.shift_left_or(dst.data(), src.data(), dst.size(), static_cast<std::size_t>(delta));
  else
    k.shift_right_or(dst.data(), src.data(), dst.size(), static_cast<std::size_t>(-delta));
}

}  // namespace

TEST_CASE("scalar kernels match the per-bit reference") {
  std::mt19937_64 rng(7);
  const auto& scalar = kernels(KernelKind::scalar);
  for (int iter = 0; iter < 500; ++iter) {
    std::size_t nwords = 1 + rng() % 12;
    std::vector<std::uint64_t> src(nwords), dst(nwords);
    for (auto& w : src) w = rng();
    for (auto& w : dst) w = rng();
    std::int64_t span = static_cast<std::int64_t>(nwords) * 64;
    std::int64_t delta = static_cast<std::int64_t>(rng() % (2 * static_cast<std::uint64_t>(span) + 20)) - span - 10;
    auto expected = naive_shift_or(dst, src, delta);
    auto got = dst;
    run_kernel(scalar, got, src, delta);
    CHECK(got == expected);
  }
}

TEST_CASE("avx2 kernels agree with scalar on random inputs") {
  if (!avx2_available()) {
    MESSAGE("AVX2 not available; skipping");
    return;
  }
  std::mt19937_64 rng(11);
  const auto& scalar = kernels(KernelKind::scalar);
  const auto& avx2 = kernels(KernelKind::avx2);
  for (int iter = 0; iter < 2000; ++iter) {
    std::size_t nwords = 1 + rng() % 40;
    std::vector<std::uint64_t> src(nwords), base(nwords);
    for (auto& w : src) w = rng();
    for (auto& w : base) w = rng();
    std::int64_t span = static_cast<std::int64_t>(nwords) * 64;
    std::int64_t delta = static_cast<std::int64_t>(rng() % (2 * static_cast<std::uint64_t>(span) + 2)) - span;
    auto a = base, b = base;
    run_kernel(scalar, a, src, delta);
    run_kernel(avx2, b, src, delta);
    CHECK(a == b);

    auto c = base, d = base;
    scalar.or_into(c.data(), src.data(), nwords);
    avx2.or_into(d.data(), src.data(), nwords);
    CHECK(c == d);
  }
}

TEST_CASE("BitTable basics") {
  BitTable t(70);
  CHECK_FALSE(t.any());
  t.set(0);
  t.set(69);
  CHECK(t.test(0));
  CHECK(t.test(69));
  CHECK_FALSE(t.test(1));
  CHECK(t.count() == 2);

  BitTable shifted(70);
  shifted.or_shifted(t, 1);
  CHECK(shifted.test(1));
  CHECK(shifted.count() == 1);  // bit 69 + 1 fell past the end

  BitTable back(70);
  back.or_shifted(t, -69);
  CHECK(back.test(0));
  CHECK(back.count() == 1);

  CHECK_THROWS_AS(BitTable(70).or_shifted(BitTable(71), 0), std::invalid_argument);
}

TEST_CASE("BitTable tail bits never leak back in range") {
  // A left shift may mechanically cross the logical width; those bits are
  // dropped, so shifting back must not resurrect them.
  BitTable t(70);
  t.set(69);
  BitTable up(70);
  up.or_shifted(t, 5);  // 74: outside
  CHECK_FALSE(up.any());
  BitTable down(70);
  down.or_shifted(up, -5);
  CHECK_FALSE(down.any());
}

TEST_CASE("kernel selection") {
  CHECK(std::string(kernels(KernelKind::scalar).name) == "scalar");
  if (avx2_available())
    CHECK(std::string(kernels(KernelKind::avx2).name) == "avx2");
  else
    CHECK_THROWS_AS(kernels(KernelKind::avx2), std::runtime_error);
  CHECK(active_kernels().name != nullptr);
}
