#include "fanoq/bitkernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace fanoq {

namespace {

void shift_left_or_scalar(std::uint64_t* dst, const std::uint64_t* src,
                          std::size_t nwords, std::size_t shift) {
  const std::size_t q = shift / 64, r = shift % 64;
  if (q >= nwords) return;
  if (r == 0) {
    for (std::size_t w = nwords; w-- > q;) dst[w] |= src[w - q];
    return;
  }
  for (std::size_t w = nwords; w-- > q;) {
    std::uint64_t v = src[w - q] << r;
    if (w > q) v |= src[w - q - 1] >> (64 - r);
    dst[w] |= v;
  }
}

void shift_right_or_scalar(std::uint64_t* dst, const std::uint64_t* src,
                           std::size_t nwords, std::size_t shift) {
  const std::size_t q = shift / 64, r = shift % 64;
  if (q >= nwords) return;
  if (r == 0) {
    for (std::size_t w = 0; w + q < nwords; ++w) dst[w] |= src[w + q];
    return;
  }
  for (std::size_t w = 0; w + q < nwords; ++w) {
    std::uint64_t v = src[w + q] >> r;
    if (w + q + 1 < nwords) v |= src[w + q + 1] << (64 - r);
    dst[w] |= v;
  }
}

void or_into_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords) {
  for (std::size_t w = 0; w < nwords; ++w) dst[w] |= src[w];
}

const BitKernels scalar_kernels{shift_left_or_scalar, shift_right_or_scalar,
                                or_into_scalar, "scalar"};

const BitKernels* pick_default() {
  if (const char* env = std::getenv("FANOQ_KERNEL")) {
    std::string v(env);
    if (v == "scalar") return &kernels(KernelKind::scalar);
    if (v == "avx2") return &kernels(KernelKind::avx2);
    if (!v.empty() && v != "auto")
      throw std::runtime_error("FANOQ_KERNEL must be scalar, avx2 or auto");
  }
  return avx2_available() ? &kernels(KernelKind::avx2) : &scalar_kernels;
}

std::atomic<const BitKernels*> g_active{nullptr};

}  // namespace

namespace detail {
// Defined in bitkernels_avx2.cpp; null when not compiled in.
extern const BitKernels* avx2_kernels_or_null();
}  // namespace detail

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
  return detail::avx2_kernels_or_null() != nullptr && __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const BitKernels& kernels(KernelKind kind) {
  switch (kind) {
    case KernelKind::scalar:
      return scalar_kernels;
    case KernelKind::avx2:
      if (!avx2_available())
        throw std::runtime_error("AVX2 kernels are not available on this machine");
      return *detail::avx2_kernels_or_null();
  }
  throw std::logic_error("unknown kernel kind");
}

const BitKernels& active_kernels() {
  const BitKernels* k = g_active.load(std::memory_order_acquire);
  if (!k) {
    k = pick_default();
    g_active.store(k, std::memory_order_release);
  }
  return *k;
}

void set_active_kernels(KernelKind kind) {
  g_active.store(&kernels(kind), std::memory_order_release);
}

}  // namespace fanoq
