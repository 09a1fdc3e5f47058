// AVX2 variants of the bit kernels. This translation unit is the only one
// compiled with -mavx2; callers reach it through the dispatch table after
// a cpuid check.

#include "fanoq/bitkernels.hpp"

#if defined(FANOQ_BUILD_AVX2) && (defined(__x86_64__) || defined(__i386__))

#include <immintrin.h>

namespace fanoq {
namespace {

void shift_left_or_avx2(std::uint64_t* dst, const std::uint64_t* src,
                        std::size_t nwords, std::size_t shift) {
  const std::size_t q = shift / 64, r = shift % 64;
  if (q >= nwords) return;
  if (r == 0) {
    std::size_t w = q;
    for (; w + 4 <= nwords; w += 4) {
      __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + w));
      __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + w - q));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + w), _mm256_or_si256(d, s));
    }
    for (; w < nwords; ++w) dst[w] |= src[w - q];
    return;
  }
  // dst[w] |= src[w-q] << r | src[w-q-1] >> (64-r); the w == q word has no
  // low neighbour and is done separately.
  dst[q] |= src[0] << r;
  std::size_t w = q + 1;
  for (; w + 4 <= nwords; w += 4) {
    __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + w - q));
    __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + w - q - 1));
    __m256i v = _mm256_or_si256(_mm256_slli_epi64(hi, static_cast<int>(r)),
                                _mm256_srli_epi64(lo, static_cast<int>(64 - r)));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + w));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + w), _mm256_or_si256(d, v));
  }
  for (; w < nwords; ++w)
    dst[w] |= (src[w - q] << r) | (src[w - q - 1] >> (64 - r));
}

void shift_right_or_avx2(std::uint64_t* dst, const std::uint64_t* src,
                         std::size_t nwords, std::size_t shift) {
  const std::size_t q = shift / 64, r = shift % 64;
  if (q >= nwords) return;
  const std::size_t last = nwords - q;  // exclusive upper bound for w
  if (r == 0) {
    std::size_t w = 0;
    for (; w + 4 <= last; w += 4) {
      __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + w));
      __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + w + q));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + w), _mm256_or_si256(d, s));
    }
    for (; w < last; ++w) dst[w] |= src[w + q];
    return;
  }
  // dst[w] |= src[w+q] >> r | src[w+q+1] << (64-r); the w == last-1 word has
  // no high neighbour.
  std::size_t w = 0;
  if (last >= 1) {
    for (; w + 4 <= last - 1; w += 4) {
      __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + w + q));
      __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + w + q + 1));
      __m256i v = _mm256_or_si256(_mm256_srli_epi64(lo, static_cast<int>(r)),
                                  _mm256_slli_epi64(hi, static_cast<int>(64 - r)));
      __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + w));
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + w), _mm256_or_si256(d, v));
    }
    for (; w + 1 < last; ++w)
      dst[w] |= (src[w + q] >> r) | (src[w + q + 1] << (64 - r));
    dst[last - 1] |= src[nwords - 1] >> r;
  }
}

void or_into_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords) {
  std::size_t w = 0;
  for (; w + 4 <= nwords; w += 4) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + w));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + w));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + w), _mm256_or_si256(d, s));
  }
  for (; w < nwords; ++w) dst[w] |= src[w];
}

const BitKernels avx2_kernels{shift_left_or_avx2, shift_right_or_avx2,
                              or_into_avx2, "avx2"};

}  // namespace

namespace detail {
const BitKernels* avx2_kernels_or_null() { return &avx2_kernels; }
}  // namespace detail

}  // namespace fanoq

#else

namespace fanoq {
namespace detail {
const BitKernels* avx2_kernels_or_null() { return nullptr; }
}  // namespace detail
}  // namespace fanoq

#endif
