#pragma once

#include <cstddef>
#include <cstdint>

// Word-array bit kernels behind the reachable-sum DP and the subset-sum
// occupancy tables. A scalar reference implementation always exists; an
// AVX2 variant is selected at runtime when the CPU supports it. Both
// implement the same contract and are equivalence-tested against each
// other and against a per-bit reference.
//
// Contract (all kernels): dst and src are arrays of `nwords` 64-bit words
// interpreted as a little-endian bit string (bit i lives in word i/64 at
// position i%64). dst and src must not alias. Bits shifted past either
// end are dropped.

namespace fanoq {

struct BitKernels {
  // dst |= (src << shift), shift in bits, 0 <= shift
  void (*shift_left_or)(std::uint64_t* dst, const std::uint64_t* src,
                        std::size_t nwords, std::size_t shift);
  // dst |= (src >> shift)
  void (*shift_right_or)(std::uint64_t* dst, const std::uint64_t* src,
                         std::size_t nwords, std::size_t shift);
  // dst |= src
  void (*or_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
  const char* name;
};

enum class KernelKind { scalar, avx2 };

bool avx2_available();

// Kernel table for a specific implementation; throws std::runtime_error
// if the requested one cannot run on this machine.
const BitKernels& kernels(KernelKind kind);

// Process-wide default: AVX2 when available, else scalar. The environment
// variable FANOQ_KERNEL=scalar|avx2 overrides the automatic choice.
const BitKernels& active_kernels();
void set_active_kernels(KernelKind kind);

}  // namespace fanoq
