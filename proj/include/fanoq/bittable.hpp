#pragma once

#include <cstdint>
#include <vector>

#include "fanoq/bitkernels.hpp"

namespace fanoq {

// Fixed-width bit-indexed occupancy table. Bit i set means "value i is
// attainable". Shifting merges translated copies; the heavy loops run
// through the dispatched kernels.
class BitTable {
 public:
  explicit BitTable(std::size_t nbits);

  std::size_t bit_size() const { return nbits_; }

  void set(std::size_t i);
  bool test(std::size_t i) const;
  void reset();
  bool any() const;
  std::size_t count() const;

  // this |= (other translated by delta bits); other must have the same
  // width and must not be this object.
  void or_shifted(const BitTable& other, std::int64_t delta);
  // this |= other
  void or_with(const BitTable& other);

  bool operator==(const BitTable&) const = default;

  const std::vector<std::uint64_t>& words() const { return words_; }

  // Kernel table used by this instance (defaults to the process-wide one).
  void use_kernels(const BitKernels& k) { kernels_ = &k; }

 private:
  std::size_t nbits_;
  std::vector<std::uint64_t> words_;
  const BitKernels* kernels_;

  void clear_tail();
};

}  // namespace fanoq
