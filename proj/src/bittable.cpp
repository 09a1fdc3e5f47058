#include "fanoq/bittable.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace fanoq {

BitTable::BitTable(std::size_t nbits)
    : nbits_(nbits), words_((nbits + 63) / 64, 0), kernels_(&active_kernels()) {
  if (nbits == 0) throw std::invalid_argument("BitTable must have at least one bit");
}

void BitTable::set(std::size_t i) {
  assert(i < nbits_);
  words_[i / 64] |= std::uint64_t{1} << (i % 64);
}

bool BitTable::test(std::size_t i) const {
  assert(i < nbits_);
  return (words_[i / 64] >> (i % 64)) & 1;
}

void BitTable::reset() {
  for (auto& w : words_) w = 0;
}

bool BitTable::any() const {
  for (auto w : words_)
    if (w) return true;
  return false;
}

std::size_t BitTable::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

void BitTable::clear_tail() {
  if (std::size_t rem = nbits_ % 64; rem != 0)
    words_.back() &= (~std::uint64_t{0}) >> (64 - rem);
}

void BitTable::or_shifted(const BitTable& other, std::int64_t delta) {
  if (other.nbits_ != nbits_)
    throw std::invalid_argument("BitTable width mismatch");
  assert(&other != this);
  // Magnitudes at or beyond the width shift everything out; avoids the
  // -INT64_MIN trap as a side effect.
  std::uint64_t mag = delta >= 0 ? static_cast<std::uint64_t>(delta)
                                 : ~static_cast<std::uint64_t>(delta) + 1;
  if (mag >= nbits_) return;
  if (delta >= 0)
    kernels_->shift_left_or(words_.data(), other.words_.data(), words_.size(),
                            static_cast<std::size_t>(mag));
  else
    kernels_->shift_right_or(words_.data(), other.words_.data(), words_.size(),
                             static_cast<std::size_t>(mag));
  clear_tail();
}

void BitTable::or_with(const BitTable& other) {
  if (other.nbits_ != nbits_)
    throw std::invalid_argument("BitTable width mismatch");
  kernels_->or_into(words_.data(), other.words_.data(), words_.size());
}

}  // namespace fanoq
