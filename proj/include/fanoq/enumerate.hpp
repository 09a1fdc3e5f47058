#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "fanoq/quiver.hpp"

namespace fanoq {

// Every acyclic quiver admits a topological vertex order, so enumerating
// strictly upper-triangular multiplicity matrices is exhaustive up to
// relabeling. Matrices are indexed in mixed radix over the positions
// (0,1),(0,2),...,(n-2,n-1) with the first position most significant;
// increasing index is lexicographic matrix order.

std::int64_t upper_tri_positions(std::int64_t n);

// Number of upper-triangular matrices for n vertices: (max_mult+1)^T.
std::uint64_t matrix_count(std::int64_t n, std::int64_t max_multiplicity);

Quiver quiver_from_index(std::int64_t n, std::int64_t max_multiplicity, std::uint64_t index);

// A quiver is the emitted representative of its isomorphism class iff its
// matrix encoding is minimal among all relabelings that stay upper
// triangular. Requires n <= 12 (permutation search).
bool is_canonical_labeling(const Quiver& q);

// True for matrices the enumerator accepts: connected, and canonical when
// dedupe is on. (The stream only produces acyclic matrices by shape.)
bool enumeration_accepts(const Quiver& q, bool dedupe);

struct QuiverEnumConfig {
  std::int64_t max_vertices = 4;
  std::int64_t max_multiplicity = 5;
  bool dedupe = true;
};

// Single-threaded stream of accepted quivers, n ascending then index
// ascending. Stops early when fn returns false.
void for_each_quiver(const QuiverEnumConfig& cfg,
                     const std::function<bool(const Quiver&)>& fn);

// All vectors in {1..max_entry}^n in lexicographic order.
std::uint64_t dimension_vector_count(std::int64_t n, std::int64_t max_entry);
std::vector<std::int64_t> dimension_vector_from_index(std::int64_t n, std::int64_t max_entry,
                                                      std::uint64_t index);
void for_each_dimension_vector(std::int64_t n, std::int64_t max_entry,
                               const std::function<bool(const std::vector<std::int64_t>&)>& fn);

}  // namespace fanoq
