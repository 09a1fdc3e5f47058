#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fanoq {

// Finite directed multigraph with arrow multiplicities in a dense n x n
// matrix; entry (i,j) counts arrows i -> j. Construction only enforces
// shape and nonnegativity; acyclicity, connectivity and the zero diagonal
// are queried through is_valid().
class Quiver {
 public:
  explicit Quiver(std::int64_t n);
  Quiver(std::int64_t n, std::vector<std::int64_t> row_major);

  std::int64_t vertex_count() const { return n_; }
  std::int64_t arrows(std::int64_t i, std::int64_t j) const;
  void add_arrows(std::int64_t i, std::int64_t j, std::int64_t mult);

  std::int64_t total_arrows() const;

  const std::vector<std::int64_t>& matrix() const { return m_; }

  bool operator==(const Quiver&) const = default;

 private:
  std::int64_t n_;
  std::vector<std::int64_t> m_;
};

// Dimension vector: one strictly positive integer per vertex.
class DimensionVector {
 public:
  explicit DimensionVector(std::vector<std::int64_t> entries);

  const std::vector<std::int64_t>& entries() const { return v_; }
  std::int64_t size() const { return static_cast<std::int64_t>(v_.size()); }
  std::int64_t operator[](std::int64_t i) const { return v_[static_cast<std::size_t>(i)]; }

  bool operator==(const DimensionVector&) const = default;

 private:
  std::vector<std::int64_t> v_;
};

// <d,e> = sum_i d_i e_i - sum_{arrows i->j} d_i e_j, exact and
// overflow-checked. Entries may be arbitrary integers (unit vectors and
// differences are needed); lengths must match the quiver.
std::int64_t euler_form(const Quiver& q, std::span<const std::int64_t> d,
                        std::span<const std::int64_t> e);

// (d,e) = <d,e> + <e,d>
std::int64_t sym_form(const Quiver& q, std::span<const std::int64_t> d,
                      std::span<const std::int64_t> e);

// {d,e} = <d,e> - <e,d>
std::int64_t antisym_form(const Quiver& q, std::span<const std::int64_t> d,
                          std::span<const std::int64_t> e);

// Zero diagonal + acyclic + connected (underlying undirected multigraph).
bool is_valid(const Quiver& q);
bool is_acyclic(const Quiver& q);
bool is_connected(const Quiver& q);

// Arrow matrix transposed; an involution.
Quiver opposite(const Quiver& q);

// Arrow-weighted neighbour sums: out_weights(q,d)[i] = sum over arrows
// i->j of d_j, in_weights dually. These are the alpha/beta of the proof
// decomposition and the building blocks of {d,unit_i} and (d,unit_i):
//   {d,unit_i} = out_i - in_i,   (d,unit_i) = 2 d_i - out_i - in_i.
std::vector<std::int64_t> out_weights(const Quiver& q, std::span<const std::int64_t> d);
std::vector<std::int64_t> in_weights(const Quiver& q, std::span<const std::int64_t> d);

// c_i = {d, unit_i} for every vertex.
std::vector<std::int64_t> antisym_units(const Quiver& q, std::span<const std::int64_t> d);
// s_i = (d, unit_i) for every vertex.
std::vector<std::int64_t> sym_units(const Quiver& q, std::span<const std::int64_t> d);

// s sources, each tied to the single sink (the last vertex) by t arrows.
// s = 1 gives the Kronecker quiver with t arrows.
Quiver thickened_subspace_quiver(std::int64_t s, std::int64_t t);

enum class SubspaceOrientation { standard, opposite };

struct SubspaceShape {
  std::int64_t sources;    // s
  std::int64_t thickness;  // t
  SubspaceOrientation orientation;
  // The distinguished hub: the unique sink for standard orientation, the
  // unique source for opposite. s = 1 reports standard by convention.
  std::int64_t hub;
};

std::optional<SubspaceShape> recognize_thickened_subspace(const Quiver& q);

}  // namespace fanoq
