#include "fanoq/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fanoq {

std::int64_t upper_tri_positions(std::int64_t n) { return n * (n - 1) / 2; }

std::uint64_t matrix_count(std::int64_t n, std::int64_t max_multiplicity) {
  if (n < 1 || max_multiplicity < 0)
    throw std::invalid_argument("bad enumeration bounds");
  std::uint64_t radix = static_cast<std::uint64_t>(max_multiplicity) + 1;
  std::uint64_t c = 1;
  for (std::int64_t p = 0; p < upper_tri_positions(n); ++p) {
    if (c > UINT64_MAX / radix) throw std::overflow_error("matrix count overflow");
    c *= radix;
  }
  return c;
}

Quiver quiver_from_index(std::int64_t n, std::int64_t max_multiplicity, std::uint64_t index) {
  const std::uint64_t radix = static_cast<std::uint64_t>(max_multiplicity) + 1;
  const std::int64_t t = upper_tri_positions(n);
  Quiver q(n);
  // least significant digit = last position (n-2, n-1)
  for (std::int64_t p = t; p-- > 0;) {
    std::uint64_t digit = index % radix;
    index /= radix;
    if (digit == 0) continue;
    // position p in the row-major listing of pairs (i, j), i < j
    std::int64_t i = 0, skip = p;
    while (skip >= n - 1 - i) {
      skip -= n - 1 - i;
      ++i;
    }
    std::int64_t j = i + 1 + skip;
    q.add_arrows(i, j, static_cast<std::int64_t>(digit));
  }
  if (index != 0) throw std::out_of_range("matrix index out of range");
  return q;
}

namespace {

// Permutations of vertices under which the relabeled matrix stays upper
// triangular are exactly the topological reorderings; the canonical form
// is the minimal relabeled matrix.
bool relabeling_stays_upper(const Quiver& q, const std::vector<std::int64_t>& perm) {
  const std::int64_t n = q.vertex_count();
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j)
      if (q.arrows(i, j) > 0 && perm[static_cast<std::size_t>(i)] >= perm[static_cast<std::size_t>(j)])
        return false;
  return true;
}

std::vector<std::int64_t> relabeled_matrix(const Quiver& q,
                                           const std::vector<std::int64_t>& perm) {
  const std::int64_t n = q.vertex_count();
  std::vector<std::int64_t> m(static_cast<std::size_t>(n * n), 0);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j)
      m[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)] * n +
                                 perm[static_cast<std::size_t>(j)])] = q.arrows(i, j);
  return m;
}

}  // namespace

bool is_canonical_labeling(const Quiver& q) {
  const std::int64_t n = q.vertex_count();
  if (n > 12) throw std::invalid_argument("canonical check limited to n <= 12");
  std::vector<std::int64_t> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  const auto& own = q.matrix();
  while (std::next_permutation(perm.begin(), perm.end())) {
    if (!relabeling_stays_upper(q, perm)) continue;
    if (relabeled_matrix(q, perm) < own) return false;
  }
  return true;
}

bool enumeration_accepts(const Quiver& q, bool dedupe) {
  if (!is_connected(q)) return false;
  return !dedupe || is_canonical_labeling(q);
}

void for_each_quiver(const QuiverEnumConfig& cfg,
                     const std::function<bool(const Quiver&)>& fn) {
  if (cfg.max_vertices < 1 || cfg.max_multiplicity < 1)
    throw std::invalid_argument("bad enumeration bounds");
  for (std::int64_t n = 1; n <= cfg.max_vertices; ++n) {
    const std::uint64_t count = matrix_count(n, cfg.max_multiplicity);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Quiver q = quiver_from_index(n, cfg.max_multiplicity, idx);
      if (!enumeration_accepts(q, cfg.dedupe)) continue;
      if (!fn(q)) return;
    }
  }
}

std::uint64_t dimension_vector_count(std::int64_t n, std::int64_t max_entry) {
  if (n < 1 || max_entry < 1) throw std::invalid_argument("bad dimension bounds");
  std::uint64_t c = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    if (c > UINT64_MAX / static_cast<std::uint64_t>(max_entry))
      throw std::overflow_error("dimension vector count overflow");
    c *= static_cast<std::uint64_t>(max_entry);
  }
  return c;
}

std::vector<std::int64_t> dimension_vector_from_index(std::int64_t n, std::int64_t max_entry,
                                                      std::uint64_t index) {
  std::vector<std::int64_t> d(static_cast<std::size_t>(n));
  for (std::int64_t i = n; i-- > 0;) {
    d[static_cast<std::size_t>(i)] =
        1 + static_cast<std::int64_t>(index % static_cast<std::uint64_t>(max_entry));
    index /= static_cast<std::uint64_t>(max_entry);
  }
  if (index != 0) throw std::out_of_range("dimension vector index out of range");
  return d;
}

void for_each_dimension_vector(std::int64_t n, std::int64_t max_entry,
                               const std::function<bool(const std::vector<std::int64_t>&)>& fn) {
  const std::uint64_t count = dimension_vector_count(n, max_entry);
  std::vector<std::int64_t> d(static_cast<std::size_t>(n), 1);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    if (!fn(d)) return;
    // lexicographic successor
    std::size_t pos = d.size();
    while (pos-- > 0) {
      if (d[pos] < max_entry) {
        ++d[pos];
        std::fill(d.begin() + static_cast<std::ptrdiff_t>(pos) + 1, d.end(), 1);
        break;
      }
    }
  }
}

}  // namespace fanoq
