#include "fanoq/quiver.hpp"

#include <algorithm>
#include <stdexcept>

#include "fanoq/checked.hpp"

namespace fanoq {

namespace {

std::size_t idx(std::int64_t n, std::int64_t i, std::int64_t j) {
  if (i < 0 || i >= n || j < 0 || j >= n)
    throw std::out_of_range("vertex index out of range");
  return static_cast<std::size_t>(i * n + j);
}

void check_length(const Quiver& q, std::span<const std::int64_t> v) {
  if (static_cast<std::int64_t>(v.size()) != q.vertex_count())
    throw std::invalid_argument("vector length does not match vertex count");
}

}  // namespace

Quiver::Quiver(std::int64_t n) : n_(n) {
  if (n < 1) throw std::invalid_argument("quiver needs at least one vertex");
  m_.assign(static_cast<std::size_t>(n * n), 0);
}

Quiver::Quiver(std::int64_t n, std::vector<std::int64_t> row_major) : n_(n), m_(std::move(row_major)) {
  if (n < 1) throw std::invalid_argument("quiver needs at least one vertex");
  if (m_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
    throw std::invalid_argument("arrow matrix has wrong shape");
  for (auto v : m_)
    if (v < 0) throw std::invalid_argument("arrow multiplicities must be nonnegative");
}

std::int64_t Quiver::arrows(std::int64_t i, std::int64_t j) const {
  return m_[idx(n_, i, j)];
}

void Quiver::add_arrows(std::int64_t i, std::int64_t j, std::int64_t mult) {
  if (mult < 0) throw std::invalid_argument("arrow multiplicities must be nonnegative");
  auto& cell = m_[idx(n_, i, j)];
  cell = checked_add(cell, mult);
}

std::int64_t Quiver::total_arrows() const {
  std::int64_t t = 0;
  for (auto v : m_) t = checked_add(t, v);
  return t;
}

DimensionVector::DimensionVector(std::vector<std::int64_t> entries) : v_(std::move(entries)) {
  if (v_.empty()) throw std::invalid_argument("dimension vector must be nonempty");
  for (auto d : v_)
    if (d < 1) throw std::invalid_argument("dimension vector entries must be positive");
}

std::int64_t euler_form(const Quiver& q, std::span<const std::int64_t> d,
                        std::span<const std::int64_t> e) {
  check_length(q, d);
  check_length(q, e);
  const std::int64_t n = q.vertex_count();
  std::int64_t acc = 0;
  for (std::int64_t i = 0; i < n; ++i)
    acc = checked_add(acc, checked_mul(d[static_cast<std::size_t>(i)],
                                       e[static_cast<std::size_t>(i)]));
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j)
      if (std::int64_t m = q.arrows(i, j); m != 0)
        acc = checked_sub(acc, checked_mul(m, checked_mul(d[static_cast<std::size_t>(i)],
                                                          e[static_cast<std::size_t>(j)])));
  return acc;
}

std::int64_t sym_form(const Quiver& q, std::span<const std::int64_t> d,
                      std::span<const std::int64_t> e) {
  return checked_add(euler_form(q, d, e), euler_form(q, e, d));
}

std::int64_t antisym_form(const Quiver& q, std::span<const std::int64_t> d,
                          std::span<const std::int64_t> e) {
  return checked_sub(euler_form(q, d, e), euler_form(q, e, d));
}

bool is_acyclic(const Quiver& q) {
  // Kahn's algorithm on the support digraph.
  const std::int64_t n = q.vertex_count();
  std::vector<std::int64_t> indeg(static_cast<std::size_t>(n), 0);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j)
      if (q.arrows(i, j) > 0) ++indeg[static_cast<std::size_t>(j)];
  std::vector<std::int64_t> queue;
  for (std::int64_t v = 0; v < n; ++v)
    if (indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
  std::int64_t removed = 0;
  while (!queue.empty()) {
    std::int64_t v = queue.back();
    queue.pop_back();
    ++removed;
    for (std::int64_t j = 0; j < n; ++j)
      if (q.arrows(v, j) > 0 && --indeg[static_cast<std::size_t>(j)] == 0)
        queue.push_back(j);
  }
  return removed == n;
}

bool is_connected(const Quiver& q) {
  const std::int64_t n = q.vertex_count();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<std::int64_t> stack{0};
  seen[0] = true;
  std::int64_t visited = 1;
  while (!stack.empty()) {
    std::int64_t v = stack.back();
    stack.pop_back();
    for (std::int64_t w = 0; w < n; ++w) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      if (q.arrows(v, w) > 0 || q.arrows(w, v) > 0) {
        seen[static_cast<std::size_t>(w)] = true;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  return visited == n;
}

bool is_valid(const Quiver& q) {
  for (std::int64_t v = 0; v < q.vertex_count(); ++v)
    if (q.arrows(v, v) != 0) return false;
  return is_acyclic(q) && is_connected(q);
}

Quiver opposite(const Quiver& q) {
  const std::int64_t n = q.vertex_count();
  Quiver r(n);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j)
      if (std::int64_t m = q.arrows(i, j); m != 0) r.add_arrows(j, i, m);
  return r;
}

std::vector<std::int64_t> out_weights(const Quiver& q, std::span<const std::int64_t> d) {
  check_length(q, d);
  const std::int64_t n = q.vertex_count();
  std::vector<std::int64_t> w(static_cast<std::size_t>(n), 0);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j)
      if (std::int64_t m = q.arrows(i, j); m != 0)
        w[static_cast<std::size_t>(i)] =
            checked_add(w[static_cast<std::size_t>(i)],
                        checked_mul(m, d[static_cast<std::size_t>(j)]));
  return w;
}

std::vector<std::int64_t> in_weights(const Quiver& q, std::span<const std::int64_t> d) {
  check_length(q, d);
  const std::int64_t n = q.vertex_count();
  std::vector<std::int64_t> w(static_cast<std::size_t>(n), 0);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j)
      if (std::int64_t m = q.arrows(i, j); m != 0)
        w[static_cast<std::size_t>(j)] =
            checked_add(w[static_cast<std::size_t>(j)],
                        checked_mul(m, d[static_cast<std::size_t>(i)]));
  return w;
}

std::vector<std::int64_t> antisym_units(const Quiver& q, std::span<const std::int64_t> d) {
  auto out = out_weights(q, d);
  auto in = in_weights(q, d);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_sub(out[i], in[i]);
  return out;
}

std::vector<std::int64_t> sym_units(const Quiver& q, std::span<const std::int64_t> d) {
  auto out = out_weights(q, d);
  auto in = in_weights(q, d);
  std::vector<std::int64_t> s(out.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    s[i] = checked_sub(checked_sub(checked_mul(2, d[i]), out[i]), in[i]);
  return s;
}

Quiver thickened_subspace_quiver(std::int64_t s, std::int64_t t) {
  if (s < 1 || t < 1)
    throw std::invalid_argument("thickened subspace quiver needs s >= 1 and t >= 1");
  Quiver q(checked_add(s, 1));
  for (std::int64_t i = 0; i < s; ++i) q.add_arrows(i, s, t);
  return q;
}

namespace {

// (s,t,hub) when every arrow runs source -> hub with one common
// multiplicity t; vertices other than the hub must have no other arrows.
std::optional<SubspaceShape> match_standard(const Quiver& q) {
  const std::int64_t n = q.vertex_count();
  if (n < 2) return std::nullopt;
  for (std::int64_t hub = 0; hub < n; ++hub) {
    std::int64_t t = 0;
    bool ok = true;
    for (std::int64_t i = 0; ok && i < n; ++i) {
      for (std::int64_t j = 0; ok && j < n; ++j) {
        std::int64_t m = q.arrows(i, j);
        if (i == j || j != hub) {
          if (m != 0) ok = false;
        } else {  // i -> hub
          if (m < 1) ok = false;
          else if (t == 0) t = m;
          else if (m != t) ok = false;
        }
      }
    }
    if (ok && t >= 1)
      return SubspaceShape{n - 1, t, SubspaceOrientation::standard, hub};
  }
  return std::nullopt;
}

}  // namespace

std::optional<SubspaceShape> recognize_thickened_subspace(const Quiver& q) {
  if (auto s = match_standard(q)) return s;
  if (auto s = match_standard(opposite(q))) {
    // s = 1 is self-opposite and already matched as standard above.
    return SubspaceShape{s->sources, s->thickness, SubspaceOrientation::opposite, s->hub};
  }
  return std::nullopt;
}

}  // namespace fanoq
