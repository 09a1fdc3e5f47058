#include "fanoq/hypotheses.hpp"

#include <cassert>
#include <stdexcept>

#include "fanoq/bittable.hpp"
#include "fanoq/checked.hpp"

namespace fanoq {

namespace {

// Reachable-sum tables cap; beyond this the instance is out of desk scale.
constexpr std::int64_t kMaxRangeBits = std::int64_t{1} << 28;

void check_pair(const Quiver& q, const DimensionVector& d) {
  if (d.size() != q.vertex_count())
    throw std::invalid_argument("dimension vector length does not match vertex count");
}

bool is_zero(std::span<const std::int64_t> e) {
  for (auto x : e)
    if (x != 0) return false;
  return true;
}

// --- naive engine -------------------------------------------------------

// Odometer over all subvectors in lexicographic order; first zero of
// sum c_i e_i (excluding e = 0 and e = d) wins, which also makes it the
// lexicographically smallest witness.
std::optional<std::vector<std::int64_t>> naive_search(const std::vector<std::int64_t>& c,
                                                      const std::vector<std::int64_t>& dv) {
  const std::size_t n = c.size();
  std::vector<std::int64_t> e(n, 0);
  std::int64_t sum = 0;  // maintained incrementally
  for (;;) {
    // advance odometer (last index fastest)
    std::size_t pos = n;
    while (pos-- > 0) {
      if (e[pos] < dv[pos]) {
        ++e[pos];
        sum = checked_add(sum, c[pos]);
        break;
      }
      sum = checked_sub(sum, checked_mul(c[pos], e[pos]));
      e[pos] = 0;
      if (pos == 0) return std::nullopt;  // wrapped past d: done
    }
    bool is_full = true;
    for (std::size_t i = 0; i < n; ++i)
      if (e[i] != dv[i]) {
        is_full = false;
        break;
      }
    if (is_full) continue;  // e = d is not a proper subvector
    if (sum == 0) return e;
  }
}

// --- dp engine ----------------------------------------------------------

// Prefix vectors are classified as all-zero, all-max (e_j = d_j so far) or
// proper. The all-zero prefix attains exactly sum 0 and the all-max prefix
// exactly one running total, so those two states collapse to scalars and
// only the proper state needs a table.
struct DpState {
  BitTable proper;
  std::int64_t offset;    // bit index of sum 0
  std::int64_t max_sum;   // sum of the all-max prefix
  bool zero_eq_max;       // true only before the first vertex
  explicit DpState(std::int64_t range_bits, std::int64_t off)
      : proper(static_cast<std::size_t>(range_bits)), offset(off), max_sum(0),
        zero_eq_max(true) {}
};

struct DpRange {
  std::int64_t lo;    // most negative attainable sum (<= 0)
  std::int64_t bits;  // table width
};

DpRange dp_range(const std::vector<std::int64_t>& c, const std::vector<std::int64_t>& dv) {
  std::int64_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::int64_t w = checked_mul(c[i], dv[i]);
    if (w < 0) lo = checked_add(lo, w);
    else hi = checked_add(hi, w);
  }
  std::int64_t bits = checked_add(checked_sub(hi, lo), 1);
  if (bits > kMaxRangeBits)
    throw std::overflow_error("coprimality DP sum range exceeds the supported width");
  return {lo, bits};
}

void dp_step(DpState& st, std::int64_t c, std::int64_t d) {
  BitTable next(st.proper.bit_size());
  for (std::int64_t t = 0; t <= d; ++t)
    next.or_shifted(st.proper, checked_mul(t, c));
  // extensions of the all-zero prefix that become proper
  for (std::int64_t t = 1; t <= d; ++t) {
    if (st.zero_eq_max && t == d) continue;  // that one is the new all-max prefix
    next.set(static_cast<std::size_t>(checked_add(st.offset, checked_mul(t, c))));
  }
  // extensions of the all-max prefix that become proper
  for (std::int64_t t = 0; t < d; ++t) {
    if (st.zero_eq_max && t == 0) continue;  // the new all-zero prefix
    next.set(static_cast<std::size_t>(
        checked_add(st.offset, checked_add(st.max_sum, checked_mul(t, c)))));
  }
  st.proper = std::move(next);
  st.max_sum = checked_add(st.max_sum, checked_mul(c, d));
  st.zero_eq_max = false;
}

bool dp_is_coprime(const std::vector<std::int64_t>& c, const std::vector<std::int64_t>& dv) {
  auto range = dp_range(c, dv);
  DpState st(range.bits, -range.lo);
  for (std::size_t i = 0; i < c.size(); ++i) dp_step(st, c[i], dv[i]);
  return !st.proper.test(static_cast<std::size_t>(st.offset));
}

// Suffix analogue of DpState, used for the lexicographic witness
// reconstruction: tables[i] holds the sums attainable by a proper
// assignment to vertices i..n-1; the all-zero suffix attains 0 and the
// all-max suffix attains max_sums[i].
struct SuffixTables {
  std::vector<BitTable> proper;  // size n+1
  std::vector<std::int64_t> max_sums;
  std::int64_t offset;
};

SuffixTables build_suffix_tables(const std::vector<std::int64_t>& c,
                                 const std::vector<std::int64_t>& dv) {
  auto range = dp_range(c, dv);
  const std::size_t n = c.size();
  SuffixTables st{{}, std::vector<std::int64_t>(n + 1, 0), -range.lo};
  st.proper.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    st.proper.emplace_back(static_cast<std::size_t>(range.bits));
  bool zero_eq_max = true;  // the empty suffix
  for (std::size_t i = n; i-- > 0;) {
    const std::int64_t ci = c[i], di = dv[i];
    BitTable& next = st.proper[i];
    for (std::int64_t t = 0; t <= di; ++t)
      next.or_shifted(st.proper[i + 1], checked_mul(t, ci));
    for (std::int64_t t = 1; t <= di; ++t) {
      if (zero_eq_max && t == di) continue;
      next.set(static_cast<std::size_t>(checked_add(st.offset, checked_mul(t, ci))));
    }
    for (std::int64_t t = 0; t < di; ++t) {
      if (zero_eq_max && t == 0) continue;
      next.set(static_cast<std::size_t>(
          checked_add(st.offset, checked_add(st.max_sums[i + 1], checked_mul(t, ci)))));
    }
    st.max_sums[i] = checked_add(st.max_sums[i + 1], checked_mul(ci, di));
    zero_eq_max = false;
  }
  return st;
}

// Can vertices i..n-1 contribute exactly `target`, by an assignment that
// is not all-zero unless the prefix already is (nz), and not all-max
// unless the prefix already differs from d (nm)?
bool suffix_feasible(const SuffixTables& st, std::size_t i, std::size_t n,
                     std::int64_t target, bool nz, bool nm) {
  if (i == n) return target == 0 && nz && nm;
  std::int64_t bit = checked_add(st.offset, target);
  if (bit >= 0 && bit < static_cast<std::int64_t>(st.proper[i].bit_size()) &&
      st.proper[i].test(static_cast<std::size_t>(bit)))
    return true;
  if (nz && target == 0) return true;                // all-zero suffix
  if (nm && target == st.max_sums[i]) return true;   // all-max suffix
  return false;
}

std::optional<std::vector<std::int64_t>> dp_witness(const std::vector<std::int64_t>& c,
                                                    const std::vector<std::int64_t>& dv) {
  const std::size_t n = c.size();
  auto st = build_suffix_tables(c, dv);
  if (!suffix_feasible(st, 0, n, 0, false, false)) return std::nullopt;
  std::vector<std::int64_t> e(n, 0);
  std::int64_t sum = 0;
  bool nz = false, nm = false;
  for (std::size_t i = 0; i < n; ++i) {
    bool chosen = false;
    for (std::int64_t t = 0; t <= dv[i]; ++t) {
      std::int64_t s2 = checked_add(sum, checked_mul(t, c[i]));
      bool nz2 = nz || t > 0, nm2 = nm || t < dv[i];
      if (suffix_feasible(st, i + 1, n, checked_sub(std::int64_t{0}, s2), nz2, nm2)) {
        e[i] = t;
        sum = s2;
        nz = nz2;
        nm = nm2;
        chosen = true;
        break;
      }
    }
    if (!chosen) throw std::logic_error("witness reconstruction lost feasibility");
  }
  assert(sum == 0 && nz && nm);
  return e;
}

}  // namespace

bool is_coprime(const Quiver& q, const DimensionVector& d, CoprimeEngine engine) {
  check_pair(q, d);
  auto c = antisym_units(q, d.entries());
  if (engine == CoprimeEngine::naive)
    return !naive_search(c, d.entries()).has_value();
  return dp_is_coprime(c, d.entries());
}

std::optional<std::vector<std::int64_t>> coprime_witness(const Quiver& q,
                                                         const DimensionVector& d,
                                                         CoprimeEngine engine) {
  check_pair(q, d);
  auto c = antisym_units(q, d.entries());
  if (engine == CoprimeEngine::naive) return naive_search(c, d.entries());
  return dp_witness(c, d.entries());
}

namespace {

VertexCheck threshold_check(const Quiver& q, const DimensionVector& d, std::int64_t bound) {
  check_pair(q, d);
  auto s = sym_units(q, d.entries());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] > bound) return {false, static_cast<std::int64_t>(i)};
  return {true, std::nullopt};
}

}  // namespace

VertexCheck in_fundamental_domain(const Quiver& q, const DimensionVector& d) {
  return threshold_check(q, d, 0);
}

VertexCheck interior_check(const Quiver& q, const DimensionVector& d) {
  return threshold_check(q, d, -2);
}

bool is_thin(const DimensionVector& d) {
  for (auto x : d.entries())
    if (x != 1) return false;
  return true;
}

HypothesisReport full_report(const Quiver& q, const DimensionVector& d,
                             bool want_witnesses, CoprimeEngine engine) {
  check_pair(q, d);
  HypothesisReport r;
  if (want_witnesses) {
    r.coprime_witness = coprime_witness(q, d, engine);
    r.coprime = !r.coprime_witness.has_value();
  } else {
    r.coprime = is_coprime(q, d, engine);
  }
  auto fd = in_fundamental_domain(q, d);
  r.fundamental_domain = fd.ok;
  r.fundamental_domain_witness = fd.vertex;
  auto in = interior_check(q, d);
  r.interior = in.ok;
  r.interior_witness = in.vertex;
  r.thin = is_thin(d);
  return r;
}

}  // namespace fanoq
