#include "fanoq/partial_sums.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

#include "fanoq/bittable.hpp"
#include "fanoq/checked.hpp"
#include "fanoq/parallel.hpp"

namespace fanoq {

namespace {

constexpr std::int64_t kMaxTableBits = std::int64_t{1} << 28;

std::int64_t checked_total(const std::vector<std::int64_t>& xs) {
  std::int64_t t = 0;
  for (auto x : xs) t = checked_add(t, x);
  return t;
}

// Occupancy of all subset sums of xs, bits over [0, sum xs]. With positive
// entries the empty set is the only subset reaching 0 and the full set the
// only one reaching the total, so the only-empty / only-full bookkeeping
// the proper-pair exclusion needs is exactly those two end bits.
BitTable subset_sums(const std::vector<std::int64_t>& xs, std::int64_t total) {
  std::int64_t bits = checked_add(total, 1);
  if (bits > kMaxTableBits)
    throw std::overflow_error("subset-sum table exceeds the supported width");
  BitTable acc(static_cast<std::size_t>(bits));
  acc.set(0);
  for (auto x : xs) {
    BitTable next = acc;
    next.or_shifted(acc, x);
    acc = std::move(next);
  }
  return acc;
}

// Suffix reachability tables: r[j] holds the sums attainable by subsets of
// xs[j..). Used to reconstruct the lexicographically smallest subset at a
// given sum.
std::vector<BitTable> suffix_sums(const std::vector<std::int64_t>& xs, std::int64_t total) {
  std::vector<BitTable> r;
  std::size_t k = xs.size();
  r.reserve(k + 1);
  for (std::size_t j = 0; j <= k; ++j)
    r.emplace_back(static_cast<std::size_t>(checked_add(total, 1)));
  r[k].set(0);
  for (std::size_t j = k; j-- > 0;) {
    r[j].or_with(r[j + 1]);
    r[j].or_shifted(r[j + 1], xs[j]);
  }
  return r;
}

std::vector<std::int64_t> smallest_subset_with_sum(const std::vector<std::int64_t>& xs,
                                                   std::int64_t total, std::int64_t sum) {
  auto r = suffix_sums(xs, total);
  std::vector<std::int64_t> subset;
  std::int64_t rem = sum;
  for (std::size_t j = 0; j < xs.size() && rem > 0; ++j) {
    if (xs[j] <= rem && r[j + 1].test(static_cast<std::size_t>(rem - xs[j]))) {
      subset.push_back(static_cast<std::int64_t>(j) + 1);  // 1-based
      rem -= xs[j];
    }
  }
  if (rem != 0) throw std::logic_error("subset reconstruction lost the target sum");
  return subset;
}

// Smallest common set bit of two occupancy tables that witnesses a
// violation: excludes 0 and, when the totals agree, the shared total.
std::optional<std::int64_t> smallest_violating_sum(const BitTable& a, const BitTable& b,
                                                   std::int64_t total_a,
                                                   std::int64_t total_b) {
  const auto& wa = a.words();
  const auto& wb = b.words();
  std::size_t nw = std::min(wa.size(), wb.size());
  for (std::size_t w = 0; w < nw; ++w) {
    std::uint64_t x = wa[w] & wb[w];
    if (w == 0) x &= ~std::uint64_t{1};  // sum 0: empty/empty is allowed
    if (total_a == total_b) {
      std::size_t bit = static_cast<std::size_t>(total_a);
      if (bit / 64 == w) x &= ~(std::uint64_t{1} << (bit % 64));  // full/full
    }
    if (x) return static_cast<std::int64_t>(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
  }
  return std::nullopt;
}

bool all_ones(const std::vector<std::int64_t>& xs) {
  return std::all_of(xs.begin(), xs.end(), [](std::int64_t x) { return x == 1; });
}

}  // namespace

PartialSumInstance::PartialSumInstance(std::vector<std::int64_t> a_in,
                                       std::vector<std::int64_t> b_in)
    : a(std::move(a_in)), b(std::move(b_in)) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("both sequences must be nonempty");
  for (auto x : a)
    if (x < 1) throw std::invalid_argument("entries must be positive");
  for (auto x : b)
    if (x < 1) throw std::invalid_argument("entries must be positive");
}

HypothesisCheck check_hypothesis(const PartialSumInstance& inst, bool want_witness) {
  std::int64_t total_a = checked_total(inst.a);
  std::int64_t total_b = checked_total(inst.b);
  BitTable sa = subset_sums(inst.a, total_a);
  BitTable sb = subset_sums(inst.b, total_b);
  auto s = smallest_violating_sum(sa, sb, total_a, total_b);
  if (!s) return {true, std::nullopt};
  if (!want_witness) return {false, std::nullopt};
  CoincidingSums w;
  w.sum = *s;
  w.i_subset = smallest_subset_with_sum(inst.a, total_a, *s);
  w.j_subset = smallest_subset_with_sum(inst.b, total_b, *s);
  return {false, std::move(w)};
}

LemmaVerdict lemma_verdict(const PartialSumInstance& inst, bool want_witness) {
  LemmaVerdict v;
  auto hc = check_hypothesis(inst, want_witness);
  v.hypothesis_holds = hc.holds;
  v.hypothesis_witness = std::move(hc.witness);
  v.total = checked_add(checked_total(inst.a), checked_total(inst.b));
  std::int64_t k = static_cast<std::int64_t>(inst.a.size());
  std::int64_t l = static_cast<std::int64_t>(inst.b.size());
  v.bound = checked_mul(2, checked_sub(checked_add(k, l), 1));
  v.bound_holds = v.total >= v.bound;
  v.equality = v.total == v.bound;
  v.equality_characterized =
      (l == 1 && all_ones(inst.a)) || (k == 1 && all_ones(inst.b));
  return v;
}

std::vector<std::vector<std::int64_t>> d_grid(const PartialSumInstance& inst) {
  const std::size_t k = inst.a.size(), l = inst.b.size();
  std::vector<std::int64_t> pa(k + 1, 0), pb(l + 1, 0);
  for (std::size_t i = 0; i < k; ++i) pa[i + 1] = checked_add(pa[i], inst.a[i]);
  for (std::size_t j = 0; j < l; ++j) pb[j + 1] = checked_add(pb[j], inst.b[j]);
  std::vector<std::vector<std::int64_t>> g(k + 1, std::vector<std::int64_t>(l + 1));
  for (std::size_t i = 0; i <= k; ++i)
    for (std::size_t j = 0; j <= l; ++j) g[i][j] = checked_sub(pa[i], pb[j]);
  return g;
}

std::int64_t d_grid_distinct_count(const PartialSumInstance& inst) {
  auto g = d_grid(inst);
  std::vector<std::int64_t> flat;
  flat.reserve(g.size() * g[0].size());
  for (const auto& row : g) flat.insert(flat.end(), row.begin(), row.end());
  std::sort(flat.begin(), flat.end());
  return static_cast<std::int64_t>(std::unique(flat.begin(), flat.end()) - flat.begin());
}

namespace {

// --- instance streams for the exhaustive search --------------------------

// Number of sequences of a given length: max_value^len for all orderings,
// C(max_value + len - 1, len) for the non-decreasing representatives.
std::uint64_t sequence_count(std::int64_t max_value, std::int64_t len, bool canonical) {
  if (!canonical) {
    std::uint64_t c = 1;
    for (std::int64_t i = 0; i < len; ++i) {
      if (c > UINT64_MAX / static_cast<std::uint64_t>(max_value))
        throw std::overflow_error("instance count overflow");
      c *= static_cast<std::uint64_t>(max_value);
    }
    return c;
  }
  // binomial(max_value + len - 1, len) without overflow for desk bounds
  std::uint64_t num = 1;
  for (std::int64_t i = 0; i < len; ++i) {
    std::uint64_t f = static_cast<std::uint64_t>(max_value + i);
    if (num > UINT64_MAX / f) throw std::overflow_error("instance count overflow");
    num = num * f / static_cast<std::uint64_t>(i + 1);
  }
  return num;
}

// First sequence of length len in enumeration order.
std::vector<std::int64_t> first_sequence(std::int64_t len) {
  return std::vector<std::int64_t>(static_cast<std::size_t>(len), 1);
}

// Advances to the next sequence; returns false after the last one.
// All-orderings mode counts through [1, max]^len; canonical mode steps
// through non-decreasing sequences (reset trailing positions to the
// incremented value instead of 1).
bool next_sequence(std::vector<std::int64_t>& s, std::int64_t max_value, bool canonical) {
  std::size_t pos = s.size();
  while (pos-- > 0) {
    if (s[pos] < max_value) {
      ++s[pos];
      std::int64_t fill = canonical ? s[pos] : 1;
      for (std::size_t j = pos + 1; j < s.size(); ++j) s[j] = fill;
      return true;
    }
    if (pos == 0) return false;
  }
  return false;
}

struct LemmaChunkResult {
  std::uint64_t instances = 0;
  std::uint64_t hypothesis_ok = 0;
  std::uint64_t equality_count = 0;
  std::uint64_t bound_violations = 0;
  std::uint64_t uncharacterized = 0;
  std::uint64_t grid_violations = 0;
  std::vector<PartialSumInstance> equality_cases;
  std::vector<PartialSumInstance> violations;
};

// One work unit: a fixed a-sequence against every b-sequence in bounds.
void scan_against_all_b(const std::vector<std::int64_t>& a, const LemmaSearchConfig& cfg,
                        LemmaChunkResult& out) {
  for (std::int64_t l = 1; l <= cfg.max_l; ++l) {
    std::vector<std::int64_t> b = first_sequence(l);
    do {
      ++out.instances;
      PartialSumInstance inst(a, b);
      LemmaVerdict v = lemma_verdict(inst, /*want_witness=*/false);
      if (!v.hypothesis_holds) continue;
      ++out.hypothesis_ok;
      bool bad = false;
      if (!v.bound_holds) {
        ++out.bound_violations;
        bad = true;
      }
      if (v.equality) {
        ++out.equality_count;
        out.equality_cases.push_back(inst);
        if (!v.equality_characterized) {
          ++out.uncharacterized;
          bad = true;
        }
      }
      std::int64_t cells = static_cast<std::int64_t>((a.size() + 1) * (b.size() + 1));
      if (d_grid_distinct_count(inst) < cells - 1) {
        ++out.grid_violations;
        bad = true;
      }
      if (bad) out.violations.push_back(inst);
    } while (next_sequence(b, cfg.max_value, cfg.canonical_only));
  }
}

}  // namespace

LemmaSearchReport exhaustive_lemma_search(const LemmaSearchConfig& cfg) {
  if (cfg.max_k < 1 || cfg.max_l < 1 || cfg.max_value < 1)
    throw std::invalid_argument("search bounds must be >= 1");
  auto start = std::chrono::steady_clock::now();

  std::uint64_t a_count = 0, b_count = 0;
  for (std::int64_t k = 1; k <= cfg.max_k; ++k)
    a_count += sequence_count(cfg.max_value, k, cfg.canonical_only);
  for (std::int64_t l = 1; l <= cfg.max_l; ++l)
    b_count += sequence_count(cfg.max_value, l, cfg.canonical_only);
  if (b_count != 0 && a_count > cfg.budget / b_count)
    throw std::runtime_error("budget exceeded: instance count above configured limit");

  // Materialize the a-side (the small outer stream); each is one chunk.
  std::vector<std::vector<std::int64_t>> a_seqs;
  a_seqs.reserve(static_cast<std::size_t>(a_count));
  for (std::int64_t k = 1; k <= cfg.max_k; ++k) {
    std::vector<std::int64_t> a = first_sequence(k);
    do {
      a_seqs.push_back(a);
    } while (next_sequence(a, cfg.max_value, cfg.canonical_only));
  }

  std::vector<LemmaChunkResult> partial(a_seqs.size());
  run_chunked(a_seqs.size(), cfg.workers,
              [&](std::size_t c) { scan_against_all_b(a_seqs[c], cfg, partial[c]); });

  LemmaSearchReport rep;
  rep.config = cfg;
  for (auto& p : partial) {
    rep.instances += p.instances;
    rep.hypothesis_ok += p.hypothesis_ok;
    rep.equality_count += p.equality_count;
    rep.bound_violations += p.bound_violations;
    rep.uncharacterized_equalities += p.uncharacterized;
    rep.grid_violations += p.grid_violations;
    for (auto& e : p.equality_cases) rep.equality_cases.push_back(std::move(e));
    for (auto& v : p.violations) rep.violations.push_back(std::move(v));
  }
  rep.wall_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start)
          .count());
  return rep;
}

}  // namespace fanoq
