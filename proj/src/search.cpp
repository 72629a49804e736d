#include "equigon/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "equigon/constructions.hpp"
#include "equigon/number_theory.hpp"

namespace equigon {

namespace {

// Keeps every a^2 + m b^2 of the stream well inside int64.
constexpr std::int64_t kMaxStreamS = std::int64_t{1} << 62;

std::uint64_t ceil_sqrt(std::uint64_t n) {
  const std::uint64_t r = isqrt(n);
  return r * r == n ? r : r + 1;
}

}  // namespace

std::vector<LatticeVector> representations(const Integer& s, const Integer& m) {
  if (s.sign() < 0 || m < 1) {
    throw Error(Errc::bad_input, "representations requires s >= 0 and m >= 1");
  }
  std::vector<LatticeVector> out;
  auto emit = [&out](const Integer& a, const Integer& b) {
    out.push_back({a, b});
    if (!a.is_zero()) out.push_back({-a, b});
  };

  const auto s64 = to_int64(s);
  const auto m64 = to_int64(m);
  if (s64 && m64) {
    const auto bmax = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(*s64 / *m64)));
    for (std::int64_t b = -bmax; b <= bmax; ++b) {
      const auto rest = static_cast<std::uint64_t>(*s64 - *m64 * b * b);
      const std::uint64_t a = isqrt(rest);
      if (a * a == rest) emit(Integer(a), Integer(b));
    }
  } else {
    const Integer bmax = isqrt(s / m);
    for (Integer b = -bmax; b <= bmax; ++b) {
      const Integer rest = s - m * b * b;
      const Integer a = isqrt(rest);
      if (a * a == rest) emit(a, b);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

RepresentationStream::RepresentationStream(std::int64_t m, std::int64_t s_min,
                                           std::int64_t s_max, std::int64_t block)
    : m_(m), next_(std::max<std::int64_t>(s_min, 0)), s_max_(s_max), block_(block) {
  if (m < 1 || block < 1 || s_max >= kMaxStreamS) {
    throw Error(Errc::bad_input, "representation stream needs m >= 1 and s_max < 2^62");
  }
}

std::vector<RepresentationStream::Entry> RepresentationStream::next_block() {
  struct Point {
    std::int64_t s, a, b;
    bool operator<(const Point& o) const {
      return std::tie(s, a, b) < std::tie(o.s, o.a, o.b);
    }
  };

  std::vector<Entry> entries;
  while (entries.empty() && next_ <= s_max_) {
    const std::int64_t lo = next_;
    const std::int64_t hi = std::min(s_max_, lo + block_ - 1);
    next_ = hi + 1;

    std::vector<Point> points;
    for (std::int64_t b = 0; m_ * b * b <= hi; ++b) {
      const std::int64_t yb = m_ * b * b;
      const std::uint64_t a_min = lo <= yb ? 0 : ceil_sqrt(static_cast<std::uint64_t>(lo - yb));
      const std::uint64_t a_max = isqrt(static_cast<std::uint64_t>(hi - yb));
      for (auto ua = a_min; ua <= a_max; ++ua) {
        const auto a = static_cast<std::int64_t>(ua);
        const std::int64_t s = a * a + yb;
        points.push_back({s, a, b});
        if (a != 0) points.push_back({s, -a, b});
        if (b != 0) {
          points.push_back({s, a, -b});
          if (a != 0) points.push_back({s, -a, -b});
        }
      }
    }
    std::sort(points.begin(), points.end());
    for (const auto& p : points) {
      if (entries.empty() || entries.back().s != p.s) entries.push_back({p.s, {}});
      entries.back().vectors.push_back({p.a, p.b});
    }
  }
  return entries;
}

namespace {

// Assigns a count to each vector in turn. A branch is cut when the running
// sum can no longer be cancelled by `remaining` more vectors drawn from the
// unassigned suffix, judged by the suffix's coordinate extremes.
template <class Z>
class ZeroSumDfs {
 public:
  ZeroSumDfs(const std::vector<LatticeVector>& vectors, std::uint64_t budget)
      : budget_(budget), counts_(vectors.size(), 0) {
    for (const auto& v : vectors) items_.push_back({v.a.convert_to<Z>(), v.b.convert_to<Z>()});
    const std::size_t k = items_.size();
    min_a_.resize(k + 1);
    max_a_.resize(k + 1);
    min_b_.resize(k + 1);
    max_b_.resize(k + 1);
    for (std::size_t j = k; j-- > 0;) {
      const auto& it = items_[j];
      const bool last = j + 1 == k;
      min_a_[j] = last ? it.a : std::min(it.a, min_a_[j + 1]);
      max_a_[j] = last ? it.a : std::max(it.a, max_a_[j + 1]);
      min_b_[j] = last ? it.b : std::min(it.b, min_b_[j + 1]);
      max_b_[j] = last ? it.b : std::max(it.b, max_b_[j + 1]);
    }
  }

  bool run(std::int64_t n) { return dfs(0, n, Z(0), Z(0)); }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<std::int64_t>& counts() const { return counts_; }

 private:
  struct Item {
    Z a;
    Z b;
  };

  bool dfs(std::size_t j, std::int64_t remaining, const Z& x, const Z& y) {
    if (++nodes_ > budget_) {
      throw Error(Errc::budget_exhausted, "zero-sum search exceeded its node budget");
    }
    if (remaining == 0) return x == 0 && y == 0;
    if (j == items_.size()) return false;
    const Z r(remaining);
    if (-x < r * min_a_[j] || -x > r * max_a_[j]) return false;
    if (-y < r * min_b_[j] || -y > r * max_b_[j]) return false;

    // The last one or two slots are filled by lookup. Candidates are visited
    // in the order the plain count loop would reach them, so the first
    // solution found does not change.
    if (remaining == 1) {
      const auto q = find(j, -x, -y);
      if (!q) return false;
      counts_[*q] = 1;
      return true;
    }
    if (remaining == 2) {
      for (std::size_t p = items_.size(); p-- > j;) {
        const auto q = find(p, -x - items_[p].a, -y - items_[p].b);
        if (!q) continue;
        counts_[p] += 1;
        counts_[*q] += 1;
        return true;
      }
      return false;
    }

    const auto& it = items_[j];
    for (std::int64_t c = 0; c <= remaining; ++c) {
      const Z zc(c);
      counts_[j] = c;
      if (dfs(j + 1, remaining - c, x + zc * it.a, y + zc * it.b)) return true;
    }
    counts_[j] = 0;
    return false;
  }

  // Index of (a, b) within items_[from..], which is sorted and duplicate-free.
  std::optional<std::size_t> find(std::size_t from, const Z& a, const Z& b) const {
    auto it = std::lower_bound(items_.begin() + static_cast<std::ptrdiff_t>(from), items_.end(),
                               Item{a, b}, [](const Item& u, const Item& v) {
                                 return u.a < v.a || (u.a == v.a && u.b < v.b);
                               });
    if (it == items_.end() || it->a != a || it->b != b) return std::nullopt;
    return static_cast<std::size_t>(it - items_.begin());
  }

  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Item> items_;
  std::vector<Z> min_a_, max_a_, min_b_, max_b_;
  std::vector<std::int64_t> counts_;
};

template <class Z>
std::optional<Multiset> run_dfs(const std::vector<LatticeVector>& vectors,
                                std::int64_t n, std::uint64_t budget,
                                std::uint64_t* nodes_explored) {
  ZeroSumDfs<Z> dfs(vectors, budget);
  bool found = false;
  try {
    found = dfs.run(n);
  } catch (const Error&) {
    if (nodes_explored) *nodes_explored = dfs.nodes() - 1;
    throw;
  }
  if (nodes_explored) *nodes_explored = dfs.nodes();
  if (!found) return std::nullopt;
  Multiset out;
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (dfs.counts()[j] > 0) out.emplace_back(vectors[j], dfs.counts()[j]);
  }
  return out;
}

}  // namespace

std::optional<Multiset> zero_sum_search(std::span<const LatticeVector> vectors,
                                        std::int64_t n, const SearchBounds& budget,
                                        std::uint64_t* nodes_explored) {
  if (n < 1) throw Error(Errc::bad_input, "zero_sum_search requires n >= 1");
  std::vector<LatticeVector> sorted(vectors.begin(), vectors.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  // Running sums are bounded by n * max|coordinate|.
  Integer extreme = 0;
  for (const auto& v : sorted) extreme = std::max({extreme, abs(v.a), abs(v.b)});
  if (extreme * n < Integer(std::int64_t{1} << 61)) {
    return run_dfs<std::int64_t>(sorted, n, budget.node_budget, nodes_explored);
  }
  return run_dfs<Integer>(sorted, n, budget.node_budget, nodes_explored);
}

EquilateralWalk walk_from_multiset(const LatticeParams& params, const Multiset& multiset) {
  std::vector<LatticeVector> edges;
  for (const auto& [v, count] : multiset) {
    edges.insert(edges.end(), static_cast<std::size_t>(count), v);
  }
  canonical_sort(edges);
  return EquilateralWalk{params, std::move(edges)};
}

namespace {

enum class CellState { skipped, absent, found, truncated };

struct CellResult {
  CellState state = CellState::skipped;
  std::uint64_t nodes = 0;
  Multiset multiset;
};

CellResult evaluate_cell(const std::vector<LatticeVector>& vectors, std::int64_t n,
                         const SearchBounds& bounds) {
  CellResult r;
  try {
    auto ms = zero_sum_search(vectors, n, bounds, &r.nodes);
    if (ms) {
      r.state = CellState::found;
      r.multiset = std::move(*ms);
    } else {
      r.state = CellState::absent;
    }
  } catch (const Error& e) {
    if (e.code() != Errc::budget_exhausted) throw;
    r.state = CellState::truncated;
  }
  return r;
}

// Evaluates the cells of one block; every cell before the first hit is
// evaluated, later ones may be skipped.
std::vector<CellResult> evaluate_block(const std::vector<RepresentationStream::Entry>& entries,
                                       std::int64_t n, const SearchBounds& bounds,
                                       unsigned threads) {
  std::vector<CellResult> results(entries.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_found{std::numeric_limits<std::size_t>::max()};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= entries.size()) return;
      if (i > first_found.load()) continue;
      results[i] = evaluate_cell(entries[i].vectors, n, bounds);
      if (results[i].state == CellState::found) {
        std::size_t cur = first_found.load();
        while (i < cur && !first_found.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };

  const unsigned workers = std::min<std::size_t>(threads, entries.size());
  if (workers <= 1) {
    worker();
    return results;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  pool.clear();
  return results;
}

}  // namespace

SearchOutcome min_odd_ngon(const Integer& m, const SearchBounds& bounds,
                           const SearchOptions& options) {
  require_odd_gon_modulus(m);
  const auto m64 = to_int64(m);
  if (!m64) throw Error(Errc::bad_input, "m too large for the search oracle");
  if (bounds.n_max < 1 || bounds.s_max < 1 || bounds.node_budget < 1) {
    throw Error(Errc::bad_input, "search bounds must be positive");
  }
  if (bounds.s_max >= kMaxStreamS) throw Error(Errc::bad_input, "s_max must be below 2^62");

  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  std::int64_t n_start = 3;
  if (options.apply_prime_bound) {
    n_start = std::max<std::int64_t>(3, largest_prime_factor(m).convert_to<std::int64_t>());
    if (n_start % 2 == 0) ++n_start;
  }

  const LatticeParams params(m);
  SearchOutcome outcome;
  for (std::int64_t n = n_start; n <= bounds.n_max; n += 2) {
    RepresentationStream stream(*m64, *m64 + 1, bounds.s_max);
    for (auto entries = stream.next_block(); !entries.empty(); entries = stream.next_block()) {
      const auto results = evaluate_block(entries, n, bounds, threads);
      for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i];
        outcome.nodes_explored += r.nodes;
        if (r.state == CellState::truncated) {
          outcome.truncated.push_back({n, entries[i].s});
        } else if (r.state == CellState::found) {
          outcome.status = SearchStatus::found;
          outcome.walk = walk_from_multiset(params, r.multiset);
          outcome.n = n;
          outcome.side_sq = entries[i].s;
          return outcome;
        }
      }
    }
  }
  return outcome;
}

}  // namespace equigon
