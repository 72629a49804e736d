#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "equigon/core_ring.hpp"

namespace equigon {

struct SearchBounds {
  std::int64_t n_max = 0;        // largest polygon size tried
  std::int64_t s_max = 0;        // largest squared side length tried
  std::uint64_t node_budget = 0; // DFS node cap per (n, s) cell
};

struct SearchOptions {
  // 0 means std::thread::hardware_concurrency().
  unsigned threads = 1;
  // Start at the largest prime factor of m instead of n = 3.
  bool apply_prime_bound = true;
};

enum class SearchStatus { found, not_found_within_bounds };

struct SearchCell {
  std::int64_t n = 0;
  std::int64_t s = 0;

  friend bool operator==(const SearchCell&, const SearchCell&) = default;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::not_found_within_bounds;
  std::optional<EquilateralWalk> walk;
  std::optional<std::int64_t> n;
  std::optional<Integer> side_sq;
  std::uint64_t nodes_explored = 0;
  // Cells whose DFS hit the node budget; those (n, s) pairs are undecided.
  std::vector<SearchCell> truncated;
};

// Vector with multiplicity.
using Multiset = std::vector<std::pair<LatticeVector, std::int64_t>>;

// All (a, b) with a^2 + m b^2 = s, lexicographically ordered.
std::vector<LatticeVector> representations(const Integer& s, const Integer& m);

// Streams representations for every s in [s_min, s_max] in increasing s,
// a block at a time. Equivalent to calling representations(s, m) for each s
// but without a square root per s.
class RepresentationStream {
 public:
  struct Entry {
    std::int64_t s;
    std::vector<LatticeVector> vectors;  // lexicographic, non-empty
  };

  RepresentationStream(std::int64_t m, std::int64_t s_min, std::int64_t s_max,
                       std::int64_t block = 1 << 16);

  // Next block of entries with non-empty representation sets; empty once
  // the range is exhausted.
  std::vector<Entry> next_block();

 private:
  std::int64_t m_;
  std::int64_t next_;
  std::int64_t s_max_;
  std::int64_t block_;
};

// Depth-first search for n vectors (with repetition) from `vectors` summing
// to zero. Input order is irrelevant: the vectors are sorted and
// de-duplicated first. Returns std::nullopt when no such multiset exists.
// Throws Error(budget_exhausted) if more than budget.node_budget nodes are
// visited; a clean std::nullopt is therefore a proof of absence.
std::optional<Multiset> zero_sum_search(std::span<const LatticeVector> vectors,
                                        std::int64_t n,
                                        const SearchBounds& budget,
                                        std::uint64_t* nodes_explored = nullptr);

// Smallest odd n, then smallest s, admitting a closed equilateral n-gon with
// squared side s. Never throws on exhaustion.
SearchOutcome min_odd_ngon(const Integer& m, const SearchBounds& bounds,
                           const SearchOptions& options = {});

EquilateralWalk walk_from_multiset(const LatticeParams& params,
                                   const Multiset& multiset);

}  // namespace equigon
