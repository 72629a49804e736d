#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "equigon/error.hpp"
#include "equigon/integer.hpp"

namespace equigon {

// The rectangular lattice generated by (1, 0) and (0, sqrt m). m is always
// positive and square-free; construction entry points that need m = 3 mod 4
// check that themselves.
class LatticeParams {
 public:
  // Throws Error(bad_modulus) if m < 1 or m is not square-free.
  explicit LatticeParams(Integer m);

  const Integer& m() const noexcept { return m_; }

  friend bool operator==(const LatticeParams&, const LatticeParams&) = default;

 private:
  Integer m_;
};

// The plane vector (a, b * sqrt m). The zero vector is a legal value.
struct LatticeVector {
  Integer a;
  Integer b;

  bool is_zero() const { return a.is_zero() && b.is_zero(); }

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

  // Lexicographic on (a, b).
  friend bool operator<(const LatticeVector& u, const LatticeVector& v) {
    if (u.a != v.a) return u.a < v.a;
    return u.b < v.b;
  }

  friend LatticeVector operator+(const LatticeVector& u, const LatticeVector& v) {
    return {u.a + v.a, u.b + v.b};
  }
  friend LatticeVector operator-(const LatticeVector& u, const LatticeVector& v) {
    return {u.a - v.a, u.b - v.b};
  }
  friend LatticeVector operator-(const LatticeVector& u) { return {-u.a, -u.b}; }
  friend LatticeVector operator*(const Integer& k, const LatticeVector& u) {
    return {k * u.a, k * u.b};
  }
};

// The real number p + q * sqrt m, with m supplied by context.
struct QuadInt {
  Integer p;
  Integer q;
};

struct EquilateralWalk {
  LatticeParams params;
  std::vector<LatticeVector> edges;

  std::size_t size() const noexcept { return edges.size(); }

  friend bool operator==(const EquilateralWalk&, const EquilateralWalk&) = default;
};

struct VerificationReport {
  std::size_t n = 0;
  bool is_closed = false;
  bool is_equilateral = false;
  std::optional<Integer> side_sq;  // present iff is_equilateral
  std::optional<bool> is_simple;   // present iff requested and closed

  bool ok() const { return is_closed && is_equilateral; }
};

Integer norm_sq(const LatticeVector& v, const LatticeParams& params);

LatticeVector edge_sum(std::span<const LatticeVector> edges);

// Prefix sums: n + 1 points starting at origin.
std::vector<LatticeVector> vertices(std::span<const LatticeVector> edges,
                                    const LatticeVector& origin = {});
std::vector<LatticeVector> vertices(const EquilateralWalk& walk,
                                    const LatticeVector& origin = {});

// Exact sign of p + q sqrt m.
int quad_sign(const QuadInt& x, const LatticeParams& params);

// Closure and equal side lengths. Throws Error(walk_too_short) for fewer
// than three edges and Error(zero_edge) if any edge is (0, 0).
VerificationReport verify(const EquilateralWalk& walk,
                          bool check_simplicity = false);

// No two non-adjacent edges meet, adjacent edges meet only at their shared
// vertex, and no vertex is visited twice. Throws Error(not_closed).
bool is_simple(const EquilateralWalk& walk);

// Clockwise order by exact polar angle, starting on the positive x axis:
// (x > 0, y = 0), then y < 0, then (x < 0, y = 0), then y > 0. Parallel
// edges with the same direction are ordered shorter first. Stable for equal
// edges.
void canonical_sort(std::vector<LatticeVector>& edges);

}  // namespace equigon
