#include "equigon/core_ring.hpp"

#include <algorithm>

#include "equigon/number_theory.hpp"

namespace equigon {

LatticeParams::LatticeParams(Integer m) : m_(std::move(m)) {
  if (m_ < 1 || !is_square_free(m_)) {
    throw Error(Errc::bad_modulus,
                "m must be a positive square-free integer, got " + m_.str());
  }
}

Integer norm_sq(const LatticeVector& v, const LatticeParams& params) {
  return v.a * v.a + params.m() * v.b * v.b;
}

LatticeVector edge_sum(std::span<const LatticeVector> edges) {
  LatticeVector sum;
  for (const auto& e : edges) {
    sum.a += e.a;
    sum.b += e.b;
  }
  return sum;
}

std::vector<LatticeVector> vertices(std::span<const LatticeVector> edges,
                                    const LatticeVector& origin) {
  std::vector<LatticeVector> out;
  out.reserve(edges.size() + 1);
  out.push_back(origin);
  for (const auto& e : edges) out.push_back(out.back() + e);
  return out;
}

std::vector<LatticeVector> vertices(const EquilateralWalk& walk,
                                    const LatticeVector& origin) {
  return vertices(std::span<const LatticeVector>(walk.edges), origin);
}

int quad_sign(const QuadInt& x, const LatticeParams& params) {
  const int sp = x.p.sign();
  const int sq = x.q.sign();
  if (sp == 0) return sq;
  if (sq == 0 || sp == sq) return sp;
  // Opposite signs: |p| versus |q| sqrt m, compared through the squares.
  const Integer diff = x.p * x.p - params.m() * x.q * x.q;
  return sp * diff.sign();
}

namespace {

// Plane cross product of (u.a, u.b sqrt m) and (v.a, v.b sqrt m) is
// (u.a v.b - u.b v.a) sqrt m.
int cross_sign(const LatticeVector& u, const LatticeVector& v,
               const LatticeParams& params) {
  return quad_sign(QuadInt{0, u.a * v.b - u.b * v.a}, params);
}

int orientation(const LatticeVector& p, const LatticeVector& q,
                const LatticeVector& r, const LatticeParams& params) {
  return cross_sign(q - p, r - p, params);
}

int dot_sign(const LatticeVector& u, const LatticeVector& v,
             const LatticeParams& params) {
  return (u.a * v.a + params.m() * u.b * v.b).sign();
}

// r is known to be collinear with p and q. The y scale sqrt m is monotone,
// so the bounding-box test can run on b directly.
bool within_box(const LatticeVector& p, const LatticeVector& q,
                const LatticeVector& r) {
  return std::min(p.a, q.a) <= r.a && r.a <= std::max(p.a, q.a) &&
         std::min(p.b, q.b) <= r.b && r.b <= std::max(p.b, q.b);
}

// Closed segments; collinear overlap counts.
bool segments_intersect(const LatticeVector& p1, const LatticeVector& p2,
                        const LatticeVector& p3, const LatticeVector& p4,
                        const LatticeParams& params) {
  const int o1 = orientation(p1, p2, p3, params);
  const int o2 = orientation(p1, p2, p4, params);
  const int o3 = orientation(p3, p4, p1, params);
  const int o4 = orientation(p3, p4, p2, params);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && within_box(p1, p2, p3)) return true;
  if (o2 == 0 && within_box(p1, p2, p4)) return true;
  if (o3 == 0 && within_box(p3, p4, p1)) return true;
  if (o4 == 0 && within_box(p3, p4, p2)) return true;
  return false;
}

// Two edges that share a vertex overlap elsewhere iff they are collinear and
// the path doubles back.
bool adjacent_overlap(const LatticeVector& first, const LatticeVector& second,
                      const LatticeParams& params) {
  return cross_sign(first, second, params) == 0 &&
         dot_sign(first, second, params) < 0;
}

}  // namespace

bool is_simple(const EquilateralWalk& walk) {
  const auto& edges = walk.edges;
  const auto& params = walk.params;
  if (!edge_sum(edges).is_zero()) {
    throw Error(Errc::not_closed, "is_simple requires a closed walk");
  }
  const std::size_t n = edges.size();
  if (n < 3) return false;

  auto pts = vertices(walk);
  pts.pop_back();  // closed: last point repeats the origin

  auto sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return false;
  }

  for (std::size_t i = 0; i < n; ++i) {
    const auto& a0 = pts[i];
    const auto& a1 = pts[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j == i + 1) {
        if (adjacent_overlap(edges[i], edges[j], params)) return false;
        continue;
      }
      if (i == 0 && j == n - 1) {
        if (adjacent_overlap(edges[j], edges[i], params)) return false;
        continue;
      }
      if (segments_intersect(a0, a1, pts[j], pts[(j + 1) % n], params)) {
        return false;
      }
    }
  }
  return true;
}

VerificationReport verify(const EquilateralWalk& walk, bool check_simplicity) {
  const auto& edges = walk.edges;
  if (edges.size() < 3) {
    throw Error(Errc::walk_too_short,
                "a polygon needs at least 3 edges, got " +
                    std::to_string(edges.size()));
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].is_zero()) {
      throw Error(Errc::zero_edge, "edge " + std::to_string(i) + " is (0, 0)");
    }
  }

  VerificationReport report;
  report.n = edges.size();
  report.is_closed = edge_sum(edges).is_zero();

  const Integer side = norm_sq(edges.front(), walk.params);
  report.is_equilateral =
      std::all_of(edges.begin() + 1, edges.end(), [&](const LatticeVector& e) {
        return norm_sq(e, walk.params) == side;
      });
  if (report.is_equilateral) report.side_sq = side;

  if (check_simplicity && report.is_closed) report.is_simple = is_simple(walk);
  return report;
}

namespace {

// 0: +x axis, 1: lower half plane, 2: -x axis, 3: upper half plane, 4: zero.
int angular_sector(const LatticeVector& v) {
  const int sb = v.b.sign();
  if (sb == 0) {
    const int sa = v.a.sign();
    return sa > 0 ? 0 : (sa < 0 ? 2 : 4);
  }
  return sb < 0 ? 1 : 3;
}

}  // namespace

void canonical_sort(std::vector<LatticeVector>& edges) {
  std::stable_sort(edges.begin(), edges.end(),
                   [](const LatticeVector& u, const LatticeVector& v) {
                     const int su = angular_sector(u);
                     const int sv = angular_sector(v);
                     if (su != sv) return su < sv;
                     if (su == 1 || su == 3) {
                       // Clockwise: v comes after u iff v is clockwise of u.
                       const int c = (u.a * v.b - u.b * v.a).sign();
                       if (c != 0) return c < 0;
                     }
                     // Same direction: shorter first.
                     return abs(u.a) + abs(u.b) < abs(v.a) + abs(v.b);
                   });
}

}  // namespace equigon
