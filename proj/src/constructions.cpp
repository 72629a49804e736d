#include "equigon/constructions.hpp"

#include <array>
#include <limits>

#include "equigon/number_theory.hpp"

namespace equigon {

std::string_view to_string(SolverMethod method) noexcept {
  switch (method) {
    case SolverMethod::closed_form: return "closed-form";
    case SolverMethod::euclid: return "euclid";
  }
  return "unknown";
}

SolverMethod parse_solver_method(std::string_view text) {
  if (text == "closed-form" || text == "closed_form") return SolverMethod::closed_form;
  if (text == "euclid") return SolverMethod::euclid;
  throw Error(Errc::bad_input, "unknown method '" + std::string(text) +
                                   "' (expected closed-form or euclid)");
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  // Invariant: r0 = a x0 + b y0 and r1 = a x1 + b y1.
  Integer r0 = abs(a), r1 = abs(b);
  Integer x0 = 1, x1 = 0;
  Integer y0 = 0, y1 = 1;
  while (!r1.is_zero()) {
    const Integer q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    x0 = std::exchange(x1, x0 - q * x1);
    y0 = std::exchange(y1, y0 - q * y1);
  }
  if (a.sign() < 0) x0 = -x0;
  if (b.sign() < 0) y0 = -y0;
  return {r0, x0, y0};
}

void require_odd_gon_modulus(const Integer& m) {
  if (m < 3) {
    throw Error(Errc::bad_modulus, "m must be >= 3, got " + m.str());
  }
  if (m % 4 != 3) {
    throw Error(Errc::bad_modulus, "m must be 3 mod 4, got " + m.str());
  }
  if (!is_square_free(m)) {
    throw Error(Errc::bad_modulus, "m must be square-free, got " + m.str());
  }
}

BaseParams base_params(const Integer& m) {
  require_odd_gon_modulus(m);
  const Integer m2 = m * m;
  // 4 | m + 1, so every numerator below is even.
  return BaseParams{
      .c = (m2 + 5 * m + 4) / 2,
      .a1 = (m2 + 3 * m + 4) / 2,
      .b1 = m + 2,
      .a2 = (m2 + 3 * m - 4) / 2,
      .b2 = m + 4,
  };
}

ClosedFormDecomposition closed_form_decomposition(const Integer& m) {
  require_odd_gon_modulus(m);
  ClosedFormDecomposition d;
  d.k = (m + 1) / 4;
  // i = ((k + 1) mod 4) - 1 lands in {-1, 0, 1, 2}.
  d.i = static_cast<int>(((d.k + 1) % 4).convert_to<long>()) - 1;
  d.k_prime = (d.k - d.i) / 4;
  // i (k - 1) is even: i odd forces k = 1 or 3 (mod 4).
  d.chi = d.k_prime - d.i * (d.k - 1) / 2;
  return d;
}

ClosedFormSolution solve_t_closed_form(const Integer& m) {
  ClosedFormSolution sol;
  sol.decomp = closed_form_decomposition(m);
  const auto& d = sol.decomp;
  sol.t.t1 = -d.chi * (16 * d.k_prime + 4 * d.i + 3);
  sol.t.t2 = -sol.t.t1 - d.i;
  return sol;
}

TPair solve_t_euclid(const Integer& m) {
  const BaseParams bp = base_params(m);
  const ExtendedGcd eg = extended_gcd(bp.a1, bp.a2);
  if (eg.gcd != 1) {
    throw Error(Errc::invalid_params, "gcd(a1, a2) = " + eg.gcd.str() + " for m = " + m.str());
  }
  const Integer rhs = -bp.c / 2;
  const Integer t1 = eg.x * rhs;
  const Integer t2 = eg.y * rhs;

  // Family (t1 + a2 s, t2 - a1 s). |t1 + a2 s| + |t2 - a1 s| is convex and
  // piecewise linear with no flat pieces, so integer minimisers sit next to
  // one of the two kinks.
  const std::array<Integer, 4> shifts = {
      floor_div(-t1, bp.a2), ceil_div(-t1, bp.a2),
      floor_div(t2, bp.a1), ceil_div(t2, bp.a1)};

  TPair best;
  Integer best_cost = -1;
  for (const auto& s : shifts) {
    TPair cand{t1 + bp.a2 * s, t2 - bp.a1 * s};
    const Integer cost = abs(cand.t1) + abs(cand.t2);
    if (best_cost < 0 || cost < best_cost ||
        (cost == best_cost && cand.t1 < best.t1)) {
      best = std::move(cand);
      best_cost = cost;
    }
  }
  return best;
}

ConstructionParams construction_params(const Integer& m, SolverMethod method) {
  const BaseParams bp = base_params(m);
  const TPair t = method == SolverMethod::closed_form ? solve_t_closed_form(m).t
                                                      : solve_t_euclid(m);
  return ConstructionParams{
      .m = m,
      .c = bp.c,
      .a1 = bp.a1,
      .b1 = bp.b1,
      .a2 = bp.a2,
      .b2 = bp.b2,
      .t1 = t.t1,
      .t2 = t.t2,
      .n_base = 1 + 2 * (abs(t.t1) + abs(t.t2)),
  };
}

std::string params_violation(const ConstructionParams& p) {
  if (p.m < 1 || !is_square_free(p.m)) return "m is not a positive square-free integer";
  const Integer c2 = p.c * p.c;
  if (c2 - p.a1 * p.a1 != p.m * p.b1 * p.b1) return "c^2 - a1^2 != m b1^2";
  if (c2 - p.a2 * p.a2 != p.m * p.b2 * p.b2) return "c^2 - a2^2 != m b2^2";
  if (-p.c != 2 * (p.a1 * p.t1 + p.a2 * p.t2)) return "-c != 2 (a1 t1 + a2 t2)";
  if (extended_gcd(p.a1, p.a2).gcd != 1) return "gcd(a1, a2) != 1";
  if (p.n_base != 1 + 2 * (abs(p.t1) + abs(p.t2))) return "n_base != 1 + 2 (|t1| + |t2|)";
  if (p.n_base < 3) return "n_base < 3";
  return {};
}

namespace {

// Upper limit on materialised walk sizes.
constexpr std::int64_t kMaxEdges = std::int64_t{1} << 32;

void append_copies(std::vector<LatticeVector>& edges, const LatticeVector& v,
                   const Integer& count) {
  edges.insert(edges.end(), count.convert_to<std::size_t>(), v);
}

}  // namespace

EquilateralWalk assemble_odd_walk(const ConstructionParams& p) {
  if (auto why = params_violation(p); !why.empty()) {
    throw Error(Errc::invalid_params, "invalid construction parameters: " + why);
  }
  if (p.n_base > kMaxEdges) {
    throw Error(Errc::bad_n, "n_base = " + p.n_base.str() + " is too large to materialise");
  }

  const int s1 = sign(p.t1);
  const int s2 = sign(p.t2);
  std::vector<LatticeVector> edges;
  edges.reserve(p.n_base.convert_to<std::size_t>());
  append_copies(edges, {s1 * p.a1, s1 * p.b1}, abs(p.t1));
  append_copies(edges, {s1 * p.a1, -s1 * p.b1}, abs(p.t1));
  append_copies(edges, {s2 * p.a2, s2 * p.b2}, abs(p.t2));
  append_copies(edges, {s2 * p.a2, -s2 * p.b2}, abs(p.t2));
  edges.push_back({p.c, 0});
  canonical_sort(edges);
  return EquilateralWalk{LatticeParams(p.m), std::move(edges)};
}

EquilateralWalk even_ngon(const Integer& m, std::int64_t n) {
  if (n < 4 || n % 2 != 0) {
    throw Error(Errc::bad_n, "even construction needs even n >= 4, got " + std::to_string(n));
  }
  if (n > kMaxEdges) throw Error(Errc::bad_n, "n is too large to materialise");
  LatticeParams params(m);
  const auto half = static_cast<std::size_t>(n / 2 - 1);
  std::vector<LatticeVector> edges;
  edges.reserve(static_cast<std::size_t>(n));
  edges.insert(edges.end(), half, LatticeVector{1, 1});
  edges.push_back({1, -1});
  edges.insert(edges.end(), half, LatticeVector{-1, -1});
  edges.push_back({-1, 1});
  return EquilateralWalk{std::move(params), std::move(edges)};
}

EquilateralWalk extend_by_two(const EquilateralWalk& walk) {
  VerificationReport report;
  try {
    report = verify(walk);
  } catch (const Error& e) {
    throw Error(Errc::invalid_walk, std::string("cannot extend: ") + e.what());
  }
  if (!report.ok()) {
    throw Error(Errc::invalid_walk, "cannot extend a walk that is not closed and equilateral");
  }
  EquilateralWalk out = walk;
  const LatticeVector u = out.edges.front();
  out.edges.push_back(u);
  out.edges.push_back(-u);
  canonical_sort(out.edges);
  return out;
}

EquilateralWalk ngon(const Integer& m, std::int64_t n, SolverMethod method) {
  if (n % 2 == 0) return even_ngon(m, n);
  require_odd_gon_modulus(m);
  const ConstructionParams p = construction_params(m, method);
  if (Integer(n) < p.n_base) {
    throw Error(Errc::bad_n, "n = " + std::to_string(n) + " is below n_base = " +
                                 p.n_base.str() + " for method " +
                                 std::string(to_string(method)));
  }
  if (n > kMaxEdges) throw Error(Errc::bad_n, "n is too large to materialise");
  EquilateralWalk walk = assemble_odd_walk(p);
  const auto extensions = (n - p.n_base.convert_to<std::int64_t>()) / 2;
  for (std::int64_t e = 0; e < extensions; ++e) walk = extend_by_two(walk);
  return walk;
}

}  // namespace equigon
