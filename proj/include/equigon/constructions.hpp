#pragma once

#include <cstdint>
#include <string_view>

#include "equigon/core_ring.hpp"

namespace equigon {

enum class SolverMethod { closed_form, euclid };

std::string_view to_string(SolverMethod method) noexcept;
// Accepts "closed-form" / "closed_form" and "euclid".
SolverMethod parse_solver_method(std::string_view text);

// The five norm-form integers shared by both solvers. With
// c = (m^2 + 5m + 4) / 2 the vectors (c, 0), (a1, +-b1), (a2, +-b2) all have
// squared length c^2.
struct BaseParams {
  Integer c;
  Integer a1;
  Integer b1;
  Integer a2;
  Integer b2;

  friend bool operator==(const BaseParams&, const BaseParams&) = default;
};

// m = 4k - 1, k = 4k' + i with i in {-1, 0, 1, 2}, chi = k' - i (k - 1) / 2.
struct ClosedFormDecomposition {
  Integer k;
  Integer k_prime;
  int i = 0;
  Integer chi;

  friend bool operator==(const ClosedFormDecomposition&,
                         const ClosedFormDecomposition&) = default;
};

// A solution of a1 t1 + a2 t2 = -c / 2.
struct TPair {
  Integer t1;
  Integer t2;

  friend bool operator==(const TPair&, const TPair&) = default;
};

struct ClosedFormSolution {
  TPair t;
  ClosedFormDecomposition decomp;
};

struct ConstructionParams {
  Integer m;
  Integer c;
  Integer a1;
  Integer b1;
  Integer a2;
  Integer b2;
  Integer t1;
  Integer t2;
  Integer n_base;  // 1 + 2 (|t1| + |t2|)

  friend bool operator==(const ConstructionParams&,
                         const ConstructionParams&) = default;
};

struct ExtendedGcd {
  Integer gcd;
  Integer x;
  Integer y;
};

// Bezout coefficients: a x + b y = gcd(a, b) >= 0. Either argument may be
// negative or zero.
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

// Throws Error(bad_modulus) unless m >= 3, m = 3 (mod 4) and m square-free.
void require_odd_gon_modulus(const Integer& m);

BaseParams base_params(const Integer& m);

ClosedFormDecomposition closed_form_decomposition(const Integer& m);
ClosedFormSolution solve_t_closed_form(const Integer& m);

// Minimises |t1| + |t2| over the whole solution family, ties to smaller t1.
TPair solve_t_euclid(const Integer& m);

ConstructionParams construction_params(const Integer& m, SolverMethod method);

// Empty string if all invariants hold, otherwise a description of the first
// violated one.
std::string params_violation(const ConstructionParams& params);

// Throws Error(invalid_params) if params_violation is non-empty.
EquilateralWalk assemble_odd_walk(const ConstructionParams& params);

// Parallelogram with long sides of n/2 - 1 copies of (1, 1).
EquilateralWalk even_ngon(const Integer& m, std::int64_t n);

// Inserts u and -u, u the first edge, then re-sorts canonically.
EquilateralWalk extend_by_two(const EquilateralWalk& walk);

EquilateralWalk ngon(const Integer& m, std::int64_t n,
                     SolverMethod method = SolverMethod::closed_form);

}  // namespace equigon
