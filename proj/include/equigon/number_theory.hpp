#pragma once

#include <cstdint>

#include "equigon/integer.hpp"

namespace equigon {

// Floor square root by Newton iteration, exact for any size. Negative input
// throws Error(bad_input).
Integer isqrt(const Integer& n);
std::uint64_t isqrt(std::uint64_t n);

bool is_perfect_square(const Integer& n);

// Trial division. m >= 1; is_square_free(1) is true.
bool is_square_free(const Integer& m);

// Largest prime dividing m, by trial division up to sqrt(m). m >= 2.
Integer largest_prime_factor(const Integer& m);

// Iino-Sakiyama bound for convex equilateral odd-gons in the rectangular
// lattice: n must be at least every prime dividing m. Requires m >= 2
// square-free and n >= 3 odd.
bool check_necessary_condition(const Integer& m, std::int64_t n);

}  // namespace equigon
