#include "equigon/number_theory.hpp"

#include <bit>

#include "equigon/error.hpp"

namespace equigon {

std::uint64_t isqrt(std::uint64_t n) {
  if (n < 2) return n;
  // Start above the root: 2^ceil(bits/2).
  const int bits = 64 - std::countl_zero(n);
  std::uint64_t x = std::uint64_t{1} << ((bits + 1) / 2);
  for (;;) {
    const std::uint64_t y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

Integer isqrt(const Integer& n) {
  if (n.sign() < 0) throw Error(Errc::bad_input, "isqrt of a negative number");
  if (n < 2) return n;
  const auto bits = boost::multiprecision::msb(n) + 1;
  Integer x = Integer(1) << ((bits + 1) / 2);
  for (;;) {
    Integer y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

bool is_perfect_square(const Integer& n) {
  if (n.sign() < 0) return false;
  const Integer r = isqrt(n);
  return r * r == n;
}

namespace {

template <class Z>
bool square_free_by_trial(Z m) {
  for (Z p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return false;
  }
  return true;
}

template <class Z>
Z largest_prime_by_trial(Z m) {
  Z largest = 1;
  for (Z p = 2; p * p <= m; ++p) {
    while (m % p == 0) {
      largest = p;
      m /= p;
    }
  }
  return m > 1 ? m : largest;
}

}  // namespace

bool is_square_free(const Integer& m) {
  if (m < 1) throw Error(Errc::bad_input, "is_square_free requires m >= 1");
  if (auto small = to_int64(m)) return square_free_by_trial<std::int64_t>(*small);
  return square_free_by_trial<Integer>(m);
}

Integer largest_prime_factor(const Integer& m) {
  if (m < 2) {
    throw Error(Errc::bad_input,
                "largest_prime_factor requires m >= 2, got " + m.str());
  }
  if (auto small = to_int64(m)) return largest_prime_by_trial<std::int64_t>(*small);
  return largest_prime_by_trial<Integer>(m);
}

bool check_necessary_condition(const Integer& m, std::int64_t n) {
  if (m < 2 || !is_square_free(m)) {
    throw Error(Errc::bad_input, "m must be square-free and >= 2, got " + m.str());
  }
  if (n < 3 || n % 2 == 0) {
    throw Error(Errc::bad_input,
                "n must be odd and >= 3, got " + std::to_string(n));
  }
  return Integer(n) >= largest_prime_factor(m);
}

}  // namespace equigon
