#include "equigon/integer.hpp"

#include <limits>

namespace equigon {

Integer floor_div(const Integer& num, const Integer& den) {
  Integer q;
  Integer r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (!r.is_zero() && (r.sign() != den.sign())) --q;
  return q;
}

Integer ceil_div(const Integer& num, const Integer& den) {
  return -floor_div(-num, den);
}

std::optional<Integer> parse_integer(std::string_view text) {
  std::size_t pos = 0;
  if (!text.empty() && text[0] == '-') pos = 1;
  if (pos == text.size()) return std::nullopt;
  for (std::size_t i = pos; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return std::nullopt;
  }
  return Integer(std::string(text));
}

std::optional<std::int64_t> to_int64(const Integer& x) {
  static const Integer lo = std::numeric_limits<std::int64_t>::min();
  static const Integer hi = std::numeric_limits<std::int64_t>::max();
  if (x < lo || x > hi) return std::nullopt;
  return x.convert_to<std::int64_t>();
}

}  // namespace equigon
