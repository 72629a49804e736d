#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace equigon {

// Expression templates off: values, not lazy expressions, flow through auto.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

inline int sign(const Integer& x) { return x.sign(); }

inline Integer abs(const Integer& x) { return boost::multiprecision::abs(x); }

// Division rounding toward negative infinity (cpp_int truncates toward zero).
Integer floor_div(const Integer& num, const Integer& den);
Integer ceil_div(const Integer& num, const Integer& den);

// Strict decimal parse: optional leading '-', then digits only.
std::optional<Integer> parse_integer(std::string_view text);

inline std::string to_string(const Integer& x) { return x.str(); }

std::optional<std::int64_t> to_int64(const Integer& x);

}  // namespace equigon
