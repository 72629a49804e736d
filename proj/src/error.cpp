#include "equigon/error.hpp"

namespace equigon {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::walk_too_short: return "WalkTooShort";
    case Errc::zero_edge: return "ZeroEdge";
    case Errc::not_closed: return "NotClosed";
    case Errc::bad_modulus: return "BadModulus";
    case Errc::bad_n: return "BadN";
    case Errc::invalid_params: return "InvalidParams";
    case Errc::invalid_walk: return "InvalidWalk";
    case Errc::bad_input: return "BadInput";
    case Errc::budget_exhausted: return "BudgetExhausted";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

}  // namespace equigon
