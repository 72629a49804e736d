#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace equigon {

enum class Errc {
  walk_too_short,
  zero_edge,
  not_closed,
  bad_modulus,
  bad_n,
  invalid_params,
  invalid_walk,
  bad_input,
  budget_exhausted,
  parse_error,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// callers (notably the CLI) can map it to a stable exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace equigon
