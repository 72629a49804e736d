#pragma once

#include <map>
#include <string>
#include <string_view>

#include "equigon/core_ring.hpp"
#include "equigon/search.hpp"

namespace equigon {

inline constexpr int kFormatVersion = 1;

using Metadata = std::map<std::string, std::string>;

struct WalkDocument {
  int format_version = kFormatVersion;
  EquilateralWalk walk;
  Metadata metadata;  // omitted from the document when empty

  friend bool operator==(const WalkDocument&, const WalkDocument&) = default;
};

// Integers with magnitude above 2^53 are written as decimal strings and the
// document gets "big_integers": true.
std::string serialize_json(const WalkDocument& doc);
std::string serialize_json(const EquilateralWalk& walk,
                           const Metadata& metadata = {});

// Throws Error(parse_error) on malformed text and Error(bad_modulus) if m is
// not a valid lattice parameter.
WalkDocument parse_json(std::string_view text);

// "# m=M", then the header "a,b", then one pair per line.
std::string serialize_csv(const EquilateralWalk& walk);
EquilateralWalk parse_csv(std::string_view text);

// Reads either format: CSV when the first non-blank character is '#'.
WalkDocument parse_walk(std::string_view text);

// Vertices drawn at (a * scale, -b * sqrt(m) * scale); the exact JSON
// document is embedded in a comment. Throws Error(not_closed).
std::string serialize_svg(const EquilateralWalk& walk, double scale = 10.0,
                          const Metadata& metadata = {});

std::string report_to_json(const VerificationReport& report);
std::string outcome_to_json(const SearchOutcome& outcome);

}  // namespace equigon
