#include "equigon/io.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace equigon {

namespace {

using nlohmann::ordered_json;

const Integer& json_safe_limit() {
  static const Integer limit = Integer(1) << 53;
  return limit;
}

bool fits_json_number(const Integer& x) { return abs(x) <= json_safe_limit(); }

// Decimal digits, quoted when a double-based reader could not hold it.
std::string integer_token(const Integer& x) {
  return fits_json_number(x) ? x.str() : "\"" + x.str() + "\"";
}

ordered_json integer_json(const Integer& x) {
  if (fits_json_number(x)) return x.convert_to<std::int64_t>();
  return x.str();
}

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(Errc::parse_error, what);
}

Integer integer_from_json(const nlohmann::json& v, std::string_view field) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(v.get<std::uint64_t>());
    return Integer(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    if (auto parsed = parse_integer(v.get<std::string>())) return *parsed;
  }
  parse_fail("field '" + std::string(field) + "' is not an integer");
}

bool document_needs_strings(const WalkDocument& doc) {
  if (!fits_json_number(doc.walk.params.m())) return true;
  for (const auto& e : doc.walk.edges) {
    if (!fits_json_number(e.a) || !fits_json_number(e.b)) return true;
  }
  return false;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

std::string serialize_json(const WalkDocument& doc) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"format_version\": " << doc.format_version << ",\n";
  out << "  \"m\": " << integer_token(doc.walk.params.m()) << ",\n";
  if (document_needs_strings(doc)) out << "  \"big_integers\": true,\n";
  out << "  \"edges\": [";
  for (std::size_t i = 0; i < doc.walk.edges.size(); ++i) {
    const auto& e = doc.walk.edges[i];
    out << (i == 0 ? "\n" : ",\n") << "    [" << integer_token(e.a) << ", "
        << integer_token(e.b) << "]";
  }
  out << (doc.walk.edges.empty() ? "]" : "\n  ]");
  if (!doc.metadata.empty()) {
    out << ",\n  \"metadata\": {";
    bool first = true;
    for (const auto& [key, value] : doc.metadata) {
      out << (first ? "\n" : ",\n") << "    " << nlohmann::json(key).dump() << ": "
          << nlohmann::json(value).dump();
      first = false;
    }
    out << "\n  }";
  }
  out << "\n}\n";
  return out.str();
}

std::string serialize_json(const EquilateralWalk& walk, const Metadata& metadata) {
  return serialize_json(WalkDocument{kFormatVersion, walk, metadata});
}

WalkDocument parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    parse_fail(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) parse_fail("walk document must be a JSON object");

  if (!j.contains("format_version") || !j["format_version"].is_number_integer()) {
    parse_fail("missing integer field 'format_version'");
  }
  const int version = j["format_version"].get<int>();
  if (version != kFormatVersion) {
    parse_fail("unsupported format_version " + std::to_string(version));
  }
  if (!j.contains("m")) parse_fail("missing field 'm'");
  if (!j.contains("edges") || !j["edges"].is_array()) parse_fail("missing array field 'edges'");

  std::vector<LatticeVector> edges;
  edges.reserve(j["edges"].size());
  for (const auto& pair : j["edges"]) {
    if (!pair.is_array() || pair.size() != 2) parse_fail("each edge must be an [a, b] pair");
    edges.push_back({integer_from_json(pair[0], "edges"), integer_from_json(pair[1], "edges")});
  }

  Metadata metadata;
  if (j.contains("metadata")) {
    if (!j["metadata"].is_object()) parse_fail("'metadata' must be an object");
    for (const auto& [key, value] : j["metadata"].items()) {
      if (!value.is_string()) parse_fail("metadata value '" + key + "' must be a string");
      metadata.emplace(key, value.get<std::string>());
    }
  }

  return WalkDocument{version,
                      EquilateralWalk{LatticeParams(integer_from_json(j["m"], "m")),
                                      std::move(edges)},
                      std::move(metadata)};
}

std::string serialize_csv(const EquilateralWalk& walk) {
  std::ostringstream out;
  out << "# m=" << walk.params.m() << "\n";
  out << "a,b\n";
  for (const auto& e : walk.edges) out << e.a << "," << e.b << "\n";
  return out.str();
}

EquilateralWalk parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::optional<Integer> m;
  bool header = false;
  std::vector<LatticeVector> edges;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const std::string where = "CSV line " + std::to_string(line_no) + ": ";
    if (!m) {
      constexpr std::string_view prefix = "# m=";
      if (!line.starts_with(prefix)) parse_fail(where + "expected '# m=M'");
      m = parse_integer(trim(std::string_view(line).substr(prefix.size())));
      if (!m) parse_fail(where + "m is not an integer");
      continue;
    }
    if (!header) {
      if (line != "a,b") parse_fail(where + "expected header 'a,b'");
      header = true;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) parse_fail(where + "expected 'a,b'");
    auto a = parse_integer(trim(std::string_view(line).substr(0, comma)));
    auto b = parse_integer(trim(std::string_view(line).substr(comma + 1)));
    if (!a || !b) parse_fail(where + "edge coordinates must be integers");
    edges.push_back({std::move(*a), std::move(*b)});
  }
  if (!m || !header) parse_fail("CSV walk needs '# m=M' and the header 'a,b'");
  return EquilateralWalk{LatticeParams(std::move(*m)), std::move(edges)};
}

WalkDocument parse_walk(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '#') {
    return WalkDocument{kFormatVersion, parse_csv(text), {}};
  }
  return parse_json(text);
}

std::string serialize_svg(const EquilateralWalk& walk, double scale, const Metadata& metadata) {
  if (!edge_sum(walk.edges).is_zero()) {
    throw Error(Errc::not_closed, "only closed walks can be rendered");
  }
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw Error(Errc::bad_input, "scale must be a positive number");
  }
  const double root_m = std::sqrt(walk.params.m().convert_to<double>());

  auto pts = vertices(walk);
  std::vector<std::pair<double, double>> xy;
  xy.reserve(pts.size());
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (const auto& p : pts) {
    const double x = p.a.convert_to<double>() * scale;
    const double y = -p.b.convert_to<double>() * root_m * scale + 0.0;  // no "-0"
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
    xy.emplace_back(x, y);
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1.0});
  const double margin = 0.05 * span;
  const double dot = 0.006 * span;

  std::ostringstream out;
  out << std::setprecision(10);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << min_x - margin << " "
      << min_y - margin << " " << (max_x - min_x) + 2 * margin << " "
      << (max_y - min_y) + 2 * margin << "\">\n";
  // "--" may not appear in an XML comment. Outside strings JSON never has it;
  // inside strings the second dash becomes an escape.
  std::string embedded = serialize_json(walk, metadata);
  for (auto pos = embedded.find("--"); pos != std::string::npos; pos = embedded.find("--", pos)) {
    embedded.replace(pos + 1, 1, "\\u002d");
  }
  out << "<!-- exact walk document\n" << embedded << "-->\n";
  out << "<polyline fill=\"none\" stroke=\"red\" stroke-width=\"" << dot / 2
      << "\" points=\"";
  for (std::size_t i = 0; i < xy.size(); ++i) {
    out << (i ? " " : "") << xy[i].first << "," << xy[i].second;
  }
  out << "\"/>\n";
  // One dot per vertex; the final point repeats the origin.
  for (std::size_t i = 0; i + 1 < xy.size(); ++i) {
    out << "<circle cx=\"" << xy[i].first << "\" cy=\"" << xy[i].second << "\" r=\"" << dot
        << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string report_to_json(const VerificationReport& report) {
  ordered_json j;
  j["n"] = report.n;
  j["is_closed"] = report.is_closed;
  j["is_equilateral"] = report.is_equilateral;
  if (report.side_sq) j["side_sq"] = integer_json(*report.side_sq);
  if (report.is_simple) j["is_simple"] = *report.is_simple;
  return j.dump(2) + "\n";
}

std::string outcome_to_json(const SearchOutcome& outcome) {
  ordered_json j;
  j["status"] = outcome.status == SearchStatus::found ? "FOUND" : "NOT_FOUND_WITHIN_BOUNDS";
  if (outcome.n) j["n"] = *outcome.n;
  if (outcome.side_sq) j["side_sq"] = integer_json(*outcome.side_sq);
  j["nodes_explored"] = outcome.nodes_explored;
  j["truncated"] = ordered_json::array();
  std::string text = j.dump(2);
  // Compact cell list, then the walk document in its own layout.
  std::string cells = "[";
  for (std::size_t i = 0; i < outcome.truncated.size(); ++i) {
    const auto& cell = outcome.truncated[i];
    cells += (i ? ", [" : "[") + std::to_string(cell.n) + ", " + std::to_string(cell.s) + "]";
  }
  cells += "]";
  text.replace(text.rfind("[]"), 2, cells);
  if (outcome.walk) {
    std::string doc = serialize_json(*outcome.walk);
    doc.pop_back();
    std::string indented;
    for (char ch : doc) {
      indented += ch;
      if (ch == '\n') indented += "  ";
    }
    text.pop_back();  // closing brace
    text.pop_back();  // newline before it
    text += ",\n  \"walk\": " + indented + "\n}";
  }
  return text + "\n";
}

}  // namespace equigon
