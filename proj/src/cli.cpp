#include "equigon/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "equigon/constructions.hpp"
#include "equigon/io.hpp"
#include "equigon/number_theory.hpp"
#include "equigon/search.hpp"

namespace equigon {

namespace {

Integer integer_arg(const std::string& text, std::string_view flag) {
  auto value = parse_integer(text);
  if (!value) {
    throw Error(Errc::bad_input, std::string(flag) + " expects an integer, got '" + text + "'");
  }
  return *value;
}

unsigned threads_from_env() {
  const char* raw = std::getenv("EQUIGON_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  auto value = parse_integer(raw);
  if (!value || *value < 1 || *value > 4096) {
    throw Error(Errc::bad_input, "EQUIGON_THREADS must be a positive integer");
  }
  return value->convert_to<unsigned>();
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::bad_input, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::bad_input, "cannot write '" + path + "'");
  file << text;
}

struct ConstructArgs {
  std::string m;
  std::int64_t n = 0;
  std::string method = "closed-form";
  std::string format = "json";
  std::string out;
  double scale = 10.0;
};

int run_construct(const ConstructArgs& args, std::ostream& out) {
  const Integer m = integer_arg(args.m, "--m");
  const SolverMethod method = parse_solver_method(args.method);
  const EquilateralWalk walk = ngon(m, args.n, method);

  Metadata metadata;
  if (args.n % 2 == 0) {
    metadata["method"] = "parallelogram";
  } else {
    metadata["method"] = std::string(to_string(method));
    metadata["n_base"] = construction_params(m, method).n_base.str();
  }
  metadata["side_sq"] = norm_sq(walk.edges.front(), walk.params).str();

  std::string text;
  if (args.format == "json") {
    text = serialize_json(walk, metadata);
  } else if (args.format == "csv") {
    text = serialize_csv(walk);
  } else if (args.format == "svg") {
    text = serialize_svg(walk, args.scale, metadata);
  } else {
    throw Error(Errc::bad_input, "unknown format '" + args.format + "'");
  }
  write_output(args.out, text, out);
  return kExitOk;
}

int run_params(const std::string& m_text, const std::string& method_text, std::ostream& out) {
  const Integer m = integer_arg(m_text, "--m");
  const SolverMethod method = parse_solver_method(method_text);
  const ConstructionParams p = construction_params(m, method);
  out << "m=" << p.m << " method=" << to_string(method) << " c=" << p.c << " a1=" << p.a1
      << " b1=" << p.b1 << " a2=" << p.a2 << " b2=" << p.b2 << " t1=" << p.t1
      << " t2=" << p.t2 << " n_base=" << p.n_base << "\n";
  if (method == SolverMethod::closed_form) {
    const auto d = closed_form_decomposition(m);
    out << "k=" << d.k << " k'=" << d.k_prime << " i=" << d.i << " chi=" << d.chi << "\n";
  }
  return kExitOk;
}

int run_verify(const std::string& path, bool simplicity, std::istream& in, std::ostream& out,
               std::ostream& err) {
  const WalkDocument doc = parse_walk(read_input(path, in));
  VerificationReport report;
  try {
    report = verify(doc.walk, simplicity);
  } catch (const Error& e) {
    if (e.code() != Errc::walk_too_short && e.code() != Errc::zero_edge) throw;
    err << "equigon: verification failed: " << e.what() << "\n";
    return kExitFailed;
  }
  out << report_to_json(report);
  return report.ok() ? kExitOk : kExitFailed;
}

struct SearchArgs {
  std::string m;
  std::int64_t max_n = 0;
  std::int64_t max_s = 0;
  std::uint64_t budget = 1'000'000;
  bool no_prime_bound = false;
};

int run_search(const SearchArgs& args, std::ostream& out) {
  const Integer m = integer_arg(args.m, "--m");
  SearchOptions options;
  options.threads = threads_from_env();
  options.apply_prime_bound = !args.no_prime_bound;
  const SearchOutcome outcome =
      min_odd_ngon(m, SearchBounds{args.max_n, args.max_s, args.budget}, options);
  out << outcome_to_json(outcome);
  return outcome.status == SearchStatus::found ? kExitOk : kExitNotFound;
}

int run_check(const std::string& m_text, std::int64_t n, std::ostream& out) {
  const Integer m = integer_arg(m_text, "--m");
  const bool holds = check_necessary_condition(m, n);
  const Integer p = largest_prime_factor(m);
  out << (holds ? "holds" : "fails") << ": n=" << n << (holds ? " >= " : " < ")
      << "largest prime factor " << p << " of m=" << m << "\n";
  return holds ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Equilateral polygons in the rectangular lattices L[(1,0),(0,sqrt m)]", "equigon"};
  app.require_subcommand(1);

  ConstructArgs construct;
  auto* cmd_construct = app.add_subcommand("construct", "Build an equilateral n-gon");
  cmd_construct->add_option("--m", construct.m, "Lattice parameter")->required();
  cmd_construct->add_option("--n", construct.n, "Number of edges")->required();
  cmd_construct->add_option("--method", construct.method, "closed-form or euclid");
  cmd_construct->add_option("--format", construct.format, "json, csv or svg");
  cmd_construct->add_option("--out", construct.out, "Output path (default stdout)");
  cmd_construct->add_option("--scale", construct.scale, "SVG units per lattice unit");

  std::string params_m;
  std::string params_method = "closed-form";
  auto* cmd_params = app.add_subcommand("params", "Print the construction parameters");
  cmd_params->add_option("--m", params_m, "Lattice parameter")->required();
  cmd_params->add_option("--method", params_method, "closed-form or euclid");

  std::string verify_in;
  bool verify_simplicity = false;
  auto* cmd_verify = app.add_subcommand("verify", "Verify a walk file (JSON or CSV)");
  cmd_verify->add_option("--in", verify_in, "Input path, '-' for stdin")->required();
  cmd_verify->add_flag("--simplicity", verify_simplicity, "Also test for self-intersection");

  SearchArgs search;
  auto* cmd_search = app.add_subcommand("search", "Brute-force the smallest odd n");
  cmd_search->add_option("--m", search.m, "Lattice parameter")->required();
  cmd_search->add_option("--max-n", search.max_n, "Largest n tried")->required();
  cmd_search->add_option("--max-s", search.max_s, "Largest squared side tried")->required();
  cmd_search->add_option("--budget", search.budget, "DFS node cap per (n, s) cell");
  cmd_search->add_flag("--no-prime-bound", search.no_prime_bound,
                       "Start at n = 3 instead of the largest prime factor of m");

  std::string check_m;
  std::int64_t check_n = 0;
  auto* cmd_check = app.add_subcommand("check", "Test n against the prime-factor bound");
  cmd_check->add_option("--m", check_m, "Lattice parameter")->required();
  cmd_check->add_option("--n", check_n, "Odd polygon size")->required();

  try {
    // CLI11 consumes the vector from the back.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "equigon: " << e.what() << "\n";
    return kExitMalformed;
  }

  try {
    if (cmd_construct->parsed()) return run_construct(construct, out);
    if (cmd_params->parsed()) return run_params(params_m, params_method, out);
    if (cmd_verify->parsed()) return run_verify(verify_in, verify_simplicity, in, out, err);
    if (cmd_search->parsed()) return run_search(search, out);
    if (cmd_check->parsed()) return run_check(check_m, check_n, out);
  } catch (const Error& e) {
    err << "equigon: " << to_string(e.code()) << ": " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::exception& e) {
    err << "equigon: " << e.what() << "\n";
    return kExitMalformed;
  }
  return kExitMalformed;
}

}  // namespace equigon
