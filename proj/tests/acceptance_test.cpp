// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if any
// criterion fails.
//
// Usage: acceptance_test [path-to-equigon-cli]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <sys/wait.h>

#include "equigon/cli.hpp"
#include "equigon/constructions.hpp"
#include "equigon/io.hpp"
#include "equigon/number_theory.hpp"
#include "equigon/search.hpp"
#include "oracles.hpp"

using namespace equigon;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

// Runs one criterion and prints its line. A limit of 0 means untimed.
void criterion(const std::string& name, double limit_seconds,
               const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome.fail(std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && seconds >= limit_seconds) {
    outcome.fail("took " + std::to_string(seconds) + " s, limit " +
                 std::to_string(limit_seconds) + " s");
  }
  if (!outcome.pass) ++failures;
  std::printf("%s  %-42s %8.3f s%s%s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(), seconds,
              outcome.detail.empty() ? "" : "  ", outcome.detail.c_str());
  std::fflush(stdout);
}

std::string str(const Integer& x) { return x.str(); }

std::int64_t small(const Integer& x) { return x.convert_to<std::int64_t>(); }

// ---------------------------------------------------------------------------

Outcome m7_regression() {
  Outcome out;
  const BaseParams base = base_params(7);
  if (!(base == BaseParams{44, 37, 9, 33, 11})) {
    out.fail("base params " + str(base.c) + "," + str(base.a1) + "," + str(base.b1) + "," +
             str(base.a2) + "," + str(base.b2));
  }
  const TPair t = solve_t_closed_form(7).t;
  if (t.t1 != 11 || t.t2 != -13) out.fail("t = (" + str(t.t1) + ", " + str(t.t2) + ")");
  const auto params = construction_params(7, SolverMethod::closed_form);
  if (params.n_base != 49) out.fail("n_base " + str(params.n_base));

  const auto walk = ngon(7, 49);
  std::map<LatticeVector, int> counts;
  for (const auto& e : walk.edges) ++counts[e];
  const std::map<LatticeVector, int> expected = {
      {{44, 0}, 1}, {{37, 9}, 11}, {{37, -9}, 11}, {{-33, 11}, 13}, {{-33, -11}, 13}};
  if (counts != expected) out.fail("edge multiplicities differ from 1/11/11/13/13");
  if (!verify(walk).ok()) out.fail("m=7 base walk does not verify");
  out.detail = out.pass ? "c=44 a1=37 b1=9 a2=33 b2=11 t=(11,-13) n_base=49" : out.detail;
  return out;
}

Outcome identity_sweep() {
  Outcome out;
  std::size_t checked = 0;
  for (std::int64_t m = 3; m <= 50'000; m += 4) {
    if (!oracle::brute_square_free(m)) continue;
    const BaseParams b = base_params(m);
    const Integer c2 = b.c * b.c;
    const std::string at = "m=" + std::to_string(m);
    if (b.a1 * b.a1 + m * b.b1 * b.b1 != c2) out.fail(at + ": a1^2 + m b1^2 != c^2");
    if (b.a2 * b.a2 + m * b.b2 * b.b2 != c2) out.fail(at + ": a2^2 + m b2^2 != c^2");
    if (b.c % 2 != 0) out.fail(at + ": c odd");
    if (std::gcd(small(b.a1), small(b.a2)) != 1) out.fail(at + ": gcd(a1, a2) != 1");
    for (const auto method : {SolverMethod::closed_form, SolverMethod::euclid}) {
      const auto p = construction_params(m, method);
      if (-p.c != 2 * (p.a1 * p.t1 + p.a2 * p.t2)) {
        out.fail(at + ": linear identity fails for " + std::string(to_string(method)));
      }
      const std::string violation = params_violation(p);
      if (!violation.empty()) out.fail(at + ": " + violation);
    }
    ++checked;
  }
  if (out.pass) out.detail = std::to_string(checked) + " moduli, both solvers";
  return out;
}

Outcome construction_validity() {
  Outcome out;
  std::size_t walks = 0;
  for (const std::int64_t m : {3, 7, 11, 19, 23}) {
    const auto params = construction_params(m, SolverMethod::closed_form);
    const std::int64_t n_base = small(params.n_base);
    const Integer c2 = params.c * params.c;
    auto check = [&](std::int64_t n, const Integer& side_sq) {
      const auto walk = ngon(m, n);
      const auto report = verify(walk);
      const std::string at = "m=" + std::to_string(m) + " n=" + std::to_string(n);
      if (walk.size() != static_cast<std::size_t>(n)) out.fail(at + ": wrong edge count");
      if (!report.is_closed) out.fail(at + ": not closed");
      if (!report.is_equilateral) out.fail(at + ": not equilateral");
      if (report.side_sq != side_sq) out.fail(at + ": unexpected side_sq");
      ++walks;
    };
    for (std::int64_t n = 4; n <= 2000; n += 2) check(n, Integer(m + 1));
    for (std::int64_t n = n_base; n <= n_base + 200; n += 2) check(n, c2);
  }
  if (out.pass) out.detail = std::to_string(walks) + " walks";
  return out;
}

Outcome oracle_agreement() {
  Outcome out;
  const auto outcome = min_odd_ngon(3, SearchBounds{9, 16, 1'000'000});
  if (outcome.status != SearchStatus::found) return out.fail("search did not find"), out;
  if (outcome.n != 3) out.fail("n = " + std::to_string(outcome.n.value_or(-1)));
  if (outcome.side_sq != Integer(4)) out.fail("side_sq differs from 4");
  if (!outcome.walk || !verify(*outcome.walk).ok()) out.fail("found walk does not verify");
  if (construction_params(3, SolverMethod::closed_form).n_base != 3) out.fail("n_base(3) != 3");
  if (out.pass) out.detail = "search n=3 s=4; closed form n_base=3";
  return out;
}

Outcome euclid_consistency() {
  Outcome out;
  const std::map<std::int64_t, std::pair<std::int64_t, std::int64_t>> expected = {
      {3, {0, -1}}, {7, {11, -13}}, {11, {-30, 31}}};
  for (const auto& [m, pair] : expected) {
    const std::string at = "m=" + std::to_string(m);
    const BaseParams b = base_params(m);
    const auto scan = oracle::family_scan(small(b.a1), small(b.a2), -small(b.c) / 2, 10'000);
    if (!scan || scan->t1 != pair.first || scan->t2 != pair.second) {
      out.fail(at + ": family scan disagrees with the expected pair");
      continue;
    }
    const TPair closed = solve_t_closed_form(m).t;
    const TPair euclid = solve_t_euclid(m);
    if (closed.t1 != pair.first || closed.t2 != pair.second) out.fail(at + ": closed form");
    if (euclid.t1 != pair.first || euclid.t2 != pair.second) out.fail(at + ": euclid");
  }
  if (out.pass) out.detail = "(0,-1) (11,-13) (-30,31)";
  return out;
}

Outcome necessary_condition() {
  Outcome out;
  if (check_necessary_condition(231, 7)) out.fail("(231, 7) should fail");
  if (!check_necessary_condition(231, 11)) out.fail("(231, 11) should hold");
  if (check_necessary_condition(7, 5)) out.fail("(7, 5) should fail");

  const SearchBounds bounds{5, 1'000'000, 100'000'000};
  std::ostringstream detail;
  for (const bool prime_bound : {true, false}) {
    SearchOptions options;
    options.threads = std::max(1u, std::thread::hardware_concurrency());
    options.apply_prime_bound = prime_bound;
    const auto outcome = min_odd_ngon(7, bounds, options);
    const std::string label = prime_bound ? "with prime bound" : "from n=3";
    if (outcome.status != SearchStatus::not_found_within_bounds) out.fail(label + ": found a walk");
    if (!outcome.truncated.empty()) {
      out.fail(label + ": " + std::to_string(outcome.truncated.size()) + " cells undecided");
    }
    detail << (prime_bound ? "" : "; ") << label << " " << outcome.nodes_explored << " nodes";
  }
  if (out.pass) out.detail = detail.str();
  return out;
}

// Random walk for the round-trip check: m square-free up to 10^4, n up to 10^3.
EquilateralWalk random_walk(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> modulus(2, 10'000);
  for (;;) {
    const std::int64_t m = modulus(rng);
    if (!oracle::brute_square_free(m)) continue;
    std::int64_t n;
    if (m % 4 == 3 && rng() % 2 == 0) {
      const std::int64_t n_base = small(construction_params(m, SolverMethod::closed_form).n_base);
      if (n_base > 1000) continue;
      std::uniform_int_distribution<std::int64_t> extra(0, (1000 - n_base) / 2);
      n = n_base + 2 * extra(rng);
    } else {
      std::uniform_int_distribution<std::int64_t> half(2, 500);
      n = 2 * half(rng);
    }
    EquilateralWalk walk = ngon(m, n);
    std::shuffle(walk.edges.begin(), walk.edges.end(), rng);
    if (rng() % 5 == 0) {
      // Scale far past 2^53 so the string encoding is exercised.
      const Integer k = (Integer(rng()) << 64) + rng() + 1;
      for (auto& e : walk.edges) e = k * e;
    }
    return walk;
  }
}

int run_pipeline(const std::string& cli, std::int64_t m, std::int64_t n,
                 const std::filesystem::path& file) {
  if (!cli.empty()) {
    const std::string command = "\"" + cli + "\" construct --m " + std::to_string(m) + " --n " +
                                std::to_string(n) + " | \"" + cli +
                                "\" verify --in - > \"" + file.string() + "\"";
    const int status = std::system(command.c_str());
    return status == -1 ? -1 : WEXITSTATUS(status);
  }
  std::istringstream none;
  std::ostringstream built, sink, err;
  const std::vector<std::string> construct = {"construct", "--m", std::to_string(m), "--n",
                                              std::to_string(n)};
  int code = run_cli(construct, none, built, err);
  if (code != kExitOk) return code;
  std::istringstream piped(built.str());
  const std::vector<std::string> verify_args = {"verify", "--in", "-"};
  return run_cli(verify_args, piped, sink, err);
}

Outcome format_round_trip(const std::string& cli) {
  Outcome out;
  std::mt19937_64 rng(20240607);
  std::size_t big = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto walk = random_walk(rng);
    const std::string first = serialize_json(walk);
    const auto doc = parse_json(first);
    const std::string second = serialize_json(doc);
    if (first != second || !(doc.walk == walk)) {
      out.fail("walk " + std::to_string(i) + " (m=" + str(walk.params.m()) + ", n=" +
               std::to_string(walk.size()) + ") changed on round trip");
    }
    if (first.find("\"big_integers\": true") != std::string::npos) ++big;
  }

  const auto scratch = std::filesystem::temp_directory_path() / "equigon_acceptance_verify.json";
  std::uniform_int_distribution<std::int64_t> modulus(2, 10'000);
  int pipelines = 0;
  while (pipelines < 100) {
    const std::int64_t m = modulus(rng);
    if (!oracle::brute_square_free(m)) continue;
    std::int64_t n;
    if (m % 4 == 3 && pipelines % 2 == 0) {
      const std::int64_t n_base = small(construction_params(m, SolverMethod::closed_form).n_base);
      if (n_base > 1000) continue;
      n = n_base + 2 * static_cast<std::int64_t>(rng() % 20);
    } else {
      n = 4 + 2 * static_cast<std::int64_t>(rng() % 499);
    }
    const int code = run_pipeline(cli, m, n, scratch);
    if (code != 0) {
      out.fail("pipeline m=" + std::to_string(m) + " n=" + std::to_string(n) + " exited " +
               std::to_string(code));
    }
    ++pipelines;
  }
  std::filesystem::remove(scratch);
  if (out.pass) {
    out.detail = "1000 walks (" + std::to_string(big) + " with big integers), 100 pipelines" +
                 (cli.empty() ? " in-process" : " via CLI");
  }
  return out;
}

// Simplicity of the base odd walks is reported, not asserted.
void report_simplicity() {
  for (const std::int64_t m : {3, 7, 11, 19, 23}) {
    const auto params = construction_params(m, SolverMethod::closed_form);
    const auto walk = ngon(m, small(params.n_base));
    std::printf("INFO  base walk m=%lld n=%s is_simple=%s\n", static_cast<long long>(m),
                str(params.n_base).c_str(), is_simple(walk) ? "true" : "false");
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  if (!cli.empty() && !std::filesystem::exists(cli)) {
    std::fprintf(stderr, "CLI binary '%s' not found\n", cli.c_str());
    return 1;
  }

  criterion("reference values (m=7)", 1.0, m7_regression);
  criterion("identity sweep (m <= 50000)", 60.0, identity_sweep);
  criterion("construction validity", 30.0, construction_validity);
  criterion("oracle agreement (m=3)", 1.0, oracle_agreement);
  criterion("euclid vs closed form", 0.0, euclid_consistency);
  criterion("necessary condition", 120.0, necessary_condition);
  criterion("format round-trip", 0.0, [&] { return format_round_trip(cli); });
  report_simplicity();

  std::printf("%d of 7 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
