// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "rodier/levi.hpp"
#include "rodier/verify.hpp"
#include "run_command.hpp"

using namespace rodier;
using rodier::testing::quote;
using rodier::testing::read_file;
using rodier::testing::run_command;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

const std::string kTool = RODIER_CLI_PATH;
const std::string kGolden = RODIER_GOLDEN_DIR;

using Clock = std::chrono::steady_clock;
double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void report(const char* id, const Outcome& o, double seconds) {
  std::printf("%s %s  %s (%.2f s)\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str(), seconds);
  std::fflush(stdout);
  failures += !o.pass;
}

void criterion(const char* id, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  report(id, o, since(start));
}

// Runs the CLI with no cache so enumeration cost is included.
std::string decompose(const std::string& spec) {
  const auto r = run_command("env -u RODIER_CACHE_DIR " + quote(kTool) + " decompose " + quote(spec) + " --no-timing");
  if (r.exit_code != 0) throw std::runtime_error("decompose exited with " + std::to_string(r.exit_code));
  return r.out;
}

std::set<std::vector<long long>> primitive_set(const json& list) {
  std::set<std::vector<long long>> out;
  for (const auto& v : list) out.insert(v.get<std::vector<long long>>());
  return out;
}

std::vector<std::string> golden_specs() {
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(kGolden)) {
    const std::string n = e.path().filename().string();
    if (n.size() > 10 && n.ends_with(".spec.json")) out.push_back(n.substr(0, n.size() - 10));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t failures_with_prefix(const VerifyResult& r, const std::string& prefix) {
  std::size_t n = 0;
  for (const auto& f : r.failures) n += f.check.rfind(prefix, 0) == 0;
  return n;
}

std::size_t checks_with_prefix(const VerifyResult& r, const std::string& prefix) {
  std::size_t n = 0;
  for (const auto& [k, v] : r.checks) n += k.rfind(prefix, 0) == 0 ? v : 0;
  return n;
}

std::string first_failure(const VerifyResult& r, const std::string& prefix) {
  for (const auto& f : r.failures) {
    if (f.check.rfind(prefix, 0) == 0) return f.check + " on " + f.type + ": " + f.detail + " " + f.counterexample.dump();
  }
  return "";
}

Outcome family_outcome(const VerifyResult& r, const std::string& prefix, const std::string& what) {
  const std::size_t bad = failures_with_prefix(r, prefix);
  const std::size_t checked = checks_with_prefix(r, prefix);
  std::ostringstream d;
  d << what << ": " << checked << " checks, " << bad << " failures";
  if (bad) d << "; first: " << first_failure(r, prefix);
  return {bad == 0 && checked > 0, d.str()};
}

}  // namespace

int main() {
  criterion("AC1", [] {
    const auto start = Clock::now();
    const auto rs = build_root_system(CartanType::parse("D4"));
    const WeylGroup w = generate_weyl(rs);
    std::vector<int> found;
    for (unsigned mask = 0; mask < 16 && found.empty(); ++mask) {
      std::vector<int> theta;
      for (int j = 0; j < 4; ++j) {
        if (mask & (1u << j)) theta.push_back(j);
      }
      // GL1 x GL3 shape: Phi_theta of type A2, i.e. two adjacent simple roots.
      std::size_t theta_roots = 0;
      const LeviDatum ld = make_levi(rs, theta);
      for (bool b : ld.in_phi_theta) theta_roots += b;
      if (theta_roots != 6) continue;
      const RelativeWeylGroup rwg = relative_weyl_group(ld, w);
      if (rwg.size() == 2 && ld.phi_M0.empty()) found = theta;
    }
    if (found.empty()) return Outcome{false, "no theta of GL1 x GL3 shape with |W_M| = 2 and empty Phi_M^0"};
    const json spec = json::parse(read_file(kGolden + "/d4_gl1_gl3.spec.json"));
    if (spec["levi"].get<std::vector<int>>() != found) return Outcome{false, "golden spec uses a different theta"};
    const bool golden = decompose(kGolden + "/d4_gl1_gl3.spec.json") == read_file(kGolden + "/d4_gl1_gl3.expected.json");
    const double t = since(start);
    std::string th;
    for (int x : found) th += (th.empty() ? "" : ",") + std::to_string(x);
    return Outcome{golden && t < 5.0, "D4 theta {" + th + "}: |W_M| = 2, Phi_M^0 empty; golden " + (golden ? "matches" : "differs")};
  });

  criterion("AC2", [] {
    const auto start = Clock::now();
    const json j = json::parse(decompose(kGolden + "/d6_gl2_gl4.spec.json"));
    const double t = since(start);
    const json& levi = j["levi"];
    // The emitted basis spans theta^perp: orthogonal to e1-e2 and e3-e4, e4-e5, e5-e6.
    bool basis = levi["basis"].size() == 2;
    for (const auto& v : levi["basis"]) {
      std::vector<Rational> x;
      for (const auto& c : v) x.push_back(Rational::parse(c.get<std::string>()));
      basis = basis && x[0] == x[1] && x[2] == x[3] && x[3] == x[4] && x[4] == x[5];
    }
    using S = std::set<std::vector<long long>>;
    const bool delta = primitive_set(levi["delta_M"]) == S{{1, -1}, {0, 1}};
    const bool phi = primitive_set(levi["phi_M"]) == S{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    const bool delta0 = primitive_set(levi["delta_M0"]) == S{{1, 0}, {0, 1}};
    const bool phi0 = primitive_set(levi["phi_M0"]) == S{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    // Exactness: every exact coordinate vector is a positive rational multiple of the listed one.
    bool exact = levi["relative_roots"].size() == 8;
    for (const auto& r : levi["relative_roots"]) {
      const Rational c0 = Rational::parse(r["coordinates"][0].get<std::string>());
      const Rational c1 = Rational::parse(r["coordinates"][1].get<std::string>());
      const Rational p0(r["primitive"][0].get<long long>());
      const Rational p1(r["primitive"][1].get<long long>());
      const Rational scale = p0.is_zero() ? c1 / p1 : c0 / p0;
      exact = exact && scale > Rational(0) && c0 == scale * p0 && c1 == scale * p1;
    }
    std::ostringstream d;
    d << "D6 theta {0,2,3,4}: basis " << basis << ", Delta_M " << delta << ", Phi_M " << phi << ", Delta_M^0 " << delta0
      << ", Phi_M^0 " << phi0 << ", exact " << exact;
    return Outcome{basis && delta && phi && delta0 && phi0 && exact && t < 30.0, d.str()};
  });

  // One sweep serves AC3, AC4, AC5, AC7, AC8 and AC9.
  VerifyOptions o;
  o.max_rank = 6;
  o.trials = 100;
  o.min_draws_per_type = 10000;
  o.seed = 20240601;
  const auto sweep_start = Clock::now();
  VerifyResult sweep;
  std::string sweep_error;
  try {
    sweep = run_verify(o);
  } catch (const std::exception& e) {
    sweep_error = e.what();
  }
  const double sweep_seconds = since(sweep_start);
  auto with_sweep = [&](const std::function<Outcome()>& body) {
    return [&, body] { return sweep_error.empty() ? body() : Outcome{false, "sweep failed: " + sweep_error}; };
  };

  report("AC3", with_sweep([&] {
           std::size_t expected = 0;
           std::set<std::string> types;
           for (const auto& t : sweep_types(6, "ABCDEFG")) {
             expected += std::size_t{1} << t.rank;
             types.insert(t.name());
           }
           const bool all_levis = sweep.levis.size() == expected && types.count("E6") && types.count("F4") && types.count("G2");
           Outcome out = family_outcome(sweep, "semidirect.", std::to_string(sweep.levis.size()) + " Levis over " +
                                                                    std::to_string(types.size()) + " types");
           const std::size_t other = failures_with_prefix(sweep, "levi.") + failures_with_prefix(sweep, "arrangement.") +
                                     failures_with_prefix(sweep, "exception");
           out.pass = out.pass && all_levis && other == 0 && sweep_seconds < 300.0;
           out.detail += ", other invariant failures " + std::to_string(other);
           return out;
         })(),
         sweep_seconds);

  report("AC4", with_sweep([&] {
           std::size_t least = SIZE_MAX;
           std::string names;
           bool enough = true;
           for (const auto& t : sweep_types(4, "ABCDFG")) {
             const std::size_t d = sweep.draws_per_type.at(t.name());
             least = std::min(least, d);
             enough = enough && d >= 10000;
             names += t.name() + " ";
           }
           Outcome out = family_outcome(sweep, "stress.", "draws >= " + std::to_string(least) + " per type for " + names);
           out.pass = out.pass && enough && sweep_seconds < 180.0;
           return out;
         })(),
         sweep_seconds);

  report("AC5", with_sweep([&] { return family_outcome(sweep, "mthm.", "length 2^|S|, partition, Jacquet sizes"); })(), 0.0);

  criterion("AC6", [] {
    const auto g = gallery_independence(1000, 6, 4);
    std::string detail = std::to_string(g.trials) + " triples, " + std::to_string(g.comparisons) + " gallery comparisons, " +
                         std::to_string(g.failures.size()) + " mismatches";
    if (!g.failures.empty()) detail += "; first: " + g.failures.front().counterexample.dump();
    return Outcome{g.failures.empty() && g.comparisons == 2 * g.trials && g.trials == 1000, detail};
  });

  report("AC7", with_sweep([&] { return family_outcome(sweep, "flags.", "square-integrable and tempered flags"); })(), 0.0);
  report("AC8", with_sweep([&] { return family_outcome(sweep, "aubert.", "Aubert pairing"); })(), 0.0);
  report("AC9", with_sweep([&] { return family_outcome(sweep, "generic.", "generic flag and identity witness"); })(), 0.0);

  criterion("AC10", [] {
    const auto names = golden_specs();
    std::size_t identical = 0, matching = 0;
    for (const auto& n : names) {
      const std::string spec = kGolden + "/" + n + ".spec.json";
      const std::string a = decompose(spec);
      const std::string b = decompose(spec);
      identical += a == b;
      matching += a == read_file(kGolden + "/" + n + ".expected.json");
    }
    return Outcome{!names.empty() && identical == names.size() && matching == names.size(),
                   std::to_string(names.size()) + " golden specs, " + std::to_string(identical) + " byte-identical reruns, " +
                       std::to_string(matching) + " match the stored output"};
  });

  std::printf("%s\n", failures == 0 ? "ALL ACCEPTANCE CRITERIA PASS" : "ACCEPTANCE FAILURES PRESENT");
  return failures == 0 ? 0 : 1;
}
