// rodier: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 enumeration cap exceeded.

#include <cctype>
#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rodier/constituents.hpp"
#include "rodier/errors.hpp"
#include "rodier/problem.hpp"
#include "rodier/report_io.hpp"
#include "rodier/verify.hpp"
#include "rodier/weyl_cache.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

struct DecomposeArgs {
  std::string spec;
  std::string format = "json";
  bool no_timing = false;
};

struct VerifyArgs {
  int max_rank = 4;
  std::string families = "ABCDEFG";
  std::size_t trials = 1000;
  std::size_t min_draws = 0;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool no_timing = false;
};

struct CacheArgs {
  std::string rebuild;
  bool clear = false;
  bool stat = false;
};

int run_decompose(const DecomposeArgs& a) {
  const auto start = std::chrono::steady_clock::now();
  const rodier::ProblemSpec spec = rodier::read_spec_file(a.spec);
  const rodier::Problem p = rodier::resolve(spec, rodier::env_cache_dir());
  const rodier::DecompositionReport r = rodier::full_report(p.ld, p.rwg, p.chambers, p.s, p.datum);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (a.format == "json") {
    std::cout << rodier::report_json(p, r, a.no_timing ? std::nullopt : std::optional<double>(seconds)).dump(2) << "\n";
  } else if (a.format == "text") {
    std::cout << rodier::report_text(p, r);
  } else {
    std::cout << rodier::report_dot(p, r);
  }
  return kExitOk;
}

int run_verify(const VerifyArgs& a) {
  rodier::VerifyOptions o;
  o.max_rank = a.max_rank;
  o.families.clear();
  // Accept "ABD", "A,B,D" or ["A","B","D"].
  for (char c : a.families) {
    if (std::isalpha(static_cast<unsigned char>(c))) o.families.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  o.trials = a.trials;
  o.min_draws_per_type = a.min_draws;
  o.seed = a.seed;
  o.threads = a.threads;
  o.cache_dir = rodier::env_cache_dir();
  const rodier::VerifyResult result = rodier::run_verify(o);
  std::cout << rodier::verify_json(result, !a.no_timing).dump(2) << "\n";
  if (!result.ok()) {
    std::cerr << "verification failed: " << result.failures.size() << " violation(s); first: " << result.failures.front().check
              << " (" << result.failures.front().type << ")\n";
    return kExitViolation;
  }
  return kExitOk;
}

int run_cache(const CacheArgs& a) {
  const auto dir = rodier::default_cache_dir();
  if (a.clear) {
    const std::size_t n = rodier::cache_clear(dir);
    std::cout << "removed " << n << " cache file(s) from " << dir.string() << "\n";
  }
  if (!a.rebuild.empty()) {
    const auto rs = rodier::build_root_system(rodier::CartanType::parse(a.rebuild));
    const rodier::WeylGroup g = rodier::generate_weyl(rs);
    rodier::store_weyl(dir, g);
    std::cout << "cached " << rs->type().name() << ": " << g.size() << " elements\n";
  }
  if (a.stat) {
    const auto entries = rodier::cache_stat(dir);
    std::cout << "cache " << dir.string() << ": " << entries.size() << " file(s)\n";
    for (const auto& e : entries) {
      std::cout << e.type << "  elements " << e.elements << "  bytes " << e.bytes << "  crc32 " << std::hex << e.checksum
                << std::dec << (e.valid ? "" : "  INVALID") << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact decomposition of regular generalized principal series"};
  app.set_version_flag("--version", rodier::kToolVersion);
  app.require_subcommand(1);

  DecomposeArgs dec;
  auto* decompose = app.add_subcommand("decompose", "Decompose the representation described by a JSON spec");
  decompose->add_option("spec", dec.spec, "Problem spec (JSON)")->required();
  decompose->add_option("--format", dec.format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));
  decompose->add_flag("--no-timing", dec.no_timing, "Omit the timing field (byte-stable output)");

  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Sweep every standard Levi and check all invariants");
  verify->add_option("--max-rank", ver.max_rank, "Largest rank swept")->check(CLI::Range(1, 8));
  verify->add_option("--families", ver.families, "Families to include, e.g. ABCD or D");
  verify->add_option("--trials", ver.trials, "Stress draws per Levi");
  verify->add_option("--min-draws-per-type", ver.min_draws, "Raise per-Levi draws so each type reaches this total");
  verify->add_option("--seed", ver.seed, "Random seed");
  verify->add_option("--threads", ver.threads, "Worker threads (0: all cores)");
  verify->add_flag("--no-timing", ver.no_timing, "Omit timing fields");

  CacheArgs cac;
  auto* cache = app.add_subcommand("cache", "Manage the on-disk Weyl group cache");
  cache->add_option("--rebuild", cac.rebuild, "Enumerate and store the Weyl group of TYPE");
  cache->add_flag("--clear", cac.clear, "Remove all cache files");
  cache->add_flag("--stat", cac.stat, "List cached types with sizes and checksums");
  cache->require_option(1, 3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*decompose) return run_decompose(dec);
    if (*verify) return run_verify(ver);
    return run_cache(cac);
  } catch (const rodier::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const rodier::EnumerationTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitViolation;
  }
}
