#ifndef RODIER_VERIFY_HPP
#define RODIER_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rodier/cartan.hpp"

namespace rodier {

// Exhaustive and randomized verification sweeps over every standard Levi of a list of types.

struct VerifyOptions {
  int max_rank = 4;
  std::string families = "ABCDEFG";  // family letters to include
  std::size_t trials = 1000;         // stress draws per Levi with nonempty Phi_M^0
  std::size_t min_draws_per_type = 0;  // raises `trials` so that each type gets at least this many
  std::uint64_t seed = 0;
  unsigned threads = 0;              // 0: hardware concurrency
  std::optional<std::filesystem::path> cache_dir;
};

/// A types list in sweep order: A1..An, B2..Bn, C2..Cn, D3..Dn, then G2 (n >= 2), F4 (n >= 4),
/// E6 (n >= 6), restricted to `families`.
std::vector<CartanType> sweep_types(int max_rank, const std::string& families);

struct Failure {
  std::string check;  // e.g. "semidirect.normality", "stress.linear_dependence", "mthm.length"
  std::string type;
  std::vector<int> theta;
  std::string detail;
  nlohmann::ordered_json counterexample;  // enough to reproduce
};

struct LeviSummary {
  std::string type;
  std::vector<int> theta;
  std::size_t w_m = 0, w_m0 = 0, w_m1 = 0, phi_m0 = 0;
  std::size_t draws = 0, regular = 0, independent = 0, max_s = 0;
  std::size_t reports = 0;  // decompositions checked
  double seconds = 0.0;
};

struct VerifyResult {
  std::vector<LeviSummary> levis;  // sorted by type (sweep order), then theta
  std::vector<Failure> failures;   // same order
  std::map<std::string, std::size_t> checks;  // check name -> instances evaluated
  std::map<std::string, std::size_t> draws_per_type;
  double seconds = 0.0;
  bool ok() const { return failures.empty(); }
};

/// Runs every Levi invariant, arrangement invariant, the independence stress test and the
/// report laws on each derived S (plus the empty one). Throws EnumerationTooLarge.
VerifyResult run_verify(const VerifyOptions& options);

nlohmann::ordered_json verify_json(const VerifyResult& result, bool timing);

struct GalleryTrials {
  std::size_t trials = 0;
  std::size_t comparisons = 0;
  std::vector<Failure> failures;
};

/// Random (w, w', S) over Levis with nonempty Phi_M^0 in types of rank <= max_rank: Jim from
/// the closed form must equal the stepwise image along the first-descent and the last-descent
/// reduced galleries.
GalleryTrials gallery_independence(std::size_t trials, std::uint64_t seed, int max_rank);

}  // namespace rodier

#endif  // RODIER_VERIFY_HPP
