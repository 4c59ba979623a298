#include "rodier/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <random>
#include <set>
#include <thread>

#include "rodier/arrangement.hpp"
#include "rodier/constituents.hpp"
#include "rodier/errors.hpp"
#include "rodier/levi.hpp"
#include "rodier/poles.hpp"
#include "rodier/problem.hpp"
#include "rodier/weyl_cache.hpp"

namespace rodier {

using nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

// Per-Levi seed that does not depend on which other types are being swept.
std::uint64_t levi_seed(std::uint64_t seed, const std::string& type, const std::vector<int>& theta) {
  std::uint64_t h = 1469598103934665603ULL ^ seed;
  auto mix = [&](std::uint64_t x) {
    h ^= x;
    h *= 1099511628211ULL;
  };
  for (char c : type) mix(static_cast<unsigned char>(c));
  mix(0xff);
  for (int t : theta) mix(static_cast<std::uint64_t>(t) + 1);
  return h;
}

ordered_json coords_json(const LeviDatum& ld, const QVec& v) {
  ordered_json out = ordered_json::array();
  const QVec c = ld.coordinates(v);
  for (Eigen::Index i = 0; i < c.size(); ++i) out.push_back(c(i).str());
  return out;
}

// A decompose spec reproducing (ld, omega, S).
ordered_json spec_for(const LeviDatum& ld, const QVec& omega, const WallSet& s) {
  ProblemSpec spec;
  spec.cartan = ld.rs->type().name();
  spec.levi = ld.theta;
  auto to_vec = [&](const QVec& v) {
    const QVec c = ld.coordinates(v);
    std::vector<Rational> out;
    for (Eigen::Index i = 0; i < c.size(); ++i) out.push_back(c(i));
    return out;
  };
  spec.omega = to_vec(omega);
  spec.s.emplace();
  for (int a : s.roots) spec.s->push_back(to_vec(ld.coroot(a)));
  spec.assume_regular = true;
  spec.assume_generic = true;
  return emit_spec(spec);
}

struct Task {
  CartanType type;
  std::vector<int> theta;
  const WeylGroup* weyl = nullptr;
  std::optional<LeviDatum> ld;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  LeviSummary summary;
  std::vector<Failure> failures;
  std::map<std::string, std::size_t> checks;
  std::string error;
};

class Checker {
 public:
  explicit Checker(Task& task) : task_(task) {}

  void expect(bool ok, const std::string& check, const std::string& detail, const ordered_json& example = ordered_json::object()) {
    ++task_.checks[check];
    if (!ok) task_.failures.push_back({check, task_.type.name(), task_.theta, detail, example});
  }

 private:
  Task& task_;
};

void check_semidirect(const LeviDatum& ld, const RelativeWeylGroup& rwg, Checker& c) {
  const std::size_t n = rwg.size();
  c.expect(rwg.small.size() * rwg.complement.size() == n, "semidirect.order",
           std::to_string(rwg.small.size()) + " x " + std::to_string(rwg.complement.size()) + " != " + std::to_string(n));

  bool bijective = rwg.decomposition.size() == n;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t e = 0; bijective && e < n; ++e) {
    const auto [a, b] = rwg.decomposition[e];
    bijective = seen.insert({a, b}).second &&
                rwg.elements[rwg.small[a]] * rwg.elements[rwg.complement[b]] == rwg.elements[e];
  }
  c.expect(bijective, "semidirect.bijectivity", "(w0, w1) -> w0 w1 is not a bijection onto W_M");

  std::size_t shared = 0;
  for (std::size_t e = 0; e < n; ++e) shared += rwg.small_index[e] >= 0 && rwg.complement_index[e] >= 0;
  c.expect(shared == 1 && rwg.small_index[rwg.identity] >= 0 && rwg.complement_index[rwg.identity] >= 0,
           "semidirect.intersection", std::to_string(shared) + " elements in W_M^0 and W_M^1");

  // Conjugating the generators of W_M^0 by all of W_M stays in W_M^0.
  bool normal = true;
  for (std::size_t e = 0; normal && e < n; ++e) {
    const WeylElement& w = rwg.elements[e];
    const WeylElement wi = w.inverse();
    for (int d : ld.delta_M0) {
      const auto pos = rwg.find(w * *ld.relative_reflections[static_cast<std::size_t>(d)] * wi);
      if (!pos || rwg.small_index[*pos] < 0) {
        normal = false;
        break;
      }
    }
  }
  c.expect(normal, "semidirect.normality", "W_M^0 is not normalized by W_M");

  bool preserves = true;
  for (std::size_t b : rwg.complement) {
    for (int a : ld.phi_M0_positive) {
      preserves = preserves && ld.relative_roots[static_cast<std::size_t>(ld.act(rwg.elements[b], a))].positive();
    }
  }
  c.expect(preserves, "semidirect.complement_positive", "an element of W_M^1 moves a root of (Phi_M^0)^+");

  bool closed = true;
  try {
    for (std::size_t e = 0; closed && e < n; ++e) {
      for (int a : ld.phi_M0) {
        if (!ld.in_phi_M0(ld.act(rwg.elements[e], a))) {
          closed = false;
          break;
        }
      }
    }
  } catch (const InvariantViolation&) {
    closed = false;
  }
  c.expect(closed, "levi.phi_M0_stable", "W_M does not preserve Phi_M^0");
}

void check_arrangement(const LeviDatum& ld, const RelativeWeylGroup& rwg, const std::vector<Chamber>& chambers, Checker& c) {
  c.expect(chambers.size() == rwg.small.size(), "arrangement.chamber_count", "chambers != |W_M^0|");
  std::set<std::vector<Sign>> profiles;
  bool covariant = true;
  for (std::size_t i = 0; i < chambers.size(); ++i) {
    profiles.insert(chambers[i].sign_profile);
    const WeylElement wi = rwg.elements[rwg.small[i]].inverse();
    for (int a : ld.phi_M0_positive) {
      const Sign expected = ld.relative_roots[static_cast<std::size_t>(ld.act(wi, a))].positive() ? 1 : -1;
      covariant = covariant && chamber_sign(ld, chambers[i], a) == expected;
    }
  }
  c.expect(profiles.size() == chambers.size(), "arrangement.distinct_chambers", "two chambers share a sign profile");
  c.expect(covariant, "arrangement.covariance", "sign of w C+ on alpha differs from positivity of w^-1 alpha");
  const bool base_positive = !chambers.empty() && std::all_of(chambers[0].sign_profile.begin(), chambers[0].sign_profile.end(),
                                                               [](Sign s) { return s > 0; });
  c.expect(base_positive, "arrangement.dominant_chamber", "identity chamber is not the dominant one");
}

void check_report(const LeviDatum& ld, const RelativeWeylGroup& rwg, const std::vector<Chamber>& chambers,
                  const InducingDatum& source, const WallSet& s, Checker& c) {
  InducingDatum datum = source;
  datum.assume_regular = true;
  datum.assume_generic = true;
  const DecompositionReport r = full_report(ld, rwg, chambers, s, datum);
  const ordered_json example = spec_for(ld, datum.omega, s);

  const std::size_t bound = std::size_t{1} << s.size();
  c.expect(r.length <= bound, "mthm.length_bound", "length " + std::to_string(r.length) + " > 2^|S|", example);
  if (r.s_independent) {
    c.expect(r.length == bound, "mthm.length", "length " + std::to_string(r.length) + " != 2^|S| for independent S", example);
  }
  std::vector<int> owner(rwg.size(), -1);
  bool disjoint = true;
  bool sizes = true;
  for (const Constituent& k : r.constituents) {
    for (std::size_t e : k.jacquet) {
      disjoint = disjoint && owner[e] < 0;
      owner[e] = k.component;
    }
    sizes = sizes && k.jacquet.size() == rwg.complement.size() * k.chamber_count;
  }
  const bool covered = std::none_of(owner.begin(), owner.end(), [](int x) { return x < 0; });
  c.expect(disjoint && covered, "mthm.partition", "Jacquet sets do not partition W_M", example);
  c.expect(sizes, "mthm.jacquet_size", "a Jacquet set is not |W_M^1| times its chamber count", example);

  std::size_t ds = 0, tem = 0;
  bool ds_tem = true, on_plus = true;
  for (const Constituent& k : r.constituents) {
    ds += k.flags.square_integrable;
    tem += k.flags.tempered;
    ds_tem = ds_tem && (!k.flags.square_integrable || k.flags.tempered);
    if ((k.flags.square_integrable || k.flags.tempered) && k.component != 0) on_plus = false;
  }
  c.expect(ds <= 1 && tem <= 1, "flags.uniqueness", "more than one square-integrable or tempered constituent", example);
  c.expect(ds_tem, "flags.ds_implies_tempered", "square-integrable but not tempered", example);
  c.expect(on_plus, "flags.gamma_plus", "flag outside the all-plus component", example);

  bool involution = true, fixed_point_free = true;
  for (const Constituent& k : r.constituents) {
    const auto d = static_cast<std::size_t>(k.aubert_dual);
    involution = involution && d < r.constituents.size() && r.constituents[d].aubert_dual == k.component;
    fixed_point_free = fixed_point_free && k.aubert_dual != k.component;
  }
  c.expect(involution, "aubert.involution", "Aubert pairing is not an involution", example);
  if (!s.empty()) c.expect(fixed_point_free, "aubert.fixed_point_free", "Aubert pairing has a fixed point", example);

  if (!r.no_induction) {
    const Constituent& plus = r.constituents.front();
    bool only_plus = true;
    for (std::size_t i = 1; i < r.constituents.size(); ++i) only_plus = only_plus && !r.constituents[i].flags.generic;
    c.expect(plus.flags.generic && only_plus, "generic.gamma_plus", "generic flag not exactly on the all-plus component", example);
    c.expect(plus.flags.subrepresentation_witness, "generic.witness", "identity not in the Jacquet set of the all-plus component",
             example);
  }
}

void run_task(Task& t) {
  const auto start = Clock::now();
  Checker c(t);
  const LeviDatum& ld = *t.ld;
  const RelativeWeylGroup rwg = relative_weyl_group(ld, *t.weyl);
  t.summary.w_m = rwg.size();
  t.summary.w_m0 = rwg.small.size();
  t.summary.w_m1 = rwg.complement.size();
  check_semidirect(ld, rwg, c);
  const auto chambers = enumerate_chambers(ld, rwg);
  check_arrangement(ld, rwg, chambers, c);

  InducingDatum empty;
  empty.omega = QVec::Zero(ld.rs->ambient_dim());
  check_report(ld, rwg, chambers, empty, WallSet{}, c);
  t.summary.reports = 1;

  StressOptions so;
  so.trials = t.trials;
  so.seed = t.seed;
  const StressReport stress = independence_stress_test(ld, rwg, so);
  t.summary.draws = ld.phi_M0.empty() ? 0 : stress.trials;
  t.summary.regular = stress.regular;
  t.summary.independent = stress.independent;
  t.summary.max_s = stress.max_s;
  if (!ld.phi_M0.empty()) t.checks["stress.regular_draws"] += stress.regular;
  for (const StressViolation& v : stress.violations) {
    ordered_json example;
    example["trial"] = v.trial;
    example["seed"] = t.seed;
    example["omega"] = coords_json(ld, v.omega);
    ordered_json poles = ordered_json::object();
    for (const auto& [o, p] : v.poles) poles[orbit_key(o)] = p.str();
    example["poles"] = poles;
    example["spec"] = spec_for(ld, v.omega, v.s);
    t.failures.push_back({"stress." + v.kind, t.type.name(), t.theta, v.detail, example});
  }
  for (const StressSample& sample : stress.samples) {
    if (sample.s.empty()) continue;
    check_report(ld, rwg, chambers, sample.datum, sample.s, c);
    ++t.summary.reports;
  }
  t.summary.seconds = since(start);
}

template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& body) {
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < n; i = next++) body(i);
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace

std::vector<CartanType> sweep_types(int max_rank, const std::string& families) {
  std::vector<CartanType> out;
  auto want = [&](char f) { return families.find(f) != std::string::npos; };
  auto add_range = [&](char f, int from) {
    if (!want(f)) return;
    for (int n = from; n <= max_rank; ++n) out.push_back({f, n});
  };
  add_range('A', 1);
  add_range('B', 2);
  add_range('C', 2);
  add_range('D', 3);
  if (want('G') && max_rank >= 2) out.push_back({'G', 2});
  if (want('F') && max_rank >= 4) out.push_back({'F', 4});
  if (want('E') && max_rank >= 6) out.push_back({'E', 6});
  return out;
}

}  // namespace rodier

namespace rodier {

VerifyResult run_verify(const VerifyOptions& options) {
  const auto start = Clock::now();
  if (options.max_rank < 1) throw InputError("--max-rank must be at least 1");
  for (char f : options.families) {
    if (std::string("ABCDEFG").find(f) == std::string::npos) throw InputError(std::string("unknown family '") + f + "'");
  }
  const auto types = sweep_types(options.max_rank, options.families);
  std::vector<WeylGroup> groups;
  groups.reserve(types.size());
  for (const CartanType& type : types) {
    type.validate();
    groups.push_back(cached_weyl(build_root_system(type), options.cache_dir));
  }

  std::vector<Task> tasks;
  for (std::size_t k = 0; k < types.size(); ++k) {
    const int n = types[k].rank;
    std::vector<std::vector<int>> thetas;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> theta;
      for (int j = 0; j < n; ++j) {
        if (mask & (1u << j)) theta.push_back(j);
      }
      thetas.push_back(std::move(theta));
    }
    std::sort(thetas.begin(), thetas.end());
    for (auto& theta : thetas) {
      Task t;
      t.type = types[k];
      t.theta = std::move(theta);
      t.weyl = &groups[k];
      t.seed = levi_seed(options.seed, types[k].name(), t.theta);
      tasks.push_back(std::move(t));
    }
  }

  const unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  parallel_for(tasks.size(), threads, [&](std::size_t i) {
    try {
      tasks[i].ld = make_levi(tasks[i].weyl->root_system_ptr(), tasks[i].theta);
    } catch (const std::exception& e) {
      tasks[i].error = e.what();
    }
  });

  // Spread the per-type draw budget over the Levis where the stress test is meaningful.
  std::map<std::string, std::size_t> eligible;
  for (const Task& t : tasks) {
    if (t.ld && !t.ld->phi_M0.empty()) ++eligible[t.type.name()];
  }
  for (Task& t : tasks) {
    t.trials = options.trials;
    const std::size_t e = eligible[t.type.name()];
    if (e > 0 && options.min_draws_per_type > 0) t.trials = std::max(t.trials, (options.min_draws_per_type + e - 1) / e);
  }

  parallel_for(tasks.size(), threads, [&](std::size_t i) {
    Task& t = tasks[i];
    t.summary.type = t.type.name();
    t.summary.theta = t.theta;
    if (!t.error.empty()) return;
    t.summary.phi_m0 = t.ld->phi_M0.size();
    try {
      run_task(t);
    } catch (const std::exception& e) {
      t.error = e.what();
    }
  });

  VerifyResult result;
  for (Task& t : tasks) {
    if (!t.error.empty()) t.failures.push_back({"exception", t.type.name(), t.theta, t.error, ordered_json::object()});
    result.draws_per_type[t.type.name()] += t.summary.draws;
    for (const auto& [k, v] : t.checks) result.checks[k] += v;
    result.levis.push_back(std::move(t.summary));
    for (auto& f : t.failures) result.failures.push_back(std::move(f));
  }
  result.seconds = since(start);
  return result;
}

ordered_json verify_json(const VerifyResult& result, bool timing) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["ok"] = result.ok();
  j["violations"] = result.failures.size();
  ordered_json checks = ordered_json::object();
  for (const auto& [k, v] : result.checks) checks[k] = v;
  j["checks"] = checks;
  ordered_json draws = ordered_json::object();
  for (const auto& [k, v] : result.draws_per_type) draws[k] = v;
  j["draws_per_type"] = draws;
  ordered_json levis = ordered_json::array();
  for (const LeviSummary& s : result.levis) {
    ordered_json e;
    e["type"] = s.type;
    e["theta"] = s.theta;
    e["W_M"] = s.w_m;
    e["W_M0"] = s.w_m0;
    e["W_M1"] = s.w_m1;
    e["phi_M0"] = s.phi_m0;
    e["draws"] = s.draws;
    e["regular"] = s.regular;
    e["independent"] = s.independent;
    e["max_S"] = s.max_s;
    e["reports"] = s.reports;
    if (timing) e["seconds"] = s.seconds;
    levis.push_back(e);
  }
  j["levis"] = levis;
  if (!result.failures.empty()) {
    const Failure& f = result.failures.front();
    ordered_json first;
    first["check"] = f.check;
    first["type"] = f.type;
    first["theta"] = f.theta;
    first["detail"] = f.detail;
    first["counterexample"] = f.counterexample;
    j["first_counterexample"] = first;
    ordered_json counts = ordered_json::object();
    for (const Failure& g : result.failures) counts[g.check] = counts.value(g.check, 0) + 1;
    j["failures_by_check"] = counts;
  }
  if (timing) j["seconds"] = result.seconds;
  return j;
}

GalleryTrials gallery_independence(std::size_t trials, std::uint64_t seed, int max_rank) {
  struct Pool {
    LeviDatum ld;
    RelativeWeylGroup rwg;
    std::vector<Chamber> chambers;
  };
  std::vector<WeylGroup> groups;
  std::vector<Pool> pools;
  for (const CartanType& type : sweep_types(max_rank, "ABCDFG")) {
    groups.push_back(generate_weyl(build_root_system(type)));
  }
  for (const WeylGroup& g : groups) {
    const int n = g.root_system().rank();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<int> theta;
      for (int j = 0; j < n; ++j) {
        if (mask & (1u << j)) theta.push_back(j);
      }
      LeviDatum ld = make_levi(g.root_system_ptr(), theta);
      if (ld.phi_M0.empty()) continue;
      RelativeWeylGroup rwg = relative_weyl_group(ld, g);
      auto chambers = enumerate_chambers(ld, rwg);
      pools.push_back({std::move(ld), std::move(rwg), std::move(chambers)});
    }
  }

  GalleryTrials out;
  out.trials = trials;
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const Pool& p = pools[pick(pools.size())];
    const std::size_t w = pick(p.rwg.small.size());
    const std::size_t w_prime = pick(p.rwg.small.size());
    std::vector<int> roots;
    for (int a : p.ld.phi_M0_positive) {
      if (pick(2)) roots.push_back(a);
    }
    const WallSet s = make_wall_set(p.ld, roots);
    const KernelImage closed = kernel_image_partition(p.ld, p.rwg, p.chambers, w, w_prime, s);
    for (DescentChoice choice : {DescentChoice::kFirst, DescentChoice::kLast}) {
      const auto word = minimal_gallery(p.ld, p.rwg, w, w_prime, choice);
      const auto image = gallery_image(p.ld, p.rwg, p.chambers, w, word, s);
      ++out.comparisons;
      if (image != closed.jim) {
        ordered_json example;
        example["trial"] = trial;
        example["w"] = p.rwg.small_words[w];
        example["w_prime"] = p.rwg.small_words[w_prime];
        example["gallery"] = word;
        example["S"] = s.roots;
        out.failures.push_back({"gallery.jim", p.ld.rs->type().name(), p.ld.theta,
                                "stepwise image differs from the closed form", example});
      }
    }
  }
  return out;
}

}  // namespace rodier
