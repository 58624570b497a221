// Acceptance suite: one PASS/FAIL line per criterion. Exit status is
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lefcorr/complex_torus.hpp"
#include "lefcorr/cp1_bundle.hpp"
#include "lefcorr/errors.hpp"
#include "lefcorr/rng.hpp"
#include "lefcorr/sweep.hpp"
#include "lefcorr/torus_smooth.hpp"
#include "lefcorr/trace_core.hpp"
#include "oracles.hpp"

using namespace lefcorr;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr double kTorusBudgetSeconds = 60.0;
constexpr double kFloatTolerance = 1e-9;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string counts(const SweepSummary& s) {
  return "trials=" + std::to_string(s.trials) + " skipped=" + std::to_string(s.skipped) +
         " matches=" + std::to_string(s.matches) + " mismatches=" + std::to_string(s.mismatches);
}

Outcome torus_theorem_sweep() {
  SweepConfig config;
  config.model = SweepModel::kTorus;
  config.trials = 10000;
  config.seed = kSeed;
  config.dim_max = 4;
  config.entry_bound = 9;
  config.denom_max = 12;
  const auto start = std::chrono::steady_clock::now();
  const auto summary = run_sweep(config, nullptr);
  const double elapsed = seconds_since(start);
  char buf[64];
  std::snprintf(buf, sizeof buf, " time=%.1fs (limit %.0fs)", elapsed, kTorusBudgetSeconds);
  const bool pass = summary.mismatches == 0 && summary.matches + summary.skipped == config.trials &&
                    summary.matches > 0 && elapsed < kTorusBudgetSeconds;
  return {pass, counts(summary) + buf};
}

Outcome integral_audit() {
  SweepConfig config;
  config.trials = 1000;
  config.seed = kSeed;
  config.dim_max = 3;
  const auto summary = run_integral_audit(config, nullptr);
  const bool pass = summary.equalities == config.trials && summary.mismatches == 0;
  return {pass, "draws=" + std::to_string(summary.trials) + " equalities=" + std::to_string(summary.equalities) +
                    " non_transversal=" + std::to_string(summary.non_transversal)};
}

Outcome complex_torus_sweeps() {
  // Independent count of the ordered pairs (a, b), 0 < N(a), N(b) <= 25, a != b.
  std::uint64_t units = 0;
  for (long x = -5; x <= 5; ++x) {
    for (long y = -5; y <= 5; ++y) units += (x * x + y * y > 0 && x * x + y * y <= 25);
  }
  const std::uint64_t pairs = units * (units - 1);

  SweepConfig exhaustive;
  exhaustive.model = SweepModel::kComplexTorus;
  exhaustive.exhaustive = true;
  exhaustive.gaussian = true;
  exhaustive.norm_bound = 25;
  exhaustive.trials = 100;
  exhaustive.seed = kSeed;
  const auto gaussian = run_sweep(exhaustive, nullptr);

  SweepConfig generic;
  generic.model = SweepModel::kComplexTorus;
  generic.gaussian = false;
  generic.entry_bound = 20;
  generic.trials = 5000;
  generic.seed = kSeed;
  const auto integer = run_sweep(generic, nullptr);

  const bool pass = gaussian.trials == pairs * 100 && gaussian.matches == gaussian.trials &&
                    integer.mismatches == 0 && integer.matches + integer.skipped == generic.trials;
  return {pass, "gaussian pairs=" + std::to_string(pairs) + " " + counts(gaussian) + "; generic " + counts(integer)};
}

Outcome hecke_family() {
  std::uint64_t checked = 0;
  for (long n = 2; n <= 50; ++n) {
    for (const auto& c : {ExactScalar(), ExactScalar::gaussian(Rational(1, 2), Rational(1, 3))}) {
      const auto corr = ctorus::hecke_like(n, c);
      const auto report = ctorus::verify_conjecture1(corr);
      const auto expected = ExactScalar::gaussian(n * n - n).to_string();
      if (!report.match || report.global != expected || report.local != expected ||
          report.fixed_point_count != static_cast<std::uint64_t>((n - 1) * (n - 1))) {
        return {false, "n=" + std::to_string(n) + " global=" + report.global + " local=" + report.local};
      }
      ++checked;
    }
  }
  return {true, "n=2..50, " + std::to_string(checked) + " correspondences"};
}

Outcome cp1_bundle_maps() {
  SweepConfig exact;
  exact.model = SweepModel::kCp1;
  exact.trials = 2000;
  exact.d_max = 12;
  exact.seed = kSeed;
  std::uint64_t exact_matches = 0;
  std::uint64_t non_integer = 0;
  for (std::uint64_t t = 0; t < exact.trials; ++t) {
    const auto report = run_trial(exact, t);
    if (report.match && !report.tolerance && report.skipped_degenerate == 0) ++exact_matches;
    if (report.parameters.front().second.find('/') != std::string::npos) ++non_integer;
  }

  SweepConfig floating = exact;
  floating.floating = true;
  floating.trials = 500;
  std::uint64_t float_matches = 0;
  for (std::uint64_t t = 0; t < floating.trials; ++t) {
    const auto report = run_trial(floating, t);
    if (report.match && report.tolerance && *report.tolerance <= kFloatTolerance) ++float_matches;
  }
  const bool pass = exact_matches == exact.trials && non_integer > 0 && float_matches == floating.trials;
  return {pass, "exact " + std::to_string(exact_matches) + "/" + std::to_string(exact.trials) + " (" +
                    std::to_string(non_integer) + " with non-integer entries), floating " +
                    std::to_string(float_matches) + "/" + std::to_string(floating.trials)};
}

Outcome graph_unions() {
  SweepConfig config;
  config.model = SweepModel::kCp1;
  config.trials = 500;
  config.max_branches = 5;
  config.seed = kSeed;
  std::uint64_t matches = 0;
  std::set<std::size_t> sizes;
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    const auto report = run_trial(config, t);
    if (report.match && !report.tolerance && report.skipped_degenerate == 0) ++matches;
    sizes.insert(report.parameters.size() - 1);
  }
  const bool pass = matches == config.trials && sizes.count(5) == 1;
  return {pass, std::to_string(matches) + "/" + std::to_string(config.trials) + " exact, branch counts 1.." +
                    std::to_string(*sizes.rbegin())};
}

Outcome unit_identities() {
  auto rng = TrialRng::substream(kSeed, 0);
  std::uint64_t det_ok = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 5));
    const ExactMatrix m = to_exact(oracle::random_int_matrix(rng, n, 9));
    std::vector<ExactMatrix> blocks;
    for (std::size_t k = 0; k <= n; ++k) blocks.push_back(exterior_power(m, k));
    if (alternating_trace(GradedMap(blocks)) == oracle::leibniz_det(ExactMatrix(ExactMatrix::identity(n) - m))) {
      ++det_ok;
    }
  }

  // pi1_* pi1^* on H^1: the correspondence {B x == B y + c} pulls dx back to
  // itself on every sheet of pi1; the sheets over x = 0 are the solutions of
  // B y == -c, counted independently by congruence enumeration.
  std::uint64_t push_ok = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 4));
    IntMatrix b;
    do {
      b = oracle::random_int_matrix(rng, n, 9);
    } while (sgn(determinant(b)) == 0);
    TorusPoint c(n);
    for (auto& v : c) v = rng.unit_fraction(12);
    const torus::TorusCorrespondence corr(b, b, c);
    TorusPoint minus_c(n);
    for (std::size_t i = 0; i < n; ++i) minus_c[i] = -c[i];
    std::uint64_t sheets = 0;
    for_each_congruence_solution(b, minus_c, [&sheets](const TorusPoint&) { ++sheets; });
    const ExactMatrix h1 = torus::induced_map(corr).block(1);
    if (Integer(sheets) == abs(determinant(b)) && h1 == ExactScalar(Integer(sheets)) * ExactMatrix::identity(n)) {
      ++push_ok;
    }
  }
  return {det_ok == 1000 && push_ok == 1000,
          "det(I-M) " + std::to_string(det_ok) + "/1000, pushforward-pullback " + std::to_string(push_ok) + "/1000"};
}

Outcome reproducibility() {
  std::vector<SweepConfig> configs(4);
  configs[0].model = SweepModel::kTorus;
  configs[0].trials = 2000;
  configs[1].model = SweepModel::kComplexTorus;
  configs[1].trials = 2000;
  configs[2].model = SweepModel::kComplexTorus;
  configs[2].gaussian = false;
  configs[2].entry_bound = 20;
  configs[2].trials = 1000;
  configs[3].model = SweepModel::kCp1;
  configs[3].trials = 1000;
  configs[3].max_branches = 5;
  std::size_t bytes = 0;
  for (auto config : configs) {
    config.seed = kSeed;
    std::ostringstream first;
    std::ostringstream second;
    run_sweep(config, &first);
    config.threads = 3;
    run_sweep(config, &second);
    if (first.str() != second.str() || first.str().empty()) {
      return {false, std::string(sweep_model_name(config.model)) + " sweep output differs between runs"};
    }
    bytes += first.str().size();
  }
  return {true, "4 sweeps, " + std::to_string(bytes) + " bytes identical"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 torus fixed-point theorem sweep", torus_theorem_sweep},
      {"2 diagonal-class integral audit", integral_audit},
      {"3 holomorphic complex-torus sweeps", complex_torus_sweeps},
      {"4 Hecke-like division family", hecke_family},
      {"5 CP1 bundle self-maps", cp1_bundle_maps},
      {"6 CP1 graph unions", graph_unions},
      {"7 unit identities", unit_identities},
      {"8 sweep reproducibility", reproducibility},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s [%s] %s\n", outcome.pass ? "PASS" : "FAIL", name.c_str(), outcome.detail.c_str());
    std::fflush(stdout);
    failures += outcome.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
