#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lefcorr/report.hpp"

namespace lefcorr {

enum class SweepModel { kTorus, kComplexTorus, kCp1 };

/// Accepts "torus", "ctorus" or "cp1".
SweepModel parse_sweep_model(std::string_view name);
std::string_view sweep_model_name(SweepModel model);

/// Randomized (or exhaustive) verification run. Identical configurations
/// produce identical trial sequences; see TrialRng for the stream layout.
struct SweepConfig {
  SweepModel model = SweepModel::kTorus;
  /// Number of trials. With `exhaustive` this is the number of random
  /// offsets per multiplier pair.
  std::uint64_t trials = 1000;
  std::uint64_t seed = 42;

  unsigned dim_max = 4;       // torus: n uniform in [1, dim_max], dim_max <= 4
  long entry_bound = 9;       // torus entries, generic ctorus multipliers, cp1 eigenvalue numerators
  long norm_bound = 25;       // gaussian ctorus: N(a), N(b) <= norm_bound
  unsigned d_max = 12;        // cp1: d uniform in [0, d_max]
  long denom_max = 12;        // denominators of offsets c and of cp1 eigenvalues

  bool gaussian = true;       // ctorus: Z[i] multipliers with tau = i, else integer multipliers and random tau
  bool exhaustive = false;    // ctorus: enumerate every admissible (a, b) pair
  bool floating = false;      // cp1: random complex g, compared within the floating tolerance
  unsigned max_branches = 1;  // cp1: > 1 draws unions of 1..max_branches graphs

  unsigned threads = 0;       // 0 = hardware concurrency
};

/// Throws ConfigError describing the first violated bound.
void validate(const SweepConfig& config);

struct SweepSummary {
  std::uint64_t trials = 0;
  std::uint64_t skipped = 0;
  std::uint64_t matches = 0;
  std::uint64_t mismatches = 0;
  /// Mismatching reports, kept verbatim.
  std::vector<VerificationReport> counterexamples;
};

/// Total number of trials the configuration runs (accounts for exhaustive
/// enumeration).
std::uint64_t trial_count(const SweepConfig& config);

/// Draws and verifies one trial. Degenerate draws come back with
/// skipped_degenerate = 1 and skipped_reason set.
VerificationReport run_trial(const SweepConfig& config, std::uint64_t trial);

/// Runs every trial, writing one JSON line per trial to `lines` (if non-null)
/// in trial order regardless of thread scheduling.
SweepSummary run_sweep(const SweepConfig& config, std::ostream* lines);

/// Draws torus correspondences as the torus sweep does and compares the
/// diagonal-class integral with the alternating trace. Non-transversal draws
/// are still checked (counted in `non_transversal`); non-coverings are
/// redrawn within the trial's stream.
struct AuditSummary {
  std::uint64_t trials = 0;
  std::uint64_t skipped = 0;
  std::uint64_t equalities = 0;
  std::uint64_t mismatches = 0;
  std::uint64_t non_transversal = 0;
  std::vector<VerificationReport> counterexamples;
};

AuditSummary run_integral_audit(const SweepConfig& config, std::ostream* lines);

std::string summary_to_json(const SweepConfig& config, const SweepSummary& summary);
std::string summary_to_json(const SweepConfig& config, const AuditSummary& summary);

}  // namespace lefcorr
