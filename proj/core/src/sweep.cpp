#include "lefcorr/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "lefcorr/complex_torus.hpp"
#include "lefcorr/cp1_bundle.hpp"
#include "lefcorr/errors.hpp"
#include "lefcorr/rng.hpp"
#include "lefcorr/text_format.hpp"
#include "lefcorr/torus_smooth.hpp"

namespace lefcorr {

namespace {

constexpr std::uint64_t kChunk = 4096;

struct MultiplierPair {
  ExactScalar a;
  ExactScalar b;
};

// Everything a trial needs besides its index; built once per sweep.
struct TrialContext {
  SweepConfig config;
  std::vector<MultiplierPair> pairs;  // exhaustive ctorus only
};

std::vector<ExactScalar> gaussian_disk(long norm_bound) {
  std::vector<ExactScalar> out;
  long r = 0;
  while ((r + 1) * (r + 1) <= norm_bound) ++r;
  for (long x = -r; x <= r; ++x) {
    for (long y = -r; y <= r; ++y) {
      const long norm = x * x + y * y;
      if (norm > 0 && norm <= norm_bound) out.push_back(ExactScalar::gaussian(x, y));
    }
  }
  return out;
}

TrialContext make_context(const SweepConfig& config) {
  TrialContext ctx{config, {}};
  if (config.model != SweepModel::kComplexTorus || !config.exhaustive) return ctx;
  std::vector<ExactScalar> values;
  if (config.gaussian) {
    values = gaussian_disk(config.norm_bound);
  } else {
    for (long v = -config.entry_bound; v <= config.entry_bound; ++v) {
      if (v != 0) values.emplace_back(v);
    }
  }
  for (const auto& a : values) {
    for (const auto& b : values) {
      if (!(a == b)) ctx.pairs.push_back({a, b});
    }
  }
  return ctx;
}

std::vector<std::pair<std::string, std::string>> torus_parameters(const torus::TorusCorrespondence& corr) {
  return {{"A", format_matrix(corr.a())}, {"B", format_matrix(corr.b())}, {"c", format_vector(corr.offset())}};
}

VerificationReport skipped_report(std::string model, std::vector<std::pair<std::string, std::string>> parameters,
                                  const Error& error) {
  VerificationReport report;
  report.model = std::move(model);
  report.parameters = std::move(parameters);
  report.skipped_degenerate = 1;
  report.skipped_reason = error.what();
  return report;
}

torus::TorusCorrespondence draw_torus(TrialRng& rng, const SweepConfig& config) {
  const auto n = static_cast<std::size_t>(rng.uniform_int(1, config.dim_max));
  IntMatrix a(n, n);
  IntMatrix b(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) = static_cast<long>(rng.uniform_int(-config.entry_bound, config.entry_bound));
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) b(r, c) = static_cast<long>(rng.uniform_int(-config.entry_bound, config.entry_bound));
  }
  TorusPoint offset;
  for (std::size_t i = 0; i < n; ++i) offset.push_back(rng.unit_fraction(config.denom_max));
  return torus::TorusCorrespondence(std::move(a), std::move(b), std::move(offset));
}

VerificationReport torus_trial(TrialRng& rng, const SweepConfig& config) {
  const auto corr = draw_torus(rng, config);
  try {
    auto report = torus::verify_theorem(corr);
    report.fixed_points.clear();
    return report;
  } catch (const NotACovering& e) {
    return skipped_report("torus", torus_parameters(corr), e);
  } catch (const NonTransversal& e) {
    return skipped_report("torus", torus_parameters(corr), e);
  }
}

ExactScalar draw_gaussian(TrialRng& rng, long norm_bound) {
  long r = 0;
  while ((r + 1) * (r + 1) <= norm_bound) ++r;
  while (true) {
    const long x = rng.uniform_int(-r, r);
    const long y = rng.uniform_int(-r, r);
    if (x * x + y * y <= norm_bound) return ExactScalar::gaussian(x, y);
  }
}

ctorus::LatticeSpec draw_lattice(TrialRng& rng, const SweepConfig& config) {
  if (config.gaussian) return ctorus::LatticeSpec::gaussian();
  const Rational x = rng.unit_fraction(config.denom_max);
  const long q = rng.uniform_int(1, config.denom_max);
  const long p = rng.uniform_int(1, 2 * q);
  Rational y(p, static_cast<unsigned long>(q));
  y.canonicalize();
  return ctorus::LatticeSpec::generic(ExactScalar::gaussian(x, y));
}

VerificationReport ctorus_trial(TrialRng& rng, const TrialContext& ctx, std::uint64_t trial) {
  const SweepConfig& config = ctx.config;
  ExactScalar a;
  ExactScalar b;
  if (config.exhaustive) {
    const auto& pair = ctx.pairs.at(trial / config.trials);
    a = pair.a;
    b = pair.b;
  } else if (config.gaussian) {
    a = draw_gaussian(rng, config.norm_bound);
    b = draw_gaussian(rng, config.norm_bound);
  } else {
    a = ExactScalar(static_cast<long>(rng.uniform_int(-config.entry_bound, config.entry_bound)));
    b = ExactScalar(static_cast<long>(rng.uniform_int(-config.entry_bound, config.entry_bound)));
  }
  const auto lattice = draw_lattice(rng, config);
  const Rational u = rng.unit_fraction(config.denom_max);
  const Rational v = rng.unit_fraction(config.denom_max);
  const ctorus::ComplexTorusCorrespondence corr(lattice, a, b, lattice.point(u, v));
  try {
    auto report = ctorus::verify_conjecture1(corr);
    report.fixed_points.clear();
    return report;
  } catch (const NotACovering& e) {
    return skipped_report("ctorus",
                          {{"mode", std::string(lattice.mode_name())},
                           {"tau", lattice.tau().to_string()},
                           {"a", corr.a().to_string()},
                           {"b", corr.b().to_string()},
                           {"c", corr.offset().to_string()}},
                          e);
  } catch (const NonTransversal& e) {
    return skipped_report("ctorus",
                          {{"mode", std::string(lattice.mode_name())},
                           {"tau", lattice.tau().to_string()},
                           {"a", corr.a().to_string()},
                           {"b", corr.b().to_string()},
                           {"c", corr.offset().to_string()}},
                          e);
  }
}

long nonzero_entry(TrialRng& rng, long bound) {
  const long k = rng.uniform_int(1, 2 * bound);
  return k <= bound ? -k : k - bound;
}

// Nonzero p / q with |p| <= bound and 1 <= q <= denom_max.
ExactScalar nonzero_rational(TrialRng& rng, long bound, long denom_max) {
  const long p = nonzero_entry(rng, bound);
  const long q = rng.uniform_int(1, denom_max);
  Rational value(p, q);
  value.canonicalize();
  return ExactScalar(std::move(value));
}

// Distinct nonzero rational eigenvalues (mu, nu).
std::pair<ExactScalar, ExactScalar> distinct_pair(TrialRng& rng, long bound, long denom_max) {
  const ExactScalar mu = nonzero_rational(rng, bound, denom_max);
  ExactScalar nu = nonzero_rational(rng, bound, denom_max);
  while (nu == mu) nu = nonzero_rational(rng, bound, denom_max);
  return {mu, nu};
}

ExactMatrix draw_triangular(TrialRng& rng, long bound, long denom_max) {
  const auto [mu, nu] = distinct_pair(rng, bound, denom_max);
  const ExactScalar off(static_cast<long>(rng.uniform_int(-bound, bound)));
  const ExactScalar zero(0L);
  if (rng.uniform_int(0, 1) == 0) return ExactMatrix{{mu, off}, {zero, nu}};
  return ExactMatrix{{mu, zero}, {off, nu}};
}

// h diag(mu, nu) h^{-1} with a random invertible integer h.
ExactMatrix draw_conjugated(TrialRng& rng, long bound, long denom_max) {
  const auto [mu, nu] = distinct_pair(rng, bound, denom_max);
  ExactMatrix h(2, 2);
  do {
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 2; ++c) h(r, c) = ExactScalar(static_cast<long>(rng.uniform_int(-3, 3)));
    }
  } while (determinant(h).is_zero());
  return h * ExactMatrix{{mu, ExactScalar(0L)}, {ExactScalar(0L), nu}} * inverse(h);
}

VerificationReport cp1_trial(TrialRng& rng, const SweepConfig& config) {
  const int d = static_cast<int>(rng.uniform_int(0, config.d_max));
  if (config.floating) {
    while (true) {
      ComplexMatrix g(2, 2);
      for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
          const double re = 2.0 * rng.uniform_real() - 1.0;
          const double im = 2.0 * rng.uniform_real() - 1.0;
          g(r, c) = Complex(re, im);
        }
      }
      const Complex tr = trace(g);
      const Complex gap = std::sqrt(tr * tr - 4.0 * determinant(g));
      if (std::abs(gap) < 0.1) continue;
      auto report = cp1::verify_ab_4_12(cp1::FloatBundleSelfMap(g, d));
      report.fixed_points.clear();
      return report;
    }
  }

  const long branches = config.max_branches > 1 ? rng.uniform_int(1, config.max_branches) : 1;
  std::vector<cp1::BundleSelfMap> maps;
  for (long i = 0; i < branches; ++i) {
    const bool conjugated = config.max_branches > 1 && rng.uniform_int(0, 1) == 1;
    maps.emplace_back(conjugated ? draw_conjugated(rng, config.entry_bound, config.denom_max)
                                  : draw_triangular(rng, config.entry_bound, config.denom_max),
                      d);
  }
  try {
    VerificationReport report = config.max_branches > 1
                                    ? cp1::verify_conjecture2_union(cp1::GraphUnionCorrespondence(maps))
                                    : cp1::verify_ab_4_12(maps.front());
    report.fixed_points.clear();
    return report;
  } catch (const DegenerateEigenvalues& e) {
    std::vector<std::pair<std::string, std::string>> parameters{{"d", std::to_string(d)}};
    if (maps.size() == 1) {
      parameters.insert(parameters.begin(), {"g", format_matrix(maps.front().g())});
    } else {
      for (std::size_t i = 0; i < maps.size(); ++i) {
        parameters.emplace_back("branch" + std::to_string(i), format_matrix(maps[i].g()));
      }
    }
    return skipped_report(maps.size() == 1 ? "cp1" : "cp1-union", std::move(parameters), e);
  }
}

VerificationReport run_trial_in(const TrialContext& ctx, std::uint64_t trial) {
  TrialRng rng = TrialRng::substream(ctx.config.seed, trial);
  VerificationReport report;
  switch (ctx.config.model) {
    case SweepModel::kTorus:
      report = torus_trial(rng, ctx.config);
      break;
    case SweepModel::kComplexTorus:
      report = ctorus_trial(rng, ctx, trial);
      break;
    case SweepModel::kCp1:
      report = cp1_trial(rng, ctx.config);
      break;
  }
  report.seed = ctx.config.seed;
  report.trial = trial;
  return report;
}

VerificationReport audit_trial_in(const TrialContext& ctx, std::uint64_t trial) {
  TrialRng rng = TrialRng::substream(ctx.config.seed, trial);
  // The integral needs coverings but not transversality, so non-coverings
  // are redrawn from the same stream rather than skipped.
  auto corr = draw_torus(rng, ctx.config);
  while (sgn(determinant(corr.a())) == 0 || sgn(determinant(corr.b())) == 0) corr = draw_torus(rng, ctx.config);
  VerificationReport report;
  try {
    report = torus::integral_check(corr);
  } catch (const NotACovering& e) {
    report = skipped_report("torus-integral", torus_parameters(corr), e);
  }
  report.seed = ctx.config.seed;
  report.trial = trial;
  return report;
}

unsigned worker_count(const SweepConfig& config) {
  if (config.threads != 0) return config.threads;
  return std::max(1U, std::thread::hardware_concurrency());
}

// Evaluates trials in parallel chunks and hands each report to `sink` in
// trial order.
template <class TrialFn, class Sink>
void for_each_trial(const TrialContext& ctx, std::uint64_t total, TrialFn&& trial_fn, Sink&& sink) {
  const unsigned workers = worker_count(ctx.config);
  std::vector<VerificationReport> chunk;
  for (std::uint64_t begin = 0; begin < total; begin += kChunk) {
    const std::uint64_t size = std::min(kChunk, total - begin);
    chunk.assign(size, VerificationReport{});
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto work = [&] {
      try {
        for (std::uint64_t i = next++; i < size; i = next++) chunk[i] = trial_fn(ctx, begin + i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    };
    if (workers <= 1 || size == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < std::min<std::uint64_t>(workers, size); ++w) pool.emplace_back(work);
      for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    for (auto& report : chunk) sink(report);
  }
}

}  // namespace

SweepModel parse_sweep_model(std::string_view name) {
  if (name == "torus") return SweepModel::kTorus;
  if (name == "ctorus") return SweepModel::kComplexTorus;
  if (name == "cp1") return SweepModel::kCp1;
  throw ConfigError("unknown sweep model '" + std::string(name) + "' (expected torus, ctorus or cp1)");
}

std::string_view sweep_model_name(SweepModel model) {
  switch (model) {
    case SweepModel::kTorus:
      return "torus";
    case SweepModel::kComplexTorus:
      return "ctorus";
    case SweepModel::kCp1:
      return "cp1";
  }
  return "?";
}

void validate(const SweepConfig& config) {
  if (config.trials < 1) throw ConfigError("trials must be >= 1");
  if (config.dim_max < 1 || config.dim_max > 4) throw ConfigError("dim_max must be in [1, 4]");
  if (config.entry_bound < 1) throw ConfigError("entry_bound must be positive");
  if (config.norm_bound < 1) throw ConfigError("norm_bound must be positive");
  if (config.denom_max < 1) throw ConfigError("denom_max must be positive");
  if (config.max_branches < 1) throw ConfigError("max_branches must be positive");
  if (config.exhaustive && config.model != SweepModel::kComplexTorus) {
    throw ConfigError("exhaustive enumeration is only defined for the ctorus model");
  }
  if (config.floating && config.model != SweepModel::kCp1) throw ConfigError("floating mode is cp1-only");
  if (config.floating && config.max_branches > 1) throw ConfigError("floating mode does not draw unions");
}

std::uint64_t trial_count(const SweepConfig& config) {
  if (config.model == SweepModel::kComplexTorus && config.exhaustive) {
    return make_context(config).pairs.size() * config.trials;
  }
  return config.trials;
}

VerificationReport run_trial(const SweepConfig& config, std::uint64_t trial) {
  validate(config);
  return run_trial_in(make_context(config), trial);
}

SweepSummary run_sweep(const SweepConfig& config, std::ostream* lines) {
  validate(config);
  const TrialContext ctx = make_context(config);
  const std::uint64_t total = config.exhaustive ? ctx.pairs.size() * config.trials : config.trials;
  SweepSummary summary;
  for_each_trial(ctx, total, run_trial_in, [&](const VerificationReport& report) {
    ++summary.trials;
    if (report.skipped_degenerate != 0) {
      ++summary.skipped;
    } else if (report.match) {
      ++summary.matches;
    } else {
      ++summary.mismatches;
      summary.counterexamples.push_back(report);
    }
    if (lines != nullptr) *lines << report_to_json(report) << '\n';
  });
  return summary;
}

AuditSummary run_integral_audit(const SweepConfig& config, std::ostream* lines) {
  validate(config);
  if (config.model != SweepModel::kTorus) throw ConfigError("the integral audit is defined for the torus model only");
  const TrialContext ctx = make_context(config);
  AuditSummary summary;
  for_each_trial(ctx, config.trials, audit_trial_in, [&](const VerificationReport& report) {
    ++summary.trials;
    if (report.skipped_degenerate != 0) {
      ++summary.skipped;
    } else {
      if (report.fixed_point_count == 0) ++summary.non_transversal;
      if (report.match) {
        ++summary.equalities;
      } else {
        ++summary.mismatches;
        summary.counterexamples.push_back(report);
      }
    }
    if (lines != nullptr) *lines << report_to_json(report) << '\n';
  });
  return summary;
}

std::string summary_to_json(const SweepConfig& config, const SweepSummary& summary) {
  nlohmann::ordered_json j;
  j["model"] = sweep_model_name(config.model);
  j["seed"] = config.seed;
  j["trials"] = summary.trials;
  j["skipped"] = summary.skipped;
  j["matches"] = summary.matches;
  j["mismatches"] = summary.mismatches;
  return j.dump();
}

std::string summary_to_json(const SweepConfig& config, const AuditSummary& summary) {
  nlohmann::ordered_json j;
  j["model"] = "torus-integral";
  j["seed"] = config.seed;
  j["trials"] = summary.trials;
  j["skipped"] = summary.skipped;
  j["equalities"] = summary.equalities;
  j["mismatches"] = summary.mismatches;
  j["non_transversal"] = summary.non_transversal;
  return j.dump();
}

}  // namespace lefcorr
