// lefcorr: verify Lefschetz-type fixed-point identities for correspondences.
//
// Exit codes: 0 when every verified identity matches, 2 on any mismatch,
// 1 on usage or validation errors.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lefcorr/complex_torus.hpp"
#include "lefcorr/cp1_bundle.hpp"
#include "lefcorr/errors.hpp"
#include "lefcorr/report.hpp"
#include "lefcorr/sweep.hpp"
#include "lefcorr/text_format.hpp"
#include "lefcorr/torus_smooth.hpp"

namespace {

constexpr int kExitMatch = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;

struct OutputOptions {
  std::string format = "text";
  std::string output;
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
  cmd->add_option("--format", out.format, "Report format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--output", out.output, "Also write the report to this file");
}

int finish_single(const lefcorr::VerificationReport& report, const OutputOptions& out) {
  const std::string body = lefcorr::emit_report(report, lefcorr::parse_report_format(out.format));
  std::cout << body;
  if (body.empty() || body.back() != '\n') std::cout << '\n';
  if (!out.output.empty()) {
    std::ofstream file(out.output);
    if (!file) throw lefcorr::ConfigError("cannot open output file '" + out.output + "'");
    file << body;
    if (body.empty() || body.back() != '\n') file << '\n';
  }
  return report.match ? kExitMatch : kExitMismatch;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("LEFCORR_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw lefcorr::ConfigError(std::string("LEFCORR_SEED is not an unsigned integer: '") + env + "'");
    }
  }
  return 42;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Lefschetz fixed-point identities for correspondences"};
  app.require_subcommand(1);

  // torus
  auto* torus_cmd = app.add_subcommand("torus", "Affine correspondence A x = B y + c on the n-torus");
  std::string torus_a;
  std::string torus_b;
  std::string torus_c = "0";
  OutputOptions torus_out;
  torus_cmd->add_option("--A", torus_a, "Integer matrix A, rows ';' entries ','")->required();
  torus_cmd->add_option("--B", torus_b, "Integer matrix B")->required();
  torus_cmd->add_option("--c", torus_c, "Rational offset vector (\"0\" for zero)")->capture_default_str();
  bool torus_integral = false;
  torus_cmd->add_flag("--integral", torus_integral, "Check the diagonal-class integral instead of fixed points");
  add_output_options(torus_cmd, torus_out);

  // ctorus
  auto* ctorus_cmd = app.add_subcommand("ctorus", "Holomorphic correspondence a z = b w + c on C/(Z + tau Z)");
  std::string ct_mode = "gaussian";
  std::string ct_tau = "0+1*i";
  std::string ct_a;
  std::string ct_b;
  std::string ct_c = "0";
  long ct_hecke = 0;
  OutputOptions ct_out;
  ctorus_cmd->add_option("--mode", ct_mode, "Lattice mode")
      ->check(CLI::IsMember({"generic", "gaussian"}))
      ->capture_default_str();
  ctorus_cmd->add_option("--tau", ct_tau, "Lattice parameter x+y*i (generic mode)")->capture_default_str();
  auto* a_opt = ctorus_cmd->add_option("--a", ct_a, "Multiplier a (m or m+ni)");
  auto* b_opt = ctorus_cmd->add_option("--b", ct_b, "Multiplier b");
  ctorus_cmd->add_option("--c", ct_c, "Complex offset x+y*i")->capture_default_str();
  auto* hecke_opt =
      ctorus_cmd->add_option("--hecke", ct_hecke, "Use the n-division correspondence a=1, b=n instead of --a/--b");
  hecke_opt->excludes(a_opt)->excludes(b_opt);
  add_output_options(ctorus_cmd, ct_out);

  // cp1
  auto* cp1_cmd = app.add_subcommand("cp1", "Moebius map with canonical lifting to O(d) on CP^1");
  std::string cp1_g;
  int cp1_d = 0;
  std::vector<std::string> cp1_branches;
  OutputOptions cp1_out;
  auto* g_opt = cp1_cmd->add_option("--g", cp1_g, "2x2 matrix, entries rational or x+y*i");
  cp1_cmd->add_option("--d", cp1_d, "Bundle degree d >= 0")->required();
  auto* branch_opt = cp1_cmd->add_option("--branch", cp1_branches, "Graph branch (repeat for a union)");
  g_opt->excludes(branch_opt);
  add_output_options(cp1_cmd, cp1_out);

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Randomized counterexample sweep");
  lefcorr::SweepConfig sweep_cfg;
  std::string sweep_model;
  std::string sweep_output;
  std::optional<std::uint64_t> sweep_seed;
  bool sweep_generic = false;
  sweep_cmd->add_option("model", sweep_model, "torus | ctorus | cp1")->required();
  sweep_cmd->add_option("--trials", sweep_cfg.trials, "Trials (offsets per pair with --exhaustive)")
      ->capture_default_str();
  sweep_cmd->add_option("--seed", sweep_seed, "Seed (default: $LEFCORR_SEED or 42)");
  sweep_cmd->add_option("--dim-max", sweep_cfg.dim_max, "torus: maximal dimension (<= 4)")->capture_default_str();
  sweep_cmd->add_option("--entry-bound", sweep_cfg.entry_bound, "Entry / integer multiplier bound")
      ->capture_default_str();
  sweep_cmd->add_option("--norm-bound", sweep_cfg.norm_bound, "ctorus gaussian: bound on N(a), N(b)")
      ->capture_default_str();
  sweep_cmd->add_option("--d-max", sweep_cfg.d_max, "cp1: maximal bundle degree")->capture_default_str();
  sweep_cmd->add_option("--denom-max", sweep_cfg.denom_max, "Maximal offset denominator")->capture_default_str();
  sweep_cmd->add_flag("--generic", sweep_generic, "ctorus: integer multipliers with random tau");
  sweep_cmd->add_flag("--exhaustive", sweep_cfg.exhaustive, "ctorus: enumerate all multiplier pairs");
  sweep_cmd->add_flag("--float", sweep_cfg.floating, "cp1: random complex g in floating point");
  sweep_cmd->add_option("--max-branches", sweep_cfg.max_branches, "cp1: draw unions of up to this many graphs")
      ->capture_default_str();
  sweep_cmd->add_option("--threads", sweep_cfg.threads, "Worker threads (0 = all cores)")->capture_default_str();
  sweep_cmd->add_option("--output", sweep_output, "JSON Lines file (default: stdout)");

  // audit-integral
  auto* audit_cmd = app.add_subcommand("audit-integral", "Diagonal-class integral vs. alternating trace on tori");
  lefcorr::SweepConfig audit_cfg;
  audit_cfg.dim_max = 3;
  std::optional<std::uint64_t> audit_seed;
  std::string audit_output;
  audit_cmd->add_option("--trials", audit_cfg.trials, "Number of draws")->capture_default_str();
  audit_cmd->add_option("--seed", audit_seed, "Seed (default: $LEFCORR_SEED or 42)");
  audit_cmd->add_option("--dim-max", audit_cfg.dim_max, "Maximal dimension (<= 4)")->capture_default_str();
  audit_cmd->add_option("--entry-bound", audit_cfg.entry_bound, "Entry bound")->capture_default_str();
  audit_cmd->add_option("--denom-max", audit_cfg.denom_max, "Maximal offset denominator")->capture_default_str();
  audit_cmd->add_option("--threads", audit_cfg.threads, "Worker threads (0 = all cores)")->capture_default_str();
  audit_cmd->add_option("--output", audit_output, "JSON Lines file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitMatch : kExitUsage;
  }

  try {
    if (torus_cmd->parsed()) {
      const auto corr = lefcorr::torus::TorusCorrespondence::parse(torus_a, torus_b, torus_c);
      return finish_single(torus_integral ? lefcorr::torus::integral_check(corr) : lefcorr::torus::verify_theorem(corr),
                           torus_out);
    }

    if (ctorus_cmd->parsed()) {
      const auto lattice = ct_mode == "gaussian"
                               ? lefcorr::ctorus::LatticeSpec::gaussian()
                               : lefcorr::ctorus::LatticeSpec::generic(lefcorr::ExactScalar::parse(ct_tau));
      const auto c = lefcorr::ExactScalar::parse(ct_c);
      if (hecke_opt->count() > 0) {
        return finish_single(lefcorr::ctorus::verify_conjecture1(lefcorr::ctorus::hecke_like(ct_hecke, c, lattice)),
                             ct_out);
      }
      if (ct_a.empty() || ct_b.empty()) throw lefcorr::ConfigError("ctorus needs --a and --b (or --hecke n)");
      const lefcorr::ctorus::ComplexTorusCorrespondence corr(lattice, lefcorr::ExactScalar::parse(ct_a),
                                                             lefcorr::ExactScalar::parse(ct_b), c);
      return finish_single(lefcorr::ctorus::verify_conjecture1(corr), ct_out);
    }

    if (cp1_cmd->parsed()) {
      if (!cp1_branches.empty()) {
        std::vector<lefcorr::cp1::BundleSelfMap> maps;
        for (const auto& branch : cp1_branches) maps.emplace_back(lefcorr::parse_matrix(branch), cp1_d);
        return finish_single(
            lefcorr::cp1::verify_conjecture2_union(lefcorr::cp1::GraphUnionCorrespondence(std::move(maps))), cp1_out);
      }
      if (cp1_g.empty()) throw lefcorr::ConfigError("cp1 needs --g or at least one --branch");
      return finish_single(lefcorr::cp1::verify_ab_4_12(lefcorr::cp1::BundleSelfMap(lefcorr::parse_matrix(cp1_g), cp1_d)),
                           cp1_out);
    }

    if (sweep_cmd->parsed()) {
      sweep_cfg.model = lefcorr::parse_sweep_model(sweep_model);
      sweep_cfg.seed = sweep_seed ? *sweep_seed : default_seed();
      sweep_cfg.gaussian = !sweep_generic;
      lefcorr::validate(sweep_cfg);
      std::ofstream file;
      std::ostream* lines = &std::cout;
      if (!sweep_output.empty()) {
        file.open(sweep_output);
        if (!file) throw lefcorr::ConfigError("cannot open output file '" + sweep_output + "'");
        lines = &file;
      }
      const auto summary = lefcorr::run_sweep(sweep_cfg, lines);
      (sweep_output.empty() ? std::cerr : std::cout) << lefcorr::summary_to_json(sweep_cfg, summary) << '\n';
      return summary.mismatches == 0 ? kExitMatch : kExitMismatch;
    }

    if (audit_cmd->parsed()) {
      audit_cfg.model = lefcorr::SweepModel::kTorus;
      audit_cfg.seed = audit_seed ? *audit_seed : default_seed();
      std::ofstream file;
      std::ostream* lines = &std::cout;
      if (!audit_output.empty()) {
        file.open(audit_output);
        if (!file) throw lefcorr::ConfigError("cannot open output file '" + audit_output + "'");
        lines = &file;
      }
      const auto summary = lefcorr::run_integral_audit(audit_cfg, lines);
      (audit_output.empty() ? std::cerr : std::cout) << lefcorr::summary_to_json(audit_cfg, summary) << '\n';
      return summary.mismatches == 0 ? kExitMatch : kExitMismatch;
    }
  } catch (const lefcorr::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
