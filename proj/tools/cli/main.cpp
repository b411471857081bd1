#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "qswitch/errors.hpp"
#include "report.hpp"

namespace app = qswitch::app;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kVerifyFailed = 2, kNumerical = 3 };

// Raw flag text; numbers may be fractions or multiples of pi.
struct RawFlags {
  std::string q, p_min, p_max, p_step, q_step, mu_step;
  std::string lambda, phi, alpha, outcome = "plus", format = "csv";
  std::string lambda_min, lambda_max, lambda_step, phi_step;
};

app::RunConfig build_config(const RawFlags& raw, app::RunConfig config) {
  auto set = [](const std::string& text, double& target) {
    if (!text.empty()) target = app::parse_number(text);
  };
  set(raw.q, config.q);
  set(raw.p_min, config.p_min);
  set(raw.p_max, config.p_max);
  set(raw.p_step, config.p_step);
  set(raw.q_step, config.q_step);
  set(raw.mu_step, config.mu_step);
  set(raw.lambda_min, config.grid.lambda_min);
  set(raw.lambda_max, config.grid.lambda_max);
  set(raw.lambda_step, config.grid.lambda_step);
  set(raw.phi_step, config.grid.phi_step);
  if (!raw.lambda.empty()) config.lambda = app::parse_number(raw.lambda);
  if (!raw.phi.empty()) config.phi = app::parse_number(raw.phi);
  if (!raw.alpha.empty()) config.alpha = app::parse_alpha(raw.alpha);
  config.outcome = app::parse_outcome(raw.outcome);
  if (raw.format == "json") {
    config.format = app::OutputFormat::kJson;
  } else if (raw.format != "csv") {
    throw app::UsageError("--format must be csv or json");
  }
  app::validate(config);
  return config;
}

void emit(const app::Table& table, const std::string& path, app::OutputFormat format) {
  auto write = [&](std::ostream& out) {
    format == app::OutputFormat::kJson ? app::write_json(out, table) : app::write_csv(out, table);
  };
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw app::UsageError("cannot open " + path + " for writing");
  write(file);
  if (!file) throw app::UsageError("failed writing " + path);
}

int run_verify(const app::RunConfig& config, bool csv) {
  const auto outcome = app::run_verify(config.seed);
  if (csv) {
    emit(app::verify_table(outcome), config.out, app::OutputFormat::kCsv);
  } else if (config.out.empty() || config.out == "-") {
    app::write_verify_json(std::cout, outcome, config.seed);
  } else {
    std::ofstream file(config.out, std::ios::binary);
    if (!file) throw app::UsageError("cannot open " + config.out + " for writing");
    app::write_verify_json(file, outcome, config.seed);
  }
  std::size_t failed = 0;
  for (const auto& c : outcome.checks) {
    if (!c.passed) {
      ++failed;
      std::cerr << "FAIL " << c.id << ": " << c.detail << '\n';
    }
  }
  std::cerr << outcome.checks.size() - failed << "/" << outcome.checks.size() << " checks passed\n";
  return outcome.all_passed() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Teleportation through noisy channels under a quantum switch"};
  cli.require_subcommand(1);
  cli.fallthrough();
  cli.set_config("--config", "", "Read options from an INI/TOML file (flags override it)");

  RawFlags raw;
  app::RunConfig config;
  cli.add_option("--q", raw.q, "Two-path control weight q in [0,1] (default 1/2)");
  cli.add_option("--p-min", raw.p_min, "Lower end of the noise grid (default 0)");
  cli.add_option("--p-max", raw.p_max, "Upper end of the noise grid (default 1/3)");
  cli.add_option("--p-step", raw.p_step, "Noise grid step (default 0.001)");
  cli.add_option("--q-step", raw.q_step, "Control-weight grid step (default 0.05)");
  cli.add_option("--mu-step", raw.mu_step, "mu grid step for region-map (default 0.01)");
  cli.add_option("--lambda", raw.lambda, "Fix lambda (custom outcome, or a single lambda in scans)");
  cli.add_option("--phi", raw.phi, "Phase for the custom outcome");
  cli.add_option("--lambda-min", raw.lambda_min, "Scan grid: smallest lambda (default 0)");
  cli.add_option("--lambda-max", raw.lambda_max, "Scan grid: largest lambda (default 2)");
  cli.add_option("--lambda-step", raw.lambda_step, "Scan grid: lambda step (default 0.05)");
  cli.add_option("--phi-step", raw.phi_step, "Scan grid: phi step over [0, 2pi) (default pi/90)");
  cli.add_option("--alpha", raw.alpha, "Three-path outcome coefficients a1,a2,a3");
  cli.add_option("--paths", config.paths, "Number of channels, 2 or 3 (default 2)");
  cli.add_option("--outcome", raw.outcome, "plus, minus, 0, 1 or custom (default plus)");
  cli.add_option("--seed", config.seed, "Seed for sampled checks (default 42)");
  cli.add_option("--out", config.out, "Output file (default stdout)");
  auto* format_opt = cli.add_option("--format", raw.format, "csv or json (default csv)");

  auto* fidelity = cli.add_subcommand("fidelity-curves", "F1, F2 and the switched fidelity over p");
  auto* region = cli.add_subcommand("region-map", "Advantage regions over mu");
  region->add_option("--surface-out", config.surface_out, "Also write the (p, q, F) surface here");
  auto* fom = cli.add_subcommand("fom-scan", "Figure of merit over the outcome family");
  auto* trade = cli.add_subcommand("tradeoff", "K_total against K for each outcome over q");
  auto* coherence = cli.add_subcommand("coherence-scan", "Optimal K against l1 coherence of the control");
  auto* three = cli.add_subcommand("three-path", "Three-path fidelity profiles and phase scans");
  three->add_option("--scan-out", config.scan_out, "Also write the (phi, lambda, K) scan here");
  auto* verify = cli.add_subcommand("verify", "Run acceptance checks and invariants, JSON report");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    config = build_config(raw, config);
    if (verify->parsed()) return run_verify(config, format_opt->count() > 0 && config.format == app::OutputFormat::kCsv);
    if (fidelity->parsed()) emit(app::fidelity_curves(config), config.out, config.format);
    if (region->parsed()) {
      emit(app::region_map(config), config.out, config.format);
      if (!config.surface_out.empty()) emit(app::region_surface(config), config.surface_out, config.format);
    }
    if (fom->parsed()) emit(app::fom_scan(config), config.out, config.format);
    if (trade->parsed()) emit(app::tradeoff(config), config.out, config.format);
    if (coherence->parsed()) {
      if (config.paths != 2) throw app::UsageError("coherence-scan supports --paths 2 only");
      emit(app::coherence_scan(config), config.out, config.format);
    }
    if (three->parsed()) {
      config.paths = 3;
      emit(app::three_path_profile(config), config.out, config.format);
      if (!config.scan_out.empty()) emit(app::three_path_scan(config), config.scan_out, config.format);
    }
  } catch (const app::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const qswitch::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const qswitch::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const qswitch::DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
