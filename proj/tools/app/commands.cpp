#include "commands.hpp"

#include <algorithm>
#include <cmath>

namespace qswitch::app {
namespace {

const ComplexMatrix& ket0() {
  static const ComplexMatrix m{{1.0, 0.0}, {0.0, 0.0}};
  return m;
}

Cell optional_cell(const std::optional<double>& v) { return v ? Cell{*v} : Cell{}; }

const char* flag_name(ProfileFlag flag) {
  switch (flag) {
    case ProfileFlag::kOk:
      return "";
    case ProfileFlag::kFromMarginal:
      return "from_marginal";
    case ProfileFlag::kDegenerate:
      return "degenerate";
  }
  return "";
}

ControlState control_for(const RunConfig& config) {
  return config.paths == 2 ? ControlState::two_path(config.q) : ControlState::uniform(config.paths);
}

OutcomeFamilyKind family_for(const RunConfig& config) {
  return config.paths == 2 ? OutcomeFamilyKind::kTwoPath : OutcomeFamilyKind::kThreePath;
}

GridSpec effective_grid(const RunConfig& config) {
  GridSpec grid = config.grid;
  if (config.lambda) grid.lambda_min = grid.lambda_max = *config.lambda;
  return grid;
}

std::vector<std::array<double, 3>> alpha_tuples(const RunConfig& config) {
  if (config.alpha) return {*config.alpha};
  return {{1.0, 1.0, 1.0}, {0.0, 0.0, 0.0}, {-1.0, -1.0, 0.0}, {-1.0, -1.0, -1.0}};
}

}  // namespace

Table fidelity_curves(const RunConfig& config) {
  Table table{"fidelity-curves", {"p", "F1", "F2", "F_switch", "success_probability", "classical_threshold"}, {}};
  const auto control = ControlState::two_path(config.q);
  const IsotropicSwitchExpansion expansion(2, ket0(), control);
  const auto outcome = config.outcome_state();
  const PostSelectedFidelity fidelity(expansion, outcome);
  const auto probability = expansion.condition_on(outcome);
  const bool closed_form = config.outcome == OutcomeChoice::kPlus;
  for (double p : config.p_grid()) {
    Cell f_switch;
    Cell success;
    if (closed_form) {
      const SwitchParams params(p, config.q);
      f_switch = switched_fidelity(params);
      success = switched_success_probability(params);
    } else {
      f_switch = optional_cell(fidelity(p));
      success = probability.probability(p);
    }
    table.add_row({p, no_switch_fidelity(p, 1), no_switch_fidelity(p, 2), f_switch, success, kClassicalFidelity});
  }
  return table;
}

Table region_map(const RunConfig& config) {
  Table table{"region-map", {"mu", "q", "p_lo", "p_hi", "region2_exists"}, {}};
  auto mus = stepped_grid(0.0, 0.5, config.mu_step);
  const double threshold = mu_threshold();
  if (std::none_of(mus.begin(), mus.end(), [&](double m) { return std::abs(m - threshold) < 1e-12; })) {
    mus.insert(std::upper_bound(mus.begin(), mus.end(), threshold), threshold);
  }
  for (double mu : mus) {
    const auto r = advantage_regions(mu);
    // Smaller root of q(1-q) = mu^2.
    const double q = 0.5 * (1.0 - std::sqrt(std::max(0.0, 1.0 - 4.0 * mu * mu)));
    table.add_row({mu, q, r.p_lo, std::min(r.p_hi, kMaxNoise), r.region2_exists()});
  }
  return table;
}

Table region_surface(const RunConfig& config) {
  Table table{"region-surface", {"p", "q", "F"}, {}};
  const auto qs = config.q_grid();
  for (double p : config.p_grid()) {
    for (double q : qs) table.add_row({p, q, switched_fidelity({p, q})});
  }
  return table;
}

Table fom_scan(const RunConfig& config) {
  Table table{"fom-scan", {"lambda", "phi", "K", "argmax"}, {}};
  const auto scan = scan_outcomes(control_for(config), family_for(config), effective_grid(config));
  std::size_t best = 0;
  for (std::size_t i = 1; i < scan.size(); ++i) {
    if (scan[i].k > scan[best].k + 1e-12) best = i;
  }
  for (std::size_t i = 0; i < scan.size(); ++i) {
    table.add_row({scan[i].lambda, scan[i].phi, scan[i].k, i == best});
  }
  return table;
}

Table tradeoff(const RunConfig& config) {
  Table table{"tradeoff", {"q", "outcome_label", "K_total", "K"}, {}};
  for (double q : config.q_grid()) {
    const auto control = ControlState::two_path(q);
    const IsotropicSwitchExpansion expansion(2, ket0(), control);
    const double total = k_total(control);
    for (auto label : {OutcomeLabel::kPlus, OutcomeLabel::kMinus, OutcomeLabel::kZero, OutcomeLabel::kOne}) {
      table.add_row({q, std::string(to_string(label)), total, figure_of_merit(expansion, outcome_state(label)).k});
    }
    if (config.outcome == OutcomeChoice::kCustom) {
      table.add_row({q, std::string("custom"), total, figure_of_merit(expansion, config.outcome_state()).k});
    }
  }
  return table;
}

Table coherence_scan(const RunConfig& config) {
  Table table{"coherence-scan", {"q", "coherence", "K_optimal", "lambda_opt", "phi_opt", "K_plus"}, {}};
  const auto grid = effective_grid(config);
  for (double q : config.q_grid()) {
    const auto control = ControlState::two_path(q);
    const auto best = optimize_outcome(control, OutcomeFamilyKind::kTwoPath, grid);
    const double k_plus = figure_of_merit(hadamard_state(HadamardOutcome::kPlus), control, 2).k;
    table.add_row({q, l1_coherence(control.state()), best.k, best.lambda, best.phi, k_plus});
  }
  return table;
}

Table three_path_profile(const RunConfig& config) {
  Table table{"three-path", {"alpha1", "alpha2", "alpha3", "p", "F", "F3_no_switch", "annotation"}, {}};
  const auto ps = config.p_grid();
  for (const auto& alpha : alpha_tuples(config)) {
    const auto profile = alpha_fidelity_profile(AlphaOutcome(alpha), ps);
    for (const auto& point : profile) {
      table.add_row({alpha[0], alpha[1], alpha[2], point.p, optional_cell(point.fidelity),
                     no_switch_fidelity(point.p, 3), std::string(flag_name(point.flag))});
    }
  }
  return table;
}

Table three_path_scan(const RunConfig& config) {
  Table table{"three-path-scan", {"phi", "lambda", "K"}, {}};
  const auto scan = scan_outcomes(ControlState::uniform(3), OutcomeFamilyKind::kThreePath, effective_grid(config));
  for (const auto& point : scan) table.add_row({point.phi, point.lambda, point.k});
  return table;
}

}  // namespace qswitch::app
