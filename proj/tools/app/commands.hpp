#pragma once

#include "config.hpp"
#include "table.hpp"

namespace qswitch::app {

// p, F1, F2, F_switch for the chosen outcome, success probability, 2/3.
Table fidelity_curves(const RunConfig& config);

// mu, p_lo, p_hi, region2_exists over a mu grid (1/6 always included).
Table region_map(const RunConfig& config);
// p, q, F for the |+> outcome.
Table region_surface(const RunConfig& config);

// lambda, phi, K over the outcome family for --paths 2 or 3.
Table fom_scan(const RunConfig& config);

// q, outcome_label, K_total, K.
Table tradeoff(const RunConfig& config);

// q, coherence, K_optimal and its argmax, K for |+>.
Table coherence_scan(const RunConfig& config);

// Fidelity profiles of the three-path alpha outcomes plus the no-switch F3.
// annotation is "from_marginal" where the outcome has zero probability on a
// product state and "degenerate" (F empty) where the state is correlated.
Table three_path_profile(const RunConfig& config);
// phi, lambda, K over the three-path family.
Table three_path_scan(const RunConfig& config);

}  // namespace qswitch::app
