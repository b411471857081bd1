#pragma once

#include <functional>

namespace qswitch {

struct QuadratureSpec {
  int base_points = 3001;         // odd; nodes of the base composite-Simpson grid
  double kink_tolerance = 1e-12;  // bisection width when isolating a crossing
  double abs_tolerance = 1e-8;    // bound on the Richardson error estimate
};

// Composite Simpson on [a, b] over spec.base_points nodes. Throws
// NumericalError if the halved-grid error estimate exceeds abs_tolerance.
double integrate_simpson(const std::function<double(double)>& f, double a, double b, const QuadratureSpec& spec);

// Integral of max(f(x) - level, 0) over [a, b]. Crossings of `level` between
// base nodes are located by bisection and the integral is split there, so
// Simpson only ever sees smooth pieces. f may return -infinity at points
// where it is undefined; they count as below the level.
double integrate_excess(const std::function<double(double)>& f, double level, double a, double b,
                        const QuadratureSpec& spec);

}  // namespace qswitch
