#include "qswitch/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qswitch/errors.hpp"

namespace qswitch {
namespace {

void check_spec(const QuadratureSpec& spec, double a, double b) {
  if (spec.base_points < 5 || spec.base_points % 2 == 0) {
    throw DomainError("quadrature needs an odd number of base points >= 5");
  }
  if (!(b > a)) {
    throw DomainError("quadrature interval is empty");
  }
}

struct SimpsonPair {
  double fine = 0.0;    // m intervals
  double coarse = 0.0;  // m/2 intervals, every other node
};

// m must be a multiple of 4 so both rules are valid.
SimpsonPair simpson_pair(const std::function<double(double)>& g, double a, double b, int m) {
  const double h = (b - a) / m;
  std::vector<double> y(static_cast<std::size_t>(m) + 1);
  for (int k = 0; k <= m; ++k) {
    y[static_cast<std::size_t>(k)] = g(k == m ? b : a + k * h);
  }
  auto rule = [&](int stride) {
    const int n = m / stride;
    double sum = y.front() + y.back();
    for (int k = 1; k < n; ++k) {
      sum += (k % 2 == 1 ? 4.0 : 2.0) * y[static_cast<std::size_t>(k * stride)];
    }
    return sum * (h * stride) / 3.0;
  };
  return {rule(1), rule(2)};
}

int intervals_for(double length, double base_step) {
  const int m = static_cast<int>(std::ceil(length / base_step - 1e-9));
  return std::max(4, (m + 3) / 4 * 4);
}

}  // namespace

double integrate_simpson(const std::function<double(double)>& f, double a, double b, const QuadratureSpec& spec) {
  check_spec(spec, a, b);
  const int m = (spec.base_points - 1 + 3) / 4 * 4;
  const auto pair = simpson_pair(f, a, b, m);
  const double error = std::abs(pair.fine - pair.coarse) / 15.0;
  if (!(error <= spec.abs_tolerance)) {
    throw NumericalError("Simpson error estimate " + std::to_string(error) + " exceeds tolerance");
  }
  return pair.fine;
}

double integrate_excess(const std::function<double(double)>& f, double level, double a, double b,
                        const QuadratureSpec& spec) {
  check_spec(spec, a, b);
  const int n = spec.base_points;
  const double h = (b - a) / (n - 1);
  auto node = [&](int k) { return k == n - 1 ? b : a + k * h; };
  auto above = [&](double x) { return f(x) > level; };

  // Each crossing keeps both ends of its bisection bracket so a segment is
  // integrated from the side where it is actually above the level.
  struct Crossing {
    double left;
    double right;
  };
  std::vector<Crossing> crossings{{a, a}};
  bool prev = above(a);
  for (int k = 1; k < n; ++k) {
    const bool cur = above(node(k));
    if (cur != prev) {
      double lo = node(k - 1);
      double hi = node(k);
      while (hi - lo > spec.kink_tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (above(mid) == prev ? lo : hi) = mid;
      }
      crossings.push_back({lo, hi});
    }
    prev = cur;
  }
  crossings.push_back({b, b});

  auto excess = [&](double x) { return std::max(f(x) - level, 0.0); };
  double total = 0.0;
  double error = 0.0;
  for (std::size_t s = 0; s + 1 < crossings.size(); ++s) {
    const double lo = crossings[s].right;
    const double hi = crossings[s + 1].left;
    if (!(hi > lo) || !above(0.5 * (lo + hi))) {
      continue;
    }
    const auto pair = simpson_pair(excess, lo, hi, intervals_for(hi - lo, h));
    total += pair.fine;
    error += std::abs(pair.fine - pair.coarse) / 15.0;
  }
  if (!(error <= spec.abs_tolerance)) {
    throw NumericalError("excess integral error estimate " + std::to_string(error) + " exceeds tolerance");
  }
  return total;
}

}  // namespace qswitch
