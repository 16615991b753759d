#pragma once

#include <optional>
#include <vector>

#include "frops/quadrature.hpp"

// The radial integral I_{c,t}(z) = int_{B_n} (1-|w|^2)^t |1-<z,w>|^{-c} dv(w)
// (plain normalized volume dv, the weight written out) and empirical checks
// of its three-regime law as |z| -> 1:
//   n+1+t-c > 0  bounded,  = 0  ~ log 1/(1-|z|^2),  < 0  ~ (1-|z|^2)^{n+1+t-c}.

namespace frops {

enum class Regime { bounded, logarithmic, power };

struct RegimeReport {
  double c = 0.0;
  double t = 0.0;
  int n = 1;
  Regime regime = Regime::bounded;
  // Power regime: log-log slope. Log regime: slope of I vs log(1/(1-r^2)).
  // Bounded regime: none.
  std::optional<double> fitted_exponent;
  // Power regime: RMS residual of the log-log fit. Log regime: 1 - R^2.
  // Bounded regime: max/min ratio of I over the schedule.
  double fit_residual = 0.0;
};

// Quadrature value of I_{c,t}(z) on the given rule (any theta; converted).
double eval_I(const BallPoint& z, double c, double t, const QuadratureRule& rule);

// I_{c,t} at radius r on the positive real axis, with the radial node count
// doubled from base_radial until two successive refinements agree to rel_tol.
// Throws AccuracyError if agreement is not reached.
double eval_I_refined(double radius, double c, double t, int n,
                      double rel_tol = 1e-4, int base_radial = 64,
                      int n_angular = 192, int max_doublings = 6);

// Sign test on n+1+t-c; fills only c, t, n, regime.
RegimeReport classify_regime(double c, double t, int n);

// Radii with 1-r^2 = 2^{-3}, ..., 2^{-10}.
std::vector<double> default_radius_schedule();

// Evaluates I over the radii (refined quadrature) and fits the law of the
// predicted regime, reporting slope/residual as documented on RegimeReport.
RegimeReport fit_asymptotic(double c, double t, int n,
                            const std::vector<double>& radii,
                            double rel_tol = 1e-4, int base_radial = 64,
                            int n_angular = 192);

// Ordinary least squares y ~ intercept + slope * x; returns {slope, intercept,
// rms_residual, r_squared}.
struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double rms_residual = 0.0;
  double r_squared = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace frops
