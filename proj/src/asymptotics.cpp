#include "frops/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "frops/special.hpp"

namespace frops {

double eval_I(const BallPoint& z, double c, double t, const QuadratureRule& rule) {
  if (!(t > -1.0)) throw std::domain_error("eval_I: t must be > -1");
  const double theta = rule.theta();
  const double conv = 1.0 / norm_const(theta, rule.dimension());
  const double value = integrate_real(
      [&](const BallPoint& w) {
        const complex_t d = complex_t{1.0, 0.0} - inner_product(z, w);
        return std::pow(w.one_minus_sq(), t - theta) * std::pow(std::abs(d), -c);
      },
      rule);
  return conv * value;
}

double eval_I_refined(double radius, double c, double t, int n, double rel_tol,
                      int base_radial, int n_angular, int max_doublings) {
  if (n != 1)
    throw std::domain_error("eval_I_refined: deterministic refinement needs n = 1");
  const BallPoint z = BallPoint::axial(n, radius);
  double prev = eval_I(z, c, t, build_disc_rule(base_radial, n_angular, t));
  int radial = base_radial;
  for (int k = 0; k < max_doublings; ++k) {
    radial *= 2;
    const double cur = eval_I(z, c, t, build_disc_rule(radial, n_angular, t));
    if (std::abs(cur - prev) <= rel_tol * std::abs(cur)) return cur;
    prev = cur;
  }
  throw AccuracyError("eval_I_refined: no convergence at radius " +
                      std::to_string(radius));
}

RegimeReport classify_regime(double c, double t, int n) {
  if (!(t > -1.0)) throw std::domain_error("classify_regime: t must be > -1");
  RegimeReport report;
  report.c = c;
  report.t = t;
  report.n = n;
  const double d = n + 1.0 + t - c;
  if (d > 0.0)
    report.regime = Regime::bounded;
  else if (d == 0.0)
    report.regime = Regime::logarithmic;
  else
    report.regime = Regime::power;
  return report;
}

std::vector<double> default_radius_schedule() {
  std::vector<double> radii;
  for (int k = 3; k <= 10; ++k) radii.push_back(std::sqrt(1.0 - std::pow(2.0, -k)));
  return radii;
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t m = x.size();
  if (m != y.size() || m < 2) throw std::domain_error("fit_line: need >= 2 points");
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss_res += r * r;
  }
  fit.rms_residual = std::sqrt(ss_res / m);
  fit.r_squared = (syy > 0.0) ? 1.0 - ss_res / syy : 1.0;
  return fit;
}

RegimeReport fit_asymptotic(double c, double t, int n,
                            const std::vector<double>& radii, double rel_tol,
                            int base_radial, int n_angular) {
  if (radii.size() < 2)
    throw std::domain_error("fit_asymptotic: need >= 2 radii");
  RegimeReport report = classify_regime(c, t, n);

  std::vector<double> one_minus(radii.size()), values(radii.size());
  for (std::size_t i = 0; i < radii.size(); ++i) {
    one_minus[i] = 1.0 - radii[i] * radii[i];
    values[i] = eval_I_refined(radii[i], c, t, n, rel_tol, base_radial, n_angular);
  }

  switch (report.regime) {
    case Regime::bounded: {
      const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
      report.fitted_exponent = std::nullopt;
      report.fit_residual = *hi / *lo;
      break;
    }
    case Regime::logarithmic: {
      std::vector<double> x(radii.size());
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::log(1.0 / one_minus[i]);
      const LineFit fit = fit_line(x, values);
      report.fitted_exponent = fit.slope;
      report.fit_residual = 1.0 - fit.r_squared;
      break;
    }
    case Regime::power: {
      std::vector<double> x(radii.size()), y(radii.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = std::log(one_minus[i]);
        y[i] = std::log(values[i]);
      }
      const LineFit fit = fit_line(x, y);
      report.fitted_exponent = fit.slope;
      report.fit_residual = fit.rms_residual;
      break;
    }
  }
  return report;
}

}  // namespace frops
