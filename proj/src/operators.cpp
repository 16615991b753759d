#include "frops/operators.hpp"

#include <cmath>

#include "frops/special.hpp"

namespace frops {

namespace {

// (1 - <z,u>)^{-c} on the principal branch.
complex_t inv_power_analytic(const BallPoint& z, const BallPoint& u, double c) {
  const complex_t d = complex_t{1.0, 0.0} - inner_product(z, u);
  return std::exp(-c * std::log(d));
}

double inv_power_modulus(const BallPoint& z, const BallPoint& u, double c) {
  const complex_t d = complex_t{1.0, 0.0} - inner_product(z, u);
  return std::pow(std::abs(d), -c);
}

}  // namespace

complex_t kernel_value(const KernelFactor& factor, const BallPoint& z, const BallPoint& u) {
  const double radial = std::pow(z.one_minus_sq(), factor.a) *
                        std::pow(u.one_minus_sq(), factor.b);
  if (factor.kind == KernelKind::analytic)
    return radial * inv_power_analytic(z, u, factor.c);
  return complex_t{radial * inv_power_modulus(z, u, factor.c), 0.0};
}

complex_t apply_T(const Bivariate& f, const MultiOperatorSpec& spec,
                  const ProductPoint& at, const ProductRule& rule) {
  const double t1 = rule.rule_z.theta();
  const double t2 = rule.rule_w.theta();
  const int nn = rule.rule_z.dimension();
  // dv = (1/c_theta) (1-|u|^2)^{-theta} dv_theta on each factor.
  const double conv = 1.0 / (norm_const(t1, nn) * norm_const(t2, rule.rule_w.dimension()));
  const KernelFactor& k1 = spec.factor1;
  const KernelFactor& k2 = spec.factor2;

  const complex_t integral = integrate(
      [&](const BallPoint& u, const BallPoint& eta) {
        return std::pow(u.one_minus_sq(), k1.b - t1) *
               std::pow(eta.one_minus_sq(), k2.b - t2) *
               inv_power_analytic(at.z, u, k1.c) *
               inv_power_analytic(at.w, eta, k2.c) * f(u, eta);
      },
      rule);
  return std::pow(at.z.one_minus_sq(), k1.a) * std::pow(at.w.one_minus_sq(), k2.a) *
         conv * integral;
}

double apply_S(const Bivariate& f, const MultiOperatorSpec& spec,
               const ProductPoint& at, const ProductRule& rule) {
  const double t1 = rule.rule_z.theta();
  const double t2 = rule.rule_w.theta();
  const double conv = 1.0 / (norm_const(t1, rule.rule_z.dimension()) *
                             norm_const(t2, rule.rule_w.dimension()));
  const KernelFactor& k1 = spec.factor1;
  const KernelFactor& k2 = spec.factor2;

  const double integral = integrate_real(
      [&](const BallPoint& u, const BallPoint& eta) {
        return std::pow(u.one_minus_sq(), k1.b - t1) *
               std::pow(eta.one_minus_sq(), k2.b - t2) *
               inv_power_modulus(at.z, u, k1.c) *
               inv_power_modulus(at.w, eta, k2.c) * std::abs(f(u, eta));
      },
      rule);
  return std::pow(at.z.one_minus_sq(), k1.a) * std::pow(at.w.one_minus_sq(), k2.a) *
         conv * integral;
}

complex_t apply_adjoint(const Bivariate& g, const RealPair& b, const RealPair& c,
                        const WeightPair& alpha, const WeightPair& beta,
                        const ProductPoint& at, const ProductRule& rule) {
  const double t1 = rule.rule_z.theta();
  const double t2 = rule.rule_w.theta();
  const double conv = 1.0 / (norm_const(t1, rule.rule_z.dimension()) *
                             norm_const(t2, rule.rule_w.dimension()));

  const complex_t integral = integrate(
      [&](const BallPoint& u, const BallPoint& eta) {
        return std::pow(u.one_minus_sq(), beta.w1 - t1) *
               std::pow(eta.one_minus_sq(), beta.w2 - t2) *
               inv_power_analytic(at.z, u, c[0]) *
               inv_power_analytic(at.w, eta, c[1]) * g(u, eta);
      },
      rule);
  return std::pow(at.z.one_minus_sq(), b[0] - alpha.w1) *
         std::pow(at.w.one_minus_sq(), b[1] - alpha.w2) * conv * integral;
}

complex_t bergman_project(const Bivariate& f, const RealPair& gamma,
                          const ProductPoint& at, const ProductRule& rule) {
  if (!(gamma[0] > -1.0) || !(gamma[1] > -1.0))
    throw std::domain_error("bergman_project: gamma must be > -1");
  const int nn = rule.rule_z.dimension();
  const double t1 = rule.rule_z.theta();
  const double t2 = rule.rule_w.theta();
  // dv_gamma = (c_gamma/c_theta) (1-|u|^2)^{gamma-theta} dv_theta.
  const double conv = norm_const(gamma[0], nn) * norm_const(gamma[1], rule.rule_w.dimension()) /
                      (norm_const(t1, nn) * norm_const(t2, rule.rule_w.dimension()));
  const double c1 = nn + 1.0 + gamma[0];
  const double c2 = rule.rule_w.dimension() + 1.0 + gamma[1];

  return conv * integrate(
                    [&](const BallPoint& u, const BallPoint& eta) {
                      return std::pow(u.one_minus_sq(), gamma[0] - t1) *
                             std::pow(eta.one_minus_sq(), gamma[1] - t2) *
                             inv_power_analytic(at.z, u, c1) *
                             inv_power_analytic(at.w, eta, c2) * f(u, eta);
                    },
                    rule);
}

complex_t berezin_transform(const Bivariate& f, const RealPair& gamma,
                            const ProductPoint& at, const ProductRule& rule) {
  if (!(gamma[0] > -1.0) || !(gamma[1] > -1.0))
    throw std::domain_error("berezin_transform: gamma must be > -1");
  const int nn = rule.rule_z.dimension();
  const double t1 = rule.rule_z.theta();
  const double t2 = rule.rule_w.theta();
  const double conv = norm_const(gamma[0], nn) * norm_const(gamma[1], rule.rule_w.dimension()) /
                      (norm_const(t1, nn) * norm_const(t2, rule.rule_w.dimension()));
  const double e1 = nn + 1.0 + gamma[0];
  const double e2 = rule.rule_w.dimension() + 1.0 + gamma[1];

  const complex_t integral = integrate(
      [&](const BallPoint& u, const BallPoint& eta) {
        return std::pow(u.one_minus_sq(), gamma[0] - t1) *
               std::pow(eta.one_minus_sq(), gamma[1] - t2) *
               inv_power_modulus(at.z, u, 2.0 * e1) *
               inv_power_modulus(at.w, eta, 2.0 * e2) * f(u, eta);
      },
      rule);
  return std::pow(at.z.one_minus_sq(), e1) * std::pow(at.w.one_minus_sq(), e2) *
         conv * integral;
}

}  // namespace frops
