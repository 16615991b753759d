#include "frops/schur.hpp"

#include <algorithm>
#include <cmath>

#include "frops/special.hpp"

namespace frops {

namespace {

constexpr double kEqTol = 1e-12;

double inv_or_zero(double x) { return std::isinf(x) ? 0.0 : 1.0 / x; }

struct FactorWeights {
  double lambda = 0.0, tau = 0.0, r = 0.0, s = 0.0;
  double gamma = 0.0, delta = 0.0, kb = 0.0, kc = 0.0;
};

// The general construction: r at the midpoint of its interval, s from the
// linear (tau-scaled) feasibility inequality. Works for p > 1 and for p = 1
// with alpha < b (where the Hoelder-conjugate terms vanish).
FactorWeights interior_factor(int n, double p, double q, double alpha, double beta,
                              double b, double c) {
  if (!(alpha + 1.0 < p * (b + 1.0)))
    throw InfeasibleError("schur: alpha+1 < p(b+1) fails");
  FactorWeights f;
  f.lambda = (n + 1.0 + beta) / q - (n + 1.0 + alpha) / p;
  // The split exponents depend only on the critical kernel power
  // n+1+b+lambda, never on the operator's actual c; constructing weights for
  // a c above the bound is allowed and makes the verification ratios diverge.
  const double c_star = n + 1.0 + b + f.lambda;
  f.tau = c_star - b + alpha;
  f.r = -(1.0 + beta) / (2.0 * q);
  const double ipp = inv_or_zero(holder_conjugate(p));
  const double L = -f.tau * (1.0 + alpha) * ipp - (b - alpha) * (n + 1.0 + alpha) * ipp;
  const double U = (b - alpha) * (n + 1.0 + beta) / q;
  const double P = f.tau + (b - alpha);
  if (!(P > 0.0) || !(L < U))
    throw InfeasibleError("schur: empty feasibility interval for s");
  f.s = (0.5 * (L + U) + (b - alpha) * f.r) / P;
  f.gamma = ((n + 1.0 + alpha) * ipp + f.s - f.r) / f.tau;
  f.delta = ((n + 1.0 + beta) / q + f.r - f.s) / f.tau;
  f.kb = b - alpha;
  f.kc = c;
  return f;
}

// p = 1 factor with alpha = b: gamma = -r/c, h1-exponent 0; a vanishing c is
// replaced by the midpoint of (0, (n+1+beta)/q), which dominates it.
FactorWeights equal_factor(int n, double q, double alpha, double beta, double b,
                           double c) {
  if (std::abs(alpha - b) > kEqTol)
    throw InfeasibleError("schur: alpha = b fails");
  FactorWeights f;
  const double bound = (n + 1.0 + beta) / q;
  if (!(c < bound)) throw InfeasibleError("schur: c < (n+1+beta)/q fails");
  f.tau = bound;
  f.lambda = bound - (n + 1.0 + alpha);
  f.r = -(1.0 + beta) / (2.0 * q);
  f.kc = (std::abs(c) <= kEqTol) ? 0.5 * bound : c;
  f.gamma = -f.r / f.kc;
  f.delta = 1.0 + f.r / f.kc;
  f.s = 0.0;
  f.kb = 0.0;
  return f;
}

// p = 1 factor with alpha < b inside the mixed case: gamma = -r/tau with
// tau = (n+1+beta)/q, h1-exponent 0.
FactorWeights below_factor(int n, double q, double alpha, double beta, double b,
                           double c) {
  if (!(alpha < b)) throw InfeasibleError("schur: alpha < b fails");
  FactorWeights f;
  f.tau = (n + 1.0 + beta) / q;
  f.lambda = f.tau - (n + 1.0 + alpha);
  const double c_star = b - alpha + f.tau;
  if (c > c_star + kEqTol)
    throw InfeasibleError("schur: c exceeds b-alpha+(n+1+beta)/q");
  f.r = -(1.0 + beta) / (2.0 * q);
  f.gamma = -f.r / f.tau;
  f.delta = 1.0 + f.r / f.tau;
  f.s = 0.0;
  f.kb = b - alpha;
  f.kc = c;
  return f;
}

void store(SchurWeights& w, int i, const FactorWeights& f) {
  w.lambda[i] = f.lambda;
  w.tau[i] = f.tau;
  w.r[i] = f.r;
  w.s[i] = f.s;
  w.gamma[i] = f.gamma;
  w.delta[i] = f.delta;
  w.kernel_b[i] = f.kb;
  w.kernel_c[i] = f.kc;
}

// int (1-|u|^2)^{extra} |1-<x,u>|^{-c} dv_theta(u), evaluated on a rule that
// may target a different measure (converted internally).
double kernel_integral(const BallPoint& x, double extra, double c, double theta,
                       const QuadratureRule& rule) {
  const double conv = norm_const(theta, rule.dimension()) /
                      norm_const(rule.theta(), rule.dimension());
  const double shift = theta - rule.theta();
  return conv * integrate_real(
                    [&](const BallPoint& u) {
                      const complex_t d = complex_t{1.0, 0.0} - inner_product(x, u);
                      return std::pow(u.one_minus_sq(), extra + shift) *
                             std::pow(std::abs(d), -c);
                    },
                    rule);
}

// sup over rule nodes of (1-|u|^2)^{extra} |1-<x,u>|^{-c}.
double kernel_sup(const BallPoint& x, double extra, double c,
                  const QuadratureRule& rule) {
  double m = 0.0;
  for (const BallPoint& u : rule.nodes()) {
    const complex_t d = complex_t{1.0, 0.0} - inner_product(x, u);
    m = std::max(m, std::pow(u.one_minus_sq(), extra) * std::pow(std::abs(d), -c));
  }
  return m;
}

}  // namespace

SchurWeights construct_weights(const OperatorParams& params) {
  params.p.require_finite("schur exponent p");
  params.q.require_finite("schur exponent q");
  const int n = params.n;
  const double p1 = params.p.p1, p2 = params.p.p2;
  const double q1 = params.q.p1, q2 = params.q.p2;
  const double al1 = params.alpha.w1, al2 = params.alpha.w2;

  SchurWeights w;
  w.alpha = {al1, al2};
  w.beta_eff = {params.beta.w1 + params.a[0] * q1, params.beta.w2 + params.a[1] * q2};
  for (int i = 0; i < 2; ++i)
    if (!(w.beta_eff[i] > -1.0))
      throw InfeasibleError("schur: -q*a < beta+1 fails");
  const double be1 = w.beta_eff[0], be2 = w.beta_eff[1];
  const double b1 = params.b[0], b2 = params.b[1];
  const double c1 = params.c[0], c2 = params.c[1];
  const bool one1 = p1 == 1.0, one2 = p2 == 1.0;
  const bool eq1 = std::abs(al1 - b1) <= kEqTol;
  const bool eq2 = std::abs(al2 - b2) <= kEqTol;

  if (one1 && one2) {
    if (eq1 && eq2) {
      w.case_tag = SchurCase::both_one_eq;
      store(w, 0, equal_factor(n, q1, al1, be1, b1, c1));
      store(w, 1, equal_factor(n, q2, al2, be2, b2, c2));
    } else if (eq1 || eq2) {
      w.case_tag = SchurCase::mixed;
      store(w, 0, eq1 ? equal_factor(n, q1, al1, be1, b1, c1)
                      : below_factor(n, q1, al1, be1, b1, c1));
      store(w, 1, eq2 ? equal_factor(n, q2, al2, be2, b2, c2)
                      : below_factor(n, q2, al2, be2, b2, c2));
    } else {
      w.case_tag = SchurCase::interior;
      store(w, 0, interior_factor(n, p1, q1, al1, be1, b1, c1));
      store(w, 1, interior_factor(n, p2, q2, al2, be2, b2, c2));
    }
    return w;
  }
  if (one2) {
    w.case_tag = SchurCase::p2_one;
    store(w, 0, interior_factor(n, p1, q1, al1, be1, b1, c1));
    store(w, 1, equal_factor(n, q2, al2, be2, b2, c2));
    return w;
  }
  if (one1) {
    w.case_tag = SchurCase::p1_one;
    store(w, 0, equal_factor(n, q1, al1, be1, b1, c1));
    store(w, 1, interior_factor(n, p2, q2, al2, be2, b2, c2));
    return w;
  }
  w.case_tag = SchurCase::interior;
  store(w, 0, interior_factor(n, p1, q1, al1, be1, b1, c1));
  store(w, 1, interior_factor(n, p2, q2, al2, be2, b2, c2));
  return w;
}

double verify_schur_first(const SchurWeights& w, const OperatorParams& params,
                          const std::vector<ProductPoint>& sample_points,
                          const ProductRule& rule) {
  const double p1 = params.p.p1, p2 = params.p.p2;
  const bool one1 = p1 == 1.0, one2 = p2 == 1.0;
  const double al1 = w.alpha[0], al2 = w.alpha[1];

  double max_ratio = 0.0;
  for (const ProductPoint& pt : sample_points) {
    double lhs = 0.0, rhs_exp = 1.0;
    if (one1 && one2) {
      // esssup over both inner variables against h2.
      lhs = kernel_sup(pt.z, w.kernel_b[0] * w.gamma[0] + w.s[0],
                       w.kernel_c[0] * w.gamma[0], rule.rule_z) *
            kernel_sup(pt.w, w.kernel_b[1] * w.gamma[1] + w.s[1],
                       w.kernel_c[1] * w.gamma[1], rule.rule_w);
      rhs_exp = 1.0;
    } else if (one1) {
      // sup in the first variable, integral in the second; both to p2'.
      const double pp2 = holder_conjugate(p2);
      lhs = std::pow(kernel_sup(pt.z, w.kernel_b[0] * w.gamma[0] + w.s[0],
                                w.kernel_c[0] * w.gamma[0], rule.rule_z),
                     pp2) *
            kernel_integral(pt.w,
                            (w.kernel_b[1] * w.gamma[1] + w.s[1]) * pp2,
                            w.kernel_c[1] * w.gamma[1] * pp2, al2, rule.rule_w);
      rhs_exp = pp2;
    } else if (one2) {
      // integral in the first variable to p1', sup in the second.
      const double pp1 = holder_conjugate(p1);
      lhs = kernel_integral(pt.z, (w.kernel_b[0] * w.gamma[0] + w.s[0]) * pp1,
                            w.kernel_c[0] * w.gamma[0] * pp1, al1, rule.rule_z) *
            std::pow(kernel_sup(pt.w, w.kernel_b[1] * w.gamma[1] + w.s[1],
                                w.kernel_c[1] * w.gamma[1], rule.rule_w),
                     pp1);
      rhs_exp = pp1;
    } else {
      // Nested integral: inner to p1', outer to p2'; separability gives
      // A(z)^{p2'/p1'} * B(w).
      const double pp1 = holder_conjugate(p1);
      const double pp2 = holder_conjugate(p2);
      const double A =
          kernel_integral(pt.z, (w.kernel_b[0] * w.gamma[0] + w.s[0]) * pp1,
                          w.kernel_c[0] * w.gamma[0] * pp1, al1, rule.rule_z);
      const double B =
          kernel_integral(pt.w, (w.kernel_b[1] * w.gamma[1] + w.s[1]) * pp2,
                          w.kernel_c[1] * w.gamma[1] * pp2, al2, rule.rule_w);
      lhs = std::pow(A, pp2 / pp1) * B;
      rhs_exp = pp2;
    }
    const double h2 = std::pow(pt.z.one_minus_sq(), w.r[0]) *
                      std::pow(pt.w.one_minus_sq(), w.r[1]);
    const double ratio = lhs / std::pow(h2, rhs_exp);
    if (!std::isfinite(ratio))
      throw AccuracyError("verify_schur_first: non-finite ratio");
    max_ratio = std::max(max_ratio, ratio);
  }
  return max_ratio;
}

double verify_schur_second(const SchurWeights& w, const OperatorParams& params,
                           const std::vector<ProductPoint>& sample_points,
                           const ProductRule& rule) {
  const double q1 = params.q.p1, q2 = params.q.p2;

  double max_ratio = 0.0;
  for (const ProductPoint& pt : sample_points) {
    // Separability: C(u)^{q2/q1} * D(eta) over the output measures dv_beta.
    const double C =
        std::pow(pt.z.one_minus_sq(), w.kernel_b[0] * w.delta[0] * q1) *
        kernel_integral(pt.z, w.r[0] * q1, w.kernel_c[0] * w.delta[0] * q1,
                        w.beta_eff[0], rule.rule_z);
    const double D =
        std::pow(pt.w.one_minus_sq(), w.kernel_b[1] * w.delta[1] * q2) *
        kernel_integral(pt.w, w.r[1] * q2, w.kernel_c[1] * w.delta[1] * q2,
                        w.beta_eff[1], rule.rule_w);
    const double lhs = std::pow(C, q2 / q1) * D;
    const double h1 = std::pow(pt.z.one_minus_sq(), w.s[0]) *
                      std::pow(pt.w.one_minus_sq(), w.s[1]);
    const double ratio = lhs / std::pow(h1, q2);
    if (!std::isfinite(ratio))
      throw AccuracyError("verify_schur_second: non-finite ratio");
    max_ratio = std::max(max_ratio, ratio);
  }
  return max_ratio;
}

double schur_norm_bound(double C1, double C2, const ExponentPair& p,
                        const ExponentPair& q, SchurCase case_tag) {
  if (!(C1 > 0.0) || !(C2 > 0.0))
    throw std::domain_error("schur_norm_bound: constants must be > 0");
  const double e2 = 1.0 / q.p2;
  if (p.p1 == 1.0 && p.p2 == 1.0) return C1 * std::pow(C2, e2);
  if (case_tag == SchurCase::p2_one)
    return std::pow(C1, inv_or_zero(holder_conjugate(p.p1))) * std::pow(C2, e2);
  return std::pow(C1, inv_or_zero(holder_conjugate(p.p2))) * std::pow(C2, e2);
}

}  // namespace frops
