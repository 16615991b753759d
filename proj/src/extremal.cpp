#include "frops/extremal.hpp"

#include <cmath>
#include <functional>

#include "frops/asymptotics.hpp"
#include "frops/special.hpp"

namespace frops {

namespace {

complex_t cpow(const complex_t& base, double e) {
  return std::exp(e * std::log(base));
}

complex_t one_minus_inner(const BallPoint& a, const BallPoint& x) {
  return complex_t{1.0, 0.0} - inner_product(a, x);
}

using Factor = std::function<complex_t(const BallPoint&)>;

// The families are separable; expose the one-ball factors.
Factor family_factor(const ExtremalFamily& f, int which) {
  switch (f.kind) {
    case FamilyKind::power: {
      const double N = (which == 0) ? f.N1 : f.N2;
      return [N](const BallPoint& x) {
        return complex_t{std::pow(x.one_minus_sq(), N), 0.0};
      };
    }
    case FamilyKind::kernel: {
      const BallPoint anchor = (which == 0) ? f.xi : f.zeta;
      const double pre = std::pow(anchor.one_minus_sq(),
                                  (which == 0) ? f.pow1 : f.pow2);
      const double ker = (which == 0) ? f.ker1 : f.ker2;
      return [anchor, pre, ker](const BallPoint& x) {
        return pre * cpow(one_minus_inner(x, anchor), -ker);
      };
    }
    case FamilyKind::unimodular_w:
    case FamilyKind::unimodular_z: {
      const bool active = (f.kind == FamilyKind::unimodular_z) == (which == 0);
      if (!active)
        return [](const BallPoint&) { return complex_t{1.0, 0.0}; };
      const BallPoint anchor = (f.kind == FamilyKind::unimodular_z) ? f.xi : f.zeta;
      const double m = f.m, q = f.q;
      return [anchor, m, q](const BallPoint& x) {
        const complex_t d = one_minus_inner(anchor, x);
        return cpow(d, m / q) * std::pow(std::abs(d), -m);
      };
    }
  }
  throw std::domain_error("family_factor: unknown kind");
}

// [ int |g|^p dv_theta ]^{1/p} on a rule that may target another measure;
// p = inf becomes a max over nodes.
double weighted_p_norm(const Factor& g, double p, double theta,
                       const QuadratureRule& rule) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (const BallPoint& x : rule.nodes()) m = std::max(m, std::abs(g(x)));
    return m;
  }
  const double conv = norm_const(theta, rule.dimension()) /
                      norm_const(rule.theta(), rule.dimension());
  const double shift = theta - rule.theta();
  const double sum = integrate_real(
      [&](const BallPoint& x) {
        return std::pow(std::abs(g(x)), p) * std::pow(x.one_minus_sq(), shift);
      },
      rule);
  return std::pow(conv * sum, 1.0 / p);
}

// int (1-|z|^2)^{extra} |1-<x,z>|^{-c} dv(z), plain normalized volume.
double plain_kernel_integral(const BallPoint& x, double extra, double c,
                             const QuadratureRule& rule) {
  const double conv = 1.0 / norm_const(rule.theta(), rule.dimension());
  return conv * integrate_real(
                    [&](const BallPoint& z) {
                      return std::pow(z.one_minus_sq(), extra - rule.theta()) *
                             std::pow(std::abs(one_minus_inner(x, z)), -c);
                    },
                    rule);
}

RealPair beta_effective(const OperatorParams& P) {
  return {P.beta.w1 + P.a[0] * P.q.p1, P.beta.w2 + P.a[1] * P.q.p2};
}

}  // namespace

ExtremalFamily make_power_family(double N1, double N2, const WeightPair& beta) {
  if (!(N1 + beta.w1 > -1.0) || !(N2 + beta.w2 > -1.0))
    throw std::domain_error("power family needs N_i + beta_i > -1");
  ExtremalFamily f;
  f.kind = FamilyKind::power;
  f.N1 = N1;
  f.N2 = N2;
  return f;
}

ExtremalFamily make_kernel_family(const OperatorParams& params, const BallPoint& xi,
                                  const BallPoint& zeta) {
  ExtremalFamily f;
  f.kind = FamilyKind::kernel;
  f.xi = xi;
  f.zeta = zeta;
  const double n1 = params.n + 1.0;
  f.ker1 = n1 + params.b[0];
  f.ker2 = n1 + params.b[1];
  f.pow1 = f.ker1 - (n1 + params.alpha.w1) / params.p.p1;
  f.pow2 = f.ker2 - (n1 + params.alpha.w2) / params.p.p2;
  return f;
}

ExtremalFamily make_unimodular_w(const OperatorParams& params, const BallPoint& zeta) {
  ExtremalFamily f;
  f.kind = FamilyKind::unimodular_w;
  f.zeta = zeta;
  f.m = params.n + 1.0 + beta_effective(params)[1];
  f.q = params.q.p2;
  return f;
}

ExtremalFamily make_unimodular_z(const OperatorParams& params, const BallPoint& xi) {
  ExtremalFamily f;
  f.kind = FamilyKind::unimodular_z;
  f.xi = xi;
  f.m = params.n + 1.0 + beta_effective(params)[0];
  f.q = params.q.p1;
  return f;
}

complex_t eval_family(const ExtremalFamily& family, const ProductPoint& at) {
  return family_factor(family, 0)(at.z) * family_factor(family, 1)(at.w);
}

double family_mixed_norm(const ExtremalFamily& family, const ExponentPair& p,
                         const WeightPair& alpha, const ProductRule& rule) {
  return weighted_p_norm(family_factor(family, 0), p.p1, alpha.w1, rule.rule_z) *
         weighted_p_norm(family_factor(family, 1), p.p2, alpha.w2, rule.rule_w);
}

double lhs_2e4(const BallPoint& xi, const OperatorParams& params,
               const QuadratureRule& rule) {
  const double n1 = params.n + 1.0;
  const double q1 = params.q.p1;
  const double pre_exp = (n1 + params.b[0]) * q1 - (n1 + params.alpha.w1) * q1 / params.p.p1;
  const double value =
      std::pow(xi.one_minus_sq(), pre_exp) *
      plain_kernel_integral(xi, beta_effective(params)[0], params.c[0] * q1, rule);
  if (!std::isfinite(value)) throw AccuracyError("lhs_2e4: non-finite value");
  return value;
}

std::vector<std::pair<double, double>> necessity_ratio_curve(
    const OperatorParams& params, const std::vector<double>& radii,
    const ProductRule& rule) {
  const double n1 = params.n + 1.0;
  const RealPair be = beta_effective(params);
  const double d1 = (n1 + params.b[0]) - (n1 + params.alpha.w1) / params.p.p1;
  const double d2 = (n1 + params.b[1]) - (n1 + params.alpha.w2) / params.p.p2;

  std::vector<std::pair<double, double>> curve;
  curve.reserve(radii.size());
  for (double r : radii) {
    const BallPoint anchor = BallPoint::axial(params.n, r);
    const ExtremalFamily fam = make_kernel_family(params, anchor, anchor);
    const double denom = family_mixed_norm(fam, params.p, params.alpha, rule);

    // Closed-form image: |T f|(z,w) factors into two anchored kernel powers.
    const double c1 = params.c[0], c2 = params.c[1];
    const Factor g1 = [&](const BallPoint& z) {
      return complex_t{std::pow(std::abs(one_minus_inner(anchor, z)), -c1), 0.0};
    };
    const Factor g2 = [&](const BallPoint& w) {
      return complex_t{std::pow(std::abs(one_minus_inner(anchor, w)), -c2), 0.0};
    };
    const double numer = std::pow(anchor.one_minus_sq(), d1 + d2) *
                         weighted_p_norm(g1, params.q.p1, be[0], rule.rule_z) *
                         weighted_p_norm(g2, params.q.p2, be[1], rule.rule_w);
    const double ratio = numer / denom;
    if (!std::isfinite(ratio))
      throw AccuracyError("necessity_ratio_curve: non-finite ratio");
    curve.emplace_back(r, ratio);
  }
  return curve;
}

LogBlowupReport log_blowup_probe(const OperatorParams& params,
                                 const std::vector<double>& radii,
                                 const ProductRule& rule) {
  const RealPair be = beta_effective(params);
  const double m2 = params.n + 1.0 + be[1];
  const double q2 = params.q.p2;
  const ExponentPair q_dual{holder_conjugate(params.q.p1), holder_conjugate(q2)};
  const WeightPair beta_pair{be[0], be[1]};
  // Constant first-variable block of the adjoint image at z = 0.
  const double j1 = 1.0 / norm_const(be[0], params.n);

  LogBlowupReport report;
  report.radii = radii;
  for (double r : radii) {
    const BallPoint zeta = BallPoint::axial(params.n, r);
    const ExtremalFamily g = make_unimodular_w(params, zeta);
    report.family_norms.push_back(
        family_mixed_norm(g, q_dual, beta_pair, rule));

    // Adjoint image at (0, zeta): the z-block is the constant j1 and the
    // w-block is the kernel-family integral with the analytic phases kept.
    const double c2 = params.c[1];
    const double conv = 1.0 / norm_const(rule.rule_w.theta(), params.n);
    const complex_t j2 =
        conv * integrate(
                   [&](const BallPoint& eta) {
                     const complex_t d_zeta = one_minus_inner(zeta, eta);
                     const complex_t d_w = one_minus_inner(zeta, eta);
                     return std::pow(eta.one_minus_sq(), be[1] - rule.rule_w.theta()) *
                            cpow(d_zeta, m2 / q2) * cpow(d_w, -c2) *
                            std::pow(std::abs(d_zeta), -m2);
                   },
                   rule.rule_w);
    report.image_norms.push_back(j1 * std::abs(j2));
  }

  // Fit log(value) against log(log 1/(1-r^2)) over the last shells.
  const std::size_t count = std::min<std::size_t>(5, radii.size());
  const std::size_t first = radii.size() - count;
  std::vector<double> x, yf, yi;
  for (std::size_t i = first; i < radii.size(); ++i) {
    x.push_back(std::log(std::log(1.0 / (1.0 - radii[i] * radii[i]))));
    yf.push_back(std::log(report.family_norms[i]));
    yi.push_back(std::log(report.image_norms[i]));
  }
  report.family_log_power = fit_line(x, yf).slope;
  report.image_log_power = fit_line(x, yi).slope;
  return report;
}

}  // namespace frops
