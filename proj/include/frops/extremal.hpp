#pragma once

#include <utility>
#include <vector>

#include "frops/core.hpp"
#include "frops/quadrature.hpp"

// Necessity-side probes: the test-function families whose norms blow up when
// the boundedness conditions fail, and ratio/growth measurements along a
// radius schedule. All families are separable products of one-ball factors,
// so every norm reduces to two single-ball quadratures.
//
// Operators with a != 0 are folded into the weight shift beta_eff = beta+a*q.

namespace frops {

enum class FamilyKind {
  power,         // (1-|z|^2)^{N1} (1-|w|^2)^{N2}
  kernel,        // anchored kernel pair with boundary-normalized prefactors
  unimodular_w,  // phase-normalized kernel power in the second variable
  unimodular_z   // same in the first variable
};

struct ExtremalFamily {
  FamilyKind kind = FamilyKind::power;
  double N1 = 0.0, N2 = 0.0;
  BallPoint xi = BallPoint::origin(1);
  BallPoint zeta = BallPoint::origin(1);
  // kernel family: factor_i = (1-|anchor|^2)^{pow_i} (1-<.,anchor>)^{-ker_i}
  double pow1 = 0.0, pow2 = 0.0, ker1 = 0.0, ker2 = 0.0;
  // unimodular families: (1-<anchor,.>)^{m/q} / |1-<anchor,.>|^{m}
  double m = 0.0, q = 1.0;
};

ExtremalFamily make_power_family(double N1, double N2, const WeightPair& beta);
// pow_i = n+1+b_i - (n+1+alpha_i)/p_i, ker_i = n+1+b_i.
ExtremalFamily make_kernel_family(const OperatorParams& params, const BallPoint& xi,
                                  const BallPoint& zeta);
// m = n+1+beta_eff_2, q = q2 (second variable); symmetric for the first.
ExtremalFamily make_unimodular_w(const OperatorParams& params, const BallPoint& zeta);
ExtremalFamily make_unimodular_z(const OperatorParams& params, const BallPoint& xi);

complex_t eval_family(const ExtremalFamily& family, const ProductPoint& at);

// Mixed norm of the family over dv_alpha (computed by separability; the rule
// thetas may differ from alpha, conversion applied).
double family_mixed_norm(const ExtremalFamily& family, const ExponentPair& p,
                         const WeightPair& alpha, const ProductRule& rule);

// (1-|xi|^2)^{(n+1+b1)q1-(n+1+alpha1)q1/p1} *
//   int (1-|z|^2)^{beta_eff_1} |1-<xi,z>|^{-c1 q1} dv(z);
// bounded over |xi| -> 1 exactly when c1 respects its critical bound.
double lhs_2e4(const BallPoint& xi, const OperatorParams& params,
               const QuadratureRule& rule);

// ||T f_{xi,zeta}||_{q,beta} / ||f_{xi,zeta}||_{p,alpha} with xi = zeta at
// each radius on the first-coordinate positive axis; the numerator uses the
// closed-form image of the kernel family (two single-ball quadratures).
std::vector<std::pair<double, double>> necessity_ratio_curve(
    const OperatorParams& params, const std::vector<double>& radii,
    const ProductRule& rule);

struct LogBlowupReport {
  std::vector<double> radii;
  std::vector<double> family_norms;  // ||g_zeta|| over the dual exponents
  std::vector<double> image_norms;   // adjoint image magnitude at (0, zeta)
  // Fitted exponents e in value ~ [log 1/(1-r^2)]^e over the last shells.
  double family_log_power = 0.0;
  double image_log_power = 0.0;
};

// At the critical second-factor endpoint (alpha2 = b2, c2 = (n+1+beta2)/q2)
// the family norm grows like (log)^{1/q2'} while the adjoint image grows like
// log; the report exhibits the mismatch.
LogBlowupReport log_blowup_probe(const OperatorParams& params,
                                 const std::vector<double>& radii,
                                 const ProductRule& rule);

}  // namespace frops
