#pragma once

#include <array>
#include <vector>

#include "frops/core.hpp"
#include "frops/quadrature.hpp"

// Schur-test machinery for the sufficiency direction: constructs the proof's
// test-weight exponents and numerically verifies the two Schur inequalities
// on sample points, reporting empirical constants.
//
// Everything operates on the reduced operator with a = 0; the general case is
// folded in through the weight shift beta_eff := beta + a*q (valid under the
// hypothesis -q_i a_i < beta_i + 1).

namespace frops {

enum class SchurCase {
  interior,      // 1 < p-  (or p = (1,1) with alpha_i < b_i on both factors)
  p2_one,        // p = (p1, 1), p1 > 1, alpha2 = b2
  p1_one,        // p = (1, p2), p2 > 1, alpha1 = b1
  both_one_eq,   // p = (1,1), alpha_i = b_i on both factors
  mixed          // p = (1,1), alpha = b on exactly one factor
};

struct SchurWeights {
  SchurCase case_tag = SchurCase::interior;
  RealPair lambda{};  // (n+1+beta_eff)/q - (n+1+alpha)/p per factor
  RealPair tau{};     // scale of the gamma/delta split per factor
  RealPair r{};       // h2 exponents, each in (-(1+beta_eff)/q, 0)
  RealPair s{};       // h1 exponents (0 where the construction uses h1 = 1)
  RealPair gamma{};
  RealPair delta{};   // gamma_i + delta_i = 1
  // Effective kernel data: K_i(z,u) = (1-|u|^2)^{kernel_b} |1-<z,u>|^{-kernel_c}.
  RealPair kernel_b{};  // b_i - alpha_i
  RealPair kernel_c{};  // the operator's c_i (c = 0 replaced by a small proxy)
  RealPair alpha{};
  RealPair beta_eff{};  // beta_i + a_i q_i
};

// Builds the weights for the case selected by (p1 = 1?, p2 = 1?, alpha = b?).
// Throws InfeasibleError when a hypothesis of the construction fails (empty
// feasibility interval, alpha+1 >= p(b+1), c above its admissible bound, ...).
SchurWeights construct_weights(const OperatorParams& params);

// Maximum over sample points of LHS/RHS of the first Schur inequality (the
// form depends on case_tag: nested integral, esssup, or half-and-half).
// Integrals factor over the two ball variables, so each evaluation costs two
// single-ball quadratures on the given product rule (measure-converted).
double verify_schur_first(const SchurWeights& weights, const OperatorParams& params,
                          const std::vector<ProductPoint>& sample_points,
                          const ProductRule& rule);

// Same for the second Schur inequality (identical form in all cases); sample
// points play the role of the inner variables (u, eta).
double verify_schur_second(const SchurWeights& weights, const OperatorParams& params,
                           const std::vector<ProductPoint>& sample_points,
                           const ProductRule& rule);

// Operator-norm bound induced by empirical constants C1, C2 for the case.
double schur_norm_bound(double C1, double C2, const ExponentPair& p,
                        const ExponentPair& q, SchurCase case_tag);

}  // namespace frops
