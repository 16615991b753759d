#pragma once

#include <functional>

#include "frops/core.hpp"
#include "frops/quadrature.hpp"

// Pointwise kernels and quadrature realizations of the multiparameter
// operators T_{a,b,c}, S_{a,b,c}, the adjoint of T_{0,b,c}, the weighted
// Bergman projection and the weighted Berezin transform.
//
// Convention: T and S integrate against the plain normalized volume dv
// (the weight (1-|u|^2)^b is written out, no c_b factor), while the
// projection and the Berezin transform use the normalized dv_gamma.
// Rules carry their own theta; conversion factors are applied internally.

namespace frops {

enum class KernelKind { analytic, modulus };

struct KernelFactor {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  KernelKind kind = KernelKind::analytic;
};

struct MultiOperatorSpec {
  KernelFactor factor1;
  KernelFactor factor2;
};

using Bivariate = std::function<complex_t(const BallPoint&, const BallPoint&)>;

// (1-|z|^2)^a (1-|u|^2)^b (1-<z,u>)^{-c}, principal branch (valid since
// Re(1-<z,u>) > 0), or the modulus version |1-<z,u>|^{-c}.
complex_t kernel_value(const KernelFactor& factor, const BallPoint& z, const BallPoint& u);

// T_{a,b,c} f at (z,w), realized on a product rule. Each factor rule may
// target any dv_theta; the integrand is corrected by (1-|u|^2)^{b-theta}/c_theta.
complex_t apply_T(const Bivariate& f, const MultiOperatorSpec& spec,
                  const ProductPoint& at, const ProductRule& rule);

// S_{a,b,c} applied to |f|; nonnegative result, monotone in f >= 0.
double apply_S(const Bivariate& f, const MultiOperatorSpec& spec,
               const ProductPoint& at, const ProductRule& rule);

// Adjoint of T_{0,b,c} between L^p_alpha and L^q_beta:
// (1-|z|^2)^{b1-alpha1}(1-|w|^2)^{b2-alpha2} times the double integral of
// (1-|u|^2)^{beta1}(1-|eta|^2)^{beta2} g / [(1-<z,u>)^{c1}(1-<w,eta>)^{c2}].
complex_t apply_adjoint(const Bivariate& g, const RealPair& b, const RealPair& c,
                        const WeightPair& alpha, const WeightPair& beta,
                        const ProductPoint& at, const ProductRule& rule);

// Weighted multiparameter Bergman projection P_gamma (normalized dv_gamma).
complex_t bergman_project(const Bivariate& f, const RealPair& gamma,
                          const ProductPoint& at, const ProductRule& rule);

// Weighted multiparameter Berezin transform B_gamma (normalized dv_gamma).
complex_t berezin_transform(const Bivariate& f, const RealPair& gamma,
                            const ProductPoint& at, const ProductRule& rule);

}  // namespace frops
