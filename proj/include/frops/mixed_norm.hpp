#pragma once

#include "frops/operators.hpp"
#include "frops/quadrature.hpp"

// Weighted mixed norms by nested quadrature:
//   ||f|| = { int_w [ int_z |f(z,w)|^{p1} dv_{alpha1}(z) ]^{p2/p1} dv_{alpha2}(w) }^{1/p2}.
// The factor rules must target the normalized dv_{alpha_i} directly.

namespace frops {

struct MixedNormSpec {
  ExponentPair p;
  WeightPair alpha;
  const ProductRule* rule;  // rule_z over dv_{alpha1}, rule_w over dv_{alpha2}
};

struct NormResult {
  double value = 0.0;
  // True when an infinite exponent was replaced by a max over nodes.
  bool approximate = false;
};

NormResult mixed_norm(const Bivariate& f, const MixedNormSpec& spec);

NormResult single_norm(const std::function<complex_t(const BallPoint&)>& g,
                       double p, const QuadratureRule& rule);

}  // namespace frops
