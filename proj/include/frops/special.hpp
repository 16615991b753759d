#pragma once

#include <cmath>
#include <stdexcept>

// Gamma/Beta evaluation and the normalization constant of the weighted
// volume measure on the unit ball.

namespace frops {

inline double gamma_fn(double x) {
  if (!(x > 0.0)) throw std::domain_error("gamma_fn: argument must be > 0");
  return std::tgamma(x);
}

inline double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: argument must be > 0");
  return std::lgamma(x);
}

// B(P,Q) = Gamma(P)Gamma(Q)/Gamma(P+Q), evaluated through log-Gamma so that
// moderately large arguments do not overflow.
inline double beta_fn(double P, double Q) {
  if (!(P > 0.0) || !(Q > 0.0))
    throw std::domain_error("beta_fn: arguments must be > 0");
  return std::exp(log_gamma(P) + log_gamma(Q) - log_gamma(P + Q));
}

// c_theta = Gamma(n+theta+1) / (n! Gamma(theta+1)), the constant making
// c_theta (1-|z|^2)^theta dv a probability measure on B_n.
inline double norm_const(double theta, int n) {
  if (!(theta > -1.0)) throw std::domain_error("norm_const: theta must be > -1");
  if (n < 1) throw std::domain_error("norm_const: n must be >= 1");
  return std::exp(log_gamma(n + theta + 1.0) - log_gamma(n + 1.0) - log_gamma(theta + 1.0));
}

}  // namespace frops
