#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "frops/core.hpp"

// Numerical integration on B_n against the normalized measures dv and
// dv_theta, plus tensor rules on B_n x B_n. The unit disc (n = 1) gets a
// deterministic Gauss-Jacobi x uniform-angle rule; higher dimensions use
// seeded importance-sampled Monte Carlo.

namespace frops {

// Gauss-Jacobi nodes/weights for int_0^1 g(x) (1-x)^theta dx.
// Exact for polynomials of degree <= 2*count - 1.
struct JacobiRule01 {
  std::vector<double> nodes;
  std::vector<double> weights;
};
JacobiRule01 gauss_jacobi_01(int count, double theta);

struct MonteCarloConfig {
  std::int64_t sample_count = 200000;
  std::uint64_t seed = 1;
  // Importance exponent on (1-|z|^2) concentrating samples near the boundary.
  // NaN means "use theta of the target measure".
  double radial_tilt = std::numeric_limits<double>::quiet_NaN();
  bool self_normalize = true;
};

// Nodes and weights realizing integration against the NORMALIZED dv_theta
// (theta = 0 gives dv). Weights sum to 1 up to quadrature exactness.
class QuadratureRule {
 public:
  QuadratureRule(int n, double theta, std::vector<BallPoint> nodes,
                 std::vector<double> weights, std::string descriptor);

  int dimension() const { return n_; }
  double theta() const { return theta_; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<BallPoint>& nodes() const { return nodes_; }
  const std::vector<double>& weights() const { return weights_; }

  // JSON-ish one-line provenance string (rule kind, node counts, theta, seed).
  const std::string& descriptor() const { return descriptor_; }

  // Monte Carlo rules report an estimated standard error scale: the
  // root-sum-square of weights. Zero for deterministic rules.
  double sigma_scale() const { return sigma_scale_; }
  void set_sigma_scale(double s) { sigma_scale_ = s; }

 private:
  int n_;
  double theta_;
  std::vector<BallPoint> nodes_;
  std::vector<double> weights_;
  std::string descriptor_;
  double sigma_scale_ = 0.0;
};

// Deterministic rule on the unit disc B_1 for dv_theta: Gauss-Jacobi in
// r^2 with weight (1-x)^theta, uniform angular grid.
QuadratureRule build_disc_rule(int n_radial, int n_angular, double jacobi_theta);

// Seeded Monte Carlo rule on B_n for dv_theta. Unbiased (raw weights) or
// self-normalized per config.
QuadratureRule build_ball_rule(int n, const MonteCarloConfig& config, double theta);

// Default desk-scale rule: deterministic for n = 1, Monte Carlo otherwise.
QuadratureRule build_default_rule(int n, double theta, int n_radial = 96,
                                  int n_angular = 192, std::uint64_t seed = 1);

// Pairwise (cascade) summation; fixed reduction order for reproducibility.
double pairwise_sum(std::span<const double> v);
complex_t pairwise_sum(std::span<const complex_t> v);

// Sum of w_k f(node_k). Throws if f is non-finite at a node.
complex_t integrate(const std::function<complex_t(const BallPoint&)>& f,
                    const QuadratureRule& rule);
double integrate_real(const std::function<double(const BallPoint&)>& f,
                      const QuadratureRule& rule);

struct ProductRule {
  QuadratureRule rule_z;
  QuadratureRule rule_w;
};

complex_t integrate(const std::function<complex_t(const BallPoint&, const BallPoint&)>& f,
                    const ProductRule& rule);
double integrate_real(const std::function<double(const BallPoint&, const BallPoint&)>& f,
                      const ProductRule& rule);

}  // namespace frops
