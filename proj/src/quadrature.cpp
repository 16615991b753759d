#include "frops/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "frops/special.hpp"

namespace frops {

namespace {

// Symmetric tridiagonal eigensolve (implicit QL with Wilkinson shifts)
// tracking only the first row of the eigenvector matrix, which is all
// Golub-Welsch needs. diag/off are overwritten; off has length n with
// off[n-1] unused.
void tridiag_eigen_first_row(std::vector<double>& diag, std::vector<double>& off,
                             std::vector<double>& first_row) {
  const int n = static_cast<int>(diag.size());
  first_row.assign(static_cast<size_t>(n), 0.0);
  if (n == 0) return;
  first_row[0] = 1.0;
  if (n == 1) return;
  off[static_cast<size_t>(n - 1)] = 0.0;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::abs(diag[m]) + std::abs(diag[m + 1]);
        if (std::abs(off[m]) <= 1e-15 * dd) break;
      }
      if (m != l) {
        if (iter++ == 60)
          throw AccuracyError("tridiag_eigen: too many QL iterations");
        double g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
        double r = std::hypot(g, 1.0);
        g = diag[m] - diag[l] + off[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i = m - 1;
        for (; i >= l; --i) {
          double f = s * off[i];
          const double b = c * off[i];
          r = std::hypot(f, g);
          off[i + 1] = r;
          if (r == 0.0) {
            diag[i + 1] -= p;
            off[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = diag[i + 1] - p;
          r = (diag[i] - g) * s + 2.0 * c * b;
          p = s * r;
          diag[i + 1] = g + p;
          g = c * r - b;
          f = first_row[static_cast<size_t>(i + 1)];
          first_row[static_cast<size_t>(i + 1)] = s * first_row[static_cast<size_t>(i)] + c * f;
          first_row[static_cast<size_t>(i)] = c * first_row[static_cast<size_t>(i)] - s * f;
        }
        if (r == 0.0 && i >= l) continue;
        diag[l] -= p;
        off[l] = g;
        off[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

JacobiRule01 gauss_jacobi_01(int count, double theta) {
  if (count < 1) throw std::domain_error("gauss_jacobi_01: count must be >= 1");
  if (!(theta > -1.0)) throw std::domain_error("gauss_jacobi_01: theta must be > -1");

  // Recurrence coefficients of Jacobi polynomials with weight
  // (1-x)^alpha (1+x)^beta on [-1,1]; here alpha = theta, beta = 0.
  const double al = theta, be = 0.0;
  std::vector<double> diag(static_cast<size_t>(count));
  std::vector<double> off(static_cast<size_t>(count), 0.0);
  for (int k = 0; k < count; ++k) {
    const double s = 2.0 * k + al + be;
    diag[static_cast<size_t>(k)] =
        (k == 0) ? (be - al) / (al + be + 2.0)
                 : (be * be - al * al) / (s * (s + 2.0));
    if (k >= 1) {
      double b2;
      if (k == 1) {
        b2 = 4.0 * (1.0 + al) * (1.0 + be) /
             ((2.0 + al + be) * (2.0 + al + be) * (3.0 + al + be));
      } else {
        b2 = 4.0 * k * (k + al) * (k + be) * (k + al + be) /
             ((s * s) * (s + 1.0) * (s - 1.0));
      }
      off[static_cast<size_t>(k - 1)] = std::sqrt(b2);
    }
  }

  std::vector<double> first_row;
  tridiag_eigen_first_row(diag, off, first_row);

  // mu0 = int_{-1}^{1} (1-x)^al dx = 2^{al+1}/(al+1).
  const double mu0 = std::pow(2.0, al + 1.0) / (al + 1.0);

  std::vector<std::pair<double, double>> nw(static_cast<size_t>(count));
  for (int k = 0; k < count; ++k) {
    const double x = diag[static_cast<size_t>(k)];
    const double w = mu0 * first_row[static_cast<size_t>(k)] * first_row[static_cast<size_t>(k)];
    nw[static_cast<size_t>(k)] = {x, w};
  }
  std::sort(nw.begin(), nw.end());

  // Map x in [-1,1] to t = (1+x)/2 in [0,1]:
  // int_0^1 g(t)(1-t)^theta dt = 2^{-theta-1} int_{-1}^1 g((1+x)/2)(1-x)^theta dx.
  JacobiRule01 rule;
  rule.nodes.reserve(nw.size());
  rule.weights.reserve(nw.size());
  const double scale = std::pow(2.0, -theta - 1.0);
  for (const auto& [x, w] : nw) {
    rule.nodes.push_back(0.5 * (1.0 + x));
    rule.weights.push_back(scale * w);
  }
  return rule;
}

QuadratureRule::QuadratureRule(int n, double theta, std::vector<BallPoint> nodes,
                               std::vector<double> weights, std::string descriptor)
    : n_(n), theta_(theta), nodes_(std::move(nodes)), weights_(std::move(weights)),
      descriptor_(std::move(descriptor)) {
  if (nodes_.size() != weights_.size())
    throw std::invalid_argument("QuadratureRule: nodes/weights size mismatch");
}

QuadratureRule build_disc_rule(int n_radial, int n_angular, double jacobi_theta) {
  if (n_radial < 2) throw std::domain_error("build_disc_rule: n_radial must be >= 2");
  if (n_angular < 4) throw std::domain_error("build_disc_rule: n_angular must be >= 4");
  if (!(jacobi_theta > -1.0))
    throw std::domain_error("build_disc_rule: theta must be > -1");

  // In polar coordinates with x = r^2,
  //   int_{B_1} f dv_theta = c_theta (1/2pi) int_0^{2pi} int_0^1
  //                          f(sqrt(x) e^{i phi}) (1-x)^theta dx dphi,
  // and for n = 1, c_theta = theta + 1, so the weights sum to 1.
  const JacobiRule01 radial = gauss_jacobi_01(n_radial, jacobi_theta);
  const double c_theta = norm_const(jacobi_theta, 1);

  std::vector<BallPoint> nodes;
  std::vector<double> weights;
  nodes.reserve(static_cast<size_t>(n_radial) * static_cast<size_t>(n_angular));
  weights.reserve(nodes.capacity());
  for (int k = 0; k < n_radial; ++k) {
    const double r = std::sqrt(radial.nodes[static_cast<size_t>(k)]);
    const double wr = c_theta * radial.weights[static_cast<size_t>(k)] / n_angular;
    for (int j = 0; j < n_angular; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / n_angular;
      nodes.emplace_back(complex_t{r * std::cos(phi), r * std::sin(phi)});
      weights.push_back(wr);
    }
  }

  std::ostringstream desc;
  desc << "{\"kind\":\"gauss-jacobi-disc\",\"n\":1,\"theta\":" << jacobi_theta
       << ",\"n_radial\":" << n_radial << ",\"n_angular\":" << n_angular << "}";
  return QuadratureRule(1, jacobi_theta, std::move(nodes), std::move(weights), desc.str());
}

QuadratureRule build_ball_rule(int n, const MonteCarloConfig& config, double theta) {
  if (n < 1) throw std::domain_error("build_ball_rule: n must be >= 1");
  if (!(theta > -1.0)) throw std::domain_error("build_ball_rule: theta must be > -1");
  if (config.sample_count < 1)
    throw std::domain_error("build_ball_rule: sample_count must be >= 1");

  const double tilt = std::isnan(config.radial_tilt) ? theta : config.radial_tilt;
  if (!(tilt > -1.0)) throw std::domain_error("build_ball_rule: radial_tilt must be > -1");

  // Target density of x = |z|^2 under dv_theta is c_theta n x^{n-1}(1-x)^theta;
  // proposal is Beta(n, tilt+1). Importance weight:
  //   c_theta n B(n, tilt+1) (1-x)^{theta - tilt}.
  const double base_w = norm_const(theta, n) * n * beta_fn(static_cast<double>(n), tilt + 1.0);

  std::mt19937_64 rng(config.seed);
  std::gamma_distribution<double> gamma_n(static_cast<double>(n), 1.0);
  std::gamma_distribution<double> gamma_t(tilt + 1.0, 1.0);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<BallPoint> nodes;
  std::vector<double> weights;
  nodes.reserve(static_cast<size_t>(config.sample_count));
  weights.reserve(static_cast<size_t>(config.sample_count));

  for (std::int64_t s = 0; s < config.sample_count; ++s) {
    // Radius via Beta(n, tilt+1); direction uniform on the unit sphere of C^n.
    const double g1 = gamma_n(rng);
    const double g2 = gamma_t(rng);
    double x = g1 / (g1 + g2);
    x = std::min(x, kMaxRadius * kMaxRadius);
    const double r = std::sqrt(x);

    std::vector<complex_t> coords(static_cast<size_t>(n));
    double nrm = 0.0;
    for (int k = 0; k < n; ++k) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      coords[static_cast<size_t>(k)] = complex_t{re, im};
      nrm += re * re + im * im;
    }
    nrm = std::sqrt(nrm);
    if (nrm == 0.0) nrm = 1.0;
    for (auto& zc : coords) zc *= r / nrm;

    nodes.emplace_back(std::move(coords));
    weights.push_back(base_w * std::pow(1.0 - x, theta - tilt) /
                      static_cast<double>(config.sample_count));
  }

  if (config.self_normalize) {
    const double total = pairwise_sum(weights);
    for (auto& w : weights) w /= total;
  }

  double ssq = 0.0;
  for (double w : weights) ssq += w * w;

  std::ostringstream desc;
  desc << "{\"kind\":\"monte-carlo-ball\",\"n\":" << n << ",\"theta\":" << theta
       << ",\"samples\":" << config.sample_count << ",\"seed\":" << config.seed
       << ",\"tilt\":" << tilt
       << ",\"self_normalized\":" << (config.self_normalize ? "true" : "false") << "}";
  QuadratureRule rule(n, theta, std::move(nodes), std::move(weights), desc.str());
  rule.set_sigma_scale(std::sqrt(ssq));
  return rule;
}

QuadratureRule build_default_rule(int n, double theta, int n_radial, int n_angular,
                                  std::uint64_t seed) {
  if (n == 1) return build_disc_rule(n_radial, n_angular, theta);
  MonteCarloConfig cfg;
  cfg.seed = seed;
  return build_ball_rule(n, cfg, theta);
}

namespace {
template <typename T>
T pairwise_sum_impl(std::span<const T> v) {
  if (v.size() <= 8) {
    T s{};
    for (const T& x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise_sum_impl(v.first(half)) + pairwise_sum_impl(v.subspan(half));
}
}  // namespace

double pairwise_sum(std::span<const double> v) { return pairwise_sum_impl(v); }
complex_t pairwise_sum(std::span<const complex_t> v) { return pairwise_sum_impl(v); }

complex_t integrate(const std::function<complex_t(const BallPoint&)>& f,
                    const QuadratureRule& rule) {
  std::vector<complex_t> terms(rule.size());
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const complex_t v = f(rule.nodes()[k]);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      std::ostringstream msg;
      msg << "integrate: non-finite integrand at node " << k << " (|z|="
          << rule.nodes()[k].norm() << ")";
      throw AccuracyError(msg.str());
    }
    terms[k] = rule.weights()[k] * v;
  }
  return pairwise_sum(std::span<const complex_t>(terms));
}

double integrate_real(const std::function<double(const BallPoint&)>& f,
                      const QuadratureRule& rule) {
  std::vector<double> terms(rule.size());
  for (std::size_t k = 0; k < rule.size(); ++k) {
    const double v = f(rule.nodes()[k]);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "integrate: non-finite integrand at node " << k << " (|z|="
          << rule.nodes()[k].norm() << ")";
      throw AccuracyError(msg.str());
    }
    terms[k] = rule.weights()[k] * v;
  }
  return pairwise_sum(std::span<const double>(terms));
}

complex_t integrate(const std::function<complex_t(const BallPoint&, const BallPoint&)>& f,
                    const ProductRule& rule) {
  std::vector<complex_t> outer(rule.rule_w.size());
  std::vector<complex_t> inner(rule.rule_z.size());
  for (std::size_t j = 0; j < rule.rule_w.size(); ++j) {
    const BallPoint& w = rule.rule_w.nodes()[j];
    for (std::size_t i = 0; i < rule.rule_z.size(); ++i) {
      const complex_t v = f(rule.rule_z.nodes()[i], w);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw AccuracyError("integrate(product): non-finite integrand");
      inner[i] = rule.rule_z.weights()[i] * v;
    }
    outer[j] = rule.rule_w.weights()[j] * pairwise_sum(std::span<const complex_t>(inner));
  }
  return pairwise_sum(std::span<const complex_t>(outer));
}

double integrate_real(const std::function<double(const BallPoint&, const BallPoint&)>& f,
                      const ProductRule& rule) {
  std::vector<double> outer(rule.rule_w.size());
  std::vector<double> inner(rule.rule_z.size());
  for (std::size_t j = 0; j < rule.rule_w.size(); ++j) {
    const BallPoint& w = rule.rule_w.nodes()[j];
    for (std::size_t i = 0; i < rule.rule_z.size(); ++i) {
      const double v = f(rule.rule_z.nodes()[i], w);
      if (!std::isfinite(v))
        throw AccuracyError("integrate(product): non-finite integrand");
      inner[i] = rule.rule_z.weights()[i] * v;
    }
    outer[j] = rule.rule_w.weights()[j] * pairwise_sum(std::span<const double>(inner));
  }
  return pairwise_sum(std::span<const double>(outer));
}

}  // namespace frops
