#include "frops/mixed_norm.hpp"

#include <cmath>
#include <vector>

namespace frops {

namespace {

void check_node(double v, const char* where) {
  if (!std::isfinite(v))
    throw AccuracyError(std::string("mixed_norm: non-finite value in ") + where);
}

}  // namespace

NormResult mixed_norm(const Bivariate& f, const MixedNormSpec& spec) {
  const QuadratureRule& rz = spec.rule->rule_z;
  const QuadratureRule& rw = spec.rule->rule_w;
  if (std::abs(rz.theta() - spec.alpha.w1) > 1e-12 ||
      std::abs(rw.theta() - spec.alpha.w2) > 1e-12)
    throw std::domain_error("mixed_norm: rule measures do not match alpha");

  const double p1 = spec.p.p1;
  const double p2 = spec.p.p2;
  const bool inf1 = std::isinf(p1);
  const bool inf2 = std::isinf(p2);

  std::vector<double> inner(rw.size());
  std::vector<double> buf(rz.size());
  for (std::size_t j = 0; j < rw.size(); ++j) {
    const BallPoint& w = rw.nodes()[j];
    if (inf1) {
      double m = 0.0;
      for (std::size_t i = 0; i < rz.size(); ++i) {
        const double v = std::abs(f(rz.nodes()[i], w));
        check_node(v, "inner sup");
        m = std::max(m, v);
      }
      inner[j] = m;
    } else {
      for (std::size_t i = 0; i < rz.size(); ++i) {
        const double v = std::abs(f(rz.nodes()[i], w));
        check_node(v, "inner integral");
        buf[i] = rz.weights()[i] * std::pow(v, p1);
      }
      inner[j] = std::pow(pairwise_sum(buf), 1.0 / p1);
    }
  }

  NormResult out;
  out.approximate = inf1 || inf2;
  if (inf2) {
    double m = 0.0;
    for (double v : inner) m = std::max(m, v);
    out.value = m;
  } else {
    std::vector<double> terms(rw.size());
    for (std::size_t j = 0; j < rw.size(); ++j)
      terms[j] = rw.weights()[j] * std::pow(inner[j], p2);
    out.value = std::pow(pairwise_sum(terms), 1.0 / p2);
  }
  return out;
}

NormResult single_norm(const std::function<complex_t(const BallPoint&)>& g,
                       double p, const QuadratureRule& rule) {
  NormResult out;
  if (std::isinf(p)) {
    double m = 0.0;
    for (const BallPoint& z : rule.nodes()) {
      const double v = std::abs(g(z));
      check_node(v, "sup");
      m = std::max(m, v);
    }
    out.value = m;
    out.approximate = true;
    return out;
  }
  if (!(p >= 1.0)) throw std::domain_error("single_norm: p must be >= 1");
  std::vector<double> terms(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double v = std::abs(g(rule.nodes()[i]));
    check_node(v, "integral");
    terms[i] = rule.weights()[i] * std::pow(v, p);
  }
  out.value = std::pow(pairwise_sum(terms), 1.0 / p);
  return out;
}

}  // namespace frops
