#include "frops/criteria.hpp"

#include <cmath>

namespace frops {

namespace {

constexpr double kEqTol = 1e-12;

class Checker {
 public:
  void require(std::string id, double lhs, Relation rel, double rhs) {
    InequalityCheck c{std::move(id), lhs, rhs, rel, false};
    switch (rel) {
      case Relation::less_than: c.holds = lhs < rhs; break;
      case Relation::less_equal: c.holds = lhs <= rhs; break;
      case Relation::equal: c.holds = std::abs(lhs - rhs) <= kEqTol; break;
    }
    if (!c.holds) failures_.push_back(c);
  }

  bool ok() const { return failures_.empty(); }
  std::vector<InequalityCheck>& failures() { return failures_; }

 private:
  std::vector<InequalityCheck> failures_;
};

std::string axis(const char* base, int i) { return std::string(base) + std::to_string(i + 1); }

// Interior-type conditions for one factor:
// alpha+1 < p(b+1) and c <= n+1+a+b+(n+1+beta)/q-(n+1+alpha)/p.
void require_interior_factor(Checker& ch, int i, int n, double a, double b, double c,
                             double alpha, double beta, double p, double q) {
  ch.require(axis("alpha+1 < p(b+1) (factor ", i) + ")", alpha + 1.0,
             Relation::less_than, p * (b + 1.0));
  ch.require(axis("c bound (factor ", i) + ")", c, Relation::less_equal,
             n + 1.0 + a + b + (n + 1.0 + beta) / q - (n + 1.0 + alpha) / p);
}

// Endpoint conditions for one factor with p = 1:
// alpha = b and c < a + (n+1+beta)/q.
void require_equal_factor(Checker& ch, int i, double a, double b, double c,
                          double alpha, double beta, double q, int n) {
  ch.require(axis("alpha = b (factor ", i) + ")", alpha, Relation::equal, b);
  ch.require(axis("c < a+(n+1+beta)/q (factor ", i) + ")", c, Relation::less_than,
             a + (n + 1.0 + beta) / q);
}

// (1,1)-case alternative with alpha < b on one factor:
// alpha < b and c <= a+b-alpha+(n+1+beta)/q.
void require_below_factor(Checker& ch, int i, double a, double b, double c,
                          double alpha, double beta, double q, int n) {
  ch.require(axis("alpha < b (factor ", i) + ")", alpha, Relation::less_than, b);
  ch.require(axis("c bound (factor ", i) + ")", c, Relation::less_equal,
             a + b - alpha + (n + 1.0 + beta) / q);
}

struct FactorView {
  double a, b, c, alpha, beta, p, q;
};

FactorView factor(const OperatorParams& P, int i) {
  return {P.a[i], P.b[i], P.c[i], (i == 0) ? P.alpha.w1 : P.alpha.w2,
          (i == 0) ? P.beta.w1 : P.beta.w2, (i == 0) ? P.p.p1 : P.p.p2,
          (i == 0) ? P.q.p1 : P.q.p2};
}

}  // namespace

const char* to_string(ConditionCase c) {
  switch (c) {
    case ConditionCase::interior: return "interior";
    case ConditionCase::p1_endpoint: return "p1_endpoint";
    case ConditionCase::p2_endpoint: return "p2_endpoint";
    case ConditionCase::both_ones: return "both_ones";
    case ConditionCase::out_of_domain: return "out_of_domain";
  }
  return "?";
}

ClassificationResult classify(const OperatorParams& params) {
  ClassificationResult result;
  const ExponentPair& p = params.p;
  const ExponentPair& q = params.q;
  if (!p.finite() || !q.finite()) {
    result.condition_case = ConditionCase::out_of_domain;
    return result;
  }
  const auto [p_minus, p_plus] = exponent_extremes(p);
  const double q_minus = exponent_extremes(q).first;
  const bool p1_one = p.p1 == 1.0;
  const bool p2_one = p.p2 == 1.0;
  const FactorView f1 = factor(params, 0);
  const FactorView f2 = factor(params, 1);
  const int n = params.n;

  auto hypotheses = [&](Checker& ch) {
    ch.require("-q1*a1 < beta1+1", -f1.q * f1.a, Relation::less_than, f1.beta + 1.0);
    ch.require("-q2*a2 < beta2+1", -f2.q * f2.a, Relation::less_than, f2.beta + 1.0);
  };

  if (p1_one && p2_one) {
    result.condition_case = ConditionCase::both_ones;
    struct Branch {
      const char* name;
      bool eq1, eq2;  // alpha_i = b_i (true) vs alpha_i < b_i (false)
    };
    const Branch branches[] = {{"both_below", false, false},
                               {"both_equal", true, true},
                               {"first_equal", true, false},
                               {"second_equal", false, true}};
    for (const Branch& br : branches) {
      Checker ch;
      hypotheses(ch);
      if (br.eq1)
        require_equal_factor(ch, 0, f1.a, f1.b, f1.c, f1.alpha, f1.beta, f1.q, n);
      else
        require_below_factor(ch, 0, f1.a, f1.b, f1.c, f1.alpha, f1.beta, f1.q, n);
      if (br.eq2)
        require_equal_factor(ch, 1, f2.a, f2.b, f2.c, f2.alpha, f2.beta, f2.q, n);
      else
        require_below_factor(ch, 1, f2.a, f2.b, f2.c, f2.alpha, f2.beta, f2.q, n);
      if (ch.ok()) {
        result.bounded = true;
        result.satisfied_branch = br.name;
        result.failures.clear();
        return result;
      }
      for (InequalityCheck& c : ch.failures()) {
        c.id = std::string(br.name) + ": " + c.id;
        result.failures.push_back(std::move(c));
      }
    }
    return result;
  }

  if (p1_one || p2_one) {
    const double p_other = p1_one ? p.p2 : p.p1;
    if (!(p_other > 1.0 && p_other <= q_minus)) {
      result.condition_case = ConditionCase::out_of_domain;
      return result;
    }
    result.condition_case = p1_one ? ConditionCase::p1_endpoint : ConditionCase::p2_endpoint;
    Checker ch;
    hypotheses(ch);
    if (p1_one) {
      require_equal_factor(ch, 0, f1.a, f1.b, f1.c, f1.alpha, f1.beta, f1.q, n);
      require_interior_factor(ch, 1, n, f2.a, f2.b, f2.c, f2.alpha, f2.beta, f2.p, f2.q);
    } else {
      require_interior_factor(ch, 0, n, f1.a, f1.b, f1.c, f1.alpha, f1.beta, f1.p, f1.q);
      require_equal_factor(ch, 1, f2.a, f2.b, f2.c, f2.alpha, f2.beta, f2.q, n);
    }
    result.bounded = ch.ok();
    result.failures = std::move(ch.failures());
    return result;
  }

  if (!(1.0 < p_minus && p_plus <= q_minus)) {
    result.condition_case = ConditionCase::out_of_domain;
    return result;
  }
  result.condition_case = ConditionCase::interior;
  Checker ch;
  hypotheses(ch);
  require_interior_factor(ch, 0, n, f1.a, f1.b, f1.c, f1.alpha, f1.beta, f1.p, f1.q);
  require_interior_factor(ch, 1, n, f2.a, f2.b, f2.c, f2.alpha, f2.beta, f2.p, f2.q);
  result.bounded = ch.ok();
  result.failures = std::move(ch.failures());
  return result;
}

bool classify_diagonal_classical(double p, double sigma, int n) {
  (void)n;
  if (!(p >= 1.0)) throw std::domain_error("classify_diagonal_classical: p >= 1");
  if (!(sigma > -1.0)) throw std::domain_error("classify_diagonal_classical: sigma > -1");
  return (sigma + 1.0) * p > 1.0;
}

bool classify_zhu_classical(double p, double a, double b, double lambda) {
  if (!(p >= 1.0)) throw std::domain_error("classify_zhu_classical: p >= 1");
  if (!(lambda > -1.0)) throw std::domain_error("classify_zhu_classical: lambda > -1");
  return -p * a < lambda + 1.0 && lambda + 1.0 < p * (b + 1.0);
}

namespace {

// Shared condition sets of the Berezin / Bergman criteria.
ClassificationResult classify_gamma(int n, const ExponentPair& p, const ExponentPair& q,
                                    const WeightPair& alpha, const WeightPair& beta,
                                    const WeightPair& gamma) {
  ClassificationResult result;
  if (!p.finite() || !q.finite()) return result;
  const double al[2] = {alpha.w1, alpha.w2};
  const double be[2] = {beta.w1, beta.w2};
  const double ga[2] = {gamma.w1, gamma.w2};
  const double pp[2] = {p.p1, p.p2};
  const double qq[2] = {q.p1, q.p2};
  const double q_minus = exponent_extremes(q).first;
  const bool one1 = pp[0] == 1.0;
  const bool one2 = pp[1] == 1.0;

  auto interior_factor = [&](Checker& ch, int i) {
    ch.require(axis("alpha+1 < p(gamma+1) (factor ", i) + ")", al[i] + 1.0,
               Relation::less_than, pp[i] * (ga[i] + 1.0));
    ch.require(axis("(n+1+alpha)/p <= (n+1+beta)/q (factor ", i) + ")",
               (n + 1.0 + al[i]) / pp[i], Relation::less_equal,
               (n + 1.0 + be[i]) / qq[i]);
  };
  auto equal_factor = [&](Checker& ch, int i) {
    ch.require(axis("alpha = gamma (factor ", i) + ")", al[i], Relation::equal, ga[i]);
    ch.require(axis("n+1+gamma < (n+1+beta)/q (factor ", i) + ")", n + 1.0 + ga[i],
               Relation::less_than, (n + 1.0 + be[i]) / qq[i]);
  };
  auto below_factor = [&](Checker& ch, int i) {
    ch.require(axis("alpha < gamma (factor ", i) + ")", al[i], Relation::less_than, ga[i]);
    ch.require(axis("n+1+alpha <= (n+1+beta)/q (factor ", i) + ")", n + 1.0 + al[i],
               Relation::less_equal, (n + 1.0 + be[i]) / qq[i]);
  };

  if (one1 && one2) {
    result.condition_case = ConditionCase::both_ones;
    struct Branch { const char* name; bool eq1, eq2; };
    const Branch branches[] = {{"both_below", false, false},
                               {"both_equal", true, true},
                               {"first_equal", true, false},
                               {"second_equal", false, true}};
    for (const Branch& br : branches) {
      Checker ch;
      if (br.eq1) equal_factor(ch, 0); else below_factor(ch, 0);
      if (br.eq2) equal_factor(ch, 1); else below_factor(ch, 1);
      if (ch.ok()) {
        result.bounded = true;
        result.satisfied_branch = br.name;
        result.failures.clear();
        return result;
      }
      for (InequalityCheck& c : ch.failures()) {
        c.id = std::string(br.name) + ": " + c.id;
        result.failures.push_back(std::move(c));
      }
    }
    return result;
  }

  if (one1 || one2) {
    const double p_other = one1 ? pp[1] : pp[0];
    if (!(p_other > 1.0 && p_other <= q_minus)) return result;
    result.condition_case = one1 ? ConditionCase::p1_endpoint : ConditionCase::p2_endpoint;
    Checker ch;
    if (one1) { equal_factor(ch, 0); interior_factor(ch, 1); }
    else { interior_factor(ch, 0); equal_factor(ch, 1); }
    result.bounded = ch.ok();
    result.failures = std::move(ch.failures());
    return result;
  }

  const auto [p_minus, p_plus] = exponent_extremes(p);
  if (!(1.0 < p_minus && p_plus <= q_minus)) return result;
  result.condition_case = ConditionCase::interior;
  Checker ch;
  interior_factor(ch, 0);
  interior_factor(ch, 1);
  result.bounded = ch.ok();
  result.failures = std::move(ch.failures());
  return result;
}

}  // namespace

ClassificationResult classify_berezin(int n, const ExponentPair& p, const ExponentPair& q,
                                      const WeightPair& alpha, const WeightPair& beta,
                                      const WeightPair& gamma) {
  return classify_gamma(n, p, q, alpha, beta, gamma);
}

ClassificationResult classify_bergman(int n, const ExponentPair& p, const ExponentPair& q,
                                      const WeightPair& alpha, const WeightPair& beta,
                                      const WeightPair& gamma) {
  return classify_gamma(n, p, q, alpha, beta, gamma);
}

}  // namespace frops
