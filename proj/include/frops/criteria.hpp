#pragma once

#include <string>
#include <vector>

#include "frops/core.hpp"

// Boundedness classification for the two-factor operators between mixed-norm
// spaces: the interior characterization, the three endpoint characterizations
// (p1 = 1, p2 = 1, both = 1), classical one-parameter cross-checks, and the
// specializations for the weighted Berezin transform / Bergman projection.

namespace frops {

enum class ConditionCase { interior, p1_endpoint, p2_endpoint, both_ones, out_of_domain };

enum class Relation { less_than, less_equal, equal };

struct InequalityCheck {
  std::string id;
  double lhs = 0.0;
  double rhs = 0.0;
  Relation relation = Relation::less_than;
  bool holds = false;
};

struct ClassificationResult {
  bool bounded = false;
  ConditionCase condition_case = ConditionCase::out_of_domain;
  // For the (1,1) case: which alternative held ("both_below", "both_equal",
  // "first_equal", "second_equal"). Empty otherwise / when unbounded.
  std::string satisfied_branch;
  // Failed inequalities of the relevant case (for the (1,1) case: of every
  // branch, ids prefixed with the branch name).
  std::vector<InequalityCheck> failures;
};

const char* to_string(ConditionCase c);

// Dispatches on (p1 = 1?, p2 = 1?) and the ordering hypotheses:
// interior needs 1 < p- <= p+ <= q- < inf; the single-endpoint cases need
// 1 < p_other <= q- < inf; (1,1) allows any finite q. Anything else is
// out_of_domain (a verdict, not an error). Equalities alpha_i = b_i are
// tested with absolute tolerance 1e-12.
ClassificationResult classify(const OperatorParams& params);

// One-parameter diagonal criterion (sigma+1)p > 1 for the self-map case
// c = n+1+sigma, b = sigma, a = 0.
bool classify_diagonal_classical(double p, double sigma, int n);

// Disc criterion -pa < lambda+1 < p(b+1) for c = 2+a+b on the disc.
bool classify_zhu_classical(double p, double a, double b, double lambda);

// Berezin transform L^p_alpha -> L^q_beta and Bergman projection
// L^p_alpha -> A^q_beta criteria (identical condition sets).
ClassificationResult classify_berezin(int n, const ExponentPair& p, const ExponentPair& q,
                                      const WeightPair& alpha, const WeightPair& beta,
                                      const WeightPair& gamma);
ClassificationResult classify_bergman(int n, const ExponentPair& p, const ExponentPair& q,
                                      const WeightPair& alpha, const WeightPair& beta,
                                      const WeightPair& gamma);

}  // namespace frops
