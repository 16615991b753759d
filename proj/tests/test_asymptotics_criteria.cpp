#include <doctest.h>

#include <cmath>
#include <random>

#include "frops/asymptotics.hpp"
#include "frops/criteria.hpp"
#include "frops/special.hpp"

using namespace frops;

namespace {

OperatorParams stein_tuple() {
  return OperatorParams(1, {0.0, 0.0}, {0.0, 0.0}, {2.0, 2.0}, WeightPair{0.0, 0.0},
                        WeightPair{0.0, 0.0}, ExponentPair{2.0, 2.0},
                        ExponentPair{2.0, 2.0});
}

}  // namespace

TEST_CASE("eval_I basics") {
  // c = 0: kernel is 1, so the value is int (1-|w|^2)^t dv = 1/c_t.
  // Rules matched to t keep the radial integrand polynomial (exact).
  for (double t : {0.0, 0.5, 2.0}) {
    const auto trule = build_disc_rule(64, 128, t);
    const double v = eval_I(BallPoint::axial(1, 0.7), 0.0, t, trule);
    CHECK(v == doctest::Approx(1.0 / norm_const(t, 1)).epsilon(1e-8));
    // z = 0: |1 - <0,w>| = 1 for any c.
    CHECK(eval_I(BallPoint::origin(1), 3.7, t, trule) == doctest::Approx(v).epsilon(1e-10));
  }
  const auto rule = build_disc_rule(64, 128, 0.0);
  CHECK_THROWS_AS(eval_I(BallPoint::origin(1), 1.0, -1.5, rule), std::domain_error);

  // Rotation invariance: I depends on |z| only.
  const double axial = eval_I(BallPoint::axial(1, 0.8), 2.5, 0.0, rule);
  const double rotated =
      eval_I(BallPoint(complex_t{0.8 * std::cos(1.1), 0.8 * std::sin(1.1)}), 2.5, 0.0, rule);
  CHECK(rotated == doctest::Approx(axial).epsilon(1e-9));
}

TEST_CASE("regime classification") {
  CHECK(classify_regime(1.0, 0.0, 1).regime == Regime::bounded);
  CHECK(classify_regime(2.0, 0.0, 1).regime == Regime::logarithmic);
  CHECK(classify_regime(3.0, 0.0, 1).regime == Regime::power);
}

TEST_CASE("three-regime fits") {
  const auto radii = default_radius_schedule();
  // Bounded: max/min ratio <= 3 over the schedule.
  // 8192 angular nodes: at the deepest shell the aliasing tail of the
  // modulus kernel would otherwise bend the fitted laws by a few percent.
  const RegimeReport bounded = fit_asymptotic(1.0, 0.0, 1, radii, 1e-4, 64, 8192);
  CHECK(bounded.regime == Regime::bounded);
  CHECK(bounded.fit_residual <= 3.0);

  // Logarithmic: linear in log(1/(1-r^2)) with R^2 >= 0.99.
  const RegimeReport logreg = fit_asymptotic(2.0, 0.0, 1, radii, 1e-4, 64, 8192);
  CHECK(logreg.regime == Regime::logarithmic);
  CHECK(logreg.fit_residual <= 0.01);

  // Power: log-log slope within 5% of n+1+t-c = -1.
  const RegimeReport power = fit_asymptotic(3.0, 0.0, 1, radii, 1e-4, 64, 8192);
  CHECK(power.regime == Regime::power);
  REQUIRE(power.fitted_exponent.has_value());
  CHECK(*power.fitted_exponent == doctest::Approx(-1.0).epsilon(0.05));
}

TEST_CASE("growth monotonicity and uniform domination") {
  const double c = 3.0, t = 0.5;  // power regime, exponent -0.5
  std::vector<double> values;
  double max_ratio = 0.0;
  for (double r : {0.1, 0.3, 0.5, 0.7, 0.85, 0.95, 0.98}) {
    const double v = eval_I_refined(r, c, t, 1, 1e-4, 64, 1024);
    if (!values.empty()) CHECK(v >= values.back());
    values.push_back(v);
    // Lemma-2.4-style domination: I / (1-r^2)^{n+1+t-c} bounded for ALL r.
    max_ratio = std::max(max_ratio, v / std::pow(1.0 - r * r, 2.0 + t - c));
  }
  CHECK(max_ratio < 50.0);
}

TEST_CASE("classifier on reference tuples") {
  // Interior tuple with c at the bound: bounded.
  const auto stein = classify(stein_tuple());
  CHECK(stein.bounded);
  CHECK(stein.condition_case == ConditionCase::interior);

  // c1 pushed above the bound: unbounded, failure names the c inequality.
  OperatorParams hot = stein_tuple();
  hot.c[0] = 2.5;
  const auto r = classify(hot);
  CHECK_FALSE(r.bounded);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].id.find("c bound (factor 1)") != std::string::npos);

  // p = q = (1,1): c = (2,2) needs the strict endpoint inequality and fails;
  // (1.9,1.9) passes through the all-equal branch.
  OperatorParams ones(1, {0.0, 0.0}, {0.0, 0.0}, {2.0, 2.0}, WeightPair{0.0, 0.0},
                      WeightPair{0.0, 0.0}, ExponentPair{1.0, 1.0}, ExponentPair{1.0, 1.0});
  CHECK_FALSE(classify(ones).bounded);
  ones.c = {1.9, 1.9};
  const auto ok = classify(ones);
  CHECK(ok.bounded);
  CHECK(ok.condition_case == ConditionCase::both_ones);
  CHECK(ok.satisfied_branch == "both_equal");

  // Exponents outside every hypothesis of the condition sets: out_of_domain verdict.
  OperatorParams badq = stein_tuple();
  badq.q = ExponentPair{1.5, 1.5};  // q_- < p_+
  CHECK(classify(badq).condition_case == ConditionCase::out_of_domain);
  OperatorParams infp = stein_tuple();
  infp.p = ExponentPair{kInf, 2.0};
  CHECK(classify(infp).condition_case == ConditionCase::out_of_domain);
}

TEST_CASE("classical cross-checks") {
  CHECK(classify_diagonal_classical(2.0, 0.0, 1));
  CHECK_FALSE(classify_diagonal_classical(1.0, 0.0, 1));
  CHECK(classify_diagonal_classical(1.0, 0.5, 1));
  CHECK(classify_zhu_classical(2.0, 0.0, 0.0, 0.0));
  CHECK_FALSE(classify_zhu_classical(2.0, 0.0, -0.6, 0.0));
  CHECK_FALSE(classify_zhu_classical(2.0, -0.6, 0.0, 0.0));
}

TEST_CASE("diagonal consistency with the classical criteria") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  // 500 random (p, sigma): self-map tuple a = 0, b = sigma, c = n+1+sigma.
  for (int k = 0; k < 500; ++k) {
    const int n = 1 + static_cast<int>(unif(rng) * 2.0);
    const double p = 1.0 + unif(rng) * 3.0;
    const double sigma = -0.9 + unif(rng) * 2.9;
    const double c = n + 1.0 + sigma - 1e-9;
    const OperatorParams params(n, {0.0, 0.0}, {sigma, sigma}, {c, c},
                                WeightPair{0.0, 0.0}, WeightPair{0.0, 0.0},
                                ExponentPair{p, p}, ExponentPair{p, p});
    CHECK(classify(params).bounded == classify_diagonal_classical(p, sigma, n));
  }
  // 500 random Zhu tuples on the disc (interior case, p > 1).
  for (int k = 0; k < 500; ++k) {
    const double p = 1.0 + 1e-6 + unif(rng) * 3.0;
    const double a = -1.0 + unif(rng) * 2.0;
    const double b = -0.9 + unif(rng) * 2.0;
    const double lambda = -0.9 + unif(rng) * 2.9;
    const double c = 2.0 + a + b - 1e-9;
    const OperatorParams params(1, {a, a}, {b, b}, {c, c}, WeightPair{lambda, lambda},
                                WeightPair{lambda, lambda}, ExponentPair{p, p},
                                ExponentPair{p, p});
    CHECK(classify(params).bounded == classify_zhu_classical(p, a, b, lambda));
  }
}

TEST_CASE("classifier structural properties") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    const double p1 = (k % 4 == 0) ? 1.0 : 1.0 + unif(rng) * 2.0;
    const double p2 = (k % 5 == 0) ? 1.0 : 1.0 + unif(rng) * 2.0;
    const double q1 = std::max(p1, p2) + unif(rng) * 2.0;
    const double q2 = std::max(p1, p2) + unif(rng) * 2.0;
    const RealPair a{unif(rng) - 0.5, unif(rng) - 0.5};
    const RealPair b{unif(rng), unif(rng)};
    const RealPair c{unif(rng) * 3.0, unif(rng) * 3.0};
    const WeightPair alpha{unif(rng) - 0.5, unif(rng) - 0.5};
    const WeightPair beta{unif(rng) - 0.5, unif(rng) - 0.5};
    const OperatorParams params(1, a, b, c, alpha, beta, ExponentPair{p1, p2},
                                ExponentPair{q1, q2});
    const auto base = classify(params);

    // Swapping the factors preserves the verdict and mirrors the case tag.
    const OperatorParams swapped(1, {a[1], a[0]}, {b[1], b[0]}, {c[1], c[0]},
                                 WeightPair{alpha.w2, alpha.w1},
                                 WeightPair{beta.w2, beta.w1}, ExponentPair{p2, p1},
                                 ExponentPair{q2, q1});
    const auto mirror = classify(swapped);
    CHECK(base.bounded == mirror.bounded);
    if (base.condition_case == ConditionCase::p1_endpoint)
      CHECK(mirror.condition_case == ConditionCase::p2_endpoint);
    if (base.condition_case == ConditionCase::p2_endpoint)
      CHECK(mirror.condition_case == ConditionCase::p1_endpoint);

    // Raising c keeps an unbounded c-failure unbounded.
    if (!base.bounded && !base.failures.empty() &&
        base.failures.front().id.find("c") != std::string::npos) {
      OperatorParams raised = params;
      raised.c[0] += 0.7;
      raised.c[1] += 0.7;
      CHECK_FALSE(classify(raised).bounded);
    }
  }
}

TEST_CASE("berezin and bergman criteria") {
  // Interior self-map: bounded.
  const auto base = classify_berezin(1, ExponentPair{2.0, 2.0}, ExponentPair{2.0, 2.0},
                                     WeightPair{0.0, 0.0}, WeightPair{0.0, 0.0},
                                     WeightPair{0.0, 0.0});
  CHECK(base.bounded);
  CHECK(base.condition_case == ConditionCase::interior);

  // (1,1) self-map with all weights zero: the strict endpoint inequality
  // 2 < 2 fails.
  const auto ones = classify_berezin(1, ExponentPair{1.0, 1.0}, ExponentPair{1.0, 1.0},
                                     WeightPair{0.0, 0.0}, WeightPair{0.0, 0.0},
                                     WeightPair{0.0, 0.0});
  CHECK_FALSE(ones.bounded);

  // Larger target weight restores boundedness: 2 < 3.5.
  const auto heavy = classify_berezin(1, ExponentPair{1.0, 1.0}, ExponentPair{1.0, 1.0},
                                      WeightPair{0.0, 0.0}, WeightPair{1.5, 1.5},
                                      WeightPair{0.0, 0.0});
  CHECK(heavy.bounded);

  // Bergman interior with a too-large source weight fails the first
  // inequality: 4.1 < 2 is false.
  const auto fat = classify_bergman(1, ExponentPair{2.0, 2.0}, ExponentPair{2.0, 2.0},
                                    WeightPair{3.1, 0.0}, WeightPair{0.0, 0.0},
                                    WeightPair{0.0, 0.0});
  CHECK_FALSE(fat.bounded);
  CHECK(classify_bergman(1, ExponentPair{2.0, 2.0}, ExponentPair{2.0, 2.0},
                         WeightPair{0.0, 0.0}, WeightPair{0.0, 0.0},
                         WeightPair{0.0, 0.0})
            .bounded);
}

TEST_CASE("bergman criterion agrees with the general classifier") {
  // The projection corresponds to a = 0, b = gamma, c = n+1+gamma.
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + static_cast<int>(unif(rng) * 2.0);
    const double p1 = (k % 3 == 0) ? 1.0 : 1.0 + unif(rng) * 2.0;
    const double p2 = (k % 4 == 0) ? 1.0 : 1.0 + unif(rng) * 2.0;
    const double q1 = std::max(p1, p2) + unif(rng) * 2.0;
    const double q2 = std::max(p1, p2) + unif(rng) * 2.0;
    const WeightPair alpha{unif(rng) * 2.0 - 0.9, unif(rng) * 2.0 - 0.9};
    const WeightPair beta{unif(rng) * 2.0 - 0.9, unif(rng) * 2.0 - 0.9};
    WeightPair gamma{unif(rng) * 2.0 - 0.9, unif(rng) * 2.0 - 0.9};
    if (k % 5 == 0) gamma = alpha;  // exercise the equality branches
    const auto direct = classify_bergman(n, ExponentPair{p1, p2}, ExponentPair{q1, q2},
                                         alpha, beta, gamma);
    const OperatorParams translated(
        n, {0.0, 0.0}, {gamma.w1, gamma.w2},
        {n + 1.0 + gamma.w1, n + 1.0 + gamma.w2}, alpha, beta, ExponentPair{p1, p2},
        ExponentPair{q1, q2});
    const auto general = classify(translated);
    CHECK(direct.bounded == general.bounded);
    CHECK(direct.condition_case == general.condition_case);
  }
}
