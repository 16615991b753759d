#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "frops/asymptotics.hpp"
#include "frops/extremal.hpp"
#include "frops/operators.hpp"
#include "frops/schur.hpp"
#include "frops/special.hpp"

using namespace frops;

namespace {

OperatorParams stein_tuple() {
  return OperatorParams(1, {0.0, 0.0}, {0.0, 0.0}, {2.0, 2.0}, WeightPair{0.0, 0.0},
                        WeightPair{0.0, 0.0}, ExponentPair{2.0, 2.0},
                        ExponentPair{2.0, 2.0});
}

std::vector<ProductPoint> axial_samples(const std::vector<double>& radii) {
  std::vector<ProductPoint> pts;
  for (double r : radii)
    pts.push_back({BallPoint::axial(1, r), BallPoint::axial(1, r)});
  return pts;
}

// Verification radii graded up to 0.99; deeper shells would need far more
// angular resolution than the ratio check warrants.
std::vector<double> verify_radii() { return {0.9, 0.95, 0.98, 0.99}; }

}  // namespace

TEST_CASE("schur weights for the reference interior tuple") {
  const auto w = construct_weights(stein_tuple());
  CHECK(w.case_tag == SchurCase::interior);
  for (int i = 0; i < 2; ++i) {
    CHECK(w.lambda[i] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(w.tau[i] == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(w.r[i] == doctest::Approx(-0.25).epsilon(1e-14));
    CHECK(w.s[i] == doctest::Approx(-0.25).epsilon(1e-14));
    CHECK(w.gamma[i] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(w.delta[i] == doctest::Approx(0.5).epsilon(1e-14));
  }
}

TEST_CASE("schur weight structural properties") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  int constructed = 0;
  for (int k = 0; k < 200; ++k) {
    const double p1 = (k % 4 == 0) ? 1.0 : 1.0 + unif(rng) * 2.0;
    const double p2 = (k % 5 == 0) ? 1.0 : 1.0 + unif(rng) * 2.0;
    const double q1 = std::max(p1, p2) + unif(rng) * 2.0;
    const double q2 = std::max(p1, p2) + unif(rng) * 2.0;
    const double b1 = unif(rng), b2 = unif(rng);
    const double al1 = (p1 == 1.0 && k % 2 == 0) ? b1 : unif(rng) - 0.5;
    const double al2 = (p2 == 1.0 && k % 2 == 0) ? b2 : unif(rng) - 0.5;
    try {
      const OperatorParams params(1, {0.0, 0.0}, {b1, b2},
                                  {unif(rng) * 2.0, unif(rng) * 2.0},
                                  WeightPair{al1, al2},
                                  WeightPair{unif(rng) - 0.5, unif(rng) - 0.5},
                                  ExponentPair{p1, p2}, ExponentPair{q1, q2});
      const auto w = construct_weights(params);
      ++constructed;
      for (int i = 0; i < 2; ++i) {
        CHECK(w.gamma[i] + w.delta[i] == doctest::Approx(1.0).epsilon(1e-12));
        // r strictly inside (-(1+beta_eff)/q, 0).
        const double qi = (i == 0) ? q1 : q2;
        CHECK(w.r[i] < -1e-6);
        CHECK(w.r[i] > -(1.0 + w.beta_eff[i]) / qi + 1e-6);
      }
    } catch (const InfeasibleError&) {
      // Random tuples may violate the construction hypotheses.
    }
  }
  CHECK(constructed > 50);
}

TEST_CASE("schur infeasibility is reported") {
  OperatorParams bad = stein_tuple();
  bad.alpha = WeightPair{3.5, 0.0};  // alpha+1 >= p(b+1)
  CHECK_THROWS_AS(construct_weights(bad), InfeasibleError);
  OperatorParams shift = stein_tuple();
  shift.a = {-1.0, 0.0};  // beta + a q <= -1
  CHECK_THROWS_AS(construct_weights(shift), InfeasibleError);
}

TEST_CASE("schur verification stabilizes on the reference tuple") {
  const auto params = stein_tuple();
  const auto w = construct_weights(params);
  // theta = -0.5 absorbs the (1-|u|^2)^{-1/2} factors of the test weights.
  const ProductRule rule{build_disc_rule(128, 1024, -0.5),
                         build_disc_rule(128, 1024, -0.5)};
  const auto radii = verify_radii();
  std::vector<double> r1s, r2s;
  for (double r : radii) {
    const auto pts = axial_samples({r});
    r1s.push_back(verify_schur_first(w, params, pts, rule));
    r2s.push_back(verify_schur_second(w, params, pts, rule));
  }
  for (double v : r1s) CHECK(v < 10.0);
  for (double v : r2s) CHECK(v < 10.0);
  const auto deep_change = [](const std::vector<double>& v) {
    const double a = v[v.size() - 2], b = v.back();
    return std::abs(b - a) / std::max(a, b);
  };
  CHECK(deep_change(r1s) < 0.10);
  CHECK(deep_change(r2s) < 0.10);
  // The max over the whole schedule equals the max of per-radius values.
  const double joint = verify_schur_first(w, params, axial_samples(radii), rule);
  CHECK(joint == doctest::Approx(*std::max_element(r1s.begin(), r1s.end())));
}

TEST_CASE("schur verification diverges above the bound") {
  OperatorParams hot = stein_tuple();
  hot.c[0] = 2.5;
  const auto w = construct_weights(hot);
  const ProductRule rule{build_disc_rule(128, 1024, -0.5),
                         build_disc_rule(128, 1024, -0.5)};
  const auto radii = verify_radii();
  std::vector<double> ratios;
  for (double r : radii)
    ratios.push_back(verify_schur_second(w, hot, axial_samples({r}), rule));
  CHECK(ratios.back() > 3.0 * ratios.front());
  CHECK(ratios.back() > ratios[ratios.size() - 2]);
}

TEST_CASE("schur norm bound arithmetic and empirical check") {
  const ExponentPair two{2.0, 2.0};
  CHECK(schur_norm_bound(1.0, 1.0, two, two, SchurCase::interior) == doctest::Approx(1.0));
  CHECK(schur_norm_bound(4.0, 9.0, two, two, SchurCase::interior) == doctest::Approx(6.0));

  const auto params = stein_tuple();
  const auto w = construct_weights(params);
  const ProductRule vrule{build_disc_rule(128, 1024, -0.5),
                          build_disc_rule(128, 1024, -0.5)};
  const auto pts = axial_samples(verify_radii());
  const double C1 = verify_schur_first(w, params, pts, vrule);
  const double C2 = verify_schur_second(w, params, pts, vrule);
  const double bound = schur_norm_bound(C1, C2, params.p, params.q, w.case_tag);

  // ||S f|| / ||f|| stays below the bound on random separable radial inputs.
  // For radial g the angular average of |1 - <z,u>|^{-2} is exactly
  // 1/(1 - |z|^2 |u|^2), so the kernel integral reduces to a smooth radial
  // one and the deep-shell angular aliasing of a nested rule never enters.
  const auto rule = build_disc_rule(64, 16, 0.0);
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> coef(0.2, 1.0);
  const double conv = 1.0;  // alpha = beta = 0: plain dv on both sides
  for (int k = 0; k < 12; ++k) {
    const double d0 = coef(rng), d1 = coef(rng);
    auto f1 = [=](const BallPoint& u) { return d0 + d1 * u.norm_sq(); };
    auto f2 = [=](const BallPoint& u) {
      return 1.0 + d1 * u.norm_sq() * u.norm_sq();
    };
    auto snorm = [&](auto&& g) {
      // || S1 g ||_{L^2} where S1 g(z) = int |g| |1-<z,u>|^{-2} dv(u).
      double total = 0.0;
      for (std::size_t i = 0; i < rule.size(); ++i) {
        const double rsq = rule.nodes()[i].norm_sq();
        const double sv = integrate_real(
            [&](const BallPoint& u) {
              return std::abs(g(u)) / (1.0 - rsq * u.norm_sq());
            },
            rule);
        total += rule.weights()[i] * sv * sv;
      }
      return std::sqrt(total);
    };
    auto fnorm = [&](auto&& g) {
      return std::sqrt(integrate_real(
          [&](const BallPoint& u) { return g(u) * g(u); }, rule));
    };
    const double ratio =
        conv * snorm(f1) * snorm(f2) / (fnorm(f1) * fnorm(f2));
    CHECK(ratio <= bound * 1.05);
  }
}

TEST_CASE("extremal family evaluation") {
  const auto power = make_power_family(1.0, 2.0, WeightPair{0.0, 0.0});
  const ProductPoint origin{BallPoint::origin(1), BallPoint::origin(1)};
  CHECK(std::abs(eval_family(power, origin) - complex_t{1.0, 0.0}) <= 1e-15);
  CHECK_THROWS_AS(make_power_family(-1.5, 0.0, WeightPair{0.0, 0.0}), std::domain_error);

  const auto kernel = make_kernel_family(stein_tuple(), BallPoint::origin(1),
                                         BallPoint::origin(1));
  CHECK(std::abs(eval_family(kernel, origin) - complex_t{1.0, 0.0}) <= 1e-15);

  // |g_zeta| matches its closed-form modulus.
  const auto g = make_unimodular_w(stein_tuple(), BallPoint::axial(1, 0.7));
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  for (int k = 0; k < 50; ++k) {
    const BallPoint w = BallPoint(complex_t{u(rng), u(rng)});
    const complex_t d =
        complex_t{1.0, 0.0} - inner_product(BallPoint::axial(1, 0.7), w);
    const double want = std::pow(std::abs(d), g.m / g.q - g.m);
    CHECK(std::abs(eval_family(g, {BallPoint::origin(1), w})) ==
          doctest::Approx(want).epsilon(1e-12));
  }
}

TEST_CASE("family norms") {
  const ProductRule rule{build_disc_rule(96, 192, 0.0), build_disc_rule(96, 192, 0.0)};
  // Power family: closed Beta form per factor.
  const auto power = make_power_family(1.0, 0.5, WeightPair{0.0, 0.0});
  const ExponentPair p{2.0, 3.0};
  const WeightPair alpha{0.0, 0.0};
  const double want =
      std::pow(norm_const(0.0, 1) / norm_const(2.0, 1), 0.5) *
      std::pow(norm_const(0.0, 1) / norm_const(1.5, 1), 1.0 / 3.0);
  CHECK(family_mixed_norm(power, p, alpha, rule) == doctest::Approx(want).epsilon(1e-8));

  // Kernel family under strict hypotheses: norms uniformly comparable.
  // 16384 angular nodes: at anchor radius 0.999 the trapezoid aliasing of the
  // kernel would otherwise dominate.
  const ProductRule deep{build_disc_rule(64, 16384, 0.0), build_disc_rule(64, 16384, 0.0)};
  const auto params = stein_tuple();
  std::vector<double> norms;
  for (double r : {0.9, 0.99, 0.999}) {
    const BallPoint anchor = BallPoint::axial(1, r);
    norms.push_back(family_mixed_norm(make_kernel_family(params, anchor, anchor),
                                      params.p, params.alpha, deep));
  }
  const auto [lo, hi] = std::minmax_element(norms.begin(), norms.end());
  CHECK(*hi / *lo <= 3.0);
}

TEST_CASE("closed-form image of the kernel family matches apply_T") {
  const auto params = stein_tuple();
  const BallPoint anchor = BallPoint::axial(1, 0.7);
  const auto fam = make_kernel_family(params, anchor, anchor);
  const ProductRule rule{build_disc_rule(32, 64, 0.0), build_disc_rule(32, 64, 0.0)};
  MultiOperatorSpec spec;
  spec.factor1 = {0.0, params.b[0], params.c[0], KernelKind::analytic};
  spec.factor2 = {0.0, params.b[1], params.c[1], KernelKind::analytic};
  const Bivariate f = [&](const BallPoint& z, const BallPoint& w) {
    return eval_family(fam, {z, w});
  };
  // T f = (c_b1 c_b2)^{-1} prod_i (1-|anchor|^2)^{pow_i} (1-<x,anchor>)^{-c_i}.
  const double cb = norm_const(params.b[0], 1) * norm_const(params.b[1], 1);
  for (double r1 : {0.0, 0.4})
    for (double r2 : {0.2, 0.5}) {
      const ProductPoint at{BallPoint::axial(1, r1), BallPoint::axial(1, r2)};
      const complex_t got = apply_T(f, spec, at, rule);
      const complex_t want =
          (1.0 / cb) * std::pow(anchor.one_minus_sq(), fam.pow1 + fam.pow2) *
          std::exp(-params.c[0] *
                   std::log(complex_t{1.0, 0.0} - inner_product(at.z, anchor))) *
          std::exp(-params.c[1] *
                   std::log(complex_t{1.0, 0.0} - inner_product(at.w, anchor)));
      CHECK(std::abs(got - want) <= 1e-4 * std::abs(want));
    }
}

TEST_CASE("boundary quantity of the first-factor inequality") {
  // Deep shells (1 - r^2 down to 2^{-10}) need 16384 angular nodes to keep
  // trapezoid aliasing below the fit tolerances.
  const auto rule = build_disc_rule(64, 16384, 0.0);
  // xi = 0: the kernel is constant, leaving the plain Beta integral.
  CHECK(lhs_2e4(BallPoint::origin(1), stein_tuple(), rule) ==
        doctest::Approx(beta_fn(1.0, 1.0)).epsilon(1e-8));

  // c1 at the bound: values stay within a factor 3 over the schedule.
  const auto radii = default_radius_schedule();
  std::vector<double> at_bound;
  for (double r : radii)
    at_bound.push_back(lhs_2e4(BallPoint::axial(1, r), stein_tuple(), rule));
  const auto [lo, hi] = std::minmax_element(at_bound.begin(), at_bound.end());
  CHECK(*hi / *lo <= 3.0);

  // c1 above the bound by 0.5: log-log slope -0.5 q1 on the last shells.
  OperatorParams hot = stein_tuple();
  hot.c[0] = 2.5;
  std::vector<double> x, y;
  for (std::size_t i = radii.size() - 5; i < radii.size(); ++i) {
    x.push_back(std::log(1.0 - radii[i] * radii[i]));
    y.push_back(std::log(lhs_2e4(BallPoint::axial(1, radii[i]), hot, rule)));
  }
  CHECK(fit_line(x, y).slope == doctest::Approx(-1.0).epsilon(0.10));
}

TEST_CASE("necessity ratio curve") {
  const ProductRule rule{build_disc_rule(64, 16384, 0.0), build_disc_rule(64, 16384, 0.0)};
  const auto radii = default_radius_schedule();

  // Bounded tuple: ratios stay comparable.
  const auto flat = necessity_ratio_curve(stein_tuple(), radii, rule);
  CHECK(flat.back().second / flat.front().second < 3.0);

  // Violating tuple: growth like (1-r^2)^{-e} with e close to 0.5, and
  // eventually monotone.
  OperatorParams hot = stein_tuple();
  hot.c[0] = 2.5;
  const auto curve = necessity_ratio_curve(hot, radii, rule);
  std::vector<double> x, y;
  for (std::size_t i = curve.size() - 5; i < curve.size(); ++i) {
    x.push_back(std::log(1.0 - curve[i].first * curve[i].first));
    y.push_back(std::log(curve[i].second));
  }
  const double e = -fit_line(x, y).slope;
  CHECK(e >= 0.4);
  CHECK(e <= 0.6);
  const std::size_t m = curve.size();
  CHECK(curve[m - 1].second > curve[m - 2].second);
  CHECK(curve[m - 2].second > curve[m - 3].second);
}

TEST_CASE("endpoint log mismatch probe") {
  const ProductRule rule{build_disc_rule(64, 8192, 0.0), build_disc_rule(64, 8192, 0.0)};
  const auto radii = default_radius_schedule();

  // q2 = 2 at the critical c2 = (n+1+beta2)/q2 = 1: family grows like
  // (log)^{1/2}, the adjoint image like log.
  const OperatorParams crit(1, {0.0, 0.0}, {0.0, 0.0}, {1.0, 1.0}, WeightPair{0.0, 0.0},
                            WeightPair{0.0, 0.0}, ExponentPair{1.0, 1.0},
                            ExponentPair{2.0, 2.0});
  const auto rep = log_blowup_probe(crit, radii, rule);
  CHECK(rep.family_log_power == doctest::Approx(0.5).epsilon(0.2));
  CHECK(rep.image_log_power == doctest::Approx(1.0).epsilon(0.2));

  // q2 = 1: the family norm is essentially constant, the image still log.
  const OperatorParams one_q(1, {0.0, 0.0}, {0.0, 0.0}, {2.0, 2.0}, WeightPair{0.0, 0.0},
                             WeightPair{0.0, 0.0}, ExponentPair{1.0, 1.0},
                             ExponentPair{2.0, 1.0});
  const auto rep1 = log_blowup_probe(one_q, radii, rule);
  CHECK(std::abs(rep1.family_log_power) <= 0.1);
  CHECK(rep1.image_log_power == doctest::Approx(1.0).epsilon(0.2));

  // c2 strictly below critical: the image stays bounded.
  OperatorParams below = crit;
  below.c[1] = 0.5;
  const auto rep2 = log_blowup_probe(below, radii, rule);
  const auto [lo, hi] =
      std::minmax_element(rep2.image_norms.begin(), rep2.image_norms.end());
  CHECK(*hi / *lo <= 3.0);
}
