// Python surface for the operator toolkit: classification, Schur-test
// construction/verification, radial asymptotics, extremal probes, and the
// projection / Berezin transform evaluated by quadrature.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "frops/asymptotics.hpp"
#include "frops/criteria.hpp"
#include "frops/extremal.hpp"
#include "frops/operators.hpp"
#include "frops/quadrature.hpp"
#include "frops/schur.hpp"
#include "frops/special.hpp"

namespace py = pybind11;
using namespace frops;

namespace {

OperatorParams make_params(int n, RealPair a, RealPair b, RealPair c, RealPair alpha,
                           RealPair beta, RealPair p, RealPair q) {
  return OperatorParams(n, a, b, c, WeightPair{alpha[0], alpha[1]},
                        WeightPair{beta[0], beta[1]}, ExponentPair{p[0], p[1]},
                        ExponentPair{q[0], q[1]});
}

py::dict result_dict(const ClassificationResult& res) {
  py::list failures;
  for (const auto& f : res.failures) {
    const char* rel = f.relation == Relation::less_than   ? "<"
                      : f.relation == Relation::less_equal ? "<="
                                                           : "=";
    failures.append(py::dict(py::arg("id") = f.id, py::arg("lhs") = f.lhs,
                             py::arg("rhs") = f.rhs, py::arg("relation") = rel,
                             py::arg("holds") = f.holds));
  }
  return py::dict(py::arg("bounded") = res.bounded,
                  py::arg("condition_case") = to_string(res.condition_case),
                  py::arg("satisfied_branch") = res.satisfied_branch,
                  py::arg("failures") = failures);
}

ProductRule make_product_rule(int n, double theta1, double theta2, int n_radial,
                              int n_angular, std::uint64_t seed) {
  return ProductRule{build_default_rule(n, theta1, n_radial, n_angular, seed),
                     build_default_rule(n, theta2, n_radial, n_angular, seed + 1)};
}

}  // namespace

PYBIND11_MODULE(_frops, m) {
  m.doc() = "Two-factor integral operators on products of complex unit balls";

  py::register_exception<AccuracyError>(m, "AccuracyError", PyExc_ArithmeticError);
  py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_ValueError);

  m.def(
      "classify",
      [](int n, RealPair a, RealPair b, RealPair c, RealPair alpha, RealPair beta,
         RealPair p, RealPair q) {
        return result_dict(classify(make_params(n, a, b, c, alpha, beta, p, q)));
      },
      py::arg("n"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("alpha"),
      py::arg("beta"), py::arg("p"), py::arg("q"),
      "Boundedness verdict and the checked inequalities for one parameter tuple.");

  const auto gamma_classifier = [](bool berezin) {
    return [berezin](int n, RealPair p, RealPair q, RealPair alpha, RealPair beta,
                     RealPair gamma) {
      const ExponentPair pp{p[0], p[1]}, qq{q[0], q[1]};
      const WeightPair al{alpha[0], alpha[1]}, be{beta[0], beta[1]},
          ga{gamma[0], gamma[1]};
      return result_dict(berezin ? classify_berezin(n, pp, qq, al, be, ga)
                                 : classify_bergman(n, pp, qq, al, be, ga));
    };
  };
  m.def("classify_berezin", gamma_classifier(true), py::arg("n"), py::arg("p"),
        py::arg("q"), py::arg("alpha"), py::arg("beta"), py::arg("gamma"));
  m.def("classify_bergman", gamma_classifier(false), py::arg("n"), py::arg("p"),
        py::arg("q"), py::arg("alpha"), py::arg("beta"), py::arg("gamma"));

  m.def(
      "schur_weights",
      [](int n, RealPair a, RealPair b, RealPair c, RealPair alpha, RealPair beta,
         RealPair p, RealPair q) {
        const auto w = construct_weights(make_params(n, a, b, c, alpha, beta, p, q));
        return py::dict(py::arg("lambda_") = w.lambda, py::arg("tau") = w.tau,
                        py::arg("r") = w.r, py::arg("s") = w.s,
                        py::arg("gamma") = w.gamma, py::arg("delta") = w.delta,
                        py::arg("beta_eff") = w.beta_eff);
      },
      py::arg("n"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("alpha"),
      py::arg("beta"), py::arg("p"), py::arg("q"),
      "Schur test-weight exponents; raises InfeasibleError off the feasible set.");

  m.def(
      "schur_verify",
      [](int n, RealPair a, RealPair b, RealPair c, RealPair alpha, RealPair beta,
         RealPair p, RealPair q, int n_radial, int n_angular) {
        const auto params = make_params(n, a, b, c, alpha, beta, p, q);
        const auto w = construct_weights(params);
        const auto rule = make_product_rule(n, 0.0, 0.0, n_radial, n_angular, 1);
        std::vector<std::array<double, 3>> rows;
        for (double r : default_radius_schedule()) {
          const ProductPoint pt{BallPoint::axial(n, r), BallPoint::axial(n, r)};
          rows.push_back({r, verify_schur_first(w, params, {pt}, rule),
                          verify_schur_second(w, params, {pt}, rule)});
        }
        return rows;
      },
      py::arg("n"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("alpha"),
      py::arg("beta"), py::arg("p"), py::arg("q"), py::arg("n_radial") = 96,
      py::arg("n_angular") = 512,
      "Rows (radius, ratio_1, ratio_2) of the two Schur inequalities.");

  m.def(
      "eval_I",
      [](double radius, double c, double t, int n, int n_radial, int n_angular) {
        if (n == 1) return eval_I_refined(radius, c, t, n, 1e-4, n_radial, n_angular);
        const auto rule = build_default_rule(n, 0.0, n_radial, n_angular);
        return eval_I(BallPoint::axial(n, radius), c, t, rule);
      },
      py::arg("radius"), py::arg("c"), py::arg("t") = 0.0, py::arg("n") = 1,
      py::arg("n_radial") = 64, py::arg("n_angular") = 512,
      "Radial kernel integral I_{c,t} at |z| = radius.");

  m.def(
      "fit_asymptotic",
      [](double c, double t, int n, int n_radial, int n_angular) {
        const auto rep =
            fit_asymptotic(c, t, n, default_radius_schedule(), 1e-4, n_radial, n_angular);
        const char* regime = rep.regime == Regime::bounded       ? "bounded"
                             : rep.regime == Regime::logarithmic ? "logarithmic"
                                                                 : "power";
        py::dict out(py::arg("regime") = regime, py::arg("fit_residual") = rep.fit_residual);
        out["fitted_exponent"] =
            rep.fitted_exponent ? py::cast(*rep.fitted_exponent) : py::none();
        return out;
      },
      // The deepest shell of the default schedule (1 - r^2 = 2^-10) needs
      // this many angular nodes to keep aliasing out of the fit.
      py::arg("c"), py::arg("t") = 0.0, py::arg("n") = 1, py::arg("n_radial") = 64,
      py::arg("n_angular") = 8192,
      "Fits the predicted growth regime of I_{c,t} over the radius schedule.");

  m.def(
      "project_monomial",
      [](RealPair gamma, int j, int k, double r1, double r2, int n_radial,
         int n_angular) {
        const Bivariate f = [j, k](const BallPoint& z, const BallPoint& w) {
          return std::pow(z[0], j) * std::pow(w[0], k);
        };
        const ProductRule rule{build_disc_rule(n_radial, n_angular, gamma[0]),
                               build_disc_rule(n_radial, n_angular, gamma[1])};
        return bergman_project(f, gamma,
                               {BallPoint::axial(1, r1), BallPoint::axial(1, r2)}, rule);
      },
      py::arg("gamma"), py::arg("j"), py::arg("k"), py::arg("r1"), py::arg("r2"),
      py::arg("n_radial") = 32, py::arg("n_angular") = 64,
      "Weighted projection applied to z1^j w1^k on the bidisc.");

  m.def(
      "berezin_constant",
      [](RealPair gamma, double r1, double r2, int n_radial, int n_angular) {
        const Bivariate one = [](const BallPoint&, const BallPoint&) {
          return complex_t{1.0, 0.0};
        };
        const ProductRule rule{build_disc_rule(n_radial, n_angular, gamma[0]),
                               build_disc_rule(n_radial, n_angular, gamma[1])};
        return berezin_transform(one, gamma,
                                 {BallPoint::axial(1, r1), BallPoint::axial(1, r2)},
                                 rule);
      },
      py::arg("gamma"), py::arg("r1"), py::arg("r2"), py::arg("n_radial") = 64,
      py::arg("n_angular") = 256,
      "Berezin transform of the constant 1 (identically 1 in exact arithmetic).");

  m.def(
      "necessity_curve",
      [](int n, RealPair a, RealPair b, RealPair c, RealPair alpha, RealPair beta,
         RealPair p, RealPair q, int n_radial, int n_angular) {
        const auto params = make_params(n, a, b, c, alpha, beta, p, q);
        const auto rule = make_product_rule(n, 0.0, 0.0, n_radial, n_angular, 1);
        return necessity_ratio_curve(params, default_radius_schedule(), rule);
      },
      py::arg("n"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("alpha"),
      py::arg("beta"), py::arg("p"), py::arg("q"), py::arg("n_radial") = 96,
      py::arg("n_angular") = 512,
      "Rows (radius, norm ratio) for the anchored extremal family.");

  m.def(
      "log_blowup",
      [](int n, RealPair a, RealPair b, RealPair c, RealPair alpha, RealPair beta,
         RealPair p, RealPair q, int n_radial, int n_angular) {
        const auto params = make_params(n, a, b, c, alpha, beta, p, q);
        const auto rule = make_product_rule(n, 0.0, 0.0, n_radial, n_angular, 1);
        const auto rep = log_blowup_probe(params, default_radius_schedule(), rule);
        return py::dict(py::arg("radii") = rep.radii,
                        py::arg("family_norms") = rep.family_norms,
                        py::arg("image_norms") = rep.image_norms,
                        py::arg("family_log_power") = rep.family_log_power,
                        py::arg("image_log_power") = rep.image_log_power);
      },
      py::arg("n"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("alpha"),
      py::arg("beta"), py::arg("p"), py::arg("q"), py::arg("n_radial") = 96,
      py::arg("n_angular") = 512,
      "Endpoint probe: family norm vs adjoint image growth in powers of log.");

  m.def("norm_const", &norm_const, py::arg("theta"), py::arg("n") = 1,
        "Normalizing constant of the weighted volume measure.");
}
