"""Smoke test of the Python bindings: a few exact values and verdicts."""

import math
import sys

import frops


def approx(got, want, tol=1e-9):
    assert abs(got - want) <= tol, f"got {got}, want {want}"


def main():
    zeros = (0.0, 0.0)
    twos = (2.0, 2.0)

    res = frops.classify(n=1, a=zeros, b=zeros, c=twos, alpha=zeros,
                         beta=zeros, p=twos, q=twos)
    assert res["bounded"] is True
    assert res["condition_case"] == "interior"

    hot = frops.classify(n=1, a=zeros, b=zeros, c=(2.5, 2.0), alpha=zeros,
                         beta=zeros, p=twos, q=twos)
    assert hot["bounded"] is False
    assert any("c bound" in f["id"] for f in hot["failures"])

    w = frops.schur_weights(n=1, a=zeros, b=zeros, c=twos, alpha=zeros,
                            beta=zeros, p=twos, q=twos)
    approx(w["gamma"][0], 0.5, 1e-12)
    approx(w["delta"][1], 0.5, 1e-12)
    approx(w["r"][0], -0.25, 1e-12)

    try:
        frops.schur_weights(n=1, a=zeros, b=zeros, c=twos, alpha=(3.5, 0.0),
                            beta=zeros, p=twos, q=twos)
    except ValueError:
        pass
    else:
        raise AssertionError("expected InfeasibleError for alpha+1 >= p(b+1)")

    # I_{0,t}(z) is constant: the plain weighted mass 1/c_t.
    approx(frops.eval_I(0.5, c=0.0, t=1.0), 1.0 / frops.norm_const(1.0, 1), 1e-8)

    v = frops.project_monomial(gamma=zeros, j=2, k=1, r1=0.4, r2=0.3)
    approx(v.real, 0.4**2 * 0.3, 1e-8)
    approx(v.imag, 0.0, 1e-8)

    b = frops.berezin_constant(gamma=(1.0, 0.5), r1=0.6, r2=0.2)
    approx(b.real, 1.0, 1e-6)

    fit = frops.fit_asymptotic(c=3.0, t=0.0, n=1)
    assert fit["regime"] == "power"
    assert math.isclose(fit["fitted_exponent"], -1.0, rel_tol=0.05)

    print("python smoke passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
