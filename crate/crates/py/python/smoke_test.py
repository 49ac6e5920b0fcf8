"""Smoke test for the markov_laguerre extension module.

Run after `maturin develop` (or with the built .so on PYTHONPATH):

    python crates/py/python/smoke_test.py
"""

import math
from fractions import Fraction

import markov_laguerre as ml


def close(a, b, rel):
    return abs(a - b) <= rel * abs(b)


def main():
    # Turan's closed form at alpha = 0
    for n in (1, 5, 40):
        exact = 1.0 / (2.0 * math.sin(math.pi / (4 * n + 2)))
        assert close(ml.markov_constant(0.0, n), exact, 1e-12), n

    assert close(ml.markov_constant(3.0, 1), 0.5, 1e-14)

    cert = ml.markov_constant_certified(1.5, 20)
    assert cert["c_bracket"][0] <= cert["c"] <= cert["c_bracket"][1]

    # exact coefficients: Q_2(x, 0) = x^2 - 3x + 1
    assert ml.qn_coefficients(Fraction(0), 2, mode="rational") == [1, -3, 1]
    q = ml.qn_coefficients(Fraction(1, 3), 8, mode="rational")
    assert all(isinstance(c, Fraction) for c in q)
    assert ml.closed_form_coefficients(Fraction(1, 3), 8) == q[:4]
    assert ml.closed_form_coefficients("-1/4", 5) == ml.qn_coefficients("-1/4", 5, mode="rational")[:4]

    b1, b2, b3 = ml.reciprocal_b123(0, 3)
    assert (b1, b2, b3) == (6, 5, 1)

    report = ml.bounds_report(0.0, 3)
    assert report["thm2"]["lower"] < report["exact_c_sq"] < report["thm2"]["upper"]
    assert close(report["exact_c_sq"], 5.0489173395223, 1e-12)
    lo, hi = ml.dorfler_bounds(0.0, 3)
    assert lo <= report["exact_c_sq"] <= hi

    t = ml.TridiagMatrix.jacobi(0.0, 10)
    assert t.order == 10
    lam = t.smallest_eigenvalue()
    assert close(lam["value"], (2.0 * math.sin(math.pi / 42)) ** 2, 1e-12)
    assert t.sturm_count(0.0) == 0 and t.sturm_count(t.gershgorin_bracket()[1] + 1.0) == 10

    assert abs(ml.first_zero(0.5, 1e-15) - math.pi) < 1e-12
    assert abs(ml.first_zero(-0.5, 1e-15) - math.pi / 2) < 1e-12
    assert close(ml.asymptotic_constant(0.0), 2.0 / math.pi, 1e-12)
    jl, ju = ml.corollary2_bessel_bounds(0.0)
    assert jl < 2.404825557695773 < ju
    assert ml.ratio_r(499.9) < 2.0

    lower, upper = ml.residual_sandwich_check(Fraction(-9, 10), 50)
    assert lower >= 0 and upper >= 0
    assert ml.identity_residuals(Fraction(5, 2))["all_positive"]

    for bad in (lambda: ml.markov_constant(-1.5, 3), lambda: ml.first_zero(30.0)):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")

    print("smoke test passed")


if __name__ == "__main__":
    main()
