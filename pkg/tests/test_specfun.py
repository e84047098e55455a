import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import special

from twoterm.errors import DomainError, PoleError
from twoterm.specfun import (
    JacobiPoly,
    gauss_2f1,
    gauss_legendre,
    gen_binomial,
    integrate,
    jacobi,
    jacobi_derivative,
    jacobi_eval,
    jacobi_identity_residuals,
    jacobi_sum,
    ln_gamma,
    unit_interval_quad,
)


def test_ln_gamma_values():
    assert ln_gamma(1) == 0.0
    assert ln_gamma(5) == pytest.approx(math.log(24), rel=1e-15)
    assert ln_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), rel=1e-15)


@pytest.mark.parametrize("x", [0.0, -1.0, -2.5])
def test_ln_gamma_rejects_nonpositive(x):
    with pytest.raises(DomainError):
        ln_gamma(x)


def test_gen_binomial():
    assert gen_binomial(4, 2) == 6
    assert gen_binomial(3.7, 0) == 1
    assert gen_binomial(2.5, 1) == 2.5
    assert gen_binomial(-0.5, 2) == pytest.approx((-0.5) * (-1.5) / 2)
    for n in range(25):
        for k in range(n + 1):
            assert gen_binomial(n, k) == math.comb(n, k)


def test_jacobi_low_degree():
    for a, b, z in [(0.3, 2.0, 0.1), (5.0, -0.5, -0.7)]:
        assert jacobi_eval(JacobiPoly(0, a, b), z) == 1.0
    assert jacobi_eval(JacobiPoly(1, 0, 0), 0.37) == pytest.approx(0.37, abs=1e-16)
    assert jacobi_eval(JacobiPoly(1, 2, 1), 0.0) == pytest.approx(0.5, abs=1e-15)


def test_jacobi_poly_validates_indices():
    with pytest.raises(DomainError):
        JacobiPoly(2, -1.0, 0.0)
    with pytest.raises(DomainError):
        JacobiPoly(-1, 0.0, 0.0)


def test_jacobi_matches_exact_sum():
    rng = np.random.default_rng(11)
    for _ in range(50):
        n = int(rng.integers(0, 25))
        a, b = rng.uniform(-0.9, 8, 2)
        z = rng.uniform(-1, 1)
        exact = jacobi_sum(n, a, b, z, exact=True)
        assert jacobi(n, a, b, z) == pytest.approx(exact, rel=1e-12, abs=1e-12)


def test_exact_sum_is_rational_for_rational_input():
    # P_2^{(1,1)}(z) = (15 z^2 - 3) / 4 at z = 1/2
    val = jacobi_sum(2, 1, 1, Fraction(1, 2), exact=True)
    assert Fraction(val).limit_denominator(1000) == Fraction(3, 16)


def test_jacobi_array_input():
    z = np.linspace(-1, 1, 7)
    vals = jacobi(4, 0.5, 1.5, z)
    ref = np.array([jacobi(4, 0.5, 1.5, float(t)) for t in z])
    np.testing.assert_allclose(vals, ref, rtol=1e-14)


def test_jacobi_derivative_examples():
    assert jacobi_derivative(JacobiPoly(0, 1.0, 2.0), 0.3) == 0.0
    assert jacobi_derivative(JacobiPoly(1, 0, 0), 0.3) == pytest.approx(1.0)
    p = JacobiPoly(3, 1.2, 0.7)
    h = 1e-4
    f = lambda t: jacobi_eval(p, t)  # noqa: E731
    fd = (f(0.3 - 2 * h) - 8 * f(0.3 - h) + 8 * f(0.3 + h) - f(0.3 + 2 * h)) / (12 * h)
    assert jacobi_derivative(p, 0.3) == pytest.approx(fd, rel=1e-9)


@pytest.mark.parametrize("n,a,b,z", [(1, 2, 1, 0.4), (5, 0.5, 2.5, -0.3), (1, 0, 0, 0.0), (12, 3.3, 0.1, 0.9)])
def test_identity_residuals(n, a, b, z):
    res = jacobi_identity_residuals(n, a, b, z)
    assert set(res) == {"index_shift", "alpha_raise", "beta_raise", "degree_drop"}
    assert max(res.values()) <= 1e-10


def test_degree_drop_hand_value():
    # P_0 = P_1^{(0,-1)}(0) - P_1^{(-1,0)}(0) = 1/2 - (-1/2)
    assert jacobi(1, 0, -1, 0.0) - jacobi(1, -1, 0, 0.0) == pytest.approx(1.0, abs=1e-15)


def test_gauss_2f1_examples():
    assert gauss_2f1(0.3, 1.7, 2.2, 0.0) == 1.0
    assert gauss_2f1(1.3, 2.0, 2.0, 0.4) == pytest.approx(0.6 ** -1.3, rel=1e-14)
    assert gauss_2f1(1, 1, 2, 0.5) == pytest.approx(2 * math.log(2), rel=1e-14)


def test_gauss_2f1_terminating_and_errors():
    # 2F1(-2, b; c; z) is a quadratic
    b, c, z = 1.5, 2.5, 0.7
    assert gauss_2f1(-2, b, c, z) == pytest.approx(1 - 2 * b * z / c + b * (b + 1) * z * z / (c * (c + 1)), rel=1e-15)
    with pytest.raises(PoleError):
        gauss_2f1(1, 1, -2, 0.3)
    with pytest.raises(DomainError):
        gauss_2f1(1, 1, 2, 1.0)


@settings(max_examples=60, deadline=None)
@given(a=st.floats(-3, 3), b=st.floats(0.1, 4), dc=st.floats(0.1, 4), z=st.floats(-0.9, 0.9))
def test_gauss_2f1_matches_scipy(a, b, dc, z):
    c = b + dc
    ref = special.hyp2f1(a, b, c, z)
    assert gauss_2f1(a, b, c, z) == pytest.approx(ref, rel=1e-10, abs=1e-13)


def test_gauss_legendre_rule():
    rule = gauss_legendre(8)
    assert rule.npoints == 8
    assert math.fsum(rule.weights) == pytest.approx(2.0, abs=1e-15)
    for k in range(16):
        exact = 0.0 if k % 2 else 2.0 / (k + 1)
        assert float(np.dot(rule.weights, rule.nodes**k)) == pytest.approx(exact, abs=1e-13)
    with pytest.raises(ValueError):
        rule.nodes[0] = 0.0


def test_integrate_examples():
    assert integrate(lambda x: x**2, 0, 1, 2) == pytest.approx(1 / 3, abs=1e-16)
    assert integrate(lambda x: np.ones_like(x), 0, 1) == pytest.approx(1.0, abs=1e-15)
    assert integrate(lambda y: y**2 * (1 - y) ** 2, 0, 1) == pytest.approx(1 / 30, abs=1e-16)


@pytest.mark.parametrize("p0,p1", [(-0.7, 0.0), (0.0, -0.6), (2.3, 4.1), (-0.95, -0.95)])
def test_unit_interval_quad_endpoint_singularities(p0, p1):
    val = unit_interval_quad(lambda y, ym: y**p0 * ym**p1, p0, p1)
    assert val == pytest.approx(special.beta(p0 + 1, p1 + 1), rel=1e-12)
