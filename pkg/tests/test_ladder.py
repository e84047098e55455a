import numpy as np
import pytest

from twoterm.errors import DomainError
from twoterm.ladder import (
    apply_lower,
    apply_operator,
    apply_operator_numeric,
    apply_raise,
    casimir_eigenvalue,
    casimir_orderings,
    casimir_residual,
    commutator_check,
    family_eval,
    family_state,
    kappa_coeffs,
    ladder_residuals,
    lower_operator,
    uncorrected_operator,
    raise_operator,
    weight_eigenvalue,
)
from twoterm.wavefunc import normalize_family

X = np.linspace(0, 1, 2001)[1:]


def test_kappa_examples():
    k = kappa_coeffs(0, 0.8, 2.5)
    assert k.kappa2 == 0 and k.kappa3 == 0
    assert k.kappa1 == pytest.approx(1.6 * 2.5 / (1.6 + 2.5), rel=1e-15)
    k = kappa_coeffs(3, 0.5, 3.0)
    assert k.kappa2 + k.kappa3 == pytest.approx(3.0, rel=1e-15)
    assert kappa_coeffs(1, 1.0, 1.0).kappa4 == pytest.approx(20 / 7, rel=1e-15)


@pytest.mark.parametrize("a1,A,q", [(0.5, 3.0, 1.0), (1.3, 0.4, 0.6), (0.05, 7.0, 1.0)])
def test_lower_annihilates_ground(a1, A, q):
    img, coef = apply_lower(family_state(0, a1, A, q))
    assert coef == 0.0
    assert np.max(np.abs(family_eval(img, X * q))) <= 1e-12


def test_lower_coefficient():
    a1, A = 0.5, 3.0
    s1 = family_state(1, a1, A)
    img, coef = apply_lower(s1)
    expect = (1 + A) * normalize_family(1, a1, A, 1.0) / normalize_family(0, a1, A, 1.0)
    assert coef == pytest.approx(expect, rel=1e-10)
    f0 = family_eval(family_state(0, a1, A), X)
    assert np.max(np.abs(family_eval(img, X) - expect * f0)) <= 1e-10 * np.max(np.abs(f0)) * expect


def test_raise_coefficient():
    a1, A = 0.5, 3.0
    img, coef = apply_raise(family_state(0, a1, A))
    expect = normalize_family(0, a1, A, 1.0) / normalize_family(1, a1, A, 1.0)
    assert coef == pytest.approx(expect, rel=1e-10)
    f1 = family_eval(family_state(1, a1, A), X)
    assert np.max(np.abs(family_eval(img, X) - expect * f1)) <= 1e-10 * np.max(np.abs(f1)) * expect


@pytest.mark.parametrize("n", [0, 1, 4])
def test_compositions_telescope(n):
    a1, A = 0.9, 1.7
    s = family_state(n, a1, A)
    # the second projection acts on the unnormalized image, so it already
    # carries the first factor; norm constants cancel in the product
    up, _ = apply_raise(s)
    _, c = apply_lower(up)
    assert c == pytest.approx((n + 1) * (n + 1 + A), rel=1e-10)
    if n >= 1:
        down, _ = apply_lower(s)
        _, c = apply_raise(down)
        assert c == pytest.approx(n * (n + A), rel=1e-10)


def test_proportionality_is_convention_free():
    for n in range(1, 5):
        fam = ladder_residuals(n, 0.7, 2.0, 0.8, "family")
        phys = ladder_residuals(n, 0.7, 2.0, 0.8, "physical", beta=3.0)
        assert fam["lower"] <= 1e-10 and phys["lower"] <= 1e-10
        assert fam["raise"] <= 1e-10 and phys["raise"] <= 1e-10


def test_exact_action_matches_stencil():
    s = family_state(3, 0.8, 2.0)
    xs = np.linspace(0.05, 0.95, 37)
    for op in (lower_operator(3, 0.8, 2.0), raise_operator(3, 0.8, 2.0)):
        exact = family_eval(apply_operator(op, s, 0), xs)
        numeric = apply_operator_numeric(op, s, xs)
        np.testing.assert_allclose(exact, numeric, rtol=1e-7, atol=1e-8 * np.max(np.abs(exact)))


def test_printed_sign_pattern_fails():
    # the operators as printed do not map f_n onto f_{n-1} / f_{n+1}
    a1, A, n = 0.5, 3.0, 2
    s = family_state(n, a1, A)
    for kind, target in (("lower", n - 1), ("raise", n + 1)):
        img = family_eval(apply_operator(uncorrected_operator(kind, n, a1, A), s, target), X)
        tgt = family_eval(family_state(target, a1, A), X)
        coef = np.dot(img, tgt) / np.dot(tgt, tgt)
        rel = np.max(np.abs(img - coef * tgt)) / np.max(np.abs(img))
        assert rel > 1e-2


def test_weight_eigenvalue():
    assert weight_eigenvalue(0, 1.0) == 1.0
    assert weight_eigenvalue(3, 2.0) == 4.5
    assert weight_eigenvalue(0, 0.0) == 0.5
    with pytest.raises(DomainError):
        weight_eigenvalue(-1, 1.0)


@pytest.mark.parametrize("n,a1,A,q", [(2, 0.5, 3.0, 1.0), (1, 1.0, 1.0, 0.5), (8, 0.3, 4.4, 0.9)])
def test_commutators(n, a1, A, q):
    res = commutator_check(n, a1, A, q)
    assert set(res) == {"minus_plus", "zero_plus", "minus_zero"}
    assert max(res.values()) <= 1e-10


def test_casimir():
    assert casimir_eigenvalue(0, 3.0) == pytest.approx(2.0, abs=1e-15)
    assert casimir_eigenvalue(5, 1.0) == pytest.approx(0.0, abs=1e-12)
    c = 1.85
    for n in range(51):
        first, second = casimir_orderings(n, 2.7)
        assert first == pytest.approx(c * (c - 1), abs=1e-12 * 51**2)
        assert second == pytest.approx(first, abs=1e-12 * 51**2)
    assert casimir_residual(4, 0.6, 2.7) <= 1e-10


def test_family_validation():
    with pytest.raises(DomainError):
        family_state(-1, 0.5, 1.0)
    with pytest.raises(DomainError):
        family_state(1, 0.0, 1.0)
    with pytest.raises(DomainError):
        commutator_check(0, 0.5, 1.0)
