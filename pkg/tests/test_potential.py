import math

import numpy as np
import pytest

from twoterm.errors import DomainError, SingularityError
from twoterm.potential import (
    PotentialParams,
    ScaledParams,
    energy_scale,
    from_molecular,
    is_hulthen_limit,
    potential_eval,
    scale,
    scaled_potential_x,
    unscale,
)


def test_potential_values():
    p = PotentialParams(4.0, 2.0, 1.0, 1.0)
    assert potential_eval(p, math.log(2)) == pytest.approx(-4.0 + 2.0, abs=1e-13)
    assert abs(potential_eval(p, 60.0)) < 1e-20
    with pytest.raises(SingularityError):
        potential_eval(p, 0.0)


def test_potential_finite_at_origin_for_q_below_one():
    p = PotentialParams(4.0, 2.0, 1.0, 0.5)
    # e^{-beta r} = 1 and 1 - q = 1/2: -4/(1/2) + 2/(1/4)
    assert potential_eval(p, 0.0) == pytest.approx(0.0, abs=1e-15)
    p = PotentialParams(4.0, 1.0, 1.0, 0.5)
    assert potential_eval(p, 0.0) == pytest.approx(-4.0, rel=1e-15)


def test_potential_array():
    p = PotentialParams(3.0, 1.0, 0.7, 0.8)
    r = np.array([0.1, 1.0, 5.0])
    e = np.exp(-0.7 * r)
    ref = -3.0 * e / (1 - 0.8 * e) + e**2 / (1 - 0.8 * e) ** 2
    np.testing.assert_allclose(potential_eval(p, r), ref, rtol=1e-14)


def test_scaled_potential_matches_physical():
    p = PotentialParams(3.0, 1.5, 0.9, 0.6, mu=2.0, hbar=1.3)
    sp = scale(p)
    r = 0.8
    x = p.q * math.exp(-p.beta * r)
    assert scaled_potential_x(sp, x) * energy_scale(p) == pytest.approx(potential_eval(p, r), rel=1e-14)


def test_scale_examples():
    sp = scale(PotentialParams(4.0, 2.0, 1.0, 1.0))
    assert (sp.v0, sp.v1) == (8.0, 4.0)
    sp = scale(PotentialParams(4.0, 2.0, 1.0, 1.0, mu=0.5))
    assert (sp.v0, sp.v1) == (4.0, 2.0)
    sp = scale(PotentialParams(0.0, 0.0, 2.0, 0.3))
    assert (sp.v0, sp.v1) == (0.0, 0.0)


def test_unscale_roundtrip():
    p = PotentialParams(3.1, 0.4, 1.7, 0.45, mu=0.8, hbar=1.1)
    back = unscale(scale(p), p.beta, p.mu, p.hbar)
    assert back.V0 == pytest.approx(p.V0, rel=1e-15)
    assert back.V1 == pytest.approx(p.V1, rel=1e-15)


@pytest.mark.parametrize("q", [0.0, -0.2, 1.5])
def test_q_validation(q):
    with pytest.raises(DomainError, match=r"q must lie in \(0,1\]"):
        ScaledParams(1.0, 0.0, q)


def test_radicand_validation():
    with pytest.raises(DomainError):
        ScaledParams(1.0, -1.0, 1.0)
    with pytest.raises(DomainError):
        PotentialParams(1.0, -1.0, 1.0, 1.0)
    with pytest.raises(DomainError):
        PotentialParams(1.0, 0.0, 0.0, 1.0)


def test_from_molecular():
    p = from_molecular(1.0, 1.0, math.log(2), 1.0)
    assert p.V1 == pytest.approx(1.0, rel=1e-15)
    assert p.V0 == pytest.approx(2.0, rel=1e-15)
    assert p.beta == pytest.approx(math.log(2), rel=1e-15)
    # small shape and small q: V1 -> D0
    p = from_molecular(3.0, 1.0, 1e-9, 1e-9)
    assert p.V1 == pytest.approx(3.0, rel=1e-8)


def test_from_molecular_rejects_zero_shape():
    with pytest.raises(DomainError):
        from_molecular(1.0, 1.0, 0.0, 1.0)


def test_hulthen_limit():
    assert is_hulthen_limit(PotentialParams(1.0, 0.0, 1.0, 1.0))
    assert not is_hulthen_limit(PotentialParams(1.0, 2.0, 1.0, 1.0))
    assert not is_hulthen_limit(ScaledParams(1.0, 1e-30, 1.0))


def test_unit_q_shares_w():
    sp = ScaledParams(5.0, 0.7, 0.6)
    u = sp.unit_q()
    assert u.q == 1.0
    assert u.w == pytest.approx(sp.w, rel=1e-15)
