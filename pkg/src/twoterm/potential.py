"""The two-term screened potential, its parameters and dimensionless scaling.

    V(r) = -V0 e^{-beta r} / (1 - q e^{-beta r}) + V1 e^{-2 beta r} / (1 - q e^{-beta r})^2

All downstream math uses the dimensionless strengths v = 2 mu V / (beta hbar)^2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, SingularityError

__all__ = [
    "PotentialParams",
    "ScaledParams",
    "potential_eval",
    "scaled_potential_x",
    "scale",
    "unscale",
    "energy_scale",
    "from_molecular",
    "is_hulthen_limit",
]


def _check_q(q: float) -> None:
    if not (0 < q <= 1):
        raise DomainError(f"q must lie in (0,1], got {q!r}")


@dataclass(frozen=True)
class PotentialParams:
    V0: float
    V1: float
    beta: float
    q: float
    mu: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        _check_q(self.q)
        if not self.beta > 0:
            raise DomainError("beta must be positive")
        if not (self.mu > 0 and self.hbar > 0):
            raise DomainError("mu and hbar must be positive")
        if 1 + 8 * self.mu * self.V1 / (self.q**2 * self.beta**2 * self.hbar**2) < 0:
            raise DomainError("V1 too negative: 1 + 8 mu V1 / (q beta hbar)^2 < 0")


@dataclass(frozen=True)
class ScaledParams:
    """Dimensionless strengths v0 = 2 mu V0/(beta hbar)^2, v1 likewise, and q."""

    v0: float
    v1: float
    q: float

    def __post_init__(self):
        _check_q(self.q)
        if 1 + 4 * self.v1 / self.q**2 < 0:
            raise DomainError("v1 too negative: 1 + 4 v1/q^2 < 0")

    @property
    def w(self) -> float:
        """Combined attraction v0/q + v1/q^2 that fixes the spectrum together with A."""
        return self.v0 / self.q + self.v1 / self.q**2

    def unit_q(self) -> "ScaledParams":
        """Equivalent q = 1 parameters (v0/q, v1/q^2).

        Shifting r by ln(q)/beta maps the q-potential onto this one, so the
        spectrum and the x-space eigenfunctions are shared.
        """
        return ScaledParams(self.v0 / self.q, self.v1 / self.q**2, 1.0)


def energy_scale(p: PotentialParams) -> float:
    """(beta hbar)^2 / (2 mu): multiply a dimensionless energy by this to get E."""
    return p.beta**2 * p.hbar**2 / (2 * p.mu)


def potential_eval(p: PotentialParams, r):
    """V(r) in physical units. Accepts scalars or arrays."""
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0) and p.q == 1:
        bad = r == 0
        if np.any(bad):
            raise SingularityError("V(r) is singular at r = 0 when q = 1")
        raise DomainError("r must be positive for q = 1")
    e = np.exp(-p.beta * r)
    den = 1 - p.q * e
    if np.any(den == 0):
        raise SingularityError("1 - q exp(-beta r) vanishes")
    out = -p.V0 * e / den + p.V1 * e**2 / den**2
    return out[()] if out.ndim == 0 else out


def scaled_potential_x(sp: ScaledParams, x):
    """Dimensionless potential as a function of x = q e^{-beta r}.

    v(x) = -(v0/q) x/(1-x) + (v1/q^2) x^2/(1-x)^2
    """
    x = np.asarray(x, dtype=float)
    t = x / (1 - x)
    return -(sp.v0 / sp.q) * t + (sp.v1 / sp.q**2) * t * t


def scale(p: PotentialParams) -> ScaledParams:
    k = 1.0 / energy_scale(p)
    return ScaledParams(p.V0 * k, p.V1 * k, p.q)


def unscale(sp: ScaledParams, beta: float, mu: float = 1.0, hbar: float = 1.0) -> PotentialParams:
    """Inverse of :func:`scale` for a chosen unit system."""
    k = beta**2 * hbar**2 / (2 * mu)
    return PotentialParams(sp.v0 * k, sp.v1 * k, beta, sp.q, mu, hbar)


def from_molecular(D0: float, r0: float, alpha_shape: float, q: float, mu: float = 1.0, hbar: float = 1.0) -> PotentialParams:
    """Build parameters from depth D0, equilibrium distance r0 and shape exponent.

    V1 = D0 (e^alpha_shape - q), V0 = 2 V1, beta = alpha_shape / r0.
    """
    _check_q(q)
    if not (D0 > 0 and r0 > 0 and alpha_shape > 0):
        raise DomainError("D0, r0 and alpha_shape must be positive")
    V1 = D0 * (math.exp(alpha_shape) - q)
    if V1 <= 0:
        raise DomainError(f"invalid depth: e^alpha_shape <= q gives V1 = {V1!r}")
    return PotentialParams(2 * V1, V1, alpha_shape / r0, q, mu, hbar)


def is_hulthen_limit(p: PotentialParams | ScaledParams) -> bool:
    """True iff the repulsive strength is exactly zero."""
    v1 = p.V1 if isinstance(p, PotentialParams) else p.v1
    return v1 == 0
