"""Analytic eigenfunctions and their normalization.

    R_n(x) = A_n x^{a1} (1-x)^{(1+A)/2} P_n^{(2 a1, A)}(1 - 2x),   x = q e^{-beta r}

Two conventions are kept apart:

* ``FAMILY``: int_0^1 q^{2a1} y^{2a1} (1-qy)^{1+A} P_n(1-2qy)^2 dy = 1, the
  x = qy form without the dr Jacobian. The ladder eigenvalues use this one.
* ``PHYSICAL_DR``: int_0^inf R_n(r)^2 dr = 1, i.e.
  (1/beta) int_0^q x^{2a1-1} (1-x)^{1+A} P_n^2 dx = 1.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .potential import ScaledParams
from .specfun import gauss_2f1, gen_binomial, jacobi, ln_gamma, unit_interval_quad
from .spectrum import energy_level

__all__ = [
    "Convention",
    "WaveState",
    "weighted_jacobi",
    "eval_x",
    "eval_r",
    "normalize_family",
    "normalize_physical",
    "closed_form_norm",
    "family_wave",
    "physical_state",
    "orthogonality_residual",
]

DEFAULT_NPOINTS = 256


class Convention(enum.Enum):
    FAMILY = "family"
    PHYSICAL_DR = "physical"


@dataclass(frozen=True)
class WaveState:
    n: int
    a1: float
    A: float
    q: float
    norm_const: float
    convention: Convention
    params: ScaledParams | None = None

    def __post_init__(self):
        if not self.norm_const > 0:
            raise DomainError("norm_const must be positive")
        if not self.a1 > 0:
            raise DomainError("a1 must be positive")

    def __call__(self, x):
        return eval_x(self, x)


def weighted_jacobi(n: int, a1: float, A: float, x, one_minus_x=None):
    """Unnormalized x^{a1} (1-x)^{(1+A)/2} P_n^{(2a1, A)}(1-2x)."""
    x = np.asarray(x, dtype=float)
    omx = 1 - x if one_minus_x is None else np.asarray(one_minus_x, dtype=float)
    return x**a1 * omx ** ((1 + A) / 2) * jacobi(n, 2 * a1, A, omx - x)


def eval_x(ws: WaveState, x):
    x = np.asarray(x, dtype=float)
    if np.any(x <= 0) or np.any(x > ws.q):
        raise DomainError(f"x must lie in (0, q={ws.q}]")
    out = ws.norm_const * weighted_jacobi(ws.n, ws.a1, ws.A, x)
    return out[()] if out.ndim == 0 else out


def eval_r(ws: WaveState, beta: float, r):
    r = np.asarray(r, dtype=float)
    if ws.q == 1 and np.any(r <= 0):
        raise DomainError("r must be positive when q = 1")
    if np.any(r < 0):
        raise DomainError("r must be nonnegative")
    x = ws.q * np.exp(-beta * r)
    # far tails underflow to x = 0, where the state vanishes (a1 > 0)
    out = np.zeros_like(x)
    live = x > 0
    out[live] = eval_x(ws, x[live])
    return out[()] if out.ndim == 0 else out


def _norm_integral(n, a1, A, q, x_power, npoints):
    # int_0^1 (qy)^{x_power} (1-qy)^{1+A} P_n(1-2qy)^2 dy
    def g(y, ym):
        omx = (1 - q) + q * ym
        x = q * y
        return x**x_power * omx ** (1 + A) * jacobi(n, 2 * a1, A, omx - x) ** 2

    p1 = 1 + A if q == 1 else 1.0
    return unit_interval_quad(g, x_power, p1, npoints)


def normalize_family(n: int, a1: float, A: float, q: float, npoints: int = DEFAULT_NPOINTS) -> float:
    """A_n for the x = qy normalization without the dr Jacobian."""
    if not a1 > 0:
        raise DomainError("normalization needs a1 > 0")
    return 1.0 / math.sqrt(_norm_integral(n, a1, A, q, 2 * a1, npoints))


def normalize_physical(n: int, a1: float, A: float, q: float, beta: float, npoints: int = DEFAULT_NPOINTS) -> float:
    """N_n with int_0^inf R_n(r)^2 dr = 1 (x integrated over (0, q])."""
    if not a1 > 0:
        raise DomainError("normalization needs a1 > 0")
    # dr = dx / (beta x) and dx = q dy
    val = q * _norm_integral(n, a1, A, q, 2 * a1 - 1, npoints) / beta
    return 1.0 / math.sqrt(val)


def _beta_fn(a: float, b: float) -> float:
    # exp(lgamma) loses ~1e-14 relative for moderate arguments; the double sum
    # in closed_form_norm amplifies that, so use gamma directly when it fits
    if a + b < 170:
        return math.gamma(a) * math.gamma(b) / math.gamma(a + b)
    return math.exp(ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b))


def _power_integral(b: float, e: float, q: float) -> float:
    """int_0^1 y^{b-1} (1 - q y)^e dy = 2F1(-e, b; b+1; q) / b.

    The series is summed after Euler's transformation,
    2F1(-e, b; b+1; q) = (1-q)^(1+e) 2F1(b+1+e, 1; b+1; q), whose terms are all
    positive; the raw form alternates and loses digits when e is large. For
    q > 1/2 the integral over [0, q] is taken as the complete Beta value
    (Gauss summation at z = 1) minus the piece over [q, 1], a 2F1 in 1 - q.
    """
    if q <= 0.5:
        return (1 - q) ** (1 + e) * gauss_2f1(b + 1 + e, 1.0, b + 1, q) / b
    full = _beta_fn(b, e + 1)
    if q == 1:
        return full
    s = 1 - q
    # int_0^s t^e (1-t)^(b-1) dt, Euler-transformed likewise
    tail = s ** (e + 1) * q**b * gauss_2f1(e + 1 + b, 1.0, e + 2, s) / (e + 1)
    return (full - tail) / q**b


def closed_form_norm(n: int, a1: float, A: float, q: float) -> float:
    """A_n (family convention) from the term-by-term expansion of P_n^2.

    With P_n(1-2qy) = sum_k g_k (-1)^(n-k) (1-qy)^k (qy)^(n-k) and
    g_k = C(n+2a1, k) C(n+A, n-k), the normalization integral is

        sum_{k,l} g_k g_l (-1)^(k+l) q^(b-1) int_0^1 y^(b-1) (1-qy)^(1+A+k+l) dy,
        b = 2a1 + 2n - k - l + 1,

    and each inner integral is a 2F1 with upper parameters (-(1+A+k+l), b).
    """
    if not a1 > 0:
        raise DomainError("normalization needs a1 > 0")
    if not (0 < q <= 1):
        raise DomainError("q must lie in (0, 1]")
    g = [gen_binomial(n + 2 * a1, k) * gen_binomial(n + A, n - k) for k in range(n + 1)]
    terms = []
    for k in range(n + 1):
        for l in range(n + 1):
            b = 2 * a1 + 2 * n - k - l + 1
            e = 1 + A + k + l
            sign = -1.0 if (k + l) % 2 else 1.0
            terms.append(sign * g[k] * g[l] * q ** (b - 1) * _power_integral(b, e, q))
    total = math.fsum(terms)
    if not total > 0:
        raise DomainError("normalization integral lost all precision")
    return 1.0 / math.sqrt(total)


def family_wave(n: int, a1: float, A: float, q: float) -> WaveState:
    """Member of the fixed-(a1, A) family normalized in the family convention."""
    return WaveState(n, a1, A, q, normalize_family(n, a1, A, q), Convention.FAMILY)


def physical_state(sp: ScaledParams, n: int, beta: float = 1.0) -> WaveState:
    """Bound eigenstate n of ``sp`` normalized to int R^2 dr = 1 over r >= 0."""
    bs = energy_level(sp, n)
    c = normalize_physical(n, bs.a1, bs.A, sp.q, beta)
    return WaveState(n, bs.a1, bs.A, sp.q, c, Convention.PHYSICAL_DR, sp)


def orthogonality_residual(state_a: WaveState, state_b: WaveState, beta: float = 1.0,
                           npoints: int = DEFAULT_NPOINTS) -> float:
    """|int_0^inf R_a R_b dr| for two physical eigenstates of one potential.

    Equals the self-overlap (1 after normalization) when the states coincide.
    Eigenstates of different n are orthogonal over the whole x-range (0, 1);
    for q < 1 pass states built from ``sp.unit_q()``.
    """
    for s in (state_a, state_b):
        if s.convention is not Convention.PHYSICAL_DR:
            raise DomainError("orthogonality is defined for PHYSICAL_DR states")
    if state_a.params is not None and state_b.params is not None and state_a.params != state_b.params:
        raise DomainError("states belong to different potentials")
    if state_a.A != state_b.A or state_a.q != state_b.q:
        raise DomainError("states belong to different potentials")
    q, A = state_a.q, state_a.A

    def g(y, ym):
        omx = (1 - q) + q * ym
        x = q * y
        z = omx - x
        pa = jacobi(state_a.n, 2 * state_a.a1, A, z)
        pb = jacobi(state_b.n, 2 * state_b.a1, A, z)
        return x ** (state_a.a1 + state_b.a1 - 1) * omx ** (1 + A) * pa * pb

    p0 = state_a.a1 + state_b.a1 - 1
    val = q * unit_interval_quad(g, p0, 1 + A if q == 1 else 1.0, npoints) / beta
    return abs(state_a.norm_const * state_b.norm_const * val)
