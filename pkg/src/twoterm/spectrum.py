"""Closed-form bound-state spectrum from the Nikiforov-Uvarov reduction.

In x = q e^{-beta r} the s-wave equation takes hypergeometric form with
sigma(x) = x(1-x), tau~(x) = 1-x and sigma~(x) = -(a1^2 + a2^2 x + a3^2 x^2).
Requiring a polynomial pi(x) fixes k; matching lambda = k + pi' to
lambda_n = -n tau' - n(n-1) sigma''/2 quantizes the energy:

    eps_n = -[(Lambda^2 - 4w) / (4 Lambda)]^2,  Lambda = 2n + 1 + A,
    A = sqrt(1 + 4 v1/q^2),  w = v0/q + v1/q^2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, NoSuchLevelError
from .potential import PotentialParams, ScaledParams, energy_scale, scale

__all__ = [
    "BoundState",
    "NuIntermediates",
    "capital_A",
    "energy_level",
    "energy_level_physical",
    "spectrum",
    "num_bound_states",
    "nu_intermediates",
    "quantization_residual",
]


@dataclass(frozen=True)
class BoundState:
    n: int
    a1: float
    A: float
    Lambda: float
    eps: float
    E: float


@dataclass(frozen=True)
class NuIntermediates:
    """Intermediate NU quantities at a trial energy, on the k_minus branch.

    ``pi_linear`` and ``tau_linear`` hold (constant, slope) pairs.
    """

    n: int
    a1: float
    A: float
    a2_sq: float
    a3_sq: float
    k_minus: float
    k_plus: float
    pi_linear: tuple[float, float]
    tau_linear: tuple[float, float]
    lambda_: float
    lambda_n: float

    @property
    def tau_slope(self) -> float:
        return self.tau_linear[1]


def capital_A(sp: ScaledParams) -> float:
    """A = sqrt(1 + 4 v1 / q^2)."""
    rad = 1 + 4 * sp.v1 / sp.q**2
    if rad < 0:
        raise DomainError(f"1 + 4 v1/q^2 = {rad!r} < 0")
    return math.sqrt(rad)


def num_bound_states(sp: ScaledParams) -> int:
    """Number of n >= 0 with 2n + 1 + A < 2 sqrt(w), i.e. a1 > 0."""
    w = sp.w
    if w <= 0:
        return 0
    A = capital_A(sp)
    edge = 2 * math.sqrt(w)
    n = 0
    while 2 * n + 1 + A < edge:
        n += 1
    return n


def energy_level(sp: ScaledParams, n: int, unit: float = 1.0) -> BoundState:
    """Bound state ``n``; ``unit`` converts eps to E (see potential.energy_scale)."""
    if n < 0 or int(n) != n:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")
    nmax = num_bound_states(sp)
    if n >= nmax:
        raise NoSuchLevelError(f"n={n} is not bound; this potential has {nmax} level(s)")
    A = capital_A(sp)
    lam = 2 * n + 1 + A
    a1 = (4 * sp.w - lam * lam) / (4 * lam)
    eps = -a1 * a1
    return BoundState(int(n), a1, A, lam, eps, eps * unit)


def energy_level_physical(p: PotentialParams, n: int) -> BoundState:
    return energy_level(scale(p), n, unit=energy_scale(p))


def spectrum(sp: ScaledParams, unit: float = 1.0) -> list[BoundState]:
    return [energy_level(sp, n, unit) for n in range(num_bound_states(sp))]


def nu_intermediates(sp: ScaledParams, eps: float, n: int) -> NuIntermediates:
    """NU bookkeeping at trial energy ``eps`` for quantum number ``n``.

    k_minus = -a2^2 - 2 a1^2 - a1 A selects pi(x) = a1 - (a1 + (1+A)/2) x, the
    branch whose tau(x) = tau~ + 2 pi has a negative slope.
    """
    if not eps < 0:
        raise DomainError(f"eps must be negative, got {eps!r}")
    a1 = math.sqrt(-eps)
    A = capital_A(sp)
    a2_sq = 2 * eps - sp.v0 / sp.q
    a3_sq = sp.w - eps
    base = -a2_sq - 2 * a1 * a1
    k_minus = base - a1 * A
    k_plus = base + a1 * A
    pi_lin = (a1, -(a1 + (1 + A) / 2))
    tau_lin = (1 + 2 * pi_lin[0], -1 + 2 * pi_lin[1])
    lam = k_minus + pi_lin[1]
    # sigma'' = -2
    lam_n = -n * tau_lin[1] + n * (n - 1)
    return NuIntermediates(n, a1, A, a2_sq, a3_sq, k_minus, k_plus, pi_lin, tau_lin, lam, lam_n)


def quantization_residual(sp: ScaledParams, n: int, eps: float) -> float:
    """Signed residual a1 + Lambda/2 - a3 of the eigenvalue condition.

    Uses the sign for which -(n + 1/2) -+ a3 is positive. The residual is
    strictly increasing in a1 = sqrt(-eps), so its only root is eps_n.
    """
    if not eps < 0:
        raise DomainError(f"eps must be negative, got {eps!r}")
    a3_sq = sp.w - eps
    if a3_sq < 0:
        raise DomainError("a3^2 < 0: no real branch")
    lam = 2 * n + 1 + capital_A(sp)
    return math.sqrt(-eps) + lam / 2 - math.sqrt(a3_sq)
