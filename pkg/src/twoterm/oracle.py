"""Finite-difference reference solver for the s-wave radial equation.

Works in the dimensionless coordinate s = beta r - ln q, measured from the
point where 1 - q e^{-beta r} vanishes, so that x = q e^{-beta r} = e^{-s}.
The closed-form spectrum is the spectrum on the full x-range (0, 1), i.e. on
s > 0; for q = 1 this is simply beta r > 0. In these units the equation is

    -u''(s) + v(s) u(s) = eps u(s),  v = -(v0/q) x/(1-x) + (v1/q^2) x^2/(1-x)^2

discretized with the 3-point second difference and Dirichlet ends.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import DomainError
from .potential import ScaledParams, scaled_potential_x
from .wavefunc import Convention, WaveState, weighted_jacobi

__all__ = [
    "RadialGrid",
    "OracleSpectrum",
    "default_grid",
    "solve_radial",
    "richardson",
    "convergence_order",
    "overlap_with_analytic",
    "grid_overlap",
]

Potential = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class RadialGrid:
    """Uniform interior grid; the endpoints carry the Dirichlet conditions."""

    r_min: float
    r_max: float
    npoints: int

    def __post_init__(self):
        if self.npoints < 3:
            raise DomainError("npoints must be >= 3")
        if not (self.r_min >= 0 and self.r_min < self.r_max):
            raise DomainError("need 0 <= r_min < r_max")

    @property
    def h(self) -> float:
        return (self.r_max - self.r_min) / (self.npoints + 1)

    @property
    def points(self) -> np.ndarray:
        return self.r_min + self.h * np.arange(1, self.npoints + 1)

    def halved(self) -> "RadialGrid":
        return RadialGrid(self.r_min, self.r_max, 2 * self.npoints + 1)


@dataclass(frozen=True)
class OracleSpectrum:
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray  # shape (npoints, count), sum(h u^2) = 1 per column
    grid: RadialGrid
    params: ScaledParams | None = None


def default_grid(npoints: int = 4000, r_max: float = 40.0, r_min: float = 0.0) -> RadialGrid:
    return RadialGrid(r_min, r_max, npoints)


def _potential_values(sp: ScaledParams | Potential, s: np.ndarray) -> np.ndarray:
    if isinstance(sp, ScaledParams):
        with np.errstate(divide="ignore", invalid="ignore"):
            x = np.exp(-s)
            return scaled_potential_x(sp, x)
    return np.asarray(sp(s), dtype=float)


def solve_radial(sp: ScaledParams | Potential, grid: RadialGrid, count: int) -> OracleSpectrum:
    """Lowest ``count`` eigenpairs of -D2 + diag(v) on ``grid``.

    ``sp`` is either a ScaledParams or any vectorized potential v(s).
    """
    if count < 1:
        raise DomainError("count must be >= 1")
    if count > grid.npoints:
        raise DomainError("count exceeds the matrix size")
    s = grid.points
    v = _potential_values(sp, s)
    if not np.all(np.isfinite(v)):
        raise DomainError("potential is singular on the grid")
    h2 = grid.h**2
    diag = 2.0 / h2 + v
    off = np.full(grid.npoints - 1, -1.0 / h2)
    # LAPACK stebz (bisection on Sturm counts) + stein (inverse iteration)
    vals, vecs = eigh_tridiagonal(diag, off, select="i", select_range=(0, count - 1),
                                  lapack_driver="stebz")
    vecs = vecs / math.sqrt(grid.h)
    for j in range(vecs.shape[1]):
        col = vecs[:, j]
        first = np.argmax(np.abs(col) > 1e-3 * np.max(np.abs(col)))
        if col[first] < 0:
            vecs[:, j] = -col
    return OracleSpectrum(vals, vecs, grid, sp if isinstance(sp, ScaledParams) else None)


def richardson(sp: ScaledParams | Potential, grid: RadialGrid, count: int) -> np.ndarray:
    """(4 eps_{h/2} - eps_h) / 3 per level."""
    coarse = solve_radial(sp, grid, count).eigenvalues
    fine = solve_radial(sp, grid.halved(), count).eigenvalues
    return (4 * fine - coarse) / 3


def convergence_order(sp: ScaledParams | Potential, grid: RadialGrid, level: int = 0,
                      exact: float | None = None) -> float:
    """Observed order p of the eigenvalue error from grids h, h/2 (and h/4).

    With ``exact`` given, p = log2(err_h / err_{h/2}); otherwise the three-grid
    estimate log2((e_h - e_{h/2}) / (e_{h/2} - e_{h/4})) is used.
    """
    g1, g2 = grid, grid.halved()
    e1 = solve_radial(sp, g1, level + 1).eigenvalues[level]
    e2 = solve_radial(sp, g2, level + 1).eigenvalues[level]
    if exact is not None:
        return math.log2(abs(e1 - exact) / abs(e2 - exact))
    e3 = solve_radial(sp, g2.halved(), level + 1).eigenvalues[level]
    return math.log2(abs(e1 - e2) / abs(e2 - e3))


def grid_overlap(spec: OracleSpectrum, i: int, j: int) -> float:
    return float(spec.grid.h * np.dot(spec.eigenvectors[:, i], spec.eigenvectors[:, j]))


def overlap_with_analytic(spec: OracleSpectrum, level: int, ws: WaveState, beta: float = 1.0) -> float:
    """|sum_i h u_i R(s_i)| with R the analytic state on the oracle grid.

    ``ws`` must be PHYSICAL_DR normalized over the whole x-range, i.e. built
    with q = 1 (use ``sp.unit_q()`` for a q < 1 potential).
    """
    if level >= spec.eigenvectors.shape[1]:
        raise DomainError("level was not computed")
    if ws.convention is not Convention.PHYSICAL_DR:
        raise DomainError("overlap needs a PHYSICAL_DR state")
    if ws.q != 1:
        raise DomainError("analytic state must cover x in (0, 1); build it from sp.unit_q()")
    if spec.params is not None and ws.params is not None and spec.params.unit_q() != ws.params.unit_q():
        raise DomainError("oracle and analytic state belong to different potentials")
    s = spec.grid.points
    x = np.exp(-s)
    # R is normalized in r; the grid vectors in s = beta r
    R = ws.norm_const * weighted_jacobi(ws.n, ws.a1, ws.A, x, -np.expm1(-s)) / math.sqrt(beta)
    return abs(float(spec.grid.h * np.dot(spec.eigenvectors[:, level], R)))
