"""Scalar special functions: log-Gamma, binomials, Jacobi polynomials, 2F1, quadrature.

Everything here is pure; the Gauss-Legendre rules are cached and read-only.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.special import roots_legendre

from .errors import ConvergenceError, DomainError, PoleError

__all__ = [
    "JacobiPoly",
    "QuadratureRule",
    "ln_gamma",
    "gen_binomial",
    "jacobi",
    "jacobi_eval",
    "jacobi_sum",
    "jacobi_derivative",
    "jacobi_identity_residuals",
    "gauss_2f1",
    "gauss_legendre",
    "integrate",
    "unit_interval_quad",
]


def ln_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0."""
    if not x > 0:
        raise DomainError(f"ln_gamma needs x > 0, got {x!r}")
    return math.lgamma(x)


def gen_binomial(a: float, k: int) -> float:
    """Generalized binomial coefficient Gamma(a+1) / (Gamma(k+1) Gamma(a-k+1)).

    Evaluated as the falling-factorial product a(a-1)...(a-k+1)/k!, which stays
    finite where the Gamma form hits a pole (integer a < k gives 0).
    """
    if k < 0 or int(k) != k:
        raise DomainError(f"k must be a nonnegative integer, got {k!r}")
    k = int(k)
    if float(a).is_integer() and a >= 0:
        return float(math.comb(int(a), k))
    out = 1.0
    for i in range(k):
        out *= (a - i) / (i + 1)
    return out


@dataclass(frozen=True)
class JacobiPoly:
    """P_n^{(alpha, beta_idx)} with the classical constraint alpha, beta_idx > -1."""

    n: int
    alpha: float
    beta_idx: float

    def __post_init__(self):
        if self.n < 0 or int(self.n) != self.n:
            raise DomainError(f"degree must be a nonnegative integer, got {self.n!r}")
        if not (self.alpha > -1 and self.beta_idx > -1):
            raise DomainError("Jacobi indices must exceed -1")

    def __call__(self, z):
        return jacobi_eval(self, z)


def _recurrence_is_safe(n: int, alpha: float, beta: float) -> bool:
    ab = alpha + beta
    for m in range(2, n + 1):
        if abs(2 * m * (m + ab) * (2 * m + ab - 2)) < 1e-10:
            return False
    return True


def jacobi(n: int, alpha: float, beta: float, z):
    """P_n^{(alpha, beta)}(z) by the three-term recurrence.

    Any real indices are accepted (the shifted-index identities need alpha or
    beta below -1). When a recurrence denominator vanishes the explicit sum is
    used instead.
    """
    arr = np.asarray(z)
    if arr.ndim == 0:
        # plain Python scalars are much faster than 0-d arrays in the loop
        z = complex(arr) if np.iscomplexobj(arr) else float(arr)
    else:
        z = arr if np.iscomplexobj(arr) else arr.astype(float)
    if n < 0:
        return z * 0.0
    if not _recurrence_is_safe(n, alpha, beta):
        return jacobi_sum(n, alpha, beta, z)
    p_prev = z * 0.0 + 1.0
    if n == 0:
        return p_prev
    ab = alpha + beta
    p = (alpha + 1) + (ab + 2) * (z - 1) / 2
    for m in range(2, n + 1):
        a_m = 2 * m * (m + ab) * (2 * m + ab - 2)
        b_m = (2 * m + ab - 1) * ((2 * m + ab) * (2 * m + ab - 2) * z + alpha**2 - beta**2)
        c_m = 2 * (m + alpha - 1) * (m + beta - 1) * (2 * m + ab)
        p_prev, p = p, (b_m * p - c_m * p_prev) / a_m
    return p


def jacobi_eval(p: JacobiPoly, z):
    """Value of the Jacobi polynomial ``p`` at ``z`` (scalar or array)."""
    return jacobi(p.n, p.alpha, p.beta_idx, z)


def jacobi_sum(n: int, alpha: float, beta: float, z, exact: bool = False):
    """Explicit binomial-sum form of P_n^{(alpha, beta)}(z).

    sum_k C(n+alpha, k) C(n+beta, n-k) ((1+z)/2)^k ((z-1)/2)^(n-k). Kept
    independent of the recurrence so each can check the other. The terms
    alternate in sign and cancel heavily for large n; ``exact=True`` sums them
    in rational arithmetic (floats convert to fractions exactly) for a scalar z.
    """
    if exact:
        if n < 0:
            return 0.0
        a, b, zz = Fraction(alpha), Fraction(beta), Fraction(float(z))
        up, down = (1 + zz) / 2, (zz - 1) / 2
        total = sum(_binom_frac(n + a, k) * _binom_frac(n + b, n - k) * up**k * down ** (n - k)
                    for k in range(n + 1))
        return float(total)
    z = np.asarray(z, dtype=float)
    if n < 0:
        return np.zeros_like(z)
    up = (1 + z) / 2
    down = (z - 1) / 2
    out = np.zeros_like(z)
    for k in range(n + 1):
        out = out + gen_binomial(n + alpha, k) * gen_binomial(n + beta, n - k) * up**k * down ** (n - k)
    return out


def _binom_frac(a: Fraction, k: int) -> Fraction:
    out = Fraction(1)
    for i in range(k):
        out = out * (a - i) / (i + 1)
    return out


def jacobi_derivative(p: JacobiPoly, z):
    """d/dz P_n^{(a,b)}(z) = (n+a+b+1)/2 * P_{n-1}^{(a+1,b+1)}(z)."""
    z = np.asarray(z, dtype=float)
    if p.n == 0:
        return np.zeros_like(z)
    return 0.5 * (p.n + p.alpha + p.beta_idx + 1) * jacobi(p.n - 1, p.alpha + 1, p.beta_idx + 1, z)


def jacobi_identity_residuals(n: int, alpha: float, beta_idx: float, z: float) -> dict[str, float]:
    """|LHS - RHS| of four classical Jacobi relations at one point.

    Keys:
      ``index_shift``   P_n^(a,b) = [(a+b+n+1) P_n^(a+1,b) - (b+n) P_n^(a+1,b-1)] / (a+n+1)
      ``alpha_raise``   (1-z) P_n^(a+1,b) = 2/(2n+a+b+2) [(n+a+1) P_n^(a,b) - (n+1) P_{n+1}^(a,b)]
      ``beta_raise``    (1+z) P_n^(a,b+1) = 2/(2n+a+b+2) [(n+b+1) P_n^(a,b) + (n+1) P_{n+1}^(a,b)]
      ``degree_drop``   P_{n-1}^(a,b) = P_n^(a,b-1) - P_n^(a-1,b)

    The alpha_raise relation carries P_{n+1}; the printed variant with P_{n-1}
    does not hold and is not what is checked here.
    """
    if n < 1:
        raise DomainError("identity residuals need n >= 1")
    if z in (-1.0, 1.0):
        raise DomainError("the 1/(1-z) and 1/(1+z) relations are undefined at z = +-1")
    a, b = alpha, beta_idx
    P = lambda m, aa, bb: float(jacobi(m, aa, bb, z))  # noqa: E731
    s = 2 * n + a + b + 2
    out = {}

    lhs = P(n, a, b)
    rhs = ((a + b + n + 1) * P(n, a + 1, b) - (b + n) * P(n, a + 1, b - 1)) / (a + n + 1)
    out["index_shift"] = abs(lhs - rhs)

    lhs = P(n, a + 1, b)
    rhs = 2 / s / (1 - z) * ((n + a + 1) * P(n, a, b) - (n + 1) * P(n + 1, a, b))
    out["alpha_raise"] = abs(lhs - rhs)

    lhs = P(n, a, b + 1)
    rhs = 2 / s / (1 + z) * ((n + b + 1) * P(n, a, b) + (n + 1) * P(n + 1, a, b))
    out["beta_raise"] = abs(lhs - rhs)

    lhs = P(n - 1, a, b)
    rhs = P(n, a, b - 1) - P(n, a - 1, b)
    out["degree_drop"] = abs(lhs - rhs)
    return out


def gauss_2f1(a: float, b: float, c: float, z: float, rtol: float = 1e-14, max_terms: int = 200_000) -> float:
    """Gauss hypergeometric 2F1(a, b; c; z) by its power series, |z| < 1.

    The series stops once the geometric bound on the remaining tail drops
    below ``rtol`` times the partial sum.
    """
    if abs(z) >= 1:
        raise DomainError(f"gauss_2f1 is restricted to |z| < 1, got z={z!r}")
    if c <= 0 and float(c).is_integer():
        raise PoleError(f"c={c!r} is a nonpositive integer")
    total = 1.0
    term = 1.0
    hump = max(abs(a), abs(b), abs(c))
    for j in range(max_terms):
        num = (a + j) * (b + j)
        if num == 0.0:
            return total
        term *= num / ((c + j) * (j + 1)) * z
        total += term
        if j + 1 > hump:
            r = abs((a + j + 1) * (b + j + 1) / ((c + j + 1) * (j + 2)) * z)
            rho = max(r, abs(z))
            if rho < 1 and abs(term) * rho / (1 - rho) <= rtol * abs(total):
                return total
    raise ConvergenceError(f"2F1({a}, {b}; {c}; {z}) did not converge in {max_terms} terms")


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Legendre nodes and weights on [-1, 1]."""

    nodes: np.ndarray
    weights: np.ndarray

    @property
    def npoints(self) -> int:
        return self.nodes.size


@lru_cache(maxsize=64)
def gauss_legendre(npoints: int) -> QuadratureRule:
    if npoints < 1:
        raise DomainError(f"npoints must be >= 1, got {npoints!r}")
    x, w = roots_legendre(npoints)
    x.setflags(write=False)
    w.setflags(write=False)
    return QuadratureRule(x, w)


def integrate(f, lo: float, hi: float, npoints: int = 64) -> float:
    """Gauss-Legendre estimate of the integral of ``f`` over [lo, hi].

    ``f`` is called once with the array of mapped nodes. Exact for polynomials
    of degree <= 2*npoints - 1.
    """
    if not lo < hi:
        raise DomainError("integrate needs lo < hi")
    rule = gauss_legendre(int(npoints))
    half = 0.5 * (hi - lo)
    t = lo + half * (rule.nodes + 1.0)
    return float(half * np.dot(rule.weights, f(t)))


def unit_interval_quad(g, p0: float, p1: float = 1.0, npoints: int = 256,
                       rtol: float = 1e-13, max_points: int = 4096) -> float:
    """Integrate g(y, 1-y) over [0, 1] when g ~ y^p0 at 0 and (1-y)^p1 at 1.

    The sigmoidal map y = u^m / (u^m + (1-u)^m) with m ~ 2/(p+1) turns both
    endpoint singularities into u^(>=1) behaviour, so one Gauss-Legendre rule
    converges quickly. The rule is doubled until two estimates agree to
    ``rtol``. The complement 1-y is passed separately to avoid cancellation.
    """
    if not (p0 > -1 and p1 > -1):
        raise DomainError("integrand is not integrable at an endpoint")
    m = int(min(48, max(2, math.ceil(2.0 / min(p0 + 1, p1 + 1)))))

    def estimate(npts):
        rule = gauss_legendre(npts)
        u = 0.5 * (rule.nodes + 1)
        with np.errstate(over="ignore", under="ignore", divide="ignore"):
            t = np.exp(m * (np.log1p(-u) - np.log(u)))
            y = 1 / (1 + t)
            ym = t / (1 + t)
            jac = m * y * ym / (u * (1 - u))
        ok = (y > 0) & (ym > 0) & np.isfinite(t)
        vals = np.zeros_like(u)
        vals[ok] = g(y[ok], ym[ok]) * jac[ok]
        return float(0.5 * np.dot(rule.weights, vals))

    npts = npoints
    prev = estimate(npts)
    while npts < max_points:
        npts *= 2
        cur = estimate(npts)
        if abs(cur - prev) <= rtol * abs(cur):
            return cur
        prev = cur
    return prev
