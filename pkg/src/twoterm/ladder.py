"""SU(1,1) ladder operators on the fixed-(a1, A) Jacobi-weighted family.

The family is f_n(x) = A_n x^{a1} (1-x)^{(1+A)/2} P_n^{(2a1, A)}(1-2x) with a1
and A held fixed while n varies. States are stored as Chebyshev coefficients
of their polynomial factor in z = 1 - 2x, so every operator below acts by
exact polynomial algebra.

The first-order operators are

    Pi_-(n) = -[x(1-x) d/dx + (a1 + (1+A)/2 + kappa2 + kappa3) x - a1 - kappa3]
              * (2n + 2a1 + A) / (n + 2a1)
    Pi_+(n) =  [x(1-x) d/dx + (a1 + (1+A)/2 - kappa4 - kappa5) x - a1 + kappa4]
              * (2n + 2a1 + A + 2) / (n + 2a1 + A + 1)

so that Pi_- f_n = (n+A) (A_n/A_{n-1}) f_{n-1} and
Pi_+ f_n = (n+1) (A_n/A_{n+1}) f_{n+1}. ``uncorrected_operator`` keeps the
sign pattern as usually printed (kappa terms with the opposite signs), which
does not map the family into itself; it exists so tests can show that.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np
from numpy.polynomial import chebyshev as C

from .errors import DegenerateParameterError, DomainError
from .specfun import jacobi
from .wavefunc import normalize_family, normalize_physical

__all__ = [
    "LadderCoeffs",
    "FamilyState",
    "kappa_coeffs",
    "family_state",
    "family_eval",
    "lower_operator",
    "raise_operator",
    "uncorrected_operator",
    "apply_operator",
    "apply_operator_numeric",
    "apply_lower",
    "apply_raise",
    "apply_weight",
    "lower_eigenvalue",
    "raise_eigenvalue",
    "weight_eigenvalue",
    "ladder_residuals",
    "commutator_check",
    "casimir_eigenvalue",
    "casimir_orderings",
    "casimir_residual",
]

_ONE_MINUS_Z2 = np.array([0.5, 0.0, -0.5])  # 1 - z^2 in the Chebyshev basis
_X_OF_Z = np.array([0.5, -0.5])  # x = (1 - z)/2


@dataclass(frozen=True)
class LadderCoeffs:
    n: int
    a1: float
    A: float
    kappa1: float
    kappa2: float
    kappa3: float
    kappa4: float
    kappa5: float


def kappa_coeffs(n: int, a1: float, A: float) -> LadderCoeffs:
    d1 = 2 * n + 2 * a1 + A
    d2 = d1 + 2
    if d1 == 0 or d2 == 0:
        raise DegenerateParameterError(f"2n+2a1+A={d1} makes a kappa denominator vanish")
    k1 = (n + A) * (n + 2 * a1) / d1
    k2 = n * (n + 2 * a1) / d1
    k3 = n * (n + A) / d1
    k4 = (n + 2 * a1 + A + 1) * (n + 2 * a1 + 1) / d2
    k5 = (n + 2 * a1 + A + 1) * (n + A + 1) / d2
    return LadderCoeffs(n, a1, A, k1, k2, k3, k4, k5)


@dataclass(frozen=True)
class FamilyState:
    """norm_const * x^{a1} (1-x)^{(1+A)/2} * Q(1-2x), Q given by ``coeffs``.

    ``coeffs`` are Chebyshev-series coefficients in z = 1 - 2x. ``n`` is the
    label the number operator reads.
    """

    n: int
    a1: float
    A: float
    q: float
    coeffs: np.ndarray
    norm_const: float

    def __call__(self, x):
        return family_eval(self, x)


@dataclass(frozen=True)
class FirstOrderOperator:
    """prefactor * [x(1-x) d/dx + slope * x + const]."""

    slope: float
    const: float
    prefactor: float


def _norm(n, a1, A, q, convention, beta):
    if convention == "family":
        return normalize_family(n, a1, A, q)
    if convention == "physical":
        return normalize_physical(n, a1, A, q, beta)
    raise DomainError(f"unknown normalization convention {convention!r}")


def family_state(n: int, a1: float, A: float, q: float = 1.0, convention: str = "family",
                 beta: float = 1.0) -> FamilyState:
    """The normalized n-th member of the fixed-(a1, A) family."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    if not a1 > 0:
        raise DomainError("a1 must be positive")
    if n == 0:
        coeffs = np.array([1.0])
    else:
        coeffs = C.chebinterpolate(lambda z: jacobi(n, 2 * a1, A, z), n)
    return FamilyState(n, a1, A, q, coeffs, _norm(n, a1, A, q, convention, beta))


def family_eval(s: FamilyState, x):
    x = np.asarray(x, dtype=float)
    return s.norm_const * x**s.a1 * (1 - x) ** ((1 + s.A) / 2) * C.chebval(1 - 2 * x, s.coeffs)


def lower_operator(n: int, a1: float, A: float) -> FirstOrderOperator:
    k = kappa_coeffs(n, a1, A)
    return FirstOrderOperator(a1 + (1 + A) / 2 + k.kappa2 + k.kappa3, -a1 - k.kappa3,
                              -(2 * n + 2 * a1 + A) / (n + 2 * a1))


def raise_operator(n: int, a1: float, A: float) -> FirstOrderOperator:
    k = kappa_coeffs(n, a1, A)
    den = n + 2 * a1 + A + 1
    if den == 0:
        raise DegenerateParameterError("n + 2a1 + A + 1 vanishes")
    return FirstOrderOperator(a1 + (1 + A) / 2 - k.kappa4 - k.kappa5, -a1 + k.kappa4,
                              (2 * n + 2 * a1 + A + 2) / den)


def uncorrected_operator(kind: str, n: int, a1: float, A: float) -> FirstOrderOperator:
    """The kappa terms with the opposite signs; fails the ladder relations."""
    k = kappa_coeffs(n, a1, A)
    if kind == "lower":
        return FirstOrderOperator(0.5 * (2 * a1 + A - 2 * (k.kappa2 + k.kappa3) + 1), -a1 + k.kappa3,
                                  (2 * n + 2 * a1 + A) / (n + 2 * a1))
    if kind == "raise":
        return FirstOrderOperator(0.5 * (2 * a1 + A + 2 * (k.kappa4 - k.kappa5) + 1), -a1 - k.kappa4,
                                  (2 * n + 2 * a1 + A + 2) / (n + 2 * a1 + A + 1))
    raise ValueError(kind)


def apply_operator(op: FirstOrderOperator, s: FamilyState, new_label: int) -> FamilyState:
    """Exact action on the coefficient representation.

    x(1-x) d/dx [w Q] = w [x(1-x) Q' + (a1 - (a1 + c) x) Q] with c = (1+A)/2,
    and x(1-x) d/dx = -(1 - z^2)/2 d/dz.
    """
    c = (1 + s.A) / 2
    deriv = -0.5 * C.chebmul(_ONE_MINUS_Z2, C.chebder(s.coeffs)) if s.coeffs.size > 1 else np.zeros(1)
    lin = C.chebadd(np.array([s.a1 + op.const]), (op.slope - s.a1 - c) * _X_OF_Z)
    out = C.chebadd(deriv, C.chebmul(lin, s.coeffs)) * op.prefactor
    return replace(s, n=new_label, coeffs=np.asarray(out, dtype=float))


def apply_operator_numeric(op: FirstOrderOperator, s: FamilyState, x, h: float = 1e-5):
    """Grid-sampled action using a 5-point derivative of the sampled state."""
    x = np.asarray(x, dtype=float)
    f = lambda t: family_eval(s, t)  # noqa: E731
    df = (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12 * h)
    return op.prefactor * (x * (1 - x) * df + (op.slope * x + op.const) * f(x))


def _projection(image: FamilyState, target: FamilyState) -> float:
    m = max(image.coeffs.size, target.coeffs.size)
    a = np.zeros(m)
    b = np.zeros(m)
    a[: image.coeffs.size] = image.coeffs
    b[: target.coeffs.size] = target.coeffs
    return float(image.norm_const * np.dot(a, b) / (target.norm_const * np.dot(b, b)))


def apply_lower(s: FamilyState, convention: str = "family", beta: float = 1.0) -> tuple[FamilyState, float]:
    """Pi_- f_n and its measured proportionality to the normalized f_{n-1}.

    For n = 0 the image is the zero function and the coefficient is 0.
    """
    image = apply_operator(lower_operator(s.n, s.a1, s.A), s, max(s.n - 1, 0))
    if s.n == 0:
        return image, 0.0
    target = family_state(s.n - 1, s.a1, s.A, s.q, convention, beta)
    return image, _projection(image, target)


def apply_raise(s: FamilyState, convention: str = "family", beta: float = 1.0) -> tuple[FamilyState, float]:
    """Pi_+ f_n and its measured proportionality to the normalized f_{n+1}."""
    image = apply_operator(raise_operator(s.n, s.a1, s.A), s, s.n + 1)
    target = family_state(s.n + 1, s.a1, s.A, s.q, convention, beta)
    return image, _projection(image, target)


def apply_weight(s: FamilyState) -> FamilyState:
    """Pi_0 = n + (1+A)/2 acting through the state's label."""
    return replace(s, coeffs=s.coeffs * weight_eigenvalue(s.n, s.A))


def weight_eigenvalue(n: int, A: float) -> float:
    if n < 0:
        raise DomainError("n must be nonnegative")
    return n + (1 + A) / 2


def lower_eigenvalue(n: int, a1: float, A: float, q: float = 1.0, convention: str = "family",
                     beta: float = 1.0) -> float:
    """pi_-(n) = (n + A) A_n / A_{n-1}; zero for n = 0."""
    if n == 0:
        return 0.0
    return (n + A) * _norm(n, a1, A, q, convention, beta) / _norm(n - 1, a1, A, q, convention, beta)


def raise_eigenvalue(n: int, a1: float, A: float, q: float = 1.0, convention: str = "family",
                     beta: float = 1.0) -> float:
    """pi_+(n) = (n + 1) A_n / A_{n+1}."""
    return (n + 1) * _norm(n, a1, A, q, convention, beta) / _norm(n + 1, a1, A, q, convention, beta)


def _grid(q: float, npts: int = 2001) -> np.ndarray:
    return np.linspace(0.0, q, npts)[1:]


def _sup(f: FamilyState | None, x, values=None) -> float:
    v = family_eval(f, x) if values is None else values
    return float(np.max(np.abs(v)))


def ladder_residuals(n: int, a1: float, A: float, q: float = 1.0, convention: str = "family",
                     beta: float = 1.0) -> dict[str, float]:
    """Relative sup-norm residuals of the two ladder relations at level n.

    ``lower``: ||Pi_- f_n - pi_-(n) f_{n-1}|| / ||f_n|| (absolute ||Pi_- f_0|| at n = 0);
    ``raise``: ||Pi_+ f_n - pi_+(n) f_{n+1}|| / ||f_n||.
    """
    x = _grid(q)
    s = family_state(n, a1, A, q, convention, beta)
    scale = _sup(s, x)
    out = {}
    img, _ = apply_lower(s, convention, beta)
    if n == 0:
        out["lower"] = _sup(img, x)
    else:
        tgt = family_state(n - 1, a1, A, q, convention, beta)
        diff = family_eval(img, x) - lower_eigenvalue(n, a1, A, q, convention, beta) * family_eval(tgt, x)
        out["lower"] = _sup(None, x, diff) / scale
    img, _ = apply_raise(s, convention, beta)
    tgt = family_state(n + 1, a1, A, q, convention, beta)
    diff = family_eval(img, x) - raise_eigenvalue(n, a1, A, q, convention, beta) * family_eval(tgt, x)
    out["raise"] = _sup(None, x, diff) / scale
    return out


def _lower(s):
    return apply_operator(lower_operator(s.n, s.a1, s.A), s, s.n - 1)


def _raise(s):
    return apply_operator(raise_operator(s.n, s.a1, s.A), s, s.n + 1)


def commutator_check(n: int, a1: float, A: float, q: float = 1.0) -> dict[str, float]:
    """Relative sup-norm residuals of the three su(1,1) relations on f_n.

    [Pi_-, Pi_+] = 2 Pi_0, [Pi_0, Pi_+] = Pi_+, [Pi_-, Pi_0] = Pi_-, each
    composed from the exact operator actions.
    """
    if n < 1:
        raise DomainError("commutator_check needs n >= 1")
    x = _grid(q)
    s = family_state(n, a1, A, q)
    ev = lambda f: family_eval(f, x)  # noqa: E731

    lhs = ev(_lower(_raise(s))) - ev(_raise(_lower(s)))
    rhs = 2 * ev(apply_weight(s))
    r1 = np.max(np.abs(lhs - rhs)) / np.max(np.abs(rhs))

    up = _raise(s)
    lhs = ev(apply_weight(up)) - ev(_raise(apply_weight(s)))
    r2 = np.max(np.abs(lhs - ev(up))) / np.max(np.abs(ev(up)))

    down = _lower(s)
    lhs = ev(_lower(apply_weight(s))) - ev(apply_weight(down))
    r3 = np.max(np.abs(lhs - ev(down))) / np.max(np.abs(ev(down)))
    return {"minus_plus": float(r1), "zero_plus": float(r2), "minus_zero": float(r3)}


def casimir_orderings(n: int, A: float) -> tuple[float, float]:
    """-pi_+(n) pi_-(n+1) + pi_0(pi_0+1) and -pi_-(n) pi_+(n-1) + pi_0(pi_0-1).

    The normalization ratios telescope, leaving (n+1)(n+1+A) and n(n+A).
    """
    if n < 0:
        raise DomainError("n must be nonnegative")
    p0 = weight_eigenvalue(n, A)
    return (-(n + 1) * (n + 1 + A) + p0 * (p0 + 1), -n * (n + A) + p0 * (p0 - 1))


def casimir_eigenvalue(n: int, A: float) -> float:
    """c(c-1) with c = (1+A)/2, evaluated through the first ordering at level n."""
    return casimir_orderings(n, A)[0]


def casimir_residual(n: int, a1: float, A: float, q: float = 1.0) -> float:
    """Relative sup-norm of (-Pi_- Pi_+ + Pi_0(Pi_0 + 1) - c(c-1)) f_n."""
    x = _grid(q)
    s = family_state(n, a1, A, q)
    c = (1 + A) / 2
    p0 = weight_eigenvalue(n, A)
    lhs = -family_eval(_lower(_raise(s)), x) + p0 * (p0 + 1) * family_eval(s, x)
    ref = family_eval(s, x)
    return float(np.max(np.abs(lhs - c * (c - 1) * ref)) / np.max(np.abs(ref)))
