"""Verification suites shared by the CLI and the demo notebooks.

Each suite returns report rows ``{check, params, residual, tolerance, pass}``.
Random draws use fixed seeds so reruns are byte-identical.
"""
from __future__ import annotations

import math

import numpy as np

from . import ladder as lad
from .oracle import RadialGrid, richardson, solve_radial
from .potential import ScaledParams
from .specfun import (
    JacobiPoly,
    gauss_2f1,
    gen_binomial,
    jacobi,
    jacobi_derivative,
    jacobi_eval,
    jacobi_identity_residuals,
    jacobi_sum,
    ln_gamma,
    unit_interval_quad,
)
from .spectrum import capital_A, num_bound_states, nu_intermediates, quantization_residual, spectrum
from .wavefunc import (
    closed_form_norm,
    normalize_family,
    orthogonality_residual,
    physical_state,
)

__all__ = [
    "row",
    "specfun_suite",
    "spectrum_suite",
    "wavefunction_suite",
    "ladder_suite",
    "algebra_suite",
    "oracle_rows",
    "all_pass",
]


def row(check: str, params: dict, residual: float, tolerance: float) -> dict:
    residual = float(residual)
    return {"check": check, "params": params, "residual": residual, "tolerance": float(tolerance),
            "pass": bool(residual <= tolerance)}


def all_pass(rows) -> bool:
    return all(r["pass"] for r in rows)


def _worst(check, params, values, tol):
    return row(check, params, max(values), tol)


def specfun_suite(seed: int = 20240601, draws: int = 1000) -> list[dict]:
    rng = np.random.default_rng(seed)
    rows = []

    rel = []
    for _ in range(draws // 5):
        n = int(rng.integers(0, 31))
        a, b = rng.uniform(-0.9, 10, 2)
        z = rng.uniform(-1, 1)
        r = float(jacobi_eval(JacobiPoly(n, a, b), z))
        s = jacobi_sum(n, a, b, z, exact=True)
        scale = max(1.0, abs(s))
        rel.append(abs(r - s) / scale)
    rows.append(_worst("jacobi_recurrence_vs_sum", {"draws": draws // 5, "seed": seed}, rel, 1e-12))

    worst = []
    for _ in range(draws):
        n = int(rng.integers(1, 21))
        a, b = rng.uniform(-0.9, 10, 2)
        z = rng.uniform(-0.99, 0.99)
        res = jacobi_identity_residuals(n, a, b, z)
        scale = 1 + abs(float(jacobi_eval(JacobiPoly(n, a, b), z)))
        res_scaled = [v / scale for v in res.values()]
        worst.append(max(res_scaled))
    rows.append(_worst("jacobi_identities", {"draws": draws, "seed": seed}, worst, 1e-10))

    # complex step: Im P(z + ih)/h carries no truncation or cancellation error
    dres = []
    for _ in range(200):
        n = int(rng.integers(0, 21))
        a, b = rng.uniform(-0.9, 5, 2)
        z = rng.uniform(-0.99, 0.99)
        p = JacobiPoly(n, a, b)
        cs = float(np.imag(jacobi(n, a, b, complex(z, 1e-30)))) / 1e-30
        d = float(jacobi_derivative(p, z))
        dres.append(abs(d - cs) / max(1.0, abs(cs)))
    rows.append(_worst("jacobi_derivative_vs_complex_step", {"draws": 200, "seed": seed}, dres, 1e-10))

    hres = []
    for _ in range(100):
        b = rng.uniform(0.2, 5)
        c = b + rng.uniform(0.2, 5)
        a = rng.uniform(-3, 3)
        z = rng.uniform(0, 0.95)
        series = gauss_2f1(a, b, c, z)
        integral = unit_interval_quad(lambda t, tm: t ** (b - 1) * tm ** (c - b - 1) * (1 - t * z) ** (-a),
                                      b - 1, c - b - 1)
        pref = math.exp(ln_gamma(c) - ln_gamma(b) - ln_gamma(c - b))
        hres.append(abs(series - pref * integral) / abs(series))
    rows.append(_worst("hyp2f1_series_vs_integral", {"draws": 100, "seed": seed}, hres, 1e-8))

    bres = [abs(gen_binomial(n, k) - math.comb(n, k)) for n in range(30) for k in range(n + 1)]
    rows.append(_worst("binomial_integer_exact", {"n_max": 29}, bres, 0.0))
    return rows


def spectrum_suite(sp: ScaledParams) -> list[dict]:
    p = {"v0": sp.v0, "v1": sp.v1, "q": sp.q}
    rows = []
    levels = spectrum(sp)
    for bs in levels:
        nu = nu_intermediates(sp, bs.eps, bs.n)
        rows.append(row("nu_lambda_equals_lambda_n", {**p, "n": bs.n},
                        abs(nu.lambda_ - nu.lambda_n) / (1 + abs(nu.lambda_)), 1e-10))
        rows.append(row("tau_slope_negative", {**p, "n": bs.n}, max(0.0, nu.tau_slope), 0.0))
        rows.append(row("quantization_residual", {**p, "n": bs.n}, abs(quantization_residual(sp, bs.n, bs.eps)), 1e-10))
    gaps = [levels[i].eps - levels[i + 1].eps for i in range(len(levels) - 1)]
    rows.append(row("levels_increasing", p, max([0.0] + [g for g in gaps if g >= 0]) if gaps else 0.0, 0.0))
    return rows


def wavefunction_suite(sp: ScaledParams, tol: float = 1e-10) -> list[dict]:
    p = {"v0": sp.v0, "v1": sp.v1, "q": sp.q}
    rows = []
    A = capital_A(sp)
    for bs in spectrum(sp):
        quad = normalize_family(bs.n, bs.a1, A, sp.q)
        closed = closed_form_norm(bs.n, bs.a1, A, sp.q)
        rows.append(row("closed_form_vs_quadrature_norm", {**p, "n": bs.n}, abs(closed / quad - 1), tol))
    full = sp.unit_q()
    states = [physical_state(full, n) for n in range(num_bound_states(full))]
    for i, a in enumerate(states):
        for b in states[i:]:
            r = orthogonality_residual(a, b)
            if a.n == b.n:
                rows.append(row("physical_norm_diagonal", {**p, "n": a.n}, abs(r - 1), tol))
            else:
                rows.append(row("physical_orthogonality", {**p, "n_a": a.n, "n_b": b.n}, r, 1e-8))
    return rows


def ladder_suite(a1: float, A: float, q: float, nmax: int = 8, tol: float = 1e-8) -> list[dict]:
    p = {"a1": a1, "A": A, "q": q}
    rows = [row("lower_annihilates_ground", p, lad.ladder_residuals(0, a1, A, q)["lower"], 1e-12)]
    for n in range(0, nmax + 1):
        res = lad.ladder_residuals(n, a1, A, q)
        if n >= 1:
            rows.append(row("lower_proportionality", {**p, "n": n}, res["lower"], tol))
        rows.append(row("raise_proportionality", {**p, "n": n}, res["raise"], tol))
    return rows


def algebra_suite(a1: float, A: float, q: float, nmax: int = 8, tol: float = 1e-10) -> list[dict]:
    p = {"a1": a1, "A": A, "q": q}
    rows = []
    for n in range(1, nmax + 1):
        for name, r in lad.commutator_check(n, a1, A, q).items():
            rows.append(row(f"commutator_{name}", {**p, "n": n}, r, tol))
        rows.append(row("eigenvalue_identity", {**p, "n": n},
                        abs((n + 1) * (n + 1 + A) - n * (n + A) - (2 * n + 1 + A)), 1e-12 * (1 + n * n)))
        rows.append(row("casimir_function_space", {**p, "n": n}, lad.casimir_residual(n, a1, A, q), tol))
    c = (1 + A) / 2
    c0 = c * (c - 1)
    devs = []
    for n in range(0, 51):
        first, second = lad.casimir_orderings(n, A)
        devs.append(max(abs(first - c0), abs(second - c0)))
    rows.append(_worst("casimir_constant", {"A": A, "n_max": 50}, devs, 1e-12 * max(1.0, 51 * 51)))
    return rows


def oracle_rows(sp: ScaledParams, grid: RadialGrid, tol: float = 5e-4) -> list[dict]:
    """Analytic levels against Richardson-extrapolated finite differences."""
    levels = spectrum(sp)
    if not levels:
        return []
    extrap = richardson(sp, grid, len(levels))
    gdesc = {"r_min": grid.r_min, "r_max": grid.r_max, "npoints": grid.npoints}
    out = []
    for bs, e in zip(levels, extrap):
        err = abs(float(e) - bs.eps)
        out.append({"n": bs.n, "eps_analytic": bs.eps, "eps_oracle": float(e), "abs_err": err,
                    "grid": gdesc, "tolerance": tol, "pass": bool(err <= tol)})
    return out


def oracle_count_row(sp: ScaledParams, grid: RadialGrid) -> dict:
    nb = num_bound_states(sp)
    spec = solve_radial(sp, grid, min(grid.npoints, nb + 2))
    below = int(np.sum(spec.eigenvalues < 0))
    return row("oracle_bound_count", {"v0": sp.v0, "v1": sp.v1, "q": sp.q}, abs(below - nb), 0)
