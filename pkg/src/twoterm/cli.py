"""Command-line front end.

    twoterm SUBCOMMAND CONFIG [--out DIR]

Subcommands: spectrum, wavefunction, ladder-check, algebra-check,
oracle-compare, all. Exit status is 0 when every check passes, 1 when a
verification fails and 2 on configuration or domain errors.

The config file is flat ``key = value`` text with ``#`` comments, e.g.::

    potential.v0 = 4
    potential.v1 = 2
    potential.q = 1
    levels = all
    grid.r_max_beta = 40
    grid.npoints = 4000
"""
from __future__ import annotations

import argparse
import csv
import io
import logging
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import verify
from .errors import DomainError
from .oracle import RadialGrid
from .potential import PotentialParams, ScaledParams, energy_scale, from_molecular, scale
from .spectrum import energy_level, num_bound_states
from .wavefunc import eval_r, physical_state

__all__ = ["RunConfig", "ConfigError", "load_config", "parse_config", "run", "main"]

log = logging.getLogger("twoterm")

SUBCOMMANDS = ("spectrum", "wavefunction", "ladder-check", "algebra-check", "oracle-compare", "all")

_DIMENSIONLESS = {"v0", "v1"}
_PHYSICAL = {"V0", "V1", "beta"}
_MOLECULAR = {"D0", "r0", "alpha_shape"}
_SHARED = {"q", "mu", "hbar"}

_KEYS = (
    {f"potential.{k}" for k in _DIMENSIONLESS | _PHYSICAL | _MOLECULAR | _SHARED}
    | {"levels", "grid.r_max_beta", "grid.npoints"}
    | {f"tolerances.{k}" for k in ("quadrature", "ladder", "algebra", "oracle")}
    | {"output.directory", "output.formats"}
    | {f"family.{k}" for k in ("a1", "A", "q", "nmax")}
)


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    potential: dict
    levels: int | str = "all"
    r_max_beta: float = 40.0
    npoints: int = 4000
    tolerances: dict = field(default_factory=lambda: {"quadrature": 1e-10, "ladder": 1e-8,
                                                      "algebra": 1e-10, "oracle": 5e-4})
    directory: str = "twoterm-out"
    formats: tuple = ("csv", "json")
    family: dict = field(default_factory=dict)

    @property
    def kind(self) -> str:
        keys = set(self.potential)
        if keys & _DIMENSIONLESS:
            return "dimensionless"
        if keys & _PHYSICAL:
            return "physical"
        return "molecular"

    def physical(self) -> PotentialParams | None:
        p = self.potential
        mu, hbar = p.get("mu", 1.0), p.get("hbar", 1.0)
        if self.kind == "physical":
            return PotentialParams(p["V0"], p["V1"], p["beta"], p["q"], mu, hbar)
        if self.kind == "molecular":
            return from_molecular(p["D0"], p["r0"], p["alpha_shape"], p["q"], mu, hbar)
        return None

    def scaled(self) -> ScaledParams:
        phys = self.physical()
        if phys is None:
            return ScaledParams(self.potential["v0"], self.potential["v1"], self.potential["q"])
        return scale(phys)

    @property
    def beta(self) -> float:
        phys = self.physical()
        return 1.0 if phys is None else phys.beta

    @property
    def energy_unit(self) -> float:
        phys = self.physical()
        return 1.0 if phys is None else energy_scale(phys)


def _number(key, text, lineno):
    try:
        return float(text)
    except ValueError:
        raise ConfigError(f"line {lineno}: {key} expects a number, got {text!r}") from None


def parse_config(text: str) -> RunConfig:
    raw = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in _KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in raw:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        raw[key] = (value, lineno)

    pot = {k.split(".", 1)[1]: _number(k, v, n) for k, (v, n) in raw.items() if k.startswith("potential.")}
    groups = [g for g in (_DIMENSIONLESS, _PHYSICAL, _MOLECULAR) if set(pot) & g]
    if len(groups) != 1:
        raise ConfigError("exactly one potential parameterization (v0/v1, V0/V1/beta or D0/r0/alpha_shape) is required")
    missing = (groups[0] | {"q"}) - set(pot)
    if missing:
        raise ConfigError(f"missing potential keys: {', '.join(sorted(missing))}")
    if groups[0] is _DIMENSIONLESS and set(pot) & {"mu", "hbar"}:
        raise ConfigError("mu/hbar only apply to physical or molecular parameters")

    cfg = RunConfig(potential=pot)
    if "levels" in raw:
        v, n = raw["levels"]
        if v == "all":
            cfg.levels = "all"
        else:
            lv = _number("levels", v, n)
            if lv < 0 or lv != int(lv):
                raise ConfigError(f"line {n}: levels must be 'all' or a nonnegative integer")
            cfg.levels = int(lv)
    if "grid.r_max_beta" in raw:
        cfg.r_max_beta = _number("grid.r_max_beta", *raw["grid.r_max_beta"])
        if cfg.r_max_beta <= 0:
            raise ConfigError("grid.r_max_beta must be positive")
    if "grid.npoints" in raw:
        v = _number("grid.npoints", *raw["grid.npoints"])
        if v < 3 or v != int(v):
            raise ConfigError("grid.npoints must be an integer >= 3")
        cfg.npoints = int(v)
    for k, (v, n) in raw.items():
        if k.startswith("tolerances."):
            t = _number(k, v, n)
            if not t > 0:
                raise ConfigError(f"line {n}: tolerances must be positive")
            cfg.tolerances[k.split(".", 1)[1]] = t
        elif k.startswith("family."):
            cfg.family[k.split(".", 1)[1]] = _number(k, v, n)
    if "output.directory" in raw:
        cfg.directory = raw["output.directory"][0]
    if "output.formats" in raw:
        v, n = raw["output.formats"]
        fmts = tuple(f.strip() for f in v.split(",") if f.strip())
        if not fmts or set(fmts) - {"csv", "json"}:
            raise ConfigError(f"line {n}: output.formats must be a subset of csv,json")
        cfg.formats = fmts
    return cfg


def load_config(path) -> RunConfig:
    return parse_config(Path(path).read_text(encoding="utf-8"))


# -- deterministic serialization ---------------------------------------------

def _fmt(x) -> str:
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    x = float(x)
    if not math.isfinite(x):
        return "null"
    return format(x, ".17g")


def _json(obj, indent=0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f'{pad}  "{k}": {_json(v, indent + 1)}' for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [pad + "  " + _json(v, indent + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    if isinstance(obj, str):
        return '"' + obj.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if obj is None:
        return "null"
    return _fmt(obj)


def _write_json(path: Path, obj) -> None:
    path.write_text(_json(obj) + "\n", encoding="utf-8")


def _write_csv(path: Path, header, rows) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\r\n")
    w.writerow(header)
    for r in rows:
        w.writerow([v if isinstance(v, str) else _fmt(v) for v in r])
    path.write_text(buf.getvalue(), encoding="utf-8")


# -- subcommands -------------------------------------------------------------

def _levels(cfg: RunConfig, sp: ScaledParams) -> list[int]:
    nb = num_bound_states(sp)
    if cfg.levels == "all":
        return list(range(nb))
    if cfg.levels > nb:
        raise DomainError(f"requested {cfg.levels} levels but only {nb} are bound")
    return list(range(cfg.levels))


def _family(cfg: RunConfig, sp: ScaledParams):
    f = cfg.family
    if {"a1", "A"} <= set(f):
        a1, A = f["a1"], f["A"]
    elif num_bound_states(sp) > 0:
        bs = energy_level(sp, 0)
        a1, A = bs.a1, bs.A
    else:
        a1, A = 0.5, 3.0
    return a1, A, f.get("q", 1.0), int(f.get("nmax", 8))


def _cmd_spectrum(cfg, out):
    sp = cfg.scaled()
    rows = [energy_level(sp, n, cfg.energy_unit) for n in _levels(cfg, sp)]
    if "csv" in cfg.formats:
        _write_csv(out / "spectrum.csv", ["n", "Lambda", "a1", "eps", "E"],
                   [[b.n, b.Lambda, b.a1, b.eps, b.E] for b in rows])
    if "json" in cfg.formats:
        _write_json(out / "spectrum.json", [{"n": b.n, "Lambda": b.Lambda, "a1": b.a1, "eps": b.eps, "E": b.E}
                                            for b in rows])
    return []


def _cmd_wavefunction(cfg, out):
    sp = cfg.scaled()
    beta = cfg.beta
    levels = _levels(cfg, sp)
    states = [physical_state(sp, n, beta) for n in levels]
    rb = np.linspace(0.0, cfg.r_max_beta, cfg.npoints + 2)[1:-1]
    r = rb / beta
    x = sp.q * np.exp(-rb)
    cols = [eval_r(s, beta, r) for s in states]
    if "csv" in cfg.formats:
        _write_csv(out / "wavefunction.csv", ["r", "x"] + [f"R_{n}" for n in levels],
                   [[r[i], x[i]] + [c[i] for c in cols] for i in range(r.size)])
    report = verify.wavefunction_suite(sp, cfg.tolerances["quadrature"])
    if "json" in cfg.formats:
        _write_json(out / "wavefunction_report.json", report)
    return report


def _cmd_ladder(cfg, out):
    a1, A, q, nmax = _family(cfg, cfg.scaled())
    report = verify.ladder_suite(a1, A, q, nmax, cfg.tolerances["ladder"])
    if "json" in cfg.formats:
        _write_json(out / "ladder_report.json", report)
    return report


def _cmd_algebra(cfg, out):
    a1, A, q, nmax = _family(cfg, cfg.scaled())
    report = verify.algebra_suite(a1, A, q, nmax, cfg.tolerances["algebra"])
    if "json" in cfg.formats:
        _write_json(out / "algebra_report.json", report)
    return report


def _cmd_oracle(cfg, out):
    sp = cfg.scaled()
    grid = RadialGrid(0.0, cfg.r_max_beta, cfg.npoints)
    rows = verify.oracle_rows(sp, grid, cfg.tolerances["oracle"])
    n_keep = len(_levels(cfg, sp))
    rows = rows[:n_keep]
    if "json" in cfg.formats:
        _write_json(out / "oracle_report.json", rows)
    if "csv" in cfg.formats:
        _write_csv(out / "oracle.csv", ["n", "eps_analytic", "eps_oracle", "abs_err"],
                   [[r["n"], r["eps_analytic"], r["eps_oracle"], r["abs_err"]] for r in rows])
    return rows


def _cmd_all(cfg, out):
    sp = cfg.scaled()
    report = []
    report += verify.specfun_suite()
    report += verify.spectrum_suite(sp)
    report += _cmd_spectrum(cfg, out)
    report += _cmd_wavefunction(cfg, out)
    report += _cmd_ladder(cfg, out)
    report += _cmd_algebra(cfg, out)
    for r in _cmd_oracle(cfg, out):
        report.append(verify.row("oracle_agreement", {"n": r["n"]}, r["abs_err"], r["tolerance"]))
    if "json" in cfg.formats:
        _write_json(out / "verification_report.json", report)
    return report


_COMMANDS = {
    "spectrum": _cmd_spectrum,
    "wavefunction": _cmd_wavefunction,
    "ladder-check": _cmd_ladder,
    "algebra-check": _cmd_algebra,
    "oracle-compare": _cmd_oracle,
    "all": _cmd_all,
}


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twoterm", description=__doc__.split("\n\n")[0])
    p.add_argument("command", choices=SUBCOMMANDS)
    p.add_argument("config", help="flat key = value config file")
    p.add_argument("--out", help="output directory (overrides output.directory)")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def run(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        cfg = load_config(args.config)
        out = Path(args.out or cfg.directory)
        out.mkdir(parents=True, exist_ok=True)
        report = _COMMANDS[args.command](cfg, out)
    except (ConfigError, DomainError, OSError) as e:
        print(f"twoterm: error: {e}", file=sys.stderr)
        return 2
    failed = [r for r in report if not r["pass"]]
    for r in failed:
        print(f"FAIL {r.get('check', 'oracle')} {r.get('params', r.get('n'))}: "
              f"residual {r.get('residual', r.get('abs_err')):.3e} > {r['tolerance']:.1e}", file=sys.stderr)
    log.info("%s: %d checks, %d failed", args.command, len(report), len(failed))
    return 1 if failed else 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
