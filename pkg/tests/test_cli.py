import csv
import json

import pytest

from twoterm.cli import ConfigError, load_config, parse_config, run

MINIMAL = "potential.v0 = 4\npotential.v1 = 2\npotential.q = 1\n"


@pytest.fixture
def cfg(tmp_path):
    p = tmp_path / "run.cfg"
    p.write_text(MINIMAL)
    return p


def test_defaults(cfg):
    c = load_config(cfg)
    assert c.levels == "all"
    assert c.r_max_beta == 40.0
    assert c.npoints == 4000
    assert c.tolerances == {"quadrature": 1e-10, "ladder": 1e-8, "algebra": 1e-10, "oracle": 5e-4}
    assert c.kind == "dimensionless"


def test_conflicting_parameterizations():
    with pytest.raises(ConfigError, match="exactly one"):
        parse_config(MINIMAL + "potential.V0 = 1\n")


@pytest.mark.parametrize("text,msg", [
    (MINIMAL + "grid.bogus = 3\n", "line 4: unknown key"),
    (MINIMAL + "levels\n", "line 4: expected"),
    (MINIMAL + "potential.v0 = 5\n", "duplicate"),
    (MINIMAL + "grid.npoints = many\n", "line 4"),
    ("potential.v0 = 4\npotential.q = 1\n", "missing"),
])
def test_parse_errors(text, msg):
    with pytest.raises(ConfigError, match=msg):
        parse_config(text)


def test_comments_and_physical_units():
    c = parse_config("# header\npotential.V0 = 2  # depth\npotential.V1 = 1\npotential.beta = 1\n"
                     "potential.q = 1\npotential.mu = 1\n")
    assert c.kind == "physical"
    assert (c.scaled().v0, c.scaled().v1) == (4.0, 2.0)


def test_spectrum_command(cfg, tmp_path):
    out = tmp_path / "out"
    assert run(["spectrum", str(cfg), "--out", str(out)]) == 0
    rows = list(csv.DictReader((out / "spectrum.csv").open()))
    assert list(rows[0]) == ["n", "Lambda", "a1", "eps", "E"]
    assert len(rows) == 1
    assert int(rows[0]["n"]) == 0 and float(rows[0]["eps"]) == -0.25


def test_wavefunction_command(cfg, tmp_path):
    out = tmp_path / "out"
    assert run(["wavefunction", str(cfg), "--out", str(out)]) == 0
    with (out / "wavefunction.csv").open() as fh:
        header = next(csv.reader(fh))
    assert header == ["r", "x", "R_0"]


def test_algebra_check_defaults(cfg, tmp_path):
    out = tmp_path / "out"
    assert run(["algebra-check", str(cfg), "--out", str(out)]) == 0
    report = json.loads((out / "algebra_report.json").read_text())
    assert report and all(r["pass"] for r in report)
    assert all(set(r) == {"check", "params", "residual", "tolerance", "pass"} for r in report)
    assert max(r["residual"] for r in report if r["check"].startswith(("commutator", "casimir"))) <= 1e-10


def test_ladder_and_oracle_commands(cfg, tmp_path):
    out = tmp_path / "out"
    assert run(["ladder-check", str(cfg), "--out", str(out)]) == 0
    assert run(["oracle-compare", str(cfg), "--out", str(out)]) == 0
    rows = json.loads((out / "oracle_report.json").read_text())
    assert rows[0]["abs_err"] < 5e-4


def test_failed_verification_exit_code(tmp_path):
    p = tmp_path / "tight.cfg"
    p.write_text(MINIMAL + "grid.npoints = 50\ntolerances.oracle = 1e-12\n")
    assert run(["oracle-compare", str(p), "--out", str(tmp_path / "o")]) == 1


def test_bad_q_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.cfg"
    p.write_text("potential.v0 = 4\npotential.v1 = 2\npotential.q = 1.5\n")
    assert run(["spectrum", str(p), "--out", str(tmp_path / "o")]) == 2
    assert "q must lie in (0,1]" in capsys.readouterr().err


def test_missing_file_exit_2(tmp_path):
    assert run(["spectrum", str(tmp_path / "nope.cfg")]) == 2


def test_unknown_subcommand_exit_2(cfg):
    assert run(["frobnicate", str(cfg)]) == 2


def test_too_many_levels_exit_2(tmp_path):
    p = tmp_path / "lv.cfg"
    p.write_text(MINIMAL + "levels = 3\n")
    assert run(["spectrum", str(p), "--out", str(tmp_path / "o")]) == 2


def test_output_directory_from_config(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    p = tmp_path / "c.cfg"
    p.write_text(MINIMAL + "output.directory = results\noutput.formats = json\n")
    assert run(["spectrum", str(p)]) == 0
    assert (tmp_path / "results" / "spectrum.json").exists()
    assert not (tmp_path / "results" / "spectrum.csv").exists()
