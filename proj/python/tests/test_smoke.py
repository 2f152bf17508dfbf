import json
import math
import os
import subprocess

import pytest

import apfc

TINY_CONFIG = """
grid.box_a0 = 12
grid.cells_per_a0 = 4
inclusion.radius_a0 = 3
inclusion.width_a0 = 1
inclusion.eigenstrain = 0.01
solver.dt = 0.5
solver.tol = 1e-5
solver.max_steps = 2000
"""


def test_version():
    assert apfc.__version__ == "1.0.0"
    assert apfc.stress_normalization == 2.0


def test_equilibrium_amplitude():
    phi = apfc.equilibrium_amplitude()
    assert phi == pytest.approx(0.14472135954999578, rel=1e-12)
    assert apfc.equilibrium_amplitude(branch="minus") == pytest.approx(
        0.05527864045000421, rel=1e-12
    )


def test_phase_thresholds():
    solid, coex = apfc.phase_thresholds()
    assert solid == pytest.approx(0.05, rel=1e-12)
    assert coex == pytest.approx(2.0 / 45.0, rel=1e-12)


def test_lame_constants():
    phi = apfc.equilibrium_amplitude()
    el = apfc.lame_constants(phi)
    assert el.lambda_ == pytest.approx(3.0 * phi * phi, rel=1e-12)
    assert el.mu == el.lambda_
    assert el.nu == pytest.approx(0.25)


def test_mode_set_geometry():
    ms = apfc.triangular_mode_set(1.0)
    assert ms.a0 == pytest.approx(4.0 * math.pi / math.sqrt(3.0), rel=1e-12)
    sx = sum(q[0] for q in ms.modes)
    sy = sum(q[1] for q in ms.modes)
    assert abs(sx) < 1e-14 and abs(sy) < 1e-14


def test_beta_field_numpy():
    ms = apfc.triangular_mode_set(1.0)
    g = apfc.Grid2D(32, 32, 8 * ms.a0, 8 * ms.a0)
    inc = apfc.InclusionSpec()
    inc.center = [4 * ms.a0, 4 * ms.a0]
    inc.radius = 2 * ms.a0
    inc.width = ms.a0
    inc.eigenstrain = 0.01
    beta = apfc.beta_field(g, inc)
    assert beta.shape == (32, 32)
    assert beta[16, 16] == pytest.approx(1.0 + (1.0 / 1.01 - 1.0) * apfc.chi_w(-inc.radius, inc.width))
    assert beta.min() >= 1.0 / 1.01 - 1e-12 and beta.max() <= 1.0 + 1e-12


def test_eshelby_oracle():
    prob = apfc.EshelbyProblem()
    prob.radius = 1.0
    prob.eigenstrain = 0.01
    prob.elastic = apfc.lame_constants(apfc.equilibrium_amplitude())
    sxx, sxy, syy = apfc.eshelby_stress(prob, (0.0, 0.0))
    assert syy == pytest.approx(-8.377709e-4, rel=1e-5)
    assert sxx == pytest.approx(syy) and sxy == pytest.approx(0.0, abs=1e-18)
    for pt in [(0.3, 0.1), (1.7, -0.4), (0.0, 2.5)]:
        ref = apfc.lame_circular_reference(prob, pt)
        got = apfc.eshelby_stress(prob, pt)
        assert got == pytest.approx(ref, rel=1e-10, abs=1e-18)


def test_simulate_and_load(tmp_path):
    out = tmp_path / "run"
    rep = apfc.simulate(TINY_CONFIG, out_dir=str(out))
    assert rep["converged"]
    assert rep["steps"] > 0
    assert rep["interior_plateau"] < 0.0
    assert rep["divsigma_rel_l2_bulk"] < 0.05
    name, syy = apfc.load_field(str(out / "sigma_yy.apfc"))
    assert name == "sigma_yy"
    assert syy.shape == (48, 48)
    name, eta = apfc.load_field(str(out / "eta1.apfc"))
    assert eta.dtype.kind == "c"
    with open(out / "report.json") as fh:
        disk = json.load(fh)
    assert disk["steps"] == rep["steps"]


def test_cli_roundtrip(tmp_path):
    cli = os.environ.get("APFC_CLI")
    if not cli:
        pytest.skip("APFC_CLI not set")
    cfg = tmp_path / "tiny.cfg"
    cfg.write_text(TINY_CONFIG)
    out = tmp_path / "cli_run"
    r = subprocess.run([cli, "simulate", str(cfg), "--out", str(out), "--quiet"])
    assert r.returncode == 0
    assert (out / "report.json").exists()

    oracle_out = tmp_path / "oracle"
    r = subprocess.run([cli, "oracle", str(cfg), "--out", str(oracle_out), "--quiet"])
    assert r.returncode == 0

    r = subprocess.run(
        [cli, "compare", str(out / "sigma_yy.apfc"), str(oracle_out / "sigma_yy_analytic.apfc")],
        capture_output=True,
        text=True,
    )
    assert r.returncode == 0
    assert "rel_l2=" in r.stdout

    r = subprocess.run(
        [cli, "compare", str(out / "sigma_yy.apfc"), str(out / "eta1.apfc")],
        capture_output=True,
        text=True,
    )
    assert r.returncode == 2  # scalar vs complex dump kinds
