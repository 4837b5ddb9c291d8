"""Smoke tests for the akrpy extension module and the akr_cli binary."""

import math
import os
import subprocess

import pytest

import akrpy

CLI = os.environ.get("AKR_CLI", "akr_cli")


def run_cli(*args, **kwargs):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kwargs)


# --- module ------------------------------------------------------------------


def test_corpus_and_nodes():
    ids = [f.id for f in akrpy.builtin_corpus()]
    assert "e2" in ids and "exp" in ids
    nodes = akrpy.akr_nodes(2, 2)
    assert nodes == [0.0, 0.0, 1.0]
    nodes = akrpy.akr_nodes(3, 2)
    assert nodes[2] == pytest.approx(1.0 / math.sqrt(3), abs=1e-15)


def test_apply_and_reproduction():
    e2 = akrpy.monomial(2)
    form = akrpy.apply_akr(e2, 10, 2)
    assert form.degree == 10
    for x in (0.0, 0.3, 0.77, 1.0):
        assert form(x) == pytest.approx(x * x, abs=1e-13)
    assert akrpy.apply_akr_at(e2, 10, 2, 0.3) == pytest.approx(0.09, abs=1e-13)


def test_python_callable_handle():
    f = akrpy.FunctionHandle(
        "pyquad",
        lambda x: 1.0 + x * x,
        lambda x: 2.0 * x,
        lambda x: 2.0,
        "Analytic",
    )
    assert akrpy.akr_error_at(f, 40, 2, 0.5) == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(ValueError):
        akrpy.FunctionHandle("bad", lambda x: x * x, lambda x: 3.0 * x)


def test_moduli_and_bounds():
    grid = akrpy.GridSpec.uniform(500)
    e1 = akrpy.corpus_function("e1")
    assert akrpy.omega1(e1, 0.1, grid).value == pytest.approx(0.1, abs=1e-12)
    rep = akrpy.verify_bound("PROP_2_1", akrpy.corpus_function("exp"), 32, 2, grid)
    assert rep.holds and rep.min_margin > 0.0
    assert 1.0898 < akrpy.sikkema_constant() < 1.0899


def test_iterates_and_voronovskaya():
    e1 = akrpy.monomial(1)
    lim = akrpy.iterate_limit(e1, 2)
    it = akrpy.iterate_akr(e1, 6, 2, 200)
    assert max(abs(it(i / 100) - lim(i / 100)) for i in range(101)) <= 1e-8
    tr = akrpy.voronovskaya_trace(e1, 2, 0.5, [256, 512, 1024])
    assert tr.extrapolated == pytest.approx(-0.25, rel=0.02)


# --- CLI ---------------------------------------------------------------------


def test_cli_nodes():
    r = run_cli("nodes", "--n", "2", "--j", "2")
    assert r.returncode == 0
    assert r.stdout.splitlines() == ["k,t", "0,0", "1,0", "2,1"]


def test_cli_nodes_out_of_scope():
    r = run_cli("nodes", "--n", "3", "--j", "5")
    assert r.returncode == 2
    assert "require n >= j" in r.stderr


def test_cli_eval():
    r = run_cli("eval", "--f", "e2", "--n", "10", "--j", "2", "--x", "0.3")
    assert r.returncode == 0
    header, row = r.stdout.splitlines()
    assert header == "x,f,akr,bernstein,king,tau"
    cols = row.split(",")
    assert float(cols[2]) == pytest.approx(0.09, abs=1e-13)


def test_cli_figure1():
    r = run_cli("figure1")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert lines[0] == "x,d5,d10"
    assert len(lines) == 502
    first, last = lines[1].split(","), lines[-1].split(",")
    assert float(first[1]) == 0.0 and float(first[2]) == 0.0
    assert float(last[1]) == 0.0 and float(last[2]) == 0.0


def test_cli_bounds_sweep_and_determinism(tmp_path):
    args = (
        "bounds",
        "--f", "exp", "--f", "e2",
        "--n", "8", "--n", "16",
        "--j", "1", "--j", "2",
        "--bound", "PROP_2_1", "--bound", "PROP_2_2_B",
        "--grid", "200",
    )
    r1 = run_cli(*args)
    r2 = run_cli(*args)
    assert r1.returncode == 0
    assert r1.stdout == r2.stdout  # byte-identical
    assert r1.stdout.startswith("bound_id,f_id,n,j,max_lhs,min_margin,witness_x,holds\n")

    cfg = tmp_path / "sweep.json"
    cfg.write_text(
        '{"functions": ["e1"], "n_list": [8], "j_list": [2],'
        ' "bounds": ["PROP_2_1"], "grid": 200}'
    )
    r3 = run_cli("bounds", "--config", str(cfg))
    assert r3.returncode == 0
    assert "PROP_2_1,e1,8,2," in r3.stdout


def test_cli_bounds_malformed_config(tmp_path):
    cfg = tmp_path / "bad.json"
    cfg.write_text("{not json")
    r = run_cli("bounds", "--config", str(cfg))
    assert r.returncode == 2


def test_cli_iterates():
    r = run_cli("iterates", "--f", "e1", "--n", "6", "--j", "2", "--m", "200")
    assert r.returncode == 0
    lines = r.stdout.splitlines()
    assert lines[0] == "m,sup_distance_to_limit"
    assert float(lines[-1].split(",")[1]) <= 1e-8
