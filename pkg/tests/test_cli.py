# tests/test_cli.py
import io
import json

import pandas as pd
import pytest
from typer.testing import CliRunner

import main
from ampleness import closed_forms
from config.settings import Settings, load_settings

runner = CliRunner()

RECORD_KEYS = {"case", "params", "cycle", "primed", "ind", "dim_cycle", "codim", "ampleness",
               "concavity_degree", "method", "extremal_count", "witness"}


def run(*args):
    return runner.invoke(main.app, ["--log-level", "error", *args])


def run_json(*args):
    result = run(*args, "--format", "json")
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


@pytest.fixture
def small_verify(monkeypatch):
    monkeypatch.setenv("PERIOD_RANDOM_DRAWS", "10")


# ---------- ampleness ----------
def test_ampleness_su():
    data = run_json("ampleness", "su", "--p", "3", "--q", "4", "--cycle", "2,3,5")
    assert set(data) == RECORD_KEYS
    assert data["ind"] == 2
    assert data["case"] == "su"
    assert data["params"] == {"p": 3, "q": 4}
    assert data["cycle"] == [2, 3, 5]
    assert data["method"] == "engine"


def test_ampleness_so_odd_odd():
    data = run_json("ampleness", "so-odd-odd", "--p", "3", "--q", "4", "--cycle", "2,5,6")
    assert data["ind"] == 6
    assert data["extremal_count"] == 24
    assert data["concavity_degree"] == data["codim"] + data["ampleness"] + 1


def test_ampleness_sl_quat():
    data = run_json("ampleness", "sl-quat", "--m", "3")
    assert (data["ind"], data["ampleness"]) == (3, 6)


def test_ampleness_so_2_1_is_a_point():
    data = run_json("ampleness", "so-even-odd", "--p", "1", "--q", "0", "--cycle", "1", "--method", "both")
    assert (data["ind"], data["dim_cycle"], data["ampleness"]) == (0, 0, 0)
    assert data["witness"] is None


def test_ampleness_closed_and_both():
    closed = run_json("ampleness", "su", "--p", "3", "--q", "4", "--cycle", "2,3,5", "--method", "closed")
    assert closed["ind"] == 2
    assert closed["method"] == "closed"
    assert closed["extremal_count"] is None
    both = run_json("ampleness", "so-even-odd", "--p", "2", "--q", "3", "--cycle", "1,-3", "--method", "both")
    assert both["ind"] == 2
    assert both["cycle"] == [1, -3]
    assert both["method"] == "both"


def test_ampleness_table_output():
    result = run("ampleness", "su", "--p", "3", "--q", "4", "--cycle", "2,3,5")
    assert result.exit_code == 0
    assert "su(3,4)" in result.stdout


def test_method_both_mismatch_exits_3(monkeypatch):
    monkeypatch.setattr(main, "theorem1_eval", lambda case, cycle: 99)
    result = run("ampleness", "su", "--p", "3", "--q", "4", "--cycle", "2,3,5", "--method", "both")
    assert result.exit_code == 3


@pytest.mark.parametrize("args", [
    ["ampleness", "su", "--p", "3", "--q", "4", "--cycle", "1,2"],
    ["ampleness", "su", "--p", "3"],
    ["ampleness", "so-even-even", "--p", "1", "--q", "0", "--cycle", "1"],
    ["ampleness", "so-odd", "--p", "1", "--q", "1"],
    ["ampleness", "su", "--p", "3", "--q", "4", "--cycle", "2;3"],
    ["ampleness", "su", "--p", "x"],
    ["period", "--weight", "2", "--hodge", "2,0"],
    ["hook", "--p", "3", "--q", "4", "--j", "1,1,2"],
])
def test_invalid_input_exits_2(args):
    assert run(*args).exit_code == 2


# ---------- enumerate ----------
def test_enumerate_sp_real():
    rows = run_json("enumerate", "sp-real", "--r", "3")
    assert len(rows) == 8
    assert [row["ind"] for row in rows] == [0, 1, 1, 1, 1, 1, 1, 0]


def test_enumerate_su_and_sl_real():
    assert [row["ind"] for row in run_json("enumerate", "su", "--p", "1", "--q", "3")] == [0, 1, 1, 0]
    rows = run_json("enumerate", "sl-real", "--m", "8")
    assert [row["ind"] for row in rows] == [3, 3]


def test_enumerate_csv_matches_json():
    rows = run_json("enumerate", "su", "--p", "2", "--q", "2")
    result = run("enumerate", "su", "--p", "2", "--q", "2", "--format", "csv")
    assert result.exit_code == 0
    frame = pd.read_csv(io.StringIO(result.stdout))
    assert list(frame.columns) == list(rows[0])
    assert frame["ind"].tolist() == [row["ind"] for row in rows]
    assert [json.loads(c) for c in frame["cycle"]] == [row["cycle"] for row in rows]


def test_enumerate_summary_json():
    data = run_json("enumerate", "su", "--p", "1", "--q", "3", "--summary")
    assert len(data["records"]) == 4
    assert data["summary"]["min_ind"] == 0
    assert data["summary"]["max_ind"] == 1
    assert data["summary"]["pseudoconvex"] == 2


# ---------- period ----------
@pytest.mark.parametrize("weight,hodge,expected", [
    ("2", "1,20", 0), ("3", "1,101", 1), ("4", "1,2,3", 2),
    ("2", "1,1", 0), ("2", "1,2", 0), ("2", "2,2", 1), ("2", "3,2", 2),
])
def test_period(weight, hodge, expected):
    data = run_json("period", "--weight", weight, "--hodge", hodge)
    assert data["ind"] == data["theorem2"] == expected
    assert data["cycle_dim_gq"] is None


def test_period_with_dim():
    data = run_json("period", "--weight", "5", "--hodge", "1,1,0", "--dim")
    assert data["group"] == "sp(2,ℝ)"
    assert data["marked"] == [1, 2]
    assert data["cycle_dim_gq"] == 1


# ---------- hook ----------
def test_hook_json():
    data = run_json("hook", "--p", "3", "--q", "4", "--j", "2,5,6")
    assert (data["h_plus"], data["h_minus"]) == (4, 4)
    assert (data["i_plus"], data["i_minus"]) == (6, 6)
    diagram = data["diagram"].splitlines()
    assert len(diagram) == 5
    assert data["diagram"].count("*") == 5


def test_hook_table_prints_diagram():
    result = run("hook", "--p", "3", "--q", "4", "--j", "2,5,6")
    assert result.exit_code == 0
    assert "7 | " in result.stdout


# ---------- verify ----------
def test_verify_small_rank(small_verify):
    data = run_json("verify", "--max-rank", "2", "--parallel", "1", "--quiet")
    assert data["ok"] is True
    assert data["max_rank"] == 2
    names = [s["name"] for s in data["sweeps"]]
    assert names == ["closed-forms", "index-oracle", "young-hooks", "isomorphisms", "period-domains"]


def test_verify_reads_max_rank_from_environment(monkeypatch, small_verify):
    monkeypatch.setenv("FLAGCAV_MAX_RANK", "3")
    data = run_json("verify", "--parallel", "1", "--quiet")
    assert data["max_rank"] == 3
    assert data["discrepancies"] == []


def test_verify_exits_3_on_discrepancy(monkeypatch, small_verify):
    monkeypatch.setattr(closed_forms, "theorem1_eval", lambda case, cycle: -1)
    result = run("verify", "--max-rank", "2", "--parallel", "1", "--quiet")
    assert result.exit_code == 3


# ---------- settings ----------
def test_settings_fields_are_all_read():
    assert set(Settings.model_fields) == {"FLAGCAV_MAX_RANK", "FLAGCAV_PARALLEL", "PERIOD_RANDOM_DRAWS",
                                          "RANDOM_SEED", "LOG_LEVEL"}


def test_settings_read_from_environment(monkeypatch):
    monkeypatch.setenv("PERIOD_RANDOM_DRAWS", "7")
    monkeypatch.setenv("RANDOM_SEED", "11")
    loaded = load_settings()
    assert (loaded.PERIOD_RANDOM_DRAWS, loaded.RANDOM_SEED) == (7, 11)
