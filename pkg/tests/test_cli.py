import json
from pathlib import Path

import pytest

from quivkit.cli import main

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_canonical_json(capsys):
    code, out, _ = run(capsys, "canonical", "--weights", "2,2,3", "--params", "inf,0,1",
                       "--verify-tubes", "inf,0,1,2,5")
    rep = json.loads(out)
    assert code == 0 and rep["ok"]
    assert rep["result"]["algebra"]["field"] == "Q"


def test_canonical_text(capsys):
    code, out, _ = run(capsys, "canonical", "--weights", "2,2,3", "--params", "inf,0,1", "--format", "text")
    assert code == 0 and out.startswith("canonical: ok")


def test_canonical_needs_params(capsys):
    code, _, err = run(capsys, "canonical", "--weights", "2,2,3")
    assert code == 2 and json.loads(err)["error"] == "BadSpec"


def test_trivext(capsys):
    code, out, _ = run(capsys, "trivext", "--base", SAMPLES / "C223.json")
    rep = json.loads(out)
    assert code == 0 and rep["checks"]["symmetric"]


def test_ext1_two_formulas(capsys):
    code, out, _ = run(capsys, "ext1", "--rep", SAMPLES / "E_inf.json", "--rep2", SAMPLES / "S_11.json")
    rep = json.loads(out)
    assert code == 0 and rep["result"]["ext1"] == 1


def test_tau(capsys):
    code, out, _ = run(capsys, "tau", "--rep", SAMPLES / "S_11.json")
    assert code == 0 and json.loads(out)["ok"]


def test_knit_dot(capsys):
    code, out, _ = run(capsys, "knit", "--rep", SAMPLES / "S_11.json", "--orbit", "--depth", "3", "--format", "dot")
    assert code == 0 and out.startswith("digraph")


def test_extend(capsys):
    code, out, _ = run(capsys, "extend", "--spec", SAMPLES / "coext71.json")
    rep = json.loads(out)
    assert code == 0 and len(rep["result"]["algebra"]["vertices"]) == 10


def test_orbit_matches(capsys):
    code, out, _ = run(capsys, "orbit", "--base", SAMPLES / "B71.json", "--auto", SAMPLES / "phi.json",
                       "--match", SAMPLES / "A71_computed.json")
    rep = json.loads(out)
    assert code == 0 and rep["checks"]["matches target presentation"]


def test_orbit_against_stated_presentation_fails(capsys):
    code, out, _ = run(capsys, "orbit", "--base", SAMPLES / "B71.json", "--auto", SAMPLES / "phi.json",
                       "--match", SAMPLES / "A71_stated.json")
    assert code == 1 and not json.loads(out)["checks"]["matches target presentation"]


def test_verify(capsys):
    mouths = [SAMPLES / f"E_{t}.json" for t in ("inf", "0", "1", "2")]
    code, out, _ = run(capsys, "verify", "--algebra", SAMPLES / "C223.json", "--mouth", *mouths,
                       "--S", "0", "--T", "w")
    rep = json.loads(out)
    assert code == 0 and all(rep["checks"].values())


@pytest.mark.parametrize("sub", ["check", "decompose"])
def test_rep_commands(capsys, sub):
    code, out, _ = run(capsys, "rep", sub, "--rep", SAMPLES / "P_0.json")
    assert code == 0


def test_rep_hom(capsys):
    code, out, _ = run(capsys, "rep", "hom", "--rep", SAMPLES / "P_0.json", "--rep2", SAMPLES / "E_inf.json")
    assert code == 0 and json.loads(out)["result"]["dim"] == 1


def test_out_file(capsys, tmp_path):
    target = tmp_path / "r.json"
    code, _, _ = run(capsys, "trivext", "--base", SAMPLES / "C223.json", "--out", target)
    assert code == 0 and json.loads(target.read_text())["command"] == "trivext"


def test_error_exit_code(capsys):
    code, _, err = run(capsys, "tau", "--rep", SAMPLES / "does_not_exist.json")
    assert code == 2 and "error" in json.loads(err)


@pytest.mark.slow
def test_example_73(capsys):
    code, out, _ = run(capsys, "example", "7.3")
    rep = json.loads(out)
    assert rep["checks"]["A matches computed"] and rep["checks"]["C0 certified"]
    assert code == 1  # the stated presentation check stays red


def test_check45_radical(capsys):
    code, out, _ = run(capsys, "check45", "--algebra", SAMPLES / "A71_computed.json", "--ideal", "rad")
    rep = json.loads(out)
    assert code == 1
    assert rep["result"]["ideal_dim"] == 35 and not rep["checks"]["r(I) = eI"]


def test_check45_generators(capsys):
    code, out, _ = run(capsys, "check45", "--algebra", SAMPLES / "A71_computed.json",
                       "--ideal", SAMPLES / "ideal71.json")
    assert json.loads(out)["result"]["ideal_dim"] > 0
