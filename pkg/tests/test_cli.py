import json
from pathlib import Path

import pytest

from gkn import cli
from gkn.lattice import parse_surface

GOLDEN = Path(__file__).parent / "golden"

GOLDEN_RUNS = {
    "gkn_bound_sextic.json": "gkn bound --surface ci:r=3,deg=6 --divisor 8H --k 2",
    "gkn_check_sextic_48.json": "gkn check --surface ci:r=3,deg=6 --divisor 8H --k 2 --delta 48",
    "gkn_ci_3_1_2.json": "gkn ci --n 3 --k 1 --deg 2",
    "gkn_quadratic_quadric.json": "gkn quadratic --surface quadric --divisor 3,3 --k 1",
    "bn_obstruct_quadric.json": "bn obstruct --surface quadric --divisor 3,3 --delta 1",
    "severi_plane_bound_7_1.json": "severi plane-bound --n 7 --k 1",
    "invariants_p2_8h.json": "invariants --surface p2 --divisor 8H",
    "oracle_rank_double.json": "oracle rank --degree 6 --random 9 --mult 2 --seed 1",
    "severi_verify_7_1.json": "severi verify --n 7 --k 1 --trials 5 --seed 3",
}


def run(capsys, line):
    code = cli.main(line.split())
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", sorted(GOLDEN_RUNS))
def test_golden_json(capsys, name):
    code, out, _ = run(capsys, "--json " + GOLDEN_RUNS[name])
    assert code == 0
    assert json.loads(out) == json.loads((GOLDEN / name).read_text())


def test_json_flag_after_subcommand(capsys):
    code, out, _ = run(capsys, "severi plane-bound --n 7 --k 1 --json")
    assert code == 0 and json.loads(out)["result"]["bound"] == 10


def test_bound_text(capsys):
    code, out, _ = run(capsys, "gkn bound --surface ci:r=3,deg=6 --divisor 8H --k 2")
    assert code == 0
    assert out.strip() == "f = (192+sqrt(36864))/8 = 48; max delta = 47"


def test_irrational_bound_is_labelled_approx(capsys):
    _, out, _ = run(capsys, "gkn bound --surface quadric --divisor 9,7 --k 1")
    assert "sqrt" in out and "approx" in out


def test_small_outputs(capsys):
    assert run(capsys, "severi plane-bound --n 7 --k 1")[1].strip() == "10"
    assert run(capsys, "bn rho --g 0 --r 3 --d 3")[1].strip() == "0"
    assert run(capsys, "castelnuovo --degree 8 --ambient 3")[1].strip() == "9"


def test_check_verdicts(capsys):
    base = "gkn check --surface ci:r=3,deg=6 --divisor 8H --k 2 --delta "
    assert "SufficientGkn" in run(capsys, base + "47")[1]
    out = run(capsys, base + "48")[1]
    assert "BoundFailed" in out and "no conclusion" in out


def test_severi_regular(capsys):
    _, out, _ = run(capsys, "severi regular --surface ci:r=3,deg=6 --divisor 8H --delta 47")
    assert "guaranteed" in out
    _, out, _ = run(capsys, "severi regular --surface quadric --divisor 4,4 --delta 1")
    assert "positive multiple" in out


def test_other_subcommands(capsys):
    assert "28" in run(capsys, "gkn bogomolov --surface ci:r=3,deg=6 --divisor 8H --k 2 "
                               "--delta0 47")[1]
    assert "D−3H" in run(capsys, "gkn regularity --surface quadric --divisor 3,3 --k 2")[1]


@pytest.mark.parametrize("line", [
    "gkn ci --n 3 --k -1 --deg 2",
    "severi plane-bound --n -7 --k 1",
    "gkn bound --surface p2 --divisor 4H --k 2",
    "severi plane-bound --n 10 --k 4",
    "invariants --surface nowhere --divisor 1H",
    "oracle rank --degree 3",
])
def test_input_errors_exit_1(capsys, line):
    assert run(capsys, line)[0] == 1


def test_paper_examples(capsys):
    code, out, _ = run(capsys, "--json paper-examples")
    data = json.loads(out)
    assert code == 0 and data["result"]["all_ok"]
    assert len(data["result"]["checks"]) >= 10


def test_paper_examples_mismatch_exits_2(capsys, monkeypatch):
    monkeypatch.setattr(cli.cr, "castelnuovo_max_genus", lambda d, r: 10)
    code, _, err = run(capsys, "paper-examples")
    assert code == 2 and "castelnuovo" in err


def test_seed_from_environment(capsys, monkeypatch):
    line = "--json oracle rank --degree 3 --random 4"
    monkeypatch.setenv("GKN_SEED", "77")
    data = json.loads(run(capsys, line)[1])
    assert data["result"]["seed"] == 77
    monkeypatch.delenv("GKN_SEED")
    assert json.loads(run(capsys, line)[1])["result"]["seed"] == cli.orc.DEFAULT_SEED


@pytest.mark.parametrize("surface", [
    "p2", "quadric", "ci:r=3,deg=6", "ci:r=4,deg=2+3",
    '{"model":"lattice","gram":[[2,1],[1,-2]],"H":[1,0],"K":[0,0],'
    '"flags":{"h1_kH_vanishes":true,"k_normal":true}}',
])
def test_dump_surface_round_trip(capsys, tmp_path, surface):
    path = tmp_path / "s.json"
    code = cli.main(["invariants", "--surface", surface, "--divisor", "1H",
                     "--dump-surface", str(path)])
    capsys.readouterr()
    assert code == 0
    reparsed = parse_surface(json.loads(path.read_text()))
    assert reparsed == parse_surface(surface)
    # a dumped file is itself a valid --surface argument
    assert cli.main(["invariants", "--surface", str(path), "--divisor", "1H"]) == 0


def test_point_file(capsys, tmp_path):
    path = tmp_path / "pts.json"
    path.write_text(json.dumps({"degree": 1, "points": [
        {"xyz": ["1", "0", "1"], "mult": 1}, {"xyz": ["0", "1", "1"], "mult": 1},
        {"xyz": ["1/2", "1/2", "1"], "mult": 1}]}))
    code, out, _ = run(capsys, f"--json oracle rank --file {path}")
    res = json.loads(out)["result"]
    assert code == 0 and res["rank"] == 2 and not res["independent"]
