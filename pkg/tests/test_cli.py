import io

import pandas as pd
import pytest

import main
from core.engine import GameTrace
from manager import split_painter_list


def run(capsys, *argv):
    code = main.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_play_writes_a_verifiable_trace(capsys, tmp_path):
    trace = tmp_path / "t.json"
    code, out, _ = run(capsys, "play", "--target", "path:5", "--induced", "--builder", "path",
                       "--painter", "lemma5", "--trace", str(trace))
    assert code == 0
    assert "outcome win" in out and "bound 113: within" in out
    code, out, _ = run(capsys, "verify", "--trace", str(trace))
    assert code == 0 and out.startswith("clean")


def test_unknown_builder_is_a_usage_error(capsys):
    code, _, err = run(capsys, "play", "--target", "path:5", "--builder", "nosuch")
    assert code == 2 and "unknown builder" in err


def test_builder_for_another_family_is_a_usage_error(capsys):
    code, _, err = run(capsys, "play", "--target", "path:5", "--builder", "cycle")
    assert code == 2 and "plays cycle targets" in err


def test_missing_target_exits_through_argparse():
    with pytest.raises(SystemExit) as exc:
        main.main(["play"])
    assert exc.value.code == 2


def test_lost_game_exits_one(capsys):
    code, out, _ = run(capsys, "play", "--target", "path:6", "--induced", "--budget", "3")
    assert code == 1 and "outcome budget" in out


def test_tampered_trace_fails_verification(capsys, tmp_path):
    path = tmp_path / "t.json"
    run(capsys, "play", "--target", "path:3", "--induced", "--trace", str(path))
    trace = GameTrace.load(str(path))
    trace.rounds.pop()
    trace.save(str(path))
    code, out, _ = run(capsys, "verify", "--trace", str(path))
    assert code == 1 and "violation:" in out


def test_sweep_rows_stay_within_bounds(capsys):
    code, out, _ = run(capsys, "sweep", "--family", "path", "--n", "2..6",
                       "--painters", "lemma5,random:1,random:2", "--induced", "--threads", "2")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "target,builder,painter,seed,induced,rounds,bound,lower,outcome"
    assert lines[-1].startswith("# summary rows=15 wins=15")
    table = pd.read_csv(io.StringIO(out), comment="#")
    assert len(table) == 15
    assert (table["rounds"] <= table["bound"]).all()
    lemma = table[table["painter"] == "lemma5"]
    assert (lemma["rounds"] >= lemma["lower"]).all()
    assert list(table["target"][:3]) == ["path:2"] * 3
    assert list(table["seed"][:3].fillna(-1)) == [-1, 1, 2]


def test_sweep_output_is_reproducible(capsys, tmp_path):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["sweep", "--family", "cycle", "--n", "4,6", "--painters", "random:3,0.4,lemma5", "--induced"]
    assert main.main(args + ["--output", str(first), "--threads", "1"]) == 0
    assert main.main(args + ["--output", str(second), "--threads", "3"]) == 0
    assert first.read_text() == second.read_text()


def test_sweep_gap_column(capsys):
    code, out, _ = run(capsys, "sweep", "--family", "centipede", "--k", "1..2", "--l", "2", "--gap")
    assert code == 0
    table = pd.read_csv(io.StringIO(out), comment="#")
    assert (table["ratio"] > 0).all()
    assert "max_gap_ratio=" in out.splitlines()[-1]


@pytest.mark.parametrize("argv", [
    ["sweep", "--family", "path", "--n", "2..4", "--painters", ""],
    ["sweep", "--family", "path", "--n", "6..2"],
    ["sweep", "--family", "path"],
    ["sweep", "--family", "star", "--n", "3"],
])
def test_sweep_usage_errors(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_solve_prints_value_and_line(capsys):
    code, out, _ = run(capsys, "solve", "--target", "path:2", "--max-vertices", "6", "--max-rounds", "6")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "3"
    assert len(lines) == 4 and lines[1].startswith("1: ")


def test_solve_unknown(capsys):
    code, out, _ = run(capsys, "solve", "--target", "path:2", "--max-rounds", "2")
    assert code == 1 and out.startswith("Unknown")


def test_bounds_for_spider(capsys):
    code, out, _ = run(capsys, "bounds", "--target", "spider:3,2")
    assert code == 0
    assert "lower 9" in out.splitlines() and "upper 1245" in out.splitlines()
    assert any(line.startswith("beta/4 ") for line in out.splitlines())


def test_bounds_reference_for_noninduced_cycle(capsys):
    _, out, _ = run(capsys, "bounds", "--target", "cycle:12", "--noninduced")
    assert "reference 423" in out
    assert "beta/4" not in out


def test_config_file(capsys, tmp_path):
    ini = tmp_path / "arena.ini"
    ini.write_text("[arena]\nbudget_factor = 1\n")
    code, out, _ = run(capsys, "--config", str(ini), "play", "--target", "path:2", "--induced",
                       "--painter", "random:5")
    assert code == 0


def test_split_painter_list():
    assert split_painter_list("lemma5,random:1,0.3,minimax:3,6,stdin") == [
        "lemma5", "random:1,0.3", "minimax:3,6", "stdin"]
    assert split_painter_list("") == []


def test_parse_range():
    assert main.parse_range("2..5") == [2, 3, 4, 5]
    assert main.parse_range("4,6") == [4, 6]
