import io

import pytest

from core.detect import Embedding, find_mono_copy
from core.engine import (BUDGET, INPUT_CLOSED, RESIGNED, WIN, BuilderMove, BuilderStrategy, DeclareWin,
                         GameEngine, GameTrace, Outcome, Round, ScriptBuilder)
from core.errors import StrategyError
from core.graph import Color
from core.targets import TargetSpec
from modules.painters import DegreeThresholdPainter, RandomPainter, ScriptedPainter, StdinPainter
from modules.path import InducedPathBuilder
from utils.path_utils import get_resource_path

R, B = Color.RED, Color.BLUE
GOLDEN = ["tests/golden/path1.json", "tests/golden/path2.json"]


class FixedBuilder(BuilderStrategy):
    name = "fixed"

    def __init__(self, moves, claim=None):
        self.moves = list(moves)
        self.claim = claim

    def next_move(self, view):
        if self.moves:
            u, v = self.moves.pop(0)
            return BuilderMove(u, v, "")
        if self.claim is not None:
            return DeclareWin(self.claim)
        raise StrategyError("out of moves")


class CrashingBuilder(BuilderStrategy):
    name = "crash"

    def next_move(self, view):
        raise RuntimeError("boom")


class Matching(ScriptBuilder):
    """Disjoint edges forever."""

    name = "matching"

    def _script(self):
        while True:
            yield from self.draw(self.fresh(), self.fresh(1))


def p2_game(**kwargs):
    builder = FixedBuilder([(0, 1), (1, 2), (1, 3)])
    painter = ScriptedPainter([B, R, R])
    return GameEngine.play(builder, painter, TargetSpec.path(2), False, 10, **kwargs)


def test_single_edge_wins_in_one_round():
    for painter in (DegreeThresholdPainter(TargetSpec.path(1)), RandomPainter(3), ScriptedPainter([], B)):
        trace = GameEngine.play(InducedPathBuilder(1), painter, TargetSpec.path(1), True, 1)
        assert trace.outcome.kind == WIN and trace.outcome.rounds_used == 1


def test_engine_detects_win_and_trace_verifies():
    trace = p2_game()
    assert trace.outcome.won and trace.outcome.rounds_used == 3
    assert [(r.u, r.v, r.color) for r in trace.rounds] == [(0, 1, B), (1, 2, R), (1, 3, R)]
    assert GameEngine.verify(trace).clean
    assert find_mono_copy(trace.replay(2), TargetSpec.path(2)) is None


def test_sparse_check_cadence_wins_at_the_next_check():
    trace = p2_game(check_every=3)
    assert trace.outcome.won and trace.outcome.rounds_used == 3
    assert trace.outcome.budget == 10
    assert GameEngine.verify(trace).clean


def test_sparse_check_cadence_misses_a_win_the_builder_never_reaches():
    trace = p2_game(check_every=5)
    assert trace.outcome.kind == RESIGNED and trace.outcome.rounds_used == 3
    assert GameEngine.verify(trace).clean


def test_sparse_cadence_traces_verify_and_keep_their_cadence():
    trace = GameEngine.play(InducedPathBuilder(2), RandomPainter(1), TargetSpec.path(2), False, 40, check_every=3)
    assert trace.outcome.won and trace.check_every == 3
    assert GameEngine.verify(trace).clean
    loaded = GameTrace.loads(trace.dumps())
    assert loaded.check_every == 3
    assert GameEngine.verify(loaded).clean
    assert "check_every" not in p2_game().to_json()


def test_claim_after_the_scheduled_check_is_flagged():
    trace = p2_game(check_every=3)
    trace.rounds.extend([Round(4, 0, 2, B), Round(5, 0, 3, B), Round(6, 2, 3, B)])
    trace.outcome = Outcome(WIN, 6, trace.outcome.embedding, budget=10)
    report = GameEngine.verify(trace)
    assert any("win already present at round 3, claimed 6" in v for v in report.violations)


def test_win_between_checks_is_not_an_undetected_win():
    trace = p2_game(check_every=5)
    trace.outcome = Outcome(BUDGET, 3, budget=10)
    assert GameEngine.verify(trace).clean
    # the last round of the budget is always checked
    trace.outcome = Outcome(BUDGET, 3, budget=3)
    assert any("undetected win at round 3" in v for v in GameEngine.verify(trace).violations)


def test_declared_win_is_validated_by_engine():
    claim = Embedding((2, 1, 3), R, True)
    builder = FixedBuilder([(0, 1), (1, 2), (1, 3)], claim)
    trace = GameEngine.play(builder, ScriptedPainter([B, R, R]), TargetSpec.path(2), False, 10, check_every=50)
    assert trace.outcome.won
    assert trace.outcome.embedding.induced is False


def test_bad_claim_resigns():
    builder = FixedBuilder([(0, 1)], Embedding((0, 1, 2), R, False))
    trace = GameEngine.play(builder, ScriptedPainter([R]), TargetSpec.path(2), False, 10)
    assert trace.outcome.kind == RESIGNED
    assert trace.outcome.reason.startswith("InvalidWinClaim")


@pytest.mark.parametrize("moves", [[(0, 0)], [(0, 1), (1, 0)], [(0, 5)]])
def test_illegal_moves_resign(moves):
    trace = GameEngine.play(FixedBuilder(moves), ScriptedPainter([B]), TargetSpec.path(3), False, 10)
    assert trace.outcome.kind == RESIGNED
    assert "IllegalMove" in trace.outcome.reason
    assert GameEngine.verify(trace).clean


def test_builder_crash_resigns():
    trace = GameEngine.play(CrashingBuilder(), RandomPainter(1), TargetSpec.path(3), True, 10)
    assert trace.outcome.kind == RESIGNED and "RuntimeError: boom" in trace.outcome.reason


def test_budget_is_a_hard_stop():
    trace = GameEngine.play(Matching(), RandomPainter(5), TargetSpec.cycle(3), False, 7)
    assert trace.outcome.kind == BUDGET
    assert trace.outcome.budget == 7 and len(trace.rounds) == 7
    assert GameEngine.verify(trace).clean


def test_budget_must_be_positive():
    with pytest.raises(ValueError):
        GameEngine.play(Matching(), RandomPainter(5), TargetSpec.cycle(3), False, 0)


def test_closed_painter_input_ends_the_game():
    painter = StdinPainter(io.StringIO(""), io.StringIO())
    trace = GameEngine.play(InducedPathBuilder(2), painter, TargetSpec.path(2), True, 50)
    assert trace.outcome.kind == BUDGET and trace.outcome.reason == INPUT_CLOSED
    assert trace.outcome.rounds_used == 0


def test_tampered_round_count_is_flagged():
    trace = p2_game()
    trace.outcome = Outcome(WIN, 2, trace.outcome.embedding)
    report = GameEngine.verify(trace)
    assert not report.clean
    assert any("win not present at claimed round 2" in v for v in report.violations)


def test_rounds_after_the_win_are_flagged():
    trace = p2_game()
    trace.rounds.append(Round(4, 0, 2, B))
    trace.outcome = Outcome(WIN, 4, trace.outcome.embedding)
    report = GameEngine.verify(trace)
    assert any("win already present at round 3" in v for v in report.violations)


def test_hidden_win_is_flagged():
    trace = p2_game()
    trace.outcome = Outcome(BUDGET, 3, budget=3)
    assert any("undetected win at round 3" in v for v in GameEngine.verify(trace).violations)


def test_illegal_round_in_file_is_flagged():
    trace = p2_game()
    trace.rounds[2] = Round(3, 1, 2, R)
    report = GameEngine.verify(trace)
    assert any("illegal move" in v for v in report.violations)


def test_skipped_vertex_id_in_file_is_flagged():
    trace = p2_game()
    trace.rounds[2] = Round(3, 1, 7, R)
    report = GameEngine.verify(trace)
    assert any("round 3: illegal move: vertex id out of range" in v for v in report.violations)


def test_runs_are_reproducible():
    target = TargetSpec.path(4)
    first = GameEngine.play(InducedPathBuilder(4), RandomPainter(7), target, True, 200)
    second = GameEngine.play(InducedPathBuilder(4), RandomPainter(7), target, True, 200)
    assert first.dumps() == second.dumps()
    assert GameTrace.loads(first.dumps()).dumps() == first.dumps()


def test_loose_traces_keep_their_flag():
    trace = p2_game(strict=False)
    assert trace.to_json()["strict"] is False
    assert GameTrace.loads(trace.dumps()).strict is False
    assert "strict" not in p2_game().to_json()


@pytest.mark.parametrize("name", GOLDEN)
def test_golden_traces_verify_and_reserialise(name):
    path = get_resource_path(name)
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    trace = GameTrace.loads(text)
    assert GameEngine.verify(trace).clean
    assert trace.dumps() == text


def test_golden_games_replay():
    single = GameTrace.load(get_resource_path(GOLDEN[0]))
    played = GameEngine.play(InducedPathBuilder(1), DegreeThresholdPainter(TargetSpec.path(1)),
                             TargetSpec.path(1), True, 4)
    assert played.rounds == single.rounds
    assert p2_game().rounds == GameTrace.load(get_resource_path(GOLDEN[1])).rounds


def test_default_budget():
    assert GameEngine.default_budget(TargetSpec.path(5)) == 4 * 113
    assert GameEngine.default_budget(TargetSpec.parse("edges:0-1,1-2")) == 4 * 6
