import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.engine import GameEngine
from core.graph import Color
from core.measures import centipede_bound, lower_bound_online, size_ramsey_lower
from core.targets import TargetSpec
from modules.centipede import FORK_NOK_BIG, FORK_NOK_SMALL, FORK_OK, CentipedeBuilder, StarLedger
from modules.painters import DegreeThresholdPainter, MinimaxPainter, RandomPainter

from conftest import play_out


def play_centipede(k, l, painter):
    builder = CentipedeBuilder(k, l)
    trace = play_out(builder, painter, TargetSpec.centipede(k, l))
    return builder, trace


def check_ledger(builder):
    for step in builder.records:
        assert step.case in (FORK_OK, FORK_NOK_SMALL, FORK_NOK_BIG)
        assert step.potential_after - step.potential_before >= step.edges


@pytest.mark.parametrize("k,l", [(1, 1), (2, 3), (3, 2), (1, 4), (4, 1)])
def test_against_degree_threshold_painter(k, l):
    target = TargetSpec.centipede(k, l)
    builder, trace = play_centipede(k, l, DegreeThresholdPainter(target))
    assert trace.outcome.won
    assert lower_bound_online(target) <= trace.outcome.rounds_used <= centipede_bound(k, l)
    assert trace.outcome.embedding.induced
    assert GameEngine.verify(trace).clean
    check_ledger(builder)


@settings(max_examples=20, deadline=None)
@given(st.integers(min_value=1, max_value=3), st.integers(min_value=1, max_value=3),
       st.integers(min_value=0, max_value=10 ** 6), st.sampled_from([0.2, 0.5, 0.8]))
def test_potential_grows_by_edges_spent(k, l, seed, bias):
    builder, trace = play_centipede(k, l, RandomPainter(seed, bias))
    assert trace.outcome.won
    assert trace.outcome.rounds_used <= centipede_bound(k, l)
    check_ledger(builder)


def test_final_phase_uses_independent_stars():
    builder, trace = play_centipede(2, 2, RandomPainter(11, 0.5))
    assert trace.outcome.won
    if builder.final_phase is not None:
        pool = builder.final_phase["pool"]
        graph = trace.replay()
        assert all(not graph.has_edge(a, b) for a in pool for b in pool if a < b)


def test_single_edge_spine_against_minimax():
    target = TargetSpec.centipede(1, 1)
    _, trace = play_centipede(1, 1, MinimaxPainter(target, True, max_rounds=4, max_vertices=5))
    assert trace.outcome.won
    assert trace.outcome.rounds_used >= lower_bound_online(target)


def test_star_promotion():
    ledger = StarLedger(2)
    ledger.add_center(5, Color.RED, [6, 7], [8])
    assert ledger.end(Color.RED) == 5 and ledger.end(Color.BLUE) is None
    assert ledger.potential() == (2 + 2) + 2 * 1
    assert ledger.bump(5, Color.RED, 9) is True
    assert ledger.stars[Color.RED] == [5]
    assert ledger.centers[Color.RED] == []
    assert ledger.pendants[5][Color.BLUE] == [8, 9]
    assert ledger.potential() == 3 * 2 + 2


def test_gap_to_size_ramsey_shrinks_with_more_legs():
    ratios = []
    for k in range(1, 9):
        target = TargetSpec.centipede(k, 4)
        _, trace = play_centipede(k, 4, DegreeThresholdPainter(target))
        assert trace.outcome.won
        ratios.append(trace.outcome.rounds_used / size_ramsey_lower(target))
    assert all(r > 0 for r in ratios)
    assert all(a > b for a, b in zip(ratios, ratios[1:]))


@pytest.mark.slow
@pytest.mark.parametrize("k", range(1, 6))
@pytest.mark.parametrize("l", range(1, 7))
def test_centipede_bound_over_the_full_range(k, l):
    builder, trace = play_centipede(k, l, DegreeThresholdPainter(TargetSpec.centipede(k, l)))
    assert trace.outcome.won and trace.outcome.embedding.induced
    assert trace.outcome.rounds_used <= centipede_bound(k, l)
    check_ledger(builder)
