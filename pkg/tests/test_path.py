import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.engine import GameEngine
from core.graph import Color
from core.measures import path_bound, path_vertex_budget
from core.targets import TargetSpec
from modules.painters import DegreeThresholdPainter, MinimaxPainter, RandomPainter, ScriptedPainter
from modules.path import CASE_GAIN, InducedPathBuilder, InducedPathProvider, potential

from conftest import play_out


def play_path(n, painter):
    builder = InducedPathBuilder(n)
    trace = play_out(builder, painter, TargetSpec.path(n))
    return builder, trace


def test_single_edge():
    _, trace = play_path(1, RandomPainter(0))
    assert trace.outcome.won and trace.outcome.rounds_used == 1


def test_p5_against_degree_threshold_painter():
    _, trace = play_path(5, DegreeThresholdPainter(TargetSpec.path(5)))
    assert trace.outcome.won
    assert trace.outcome.rounds_used <= 113
    assert trace.outcome.embedding.induced
    blue = [0] * trace.replay().vertex_count
    for r in trace.rounds:
        if r.color is Color.BLUE:
            blue[r.u] += 1
            blue[r.v] += 1
    assert max(blue) <= 1


@pytest.mark.parametrize("n", [1, 2, 3, 7, 16, 33, 64])
def test_bound_against_degree_threshold_painter(n):
    _, trace = play_path(n, DegreeThresholdPainter(TargetSpec.path(n)))
    assert trace.outcome.won
    assert trace.outcome.rounds_used <= path_bound(n)
    assert trace.replay().vertex_count <= path_vertex_budget(n)
    assert GameEngine.verify(trace).clean


def test_all_red_and_all_blue_painters():
    for painter in (RandomPainter(1, 0.0), RandomPainter(1, 1.0)):
        _, trace = play_path(4, painter)
        assert trace.outcome.won and trace.outcome.rounds_used <= path_bound(4)


def test_blue_then_red_script_takes_the_plus_one_case():
    builder = InducedPathBuilder(3)
    # reserve edges red, then the first e blue and f red
    answers = [Color.RED] * 27 + [Color.BLUE, Color.RED]
    trace = play_out(builder, ScriptedPainter(answers, Color.RED), TargetSpec.path(3))
    assert trace.outcome.won
    first = builder.records[0]
    assert first.case == "e-ot/f-ab"
    assert first.potential_after - first.potential_before == CASE_GAIN[first.case]


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=2, max_value=10), st.integers(min_value=0, max_value=10 ** 6),
       st.sampled_from([0.1, 0.5, 0.9]))
def test_potential_and_separation_against_random_painters(n, seed, bias):
    builder, trace = play_path(n, RandomPainter(seed, bias))
    assert trace.outcome.won
    assert trace.outcome.rounds_used <= path_bound(n)
    assert trace.outcome.embedding.induced
    assert trace.replay().vertex_count <= path_vertex_budget(n)
    previous = None
    for step in builder.records:
        assert step.potential_after - step.potential_before == CASE_GAIN[step.case]
        if previous is not None:
            assert step.potential_before == previous.potential_after
        previous = step
        graph = trace.replay(step.rounds_after)
        for x in step.red:
            for y in step.blue:
                assert not graph.has_edge(x, y)


def test_potential_formula():
    assert potential([0, 1, 2], [3, 4]) == 3 * 2 + 4 * 1
    assert potential([], [5]) == 0


def test_provider_reports_path_bounds():
    provider = InducedPathProvider()
    assert provider.bound(10) == path_bound(10)
    assert provider.vertex_budget(10) == path_vertex_budget(10)


def test_invalid_length():
    with pytest.raises(ValueError):
        InducedPathBuilder(0)


@pytest.mark.slow
@pytest.mark.parametrize("n", range(1, 65))
def test_bound_over_the_full_range(n):
    target = TargetSpec.path(n)
    painters = [DegreeThresholdPainter(target)] + [RandomPainter(seed) for seed in range(25)]
    if n <= 3:
        painters.append(MinimaxPainter(target, True, max_rounds=6, max_vertices=6))
    for painter in painters:
        builder, trace = play_path(n, painter)
        assert trace.outcome.won, painter.name
        assert trace.outcome.rounds_used <= path_bound(n), painter.name
        assert trace.outcome.embedding.induced
        for step in builder.records:
            assert step.potential_after - step.potential_before == CASE_GAIN[step.case]
