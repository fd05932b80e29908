import itertools
import os
import sys

import pytest
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.engine import GameEngine  # noqa: E402
from core.graph import Color, ColoredGraph  # noqa: E402
from core.targets import TargetSpec  # noqa: E402


@st.composite
def colored_graphs(draw, max_vertices=7, max_edges=None):
    n = draw(st.integers(min_value=2, max_value=max_vertices))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_edges or len(pairs)))
    colors = draw(st.lists(st.sampled_from([Color.RED, Color.BLUE]), min_size=len(chosen), max_size=len(chosen)))
    return ColoredGraph.from_edges([(u, v, c) for (u, v), c in zip(chosen, colors)], vertex_count=n)


def brute_force_copy(graph, target, color, induced, strict=True):
    """Exhaustive search over all injections of the target into the graph."""
    adj = target.adjacency
    h = target.vertex_count
    for image in itertools.permutations(range(graph.vertex_count), h):
        ok = True
        for a in range(h):
            for b in range(a + 1, h):
                c = graph.color(image[a], image[b])
                if b in adj[a]:
                    if c is not color:
                        ok = False
                elif induced and c is not None and (strict or c is color):
                    ok = False
                if not ok:
                    break
            if not ok:
                break
        if ok:
            return image
    return None


def play_out(builder, painter, target, induced=True, budget=None, strict=True):
    if budget is None:
        budget = GameEngine.default_budget(target, induced)
    return GameEngine.play(builder, painter, target, induced, budget, strict)


@pytest.fixture
def red_triangle():
    return ColoredGraph.from_edges([(0, 1, Color.RED), (1, 2, Color.RED), (0, 2, Color.RED)])


@pytest.fixture
def spider32():
    return TargetSpec.spider(3, 2)
