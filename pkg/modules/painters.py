# modules/painters.py
"""Painter strategies: the degree-threshold adversary, seeded random, capped
minimax, scripted answers and an interactive line-mode painter."""
import logging
import random
import sys

from core.config import DEFAULT_CONFIG
from core.engine import PainterStrategy
from core.errors import BadToken, PainterInputClosed
from core.graph import Color

logger = logging.getLogger(__name__)


class DegreeThresholdPainter(PainterStrategy):
    """Blue iff both endpoints still have blue degree below max_degree(H) - 1."""

    name = "lemma5"

    def __init__(self, target):
        self.threshold = target.max_degree - 1

    def color(self, view, u, v):
        if view.degree(u, Color.BLUE) < self.threshold and view.degree(v, Color.BLUE) < self.threshold:
            return Color.BLUE
        return Color.RED


class RandomPainter(PainterStrategy):

    def __init__(self, seed, blue_bias=0.5):
        if not 0.0 <= blue_bias <= 1.0:
            raise BadToken(f"blue bias must lie in [0, 1], got {blue_bias}")
        self.seed = seed
        self.blue_bias = blue_bias
        self.name = f"random:{seed}" if blue_bias == 0.5 else f"random:{seed},{blue_bias}"
        self._rng = random.Random(seed)

    def color(self, view, u, v):
        return Color.BLUE if self._rng.random() < self.blue_bias else Color.RED


class ScriptedPainter(PainterStrategy):

    def __init__(self, answers, default=Color.BLUE):
        self.answers = [Color(a) for a in answers]
        self.default = Color(default)
        self.queries = 0
        self.name = "script:" + "".join(a.value for a in self.answers)

    def color(self, view, u, v):
        i = self.queries
        self.queries += 1
        return self.answers[i] if i < len(self.answers) else self.default


class StdinPainter(PainterStrategy):
    """Reads ``r``/``b`` per round; re-prompts on anything else."""

    name = "stdin"

    def __init__(self, stream=None, out=None):
        self.stream = stream if stream is not None else sys.stdin
        self.out = out if out is not None else sys.stdout
        self.answers = []

    def color(self, view, u, v):
        self.out.write(f"[{view.edge_count + 1}] {view.vertex_count} vertices, {view.edge_count} edges; "
                       f"colour edge {{{u},{v}}} (r/b): ")
        self.out.flush()
        while True:
            line = self.stream.readline()
            if not line:
                raise PainterInputClosed("painter input closed")
            key = line.strip().lower()
            if key in ("r", "b"):
                c = Color.RED if key == "r" else Color.BLUE
                self.answers.append(c)
                return c
            self.out.write("please answer r or b: ")
            self.out.flush()


class MinimaxPainter(PainterStrategy):
    """Picks the colour with the larger capped game value; degree-threshold rule otherwise."""

    def __init__(self, target, induced, max_rounds, max_vertices, config=DEFAULT_CONFIG, strict=True):
        from core.solver import ExactSolver

        self.name = f"minimax:{max_rounds},{max_vertices}"
        self.max_rounds = max_rounds
        self.max_vertices = max_vertices
        self.fallback = DegreeThresholdPainter(target)
        self.solver = ExactSolver(target, induced, max_vertices=max_vertices,
                                  max_rounds=max_rounds, config=config, strict=strict)

    def color(self, view, u, v):
        fallback = self.fallback.color(view, u, v)
        if self.max_rounds <= 0 or max(u, v) + 1 > self.max_vertices:
            return fallback
        graph = view.snapshot()
        spent = graph.edge_count + 1
        remaining = self.max_rounds - spent
        values = {}
        for c in (Color.RED, Color.BLUE):
            values[c] = self.solver.rounds_to_win(graph.with_edge(u, v, c), remaining)
        red, blue = values[Color.RED], values[Color.BLUE]
        if red == blue:
            return fallback
        # None means Builder cannot force a win within the remaining rounds
        if red is None:
            return Color.RED
        if blue is None:
            return Color.BLUE
        return Color.RED if red > blue else Color.BLUE


def _parse_script(text):
    answers = []
    for ch in text.strip():
        try:
            answers.append(Color.parse(ch))
        except ValueError as exc:
            raise BadToken(f"bad scripted answer {ch!r}") from exc
    return answers


def create_painter(token, target, induced=True, config=DEFAULT_CONFIG, strict=True, stream=None):
    """Painter from a registry token such as ``lemma5`` or ``random:7,0.3``."""
    name, _, rest = token.strip().partition(":")
    name = name.lower()
    try:
        if name == "lemma5":
            return DegreeThresholdPainter(target)
        if name == "random":
            parts = [p for p in rest.split(",") if p]
            if not 1 <= len(parts) <= 2:
                raise BadToken(f"random painter takes seed[,bias], got {token!r}")
            bias = float(parts[1]) if len(parts) == 2 else 0.5
            return RandomPainter(int(parts[0]), bias)
        if name == "minimax":
            rounds, vertices = (int(p) for p in rest.split(","))
            return MinimaxPainter(target, induced, rounds, vertices, config, strict)
        if name == "script":
            answers, _, default = rest.partition(",")
            default = _parse_script(default)[0] if default else Color.BLUE
            return ScriptedPainter(_parse_script(answers), default)
        if name == "stdin":
            return StdinPainter(stream)
    except ValueError as exc:
        if isinstance(exc, BadToken):
            raise
        raise BadToken(f"bad painter token {token!r}") from exc
    raise BadToken(f"unknown painter {token!r}")
