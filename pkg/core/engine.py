# core/engine.py
"""Round loop of the Builder-Painter game, traces and trace verification."""
import json
import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field, replace
from typing import List, Optional

from core.config import DEFAULT_CONFIG
from core.detect import Embedding, embedding_problems, find_copy_through_edge, find_mono_copy
from core.errors import ArenaError, IllegalMove, InvalidWinClaim, PainterInputClosed, StrategyError
from core.graph import Color, ColoredGraph, GraphView
from core.measures import upper_bound
from core.targets import TargetSpec

logger = logging.getLogger(__name__)

WIN = "win"
BUDGET = "budget"
RESIGNED = "resigned"
INPUT_CLOSED = "input-closed"


@dataclass(frozen=True)
class BuilderMove:
    u: int
    v: int
    note: str = ""


@dataclass(frozen=True)
class DeclareWin:
    embedding: Embedding


class BuilderStrategy(ABC):
    name = "builder"

    @abstractmethod
    def next_move(self, view):
        """Return a BuilderMove or DeclareWin for the current view."""


class PainterStrategy(ABC):
    name = "painter"

    @abstractmethod
    def color(self, view, u, v):
        """Colour for the proposed edge {u, v}."""


class ScriptBuilder(BuilderStrategy):
    """Builder written as a generator.

    ``_script`` yields BuilderMove objects and receives the colour Painter
    chose for each; its return value is the winning Embedding. Subroutines
    compose with ``yield from``.
    """

    def __init__(self):
        self.view = None
        self._gen = None
        self._last = None

    @abstractmethod
    def _script(self):
        ...

    def next_move(self, view):
        self.view = view
        try:
            if self._gen is None:
                self._gen = self._script()
                item = next(self._gen)
            else:
                item = self._gen.send(view.color(self._last.u, self._last.v))
        except StopIteration as stop:
            if stop.value is None:
                raise StrategyError(f"{self.name} ran out of moves without a win") from None
            return DeclareWin(stop.value)
        if isinstance(item, BuilderMove):
            self._last = item
        return item

    # helpers for scripts ---------------------------------------------
    def fresh(self, offset=0):
        """Id of a vertex not yet in the graph; valid only for the very next move."""
        return self.view.vertex_count + offset

    def draw(self, u, v, note=""):
        """Draw u-v and return its colour. Re-uses the colour of an existing edge."""
        existing = self.view.color(u, v)
        if existing is not None:
            return existing
        color = yield BuilderMove(u, v, note)
        return color


@dataclass(frozen=True)
class Round:
    i: int
    u: int
    v: int
    color: Color
    note: str = ""

    def to_json(self):
        return {"i": self.i, "u": self.u, "v": self.v, "color": self.color.value, "note": self.note}


@dataclass(frozen=True)
class Outcome:
    kind: str
    rounds_used: int
    embedding: Optional[Embedding] = None
    reason: Optional[str] = None
    budget: Optional[int] = None

    @property
    def won(self):
        return self.kind == WIN

    def to_json(self):
        out = {"kind": self.kind, "rounds_used": self.rounds_used}
        if self.embedding is not None:
            out["embedding"] = self.embedding.to_json()
        if self.budget is not None:
            out["budget"] = self.budget
        if self.reason is not None:
            out["reason"] = self.reason
        return out

    @classmethod
    def from_json(cls, data):
        emb = data.get("embedding")
        return cls(
            kind=data["kind"],
            rounds_used=int(data["rounds_used"]),
            embedding=Embedding.from_json(emb) if emb else None,
            reason=data.get("reason"),
            budget=data.get("budget"),
        )


@dataclass
class GameTrace:
    target: TargetSpec
    induced: bool
    rounds: List[Round] = field(default_factory=list)
    outcome: Optional[Outcome] = None
    strict: bool = True
    check_every: int = 1

    @property
    def rounds_used(self):
        return len(self.rounds)

    def next_check(self, i):
        """First round >= ``i`` at which ``play`` ran the detector."""
        if self.check_every <= 1:
            return i
        scheduled = -(-i // self.check_every) * self.check_every
        budget = self.outcome.budget if self.outcome is not None else None
        return scheduled if budget is None else min(scheduled, budget)

    def replay(self, upto=None):
        g = ColoredGraph()
        for r in self.rounds[:upto]:
            g.add_edge(r.u, r.v, r.color)
        return g

    def to_json(self):
        out = {"target": self.target.token, "induced": self.induced}
        if not self.strict:
            out["strict"] = False
        if self.check_every > 1:
            out["check_every"] = self.check_every
        out["rounds"] = [r.to_json() for r in self.rounds]
        out["outcome"] = self.outcome.to_json() if self.outcome else None
        return out

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_json(cls, data):
        rounds = [
            Round(int(r["i"]), int(r["u"]), int(r["v"]), Color(r["color"]), r.get("note", ""))
            for r in data["rounds"]
        ]
        outcome = Outcome.from_json(data["outcome"]) if data.get("outcome") else None
        return cls(TargetSpec.parse(data["target"]), bool(data["induced"]), rounds, outcome,
                   bool(data.get("strict", True)), int(data.get("check_every", 1)))

    @classmethod
    def loads(cls, text):
        return cls.from_json(json.loads(text))

    def save(self, path):
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(self.dumps())

    @classmethod
    def load(cls, path):
        with open(path, "r", encoding="utf-8") as fh:
            return cls.loads(fh.read())


@dataclass
class VerificationReport:
    violations: List[str] = field(default_factory=list)
    first_win_round: Optional[int] = None

    @property
    def clean(self):
        return not self.violations

    def __str__(self):
        if self.clean:
            return "clean"
        return "\n".join(f"violation: {v}" for v in self.violations)


def _check_move(graph, u, v):
    n = graph.vertex_count
    if u == v:
        raise IllegalMove(f"self-loop at {u}")
    if min(u, v) < 0 or max(u, v) > n + 1:
        raise IllegalMove(f"vertex id out of range in {{{u},{v}}} (graph has {n} vertices)")
    if graph.has_edge(u, v):
        raise IllegalMove(f"edge {{{u},{v}}} already drawn")


class GameEngine:
    """Plays and re-checks games. The engine, not the builder, decides wins."""

    @classmethod
    def default_budget(cls, target, induced=True, config=DEFAULT_CONFIG):
        bound = upper_bound(target, induced)
        if bound is None:
            bound = config.solver_max_rounds
        return config.budget_factor * bound

    @classmethod
    def play(cls, builder, painter, target, induced, budget, strict=True, check_every=1):
        if budget < 1:
            raise ValueError("budget must be at least 1")
        graph = ColoredGraph()
        view = GraphView(graph)
        trace = GameTrace(target, induced, strict=strict, check_every=max(1, check_every))
        # verify needs the budget to place the last scheduled check
        win_budget = budget if check_every > 1 else None

        def finish(outcome):
            trace.outcome = outcome
            logger.info("%s vs %s on %s: %s after %d rounds%s", builder.name, painter.name, target,
                        outcome.kind, outcome.rounds_used,
                        f" ({outcome.reason})" if outcome.reason else "")
            return trace

        while len(trace.rounds) < budget:
            used = len(trace.rounds)
            try:
                move = builder.next_move(view)
                if isinstance(move, DeclareWin):
                    claim = replace(move.embedding, induced=induced)
                    problems = embedding_problems(graph, target, claim, strict)
                    if problems:
                        raise InvalidWinClaim("; ".join(problems))
                    return finish(Outcome(WIN, used, claim, budget=win_budget))
                _check_move(graph, move.u, move.v)
            except ArenaError as exc:
                logger.warning("builder %s resigned: %s", builder.name, exc)
                return finish(Outcome(RESIGNED, used, reason=f"{type(exc).__name__}: {exc}"))
            except Exception as exc:  # noqa: BLE001
                logger.exception("builder %s crashed", builder.name)
                return finish(Outcome(RESIGNED, used, reason=f"{type(exc).__name__}: {exc}"))

            try:
                color = Color(painter.color(view, move.u, move.v))
            except PainterInputClosed:
                return finish(Outcome(BUDGET, used, reason=INPUT_CLOSED, budget=budget))

            graph.add_edge(move.u, move.v, color)
            i = used + 1
            trace.rounds.append(Round(i, move.u, move.v, color, move.note))
            logger.debug("round %d: {%d,%d} %s %s", i, move.u, move.v, color.value, move.note)

            emb = None
            if check_every <= 1:
                emb = find_copy_through_edge(graph, target, move.u, move.v, induced, strict)
            elif i % check_every == 0 or i == budget:
                emb = find_mono_copy(graph, target, induced=induced, strict=strict)
            if emb is not None:
                return finish(Outcome(WIN, i, emb, budget=win_budget))

        return finish(Outcome(BUDGET, len(trace.rounds), budget=budget))

    @classmethod
    def verify(cls, trace):
        """Replay ``trace`` from scratch and list everything that does not add up."""
        report = VerificationReport()
        graph = ColoredGraph()
        target, strict = trace.target, trace.strict
        for pos, r in enumerate(trace.rounds, start=1):
            if r.i != pos:
                report.violations.append(f"round index {r.i} at position {pos}")
            try:
                _check_move(graph, r.u, r.v)
            except IllegalMove as exc:
                report.violations.append(f"round {pos}: illegal move: {exc}")
                continue
            graph.add_edge(r.u, r.v, r.color)
            if report.first_win_round is None and find_copy_through_edge(
                graph, target, r.u, r.v, trace.induced, strict
            ) is not None:
                report.first_win_round = pos

        outcome = trace.outcome
        if outcome is None:
            report.violations.append("trace has no outcome")
            return report
        first = report.first_win_round
        if outcome.kind == WIN:
            if outcome.rounds_used != len(trace.rounds):
                report.violations.append(
                    f"rounds_used {outcome.rounds_used} does not match {len(trace.rounds)} recorded rounds"
                )
            if first is None or first > outcome.rounds_used:
                report.violations.append(f"win not present at claimed round {outcome.rounds_used}")
            elif trace.next_check(first) < outcome.rounds_used:
                report.violations.append(f"win already present at round {first}, claimed {outcome.rounds_used}")
            if outcome.embedding is None:
                report.violations.append("win without embedding")
            else:
                if outcome.embedding.induced != trace.induced:
                    report.violations.append("embedding induced flag differs from the game")
                for problem in embedding_problems(graph, target, outcome.embedding, strict):
                    report.violations.append(f"embedding: {problem}")
        else:
            if outcome.kind not in (BUDGET, RESIGNED):
                report.violations.append(f"unknown outcome kind {outcome.kind!r}")
            if first is not None and trace.next_check(first) <= outcome.rounds_used:
                report.violations.append(f"undetected win at round {first}")
            if outcome.rounds_used != len(trace.rounds):
                report.violations.append(
                    f"rounds_used {outcome.rounds_used} does not match {len(trace.rounds)} recorded rounds"
                )
            if outcome.budget is not None and len(trace.rounds) > outcome.budget:
                report.violations.append("trace longer than its budget")
        return report


play = GameEngine.play
verify_trace = GameEngine.verify
default_budget = GameEngine.default_budget
