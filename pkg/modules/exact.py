# modules/exact.py
"""Builder that plays the solver's optimal moves on tiny targets."""
import logging

from core.config import DEFAULT_CONFIG
from core.engine import BuilderMove, BuilderStrategy
from core.errors import StrategyError
from core.solver import ExactSolver
from core.targets import TargetSpec

logger = logging.getLogger(__name__)


class ExactBuilder(BuilderStrategy):
    name = "exact"

    def __init__(self, target, induced=False, config=DEFAULT_CONFIG, strict=True):
        self.target = target
        self.induced = induced
        self.solver = ExactSolver(target, induced, config=config, strict=strict)

    def next_move(self, view):
        graph = view.snapshot()
        remaining = self.solver.max_rounds - graph.edge_count
        d = self.solver.rounds_to_win(graph, remaining)
        if d is None or d == 0:
            raise StrategyError(
                f"no forced win for {self.target} within {self.solver.max_rounds} rounds "
                f"on {self.solver.max_vertices} vertices"
            )
        move = self.solver.winning_move(graph, d)
        u, v = move
        return BuilderMove(u, v, f"exact:{d}")


def create_builder(params, config=DEFAULT_CONFIG, induced=True, target=None):
    """``params`` are the raw edge pairs of the target (or a ready TargetSpec via ``target``)."""
    if target is None:
        target = TargetSpec.explicit(params)
    return ExactBuilder(target, induced, config)
