# modules/centipede.py
"""Induced centipedes from two growing centipedes and a stock of colourful stars.

Every step probes a fresh vertex x from the ends of the red and the blue
spine. Depending on the colours x either becomes the next centre of one
spine (after k equally coloured pendants are drawn from it), or it raises
the outside degree of a spine end; an end with k outside edges of the other
colour is a colourful star and is parked. Once 2b-1 stars of one colour are
parked, an independent set of b of them hosts the induced path strategy,
and every path vertex already owns k pendants in the path colour.
"""
import logging
from dataclasses import dataclass, field

import networkx as nx

from core.config import DEFAULT_CONFIG
from core.detect import Embedding
from core.engine import ScriptBuilder
from core.graph import Color
from core.measures import centipede_pool_size, path_vertex_budget
from core.targets import centipede_pendant
from modules.path import grow_induced_path

logger = logging.getLogger(__name__)

FORK_OK = "fork-ok"
FORK_NOK_SMALL = "fork-nok/small"
FORK_NOK_BIG = "fork-nok/big"


@dataclass
class StarLedger:
    k: int
    centers: dict = field(default_factory=lambda: {Color.RED: [], Color.BLUE: []})
    stars: dict = field(default_factory=lambda: {Color.RED: [], Color.BLUE: []})
    outside_degree: dict = field(default_factory=dict)
    pendants: dict = field(default_factory=dict)

    def potential(self):
        k = self.k
        spine = self.centers[Color.RED] + self.centers[Color.BLUE]
        parked = len(self.stars[Color.RED]) + len(self.stars[Color.BLUE])
        return len(spine) * (k + 2) + parked * (3 * k + 2) + 2 * sum(self.outside_degree[v] for v in spine)

    def end(self, color):
        spine = self.centers[color]
        return spine[-1] if spine else None

    def add_center(self, x, color, own, other):
        self.centers[color].append(x)
        self.pendants[x] = {color: list(own), color.other: list(other)}
        self.outside_degree[x] = len(other)

    def bump(self, w, color, x):
        """``w`` (a centre of ``color``) got one more edge of the other colour to ``x``."""
        self.pendants[w][color.other].append(x)
        self.outside_degree[w] += 1
        if self.outside_degree[w] >= self.k:
            self.centers[color].remove(w)
            self.stars[color].append(w)
            return True
        return False


@dataclass(frozen=True)
class CentipedeStep:
    index: int
    case: str
    edges: int
    potential_before: int
    potential_after: int


def centipede_embedding(k, l, spine, pendants, color):
    mapping = [None] * ((k + 1) * (l + 1))
    for s, center in enumerate(spine):
        mapping[s] = center
        for t, leaf in enumerate(pendants[center][color][:k]):
            mapping[centipede_pendant(k, l, s, t)] = leaf
    return Embedding(tuple(mapping), color, True)


class CentipedeBuilder(ScriptBuilder):
    name = "centipede"

    def __init__(self, k, l):
        super().__init__()
        self.k, self.l = k, l
        self.ledger = StarLedger(k)
        self.records = []
        self.final_phase = None

    def _script(self):
        k, l = self.k, self.l
        ledger = self.ledger
        trigger = centipede_pool_size(l)
        step = 0
        while True:
            step += 1
            before = ledger.potential()
            start = self.view.edge_count
            case, grown = yield from self._step(step)
            self.records.append(CentipedeStep(step, case, self.view.edge_count - start, before,
                                              ledger.potential()))
            if grown is not None and len(ledger.centers[grown]) == l + 1:
                return centipede_embedding(k, l, ledger.centers[grown], ledger.pendants, grown)
            for color in (Color.RED, Color.BLUE):
                if len(ledger.stars[color]) >= trigger:
                    return (yield from self._finish(color))

    def _step(self, step):
        ledger = self.ledger
        u, v = ledger.end(Color.RED), ledger.end(Color.BLUE)
        x = self.fresh()
        e = Color.RED
        if u is not None:
            e = yield from self.draw(u, x, f"step={step}/e")
        if e is Color.BLUE:
            ledger.bump(u, Color.RED, x)
            return (FORK_NOK_BIG if u in ledger.stars[Color.RED] else FORK_NOK_SMALL), None
        f = Color.BLUE
        if v is not None:
            f = yield from self.draw(v, x, f"step={step}/f")
        if f is Color.RED:
            ledger.bump(v, Color.BLUE, x)
            return (FORK_NOK_BIG if v in ledger.stars[Color.BLUE] else FORK_NOK_SMALL), None

        drawn = {Color.RED: [], Color.BLUE: []}
        while len(drawn[Color.RED]) < self.k and len(drawn[Color.BLUE]) < self.k:
            leaf = max(self.view.vertex_count, x + 1)
            c = yield from self.draw(x, leaf, f"step={step}/pendant")
            drawn[c].append(leaf)
        color = Color.RED if len(drawn[Color.RED]) >= self.k else Color.BLUE
        ledger.add_center(x, color, drawn[color], drawn[color.other])
        return FORK_OK, color

    def _finish(self, color):
        """Induced path strategy over independent parked stars of ``color``."""
        stars = self.ledger.stars[color]
        forest = nx.Graph()
        forest.add_nodes_from(stars)
        forest.add_edges_from((a, b) for i, a in enumerate(stars) for b in stars[i + 1:]
                              if self.view.has_edge(a, b))
        side = nx.bipartite.color(forest)
        classes = [[s for s in stars if side[s] == c] for c in (0, 1)]
        independent = max(classes, key=len)
        pool = independent[: path_vertex_budget(self.l)]
        self.final_phase = {"color": color, "pool": list(pool)}
        logger.debug("centipede final phase over %d %s stars", len(pool), color.value)
        path_color, spine = yield from grow_induced_path(self, self.l, pool=pool, tag="final")
        return centipede_embedding(self.k, self.l, spine, self.ledger.pendants, path_color)


def create_builder(params, config=DEFAULT_CONFIG, induced=True):
    k, l = params
    return CentipedeBuilder(k, l)
