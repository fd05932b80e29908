# modules/path.py
"""Induced monochromatic paths via two competing paths and a potential.

Builder first draws a reserve of isolated edges and keeps the colour that
occurs more often (the abundant colour). It then grows one path in the
abundant colour and one in the other colour, spending one reserve edge per
step. Each step draws e between the two path ends and f from one end to the
reserve edge, and the four colour outcomes rearrange the paths so that
3 * len(abundant path) + 4 * len(other path) grows by 1 or 2 while no edge
ever joins the two paths.
"""
import logging
from dataclasses import dataclass

from core.config import DEFAULT_CONFIG
from core.detect import Embedding
from core.engine import ScriptBuilder
from core.errors import StrategyError
from core.graph import Color
from core.measures import path_bound, path_vertex_budget

logger = logging.getLogger(__name__)

CASE_GAIN = {"e-ab/f-ab": 1, "e-ab/f-ot": 1, "e-ot/f-ab": 2, "e-ot/f-ot": 2}


@dataclass(frozen=True)
class PathStep:
    index: int
    case: str
    potential_before: int
    potential_after: int
    red: tuple
    blue: tuple
    rounds_after: int


def _length(path):
    return max(0, len(path) - 1)


def potential(abundant_path, other_path):
    return 3 * _length(abundant_path) + 4 * _length(other_path)


class _Supply:
    """Where new vertices come from: fresh ids, or a fixed pool."""

    def __init__(self, builder, pool=None):
        self.builder = builder
        self.pool = list(pool) if pool is not None else None

    def take(self, count):
        if self.pool is None:
            return [self.builder.fresh(i) for i in range(count)]
        if len(self.pool) < count:
            raise StrategyError("vertex pool exhausted")
        out, self.pool = self.pool[:count], self.pool[count:]
        return out


def grow_induced_path(builder, length, pool=None, records=None, tag="path"):
    """Generator subroutine; returns ``(color, vertices)`` of an induced path with ``length`` edges.

    With ``pool`` every vertex the subroutine touches comes from that list
    (at most path_vertex_budget(length) of them are needed).
    """
    supply = _Supply(builder, pool)
    if length == 1:
        u, v = supply.take(2)
        color = yield from builder.draw(u, v, f"{tag}:edge")
        return color, [u, v]

    m = 7 * length - 7
    reserve = {Color.RED: [], Color.BLUE: []}
    total = 2 * m - 1
    for i in range(total):
        x, y = supply.take(2)
        c = yield from builder.draw(x, y, f"{tag}:reserve={i + 1}/{total}")
        reserve[c].append((x, y))
    abundant = Color.RED if len(reserve[Color.RED]) >= len(reserve[Color.BLUE]) else Color.BLUE
    other = abundant.other
    pool_a = reserve[abundant]
    logger.debug("%s: abundant colour %s with %d reserve edges", tag, abundant.value, len(pool_a))

    x, y = pool_a.pop(0)
    paths = {abundant: [x, y], other: []}
    step = 0
    while _length(paths[abundant]) < length and _length(paths[other]) < length:
        step += 1
        pa, po = paths[abundant], paths[other]
        before = potential(pa, po)
        if not pool_a:
            raise StrategyError("reserve exhausted before a path reached full length")
        gx, gy = pool_a.pop(0)
        if not pa:
            pa.extend(supply.take(1))
        elif not po:
            po.extend(supply.take(1))
        a_end, o_end = pa[-1], po[-1]

        e = yield from builder.draw(o_end, a_end, f"{tag}:step={step}/e")
        if e is abundant:
            f = yield from builder.draw(o_end, gx, f"{tag}:step={step}/f")
            if f is abundant:
                case = "e-ab/f-ab"
                del po[-2:]
                pa.extend([o_end, gx, gy])
            else:
                case = "e-ab/f-ot"
                del pa[-1:]
                po.append(gx)
        else:
            f = yield from builder.draw(a_end, gx, f"{tag}:step={step}/f")
            if f is abundant:
                case = "e-ot/f-ab"
                del po[-1:]
                pa.extend([gx, gy])
            else:
                case = "e-ot/f-ot"
                del pa[-2:]
                po.extend([a_end, gx])

        after = potential(pa, po)
        if records is not None:
            records.append(PathStep(step, case, before, after, tuple(paths[Color.RED]),
                                    tuple(paths[Color.BLUE]), builder.view.edge_count))
        if after <= before:
            raise StrategyError(f"potential did not grow in step {step} ({case})")

    color = abundant if _length(paths[abundant]) >= length else other
    return color, paths[color][: length + 1]


class InducedPathProvider:
    """Path provider backed by the induced path strategy."""

    name = "path"

    def grow(self, builder, length, tag="path"):
        return (yield from grow_induced_path(builder, length, tag=tag))

    def bound(self, length):
        return path_bound(length)

    def vertex_budget(self, length):
        return path_vertex_budget(length)


class InducedPathBuilder(ScriptBuilder):
    name = "path"

    def __init__(self, n):
        super().__init__()
        if n < 1:
            raise ValueError("path length must be at least 1")
        self.n = n
        self.records = []

    def _script(self):
        color, vertices = yield from grow_induced_path(self, self.n, records=self.records)
        return Embedding(tuple(vertices), color, True)


def create_builder(params, config=DEFAULT_CONFIG, induced=True):
    (n,) = params
    return InducedPathBuilder(n)
