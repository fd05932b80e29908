# modules/cycle.py
"""Cycle strategies.

Even cycles: grow one long monochromatic path (colour C), carve vertex-disjoint
segments out of it and send probe edges from a fresh hub. Two C probes onto
the ends of a window of n-1 segment vertices close a C cycle at once;
otherwise every probe round leaves a D edge, and three D half paths from the
hub, two of which end on the same vertex, form a D cycle.

Odd cycles: force an even cycle on 2n vertices first, then draw the chords
that join vertices n-1 apart.
"""
import logging

from core.config import DEFAULT_CONFIG
from core.detect import Embedding
from core.engine import ScriptBuilder
from core.errors import UnsupportedSize
from modules.path import InducedPathProvider, grow_induced_path

logger = logging.getLogger(__name__)


def carve(vertices, sizes, gap):
    """Consecutive segments of ``vertices`` with ``gap`` skipped vertices between them."""
    if carved_length(sizes, gap) + 1 > len(vertices):
        raise ValueError("path too short for the requested segments")
    segments, pos = [], 0
    for size in sizes:
        segments.append(list(vertices[pos:pos + size]))
        pos += size + gap
    return segments


def carved_length(sizes, gap):
    """Edges of the shortest path holding ``sizes`` segments ``gap`` apart."""
    return sum(sizes) + gap * (len(sizes) - 1) - 1


def induced_segment_sizes(n):
    spare = 2 * ((n // 2 - 1) // 3) + n - 1
    return [spare] * 9 + [n - 1]


def loose_segment_sizes(n):
    spare = (n // 2 - 2) // 2 + n - 1
    return [spare] * 6 + [n - 1]


class EvenCycleConstruction:
    """Probe scheme over groups of carved segments.

    ``group_size`` segments per group (3 induced, 2 loose) and the window
    offset rule differ between the two variants.
    """

    induced = True
    group_size = 3

    def __init__(self, n, gap=1, provider=None):
        if n % 2 or n < 4:
            raise UnsupportedSize(f"even-cycle construction needs an even n >= 4, got {n}")
        self.n = n
        self.gap = gap
        self.provider = provider
        self.path_rounds = None
        self.halves = []

    def segment_sizes(self):
        return induced_segment_sizes(self.n)

    def offset(self, i):
        return 2 * (i // 3)

    @property
    def path_length(self):
        return carved_length(self.segment_sizes(), self.gap)

    def _long_path(self, builder):
        return (yield from grow_induced_path(builder, self.path_length, tag="cycle-path"))

    def grow(self, builder):
        """Generator; returns ``(color, cycle)`` with the cycle in cyclic order."""
        color, vertices = yield from self._long_path(builder)
        self.path_rounds = builder.view.edge_count
        segments = carve(vertices, self.segment_sizes(), self.gap)
        k = self.group_size
        groups = [segments[g * k:(g + 1) * k] for g in range(3)]
        return (yield from self._close_halves(builder, groups, segments[-1], color))

    def _probe_pair(self, builder, v, seg, j, path_color, note):
        """Probe ``seg[j]`` then ``seg[j+n-2]`` from ``v``.

        Returns ``(vertex, None)`` for the D neighbour reached, or
        ``(None, cycle)`` when both probes come back in the path colour.
        """
        n = self.n
        near, far = seg[j], seg[j + n - 2]
        c = yield from builder.draw(v, near, f"{note}/near")
        if c is not path_color:
            return near, None
        c = yield from builder.draw(v, far, f"{note}/far")
        if c is not path_color:
            return far, None
        return None, [v] + seg[j:j + n - 1]

    def _half_path(self, builder, hub, group, rho, path_color, label):
        n = self.n
        v, cycle = yield from self._probe_pair(builder, hub, group[0], 0, path_color, f"{label}:hub")
        if cycle:
            return None, cycle
        half, t = [hub, v], 0
        for i in range(1, n // 2 - 1):
            t = (t + 1) % len(group)
            v, cycle = yield from self._probe_pair(builder, v, group[t], self.offset(i), path_color,
                                                   f"{label}:i={i}")
            if cycle:
                return None, cycle
            half.append(v)
        end, cycle = yield from self._probe_pair(builder, v, rho, 0, path_color, f"{label}:close")
        if cycle:
            return None, cycle
        half.append(end)
        return half, None

    def _close_halves(self, builder, groups, rho, path_color):
        hub = builder.fresh()
        by_end = {}
        for g, group in enumerate(groups, start=1):
            half, cycle = yield from self._half_path(builder, hub, group, rho, path_color, f"group={g}")
            if cycle:
                return path_color, cycle
            self.halves.append(half)
            twin = by_end.get(half[-1])
            if twin is not None:
                return path_color.other, twin + half[-2:0:-1]
            by_end[half[-1]] = half
        raise AssertionError("three half paths always share an end vertex")


class LooseEvenCycleConstruction(EvenCycleConstruction):
    """Not necessarily induced: pairs of shorter segments, window moves every other step."""

    induced = False
    group_size = 2

    def __init__(self, n, gap=1, provider=None):
        super().__init__(n, gap, provider or InducedPathProvider())

    def segment_sizes(self):
        return loose_segment_sizes(self.n)

    def offset(self, i):
        return i // 2

    def _long_path(self, builder):
        return (yield from self.provider.grow(builder, self.path_length, tag="cycle-path"))


def close_odd_cycle(builder, n, color, even_cycle, induced, chord_colors):
    """Generator; chords ``{c[j(n-1)], c[(j+1)(n-1)]}`` over an even cycle on 2n vertices."""
    size = 2 * n
    c = even_cycle
    for j in range(n):
        a, b = (j * (n - 1)) % size, ((j + 1) * (n - 1)) % size
        chord = yield from builder.draw(c[a], c[b], f"chord={j + 1}/{n}")
        chord_colors.append(chord)
        if chord is color:
            arc = [c[(a + t) % size] for t in range(n)]
            return Embedding(tuple(arc), color, induced)
    ring = [c[(i * (n - 1)) % size] for i in range(n)]
    return Embedding(tuple(ring), color.other, induced)


class CycleBuilder(ScriptBuilder):

    def __init__(self, n, induced=True, provider=None, gap=1):
        super().__init__()
        if n < 3:
            raise UnsupportedSize(f"cycles need at least three vertices, got {n}")
        self.n = n
        self.induced = induced
        self.name = "cycle" if induced else "cycle-noninduced"
        kind = EvenCycleConstruction if induced else LooseEvenCycleConstruction
        self.construction = kind(n if n % 2 == 0 else 2 * n, gap, provider)
        self.chord_colors = []

    @property
    def path_rounds(self):
        return self.construction.path_rounds

    def _script(self):
        color, cycle = yield from self.construction.grow(self)
        if self.n % 2 == 0:
            return Embedding(tuple(cycle), color, self.induced)
        return (yield from close_odd_cycle(self, self.n, color, cycle, self.induced, self.chord_colors))


def _exact_fallback(n, induced, config):
    from core.targets import TargetSpec
    from modules.exact import ExactBuilder

    logger.info("cycle on %d vertices below %d, using the exact strategy", n, config.cycle_exact_below)
    return ExactBuilder(TargetSpec.cycle(n), induced, config)


def create_builder(params, config=DEFAULT_CONFIG, induced=True):
    (n,) = params
    if n < config.cycle_exact_below:
        return _exact_fallback(n, True, config)
    return CycleBuilder(n, True, gap=config.carve_gap)


def create_noninduced_builder(params, config=DEFAULT_CONFIG, induced=False):
    (n,) = params
    if n < config.cycle_exact_below:
        return _exact_fallback(n, False, config)
    return CycleBuilder(n, False, gap=config.carve_gap)
