"""Exact game values for tiny targets.

Positions are two-coloured graphs up to colour-preserving isomorphism
(isolated vertices dropped). Builder's options are every missing edge among
used vertices, one edge to a fresh vertex per used vertex, and one edge
between two fresh vertices; options leading to the same pair of children
are tried once.
"""
import logging
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import List, Optional

from core.config import DEFAULT_CONFIG
from core.detect import find_mono_copy
from core.errors import InstanceTooLarge
from core.graph import Color, ColoredGraph

logger = logging.getLogger(__name__)

CANONICAL_LIMIT = 12


# --- canonical form -------------------------------------------------------

def _rank(keys):
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    return [order[k] for k in keys]


def _refine(adj, colors):
    """Colour refinement until stable; colours stay ordered consistently."""
    while True:
        sigs = [
            (colors[v], tuple(sorted((c, colors[w]) for w, c in adj[v])))
            for v in range(len(adj))
        ]
        new = _rank(sigs)
        if len(set(new)) == len(set(colors)):
            return new
        colors = new


def _leaves(adj, colors):
    colors = _refine(adj, colors)
    n = len(adj)
    if len(set(colors)) == n:
        yield colors
        return
    counts = {}
    for c in colors:
        counts[c] = counts.get(c, 0) + 1
    target = min(c for c, k in counts.items() if k > 1)
    for v in range(n):
        if colors[v] != target:
            continue
        split = _rank([(colors[x], 0 if x == v else 1) for x in range(n)])
        yield from _leaves(adj, split)


def canonical_form(graph, limit=CANONICAL_LIMIT):
    """``(key, canonical_graph)``; equal keys iff colour-isomorphic (isolated vertices ignored)."""
    active = [v for v in range(graph.vertex_count) if not graph.is_isolated(v)]
    n = len(active)
    if n > limit:
        raise InstanceTooLarge(f"canonical form asked for {n} vertices, limit is {limit}")
    index = {v: i for i, v in enumerate(active)}
    adj = [[] for _ in range(n)]
    edges = []
    for u, v, c in graph.edges():
        bit = 0 if c is Color.RED else 1
        adj[index[u]].append((index[v], bit))
        adj[index[v]].append((index[u], bit))
        edges.append((index[u], index[v], bit))
    start = [(sum(1 for _, c in adj[v] if c == 0), sum(1 for _, c in adj[v] if c == 1)) for v in range(n)]
    best = None
    for pos in _leaves(adj, _rank(start)):
        code = tuple(sorted((min(pos[a], pos[b]), max(pos[a], pos[b]), c) for a, b, c in edges))
        if best is None or code < best:
            best = code
    best = best or ()
    key = (n, best)
    canon = ColoredGraph(n)
    for a, b, c in best:
        canon.add_edge(a, b, Color.RED if c == 0 else Color.BLUE)
    return key, canon


def canonical_key(graph, limit=CANONICAL_LIMIT):
    return canonical_form(graph, limit)[0]


# --- transposition table ----------------------------------------------------

class TranspositionTable:
    """Bounded LRU map."""

    def __init__(self, capacity=DEFAULT_CONFIG.transposition_entries):
        self.capacity = capacity
        self._data = OrderedDict()
        self.hits = 0
        self.misses = 0

    def lookup(self, key):
        if key in self._data:
            self._data.move_to_end(key)
            self.hits += 1
            return self._data[key]
        self.misses += 1
        return None

    def store(self, key, value):
        self._data[key] = value
        self._data.move_to_end(key)
        if len(self._data) > self.capacity:
            self._data.popitem(last=False)

    def __len__(self):
        return len(self._data)


# --- solver -----------------------------------------------------------------

@dataclass
class GameValueResult:
    value: Optional[int]
    max_vertices: int
    max_rounds: int
    principal_variation: List[tuple] = field(default_factory=list)
    nodes: int = 0

    @property
    def known(self):
        return self.value is not None

    def __str__(self):
        return str(self.value) if self.known else "Unknown"


class ExactSolver:

    def __init__(self, target, induced=False, max_vertices=None, max_rounds=None,
                 config=DEFAULT_CONFIG, strict=True, memo=True):
        self.target = target
        self.induced = induced
        self.strict = strict
        self.max_vertices = config.solver_max_vertices if max_vertices is None else max_vertices
        self.max_rounds = config.solver_max_rounds if max_rounds is None else max_rounds
        self.table = TranspositionTable(config.transposition_entries) if memo else None
        self.nodes = 0

    def _key(self, graph):
        return canonical_key(graph, max(self.max_vertices, CANONICAL_LIMIT))

    def _memo(self, key, compute):
        if self.table is None:
            return compute()
        hit = self.table.lookup(key)
        if hit is not None:
            return hit
        value = compute()
        self.table.store(key, value)
        return value

    def has_copy(self, graph, key=None):
        key = key if key is not None else self._key(graph)
        return self._memo(("copy", key), lambda: find_mono_copy(
            graph, self.target, induced=self.induced, strict=self.strict) is not None)

    def moves(self, graph):
        """Builder options, one per distinct pair of children."""
        active = [v for v in range(graph.vertex_count) if not graph.is_isolated(v)]
        fresh = graph.vertex_count
        candidates = [(a, b) for i, a in enumerate(active) for b in active[i + 1:] if not graph.has_edge(a, b)]
        if len(active) + 1 <= self.max_vertices:
            candidates.extend((a, fresh) for a in active)
        if len(active) + 2 <= self.max_vertices:
            candidates.append((fresh, fresh + 1))
        seen = set()
        for u, v in candidates:
            children = tuple(graph.with_edge(u, v, c) for c in (Color.RED, Color.BLUE))
            pair = tuple(self._key(ch) for ch in children)
            if pair in seen:
                continue
            seen.add(pair)
            yield (u, v), children, pair

    def can_win(self, graph, d, key=None):
        """Can Builder force a copy within ``d`` more rounds from ``graph``?"""
        key = key if key is not None else self._key(graph)
        if self.has_copy(graph, key):
            return True
        if d <= 0:
            return False
        mono = max(sum(1 for *_, c in graph.edges() if c is col) for col in (Color.RED, Color.BLUE))
        if self.target.edge_count - mono > d:
            return False
        return self._memo(("win", key, d), lambda: self._search(graph, d))

    def _search(self, graph, d):
        self.nodes += 1
        for _, children, keys in self.moves(graph):
            if all(self.can_win(ch, d - 1, k) for ch, k in zip(children, keys)):
                return True
        return False

    def rounds_to_win(self, graph, budget):
        """Fewest further rounds Builder needs from ``graph``, or None beyond ``budget``."""
        for d in range(0, max(budget, 0) + 1):
            if self.can_win(graph, d):
                return d
        return None

    def winning_move(self, graph, d):
        for move, children, keys in self.moves(graph):
            if all(self.can_win(ch, d - 1, k) for ch, k in zip(children, keys)):
                return move
        return None

    def principal_variation(self, graph, d):
        """Optimal line: Builder's winning moves, Painter delaying as long as possible."""
        line = []
        graph = graph.copy()
        while d > 0 and not self.has_copy(graph):
            move = self.winning_move(graph, d)
            if move is None:
                break
            u, v = move
            slow = max((Color.RED, Color.BLUE),
                       key=lambda c: self.rounds_to_win(graph.with_edge(u, v, c), d - 1))
            graph.add_edge(u, v, slow)
            line.append((u, v, slow))
            d -= 1
        return line

    def solve(self):
        empty = ColoredGraph()
        value = self.rounds_to_win(empty, self.max_rounds)
        pv = self.principal_variation(empty, value) if value is not None else []
        stats = f"{len(self.table)} entries" if self.table is not None else "no memo"
        logger.info("solved %s (induced=%s): %s, %d nodes, %s", self.target, self.induced,
                    "Unknown" if value is None else value, self.nodes, stats)
        return GameValueResult(value, self.max_vertices, self.max_rounds, pv, self.nodes)


def solve_exact(target, induced=False, max_vertices=None, max_rounds=None, config=DEFAULT_CONFIG,
                strict=True, memo=True):
    return ExactSolver(target, induced, max_vertices, max_rounds, config, strict, memo).solve()
