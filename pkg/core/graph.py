"""Two-coloured simple graphs: the background graph Builder draws."""
from enum import Enum

from core.errors import DuplicateEdge, SelfLoop


class Color(str, Enum):
    RED = "R"
    BLUE = "B"

    @property
    def other(self):
        return Color.BLUE if self is Color.RED else Color.RED

    @classmethod
    def parse(cls, text):
        key = text.strip().upper()[:1]
        if key == "R":
            return cls.RED
        if key == "B":
            return cls.BLUE
        raise ValueError(f"not a colour: {text!r}")


def edge_key(u, v):
    return (u, v) if u < v else (v, u)


class ColoredGraph:
    """Simple graph on vertices ``0..vertex_count-1`` with red/blue edges.

    Vertices are created implicitly and ids may skip ahead: naming ``k`` grows
    the graph to ``k + 1`` vertices. The game's rule that a move introduces at
    most the ids ``vertex_count`` and ``vertex_count + 1`` is enforced by the
    engine, not here. Colours never change once set.
    """

    __slots__ = ("_adj", "_deg", "_edge_count")

    def __init__(self, vertex_count=0):
        self._adj = [dict() for _ in range(vertex_count)]
        self._deg = [[0, 0] for _ in range(vertex_count)]
        self._edge_count = 0

    @classmethod
    def from_edges(cls, edges, vertex_count=0):
        g = cls(vertex_count)
        for u, v, c in edges:
            g.add_edge(u, v, c)
        return g

    @property
    def vertex_count(self):
        return len(self._adj)

    @property
    def edge_count(self):
        return self._edge_count

    def _grow(self, n):
        while len(self._adj) < n:
            self._adj.append(dict())
            self._deg.append([0, 0])

    def add_edge(self, u, v, color):
        if u == v:
            raise SelfLoop(u)
        if u < 0 or v < 0:
            raise ValueError(f"negative vertex id in {{{u},{v}}}")
        if max(u, v) < self.vertex_count and v in self._adj[u]:
            raise DuplicateEdge(u, v)
        self._grow(max(u, v) + 1)
        color = Color(color)
        self._adj[u][v] = color
        self._adj[v][u] = color
        idx = 0 if color is Color.RED else 1
        self._deg[u][idx] += 1
        self._deg[v][idx] += 1
        self._edge_count += 1
        return self

    def with_edge(self, u, v, color):
        return self.copy().add_edge(u, v, color)

    def copy(self):
        g = ColoredGraph()
        g._adj = [dict(a) for a in self._adj]
        g._deg = [list(d) for d in self._deg]
        g._edge_count = self._edge_count
        return g

    def color(self, u, v):
        if u >= self.vertex_count or v >= self.vertex_count:
            return None
        return self._adj[u].get(v)

    def has_edge(self, u, v):
        return self.color(u, v) is not None

    def neighbors(self, v):
        """Neighbour -> colour mapping. Callers must not mutate it."""
        return self._adj[v]

    def mono_neighbors(self, v, color):
        return [w for w, c in self._adj[v].items() if c is color]

    def degree(self, v, color=None):
        if v >= self.vertex_count:
            return 0
        if color is None:
            return len(self._adj[v])
        return self._deg[v][0 if color is Color.RED else 1]

    def edges(self):
        """All edges as ``(u, v, color)`` with ``u < v``, sorted."""
        out = []
        for u, nbrs in enumerate(self._adj):
            for v, c in nbrs.items():
                if u < v:
                    out.append((u, v, c))
        out.sort(key=lambda e: (e[0], e[1]))
        return out

    def is_isolated(self, v):
        return not self._adj[v]

    def __eq__(self, other):
        if not isinstance(other, ColoredGraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges() == other.edges()

    def __repr__(self):
        return f"ColoredGraph(n={self.vertex_count}, m={self.edge_count})"


class GraphView:
    """Read-only window on a live ColoredGraph.

    Painters and builders only ever see this view, never the engine's graph
    object or each other's state.
    """

    __slots__ = ("_g",)

    def __init__(self, graph):
        self._g = graph

    @property
    def vertex_count(self):
        return self._g.vertex_count

    @property
    def edge_count(self):
        return self._g.edge_count

    def color(self, u, v):
        return self._g.color(u, v)

    def has_edge(self, u, v):
        return self._g.has_edge(u, v)

    def neighbors(self, v):
        return dict(self._g.neighbors(v))

    def degree(self, v, color=None):
        return self._g.degree(v, color)

    def edges(self):
        return self._g.edges()

    def snapshot(self):
        return self._g.copy()
