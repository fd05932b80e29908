"""Target graphs H: paths, cycles, spiders, centipedes and explicit edge lists."""
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from core.errors import BadToken

PATH = "path"
CYCLE = "cycle"
SPIDER = "spider"
CENTIPEDE = "centipede"
EXPLICIT = "edges"


@dataclass(frozen=True)
class TargetSpec:
    """A target family member. ``params`` holds (n,), (k, l) or the edge list."""

    kind: str
    params: tuple

    # --- constructors -------------------------------------------------
    @classmethod
    def path(cls, n):
        if n < 1:
            raise BadToken(f"path needs at least one edge, got {n}")
        return cls(PATH, (n,))

    @classmethod
    def cycle(cls, n):
        if n < 3:
            raise BadToken(f"cycle needs at least three vertices, got {n}")
        return cls(CYCLE, (n,))

    @classmethod
    def spider(cls, k, l):
        if k < 3 or l < 2:
            raise BadToken(f"spider needs k>=3 and l>=2, got ({k},{l})")
        return cls(SPIDER, (k, l))

    @classmethod
    def centipede(cls, k, l):
        if k < 1 or l < 1:
            raise BadToken(f"centipede needs k>=1 and l>=1, got ({k},{l})")
        return cls(CENTIPEDE, (k, l))

    @classmethod
    def explicit(cls, edges):
        edges = tuple(sorted({(min(a, b), max(a, b)) for a, b in edges}))
        if not edges or any(a == b for a, b in edges):
            raise BadToken("explicit target needs a nonempty loop-free edge list")
        g = nx.Graph(edges)
        if not nx.is_connected(g):
            raise BadToken("explicit target must be connected")
        return cls(EXPLICIT, edges)

    @classmethod
    def parse(cls, token):
        """Parse ``path:5``, ``cycle:9``, ``spider:3,2``, ``centipede:2,3``, ``edges:0-1,1-2``."""
        name, _, rest = token.strip().partition(":")
        name = name.lower()
        try:
            if name == EXPLICIT:
                pairs = [p.split("-") for p in rest.split(",") if p]
                return cls.explicit([(int(a), int(b)) for a, b in pairs])
            nums = [int(x) for x in rest.split(",") if x.strip()]
        except ValueError as exc:
            raise BadToken(f"bad target token {token!r}") from exc
        builders = {PATH: (cls.path, 1), CYCLE: (cls.cycle, 1),
                    SPIDER: (cls.spider, 2), CENTIPEDE: (cls.centipede, 2)}
        if name not in builders:
            raise BadToken(f"unknown target family {name!r}")
        make, arity = builders[name]
        if len(nums) != arity:
            raise BadToken(f"{name} takes {arity} parameter(s), got {token!r}")
        return make(*nums)

    @property
    def token(self):
        if self.kind == EXPLICIT:
            return EXPLICIT + ":" + ",".join(f"{a}-{b}" for a, b in self.params)
        return self.kind + ":" + ",".join(str(p) for p in self.params)

    def __str__(self):
        return self.token

    # --- expansion ----------------------------------------------------
    @cached_property
    def edges(self):
        kind, p = self.kind, self.params
        if kind == PATH:
            return tuple((i, i + 1) for i in range(p[0]))
        if kind == CYCLE:
            n = p[0]
            return tuple(sorted(edge_pair(i, (i + 1) % n) for i in range(n)))
        if kind == SPIDER:
            k, l = p
            out = []
            for leg in range(k):
                first = 1 + leg * l
                out.append((0, first))
                out.extend((first + t, first + t + 1) for t in range(l - 1))
            return tuple(out)
        if kind == CENTIPEDE:
            k, l = p
            out = [(s, s + 1) for s in range(l)]
            for s in range(l + 1):
                base = l + 1 + s * k
                out.extend((s, base + t) for t in range(k))
            return tuple(out)
        # explicit: relabel to 0..n-1 in sorted order
        labels = sorted({v for e in p for v in e})
        index = {v: i for i, v in enumerate(labels)}
        return tuple(sorted(edge_pair(index[a], index[b]) for a, b in p))

    @cached_property
    def vertex_count(self):
        return 1 + max(v for e in self.edges for v in e)

    @cached_property
    def adjacency(self):
        adj = [set() for _ in range(self.vertex_count)]
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        return tuple(frozenset(a) for a in adj)

    @property
    def edge_count(self):
        return len(self.edges)

    @cached_property
    def max_degree(self):
        return max(len(a) for a in self.adjacency)

    def degree(self, v):
        return len(self.adjacency[v])

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(range(self.vertex_count))
        g.add_edges_from(self.edges)
        return g

    def is_tree(self):
        return nx.is_tree(self.to_networkx())


def edge_pair(a, b):
    return (a, b) if a < b else (b, a)


def spider_vertex(k, l, leg, depth):
    """Target vertex at ``depth`` (1..l) on ``leg`` (0..k-1); depth 0 is the centre."""
    return 0 if depth == 0 else 1 + leg * l + depth - 1


def centipede_pendant(k, l, spine, t):
    return l + 1 + spine * k + t
