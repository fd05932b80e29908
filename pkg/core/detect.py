"""Monochromatic (induced) copy detection.

Paths and cycles use dedicated searches; every other target goes through a
degree- and colour-pruned backtracking matcher. All searches can be anchored
at one background edge: after a round, any new copy must use the edge just
drawn, so the engine only looks there.
"""
from collections import deque
from dataclasses import dataclass

from core.graph import Color
from core.targets import CYCLE, PATH


@dataclass(frozen=True)
class Embedding:
    """``mapping[t]`` is the background vertex hosting target vertex ``t``."""

    mapping: tuple
    color: Color
    induced: bool

    def to_json(self):
        return {"map": list(self.mapping), "color": self.color.value, "induced": self.induced}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(int(v) for v in data["map"]), Color(data["color"]), bool(data["induced"]))


def embedding_problems(graph, target, emb, strict=True):
    """Direct re-check of an embedding; returns a list of problems (empty if valid)."""
    problems = []
    m = emb.mapping
    if len(m) != target.vertex_count:
        return [f"embedding maps {len(m)} vertices, target has {target.vertex_count}"]
    if len(set(m)) != len(m):
        problems.append("embedding is not injective")
    if any(v < 0 or v >= graph.vertex_count for v in m):
        return problems + ["embedding uses a vertex outside the graph"]
    adj = target.adjacency
    for a in range(len(m)):
        for b in range(a + 1, len(m)):
            c = graph.color(m[a], m[b])
            if b in adj[a]:
                if c is not emb.color:
                    problems.append(f"target edge {a}-{b} not present in colour {emb.color.value}")
            elif emb.induced and c is not None and (strict or c is emb.color):
                problems.append(f"extra edge between images of {a} and {b}")
    return problems


def is_valid_embedding(graph, target, emb, strict=True):
    return not embedding_problems(graph, target, emb, strict)


class _Blocker:
    """Decides whether a background edge spoils inducedness."""

    __slots__ = ("color", "induced", "strict")

    def __init__(self, color, induced, strict):
        self.color, self.induced, self.strict = color, induced, strict

    def blocks(self, c):
        if not self.induced or c is None:
            return False
        return self.strict or c is self.color


# --- paths --------------------------------------------------------------

def _extend(graph, path, on_path, need, blk, stop):
    """Depth-first extension of ``path`` at its tail by ``need`` more edges.

    ``stop`` holds vertices that may not be used, nor touched when induced.
    Returns the added vertices or None.
    """
    if need == 0:
        return []
    tail = path[-1]
    for w, c in graph.neighbors(tail).items():
        if c is not blk.color or w in on_path or w in stop:
            continue
        if not _fits(graph, w, tail, on_path, stop, blk):
            continue
        path.append(w)
        on_path.add(w)
        rest = _extend(graph, path, on_path, need - 1, blk, stop)
        path.pop()
        on_path.discard(w)
        if rest is not None:
            return [w] + rest
    return None


def _fits(graph, w, tail, on_path, stop, blk):
    if not blk.induced:
        return True
    for x, c in graph.neighbors(w).items():
        if x != tail and (x in on_path or x in stop) and blk.blocks(c):
            return False
    return True


def _longest(graph, start, banned, blk, cap):
    """Length of the longest induced colour path leaving ``start`` (≤ cap), avoiding ``banned``."""
    best = 0

    def dfs(path, on_path):
        nonlocal best
        if len(path) - 1 > best:
            best = len(path) - 1
        if best >= cap:
            return True
        tail = path[-1]
        for w, c in graph.neighbors(tail).items():
            if c is not blk.color or w in on_path or w in banned:
                continue
            if not _fits(graph, w, tail, on_path, banned, blk):
                continue
            path.append(w)
            on_path.add(w)
            done = dfs(path, on_path)
            path.pop()
            on_path.discard(w)
            if done:
                return True
        return False

    dfs([start], {start})
    return best


def _path_through(graph, u, v, n, blk):
    """Induced colour path with exactly ``n`` edges using edge u-v, as a vertex list."""
    if n == 1:
        return [u, v]
    # cheap upper bound: each side on its own, ignoring the other side
    right_cap = _longest(graph, v, {u}, blk, n - 1)
    left_cap = _longest(graph, u, {v}, blk, n - 1)
    if left_cap + right_cap + 1 < n:
        return None
    found = None

    def left_dfs(left, on_left):
        # ``left`` runs from u outward; the right side hangs off v
        nonlocal found
        a = len(left) - 1
        need = n - 1 - a
        if need <= right_cap:
            ext = _extend(graph, [v], {v}, need, blk, set(on_left))
            if ext is not None:
                found = list(reversed(left)) + [v] + ext
                return True
        if a >= left_cap or a >= n - 1:
            return False
        tail = left[-1]
        for w, c in graph.neighbors(tail).items():
            if c is not blk.color or w in on_left or w == v:
                continue
            if blk.induced and blk.blocks(graph.color(w, v)):
                continue
            if not _fits(graph, w, tail, on_left, (), blk):
                continue
            left.append(w)
            on_left.add(w)
            if left_dfs(left, on_left):
                return True
            left.pop()
            on_left.discard(w)
        return False

    left_dfs([u], {u})
    return found


# --- cycles -------------------------------------------------------------

def _cycle_through(graph, u, v, n, blk):
    """Induced colour cycle on ``n`` vertices through edge u-v, in cyclic order."""
    dist = _bfs_dist(graph, u, blk.color, n)
    path = [u, v]
    on_path = {u, v}

    def dfs():
        tail = path[-1]
        remaining = n - len(path)
        if remaining == 0:
            return blk_ok_close(tail)
        for w, c in graph.neighbors(tail).items():
            if c is not blk.color or w in on_path:
                continue
            d = dist.get(w)
            if d is None or d > remaining:
                continue
            if remaining == 1:
                if graph.color(w, u) is not blk.color:
                    continue
            if blk.induced:
                bad = False
                for x, cx in graph.neighbors(w).items():
                    if x == tail or x not in on_path:
                        continue
                    if x == u and remaining == 1:
                        continue
                    if blk.blocks(cx):
                        bad = True
                        break
                if bad:
                    continue
            path.append(w)
            on_path.add(w)
            if dfs():
                return True
            path.pop()
            on_path.discard(w)
        return False

    def blk_ok_close(tail):
        return graph.color(tail, u) is blk.color

    if n == 3:
        for w, c in graph.neighbors(v).items():
            if c is blk.color and w != u and graph.color(w, u) is blk.color:
                return [u, v, w]
        return None
    return list(path) if dfs() else None


def _bfs_dist(graph, src, color, cap):
    dist = {src: 0}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if dist[x] >= cap:
            continue
        for y, c in graph.neighbors(x).items():
            if c is color and y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


# --- generic backtracking ---------------------------------------------

class _Matcher:
    """Backtracking matcher for arbitrary connected targets.

    Target vertices are placed in depth-first order with inner vertices
    before leaves, so spines and legs fail fast and leaves are matched last.
    Leaves hanging off the same parent are interchangeable and are placed
    in increasing background order.
    """

    def __init__(self, graph, target, blk):
        self.g, self.h, self.blk = graph, target, blk
        self.adj = target.adjacency
        self.mapping = [None] * target.vertex_count
        self.used = set()

    def _child_key(self, s):
        return (len(self.adj[s]) == 1, s)

    def order_from(self, roots):
        order = list(roots)
        seen = set(roots)

        def visit(t):
            for s in sorted(self.adj[t], key=self._child_key):
                if s not in seen:
                    seen.add(s)
                    order.append(s)
                    visit(s)

        for r in reversed(roots):
            visit(r)
        parents, twin_before = {}, {}
        placed = set()
        last_leaf = {}
        for t in order:
            nbrs = [s for s in self.adj[t] if s in placed]
            parents[t] = nbrs[0] if nbrs else None
            if t not in roots and len(self.adj[t]) == 1 and parents[t] is not None:
                p = parents[t]
                twin_before[t] = last_leaf.get(p)
                last_leaf[p] = t
            placed.add(t)
        return order, parents, twin_before

    def compatible(self, t, x):
        g, color = self.g, self.blk.color
        if x in self.used or g.degree(x, color) < len(self.adj[t]):
            return False
        for s, y in enumerate(self.mapping):
            if y is None:
                continue
            c = g.color(x, y)
            if s in self.adj[t]:
                if c is not color:
                    return False
            elif self.blk.blocks(c):
                return False
        return True

    def assign(self, t, x):
        self.mapping[t] = x
        self.used.add(x)

    def unassign(self, t):
        self.used.discard(self.mapping[t])
        self.mapping[t] = None

    def extend(self, plan, i):
        order, parents, twin_before = plan
        if i == len(order):
            return True
        t = order[i]
        p = parents[t]
        if p is None:
            candidates = range(self.g.vertex_count)
        else:
            candidates = self.g.mono_neighbors(self.mapping[p], self.blk.color)
        twin = twin_before.get(t)
        floor = -1 if twin is None else self.mapping[twin]
        for x in candidates:
            if x > floor and self.compatible(t, x):
                self.assign(t, x)
                if self.extend(plan, i + 1):
                    return True
                self.unassign(t)
        return False

    def anchored(self, u, v):
        for a, b in self.h.edges:
            for x, y in ((a, b), (b, a)):
                if not self.compatible(x, u):
                    continue
                self.assign(x, u)
                if self.compatible(y, v):
                    self.assign(y, v)
                    if self.extend(self.order_from([x, y]), 2):
                        return tuple(self.mapping)
                    self.unassign(y)
                self.unassign(x)
        return None

    def anywhere(self):
        root = max(range(self.h.vertex_count), key=lambda t: len(self.adj[t]))
        if self.extend(self.order_from([root]), 0):
            return tuple(self.mapping)
        return None


# --- public API ---------------------------------------------------------

def find_copy_through_edge(graph, target, u, v, induced, strict=True):
    """Copy of ``target`` in the colour of edge u-v that uses that edge as a target edge."""
    color = graph.color(u, v)
    if color is None:
        return None
    blk = _Blocker(color, induced, strict)
    if target.edge_count > 1 and graph.degree(u, color) + graph.degree(v, color) < 3:
        return None
    if target.kind == PATH:
        verts = _path_through(graph, u, v, target.params[0], blk)
        return None if verts is None else Embedding(tuple(verts), color, induced)
    if target.kind == CYCLE:
        verts = _cycle_through(graph, u, v, target.params[0], blk)
        return None if verts is None else Embedding(tuple(verts), color, induced)
    mapping = _Matcher(graph, target, blk).anchored(u, v)
    return None if mapping is None else Embedding(mapping, color, induced)


def find_mono_copy(graph, target, color=None, induced=False, strict=True):
    """Some monochromatic (induced) copy of ``target``, or None.

    ``color`` restricts the search to one colour; ``strict`` selects whether
    an induced copy tolerates extra edges of the other colour (it does not
    by default).
    """
    colors = [color] if color is not None else [Color.RED, Color.BLUE]
    for c in colors:
        if target.kind in (PATH, CYCLE):
            for a, b, ec in graph.edges():
                if ec is c:
                    emb = find_copy_through_edge(graph, target, a, b, induced, strict)
                    if emb is not None:
                        return emb
            continue
        mapping = _Matcher(graph, target, _Blocker(c, induced, strict)).anywhere()
        if mapping is not None:
            return Embedding(mapping, c, induced)
    return None
