"""Immutable digraphs, their undirected shadows, and basic structural queries.

Everything downstream (group constructions, expansion scans, cycle machinery)
consumes the two carrier types defined here.  Instances never mutate after
construction, so they can be shared freely; every query is a pure function of
its arguments.  Vertex sets are plain ``frozenset`` objects, distances use
``INF`` for unreachable pairs, and undecided search verdicts use the
``UNKNOWN`` singleton rather than ``None``.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from collections import deque
from dataclasses import dataclass

INF = math.inf  # sentinel for unreachable distances / infinite diameter


class Unknown:
    """Verdict for searches that exhausted their budget without deciding."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNKNOWN"

    def __bool__(self):
        raise TypeError("UNKNOWN has no truth value; compare with 'is UNKNOWN'")


UNKNOWN = Unknown()


class Digraph:
    """Finite simple digraph on vertices 0..n-1 with sorted adjacency.

    Self-loops are rejected.  Digons (both u->v and v->u present) are fine
    and count as directed 2-cycles.  ``inn`` is the exact transpose of
    ``out``; both are tuples of sorted tuples, so iteration order is fixed
    and ties always break toward the lowest vertex id.
    """

    __slots__ = ("n", "out", "inn")

    def __init__(self, n: int, arcs):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            seen.add((u, v))
        out = [[] for _ in range(n)]
        inn = [[] for _ in range(n)]
        for u, v in sorted(seen):
            out[u].append(v)
            inn[v].append(u)
        self.n = n
        self.out = tuple(tuple(vs) for vs in out)
        self.inn = tuple(tuple(vs) for vs in inn)

    @property
    def arc_count(self) -> int:
        return sum(len(vs) for vs in self.out)

    def arcs(self):
        for u in range(self.n):
            for v in self.out[u]:
                yield (u, v)

    def has_arc(self, u: int, v: int) -> bool:
        row = self.out[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.out == other.out

    def __hash__(self):
        return hash((self.n, self.out))

    def __repr__(self):
        return f"Digraph(n={self.n}, arcs={self.arc_count})"

    def check_vertex_set(self, members) -> frozenset:
        U = frozenset(members)
        for v in U:
            if not (0 <= v < self.n):
                raise ValueError(f"vertex {v} out of range for n={self.n}")
        return U

    def out_neighborhood(self, members) -> frozenset:
        """External out-neighborhood: heads of arcs leaving ``members``."""
        U = self.check_vertex_set(members)
        res = set()
        for u in U:
            res.update(self.out[u])
        return frozenset(res - U)

    def in_neighborhood(self, members) -> frozenset:
        """External in-neighborhood: tails of arcs entering ``members``."""
        U = self.check_vertex_set(members)
        res = set()
        for u in U:
            res.update(self.inn[u])
        return frozenset(res - U)

    def bfs_distances(self, source: int, reverse: bool = False) -> list:
        """Exact directed distances from ``source``; INF where unreachable."""
        if not (0 <= source < self.n):
            raise ValueError(f"source {source} out of range")
        adj = self.inn if reverse else self.out
        dist = [INF] * self.n
        dist[source] = 0
        q = deque([source])
        while q:
            v = q.popleft()
            for w in adj[v]:
                if dist[w] == INF:
                    dist[w] = dist[v] + 1
                    q.append(w)
        return dist

    def shortest_path(self, source: int, target: int):
        """A shortest directed path as a vertex list, or None.

        Parent choice prefers the lowest vertex id, so the result is
        deterministic.
        """
        if source == target:
            return [source]
        dist = [INF] * self.n
        parent = [-1] * self.n
        dist[source] = 0
        q = deque([source])
        while q:
            v = q.popleft()
            for w in self.out[v]:
                if dist[w] == INF:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    q.append(w)
        if dist[target] == INF:
            return None
        path = [target]
        while path[-1] != source:
            path.append(parent[path[-1]])
        path.reverse()
        return path

    def directed_diameter(self):
        """Max pairwise directed distance; INF iff not strongly connected."""
        if self.n == 0:
            return 0
        best = 0
        for s in range(self.n):
            for d in self.bfs_distances(s):
                if d == INF:
                    return INF
                if d > best:
                    best = d
        return best

    def diameter_path(self):
        """A shortest path realizing the directed diameter (lexicographically
        first source/target pair), or None when not strongly connected."""
        best = -1
        pair = None
        for s in range(self.n):
            dist = self.bfs_distances(s)
            for t in range(self.n):
                if dist[t] == INF:
                    return None
                if dist[t] > best:
                    best = dist[t]
                    pair = (s, t)
        if pair is None:
            return None
        return self.shortest_path(*pair)

    def is_strongly_connected(self) -> bool:
        if self.n <= 1:
            return True
        return (INF not in self.bfs_distances(0)
                and INF not in self.bfs_distances(0, reverse=True))

    def regularity(self):
        """Common in/out degree r if the digraph is r-regular, else None."""
        if self.n == 0:
            return None
        r = len(self.out[0])
        for v in range(self.n):
            if len(self.out[v]) != r or len(self.inn[v]) != r:
                return None
        return r

    def out_masks(self) -> list:
        """Per-vertex out-adjacency as bitmasks (fresh list each call)."""
        return [sum(1 << w for w in self.out[v]) for v in range(self.n)]

    def in_masks(self) -> list:
        return [sum(1 << w for w in self.inn[v]) for v in range(self.n)]

    def induced_subdigraph(self, keep):
        """Sub-digraph on ``keep``; returns (digraph, old-id list)."""
        keep = sorted(self.check_vertex_set(keep))
        idx = {v: i for i, v in enumerate(keep)}
        arcs = [(idx[u], idx[v]) for u in keep for v in self.out[u] if v in idx]
        return Digraph(len(keep), arcs), keep

    def underlying_graph(self) -> "Graph":
        """Forget directions; digons collapse to a single edge."""
        edges = {(min(u, v), max(u, v)) for u, v in self.arcs()}
        return Graph(self.n, edges)


class Graph:
    """Undirected simple graph on 0..n-1, sorted adjacency."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            seen.add((min(u, v), max(u, v)))
        adj = [[] for _ in range(n)]
        for u, v in sorted(seen):
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.adj = tuple(tuple(sorted(vs)) for vs in adj)

    @property
    def edge_count(self) -> int:
        return sum(len(vs) for vs in self.adj) // 2

    def edges(self):
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        row = self.adj[u]
        i = bisect_left(row, v)
        return i < len(row) and row[i] == v

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count})"

    def bfs_distances(self, source: int) -> list:
        dist = [INF] * self.n
        dist[source] = 0
        q = deque([source])
        while q:
            v = q.popleft()
            for w in self.adj[v]:
                if dist[w] == INF:
                    dist[w] = dist[v] + 1
                    q.append(w)
        return dist

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return INF not in self.bfs_distances(0)

    def diameter(self):
        if self.n == 0:
            return 0
        best = 0
        for s in range(self.n):
            for d in self.bfs_distances(s):
                if d == INF:
                    return INF
                if d > best:
                    best = d
        return best

    def shortest_path(self, source: int, target: int):
        if source == target:
            return [source]
        dist = [INF] * self.n
        parent = [-1] * self.n
        dist[source] = 0
        q = deque([source])
        while q:
            v = q.popleft()
            for w in self.adj[v]:
                if dist[w] == INF:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    q.append(w)
        if dist[target] == INF:
            return None
        path = [target]
        while path[-1] != source:
            path.append(parent[path[-1]])
        path.reverse()
        return path


@dataclass(frozen=True)
class DirectedPath:
    """Ordered distinct vertices; every consecutive pair is an arc."""

    vertices: tuple

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


@dataclass(frozen=True)
class DirectedCycle:
    """Cyclically closed distinct vertex sequence, rotated so the smallest
    vertex comes first.  Length counts arcs, which equals the vertex count;
    a digon is a valid 2-cycle."""

    vertices: tuple

    @property
    def length(self) -> int:
        return len(self.vertices)

    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)


def directed_path(D: Digraph, vertices) -> DirectedPath:
    """Validate a vertex sequence as a directed path of ``D``."""
    vs = tuple(vertices)
    if not vs:
        raise ValueError("empty path")
    if len(set(vs)) != len(vs):
        raise ValueError("path repeats a vertex")
    for u, v in zip(vs, vs[1:]):
        if not D.has_arc(u, v):
            raise ValueError(f"({u},{v}) is not an arc")
    return DirectedPath(vs)


def canonical_rotation(vertices) -> tuple:
    vs = tuple(vertices)
    i = vs.index(min(vs))
    return vs[i:] + vs[:i]


def directed_cycle(D: Digraph, vertices) -> DirectedCycle:
    """Validate a vertex sequence as a directed cycle of ``D``."""
    vs = tuple(vertices)
    if len(vs) < 2:
        raise ValueError("a directed cycle has length at least 2")
    if len(set(vs)) != len(vs):
        raise ValueError("cycle repeats a vertex")
    for u, v in zip(vs, vs[1:] + vs[:1]):
        if not D.has_arc(u, v):
            raise ValueError(f"({u},{v}) is not an arc")
    return DirectedCycle(canonical_rotation(vs))


def cartesian_product(D1: Digraph, D2: Digraph) -> Digraph:
    """Cartesian product; vertex (u1,u2) is flattened as u1*|V(D2)|+u2.

    One coordinate stays fixed while the other moves along an arc, so the
    arc count is n1*m2 + n2*m1.
    """
    if D1.n == 0 or D2.n == 0:
        raise ValueError("product factors must be nonempty")
    n2 = D2.n
    arcs = []
    for u1 in range(D1.n):
        base = u1 * n2
        for u2 in range(n2):
            for v2 in D2.out[u2]:
                arcs.append((base + u2, base + v2))
            for v1 in D1.out[u1]:
                arcs.append((base + u2, v1 * n2 + u2))
    return Digraph(D1.n * n2, arcs)


# --- text formats ---------------------------------------------------------

def write_edge_list(D: Digraph) -> str:
    """Line 1 is ``n m``, then one ``u v`` line per arc, 0-indexed."""
    lines = [f"{D.n} {D.arc_count}"]
    lines.extend(f"{u} {v}" for u, v in D.arcs())
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Digraph:
    """Parse the edge-list format; ``#`` starts a comment line."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            rows.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"line {lineno}: expected two integers, got {raw!r}")
    if not rows:
        raise ValueError("missing header line 'n m'")
    n, m = rows[0]
    arcs = rows[1:]
    if len(arcs) != m:
        raise ValueError(f"header declares {m} arcs, found {len(arcs)}")
    return Digraph(n, arcs)


def to_dot(D: Digraph, collapse_digons: bool = False) -> str:
    """DOT export; digons can be collapsed to a single dir=both edge."""
    lines = ["digraph D {"]
    if collapse_digons:
        done = set()
        for u, v in D.arcs():
            if (u, v) in done:
                continue
            if D.has_arc(v, u):
                done.add((v, u))
                lines.append(f"  {min(u, v)} -> {max(u, v)} [dir=both];")
            else:
                lines.append(f"  {u} -> {v};")
            done.add((u, v))
    else:
        lines.extend(f"  {u} -> {v};" for u, v in D.arcs())
    lines.append("}")
    return "\n".join(lines) + "\n"
