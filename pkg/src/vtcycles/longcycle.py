"""Vertex expansion measurement and the descendant-driven long-cycle search.

The expansion scan is exhaustive over subsets (hence hard-capped at n = 20),
with every threshold comparison done in exact rational arithmetic: the
boundary cases 3|U| = n and 3|U| = 2n must never fall to float rounding.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .digraph import Digraph, DirectedCycle, DirectedPath, directed_cycle, directed_path

EXPANSION_EXACT_MAX = 20


@dataclass(frozen=True)
class ExpansionReport:
    """Lower bound on the expansion ratio.

    When ``exact`` is True, ``alpha_lower`` is the true minimum of
    min(|N+(U)|, |N-(U)|)/|U| over all nonempty U with |U| <= 2n/3 and
    ``witness_set`` is the lexicographically smallest minimizer.  When
    sampled, the value is only a refutation certificate (an upper bound on
    the true alpha witnessed by ``witness_set``).
    """

    alpha_lower: Fraction
    witness_set: frozenset
    exact: bool


def expansion_exact(D: Digraph) -> ExpansionReport:
    """Exhaustive expansion scan over all 2^n subsets."""
    n = D.n
    if n < 2:
        raise ValueError("expansion needs at least 2 vertices")
    if n > EXPANSION_EXACT_MAX:
        raise ValueError(
            f"exact expansion scan is capped at n={EXPANSION_EXACT_MAX}; "
            f"got n={n} (use expansion_sampled)")
    out_masks = D.out_masks()
    in_masks = D.in_masks()
    size_limit = (2 * n) // 3
    total = 1 << n
    out_union = [0] * total
    in_union = [0] * total
    best_num = None   # best ratio as best_num / best_den
    best_den = 1
    best_mask = 0
    for mask in range(1, total):
        low = mask & (-mask)
        v = low.bit_length() - 1
        rest = mask ^ low
        out_union[mask] = out_union[rest] | out_masks[v]
        in_union[mask] = in_union[rest] | in_masks[v]
        k = mask.bit_count()
        if k > size_limit:
            continue
        boundary = min((out_union[mask] & ~mask).bit_count(),
                       (in_union[mask] & ~mask).bit_count())
        if best_num is None or boundary * best_den < best_num * k:
            best_num, best_den, best_mask = boundary, k, mask
        elif boundary * best_den == best_num * k:
            if _mask_vertices(mask) < _mask_vertices(best_mask):
                best_mask = mask
    return ExpansionReport(Fraction(best_num, best_den),
                           frozenset(_mask_vertices(best_mask)), True)


def _mask_vertices(mask: int) -> tuple:
    out = []
    while mask:
        low = mask & (-mask)
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def expansion_sampled(D: Digraph, samples: int = 10_000, seed: int = 0) -> ExpansionReport:
    """Random-subset upper bound on alpha; a refutation certificate only."""
    n = D.n
    if n < 2:
        raise ValueError("expansion needs at least 2 vertices")
    rng = random.Random(seed)
    size_limit = (2 * n) // 3
    best = None
    best_set = None
    for _ in range(samples):
        k = rng.randint(1, size_limit)
        U = frozenset(rng.sample(range(n), k))
        boundary = min(len(D.out_neighborhood(U)), len(D.in_neighborhood(U)))
        ratio = Fraction(boundary, len(U))
        if best is None or ratio < best:
            best, best_set = ratio, U
    return ExpansionReport(best, best_set, False)


def expansion_check_transitive_bound(D: Digraph, report: ExpansionReport = None) -> bool:
    """Whether the exact expansion ratio meets the 1/(3d) floor that holds
    for every vertex-transitive digraph of directed diameter d."""
    if not D.is_strongly_connected():
        raise ValueError("bound check needs a strongly connected digraph")
    if report is None:
        report = expansion_exact(D)
    d = D.directed_diameter()
    return report.alpha_lower >= Fraction(1, 3 * d)


@dataclass(frozen=True)
class CycleSearchResult:
    """Cycle found by the descendant-driven search plus its proven floor."""

    cycle: DirectedCycle
    guarantee: Fraction
    trace: tuple

    def meets_guarantee(self) -> bool:
        return self.guarantee is None or self.cycle.length >= self.guarantee


def _reachable_mask(out_masks, start_mask, allowed_mask) -> int:
    """Vertices reachable from start_mask inside allowed_mask (bitset BFS).
    start_mask must be a subset of allowed_mask; the result includes it."""
    seen = start_mask
    frontier = start_mask
    while frontier:
        nxt = 0
        rest = frontier
        while rest:
            low = rest & (-rest)
            rest ^= low
            nxt |= out_masks[low.bit_length() - 1]
        nxt &= allowed_mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def dfs_long_cycle(D: Digraph, alpha: Fraction = None) -> CycleSearchResult:
    """Extend a path while some fresh out-neighbor keeps at least 2n/3
    descendants in the residual digraph, then close a long cycle through
    the descendant set of the stuck endpoint.

    At the stopping point a set S of out-neighbors of the path's last
    vertex is assembled greedily so that the union U of their residual
    descendant sets satisfies n/3 <= |U| <= 2n/3: a single neighbor already
    in range is taken alone, otherwise all candidates are below n/3 and
    they are added in ascending id order until the union first reaches
    n/3 (each step adds less than n/3, so the union stays below 2n/3).
    Every out-neighbor of U then lies on the path; the cycle returns
    through the one closest to the path's start.  Both facts are asserted
    on every run.  When the caller knows the digraph is an alpha-expander,
    the returned cycle is guaranteed at least alpha*n/3 long.
    """
    n = D.n
    if n < 2:
        raise ValueError("need at least 2 vertices")
    if not D.is_strongly_connected():
        raise ValueError("digraph is not strongly connected")
    out_masks = D.out_masks()
    full = (1 << n) - 1

    path = [0]
    path_mask = 1
    trace = []
    while True:
        v = path[-1]
        prefix_mask = path_mask & ~(1 << v)  # path minus current endpoint
        chosen = None
        for w in D.out[v]:
            if (prefix_mask >> w) & 1 or w == v:
                continue
            residual = full & ~path_mask
            if not (residual >> w) & 1:
                continue
            desc = _reachable_mask(out_masks, 1 << w, residual)
            if 3 * desc.bit_count() >= 2 * n:
                chosen = w
                break
        if chosen is None:
            break
        trace.append({"step": len(path), "extend_to": chosen})
        path.append(chosen)
        path_mask |= 1 << chosen

    t_vertex = path[-1]
    residual = full & ~path_mask
    candidates = [w for w in D.out[t_vertex] if (residual >> w) & 1]
    assert candidates, "stuck endpoint must have out-neighbors off the path"

    desc_sets = {w: _reachable_mask(out_masks, 1 << w, residual)
                 for w in candidates}
    S = None
    for w in candidates:
        size = desc_sets[w].bit_count()
        if n <= 3 * size <= 2 * n:
            S = [w]
            break
    if S is None:
        S = []
        union = 0
        for w in candidates:
            S.append(w)
            union |= desc_sets[w]
            if 3 * union.bit_count() >= n:
                break
    union = 0
    for w in S:
        union |= desc_sets[w]
    u_size = union.bit_count()
    assert n <= 3 * u_size, "descendant union fell below n/3"
    assert 3 * u_size <= 2 * n, "descendant union exceeded 2n/3"

    # all external out-neighbors of U are on the path
    out_of_union = 0
    rest = union
    while rest:
        low = rest & (-rest)
        rest ^= low
        out_of_union |= out_masks[low.bit_length() - 1]
    out_of_union &= ~union
    assert out_of_union & ~path_mask == 0, "U has an out-neighbor off the path"

    j = next(i for i, pv in enumerate(path) if (out_of_union >> pv) & 1)
    target = path[j]
    landing = min(u for u in _mask_vertices(union) if D.has_arc(u, target))
    # multi-source shortest route from S to the landing vertex inside U
    hop = _shortest_route_in_mask(D, S, landing, union)
    cycle_vertices = path[j:] + hop
    trace.append({
        "stop_vertex": t_vertex,
        "S": sorted(S),
        "union_size": u_size,
        "reentry": target,
        "landing": landing,
    })
    cycle = directed_cycle(D, cycle_vertices)
    guarantee = None
    if alpha is not None:
        guarantee = Fraction(alpha) * n / 3
        assert cycle.length >= guarantee, (
            f"cycle length {cycle.length} below guarantee {guarantee}")
    return CycleSearchResult(cycle, guarantee, tuple(trace))


def _shortest_route_in_mask(D: Digraph, sources, target: int, allowed_mask: int) -> list:
    """Shortest path from any source to target staying inside the mask;
    BFS with lowest-id tie-breaking."""
    from collections import deque

    parent = {}
    q = deque()
    for s in sorted(sources):
        parent[s] = None
        q.append(s)
    while q:
        v = q.popleft()
        if v == target:
            route = [v]
            while parent[route[-1]] is not None:
                route.append(parent[route[-1]])
            route.reverse()
            return route
        for w in D.out[v]:
            if (allowed_mask >> w) & 1 and w not in parent:
                parent[w] = v
                q.append(w)
    raise AssertionError("landing vertex unreachable from S inside U")


def long_path(D: Digraph, certified_transitive: bool = False,
              alpha: Fraction = None) -> DirectedPath:
    """The longer of a diameter-realizing shortest path and the opened
    long cycle.  For certified vertex-transitive inputs the result length
    is asserted against the floor(sqrt(n)/3) floor."""
    n = D.n
    if n < 2:
        raise ValueError("need at least 2 vertices")
    if not D.is_strongly_connected():
        raise ValueError("digraph is not strongly connected")
    diam_path = D.diameter_path()
    if alpha is None and certified_transitive:
        alpha = Fraction(1, 3 * D.directed_diameter())
    cyc = dfs_long_cycle(D, alpha=alpha).cycle
    opened = directed_path(D, cyc.vertices)
    best = opened if opened.length > len(diam_path) - 1 else directed_path(D, diam_path)
    if certified_transitive:
        floor = isqrt(n) // 3
        assert best.length >= floor, (
            f"path length {best.length} below floor {floor}")
    return best
