"""Exact brute-force oracles: Hamiltonicity, longest cycle/path, longest
induced cycle, disjoint cycle packing, and the longest-cycle intersection
question.

These are the ground truth that every constructive algorithm in the package
is validated against, so they favor correctness and determinism over speed:
budgets are node-expansion counts (never wall clock), ties break toward the
lowest vertex id, and an exhausted budget is reported as UNKNOWN rather than
silently returning the best found.
"""

from __future__ import annotations

from dataclasses import dataclass

from .digraph import (Digraph, DirectedCycle, Graph, UNKNOWN, directed_cycle,
                      directed_path)

HAM_DP_MAX = 24           # bitmask DP cap
HAM_BACKTRACK_MAX = 40    # budgeted backtracking cap
HAM_STATE_CAP = 1 << 24   # DP refuses to grow past this many states
EXACT_DEFAULT_MAX = 20    # unbudgeted exhaustive search cap


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a budgeted exhaustive search.

    ``best`` is the optimum when ``exact`` is True, otherwise only the best
    certificate found before the budget ran out.
    """

    best: object
    exact: bool
    expansions: int


class _Counter:
    __slots__ = ("used", "cap")

    def __init__(self, cap):
        self.used = 0
        self.cap = cap

    def spend(self) -> bool:
        self.used += 1
        return self.cap is None or self.used <= self.cap


# --- Hamiltonicity --------------------------------------------------------

def brute_hamiltonian(D: Digraph, budget=None):
    """A Hamilton cycle of D, None if provably absent, UNKNOWN if undecided.

    Bitmask DP anchored at vertex 0 for n <= 24; budgeted backtracking up to
    n <= 40.  The DP bails out to UNKNOWN if its state table would exceed
    the memory cap (which cannot happen for sparse desk-scale inputs).
    """
    n = D.n
    if n < 2:
        return None
    if not D.is_strongly_connected():
        return None
    if n <= HAM_DP_MAX:
        return _hamiltonian_dp(D)
    if n <= HAM_BACKTRACK_MAX:
        return _hamiltonian_backtrack(D, budget)
    raise ValueError(f"n={n} beyond the Hamiltonicity oracle caps")


def _hamiltonian_dp(D: Digraph):
    n = D.n
    out_masks = D.out_masks()
    full = (1 << n) - 1
    # layers[k]: masks of size k containing vertex 0 -> bitmask of possible
    # last vertices; only reached states are stored.
    layer = {1: 1}
    layers = [layer]
    states = 1
    for _ in range(n - 1):
        nxt = {}
        for mask, lasts in layer.items():
            rest = lasts
            while rest:
                lowbit = rest & (-rest)
                rest ^= lowbit
                v = lowbit.bit_length() - 1
                fresh = out_masks[v] & ~mask
                while fresh:
                    wb = fresh & (-fresh)
                    fresh ^= wb
                    w = wb.bit_length() - 1
                    m2 = mask | wb
                    nxt[m2] = nxt.get(m2, 0) | wb
        states += len(nxt)
        if states > HAM_STATE_CAP:
            return UNKNOWN
        if not nxt:
            return None
        layer = nxt
        layers.append(layer)

    finals = layer.get(full, 0)
    closers = finals & D.in_masks()[0]
    if not closers:
        return None
    # walk back through the layers, lowest-id choices first
    last = (closers & (-closers)).bit_length() - 1
    seq = [last]
    mask = full
    for k in range(n - 1, 0, -1):
        prev_mask = mask & ~(1 << seq[-1])
        prevs = layers[k - 1].get(prev_mask, 0)
        cand = prevs
        chosen = None
        while cand:
            lowbit = cand & (-cand)
            cand ^= lowbit
            p = lowbit.bit_length() - 1
            if D.has_arc(p, seq[-1]):
                chosen = p
                break
        assert chosen is not None
        seq.append(chosen)
        mask = prev_mask
    seq.reverse()
    assert seq[0] == 0
    return directed_cycle(D, seq)


def _hamiltonian_backtrack(D: Digraph, budget):
    n = D.n
    counter = _Counter(budget)
    out = D.out
    found = []

    def dfs(v, visited, path):
        if not counter.spend():
            return UNKNOWN
        if len(path) == n:
            if D.has_arc(v, 0):
                found.append(list(path))
                return True
            return False
        for w in out[v]:
            if not (visited >> w) & 1:
                path.append(w)
                res = dfs(w, visited | (1 << w), path)
                if res is UNKNOWN or res is True:
                    return res
                path.pop()
        return False

    res = dfs(0, 1, [0])
    if res is UNKNOWN:
        return UNKNOWN
    if res:
        return directed_cycle(D, found[0])
    return None


# --- longest cycle / path -------------------------------------------------

def brute_longest_cycle(D: Digraph, budget=None) -> SearchResult:
    """Longest directed cycle by exhaustive rooted DFS.

    Roots are taken in ascending order and each cycle is explored only from
    its minimum vertex, so the first optimum found is canonical.
    """
    n = D.n
    if budget is None and n > EXACT_DEFAULT_MAX:
        raise ValueError(f"n={n} needs an explicit budget")
    counter = _Counter(budget)
    out = D.out
    best = []
    exact = True

    def dfs(root, v, visited, path):
        nonlocal exact
        if not counter.spend():
            exact = False
            return False
        alive = True
        for w in out[v]:
            if w == root and len(path) >= 2 and len(path) > len(best):
                best[:] = path
            elif w > root and not (visited >> w) & 1:
                path.append(w)
                if not dfs(root, w, visited | (1 << w), path):
                    alive = False
                path.pop()
                if not alive:
                    return False
        return alive

    for root in range(n):
        if not dfs(root, root, 1 << root, [root]):
            break
    cycle = directed_cycle(D, best) if best else None
    return SearchResult(cycle, exact, counter.used)


def brute_longest_path(D: Digraph, budget=None) -> SearchResult:
    """Longest directed path by exhaustive DFS from every start vertex."""
    n = D.n
    if budget is None and n > EXACT_DEFAULT_MAX:
        raise ValueError(f"n={n} needs an explicit budget")
    counter = _Counter(budget)
    out = D.out
    best = []
    exact = True

    def dfs(v, visited, path):
        nonlocal exact
        if not counter.spend():
            exact = False
            return False
        if len(path) > len(best):
            best[:] = path
        alive = True
        for w in out[v]:
            if not (visited >> w) & 1:
                path.append(w)
                if not dfs(w, visited | (1 << w), path):
                    alive = False
                path.pop()
                if not alive:
                    return False
        return alive

    for s in range(n):
        if not dfs(s, 1 << s, [s]):
            break
    path = directed_path(D, best) if best else None
    return SearchResult(path, exact, counter.used)


def find_path_of_length(D: Digraph, target: int, budget=None):
    """First directed path with at least ``target`` arcs, or None/UNKNOWN.

    Early-exit existence search; used by gadget post-verification where the
    claim is a lower bound, not an optimum.
    """
    counter = _Counter(budget)
    out = D.out
    hit = []

    def dfs(v, visited, path):
        if not counter.spend():
            return UNKNOWN
        if len(path) - 1 >= target:
            hit.append(list(path))
            return True
        for w in out[v]:
            if not (visited >> w) & 1:
                path.append(w)
                res = dfs(w, visited | (1 << w), path)
                if res is UNKNOWN or res is True:
                    return res
                path.pop()
        return False

    for s in range(D.n):
        res = dfs(s, 1 << s, [s])
        if res is UNKNOWN:
            return UNKNOWN
        if res:
            return directed_path(D, hit[0])
    return None


# --- induced cycles in undirected graphs ----------------------------------

def induced_cycles(G: Graph, min_len: int = 3, budget=None):
    """All induced (chordless) cycles of length >= min_len.

    Each cycle is rooted at its minimum vertex with its second vertex
    smaller than its last, so every cycle is emitted exactly once.  Returns
    (list of vertex tuples, exact flag).
    """
    n = G.n
    if budget is None and n > EXACT_DEFAULT_MAX:
        raise ValueError(f"n={n} needs an explicit budget")
    counter = _Counter(budget)
    adj_masks = [sum(1 << w for w in G.adj[v]) for v in range(n)]
    out = []
    exact = True

    def extend(root, path, visited, blocked):
        # blocked: vertices adjacent to the path interior, forbidden forever
        nonlocal exact
        if not counter.spend():
            exact = False
            return False
        v = path[-1]
        alive = True
        for w in G.adj[v]:
            if w <= root or (visited >> w) & 1 or (blocked >> w) & 1:
                continue
            closes = (adj_masks[w] >> root) & 1
            if closes:
                if len(path) >= min_len - 1 and path[1] < w:
                    out.append(tuple([root] + path[1:] + [w]))
                continue
            new_blocked = blocked | (adj_masks[v] & ~(1 << w))
            path.append(w)
            if not extend(root, path, visited | (1 << w), new_blocked):
                alive = False
            path.pop()
            if not alive:
                return False
        return alive

    for root in range(n):
        for a in G.adj[root]:
            if a <= root:
                continue
            # paths start root, a; chords to root are only allowed as closure
            if not extend(root, [root, a], (1 << root) | (1 << a), 0):
                return out, False
    return out, exact


def brute_longest_induced_cycle(G: Graph, budget=None) -> SearchResult:
    """Longest induced cycle via full enumeration."""
    cycles, exact = induced_cycles(G, min_len=3, budget=budget)
    best = max(cycles, key=len, default=None)
    return SearchResult(best, exact, 0)


# --- cycle packings and intersections --------------------------------------

def max_disjoint_cycles(cycles, target=None, budget=None):
    """Maximum number of vertex-disjoint cycles from the given list.

    Exact backtracking with optional early exit once ``target`` disjoint
    cycles are found.  Returns (count, exact flag).
    """
    sets = sorted({frozenset(c.vertices) if isinstance(c, DirectedCycle)
                   else frozenset(c) for c in cycles},
                  key=lambda s: (len(s), sorted(s)))
    counter = _Counter(budget)
    best = 0
    exact = True

    def rec(i, used, count):
        nonlocal best, exact
        if not counter.spend():
            exact = False
            return False
        best = max(best, count)
        if target is not None and best >= target:
            return False
        if count + (len(sets) - i) <= best:
            return True
        alive = True
        for j in range(i, len(sets)):
            if not sets[j] & used:
                if not rec(j + 1, used | sets[j], count + 1):
                    alive = False
                    break
        return alive

    rec(0, frozenset(), 0)
    return best, exact or (target is not None and best >= target)


def longest_cycles_pairwise_intersect(D: Digraph, budget=None):
    """Whether every pair of maximum-length directed cycles shares a vertex.

    Enumerates all cycles (UNKNOWN if that search is budget-truncated),
    keeps the maximum-length ones, and checks all pairs.
    """
    from .cyclegraph import enumerate_directed_cycles

    cycles, truncated = enumerate_directed_cycles(
        D, max_count=budget if budget is not None else None)
    if truncated:
        return UNKNOWN
    if not cycles:
        return True
    top = max(c.length for c in cycles)
    longest = [c.vertex_set() for c in cycles if c.length == top]
    for i in range(len(longest)):
        for j in range(i + 1, len(longest)):
            if not (longest[i] & longest[j]):
                return False
    return True
