"""Independent oracle implementations used only by the tests.

These deliberately share no code with the package: second implementations
of gcd, BFS, cycle enumeration, Hamiltonicity and the expansion minimum,
coded in the most naive way available, so that agreement between the two
routes is meaningful evidence.
"""

from collections import deque
from fractions import Fraction
from itertools import combinations, permutations


def euclid_gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def naive_distances(D, source):
    """Dict-based BFS distances; None marks unreachable."""
    dist = {source: 0}
    q = deque([source])
    while q:
        v = q.popleft()
        for w in D.out[v]:
            if w not in dist:
                dist[w] = dist[v] + 1
                q.append(w)
    return [dist.get(v) for v in range(D.n)]


def naive_diameter(D):
    best = 0
    for s in range(D.n):
        ds = naive_distances(D, s)
        if any(d is None for d in ds):
            return None
        best = max(best, max(ds))
    return best


def dfs_all_cycles(D):
    """Every simple directed cycle as a canonical tuple (min vertex first),
    by plain rooted DFS with no blocking machinery."""
    found = set()

    def walk(root, v, visited, path):
        for w in D.out[v]:
            if w == root and len(path) >= 2:
                found.add(tuple(path))
            elif w > root and w not in visited:
                walk(root, w, visited | {w}, path + [w])

    for root in range(D.n):
        walk(root, root, {root}, [root])
    return found


def permutation_hamiltonian(D):
    """Hamilton cycle existence by trying every vertex order (n <= 8)."""
    n = D.n
    if n < 2:
        return False
    for perm in permutations(range(1, n)):
        order = (0,) + perm
        if all(D.has_arc(order[i], order[(i + 1) % n]) for i in range(n)):
            return True
    return False


def subset_expansion_minimum(D):
    """Expansion minimum by materializing every subset as a frozenset."""
    n = D.n
    best = None
    for k in range(1, (2 * n) // 3 + 1):
        for combo in combinations(range(n), k):
            U = frozenset(combo)
            outside = frozenset(range(n)) - U
            np = {w for u in U for w in D.out[u]} & outside
            nm = {w for u in U for w in D.inn[u]} & outside
            ratio = Fraction(min(len(np), len(nm)), k)
            if best is None or ratio < best:
                best = ratio
    return best


def subset_induced_cycles(G):
    """All vertex sets inducing a cycle, by scanning every subset (n <= 12)."""
    n = G.n
    out = set()
    for k in range(3, n + 1):
        for combo in combinations(range(n), k):
            sub = set(combo)
            degs = [sum(1 for w in G.adj[v] if w in sub) for v in combo]
            if any(d != 2 for d in degs):
                continue
            # connected 2-regular induced subgraph = induced cycle
            seen = {combo[0]}
            stack = [combo[0]]
            while stack:
                v = stack.pop()
                for w in G.adj[v]:
                    if w in sub and w not in seen:
                        seen.add(w)
                        stack.append(w)
            if len(seen) == k:
                out.add(frozenset(combo))
    return out


def trial_division_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True
