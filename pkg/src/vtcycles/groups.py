"""Finite groups as multiplication tables, Cayley digraphs, and the
left-translation automorphism families that certify vertex transitivity.

Group elements are plain ids into a canonical ordering; there is no symbolic
group theory here because everything downstream only needs multiplication
and inversion.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .digraph import Digraph

ASSOC_EXACT_LIMIT = 256     # O(order^3) associativity check up to here
ASSOC_SAMPLES = 10_000      # sampled triples above, fixed seed


class GroupAxiomError(ValueError):
    """A raw table violates a group axiom; carries a witness."""


@dataclass(frozen=True)
class GroupTable:
    """Finite group: order, multiplication table, identity, inverses.

    Construct through :func:`group_from_table` (or the named constructors
    below) so the axioms are actually checked.
    """

    order: int
    mult: tuple
    identity: int
    inverse: tuple
    name: str = field(default="group", compare=False)

    def mul(self, a: int, b: int) -> int:
        return self.mult[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def element_order(self, a: int) -> int:
        x = a
        k = 1
        while x != self.identity:
            x = self.mult[x][a]
            k += 1
        return k

    def order_multiset(self) -> tuple:
        """Sorted element orders; a cheap isomorphism invariant."""
        return tuple(sorted(self.element_order(a) for a in range(self.order)))


def group_from_table(raw, name: str = "group") -> GroupTable:
    """Validate a raw multiplication table and wrap it as a GroupTable.

    Closure, identity and inverse laws are checked exactly.  Associativity
    is exact up to order 256 and sampled (10^4 fixed-seed triples) above
    that, since the full check is cubic.  Violations raise
    :class:`GroupAxiomError` with a witness.
    """
    mult = tuple(tuple(row) for row in raw)
    n = len(mult)
    if n == 0:
        raise GroupAxiomError("empty table")
    for a, row in enumerate(mult):
        if len(row) != n:
            raise GroupAxiomError(f"row {a} has length {len(row)}, expected {n}")
        for b, c in enumerate(row):
            if not (0 <= c < n):
                raise GroupAxiomError(f"closure fails: table[{a}][{b}] = {c}")

    identity = None
    for e in range(n):
        if all(mult[e][a] == a and mult[a][e] == a for a in range(n)):
            identity = e
            break
    if identity is None:
        raise GroupAxiomError("no identity element")

    inverse = [None] * n
    for a in range(n):
        for b in range(n):
            if mult[a][b] == identity and mult[b][a] == identity:
                inverse[a] = b
                break
        if inverse[a] is None:
            raise GroupAxiomError(f"element {a} has no inverse")

    if n <= ASSOC_EXACT_LIMIT:
        triples = ((a, b, c) for a in range(n) for b in range(n) for c in range(n))
    else:
        rng = random.Random(0)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                   for _ in range(ASSOC_SAMPLES))
    for a, b, c in triples:
        if mult[mult[a][b]][c] != mult[a][mult[b][c]]:
            raise GroupAxiomError(f"associativity fails at witness ({a},{b},{c})")

    return GroupTable(n, mult, identity, tuple(inverse), name)


def cyclic_group(n: int) -> GroupTable:
    if n < 1:
        raise ValueError("cyclic group order must be at least 1")
    mult = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    inverse = tuple((-a) % n for a in range(n))
    return GroupTable(n, mult, 0, inverse, f"Z{n}")


def direct_product(g1: GroupTable, g2: GroupTable) -> GroupTable:
    """Direct product with lexicographic pair ordering: (a,b) -> a*|G2|+b."""
    n1, n2 = g1.order, g2.order
    n = n1 * n2
    mult = [[0] * n for _ in range(n)]
    for a1 in range(n1):
        for a2 in range(n2):
            a = a1 * n2 + a2
            row = mult[a]
            for b1 in range(n1):
                c1 = g1.mult[a1][b1]
                base = c1 * n2
                for b2 in range(n2):
                    row[b1 * n2 + b2] = base + g2.mult[a2][b2]
    identity = g1.identity * n2 + g2.identity
    inverse = tuple(g1.inverse[a // n2] * n2 + g2.inverse[a % n2] for a in range(n))
    return GroupTable(n, tuple(tuple(r) for r in mult), identity, inverse,
                      f"{g1.name}x{g2.name}")


def dihedral_group(m: int) -> GroupTable:
    """Dihedral group of order 2m; ids 0..m-1 are rotations r^i, ids
    m..2m-1 are reflections s*r^i.  Goes through the axiom checker."""
    if m < 1:
        raise ValueError("dihedral parameter must be at least 1")
    n = 2 * m

    def mul(a, b):
        e1, i1 = divmod(a, m)
        e2, i2 = divmod(b, m)
        # s^e1 r^i1 * s^e2 r^i2 = s^(e1+e2) r^(i2-i1) when e2=1, else r^(i1+i2)
        if e2 == 0:
            return e1 * m + (i1 + i2) % m
        return (e1 ^ 1) * m + (i2 - i1) % m

    table = [[mul(a, b) for b in range(n)] for a in range(n)]
    return group_from_table(table, name=f"D{m}")


def product_element(n2: int, pair) -> int:
    """Id of element (a, b) of a product group whose right factor has order n2."""
    a, b = pair
    return a * n2 + b


# --- Cayley digraphs ------------------------------------------------------

@dataclass(frozen=True)
class CayleySpec:
    """A group plus a generating set; the certified source of transitivity.

    The identity is rejected as a generator (it would create self-loops),
    and the set must generate the whole group, which is verified by closure
    BFS at construction.
    """

    group: GroupTable
    generators: tuple

    def __post_init__(self):
        gens = tuple(sorted(set(self.generators)))
        object.__setattr__(self, "generators", gens)
        g = self.group
        if not gens:
            raise ValueError("empty generator set")
        for s in gens:
            if not (0 <= s < g.order):
                raise ValueError(f"generator {s} out of range")
        if g.identity in gens:
            raise ValueError("identity generator would create self-loops")
        reached = {g.identity}
        frontier = [g.identity]
        while frontier:
            x = frontier.pop()
            for s in gens:
                y = g.mult[x][s]
                if y not in reached:
                    reached.add(y)
                    frontier.append(y)
        if len(reached) != g.order:
            raise ValueError(
                f"generators {gens} generate only {len(reached)} of "
                f"{g.order} elements")


def cayley_digraph(spec: CayleySpec) -> Digraph:
    """Arc x -> y iff x^{-1} y is a generator, i.e. y = x*s.

    The result is |S|-regular and strongly connected; both are asserted
    rather than assumed.
    """
    g = spec.group
    arcs = [(x, g.mult[x][s]) for x in range(g.order) for s in spec.generators]
    D = Digraph(g.order, arcs)
    assert D.regularity() == len(spec.generators)
    assert D.is_strongly_connected()
    return D


@dataclass(frozen=True)
class AutomorphismFamily:
    """A list of vertex permutations of some host.

    Validation against a concrete host lives in :meth:`validate_digraph` /
    :meth:`validate_graph`; constructors that hand out families are expected
    to call one of them.
    """

    n: int
    permutations: tuple

    def __post_init__(self):
        perms = tuple(tuple(p) for p in self.permutations)
        object.__setattr__(self, "permutations", perms)
        for p in perms:
            if len(p) != self.n or sorted(p) != list(range(self.n)):
                raise ValueError("family member is not a permutation")

    def __len__(self):
        return len(self.permutations)

    def validate_digraph(self, D: Digraph) -> None:
        if D.n != self.n:
            raise ValueError("host size mismatch")
        for p in self.permutations:
            for u, v in D.arcs():
                if not D.has_arc(p[u], p[v]):
                    raise ValueError(
                        f"permutation does not preserve arc ({u},{v})")

    def validate_graph(self, G) -> None:
        if G.n != self.n:
            raise ValueError("host size mismatch")
        for p in self.permutations:
            for u, v in G.edges():
                if not G.has_edge(p[u], p[v]):
                    raise ValueError(
                        f"permutation does not preserve edge ({u},{v})")

    def is_transitive(self) -> bool:
        """True iff for every ordered pair (u,v) some member maps u to v."""
        full = frozenset(range(self.n))
        for u in range(self.n):
            if frozenset(p[u] for p in self.permutations) != full:
                return False
        return True


def left_translations(spec: CayleySpec) -> AutomorphismFamily:
    """Left multiplication maps x -> g*x, one per group element.

    These preserve arcs of the Cayley digraph because (gx)^{-1}(gy) =
    x^{-1}y, and they act transitively; both facts are checked here.
    """
    g = spec.group
    perms = tuple(tuple(g.mult[h][x] for x in range(g.order))
                  for h in range(g.order))
    fam = AutomorphismFamily(g.order, perms)
    fam.validate_digraph(cayley_digraph(spec))
    assert fam.is_transitive()
    return fam


# --- CayleySpec text format -----------------------------------------------

def parse_cayley_spec(text: str) -> CayleySpec:
    """Two-line format: ``cyclic n`` / ``product n1 n2`` / ``dihedral m``,
    then a generator list such as ``1,3`` or ``(1,0),(0,1)``."""
    lines = [ln.strip() for ln in text.splitlines()
             if ln.strip() and not ln.strip().startswith("#")]
    if len(lines) != 2:
        raise ValueError("expected two non-comment lines: group, generators")
    group = parse_group(lines[0])
    gens = parse_generators(lines[1], group_kind=lines[0].split()[0],
                            params=[int(t) for t in lines[0].split()[1:]])
    return CayleySpec(group, tuple(gens))


def parse_group(token: str) -> GroupTable:
    parts = token.split()
    kind = parts[0]
    args = [int(t) for t in parts[1:]]
    if kind == "cyclic" and len(args) == 1:
        return cyclic_group(args[0])
    if kind == "product" and len(args) == 2:
        return direct_product(cyclic_group(args[0]), cyclic_group(args[1]))
    if kind == "dihedral" and len(args) == 1:
        return dihedral_group(args[0])
    raise ValueError(f"unrecognized group spec {token!r}")


def parse_generators(text: str, group_kind: str, params) -> list:
    text = text.strip()
    if group_kind == "product":
        pairs = []
        for chunk in text.replace(" ", "").split("),("):
            chunk = chunk.strip("()")
            a, b = chunk.split(",")
            pairs.append((int(a), int(b)))
        n2 = params[1]
        return [product_element(n2, p) for p in pairs]
    return [int(t) for t in text.replace(",", " ").split()]


def format_cayley_spec(kind: str, params, generators) -> str:
    head = f"{kind} {' '.join(str(p) for p in params)}"
    if kind == "product":
        n2 = params[1]
        gens = ",".join(f"({g // n2},{g % n2})" for g in generators)
    else:
        gens = ",".join(str(g) for g in generators)
    return f"{head}\n{gens}\n"
