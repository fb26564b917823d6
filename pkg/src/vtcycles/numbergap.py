"""Arithmetic behind the perimeter-gap lower bound: the gcd-split
necessity condition for Hamiltonicity of cycle products, prime-partitionable
(Erdos-Woods) witness checking and search, and the prime-pair construction
that produces witnesses with d close to ln(n1*n2).

All threshold comparisons are exact: the admissibility exponent is encoded
as the rational 41/25 and tested by big-integer powering, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt, log

THETA_NUM = 41   # q admissible iff q^25 < p^41, i.e. q < p^(41/25)
THETA_DEN = 25


def primes_below(x: int) -> list:
    """Primes strictly below x, ascending (sieve of Eratosthenes)."""
    if x <= 2:
        return []
    sieve = bytearray([1]) * x
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(x - 1) + 1):
        if sieve[p]:
            sieve[p * p::p] = bytearray(len(sieve[p * p::p]))
    return [i for i in range(x) if sieve[i]]


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (the 12-base set decides all n < 3.3e24,
    far beyond anything the searches here touch)."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# --- split conditions ---------------------------------------------------------

@dataclass(frozen=True)
class SplitCheck:
    """One decomposition d = d1 + d2 with the gcd evidence against (n1, n2)."""

    d1: int
    d2: int
    g1: int
    g2: int

    @property
    def shares_factor(self) -> bool:
        return self.g1 >= 2 or self.g2 >= 2


@dataclass(frozen=True)
class WitnessCertificate:
    """Evidence that (n1, n2) witnesses d as prime partitionable: gcd(n1,n2)
    must equal d and every one of the d-1 splits must share a factor."""

    d: int
    n1: int
    n2: int
    splits: tuple
    valid: bool
    reason: str = ""


def trotter_erdos_necessary(n1: int, n2: int):
    """The necessity condition for a Hamilton cycle in the product of two
    directed cycles: gcd(n1,n2) = d >= 2 and some split d = d1 + d2 has
    both gcd(n1,d1) = 1 and gcd(n2,d2) = 1.

    Returns (holds, split): the lexicographically smallest working split
    (by d1) when the condition holds, otherwise (False, None).
    """
    if n1 < 2 or n2 < 2:
        raise ValueError("cycle orders must be at least 2")
    d = gcd(n1, n2)
    if d < 2:
        return False, None
    for d1 in range(1, d):
        d2 = d - d1
        if gcd(n1, d1) == 1 and gcd(n2, d2) == 1:
            return True, (d1, d2)
    return False, None


def divisibility_gap_bound(n1: int, n2: int) -> int:
    """Guaranteed perimeter gap of the cycle product.

    Every directed cycle of the product has length divisible by
    d = gcd(n1,n2); when no coprime split exists (and d >= 2) the product
    cannot be Hamiltonian, so the gap is at least d.  Returns 0 when the
    condition gives no claim.
    """
    d = gcd(n1, n2)
    holds, _ = trotter_erdos_necessary(n1, n2)
    if not holds and d >= 2:
        return d
    return 0


def prime_partitionable_check(d: int, n1: int, n2: int) -> WitnessCertificate:
    """Evaluate all d-1 splits of d against the candidate witness (n1, n2)."""
    if d < 2:
        raise ValueError("d must be at least 2")
    splits = tuple(SplitCheck(d1, d - d1, gcd(n1, d1), gcd(n2, d - d1))
                   for d1 in range(1, d))
    if gcd(n1, n2) != d:
        return WitnessCertificate(d, n1, n2, splits, False,
                                  f"gcd(n1,n2) = {gcd(n1, n2)} != d")
    bad = [s for s in splits if not s.shares_factor]
    if bad:
        s = bad[0]
        return WitnessCertificate(d, n1, n2, splits, False,
                                  f"split ({s.d1},{s.d2}) is coprime to both")
    return WitnessCertificate(d, n1, n2, splits, True)


SEARCH_D_MAX = 40   # 2^pi(d) bipartitions; keep the scan exhaustive


def search_prime_partitionable(d_max: int):
    """Exhaustive witness search over the family n_i = d * prod(P_i) for
    bipartitions P1, P2 of the primes below d.

    For this family gcd(n1, n2) = d automatically (each prime below d sits
    on exactly one side, so the minimum valuation on each side is that of
    d itself).  Bipartitions are scanned by a binary counter over the
    primes in ascending order, P1 being the set-bit side, and the first
    valid witness per d is kept.  Returns a list of
    (d, (P1, P2), certificate) hits.
    """
    if d_max > SEARCH_D_MAX:
        raise ValueError(f"search capped at d_max = {SEARCH_D_MAX}")
    hits = []
    for d in range(2, d_max + 1):
        ps = primes_below(d)
        for counter in range(1 << len(ps)):
            p1 = [p for i, p in enumerate(ps) if (counter >> i) & 1]
            p2 = [p for i, p in enumerate(ps) if not (counter >> i) & 1]
            n1 = d
            for p in p1:
                n1 *= p
            n2 = d
            for p in p2:
                n2 *= p
            cert = prime_partitionable_check(d, n1, n2)
            if cert.valid:
                hits.append((d, (tuple(p1), tuple(p2)), cert))
                break
    return hits


# --- prime pairs and the explicit witness construction -------------------------

@dataclass(frozen=True)
class MotohashiPair:
    """Primes q = 1 (mod p) with q^25 < p^41 (that is, q < p^1.64)."""

    p: int
    q: int
    bound_ok: bool


def motohashi_pairs(p_max: int):
    """For each prime p <= p_max, the smallest prime q = 1 (mod p) inside
    the admissibility bound, when one exists."""
    if p_max > 10 ** 6:
        raise ValueError("p_max capped at 10^6")
    pairs = []
    for p in primes_below(p_max + 1):
        limit = p ** THETA_NUM
        q = 1 + p
        while q ** THETA_DEN < limit:
            if is_prime(q):
                pairs.append(MotohashiPair(p, q, True))
                break
            q += p
    return pairs


@dataclass(frozen=True)
class PrimePairWitness:
    d: int
    n1: int
    n2: int
    certificate: WitnessCertificate
    n: int
    ln_n: float

    @property
    def ratio(self) -> float:
        return self.d / self.ln_n


def witness_from_prime_pair(p: int, q: int) -> PrimePairWitness:
    """The explicit prime-partitionable witness built from an admissible
    prime pair: d = p + q, n1 = d*p*q, n2 = d times the product of all
    other primes below d.

    Preconditions: q = 1 (mod p), q^25 < p^41, and the size guard
    p^2 > p + q (small pairs like (2,3) fail it and are rejected).  The
    resulting certificate must validate; anything else is a bug here, not
    bad input.
    """
    if not (is_prime(p) and is_prime(q)):
        raise ValueError("both entries must be prime")
    if q % p != 1:
        raise ValueError(f"{q} is not 1 mod {p}")
    if q ** THETA_DEN >= p ** THETA_NUM:
        raise ValueError(f"pair ({p},{q}) outside the q < p^(41/25) bound")
    if p * p <= p + q:
        raise ValueError(f"size guard failed: {p}^2 <= {p + q}")
    d = p + q
    n1 = d * p * q
    n2 = d
    for z in primes_below(d):
        if z != p and z != q:
            n2 *= z
    cert = prime_partitionable_check(d, n1, n2)
    assert cert.valid, "constructed witness failed its own certificate"
    n = n1 * n2
    return PrimePairWitness(d, n1, n2, cert, n, log(n))


def perimeter_gap_table(p_max: int):
    """One row per admissible prime pair up to p_max: the witness, the
    vertex count n = n1*n2 of the product, and the ratio d / ln(n).

    The ratio is asserted to stay above 0.9 on every generated row; its
    drift toward 1 is recorded, not asserted.  e^d / n is included as a
    spot check that the witnesses stay within e^(d + o(d)).
    """
    from math import exp

    rows = []
    for pair in motohashi_pairs(p_max):
        if pair.p * pair.p <= pair.p + pair.q:
            continue
        wit = witness_from_prime_pair(pair.p, pair.q)
        ratio = wit.ratio
        assert ratio >= 0.9, f"ratio {ratio} below 0.9 at pair ({pair.p},{pair.q})"
        rows.append({
            "p": pair.p,
            "q": pair.q,
            "d": wit.d,
            "n1": wit.n1,
            "n2": wit.n2,
            "n": wit.n,
            "ln_n": wit.ln_n,
            "ratio": ratio,
            "exp_d_over_n": exp(wit.d) / wit.n if wit.d < 700 else None,
        })
    return rows
