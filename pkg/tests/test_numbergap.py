import math

import pytest

from vtcycles.gadgets import directed_cycle_product
from vtcycles.numbergap import (MotohashiPair, is_prime, motohashi_pairs,
                                perimeter_gap_table, primes_below,
                                prime_partitionable_check,
                                search_prime_partitionable,
                                divisibility_gap_bound,
                                trotter_erdos_necessary,
                                witness_from_prime_pair)
from vtcycles.oracles import brute_hamiltonian

from _independent import euclid_gcd, trial_division_prime


def test_primes_below_examples():
    assert primes_below(16) == [2, 3, 5, 7, 11, 13]
    assert primes_below(2) == []
    assert primes_below(0) == []


def test_is_prime_matches_trial_division():
    for n in range(0, 2000):
        assert is_prime(n) == trial_division_prime(n)
    assert is_prime(2 ** 31 - 1)          # Mersenne prime
    assert not is_prime(2 ** 32 + 1)      # 641 * 6700417


def test_gcd_worked_example():
    # 880 = 2^4*5*11, 8736 = 2^5*3*7*13
    assert math.gcd(880, 8736) == 16 == euclid_gcd(880, 8736)


def test_necessity_condition_examples():
    holds, split = trotter_erdos_necessary(2, 2)
    assert holds and split == (1, 1)
    assert trotter_erdos_necessary(2, 3) == (False, None)
    assert trotter_erdos_necessary(880, 8736) == (False, None)


def test_necessity_agrees_with_oracle_on_c2xc3():
    assert brute_hamiltonian(directed_cycle_product(2, 3)) is None


def test_gap_bound_examples():
    assert divisibility_gap_bound(880, 8736) == 16
    assert divisibility_gap_bound(2, 2) == 0     # Hamiltonian product
    assert divisibility_gap_bound(2, 4) == 0     # split (1,1) works


def test_witness_certificate_accepts_the_main_instance():
    cert = prime_partitionable_check(16, 880, 8736)
    assert cert.valid and len(cert.splits) == 15
    for s in cert.splits:
        assert s.shares_factor
        # even d1 shares 2 with 880; odd d1 leaves the evidence to one side
        if s.d1 % 2 == 0:
            assert s.g1 >= 2
    # independent re-validation with a second gcd implementation
    for s in cert.splits:
        assert euclid_gcd(880, s.d1) >= 2 or euclid_gcd(8736, s.d2) >= 2


def test_witness_certificate_rejections():
    cert = prime_partitionable_check(5, 30, 5)
    assert not cert.valid       # split (1,4): gcd(30,1)=1 and gcd(5,4)=1
    assert "1,4" in cert.reason.replace("(", "").replace(")", "")
    cert = prime_partitionable_check(2, 2, 4)
    assert not cert.valid       # gcd is 2 = d but split (1,1) fails both
    with pytest.raises(ValueError):
        prime_partitionable_check(1, 5, 5)


def test_witness_certificate_gcd_mismatch():
    cert = prime_partitionable_check(4, 8, 10)   # gcd is 2, not 4
    assert not cert.valid and "gcd" in cert.reason


def test_search_smallest_is_sixteen():
    hits = search_prime_partitionable(20)
    assert [d for d, _, _ in hits] == [16]
    d, (p1, p2), cert = hits[0]
    assert cert.valid
    # re-validate the returned certificate from scratch
    again = prime_partitionable_check(d, cert.n1, cert.n2)
    assert again.valid
    assert euclid_gcd(cert.n1, cert.n2) == 16


def test_search_finds_nothing_below_sixteen():
    assert search_prime_partitionable(15) == []


def test_search_rejects_large_bound():
    with pytest.raises(ValueError):
        search_prime_partitionable(41)


def test_search_full_range_reproduces_known_sequence():
    # exhaustive bipartition scan to the cap; matches the classical list of
    # prime-partitionable numbers below 40 (16, 22, 34, 36)
    hits = search_prime_partitionable(40)
    assert [d for d, _, _ in hits] == [16, 22, 34, 36]
    for d, _, cert in hits:
        assert cert.valid
        assert euclid_gcd(cert.n1, cert.n2) == d


def test_motohashi_pair_examples():
    pairs = {m.p: m.q for m in motohashi_pairs(100)}
    assert pairs[5] == 11
    assert 11 ** 25 < 5 ** 41
    # p = 2 is listed (3^25 < 2^41 exactly) but fails the later size guard
    assert pairs[2] == 3
    assert 3 ** 25 < 2 ** 41
    # p = 3 has no admissible q: 7^25 >= 3^41
    assert 3 not in pairs
    assert 7 ** 25 >= 3 ** 41


def test_witness_from_prime_pair_main_instance():
    wit = witness_from_prime_pair(5, 11)
    assert (wit.d, wit.n1, wit.n2) == (16, 880, 8736)
    assert wit.certificate.valid
    assert wit.n == 7_687_680
    assert abs(wit.ln_n - math.log(7_687_680)) < 1e-12
    assert wit.d / wit.ln_n >= 1.0          # 16 / 15.855... ~ 1.009


def test_witness_from_prime_pair_guards():
    with pytest.raises(ValueError, match="size guard"):
        witness_from_prime_pair(2, 3)       # 4 = p^2 <= p+q = 5
    with pytest.raises(ValueError, match="bound"):
        witness_from_prime_pair(3, 7)
    with pytest.raises(ValueError, match="1 mod"):
        witness_from_prime_pair(5, 13)


def test_perimeter_gap_table():
    assert perimeter_gap_table(4) == []     # only guarded-out pairs exist
    rows = perimeter_gap_table(100)
    assert rows[0]["p"] == 5 and rows[0]["q"] == 11
    assert all(row["ratio"] >= 0.9 for row in rows)
    assert all(row["n1"] * row["n2"] == row["n"] for row in rows)
    by_pair = {(r["p"], r["q"]): r for r in rows}
    assert by_pair[(5, 11)]["d"] == 16


def test_motohashi_pair_dataclass():
    pair = MotohashiPair(5, 11, True)
    assert pair.bound_ok
