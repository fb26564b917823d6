import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vtcycles.digraph import Digraph, Graph, UNKNOWN
from vtcycles.gadgets import (complete_bidirected, cycle_digraph,
                              directed_cycle_product, four_cycle_chain)
from vtcycles.oracles import (brute_hamiltonian, brute_longest_cycle,
                              brute_longest_induced_cycle, brute_longest_path,
                              find_path_of_length, induced_cycles,
                              longest_cycles_pairwise_intersect,
                              max_disjoint_cycles)

from _independent import permutation_hamiltonian, subset_induced_cycles


def test_hamiltonian_c2xc2():
    cyc = brute_hamiltonian(directed_cycle_product(2, 2))
    assert cyc is not None and cyc.length == 4


def test_hamiltonian_c2xc3_absent():
    assert brute_hamiltonian(directed_cycle_product(2, 3)) is None


def test_hamiltonian_digon_and_cycle():
    assert brute_hamiltonian(cycle_digraph(2)).length == 2
    assert brute_hamiltonian(cycle_digraph(9)).length == 9


def test_hamiltonian_backtracking_branch():
    # n = 25 exceeds the DP cap, so the budgeted backtracking runs
    D = cycle_digraph(25)
    assert brute_hamiltonian(D, budget=10 ** 5).length == 25
    # C5 x C6 is not Hamiltonian (gcd 1); a tiny budget cannot prove that
    big = directed_cycle_product(5, 6)
    assert brute_hamiltonian(big, budget=50) is UNKNOWN


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=2, max_value=6), st.data())
def test_hamiltonian_agrees_with_permutation_oracle(n, data):
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    arcs = data.draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)))
    D = Digraph(n, arcs)
    assert (brute_hamiltonian(D) is not None) == permutation_hamiltonian(D)


def test_longest_cycle_c5():
    res = brute_longest_cycle(cycle_digraph(5))
    assert res.exact and res.best.length == 5  # perimeter gap 0


def test_longest_cycle_chain_is_four():
    res = brute_longest_cycle(four_cycle_chain(2))
    assert res.exact and res.best.length == 4


def test_longest_cycle_c2xc3_matches_enumeration():
    from vtcycles.cyclegraph import enumerate_directed_cycles

    D = directed_cycle_product(2, 3)
    res = brute_longest_cycle(D)
    cycles, truncated = enumerate_directed_cycles(D)
    assert not truncated
    assert res.exact
    # only arc-count patterns 2,3,5 are possible here; gap is 1, not 0
    assert res.best.length == max(c.length for c in cycles) == 5
    assert D.n - res.best.length == 1


def test_longest_cycle_budget_gives_inexact():
    res = brute_longest_cycle(complete_bidirected(8), budget=10)
    assert not res.exact


def test_longest_path_cycle_digraph():
    res = brute_longest_path(cycle_digraph(6))
    assert res.exact and res.best.length == 5


def test_longest_path_grows_with_chain_size():
    short = brute_longest_path(four_cycle_chain(2)).best.length
    long_ = brute_longest_path(four_cycle_chain(4)).best.length
    assert long_ > short
    assert short == 7 and long_ == 15  # chains have Hamilton paths


def test_find_path_of_length():
    D = four_cycle_chain(3)
    assert find_path_of_length(D, 3).length >= 3
    assert find_path_of_length(cycle_digraph(4), 9) is None


def test_induced_cycles_on_undirected_cycle():
    G = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
    cycles, exact = induced_cycles(G)
    assert exact and len(cycles) == 1 and len(cycles[0]) == 5


def test_induced_cycles_match_subset_oracle():
    # Petersen graph: all induced cycles found two independent ways
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5), (1, 6), (2, 7),
             (3, 8), (4, 9), (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)]
    G = Graph(10, edges)
    mine, exact = induced_cycles(G)
    assert exact
    assert {frozenset(c) for c in mine} == subset_induced_cycles(G)
    best = brute_longest_induced_cycle(G)
    assert best.exact and len(best.best) == max(len(c) for c in mine)


def test_induced_cycles_need_budget_beyond_cap():
    G = Graph(25, [(i, (i + 1) % 25) for i in range(25)])
    with pytest.raises(ValueError, match="budget"):
        induced_cycles(G)
    cycles, exact = induced_cycles(G, budget=10 ** 6)
    assert exact and len(cycles) == 1


def test_max_disjoint_cycles_chain():
    from vtcycles.cyclegraph import enumerate_directed_cycles

    D = four_cycle_chain(3)
    cycles, _ = enumerate_directed_cycles(D)
    four = [c for c in cycles if c.length == 4]
    count, exact = max_disjoint_cycles(four)
    assert exact and count == 3
    hit, known = max_disjoint_cycles(four, target=2)
    assert known and hit >= 2


def test_pairwise_intersection_question():
    assert longest_cycles_pairwise_intersect(cycle_digraph(6)) is True
    assert longest_cycles_pairwise_intersect(four_cycle_chain(3)) is False
    # both Hamilton cycles of C2xC2 share every vertex
    assert longest_cycles_pairwise_intersect(directed_cycle_product(2, 2)) is True


def test_hamiltonian_iff_circumference_is_n():
    for D in (cycle_digraph(5), directed_cycle_product(2, 2),
              directed_cycle_product(2, 3), directed_cycle_product(2, 4),
              four_cycle_chain(2), complete_bidirected(5)):
        ham = brute_hamiltonian(D) is not None
        res = brute_longest_cycle(D)
        assert res.exact
        assert ham == (res.best.length == D.n)
