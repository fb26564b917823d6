from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vtcycles.digraph import Digraph
from vtcycles.gadgets import (complete_bidirected, cycle_digraph,
                              directed_cycle_product, toroidal_gadget)
from vtcycles.groups import cayley_digraph
from vtcycles.longcycle import (dfs_long_cycle, expansion_check_transitive_bound,
                                expansion_exact, expansion_sampled, long_path)
from vtcycles.oracles import brute_longest_path
from vtcycles.verify import small_cayley_corpus

from _independent import subset_expansion_minimum


def test_expansion_complete_bidirected_k6():
    rep = expansion_exact(complete_bidirected(6))
    assert rep.exact
    assert rep.alpha_lower == Fraction(1, 2)
    assert rep.witness_set == {0, 1, 2, 3}  # ratio (6-4)/4


def test_expansion_directed_c6():
    rep = expansion_exact(cycle_digraph(6))
    assert rep.alpha_lower == Fraction(1, 4)
    assert rep.witness_set == {0, 1, 2, 3}


def test_expansion_digon():
    rep = expansion_exact(cycle_digraph(2))
    assert rep.alpha_lower == Fraction(1, 1)


def test_expansion_refuses_large_instances():
    with pytest.raises(ValueError, match="capped"):
        expansion_exact(complete_bidirected(21))


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=2, max_value=7), st.data())
def test_expansion_matches_subset_oracle(n, data):
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    arcs = data.draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)))
    D = Digraph(n, arcs)
    assert expansion_exact(D).alpha_lower == subset_expansion_minimum(D)


def test_sampled_expansion_upper_bounds_exact():
    D = directed_cycle_product(2, 4)
    exact = expansion_exact(D).alpha_lower
    sampled = expansion_sampled(D, samples=500, seed=0).alpha_lower
    assert sampled >= exact
    assert not expansion_sampled(D, samples=10).exact
    # same seed, same certificate
    again = expansion_sampled(D, samples=500, seed=0)
    assert again.alpha_lower == sampled
    assert expansion_sampled(D, samples=500, seed=0).witness_set == again.witness_set


def test_transitive_bound_holds_on_certified_inputs():
    # 1/4 >= 1/15 for the directed 6-cycle
    assert expansion_check_transitive_bound(cycle_digraph(6))
    assert expansion_check_transitive_bound(directed_cycle_product(2, 3))


def test_transitive_bound_can_fail_without_transitivity():
    # bidirected star on 13 vertices: diameter 2, but an 8-leaf set has
    # boundary ratio 1/8 < 1/6
    star = Digraph(13, [(0, v) for v in range(1, 13)]
                   + [(v, 0) for v in range(1, 13)])
    assert not expansion_check_transitive_bound(star)


def test_dfs_long_cycle_on_directed_cycle_returns_everything():
    for n in (2, 3, 5, 9, 12):
        res = dfs_long_cycle(cycle_digraph(n))
        assert res.cycle.length == n


def test_dfs_long_cycle_meets_guarantee_on_k9():
    res = dfs_long_cycle(complete_bidirected(9), alpha=Fraction(1, 2))
    assert res.guarantee == Fraction(3, 2)
    assert res.cycle.length >= 2  # ceil of the guarantee


def test_dfs_long_cycle_c3xc3_with_exact_alpha():
    D = directed_cycle_product(3, 3)
    alpha = expansion_exact(D).alpha_lower
    res = dfs_long_cycle(D, alpha=alpha)
    floor = -(-alpha.numerator * D.n // (3 * alpha.denominator))
    assert res.cycle.length >= floor


def test_dfs_long_cycle_requires_strong_connectivity():
    with pytest.raises(ValueError, match="strongly connected"):
        dfs_long_cycle(Digraph(3, [(0, 1), (1, 2)]))


def test_dfs_long_cycle_runs_clean_on_corpus():
    # internal set-size assertions raise on violation, so finishing is the test
    for _name, spec in small_cayley_corpus():
        D = cayley_digraph(spec)
        res = dfs_long_cycle(D, alpha=Fraction(1, 3 * D.directed_diameter()))
        assert res.meets_guarantee()


def test_long_path_on_directed_cycle():
    path = long_path(cycle_digraph(8), certified_transitive=True)
    assert path.length == 7


def test_long_path_c4xc4_reaches_diameter():
    D = directed_cycle_product(4, 4)
    path = long_path(D, certified_transitive=True)
    assert path.length >= 6  # the directed diameter
    assert path.length >= 1  # floor(sqrt(16)/3)


def test_long_path_toroidal_cross_checked():
    D = toroidal_gadget(1)
    path = long_path(D, certified_transitive=True)
    exact = brute_longest_path(D).best.length
    assert path.length <= exact
    assert path.length >= 1


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=2, max_value=7), st.data())
def test_dfs_long_cycle_valid_on_random_strong_digraphs(n, data):
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    extra = data.draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)))
    ring = [(i, (i + 1) % n) for i in range(n)]  # forces strong connectivity
    D = Digraph(n, ring + extra)
    res = dfs_long_cycle(D)
    assert 2 <= res.cycle.length <= n
