from itertools import permutations

import pytest
from hypothesis import given, settings

from cutsetkit import (CycleError, NotComparableError, Poset, SelfLoopError, bound_augment, build_poset,
                       compute_grading, interval, is_strongly_connected, leq, level_sets, maximal_chains)
from cutsetkit.errors import PosetError
from cutsetkit.families import boolean
from cutsetkit.poset import is_antichain

from conftest import oracle_chains, posets


def test_build_reduces_transitive_pairs():
    p = build_poset([(0, 1), (1, 2), (0, 2)], 3)
    assert p.covers == ((0, 1), (1, 2))


def test_single_and_empty():
    p = build_poset([], 1)
    assert p.n == 1 and p.covers == ()
    assert maximal_chains(p) == [(0,)]
    assert maximal_chains(build_poset([], 0)) == []


def test_cycle_has_witness():
    with pytest.raises(CycleError) as info:
        build_poset([(0, 1), (1, 0)], 2)
    assert info.value.cycle[0] == info.value.cycle[-1]
    assert set(info.value.cycle) == {0, 1}


def test_longer_cycle_witness_is_a_real_cycle():
    pairs = [(0, 1), (1, 2), (2, 3), (3, 1), (0, 4)]
    with pytest.raises(CycleError) as info:
        build_poset(pairs, 5)
    cyc = info.value.cycle
    assert all((cyc[i], cyc[i + 1]) in pairs for i in range(len(cyc) - 1))


def test_self_loop_rejected():
    with pytest.raises(SelfLoopError):
        build_poset([(1, 1)], 2)


def test_constructor_rejects_non_reduced_covers():
    with pytest.raises(PosetError):
        Poset(3, ((0, 1), (1, 2), (0, 2)))


def test_leq():
    chain = build_poset([(0, 1), (1, 2)], 3)
    assert leq(chain, 0, 2)
    assert not leq(chain, 2, 0)
    assert all(leq(chain, x, x) for x in range(3))
    assert not leq(build_poset([], 2), 0, 1)


def test_interval_of_example_E(E):
    iv = interval(E, E.index("1"), E.index("200"))
    assert [E.name(v) for v in iv.embedding] == ["1", "2", "4", "5", "25", "200"]
    # brute-force divisibility check of the element set
    values = [int(E.name(v)) for v in range(E.n)]
    assert sorted(v for v in values if 200 % v == 0) == [1, 2, 4, 5, 25, 200]
    assert iv.sub.is_bounded
    assert iv.sub.name(iv.sub.bottom) == "1" and iv.sub.name(iv.sub.top) == "200"


def test_interval_trivial_and_whole():
    b3 = boolean(3)
    assert interval(b3, 5, 5).sub.n == 1
    whole = interval(b3, 0, 7)
    assert whole.sub == b3 and whole.embedding == tuple(range(8))


def test_interval_requires_comparable():
    with pytest.raises(NotComparableError):
        interval(boolean(2), 1, 2)


def test_maximal_chains_boolean3_are_atom_orderings():
    b3 = boolean(3)
    expected = set()
    for order in permutations(range(3)):
        s, chain = 0, [0]
        for j in order:
            s |= 1 << j
            chain.append(s)
        expected.add(tuple(chain))
    assert set(maximal_chains(b3)) == expected
    assert len(maximal_chains(b3)) == 6
    assert maximal_chains(b3) == sorted(maximal_chains(b3))


def test_maximal_chains_example_E(E):
    chains = maximal_chains(E)
    assert chains == oracle_chains(E)
    assert len(chains) == 7
    assert all(len(c) - 1 == 4 for c in chains)


def test_grading_boolean4_is_popcount():
    b4 = boolean(4)
    g = compute_grading(b4)
    assert g.rank == tuple(bin(s).count("1") for s in range(16))
    assert g.labels == (0, 1, 2, 3, 4)


def test_grading_example_E(E):
    g = compute_grading(E)
    by_name = {E.name(x): g.rank[x] for x in range(E.n)}
    assert by_name == {"1": 0, "2": 1, "3": 1, "5": 1, "4": 2, "25": 2, "30": 2,
                       "200": 3, "300": 3, "600": 4}


def test_fence_is_graded(fence):
    # a<c, b<c, b<d: every maximal chain has two elements
    g = compute_grading(fence)
    assert g and g.rank == (0, 0, 1, 1)


def test_grading_failure_witness(uneven):
    g = compute_grading(uneven)
    assert not g
    assert g.kind == "chain_images"
    a, b = g.chains
    assert {a, b} <= set(maximal_chains(uneven)) and len(a) != len(b)


def test_grading_failure_cover_jump():
    p = build_poset([(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)], 5)
    g = compute_grading(p)
    assert g.kind == "cover_jump" and g.cover == (3, 4)
    a, b = g.chains
    assert {a, b} <= set(maximal_chains(p)) and len(a) != len(b)


def test_level_sets():
    assert [len(s) for s in level_sets(boolean(3), compute_grading(boolean(3)))] == [1, 3, 3, 1]
    one = build_poset([], 1)
    assert level_sets(one, compute_grading(one)) == [(0,)]


def test_level_sets_example_E(E):
    levels = level_sets(E, compute_grading(E))
    assert [sorted(E.name(x) for x in s) for s in levels] == [
        ["1"], ["2", "3", "5"], ["25", "30", "4"], ["200", "300"], ["600"]]


def test_bound_augment():
    diamond = bound_augment(build_poset([], 2))
    assert diamond.n == 4 and diamond.is_bounded
    assert len(maximal_chains(diamond)) == 2
    b3 = boolean(3)
    assert bound_augment(b3) is b3
    two_chains = build_poset([(0, 1), (2, 3)], 4)
    aug = bound_augment(two_chains)
    assert aug.n == 6 and aug.is_bounded
    assert aug.bottom == 4 and aug.top == 5
    assert set(aug.covers) == {(0, 1), (2, 3), (4, 0), (4, 2), (1, 5), (3, 5)}


# -- properties -------------------------------------------------------------

@given(posets())
def test_reduction_round_trip(p):
    closure = [(x, y) for x in range(p.n) for y in range(p.n) if x != y and p.leq(x, y)]
    assert build_poset(closure, p.n).covers == p.covers


@given(posets())
def test_leq_is_a_partial_order(p):
    for x in range(p.n):
        assert p.leq(x, x)
        for y in range(p.n):
            if x != y:
                assert not (p.leq(x, y) and p.leq(y, x))
            for z in range(p.n):
                if p.leq(x, y) and p.leq(y, z):
                    assert p.leq(x, z)


@given(posets())
def test_chains_match_oracle(p):
    assert maximal_chains(p) == oracle_chains(p)
    assert p.count_maximal_chains() == len(maximal_chains(p))


@given(posets())
def test_comparable_pairs_extend_to_maximal_chain(p):
    chains = [set(c) for c in maximal_chains(p)]
    for x in range(p.n):
        for y in range(p.n):
            if p.lt(x, y):
                assert any({x, y} <= c for c in chains)


@given(posets())
def test_grading_iff_equal_chain_lengths(p):
    g = compute_grading(p)
    lengths = {len(c) for c in maximal_chains(p)}
    assert bool(g) == (len(lengths) <= 1)
    if g:
        for c in maximal_chains(p):
            assert [g.rank[x] for x in c] == list(g.labels)


@given(posets())
def test_level_sets_partition_into_antichains(p):
    g = compute_grading(p)
    if g:
        levels = level_sets(p, g)
        assert sorted(x for s in levels for x in s) == list(range(p.n))
        assert all(is_antichain(p, s) for s in levels)


@settings(max_examples=150)
@given(posets())
def test_bound_augment_preserves_strong_connectivity(p):
    aug = bound_augment(p)
    assert aug.is_bounded or p.n == 0 and aug.n == 1
    assert is_strongly_connected(aug) == is_strongly_connected(p)
    assert bound_augment(aug) is aug
