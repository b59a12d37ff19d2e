from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from cutsetkit import (EdgeLabeling, NotAPermutationError, NotELError, NotSemimodularError, build_poset,
                       descent_walk, is_el_labeling, is_shelling, is_strongly_connected, is_supersolvable_labeling,
                       join_irreducibles, lattice_ops, stanley_labeling)
from cutsetkit.families import boolean, divisor, partition, partition_labeling, subspace
from cutsetkit.labelings import is_ascending, is_semimodular, lexicographic_order


def chain_poset(n):
    return build_poset([(i, i + 1) for i in range(n - 1)], n)


def inversions(word):
    return sum(1 for i, j in combinations(range(len(word)), 2) if word[i] > word[j])


def oracle_is_shelling(order):
    """Definition taken literally: every earlier c has an earlier c' with
    c ∩ d ⊆ c' ∩ d = d minus one element."""
    sets = [set(c) for c in order]
    for k, d in enumerate(sets):
        for c in sets[:k]:
            if not any(c & d <= cp & d and len(d - cp) == 1 for cp in sets[:k]):
                return False
    return True


# -- lattices ---------------------------------------------------------------

def test_boolean_lattice_ops():
    lat = lattice_ops(boolean(3))
    for x in range(8):
        for y in range(8):
            assert lat.join(x, y) == x | y
            assert lat.meet(x, y) == x & y
        assert lat.join(x, lat.bottom) == x


def test_fence_is_not_a_lattice(fence):
    fail = lattice_ops(fence)
    assert not fail
    assert fail.kind == "join" and fail.pair == (0, 3) and fail.candidates == ()


def test_join_irreducibles():
    assert join_irreducibles(boolean(3)) == [1, 2, 4]
    assert join_irreducibles(chain_poset(3)) == [1, 2]
    d12 = divisor(12)
    assert [d12.name(x) for x in join_irreducibles(d12)] == ["2", "3", "4"]


def test_partition_lattice_is_semimodular():
    assert is_semimodular(partition(3))
    assert is_semimodular(partition(4))


# -- Stanley labeling -------------------------------------------------------

def test_stanley_boolean3():
    lam = stanley_labeling(boolean(3))
    for (x, y), k in lam.labels.items():
        added = (y ^ x).bit_length()  # 1-based index of the atom added
        assert k == added


def test_stanley_chain():
    lam = stanley_labeling(chain_poset(3))
    assert lam.labels == {(0, 1): 1, (1, 2): 2}


def test_stanley_partition3_is_el():
    p = partition(3)
    assert is_el_labeling(p, stanley_labeling(p)).is_el


def test_stanley_rejects_pentagon():
    # 0 < a < b < 1 and 0 < c < 1: a, c cover 0 but 1 does not cover a
    pentagon = build_poset([(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)], 5)
    with pytest.raises(NotSemimodularError) as info:
        stanley_labeling(pentagon)
    assert set(info.value.pair) == {1, 3}


def test_stanley_rejects_bad_order():
    with pytest.raises(ValueError):
        stanley_labeling(chain_poset(3), order=[2, 1])


def test_stanley_with_other_linear_extension_is_el():
    b3 = boolean(3)
    lam = stanley_labeling(b3, order=[4, 1, 2])
    assert is_el_labeling(b3, lam).is_el


# -- EL verification --------------------------------------------------------

def test_boolean4_stanley_is_el():
    b4 = boolean(4)
    rep = is_el_labeling(b4, stanley_labeling(b4))
    assert rep.is_el
    assert rep.ascending_chain(0, 15) == (0, 1, 3, 7, 15)


def test_constant_labels_on_diamond_fail():
    diamond = build_poset([(0, 1), (0, 2), (1, 3), (2, 3)], 4)
    lam = EdgeLabeling({c: 1 for c in diamond.covers})
    rep = is_el_labeling(diamond, lam)
    assert not rep.is_el
    assert rep.intervals[(0, 3)].violation == "multiple_ascending"


def test_weakly_increasing_chain_labels_are_el():
    p = chain_poset(4)
    lam = EdgeLabeling({(0, 1): 2, (1, 2): 2, (2, 3): 5})
    assert is_el_labeling(p, lam).is_el


def test_not_lex_first_violation():
    diamond = build_poset([(0, 1), (0, 2), (1, 3), (2, 3)], 4)
    # ascending chain 0<1<3 reads (2, 3), the other chain reads (1, 0)
    lam = EdgeLabeling({(0, 1): 2, (1, 3): 3, (0, 2): 1, (2, 3): 0})
    rep = is_el_labeling(diamond, lam)
    assert rep.intervals[(0, 3)].violation == "not_lex_first"


def test_no_ascending_violation():
    diamond = build_poset([(0, 1), (0, 2), (1, 3), (2, 3)], 4)
    lam = EdgeLabeling({(0, 1): 2, (1, 3): 1, (0, 2): 3, (2, 3): 0})
    assert is_el_labeling(diamond, lam).intervals[(0, 3)].violation == "no_ascending"


# -- descent walk -----------------------------------------------------------

def test_walk_from_ascending_chain_is_trivial():
    b3 = boolean(3)
    lam = stanley_labeling(b3)
    assert descent_walk(b3, lam, (0, 1, 3, 7)) == [(0, 1, 3, 7)]


def test_walk_boolean3_reverse_chain():
    b3 = boolean(3)
    lam = stanley_labeling(b3)
    start = (0, 4, 6, 7)
    walk = descent_walk(b3, lam, start)
    assert lam.word(start) == (3, 2, 1)
    assert len(walk) - 1 == 3 == inversions(lam.word(start))
    assert lam.word(walk[-1]) == (1, 2, 3)


def test_walk_diamond_single_step():
    diamond = build_poset([(0, 1), (0, 2), (1, 3), (2, 3)], 4)
    lam = EdgeLabeling({(0, 1): 1, (1, 3): 2, (0, 2): 2, (2, 3): 1})
    assert descent_walk(diamond, lam, (0, 2, 3)) == [(0, 2, 3), (0, 1, 3)]


def test_walk_detects_non_el():
    diamond = build_poset([(0, 1), (0, 2), (1, 3), (2, 3)], 4)
    lam = EdgeLabeling({(0, 1): 2, (1, 3): 1, (0, 2): 2, (2, 3): 1})
    with pytest.raises(NotELError):
        descent_walk(diamond, lam, (0, 1, 3))


@pytest.mark.parametrize("make", [lambda: boolean(4), lambda: partition(4), lambda: subspace(2, 3)],
                         ids=["boolean4", "partition4", "subspace23"])
def test_walk_steps_are_exchanges_and_decrease(make):
    p = make()
    lam = stanley_labeling(p)
    target = lexicographic_order(p, lam)[0]
    for c in p.maximal_chains:
        walk = descent_walk(p, lam, c)
        assert walk[-1] == target
        for a, b in zip(walk, walk[1:]):
            assert len(set(a) ^ set(b)) == 2
            assert lam.word(b) < lam.word(a)


# -- supersolvable and shellings --------------------------------------------

def test_supersolvable_boolean3():
    b3 = boolean(3)
    assert is_supersolvable_labeling(b3, stanley_labeling(b3))


def test_repeated_labels_are_not_supersolvable():
    p = chain_poset(3)
    assert not is_supersolvable_labeling(p, EdgeLabeling({(0, 1): 1, (1, 2): 1}))


def test_partition4_supersolvable_labeling():
    p = partition(4)
    lam = partition_labeling(4)
    assert all(sorted(lam.word(c)) == [1, 2, 3] for c in p.maximal_chains)
    assert is_supersolvable_labeling(p, lam)


def test_shelling_single_chain():
    p = chain_poset(3)
    assert is_shelling(p, p.maximal_chains)


def test_shelling_boolean3_lex():
    b3 = boolean(3)
    order = lexicographic_order(b3, stanley_labeling(b3))
    assert is_shelling(b3, order)


def test_shelling_diamond_any_order():
    diamond = build_poset([(0, 1), (0, 2), (1, 3), (2, 3)], 4)
    chains = list(diamond.maximal_chains)
    assert is_shelling(diamond, chains)
    assert is_shelling(diamond, chains[::-1])


def test_bad_order_is_not_a_shelling():
    b3 = boolean(3)
    first = [(0, 1, 3, 7), (0, 4, 6, 7)]
    rest = [c for c in b3.maximal_chains if c not in first]
    assert not is_shelling(b3, first + rest)


def test_shelling_requires_permutation():
    b3 = boolean(3)
    with pytest.raises(NotAPermutationError):
        is_shelling(b3, list(b3.maximal_chains)[:-1])


@settings(max_examples=60)
@given(st.permutations(list(boolean(3).maximal_chains)))
def test_shelling_matches_definition_boolean3(order):
    assert is_shelling(boolean(3), order) == oracle_is_shelling(order)


@settings(max_examples=60)
@given(st.permutations(list(partition(3).maximal_chains)))
def test_shelling_matches_definition_partition3(order):
    assert is_shelling(partition(3), order) == oracle_is_shelling(order)


@pytest.mark.parametrize("make", [lambda: boolean(4), lambda: partition(3), lambda: partition(4),
                                  lambda: subspace(2, 2), lambda: subspace(3, 2), lambda: divisor(72)],
                         ids=["B4", "Pi3", "Pi4", "L(2,2)", "L(3,2)", "D72"])
def test_el_shellable_chain_of_implications(make):
    p = make()
    lam = stanley_labeling(p)
    assert is_el_labeling(p, lam).is_el
    order = lexicographic_order(p, lam)
    assert is_ascending(lam.word(order[0]))
    assert is_shelling(p, order)
    assert is_strongly_connected(p)
