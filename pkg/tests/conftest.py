"""Shared fixtures, brute-force oracles and hypothesis strategies.

The oracles deliberately avoid the library's bitmask machinery: they work on
plain Python sets and the order relation only.
"""

from functools import cmp_to_key
from itertools import combinations

import pytest
from hypothesis import strategies as st

from cutsetkit import build_poset
from cutsetkit.families import example_E


def oracle_chains(p):
    """Maximal chains by brute force: all totally ordered subsets, then keep
    those contained in no other chain."""
    n = p.n
    chains = []
    for mask in range(1, 1 << n):
        s = [x for x in range(n) if mask >> x & 1]
        if all(p.leq(a, b) or p.leq(b, a) for a, b in combinations(s, 2)):
            chains.append(frozenset(s))
    maximal = [c for c in chains if not any(c < d for d in chains)]
    key = cmp_to_key(lambda a, b: 0 if a == b else (-1 if p.leq(a, b) else 1))
    return sorted(tuple(sorted(c, key=key)) for c in maximal)


def oracle_chain_sets(p):
    return {frozenset(c) for c in oracle_chains(p)}


def oracle_strongly_connected(chain_sets):
    """Breadth-first search over the pairwise symmetric-difference graph."""
    chains = list(chain_sets)
    if len(chains) <= 1:
        return True
    seen = {0}
    frontier = [0]
    while frontier:
        i = frontier.pop()
        for j in range(len(chains)):
            if j not in seen and len(chains[i] ^ chains[j]) == 2:
                seen.add(j)
                frontier.append(j)
    return len(seen) == len(chains)


def oracle_cutsets(n, chain_sets):
    out = []
    for mask in range(1 << n):
        s = {x for x in range(n) if mask >> x & 1}
        if all(len(s & c) == 1 for c in chain_sets):
            out.append(tuple(sorted(s)))
    return sorted(out)


def named(p, sets):
    """Element sets translated to display names, for readable assertions."""
    return [sorted(p.name(x) for x in s) for s in sets]


@st.composite
def posets(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    perm = draw(st.permutations(list(range(n))))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    return build_poset([(perm[i], perm[j]) for i, j in chosen], n)


@pytest.fixture
def E():
    return example_E()


@pytest.fixture
def fence():
    """a=0, b=1, c=2, d=3 with a<c, b<c, b<d."""
    return build_poset([(0, 2), (1, 2), (1, 3)], 4)


@pytest.fixture
def uneven():
    """0<1<2 and 0<3: maximal chains of sizes 3 and 2."""
    return build_poset([(0, 1), (1, 2), (0, 3)], 4)


# -- acceptance reporting ---------------------------------------------------

ACCEPTANCE: dict[int, tuple[str, bool, float, float]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        title, ok, elapsed, limit = ACCEPTANCE[num]
        bound = f" (limit {limit:g}s)" if limit else ""
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} AC{num:<2} {title}: {elapsed:.2f}s{bound}")
