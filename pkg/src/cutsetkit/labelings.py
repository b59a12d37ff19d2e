"""Lattice operations, edge labelings, EL verification and shellings.

Labels are integers.  A chain ``y0 < y1 < ... < yk`` has an ascent at
``yi`` when ``lam(y[i-1], y[i]) <= lam(y[i], y[i+1])`` and a descent
otherwise; it is ascending when every interior element is an ascent.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Optional, Sequence, Union

from .errors import (NotAPermutationError, NoJoinIrreducibleError, NotELError,
                     NotSemimodularError)
from .poset import Chain, Poset, bits, compute_grading


# -- lattices ---------------------------------------------------------------

@dataclass(frozen=True)
class LatticeFailure:
    """A pair without a least upper (``kind="join"``) or greatest lower bound.

    ``candidates`` lists the minimal upper (maximal lower) bounds: empty when
    the pair has no common bound at all, several when none is least.
    """

    kind: str
    pair: Optional[tuple[int, int]]
    candidates: tuple[int, ...]

    def __bool__(self):
        return False


class Lattice:
    """Join and meet tables over a finite poset that is a lattice."""

    def __init__(self, p: Poset, join_table, meet_table):
        self.poset = p
        self._join = join_table
        self._meet = meet_table

    def join(self, x: int, y: int) -> int:
        return self._join[x][y]

    def meet(self, x: int, y: int) -> int:
        return self._meet[x][y]

    @property
    def bottom(self) -> int:
        return self.poset.bottom

    @property
    def top(self) -> int:
        return self.poset.top

    def __repr__(self):
        return f"Lattice(n={self.poset.n})"


def _extreme(p: Poset, mask: int, up: bool) -> list[int]:
    # minimal (up=True) or maximal elements of the set `mask`
    rel = p.down if up else p.up
    return [v for v in bits(mask) if rel[v] & mask == 1 << v]


def lattice_ops(p: Poset) -> Union[Lattice, LatticeFailure]:
    if p.n == 0:
        return LatticeFailure("join", None, ())
    join = [[0] * p.n for _ in range(p.n)]
    meet = [[0] * p.n for _ in range(p.n)]
    for table, kind, rel in ((join, "join", p.up), (meet, "meet", p.down)):
        for x in range(p.n):
            for y in range(x, p.n):
                bound = _extreme(p, rel[x] & rel[y], up=kind == "join")
                if len(bound) != 1:
                    return LatticeFailure(kind, (x, y), tuple(bound))
                table[x][y] = table[y][x] = bound[0]
    return Lattice(p, join, meet)


def _as_lattice(p: Union[Poset, Lattice]) -> Lattice:
    if isinstance(p, Lattice):
        return p
    lat = lattice_ops(p)
    if not lat:
        raise ValueError(f"not a lattice: {lat}")
    return lat


def join_irreducibles(p: Union[Poset, Lattice]) -> list[int]:
    """Elements covering exactly one element, ordered by (height, index)."""
    q = p.poset if isinstance(p, Lattice) else p
    ji = [x for x in range(q.n) if len(q.lower_covers[x]) == 1]
    return sorted(ji, key=lambda x: (q.height_below[x], x))


def semimodularity_witness(p: Union[Poset, Lattice]) -> Optional[tuple[int, int]]:
    """A pair ``x, y`` covering ``x ∧ y`` whose join fails to cover both, if any."""
    lat = _as_lattice(p)
    q = lat.poset
    for m in range(q.n):
        for x, y in combinations(q.upper_covers[m], 2):
            j = lat.join(x, y)
            if (x, j) not in q.cover_set or (y, j) not in q.cover_set:
                return (x, y)
    return None


def is_semimodular(p: Union[Poset, Lattice]) -> bool:
    return semimodularity_witness(p) is None


# -- labelings --------------------------------------------------------------

@dataclass(frozen=True)
class EdgeLabeling:
    labels: Mapping[tuple[int, int], int]

    def __getitem__(self, cover: tuple[int, int]) -> int:
        return self.labels[cover]

    def word(self, chain: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.labels[(chain[i], chain[i + 1])] for i in range(len(chain) - 1))

    def covers_domain_of(self, p: Poset) -> bool:
        return set(self.labels) == p.cover_set


def is_ascending(word: Sequence[int]) -> bool:
    return all(word[i] <= word[i + 1] for i in range(len(word) - 1))


def stanley_labeling(p: Union[Poset, Lattice], order: Optional[Sequence[int]] = None) -> EdgeLabeling:
    """Label ``x ⋖ y`` by the position (from 1) in ``order`` of the first
    join irreducible ``z`` with ``x ∨ z = y``.

    ``order`` must list the join irreducibles as a linear extension of the
    lattice order; it defaults to :func:`join_irreducibles`.
    """
    lat = _as_lattice(p)
    q = lat.poset
    bad = semimodularity_witness(lat)
    if bad is not None:
        raise NotSemimodularError(bad)
    ji = join_irreducibles(lat)
    order = list(ji) if order is None else list(order)
    if sorted(order) != sorted(ji):
        raise ValueError("order must list each join irreducible exactly once")
    pos = {z: i for i, z in enumerate(order)}
    for a, b in combinations(order, 2):
        if q.lt(b, a):
            raise ValueError(f"order is not a linear extension: {b} < {a} but listed after")
    labels = {}
    for x, y in q.covers:
        for z in order:
            if lat.join(x, z) == y:
                labels[(x, y)] = pos[z] + 1
                break
        else:
            raise NoJoinIrreducibleError(f"no join irreducible z with {x} v z = {y}")
    return EdgeLabeling(labels)


@dataclass(frozen=True)
class IntervalRecord:
    """EL verdict on one interval.

    ``violation`` is ``None``, ``"no_ascending"``, ``"multiple_ascending"``
    or ``"not_lex_first"``; ``chains`` holds the offending chains.
    """

    ascending: Optional[Chain]
    violation: Optional[str] = None
    chains: tuple[Chain, ...] = ()


@dataclass
class ELReport:
    is_el: bool
    intervals: dict[tuple[int, int], IntervalRecord] = field(default_factory=dict)

    def violations(self) -> dict[tuple[int, int], IntervalRecord]:
        return {k: r for k, r in self.intervals.items() if r.violation}

    def ascending_chain(self, x: int, y: int) -> Optional[Chain]:
        return self.intervals[(x, y)].ascending


def check_interval(p: Poset, lam: EdgeLabeling, x: int, y: int) -> IntervalRecord:
    chains = p.saturated_chains(x, y)
    words = [lam.word(c) for c in chains]
    asc = [i for i, w in enumerate(words) if is_ascending(w)]
    if not asc:
        return IntervalRecord(None, "no_ascending")
    if len(asc) > 1:
        return IntervalRecord(None, "multiple_ascending", tuple(chains[i] for i in asc))
    a = asc[0]
    for i, w in enumerate(words):
        if i != a and not words[a] < w:
            return IntervalRecord(chains[a], "not_lex_first", (chains[i],))
    return IntervalRecord(chains[a])


def is_el_labeling(p: Poset, lam: EdgeLabeling) -> ELReport:
    """Check uniqueness and lexicographic minimality of ascending chains on
    every interval ``[x, y]`` with ``x < y``."""
    if not lam.covers_domain_of(p):
        raise ValueError("labeling domain differs from the cover relation")
    report = ELReport(True)
    for x in range(p.n):
        for y in bits(p.up[x] & ~(1 << x)):
            rec = check_interval(p, lam, x, y)
            report.intervals[(x, y)] = rec
            if rec.violation:
                report.is_el = False
    return report


def _first_descent(word: Sequence[int]) -> Optional[int]:
    for i in range(len(word) - 1):
        if word[i] > word[i + 1]:
            return i
    return None


def descent_walk(p: Poset, lam: EdgeLabeling, c: Sequence[int]) -> list[Chain]:
    """Straighten ``c`` into the ascending maximal chain one exchange at a time.

    At the first descent ``y_i`` the element is replaced by the middle of the
    ascending chain of ``[y_{i-1}, y_{i+1}]``.  Each step is a single
    exchange and strictly lowers the label word lexicographically.
    """
    chain = tuple(c)
    if chain not in set(p.maximal_chains):
        raise ValueError(f"{chain} is not a maximal chain")
    walk = [chain]
    for _ in range(len(p.maximal_chains)):
        i = _first_descent(lam.word(chain))
        if i is None:
            return walk
        lo, hi = chain[i], chain[i + 2]
        middles = [z for z in p.upper_covers[lo] if (z, hi) in p.cover_set
                   and lam[(lo, z)] <= lam[(z, hi)]]
        if len(middles) != 1:
            raise NotELError(f"interval [{lo}, {hi}] has {len(middles)} ascending chains")
        chain = chain[:i + 1] + (middles[0],) + chain[i + 2:]
        walk.append(chain)
    raise NotELError("descent walk did not terminate")


def is_supersolvable_labeling(p: Poset, lam: EdgeLabeling) -> bool:
    """EL-labeling whose every maximal chain word is a permutation of ``1..n``."""
    g = compute_grading(p)
    if not p.is_bounded or not g:
        return False
    n = len(g.labels) - 1
    target = list(range(1, n + 1))
    if any(sorted(lam.word(c)) != target for c in p.maximal_chains):
        return False
    return is_el_labeling(p, lam).is_el


# -- shellings --------------------------------------------------------------

def lexicographic_order(p: Poset, lam: EdgeLabeling) -> list[Chain]:
    """Maximal chains sorted by label word, ties broken by element sequence."""
    return sorted(p.maximal_chains, key=lambda c: (lam.word(c), c))


def is_shelling(p: Poset, order: Sequence[Sequence[int]]) -> bool:
    """Whether each chain ``d`` meets the union of earlier chains in a union
    of codimension-one faces: for every earlier ``c`` some earlier ``c'``
    has ``c ∩ d ⊆ c' ∩ d = d \\ {x}``."""
    order = [tuple(c) for c in order]
    if sorted(order) != sorted(p.maximal_chains) or len(set(order)) != len(order):
        raise NotAPermutationError("order is not a permutation of the maximal chains")
    sets = [frozenset(c) for c in order]
    for k in range(1, len(sets)):
        d = sets[k]
        # elements x for which d \ {x} is already contained in an earlier chain
        free = {next(iter(d - c)) for c in sets[:k] if len(d - c) == 1}
        for c in sets[:k]:
            if not (d - c) & free:
                return False
    return True
