"""Antichain cutsets: sets meeting every maximal chain in exactly one element."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .connectivity import is_pairwise_locally_strongly_connected, is_strongly_connected
from .poset import Grading, Poset, compute_grading, level_sets
from .search import brute_force_hitting_sets, exact_hitting_sets


def _mask(s: Iterable[int]) -> int:
    m = 0
    for v in s:
        m |= 1 << v
    return m


def chain_masks(p: Poset) -> list[int]:
    return [_mask(c) for c in p.maximal_chains]


def is_antichain_cutset(p: Poset, s: Iterable[int]) -> bool:
    sm = _mask(s)
    return all((c & sm).bit_count() == 1 for c in chain_masks(p))


def enumerate_antichain_cutsets(p: Poset, limit: Optional[int] = None) -> list[tuple[int, ...]]:
    """Every antichain cutset of ``p`` as a sorted tuple, in sorted order.

    The empty poset has exactly one cutset, the empty set.
    """
    return exact_hitting_sets(chain_masks(p), limit=limit)


def brute_force_cutsets(p: Poset) -> list[tuple[int, ...]]:
    return brute_force_hitting_sets(p.n, chain_masks(p))


def pairwise_disjoint(sets: Iterable[Iterable[int]]) -> bool:
    seen = 0
    for s in sets:
        m = _mask(s)
        if seen & m:
            return False
        seen |= m
    return True


@dataclass(frozen=True)
class LevelSetReport:
    """Cutset enumeration compared against level sets.

    ``applicable`` is true when ``p`` is strongly connected or
    pairwise-locally strongly connected; then the cutsets must be pairwise
    disjoint and coincide with the level sets, and ``violated`` flags any
    failure of that.
    """

    strongly_connected: bool
    pairwise_locally_strongly_connected: bool
    grading: Optional[Grading]
    cutsets: list[tuple[int, ...]]
    level_sets: Optional[list[tuple[int, ...]]]
    pairwise_disjoint: bool
    equals_level_sets: bool
    notes: list[str] = field(default_factory=list)
    empty: bool = False

    @property
    def applicable(self) -> bool:
        return not self.empty and (self.strongly_connected or self.pairwise_locally_strongly_connected)

    @property
    def violated(self) -> bool:
        return self.applicable and not (self.pairwise_disjoint and self.equals_level_sets)

    def to_json(self, poset_hash: str) -> dict:
        return {
            "poset_hash": poset_hash,
            "cutsets": [list(c) for c in self.cutsets],
            "is_level_sets": self.equals_level_sets,
            "hypotheses": {
                "strongly_connected": self.strongly_connected,
                "pairwise_locally_strongly_connected": self.pairwise_locally_strongly_connected,
                "graded": self.grading is not None,
            },
        }


def verify_level_set_theorem(p: Poset) -> LevelSetReport:
    sc = is_strongly_connected(p)
    plsc = is_pairwise_locally_strongly_connected(p)
    g = compute_grading(p)
    cuts = enumerate_antichain_cutsets(p)
    notes = []
    if g:
        levels = level_sets(p, g)
        equal = sorted(levels) == cuts
    else:
        levels, equal = None, False
        notes.append(f"not graded ({g.kind})")
    if p.n == 0:
        notes.append("empty poset: the empty set is a cutset but there are no level sets")
    elif not (sc or plsc):
        notes.append("neither connectivity hypothesis holds; nothing is asserted")
    return LevelSetReport(sc, plsc, g if g else None, cuts, levels, pairwise_disjoint(cuts), equal, notes,
                          empty=p.n == 0)
