"""Chain-exchange graphs and the connectivity predicates on posets.

Two maximal chains are exchange-adjacent when their symmetric difference as
sets has two elements.  A poset is strongly connected when the exchange graph
on its maximal chains is connected; a poset with at most one maximal chain
counts as strongly connected.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import NotBoundedError
from .poset import Chain, Poset, bits, compute_grading, induced, interval


class _DisjointSets:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, a):
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def count(self):
        return sum(1 for i, p in enumerate(self.parent) if p == i)


def exchange_adjacent(c: Iterable[int], d: Iterable[int]) -> bool:
    return len(set(c) ^ set(d)) == 2


def exchange_pairs(sets: Sequence[Iterable[int]]) -> list[tuple[int, int]]:
    """Index pairs ``(i, j)``, ``i < j``, whose sets differ by a single exchange.

    Distinct sets with symmetric difference two have equal size and agree
    after dropping one element from each, so grouping by every
    one-element-deleted subset finds all adjacent pairs without a quadratic
    scan.
    """
    buckets: dict[frozenset, list[int]] = {}
    for i, s in enumerate(sets):
        s = frozenset(s)
        for x in s:
            buckets.setdefault(s - {x}, []).append(i)
    pairs = set()
    for members in buckets.values():
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                i, j = members[a], members[b]
                if i != j:
                    pairs.add((min(i, j), max(i, j)))
    return sorted(pairs)


def exchange_components(count: int, pairs: Iterable[tuple[int, int]]) -> list[int]:
    """Component label (smallest member index) of each of ``count`` nodes."""
    ds = _DisjointSets(count)
    for i, j in pairs:
        ds.union(i, j)
    return [ds.find(i) for i in range(count)]


@dataclass(frozen=True)
class ExchangeGraph:
    chains: tuple[Chain, ...]
    adjacency: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, p: Poset) -> "ExchangeGraph":
        chains = p.maximal_chains
        return cls(chains, tuple(exchange_pairs(chains)))

    @property
    def is_connected(self) -> bool:
        return len(set(exchange_components(len(self.chains), self.adjacency))) <= 1


def _chains_connected(chains: Sequence[Chain]) -> bool:
    if len(chains) <= 1:
        return True
    labels = exchange_components(len(chains), exchange_pairs(chains))
    return len(set(labels)) == 1


def is_strongly_connected(p: Poset) -> bool:
    return _chains_connected(p.maximal_chains)


def _memo(p: Poset) -> dict:
    # per-instance cache; posets are immutable so verdicts never go stale
    return p.__dict__.setdefault("_interval_verdicts", {})


def interval_strongly_connected(p: Poset, a: int, b: int) -> bool:
    """Whether ``[a, b]`` is strongly connected (memoized per poset)."""
    memo = _memo(p)
    key = (a, b)
    if key not in memo:
        memo[key] = _chains_connected(p.saturated_chains(a, b))
    return memo[key]


def non_strongly_connected_interval(p: Poset) -> Optional[tuple[int, int]]:
    """First interval ``[x, y]`` that is not strongly connected, if any."""
    for x in range(p.n):
        for y in bits(p.up[x]):
            if not interval_strongly_connected(p, x, y):
                return (x, y)
    return None


def is_locally_strongly_connected(p: Poset) -> bool:
    return non_strongly_connected_interval(p) is None


def is_pairwise_locally_strongly_connected(p: Poset) -> bool:
    """Every pair ``x, y`` lies in some strongly connected interval ``[a, b]``."""
    for x in range(p.n):
        for y in range(x, p.n):
            lower = bits(p.down[x] & p.down[y])
            upper = bits(p.up[x] & p.up[y])
            if not any(interval_strongly_connected(p, a, b) for a in lower for b in upper):
                return False
    return True


def _connected_within(p: Poset, members: int) -> bool:
    elems = bits(members)
    if len(elems) <= 1:
        return True
    ds = _DisjointSets(p.n)
    for x, y in p.covers:
        if members >> x & 1 and members >> y & 1:
            ds.union(x, y)
    return len({ds.find(v) for v in elems}) == 1


def is_connected(p: Poset) -> bool:
    """Zigzag connectivity, i.e. the Hasse diagram is a connected graph."""
    return _connected_within(p, (1 << p.n) - 1)


def open_interval(p: Poset, x: int, y: int) -> int:
    """Bitmask of the elements strictly between ``x`` and ``y``."""
    return p.up[x] & p.down[y] & ~(1 << x) & ~(1 << y)


def _open_height(p: Poset, members: int) -> int:
    """Length of the longest chain inside ``members``; -1 when empty."""
    if not members:
        return -1
    best = {}
    for v in p.linear_extension:
        if members >> v & 1:
            best[v] = max((best[u] + 1 for u in p.lower_covers[v] if members >> u & 1), default=0)
    return max(best.values())


@dataclass(frozen=True)
class LocalConnectivityReport:
    """Outcome of the open-interval connectivity criterion on a bounded poset.

    ``witness`` is a disconnected open interval of nonzero height when the
    hypothesis fails.
    """

    hypothesis_holds: bool
    conclusion_holds: bool
    witness: Optional[tuple[int, int]] = None

    @property
    def violated(self) -> bool:
        return self.hypothesis_holds and not self.conclusion_holds


def check_lemma_local_conn(p: Poset) -> LocalConnectivityReport:
    """Check "every open interval of nonzero height is connected => strongly connected"."""
    if not p.is_bounded:
        raise NotBoundedError("the open-interval criterion needs a bounded poset")
    witness = None
    for x in range(p.n):
        for y in bits(p.up[x]):
            members = open_interval(p, x, y)
            if _open_height(p, members) >= 1 and not _connected_within(p, members):
                witness = (x, y)
                break
        if witness:
            break
    return LocalConnectivityReport(witness is None, is_strongly_connected(p), witness)


def exchange_cardinalities_equal(p: Poset) -> bool:
    """``|m \\ n| == |n \\ m|`` for every pair of maximal chains."""
    chains = [frozenset(c) for c in p.maximal_chains]
    return all(len(m - n) == len(n - m) for i, m in enumerate(chains) for n in chains[i + 1:])


def every_interval_graded(p: Poset) -> bool:
    for x in range(p.n):
        for y in bits(p.up[x]):
            if not compute_grading(interval(p, x, y).sub):
                return False
    return True


def open_interval_poset(p: Poset, x: int, y: int) -> Poset:
    return induced(p, bits(open_interval(p, x, y)))[0]
