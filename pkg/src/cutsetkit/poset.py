"""Finite posets on dense integer elements ``0..n-1``.

Relations are stored as bitmasks: ``p.up[x]`` has bit ``y`` set iff ``x <= y``
and ``p.down[y]`` has bit ``x`` set iff ``x <= y``.  Chains and element sets
are plain tuples sorted ascending, so every output is deterministic.

>>> p = build_poset([(0, 1), (1, 2), (0, 2)], 3)
>>> p.covers
((0, 1), (1, 2))
>>> maximal_chains(p)
[(0, 1, 2)]
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence, Union

from .errors import CycleError, NotComparableError, PosetError, SelfLoopError

Chain = tuple[int, ...]


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _find_cycle(n: int, succ: Sequence[Sequence[int]]) -> Optional[list[int]]:
    color = [0] * n  # 0 new, 1 on stack, 2 done
    parent = [-1] * n
    for root in range(n):
        if color[root]:
            continue
        stack = [(root, iter(succ[root]))]
        color[root] = 1
        while stack:
            v, it = stack[-1]
            w = next(it, None)
            if w is None:
                color[v] = 2
                stack.pop()
            elif color[w] == 0:
                color[w] = 1
                parent[w] = v
                stack.append((w, iter(succ[w])))
            elif color[w] == 1:
                cycle = [v]
                while cycle[-1] != w:
                    cycle.append(parent[cycle[-1]])
                cycle.reverse()
                return cycle + [w]
    return None


def _closure(n: int, pairs: Iterable[tuple[int, int]]) -> tuple[list[int], list[int]]:
    """Reflexive-transitive closure as (up, down) bitmask lists."""
    succ: list[set[int]] = [set() for _ in range(n)]
    for x, y in pairs:
        if not (0 <= x < n and 0 <= y < n):
            raise PosetError(f"pair ({x}, {y}) out of range for {n} elements")
        if x == y:
            raise SelfLoopError(x)
        succ[x].add(y)
    ordered = [sorted(s) for s in succ]
    cycle = _find_cycle(n, ordered)
    if cycle is not None:
        raise CycleError(cycle)

    indeg = [0] * n
    for s in ordered:
        for y in s:
            indeg[y] += 1
    order = [v for v in range(n) if indeg[v] == 0]
    for v in order:
        for y in ordered[v]:
            indeg[y] -= 1
            if indeg[y] == 0:
                order.append(y)

    up = [1 << v for v in range(n)]
    for v in reversed(order):
        for y in ordered[v]:
            up[v] |= up[y]
    down = [0] * n
    for x in range(n):
        for y in bits(up[x]):
            down[y] |= 1 << x
    return up, down


def _reduce(n: int, up: Sequence[int], down: Sequence[int]) -> list[tuple[int, int]]:
    covers = []
    for x in range(n):
        above = up[x] & ~(1 << x)
        for y in bits(above):
            if above & down[y] & ~(1 << y) == 0:
                covers.append((x, y))
    return covers


@dataclass(frozen=True)
class Poset:
    """An immutable finite poset given by its cover relation.

    The constructor validates that ``covers`` is acyclic and transitively
    reduced; use :func:`build_poset` to start from an arbitrary relation.
    """

    n: int
    covers: tuple[tuple[int, int], ...]
    names: Optional[tuple[str, ...]] = None
    up: tuple[int, ...] = field(init=False, repr=False, compare=False)
    down: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        covers = tuple(sorted((int(x), int(y)) for x, y in self.covers))
        if len(set(covers)) != len(covers):
            raise PosetError("duplicate cover pairs")
        if self.names is not None:
            names = tuple(str(s) for s in self.names)
            if len(names) != self.n:
                raise PosetError(f"expected {self.n} names, got {len(names)}")
            object.__setattr__(self, "names", names)
        up, down = _closure(self.n, covers)
        if _reduce(self.n, up, down) != list(covers):
            raise PosetError("cover relation is not transitively reduced")
        object.__setattr__(self, "covers", covers)
        object.__setattr__(self, "up", tuple(up))
        object.__setattr__(self, "down", tuple(down))

    def __len__(self):
        return self.n

    def leq(self, x: int, y: int) -> bool:
        return bool(self.up[x] >> y & 1)

    def lt(self, x: int, y: int) -> bool:
        return x != y and self.leq(x, y)

    def comparable(self, x: int, y: int) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def name(self, x: int) -> str:
        return self.names[x] if self.names is not None else str(x)

    def index(self, name: str) -> int:
        """Element index carrying display label ``name``."""
        if self.names is None:
            return int(name)
        try:
            return self._name_index[str(name)]
        except KeyError:
            raise KeyError(f"no element named {name!r}") from None

    @cached_property
    def _name_index(self) -> dict[str, int]:
        return {s: i for i, s in enumerate(self.names or ())}

    @cached_property
    def upper_covers(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for x, y in self.covers:
            out[x].append(y)
        return tuple(tuple(v) for v in out)

    @cached_property
    def lower_covers(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for x, y in self.covers:
            out[y].append(x)
        return tuple(tuple(v) for v in out)

    @cached_property
    def cover_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.covers)

    @cached_property
    def minimal(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.n) if not self.lower_covers[x])

    @cached_property
    def maximal(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.n) if not self.upper_covers[x])

    @cached_property
    def bottom(self) -> Optional[int]:
        """The least element, if there is one."""
        return self.minimal[0] if len(self.minimal) == 1 else None

    @cached_property
    def top(self) -> Optional[int]:
        return self.maximal[0] if len(self.maximal) == 1 else None

    @property
    def is_bounded(self) -> bool:
        return self.bottom is not None and self.top is not None

    @cached_property
    def height_below(self) -> tuple[int, ...]:
        """Length of the longest chain ending at each element."""
        h = [0] * self.n
        for x in self.linear_extension:
            for y in self.upper_covers[x]:
                h[y] = max(h[y], h[x] + 1)
        return tuple(h)

    @cached_property
    def linear_extension(self) -> tuple[int, ...]:
        """Elements sorted by (number of elements below, index)."""
        return tuple(sorted(range(self.n), key=lambda x: (self.down[x].bit_count(), x)))

    @cached_property
    def maximal_chains(self) -> tuple[Chain, ...]:
        chains: list[Chain] = []
        for m in self.minimal:
            chains.extend(self._saturated_from(m, None))
        return tuple(sorted(chains))

    def saturated_chains(self, a: int, b: int) -> list[Chain]:
        """Maximal chains of the interval ``[a, b]``, lexicographically sorted."""
        if not self.leq(a, b):
            return []
        return sorted(self._saturated_from(a, b))

    def _saturated_from(self, a: int, b: Optional[int]) -> list[Chain]:
        allowed = self.down[b] if b is not None else -1
        first = self._next_in(a, b, allowed)
        if first is None:
            return [(a,)]
        out: list[Chain] = []
        path = [a]
        stack = [iter(first)]
        while stack:
            w = next(stack[-1], None)
            if w is None:
                stack.pop()
                path.pop()
                continue
            path.append(w)
            nxt = self._next_in(w, b, allowed)
            if nxt is None:
                out.append(tuple(path))
                path.pop()
            else:
                stack.append(iter(nxt))
        return out

    def _next_in(self, v: int, b: Optional[int], allowed: int) -> Optional[list[int]]:
        # None marks the end of a saturated chain
        if v == b:
            return None
        nxt = [w for w in self.upper_covers[v] if allowed >> w & 1]
        return nxt if nxt or b is not None else None

    def count_maximal_chains(self) -> int:
        """Number of maximal chains, by dynamic programming over covers."""
        count = [0] * self.n
        for x in reversed(self.linear_extension):
            count[x] = sum(count[y] for y in self.upper_covers[x]) or 1
        return sum(count[m] for m in self.minimal)


def build_poset(pairs: Iterable[tuple[int, int]], n: int, names: Optional[Sequence[str]] = None) -> Poset:
    """Poset generated by ``pairs``; the relation is closed and then reduced to covers."""
    up, down = _closure(n, pairs)
    covers = _reduce(n, up, down)
    return Poset(n, tuple(covers), tuple(names) if names is not None else None)


def leq(p: Poset, x: int, y: int) -> bool:
    return p.leq(x, y)


@dataclass(frozen=True)
class Interval:
    bottom: int
    top: int
    sub: Poset
    embedding: tuple[int, ...]


def interval(p: Poset, x: int, y: int) -> Interval:
    """Closed interval ``[x, y]`` as an induced subposet with its embedding."""
    if not p.leq(x, y):
        raise NotComparableError(f"{p.name(x)} is not below {p.name(y)}")
    members = bits(p.up[x] & p.down[y])
    local = {v: i for i, v in enumerate(members)}
    covers = [(local[a], local[b]) for a, b in p.covers if a in local and b in local]
    names = tuple(p.names[v] for v in members) if p.names is not None else None
    return Interval(x, y, Poset(len(members), tuple(covers), names), tuple(members))


def induced(p: Poset, members: Iterable[int]) -> tuple[Poset, tuple[int, ...]]:
    """Induced subposet on ``members`` together with its embedding into ``p``."""
    members = sorted(set(members))
    local = {v: i for i, v in enumerate(members)}
    pairs = [(local[a], local[b]) for a in members for b in members if a != b and p.leq(a, b)]
    names = tuple(p.names[v] for v in members) if p.names is not None else None
    return build_poset(pairs, len(members), names), tuple(members)


def maximal_chains(p: Poset) -> list[Chain]:
    return list(p.maximal_chains)


@dataclass(frozen=True)
class Grading:
    """Ranks normalized so that minimal elements sit at 0."""

    rank: tuple[int, ...]
    labels: tuple[int, ...]

    @property
    def normalization(self) -> str:
        return "labels shifted to start at 0"


@dataclass(frozen=True)
class GradingFailure:
    """Why no grading exists.

    ``kind`` is ``"cover_jump"`` (``cover`` skips a rank) or
    ``"chain_images"`` (``chains`` are two maximal chains of different length).
    """

    kind: str
    cover: Optional[tuple[int, int]] = None
    chains: Optional[tuple[Chain, Chain]] = None

    def __bool__(self):
        return False


def _longest_chain_to(p: Poset, target: int) -> Chain:
    chain = [target]
    while p.lower_covers[chain[-1]]:
        v = chain[-1]
        chain.append(max(p.lower_covers[v], key=lambda u: (p.height_below[u], -u)))
    return tuple(reversed(chain))


def _extend_up(p: Poset, chain: Chain) -> Chain:
    out = list(chain)
    while p.upper_covers[out[-1]]:
        out.append(p.upper_covers[out[-1]][0])
    return tuple(out)


def compute_grading(p: Poset) -> Union[Grading, GradingFailure]:
    """Rank function by longest chain from below, or a witness that none exists.

    Finite posets are graded exactly when all maximal chains have the same
    length; the witness is either a cover that skips a rank or two maximal
    chains of different length.
    """
    rank = p.height_below
    for x, y in p.covers:
        if rank[y] != rank[x] + 1:
            # both chains share the segment above y; below it they have different lengths
            above = _extend_up(p, (y,))
            long_chain = _longest_chain_to(p, y)[:-1] + above
            short_chain = _longest_chain_to(p, x) + above
            return GradingFailure("cover_jump", cover=(x, y), chains=(long_chain, short_chain))
    tops = {rank[m] for m in p.maximal}
    if len(tops) > 1:
        lo = min(p.maximal, key=lambda m: (rank[m], m))
        hi = max(p.maximal, key=lambda m: (rank[m], -m))
        return GradingFailure("chain_images", chains=(_longest_chain_to(p, hi), _longest_chain_to(p, lo)))
    height = tops.pop() if tops else -1
    return Grading(tuple(rank), tuple(range(height + 1)))


def level_sets(p: Poset, g: Grading) -> list[tuple[int, ...]]:
    return [tuple(x for x in range(p.n) if g.rank[x] == r) for r in g.labels]


def bound_augment(p: Poset) -> Poset:
    """Add a least and/or greatest element when missing.

    New elements are appended: a new bottom takes index ``n``, then a new top
    takes the next free index.
    """
    q = p
    if q.bottom is None:
        pairs = list(q.covers) + [(q.n, m) for m in q.minimal]
        names = q.names + ("bottom",) if q.names is not None else None
        q = build_poset(pairs, q.n + 1, names)
    if q.top is None:
        pairs = list(q.covers) + [(m, q.n) for m in q.maximal]
        names = q.names + ("top",) if q.names is not None else None
        q = build_poset(pairs, q.n + 1, names)
    return q


def is_antichain(p: Poset, s: Iterable[int]) -> bool:
    s = list(s)
    return all(not p.comparable(a, b) for i, a in enumerate(s) for b in s[i + 1:])
