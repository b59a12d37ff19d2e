"""Uniform hypergraphs: strong connectivity, exact transversals, balanced colorings."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Sequence

from .connectivity import exchange_components, exchange_pairs
from .errors import HypergraphError, NotUniformError
from .poset import Poset
from .search import brute_force_hitting_sets, exact_hitting_sets


@dataclass(frozen=True)
class Hypergraph:
    """A ``d``-uniform hypergraph on vertices ``0..v-1``.

    Edges are stored as sorted tuples in sorted order.  Every vertex must lie
    on at least one edge: an isolated vertex could be added to any exact
    transversal, which would make transversals overlap for trivial reasons.
    """

    d: int
    v: int
    edges: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.d < 1:
            raise HypergraphError("edge size d must be at least 1")
        edges = []
        for e in self.edges:
            e = tuple(sorted(int(x) for x in e))
            if len(e) != self.d or len(set(e)) != self.d:
                raise NotUniformError(f"edge {e} does not have {self.d} distinct vertices", (len(set(e)), self.d))
            if e and not (0 <= e[0] and e[-1] < self.v):
                raise HypergraphError(f"edge {e} has a vertex outside 0..{self.v - 1}")
            edges.append(e)
        edges.sort()
        if len(set(edges)) != len(edges):
            raise HypergraphError("duplicate edges")
        covered = {x for e in edges for x in e}
        if len(covered) != self.v:
            missing = min(set(range(self.v)) - covered)
            raise HypergraphError(f"vertex {missing} lies on no edge")
        object.__setattr__(self, "edges", tuple(edges))

    def edge_masks(self) -> list[int]:
        return [sum(1 << x for x in e) for e in self.edges]


def from_poset(p: Poset) -> Hypergraph:
    """Vertices are the elements, edges are the maximal chains."""
    chains = p.maximal_chains
    sizes = sorted({len(c) for c in chains})
    if len(sizes) > 1:
        raise NotUniformError(f"maximal chains have sizes {sizes[0]} and {sizes[-1]}", (sizes[0], sizes[-1]))
    if not sizes:
        raise NotUniformError("the empty poset has no maximal chains")
    return Hypergraph(sizes[0], p.n, tuple(chains))


def is_strongly_connected_h(h: Hypergraph) -> bool:
    if len(h.edges) <= 1:
        return True
    return len(set(exchange_components(len(h.edges), exchange_pairs(h.edges)))) == 1


def exact_transversals(h: Hypergraph, limit: Optional[int] = None) -> list[tuple[int, ...]]:
    return exact_hitting_sets(h.edge_masks(), limit=limit)


def brute_force_transversals(h: Hypergraph) -> list[tuple[int, ...]]:
    return brute_force_hitting_sets(h.v, h.edge_masks())


@dataclass(frozen=True)
class BalancedColoring:
    color: tuple[int, ...]

    def classes(self) -> list[tuple[int, ...]]:
        d = max(self.color, default=-1) + 1
        return [tuple(x for x, c in enumerate(self.color) if c == k) for k in range(d)]


def is_valid_coloring(h: Hypergraph, color: Sequence[int]) -> bool:
    return all(len({color[x] for x in e}) == h.d for e in h.edges)


def _propagate(h: Hypergraph, comp: list[int], adj: dict[int, list[int]]) -> Optional[dict[int, int]]:
    """Coloring of one exchange component, forced from its first edge."""
    seed = h.edges[comp[0]]
    color = {x: k for k, x in enumerate(seed)}
    queue, seen = [comp[0]], {comp[0]}
    for i in queue:
        e = set(h.edges[i])
        for j in adj.get(i, ()):
            f = set(h.edges[j])
            (old,), (new,) = e - f, f - e
            # f keeps d-1 vertices of e, so the incoming vertex takes the outgoing color
            if color.setdefault(new, color[old]) != color[old]:
                return None
            if j not in seen:
                seen.add(j)
                queue.append(j)
    if any(len({color[x] for x in h.edges[i]}) != h.d for i in comp):
        return None
    return color


def balanced_coloring(h: Hypergraph) -> Optional[BalancedColoring]:
    """A ``d``-coloring with every edge rainbow, or ``None`` if none exists.

    Within one exchange component the coloring is forced once the first edge
    is colored ``0..d-1`` by ascending vertex; components are then matched
    up by searching over color permutations, first component fixed.
    """
    pairs = exchange_pairs(h.edges)
    labels = exchange_components(len(h.edges), pairs)
    adj: dict[int, list[int]] = {}
    for i, j in pairs:
        adj.setdefault(i, []).append(j)
        adj.setdefault(j, []).append(i)
    comps: dict[int, list[int]] = {}
    for i, lab in enumerate(labels):
        comps.setdefault(lab, []).append(i)
    local = []
    for lab in sorted(comps):
        col = _propagate(h, comps[lab], adj)
        if col is None:
            return None
        local.append(col)

    # place components that overlap already-colored vertices first
    order, touched = [], set()
    remaining = list(range(len(local)))
    while remaining:
        k = max(remaining, key=lambda r: (len(touched & local[r].keys()), -r))
        remaining.remove(k)
        order.append(local[k])
        touched |= local[k].keys()
    local = order

    perms = list(permutations(range(h.d)))
    assigned: dict[int, int] = {}

    def place(k: int) -> bool:
        if k == len(local):
            return True
        options = perms[:1] if k == 0 else perms
        for perm in options:
            added = []
            ok = True
            for x, c in local[k].items():
                c = perm[c]
                have = assigned.get(x)
                if have is None:
                    assigned[x] = c
                    added.append(x)
                elif have != c:
                    ok = False
                    break
            if ok and place(k + 1):
                return True
            for x in added:
                del assigned[x]
        return False

    if not place(0):
        return None
    return BalancedColoring(tuple(assigned[x] for x in range(h.v)))
