"""Backtracking enumeration of vertex sets meeting every edge exactly once.

Shared by antichain-cutset enumeration (edges = maximal chains) and exact
transversals of uniform hypergraphs, so the poset and hypergraph results run through
one code path.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .poset import bits


def exact_hitting_sets(edges: Sequence[int], limit: Optional[int] = None) -> list[tuple[int, ...]]:
    """All vertex sets meeting each edge (a vertex bitmask) in exactly one vertex.

    Only vertices lying on some edge are considered.  At each node the
    unsatisfied edge with the fewest remaining candidates is branched on,
    candidates in ascending order.  Choosing ``v`` satisfies every edge
    through ``v`` and forbids the other vertices of those edges.

    Results are sorted; ``limit`` stops the search after that many sets.
    """
    m = len(edges)
    if m == 0:
        return [()]
    through: dict[int, int] = {}
    for i, e in enumerate(edges):
        for v in bits(e):
            through[v] = through.get(v, 0) | (1 << i)
    # vertices made unusable once v is chosen
    blocked = {}
    for v, mask in through.items():
        acc = 0
        for i in bits(mask):
            acc |= edges[i]
        blocked[v] = acc

    found: list[tuple[int, ...]] = []

    def pick(unsat: int, forbidden: int) -> int:
        best, best_count = 0, -1
        for i in bits(unsat):
            c = (edges[i] & ~forbidden).bit_count()
            if best_count < 0 or c < best_count:
                best, best_count = edges[i] & ~forbidden, c
                if c <= 1:
                    break
        return best

    chosen: list[int] = []
    stack = [(iter(bits(pick((1 << m) - 1, 0))), (1 << m) - 1, 0)]
    while stack:
        it, unsat, forbidden = stack[-1]
        v = next(it, None)
        if v is None:
            stack.pop()
            if chosen:
                chosen.pop()
            continue
        rest = unsat & ~through[v]
        chosen.append(v)
        if rest == 0:
            found.append(tuple(sorted(chosen)))
            chosen.pop()
            if limit is not None and len(found) >= limit:
                break
            continue
        forb = forbidden | blocked[v]
        stack.append((iter(bits(pick(rest, forb))), rest, forb))
    return sorted(found)


def brute_force_hitting_sets(n: int, edges: Sequence[int]) -> list[tuple[int, ...]]:
    """Reference oracle: filter all ``2**n`` subsets."""
    out = []
    for s in range(1 << n):
        if all((s & e).bit_count() == 1 for e in edges):
            out.append(tuple(bits(s)))
    return sorted(out)
