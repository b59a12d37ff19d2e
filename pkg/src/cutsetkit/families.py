"""Deterministic generators for the named posets and hypergraphs.

Element indices always follow a linear extension (rank first), and display
names carry the underlying object: subsets, partitions, divisors,
permutations in one-line notation, grid coordinates.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Sequence, Union

from .errors import InvalidParamError
from .hypergraphs import Hypergraph
from .labelings import EdgeLabeling
from .poset import Poset, build_poset

SUBSPACE_LIMIT = 2 ** 10

EXAMPLE_E = (1, 2, 3, 4, 5, 25, 30, 200, 300, 600)


def boolean(n: int) -> Poset:
    """Subsets of ``{1..n}`` by inclusion; element ``i`` is the subset with bitmask ``i``."""
    _check(n >= 0, "n must be non-negative")
    size = 1 << n
    covers = [(s, s | 1 << j) for s in range(size) for j in range(n) if not s >> j & 1]
    names = ["{" + ",".join(str(j + 1) for j in range(n) if s >> j & 1) + "}" for s in range(size)]
    return Poset(size, tuple(covers), tuple(names))


# -- subspace lattices ------------------------------------------------------

def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % k for k in range(2, int(q ** 0.5) + 1))


def _echelon_forms(q: int, n: int, k: int):
    """Reduced row echelon ``k x n`` matrices of rank ``k`` over GF(q)."""
    for pivots in combinations(range(n), k):
        free = [(r, c) for r in range(k) for c in range(pivots[r] + 1, n) if c not in pivots]
        for values in product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for r, c in enumerate(pivots):
                rows[r][c] = 1
            for (r, c), val in zip(free, values):
                rows[r][c] = val
            yield tuple(tuple(row) for row in rows)


def _span(q: int, n: int, rows) -> frozenset:
    vecs = set()
    for coeffs in product(range(q), repeat=len(rows)):
        vecs.add(tuple(sum(a * row[i] for a, row in zip(coeffs, rows)) % q for i in range(n)))
    return frozenset(vecs)


def subspace(q: int, n: int) -> Poset:
    """Subspaces of GF(q)^n by inclusion, enumerated through echelon forms."""
    _check(_is_prime(q), f"q={q} must be prime")
    _check(n >= 0, "n must be non-negative")
    _check(q ** n <= SUBSPACE_LIMIT, f"q^n = {q ** n} exceeds the {SUBSPACE_LIMIT} guard")
    forms = [(k, rows) for k in range(n + 1) for rows in _echelon_forms(q, n, k)]
    spans = [_span(q, n, rows) for _, rows in forms]
    covers = [(i, j) for i, (ki, _) in enumerate(forms) for j, (kj, _) in enumerate(forms)
              if kj == ki + 1 and spans[i] <= spans[j]]
    names = ["<" + ",".join("".join(map(str, r)) for r in rows) + ">" for _, rows in forms]
    return Poset(len(forms), tuple(covers), tuple(names))


# -- partition lattices -----------------------------------------------------

def _set_partitions(n: int):
    """Set partitions of ``range(n)`` as restricted growth strings."""
    if n == 0:
        yield ()
        return

    def grow(prefix, top):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for b in range(top + 2):
            yield from grow(prefix + [b], max(top, b))

    yield from grow([0], 0)


def _blocks(rgs) -> tuple[tuple[int, ...], ...]:
    out: dict[int, list[int]] = {}
    for i, b in enumerate(rgs):
        out.setdefault(b, []).append(i)
    return tuple(tuple(v) for v in out.values())


def partition_blocks(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """Blocks of each element of :func:`partition`, in index order."""
    parts = [_blocks(r) for r in _set_partitions(n)]
    return sorted(parts, key=lambda bl: (-len(bl), bl))


def partition(n: int) -> Poset:
    """Set partitions of ``{1..n}`` by refinement, finest at the bottom."""
    _check(n >= 0, "n must be non-negative")
    parts = partition_blocks(n)
    index = {bl: i for i, bl in enumerate(parts)}
    covers = []
    for i, bl in enumerate(parts):
        for a, b in combinations(range(len(bl)), 2):
            merged = [blk for k, blk in enumerate(bl) if k not in (a, b)] + [tuple(sorted(bl[a] + bl[b]))]
            covers.append((i, index[tuple(sorted(merged))]))
    names = ["|".join("".join(str(x + 1) for x in blk) for blk in bl) for bl in parts]
    return Poset(len(parts), tuple(sorted(covers)), tuple(names))


def partition_labeling(n: int) -> EdgeLabeling:
    """Merging blocks ``B`` and ``B'`` is labeled ``max(min B, min B')``, 1-based
    on ``{1..n}`` and shifted down by one so chain words permute ``1..n-1``."""
    parts = partition_blocks(n)
    index = {bl: i for i, bl in enumerate(parts)}
    labels = {}
    for i, bl in enumerate(parts):
        for a, b in combinations(range(len(bl)), 2):
            merged = [blk for k, blk in enumerate(bl) if k not in (a, b)] + [tuple(sorted(bl[a] + bl[b]))]
            # blocks are 0-based internally, so max of the minima is already the shifted label
            labels[(i, index[tuple(sorted(merged))])] = max(bl[a][0], bl[b][0])
    return EdgeLabeling(labels)


# -- divisibility -----------------------------------------------------------

def divisibility_set(values: Sequence[int]) -> Poset:
    """The given positive integers ordered by divisibility."""
    vals = sorted(set(int(v) for v in values))
    _check(all(v >= 1 for v in vals), "values must be positive integers")
    pairs = [(i, j) for i, a in enumerate(vals) for j, b in enumerate(vals) if i != j and b % a == 0]
    return build_poset(pairs, len(vals), [str(v) for v in vals])


def divisor(N: int) -> Poset:
    _check(N >= 1, "N must be a positive integer")
    return divisibility_set([d for d in range(1, N + 1) if N % d == 0])


def example_E() -> Poset:
    return divisibility_set(EXAMPLE_E)


# -- Bruhat order -----------------------------------------------------------

def inversions(w: Sequence[int]) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def bruhat_sym(n: int) -> Poset:
    """Permutations of ``{1..n}`` in Bruhat order.

    ``u ⋖ ut`` whenever ``t`` is a transposition (swapping two positions)
    and the inversion count goes up by exactly one.
    """
    _check(n >= 0, "n must be non-negative")
    perms = sorted(permutations(range(1, n + 1)), key=lambda w: (inversions(w), w))
    index = {w: i for i, w in enumerate(perms)}
    covers = []
    for w in perms:
        lw = inversions(w)
        for i, j in combinations(range(n), 2):
            u = list(w)
            u[i], u[j] = u[j], u[i]
            if inversions(u) == lw + 1:
                covers.append((index[w], index[tuple(u)]))
    sep = "" if n < 10 else "-"
    names = [sep.join(map(str, w)) for w in perms]
    return Poset(len(perms), tuple(sorted(covers)), tuple(names))


# -- grids and chessboards --------------------------------------------------

def grid(m: int, n: int, top: bool = False) -> Poset:
    """Product of chains with ``m`` and ``n`` elements; ``(i, j)`` has index ``i*n + j``.

    With ``top=True`` an extra greatest element is appended.
    """
    _check(m >= 1 and n >= 1, "grid sides must be positive")
    covers = []
    for i in range(m):
        for j in range(n):
            if i + 1 < m:
                covers.append((i * n + j, (i + 1) * n + j))
            if j + 1 < n:
                covers.append((i * n + j, i * n + j + 1))
    names = [f"({i},{j})" for i in range(m) for j in range(n)]
    size = m * n
    if top:
        covers.append((size - 1, size))
        names.append("top")
        size += 1
    return Poset(size, tuple(sorted(covers)), tuple(names))


def chessboard(a: int, b: int) -> Hypergraph:
    """Edges are the placements of ``a`` non-attacking rooks on an ``a x b`` board.

    Square ``(row, col)`` is vertex ``row*b + col``.
    """
    _check(1 <= a <= b, "chessboard needs 1 <= a <= b")
    edges = tuple(tuple(r * b + c for r, c in enumerate(cols)) for cols in permutations(range(b), a))
    return Hypergraph(a, a * b, edges)


# -- random instances -------------------------------------------------------

def random_poset(rng: random.Random, n: int, density: float) -> Poset:
    """Random order: each pair ``i < j`` related with probability ``density``,
    then indices shuffled."""
    perm = list(range(n))
    rng.shuffle(perm)
    pairs = [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return build_poset(pairs, n)


def _relabel(d: int, edges) -> Hypergraph:
    support = sorted({x for e in edges for x in e})
    index = {x: i for i, x in enumerate(support)}
    return Hypergraph(d, len(support), tuple(sorted({tuple(sorted(index[x] for x in e)) for e in edges})))


def random_hypergraph(rng: random.Random, d: int, v: int, m: int) -> Hypergraph:
    """``m`` random ``d``-subsets of ``v`` vertices, relabeled onto their support."""
    edges = {tuple(sorted(rng.sample(range(v), d))) for _ in range(m)}
    return _relabel(d, edges)


def random_exchange_hypergraph(rng: random.Random, d: int, v: int, m: int, balanced: bool = False) -> Hypergraph:
    """Strongly connected by construction: each new edge swaps one vertex of an
    earlier edge.  With ``balanced`` the vertices are split into ``d`` color
    classes and swaps stay inside a class."""
    color = [x % d for x in range(v)]
    rng.shuffle(color)
    by_color = [[x for x in range(v) if color[x] == k] for k in range(d)]
    if balanced:
        if any(not cls for cls in by_color):
            raise InvalidParamError("too few vertices for a balanced hypergraph")
        first = tuple(rng.choice(cls) for cls in by_color)
    else:
        first = tuple(rng.sample(range(v), d))
    edges = [tuple(sorted(first))]
    for _ in range(m * 4):
        if len(edges) >= m:
            break
        base = list(rng.choice(edges))
        k = rng.randrange(d)
        pool = by_color[color[base[k]]] if balanced else range(v)
        choices = [x for x in pool if x not in base]
        if not choices:
            continue
        base[k] = rng.choice(choices)
        e = tuple(sorted(base))
        if e not in edges:
            edges.append(e)
    return _relabel(d, edges)


# -- dispatch ---------------------------------------------------------------

def _check(cond: bool, message: str):
    if not cond:
        raise InvalidParamError(message)


FAMILIES = {
    "boolean": (boolean, 1),
    "subspace": (subspace, 2),
    "partition": (partition, 1),
    "divisor": (divisor, 1),
    "divisibility_set": (divisibility_set, None),
    "bruhat_sym": (bruhat_sym, 1),
    "grid": (grid, 2),
    "example_E": (example_E, 0),
    "chessboard": (chessboard, 2),
}


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...] = ()

    def validate(self):
        if self.family not in FAMILIES:
            raise InvalidParamError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        arity = FAMILIES[self.family][1]
        if self.family == "grid" and len(self.params) == 3:
            return
        if arity is not None and len(self.params) != arity:
            raise InvalidParamError(f"{self.family} takes {arity} parameter(s), got {len(self.params)}")
        if arity is None and not self.params:
            raise InvalidParamError("divisibility_set needs at least one integer")


def generate(spec: FamilySpec) -> Union[Poset, Hypergraph]:
    spec.validate()
    fn = FAMILIES[spec.family][0]
    if spec.family == "divisibility_set":
        return fn(spec.params)
    if spec.family == "grid" and len(spec.params) == 3:
        return grid(spec.params[0], spec.params[1], bool(spec.params[2]))
    return fn(*spec.params)
