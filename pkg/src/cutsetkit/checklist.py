"""Implication checklist run by ``cutsetkit verify``.

Every check is an implication: when the hypothesis fails on an instance
the result is ``n/a``, never a failure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Union

from . import families as fam
from .connectivity import (check_lemma_local_conn, every_interval_graded, exchange_cardinalities_equal,
                           is_locally_strongly_connected, is_pairwise_locally_strongly_connected,
                           is_strongly_connected)
from .cutsets import enumerate_antichain_cutsets, pairwise_disjoint
from .errors import NotUniformError
from .hypergraphs import (Hypergraph, balanced_coloring, exact_transversals, from_poset,
                          is_strongly_connected_h)
from .labelings import (EdgeLabeling, descent_walk, is_el_labeling, is_semimodular, is_shelling,
                        lattice_ops, lexicographic_order, stanley_labeling)
from .poset import Poset, bound_augment, build_poset, compute_grading, level_sets

PASS, FAIL, NA = "pass", "fail", "n/a"


@dataclass(frozen=True)
class CheckResult:
    check: str
    instance: str
    status: str
    detail: str = ""


def _status(hypothesis: bool, conclusion: bool) -> str:
    if not hypothesis:
        return NA
    return PASS if conclusion else FAIL


def _labeling_for(p: Poset) -> Optional[EdgeLabeling]:
    lat = lattice_ops(p)
    if not lat or not is_semimodular(lat):
        return None
    return stanley_labeling(lat)


def check_poset(name: str, p: Poset, labeling: Optional[EdgeLabeling] = None) -> list[CheckResult]:
    out = []
    sc = is_strongly_connected(p)
    plsc = is_pairwise_locally_strongly_connected(p)
    lsc = is_locally_strongly_connected(p)
    g = compute_grading(p)
    cuts = enumerate_antichain_cutsets(p)
    disjoint = pairwise_disjoint(cuts)
    levels_match = bool(g) and sorted(level_sets(p, g)) == cuts

    def add(check, status, detail=""):
        out.append(CheckResult(check, name, status, detail))

    add("disjoint_cutsets_strongly_connected", _status(sc, disjoint))
    add("disjoint_cutsets_pairwise_local", _status(plsc, disjoint))
    nonempty = p.n > 0
    add("cutsets_are_levels_strongly_connected", _status(sc and nonempty, levels_match))
    add("cutsets_are_levels_pairwise_local_graded", _status(plsc and bool(g) and nonempty, levels_match))
    add("equal_exchange_sizes", _status(sc, exchange_cardinalities_equal(p)))
    add("intervals_graded", _status(sc or lsc or plsc, every_interval_graded(p)))
    add("bounds_preserve_strong_connectivity", PASS if is_strongly_connected(bound_augment(p)) == sc else FAIL)

    if p.is_bounded:
        rep = check_lemma_local_conn(p)
        add("open_interval_criterion", FAIL if rep.violated else (PASS if rep.hypothesis_holds else NA),
            f"hypothesis={rep.hypothesis_holds} conclusion={rep.conclusion_holds}")
    else:
        add("open_interval_criterion", NA, "unbounded")

    try:
        h = from_poset(p)
    except NotUniformError:
        add("chain_hypergraph_bridge", NA, "maximal chains of different sizes")
    else:
        bridge = exact_transversals(h) == cuts and is_strongly_connected_h(h) == sc
        add("chain_hypergraph_bridge", PASS if bridge else FAIL)

    stanley = _labeling_for(p)
    stanley_el = stanley is not None and is_el_labeling(p, stanley).is_el
    add("semimodular_labeling_is_el", _status(stanley is not None, stanley_el))
    lam = labeling if labeling is not None else stanley
    el = lam is not None and p.is_bounded and bool(g) and is_el_labeling(p, lam).is_el
    if el:
        asc = lexicographic_order(p, lam)[0]
        walks_ok = all(descent_walk(p, lam, c)[-1] == asc for c in p.maximal_chains)
        add("descent_walk_reaches_ascending", PASS if walks_ok and sc else FAIL)
        shelling = is_shelling(p, lexicographic_order(p, lam))
        add("lexicographic_shelling", PASS if shelling and sc else FAIL)
    else:
        add("descent_walk_reaches_ascending", NA, "no EL-labeling at hand")
        add("lexicographic_shelling", NA, "no EL-labeling at hand")
    return out


def check_hypergraph(name: str, h: Hypergraph) -> list[CheckResult]:
    sc = is_strongly_connected_h(h)
    trans = exact_transversals(h)
    col = balanced_coloring(h)
    classes_match = col is not None and sorted(col.classes()) == trans
    return [
        CheckResult("disjoint_transversals", name, _status(sc, pairwise_disjoint(trans))),
        CheckResult("transversals_are_color_classes", name, _status(sc and col is not None, classes_match)),
    ]


def corpus() -> list[tuple[str, Callable[[], Union[Poset, Hypergraph]], Optional[Callable[[], EdgeLabeling]]]]:
    """Built-in instances; the third entry supplies a labeling where the
    default semimodular one does not apply."""
    entries = [(f"boolean({n})", lambda n=n: fam.boolean(n), None) for n in range(0, 5)]
    entries += [
        ("subspace(2,2)", lambda: fam.subspace(2, 2), None),
        ("subspace(2,3)", lambda: fam.subspace(2, 3), None),
        ("subspace(3,2)", lambda: fam.subspace(3, 2), None),
        ("partition(3)", lambda: fam.partition(3), None),
        ("partition(4)", lambda: fam.partition(4), lambda: fam.partition_labeling(4)),
        ("divisor(12)", lambda: fam.divisor(12), None),
        ("divisor(30)", lambda: fam.divisor(30), None),
        ("divisor(72)", lambda: fam.divisor(72), None),
        ("example_E", fam.example_E, None),
        ("bruhat_sym(3)", lambda: fam.bruhat_sym(3), None),
        ("bruhat_sym(4)", lambda: fam.bruhat_sym(4), None),
        ("grid(3,3)", lambda: fam.grid(3, 3), None),
        ("grid(2,4,top)", lambda: fam.grid(2, 4, True), None),
        ("fence", lambda: build_poset([(0, 2), (1, 2), (1, 3)], 4), None),
        ("uneven", lambda: build_poset([(0, 1), (1, 2), (0, 3)], 4), None),
        ("two_chains", lambda: build_poset([(0, 1), (2, 3)], 4), None),
        ("chessboard(2,2)", lambda: fam.chessboard(2, 2), None),
        ("chessboard(2,3)", lambda: fam.chessboard(2, 3), None),
        ("chessboard(3,4)", lambda: fam.chessboard(3, 4), None),
        ("triangle", lambda: Hypergraph(2, 3, ((0, 1), (1, 2), (0, 2))), None),
    ]
    return entries


def random_instances(seed: int, count: int) -> Iterable[tuple[str, Union[Poset, Hypergraph]]]:
    rng = random.Random(seed)
    for k in range(count):
        n = rng.randint(1, 10)
        yield f"random_poset[{seed}:{k}]", fam.random_poset(rng, n, rng.uniform(0.1, 0.9))
    for k in range(count):
        d = rng.randint(1, 4)
        v = rng.randint(d, 12)
        m = rng.randint(1, 12)
        mode = k % 3
        if mode == 0:
            h = fam.random_hypergraph(rng, d, v, m)
        else:
            h = fam.random_exchange_hypergraph(rng, d, v, m, balanced=(mode == 2))
        yield f"random_hypergraph[{seed}:{k}]", h


def run_checklist(seed: int = 0, random_count: int = 50) -> list[CheckResult]:
    results = []
    for name, build, labeling in corpus():
        inst = build()
        if isinstance(inst, Hypergraph):
            results.extend(check_hypergraph(name, inst))
        else:
            results.extend(check_poset(name, inst, labeling() if labeling else None))
    for name, inst in random_instances(seed, random_count):
        if isinstance(inst, Hypergraph):
            results.extend(check_hypergraph(name, inst))
        else:
            results.extend(check_poset(name, inst))
    return results


def summarize(results: Iterable[CheckResult]) -> dict[str, dict[str, int]]:
    table: dict[str, dict[str, int]] = {}
    for r in results:
        row = table.setdefault(r.check, {PASS: 0, FAIL: 0, NA: 0})
        row[r.status] += 1
    return table
