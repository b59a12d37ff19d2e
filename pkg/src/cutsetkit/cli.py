"""Command-line front end.

Exit status: 0 on success, 1 when a checked implication fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence, Union

from . import checklist
from .connectivity import (check_lemma_local_conn, is_connected, is_locally_strongly_connected,
                           is_pairwise_locally_strongly_connected, is_strongly_connected)
from .cutsets import pairwise_disjoint, verify_level_set_theorem
from .errors import CutsetKitError
from .families import FamilySpec, generate
from .hypergraphs import Hypergraph, balanced_coloring, exact_transversals, from_poset, is_strongly_connected_h
from .io import format_instance, hypergraph_to_json, parse_instance, parse_labeling_text, poset_hash, poset_to_json
from .labelings import (descent_walk, is_el_labeling, is_semimodular, is_shelling, is_supersolvable_labeling,
                        lattice_ops, lexicographic_order, semimodularity_witness, stanley_labeling)
from .poset import Poset, compute_grading, level_sets

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2
DEFAULT_MAX_ELEMENTS = 4096
DEFAULT_MAX_CHAINS = 10 ** 6

Instance = Union[Poset, Hypergraph]


class InputError(CutsetKitError):
    pass


def _limits() -> tuple[int, int]:
    try:
        return (int(os.environ.get("CUTSETKIT_MAX_ELEMENTS", DEFAULT_MAX_ELEMENTS)),
                int(os.environ.get("CUTSETKIT_MAX_CHAINS", DEFAULT_MAX_CHAINS)))
    except ValueError:
        raise InputError("CUTSETKIT_MAX_ELEMENTS / CUTSETKIT_MAX_CHAINS must be integers") from None


def _guard(inst: Instance):
    max_elements, max_chains = _limits()
    size = inst.v if isinstance(inst, Hypergraph) else inst.n
    if size > max_elements:
        raise InputError(f"instance has {size} elements, above the limit {max_elements} (CUTSETKIT_MAX_ELEMENTS)")
    chains = len(inst.edges) if isinstance(inst, Hypergraph) else inst.count_maximal_chains()
    if chains > max_chains:
        raise InputError(f"instance has {chains} maximal chains/edges, above the limit {max_chains}")


def _params(text: Optional[str]) -> tuple[int, ...]:
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError:
        raise InputError(f"--params must be integers, got {text!r}") from None


def load(args) -> Instance:
    if args.family:
        inst = generate(FamilySpec(args.family, _params(args.params)))
    elif args.input is None:
        raise InputError("give an input file or --family")
    elif args.input == "-":
        inst = parse_instance(sys.stdin)
    else:
        try:
            inst = parse_instance(args.input)
        except OSError as exc:
            raise InputError(str(exc)) from None
    _guard(inst)
    return inst


def _fmt_set(p: Optional[Poset], s) -> str:
    if p is None:
        return "{" + ",".join(map(str, s)) + "}"
    return "{" + ",".join(p.name(x) for x in s) + "}"


def _fmt_chain(p: Poset, c) -> str:
    return " < ".join(p.name(x) for x in c)


def _cap(items, limit):
    return items if limit is None else items[:limit]


# -- commands ---------------------------------------------------------------

def cmd_generate(inst: Instance, args):
    if args.json:
        data = hypergraph_to_json(inst) if isinstance(inst, Hypergraph) else poset_to_json(inst)
        return json.dumps(data) + "\n", EXIT_OK
    return format_instance(inst), EXIT_OK


def analyze_report(p: Poset) -> dict:
    g = compute_grading(p)
    report = {
        "elements": p.n,
        "covers": len(p.covers),
        "maximal_chains": len(p.maximal_chains),
        "bounded": p.is_bounded,
        "connected": is_connected(p),
        "strongly_connected": is_strongly_connected(p),
        "locally_strongly_connected": is_locally_strongly_connected(p),
        "pairwise_locally_strongly_connected": is_pairwise_locally_strongly_connected(p),
        "graded": bool(g),
    }
    if g:
        report["rank"] = list(g.rank)
        report["labels"] = list(g.labels)
        report["level_sets"] = [list(s) for s in level_sets(p, g)]
    else:
        report["grading_failure"] = {"kind": g.kind, "cover": g.cover, "chains": [list(c) for c in g.chains]}
    if p.is_bounded:
        lem = check_lemma_local_conn(p)
        report["open_intervals_connected"] = lem.hypothesis_holds
    return report


def cmd_analyze(inst: Instance, args):
    if isinstance(inst, Hypergraph):
        return cmd_hypergraph(inst, args)
    rep = analyze_report(inst)
    if args.json:
        return json.dumps(rep, indent=2) + "\n", EXIT_OK
    lines = [f"elements: {rep['elements']}", f"covers: {rep['covers']}", f"maximal chains: {rep['maximal_chains']}"]
    for key in ("bounded", "connected", "strongly_connected", "locally_strongly_connected",
                "pairwise_locally_strongly_connected", "graded"):
        lines.append(f"{key.replace('_', ' ')}: {str(rep[key]).lower()}")
    if rep["graded"]:
        lines.append("level sets:")
        lines.extend(f"  {r}: {_fmt_set(inst, s)}" for r, s in zip(rep["labels"], rep["level_sets"]))
    else:
        fail = rep["grading_failure"]
        lines.append(f"grading failure: {fail['kind']}")
        lines.extend(f"  chain: {_fmt_chain(inst, c)}" for c in fail["chains"])
    if "open_intervals_connected" in rep:
        lines.append(f"open intervals of nonzero height connected: {str(rep['open_intervals_connected']).lower()}")
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_cutsets(inst: Instance, args):
    if isinstance(inst, Hypergraph):
        return cmd_hypergraph(inst, args)
    rep = verify_level_set_theorem(inst)
    code = EXIT_VIOLATION if rep.violated else EXIT_OK
    if args.json:
        data = rep.to_json(poset_hash(inst))
        data["cutsets"] = _cap(data["cutsets"], args.limit)
        data["count"] = len(rep.cutsets)
        data["pairwise_disjoint"] = rep.pairwise_disjoint
        data["violated"] = rep.violated
        return json.dumps(data, indent=2) + "\n", code
    lines = [f"cutsets: {len(rep.cutsets)}"]
    lines.extend(f"  {_fmt_set(inst, c)}" for c in _cap(rep.cutsets, args.limit))
    if args.limit is not None and len(rep.cutsets) > args.limit:
        lines.append(f"  ... {len(rep.cutsets) - args.limit} more")
    lines += [
        f"pairwise disjoint: {str(rep.pairwise_disjoint).lower()}",
        f"graded: {str(rep.grading is not None).lower()}",
        f"equals level sets: {str(rep.equals_level_sets).lower()}",
        f"strongly connected: {str(rep.strongly_connected).lower()}",
        f"pairwise-locally strongly connected: {str(rep.pairwise_locally_strongly_connected).lower()}",
        f"level-set theorem: {'VIOLATED' if rep.violated else ('holds' if rep.applicable else 'not applicable')}",
    ]
    return "\n".join(lines) + "\n", code


def cmd_el_check(inst: Instance, args):
    if isinstance(inst, Hypergraph):
        raise InputError("el-check needs a poset")
    p = inst
    rep: dict = {}
    lam = None
    if args.labeling:
        with open(args.labeling, encoding="utf-8") as fh:
            lam = parse_labeling_text(fh.read(), p)
        rep["labeling"] = "supplied"
    else:
        lat = lattice_ops(p)
        if not lat:
            rep["labeling"] = "none"
            rep["lattice_failure"] = {"kind": lat.kind, "pair": lat.pair, "candidates": list(lat.candidates)}
        elif not is_semimodular(lat):
            rep["labeling"] = "none"
            rep["semimodularity_witness"] = list(semimodularity_witness(lat))
        else:
            lam = stanley_labeling(lat)
            rep["labeling"] = "semimodular join-irreducible labeling"
    code = EXIT_OK
    if lam is not None:
        el = is_el_labeling(p, lam)
        rep["is_el"] = el.is_el
        rep["el_violations"] = [
            {"interval": list(k), "kind": r.violation, "chains": [list(c) for c in r.chains]}
            for k, r in sorted(el.violations().items())
        ]
        if el.is_el and p.is_bounded and compute_grading(p):
            order = lexicographic_order(p, lam)
            walk = descent_walk(p, lam, order[-1])
            rep["sample_walk"] = [list(c) for c in walk]
            rep["sample_walk_words"] = [list(lam.word(c)) for c in walk]
            rep["lexicographic_shelling"] = is_shelling(p, order)
            rep["supersolvable"] = is_supersolvable_labeling(p, lam)
            rep["strongly_connected"] = is_strongly_connected(p)
            if not (rep["lexicographic_shelling"] and rep["strongly_connected"]
                    and walk[-1] == order[0]):
                code = EXIT_VIOLATION
    if args.json:
        return json.dumps(rep, indent=2) + "\n", code
    lines = [f"labeling: {rep['labeling']}"]
    if "lattice_failure" in rep:
        f = rep["lattice_failure"]
        lines.append(f"not a lattice: {f['kind']} of {f['pair']} has candidates {f['candidates']}")
    if "semimodularity_witness" in rep:
        lines.append(f"not semimodular: witness {_fmt_set(p, rep['semimodularity_witness'])}")
    if "is_el" in rep:
        lines.append(f"EL-labeling: {str(rep['is_el']).lower()}")
        for v in _cap(rep["el_violations"], args.limit):
            lines.append(f"  [{p.name(v['interval'][0])}, {p.name(v['interval'][1])}]: {v['kind']}")
    if "sample_walk" in rep:
        lines.append(f"descent walk from the lexicographically last chain ({len(rep['sample_walk']) - 1} steps):")
        for c, w in zip(rep["sample_walk"], rep["sample_walk_words"]):
            lines.append(f"  {_fmt_chain(p, c)}   word {tuple(w)}")
        lines.append(f"lexicographic order is a shelling: {str(rep['lexicographic_shelling']).lower()}")
        lines.append(f"supersolvable (words permute 1..n): {str(rep['supersolvable']).lower()}")
        lines.append(f"strongly connected: {str(rep['strongly_connected']).lower()}")
    return "\n".join(lines) + "\n", code


def cmd_hypergraph(inst: Instance, args):
    h = from_poset(inst) if isinstance(inst, Poset) else inst
    sc = is_strongly_connected_h(h)
    trans = exact_transversals(h)
    col = balanced_coloring(h)
    disjoint = pairwise_disjoint(trans)
    classes = col.classes() if col is not None else None
    match = classes is not None and sorted(classes) == trans
    violated = (sc and not disjoint) or (sc and col is not None and not match)
    code = EXIT_VIOLATION if violated else EXIT_OK
    if args.json:
        rep = {
            "d": h.d, "vertices": h.v, "edges": len(h.edges),
            "strongly_connected": sc,
            "transversals": [list(t) for t in _cap(trans, args.limit)],
            "transversal_count": len(trans),
            "pairwise_disjoint": disjoint,
            "balanced": col is not None,
            "coloring": list(col.color) if col is not None else None,
            "transversals_equal_color_classes": match,
            "violated": violated,
        }
        return json.dumps(rep, indent=2) + "\n", code
    lines = [f"d: {h.d}", f"vertices: {h.v}", f"edges: {len(h.edges)}",
             f"strongly connected: {str(sc).lower()}", f"exact transversals: {len(trans)}"]
    lines.extend(f"  {_fmt_set(None, t)}" for t in _cap(trans, args.limit))
    lines.append(f"transversals pairwise disjoint: {str(disjoint).lower()}")
    if col is None:
        lines.append("balanced: false")
    else:
        lines.append("balanced: true")
        lines.append("coloring: " + " ".join(map(str, col.color)))
        lines.append(f"transversals equal color classes: {str(match).lower()}")
    return "\n".join(lines) + "\n", code


def cmd_verify(args):
    results = checklist.run_checklist(seed=args.seed, random_count=args.random)
    table = checklist.summarize(results)
    failures = [r for r in results if r.status == checklist.FAIL]
    code = EXIT_VIOLATION if failures else EXIT_OK
    if args.json:
        data = {"seed": args.seed, "random_instances": args.random, "checks": table,
                "failures": [vars(r) for r in failures]}
        return json.dumps(data, indent=2) + "\n", code
    lines = [f"{'check':45} {'pass':>5} {'fail':>5} {'n/a':>5}"]
    for name, row in table.items():
        lines.append(f"{name:45} {row['pass']:>5} {row['fail']:>5} {row['n/a']:>5}")
    for r in failures:
        lines.append(f"FAIL {r.check} on {r.instance} {r.detail}".rstrip())
    lines.append("all checks passed" if not failures else f"{len(failures)} violation(s)")
    return "\n".join(lines) + "\n", code


COMMANDS = {
    "generate": cmd_generate,
    "analyze": cmd_analyze,
    "cutsets": cmd_cutsets,
    "el-check": cmd_el_check,
    "hypergraph": cmd_hypergraph,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cutsetkit", description="Antichain cutsets, chain exchanges and EL-labelings on finite posets.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--limit", type=int, default=None, help="cap the number of listed sets")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("input", nargs="?", help="instance file (text v1 or JSON); '-' for stdin")
        sp.add_argument("--family", help="generate the instance from a named family")
        sp.add_argument("--params", help="family parameters, comma separated")
        if name == "el-check":
            sp.add_argument("--labeling", help="edge labeling file with 'label <x> <y> <k>' lines")
    vp = sub.add_parser("verify", parents=[common])
    vp.add_argument("--random", type=int, default=50, help="random posets and hypergraphs each")
    return parser


def run(argv: Optional[Sequence[str]] = None) -> tuple[str, int]:
    """Execute a command and return (report text, exit code)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        inst = load(args)
        return COMMANDS[args.command](inst, args)
    except (CutsetKitError, OSError) as exc:
        return f"error: {exc}\n", EXIT_INPUT


def main(argv: Optional[Sequence[str]] = None) -> int:
    out, code = run(argv)
    stream = sys.stderr if code == EXIT_INPUT else sys.stdout
    stream.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
