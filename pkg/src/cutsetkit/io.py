"""Text and JSON formats for posets, hypergraphs and edge labelings.

Poset text format::

    poset v1
    elements 3            # or one `element <i> <name>` line per element
    cover 0 1
    rel 0 2               # rel lines are closed and reduced

Hypergraph text format::

    hypergraph v1
    d 2
    vertices 3
    edge 0 1

Blank lines and ``#`` comments are ignored; any other directive is an error.
"""

from __future__ import annotations

import hashlib
import json
from typing import IO, Iterable, Union

from .errors import ParseError, SelfLoopError
from .hypergraphs import Hypergraph
from .labelings import EdgeLabeling
from .poset import Poset, build_poset


def _lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line.split()


def _int(tok: str, no: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", no) from None


def _pair(words: list[str], no: int) -> tuple[int, int]:
    if len(words) != 3:
        raise ParseError(f"'{words[0]}' takes two elements", no)
    return _int(words[1], no), _int(words[2], no)


def parse_poset_text(text: str) -> Poset:
    body = list(_lines(text))
    if not body or body[0][1] != ["poset", "v1"]:
        raise ParseError("missing 'poset v1' header", body[0][0] if body else 1)
    n = None
    names: dict[int, str] = {}
    covers, rels = [], []
    for no, words in body[1:]:
        head = words[0]
        if head == "elements":
            if len(words) != 2 or n is not None:
                raise ParseError("malformed or repeated 'elements' line", no)
            n = _int(words[1], no)
        elif head == "element":
            if len(words) < 2:
                raise ParseError("'element' needs an index", no)
            i = _int(words[1], no)
            if i in names:
                raise ParseError(f"element {i} declared twice", no)
            names[i] = " ".join(words[2:]) or str(i)
        elif head in ("cover", "rel"):
            x, y = _pair(words, no)
            if x == y:
                raise SelfLoopError(x, line=no)
            (covers if head == "cover" else rels).append((x, y, no))
        else:
            raise ParseError(f"unknown directive {head!r}", no)
    if names:
        if n is not None and n != len(names):
            raise ParseError(f"'elements {n}' disagrees with {len(names)} element lines")
        if sorted(names) != list(range(len(names))):
            raise ParseError("element indices must be 0..n-1")
        n = len(names)
    if n is None:
        raise ParseError("no 'elements' or 'element' lines")
    for x, y, no in covers + rels:
        if not (0 <= x < n and 0 <= y < n):
            raise ParseError(f"element out of range 0..{n - 1}", no)
    p = build_poset([(x, y) for x, y, _ in covers + rels], n,
                    [names[i] for i in range(n)] if names else None)
    for x, y, no in covers:
        if (x, y) not in p.cover_set:
            raise ParseError(f"({x}, {y}) is not a cover relation", no)
    return p


def format_poset(p: Poset) -> str:
    out = ["poset v1"]
    if p.names is None:
        out.append(f"elements {p.n}")
    else:
        out.extend(f"element {i} {name}" for i, name in enumerate(p.names))
    out.extend(f"cover {x} {y}" for x, y in p.covers)
    return "\n".join(out) + "\n"


def poset_to_json(p: Poset) -> dict:
    data: dict = {"n": p.n}
    if p.names is not None:
        data["names"] = list(p.names)
    data["covers"] = [list(c) for c in p.covers]
    return data


def poset_from_json(data: dict) -> Poset:
    unknown = set(data) - {"n", "names", "covers"}
    if unknown:
        raise ParseError(f"unknown fields {sorted(unknown)}")
    try:
        pairs = [(int(x), int(y)) for x, y in data.get("covers", [])]
        n = int(data["n"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed poset JSON: {exc}") from None
    p = build_poset(pairs, n, data.get("names"))
    missing = set(pairs) - p.cover_set
    if missing:
        raise ParseError(f"{min(missing)} is not a cover relation")
    return p


def poset_hash(p: Poset) -> str:
    return hashlib.sha256(format_poset(p).encode()).hexdigest()


def parse_hypergraph_text(text: str) -> Hypergraph:
    body = list(_lines(text))
    if not body or body[0][1] != ["hypergraph", "v1"]:
        raise ParseError("missing 'hypergraph v1' header", body[0][0] if body else 1)
    d = v = None
    edges = []
    for no, words in body[1:]:
        head = words[0]
        if head in ("d", "vertices"):
            if len(words) != 2:
                raise ParseError(f"'{head}' takes one integer", no)
            if head == "d":
                d = _int(words[1], no)
            else:
                v = _int(words[1], no)
        elif head == "edge":
            edges.append((tuple(_int(t, no) for t in words[1:]), no))
        else:
            raise ParseError(f"unknown directive {head!r}", no)
    if d is None or v is None:
        raise ParseError("hypergraph needs 'd' and 'vertices' lines")
    for e, no in edges:
        if len(e) != d:
            raise ParseError(f"edge has {len(e)} vertices, expected {d}", no)
        if any(not 0 <= x < v for x in e):
            raise ParseError(f"vertex out of range 0..{v - 1}", no)
    return Hypergraph(d, v, tuple(e for e, _ in edges))


def format_hypergraph(h: Hypergraph) -> str:
    out = ["hypergraph v1", f"d {h.d}", f"vertices {h.v}"]
    out.extend("edge " + " ".join(map(str, e)) for e in h.edges)
    return "\n".join(out) + "\n"


def hypergraph_to_json(h: Hypergraph) -> dict:
    return {"d": h.d, "vertices": h.v, "edges": [list(e) for e in h.edges]}


def hypergraph_from_json(data: dict) -> Hypergraph:
    unknown = set(data) - {"d", "vertices", "edges"}
    if unknown:
        raise ParseError(f"unknown fields {sorted(unknown)}")
    try:
        return Hypergraph(int(data["d"]), int(data["vertices"]), tuple(tuple(e) for e in data["edges"]))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed hypergraph JSON: {exc}") from None


def parse_labeling_text(text: str, p: Poset) -> EdgeLabeling:
    labels = {}
    for no, words in _lines(text):
        if words[0] != "label" or len(words) != 4:
            raise ParseError("expected 'label <x> <y> <k>'", no)
        x, y, k = (_int(t, no) for t in words[1:])
        if (x, y) not in p.cover_set:
            raise ParseError(f"({x}, {y}) is not a cover relation", no)
        if (x, y) in labels:
            raise ParseError(f"cover ({x}, {y}) labeled twice", no)
        labels[(x, y)] = k
    if len(labels) != len(p.covers):
        raise ParseError(f"{len(p.covers) - len(labels)} covers left unlabeled")
    return EdgeLabeling(labels)


def format_labeling(lam: EdgeLabeling) -> str:
    return "".join(f"label {x} {y} {k}\n" for (x, y), k in sorted(lam.labels.items()))


def parse_instance(source: Union[str, IO[str]]) -> Union[Poset, Hypergraph]:
    """Read a poset or hypergraph from a path, a stream, or literal text.

    The format is sniffed from the first non-blank content: a JSON object
    (``covers`` means poset, ``edges`` means hypergraph) or a text header.
    """
    if hasattr(source, "read"):
        text = source.read()
    elif "\n" in source or source.lstrip().startswith(("poset", "hypergraph", "{")):
        text = source
    else:
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
        if not isinstance(data, dict):
            raise ParseError("JSON instance must be an object")
        return hypergraph_from_json(data) if "edges" in data else poset_from_json(data)
    first = next(_lines(text), (1, [""]))[1]
    if first[:1] == ["hypergraph"]:
        return parse_hypergraph_text(text)
    if first[:1] == ["poset"]:
        return parse_poset_text(text)
    raise ParseError("unrecognized instance header", next(_lines(text), (1, None))[0])


def format_instance(inst: Union[Poset, Hypergraph]) -> str:
    return format_hypergraph(inst) if isinstance(inst, Hypergraph) else format_poset(inst)


__all__ = [
    "parse_instance", "format_instance",
    "parse_poset_text", "format_poset", "poset_to_json", "poset_from_json", "poset_hash",
    "parse_hypergraph_text", "format_hypergraph", "hypergraph_to_json", "hypergraph_from_json",
    "parse_labeling_text", "format_labeling",
]
