"""JSON documents for relations, lattices and algebras; DOT export and re-import."""
from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .algebra import DeMorganAlgebra, make_algebra
from .errors import InputError
from .lattice import FiniteLattice, lattice_from_hasse, validate_lattice
from .relations import BinaryRelation, Universe, build_relation
from .rough import RoughSetLattice

RELATION_KEYS = {"universe", "pairs", "closure"}
LATTICE_KEYS = {"elements", "hasse", "leq_matrix"}
ALGEBRA_KEYS = LATTICE_KEYS | {"negation"}


def load_json(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: invalid JSON ({e})") from None
    except OSError as e:
        raise InputError(f"{path}: {e.strerror}") from None
    if not isinstance(doc, dict):
        raise InputError(f"{path}: expected a JSON object")
    return doc


def _reject_unknown(doc: dict, allowed: set, what: str):
    extra = sorted(set(doc) - allowed)
    if extra:
        raise InputError(f"unknown keys in {what} document: {extra}")


def relation_from_doc(doc: dict) -> BinaryRelation:
    _reject_unknown(doc, RELATION_KEYS, "relation")
    if "universe" not in doc:
        raise InputError("relation document needs a 'universe' list")
    universe = doc["universe"]
    if not isinstance(universe, list):
        raise InputError("'universe' must be a list of names")
    return build_relation(Universe(tuple(universe)), doc.get("pairs", []), doc.get("closure", "none"))


def relation_to_doc(R: BinaryRelation) -> dict:
    return {"universe": list(R.universe), "pairs": [list(p) for p in R.pairs()], "closure": "none"}


def lattice_from_doc(doc: dict, allowed: set = LATTICE_KEYS) -> FiniteLattice:
    _reject_unknown(doc, allowed, "lattice")
    if "elements" not in doc:
        raise InputError("lattice document needs an 'elements' list")
    names = [str(e) for e in doc["elements"]]
    if "hasse" in doc and "leq_matrix" in doc:
        raise InputError("give either 'hasse' or 'leq_matrix', not both")
    if "hasse" in doc:
        return lattice_from_hasse(names, [tuple(e) for e in doc["hasse"]])
    if "leq_matrix" in doc:
        try:
            leq = np.array(doc["leq_matrix"], dtype=bool)
        except (TypeError, ValueError):
            raise InputError("'leq_matrix' must be a square 0/1 matrix") from None
        return validate_lattice(names, leq)
    raise InputError("lattice document needs 'hasse' or 'leq_matrix'")


def lattice_to_doc(L: FiniteLattice) -> dict:
    return {"elements": list(L.names), "hasse": [[L.names[a], L.names[b]] for a, b in L.hasse_edges()]}


def algebra_from_doc(doc: dict) -> DeMorganAlgebra:
    L = lattice_from_doc(doc, ALGEBRA_KEYS)
    if "negation" not in doc or not isinstance(doc["negation"], dict):
        raise InputError("algebra document needs a 'negation' object")
    return make_algebra(L, {str(k): str(v) for k, v in doc["negation"].items()})


def algebra_to_doc(A: DeMorganAlgebra) -> dict:
    doc = lattice_to_doc(A.lattice)
    doc["negation"] = {A.name(i): A.name(int(c)) for i, c in enumerate(A.neg)}
    return doc


def load_relation(path) -> BinaryRelation:
    return relation_from_doc(load_json(path))


def load_algebra(path) -> DeMorganAlgebra:
    return algebra_from_doc(load_json(path))


def save_json(doc, path, pretty: bool = True):
    Path(path).write_text(json.dumps(doc, indent=2 if pretty else None, ensure_ascii=False) + "\n", encoding="utf-8")


# -- DOT ------------------------------------------------------------------------

def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _dot(names: Sequence[str], edges: Iterable[tuple[str, str]], graph: str, rankdir: str | None) -> str:
    lines = [f"digraph {_quote(graph)} {{"]
    if rankdir:
        lines.append(f"  rankdir={rankdir};")
    for n in names:
        lines.append(f"  {_quote(n)};")
    for a, b in edges:
        lines.append(f"  {_quote(a)} -> {_quote(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def lattice_dot(L: FiniteLattice, graph: str = "lattice") -> str:
    """Hasse diagram: one edge per covering pair, drawn bottom to top."""
    return _dot(L.names, [(L.names[a], L.names[b]) for a, b in L.hasse_edges()], graph, "BT")


def rs_dot(rs: RoughSetLattice) -> str:
    return lattice_dot(rs.lattice, "RS")


def relation_dot(R: BinaryRelation, graph: str = "R") -> str:
    """Quasiorder diagram with loops omitted and transitive edges reduced.

    Edges inside a class of ``R n R^-1`` are kept in both directions; between
    classes only covering edges of the quotient order appear.
    """
    n = R.size
    cls = [R.rows[i] & R.cols[i] for i in range(n)]
    edges = []
    el = R.universe.elements
    for x in range(n):
        for y in range(n):
            if x == y or not R.holds(x, y):
                continue
            if cls[x] == cls[y]:
                edges.append((el[x], el[y]))
                continue
            # strictly between [x] and [y] in the quotient order
            between = any(
                R.holds(x, z) and R.holds(z, y) and cls[z] != cls[x] and cls[z] != cls[y] for z in range(n)
            )
            if not between:
                edges.append((el[x], el[y]))
    return _dot(el, edges, graph, None)


_NODE = re.compile(r'^\s*"((?:[^"\\]|\\.)*)"\s*;\s*$')
_EDGE = re.compile(r'^\s*"((?:[^"\\]|\\.)*)"\s*->\s*"((?:[^"\\]|\\.)*)"\s*;\s*$')


def _unquote(s: str) -> str:
    return re.sub(r"\\(.)", r"\1", s)


def parse_dot(text: str) -> tuple[list[str], list[tuple[str, str]]]:
    """Read back node names and edges from DOT emitted by this module."""
    names, edges = [], []
    for line in text.splitlines():
        m = _EDGE.match(line)
        if m:
            edges.append((_unquote(m.group(1)), _unquote(m.group(2))))
            continue
        m = _NODE.match(line)
        if m:
            names.append(_unquote(m.group(1)))
    return names, edges
