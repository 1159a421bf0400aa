"""JSON and DOT serialization.

Rationals are written as strings (``"-3/2"``, ``"2"``); floats are rejected
on input so that a file round-trips exactly.  All output is deterministic.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .cartan import CartanDatum, Parity
from .errors import DatumFormatError
from .graph import CartanGraph, Edge, Vertex


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(value, where: str = "value") -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise DatumFormatError(where, f"expected a rational string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise DatumFormatError(where, f"expected a rational string, got {type(value).__name__}")
    text = value.strip().replace("−", "-")
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise DatumFormatError(where, f"{value!r} is not a rational of the form p or p/q") from None
    if "." in text or "e" in text.lower():
        raise DatumFormatError(where, f"{value!r} is not a rational of the form p or p/q")
    return q


def datum_to_dict(d: CartanDatum) -> dict:
    return {
        "B": [[format_rational(x) for x in row] for row in d.B],
        "tau": [str(t) for t in d.tau],
    }


def datum_from_dict(obj) -> CartanDatum:
    """Parse ``{"B": [[...], ...], "tau": [...]}`` with per-field diagnostics."""
    if not isinstance(obj, dict):
        raise DatumFormatError("<root>", "expected a JSON object with keys B and tau")
    for key in ("B", "tau"):
        if key not in obj:
            raise DatumFormatError(key, "missing field")
    B, tau = obj["B"], obj["tau"]
    if not isinstance(B, list) or not B:
        raise DatumFormatError("B", "expected a non-empty list of rows")
    n = len(B)
    rows = []
    for i, row in enumerate(B):
        if not isinstance(row, list):
            raise DatumFormatError(f"B[{i}]", "expected a list")
        if len(row) != n:
            raise DatumFormatError(f"B[{i}]", f"row has {len(row)} entries, B must be {n}x{n}")
        rows.append([parse_rational(x, f"B[{i}][{j}]") for j, x in enumerate(row)])
    if not isinstance(tau, list):
        raise DatumFormatError("tau", "expected a list")
    if len(tau) != n:
        raise DatumFormatError("tau", f"has {len(tau)} entries, expected {n}")
    parities = []
    for i, t in enumerate(tau):
        try:
            parities.append(Parity.parse(t))
        except ValueError as exc:
            raise DatumFormatError(f"tau[{i}]", str(exc)) from None
    return CartanDatum(rows, parities)


def datum_from_json(text: str) -> CartanDatum:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DatumFormatError(f"line {exc.lineno}, column {exc.colno}", exc.msg) from None
    return datum_from_dict(obj)


def load_datum(path) -> CartanDatum:
    with open(path, encoding="utf-8") as fh:
        return datum_from_json(fh.read())


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def graph_to_dict(g: CartanGraph, coxeter=None, aut_order=None) -> dict:
    """JSON-ready description of ``g``; ``coxeter`` and ``aut_order`` map vertex ids."""
    verts = []
    for v in g.vertices:
        entry = {"id": v.id, "label": g.label(v.id), "serre": [list(r) for r in v.serre]}
        if v.root_base is not None:
            entry["root_base"] = [list(r) for r in v.root_base]
        if v.datum is not None:
            entry["datum"] = datum_to_dict(v.datum)
        if coxeter is not None:
            entry["coxeter"] = [list(r) for r in coxeter[v.id]]
        if aut_order is not None:
            entry["aut_order"] = aut_order[v.id]
        verts.append(entry)
    out = {
        "colors": g.color_count,
        "vertices": verts,
        "edges": [{"source": e.source, "target": e.target, "color": e.color} for e in g.edges],
    }
    if g.seed is not None:
        out["seed"] = datum_to_dict(g.seed)
    return out


def graph_from_dict(obj) -> CartanGraph:
    """Inverse of :func:`graph_to_dict` for ids, Serre matrices and edges."""
    vertices = [Vertex(v["id"], tuple(tuple(r) for r in v["serre"])) for v in obj["vertices"]]
    edges = [Edge(e["source"], e["target"], e["color"]) for e in obj["edges"]]
    return CartanGraph(obj["colors"], vertices, edges)


def graph_to_json(g: CartanGraph, coxeter=None, aut_order=None) -> str:
    return dumps(graph_to_dict(g, coxeter, aut_order))


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_to_dot(g: CartanGraph, name: str = "G") -> str:
    """Undirected DOT; loops are drawn as self-edges, edge labels are colors."""
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        lines.append(f"  {v.id} [label={_quote(g.label(v.id))}];")
    for e in g.edges:
        lines.append(f"  {e.source} -- {e.target} [label=\"{e.color}\"];")
    lines.append("}")
    return "\n".join(lines) + "\n"
