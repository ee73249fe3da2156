"""Serialization: ball JSON round-trip and deterministic DOT/JSON/CSV
exports for posets, arc graphs, length tables and reports.

Infinity entries of a Coxeter matrix are encoded as 0 in JSON, declared
by a top-level "inf_token": 0 field.  All exports order nodes by id, so
outputs are byte-stable for a given object.
"""
from __future__ import annotations

import csv
import io
import json

from .ball import BOUNDARY, Element, GroupBall, _TitsEngine, _left_from_right
from .errors import DomainError
from .matrices import CoxeterMatrix
from .posets import Poset

__all__ = [
    "ball_to_json_dict", "ball_from_json_dict", "poset_to_json_dict",
    "poset_from_json_dict", "poset_to_dot", "omega_to_json_dict",
    "omega_to_dot", "lk_table_to_csv", "curvature_to_csv",
    "curvature_to_json_dict", "sperner_to_csv",
]


# -- group balls --------------------------------------------------------------


def ball_to_json_dict(ball: GroupBall) -> dict:
    return {
        "schema": 1,
        "inf_token": 0,
        "matrix": [list(row) for row in ball.matrix.entries],
        "radius": ball.radius,
        "elements": [{"id": e.id, "word": list(e.word), "length": e.length}
                     for e in ball.elements],
        # cayley[w][s] = id of s*w (left multiplication), -1 at the boundary
        "cayley": [list(row) for row in ball.left],
    }


def ball_from_json_dict(data: dict, budget: int = 100_000) -> GroupBall:
    if data.get("inf_token", 0) != 0:
        raise DomainError("unsupported infinity token")
    matrix = CoxeterMatrix(rank=len(data["matrix"]),
                           entries=tuple(tuple(r) for r in data["matrix"]))
    elements = [Element(d["id"], bytes(d["word"]), d["length"])
                for d in sorted(data["elements"], key=lambda d: d["id"])]
    for i, e in enumerate(elements):
        if e.id != i or e.length != len(e.word):
            raise DomainError(f"inconsistent element record at id {i}")
    left = [list(row) for row in data["cayley"]]
    # inverse of w: left-multiply e by the letters of w's word in order
    inv = []
    for e in elements:
        x = 0
        for s in e.word:
            x = left[x][s]
            if x == BOUNDARY:
                raise DomainError(f"cayley table broken along word of id {e.id}")
        inv.append(x)
    rank = matrix.rank
    right = _left_from_right(left, inv, rank)  # the identity is its own mirror
    complete = all(v != BOUNDARY for row in left for v in row)
    engine = _TitsEngine(matrix, budget)
    return GroupBall(matrix, data["radius"], elements, right, left, inv,
                     complete, engine)


# -- posets -------------------------------------------------------------------


def _jsonable(label):
    if isinstance(label, (tuple, frozenset)):
        return sorted(map(_jsonable, label)) if isinstance(label, frozenset) \
            else [_jsonable(x) for x in label]
    if isinstance(label, bytes):
        return list(label)
    return label


def poset_to_json_dict(poset: Poset) -> dict:
    out = {
        "schema": 1,
        "nodes": [_jsonable(x) for x in poset.nodes],
        "covers": [[i, j] for i, j in poset.covers],
    }
    if poset.rank is not None:
        out["rank"] = list(poset.rank)
    if poset.metadata:
        out["metadata"] = {k: _jsonable(v) for k, v in poset.metadata.items()}
    return out


def poset_from_json_dict(data: dict) -> Poset:
    nodes = [tuple(x) if isinstance(x, list) else x for x in data["nodes"]]
    return Poset(nodes, [tuple(c) for c in data["covers"]],
                 rank=data.get("rank"), metadata=data.get("metadata"))


def _dot_quote(s) -> str:
    return '"' + str(s).replace('"', '\\"') + '"'


def poset_to_dot(poset: Poset, label_fn=None) -> str:
    """Hasse diagram as DOT, bottom-up, with rank layering when ranks
    are attached."""
    lab = label_fn or (lambda x: x)
    lines = ["digraph poset {", "  rankdir=BT;"]
    for i, x in enumerate(poset.nodes):
        lines.append(f"  n{i} [label={_dot_quote(lab(x))}];")
    for i, j in poset.covers:
        lines.append(f"  n{i} -> n{j};")
    if poset.rank is not None:
        by_rank: dict[int, list[int]] = {}
        for i, r in enumerate(poset.rank):
            by_rank.setdefault(r, []).append(i)
        for r in sorted(by_rank):
            group = " ".join(f"n{i};" for i in by_rank[r])
            lines.append(f"  {{ rank=same; {group} }}")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- arc graphs ---------------------------------------------------------------


def omega_to_json_dict(graph) -> dict:
    return {
        "schema": 1,
        "x_set": sorted(graph.x_set),
        "arcs": [[a, b, t] for a, b, t in graph.arcs],
        "boundary_skips": graph.boundary_skips,
    }


def omega_to_dot(graph, label_fn=None) -> str:
    ball = graph.ball
    lab = label_fn or (lambda w: "".join(str(c) for c in ball.word(w)) or "e")
    used = sorted({a for a, _b, _t in graph.arcs} | {b for _a, b, _t in graph.arcs})
    lines = ["digraph omega {", "  rankdir=BT;"]
    for w in used:
        lines.append(f"  n{w} [label={_dot_quote(lab(w))}];")
    for a, b, t in graph.arcs:
        lines.append(f"  n{a} -> n{b} [label={_dot_quote(lab(t))}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- tabular reports ----------------------------------------------------------


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def lk_table_to_csv(table) -> str:
    ball = table.ball
    rows = [(w, ball.length(w), table.lk[w]) for w in range(len(ball))]
    return _csv(rows, ("id", "length", "lk"))


def curvature_to_csv(report) -> str:
    rows = [(r.x, r.y, r.kappa.numerator, r.kappa.denominator)
            for r in report.records]
    return _csv(rows, ("x", "y", "kappa_num", "kappa_den"))


def curvature_to_json_dict(report) -> dict:
    return {
        "schema": 1,
        "convention": report.convention,
        "edges": [{"x": r.x, "y": r.y,
                   "kappa": [r.kappa.numerator, r.kappa.denominator]}
                  for r in report.records],
        "errors": [{"x": x, "y": y, "message": m} for x, y, m in report.errors],
    }


def sperner_to_csv(report) -> str:
    rows = [(r.h, r.flow_value, r.top_rank_sum, "pass" if r.ok else "fail")
            for r in report.rows]
    return _csv(rows, ("h", "flow_value", "top_rank_sum", "verdict"))
