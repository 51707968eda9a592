"""JSON formats for ideals, pairs, graphs and clutters.

    ideal   {"vars": ["x1", "x2"], "generators": [[2, 0], [1, 1]]}
    pair    {"J": <ideal>, "I": <ideal>}
    graph   {"n": 4, "edges": [[1, 2], [2, 3]]}
    clutter {"n": 6, "d": 3, "circuits": [[1, 3, 5], [2, 4, 6]]}

Parsers reject ragged rows, negative exponents, duplicate variable names and
out-of-range vertices with InputError.  Emitted dictionaries round-trip to
structurally identical values.
"""

from __future__ import annotations

import json

from .clutters import Clutter
from .errors import InputError
from .graphs import Graph
from .ideals import MonomialIdeal, RingContext


def _require(cond, msg):
    if not cond:
        raise InputError(msg)


def ideal_from_obj(obj) -> MonomialIdeal:
    _require(isinstance(obj, dict), "ideal must be a JSON object")
    _require("vars" in obj, "ideal object needs a 'vars' list")
    _require("generators" in obj, "ideal object needs a 'generators' list")
    names = obj["vars"]
    _require(
        isinstance(names, list) and names and all(isinstance(v, str) for v in names),
        "'vars' must be a nonempty list of strings",
    )
    _require(len(set(names)) == len(names), "duplicate variable names")
    ctx = RingContext(len(names), names)
    rows = obj["generators"]
    _require(isinstance(rows, list), "'generators' must be a list of exponent rows")
    for row in rows:
        _require(isinstance(row, list), "exponent row must be a list")
        _require(len(row) == ctx.n, "ragged exponent row (expected %d entries)" % ctx.n)
        for e in row:
            _require(isinstance(e, int) and not isinstance(e, bool), "exponents must be integers")
            _require(e >= 0, "negative exponent %r" % e)
    return MonomialIdeal(ctx, rows)


def ideal_to_obj(I: MonomialIdeal) -> dict:
    return {
        "vars": list(I.ctx.names),
        "generators": [list(map(int, row)) for row in I.exponent_matrix],
    }


def pair_from_obj(obj) -> tuple[MonomialIdeal, MonomialIdeal]:
    _require(isinstance(obj, dict), "pair must be a JSON object")
    _require("J" in obj and "I" in obj, "pair object needs 'J' and 'I' ideals")
    J = ideal_from_obj(obj["J"])
    I = ideal_from_obj(obj["I"])
    _require(J.ctx == I.ctx, "'J' and 'I' must share one variable list")
    return J, I


def graph_from_obj(obj) -> Graph:
    _require(isinstance(obj, dict), "graph must be a JSON object")
    _require("n" in obj and "edges" in obj, "graph object needs 'n' and 'edges'")
    n = obj["n"]
    _require(isinstance(n, int) and n >= 1, "'n' must be a positive integer")
    edges = obj["edges"]
    _require(isinstance(edges, list), "'edges' must be a list of pairs")
    pairs = []
    for e in edges:
        _require(isinstance(e, list) and len(e) == 2, "edge must be a pair")
        u, v = e
        _require(isinstance(u, int) and isinstance(v, int), "vertices must be integers")
        _require(1 <= u <= n and 1 <= v <= n, "vertex out of range 1..%d" % n)
        _require(u != v, "loop edge [%d, %d]" % (u, v))
        pairs.append((u, v))
    return Graph(n, pairs)


def graph_to_obj(G: Graph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.sorted_edges()]}


def clutter_from_obj(obj) -> Clutter:
    _require(isinstance(obj, dict), "clutter must be a JSON object")
    for key in ("n", "d", "circuits"):
        _require(key in obj, "clutter object needs '%s'" % key)
    n, d = obj["n"], obj["d"]
    _require(isinstance(n, int) and n >= 1, "'n' must be a positive integer")
    _require(isinstance(d, int) and d >= 1, "'d' must be a positive integer")
    circuits = obj["circuits"]
    _require(isinstance(circuits, list), "'circuits' must be a list")
    parsed = []
    for c in circuits:
        _require(isinstance(c, list), "circuit must be a list of vertices")
        _require(
            all(isinstance(v, int) and 1 <= v <= n for v in c),
            "circuit vertex out of range 1..%d" % n,
        )
        _require(len(set(c)) == len(c) == d, "circuit %r must have exactly %d distinct vertices" % (c, d))
        parsed.append(frozenset(c))
    return Clutter(n, d, parsed)


def clutter_to_obj(C: Clutter) -> dict:
    return {
        "n": C.n,
        "d": C.d,
        "circuits": [sorted(c) for c in sorted(C.circuits, key=sorted)],
    }


def load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError("cannot read %s: %s" % (path, exc)) from exc
    except json.JSONDecodeError as exc:
        raise InputError("invalid JSON in %s: %s" % (path, exc)) from exc
