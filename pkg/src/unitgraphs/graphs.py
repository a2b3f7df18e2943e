"""Graphs on the elements of a realized ring.

Three kinds are supported, all simple and undirected:

* unit:        x ~ y  iff  x != y and x + y is a unit,
* cayley:      x ~ y  iff  x != y and x - y is a unit,
* generalized: x ~ y  iff  x != y and x + u*y is a unit for some unit u
               (decided by direct search over the units; offered for
               brute-force exploration only).

Adjacency is stored as one bitmask row per vertex, which keeps
256-vertex rings cheap and makes independence tests single AND
operations.
"""

from __future__ import annotations

import json
from functools import lru_cache

import numpy as np

from .rings import Ring, VertexSet, _bools_to_mask

DEFAULT_GRAPH_CAP = 4096

KINDS = ("unit", "cayley", "generalized")


class GraphError(Exception):
    pass


class Graph:
    """Immutable simple graph on vertices 0..n-1 with bitmask rows."""

    __slots__ = ("n", "kind", "rows", "ring_expr")

    def __init__(self, n: int, kind: str, rows, ring_expr: str | None = None):
        self.n = n
        self.kind = kind
        self.rows = tuple(rows)
        self.ring_expr = ring_expr
        if len(self.rows) != n:
            raise GraphError("row count does not match vertex count")
        for x, row in enumerate(self.rows):
            if (row >> x) & 1:
                raise GraphError(f"loop at vertex {x}")
            if row >> n:
                raise GraphError(f"row {x} has bits outside the vertex range")

    def validate(self) -> None:
        """Full symmetry check (builders are symmetric by construction;
        imported graphs and tests call this explicitly)."""
        for x in range(self.n):
            for y in VertexSet(self.rows[x], self.n):
                if not (self.rows[y] >> x) & 1:
                    raise GraphError(f"adjacency is not symmetric at ({x}, {y})")

    def degree(self, x: int) -> int:
        return self.rows[x].bit_count()

    def neighbors(self, x: int) -> VertexSet:
        return VertexSet(self.rows[x], self.n)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for x in range(self.n):
            row = self.rows[x] >> (x + 1)
            y = x + 1
            while row:
                if row & 1:
                    out.append((x, y))
                row >>= 1
                y += 1
        return out

    def edge_count(self) -> int:
        return sum(self.degree(x) for x in range(self.n)) // 2

    def __repr__(self) -> str:
        src = f" of {self.ring_expr}" if self.ring_expr else ""
        return f"<Graph {self.kind}{src}: {self.n} vertices, {self.edge_count()} edges>"


def _unit_bool(ring: Ring) -> np.ndarray:
    out = np.zeros(ring.order, dtype=bool)
    for u in ring.unit_set:
        out[u] = True
    return out


@lru_cache(maxsize=None)
def build_graph(ring: Ring, kind: str = "unit", cap: int = DEFAULT_GRAPH_CAP) -> Graph:
    """Build the graph of the given kind on ring's elements.

    Rings are interned per descriptor, so repeated calls share one graph.
    """
    if kind not in KINDS:
        raise GraphError(f"unknown graph kind {kind!r}")
    n = ring.order
    if n > cap:
        raise GraphError(f"ring order {n} exceeds the graph cap {cap}")
    units = _unit_bool(ring)
    rows = []
    if kind == "unit":
        for x in range(n):
            bits = units[ring.add_row(x)]
            bits[x] = False
            rows.append(_bools_to_mask(bits))
    elif kind == "cayley":
        for x in range(n):
            bits = units[ring.sub_from_row(x)]
            bits[x] = False
            rows.append(_bools_to_mask(bits))
    else:
        unit_list = ring.unit_set.indices()
        table = ring.mul_table
        adj = np.zeros((n, n), dtype=bool)
        for y in range(n):
            if table is not None:
                uy = np.unique(table[unit_list, y])
            else:
                uy = sorted({ring.mul(u, y) for u in unit_list})
            col = np.zeros(n, dtype=bool)
            for v in uy:
                col |= units[ring.add_row(int(v))]
            adj[:, y] = col
        np.fill_diagonal(adj, False)
        if not np.array_equal(adj, adj.T):
            raise GraphError("generalized adjacency came out asymmetric")
        rows = [_bools_to_mask(adj[x]) for x in range(n)]
    return Graph(n, kind, rows, ring_expr=ring.expr)


def graphs_equal(g1: Graph, g2: Graph) -> bool:
    if g1.n != g2.n:
        raise GraphError(f"vertex counts differ: {g1.n} vs {g2.n}")
    return g1.rows == g2.rows


# ---------------------------------------------------------------------------
# export / import
# ---------------------------------------------------------------------------

def graph_to_dot(g: Graph) -> str:
    lines = ["graph G {"]
    for v in range(g.n):
        lines.append(f"  {v};")
    for a, b in g.edges():
        lines.append(f"  {a} -- {b};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(g: Graph) -> str:
    payload = {"n": g.n, "kind": g.kind, "edges": [list(e) for e in g.edges()]}
    return json.dumps(payload)


def graph_from_json(text: str) -> Graph:
    data = json.loads(text)
    n = int(data["n"])
    kind = data.get("kind", "imported")
    rows = [0] * n
    for a, b in data["edges"]:
        a, b = int(a), int(b)
        if not (0 <= a < n and 0 <= b < n) or a == b:
            raise GraphError(f"bad edge [{a}, {b}]")
        rows[a] |= 1 << b
        rows[b] |= 1 << a
    g = Graph(n, kind, rows)
    g.validate()
    return g
