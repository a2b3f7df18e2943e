import json

import pytest

from unitgraphs.descriptors import Gf, Mat, Zn
from unitgraphs.dsl import parse_ring_expr
from unitgraphs.graphs import (
    GraphError,
    build_graph,
    graph_from_json,
    graph_to_dot,
    graph_to_json,
    graphs_equal,
)
from unitgraphs.rings import build_ring, quotient_by_radical


def _edges(expr, kind="unit"):
    return build_graph(build_ring(parse_ring_expr(expr)), kind).edges()


def test_unit_graph_examples():
    assert _edges("Z4") == [(0, 1), (0, 3), (1, 2), (2, 3)]  # a 4-cycle
    g = build_graph(build_ring(Gf(4)))
    assert g.edge_count() == 6  # complete on 4 vertices
    g9 = build_graph(build_ring(Zn(9)))
    assert (g9.rows[1] >> 4) & 1  # 1 + 4 = 5 is a unit mod 9


def test_graph_is_loop_free_and_symmetric(catalog_descriptors):
    for expr, descriptor in catalog_descriptors:
        ring = build_ring(descriptor)
        for kind in ("unit", "cayley"):
            build_graph(ring, kind).validate()


def test_cayley_graph_is_unit_regular(catalog_descriptors):
    for expr, descriptor in catalog_descriptors:
        ring = build_ring(descriptor)
        g = build_graph(ring, "cayley")
        u = len(ring.unit_set)
        assert all(g.degree(x) == u for x in range(g.n)), expr


def test_unit_graph_degree_formula(catalog_descriptors):
    # degree is |U| - 1 when 2x is a unit (x + x = 2x discards one), else |U|
    for expr, descriptor in catalog_descriptors:
        ring = build_ring(descriptor)
        g = build_graph(ring, "unit")
        u = len(ring.unit_set)
        for x in range(g.n):
            expected = u - 1 if ring.is_unit(ring.add(x, x)) else u
            assert g.degree(x) == expected, (expr, x)


def test_graphs_equal_examples():
    z8 = build_ring(Zn(8))
    assert graphs_equal(build_graph(z8, "cayley"), build_graph(z8, "unit"))
    z3 = build_ring(Zn(3))
    assert not graphs_equal(build_graph(z3, "cayley"), build_graph(z3, "unit"))
    g = build_graph(build_ring(Zn(4)))
    assert graphs_equal(g, g)
    with pytest.raises(GraphError):
        graphs_equal(build_graph(z3), build_graph(z8))


def test_unit_equals_cayley_iff_quotient_char_two(catalog_descriptors):
    for expr, descriptor in catalog_descriptors:
        ring = build_ring(descriptor)
        quot = quotient_by_radical(ring)
        same = graphs_equal(build_graph(ring, "unit"), build_graph(ring, "cayley"))
        assert same == (quot.characteristic == 2), expr


def test_adjacency_descends_to_quotient_when_two_is_nonunit(catalog_descriptors):
    # for 2 a zero divisor: x ~ y in the unit graph iff their images are
    # adjacent in the quotient's unit graph (equal images force non-adjacency)
    for expr, descriptor in catalog_descriptors:
        ring = build_ring(descriptor)
        if ring.is_unit(ring.add(ring.one, ring.one)) or ring.order > 300:
            continue
        quot = quotient_by_radical(ring)
        g = build_graph(ring, "unit")
        gq = build_graph(quot, "unit")
        for x in range(ring.order):
            xq = quot.project(x)
            for y in range(x + 1, ring.order):
                yq = quot.project(y)
                adj = bool((g.rows[x] >> y) & 1)
                if xq == yq:
                    assert not adj, expr
                else:
                    assert adj == bool((gq.rows[xq] >> yq) & 1), expr


def test_generalized_unit_graph_of_field_is_complete():
    for q in (2, 3, 4, 5, 8, 9):
        g = build_graph(build_ring(Gf(q)), "generalized")
        assert g.edge_count() == q * (q - 1) // 2, q


def test_generalized_contains_unit_and_cayley():
    for expr in ("Z4", "Z6", "Z2 x Z3", "M2(GF(2))"):
        ring = build_ring(parse_ring_expr(expr))
        gu = build_graph(ring, "unit")
        gc = build_graph(ring, "cayley")
        gg = build_graph(ring, "generalized")
        for x in range(ring.order):
            assert gu.rows[x] & ~gg.rows[x] == 0, expr
            assert gc.rows[x] & ~gg.rows[x] == 0, expr


def test_dot_export_k2():
    dot = graph_to_dot(build_graph(build_ring(Zn(2))))
    edge_lines = [line for line in dot.splitlines() if "--" in line]
    assert edge_lines == ["  0 -- 1;"]


def test_json_export_z4():
    payload = json.loads(graph_to_json(build_graph(build_ring(Zn(4)))))
    assert payload == {
        "n": 4,
        "kind": "unit",
        "edges": [[0, 1], [0, 3], [1, 2], [2, 3]],
    }


def test_json_export_edgeless():
    g = graph_from_json(json.dumps({"n": 3, "kind": "imported", "edges": []}))
    assert json.loads(graph_to_json(g))["edges"] == []


def test_json_round_trip(catalog_descriptors):
    for expr, descriptor in catalog_descriptors:
        ring = build_ring(descriptor)
        if ring.order > 100:
            continue
        g = build_graph(ring, "unit")
        back = graph_from_json(graph_to_json(g))
        assert back.n == g.n and back.rows == g.rows, expr


def test_json_import_rejects_bad_edges():
    with pytest.raises(GraphError):
        graph_from_json(json.dumps({"n": 2, "kind": "unit", "edges": [[0, 2]]}))
    with pytest.raises(GraphError):
        graph_from_json(json.dumps({"n": 2, "kind": "unit", "edges": [[1, 1]]}))


def test_graph_cap():
    ring = build_ring(Zn(100))
    with pytest.raises(GraphError):
        build_graph(ring, "unit", cap=50)


def test_quotient_rings_build_graphs():
    quot = quotient_by_radical(build_ring(Mat(2, Zn(4))))
    g = build_graph(quot, "unit")
    m22 = build_graph(build_ring(Mat(2, Gf(2))))
    # the quotient of M2(Z4) is M2(GF(2)) up to the canonical re-indexing,
    # and here the canonical encodings line up exactly
    assert graphs_equal(g, m22)
