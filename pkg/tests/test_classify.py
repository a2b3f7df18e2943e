from unitgraphs.classify import (
    SKIPPED,
    classify_cm,
    classify_well_covered,
    cross_validate,
)
from unitgraphs.descriptors import Gf, GroupAlgebra, Product, Q8, Zn, Cn
from unitgraphs.dsl import parse_ring_expr
from unitgraphs.graphs import build_graph
from unitgraphs.indsets import well_covered_bruteforce
from unitgraphs.rings import build_ring, quotient_by_radical


def test_classify_well_covered_examples():
    assert classify_well_covered(Zn(8)) is True
    assert classify_well_covered(Zn(6)) is False
    assert classify_well_covered(Product((Gf(4), Gf(4)))) is True
    assert classify_well_covered(Product((Gf(4), Gf(2)))) is False
    assert classify_well_covered(GroupAlgebra(2, Q8())) is True
    # outside the symbolic shape rules: unknown, never a guess
    assert classify_well_covered(GroupAlgebra(2, Cn(3))) is None


def test_classify_well_covered_shape_patterns():
    assert classify_well_covered(parse_ring_expr("M2(GF(4))")) is True
    assert classify_well_covered(parse_ring_expr("M2(GF(3))")) is False
    assert classify_well_covered(parse_ring_expr("M3(GF(2))")) is False
    assert classify_well_covered(parse_ring_expr("Z2 x Z2 x Z2 x Z2 x Z2")) is True
    assert classify_well_covered(parse_ring_expr("GF(8) x GF(8)")) is True
    assert classify_well_covered(parse_ring_expr("GF(8) x GF(8) x GF(8)")) is False
    assert classify_well_covered(parse_ring_expr("Z4 x Z4")) is True  # quotient Z2 x Z2


def test_classify_cm_examples():
    assert classify_cm(Gf(4)) == {"cm": True, "shellable": True, "gorenstein": False}
    assert classify_cm(Product((Zn(2), Zn(2), Zn(2)))) == {
        "cm": True,
        "shellable": True,
        "gorenstein": True,
    }
    assert classify_cm(parse_ring_expr("M2(GF(2))")) == {
        "cm": False,
        "shellable": False,
        "gorenstein": False,
    }
    assert classify_cm(Zn(2)) == {"cm": True, "shellable": True, "gorenstein": True}
    assert classify_cm(Gf(3)) == {"cm": False, "shellable": False, "gorenstein": False}


def test_predicted_invariants_hold(catalog_descriptors):
    for expr, descriptor in catalog_descriptors:
        wc = classify_well_covered(descriptor)
        cm = classify_cm(descriptor)
        assert cm["cm"] == cm["shellable"], expr
        if cm["gorenstein"]:
            assert cm["cm"], expr
        ring = build_ring(descriptor)
        quot = quotient_by_radical(ring)
        if quot.characteristic != 2:
            assert wc is False, expr
        if cm["cm"]:
            assert wc is True, expr  # CM graphs are well-covered


def test_classifier_matches_bruteforce_across_catalog(catalog_descriptors):
    for expr, descriptor in catalog_descriptors:
        predicted = classify_well_covered(descriptor)
        assert predicted is not None, expr
        observed = well_covered_bruteforce(build_graph(build_ring(descriptor)))
        assert predicted == observed, expr


def test_classifier_matches_bruteforce_on_boundary_shapes():
    # shapes just outside / inside each pattern of the classification
    cases = {
        "Z4 x M2(GF(2))": False,  # field block + matrix block
        "Z2 x M2(Z4)": False,
        "M2(GF(2)) x M2(GF(2))": False,  # two matrix blocks
        "Z2 x GF(4)": False,  # distinct characteristic-2 fields
        "GF(8) x GF(8)": True,  # two copies of one field
        "Z8 x Z8": True,  # quotient is Z2 x Z2
        "M3(GF(2))": False,  # 3x3 matrices are out
        "Z2 x Z4": True,
        "GA(GF(2), C2) x Z2": True,
    }
    for expr, expected in cases.items():
        descriptor = parse_ring_expr(expr)
        assert classify_well_covered(descriptor) is expected, expr
        observed = well_covered_bruteforce(build_graph(build_ring(descriptor)))
        assert observed is expected, expr


def test_cross_validate_examples():
    report = cross_validate(Zn(4), ("wc",))
    assert report.predicted["well_covered"] is True
    assert report.observed["well_covered"] is True
    assert report.agreement is True

    report = cross_validate(Zn(3), ("wc",))
    assert report.predicted["well_covered"] is False
    assert report.observed["well_covered"] is False
    assert report.agreement is True


def test_cross_validate_group_algebra_q8():
    report = cross_validate(GroupAlgebra(2, Q8()), ("wc",))
    assert report.predicted["well_covered"] is True
    assert report.observed["well_covered"] is True
    assert report.agreement is True
    assert report.quotient_char == 2
    assert report.shape == ((1, 2),)


def test_cross_validate_cm_trio():
    report = cross_validate(Zn(4), ("wc", "cm", "shellable", "gorenstein"))
    assert report.predicted["cm"] is False
    assert report.observed["cm_gf2"] is False
    assert report.observed["shellable"] is False
    assert report.observed["gorenstein_gf2"] is False
    assert report.agreement is True

    report = cross_validate(Gf(4), ("cm", "shellable", "gorenstein"))
    assert report.observed["cm_gf2"] is True
    assert report.observed["shellable"] is True
    assert report.observed["gorenstein_gf2"] is False
    assert report.agreement is True


def test_cross_validate_marks_skips_not_disagreements():
    # M2(GF(2)) has 24 facets; the default shellability cap (12) skips it
    report = cross_validate(parse_ring_expr("M2(GF(2))"), ("shellable",))
    assert report.observed["shellable"] == SKIPPED
    assert report.agreement is None
    report = cross_validate(parse_ring_expr("M2(GF(2))"), ("shellable",), facet_cap=30)
    assert report.observed["shellable"] is False
    assert report.agreement is True


def test_report_serializes():
    report = cross_validate(Zn(4), ("wc",))
    data = report.to_dict()
    assert data["ring"] == "Z4"
    assert data["predicted"]["well_covered"] is True
    assert data["shape"] == [[1, 2]]
    assert isinstance(data["runtime_ms"], int)


def test_classify_cm_matches_complex_oracles_small(catalog_descriptors):
    from unitgraphs.complexes import (
        independence_complex,
        is_cm_gf2,
        is_gorenstein_gf2,
        is_shellable,
    )

    for expr, descriptor in catalog_descriptors:
        ring = build_ring(descriptor)
        if ring.order > 16:
            continue
        predicted = classify_cm(descriptor)
        c = independence_complex(build_graph(ring))
        assert is_cm_gf2(c) == predicted["cm"], expr
        assert is_gorenstein_gf2(c) == predicted["gorenstein"], expr
        shell = is_shellable(c, facet_cap=300)
        assert shell == predicted["shellable"], expr
