"""Scan a ring catalog: structural classification vs brute force.

classify_well_covered looks only at the semisimple shape of R/J(R);
well_covered_bruteforce enumerates maximal independent sets until it
sees two sizes.  The point of the scan is that the two columns agree
everywhere.
"""

from unitgraphs import (
    build_graph,
    build_ring,
    classify_well_covered,
    parse_ring_expr,
    quotient_by_radical,
    well_covered_bruteforce,
    wedderburn_shape,
)

CATALOG = (
    [f"Z{n}" for n in range(2, 17)]
    + ["GF(4)", "GF(8)", "GF(9)", "GF(16)"]
    + ["Z2 x Z2", "Z2 x Z2 x Z2", "M2(GF(2))", "M2(GF(3))", "M2(Z4)"]
    + ["GF(4) x GF(4)", "GF(2) x GF(4)", "GA(GF(2), Q8)", "GA(GF(2), D4)"]
)

print(f"{'ring':<16} {'shape':<22} {'char(R/J)':<9} {'classified':<10} {'brute':<6}")
disagreements = 0
for expr in CATALOG:
    descriptor = parse_ring_expr(expr)
    ring = build_ring(descriptor)
    shape = wedderburn_shape(descriptor)
    quot_char = quotient_by_radical(ring).characteristic
    predicted = classify_well_covered(descriptor)
    observed = well_covered_bruteforce(build_graph(ring))
    mark = "" if predicted == observed else "   <-- DISAGREE"
    disagreements += predicted != observed
    shape_text = " + ".join(f"M{n}(GF({q}))" for n, q in shape)
    print(f"{expr:<16} {shape_text:<22} {quot_char:<9} {str(predicted):<10} {str(observed):<6}{mark}")

print(f"\n{disagreements} disagreement(s) out of {len(CATALOG)} rings")
