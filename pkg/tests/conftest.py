import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from unitgraphs.dsl import parse_ring_expr

# the ring catalog the agreement and property suites sweep over
CATALOG_EXPRS = (
    [f"Z{n}" for n in range(2, 17)]
    + [f"GF({q})" for q in (2, 3, 4, 5, 7, 8, 9, 16)]
    + ["Z2 x Z2", "Z2 x Z2 x Z2", "Z2 x Z2 x Z2 x Z2"]
    + [
        "M2(GF(2))",
        "M2(GF(3))",
        "Z2 x Z3",
        "Z4 x GF(4)",
        "GF(4) x GF(4)",
        "GF(2) x GF(4)",
        "M2(Z4)",
        "GA(GF(2), C2)",
        "GA(GF(2), C4)",
        "GA(GF(2), Q8)",
        "GA(GF(2), D4)",
    ]
)


@pytest.fixture(scope="session")
def catalog_descriptors():
    return [(expr, parse_ring_expr(expr)) for expr in CATALOG_EXPRS]
