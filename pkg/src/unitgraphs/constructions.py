"""Explicit maximal-independent-set constructions, each verified.

Every function here *constructs* a set by a closed-form recipe and then
*checks* the claimed property with the independent-set predicates, so a
successful return certifies the recipe on that input.  Failures raise
ConstructionError rather than returning unverified data.

The recipes:

* ``signature_set``       -- the 2^n diagonal matrices with +-1 entries
  form a maximal independent set of the unit graph of M_n(F) when
  char(F) is odd.
* ``zero_first_row_set``  -- the q^(n^2-n) matrices with first row zero
  form a maximal independent set of that unit graph in any
  characteristic.
* ``product_nonunit_extend`` / ``product_unit_sets`` -- extend maximal
  independent sets of factors to the product ring: a non-unit one in a
  single coordinate with everything else free, or (when 2 is a unit) a
  Cartesian product of all-unit ones.
* ``lift_nonunit_mis`` / ``lift_unit_mis_reps`` -- move maximal
  independent sets of R/J(R) back to R: a non-unit set lifts to the
  union of its radical cosets, an all-unit set (when 2 is a unit in R)
  lifts to any transversal, here the canonical smallest-index one.
* ``rank_normal_form``    -- invertible P, Q with P*A*Q = [[I_t,0],[0,0]]
  by full-pivot Gauss-Jordan elimination.
* ``nonunit_complement_witness`` -- in a semisimple product of matrix
  rings, every nonzero non-unit y admits a non-unit z with y + z a
  unit; z is assembled block-wise from the rank normal form.
* ``mixed_char_product_witnesses`` -- for semisimple R, S with
  char(R) = 2 and char(S) odd, two maximal independent sets of the unit
  graph of R x S with different sizes (so that graph is not
  well-covered).
* ``two_size_witnesses``  -- for any supported ring in which 2 is a
  unit, two maximal independent sets of different sizes, produced by
  running the signature and zero-first-row constructions inside the
  semisimple quotient and lifting both.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .descriptors import Gf, Mat, Product, factorize
from .fields import GfField, mat_det, mat_identity, mat_inv, mat_mul
from .graphs import Graph, build_graph
from .indsets import is_maximal_independent
from .rings import (
    GfRing,
    MatRing,
    ProductRing,
    QuotientRing,
    Ring,
    VertexSet,
    build_ring,
    jacobson_radical,
    quotient_by_radical,
)
from .wedderburn import semisimple_form


class ConstructionError(Exception):
    pass


def _unit_graph(ring: Ring) -> Graph:
    return build_graph(ring, "unit")


def _require_mis(ring: Ring, s: VertexSet, what: str) -> None:
    if not is_maximal_independent(_unit_graph(ring), s):
        raise ConstructionError(
            f"{what} is not a maximal independent set of the unit graph of "
            f"{ring.expr}"
        )


# ---------------------------------------------------------------------------
# matrix-ring constructions
# ---------------------------------------------------------------------------

def matrix_ring(n: int, q: int) -> Ring:
    """The canonical home of the matrix constructions below.

    Built at the arithmetic cap: the recipes need only element encoding,
    while eager verification additionally needs the ring to fit the
    graph cap (pass verify=False above it).
    """
    from .rings import HARD_ORDER_CAP

    return build_ring(Mat(n, Gf(q)), order_cap=HARD_ORDER_CAP)


def signature_set(n: int, q: int, verify: bool = True) -> VertexSet:
    """Diagonal +-1 matrices inside M_n(GF(q)); refuses characteristic 2,
    where +1 = -1 collapses the set to the identity."""
    ring = matrix_ring(n, q)
    assert isinstance(ring, MatRing)
    fld = ring.base.field_view()
    if fld.p == 2:
        raise ConstructionError(
            "signature matrices need odd characteristic (in characteristic "
            "2 the set degenerates to the identity)"
        )
    plus, minus = fld.one, fld.neg(fld.one)
    members = []
    for signs in itertools.product((plus, minus), repeat=n):
        rows = [
            [signs[i] if i == j else 0 for j in range(n)] for i in range(n)
        ]
        members.append(ring.encode_entries(rows))
    out = VertexSet.from_indices(members, ring.order)
    if len(out) != 2**n:
        raise ConstructionError("signature set has the wrong cardinality")
    if verify:
        _require_mis(ring, out, "the signature set")
    return out


def zero_first_row_set(n: int, q: int, verify: bool = True) -> VertexSet:
    """All matrices in M_n(GF(q)) whose first row is zero; size q^(n^2-n)."""
    ring = matrix_ring(n, q)
    # first-row entries occupy the n least significant base-q digits
    stride = q**n
    members = [m * stride for m in range(q ** (n * n - n))]
    out = VertexSet.from_indices(members, ring.order)
    if verify:
        _require_mis(ring, out, "the zero-first-row set")
    return out


# ---------------------------------------------------------------------------
# product-ring constructions
# ---------------------------------------------------------------------------

def _product_ring(rings) -> ProductRing | Ring:
    return build_ring(Product(tuple(r.descriptor for r in rings)))


def product_nonunit_extend(
    rings, i: int, m_i: VertexSet, verify: bool = True
) -> VertexSet:
    """R_0 x ... x M_i x ... x R_{t-1}: fix a non-unit maximal independent
    set in coordinate i (0-based), leave every other coordinate free."""
    rings = list(rings)
    if not 0 <= i < len(rings):
        raise ConstructionError(f"factor position {i} out of range")
    target = rings[i]
    if m_i.universe != target.order:
        raise ConstructionError("set universe does not match the chosen factor")
    if m_i.mask & target.unit_set.mask:
        raise ConstructionError("set must avoid the units of its factor")
    if verify:
        _require_mis(target, m_i, "the factor set")
    prod = _product_ring(rings)
    choices = [
        m_i.indices() if j == i else range(r.order) for j, r in enumerate(rings)
    ]
    members = []
    if isinstance(prod, ProductRing):
        for combo in itertools.product(*choices):
            members.append(prod.encode_components(list(combo)))
    else:  # single factor: the product collapses to the factor itself
        members = m_i.indices()
    out = VertexSet.from_indices(members, prod.order)
    if verify:
        _require_mis(prod, out, "the extended product set")
    return out


def product_unit_sets(rings, sets, verify: bool = True) -> VertexSet:
    """Cartesian product of all-unit maximal independent sets; requires
    2 to be a unit of the product ring."""
    rings = list(rings)
    sets = list(sets)
    if len(rings) != len(sets):
        raise ConstructionError("one set per factor is required")
    prod = _product_ring(rings)
    two = prod.add(prod.one, prod.one)
    if not prod.is_unit(two):
        raise ConstructionError("2 is a zero divisor in the product ring")
    for r, s in zip(rings, sets):
        if s.universe != r.order:
            raise ConstructionError("set universe does not match its factor")
        if s.mask & ~r.unit_set.mask:
            raise ConstructionError("sets must consist of units")
        if verify:
            _require_mis(r, s, "a factor set")
    if isinstance(prod, ProductRing):
        members = [
            prod.encode_components(list(combo))
            for combo in itertools.product(*[s.indices() for s in sets])
        ]
    else:
        members = sets[0].indices()
    out = VertexSet.from_indices(members, prod.order)
    if verify:
        _require_mis(prod, out, "the product set")
    return out


# ---------------------------------------------------------------------------
# radical lifting
# ---------------------------------------------------------------------------

def lift_nonunit_mis(
    ring: Ring, quotient_mis: VertexSet, verify: bool = True
) -> VertexSet:
    """Union of the radical cosets of a non-unit maximal independent set
    of the unit graph of R/J(R); size |set| * |J(R)|."""
    quot = quotient_by_radical(ring)
    _check_quotient_set(quot, quotient_mis, want_units=False, verify=verify)
    rad = quot.radical.indices()
    members = [
        ring.add(quot.representatives[a], j) for a in quotient_mis for j in rad
    ]
    out = VertexSet.from_indices(members, ring.order)
    if len(out) != len(quotient_mis) * len(rad):
        raise ConstructionError("coset union has the wrong cardinality")
    if verify:
        _require_mis(ring, out, "the lifted coset union")
    return out


def lift_unit_mis_reps(
    ring: Ring, quotient_mis: VertexSet, verify: bool = True
) -> VertexSet:
    """Canonical (smallest-index) representatives of an all-unit maximal
    independent set of the unit graph of R/J(R); needs 2 a unit in R."""
    two = ring.add(ring.one, ring.one)
    if not ring.is_unit(two):
        raise ConstructionError("2 must be a unit to lift by representatives")
    quot = quotient_by_radical(ring)
    _check_quotient_set(quot, quotient_mis, want_units=True, verify=verify)
    members = [quot.representatives[a] for a in quotient_mis]
    out = VertexSet.from_indices(members, ring.order)
    if len(out) != len(quotient_mis):
        raise ConstructionError("representative lift changed the cardinality")
    if verify:
        _require_mis(ring, out, "the representative lift")
    return out


def _check_quotient_set(
    quot: QuotientRing, s: VertexSet, want_units: bool, verify: bool
) -> None:
    if s.universe != quot.order:
        raise ConstructionError(
            "set must be given in quotient-ring indices "
            f"(universe {quot.order}, got {s.universe})"
        )
    units = quot.unit_set.mask
    if want_units and s.mask & ~units:
        raise ConstructionError("set must consist of units of the quotient")
    if not want_units and s.mask & units:
        raise ConstructionError("set must avoid the units of the quotient")
    if verify:
        _require_mis(quot, s, "the quotient set")


# ---------------------------------------------------------------------------
# rank normal form and the complement witness
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RankNormalForm:
    """Invertible p, q (rows of field indices) with p @ a @ q equal to
    the block matrix [[I_rank, 0], [0, 0]]."""

    p: tuple[tuple[int, ...], ...]
    q: tuple[tuple[int, ...], ...]
    rank: int


def rank_normal_form(fld: GfField, a) -> RankNormalForm:
    """Full-pivot Gauss-Jordan over GF(q); the pivot is the first nonzero
    entry of the active submatrix in row-major order."""
    m = len(a)
    b = [list(row) for row in a]
    if any(len(row) != m for row in b):
        raise ConstructionError("matrix must be square")
    p = mat_identity(fld, m)
    q = mat_identity(fld, m)
    t = 0
    while t < m:
        pivot = None
        for r in range(t, m):
            for c in range(t, m):
                if b[r][c] != 0:
                    pivot = (r, c)
                    break
            if pivot:
                break
        if pivot is None:
            break
        r, c = pivot
        if r != t:
            b[t], b[r] = b[r], b[t]
            p[t], p[r] = p[r], p[t]
        if c != t:
            for row in b:
                row[t], row[c] = row[c], row[t]
            for row in q:
                row[t], row[c] = row[c], row[t]
        inv = fld.inv(b[t][t])
        b[t] = [fld.mul(inv, v) for v in b[t]]
        p[t] = [fld.mul(inv, v) for v in p[t]]
        for i in range(m):
            if i == t or b[i][t] == 0:
                continue
            f = b[i][t]
            b[i] = [fld.sub(v, fld.mul(f, w)) for v, w in zip(b[i], b[t])]
            p[i] = [fld.sub(v, fld.mul(f, w)) for v, w in zip(p[i], p[t])]
        for j in range(m):
            if j == t or b[t][j] == 0:
                continue
            f = b[t][j]
            for row, qrow in zip(b, q):
                row[j] = fld.sub(row[j], fld.mul(f, row[t]))
                qrow[j] = fld.sub(qrow[j], fld.mul(f, qrow[t]))
        t += 1
    return RankNormalForm(
        p=tuple(tuple(row) for row in p),
        q=tuple(tuple(row) for row in q),
        rank=t,
    )


def _leaf_rings(ring: Ring):
    if isinstance(ring, ProductRing):
        out = []
        for f in ring.factors:
            out.extend(_leaf_rings(f))
        return out
    return [ring]


def _leaf_values(ring: Ring, x: int):
    if isinstance(ring, ProductRing):
        out = []
        for f, c in zip(ring.factors, ring.decode_components(x)):
            out.extend(_leaf_values(f, c))
        return out
    return [x]


def _encode_leaves(ring: Ring, values, pos=0):
    if isinstance(ring, ProductRing):
        comps = []
        for f in ring.factors:
            v, pos = _encode_leaves(f, values, pos)
            comps.append(v)
        return ring.encode_components(comps), pos
    return values[pos], pos + 1


def _matrix_view(ring: Ring):
    """(field, size) when the ring is a field or a matrix ring over one."""
    fld = ring.field_view()
    if fld is not None:
        return fld, 1
    if isinstance(ring, MatRing):
        base_fld = ring.base.field_view()
        if base_fld is not None:
            return base_fld, ring.k
    return None


def nonunit_complement_witness(s_ring: Ring, y: int, verify: bool = True) -> int:
    """For a nonzero non-unit y of a semisimple product of matrix rings
    over fields, a non-unit z with y + z a unit.

    Block rule: a zero block gets the identity, an invertible block gets
    zero, and a singular nonzero block A of rank t gets
    P^-1 [[0,0],[0,I_{m-t}]] Q^-1 where P A Q is the rank normal form.
    """
    if y == s_ring.zero:
        raise ConstructionError("y must be nonzero")
    if s_ring.is_unit(y):
        raise ConstructionError("y must not be a unit")
    leaves = _leaf_rings(s_ring)
    views = [_matrix_view(r) for r in leaves]
    if any(v is None for v in views):
        raise ConstructionError(
            f"{s_ring.expr} is not a product of matrix rings over fields"
        )
    parts = []
    for leaf, view, value in zip(leaves, views, _leaf_values(s_ring, y)):
        fld, size = view
        if size == 1:
            parts.append(fld.one if value == 0 else 0)
            continue
        assert isinstance(leaf, MatRing)
        rows = leaf.decode_entries(value)
        if all(v == 0 for row in rows for v in row):
            parts.append(leaf.one)
        elif mat_det(fld, rows) != 0:
            parts.append(0)
        else:
            nf = rank_normal_form(fld, rows)
            t = nf.rank
            middle = [
                [fld.one if (i == j and i >= t) else 0 for j in range(size)]
                for i in range(size)
            ]
            u = mat_inv(fld, [list(r) for r in nf.p])
            v = mat_inv(fld, [list(r) for r in nf.q])
            z_rows = mat_mul(fld, mat_mul(fld, u, middle), v)
            parts.append(leaf.encode_entries(z_rows))
    z, _ = _encode_leaves(s_ring, parts)
    if verify:
        if s_ring.is_unit(z):
            raise ConstructionError("witness came out a unit")
        if not s_ring.is_unit(s_ring.add(y, z)):
            raise ConstructionError("y + witness is not a unit")
    return z


# ---------------------------------------------------------------------------
# non-well-covered witnesses
# ---------------------------------------------------------------------------

def _require_semisimple(ring: Ring, name: str) -> None:
    if jacobson_radical(ring).mask != 1:
        raise ConstructionError(f"{name} = {ring.expr} is not semisimple")


def _zero_first_row_of_leaf(leaf: Ring) -> VertexSet:
    view = _matrix_view(leaf)
    if view is None:
        raise ConstructionError(
            f"{leaf.expr} is not a matrix ring over a field"
        )
    _, size = view
    if size == 1:
        return VertexSet.from_indices([0], leaf.order)
    stride = leaf.base.order**size
    return VertexSet.from_indices(
        [m * stride for m in range(leaf.base.order ** (size * size - size))],
        leaf.order,
    )


def mixed_char_product_witnesses(
    r_ring: Ring, s_ring: Ring, verify: bool = True
) -> tuple[VertexSet, VertexSet]:
    """Two different-size maximal independent sets of the unit graph of
    R x S, for semisimple R of characteristic 2 and semisimple S of odd
    characteristic.

    The first is M x S, where M fixes the zero-first-row set in the
    leading factor of R; the second is (R x {0}) union (M x X) with X
    the non-units of S.  Their sizes |M||S| and |R| + |M||X| - |M| have
    different parity, so the unit graph is not well-covered.
    """
    _require_semisimple(r_ring, "R")
    _require_semisimple(s_ring, "S")
    if r_ring.characteristic != 2:
        raise ConstructionError("R must have characteristic 2")
    if s_ring.characteristic % 2 == 0:
        raise ConstructionError("S must have odd characteristic")
    r_leaves = _leaf_rings(r_ring)
    m1 = _zero_first_row_of_leaf(r_leaves[0])
    if len(r_leaves) == 1:
        m_set = m1
    else:
        m_set = product_nonunit_extend(r_leaves, 0, m1, verify=verify)
        if m_set.universe != r_ring.order:
            raise ConstructionError("factor flattening changed the encoding")
    prod = _product_ring([r_ring, s_ring])
    r_order, s_order = r_ring.order, s_ring.order
    m_times_s = VertexSet.from_indices(
        [a + r_order * b for a in m_set for b in range(s_order)], prod.order
    )
    nonunits = [b for b in range(s_order) if not s_ring.is_unit(b)]
    n_members = {a for a in range(r_order)}  # R x {0}
    n_members.update(a + r_order * b for a in m_set for b in nonunits)
    n_set = VertexSet.from_indices(sorted(n_members), prod.order)
    expected = r_order + len(m_set) * len(nonunits) - len(m_set)
    if len(n_set) != expected:
        raise ConstructionError("second witness has the wrong cardinality")
    if len(m_times_s) == len(n_set):
        raise ConstructionError("witness sizes unexpectedly agree")
    if verify:
        _require_mis(prod, m_times_s, "the first witness")
        _require_mis(prod, n_set, "the second witness")
    return m_times_s, n_set


def two_size_witnesses(
    ring: Ring, verify: bool = True
) -> tuple[VertexSet, VertexSet]:
    """Two different-size maximal independent sets of the unit graph of
    any supported ring in which 2 is a unit (hence: not well-covered).

    Inside the semisimple quotient, the product of the blocks' signature
    sets is an all-unit maximal independent set of size prod 2^(n_i); the
    zero-first-row set of the leading block times the remaining blocks is
    a non-unit one of odd size.  Both transport through the explicit
    semisimple form and lift to the ring.
    """
    two = ring.add(ring.one, ring.one)
    if not ring.is_unit(two):
        raise ConstructionError("2 must be a unit")
    form = semisimple_form(ring)
    for _, q in form.blocks:
        if factorize(q)[0][0] == 2:
            raise ConstructionError(
                "2 a unit forces every residue field to odd characteristic"
            )
    block_sign_sets = []
    for (n, q), bring in zip(form.blocks, form.block_rings):
        if isinstance(bring, GfRing):
            fld = bring.field
            block_sign_sets.append([fld.one, fld.neg(fld.one)])
        else:
            block_sign_sets.append(signature_set(n, q, verify=False).indices())
    sig_quotient = VertexSet.from_indices(
        [
            form.quotient_index(form.encode_blocks(list(combo)))
            for combo in itertools.product(*block_sign_sets)
        ],
        form.quotient.order,
    )
    lead_n, lead_q = form.blocks[0]
    lead_zero_rows = (
        [0]
        if lead_n == 1
        else zero_first_row_set(lead_n, lead_q, verify=False).indices()
    )
    rest = [range(r.order) for r in form.block_rings[1:]]
    zero_quotient = VertexSet.from_indices(
        [
            form.quotient_index(form.encode_blocks([first, *others]))
            for first in lead_zero_rows
            for others in itertools.product(*rest)
        ],
        form.quotient.order,
    )
    unit_lift = lift_unit_mis_reps(ring, sig_quotient, verify=verify)
    nonunit_lift = lift_nonunit_mis(ring, zero_quotient, verify=verify)
    expected_sig = 1
    for n, _ in form.blocks:
        expected_sig *= 2**n
    if len(unit_lift) != expected_sig:
        raise ConstructionError("signature lift has the wrong cardinality")
    if len(zero_quotient) % 2 == 0:
        raise ConstructionError("non-unit witness size should be odd")
    if len(unit_lift) == len(nonunit_lift):
        raise ConstructionError("witness sizes unexpectedly agree")
    return unit_lift, nonunit_lift
