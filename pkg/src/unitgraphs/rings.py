"""Realized finite rings with integer element indexing.

Every realized ring indexes its elements 0..order-1 with a deterministic
encoding, so element sets, graphs and reports are reproducible bit for
bit across runs:

* Zn            -- the residue itself,
* Gf(p^k)       -- little-endian base-p coefficient vector (see fields),
* Mat(k, base)  -- row-major base-|base| digits, entry (i, j) at digit
                   position i*k + j, first digit least significant,
* Product       -- mixed radix over the factors, factor 0 least
                   significant,
* GroupAlgebra  -- base-|F| digits of the coefficient vector, identity
                   element of the group first.

In every encoding the additive group is a direct sum of cyclic groups
acting digit-wise, which is what the vectorized helpers exploit.  Scalar
``add``/``neg``/``mul`` are the definitional operations; the cached
multiplication table and the per-kind unit-set fast paths are
optimizations that the test suite checks against them.
"""

from __future__ import annotations

import itertools
from functools import cached_property, lru_cache

import numpy as np

from .descriptors import (
    DescriptorError,
    Gf,
    GroupAlgebra,
    Mat,
    Product,
    RingDescriptor,
    Zn,
    descriptor_expr,
    descriptor_order,
    group_is_p_group,
    group_mul_table,
    group_order,
    is_prime,
    squarefree_radical,
    validate_descriptor,
)
from .fields import GfField

DEFAULT_ORDER_CAP = 4096
HARD_ORDER_CAP = 1 << 16
MUL_TABLE_CAP = 2048


class RingError(Exception):
    """Arithmetic-level failure (inconsistent inverses, bad element index)."""


class CapExceeded(RingError):
    """A configured size cap was exceeded."""


class UnsupportedStructure(RingError):
    """A structural closed form does not apply to this descriptor."""


class VertexSet:
    """Immutable set of element/vertex indices backed by an int bitmask."""

    __slots__ = ("mask", "universe")

    def __init__(self, mask: int, universe: int):
        if mask < 0 or mask >> universe:
            raise ValueError("mask has bits outside the universe")
        self.mask = mask
        self.universe = universe

    @classmethod
    def from_indices(cls, indices, universe: int) -> "VertexSet":
        mask = 0
        for i in indices:
            if not 0 <= i < universe:
                raise ValueError(f"index {i} outside universe of size {universe}")
            mask |= 1 << i
        return cls(mask, universe)

    def indices(self) -> list[int]:
        out = []
        m = self.mask
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return out

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.universe and (self.mask >> i) & 1 == 1

    def __iter__(self):
        return iter(self.indices())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexSet)
            and self.mask == other.mask
            and self.universe == other.universe
        )

    def __hash__(self) -> int:
        return hash((self.mask, self.universe))

    def __repr__(self) -> str:
        ids = self.indices()
        shown = ", ".join(map(str, ids[:12])) + (", ..." if len(ids) > 12 else "")
        return f"VertexSet({{{shown}}}, universe={self.universe})"


# ---------------------------------------------------------------------------
# base classes
# ---------------------------------------------------------------------------

class Ring:
    """Common interface of all realized rings.

    Instances are immutable after construction and safe to share between
    concurrent workers.
    """

    descriptor: RingDescriptor
    order: int
    zero: int = 0
    one: int

    # -- scalar arithmetic (definitional) -----------------------------------

    def add(self, x: int, y: int) -> int:
        raise NotImplementedError

    def neg(self, x: int) -> int:
        raise NotImplementedError

    def mul(self, x: int, y: int) -> int:
        raise NotImplementedError

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    # -- vectorized helpers --------------------------------------------------

    def add_many(self, x: int, ys: np.ndarray) -> np.ndarray:
        """x + y for every y in ys."""
        return np.array([self.add(x, int(y)) for y in ys], dtype=np.int64)

    def sub_from_many(self, x: int, ys: np.ndarray) -> np.ndarray:
        """x - y for every y in ys."""
        return np.array([self.sub(x, int(y)) for y in ys], dtype=np.int64)

    def add_row(self, x: int) -> np.ndarray:
        """x + y for every element y, as an index array of length order."""
        return self.add_many(x, np.arange(self.order))

    def sub_from_row(self, x: int) -> np.ndarray:
        return self.sub_from_many(x, np.arange(self.order))

    @cached_property
    def mul_table(self) -> np.ndarray | None:
        """Full multiplication table, or None above MUL_TABLE_CAP."""
        if self.order > MUL_TABLE_CAP:
            return None
        return self._build_mul_table()

    def _build_mul_table(self) -> np.ndarray:
        n = self.order
        table = np.empty((n, n), dtype=np.int64)
        for x in range(n):
            for y in range(n):
                table[x, y] = self.mul(x, y)
        return table

    @cached_property
    def add_table(self) -> np.ndarray | None:
        if self.order > MUL_TABLE_CAP:
            return None
        n = self.order
        table = np.empty((n, n), dtype=np.int64)
        for x in range(n):
            table[x] = self.add_row(x)
        return table

    # -- units ---------------------------------------------------------------

    @cached_property
    def unit_set(self) -> VertexSet:
        return VertexSet(self._compute_units(), self.order)

    def is_unit(self, x: int) -> bool:
        if not 0 <= x < self.order:
            raise RingError(f"element index {x} out of range")
        return (self.unit_set.mask >> x) & 1 == 1

    def _compute_units(self) -> int:
        return self._units_generic()

    def _units_generic(self) -> int:
        """Two-sided inverse search straight from the definition."""
        one = self.one
        table = self.mul_table
        if table is not None:
            right = table == one
            # in a finite ring a one-sided inverse is two-sided; anything
            # else signals an arithmetic bug
            if not np.array_equal(right, right.T):
                raise RingError("one-sided inverse found; arithmetic is inconsistent")
            mask = 0
            for x in np.nonzero(right.any(axis=1))[0]:
                mask |= 1 << int(x)
            return mask
        mask = 0
        for x in range(self.order):
            for y in range(self.order):
                if self.mul(x, y) == one:
                    if self.mul(y, x) != one:
                        raise RingError(
                            "one-sided inverse found; arithmetic is inconsistent"
                        )
                    mask |= 1 << x
                    break
        return mask

    # -- misc ----------------------------------------------------------------

    @cached_property
    def characteristic(self) -> int:
        acc = self.one
        k = 1
        while acc != self.zero:
            acc = self.add(acc, self.one)
            k += 1
            if k > self.order + 1:
                raise RingError("additive order of 1 exceeds ring order")
        return k

    def field_view(self) -> GfField | None:
        """Scalar field arithmetic if this ring is canonically a field."""
        return None

    @property
    def expr(self) -> str:
        return descriptor_expr(self.descriptor)

    def element_repr(self, x: int) -> str:
        return str(x)

    def __repr__(self) -> str:
        return f"<{type(self).__name__} {self.expr} order={self.order}>"


class PositionalRing(Ring):
    """Ring whose addition is digit-wise in its canonical encoding."""

    _moduli: tuple[int, ...]

    def _init_positional(self, moduli) -> None:
        self._moduli = tuple(int(m) for m in moduli)
        places = []
        acc = 1
        for m in self._moduli:
            places.append(acc)
            acc *= m
        self._places = tuple(places)
        self._np_moduli = np.array(self._moduli, dtype=np.int64)
        self._np_places = np.array(self._places, dtype=np.int64)

    @cached_property
    def _digit_matrix(self) -> np.ndarray:
        idx = np.arange(self.order, dtype=np.int64)[:, None]
        return (idx // self._np_places[None, :]) % self._np_moduli[None, :]

    def _digits_of(self, x: int) -> list[int]:
        return [(x // pl) % m for pl, m in zip(self._places, self._moduli)]

    def add(self, x: int, y: int) -> int:
        out = 0
        for pl, m in zip(self._places, self._moduli):
            out += ((x // pl + y // pl) % m) * pl
        return out

    def neg(self, x: int) -> int:
        out = 0
        for pl, m in zip(self._places, self._moduli):
            out += (-(x // pl) % m) * pl
        return out

    def add_many(self, x: int, ys: np.ndarray) -> np.ndarray:
        ys = np.asarray(ys, dtype=np.int64)
        d = (ys[:, None] // self._np_places + np.array(self._digits_of(x))) % self._np_moduli
        return d @ self._np_places

    def sub_from_many(self, x: int, ys: np.ndarray) -> np.ndarray:
        ys = np.asarray(ys, dtype=np.int64)
        d = (np.array(self._digits_of(x)) - ys[:, None] // self._np_places) % self._np_moduli
        return d @ self._np_places

    def add_row(self, x: int) -> np.ndarray:
        d = (self._digit_matrix + np.array(self._digits_of(x))) % self._np_moduli
        return d @ self._np_places

    def sub_from_row(self, x: int) -> np.ndarray:
        d = (np.array(self._digits_of(x)) - self._digit_matrix) % self._np_moduli
        return d @ self._np_places


# ---------------------------------------------------------------------------
# concrete ring kinds
# ---------------------------------------------------------------------------

class ZnRing(PositionalRing):
    def __init__(self, descriptor: Zn):
        self.descriptor = descriptor
        self.order = descriptor.n
        self.one = 1
        self._init_positional([descriptor.n])

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.order

    def neg(self, x: int) -> int:
        return -x % self.order

    def mul(self, x: int, y: int) -> int:
        return (x * y) % self.order

    def _build_mul_table(self) -> np.ndarray:
        idx = np.arange(self.order, dtype=np.int64)
        return (idx[:, None] * idx[None, :]) % self.order

    def _compute_units(self) -> int:
        n = self.order
        coprime = np.gcd(np.arange(n), n) == 1
        return _bools_to_mask(coprime)

    def field_view(self) -> GfField | None:
        return GfField(self.order) if is_prime(self.order) else None


class GfRing(PositionalRing):
    def __init__(self, descriptor: Gf):
        self.descriptor = descriptor
        self.field = GfField(descriptor.q)
        self.order = descriptor.q
        self.one = 1
        self._init_positional([self.field.p] * self.field.k)

    def mul(self, x: int, y: int) -> int:
        return self.field.mul(x, y)

    def inv(self, x: int) -> int:
        return self.field.inv(x)

    def _compute_units(self) -> int:
        return ((1 << self.order) - 1) & ~1

    def field_view(self) -> GfField:
        return self.field

    def element_repr(self, x: int) -> str:
        if self.field.k == 1:
            return str(x)
        coeffs = self.field.decode(x)
        terms = []
        for i, c in enumerate(coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                head = "" if c == 1 else str(c)
                terms.append(f"{head}g" if i == 1 else f"{head}g^{i}")
        return "+".join(terms) if terms else "0"


class MatRing(PositionalRing):
    def __init__(self, descriptor: Mat, base: Ring):
        self.descriptor = descriptor
        self.base = base
        self.k = descriptor.k
        self.order = base.order ** (self.k * self.k)
        moduli = []
        for _ in range(self.k * self.k):
            moduli.extend(base._moduli if isinstance(base, PositionalRing) else [base.order])
        self._init_positional(moduli)
        ident = [[base.one if i == j else base.zero for j in range(self.k)]
                 for i in range(self.k)]
        self.one = self.encode_entries(ident)

    # entries are row-major little-endian digits in base |base|
    def decode_entries(self, x: int) -> list[list[int]]:
        b = self.base.order
        rows = []
        for i in range(self.k):
            row = []
            for j in range(self.k):
                row.append(x % b)
                x //= b
            rows.append(row)
        return rows

    def encode_entries(self, rows) -> int:
        b = self.base.order
        x = 0
        flat = [rows[i][j] for i in range(self.k) for j in range(self.k)]
        for e in reversed(flat):
            x = x * b + e
        return x

    def mul(self, x: int, y: int) -> int:
        a = self.decode_entries(x)
        b = self.decode_entries(y)
        base = self.base
        k = self.k
        out = []
        for i in range(k):
            row = []
            for j in range(k):
                acc = base.zero
                for l in range(k):
                    acc = base.add(acc, base.mul(a[i][l], b[l][j]))
                row.append(acc)
            out.append(row)
        return self.encode_entries(out)

    @cached_property
    def _entry_matrix(self) -> np.ndarray:
        b = self.base.order
        idx = np.arange(self.order, dtype=np.int64)
        ent = np.empty((self.order, self.k, self.k), dtype=np.int64)
        for pos in range(self.k * self.k):
            ent[:, pos // self.k, pos % self.k] = (idx // b**pos) % b
        return ent

    def _build_mul_table(self) -> np.ndarray:
        bm = self.base.mul_table
        ba = self.base.add_table
        if bm is None or ba is None:
            return super()._build_mul_table()
        ent = self._entry_matrix
        n, k, b = self.order, self.k, self.base.order
        table = np.zeros((n, n), dtype=np.int64)
        for i in range(k):
            for j in range(k):
                acc = np.full((n, n), self.base.zero, dtype=np.int64)
                for l in range(k):
                    term = bm[ent[:, i, l][:, None], ent[:, l, j][None, :]]
                    acc = ba[acc, term]
                table += acc * b ** (i * k + j)
        return table

    def _compute_units(self) -> int:
        fld = self.base.field_view()
        if fld is None:
            return self._units_generic()
        from .fields import mat_det  # local import: helper lives with GfField

        mask = 0
        for x in range(self.order):
            if mat_det(fld, self.decode_entries(x)) != 0:
                mask |= 1 << x
        return mask

    def element_repr(self, x: int) -> str:
        rows = self.decode_entries(x)
        body = "; ".join(
            " ".join(self.base.element_repr(e) for e in row) for row in rows
        )
        return f"[{body}]"


class ProductRing(PositionalRing):
    def __init__(self, descriptor: Product, factors: list[Ring]):
        self.descriptor = descriptor
        self.factors = tuple(factors)
        self.order = 1
        strides = []
        for f in factors:
            strides.append(self.order)
            self.order *= f.order
        self._strides = tuple(strides)
        moduli = []
        for f in factors:
            moduli.extend(f._moduli if isinstance(f, PositionalRing) else [f.order])
        self._init_positional(moduli)
        self.one = self.encode_components([f.one for f in factors])

    def decode_components(self, x: int) -> list[int]:
        return [(x // s) % f.order for s, f in zip(self._strides, self.factors)]

    def encode_components(self, comps) -> int:
        x = 0
        for c, s in zip(comps, self._strides):
            x += c * s
        return x

    def mul(self, x: int, y: int) -> int:
        return self.encode_components(
            [
                f.mul(a, b)
                for f, a, b in zip(
                    self.factors, self.decode_components(x), self.decode_components(y)
                )
            ]
        )

    def _component_arrays(self) -> list[np.ndarray]:
        idx = np.arange(self.order, dtype=np.int64)
        return [
            (idx // s) % f.order for s, f in zip(self._strides, self.factors)
        ]

    def _build_mul_table(self) -> np.ndarray:
        tables = [f.mul_table for f in self.factors]
        if any(t is None for t in tables):
            return super()._build_mul_table()
        comps = self._component_arrays()
        table = np.zeros((self.order, self.order), dtype=np.int64)
        for t, c, s in zip(tables, comps, self._strides):
            table += t[c[:, None], c[None, :]] * s
        return table

    def _compute_units(self) -> int:
        comps = self._component_arrays()
        ok = np.ones(self.order, dtype=bool)
        for f, c in zip(self.factors, comps):
            fu = np.zeros(f.order, dtype=bool)
            for u in f.unit_set:
                fu[u] = True
            ok &= fu[c]
        return _bools_to_mask(ok)

    def element_repr(self, x: int) -> str:
        parts = [
            f.element_repr(c) for f, c in zip(self.factors, self.decode_components(x))
        ]
        return "(" + ", ".join(parts) + ")"


class GroupAlgebraRing(PositionalRing):
    def __init__(self, descriptor: GroupAlgebra):
        self.descriptor = descriptor
        self.field = GfField(descriptor.q)
        self.gorder = group_order(descriptor.group)
        self.gtable = group_mul_table(descriptor.group)
        self.order = descriptor.q ** self.gorder
        self._init_positional([self.field.p] * self.field.k * self.gorder)
        self.one = 1  # coefficient 1 on the group identity

    def decode_coeffs(self, x: int) -> list[int]:
        q = self.field.q
        out = []
        for _ in range(self.gorder):
            out.append(x % q)
            x //= q
        return out

    def encode_coeffs(self, coeffs) -> int:
        q = self.field.q
        x = 0
        for c in reversed(list(coeffs)):
            x = x * q + c
        return x

    def mul(self, x: int, y: int) -> int:
        a = self.decode_coeffs(x)
        b = self.decode_coeffs(y)
        fld = self.field
        out = [0] * self.gorder
        for g, ag in enumerate(a):
            if ag == 0:
                continue
            row = self.gtable[g]
            for h, bh in enumerate(b):
                if bh == 0:
                    continue
                t = row[h]
                out[t] = fld.add(out[t], fld.mul(ag, bh))
        return self.encode_coeffs(out)

    @cached_property
    def _coeff_matrix(self) -> np.ndarray:
        q = self.field.q
        idx = np.arange(self.order, dtype=np.int64)
        return np.stack([(idx // q**g) % q for g in range(self.gorder)], axis=1)

    @cached_property
    def _field_tables(self) -> tuple[np.ndarray, np.ndarray]:
        q = self.field.q
        fadd = np.empty((q, q), dtype=np.int64)
        fmul = np.empty((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(q):
                fadd[a, b] = self.field.add(a, b)
                fmul[a, b] = self.field.mul(a, b)
        return fadd, fmul

    def _build_mul_table(self) -> np.ndarray:
        fadd, fmul = self._field_tables
        coeffs = self._coeff_matrix
        n, q = self.order, self.field.q
        out = np.zeros((n, n), dtype=np.int64)
        for g_target in range(self.gorder):
            acc = np.zeros((n, n), dtype=np.int64)
            for g in range(self.gorder):
                for h in range(self.gorder):
                    if self.gtable[g][h] != g_target:
                        continue
                    term = fmul[coeffs[:, g][:, None], coeffs[:, h][None, :]]
                    acc = fadd[acc, term]
            out += acc * q**g_target
        return out

    def element_repr(self, x: int) -> str:
        names = self._element_names()
        terms = []
        for g, c in enumerate(self.decode_coeffs(x)):
            if c == 0:
                continue
            coef = "" if c == 1 else f"{c}*"
            terms.append(f"{coef}{names[g]}" if g else str(c) if c != 1 else "1")
        return "+".join(terms) if terms else "0"

    def _element_names(self) -> list[str]:
        from .descriptors import Cn

        n = self.gorder
        if isinstance(self.descriptor.group, Cn):
            return ["e"] + [f"g^{i}" if i > 1 else "g" for i in range(1, n)]
        names = ["e", "a", "a^2", "a^3", "b", "ab", "a^2b", "a^3b"]
        return names[:n]


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _build_ring_cached(descriptor: RingDescriptor) -> Ring:
    if isinstance(descriptor, Zn):
        return ZnRing(descriptor)
    if isinstance(descriptor, Gf):
        return GfRing(descriptor)
    if isinstance(descriptor, Mat):
        return MatRing(descriptor, _build_ring_cached(descriptor.base))
    if isinstance(descriptor, Product):
        return ProductRing(
            descriptor, [_build_ring_cached(f) for f in descriptor.factors]
        )
    if isinstance(descriptor, GroupAlgebra):
        return GroupAlgebraRing(descriptor)
    raise DescriptorError(f"unknown descriptor {descriptor!r}")


def build_ring(descriptor: RingDescriptor, order_cap: int = DEFAULT_ORDER_CAP) -> Ring:
    """Realize a descriptor as an arithmetic object.

    order_cap guards against accidentally huge realizations; arithmetic
    is supported up to 2^16 elements, graph construction has its own
    (smaller) cap.
    """
    validate_descriptor(descriptor)
    n = descriptor_order(descriptor)
    cap = min(order_cap, HARD_ORDER_CAP)
    if n > cap:
        raise CapExceeded(
            f"{descriptor_expr(descriptor)} has order {n}, above the cap {cap}"
        )
    return _build_ring_cached(descriptor)


# ---------------------------------------------------------------------------
# Jacobson radical and quotient
# ---------------------------------------------------------------------------

def jacobson_radical(ring: Ring, method: str = "auto") -> VertexSet:
    """Jacobson radical as an element set.

    method="generic" scans for {x : 1 - r*x is a unit for every r}, which
    is the definition specialized to finite rings.  method="structural"
    composes closed forms along the descriptor (radical of a modulus ring,
    zero in a field, entry-wise in matrix rings, component-wise in
    products, the augmentation ideal of a group algebra of a p-group in
    characteristic p) and raises UnsupportedStructure outside them.
    method="auto" tries structural and falls back to generic.
    """
    if method == "generic":
        return VertexSet(_radical_generic(ring), ring.order)
    if method == "structural":
        return VertexSet(_radical_structural(ring), ring.order)
    if method == "auto":
        try:
            return VertexSet(_radical_structural(ring), ring.order)
        except UnsupportedStructure:
            return VertexSet(_radical_generic(ring), ring.order)
    raise ValueError(f"unknown radical method {method!r}")


def _radical_generic(ring: Ring) -> int:
    units = ring.unit_set.mask
    one = ring.one
    table = ring.mul_table
    mask = 0
    if table is not None:
        unit_bool = np.zeros(ring.order, dtype=bool)
        for u in ring.unit_set:
            unit_bool[u] = True
        for x in range(ring.order):
            vals = ring.sub_from_many(one, table[:, x])
            if unit_bool[vals].all():
                mask |= 1 << x
        return mask
    for x in range(ring.order):
        ok = True
        for r in range(ring.order):
            if not (units >> ring.sub(one, ring.mul(r, x))) & 1:
                ok = False
                break
        if ok:
            mask |= 1 << x
    return mask


def _radical_structural(ring: Ring) -> int:
    if isinstance(ring, ZnRing):
        n = ring.order
        r = squarefree_radical(n)
        mask = 0
        for x in range(0, n, r):
            mask |= 1 << x
        return mask
    if isinstance(ring, GfRing):
        return 1  # {0}
    if isinstance(ring, MatRing):
        base_rad = VertexSet(_radical_structural(ring.base), ring.base.order)
        mask = 0
        for combo in itertools.product(base_rad.indices(), repeat=ring.k * ring.k):
            rows = [
                list(combo[i * ring.k : (i + 1) * ring.k]) for i in range(ring.k)
            ]
            mask |= 1 << ring.encode_entries(rows)
        return mask
    if isinstance(ring, ProductRing):
        fr = [
            VertexSet(_radical_structural(f), f.order).indices()
            for f in ring.factors
        ]
        mask = 0
        for combo in itertools.product(*fr):
            mask |= 1 << ring.encode_components(list(combo))
        return mask
    if isinstance(ring, GroupAlgebraRing):
        if not group_is_p_group(ring.descriptor.group, ring.field.p):
            raise UnsupportedStructure(
                "group algebra radical closed form needs a p-group in "
                "characteristic p"
            )
        fadd, _ = ring._field_tables
        coeffs = ring._coeff_matrix
        acc = np.zeros(ring.order, dtype=np.int64)
        for g in range(ring.gorder):
            acc = fadd[acc, coeffs[:, g]]
        return _bools_to_mask(acc == 0)
    raise UnsupportedStructure(f"no structural radical for {type(ring).__name__}")


class QuotientRing(Ring):
    """The quotient of a ring by its Jacobson radical.

    Elements are indexed 0..m-1 in increasing order of their canonical
    coset representative (the smallest parent index in the coset), and
    ``representatives[i]`` maps back to the parent.  The unit set is
    computed by inverse search inside the quotient, independently of the
    parent, so the unit correspondence stays a testable fact.
    """

    def __init__(self, parent: Ring, radical: VertexSet):
        self.parent = parent
        self.descriptor = parent.descriptor
        self.radical = radical
        rad_indices = np.array(radical.indices(), dtype=np.int64)
        n = parent.order
        rep_of = np.full(n, -1, dtype=np.int64)
        reps: list[int] = []
        for x in range(n):
            if rep_of[x] >= 0:
                continue
            reps.append(x)
            rep_of[parent.add_many(x, rad_indices)] = x
        self.representatives = tuple(reps)
        self._rep_of = rep_of
        compress = np.full(n, -1, dtype=np.int64)
        for i, r in enumerate(reps):
            compress[r] = i
        self._compress = compress
        self.order = len(reps)
        if self.order * len(rad_indices) != n:
            raise RingError("radical cosets do not partition the ring")
        self.one = self.project(parent.one)

    def project(self, parent_index: int) -> int:
        """Quotient index of the coset containing a parent element."""
        return int(self._compress[self._rep_of[parent_index]])

    def add(self, x: int, y: int) -> int:
        return self.project(
            self.parent.add(self.representatives[x], self.representatives[y])
        )

    def neg(self, x: int) -> int:
        return self.project(self.parent.neg(self.representatives[x]))

    def mul(self, x: int, y: int) -> int:
        return self.project(
            self.parent.mul(self.representatives[x], self.representatives[y])
        )

    def add_many(self, x: int, ys: np.ndarray) -> np.ndarray:
        reps = np.asarray(self.representatives, dtype=np.int64)
        vals = self.parent.add_many(self.representatives[x], reps[np.asarray(ys)])
        return self._compress[self._rep_of[vals]]

    def sub_from_many(self, x: int, ys: np.ndarray) -> np.ndarray:
        reps = np.asarray(self.representatives, dtype=np.int64)
        vals = self.parent.sub_from_many(self.representatives[x], reps[np.asarray(ys)])
        return self._compress[self._rep_of[vals]]

    def add_row(self, x: int) -> np.ndarray:
        return self.add_many(x, np.arange(self.order))

    def sub_from_row(self, x: int) -> np.ndarray:
        return self.sub_from_many(x, np.arange(self.order))

    def _build_mul_table(self) -> np.ndarray:
        pt = self.parent.mul_table
        if pt is not None:
            reps = np.asarray(self.representatives, dtype=np.int64)
            return self._compress[self._rep_of[pt[reps[:, None], reps[None, :]]]]
        return super()._build_mul_table()

    @property
    def expr(self) -> str:
        return f"({descriptor_expr(self.descriptor)})/J"

    def element_repr(self, x: int) -> str:
        return self.parent.element_repr(self.representatives[x]) + "~"


@lru_cache(maxsize=None)
def quotient_by_radical(ring: Ring, method: str = "auto") -> QuotientRing:
    """Quotient of a ring by its Jacobson radical; interned per ring so
    repeated lifts share one quotient (and one cached quotient graph)."""
    return QuotientRing(ring, jacobson_radical(ring, method))


# ---------------------------------------------------------------------------
# predicates
# ---------------------------------------------------------------------------

def is_boolean_ring(ring: Ring) -> bool:
    """True iff every element is idempotent (finite case: ring = Z_2^k)."""
    return all(ring.mul(x, x) == x for x in range(ring.order))


def is_field(ring: Ring) -> bool:
    """True iff every nonzero element is a unit and multiplication commutes."""
    if len(ring.unit_set) != ring.order - 1:
        return False
    table = ring.mul_table
    if table is not None:
        return bool(np.array_equal(table, table.T))
    return all(
        ring.mul(x, y) == ring.mul(y, x)
        for x in range(ring.order)
        for y in range(x + 1, ring.order)
    )


def _bools_to_mask(arr: np.ndarray) -> int:
    packed = np.packbits(arr.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")
