"""Independent brute-force oracles used only by the tests.

These deliberately avoid the library's algorithms: independence is
re-derived from adjacency rows, maximal independent sets come from a
full 2^n subset sweep, and polynomial irreducibility is checked by
enumerating factor pairs.  Library outputs are asserted against these.
"""

from __future__ import annotations

import itertools


def subset_is_independent(g, mask: int) -> bool:
    rest = mask
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        if g.rows[v] & mask:
            return False
        rest ^= low
    return True


def subset_is_maximal_independent(g, mask: int) -> bool:
    if not subset_is_independent(g, mask):
        return False
    for w in range(g.n):
        if (mask >> w) & 1:
            continue
        if g.rows[w] & mask == 0:
            return False
    return True


def all_mis_subsets(g) -> set[int]:
    """Every maximal independent set of a graph with at most ~20 vertices,
    by sweeping all subsets."""
    if g.n > 20:
        raise ValueError("subset oracle is for small graphs only")
    out = set()
    for mask in range(1 << g.n):
        if subset_is_maximal_independent(g, mask):
            out.add(mask)
    return out


def poly_is_irreducible_bruteforce(coeffs: tuple[int, ...], p: int) -> bool:
    """Degree-k monic polynomial is irreducible iff it is no product of
    two lower-degree monic polynomials; checked by enumerating all pairs."""
    k = len(coeffs) - 1
    assert coeffs[-1] == 1 and k >= 1
    for d1 in range(1, k):
        d2 = k - d1
        if d2 < d1:
            break
        for t1 in itertools.product(range(p), repeat=d1):
            g = list(t1) + [1]
            for t2 in itertools.product(range(p), repeat=d2):
                h = list(t2) + [1]
                prod = [0] * (k + 1)
                for i, gi in enumerate(g):
                    for j, hj in enumerate(h):
                        prod[i + j] = (prod[i + j] + gi * hj) % p
                if tuple(prod) == tuple(coeffs):
                    return False
    return True


def matrix_unit_count(n: int, q: int) -> int:
    """The number of invertible n x n matrices over GF(q), counted by the
    rows-linearly-independent product formula."""
    out = 1
    for i in range(n):
        out *= q**n - q**i
    return out
