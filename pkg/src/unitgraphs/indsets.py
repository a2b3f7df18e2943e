"""Maximal independent set enumeration and well-coveredness by brute force.

Maximal independent sets of G are exactly the maximal cliques of the
complement of G, so enumeration runs the classic recursive clique search
with pivoting on complement bitmask rows.  The pivot is the candidate
(from candidates-plus-excluded) covering the most of the candidate set,
ties broken by lowest index, which makes the emission order
deterministic.  The collected family is sorted lexicographically, so
reports are stable.

Limits are explicit: a cap on emitted sets, a wall-clock budget, and a
stop mode.  ``first_two_sizes`` halts as soon as two distinct sizes have
been seen; that mode decides well-coveredness early and makes local
rings with huge complement cliques instant.  Hitting a cap is reported
in-band, never silently.
"""

from __future__ import annotations

import sys
import time
from collections import Counter
from dataclasses import dataclass

from .graphs import DEFAULT_GRAPH_CAP, Graph
from .rings import VertexSet

DEFAULT_MAX_SETS = 10**6
DEFAULT_TIME_BUDGET = 60.0


class EnumerationError(Exception):
    pass


@dataclass
class MisReport:
    """Outcome of one enumeration run."""

    sizes_seen: Counter
    count: int
    independence_number: int
    well_covered: bool
    witnesses: tuple[VertexSet, ...]
    truncated: bool
    stop_reason: str  # exhausted | two_sizes | max_sets | time_budget
    sets: tuple[VertexSet, ...] | None


def is_independent(g: Graph, s: VertexSet) -> bool:
    """No two members adjacent."""
    mask = s.mask
    if mask >> g.n:
        raise EnumerationError("set has vertices outside the graph")
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        if g.rows[v] & mask:
            return False
        m ^= low
    return True


def is_maximal_independent(g: Graph, s: VertexSet) -> bool:
    """Independent, and every outside vertex is adjacent to a member."""
    if not is_independent(g, s):
        return False
    covered = s.mask
    m = s.mask
    while m:
        low = m & -m
        covered |= g.rows[low.bit_length() - 1]
        m ^= low
    return covered == (1 << g.n) - 1


class _Stop(Exception):
    def __init__(self, reason: str):
        self.reason = reason


class _Search:
    def __init__(self, g, on_set, stop_mode, max_sets, time_budget, collect):
        n = g.n
        full = (1 << n) - 1
        self.comp = [full ^ (g.rows[v] | (1 << v)) for v in range(n)]
        self.g = g
        self.on_set = on_set
        self.stop_mode = stop_mode
        self.max_sets = max_sets
        self.deadline = time.monotonic() + time_budget
        self.collect = collect
        self.sizes = Counter()
        self.count = 0
        self.calls = 0
        self.first_of_size: dict[int, int] = {}
        self.sets: list[int] = []

    def emit(self, mask: int) -> None:
        size = mask.bit_count()
        self.sizes[size] += 1
        self.count += 1
        self.first_of_size.setdefault(size, mask)
        if self.collect:
            self.sets.append(mask)
        if self.on_set is not None:
            self.on_set(VertexSet(mask, self.g.n))
        if self.stop_mode == "first_two_sizes" and len(self.sizes) >= 2:
            raise _Stop("two_sizes")
        if self.count >= self.max_sets:
            raise _Stop("max_sets")

    def run(self) -> str:
        n = self.g.n
        if n == 0:
            return "exhausted"
        old_limit = sys.getrecursionlimit()
        sys.setrecursionlimit(max(old_limit, 4 * n + 1000))
        try:
            self.expand(0, (1 << n) - 1, 0)
            return "exhausted"
        except _Stop as stop:
            return stop.reason
        finally:
            sys.setrecursionlimit(old_limit)

    def expand(self, chosen: int, cand: int, excl: int) -> None:
        self.calls += 1
        if self.calls % 256 == 0 and time.monotonic() > self.deadline:
            raise _Stop("time_budget")
        if cand == 0 and excl == 0:
            self.emit(chosen)
            return
        # pivot: candidate-or-excluded vertex covering most of cand
        best, best_cover = -1, -1
        scan = cand | excl
        while scan:
            low = scan & -scan
            u = low.bit_length() - 1
            cover = (cand & self.comp[u]).bit_count()
            if cover > best_cover:
                best, best_cover = u, cover
            scan ^= low
        ext = cand & ~self.comp[best]
        while ext:
            low = ext & -ext
            v = low.bit_length() - 1
            nv = self.comp[v]
            self.expand(chosen | low, cand & nv, excl & nv)
            cand ^= low
            excl |= low
            ext ^= low


def enumerate_mis(
    g: Graph,
    on_set=None,
    *,
    stop_mode: str = "all",
    max_sets: int = DEFAULT_MAX_SETS,
    time_budget: float = DEFAULT_TIME_BUDGET,
    collect: bool = True,
    cap: int = DEFAULT_GRAPH_CAP,
) -> MisReport:
    """Enumerate maximal independent sets.

    With stop_mode="all" and no cap hit, the emitted family is exactly
    the family of all maximal independent sets.  The on_set callback (if
    given) sees each set as it is found, in search order; the collected
    ``sets`` are sorted canonically.
    """
    if stop_mode not in ("all", "first_two_sizes"):
        raise EnumerationError(f"unknown stop mode {stop_mode!r}")
    if g.n > cap:
        raise EnumerationError(f"vertex count {g.n} exceeds the cap {cap}")
    search = _Search(g, on_set, stop_mode, max_sets, time_budget, collect)
    reason = search.run()
    truncated = reason in ("max_sets", "time_budget")
    sets = None
    if collect:
        ordered = sorted(search.sets, key=_mask_key)
        sets = tuple(VertexSet(m, g.n) for m in ordered)
    witnesses: tuple[VertexSet, ...] = ()
    if len(search.sizes) >= 2:
        sizes_in_order = list(search.first_of_size)[:2]
        witnesses = tuple(
            VertexSet(search.first_of_size[s], g.n) for s in sizes_in_order
        )
    return MisReport(
        sizes_seen=search.sizes,
        count=search.count,
        independence_number=max(search.sizes) if search.sizes else 0,
        well_covered=len(search.sizes) == 1,
        witnesses=witnesses,
        truncated=truncated,
        stop_reason=reason,
        sets=sets,
    )


def _mask_key(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def well_covered_bruteforce(
    g: Graph,
    *,
    max_sets: int = DEFAULT_MAX_SETS,
    time_budget: float = DEFAULT_TIME_BUDGET,
) -> bool | None:
    """True/False when decided; None when limits were hit first."""
    report = enumerate_mis(
        g,
        stop_mode="first_two_sizes",
        max_sets=max_sets,
        time_budget=time_budget,
        collect=False,
    )
    if len(report.sizes_seen) >= 2:
        return False
    if report.truncated:
        return None
    return True
