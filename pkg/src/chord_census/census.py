"""Streaming gluing enumeration and the brute-force orbit census.

This module is the empirical side of the package: it counts by actually
generating gluings, and exists to validate the closed forms in
:mod:`chord_census.counting` rather than to trust them.

Enumeration order is lexicographic on the flattened normal form: the least
unmatched point is always matched next, partners ascending.  That order
also partitions the stream into independent shards keyed by the partner of
point 1, which is how the census parallelizes.

The census never materializes the set of seen canonical forms.  A gluing
opens a new orbit exactly when it *is* the lexicographic minimum of its
rotation orbit, so counting minima counts orbits; rotations, minimality
tests and per-shift fixed-point counts all run as vectorized array passes
over a shard (partner arrays, one row per gluing).  Orbit representatives
with sizes and stabilizer orders are collected on request.

Work is bounded by a gluing budget (default 4*10^7, overridable with the
``CHORD_CENSUS_BUDGET`` environment variable or per call); class N filters
the full stream, so it is charged the full (2n-1)!!.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterator, Optional

import numpy as np

from .counting import double_factorial
from .diagram import DiagramClass, Gluing
from .errors import BudgetExceededError

__all__ = [
    "DEFAULT_BUDGET",
    "BUDGET_ENV_VAR",
    "OrbitInfo",
    "OrbitCensus",
    "FixedPointCount",
    "enumerate_gluings",
    "enumerate_o_gluings",
    "orbit_census",
    "count_fixed",
    "burnside_check",
]

DEFAULT_BUDGET = 40_000_000
BUDGET_ENV_VAR = "CHORD_CENSUS_BUDGET"

ProgressFn = Callable[[int, int], None]  # (gluings processed, orbits found)


# ---------------------------------------------------------------------------
# streaming enumeration
# ---------------------------------------------------------------------------


def _matchings(n: int, o_only: bool) -> Iterator[tuple[tuple[int, int], ...]]:
    """Backtracking walk over normal-form chord tuples, lexicographic order.

    Free points live in an array-backed doubly linked list (sentinels 0 and
    2n+1), giving O(1) removal and LIFO restore.  The least free point is
    always the next chord's first endpoint, so emitted tuples need no
    re-sorting.  With ``o_only`` the partner candidates skip equal parity.
    """
    pts = 2 * n
    nxt = list(range(1, pts + 2))
    prv = list(range(-1, pts + 1))
    chords: list[tuple[int, int]] = []
    stack: list[tuple[int, int]] = []

    def advance(a: int, b: int) -> int:
        b = nxt[b]
        if o_only:
            while b <= pts and (b - a) % 2 == 0:
                b = nxt[b]
        return b

    a = nxt[0]
    b = advance(a, a)
    while True:
        if b > pts:
            if not stack:
                return
            a, b = stack.pop()
            chords.pop()
            nxt[prv[b]] = b
            prv[nxt[b]] = b
            nxt[prv[a]] = a
            prv[nxt[a]] = a
            b = advance(a, b)
            continue
        nxt[prv[a]] = nxt[a]
        prv[nxt[a]] = prv[a]
        nxt[prv[b]] = nxt[b]
        prv[nxt[b]] = prv[b]
        chords.append((a, b))
        stack.append((a, b))
        a2 = nxt[0]
        if a2 > pts:
            yield tuple(chords)
            a, b = stack.pop()
            chords.pop()
            nxt[prv[b]] = b
            prv[nxt[b]] = b
            nxt[prv[a]] = a
            prv[nxt[a]] = a
            b = advance(a, b)
        else:
            a = a2
            b = advance(a, a)


def enumerate_gluings(n: int) -> Iterator[Gluing]:
    """Yield each of the (2n-1)!! normal-form gluings exactly once.

    Lexicographic order, constant memory per item.
    """
    if n < 1:
        raise ValueError(f"diagram order must be >= 1, got {n}")
    for chords in _matchings(n, o_only=False):
        yield Gluing(chords)


def enumerate_o_gluings(n: int) -> Iterator[Gluing]:
    """Yield each of the n! O-gluings exactly once, lexicographic order.

    Every chord joins an odd point to an even point; the stream equals
    ``enumerate_gluings(n)`` filtered to class O.
    """
    if n < 1:
        raise ValueError(f"diagram order must be >= 1, got {n}")
    for chords in _matchings(n, o_only=True):
        yield Gluing(chords)


# ---------------------------------------------------------------------------
# result records
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrbitInfo:
    representative: Gluing
    size: int
    stabilizer_order: int


@dataclass(frozen=True)
class OrbitCensus:
    n: int
    diagram_class: DiagramClass
    group_order: int
    orbit_count: int
    total_gluings: int
    orbits: Optional[tuple[OrbitInfo, ...]]


@dataclass(frozen=True)
class FixedPointCount:
    n: int
    shift: int
    diagram_class: DiagramClass
    count: int


# ---------------------------------------------------------------------------
# vectorized shard engine
# ---------------------------------------------------------------------------


def _shard_first_partners(n: int, cls: DiagramClass) -> list[int]:
    """0-based partners of point 0, one shard each."""
    pts = 2 * n
    if cls is DiagramClass.O:
        return list(range(1, pts, 2))
    return list(range(1, pts))


def _shard_matchings(n: int, fp: int, cls: DiagramClass) -> np.ndarray:
    """Partner arrays (0-based involutions, one row per gluing) for the
    shard with partner(0) = fp.  Class N shares the full stream."""
    pts = 2 * n
    M = np.zeros((1, pts), dtype=np.int8)
    M[0, 0] = fp
    M[0, fp] = 0
    if cls is DiagramClass.O:
        free = np.array([o for o in range(1, pts, 2) if o != fp], dtype=np.int8)
        FREE = free.reshape(1, -1)
        for endpoint in range(2, pts, 2):
            rows, f = FREE.shape
            newM = np.repeat(M, f, axis=0)
            newFREE = np.empty((rows * f, f - 1), dtype=np.int8)
            for j in range(f):
                b = FREE[:, j]
                sub = newM[j::f]
                sub[:, endpoint] = b
                np.put_along_axis(
                    sub, b[:, None].astype(np.intp), np.int8(endpoint), axis=1
                )
                newFREE[j::f] = FREE[:, [c for c in range(f) if c != j]]
            M, FREE = newM, newFREE
        return M
    free = np.array([p for p in range(1, pts) if p != fp], dtype=np.int8)
    FREE = free.reshape(1, -1)
    while FREE.shape[1] > 0:
        rows, f = FREE.shape
        branch = f - 1
        newM = np.repeat(M, branch, axis=0)
        newFREE = np.empty((rows * branch, f - 2), dtype=np.int8)
        a = FREE[:, 0].astype(np.intp)
        for j in range(1, f):
            b = FREE[:, j]
            sub = newM[j - 1 :: branch]
            np.put_along_axis(sub, a[:, None], b[:, None], axis=1)
            np.put_along_axis(sub, b[:, None].astype(np.intp), FREE[:, 0][:, None], axis=1)
            newFREE[j - 1 :: branch] = FREE[:, [c for c in range(f) if c not in (0, j)]]
        M, FREE = newM, newFREE
    return M


def _pack_keys(M: np.ndarray) -> list[np.ndarray]:
    """Lexicographic key arrays: column groups packed into uint64 words."""
    pts = M.shape[1]
    bits = max(int(pts).bit_length(), 1)
    per_key = 63 // bits
    keys = []
    for start in range(0, pts, per_key):
        k = np.zeros(M.shape[0], dtype=np.uint64)
        for c in range(start, min(start + per_key, pts)):
            k = (k << np.uint64(bits)) | M[:, c].astype(np.uint64)
        keys.append(k)
    return keys


def _lex_less_eq(ka: list[np.ndarray], kb: list[np.ndarray]) -> tuple[np.ndarray, np.ndarray]:
    """Row-wise (a < b, a == b) under lexicographic order of the key chain."""
    less = np.zeros(ka[0].shape, dtype=bool)
    eq = np.ones(ka[0].shape, dtype=bool)
    for a, b in zip(ka, kb):
        less |= eq & (a < b)
        eq &= a == b
    return less, eq


def _is_o_rows(M: np.ndarray) -> np.ndarray:
    """Class-O mask: every point's partner has opposite parity."""
    pts = M.shape[1]
    idx = np.arange(pts, dtype=np.int8)
    return (((M + idx) & 1) == 1).all(axis=1)


def _shard_task(args: tuple) -> tuple:
    """One shard of the census; module level so worker processes can run it.

    Returns (rows_in_class, orbit_count, fixed_counts, orbit_size_sum,
    orbit_records_or_None).
    """
    n, cls_value, fp, shifts, count_orbits, keep_orbits = args
    cls = DiagramClass(cls_value)
    pts = 2 * n
    M = _shard_matchings(n, fp, cls)
    if cls is DiagramClass.N:
        M = M[~_is_o_rows(M)]
    rows = M.shape[0]
    if rows == 0:
        return (0, 0, [0] * len(shifts), 0, [] if keep_orbits else None)

    keys = _pack_keys(M)
    not_min = np.zeros(rows, dtype=bool)
    stab = np.ones(rows, dtype=np.int64)
    fixed = []
    for s in shifts:
        rot = np.roll((M + np.int8(s)) % np.int8(pts), s, axis=1)
        less, eq = _lex_less_eq(_pack_keys(rot), keys)
        fixed.append(int(eq.sum()))
        if count_orbits:
            not_min |= less
            stab += eq

    orbit_count = 0
    size_sum = 0
    records = [] if keep_orbits else None
    if count_orbits:
        canon = ~not_min
        orbit_count = int(canon.sum())
        group_order = len(shifts) + 1
        stabs = stab[canon]
        if not np.all(group_order % stabs == 0):
            raise AssertionError("stabilizer order does not divide group order")
        size_sum = int((group_order // stabs).sum())
        if keep_orbits:
            for row, st in zip(M[canon], stabs):
                chords = tuple(
                    (i + 1, int(row[i]) + 1) for i in range(pts) if i < row[i]
                )
                records.append((chords, group_order // int(st), int(st)))
    return (rows, orbit_count, fixed, size_sum, records)


@dataclass
class _EngineResult:
    total: int
    orbit_count: int
    fixed: dict[int, int]
    orbits: Optional[list[tuple]]


def _resolve_budget(budget: Optional[int]) -> int:
    if budget is None:
        env = os.environ.get(BUDGET_ENV_VAR)
        budget = int(env) if env else DEFAULT_BUDGET
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    return budget


def _charge_budget(n: int, cls: DiagramClass, budget: Optional[int]) -> None:
    limit = _resolve_budget(budget)
    work = (
        math.factorial(n)
        if cls is DiagramClass.O
        else double_factorial(2 * n - 1)
    )
    if work > limit:
        raise BudgetExceededError(
            f"{work} gluings exceed the budget of {limit}; raise budget or "
            f"set {BUDGET_ENV_VAR}"
        )


def _run_engine(
    n: int,
    cls: DiagramClass,
    shifts: list[int],
    count_orbits: bool,
    keep_orbits: bool,
    budget: Optional[int],
    workers: int,
    progress: Optional[ProgressFn],
) -> _EngineResult:
    if n < 1:
        raise ValueError(f"diagram order must be >= 1, got {n}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    _charge_budget(n, cls, budget)

    tasks = [
        (n, cls.value, fp, shifts, count_orbits, keep_orbits)
        for fp in _shard_first_partners(n, cls)
    ]
    result = _EngineResult(0, 0, {s: 0 for s in shifts}, [] if keep_orbits else None)
    group_order = len(shifts) + 1
    size_sum = 0

    def merge(shard: tuple) -> None:
        nonlocal size_sum
        rows, oc, fixed, ss, records = shard
        result.total += rows
        result.orbit_count += oc
        size_sum += ss
        for s, c in zip(shifts, fixed):
            result.fixed[s] += c
        if keep_orbits:
            result.orbits.extend(records)
        if progress is not None:
            progress(result.total, result.orbit_count)

    if workers == 1:
        for task in tasks:
            merge(_shard_task(task))
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for shard in pool.map(_shard_task, tasks):
                merge(shard)

    if count_orbits and size_sum != result.total:
        raise AssertionError(
            f"orbit sizes sum to {size_sum}, expected {result.total}"
        )
    if count_orbits and keep_orbits:
        assert all(group_order % st == 0 for _, _, st in result.orbits)
    return result


# ---------------------------------------------------------------------------
# public census operations
# ---------------------------------------------------------------------------


def _group_shifts(n: int, full_rotation_group: bool) -> tuple[list[int], int]:
    if full_rotation_group:
        return list(range(1, 2 * n)), 2 * n
    return [2 * m for m in range(1, n)], n


def orbit_census(
    n: int,
    diagram_class: DiagramClass = DiagramClass.ALL,
    *,
    keep_orbits: Optional[bool] = None,
    full_rotation_group: bool = False,
    budget: Optional[int] = None,
    workers: int = 1,
    progress: Optional[ProgressFn] = None,
) -> OrbitCensus:
    """Brute-force isomorphism census of a diagram class.

    Partitions the stream of gluings into orbits under the even rotation
    group (or the full rotation group of order 2n when
    ``full_rotation_group`` is set, which is the uncolored-diagram notion of
    isomorphism).  ``keep_orbits`` defaults to True up to n = 6 and False
    above, where the representative list would get large; counts are exact
    either way.  Results are identical for every ``workers`` setting.
    """
    if keep_orbits is None:
        keep_orbits = n <= 6
    shifts, group_order = _group_shifts(n, full_rotation_group)
    run = _run_engine(
        n, diagram_class, shifts, True, keep_orbits, budget, workers, progress
    )
    orbits = None
    if keep_orbits:
        orbits = tuple(
            OrbitInfo(Gluing(chords), size, stab)
            for chords, size, stab in run.orbits
        )
    return OrbitCensus(
        n=n,
        diagram_class=diagram_class,
        group_order=group_order,
        orbit_count=run.orbit_count,
        total_gluings=run.total,
        orbits=orbits,
    )


def count_fixed(
    n: int,
    k: int,
    diagram_class: DiagramClass = DiagramClass.ALL,
    *,
    budget: Optional[int] = None,
    workers: int = 1,
) -> FixedPointCount:
    """Count gluings in a class fixed by rotation k, by direct filter.

    k must be an even shift in 1..2n (even rotations are the color
    preserving ones); k = 2n is the identity and fixes the whole class.
    """
    if k % 2 != 0 or not 1 <= k <= 2 * n:
        raise ValueError(f"shift must be even and within 1..{2 * n}, got {k}")
    shifts = [] if k == 2 * n else [k]
    run = _run_engine(n, diagram_class, shifts, False, False, budget, workers, None)
    count = run.total if k == 2 * n else run.fixed[k]
    return FixedPointCount(n=n, shift=k, diagram_class=diagram_class, count=count)


def burnside_check(
    n: int,
    diagram_class: DiagramClass = DiagramClass.ALL,
    *,
    budget: Optional[int] = None,
    workers: int = 1,
) -> bool:
    """Verify the Burnside identity empirically for one class.

    Sums the fixed-point counts of every even rotation (one engine pass)
    and checks the sum equals n times the brute-force orbit count.
    """
    shifts, group_order = _group_shifts(n, full_rotation_group=False)
    run = _run_engine(n, diagram_class, shifts, True, False, budget, workers, None)
    fixed_sum = run.total + sum(run.fixed[s] for s in shifts)
    return fixed_sum == group_order * run.orbit_count
