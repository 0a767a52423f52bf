"""Independent reference implementations used to check the package.

Everything here deliberately avoids the package's own algorithms and data
layout: matchings are frozensets of frozenset pairs, rotation is a literal
index map, canonical forms are minima over explicitly materialized orbits,
and boundary circles come from a corner-gluing union-find rather than a
directed walk.  Slow is fine; these only run at small n.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

Matching = frozenset  # of frozenset({a, b}) pairs


def reference_matchings(pts: tuple[int, ...]) -> list[Matching]:
    """All perfect matchings of a point tuple, by plain recursion."""
    if not pts:
        return [frozenset()]
    a = pts[0]
    out = []
    for i in range(1, len(pts)):
        b = pts[i]
        rest = pts[1:i] + pts[i + 1 :]
        for tail in reference_matchings(rest):
            out.append(tail | {frozenset((a, b))})
    return out


def all_matchings(n: int) -> list[Matching]:
    return reference_matchings(tuple(range(1, 2 * n + 1)))


def o_matchings(n: int) -> list[Matching]:
    """O-matchings via odd->even permutations, not by filtering."""
    odds = range(1, 2 * n, 2)
    evens = list(range(2, 2 * n + 1, 2))
    out = []
    for perm in permutations(evens):
        out.append(frozenset(frozenset((o, e)) for o, e in zip(odds, perm)))
    return out


def rotate_matching(m: Matching, k: int, pts: int) -> Matching:
    """Rotation as a literal index map d -> d+k mod 2n (residue 0 is 2n)."""
    shift = lambda d: (d + k - 1) % pts + 1
    return frozenset(frozenset(shift(d) for d in pair) for pair in m)


def matching_key(m: Matching) -> tuple:
    """Order-free comparable form: sorted tuple of sorted pairs."""
    return tuple(sorted(tuple(sorted(p)) for p in m))


def canonical_matching(m: Matching, pts: int, even_only: bool) -> tuple:
    """Minimum key over the rotation orbit (even shifts or all shifts)."""
    step = 2 if even_only else 1
    return min(
        matching_key(rotate_matching(m, k, pts)) for k in range(step, pts + 1, step)
    )


def is_o_matching(m: Matching) -> bool:
    return all(sum(pair) % 2 == 1 for pair in m)


def census_matchings(
    matchings: list[Matching], pts: int, even_only: bool
) -> dict[tuple, int]:
    """Canonical form -> orbit member count over a list of matchings."""
    orbits: dict[tuple, int] = {}
    for m in matchings:
        key = canonical_matching(m, pts, even_only)
        orbits[key] = orbits.get(key, 0) + 1
    return orbits


def count_fixed_matchings(matchings: list[Matching], pts: int, k: int) -> int:
    return sum(1 for m in matchings if rotate_matching(m, k, pts) == m)


def boundary_components(chords, n: int) -> list[tuple[frozenset, tuple]]:
    """Boundary circles of the disk-plus-bands surface by corner gluing.

    Each of the 2n marked points is flanked by corners (p,'-') and (p,'+').
    Boundary segments: arc i joins (i,'+') to (i+1,'-'); each chord band
    contributes two sides, glued straight for opposite-parity chords and
    crossed (half twist) for equal-parity chords.  Every corner meets
    exactly two segments, so circles are the components of that 2-regular
    graph.  Returns (arc id set, sorted chord pair tuple) per circle.
    """
    pts = 2 * n
    parent: dict = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    segments = []
    for i in range(1, pts + 1):
        segments.append(((i, "+"), (i % pts + 1, "-"), ("arc", i)))
    for a, b in chords:
        if (a - b) % 2 == 0:
            segments.append(((a, "+"), (b, "+"), ("chord", a, b)))
            segments.append(((a, "-"), (b, "-"), ("chord", a, b)))
        else:
            segments.append(((a, "+"), (b, "-"), ("chord", a, b)))
            segments.append(((b, "+"), (a, "-"), ("chord", a, b)))
    for c1, c2, _ in segments:
        union(c1, c2)

    circles: dict = {}
    for c1, c2, tag in segments:
        circles.setdefault(find(c1), []).append(tag)
    out = []
    for tags in circles.values():
        arcs = frozenset(t[1] for t in tags if t[0] == "arc")
        chord_pairs = tuple(
            sorted((min(t[1], t[2]), max(t[1], t[2])) for t in tags if t[0] == "chord")
        )
        out.append((arcs, chord_pairs))
    return out


def arc_is_black(arc_id: int) -> bool:
    return arc_id % 2 == 1


def slow_totient(q: int) -> int:
    from math import gcd

    return sum(1 for r in range(1, q + 1) if gcd(r, q) == 1)


def exact_average(values: list[int]) -> Fraction:
    return Fraction(sum(values), len(values))
