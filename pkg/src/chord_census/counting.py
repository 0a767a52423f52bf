"""Closed-form counts: totals, fixed-point formulas and orbit numbers.

All arithmetic is exact Python integers; (2n-1)!! outgrows 64 bits at
n = 17 and the table builder is expected to run past that.  Burnside sums
are divided only after an exact divisibility check - a remainder would mean
a broken formula, and raising beats silently rounding.

Function map (b = boundary of what each one counts):

* ``total_gluings`` / ``total_o_gluings`` - |B_2n| = (2n-1)!! and n!.
* ``colored_fixed(n, m)`` - color diagrams fixed by the even rotation 2m,
  for m | n.  Splits on the parity of n/m.
* ``uncolored_fixed(n, k)`` - uncolored diagrams fixed by rotation k, for
  k | 2n.  Same shape with k in place of 2m.
* ``o_fixed(n, i)`` - O-diagrams fixed by rotation 2i: ``i! * (n/i)**i``.
* ``colored_classes`` / ``o_classes`` / ``n_classes`` / ``uncolored_classes``
  - orbit counts by Burnside averaging over the even rotation group
  (order n) or, for uncolored diagrams, the full rotation group (order 2n).
* ``colored_classes_prime`` / ``o_classes_prime`` - shortcut forms valid
  for odd primes.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, fields

from .errors import (
    DivisibilityError,
    EvenInputError,
    NonDivisorError,
    NotPrimeError,
)

__all__ = [
    "double_factorial",
    "euler_phi",
    "total_gluings",
    "total_o_gluings",
    "colored_fixed",
    "uncolored_fixed",
    "o_fixed",
    "colored_classes",
    "colored_classes_prime",
    "o_classes",
    "o_classes_prime",
    "n_classes",
    "uncolored_classes",
    "CountRow",
    "CountTable",
    "build_table",
]


def double_factorial(m: int) -> int:
    """m!! for odd m >= -1, with the empty-product convention (-1)!! = 1."""
    if m < -1 or m % 2 == 0:
        raise EvenInputError(f"double factorial needs an odd m >= -1, got {m}")
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def euler_phi(q: int) -> int:
    """Euler's totient by trial-division factorization; phi(1) = 1."""
    if q < 1:
        raise ValueError(f"totient needs q >= 1, got {q}")
    out = q
    p = 2
    while p * p <= q:
        if q % p == 0:
            out -= out // p
            while q % p == 0:
                q //= p
        p += 1 if p == 2 else 2
    if q > 1:
        out -= out // q
    return out


def _is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def total_gluings(n: int) -> int:
    """|B_2n| = (2n-1)!! = (2n)! / (2^n n!)."""
    _check_order(n)
    return double_factorial(2 * n - 1)


def total_o_gluings(n: int) -> int:
    """Number of O-gluings: n! (odd points matched to a permutation of evens)."""
    _check_order(n)
    return math.factorial(n)


def _check_order(n: int) -> None:
    if n < 1:
        raise ValueError(f"diagram order must be >= 1, got {n}")


def colored_fixed(n: int, m: int) -> int:
    """Color diagrams fixed by the even rotation 2m, for m dividing n.

    Equals ``(2m-1)!! * (n/m)**m`` when n/m is odd, otherwise
    ``sum_r C(2m, 2r) * (2r-1)!! * (n/m)**r`` for r = 0..m.
    """
    _check_order(n)
    if m < 1 or n % m != 0:
        raise NonDivisorError(f"need m | n, got m={m}, n={n}")
    q = n // m
    if q % 2 == 1:
        return double_factorial(2 * m - 1) * q**m
    return sum(
        math.comb(2 * m, 2 * r) * double_factorial(2 * r - 1) * q**r
        for r in range(m + 1)
    )


def uncolored_fixed(n: int, k: int) -> int:
    """Uncolored diagrams fixed by rotation k, for k dividing 2n.

    Equals ``(k-1)!! * (2n/k)**(k/2)`` when 2n/k is odd (k is then even),
    otherwise ``sum_r C(k, 2r) * (2r-1)!! * (2n/k)**r`` for r = 0..k//2.
    """
    _check_order(n)
    if k < 1 or (2 * n) % k != 0:
        raise NonDivisorError(f"need k | 2n, got k={k}, n={n}")
    q = 2 * n // k
    if q % 2 == 1:
        return double_factorial(k - 1) * q ** (k // 2)
    return sum(
        math.comb(k, 2 * r) * double_factorial(2 * r - 1) * q**r
        for r in range(k // 2 + 1)
    )


def o_fixed(n: int, i: int) -> int:
    """O-gluings fixed by the even rotation 2i, for i dividing n: i!*(n/i)**i."""
    _check_order(n)
    if i < 1 or n % i != 0:
        raise NonDivisorError(f"need i | n, got i={i}, n={n}")
    return math.factorial(i) * (n // i) ** i


def _burnside(total_with_weights: int, group_order: int, what: str) -> int:
    if total_with_weights % group_order != 0:
        raise DivisibilityError(
            f"Burnside sum {total_with_weights} for {what} is not divisible "
            f"by group order {group_order}"
        )
    return total_with_weights // group_order


def colored_classes(n: int) -> int:
    """Non-isomorphic color diagrams: average of fixed counts over the
    even rotation group, grouped by divisor with totient weights.

    ``n = 1`` gives 1 (the formula already does; no special case needed).
    """
    _check_order(n)
    acc = sum(euler_phi(n // m) * colored_fixed(n, m) for m in _divisors(n))
    return _burnside(acc, n, f"colored_classes({n})")


def colored_classes_prime(p: int) -> int:
    """Shortcut for odd primes: (2p-1)!!/p + p - 1."""
    if not _is_odd_prime(p):
        raise NotPrimeError(f"needs an odd prime p >= 3, got {p}")
    return double_factorial(2 * p - 1) // p + p - 1


def o_classes(n: int) -> int:
    """Non-isomorphic O-diagrams; also the number of topologically distinct
    one-critical-point functions on oriented bordered surfaces of this size."""
    _check_order(n)
    acc = sum(euler_phi(n // i) * o_fixed(n, i) for i in _divisors(n))
    return _burnside(acc, n, f"o_classes({n})")


def o_classes_prime(p: int) -> int:
    """Shortcut for odd primes: (p-1)! + (p-1)."""
    if not _is_odd_prime(p):
        raise NotPrimeError(f"needs an odd prime p >= 3, got {p}")
    return math.factorial(p - 1) + (p - 1)


def n_classes(n: int) -> int:
    """Non-isomorphic N-diagrams: colored_classes - o_classes (0 at n = 1)."""
    return colored_classes(n) - o_classes(n)


def uncolored_classes(n: int) -> int:
    """Non-isomorphic uncolored diagrams under the full rotation group."""
    _check_order(n)
    acc = sum(euler_phi(2 * n // k) * uncolored_fixed(n, k) for k in _divisors(2 * n))
    return _burnside(acc, 2 * n, f"uncolored_classes({n})")


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


@dataclass(frozen=True)
class CountRow:
    """One table row; field names double as the CSV column names."""

    n: int
    total: int
    o_total: int
    d_star: int
    d_double_star: int
    d_o: int
    d_n: int


@dataclass(frozen=True)
class CountTable:
    rows: tuple[CountRow, ...]

    def to_csv(self) -> str:
        names = [f.name for f in fields(CountRow)]
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(names)
        for row in self.rows:
            writer.writerow([getattr(row, name) for name in names])
        return buf.getvalue()

    def to_json_dict(self) -> dict:
        names = [f.name for f in fields(CountRow)]
        return {
            "rows": [{name: getattr(row, name) for name in names} for row in self.rows]
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


def build_table(n_min: int, n_max: int) -> CountTable:
    """All counts for n in [n_min, n_max], with the N column rederived as a
    consistency check (d_n = d_double_star - d_o identically)."""
    if n_min < 1 or n_min > n_max:
        raise ValueError(f"need 1 <= n_min <= n_max, got {n_min}..{n_max}")
    rows = []
    for n in range(n_min, n_max + 1):
        dds = colored_classes(n)
        do = o_classes(n)
        rows.append(
            CountRow(
                n=n,
                total=total_gluings(n),
                o_total=total_o_gluings(n),
                d_star=uncolored_classes(n),
                d_double_star=dds,
                d_o=do,
                d_n=dds - do,
            )
        )
    return CountTable(tuple(rows))
