"""Gluings and color chord diagrams over the fixed two-colored pattern.

Conventions used throughout the package:

* Points ``1..2n`` sit clockwise on a circle.  The circle arcs
  ``(1,2), (3,4), ..., (2n-1,2n)`` are black and the arcs
  ``(2,3), (4,5), ..., (2n,1)`` are white.  The coloring is a pure function
  of the endpoint parities and is never stored.
* A gluing is a perfect matching of ``{1..2n}`` into n chords, kept in
  normal form: chords ``(a_i, b_i)`` with ``a_1 = 1``, ``a_i < b_i`` and
  ``a_1 < a_2 < ... < a_n``.  Every matching has exactly one normal form.
* Rotation by k sends every index d to ``d + k (mod 2n)`` with residue 0
  written as 2n, then renormalizes.  Color diagrams are isomorphic exactly
  when related by an even rotation; the even rotations form a group of
  order n.

All values are immutable; every function here is pure and safe to share
between threads or processes.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple, Union

from .errors import (
    DuplicateIndexError,
    GluingParseError,
    MissingIndexError,
    SelfPairError,
    SizeMismatchError,
)

__all__ = [
    "Gluing",
    "ColorDiagram",
    "DiagramClass",
    "normalize",
    "classify",
    "rotate",
    "canonical_form",
    "isomorphic",
    "recolor_shift",
]


class DiagramClass(str, Enum):
    """Three-way selector: O-diagrams, N-diagrams, or everything."""

    O = "o"
    N = "n"
    ALL = "all"


class Gluing(NamedTuple):
    """A perfect matching of ``{1..2n}`` in normal form.

    Construct through :func:`normalize`, :meth:`parse` or :meth:`from_json`;
    the raw constructor does not validate.
    """

    chords: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.chords)

    @property
    def points(self) -> int:
        return 2 * len(self.chords)

    def partner_map(self) -> list[int]:
        """Partner lookup table ``m`` with ``m[i]`` the partner of point i.

        Index 0 is unused padding so that points index directly.
        """
        m = [0] * (self.points + 1)
        for a, b in self.chords:
            m[a] = b
            m[b] = a
        return m

    def flattened(self) -> tuple[int, ...]:
        """The sequence ``(a_1, b_1, a_2, b_2, ...)`` used for comparisons."""
        return tuple(x for chord in self.chords for x in chord)

    @classmethod
    def parse(cls, text: str) -> "Gluing":
        """Parse the ``(a,b)(a,b)...`` text form (whitespace tolerated)."""
        if not re.fullmatch(r"(?:\s*\(\s*\d+\s*,\s*\d+\s*\))+\s*", text or ""):
            raise GluingParseError(f"not a gluing: {text!r}")
        pairs = [
            (int(a), int(b))
            for a, b in re.findall(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)", text)
        ]
        return normalize(pairs)

    @classmethod
    def from_json(cls, obj: Union[str, dict]) -> "Gluing":
        """Parse the ``{"n": ..., "chords": [[a,b], ...]}`` JSON form."""
        if isinstance(obj, str):
            try:
                obj = json.loads(obj)
            except json.JSONDecodeError as exc:
                raise GluingParseError(f"bad JSON: {exc}") from None
        if not isinstance(obj, dict) or "chords" not in obj:
            raise GluingParseError("JSON gluing must be an object with 'chords'")
        chords = obj["chords"]
        if not isinstance(chords, list) or not all(
            isinstance(c, (list, tuple)) and len(c) == 2 for c in chords
        ):
            raise GluingParseError("'chords' must be a list of index pairs")
        if "n" in obj and obj["n"] != len(chords):
            raise GluingParseError(
                f"declared n={obj['n']} but {len(chords)} chords given"
            )
        return normalize([(int(a), int(b)) for a, b in chords])

    def text(self) -> str:
        return "".join(f"({a},{b})" for a, b in self.chords)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "chords": [list(c) for c in self.chords]}

    def __str__(self) -> str:
        return self.text()


@dataclass(frozen=True)
class ColorDiagram:
    """A gluing read against the fixed pattern coloring.

    The pattern is implicit, so this is a thin semantic wrapper; it exists
    so that signatures distinguish "matching" from "matching plus colors".
    """

    gluing: Gluing

    @property
    def n(self) -> int:
        return self.gluing.n

    @classmethod
    def parse(cls, text: str) -> "ColorDiagram":
        return cls(Gluing.parse(text))

    def diagram_class(self) -> DiagramClass:
        return classify(self)

    def __str__(self) -> str:
        return self.gluing.text()


DiagramLike = Union[Gluing, ColorDiagram]


def _gluing_of(d: DiagramLike) -> Gluing:
    return d.gluing if isinstance(d, ColorDiagram) else d


def normalize(pairs: Iterable[tuple[int, int]]) -> Gluing:
    """Return the unique normal-form gluing for a set of point pairs.

    The pairs must partition ``{1..2n}`` where n is the number of pairs.
    Raises :class:`SelfPairError`, :class:`DuplicateIndexError` or
    :class:`MissingIndexError` otherwise.  Idempotent on normal input.
    """
    pair_list = [(int(a), int(b)) for a, b in pairs]
    n = len(pair_list)
    pts = 2 * n
    seen: set[int] = set()
    for a, b in pair_list:
        if a == b:
            raise SelfPairError(f"pair ({a},{b}) joins a point to itself")
        for x in (a, b):
            if x in seen:
                raise DuplicateIndexError(f"point {x} appears more than once")
            seen.add(x)
    expected = set(range(1, pts + 1))
    if seen != expected:
        missing = sorted(expected - seen)
        stray = sorted(seen - expected)
        detail = []
        if missing:
            detail.append(f"missing {missing}")
        if stray:
            detail.append(f"outside 1..{pts}: {stray}")
        raise MissingIndexError(
            f"pairs do not partition 1..{pts} ({'; '.join(detail)})"
        )
    chords = sorted((a, b) if a < b else (b, a) for a, b in pair_list)
    return Gluing(tuple(chords))


def classify(d: DiagramLike) -> DiagramClass:
    """O when every chord joins an odd point to an even point, else N.

    Endpoint parity differences survive any rotation (both ends shift
    together), so the class is rotation invariant.
    """
    g = _gluing_of(d)
    if all((a + b) % 2 == 1 for a, b in g.chords):
        return DiagramClass.O
    return DiagramClass.N


def rotate(g: Gluing, k: int) -> Gluing:
    """Rotate a gluing by k steps: every index d goes to ``d+k mod 2n``.

    The residue 0 is written as 2n.  Requires ``1 <= k <= 2n``;
    ``rotate(g, 2n)`` is the identity.
    """
    pts = g.points
    if not 1 <= k <= pts:
        raise ValueError(f"rotation shift must be in 1..{pts}, got {k}")
    chords = []
    for a, b in g.chords:
        a2 = (a + k - 1) % pts + 1
        b2 = (b + k - 1) % pts + 1
        chords.append((a2, b2) if a2 < b2 else (b2, a2))
    chords.sort()
    return Gluing(tuple(chords))


def canonical_form(d: DiagramLike) -> Gluing:
    """Orbit representative under even rotations.

    Returns the lexicographically least gluing (flattened-sequence order)
    among ``rotate(g, 2m)`` for ``m = 1..n``.  Two diagrams are isomorphic
    exactly when their canonical forms coincide.
    """
    g = _gluing_of(d)
    best = g
    best_key = g.flattened()
    for m in range(1, g.n):
        cand = rotate(g, 2 * m)
        key = cand.flattened()
        if key < best_key:
            best, best_key = cand, key
    return best


def isomorphic(d1: DiagramLike, d2: DiagramLike) -> bool:
    """Whether some even rotation carries d1 onto d2."""
    g1, g2 = _gluing_of(d1), _gluing_of(d2)
    if g1.n != g2.n:
        raise SizeMismatchError(f"cannot compare n={g1.n} with n={g2.n}")
    return canonical_form(g1) == canonical_form(g2)


def recolor_shift(d: DiagramLike) -> DiagramLike:
    """Rotate by one step: the same picture with its two colors swapped.

    Re-reading the shifted gluing against the fixed pattern is what makes
    a single pattern coloring lose no isomorphism classes.  Applied 2n
    times it is the identity.  The result lives in the same fixed-pattern
    universe; odd shifts are not diagram isomorphisms.
    """
    g = _gluing_of(d)
    shifted = rotate(g, 1)
    if isinstance(d, ColorDiagram):
        return ColorDiagram(shifted)
    return shifted
