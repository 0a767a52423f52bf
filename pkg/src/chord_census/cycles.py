"""Boundary cycles of a color diagram and the topology of its expansion.

The expansion of a diagram is the surface built from one disk (the circle
with its 2n marked points) plus one band per chord.  A band whose chord
joins two points of equal parity is glued with a half twist; that is what
makes N-diagrams non-orientable.  The surface boundary splits into
monochromatic circles: each circle alternates circle arcs of one color with
band sides, and we call them b-cycles and w-cycles.

Tracing rule (clockwise first): walk an arc to its end point, cross the
chord there, and continue along the adjacent arc of the same color.  The
continuation direction is forced by parity - after landing on point q, the
black arc at q runs clockwise when q is odd and counterclockwise when q is
even (mirrored for white).  Crossing a same-parity chord therefore reverses
the travel direction around the circle, which is exactly the twisted band.
Each new cycle starts at the least-numbered unvisited arc of its color,
traversed clockwise, so output is deterministic.

An arc is identified by the endpoint whose parity matches its color: black
arcs by their odd endpoint, white arcs by their even endpoint.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Union

from .diagram import DiagramClass, DiagramLike, classify, _gluing_of
from .errors import InconsistentTopologyError

__all__ = [
    "Color",
    "ArcStep",
    "ChordStep",
    "Cycle",
    "CycleDecomposition",
    "SurfaceType",
    "trace_cycles",
    "cycle_counts",
    "surface_type",
]


class Color(str, Enum):
    BLACK = "b"
    WHITE = "w"


class ArcStep(NamedTuple):
    """A circle arc traversed from ``start`` to ``end``."""

    start: int
    end: int
    color: Color

    @property
    def arc_id(self) -> int:
        """Identifying endpoint: odd end for black arcs, even end for white."""
        want = 1 if self.color is Color.BLACK else 0
        return self.start if self.start % 2 == want else self.end

    def text(self) -> str:
        return f"[{self.start},{self.end}]"


class ChordStep(NamedTuple):
    """A chord crossed from ``start`` to ``end``."""

    start: int
    end: int

    def text(self) -> str:
        return f"({self.start},{self.end})"


Step = Union[ArcStep, ChordStep]


@dataclass(frozen=True)
class Cycle:
    """One boundary circle: alternating arc, chord, arc, chord, ..."""

    color: Color
    steps: tuple[Step, ...]

    def arcs(self) -> tuple[ArcStep, ...]:
        return tuple(s for s in self.steps if isinstance(s, ArcStep))

    def chords(self) -> tuple[ChordStep, ...]:
        return tuple(s for s in self.steps if isinstance(s, ChordStep))

    def arc_ids(self) -> frozenset[int]:
        return frozenset(a.arc_id for a in self.arcs())

    def text(self) -> str:
        return "".join(s.text() for s in self.steps)

    def to_json_dict(self) -> dict:
        out = []
        for s in self.steps:
            if isinstance(s, ArcStep):
                out.append(
                    {"type": "arc", "from": s.start, "to": s.end, "color": s.color.value}
                )
            else:
                out.append({"type": "chord", "from": s.start, "to": s.end})
        return {"color": self.color.value, "steps": out}


@dataclass(frozen=True)
class CycleDecomposition:
    """All boundary cycles of a diagram, black and white."""

    b_cycles: tuple[Cycle, ...]
    w_cycles: tuple[Cycle, ...]

    @property
    def counts(self) -> tuple[int, int]:
        return (len(self.b_cycles), len(self.w_cycles))

    @property
    def total(self) -> int:
        return len(self.b_cycles) + len(self.w_cycles)

    def text(self) -> str:
        lines = []
        for i, c in enumerate(self.b_cycles, 1):
            lines.append(f"Cb{i}={c.text()}")
        for i, c in enumerate(self.w_cycles, 1):
            lines.append(f"Cw{i}={c.text()}")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "b_cycles": [c.to_json_dict() for c in self.b_cycles],
            "w_cycles": [c.to_json_dict() for c in self.w_cycles],
            "lambda_b": len(self.b_cycles),
            "lambda_w": len(self.w_cycles),
            "lambda_total": self.total,
        }


@dataclass(frozen=True)
class SurfaceType:
    """Topological type of the expansion surface.

    ``genus`` is the orientable genus when ``orientable`` and the cross-cap
    number otherwise.
    """

    orientable: bool
    boundary_components: int
    euler_characteristic: int
    genus: int


def _trace_color(partner: list[int], pts: int, color: Color) -> tuple[Cycle, ...]:
    black = color is Color.BLACK
    starts = range(1, pts, 2) if black else range(2, pts + 1, 2)
    visited: set[int] = set()
    cycles: list[Cycle] = []
    for s0 in starts:
        if s0 in visited:
            continue
        steps: list[Step] = []
        s, cw = s0, True
        while True:
            visited.add(s)
            if cw:
                enter, exit_ = s, s % pts + 1
            else:
                enter, exit_ = s % pts + 1, s
            steps.append(ArcStep(enter, exit_, color))
            q = partner[exit_]
            steps.append(ChordStep(exit_, q))
            # unique same-color arc at q: forward (clockwise) iff the parity
            # of q matches the color's clockwise entry parity
            if (q % 2 == 1) == black:
                s, cw = q, True
            else:
                s, cw = (q - 2) % pts + 1, False
            if s == s0:
                if not cw:  # a boundary circle covers each arc exactly once
                    raise AssertionError("re-entered start arc reversed")
                break
            if s in visited:
                raise AssertionError("arc revisited before cycle closed")
        cycles.append(Cycle(color, tuple(steps)))
    return tuple(cycles)


def trace_cycles(d: DiagramLike) -> CycleDecomposition:
    """Complete b/w boundary cycle decomposition of a diagram.

    Every black arc lands in exactly one b-cycle and every white arc in
    exactly one w-cycle; cycles alternate arcs and chords and close up.
    """
    g = _gluing_of(d)
    partner = g.partner_map()
    return CycleDecomposition(
        b_cycles=_trace_color(partner, g.points, Color.BLACK),
        w_cycles=_trace_color(partner, g.points, Color.WHITE),
    )


def cycle_counts(d: DiagramLike) -> tuple[int, int]:
    """The pair (number of b-cycles, number of w-cycles)."""
    return trace_cycles(d).counts


def surface_type(d: DiagramLike) -> SurfaceType:
    """Orientability, boundary count, Euler characteristic and genus.

    The expansion deformation-retracts onto one disk with n bands, so
    ``chi = 1 - n`` always.  The boundary count is the total number of
    b/w-cycles, orientability is the O/N class, and the genus solves the
    classification equation ``chi = 2 - 2g - b`` (orientable) or
    ``chi = 2 - k - b`` (non-orientable, k cross-caps).
    """
    g = _gluing_of(d)
    boundary = trace_cycles(g).total
    chi = 1 - g.n
    orientable = classify(g) is DiagramClass.O
    if orientable:
        twice_genus = 2 - boundary - chi
        if twice_genus < 0 or twice_genus % 2 != 0:
            raise InconsistentTopologyError(
                f"no orientable genus for chi={chi}, boundary={boundary}"
            )
        genus = twice_genus // 2
    else:
        genus = 2 - boundary - chi
        if genus < 1:
            raise InconsistentTopologyError(
                f"no cross-cap count for chi={chi}, boundary={boundary}"
            )
    return SurfaceType(
        orientable=orientable,
        boundary_components=boundary,
        euler_characteristic=chi,
        genus=genus,
    )
