"""Damaged-hexagon parameters and the lattice coordinates of LGV endpoints.

After tilting the triangular lattice, the nonintersecting paths live in
Z x Z with unit steps to the right and upwards.  The lowest lateral
starting point sits at (0,0); all other endpoint coordinates follow the
closed forms below.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .exactmath import binom

EVEN = "even"
ODD = "odd"


class Point(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class HexSpec:
    """Hexagon sides a, b, c with an intrusion of length d at position p.

    Position p may be any integer (negative or > a are allowed and meaningful
    as determinants).  parity selects even vs odd intrusions.
    """

    a: int
    b: int
    c: int
    d: int
    p: int
    parity: str = EVEN

    def __post_init__(self) -> None:
        if min(self.a, self.b, self.c, self.d) < 0:
            raise ValueError("a, b, c, d must be nonnegative")
        if self.parity not in (EVEN, ODD):
            raise ValueError(f"parity must be {EVEN!r} or {ODD!r}")

    @property
    def dim(self) -> int:
        """Dimension of the LGV matrix."""
        return self.a + self.d


def lateral_start(spec: HexSpec, i: int) -> Point:
    """i-th lateral starting point (1-based, counted from lower right)."""
    if not 1 <= i <= spec.a:
        raise IndexError(f"lateral index {i} out of range 1..{spec.a}")
    return Point(1 - i, i - 1)


def lateral_end(spec: HexSpec, j: int) -> Point:
    """j-th lateral ending point (1-based)."""
    if not 1 <= j <= spec.a:
        raise IndexError(f"lateral index {j} out of range 1..{spec.a}")
    return Point(spec.b + 1 - j, spec.c + j - 1)


def intrusive_points(spec: HexSpec) -> tuple[list[Point], list[Point]]:
    """Intrusive starting and ending points, ordered lower left to upper right.

    Even intrusions: the i-th starting point coincides with the i-th ending
    point at (-p+i, p+i-1), so the corresponding paths have length 0.
    Odd intrusions: start_i = (-p+i, p+i) and end_j = (-p+j-1, p+j-1);
    note start_i equals end_{i+1}.
    """
    p, d = spec.p, spec.d
    if spec.parity == EVEN:
        pts = [Point(-p + i, p + i - 1) for i in range(1, d + 1)]
        return pts, list(pts)
    starts = [Point(-p + i, p + i) for i in range(1, d + 1)]
    ends = [Point(-p + j - 1, p + j - 1) for j in range(1, d + 1)]
    return starts, ends


def all_starts(spec: HexSpec) -> list[Point]:
    """All starting points in LGV order: lateral first, then intrusive."""
    starts, _ = intrusive_points(spec)
    return [lateral_start(spec, i) for i in range(1, spec.a + 1)] + starts


def all_ends(spec: HexSpec) -> list[Point]:
    _, ends = intrusive_points(spec)
    return [lateral_end(spec, j) for j in range(1, spec.a + 1)] + ends


def path_count(frm: Point, to: Point) -> int:
    """Number of monotone lattice paths from frm to to; 0 if unreachable."""
    dx = to.x - frm.x
    dy = to.y - frm.y
    return binom(dx + dy, dx)


def is_damage_free(spec: HexSpec) -> bool:
    """True iff the (even) intrusion does not affect the number of tilings.

    Only defined for even parity; the criterion for odd intrusions is not
    established, so odd specs are rejected.
    """
    if spec.parity != EVEN:
        raise ValueError("damage-free criterion is only defined for even intrusions")
    a, b, c, d, p = spec.a, spec.b, spec.c, spec.d, spec.p
    if d == 0:
        return True
    return p <= max(-d, -((b + 1) // 2)) or p >= min(a + d, a + (c + 1) // 2)
