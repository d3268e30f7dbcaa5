"""Brute-force ground truth for the determinant engine.

Enumerates every monotone lattice path per endpoint pair, then every
vertex-disjoint family over all end assignments, accumulating the
permutation sign.  Small cases only; the point is independence from the
determinant code path, not speed.  Also reconstructs and renders the
lozenge tiling corresponding to a nonintersecting family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .hexmodel import EVEN, HexSpec, Point, all_ends, all_starts, path_count

PATH_CAP = 10**6
SCALE = 40  # px per lattice unit
_SQ3 = 3**0.5


class CapExceededError(RuntimeError):
    """Enumeration would exceed the configured path cap."""


@dataclass(frozen=True)
class MonotonePath:
    points: tuple

    def __post_init__(self):
        for q, r in zip(self.points, self.points[1:]):
            if (r.x - q.x, r.y - q.y) not in ((1, 0), (0, 1)):
                raise ValueError("steps must be +(1,0) or +(0,1)")

    @property
    def start(self) -> Point:
        return self.points[0]

    @property
    def end(self) -> Point:
        return self.points[-1]


@dataclass(frozen=True)
class PathFamily:
    sigma: tuple
    paths: tuple


def enumerate_paths(frm: Point, to: Point, cap: int = PATH_CAP) -> list:
    """All monotone paths frm -> to, in lexicographic step order."""
    if path_count(frm, to) > cap:
        raise CapExceededError(f"{path_count(frm, to)} paths exceed cap {cap}")
    out = []

    def go(prefix, x, y):
        if (x, y) == (to.x, to.y):
            out.append(MonotonePath(points=tuple(prefix)))
            return
        if x < to.x:
            prefix.append(Point(x + 1, y))
            go(prefix, x + 1, y)
            prefix.pop()
        if y < to.y:
            prefix.append(Point(x, y + 1))
            go(prefix, x, y + 1)
            prefix.pop()

    if to.x >= frm.x and to.y >= frm.y:
        go([Point(frm.x, frm.y)], frm.x, frm.y)
    return out


def _candidates(spec: HexSpec, cap: int):
    starts, ends = all_starts(spec), all_ends(spec)
    n = len(starts)
    vid: dict = {}

    def mask(points):
        m = 0
        for pt in points:
            if pt not in vid:
                vid[pt] = len(vid)
            m |= 1 << vid[pt]
        return m

    cand = []
    for s in starts:
        row = []
        for e in ends:
            row.append([(mask(p.points), p) for p in enumerate_paths(s, e, cap)])
        cand.append(row)
    return n, cand


def _search(spec: HexSpec, cap: int):
    """Returns (signed total, number of tuples, number of identity tuples)."""
    if spec.dim > 7:
        raise ValueError("oracle is desk-scale only: a + d <= 7")
    n, cand = _candidates(spec, cap)
    total = tuples = id_tuples = 0

    def go(i, used_v, used_e, odd_inv, is_id):
        nonlocal total, tuples, id_tuples
        if i == n:
            total += -1 if odd_inv else 1
            tuples += 1
            id_tuples += is_id
            return
        for j in range(n):
            if used_e >> j & 1:
                continue
            lst = cand[i][j]
            if not lst:
                continue
            flip = (used_e >> (j + 1)).bit_count() & 1
            ue = used_e | 1 << j
            for m, _ in lst:
                if m & used_v:
                    continue
                go(i + 1, used_v | m, ue, odd_inv ^ flip, is_id and i == j)

    go(0, 0, 0, 0, True)
    return total, tuples, id_tuples


def signed_count(spec: HexSpec, cap: int = PATH_CAP) -> int:
    """LGV sum over vertex-disjoint path families; equals the determinant."""
    return _search(spec, cap)[0]


def count_families(spec: HexSpec, cap: int = PATH_CAP):
    """(total disjoint families, families realizing the identity assignment)."""
    _, tuples, id_tuples = _search(spec, cap)
    return tuples, id_tuples


def first_tiling(spec: HexSpec, cap: int = PATH_CAP) -> Optional[PathFamily]:
    """One vertex-disjoint family, or None when none exists."""
    if spec.dim > 7:
        raise ValueError("oracle is desk-scale only: a + d <= 7")
    n, cand = _candidates(spec, cap)
    chosen: list = []

    def go(i, used_v, used_e):
        if i == n:
            return True
        for j in range(n):
            if used_e >> j & 1:
                continue
            for m, path in cand[i][j]:
                if m & used_v:
                    continue
                chosen.append((j, path))
                if go(i + 1, used_v | m, used_e | 1 << j):
                    return True
                chosen.pop()
        return False

    if not go(0, 0, 0):
        return None
    return PathFamily(sigma=tuple(j for j, _ in chosen), paths=tuple(p for _, p in chosen))


# --- geometry on the triangular lattice --------------------------------------
#
# Oblique vertex (m,n) sits at real (m + n/2, n*sqrt(3)/2).  U(m,n) is the
# upward triangle with vertices (m,n),(m+1,n),(m,n+1); D(m,n) the downward
# one with (m+1,n),(m,n+1),(m+1,n+1).


def intrusion_triangles(spec: HexSpec) -> list:
    """The 2d unit triangles removed by the intrusion (some may fall outside
    the hexagon; such a needle does less damage, or none at all)."""
    a, d, p = spec.a, spec.d, spec.p
    if d == 0:
        return []
    out = []
    if spec.parity == EVEN:
        for k in range(d):
            out.append(("D", (a - p - 1 - k, 2 * k)))
            out.append(("U", (a - p - 1 - k, 2 * k + 1)))
    else:
        out.append(("U", (a - p - 1, 0)))
        for k in range(1, d):
            out.append(("D", (a - p - 1 - k, 2 * k - 1)))
            out.append(("U", (a - p - 1 - k, 2 * k)))
        out.append(("D", (a - p - 1 - d, 2 * d - 1)))
    return out


def _up_inside(spec, m, n):
    a, b, c = spec.a, spec.b, spec.c
    return -c <= m and m + 1 <= a and 0 <= n and n + 1 <= b + c and m + n >= 0 and m + n + 1 <= a + b


def _down_inside(spec, m, n):
    a, b, c = spec.a, spec.b, spec.c
    return -c <= m and m + 1 <= a and 0 <= n and n + 1 <= b + c and m + n + 1 >= 0 and m + n + 2 <= a + b


def _inside(spec, tri):
    kind, (m, n) = tri
    return _up_inside(spec, m, n) if kind == "U" else _down_inside(spec, m, n)


def _tri_corners(tri):
    kind, (m, n) = tri
    if kind == "U":
        return [(m, n), (m + 1, n), (m, n + 1)]
    return [(m + 1, n), (m + 1, n + 1), (m, n + 1)]


def reconstruct_tiling(spec: HexSpec, family: PathFamily):
    """Lozenges (as triangle pairs) of the tiling encoded by a path family.

    Each unit path step crosses one lozenge; vertical lozenges fill whatever
    remains.  Raises if the result is not a perfect partition of the
    undamaged region, which would mean the family does not encode a tiling.
    """
    a = spec.a
    removed = {t for t in intrusion_triangles(spec) if _inside(spec, t)}
    free = {("U", (m, n)) for m in range(-spec.c, a) for n in range(spec.b + spec.c) if _up_inside(spec, m, n)}
    free |= {("D", (m, n)) for m in range(-spec.c, a) for n in range(spec.b + spec.c) if _down_inside(spec, m, n)}
    free -= removed

    def take(tri):
        if tri not in free:
            raise ValueError(f"triangle {tri} not available; family is not a tiling")
        free.remove(tri)

    lozenges = []
    for path in family.paths:
        for q, r in zip(path.points, path.points[1:]):
            m, n = a - 1 - q.y, q.x + q.y
            if r.x == q.x + 1:
                pair = (("U", (m, n)), ("D", (m, n)), "right")
            else:
                pair = (("U", (m, n)), ("D", (m - 1, n)), "up")
            take(pair[0])
            take(pair[1])
            lozenges.append(pair)
    for tri in sorted(t for t in free if t[0] == "U"):
        m, n = tri[1]
        mate = ("D", (m, n - 1))
        take(tri)
        take(mate)
        lozenges.append((tri, mate, "vertical"))
    if free:
        raise ValueError(f"triangles left uncovered: {sorted(free)}")
    return lozenges


def _hex_outline(spec: HexSpec):
    a, b, c = spec.a, spec.b, spec.c
    return [(0, 0), (a, 0), (a, b), (a - c, b + c), (-c, b + c), (-c, c)]


def render_svg(spec: HexSpec, family: Optional[PathFamily] = None) -> str:
    """SVG 1.1 drawing of the hexagon, intrusion, and optional tiling."""
    marks = intrusion_triangles(spec)
    pts = _hex_outline(spec) + [v for t in marks for v in _tri_corners(t)]
    real = [(m + n / 2, n * _SQ3 / 2) for (m, n) in pts]
    xmin = min(x for x, _ in real) - 0.5
    xmax = max(x for x, _ in real) + 0.5
    ymin = min(y for _, y in real) - 0.5
    ymax = max(y for _, y in real) + 0.5

    def xy(m, n):
        x, y = m + n / 2, n * _SQ3 / 2
        return (SCALE * (x - xmin), SCALE * (ymax - y))

    def poly(corners, fill, stroke="#333", width=1.5):
        spts = " ".join(f"{x:.2f},{y:.2f}" for x, y in (xy(m, n) for m, n in corners))
        return f'<polygon points="{spts}" fill="{fill}" stroke="{stroke}" stroke-width="{width}"/>'

    w, h = SCALE * (xmax - xmin), SCALE * (ymax - ymin)
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{w:.0f}" height="{h:.0f}" viewBox="0 0 {w:.2f} {h:.2f}">'
    ]
    fills = {"right": "#b3cde3", "up": "#ccebc5", "vertical": "#fbb4ae"}
    if family is not None:
        for t1, t2, kind in reconstruct_tiling(spec, family):
            corners = []
            for v in _tri_corners(t1) + _tri_corners(t2):
                if v not in corners:
                    corners.append(v)
            # order the 4 rhombus corners around their centroid
            cx = sum(m + n / 2 for m, n in corners) / 4
            cy = sum(n for _, n in corners) / 4 * _SQ3 / 2
            corners.sort(key=lambda v: math.atan2(v[1] * _SQ3 / 2 - cy, v[0] + v[1] / 2 - cx))
            out.append(poly(corners, fills[kind]))
    for t in marks:
        out.append(poly(_tri_corners(t), "#de2d26", stroke="#a50f15"))
    out.append(poly(_hex_outline(spec), "none", stroke="#000", width=3.0))
    out.append("</svg>")
    return "\n".join(out)
