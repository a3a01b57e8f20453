"""Static SVG drawings of paths, polygon dissections and partition chords.

Output is a pure function of the input: no timestamps, no ids from memory
addresses, and every coordinate printed with six decimals.  Laser endpoints
are rounded from exact rationals so the text never depends on float noise.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from . import assoc, dyck, ncpart
from .dyck import DyckPath
from .ncpart import SetPartition

CELL = 40
MARGIN = 20
RADIUS = 150


def fmt(x) -> str:
    """Six-decimal fixed notation; Fractions are rounded exactly (half to even)."""
    if isinstance(x, (int, Fraction)):
        q = round(Fraction(x) * 10**6)
        sign = "-" if q < 0 else ""
        q = abs(q)
        return f"{sign}{q // 10**6}.{q % 10**6:06d}"
    return f"{x:.6f}"


def _svg(width, height, body: Iterable[str]) -> str:
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{fmt(width)}" height="{fmt(height)}" '
        f'viewBox="0 0 {fmt(width)} {fmt(height)}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"


def _line(x1, y1, x2, y2, cls: str, **style) -> str:
    extra = "".join(f' {k.replace("_", "-")}="{v}"' for k, v in style.items())
    return (
        f'<line class="{cls}" x1="{fmt(x1)}" y1="{fmt(y1)}" x2="{fmt(x2)}" y2="{fmt(y2)}"{extra}/>'
    )


def dyck_svg(path: DyckPath, lasers: str = "none", labels: str = "none") -> str:
    """Grid, diagonal, path and optionally lasers ('all' or 'valleys') and labels.

    ``labels`` may be 'homogeneous' (internal points) or 'inhomogeneous'
    (right ends of east steps), drawn just below their points.
    """
    a, b = path.a, path.b
    w, h = b * CELL + 2 * MARGIN, a * CELL + 2 * MARGIN

    def X(x):
        return Fraction(x) * CELL + MARGIN

    def Y(y):
        return Fraction(a - y) * CELL + MARGIN

    body = []
    for x in range(b + 1):
        body.append(_line(X(x), Y(0), X(x), Y(a), "grid", stroke="#cccccc"))
    for y in range(a + 1):
        body.append(_line(X(0), Y(y), X(b), Y(y), "grid", stroke="#cccccc"))
    body.append(_line(X(0), Y(0), X(b), Y(a), "diagonal", stroke="#888888", stroke_dasharray="4"))
    pts = " ".join(f"{fmt(X(x))},{fmt(Y(y))}" for x, y in path.points)
    body.append(f'<polyline class="path" points="{pts}" fill="none" stroke="black" stroke-width="3"/>')

    if lasers != "none":
        if lasers == "all":
            shots = dyck.fire_lasers(path)
        elif lasers == "valleys":
            shots = dyck.fire_lasers(path, dyck.statistics(path).valleys)
        else:
            raise ValueError(f"lasers must be none, all or valleys, got {lasers!r}")
        for L in shots:
            sx, sy = L.source
            body.append(_line(X(sx), Y(sy), X(L.end_x), Y(L.end_height), "laser", stroke="red"))

    if labels != "none":
        if labels == "homogeneous":
            spots = list(path.internal_points)
        elif labels == "inhomogeneous":
            spots = [path.points[t + 1] for t, s in enumerate(path.steps) if s == "E"][:-1]
        else:
            raise ValueError(f"labels must be none, homogeneous or inhomogeneous, got {labels!r}")
        for k, (x, y) in enumerate(spots, start=1):
            body.append(
                f'<text class="label" x="{fmt(X(x) + 4)}" y="{fmt(Y(y) + 14)}" font-size="11">{k}</text>'
            )
    return _svg(w, h, body)


def _circle_points(n: int) -> list[tuple[str, str]]:
    """n points clockwise from the top of a circle, formatted once."""
    c = RADIUS + MARGIN
    out = []
    for k in range(n):
        t = 2 * math.pi * k / n
        out.append((fmt(c + RADIUS * math.sin(t)), fmt(c - RADIUS * math.cos(t))))
    return out


def _disk(n: int, body: list[str], polygon: bool) -> list[tuple[str, str]]:
    pts = _circle_points(n)
    c = fmt(RADIUS + MARGIN)
    if polygon:
        ring = " ".join(f"{x},{y}" for x, y in pts)
        body.append(f'<polygon class="polygon" points="{ring}" fill="none" stroke="black"/>')
    else:
        body.append(f'<circle class="disk" cx="{c}" cy="{c}" r="{fmt(RADIUS)}" fill="none" stroke="black"/>')
    for k, (x, y) in enumerate(pts, start=1):
        body.append(f'<circle class="vertex" cx="{x}" cy="{y}" r="3"/>')
        body.append(f'<text class="label" x="{x}" y="{y}" dx="5" dy="-5" font-size="11">{k}</text>')
    return pts


def dissection_svg(b: int, diagonals: Sequence[tuple[int, int]]) -> str:
    """The (b+1)-gon with vertices 1..b+1 clockwise and the given diagonals."""
    size = 2 * (RADIUS + MARGIN)
    body: list[str] = []
    pts = _disk(b + 1, body, polygon=True)
    for u, v in sorted(tuple(sorted(d)) for d in diagonals):
        (x1, y1), (x2, y2) = pts[u - 1], pts[v - 1]
        body.append(f'<line class="diagonal" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="blue"/>')
    return _svg(size, size, body)


def chords_svg(p: SetPartition) -> str:
    """Disk with points 1..m and each block drawn as the polygon through its points."""
    size = 2 * (RADIUS + MARGIN)
    body: list[str] = []
    pts = _disk(p.m, body, polygon=False)
    for B in p.blocks:
        if len(B) == 1:
            continue
        ring = " ".join(f"{pts[x - 1][0]},{pts[x - 1][1]}" for x in B)
        tag = "polyline" if len(B) == 2 else "polygon"
        body.append(f'<{tag} class="block" points="{ring}" fill="none" stroke="green"/>')
    return _svg(size, size, body)


def facet_svg(path: DyckPath) -> str:
    return dissection_svg(path.b, sorted(assoc.facet(path)))


def partition_svg(path: DyckPath, kind: str = "homogeneous") -> str:
    part = ncpart.homogeneous(path) if kind == "homogeneous" else ncpart.inhomogeneous(path)
    return chords_svg(part)
