"""Deterministic SVG drawings of 2D fans and planar sections of 3D fans."""

from __future__ import annotations

import hashlib
import math
from typing import Optional, Sequence

from .cones import Fan
from .lattice import dot

SIZE = 400
RADIUS = 160


def _colour(key: str) -> str:
    h = int(hashlib.sha1(key.encode()).hexdigest()[:6], 16)
    hue = h % 360
    return f"hsl({hue},60%,75%)"


def _section_basis(normal: Sequence[int]):
    n = [float(x) for x in normal]
    # Gram-Schmidt on the coordinate axes against the normal
    basis = []
    for e in ([1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]):
        v = e[:]
        for b in [n] + basis:
            nb = sum(x * x for x in b)
            c = sum(x * y for x, y in zip(v, b)) / nb
            v = [x - c * y for x, y in zip(v, b)]
        if sum(x * x for x in v) > 1e-9:
            basis.append(v)
        if len(basis) == 2:
            break
    return [[x / math.sqrt(sum(y * y for y in b)) for x in b] for b in basis]


def plot(fan: Optional[Fan], payload_keys: Optional[Sequence[str]] = None, section: Optional[Sequence[int]] = None, ambient: int = 2) -> str:
    """SVG of ``fan``: labelled rays from the origin, shaded maximal cones.

    Rank-3 fans are drawn on the plane ``section . x = 1`` (default
    ``(1, 1, 1)``); every ray must have positive pairing with ``section``.
    """
    rank = fan.ambient if fan is not None else ambient
    if rank > 3 or rank < 2:
        raise ValueError("can only plot fans of rank 2 or 3")
    cx = cy = SIZE / 2
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        '<rect width="100%" height="100%" fill="white"/>',
        f'<line x1="0" y1="{cy}" x2="{SIZE}" y2="{cy}" stroke="#bbb" stroke-width="1"/>',
        f'<line x1="{cx}" y1="0" x2="{cx}" y2="{SIZE}" stroke="#bbb" stroke-width="1"/>',
    ]
    if fan is None or not fan.maximal:
        out.append("</svg>")
        return "\n".join(out) + "\n"

    if rank == 2:
        def place(r):
            length = math.hypot(*r)
            return (r[0] / length, r[1] / length)
        origin = (0.0, 0.0)
    else:
        section = tuple(section or (1, 1, 1))
        basis = _section_basis(section)
        pts = {}
        for r in fan.rays:
            t = dot(section, r)
            if t <= 0:
                raise ValueError(f"ray {r} does not meet the section plane")
            p = [x / t for x in r]
            pts[r] = tuple(sum(a * b for a, b in zip(p, e)) for e in basis)
        scale = max(math.hypot(*p) for p in pts.values()) or 1.0
        centre = tuple(sum(p[i] for p in pts.values()) / len(pts) for i in range(2))

        def place(r):
            p = pts[r]
            return ((p[0] - centre[0]) / scale, (p[1] - centre[1]) / scale)
        origin = None

    def screen(p):
        return (round(cx + RADIUS * p[0], 3), round(cy - RADIUS * p[1], 3))

    for i, c in enumerate(fan.maximal):
        key = payload_keys[i] if payload_keys else repr(c.rays)
        corners = [place(r) for r in c.rays]
        if origin is None:
            mx = sum(p[0] for p in corners) / len(corners)
            my = sum(p[1] for p in corners) / len(corners)
            corners.sort(key=lambda p: math.atan2(p[1] - my, p[0] - mx))
            poly = corners
        else:
            poly = [origin] + corners
        points = " ".join(f"{x},{y}" for x, y in map(screen, poly))
        out.append(f'<polygon points="{points}" fill="{_colour(key)}" fill-opacity="0.8" stroke="none"/>')

    for r in fan.rays:
        x, y = screen(place(r))
        if origin is not None:
            ox, oy = screen(origin)
            out.append(f'<line x1="{ox}" y1="{oy}" x2="{x}" y2="{y}" stroke="black" stroke-width="2"/>')
        else:
            out.append(f'<circle cx="{x}" cy="{y}" r="3" fill="black"/>')
        label = "(" + ",".join(map(str, r)) + ")"
        out.append(f'<text x="{x + 4}" y="{y - 4}" font-size="12" font-family="monospace">{label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"

