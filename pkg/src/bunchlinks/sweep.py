"""Orthogonal segment-intersection sweep, used as a geometric oracle.

Sweeps a vertical line left to right over exact coordinates.  Horizontals are
kept in a y-sorted active list; each vertical reports the active horizontals
strictly inside its y-span.  At equal x, horizontals ending there leave first,
then verticals are processed, then horizontals starting there enter, so
endpoint incidences never count.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .parent import ParentDiagram, Region, Segment

_END, _VERT, _START = 0, 1, 2


@dataclass(frozen=True)
class Hit:
    vertical: str
    horizontal: str
    x: Fraction
    y: Fraction


def sweep_intersections(segments: Iterable[Segment]) -> list[Hit]:
    horizontals = [s for s in segments if not s.vertical]
    verticals = [s for s in segments if s.vertical]
    events = []
    for k, s in enumerate(horizontals):
        lo, hi = sorted((s.x0, s.x1))
        events.append((lo, _START, k))
        events.append((hi, _END, k))
    for k, s in enumerate(verticals):
        events.append((s.x0, _VERT, k))
    events.sort()

    active: list[tuple[Fraction, int]] = []
    hits = []
    for x, kind, k in events:
        if kind == _END:
            s = horizontals[k]
            active.pop(bisect.bisect_left(active, (s.y0, k)))
        elif kind == _START:
            bisect.insort(active, (horizontals[k].y0, k))
        else:
            v = verticals[k]
            lo, hi = sorted((v.y0, v.y1))
            i = bisect.bisect_right(active, (lo, len(horizontals)))
            while i < len(active) and active[i][0] < hi:
                h = horizontals[active[i][1]]
                hits.append(Hit(v.name, h.name, x, h.y0))
                i += 1
    return hits


def sweep_region(hit: Hit, nbar: int) -> Region:
    top = hit.y > Fraction(2 * nbar + 1, 2)
    if hit.x < 0:
        return Region.TOP_LEFT if top else Region.BOTTOM_LEFT
    return Region.TOP_RIGHT if top else Region.BOTTOM_RIGHT


def sweep_counts(d: ParentDiagram) -> dict[str, int]:
    counts = {r.value: 0 for r in Region}
    for hit in sweep_intersections(d.segments()):
        counts[sweep_region(hit, d.nbar).value] += 1
    counts["total"] = sum(counts.values())
    return counts
