"""Deterministic SVG output for template embeddings and parent diagrams.

Coordinates are written with six decimals and elements are emitted in a fixed
order, so equal inputs and options give byte-identical documents.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from xml.sax.saxutils import escape

from .bunch import TemplateEmbedding
from .parent import ParentDiagram
from .word import X, BaseLabel

PALETTES = {
    "default": ("#1f4fd8", "#d8261f"),
    "print": ("#000080", "#800000"),
}


@dataclass(frozen=True)
class RenderOptions:
    unit: float = 40.0
    palette: str = "default"
    show_unused: bool = True


def _f(v: float | Fraction) -> str:
    return f"{float(v):.6f}"


def _shade(base: str, index: int, count: int) -> str:
    """Darkest for index 1, fading towards white as the index grows."""
    t = 0.0 if count <= 1 else 0.7 * (index - 1) / (count - 1)
    rgb = [int(base[i:i + 2], 16) for i in (1, 3, 5)]
    mixed = [round(c + (255 - c) * t) for c in rgb]
    return "#" + "".join(f"{c:02x}" for c in mixed)


def _colour(label: BaseLabel, nbar: int, opts: RenderOptions) -> str:
    blue, red = PALETTES[opts.palette]
    return _shade(blue if label.kind == X else red, label.index, nbar)


class _Doc:
    def __init__(self, width: float, height: float, title: str):
        self.lines = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{_f(width)}" '
            f'height="{_f(height)}" viewBox="0 0 {_f(width)} {_f(height)}">',
            f"<title>{escape(title)}</title>",
            f'<rect x="0.000000" y="0.000000" width="{_f(width)}" height="{_f(height)}" fill="#ffffff"/>',
        ]

    def add(self, line: str) -> None:
        self.lines.append(line)

    def text(self) -> str:
        return "\n".join(self.lines + ["</svg>", ""])


# -- split template -----------------------------------------------------------


def render_template_svg(emb: TemplateEmbedding, opts: RenderOptions | None = None) -> str:
    opts = opts or RenderOptions()
    u = opts.unit
    n = emb.link.nbar
    width = (emb.k_max + emb.l_max + 2) * u
    height = 6 * u
    base_y = 3 * u

    def px(a: float) -> float:
        return (a + emb.k_max + 1) * u

    def slot_x(interval: int, rank: int) -> float:
        return px(interval - 0.4 + 0.8 * rank / (n + 1))

    doc = _Doc(width, height, f"split template: {emb.link.text()}")
    doc.add(f'<line class="branch-line" x1="{_f(px(-emb.k_max - 0.5))}" y1="{_f(base_y)}" '
            f'x2="{_f(px(emb.l_max + 0.5))}" y2="{_f(base_y)}" stroke="#000000" stroke-width="1.000000"/>')
    for i in emb.intervals():
        doc.add(f'<line class="tick" x1="{_f(px(i))}" y1="{_f(base_y - 0.1 * u)}" x2="{_f(px(i))}" '
                f'y2="{_f(base_y + 0.1 * u)}" stroke="#000000" stroke-width="1.000000"/>')
        doc.add(f'<text class="tick-label" x="{_f(px(i))}" y="{_f(base_y + 0.45 * u)}" '
                f'font-size="{_f(0.3 * u)}" text-anchor="middle">{i:+d}</text>')

    for lab, turns in emb.arcs.items():
        colour = _colour(lab, n, opts)
        # x-turns loop over the left ear (above), y-turns over the right ear (below)
        sign = -1 if lab.kind == X else 1
        cls = "x-turn" if lab.kind == X else "y-turn"
        for a, b in turns:
            ax, bx = slot_x(a.interval, a.rank), slot_x(b.interval, b.rank)
            bulge = base_y + sign * (0.6 + 0.1 * abs(a.interval)) * u
            doc.add(f'<path class="{cls}" data-label="{lab}" d="M {_f(ax)} {_f(base_y)} '
                    f'C {_f(ax)} {_f(bulge)} {_f(bx)} {_f(bulge)} {_f(bx)} {_f(base_y)}" '
                    f'fill="none" stroke="{colour}" stroke-width="1.500000"/>')

    used = set(emb.used)
    for s in emb.slots:
        colour = _colour(s.label, n, opts)
        cx = slot_x(s.interval, s.rank)
        if s in used:
            doc.add(f'<circle class="slot used" data-label="{s.label}" cx="{_f(cx)}" cy="{_f(base_y)}" '
                    f'r="{_f(0.08 * u)}" fill="{colour}" stroke="{colour}"/>')
        elif opts.show_unused:
            doc.add(f'<circle class="slot unused" data-label="{s.label}" cx="{_f(cx)}" cy="{_f(base_y)}" '
                    f'r="{_f(0.08 * u)}" fill="none" stroke="{colour}"/>')
    return doc.text()


# -- parent diagram -----------------------------------------------------------


def display_abscissa(v: Fraction) -> float:
    """Squeeze the stagger k + f (0 < f < 1) into (k - 0.4, k + 0.4) so every
    line sits inside the band of its annulus."""
    sign = -1 if v < 0 else 1
    a = abs(v)
    k = int(a)
    return sign * (k + 0.8 * (float(a - k) - 0.5))


def render_parent_svg(d: ParentDiagram, opts: RenderOptions | None = None) -> str:
    opts = opts or RenderOptions()
    u = opts.unit
    n = d.nbar
    k_max, l_max = max(d.link.ks), max(d.link.ls)
    left, right = -k_max - 2, l_max + 2
    width = (right - left) * u
    height = (2 * n + 2) * u

    def px(v: Fraction | float) -> float:
        x = display_abscissa(v) if isinstance(v, Fraction) else v
        return (x - left) * u

    def py(h: float) -> float:
        return (2 * n + 1 - h) * u + 0.5 * u

    def line(cls: str, x0, y0, x1, y1, colour: str, w: float, extra: str = "") -> str:
        return (f'<line class="{cls}"{extra} x1="{_f(px(x0))}" y1="{_f(py(y0))}" x2="{_f(px(x1))}" '
                f'y2="{_f(py(y1))}" stroke="{colour}" stroke-width="{_f(w)}"/>')

    doc = _Doc(width, height, f"parent link: {d.link.text()}")
    for a in d.annuli:
        centre = -a.exponent if a.side == "XSide" else a.exponent
        doc.add(f'<rect class="annulus" data-side="{a.side}" data-exponent="{a.exponent}" '
                f'x="{_f(px(centre - 0.45))}" y="{_f(py(2 * n + 0.5))}" width="{_f(0.9 * u)}" '
                f'height="{_f(2 * n * u)}" fill="#e6e6e6"/>')

    for lab, (h, x0, x1) in d.red_h.items():
        doc.add(line("red-h", x0, h, x1, h, _colour(lab, n, opts), 2.0, f' data-label="{lab}"'))
    for lab, (x, lo, hi) in d.red_v.items():
        doc.add(line("red-v", x, lo, x, hi, _colour(lab, n, opts), 2.0, f' data-label="{lab}"'))

    def gap(c) -> str:
        # white halo along the over-strand around the crossing point
        dx = 0.15 if c.over.endswith(".h") else 0.0
        dy = 0.15 if c.over.endswith(".v") else 0.0
        cx = display_abscissa(c.x)
        return line("gap", cx - dx, c.y - dy, cx + dx, c.y + dy, "#ffffff", 6.0,
                    f' data-over="{c.over}" data-under="{c.under}" data-region="{c.region.value}"')

    red_under = [c for c in d.crossings if c.under.startswith("y")]
    blue_under = [c for c in d.crossings if c.under.startswith("x")]
    for c in red_under:
        doc.add(gap(c))
    for lab, (x, lo, hi) in d.blue_v.items():
        doc.add(line("blue-v", x, lo, x, hi, _colour(lab, n, opts), 2.0, f' data-label="{lab}"'))
    for c in blue_under:
        doc.add(gap(c))
    for lab, (h, x0, x1) in d.blue_h.items():
        doc.add(line("blue-h", x0, h, x1, h, _colour(lab, n, opts), 2.0, f' data-label="{lab}"'))
        doc.add(f'<text class="label" x="{_f(px(x0) - 0.1 * u)}" y="{_f(py(h) + 0.1 * u)}" '
                f'font-size="{_f(0.3 * u)}" text-anchor="end">{lab}</text>')

    vy = py(n + 0.5)
    for a, members in d.v_unknots.items():
        xs = [display_abscissa(d.blue_v[m][0]) for m in members]
        cx = (min(xs) + max(xs)) / 2
        rx = (max(xs) - min(xs)) / 2 + 0.3
        doc.add(f'<ellipse class="v-unknot" data-exponent="{a}" data-members="{len(members)}" '
                f'cx="{_f(px(cx))}" cy="{_f(vy)}" rx="{_f(rx * u)}" ry="{_f(0.2 * u)}" '
                f'fill="none" stroke="#2a9d3a" stroke-width="1.500000"/>')

    # schematic unknot U and trefoil T, not part of the crossing geometry
    doc.add(f'<circle class="u-unknot" cx="{_f(px(right - 0.8))}" cy="{_f(py(2 * n + 0.5))}" '
            f'r="{_f(0.3 * u)}" fill="none" stroke="#555555" stroke-width="1.500000"/>')
    doc.add(f'<text class="label" x="{_f(px(right - 0.8))}" y="{_f(py(2 * n + 0.5) + 0.1 * u)}" '
            f'font-size="{_f(0.3 * u)}" text-anchor="middle">U</text>')
    tx, ty = px(left + 0.8), py(2 * n + 0.5)
    r = 0.3 * u
    doc.add(f'<path class="trefoil" d="M {_f(tx)} {_f(ty - r)} C {_f(tx + 2 * r)} {_f(ty + r)} '
            f'{_f(tx - 2 * r)} {_f(ty + r)} {_f(tx)} {_f(ty - r)} Z" fill="none" stroke="#555555" '
            f'stroke-width="1.500000"/>')
    doc.add(f'<text class="label" x="{_f(tx)}" y="{_f(ty + 0.1 * u)}" font-size="{_f(0.3 * u)}" '
            f'text-anchor="middle">T</text>')
    return doc.text()


def gap_regions(svg: str) -> list[str]:
    """Region of every crossing gap in a rendered parent diagram, in document order."""
    out = []
    for part in svg.split('class="gap"')[1:]:
        i = part.index('data-region="') + len('data-region="')
        out.append(part[i:part.index('"', i)])
    return out

