"""Parent-link diagram, exact crossing counts and the Dehn-filling recipe.

Layout (all exact):

* heights: blue ``x_{sigma(s)}`` at ``s`` for s = 1..nbar, red ``y_{tau(t)}``
  at ``2*nbar + 1 - t``;
* blue horizontal of x_i runs from ``A_i`` to ``B_i``, then its vertical at
  ``B_i`` climbs to the red height of y_i; red horizontal of y_i runs back from
  ``B_i`` to ``U_i = A_{i+1}`` where its vertical drops to x_{i+1};
* ``B_i = l_i + r/(g+1)`` where r ranks the group {j : l_j = l_i} (size g) by
  ascending red height of y_j; ``A_i = -(k_i + r/(g+1))`` where r ranks
  {j : k_j = k_i} by ascending red height of y_{j-1}.

Red is under blue everywhere, and a blue vertical is under a blue horizontal.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from . import _kernels
from .bunch import FullBunchOrders, full_bunch_orders, orders_from_dict, orders_to_dict
from .errors import LayoutViolation
from .word import X, BaseLabel, ModularLink, parse_link, xl, yl


class Region(str, Enum):
    TOP_LEFT = "TopLeft"
    BOTTOM_LEFT = "BottomLeft"
    BOTTOM_RIGHT = "BottomRight"
    TOP_RIGHT = "TopRight"


REGIONS = (Region.TOP_LEFT, Region.BOTTOM_LEFT, Region.BOTTOM_RIGHT, Region.TOP_RIGHT)


@dataclass(frozen=True, order=True)
class Annulus:
    side: str  # "XSide" | "YSide"
    exponent: int


@dataclass(frozen=True)
class Segment:
    name: str
    colour: str
    label: BaseLabel
    vertical: bool
    x0: Fraction
    y0: Fraction
    x1: Fraction
    y1: Fraction


@dataclass(frozen=True, order=True)
class Crossing:
    region: Region
    x: Fraction
    y: int
    over: str
    under: str


@dataclass(frozen=True)
class ParentDiagram:
    link: ModularLink
    orders: FullBunchOrders
    blue_h: dict[BaseLabel, tuple[int, Fraction, Fraction]]
    red_h: dict[BaseLabel, tuple[int, Fraction, Fraction]]
    blue_v: dict[BaseLabel, tuple[Fraction, int, int]]
    red_v: dict[BaseLabel, tuple[Fraction, int, int]]
    crossings: tuple[Crossing, ...]
    v_unknots: dict[int, tuple[BaseLabel, ...]]
    annuli: tuple[Annulus, ...]

    @property
    def nbar(self) -> int:
        return self.link.nbar

    def segments(self) -> list[Segment]:
        out = []
        for lab, (h, a, b) in self.blue_h.items():
            out.append(Segment(f"{lab}.h", "blue", lab, False, a, Fraction(h), b, Fraction(h)))
        for lab, (x, lo, hi) in self.blue_v.items():
            out.append(Segment(f"{lab}.v", "blue", lab, True, x, Fraction(lo), x, Fraction(hi)))
        for lab, (h, u, b) in self.red_h.items():
            out.append(Segment(f"{lab}.h", "red", lab, False, u, Fraction(h), b, Fraction(h)))
        for lab, (x, lo, hi) in self.red_v.items():
            out.append(Segment(f"{lab}.v", "red", lab, True, x, Fraction(lo), x, Fraction(hi)))
        return out


@dataclass(frozen=True)
class CrossingReport:
    top_left: int
    bottom_left: int
    bottom_right: int
    top_right: int

    @property
    def total(self) -> int:
        return self.top_left + self.bottom_left + self.bottom_right + self.top_right

    @property
    def red_red(self) -> int:
        return self.top_left

    def as_dict(self) -> dict:
        return {
            "TopLeft": self.top_left,
            "BottomLeft": self.bottom_left,
            "BottomRight": self.bottom_right,
            "TopRight": self.top_right,
            "total": self.total,
        }


def region_of(x: Fraction, y: int | Fraction, nbar: int) -> Region:
    top = y > nbar
    if x < 0:
        return Region.TOP_LEFT if top else Region.BOTTOM_LEFT
    return Region.TOP_RIGHT if top else Region.BOTTOM_RIGHT


def _stagger(groups: dict[int, list[int]], order_key) -> dict[int, Fraction]:
    out = {}
    for e, members in groups.items():
        g = len(members)
        for r, i in enumerate(sorted(members, key=order_key), 1):
            out[i] = e + Fraction(r, g + 1)
    return out


def build_parent_diagram(link: ModularLink) -> ParentDiagram:
    n = link.nbar
    orders = full_bunch_orders(link)
    hx = [0] * n
    hy = [0] * n
    for s, lab in enumerate(orders.x_order, 1):
        hx[lab.index - 1] = s
    for t, lab in enumerate(orders.y_order, 1):
        hy[lab.index - 1] = 2 * n + 1 - t
    succ, pred = link.succ, link.pred

    by_l: dict[int, list[int]] = {}
    by_k: dict[int, list[int]] = {}
    for i in range(n):
        by_l.setdefault(link.ls[i], []).append(i)
        by_k.setdefault(link.ks[i], []).append(i)
    B = _stagger(by_l, lambda i: hy[i])
    A = {i: -v for i, v in _stagger(by_k, lambda i: hy[pred[i]]).items()}
    U = {i: A[succ[i]] for i in range(n)}

    blue_h = {xl(i + 1): (hx[i], A[i], B[i]) for i in range(n)}
    red_h = {yl(i + 1): (hy[i], U[i], B[i]) for i in range(n)}
    blue_v = {xl(i + 1): (B[i], hx[i], hy[i]) for i in range(n)}
    red_v = {yl(i + 1): (U[i], hx[succ[i]], hy[i]) for i in range(n)}

    crossings = []
    for i in range(n):
        for j in range(n):
            # red vertical of y_i under blue horizontal of x_j
            if hx[j] > hx[succ[i]] and A[j] < U[i]:
                crossings.append(Crossing(region_of(U[i], hx[j], n), U[i], hx[j], f"x{j + 1}.h", f"y{i + 1}.v"))
            # blue vertical of x_i over red horizontal of y_j
            if hy[j] < hy[i] and B[j] > B[i]:
                crossings.append(Crossing(region_of(B[i], hy[j], n), B[i], hy[j], f"x{i + 1}.v", f"y{j + 1}.h"))
            # blue vertical of x_i under blue horizontal of x_j
            if hx[j] > hx[i] and B[j] > B[i]:
                crossings.append(Crossing(region_of(B[i], hx[j], n), B[i], hx[j], f"x{j + 1}.h", f"x{i + 1}.v"))
            if hy[j] < hy[i] and U[j] < U[i]:
                raise LayoutViolation(f"red vertical of y{i + 1} meets red horizontal of y{j + 1}")

    v_unknots = {a: tuple(xl(i + 1) for i in sorted(by_l[a])) for a in sorted(by_l)}
    annuli = tuple(Annulus("XSide", d) for d in sorted(by_k)) + tuple(
        Annulus("YSide", a) for a in sorted(by_l)
    )
    return ParentDiagram(
        link, orders, blue_h, red_h, blue_v, red_v, tuple(sorted(crossings)), v_unknots, annuli
    )


def _ranks(values: list[Fraction]) -> dict[Fraction, int]:
    return {v: r for r, v in enumerate(sorted(set(values)))}


def count_crossings(d: ParentDiagram, backend: str | None = None) -> CrossingReport:
    """Count transversal crossings from the diagram's coordinates.

    Endpoint incidences are not crossings.  Raises LayoutViolation if a red
    vertical meets a red horizontal.
    """
    n = d.nbar
    xs = [xl(i + 1) for i in range(n)]
    ys = [yl(i + 1) for i in range(n)]
    absc = [d.blue_h[x][1] for x in xs] + [d.blue_h[x][2] for x in xs]
    absc += [d.red_v[y][0] for y in ys] + [d.red_h[y][1] for y in ys] + [d.red_h[y][2] for y in ys]
    rank = _ranks(absc)
    hx = np.array([d.blue_h[x][0] for x in xs])
    hy = np.array([d.red_h[y][0] for y in ys])
    a = np.array([rank[d.blue_h[x][1]] for x in xs])
    b = np.array([rank[d.blue_h[x][2]] for x in xs])
    bv = np.array([rank[d.blue_v[x][0]] for x in xs])
    bvlo = np.array([d.blue_v[x][1] for x in xs])
    bvhi = np.array([d.blue_v[x][2] for x in xs])
    ru = np.array([rank[d.red_h[y][1]] for y in ys])
    rb = np.array([rank[d.red_h[y][2]] for y in ys])
    rv = np.array([rank[d.red_v[y][0]] for y in ys])
    rvlo = np.array([d.red_v[y][1] for y in ys])
    rvhi = np.array([d.red_v[y][2] for y in ys])
    counts = _kernels.rule_counts(hx, a, b, hy, ru, rb, bv, bvlo, bvhi, rv, rvlo, rvhi, backend=backend)
    bl, tr, br, rr = (int(c) for c in counts)
    if rr:
        raise LayoutViolation(f"{rr} red-red crossings")
    return CrossingReport(top_left=rr, bottom_left=bl, bottom_right=br, top_right=tr)


def trefoil_crossings(nbar: int) -> int:
    return 4 * nbar + 3


def v_unknot_crossings(d: ParentDiagram) -> int:
    return sum(2 * len(members) for members in d.v_unknots.values())


def total_iota(link: ModularLink, d: ParentDiagram | None = None) -> int:
    d = d or build_parent_diagram(link)
    return count_crossings(d).total + trefoil_crossings(link.nbar) + v_unknot_crossings(d)


# -- Dehn filling recipe --------------------------------------------------------

TRIVIAL = (1, 0)
MINUS_ONE = (-1, 1)


@dataclass(frozen=True)
class AnnularFilling:
    annulus: Annulus
    numerator: int
    denominator: int


@dataclass(frozen=True)
class DehnRecipe:
    annular: tuple[AnnularFilling, ...]
    v_fillings: dict[int, tuple[int, int]]
    u_filling: tuple[int, int]
    trefoil_filling: str  # "keep" (modular) | "trivial" (Lorenz)


def dehn_recipe(link: ModularLink, lorenz: bool = False) -> DehnRecipe:
    annular = []
    for side, exps in (("XSide", link.ks), ("YSide", link.ls)):
        prev = 0
        for d in sorted(set(exps)):
            annular.append(AnnularFilling(Annulus(side, d), 1, d - prev))
            prev = d
    counts = Counter(link.ls)
    v = {a: (MINUS_ONE if counts[a] >= 2 else TRIVIAL) for a in sorted(counts)}
    return DehnRecipe(tuple(annular), v, TRIVIAL, "trivial" if lorenz else "keep")


def _slope_text(s: tuple[int, int]) -> str:
    return "trivial" if s == TRIVIAL else f"{s[0]}/{s[1]}"


def recipe_lines(r: DehnRecipe) -> list[str]:
    out = []
    for f in r.annular:
        sym = "A^x" if f.annulus.side == "XSide" else "A^y"
        out.append(f"{sym}_{f.annulus.exponent}: +{f.numerator}/{f.denominator} annular filling")
    for a, s in r.v_fillings.items():
        out.append(f"V_{a}: {_slope_text(s)}")
    out.append(f"U: {_slope_text(r.u_filling)}")
    out.append(f"T: {r.trefoil_filling}")
    return out


def recipe_to_dict(r: DehnRecipe) -> dict:
    return {
        "annular": [
            {"side": f.annulus.side, "exponent": f.annulus.exponent, "slope": [f.numerator, f.denominator]}
            for f in r.annular
        ],
        "v_fillings": {str(a): list(s) for a, s in r.v_fillings.items()},
        "u_filling": list(r.u_filling),
        "trefoil_filling": r.trefoil_filling,
    }


def recipe_from_dict(d: dict) -> DehnRecipe:
    return DehnRecipe(
        tuple(AnnularFilling(Annulus(e["side"], e["exponent"]), *e["slope"]) for e in d["annular"]),
        {int(a): tuple(s) for a, s in d["v_fillings"].items()},
        tuple(d["u_filling"]),
        d["trefoil_filling"],
    )


# -- isomorphism and serialisation ------------------------------------------------


def diagram_signature(d: ParentDiagram) -> tuple:
    """Label-free description: labels are replaced by their heights and
    abscissas by their rank among all abscissas.  Equal signatures mean the
    diagrams agree up to renaming labels and moving abscissas monotonically."""
    absc = []
    for h, a, b in d.blue_h.values():
        absc += [a, b]
    for h, u, b in d.red_h.values():
        absc += [u, b]
    rank = _ranks(absc)
    height = {lab: v[0] for lab, v in d.blue_h.items()}
    height.update({lab: v[0] for lab, v in d.red_h.items()})

    def seg_key(name: str) -> tuple:
        lab, kind = name.split(".")
        return (lab[0], kind, height[BaseLabel.parse(lab)])

    blue = sorted((h, rank[a], rank[b], d.blue_v[lab][2]) for lab, (h, a, b) in d.blue_h.items())
    red = sorted((h, rank[u], rank[b], d.red_v[lab][1]) for lab, (h, u, b) in d.red_h.items())
    cross = sorted((c.region.value, seg_key(c.over), seg_key(c.under)) for c in d.crossings)
    vs = sorted(tuple(sorted(height[x] for x in m)) for m in d.v_unknots.values())
    return (d.nbar, tuple(blue), tuple(red), tuple(cross), tuple(vs))


def isomorphic(d1: ParentDiagram, d2: ParentDiagram) -> bool:
    return diagram_signature(d1) == diagram_signature(d2)


def _q(v: Fraction) -> list[int]:
    return [v.numerator, v.denominator]


def _fq(v: list[int]) -> Fraction:
    return Fraction(int(v[0]), int(v[1]))


def diagram_to_dict(d: ParentDiagram) -> dict:
    return {
        "link": d.link.text(),
        "nbar": d.nbar,
        "orders": orders_to_dict(d.orders),
        "blue_h": {str(k): [h, _q(a), _q(b)] for k, (h, a, b) in d.blue_h.items()},
        "red_h": {str(k): [h, _q(u), _q(b)] for k, (h, u, b) in d.red_h.items()},
        "blue_v": {str(k): [_q(x), lo, hi] for k, (x, lo, hi) in d.blue_v.items()},
        "red_v": {str(k): [_q(x), lo, hi] for k, (x, lo, hi) in d.red_v.items()},
        "crossings": [
            {"over": c.over, "under": c.under, "region": c.region.value, "point": [_q(c.x), c.y]}
            for c in d.crossings
        ],
        "v_unknots": {str(a): [str(x) for x in m] for a, m in d.v_unknots.items()},
        "annuli": [[a.side, a.exponent] for a in d.annuli],
    }


def diagram_from_dict(d: dict) -> ParentDiagram:
    lab = BaseLabel.parse
    return ParentDiagram(
        link=parse_link(d["link"]),
        orders=orders_from_dict(d["orders"]),
        blue_h={lab(k): (int(h), _fq(a), _fq(b)) for k, (h, a, b) in d["blue_h"].items()},
        red_h={lab(k): (int(h), _fq(u), _fq(b)) for k, (h, u, b) in d["red_h"].items()},
        blue_v={lab(k): (_fq(x), int(lo), int(hi)) for k, (x, lo, hi) in d["blue_v"].items()},
        red_v={lab(k): (_fq(x), int(lo), int(hi)) for k, (x, lo, hi) in d["red_v"].items()},
        crossings=tuple(
            Crossing(Region(c["region"]), _fq(c["point"][0]), int(c["point"][1]), c["over"], c["under"])
            for c in d["crossings"]
        ),
        v_unknots={int(a): tuple(lab(x) for x in m) for a, m in d["v_unknots"].items()},
        annuli=tuple(Annulus(s, int(e)) for s, e in d["annuli"]),
    )


def report_to_dict(r: CrossingReport) -> dict:
    return r.as_dict()


def is_blue(label: BaseLabel) -> bool:
    return label.kind == X
