"""Full-bunch orders and the split-template embedding.

Only the 2*nbar labelled bases are ever ordered; exponents stay in run form.
Branch-line intervals are signed integers: ``-u`` for the u-th x-interval
counted leftwards from zero, ``+v`` for the v-th y-interval.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from functools import cmp_to_key

from .errors import IndistinguishableBases, UnknownLabel
from .word import X, Y, BaseLabel, ModularLink, parse_link, xl, yl


class Order(IntEnum):
    LESS = -1
    GREATER = 1


@dataclass(frozen=True)
class FullBunchOrders:
    x_order: tuple[BaseLabel, ...]
    y_order: tuple[BaseLabel, ...]

    def rank(self, label: BaseLabel) -> int:
        """1-based position of ``label`` within its full bunch."""
        seq = self.x_order if label.kind == X else self.y_order
        return seq.index(label) + 1


@dataclass(frozen=True, order=True)
class Slot:
    interval: int
    rank: int
    label: BaseLabel

    def as_list(self) -> list:
        return [self.interval, self.rank, str(self.label)]


Turn = tuple[Slot, Slot]


@dataclass(frozen=True)
class TemplateEmbedding:
    link: ModularLink
    orders: FullBunchOrders
    k_max: int
    l_max: int
    slots: tuple[Slot, ...]
    used: tuple[Slot, ...]
    arcs: dict[BaseLabel, tuple[Turn, ...]]
    bunches: dict[int, tuple[tuple[BaseLabel, int], ...]]

    def intervals(self) -> list[int]:
        return list(range(-self.k_max, 0)) + list(range(1, self.l_max + 1))


def compare_bases(link: ModularLink, a: BaseLabel, b: BaseLabel) -> Order:
    """Left-to-right order of two same-kind bases within their full bunch.

    y-exponents in the streams are compared ascending, x-exponents descending;
    the first difference decides.
    """
    if a.kind != b.kind:
        raise UnknownLabel(f"{a} and {b} are of different kinds")
    ga, gb = link.check(a), link.check(b)
    if ga == gb:
        raise IndistinguishableBases(f"{a} compared with itself")
    na = link.words[link.comp[ga]].period
    nb = link.words[link.comp[gb]].period
    cap = 2 * (na + nb)
    succ, ks, ls = link.succ, link.ks, link.ls
    # walk both streams in lockstep instead of re-walking from the start
    if a.kind == X:
        ea, eb = ls[ga], ls[gb]
        ya = True
    else:
        ga, gb = succ[ga], succ[gb]
        ea, eb = ks[ga], ks[gb]
        ya = False
    for _ in range(cap):
        if ea != eb:
            if ya:
                return Order.LESS if ea < eb else Order.GREATER
            return Order.LESS if ea > eb else Order.GREATER
        if ya:
            ga, gb = succ[ga], succ[gb]
            ea, eb = ks[ga], ks[gb]
        else:
            ea, eb = ls[ga], ls[gb]
        ya = not ya
    raise IndistinguishableBases(f"{a} and {b} agree on {cap} run entries")


def full_bunch_orders(link: ModularLink) -> FullBunchOrders:
    def sort(kind: str) -> tuple[BaseLabel, ...]:
        return tuple(
            sorted(link.labels(kind), key=cmp_to_key(lambda a, b: int(compare_bases(link, a, b))))
        )

    return FullBunchOrders(sort(X), sort(Y))


def bunch_size_ranges(link: ModularLink) -> list[tuple[int, int, int]]:
    """Piecewise-constant bunch sizes as ``(first, last, size)`` signed interval ranges.

    Between consecutive distinct exponents d_{i-1} < d_i there are
    d_i - d_{i-1} consecutive bunches of equal size.
    """
    out = []
    for sign, exps in ((-1, link.ks), (1, link.ls)):
        prev, remaining = 0, len(exps)
        for d in sorted(set(exps)):
            out.append((sign * (prev + 1), sign * d, remaining))
            remaining -= exps.count(d)
            prev = d
    return out


def bunch_sizes(link: ModularLink) -> dict[int, int]:
    sizes = {}
    for first, last, size in bunch_size_ranges(link):
        step = 1 if last > 0 else -1
        for i in range(first, last + step, step):
            sizes[i] = size
    return dict(sorted(sizes.items()))


def embed(link: ModularLink) -> TemplateEmbedding:
    orders = full_bunch_orders(link)
    k_max, l_max = max(link.ks), max(link.ls)
    ks, ls = link.ks, link.ls

    slots = []
    used = []
    bunches: dict[int, tuple[tuple[BaseLabel, int], ...]] = {}
    for u in range(k_max, 0, -1):
        members = []
        for r, lab in enumerate(orders.x_order, 1):
            s = Slot(-u, r, lab)
            slots.append(s)
            k = ks[lab.index - 1]
            if k >= u:
                used.append(s)
                members.append((lab, k - u + 1))
        bunches[-u] = tuple(members)
    for v in range(1, l_max + 1):
        members = []
        for r, lab in enumerate(orders.y_order, 1):
            s = Slot(v, r, lab)
            slots.append(s)
            l = ls[lab.index - 1]
            if l >= v:
                used.append(s)
                members.append((lab, l - v + 1))
        bunches[v] = tuple(members)

    xr = {lab: r for r, lab in enumerate(orders.x_order, 1)}
    yr = {lab: r for r, lab in enumerate(orders.y_order, 1)}
    arcs: dict[BaseLabel, tuple[Turn, ...]] = {}
    for g in range(link.nbar):
        xi, yi, xn = xl(g + 1), yl(g + 1), xl(link.succ[g] + 1)
        k, l = ks[g], ls[g]
        path = [Slot(-u, xr[xi], xi) for u in range(k, 0, -1)] + [Slot(l, yr[yi], yi)]
        arcs[xi] = tuple(zip(path, path[1:]))
        path = [Slot(v, yr[yi], yi) for v in range(l, 0, -1)]
        path.append(Slot(-ks[link.succ[g]], xr[xn], xn))
        arcs[yi] = tuple(zip(path, path[1:]))

    return TemplateEmbedding(
        link, orders, k_max, l_max, tuple(slots), tuple(used),
        dict(sorted(arcs.items())), bunches,
    )


def orders_to_dict(o: FullBunchOrders) -> dict:
    return {"x_order": [str(b) for b in o.x_order], "y_order": [str(b) for b in o.y_order]}


def orders_from_dict(d: dict) -> FullBunchOrders:
    return FullBunchOrders(
        tuple(BaseLabel.parse(s) for s in d["x_order"]),
        tuple(BaseLabel.parse(s) for s in d["y_order"]),
    )


def embedding_to_dict(emb: TemplateEmbedding) -> dict:
    used = set(emb.used)
    return {
        "link": emb.link.text(),
        "orders": orders_to_dict(emb.orders),
        "k_max": emb.k_max,
        "l_max": emb.l_max,
        "slots": [s.as_list() + [s in used] for s in emb.slots],
        "used": [s.as_list() for s in emb.used],
        "arcs": {
            str(lab): [[a.as_list(), b.as_list()] for a, b in turns]
            for lab, turns in emb.arcs.items()
        },
        "bunches": {
            str(i): [[str(lab), rem] for lab, rem in members]
            for i, members in emb.bunches.items()
        },
    }


def _slot(v: list) -> Slot:
    return Slot(int(v[0]), int(v[1]), BaseLabel.parse(v[2]))


def embedding_from_dict(d: dict) -> TemplateEmbedding:
    return TemplateEmbedding(
        link=parse_link(d["link"]),
        orders=orders_from_dict(d["orders"]),
        k_max=int(d["k_max"]),
        l_max=int(d["l_max"]),
        slots=tuple(_slot(s) for s in d["slots"]),
        used=tuple(_slot(s) for s in d["used"]),
        arcs={
            BaseLabel.parse(k): tuple((_slot(a), _slot(b)) for a, b in v)
            for k, v in d["arcs"].items()
        },
        bunches={
            int(k): tuple((BaseLabel.parse(lab), int(rem)) for lab, rem in v)
            for k, v in d["bunches"].items()
        },
    )
