"""Base orders and the classification key.

Two links share a class when their x- and y-base orders agree up to
reordering the words and cyclically relabelling each word.  Only exponent
ranks enter, never magnitudes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .word import X, Y, BaseLabel, ModularLink, least_rotation


@dataclass(frozen=True)
class BaseOrder:
    """Per component, base sets grouped by distinct exponent.

    x groups follow the link's distinct x-exponents in descending order, y
    groups its distinct y-exponents in ascending order; a group is empty when
    that component has no base with the exponent.
    """

    x_exponents: tuple[int, ...]
    y_exponents: tuple[int, ...]
    x_tuples: tuple[tuple[frozenset[BaseLabel], ...], ...]
    y_tuples: tuple[tuple[frozenset[BaseLabel], ...], ...]


def base_orders(link: ModularLink) -> BaseOrder:
    xe = tuple(sorted(set(link.ks), reverse=True))
    ye = tuple(sorted(set(link.ls)))
    xt, yt = [], []
    for c, w in enumerate(link.words):
        o = link.offsets[c]
        xt.append(tuple(
            frozenset(BaseLabel(X, o + i + 1) for i, k in enumerate(w.ks) if k == d) for d in xe
        ))
        yt.append(tuple(
            frozenset(BaseLabel(Y, o + i + 1) for i, l in enumerate(w.ls) if l == a) for a in ye
        ))
    return BaseOrder(xe, ye, tuple(xt), tuple(yt))


def rank_sequences(link: ModularLink) -> list[tuple[tuple[int, int], ...]]:
    """Per component, the canonically rotated sequence of (x-rank, y-rank) pairs.

    x-rank 0 is the largest x-exponent of the link, y-rank 0 the smallest
    y-exponent, matching the tuple order of ``BaseOrder``.
    """
    xr = {d: r for r, d in enumerate(sorted(set(link.ks), reverse=True))}
    yr = {a: r for r, a in enumerate(sorted(set(link.ls)))}
    out = []
    for w in link.words:
        seq = [(xr[k], yr[l]) for k, l in zip(w.ks, w.ls)]
        s = least_rotation(seq)
        out.append(tuple(seq[s:] + seq[:s]))
    return out


def class_key(link: ModularLink) -> bytes:
    xr = len(set(link.ks))
    yr = len(set(link.ls))
    comps = sorted(rank_sequences(link))
    body = ";".join(",".join(f"{a}.{b}" for a, b in seq) for seq in comps)
    return f"k{xr}l{yr}|{body}".encode("ascii")


def same_class(a: ModularLink, b: ModularLink) -> bool:
    return class_key(a) == class_key(b)


def partition(links: Sequence[ModularLink]) -> list[list[int]]:
    """Indices of ``links`` grouped by class, in order of first appearance."""
    groups: dict[bytes, list[int]] = {}
    for i, link in enumerate(links):
        groups.setdefault(class_key(link), []).append(i)
    return list(groups.values())


def _sets(tuples: Iterable[tuple[frozenset[BaseLabel], ...]]) -> list:
    return [[sorted((str(b) for b in s), key=lambda t: int(t[1:])) for s in tup] for tup in tuples]


def base_orders_to_dict(bo: BaseOrder) -> dict:
    return {
        "x_exponents": list(bo.x_exponents),
        "y_exponents": list(bo.y_exponents),
        "x": _sets(bo.x_tuples),
        "y": _sets(bo.y_tuples),
    }


def base_orders_from_dict(d: dict) -> BaseOrder:
    def back(rows):
        return tuple(tuple(frozenset(BaseLabel.parse(s) for s in group) for group in row) for row in rows)

    return BaseOrder(tuple(d["x_exponents"]), tuple(d["y_exponents"]), back(d["x"]), back(d["y"]))
