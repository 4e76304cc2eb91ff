"""Timing of the bunch comparator against the letter-level sort."""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import _kernels
from .bunch import full_bunch_orders
from .williams import Mode, branch_order
from .word import ModularLink, link_from_words, word_from_exponents

BENCH_COLUMNS = ("nbar", "scale", "items_ordered_bunch", "items_ordered_williams", "t_bunch", "t_williams")
KERNEL_COLUMNS = ("backend", "scale", "letters", "t_naive_sort")


def scale_link(link: ModularLink, scale: int) -> ModularLink:
    return link_from_words(
        word_from_exponents([k * scale for k in w.ks], [l * scale for l in w.ls]) for w in link.words
    )


def best_time(fn, repeats: int, warmup: int = 1) -> float:
    for _ in range(warmup):
        fn()
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


@dataclass(frozen=True)
class BenchRow:
    nbar: int
    scale: int
    items_ordered_bunch: int
    items_ordered_williams: int
    t_bunch: float
    t_williams: float

    def csv(self) -> str:
        return f"{self.nbar},{self.scale},{self.items_ordered_bunch},{self.items_ordered_williams},{self.t_bunch:.6e},{self.t_williams:.6e}"


def bench_orders(link: ModularLink, scales=(1, 10, 100), repeats: int = 20, backend: str | None = None) -> list[BenchRow]:
    rows = []
    for s in scales:
        sl = scale_link(link, s)
        tb = best_time(lambda: full_bunch_orders(sl), repeats)
        tw = best_time(lambda: branch_order(sl, Mode.NAIVE, backend=backend), max(3, repeats // 4))
        rows.append(BenchRow(sl.nbar, s, 2 * sl.nbar, sl.letter_length, tb, tw))
    return rows


def bench_kernels(link: ModularLink, scales=(1, 10, 100), repeats: int = 5) -> list[tuple[str, int, int, float]]:
    rows = []
    for backend in _kernels.available_backends():
        for s in scales:
            sl = scale_link(link, s)
            t = best_time(lambda: branch_order(sl, Mode.NAIVE, backend=backend), repeats)
            rows.append((backend, s, sl.letter_length, t))
    return rows
