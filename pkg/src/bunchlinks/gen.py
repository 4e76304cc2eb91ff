"""Seeded random links and exhaustive enumeration of small links."""

from __future__ import annotations

import itertools
from typing import Iterator

import numpy as np

from .errors import PeriodicWord
from .word import LorenzWord, ModularLink, link_from_words, word_from_exponents


def random_word(rng: np.random.Generator, max_period: int, max_exp: int, period: int | None = None) -> LorenzWord:
    """Uniform period in [1, max_period] and uniform exponents in [1, max_exp],
    resampled until primitive."""
    while True:
        n = period or int(rng.integers(1, max_period + 1))
        ks = rng.integers(1, max_exp + 1, size=n)
        ls = rng.integers(1, max_exp + 1, size=n)
        try:
            return word_from_exponents(ks, ls)
        except PeriodicWord:
            continue


def random_link(
    rng: np.random.Generator,
    max_period: int,
    max_exp: int,
    max_components: int = 3,
    max_nbar: int | None = None,
) -> ModularLink:
    """Rejection-sampled valid link: primitive words, distinct cyclic classes,
    trip number at most ``max_nbar``."""
    while True:
        c = int(rng.integers(1, max_components + 1))
        words = [random_word(rng, max_period, max_exp) for _ in range(c)]
        if max_nbar is not None and sum(w.period for w in words) > max_nbar:
            continue
        if len({(w.ks, w.ls) for w in words}) < c:
            continue
        return link_from_words(words)


def random_links(seed: int, count: int, **kw) -> list[ModularLink]:
    rng = np.random.default_rng(seed)
    return [random_link(rng, **kw) for _ in range(count)]


def primitive_words(period: int, max_exp: int) -> list[LorenzWord]:
    """All primitive cyclic classes with the given period, one canonical word each."""
    seen = {}
    exps = range(1, max_exp + 1)
    for pairs in itertools.product(itertools.product(exps, exps), repeat=period):
        ks, ls = zip(*pairs)
        try:
            w = word_from_exponents(ks, ls)
        except PeriodicWord:
            continue
        seen.setdefault((w.ks, w.ls), w)
    return [seen[k] for k in sorted(seen)]


def all_links(max_nbar: int, max_exp: int) -> Iterator[ModularLink]:
    """Every valid link (as a set of distinct words) with trip number <= max_nbar."""
    pool = [w for p in range(1, max_nbar + 1) for w in primitive_words(p, max_exp)]

    def extend(start: int, chosen: list[LorenzWord], budget: int) -> Iterator[ModularLink]:
        for i in range(start, len(pool)):
            w = pool[i]
            if w.period <= budget:
                nxt = chosen + [w]
                yield link_from_words(nxt)
                yield from extend(i + 1, nxt, budget - w.period)

    yield from extend(0, [], max_nbar)
