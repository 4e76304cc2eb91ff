"""Classical lexicographic construction, kept as an independent oracle.

Every letter position of the link is ordered by its forward itinerary with
x < y.  Two modes produce the same order:

* ``naive`` expands the words into letters and compares letter by letter
  (compiled kernel, see ``_kernels``);
* ``rle`` compares the same itineraries run by run.

Nothing here is shared with the comparator in ``bunch``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property, cmp_to_key
from typing import NamedTuple

import numpy as np

from . import _kernels
from .bunch import TemplateEmbedding
from .errors import CapExceeded, MismatchedInput, TieDetected
from .word import X, Y, BaseLabel, ModularLink

DEFAULT_LETTER_CAP = 10**6


class Mode(str, Enum):
    NAIVE = "naive"
    RLE = "rle"


class LetterPosition(NamedTuple):
    """Letter ``offset`` (0-based) of run ``run`` of component ``component``.

    Runs alternate x, y starting with x, so even runs are x-runs.
    """

    component: int
    run: int
    offset: int


@dataclass(frozen=True)
class BranchOrder:
    link: ModularLink
    positions: tuple[LetterPosition, ...]

    @cached_property
    def rank(self) -> dict[LetterPosition, int]:
        return {p: r for r, p in enumerate(self.positions, 1)}

    def shift(self, p: LetterPosition) -> LetterPosition:
        return shift_position(self.link, p)

    @cached_property
    def shift_map(self) -> dict[LetterPosition, LetterPosition]:
        return {p: self.shift(p) for p in self.positions}


def _run_lengths(link: ModularLink, c: int) -> list[int]:
    w = link.words[c]
    out = []
    for k, l in zip(w.ks, w.ls):
        out += [k, l]
    return out


def shift_position(link: ModularLink, p: LetterPosition) -> LetterPosition:
    runs = _run_lengths(link, p.component)
    if p.offset + 1 < runs[p.run]:
        return LetterPosition(p.component, p.run, p.offset + 1)
    return LetterPosition(p.component, (p.run + 1) % len(runs), 0)


def all_positions(link: ModularLink) -> list[LetterPosition]:
    """Every letter position in word order, component by component."""
    out = []
    for c in range(len(link.words)):
        for r, e in enumerate(_run_lengths(link, c)):
            out.extend(LetterPosition(c, r, j) for j in range(e))
    return out


def position_label(link: ModularLink, p: LetterPosition) -> BaseLabel:
    g = link.offsets[p.component] + p.run // 2 + 1
    return BaseLabel(X if p.run % 2 == 0 else Y, g)


def leading_run(link: ModularLink, p: LetterPosition) -> int:
    """Letters left in the run that ``p`` sits in, ``p`` included."""
    return _run_lengths(link, p.component)[p.run] - p.offset


# -- naive mode ---------------------------------------------------------------


def _naive_order(link: ModularLink, cap: int, backend: str | None) -> list[int]:
    m = link.letter_length
    if m > cap:
        raise CapExceeded(f"{m} letters exceed the naive-mode cap of {cap}")
    letters, pcomp, poff, starts, lengths = [], [], [], [], []
    for c in range(len(link.words)):
        runs = _run_lengths(link, c)
        starts.append(len(letters))
        total = sum(runs)
        lengths.append(total)
        letters.append(np.repeat(np.arange(len(runs)) % 2, runs))
        pcomp.append(np.full(total, c))
        poff.append(np.arange(total))
    order, tie = _kernels.naive_sort(
        np.concatenate(letters),
        np.cumsum([0] + lengths[:-1]),
        lengths,
        np.concatenate(pcomp),
        np.concatenate(poff),
        backend=backend,
    )
    if tie >= 0:
        raise TieDetected(f"equal itineraries at sorted ranks {tie + 1} and {tie + 2}")
    return order.tolist()


# -- rle mode -----------------------------------------------------------------


def _rle_compare(link: ModularLink, p: LetterPosition, q: LetterPosition) -> int:
    ra, rb = _run_lengths(link, p.component), _run_lengths(link, q.component)
    letter = p.run % 2
    if letter != q.run % 2:
        return -1 if letter < q.run % 2 else 1
    ia, ib = p.run, q.run
    la, lb = ra[ia] - p.offset, rb[ib] - q.offset
    # after the (partial) leading run both streams are periodic in runs
    for _ in range(1 + len(ra) + len(rb)):
        if la != lb:
            if letter == 0:
                # the shorter x-run reaches its y first
                return -1 if la > lb else 1
            return -1 if la < lb else 1
        ia, ib = (ia + 1) % len(ra), (ib + 1) % len(rb)
        la, lb = ra[ia], rb[ib]
        letter ^= 1
    return 0


def _rle_order(link: ModularLink, positions: list[LetterPosition]) -> list[int]:
    idx = sorted(
        range(len(positions)),
        key=cmp_to_key(lambda i, j: _rle_compare(link, positions[i], positions[j])),
    )
    for a, b in zip(idx, idx[1:]):
        if _rle_compare(link, positions[a], positions[b]) == 0:
            raise TieDetected(f"equal itineraries at {positions[a]} and {positions[b]}")
    return idx


def branch_order(
    link: ModularLink,
    mode: Mode | str = Mode.NAIVE,
    cap: int = DEFAULT_LETTER_CAP,
    backend: str | None = None,
) -> BranchOrder:
    mode = Mode(mode)
    positions = all_positions(link) if mode is Mode.RLE or link.letter_length <= cap else []
    if mode is Mode.NAIVE:
        idx = _naive_order(link, cap, backend)
    else:
        idx = _rle_order(link, positions)
    return BranchOrder(link, tuple(positions[i] for i in idx))


def lorenz_permutation(link: ModularLink, order: BranchOrder | None = None) -> tuple[int, ...]:
    """``perm[r - 1]`` is the rank of the shift of the rank-``r`` position (1-based)."""
    order = order or branch_order(link, Mode.RLE if link.letter_length > DEFAULT_LETTER_CAP else Mode.NAIVE)
    rank = order.rank
    return tuple(rank[order.shift(p)] for p in order.positions)


def cycle_count(perm: tuple[int, ...]) -> int:
    seen = [False] * len(perm)
    cycles = 0
    for s in range(len(perm)):
        if not seen[s]:
            cycles += 1
            j = s
            while not seen[j]:
                seen[j] = True
                j = perm[j] - 1
    return cycles


# -- verification -------------------------------------------------------------


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    check: str | None = None
    index: int | None = None
    detail: str = ""

    def __str__(self) -> str:
        if self.passed:
            return "PASS"
        return f"FAIL at check ({self.check}), index {self.index}: {self.detail}"


def verify_against_bunch(
    link: ModularLink,
    emb: TemplateEmbedding,
    order: BranchOrder | None = None,
    mode: Mode | str | None = None,
    backend: str | None = None,
) -> VerificationReport:
    """Check an embedding against the lexicographic order.

    (a) labels of used slots, left to right, match the labels of the ordered
        letter positions; (b) interval indices match leading-run lengths and
        every arc starts in interval -k_i / +l_j; (c) bunch memberships are
        {x_i : k_i >= u} and {y_j : l_j >= v}, each a subsequence of its full
        bunch order.
    """
    if not link.same_words(emb.link):
        raise MismatchedInput("embedding was built from a different link")
    if order is None:
        if mode is None:
            mode = Mode.NAIVE if link.letter_length <= DEFAULT_LETTER_CAP else Mode.RLE
        order = branch_order(link, mode, backend=backend)

    used = emb.used
    if len(used) != len(order.positions):
        return VerificationReport(False, "a", None, f"{len(used)} used slots vs {len(order.positions)} letters")
    for t, (p, s) in enumerate(zip(order.positions, used)):
        lab = position_label(link, p)
        if lab != s.label:
            return VerificationReport(False, "a", t, f"slot label {s.label}, oracle label {lab}")

    for t, (p, s) in enumerate(zip(order.positions, used)):
        rem = leading_run(link, p)
        want = -rem if p.run % 2 == 0 else rem
        if s.interval != want:
            return VerificationReport(False, "b", t, f"slot interval {s.interval}, leading run {want}")
    for lab, turns in emb.arcs.items():
        want = -link.exponent(lab) if lab.kind == X else link.exponent(lab)
        if not turns or turns[0][0].interval != want:
            got = turns[0][0].interval if turns else None
            return VerificationReport(False, "b", None, f"{lab}-arc starts in {got}, expected {want}")

    for iv in emb.intervals():
        members = emb.bunches.get(iv, ())
        if iv < 0:
            full, exps, u = emb.orders.x_order, link.ks, -iv
        else:
            full, exps, u = emb.orders.y_order, link.ls, iv
        want = [(lab, exps[lab.index - 1] - u + 1) for lab in full if exps[lab.index - 1] >= u]
        if list(members) != want:
            return VerificationReport(False, "c", iv, f"bunch {iv} is {members}, expected {want}")
    return VerificationReport(True)
