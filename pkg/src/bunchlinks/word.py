"""Code words, base labels and multi-component links.

A Lorenz word is stored in run-length form ``x^k1 y^l1 ... x^kn y^ln`` and is
never expanded into letters here.  Words are normalised to a canonical
rotation: the first x-exponent is maximal and, among the rotations with that
property, the interleaved exponent tuple ``(k1, l1, ..., kn, ln)`` is
lexicographically least.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DuplicateCyclicClass,
    EmptyWord,
    ExponentOverflow,
    PeriodicWord,
    SingleLetterWord,
    UnknownLabel,
    WordSyntaxError,
)

MAX_EXPONENT = 2**63 - 1

X = "x"
Y = "y"


@dataclass(frozen=True)
class Run:
    letter: str
    exponent: int


@dataclass(frozen=True, order=True)
class BaseLabel:
    """A globally labelled base ``x_i`` or ``y_i`` (1-based index)."""

    kind: str
    index: int

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"

    @classmethod
    def parse(cls, text: str) -> BaseLabel:
        text = text.strip()
        if len(text) < 2 or text[0] not in (X, Y) or not text[1:].isdigit():
            raise UnknownLabel(repr(text))
        return cls(text[0], int(text[1:]))


def xl(i: int) -> BaseLabel:
    return BaseLabel(X, i)


def yl(i: int) -> BaseLabel:
    return BaseLabel(Y, i)


@dataclass(frozen=True)
class LorenzWord:
    """A primitive, canonically rotated positive word.

    ``shift`` records how the canonical rotation relates to the rotation the
    word was typed in: canonical x-run ``i`` (0-based) is typed x-run
    ``(i + shift) % period``.
    """

    ks: tuple[int, ...]
    ls: tuple[int, ...]
    component_id: int = 0
    shift: int = field(default=0, compare=False)
    tie_break: bool = field(default=False, compare=False)

    @property
    def period(self) -> int:
        return len(self.ks)

    @property
    def runs(self) -> tuple[Run, ...]:
        out = []
        for k, l in zip(self.ks, self.ls):
            out.append(Run(X, k))
            out.append(Run(Y, l))
        return tuple(out)

    @property
    def letter_length(self) -> int:
        return sum(self.ks) + sum(self.ls)

    @property
    def canonicalized(self) -> bool:
        return self.shift != 0 or self.tie_break

    def text(self) -> str:
        return render_word(self)


def render_word(w: LorenzWord) -> str:
    parts = []
    for run in w.runs:
        parts.append(run.letter if run.exponent == 1 else f"{run.letter}^{run.exponent}")
    return "".join(parts)


# -- sequence helpers -------------------------------------------------------


def least_rotation(seq: Sequence) -> int:
    """Booth's algorithm: start index of the lexicographically least rotation."""
    s = list(seq) * 2
    f = [-1] * len(s)
    k = 0
    for j in range(1, len(s)):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            # here i == -1
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k


def smallest_period(seq: Sequence) -> int:
    """Smallest p dividing len(seq) with seq a power of seq[:p]."""
    n = len(seq)
    fail = [0] * n
    j = 0
    for i in range(1, n):
        while j and seq[i] != seq[j]:
            j = fail[j - 1]
        if seq[i] == seq[j]:
            j += 1
        fail[i] = j
    p = n - fail[-1] if n else 0
    return p if p and n % p == 0 else n


def canonical_shift(ks: Sequence[int], ls: Sequence[int]) -> tuple[int, bool]:
    """Rotation offset (in x-runs) of the canonical form, and whether ties occurred.

    Rotations starting at a maximal x-exponent split the word into blocks that
    each begin with that maximum.  Comparing rotations flat is the same as
    comparing their block sequences, where a block that ends early compares
    greater (the next block opens with the maximum, which beats any
    non-maximal x-exponent).  Ranking the blocks and running Booth's algorithm
    on the rank sequence gives the answer in O(n log n).
    """
    n = len(ks)
    top = max(ks)
    starts = [i for i in range(n) if ks[i] == top]
    if len(starts) == 1:
        return starts[0], False
    inf = float("inf")
    keys = []
    for b, s in enumerate(starts):
        e = starts[(b + 1) % len(starts)]
        span = (e - s) % n or n
        flat = []
        for t in range(span):
            flat.append(ks[(s + t) % n])
            flat.append(ls[(s + t) % n])
        flat.append(inf)
        keys.append(tuple(flat))
    order = {key: r for r, key in enumerate(sorted(set(keys)))}
    best = least_rotation([order[key] for key in keys])
    return starts[best], True


# -- parsing ----------------------------------------------------------------


def _byte_offset(text: str, i: int) -> int:
    return len(text[:i].encode("utf-8"))


def _scan(text: str) -> list[list]:
    runs: list[list] = []
    i, n = 0, len(text)

    def skip_ws(j: int) -> int:
        while j < n and text[j].isspace():
            j += 1
        return j

    i = skip_ws(i)
    while i < n:
        ch = text[i]
        if ch not in (X, Y):
            raise WordSyntaxError(f"unexpected {ch!r}", _byte_offset(text, i))
        i = skip_ws(i + 1)
        exp = 1
        if i < n and text[i] == "^":
            i = skip_ws(i + 1)
            start = i
            while i < n and text[i].isdigit():
                i += 1
            if start == i:
                raise WordSyntaxError("expected exponent", _byte_offset(text, start))
            exp = int(text[start:i])
            if exp < 1:
                raise WordSyntaxError("exponent must be >= 1", _byte_offset(text, start))
            if exp > MAX_EXPONENT:
                raise ExponentOverflow(f"{exp} exceeds 2^63-1")
            i = skip_ws(i)
        if runs and runs[-1][0] == ch:
            runs[-1][1] += exp
        else:
            runs.append([ch, exp])
    return runs


def _check_exp(e: int) -> int:
    if e > MAX_EXPONENT:
        raise ExponentOverflow(f"merged exponent {e} exceeds 2^63-1")
    return e


def word_from_exponents(
    ks: Sequence[int], ls: Sequence[int], component_id: int = 0
) -> LorenzWord:
    """Validate and canonicalise an alternating exponent sequence."""
    ks, ls = tuple(int(k) for k in ks), tuple(int(l) for l in ls)
    if not ks:
        raise EmptyWord("no runs")
    if len(ks) != len(ls):
        raise ValueError("ks and ls must have equal length")
    for e in ks + ls:
        if e < 1:
            raise ValueError("exponents must be positive")
        _check_exp(e)
    pairs = list(zip(ks, ls))
    if smallest_period(pairs) != len(pairs):
        raise PeriodicWord("word is a proper power")
    s, tie = canonical_shift(ks, ls)
    return LorenzWord(ks[s:] + ks[:s], ls[s:] + ls[:s], component_id, s, tie)


def parse_word(text: str) -> LorenzWord:
    runs = _scan(text)
    if not runs:
        raise EmptyWord("empty word")
    if len(runs) > 1 and runs[0][0] == runs[-1][0]:
        runs[0][1] += runs.pop()[1]
    for r in runs:
        _check_exp(r[1])
    if len(runs) == 1:
        raise SingleLetterWord(f"word uses only {runs[0][0]}")
    if runs[0][0] == Y:
        runs.append(runs.pop(0))
    ks = [r[1] for r in runs[0::2]]
    ls = [r[1] for r in runs[1::2]]
    return word_from_exponents(ks, ls)


# -- links ------------------------------------------------------------------


@dataclass(frozen=True)
class ModularLink:
    """Words in component order with global base labels x_1..x_nbar, y_1..y_nbar."""

    words: tuple[LorenzWord, ...]

    def __post_init__(self) -> None:
        if not self.words:
            raise EmptyWord("a link needs at least one word")
        seen: dict[tuple, int] = {}
        for c, w in enumerate(self.words):
            key = (w.ks, w.ls)
            if key in seen:
                raise DuplicateCyclicClass(f"components {seen[key]} and {c} are the same word")
            seen[key] = c

    @cached_property
    def offsets(self) -> tuple[int, ...]:
        out, acc = [], 0
        for w in self.words:
            out.append(acc)
            acc += w.period
        return tuple(out)

    @property
    def nbar(self) -> int:
        return sum(w.period for w in self.words)

    @cached_property
    def ks(self) -> tuple[int, ...]:
        """x-exponents indexed by global label index - 1."""
        return tuple(k for w in self.words for k in w.ks)

    @cached_property
    def ls(self) -> tuple[int, ...]:
        return tuple(l for w in self.words for l in w.ls)

    @cached_property
    def comp(self) -> tuple[int, ...]:
        """Component id for each global index (0-based)."""
        return tuple(c for c, w in enumerate(self.words) for _ in range(w.period))

    @cached_property
    def succ(self) -> tuple[int, ...]:
        """0-based global index of the cyclically next base in the same word."""
        out = []
        for c, w in enumerate(self.words):
            o, n = self.offsets[c], w.period
            out.extend(o + (i + 1) % n for i in range(n))
        return tuple(out)

    @cached_property
    def pred(self) -> tuple[int, ...]:
        out = [0] * self.nbar
        for i, j in enumerate(self.succ):
            out[j] = i
        return tuple(out)

    @cached_property
    def label_table(self) -> dict[BaseLabel, tuple[int, int]]:
        """Label -> (component id, run position within that word's run sequence)."""
        table = {}
        for g in range(self.nbar):
            c = self.comp[g]
            i = g - self.offsets[c]
            table[xl(g + 1)] = (c, 2 * i)
            table[yl(g + 1)] = (c, 2 * i + 1)
        return table

    @property
    def letter_length(self) -> int:
        return sum(w.letter_length for w in self.words)

    def labels(self, kind: str) -> list[BaseLabel]:
        return [BaseLabel(kind, i) for i in range(1, self.nbar + 1)]

    def check(self, label: BaseLabel) -> int:
        """0-based global index of ``label``; raises UnknownLabel."""
        if label.kind not in (X, Y) or not 1 <= label.index <= self.nbar:
            raise UnknownLabel(str(label))
        return label.index - 1

    def exponent(self, label: BaseLabel) -> int:
        g = self.check(label)
        return self.ks[g] if label.kind == X else self.ls[g]

    def typed_label(self, label: BaseLabel) -> BaseLabel:
        """The label this base had in the rotation the word was typed in."""
        g = self.check(label)
        c = self.comp[g]
        w, o = self.words[c], self.offsets[c]
        return BaseLabel(label.kind, o + (g - o + w.shift) % w.period + 1)

    def text(self) -> str:
        return ",".join(render_word(w) for w in self.words)

    def same_words(self, other: ModularLink) -> bool:
        return [(w.ks, w.ls) for w in self.words] == [(w.ks, w.ls) for w in other.words]


def link_from_words(words: Iterable[LorenzWord]) -> ModularLink:
    return ModularLink(
        tuple(dataclasses.replace(w, component_id=c) for c, w in enumerate(words))
    )


def split_link_text(text: str) -> list[str]:
    return [t for t in (p.strip() for p in text.split(",")) if t]


def parse_link(texts: Sequence[str] | str) -> ModularLink:
    if isinstance(texts, str):
        texts = split_link_text(texts)
    if not texts:
        raise EmptyWord("a link needs at least one word")
    return link_from_words(parse_word(t) for t in texts)


def trip_number(link: ModularLink) -> int:
    return link.nbar


def successor(link: ModularLink, b: BaseLabel) -> BaseLabel:
    g = link.check(b)
    return BaseLabel(b.kind, link.succ[g] + 1)
