from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bunchlinks.errors import (
    DuplicateCyclicClass,
    EmptyWord,
    ExponentOverflow,
    PeriodicWord,
    SingleLetterWord,
    UnknownLabel,
    WordSyntaxError,
)
from bunchlinks.word import (
    MAX_EXPONENT,
    BaseLabel,
    Run,
    least_rotation,
    parse_link,
    parse_word,
    render_word,
    smallest_period,
    successor,
    trip_number,
    word_from_exponents,
    xl,
)
from conftest import C_PRIME, RUNNING
from oracles import brute_canonical, brute_is_primitive
from strategies import run_sequences


def test_running_example_runs():
    w = parse_word("x^10 y^2 x^5 y^2 x^7 y^6 x^2 y^2 x^5 y^3")
    assert w.period == 5
    assert [(r.letter, r.exponent) for r in w.runs] == [
        ("x", 10), ("y", 2), ("x", 5), ("y", 2), ("x", 7),
        ("y", 6), ("x", 2), ("y", 2), ("x", 5), ("y", 3),
    ]
    assert not w.canonicalized


def test_rotation_to_x_first():
    w = parse_word("y^2 x^3")
    assert w.runs == (Run("x", 3), Run("y", 2))


@pytest.mark.parametrize("text", ["x x^2 y", "xxxy", "x^2 x y"])
def test_run_merging(text):
    assert parse_word(text).runs == (Run("x", 3), Run("y", 1))


def test_cyclic_merge_of_first_and_last_run():
    # the trailing x wraps onto the leading x^2
    assert parse_word("x^2yx").runs == (Run("x", 3), Run("y", 1))


@pytest.mark.parametrize(
    "text, err",
    [
        ("", EmptyWord),
        ("   ", EmptyWord),
        ("xxx", SingleLetterWord),
        ("y^4", SingleLetterWord),
        ("xyxy", PeriodicWord),
        ("x^2yx^2y", PeriodicWord),
        (f"x^{MAX_EXPONENT + 1}y", ExponentOverflow),
        (f"x^{MAX_EXPONENT}xy", ExponentOverflow),
        ("xzy", WordSyntaxError),
        ("x^y", WordSyntaxError),
        ("x^0y", WordSyntaxError),
    ],
)
def test_parse_errors(text, err):
    with pytest.raises(err):
        parse_word(text)


def test_syntax_error_reports_byte_offset():
    with pytest.raises(WordSyntaxError) as info:
        parse_word("x^2 y z")
    assert info.value.offset == 6
    assert "byte 6" in str(info.value)
    assert info.value.name == "SyntaxError"


def test_max_exponent_accepted():
    w = parse_word(f"x^{MAX_EXPONENT}y")
    assert w.ks == (MAX_EXPONENT,)


def test_canonical_rotation_puts_max_first():
    w = parse_word("xy^3x^4y")
    assert w.ks == (4, 1) and w.ls == (1, 3)
    assert w.canonicalized


def test_canonical_tie_break_is_lexicographic():
    # two rotations start with x^3; (3,1,1,2,3,2,...) beats (3,2,...)
    w = word_from_exponents([3, 1, 3, 2], [2, 1, 1, 2])
    assert (w.ks, w.ls) == brute_canonical([3, 1, 3, 2], [2, 1, 1, 2])
    assert w.tie_break


def test_cprime_link():
    link = parse_link(C_PRIME)
    assert link.nbar == 5
    assert trip_number(link) == 5
    assert [w.period for w in link.words] == [2, 2, 1]
    # canonical labels map back to the labels in the typed words
    assert link.exponent(xl(1)) == 500
    assert link.typed_label(xl(1)) == xl(2)
    typed = {1: (100, 10), 2: (500, 50), 3: (200, 20), 4: (400, 40), 5: (300, 30)}
    for g in range(1, 6):
        assert typed[link.typed_label(xl(g)).index][0] == link.exponent(xl(g))
        assert typed[link.typed_label(BaseLabel("y", g)).index][1] == link.exponent(BaseLabel("y", g))


def test_parse_link_forms():
    assert parse_link(["xy"]).nbar == 1
    assert parse_link("xy, x^2y").nbar == 2
    with pytest.raises(DuplicateCyclicClass):
        parse_link(["xy", "yx"])
    with pytest.raises(DuplicateCyclicClass):
        parse_link(["x^2yxy^3", "xy^3x^2y"])
    with pytest.raises(EmptyWord):
        parse_link([])


def test_trip_number():
    assert trip_number(parse_link(RUNNING)) == 5
    assert trip_number(parse_link("xy")) == 1


def test_successor():
    assert successor(parse_link(C_PRIME), xl(2)) == xl(1)
    assert successor(parse_link("xy"), xl(1)) == xl(1)
    assert successor(parse_link(RUNNING), xl(5)) == xl(1)
    assert successor(parse_link(C_PRIME), BaseLabel("y", 5)) == BaseLabel("y", 5)
    with pytest.raises(UnknownLabel):
        successor(parse_link("xy"), xl(2))


def test_label_table_is_bijection():
    link = parse_link(C_PRIME)
    table = link.label_table
    assert len(table) == 2 * link.nbar
    assert len(set(table.values())) == 2 * link.nbar


def test_booth_and_kmp_helpers():
    assert least_rotation([3, 1, 2, 1, 1]) == 3
    assert least_rotation("bbaab") == 2
    assert smallest_period([1, 2, 1, 2]) == 2
    assert smallest_period([1, 2, 1]) == 3


@given(st.lists(st.integers(0, 3), min_size=1, max_size=12))
def test_least_rotation_matches_brute(seq):
    k = least_rotation(seq)
    assert seq[k:] + seq[:k] == min(seq[i:] + seq[:i] for i in range(len(seq)))


@given(run_sequences(max_period=6, max_exp=4))
def test_primitivity_matches_letter_oracle(seq):
    ks, ls = seq
    pairs = list(zip(ks, ls))
    assert (smallest_period(pairs) == len(pairs)) == brute_is_primitive(ks, ls)


@given(run_sequences(), st.integers(0, 20))
def test_rotation_invariance(seq, r):
    ks, ls = seq
    if not brute_is_primitive(ks, ls):
        with pytest.raises(PeriodicWord):
            word_from_exponents(ks, ls)
        return
    n = len(ks)
    r %= n
    a = word_from_exponents(ks, ls)
    b = word_from_exponents(ks[r:] + ks[:r], ls[r:] + ls[:r])
    assert a == b
    assert (a.ks, a.ls) == brute_canonical(ks, ls)


@given(run_sequences())
def test_render_round_trip(seq):
    ks, ls = seq
    if not brute_is_primitive(ks, ls):
        return
    w = word_from_exponents(ks, ls)
    again = parse_word(render_word(w))
    assert again == w
    assert render_word(again) == render_word(w)
    assert trip_number(parse_link([render_word(w)])) == len(w.ks)


def test_render_bare_letters():
    assert render_word(parse_word("x^2yxy^3")) == "x^2yxy^3"
