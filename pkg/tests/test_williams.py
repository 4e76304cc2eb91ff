from __future__ import annotations

import dataclasses

import pytest
from hypothesis import given

from bunchlinks.bunch import Slot, embed
from bunchlinks.errors import CapExceeded, MismatchedInput, TieDetected
from bunchlinks.gen import all_links
from bunchlinks.williams import (
    LetterPosition,
    Mode,
    branch_order,
    cycle_count,
    lorenz_permutation,
    verify_against_bunch,
)
from bunchlinks.word import LorenzWord, ModularLink, parse_link
from conftest import RUNNING
from oracles import brute_letter_order
from strategies import links


def flat(link, p: LetterPosition) -> tuple[int, int]:
    w = link.words[p.component]
    runs = [e for kl in zip(w.ks, w.ls) for e in kl]
    return p.component, sum(runs[: p.run]) + p.offset


def test_x2y_order():
    link = parse_link("x^2y")
    o = branch_order(link)
    # xxy < xyx < yxx
    assert o.positions == (LetterPosition(0, 0, 0), LetterPosition(0, 0, 1), LetterPosition(0, 1, 0))
    assert lorenz_permutation(link, o) == (2, 3, 1)


def test_xy_order():
    link = parse_link("xy")
    o = branch_order(link)
    assert o.positions == (LetterPosition(0, 0, 0), LetterPosition(0, 1, 0))
    assert lorenz_permutation(link) == (2, 1)


def test_running_example_modes_agree():
    link = parse_link(RUNNING)
    a = branch_order(link, Mode.NAIVE)
    b = branch_order(link, Mode.RLE)
    assert a.positions == b.positions
    assert len(a.positions) == 44
    perm = lorenz_permutation(link, a)
    assert cycle_count(perm) == 1 and len(perm) == 44


def test_x_positions_precede_y_positions():
    o = branch_order(parse_link(RUNNING))
    letters = [p.run % 2 for p in o.positions]
    assert letters == sorted(letters)


def test_verify_examples():
    for text in (RUNNING, "xy", "x^2y"):
        link = parse_link(text)
        assert verify_against_bunch(link, embed(link)).passed


def test_verify_detects_swapped_slots():
    link = parse_link(RUNNING)
    emb = embed(link)
    used = list(emb.used)
    i = next(i for i in range(len(used) - 1) if used[i].label != used[i + 1].label)
    used[i], used[i + 1] = used[i + 1], used[i]
    rep = verify_against_bunch(link, dataclasses.replace(emb, used=tuple(used)))
    assert not rep.passed and rep.check == "a"
    assert str(rep).startswith("FAIL at check (a)")


def test_verify_detects_wrong_interval():
    link = parse_link(RUNNING)
    emb = embed(link)
    used = list(emb.used)
    s = used[0]
    used[0] = Slot(s.interval - 1, s.rank, s.label)
    rep = verify_against_bunch(link, dataclasses.replace(emb, used=tuple(used)))
    assert not rep.passed and rep.check == "b"


def test_verify_detects_wrong_bunch():
    link = parse_link(RUNNING)
    emb = embed(link)
    bunches = dict(emb.bunches)
    bunches[-1] = tuple(reversed(bunches[-1]))
    rep = verify_against_bunch(link, dataclasses.replace(emb, bunches=bunches))
    assert not rep.passed and rep.check == "c"


def test_verify_rejects_other_link():
    with pytest.raises(MismatchedInput):
        verify_against_bunch(parse_link("xy"), embed(parse_link("x^2y")))


def test_naive_cap():
    with pytest.raises(CapExceeded):
        branch_order(parse_link(RUNNING), Mode.NAIVE, cap=10)
    # the run-length mode has no letter cap
    assert len(branch_order(parse_link(RUNNING), Mode.RLE, cap=10).positions) == 44


@pytest.mark.parametrize("mode", list(Mode))
def test_tie_detected_on_invalid_link(mode):
    # bypass validation: (xy)^2 is a proper power, so itineraries tie
    bad = ModularLink((LorenzWord((1, 1), (1, 1)),))
    with pytest.raises(TieDetected):
        branch_order(bad, mode)


def test_exhaustive_small_links_modes_and_oracle():
    count = 0
    for link in all_links(3, 3):
        a = branch_order(link, Mode.NAIVE)
        b = branch_order(link, Mode.RLE)
        assert a.positions == b.positions
        assert [flat(link, p) for p in a.positions] == brute_letter_order(link)
        assert verify_against_bunch(link, embed(link), order=a).passed
        count += 1
    assert count == 729


@given(links(max_period=6, max_exp=9))
def test_random_links_against_letter_oracle(link):
    o = branch_order(link)
    assert [flat(link, p) for p in o.positions] == brute_letter_order(link)
    assert branch_order(link, Mode.RLE).positions == o.positions


@given(links())
def test_permutation_has_one_cycle_per_component(link):
    perm = lorenz_permutation(link)
    assert sorted(perm) == list(range(1, link.letter_length + 1))
    assert cycle_count(perm) == len(link.words)
