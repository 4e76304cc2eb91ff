from __future__ import annotations

import itertools
import json

import pytest
from hypothesis import given

from bunchlinks.bunch import (
    Order,
    bunch_size_ranges,
    bunch_sizes,
    compare_bases,
    embed,
    embedding_from_dict,
    embedding_to_dict,
    full_bunch_orders,
    orders_from_dict,
    orders_to_dict,
)
from bunchlinks.errors import IndistinguishableBases, UnknownLabel
from bunchlinks.word import X, Y, parse_link, xl, yl
from conftest import C_PRIME, RUNNING
from oracles import brute_full_orders
from strategies import links


def labels(seq):
    return [str(b) for b in seq]


def test_running_example_orders():
    o = full_bunch_orders(parse_link(RUNNING))
    assert labels(o.x_order) == ["x2", "x1", "x4", "x5", "x3"]
    assert labels(o.y_order) == ["y5", "y2", "y1", "y4", "y3"]


def test_running_example_comparisons():
    link = parse_link(RUNNING)
    assert compare_bases(link, xl(2), xl(1)) is Order.LESS
    assert compare_bases(link, xl(1), xl(4)) is Order.LESS
    assert compare_bases(link, xl(1), xl(2)) is Order.GREATER


def test_monotone_family_orders():
    link = parse_link("x^3yx^2yxy")
    assert compare_bases(link, xl(3), xl(1)) is Order.LESS
    o = full_bunch_orders(link)
    assert labels(o.x_order) == ["x3", "x1", "x2"]
    assert labels(o.y_order) == ["y3", "y1", "y2"]


def test_single_pair():
    o = full_bunch_orders(parse_link("xy"))
    assert labels(o.x_order) == ["x1"] and labels(o.y_order) == ["y1"]


def test_compare_errors():
    link = parse_link(RUNNING)
    with pytest.raises(IndistinguishableBases):
        compare_bases(link, xl(1), xl(1))
    with pytest.raises(UnknownLabel):
        compare_bases(link, xl(1), yl(1))
    with pytest.raises(UnknownLabel):
        compare_bases(link, xl(1), xl(9))


def test_running_example_embedding_landmarks():
    emb = embed(parse_link(RUNNING))
    assert len(emb.slots) == 5 * (10 + 6)
    assert len(emb.used) == 44  # letter length of the word
    x3 = emb.arcs[xl(3)]
    assert x3[0][0].interval == -7
    assert x3[0][0].rank == emb.orders.rank(xl(3))
    used7 = [s for s in emb.used if s.interval == -7]
    assert used7[-1].label == xl(3)
    assert emb.arcs[yl(4)][0][0].interval == 2


def test_small_arcs():
    emb = embed(parse_link("x^2y"))
    path = emb.arcs[xl(1)]
    assert [a.interval for a, _ in path] + [path[-1][1].interval] == [-2, -1, 1]
    emb = embed(parse_link("xy"))
    assert len(emb.used) == 2 and len(emb.arcs) == 2


def test_bunch_sizes_running_example():
    sizes = bunch_sizes(parse_link(RUNNING))
    assert [sizes[-u] for u in range(1, 11)] == [5, 5, 4, 4, 4, 2, 2, 1, 1, 1]
    # direct count over the y-exponents {2, 2, 6, 2, 3}
    assert [sizes[v] for v in range(1, 7)] == [5, 5, 2, 1, 1, 1]
    assert bunch_sizes(parse_link("xy")) == {-1: 1, 1: 1}


def test_bunch_size_ranges_are_piecewise():
    link = parse_link(RUNNING)
    assert bunch_size_ranges(link) == [
        (-1, -2, 5), (-3, -5, 4), (-6, -7, 2), (-8, -10, 1),
        (1, 2, 5), (3, 3, 2), (4, 6, 1),
    ]


def test_json_round_trip():
    for text in (RUNNING, C_PRIME, "xy"):
        emb = embed(parse_link(text))
        d = json.loads(json.dumps(embedding_to_dict(emb)))
        back = embedding_from_dict(d)
        assert back.slots == emb.slots and back.used == emb.used
        assert back.arcs == emb.arcs and back.bunches == emb.bunches
        assert orders_from_dict(orders_to_dict(emb.orders)) == emb.orders
        assert d["slots"][0][:3] == emb.slots[0].as_list()


@given(links())
def test_orders_match_letter_oracle(link):
    o = full_bunch_orders(link)
    bx, by = brute_full_orders(link)
    assert labels(o.x_order) == bx
    assert labels(o.y_order) == by


@given(links())
def test_embedding_invariants(link):
    emb = embed(link)
    for iv, members in emb.bunches.items():
        full = emb.orders.x_order if iv < 0 else emb.orders.y_order
        exps = link.ks if iv < 0 else link.ls
        u = abs(iv)
        got = [lab for lab, _ in members]
        assert got == [lab for lab in full if lab in set(got)]
        assert set(got) == {lab for lab in full if exps[lab.index - 1] >= u}
    for lab, turns in emb.arcs.items():
        start = turns[0][0].interval
        want = -link.exponent(lab) if lab.kind == X else link.exponent(lab)
        assert start == want
        # consecutive turns chain slot to slot
        for (_, b), (c, _) in zip(turns, turns[1:]):
            assert b == c
    assert len(emb.used) == link.letter_length


@given(links(max_period=4, max_exp=4))
def test_comparator_is_strict_total_order(link):
    for kind in (X, Y):
        labs = link.labels(kind)
        for a, b in itertools.permutations(labs, 2):
            assert compare_bases(link, a, b) == -compare_bases(link, b, a)
        for a, b, c in itertools.permutations(labs, 3):
            if compare_bases(link, a, b) < 0 and compare_bases(link, b, c) < 0:
                assert compare_bases(link, a, c) < 0


@given(links(max_period=6, max_exp=3, max_components=4))
def test_cap_never_fires_on_valid_links(link):
    full_bunch_orders(link)
