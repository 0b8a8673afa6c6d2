import math

import pytest
from hypothesis import given, strategies as st

from fusionring import (
    Budget,
    ParseError,
    UnknownLabel,
    check_axioms,
    word_group,
)
from fusionring.rings.words import WordGroupSpec, parse_word_group_spec

import oracles


def test_spec_validation_and_describe():
    spec = WordGroupSpec((2, math.inf))
    assert spec.describe() == "Z2*Z"
    with pytest.raises(ValueError):
        WordGroupSpec(())
    with pytest.raises(ValueError):
        WordGroupSpec((1,))


def test_parse_spec_strings():
    assert parse_word_group_spec("Z2*Z2").factors == (2, 2)
    assert parse_word_group_spec("Z2*Z").factors == (2, math.inf)
    assert parse_word_group_spec("Z3*Z4*Z").factors == (3, 4, math.inf)
    with pytest.raises(ParseError):
        parse_word_group_spec("Z1")
    with pytest.raises(ParseError):
        parse_word_group_spec("Q8")


def test_ids_and_parse_round_trip():
    g = word_group([3, math.inf])
    for wid in ("e", "a", "a^2", "b", "b^-1", "ab", "a^2b^-3a"):
        lab = g.parse_label(wid)
        assert lab.id == wid
    with pytest.raises(UnknownLabel):
        g.parse_label("a^3")  # reduces away, not a stored id
    with pytest.raises(UnknownLabel):
        g.parse_label("c")


def test_group_products_reduce():
    g = word_group([2, 2])
    a = g.parse_label("a")
    b = g.parse_label("b")
    ab = g.decompose(a, b)
    ((lab, mult),) = tuple(ab)
    assert lab.id == "ab" and mult == 1
    ((lab2, _),) = tuple(g.decompose(a, a))
    assert lab2 == g.unit()
    assert g.conj(g.parse_label("ab")).id == "ba"


def test_enumerate_terminates_for_finite_groups():
    g = word_group([2])
    assert [l.id for l in g.enumerate(10)] == ["e", "a"]
    assert g.num_irreducibles == 2
    g3 = word_group([3])
    assert [l.id for l in g3.enumerate(10)] == ["e", "a", "a^2"]


def test_enumerate_by_weight_layers():
    g = word_group([2, math.inf])
    ids = [l.id for l in g.enumerate(8)]
    assert ids[0] == "e"
    weights = [g.label_size(l) for l in g.enumerate(8)]
    assert weights == sorted(weights)
    assert "a" in ids and "b" in ids and "b^-1" in ids


def test_order_oracle_against_bruteforce():
    cases = [
        ([2, 2], ["e", "a", "b", "ab", "aba", "bab", "abab"]),
        ([2, math.inf], ["e", "a", "b", "b^-1", "ab", "bab^-1", "b^2"]),
        ([3, 4], ["e", "a", "a^2", "b", "b^2", "ab", "a^2b^2"]),
    ]
    for factors, ids in cases:
        g = word_group(factors)
        orders = [None if m == math.inf else m for m in factors]
        for wid in ids:
            lab = g.parse_label(wid)
            expected = oracles.bf_order(_tuple_word(wid), orders, 64)
            got = g.order_oracle(lab)
            if expected is None:
                assert got == math.inf, (factors, wid, got)
            else:
                assert got == expected, (factors, wid, got, expected)


def _tuple_word(wid: str):
    if wid == "e":
        return ()
    import re

    out = []
    for letter, exp in re.findall(r"([a-z])(?:\^(-?\d+))?", wid):
        out.append((ord(letter) - ord("a"), int(exp) if exp else 1))
    return tuple(out)


def test_kill_finite_factors_membership():
    g = word_group([2, math.inf])
    in_n1 = ["a", "bab^-1", "b^-1ab", "abab^-1", "b^2ab^-2"]
    out_n1 = ["b", "ab", "b^-1", "ab^2"]
    for wid in in_n1:
        assert g.stage_one_contains(g.parse_label(wid)), wid
    for wid in out_n1:
        assert not g.stage_one_contains(g.parse_label(wid)), wid


def test_stage_one_matches_bruteforce_closure_ball():
    # acceptance-grade cross-check at word length 6
    for factors, orders, gens in (
        ([2, 2], [2, 2], [((0, 1),), ((1, 1),)]),
        ([2, math.inf], [2, None], [((0, 1),)]),
    ):
        g = word_group(factors)
        brute = oracles.bf_normal_closure_in_ball(orders, gens, 6)
        window = [l for l in g.enumerate(4096) if g.label_size(l) <= 6]
        assert len(window) >= len(brute)
        engine = {l.id for l in window if g.stage_one_contains(l)}
        brute_ids = {_render(w) for w in brute}
        assert engine == brute_ids, (factors, sorted(engine ^ brute_ids))


def _render(word):
    out = []
    for f, e in word:
        letter = "abcdefghijklmnopqrstuvwxyz"[f]
        out.append(letter if e == 1 else f"{letter}^{e}")
    return "".join(out) or "e"


def test_axioms_hold():
    for factors in ([2, 2], [2, math.inf], [math.inf, math.inf], [3, 4]):
        g = word_group(factors)
        report = check_axioms(g, Budget(max_irreducibles=14), triple_samples=40, seed=2)
        assert report.ok, (factors, report.violations)


@given(st.data())
def test_product_with_inverse_is_unit(data):
    g = word_group([2, math.inf])
    window = g.enumerate(20)
    lab = data.draw(st.sampled_from(window))
    inv = g.conj(lab)
    ((res, mult),) = tuple(g.decompose(lab, inv))
    assert res == g.unit() and mult == 1


@given(st.data())
def test_order_oracle_matches_bruteforce_everywhere(data):
    g = word_group([2, 3])
    window = g.enumerate(40)
    lab = data.draw(st.sampled_from(window))
    expected = oracles.bf_order(_tuple_word(lab.id), [2, 3], 64)
    got = g.order_oracle(lab)
    if expected is None:
        assert got == math.inf, (lab.id, got)
    else:
        assert got == expected, (lab.id, got, expected)
