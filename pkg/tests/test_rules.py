import math
from collections import Counter

import pytest

from conftest import OFFSET_OF
from xorca.rules import (
    ALL_RULES,
    WEIGHTS,
    InvalidRuleError,
    InvalidWeightError,
    group_of,
    parse_rule_list,
    rule_offsets,
    rules_in_group,
    weight_to_offset,
)


@pytest.mark.parametrize(
    "weight, offset",
    [(1, (0, 0)), (128, (-1, 0)), (4, (1, 1)), (2, (0, 1)), (8, (1, 0)),
     (16, (1, -1)), (32, (0, -1)), (64, (-1, -1)), (256, (-1, 1))],
)
def test_weight_to_offset(weight, offset):
    assert weight_to_offset(weight) == offset
    assert OFFSET_OF[weight] == offset


@pytest.mark.parametrize("bad", [0, 3, 512, -1, 1.0, "1", None])
def test_invalid_weight(bad):
    with pytest.raises(InvalidWeightError):
        weight_to_offset(bad)


def test_weight_offset_bijection():
    offsets = {weight_to_offset(w) for w in WEIGHTS}
    assert offsets == {(dr, dc) for dr in (-1, 0, 1) for dc in (-1, 0, 1)}


def test_rule_offsets_examples():
    assert rule_offsets(21) == [(0, 0), (1, 1), (1, -1)]
    assert rule_offsets(0) == []
    assert len(rule_offsets(511)) == 9


def test_group_examples():
    assert group_of(21) == 3
    assert group_of(3) == 2
    assert group_of(0) == 0


def test_offsets_length_is_group():
    for r in ALL_RULES:
        assert len(rule_offsets(r)) == group_of(r)


def test_group_histogram_is_binomial_row():
    hist = Counter(group_of(r) for r in ALL_RULES)
    assert [hist[k] for k in range(10)] == [math.comb(9, k) for k in range(10)]
    assert sum(hist.values()) == 512


def test_group_two_listing():
    # the Group 2 enumeration printed alongside the weight picture
    printed = [3, 5, 6, 9, 10, 12, 17, 18, 20, 24, 33, 34, 36, 40, 48, 65, 66, 68, 72,
               80, 96, 129, 130, 132, 136, 144, 160, 192, 257, 258, 260, 264, 272, 288,
               320, 384]
    assert rules_in_group(2) == printed
    assert rules_in_group(1) == list(WEIGHTS)


@pytest.mark.parametrize("bad", [-1, 512, True])
def test_invalid_rule(bad):
    with pytest.raises(InvalidRuleError):
        rule_offsets(bad)


def test_parse_rule_list():
    assert parse_rule_list("18-20, 3,5,3") == [3, 5, 18, 19, 20]
    with pytest.raises(InvalidRuleError):
        parse_rule_list("500-520")
    with pytest.raises(InvalidRuleError):
        parse_rule_list("9-3")
    with pytest.raises(ValueError):
        parse_rule_list("x")
