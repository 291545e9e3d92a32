"""Rule numbering for the nine-cell (Moore) neighborhood.

Each cell of the 3x3 stencil carries a power-of-two weight::

     64  128  256
     32    1    2
     16    8    4

A rule number is the sum of the weights of the cells XORed together to
produce the next state, so every integer in [0, 511] names one linear rule.
Offsets are (dr, dc) with rows growing downward and columns rightward.
"""

from __future__ import annotations

from typing import NamedTuple


class InvalidWeightError(ValueError):
    pass


class InvalidRuleError(ValueError):
    pass


class NeighborOffset(NamedTuple):
    dr: int
    dc: int


WEIGHTS = (1, 2, 4, 8, 16, 32, 64, 128, 256)

_OFFSETS = {
    1: NeighborOffset(0, 0),
    2: NeighborOffset(0, 1),
    4: NeighborOffset(1, 1),
    8: NeighborOffset(1, 0),
    16: NeighborOffset(1, -1),
    32: NeighborOffset(0, -1),
    64: NeighborOffset(-1, -1),
    128: NeighborOffset(-1, 0),
    256: NeighborOffset(-1, 1),
}

ALL_RULES = tuple(range(512))


def check_rule(rule: int) -> int:
    if isinstance(rule, bool) or not isinstance(rule, int) or not 0 <= rule <= 511:
        raise InvalidRuleError(f"rule must be an integer in [0, 511], got {rule!r}")
    return rule


def weight_to_offset(weight: int) -> NeighborOffset:
    """Return the stencil offset whose current state ``weight`` selects."""
    if type(weight) is not int or weight not in _OFFSETS:
        raise InvalidWeightError(f"weight must be one of {WEIGHTS}, got {weight!r}")
    return _OFFSETS[weight]


def rule_offsets(rule: int) -> list[NeighborOffset]:
    check_rule(rule)
    return [_OFFSETS[w] for w in WEIGHTS if rule & w]


def group_of(rule: int) -> int:
    """Number of neighborhood cells the rule depends on."""
    return bin(check_rule(rule)).count("1")


def rules_in_group(group: int) -> list[int]:
    return [r for r in ALL_RULES if group_of(r) == group]


def parse_rule_list(text: str) -> list[int]:
    """Parse ``"3,5,18-20"`` into a sorted, de-duplicated rule list."""
    rules: set[int] = set()
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if "-" in part:
            lo, _, hi = part.partition("-")
            a, b = int(lo), int(hi)
            if a > b:
                raise InvalidRuleError(f"empty rule range {part!r}")
            rules.update(check_rule(r) for r in range(a, b + 1))
        else:
            rules.add(check_rule(int(part)))
    if not rules:
        raise InvalidRuleError(f"no rules in {text!r}")
    return sorted(rules)
