"""Exact counts of cellular-automaton rule spaces.

A uniform CA with ``S`` states and an ``N``-cell neighborhood has
``S ** (S ** N)`` rules; hybrid variants raise that to the CA length,
then to the number of time steps. Results are exact integers, and a
digit budget refuses inputs whose answer would be absurdly long.
"""

from __future__ import annotations

import math

DEFAULT_DIGIT_BUDGET = 10**6


class DigitBudgetError(ValueError):
    def __init__(self, log10_digits: float, budget: int):
        self.log10_digits = log10_digits
        self.budget = budget
        if log10_digits < 15:
            size = f"{round(10 ** log10_digits):,}"
        else:
            size = f"about 10^{log10_digits:.1f}"
        super().__init__(f"result would have {size} decimal digits (budget {budget:,})")


def _require(name: str, value: int, minimum: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise ValueError(f"{name} must be an integer >= {minimum}, got {value!r}")


def _log10_digits(states: int, neighborhood: int, multiplier: int = 1) -> float:
    """log10 of the digit count of ``(states ** states ** neighborhood) ** multiplier``."""
    if states == 1:
        return 0.0
    return neighborhood * math.log10(states) + math.log10(math.log10(states)) + math.log10(multiplier)


def _check(log10_digits: float, budget: int) -> None:
    if log10_digits > math.log10(budget):
        raise DigitBudgetError(log10_digits, budget)


def count_uniform(states: int, neighborhood: int, budget: int = DEFAULT_DIGIT_BUDGET) -> int:
    _require("states", states, 1)
    _require("neighborhood", neighborhood, 0)
    _check(_log10_digits(states, neighborhood), budget)
    return states ** (states**neighborhood)


def count_hybrid(states: int, neighborhood: int, length: int, budget: int = DEFAULT_DIGIT_BUDGET) -> int:
    _require("length", length, 1)
    _check(_log10_digits(states, neighborhood, length), budget)
    return count_uniform(states, neighborhood, budget) ** length


def count_hybrid_time(
    states: int, neighborhood: int, length: int, time: int, budget: int = DEFAULT_DIGIT_BUDGET
) -> int:
    _require("time", time, 1)
    _require("length", length, 1)
    _check(_log10_digits(states, neighborhood, length * time), budget)
    return count_hybrid(states, neighborhood, length, budget) ** time


def count_heterogeneous_time(cells, time: int, budget: int = DEFAULT_DIGIT_BUDGET) -> int:
    """``(prod S_i ** S_i ** N_i) ** time`` for per-cell (states, neighborhood) pairs."""
    cells = list(cells)
    if not cells:
        raise ValueError("need at least one cell")
    _require("time", time, 1)
    logs = []
    for s, n in cells:
        _require("states", s, 1)
        _require("neighborhood", n, 0)
        if s > 1:
            logs.append(_log10_digits(s, n))
    if logs:
        top = max(logs)
        total = top + math.log10(sum(10 ** (x - top) for x in logs))
        _check(total + math.log10(time), budget)
    product = 1
    for s, n in cells:
        product *= count_uniform(s, n, budget)
    return product**time


def linear_rule_count(neighborhood_size: int) -> int:
    """Number of XOR-linear rules on a neighborhood: sum of C(n, k), i.e. 2**n."""
    _require("neighborhood_size", neighborhood_size, 0)
    return sum(math.comb(neighborhood_size, k) for k in range(neighborhood_size + 1))


def scientific(value: int, digits: int = 3) -> str:
    """``1.16e77``-style approximation with ``digits`` significant digits."""
    if value < 0:
        raise ValueError("value must be non-negative")
    # exponent from bit_length, so huge values never go through str()
    exp = max(int(value.bit_length() * math.log10(2)) - 1, 0)
    while 10 ** (exp + 1) <= value:
        exp += 1
    shift = exp - digits + 1
    lead = value // 10**shift if shift >= 0 else value * 10**-shift
    if shift > 0 and value // 10 ** (shift - 1) % 10 >= 5:
        lead += 1
    if lead >= 10**digits:
        lead //= 10
        exp += 1
    text = str(lead)
    mantissa = (text[0] + "." + text[1:]).rstrip("0").rstrip(".")
    return f"{mantissa}e{exp}"


def power_form(value: int) -> str | None:
    """``"2^256"`` when ``value`` is a power of two greater than 1."""
    if value > 1 and value & (value - 1) == 0:
        return f"2^{value.bit_length() - 1}"
    return None
