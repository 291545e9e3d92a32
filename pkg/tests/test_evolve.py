import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import poly_kernel, scalar_evolve
from xorca.evolve import evolve, kernel, step, step_scalar
from xorca.grid import Grid, grid_from_coords, new_grid, place_seed
from xorca.rules import ALL_RULES

SEED = place_seed(new_grid(80, 80), 40, 40)


def random_grid(rng, rows, cols, density=0.5):
    bits = 0
    for i in range(rows * cols):
        if rng.random() < density:
            bits |= 1 << i
    return Grid(rows, cols, bits)


def test_identity_and_zero_rules(rng):
    g = random_grid(rng, 9, 11)
    assert step(g, 1) == g
    assert step(g, 0) == new_grid(9, 11)


def test_rule_2_moves_left():
    assert step(SEED, 2).coords() == {(40, 39)}


def test_rule_1_for_15_steps():
    out, touched = evolve(SEED, 1, 15)
    assert out == SEED and not touched


def test_rule_2_for_15_steps():
    out, touched = evolve(SEED, 2, 15)
    assert out.coords() == {(40, 25)} and not touched


def test_rule_3_for_15_steps():
    out, _ = evolve(SEED, 3, 15)
    assert out.coords() == {(40, c) for c in range(25, 41)}


def test_evolve_zero_steps_and_negative():
    assert evolve(SEED, 77, 0) == (SEED, False)
    with pytest.raises(ValueError):
        evolve(SEED, 3, -1)


def test_touched_boundary_flag():
    g = place_seed(new_grid(7, 7), 3, 3)
    assert evolve(g, 2, 2)[1] is False
    assert evolve(g, 2, 3)[1] is True
    # the seed leaves the grid on step 4 but contact was recorded
    out, touched = evolve(g, 2, 5)
    assert out.popcount() == 0 and touched


def test_matches_dense_definition(rng):
    for rule in rng.sample(ALL_RULES, 40):
        cells = {(rng.randrange(6), rng.randrange(7)) for _ in range(10)}
        g = grid_from_coords(6, 7, cells)
        out, _ = evolve(g, rule, 4)
        assert out.coords() == scalar_evolve(cells, 6, 7, rule, 4)


@pytest.mark.parametrize("rows, cols", [(1, 1), (1, 9), (9, 1), (2, 65), (3, 64)])
def test_packed_equals_scalar_on_odd_shapes(rng, rows, cols):
    for rule in ALL_RULES[::7]:
        g = random_grid(rng, rows, cols)
        assert step(g, rule) == step_scalar(g, rule)


def test_kernel_examples():
    assert kernel(1, 0) == {(0, 0)}
    assert kernel(77, 0) == {(0, 0)}
    assert kernel(1, 15) == {(0, 0)}
    assert kernel(3, 15) == {(0, -j) for j in range(16)}
    assert kernel(18, 15) == {(-(15 - k), 15 - 2 * k) for k in range(16)}


def test_kernel_one_step_is_negated_stencil():
    for rule in ALL_RULES:
        assert kernel(rule, 1) == poly_kernel(rule, 1)


@pytest.mark.parametrize("n, rules", [(2, ALL_RULES[::3]), (5, ALL_RULES[::3]), (15, ALL_RULES)])
def test_kernel_against_polynomial_power(n, rules):
    for rule in rules:
        assert kernel(rule, n) == poly_kernel(rule, n)


@given(
    st.integers(0, 511),
    st.integers(1, 9),
    st.integers(1, 9),
    st.data(),
)
@settings(max_examples=60, deadline=None)
def test_superposition(rule, rows, cols, data):
    cells = st.sets(st.tuples(st.integers(0, rows - 1), st.integers(0, cols - 1)))
    a = grid_from_coords(rows, cols, data.draw(cells))
    b = grid_from_coords(rows, cols, data.draw(cells))
    n = data.draw(st.sampled_from([1, 2, 15]))
    both = Grid(rows, cols, a.bits ^ b.bits)
    assert evolve(both, rule, n)[0].bits == evolve(a, rule, n)[0].bits ^ evolve(b, rule, n)[0].bits


def test_shift_equivariance():
    g = new_grid(40, 40)
    for rule in ALL_RULES[::5]:
        a, ta = evolve(place_seed(g, 18, 20), rule, 6)
        b, tb = evolve(place_seed(g, 19, 20), rule, 6)
        assert not ta and not tb
        assert {(r + 1, c) for r, c in a.coords()} == b.coords()


@pytest.mark.parametrize("k", [1, 2, 3])
def test_kernel_replication(k):
    s = 2**k
    for rule in ALL_RULES:
        assert kernel(rule, s) == {(s * dr, s * dc) for dr, dc in kernel(rule, 1)}


@given(st.integers(0, 511), st.integers(0, 6), st.integers(0, 6), st.data())
@settings(max_examples=40, deadline=None)
def test_composition(rule, m, n, data):
    cells = data.draw(st.sets(st.tuples(st.integers(0, 7), st.integers(0, 7)), max_size=12))
    g = grid_from_coords(8, 8, cells)
    direct, _ = evolve(g, rule, m + n)
    split, _ = evolve(evolve(g, rule, m)[0], rule, n)
    assert direct == split
