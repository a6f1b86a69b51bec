import pytest
from hypothesis import given, strategies as st

from qhowe.fockspace import (
    BasisState,
    GridShape,
    QVector,
    grid_to_linear,
    linear_to_grid,
    prefix_parity,
    row_col_weights,
    state_to_string,
    string_to_state,
)
from qhowe.qscalar import QLaurent


def test_grid_to_linear_examples():
    sh = GridShape(3, 4)
    assert grid_to_linear(sh, 2, 3) == 8
    assert grid_to_linear(sh, 1, 1) == 1
    assert grid_to_linear(sh, 3, 4) == 12


def test_grid_bounds():
    sh = GridShape(3, 4)
    with pytest.raises(ValueError):
        grid_to_linear(sh, 0, 1)
    with pytest.raises(ValueError):
        grid_to_linear(sh, 1, 5)
    with pytest.raises(ValueError):
        GridShape(0, 4).check()
    with pytest.raises(ValueError):
        GridShape(8, 9).check()  # 72 > 64 positions


@given(st.integers(1, 8), st.integers(1, 8))
def test_grid_bijection(n, m):
    sh = GridShape(n, m)
    seen = set()
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            k = grid_to_linear(sh, i, j)
            assert linear_to_grid(sh, k) == (i, j)
            seen.add(k)
    assert seen == set(range(1, n * m + 1))


def test_prefix_parity_examples():
    # l = (1,0,1,1): occupied count strictly before position 3 is l_1 + l_2
    s = string_to_state("1011")
    assert prefix_parity(s.bits, 3) == 1
    assert prefix_parity(s.bits, 4) == 2
    assert prefix_parity(string_to_state("0000").bits, 4) == 0
    assert prefix_parity(string_to_state("1111").bits, 1) == 0


def test_row_col_weights_examples():
    assert row_col_weights(GridShape(2, 2), string_to_state("1011").bits) == ((2, 1), (1, 2))
    assert row_col_weights(GridShape(3, 3), 0) == ((0, 0, 0), (0, 0, 0))
    full = (1 << 6) - 1
    assert row_col_weights(GridShape(2, 3), full) == ((3, 3), (2, 2, 2))


@given(st.integers(1, 6), st.integers(1, 6), st.data())
def test_weights_sum_to_degree(n, m, data):
    bits = data.draw(st.integers(0, (1 << (n * m)) - 1))
    rows, cols = row_col_weights(GridShape(n, m), bits)
    assert sum(rows) == sum(cols) == bits.bit_count()


def test_state_rendering():
    s = string_to_state("0101")
    assert str(s) == "0101"
    assert s.degree == 2
    assert state_to_string(s.bits, 4) == "0101"
    with pytest.raises(ValueError):
        string_to_state("01x1")
    with pytest.raises(ValueError):
        BasisState(1 << 5, 4).check()


small_scalars = st.dictionaries(st.integers(-3, 3), st.integers(-5, 5), max_size=3).map(QLaurent)


def vectors(length):
    return st.dictionaries(st.integers(0, (1 << length) - 1), small_scalars, max_size=5).map(
        lambda d: QVector(length, d)
    )


@given(vectors(4), vectors(4), vectors(4))
def test_vector_addition_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a


@given(vectors(4), vectors(4), small_scalars)
def test_scalar_action_distributes(a, b, s):
    assert (a + b).scale(s) == a.scale(s) + b.scale(s)


def test_vector_length_mismatch():
    with pytest.raises(ValueError):
        QVector.basis(0, 2) + QVector.basis(0, 3)


def test_vector_json_sorted():
    v = QVector(2, {string_to_state("10").bits: QLaurent({0: 1}),
                    string_to_state("01").bits: QLaurent({1: 1})})
    rows = v.to_json()
    assert [r["state"] for r in rows] == ["01", "10"]
    assert rows[0]["coeff"] == {"1": "1/1"}
