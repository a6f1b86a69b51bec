import pytest
from hypothesis import given, strategies as st

from qhowe.braided_ext import (
    apply_eps_q,
    apply_iota_q,
    check_module_algebra,
    eps_q,
    iota_q,
    module_algebra_action,
    mul,
    normalize,
)
from qhowe.embeddings import phi_q
from qhowe.fockspace import QVector, string_to_state
from qhowe.qscalar import QLaurent


def V(text):
    return QVector.basis(string_to_state(text).bits, len(text))


def S(text):
    return string_to_state(text).bits


class TestNormalize:
    def test_examples(self):
        assert normalize((2, 1), 2) == (QLaurent({-1: -1}), S("11"))
        assert normalize((1, 1), 2) is None
        assert normalize((3, 1, 2), 3) == (QLaurent({-2: 1}), S("111"))

    def test_sorted_word_is_monic(self):
        coeff, state = normalize((1, 3, 4), 4)
        assert coeff == QLaurent.one() and state == S("1011")

    @given(st.lists(st.integers(1, 5), min_size=1, max_size=5))
    def test_scalar_is_unit_power(self, letters):
        result = normalize(letters, 5)
        if result is None:
            assert len(set(letters)) < len(letters)
        else:
            coeff, state = result
            term = coeff.single_term()
            assert term is not None and term[1] in (1, -1)
            assert state.bit_count() == len(letters)


class TestMul:
    def test_examples(self):
        assert mul(V("10"), V("01")) == V("11")
        assert mul(V("01"), V("10")) == V("11").scale(QLaurent({-1: -1}))
        assert mul(V("10"), V("10")).is_zero()

    @given(st.integers(2, 6), st.data())
    def test_associative_on_basis(self, n, data):
        states = st.integers(0, (1 << n) - 1)
        a = QVector.basis(data.draw(states), n)
        b = QVector.basis(data.draw(states), n)
        c = QVector.basis(data.draw(states), n)
        assert mul(mul(a, b), c) == mul(a, mul(b, c))

    @given(st.integers(2, 6), st.data())
    def test_degree_adds_or_zero(self, n, data):
        states = st.integers(0, (1 << n) - 1)
        sa, sb = data.draw(states), data.draw(states)
        prod = mul(QVector.basis(sa, n), QVector.basis(sb, n))
        if prod:
            (state,) = prod.entries
            assert state.bit_count() == sa.bit_count() + sb.bit_count()


class TestQuantizedMultOps:
    def test_examples(self):
        assert iota_q(2, 2).apply(V("11")) == QVector(2, {S("10"): QLaurent({1: -1})})
        assert eps_q(1, 2).apply(V("01")) == V("11")
        lhs = (eps_q(2, 3) * iota_q(3, 3)).apply(V("101"))
        assert lhs == phi_q(3, "E", 2).apply(V("101"))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_word_matches_direct_formula(self, n):
        for i in range(1, n + 1):
            word_i, word_e = iota_q(i, n), eps_q(i, n)
            for bits in range(1 << n):
                v = QVector.basis(bits, n)
                assert word_i.apply(v) == apply_iota_q(i, v)
                assert word_e.apply(v) == apply_eps_q(i, v)

    @pytest.mark.parametrize("n", range(2, 7))
    def test_eps_iota_realize_root_vectors(self, n):
        for i in range(1, n):
            e_word = (eps_q(i, n) * iota_q(i + 1, n)).to_matrix()
            assert e_word == phi_q(n, "E", i).to_matrix()
            f_word = (eps_q(i + 1, n) * iota_q(i, n)).to_matrix()
            assert f_word == phi_q(n, "F", i).to_matrix()


class TestModuleAlgebraAction:
    def test_examples(self):
        assert module_algebra_action("E", 1, V("01"), 2) == V("10")
        assert module_algebra_action("L", 1, V("11"), 2) == V("11").scale(QLaurent({1: 1}))
        for n in (2, 3):
            for bits in range(1 << n):
                v = QVector.basis(bits, n)
                for i in range(1, n):
                    if not (bits >> i) & 1:  # position i+1 vacant
                        assert module_algebra_action("E", i, v, n).is_zero()

    def test_counit_on_vacuum(self):
        vac = V("000")
        assert module_algebra_action("E", 1, vac, 3).is_zero()
        assert module_algebra_action("F", 2, vac, 3).is_zero()
        assert module_algebra_action("L", 2, vac, 3) == vac

    @pytest.mark.parametrize("n", range(1, 6))
    def test_agrees_with_clifford_realization(self, n):
        assert check_module_algebra(n)["status"] == "pass"
