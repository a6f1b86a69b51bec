from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from qhowe.duality import (
    MultiPoly,
    Partition,
    cyclic_span_dims,
    dimension_identity,
    dual_cauchy_check,
    fundamental_decomp,
    hwv,
    hwv_state,
    joint_kernel_count,
    partitions_in_box,
    schur_poly,
    verify_hwv,
    weyl_dim,
)
from qhowe.embeddings import rho_q
from qhowe.fockspace import GridShape, QVector, row_col_weights, state_to_string, string_to_state
from qhowe.braided_ext import normalize
from qhowe.qscalar import QLaurent


partition_lists = st.lists(st.integers(0, 6), max_size=5).map(
    lambda xs: Partition(sorted(xs, reverse=True))
)


class TestPartition:
    def test_construction(self):
        assert Partition((3, 1, 0, 0)) == (3, 1)
        assert Partition() == ()
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_conjugate_examples(self):
        assert Partition((3, 1)).conjugate() == (2, 1, 1)
        assert Partition((2, 1)).conjugate() == (2, 1)
        assert Partition().conjugate() == ()

    @given(partition_lists)
    def test_conjugate_involution(self, mu):
        assert mu.conjugate().conjugate() == mu
        assert mu.conjugate().size == mu.size

    def test_box_membership(self):
        assert Partition((2, 2)).fits_in_box(2, 2)
        assert not Partition((3,)).fits_in_box(2, 2)
        assert not Partition((1, 1, 1)).fits_in_box(2, 2)

    def test_from_string(self):
        assert Partition.from_string("2,1") == (2, 1)
        assert Partition.from_string("-") == ()


class TestPartitionsInBox:
    def test_counts(self):
        assert len(partitions_in_box(2, 2)) == 6
        assert len(partitions_in_box(1, 3)) == 4
        assert len(partitions_in_box(3, 3)) == 20

    def test_two_by_two_contents(self):
        got = set(partitions_in_box(2, 2))
        assert got == {(), (1,), (2,), (1, 1), (2, 1), (2, 2)}

    def test_lexicographic_order(self):
        parts = partitions_in_box(2, 2)
        assert parts == sorted(parts)


class TestHwv:
    def test_examples(self):
        assert state_to_string(hwv_state((2, 1), GridShape(2, 2)), 4) == "1110"
        assert hwv((), GridShape(2, 2)) == QVector.basis(0, 4)
        assert hwv((2, 2), GridShape(2, 2)) == QVector.basis(0b1111, 4)

    def test_box_violation(self):
        with pytest.raises(ValueError):
            hwv((3,), GridShape(2, 2))

    def test_row_word_normalizes_to_state(self):
        # ordered product v_1 v_3 v_2 for mu = (2,1) differs from the bitmask
        # state by the unit -q^{-1}
        coeff, state = normalize((1, 3, 2), 4)
        assert state == hwv_state((2, 1), GridShape(2, 2))
        assert coeff == QLaurent({-1: -1})

    def test_verify_examples(self):
        assert verify_hwv((2, 1), (2, 2), "quantum")["status"] == "pass"
        assert verify_hwv((2, 1), (2, 2), "classical")["status"] == "pass"
        assert verify_hwv((), (2, 2), "quantum")["status"] == "pass"

    def test_k_weights_on_staircase(self):
        report = verify_hwv((2, 1), (2, 2), "quantum")
        weights = [c for c in report["checks"] if c["relation"] == "lambda_q(K) weight"]
        assert all(c["status"] == "pass" for c in weights)

    def test_non_partition_state_is_not_highest(self):
        # occupied cell (1,2) alone: column raising moves it to column 1
        vec = QVector.basis(string_to_state("0010").bits, 4)
        assert not rho_q(2, 2, "E", 1).apply(vec).is_zero()

    @pytest.mark.parametrize("n,m", [(2, 2), (2, 3), (3, 2), (1, 4)])
    def test_all_partitions_both_flavors(self, n, m):
        for mu in partitions_in_box(n, m):
            assert verify_hwv(mu, (n, m), "quantum")["status"] == "pass"
            assert verify_hwv(mu, (n, m), "classical")["status"] == "pass"


class TestWeylDim:
    def test_examples(self):
        assert weyl_dim((1,), 2) == 2
        assert weyl_dim((2, 1), 2) == 2
        assert weyl_dim((1, 1), 3) == 3

    def test_too_many_parts(self):
        with pytest.raises(ValueError):
            weyl_dim((1, 1, 1), 2)

    @given(st.integers(1, 4), partition_lists)
    def test_positive_integer(self, p, mu):
        if len(mu) <= p:
            assert weyl_dim(mu, p) >= 1


class TestDimensionIdentity:
    def test_two_by_two(self):
        report = dimension_identity(2, 2)
        assert report["status"] == "pass"
        assert report["total"] == 16
        assert [d["sum"] for d in report["degrees"]] == [1, 4, 6, 4, 1]

    @pytest.mark.parametrize("m", range(1, 6))
    def test_single_row(self, m):
        assert dimension_identity(1, m)["status"] == "pass"

    def test_two_by_three(self):
        assert dimension_identity(2, 3)["total"] == 64


class TestCyclicSpans:
    def test_two_by_two(self):
        report = cyclic_span_dims(2, 2)
        assert report["status"] == "pass"
        assert sorted(r["span_dim"] for r in report["partitions"]) == [1, 1, 3, 3, 4, 4]
        assert report["joint_rank"] == 16

    def test_one_by_two(self):
        report = cyclic_span_dims(1, 2)
        assert sorted(r["span_dim"] for r in report["partitions"]) == [1, 1, 2]

    def test_two_by_three(self):
        report = cyclic_span_dims(2, 3)
        assert report["status"] == "pass"
        assert len(report["partitions"]) == comb(5, 2)
        assert report["total"] == 64

    def test_degenerate_values_rejected(self):
        with pytest.raises(ValueError):
            cyclic_span_dims(2, 2, (Fraction(1),))

    def test_consistent_across_values(self):
        a = cyclic_span_dims(2, 2, (Fraction(2),))
        b = cyclic_span_dims(2, 2, (Fraction(7), Fraction(5, 3)))
        assert [r["span_dim"] for r in a["partitions"]] == [
            r["span_dim"] for r in b["partitions"]
        ]


class TestFundamentalDecomp:
    @pytest.mark.parametrize("n", [1, 2, 3, 5])
    def test_passes(self, n):
        report = fundamental_decomp(n)
        assert report["status"] == "pass"
        assert [c["graded_dim"] for c in report["checks"]] == [comb(n, j) for j in range(n + 1)]


class TestSchur:
    def test_examples(self):
        assert schur_poly((1,), 2).terms == {(1, 0): 1, (0, 1): 1}
        assert schur_poly((1, 1), 2).terms == {(1, 1): 1}
        assert schur_poly((2, 1), 2).terms == {(2, 1): 1, (1, 2): 1}

    def test_dimension_from_character(self):
        # number of SSYT = Weyl dimension
        for mu in [(2,), (2, 1), (3, 1), (2, 2)]:
            for p in (2, 3, 4):
                if len(mu) <= p:
                    total = sum(schur_poly(mu, p).terms.values())
                    assert total == weyl_dim(mu, p)

    def test_too_long_shape_is_zero(self):
        assert schur_poly((1, 1, 1), 2).terms == {}


class TestDualCauchy:
    @pytest.mark.parametrize("n,m", [(1, 1), (2, 2), (2, 3), (3, 3)])
    def test_three_way_identity(self, n, m):
        report = dual_cauchy_check(n, m)
        assert report["status"] == "pass"
        assert report["product_equals_schur_sum"]
        assert report["product_equals_weight_enumeration"]

    def test_size_cap(self):
        with pytest.raises(ValueError):
            dual_cauchy_check(5, 2)


class TestWeightBounds:
    @pytest.mark.parametrize("n,m", [(2, 2), (2, 3), (3, 3), (4, 4)])
    def test_row_and_column_degrees_bounded(self, n, m):
        shape = GridShape(n, m)
        for bits in range(1 << (n * m)):
            rows, cols = row_col_weights(shape, bits)
            assert max(rows) <= m and max(cols) <= n


class TestJointKernel:
    @pytest.mark.parametrize("n,m", [(2, 2), (1, 3), (2, 3), (3, 2)])
    def test_kernel_counts_partitions(self, n, m):
        assert joint_kernel_count(n, m) == comb(n + m, n)
        assert joint_kernel_count(n, m, Fraction(3)) == comb(n + m, n)


def test_multipoly_ring():
    a = MultiPoly.monomial(2, (1, 0)) + MultiPoly.monomial(2, (0, 1))
    b = MultiPoly.monomial(2, (1, 0)) + MultiPoly.monomial(2, (0, 1), -1)
    assert a * b == MultiPoly.monomial(2, (2, 0)) + MultiPoly.monomial(2, (0, 2), -1)
    assert (a + b).terms == {(1, 0): 2}
