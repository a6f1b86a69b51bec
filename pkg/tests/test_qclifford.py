import pytest

from qhowe.fockspace import QVector, string_to_state
from qhowe.qclifford import OperatorExpr, check_clifford, q_commutator
from qhowe.qscalar import QLaurent


def V(text):
    return QVector.basis(string_to_state(text).bits, len(text))


def test_action_examples():
    assert OperatorExpr.psi_dag(2, 2).apply(V("10")) == V("11").scale(QLaurent({0: -1}))
    assert OperatorExpr.omega(1, 2).apply(V("10")) == V("10").scale(QLaurent({-1: 1}))
    assert OperatorExpr.psi(1, 2).apply(V("00")).is_zero()


def test_identity_and_psi_matrix():
    ident = OperatorExpr.identity(1)
    m = ident.to_matrix()
    assert m.dim == 2 and m.entry(0, 0) == QLaurent.one() and m.entry(1, 1) == QLaurent.one()
    m = OperatorExpr.psi(1, 1).to_matrix()
    assert m.cols == {1: {0: QLaurent.one()}}


def test_deformed_anticommutator_is_omega():
    p, pd = OperatorExpr.psi(1, 1), OperatorExpr.psi_dag(1, 1)
    lhs = p * pd + (pd * p).scale(QLaurent.q_power(-1))
    assert lhs.to_matrix() == OperatorExpr.omega(1, 1).to_matrix()
    lhs = p * pd + (pd * p).scale(QLaurent.q_power(1))
    assert lhs.to_matrix() == OperatorExpr.omega_inv(1, 1).to_matrix()


def test_q_commutator_examples():
    p1, p2 = OperatorExpr.psi(1, 2), OperatorExpr.psi(2, 2)
    # psi1 psi2 = -psi2 psi1, so the plain commutator doubles the product
    assert q_commutator(p1, p2).to_matrix() == (p1 * p2).scale(QLaurent.from_rational(2)).to_matrix()
    a = OperatorExpr.word(3, [("psid", 1), ("psi", 2)])
    assert q_commutator(a, a).to_matrix().is_zero()
    b = OperatorExpr.word(3, [("psid", 2), ("psi", 3)])
    rhs = OperatorExpr.word(3, [("winv", 2), ("psid", 1), ("psi", 3)])
    assert q_commutator(a, b, 1).to_matrix() == rhs.to_matrix()


@pytest.mark.parametrize("N", range(3, 7))
def test_q_commutator_hopping_identity(N):
    # [psid_i psi_{i+1}, psid_{i+1} psi_{i+2}]_q = w_{i+1}^-1 psid_i psi_{i+2}
    for i in range(1, N - 1):
        a = OperatorExpr.word(N, [("psid", i), ("psi", i + 1)])
        b = OperatorExpr.word(N, [("psid", i + 1), ("psi", i + 2)])
        rhs = OperatorExpr.word(N, [("winv", i + 1), ("psid", i), ("psi", i + 2)])
        assert q_commutator(a, b, 1).to_matrix() == rhs.to_matrix()


@pytest.mark.parametrize("N", range(1, 9))
def test_relation_suite(N):
    assert check_clifford(N)["status"] == "pass"


def test_matrix_cap():
    op = OperatorExpr.identity(5)
    with pytest.raises(ValueError):
        op.to_matrix(cap=4)
    assert op.to_matrix(cap=5).dim == 32


def test_classical_flag_rejects_omega():
    with pytest.raises(ValueError):
        OperatorExpr.word(2, [("w", 1)], classical=True)
    with pytest.raises(ValueError):
        OperatorExpr.word(2, [("psi", 1)], coeff=QLaurent.q_power(1), classical=True)


def test_length_mismatch():
    with pytest.raises(ValueError):
        OperatorExpr.psi(1, 2).apply(V("100"))


def test_pretty_printer():
    op = OperatorExpr.word(3, [("winv", 1), ("psid", 1), ("psi", 2)], coeff=QLaurent.q_power(-1))
    assert str(op) == "q^-1 w1^-1 psid1 psi2"
    assert str(OperatorExpr.zero(2)) == "0"
    two = OperatorExpr.word(2, [("psi", 1)], coeff=QLaurent.from_rational(2))
    assert str(two) == "2 psi1"
