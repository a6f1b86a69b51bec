import pytest

from qhowe.qgroup import (
    DELTA,
    DELTA_TILDE,
    Representation,
    cartan_matrix,
    check_relations,
    check_serre,
    coproduct_rep,
    natural_rep,
)
from qhowe.sparsemat import SparseMatrix
from qhowe.qscalar import QLaurent


def test_cartan_matrix():
    assert cartan_matrix(4) == ((2, -1, 0), (-1, 2, -1), (0, -1, 2))
    assert cartan_matrix(2) == ((2,),)
    assert cartan_matrix(1) == ()


def basis_vec(rep, j):
    """Column vector e_j (1-based) as a sparse dict."""
    return {j - 1: QLaurent.one()}


def test_natural_rep_examples():
    rep = natural_rep(2)
    assert rep.E(1).apply_terms(basis_vec(rep, 2)) == {0: QLaurent.one()}
    assert rep.F(1).apply_terms(basis_vec(rep, 1)) == {1: QLaurent.one()}
    rep = natural_rep(3)
    assert rep.L(2).apply_terms(basis_vec(rep, 2)) == {1: QLaurent.q_power(1)}
    assert rep.L(2).apply_terms(basis_vec(rep, 1)) == {0: QLaurent.one()}


@pytest.mark.parametrize("p", range(1, 7))
def test_natural_rep_passes_suites(p):
    rep = natural_rep(p)
    assert check_relations(rep)["status"] == "pass"
    assert check_serre(rep)["status"] == "pass"


def test_corrupted_rep_fails_with_witness():
    rep = natural_rep(3)
    rep.mats[("E", 1)] = SparseMatrix(3)
    report = check_relations(rep)
    assert report["status"] == "fail"
    failures = [c for c in report["checks"] if c["status"] == "fail"]
    assert any(c["relation"].startswith("[E,F]") and "witness" in c for c in failures)


class TestCoproduct:
    def test_delta_E_example(self):
        rep = coproduct_rep([natural_rep(2), natural_rep(2)], DELTA)
        # v_1 (x) v_2 is index 0*2 + 1 = 1; E_1 sends it to v_1 (x) v_1
        out = rep.E(1).apply_terms({1: QLaurent.one()})
        assert out == {0: QLaurent.one()}

    def test_delta_L_grouplike(self):
        rep = coproduct_rep([natural_rep(2), natural_rep(2)], DELTA)
        out = rep.L(1).apply_terms({0: QLaurent.one()})
        assert out == {0: QLaurent.q_power(2)}

    def test_delta_tilde_E_example(self):
        rep = coproduct_rep([natural_rep(2), natural_rep(2)], DELTA_TILDE)
        # derived termwise: E (x) 1 + K (x) E on v_2 (x) v_2, with K v_2 = q^-1 v_2
        out = rep.E(1).apply_terms({3: QLaurent.one()})
        assert out == {1: QLaurent.one(), 2: QLaurent.q_power(-1)}

    @pytest.mark.parametrize("convention", [DELTA, DELTA_TILDE])
    @pytest.mark.parametrize("p", [2, 3])
    @pytest.mark.parametrize("copies", [2, 3])
    def test_tensor_reps_pass_suites(self, convention, p, copies):
        rep = coproduct_rep([natural_rep(p)] * copies, convention)
        assert check_relations(rep)["status"] == "pass"
        assert check_serre(rep)["status"] == "pass"

    @pytest.mark.parametrize("convention", [DELTA, DELTA_TILDE])
    @pytest.mark.parametrize("p", [2, 3])
    def test_coassociativity(self, convention, p):
        one = natural_rep(p)
        left = coproduct_rep([coproduct_rep([one, one], convention), one], convention)
        right = coproduct_rep([one, coproduct_rep([one, one], convention)], convention)
        flat = coproduct_rep([one, one, one], convention)
        for (gen, a), (_, b), (_, c) in zip(
            left.generator_items(), right.generator_items(), flat.generator_items()
        ):
            assert a == b == c, gen

    def test_rank_mismatch(self):
        with pytest.raises(ValueError):
            coproduct_rep([natural_rep(2), natural_rep(3)])


def test_missing_generator_rejected():
    rep = natural_rep(2)
    mats = dict(rep.mats)
    del mats[("E", 1)]
    with pytest.raises(ValueError):
        Representation(2, 2, mats)


def test_report_shape():
    report = check_relations(natural_rep(2))
    assert set(report) == {"status", "checks"}
    for entry in report["checks"]:
        assert {"relation", "indices", "status"} <= set(entry)
