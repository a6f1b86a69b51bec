"""Type-A quantum group presentations, representations, relation checks.

A :class:`Representation` assigns sparse matrices to the generators E_i, F_i
(i < p) and L_i, L_i^{-1} (i <= p) of the rank-p general linear quantum
group; K_i is always realized as L_i L_{i+1}^{-1}.  ``check_relations`` and
``check_serre`` verify the full defining relation set as exact matrix
identities and report per-relation pass/fail with a witness basis state on
failure.
"""

from __future__ import annotations

from typing import NamedTuple

from .qscalar import QLaurent, exact_div, q_int, NonExactDivision
from .sparsemat import SparseMatrix

__all__ = [
    "QGroupGen",
    "cartan_matrix",
    "Representation",
    "natural_rep",
    "coproduct_rep",
    "check_relations",
    "check_serre",
    "DELTA",
    "DELTA_TILDE",
]

DELTA = "delta"
DELTA_TILDE = "delta-tilde"


class QGroupGen(NamedTuple):
    """A generator symbol: kind in {E, F, K, Kinv, L, Linv}, one-based index."""

    kind: str
    index: int

    def __str__(self):
        suffix = {"K": "K", "Kinv": "K", "L": "L", "Linv": "L", "E": "E", "F": "F"}[self.kind]
        inv = "^-1" if self.kind in ("Kinv", "Linv") else ""
        return f"{suffix}{self.index}{inv}"


def cartan_matrix(p):
    """The (p-1) x (p-1) type-A Cartan matrix as a nested tuple."""
    r = p - 1
    return tuple(
        tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(r))
        for i in range(r)
    )


def _cartan_entry(i, j):
    if i == j:
        return 2
    return -1 if abs(i - j) == 1 else 0


class Representation:
    """Generator-to-matrix assignment for a rank-p quantum group action."""

    def __init__(self, rank, dim, mats, state_label=None):
        self.rank = rank
        self.dim = dim
        self.mats = mats
        self._kcache = {}
        self._state_label = state_label or (lambda s: f"v{s + 1}")
        for i in range(1, rank):
            for kind in ("E", "F"):
                if (kind, i) not in mats:
                    raise ValueError(f"missing generator {kind}_{i}")
        for i in range(1, rank + 1):
            for kind in ("L", "Linv"):
                if (kind, i) not in mats:
                    raise ValueError(f"missing generator {kind}_{i}")

    def gen(self, kind, index):
        if kind in ("K", "Kinv"):
            return self.K(index) if kind == "K" else self.Kinv(index)
        return self.mats[(kind, index)]

    def E(self, i):
        return self.mats[("E", i)]

    def F(self, i):
        return self.mats[("F", i)]

    def L(self, i):
        return self.mats[("L", i)]

    def Linv(self, i):
        return self.mats[("Linv", i)]

    def K(self, i):
        if ("K", i) not in self._kcache:
            self._kcache[("K", i)] = self.L(i) * self.Linv(i + 1)
        return self._kcache[("K", i)]

    def Kinv(self, i):
        if ("Kinv", i) not in self._kcache:
            self._kcache[("Kinv", i)] = self.Linv(i) * self.L(i + 1)
        return self._kcache[("Kinv", i)]

    def label(self, state):
        return self._state_label(state)

    def generator_items(self):
        """All assigned generators as (QGroupGen, matrix) pairs."""
        out = []
        for i in range(1, self.rank):
            out.append((QGroupGen("E", i), self.E(i)))
            out.append((QGroupGen("F", i), self.F(i)))
        for i in range(1, self.rank + 1):
            out.append((QGroupGen("L", i), self.L(i)))
            out.append((QGroupGen("Linv", i), self.Linv(i)))
        return out


def natural_rep(p):
    """The p-dimensional natural module: E_i v_{i+1} = v_i, F_i v_i = v_{i+1},
    L_i v_j = q^(delta_ij) v_j."""
    if p < 1:
        raise ValueError("rank must be at least 1")
    one = QLaurent.one()
    mats = {}
    for i in range(1, p):
        # columns indexed by source basis vector (0-based)
        mats[("E", i)] = SparseMatrix(p, {i: {i - 1: one}})
        mats[("F", i)] = SparseMatrix(p, {i - 1: {i: one}})
    for i in range(1, p + 1):
        diag = [QLaurent.q_power(1 if j == i - 1 else 0) for j in range(p)]
        mats[("L", i)] = SparseMatrix.diagonal(diag)
        diag_inv = [QLaurent.q_power(-1 if j == i - 1 else 0) for j in range(p)]
        mats[("Linv", i)] = SparseMatrix.diagonal(diag_inv)
    return Representation(p, p, mats)


def _pair_rep(a, b, convention):
    """Tensor product of two representations under one comultiplication."""
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")
    p = a.rank
    dim = a.dim * b.dim
    id_a = SparseMatrix.identity(a.dim)
    id_b = SparseMatrix.identity(b.dim)
    mats = {}
    for i in range(1, p):
        if convention == DELTA:
            e = a.E(i).kron(b.K(i)) + id_a.kron(b.E(i))
            f = a.F(i).kron(id_b) + a.Kinv(i).kron(b.F(i))
        elif convention == DELTA_TILDE:
            e = a.E(i).kron(id_b) + a.K(i).kron(b.E(i))
            f = a.F(i).kron(b.Kinv(i)) + id_a.kron(b.F(i))
        else:
            raise ValueError(f"unknown comultiplication {convention!r}")
        mats[("E", i)] = e
        mats[("F", i)] = f
    for i in range(1, p + 1):
        mats[("L", i)] = a.L(i).kron(b.L(i))
        mats[("Linv", i)] = a.Linv(i).kron(b.Linv(i))

    def label(state, da=a, db=b):
        return f"{da.label(state // db.dim)}(x){db.label(state % db.dim)}"

    return Representation(p, dim, mats, state_label=label)


def coproduct_rep(factors, convention=DELTA):
    """Tensor-product representation, iterated leftmost-first for 3+ factors."""
    if not factors:
        raise ValueError("need at least one factor")
    rep = factors[0]
    for nxt in factors[1:]:
        rep = _pair_rep(rep, nxt, convention)
    return rep


# -- relation verification ----------------------------------------------------


def _record(checks, relation, indices, ok, witness=None):
    entry = {"relation": relation, "indices": list(indices), "status": "pass" if ok else "fail"}
    if not ok and witness is not None:
        entry["witness"] = witness
    checks.append(entry)


def _match(rep, checks, relation, indices, lhs, rhs):
    ok = lhs == rhs
    witness = None
    if not ok:
        c = lhs.first_difference(rhs)
        witness = rep.label(c) if c is not None else "?"
    _record(checks, relation, indices, ok, witness)


def _conjugation_match(rep, checks, relation, indices, dexps, dmat, dinv, mat, a):
    """Check D M D^{-1} = q^a M.

    When D = diag(q^(e_c)) this is the integer condition e_r - e_c = a over
    the nonzero entries of M; otherwise fall back to the matrix identity.
    """
    if dexps is not None:
        for c, col in mat.cols.items():
            dc = dexps[c]
            for r in col:
                if dexps[r] - dc != a:
                    _record(checks, relation, indices, False, rep.label(c))
                    return
        _record(checks, relation, indices, True)
        return
    lhs = dmat * mat * dinv
    _match(rep, checks, relation, indices, lhs, mat.scale(QLaurent.q_power(a)))


def check_relations(rep):
    """Verify the non-Serre defining relations as exact matrix identities.

    Covers torus commutativity and invertibility, the K- and L-conjugation
    of E and F, and [E_i, F_j] = delta_ij (K_i - K_i^{-1}) / (q - q^{-1}),
    where the right side is evaluated by exact entrywise division.
    """
    p = rep.rank
    checks = []
    ident = SparseMatrix.identity(rep.dim)
    q_minus_qinv = QLaurent.q_power(1) - QLaurent.q_power(-1)
    kexps = {i: rep.K(i).monomial_diag_exponents() for i in range(1, p)}
    lexps = {i: rep.L(i).monomial_diag_exponents() for i in range(1, p + 1)}

    for i in range(1, p + 1):
        _match(rep, checks, "L L^-1 = 1", [i], rep.L(i) * rep.Linv(i), ident)
    for i in range(1, p + 1):
        for j in range(i + 1, p + 1):
            _match(rep, checks, "L commute", [i, j], rep.L(i) * rep.L(j), rep.L(j) * rep.L(i))
    for i in range(1, p):
        for j in range(i + 1, p):
            _match(rep, checks, "K commute", [i, j], rep.K(i) * rep.K(j), rep.K(j) * rep.K(i))

    for i in range(1, p):
        for j in range(1, p):
            a = _cartan_entry(i, j)
            _conjugation_match(rep, checks, "K E K^-1 = q^a E", [i, j], kexps[i],
                               rep.K(i), rep.Kinv(i), rep.E(j), a)
            _conjugation_match(rep, checks, "K F K^-1 = q^-a F", [i, j], kexps[i],
                               rep.K(i), rep.Kinv(i), rep.F(j), -a)

    # L-conjugation exponent is <eps_i, alpha_j> = delta_ij - delta_{i,j+1}
    for i in range(1, p + 1):
        for j in range(1, p):
            e = (1 if i == j else 0) - (1 if i == j + 1 else 0)
            _conjugation_match(rep, checks, "L E L^-1 = q^<eps,alpha> E", [i, j], lexps[i],
                               rep.L(i), rep.Linv(i), rep.E(j), e)
            _conjugation_match(rep, checks, "L F L^-1 = q^-<eps,alpha> F", [i, j], lexps[i],
                               rep.L(i), rep.Linv(i), rep.F(j), -e)

    for i in range(1, p):
        for j in range(1, p):
            lhs = rep.E(i).commutator(rep.F(j))
            if i != j:
                _match(rep, checks, "[E,F] = 0", [i, j], lhs, SparseMatrix(rep.dim))
                continue
            if kexps[i] is not None:
                # diag entry (q^k - q^-k)/(q - q^-1) is the signed q-integer
                target = SparseMatrix.diagonal(
                    [q_int(k) if k >= 0 else -q_int(-k) for k in kexps[i]]
                )
            else:
                diff = rep.K(i) - rep.Kinv(i)
                try:
                    target = SparseMatrix(rep.dim, {
                        c: {r: exact_div(v, q_minus_qinv) for r, v in col.items()}
                        for c, col in diff.cols.items()
                    })
                except NonExactDivision:
                    _record(checks, "[E,F] = (K-K^-1)/(q-q^-1)", [i, j], False,
                            "non-exact division in (K - K^-1)/(q - q^-1)")
                    continue
            _match(rep, checks, "[E,F] = (K-K^-1)/(q-q^-1)", [i, j], lhs, target)

    return _finish(checks)


def check_serre(rep):
    """Verify the q-Serre relations in both displayed forms.

    For |i-j| > 1 the generators commute; for |i-j| = 1 both the q-binomial
    sum X_i^2 X_j - [2]_q X_i X_j X_i + X_j X_i^2 and the nested form
    [X_i, [X_i, X_j]_q]_{q^-1} must vanish, X in {E, F}.
    """
    p = rep.rank
    checks = []
    zero = SparseMatrix(rep.dim)
    two_q = QLaurent.q_power(1) + QLaurent.q_power(-1)  # [2]_q
    q1 = QLaurent.q_power(1)
    qm1 = QLaurent.q_power(-1)

    for kind in ("E", "F"):
        for i in range(1, p):
            for j in range(1, p):
                if i == j:
                    continue
                xi = rep.gen(kind, i)
                xj = rep.gen(kind, j)
                if abs(i - j) > 1:
                    if i < j:
                        _match(rep, checks, f"[{kind},{kind}] = 0 (far)", [i, j],
                               xi * xj, xj * xi)
                    continue
                xixj = xi * xj
                xjxi = xj * xi
                lhs = xi * xixj - (xi * xjxi).scale(two_q) + xjxi * xi
                _match(rep, checks, f"{kind}-Serre (q-binomial form)", [i, j], lhs, zero)
                inner = xixj - xjxi.scale(q1)  # [X_i, X_j]_q
                nested = xi * inner - (inner * xi).scale(qm1)
                _match(rep, checks, f"{kind}-Serre (nested form)", [i, j], nested, zero)

    return _finish(checks)


def _finish(checks):
    ok = all(c["status"] == "pass" for c in checks)
    return {"status": "pass" if ok else "fail", "checks": checks}
