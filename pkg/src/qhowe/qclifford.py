"""Quantum Clifford generators acting on the occupancy-word module.

Generators on N positions:

* ``psi_k``   annihilates position k with sign (-1)^(occupied before k),
* ``psid_k``  creates position k with the same sign rule,
* ``w_k``     diagonal, scales a state by q^(-l_k)  (inverse: q^(+l_k)).

Operator expressions are scalar-weighted words in these generators.  Words
apply right to left, matching the usual composition convention for displayed
products.  Identities between operators are decided at the matrix level: the
module is not a faithful representation of the abstract algebra, so only
matrix equalities are decidable here.
"""

from __future__ import annotations

from typing import NamedTuple

from .fockspace import QVector
from .qscalar import QLaurent
from .sparsemat import SparseMatrix

__all__ = [
    "PSI",
    "PSI_DAG",
    "OMEGA",
    "OMEGA_INV",
    "CliffordGen",
    "OperatorExpr",
    "q_commutator",
    "check_clifford",
    "DEFAULT_MATRIX_CAP",
]

PSI = "psi"
PSI_DAG = "psid"
OMEGA = "w"
OMEGA_INV = "winv"

_KINDS = (PSI, PSI_DAG, OMEGA, OMEGA_INV)

# 2^16 columns of exact arithmetic is the sane desk-scale ceiling.
DEFAULT_MATRIX_CAP = 16


class CliffordGen(NamedTuple):
    kind: str
    index: int

    def __str__(self):
        if self.kind == PSI:
            return f"psi{self.index}"
        if self.kind == PSI_DAG:
            return f"psid{self.index}"
        if self.kind == OMEGA:
            return f"w{self.index}"
        return f"w{self.index}^-1"


def _check_gen(gen, length, classical):
    if gen.kind not in _KINDS:
        raise ValueError(f"unknown generator kind {gen.kind!r}")
    if not 1 <= gen.index <= length:
        raise ValueError(f"generator index {gen.index} outside 1..{length}")
    if classical and gen.kind in (OMEGA, OMEGA_INV):
        raise ValueError("classical operators may not contain w generators")


class OperatorExpr:
    """A formal sum of scalar-weighted generator words on N positions.

    ``terms`` is a list of (QLaurent coefficient, word tuple).  The classical
    flag forbids w generators and restricts coefficients to constants (the
    q = 1 picture).
    """

    __slots__ = ("length", "terms", "classical")

    def __init__(self, length, terms, classical=False):
        self.length = length
        self.classical = classical
        cleaned = []
        for coeff, word in terms:
            if not isinstance(coeff, QLaurent):
                coeff = QLaurent.from_rational(coeff)
            if not coeff:
                continue
            word = tuple(
                g if isinstance(g, CliffordGen) else CliffordGen(*g) for g in word
            )
            for gen in word:
                _check_gen(gen, length, classical)
            if classical and coeff.constant_value() is None:
                raise ValueError("classical operators need constant coefficients")
            cleaned.append((coeff, word))
        self.terms = cleaned

    @classmethod
    def _raw(cls, length, terms, classical=False):
        obj = cls.__new__(cls)
        obj.length = length
        obj.terms = terms
        obj.classical = classical
        return obj

    # -- convenient constructors --------------------------------------------

    @classmethod
    def identity(cls, length, classical=False):
        return cls._raw(length, [(QLaurent.one(), ())], classical)

    @classmethod
    def zero(cls, length, classical=False):
        return cls._raw(length, [], classical)

    @classmethod
    def word(cls, length, gens, coeff=None, classical=False):
        coeff = QLaurent.one() if coeff is None else coeff
        return cls(length, [(coeff, tuple(gens))], classical)

    @classmethod
    def psi(cls, k, length, classical=False):
        return cls.word(length, [CliffordGen(PSI, k)], classical=classical)

    @classmethod
    def psi_dag(cls, k, length, classical=False):
        return cls.word(length, [CliffordGen(PSI_DAG, k)], classical=classical)

    @classmethod
    def omega(cls, k, length):
        return cls.word(length, [CliffordGen(OMEGA, k)])

    @classmethod
    def omega_inv(cls, k, length):
        return cls.word(length, [CliffordGen(OMEGA_INV, k)])

    # -- algebra --------------------------------------------------------------

    def _check_space(self, other):
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} vs {other.length}")

    def __add__(self, other):
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        self._check_space(other)
        return OperatorExpr._raw(
            self.length, self.terms + other.terms, self.classical and other.classical
        )

    def __neg__(self):
        return OperatorExpr._raw(
            self.length, [(-c, w) for c, w in self.terms], self.classical
        )

    def __sub__(self, other):
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        """Composition: (self * other) acts by other first."""
        if not isinstance(other, OperatorExpr):
            return NotImplemented
        self._check_space(other)
        terms = [
            (ca * cb, wa + wb) for ca, wa in self.terms for cb, wb in other.terms
        ]
        return OperatorExpr._raw(self.length, terms, self.classical and other.classical)

    def scale(self, coeff):
        if not isinstance(coeff, QLaurent):
            coeff = QLaurent.from_rational(coeff)
        if not coeff:
            return OperatorExpr.zero(self.length, self.classical)
        return OperatorExpr._raw(
            self.length, [(c * coeff, w) for c, w in self.terms], self.classical
        )

    # -- action ----------------------------------------------------------------

    def apply(self, vec):
        """Apply to a QVector; linear, words right-to-left."""
        if vec.length != self.length:
            raise ValueError(f"length mismatch: {self.length} vs {vec.length}")
        out = {}
        for coeff, word in self.terms:
            for state, value in vec.entries.items():
                bits = state
                sign = 1
                qexp = 0
                dead = False
                for gen in reversed(word):
                    kind, k = gen
                    bit = 1 << (k - 1)
                    if kind == PSI:
                        if not bits & bit:
                            dead = True
                            break
                        if (bits & (bit - 1)).bit_count() & 1:
                            sign = -sign
                        bits ^= bit
                    elif kind == PSI_DAG:
                        if bits & bit:
                            dead = True
                            break
                        if (bits & (bit - 1)).bit_count() & 1:
                            sign = -sign
                        bits |= bit
                    elif kind == OMEGA:
                        if bits & bit:
                            qexp -= 1
                    else:  # OMEGA_INV
                        if bits & bit:
                            qexp += 1
                if dead:
                    continue
                scalar = coeff * value
                if qexp:
                    scalar = scalar.shift(qexp)
                if sign < 0:
                    scalar = -scalar
                prev = out.get(bits)
                scalar = scalar if prev is None else prev + scalar
                if scalar:
                    out[bits] = scalar
                else:
                    out.pop(bits, None)
        return QVector._raw(self.length, out)

    def to_matrix(self, cap=DEFAULT_MATRIX_CAP):
        """Realize as a 2^N x 2^N sparse matrix (column per basis state)."""
        if self.length > cap:
            raise ValueError(
                f"matrix for {self.length} positions exceeds the 2^{cap} cap; "
                "raise the cap explicitly if you mean it"
            )
        dim = 1 << self.length
        cols = {}
        for state in range(dim):
            col = self.apply(QVector.basis(state, self.length)).entries
            if col:
                cols[state] = col
        return SparseMatrix._raw(dim, cols)

    # -- rendering ----------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for coeff, word in self.terms:
            text = str(coeff)
            gens = " ".join(str(g) for g in word)
            if not gens:
                parts.append(text)
            elif text == "1":
                parts.append(gens)
            elif text == "-1":
                parts.append(f"-{gens}")
            else:
                if " " in text:
                    text = f"({text})"
                parts.append(f"{text} {gens}")
        return " + ".join(parts)

    def __repr__(self):
        return f"OperatorExpr({self})"


def q_commutator(a, b, k=0):
    """The formal expression a*b - q^k * b*a (k = 0: plain commutator)."""
    return a * b - (b * a).scale(QLaurent.q_power(k))


def check_clifford(N, cap=DEFAULT_MATRIX_CAP):
    """Exhaustive operator-level checks of the generator relations on N positions.

    Canonical anticommutation among the psi and psid, {psi_a, psid_a} = id,
    the deformed relations psi psid + q^{+-1} psid psi = w^{-+1}, and the
    sign rule of the classical (q = 1) action.
    """
    checks = []

    def record(relation, indices, ok):
        checks.append(
            {"relation": relation, "indices": list(indices), "status": "pass" if ok else "fail"}
        )

    zero = SparseMatrix(1 << N)
    ident = SparseMatrix.identity(1 << N)
    psi = [None] + [OperatorExpr.psi(k, N) for k in range(1, N + 1)]
    psid = [None] + [OperatorExpr.psi_dag(k, N) for k in range(1, N + 1)]
    psi_m = [None] + [psi[k].to_matrix(cap) for k in range(1, N + 1)]
    psid_m = [None] + [psid[k].to_matrix(cap) for k in range(1, N + 1)]

    for i in range(1, N + 1):
        for j in range(i, N + 1):
            anti = psi_m[i] * psi_m[j] + psi_m[j] * psi_m[i]
            record("psi psi anticommute", [i, j], anti == zero)
            anti = psid_m[i] * psid_m[j] + psid_m[j] * psid_m[i]
            record("psid psid anticommute", [i, j], anti == zero)
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            mixed = psi_m[i] * psid_m[j] + psid_m[j] * psi_m[i]
            record("{psi_i, psid_j}", [i, j], mixed == (ident if i == j else zero))

    q1 = QLaurent.q_power(1)
    qm1 = QLaurent.q_power(-1)
    for a in range(1, N + 1):
        w = OperatorExpr.omega(a, N).to_matrix(cap)
        winv = OperatorExpr.omega_inv(a, N).to_matrix(cap)
        lhs = psi_m[a] * psid_m[a] + (psid_m[a] * psi_m[a]).scale(q1)
        record("psi psid + q psid psi = w^-1", [a], lhs == winv)
        lhs = psi_m[a] * psid_m[a] + (psid_m[a] * psi_m[a]).scale(qm1)
        record("psi psid + q^-1 psid psi = w", [a], lhs == w)

    # classical flag: same signed lowering/raising action, verified against
    # an independent prefix-parity computation
    from .fockspace import prefix_parity, QVector

    sign_ok = True
    for k in range(1, N + 1):
        cl = OperatorExpr.psi(k, N, classical=True)
        cl_dag = OperatorExpr.psi_dag(k, N, classical=True)
        bit = 1 << (k - 1)
        for state in range(1 << N):
            v = QVector.basis(state, N)
            sign = QLaurent.from_rational((-1) ** prefix_parity(state, k))
            got = cl.apply(v)
            want = (
                QVector(N, {state ^ bit: sign}) if state & bit else QVector.zero(N)
            )
            sign_ok = sign_ok and got == want
            got = cl_dag.apply(v)
            want = (
                QVector.zero(N) if state & bit else QVector(N, {state | bit: sign})
            )
            sign_ok = sign_ok and got == want
    record("classical sign rule", [], sign_ok)

    ok = all(c["status"] == "pass" for c in checks)
    return {"positions": N, "status": "pass" if ok else "fail", "checks": checks}
