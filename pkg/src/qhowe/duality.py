"""Partition combinatorics and the multiplicity-free grid decomposition.

Ties everything together: joint highest-weight vectors indexed by partitions
in the n x m box, Weyl dimension bookkeeping, cyclic lowering closures whose
exact ranks (at specialized q) certify the decomposition into
dim(mu) x dim(mu') blocks, and the dual Cauchy character identity as an
independent combinatorial shadow.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from .embeddings import classical_lambda, classical_rho, lambda_q, phi_q, rho_q
from .fockspace import GridShape, QVector, grid_to_linear, row_col_weights, state_to_string
from .qscalar import QLaurent
from .sparsemat import RationalEchelon

__all__ = [
    "Partition",
    "SpecializationAnomaly",
    "partitions_in_box",
    "hwv",
    "hwv_state",
    "verify_hwv",
    "weyl_dim",
    "dimension_identity",
    "cyclic_span_dims",
    "fundamental_decomp",
    "MultiPoly",
    "schur_poly",
    "dual_cauchy_check",
    "joint_kernel_count",
    "DEFAULT_SPEC_VALUES",
]

DEFAULT_SPEC_VALUES = (Fraction(2), Fraction(3))


class SpecializationAnomaly(Exception):
    """Span ranks disagreed across specialization values."""


class Partition(tuple):
    """A weakly decreasing tuple of positive parts (trailing zeros trimmed)."""

    def __new__(cls, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_string(cls, text):
        text = text.strip()
        if not text or text in ("0", "-", "empty"):
            return cls()
        return cls(int(tok) for tok in text.split(","))

    @property
    def size(self):
        return sum(self)

    def part(self, i):
        """The i-th part (one-based), zero-padded."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self):
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p >= j) for j in range(1, self[0] + 1))

    def fits_in_box(self, n, m):
        return len(self) <= n and (not self or self[0] <= m)

    def __str__(self):
        return ",".join(str(p) for p in self) if self else "-"


def partitions_in_box(n, m):
    """All partitions with at most n parts each at most m, lexicographic."""
    if n < 1 or m < 1:
        raise ValueError("box must have positive sides")
    out = []

    def grow(prefix, maximum):
        out.append(Partition(prefix))
        if len(prefix) == n:
            return
        for p in range(1, maximum + 1):
            grow(prefix + [p], p)

    grow([], m)
    out.sort()
    assert len(out) == comb(n + m, n)
    return out


def hwv_state(mu, shape):
    """Occupancy word of the Young diagram of mu in the grid (row-major fill)."""
    shape = GridShape(*shape).check()
    mu = Partition(mu)
    if not mu.fits_in_box(shape.n, shape.m):
        raise ValueError(f"{mu} does not fit in a {shape.n}x{shape.m} box")
    bits = 0
    for i, row in enumerate(mu, start=1):
        for j in range(1, row + 1):
            bits |= 1 << (grid_to_linear(shape, i, j) - 1)
    return bits


def hwv(mu, shape, flavor="quantum"):
    """The joint highest-weight vector for mu: the diagram's basis state.

    The monic bitmask state represents the class; the ordered product of row
    words differs from it by a unit scalar that normalize() recovers.  The
    flavor does not change the vector, only which action verify_hwv drives.
    """
    if flavor not in ("quantum", "classical"):
        raise ValueError(f"unknown flavor {flavor!r}")
    shape = GridShape(*shape).check()
    return QVector.basis(hwv_state(mu, shape), shape.positions)


def _scaled(vec, coeff):
    return vec.scale(coeff)


def verify_hwv(mu, shape, flavor="quantum"):
    """Check annihilation by both positive actions and the torus weights.

    Quantum: lambda_q(E_i) v = rho_q(E_j) v = 0, K-weights
    q^(mu_i - mu_{i+1}) and q^(mu'_j - mu'_{j+1}).  Classical: same shape
    with lambda/rho and Lbar-eigenvalues mu_i and mu'_j.
    """
    shape = GridShape(*shape).check()
    n, m = shape
    mu = Partition(mu)
    conj = mu.conjugate()
    vec = hwv(mu, shape, flavor)
    checks = []

    def record(relation, indices, ok):
        checks.append(
            {"relation": relation, "indices": list(indices), "status": "pass" if ok else "fail"}
        )

    if flavor == "quantum":
        for i in range(1, n):
            record("lambda_q(E) kills hwv", [i], lambda_q(n, m, "E", i).apply(vec).is_zero())
        for j in range(1, m):
            record("rho_q(E) kills hwv", [j], rho_q(n, m, "E", j).apply(vec).is_zero())
        for i in range(1, n):
            expect = _scaled(vec, QLaurent.q_power(mu.part(i) - mu.part(i + 1)))
            record("lambda_q(K) weight", [i], lambda_q(n, m, "K", i).apply(vec) == expect)
        for j in range(1, m):
            expect = _scaled(vec, QLaurent.q_power(conj.part(j) - conj.part(j + 1)))
            record("rho_q(K) weight", [j], rho_q(n, m, "K", j).apply(vec) == expect)
        for i in range(1, n + 1):
            expect = _scaled(vec, QLaurent.q_power(mu.part(i)))
            record("lambda_q(L) weight", [i], lambda_q(n, m, "L", i).apply(vec) == expect)
        for j in range(1, m + 1):
            expect = _scaled(vec, QLaurent.q_power(conj.part(j)))
            record("rho_q(L) weight", [j], rho_q(n, m, "L", j).apply(vec) == expect)
    else:
        for i in range(1, n):
            record("lambda(E) kills hwv", [i], classical_lambda(n, m, "E", i).apply(vec).is_zero())
        for j in range(1, m):
            record("rho(E) kills hwv", [j], classical_rho(n, m, "E", j).apply(vec).is_zero())
        for i in range(1, n + 1):
            expect = _scaled(vec, QLaurent.from_rational(mu.part(i)))
            record("lambda(Lbar) eigenvalue", [i], classical_lambda(n, m, "L", i).apply(vec) == expect)
        for j in range(1, m + 1):
            expect = _scaled(vec, QLaurent.from_rational(conj.part(j)))
            record("rho(Lbar) eigenvalue", [j], classical_rho(n, m, "L", j).apply(vec) == expect)

    ok = all(c["status"] == "pass" for c in checks)
    return {
        "mu": str(mu),
        "mu_conj": str(conj),
        "state": state_to_string(hwv_state(mu, shape), shape.positions),
        "flavor": flavor,
        "status": "pass" if ok else "fail",
        "checks": checks,
    }


def weyl_dim(mu, p):
    """Type-A Weyl dimension: prod_{i<j} (mu_i - mu_j + j - i) / (j - i)."""
    mu = Partition(mu)
    if len(mu) > p:
        raise ValueError(f"{mu} has more than {p} parts")
    out = Fraction(1)
    for i in range(1, p + 1):
        for j in range(i + 1, p + 1):
            out *= Fraction(mu.part(i) - mu.part(j) + j - i, j - i)
    assert out.denominator == 1
    return int(out)


def dimension_identity(n, m):
    """Per-degree Weyl-dimension sums against binomial(nm, k), totalling 2^nm."""
    sums = [0] * (n * m + 1)
    for mu in partitions_in_box(n, m):
        sums[mu.size] += weyl_dim(mu, n) * weyl_dim(mu.conjugate(), m)
    degrees = []
    ok = True
    for k, measured in enumerate(sums):
        want = comb(n * m, k)
        ok = ok and measured == want
        degrees.append({"degree": k, "sum": measured, "binomial": want})
    total = sum(sums)
    ok = ok and total == 1 << (n * m)
    return {
        "n": n,
        "m": m,
        "status": "pass" if ok else "fail",
        "total": total,
        "degrees": degrees,
    }


def _specialized_lowering_ops(n, m, value):
    """Lowering operators of both actions, specialized at q = value."""
    ops = []
    for i in range(1, n):
        ops.append(lambda_q(n, m, "F", i).to_matrix(cap=16).specialize(value))
    for j in range(1, m):
        ops.append(rho_q(n, m, "F", j).to_matrix(cap=16).specialize(value))
    return ops


def _apply_rational(op_cols, vec):
    out = {}
    for c, coeff in vec.items():
        col = op_cols.get(c)
        if not col:
            continue
        for r, v in col.items():
            s = out.get(r, 0) + v * coeff
            if s:
                out[r] = s
            else:
                out.pop(r, None)
    return out


def _span_closure(seed_state, ops, cap_dim):
    """Dimension and basis of the lowering closure of one seed state.

    Round-based: each round lowers the vectors added in the previous round;
    stops when the dimension stabilizes.  The round cap guarantees loud
    termination.
    """
    echelon = RationalEchelon()
    first = echelon.insert({seed_state: 1})
    frontier = [first]
    rounds = 0
    while frontier:
        rounds += 1
        if rounds > cap_dim + 1:
            raise RuntimeError("lowering closure failed to stabilize within the round cap")
        fresh = []
        for vec in frontier:
            for op in ops:
                image = _apply_rational(op, vec)
                if not image:
                    continue
                added = echelon.insert(image)
                if added is not None:
                    fresh.append(added)
        frontier = fresh
    return echelon


def cyclic_span_dims(n, m, spec_values=DEFAULT_SPEC_VALUES):
    """Certify the decomposition by exact rank computation at specialized q.

    For each partition in the box, closes its highest-weight state under all
    lowering operators of both actions (coefficients specialized at each
    value), measures the span by exact rational Gaussian elimination, and
    checks the dimensions against Weyl products, their sum against 2^(nm),
    and the joint span against the full space.  Disagreement between
    specialization values raises :class:`SpecializationAnomaly`.
    """
    shape = GridShape(n, m).check()
    if shape.positions > 16:
        raise ValueError("span computation capped at 16 grid positions")
    spec_values = tuple(Fraction(v) for v in spec_values)
    if not spec_values:
        raise ValueError("need at least one specialization value")
    for v in spec_values:
        if v == 0 or v == 1 or v == -1:
            raise ValueError(f"specialization value {v} is degenerate")

    partitions = partitions_in_box(n, m)
    per_value = []
    for value in spec_values:
        ops = _specialized_lowering_ops(n, m, value)
        global_echelon = RationalEchelon()
        dims = []
        for mu in partitions:
            expected = weyl_dim(mu, n) * weyl_dim(mu.conjugate(), m)
            closure = _span_closure(hwv_state(mu, shape), ops, expected)
            dims.append(closure.rank)
            for vec in closure.pivots.values():
                global_echelon.insert(vec)
        per_value.append({"value": value, "dims": dims, "joint_rank": global_echelon.rank})

    base = per_value[0]
    for other in per_value[1:]:
        if other["dims"] != base["dims"] or other["joint_rank"] != base["joint_rank"]:
            raise SpecializationAnomaly(
                f"span ranks differ between q={base['value']} and q={other['value']}: "
                f"{base['dims']} vs {other['dims']}"
            )

    total_dim = 1 << shape.positions
    rows = []
    degree_sums = [0] * (shape.positions + 1)
    all_ok = True
    for mu, measured in zip(partitions, base["dims"]):
        dim_n = weyl_dim(mu, n)
        dim_m = weyl_dim(mu.conjugate(), m)
        ok = measured == dim_n * dim_m
        hw_report = verify_hwv(mu, shape, "quantum")
        all_ok = all_ok and ok and hw_report["status"] == "pass"
        degree_sums[mu.size] += measured
        rows.append(
            {
                "mu": str(mu),
                "mu_conj": str(mu.conjugate()),
                "dim_n": dim_n,
                "dim_m": dim_m,
                "span_dim": measured,
                "hwv_state": state_to_string(hwv_state(mu, shape), shape.positions),
                "checks": {
                    "span_matches_weyl_product": ok,
                    "hwv": hw_report["status"],
                },
            }
        )
    degree_profile = []
    for k, s in enumerate(degree_sums):
        want = comb(shape.positions, k)
        all_ok = all_ok and s == want
        degree_profile.append({"degree": k, "sum": s, "binomial": want})
    total = sum(base["dims"])
    all_ok = all_ok and total == total_dim and base["joint_rank"] == total_dim
    return {
        "n": n,
        "m": m,
        "spec_values": [str(v) for v in spec_values],
        "partitions": rows,
        "total": total,
        "space_dim": total_dim,
        "joint_rank": base["joint_rank"],
        "degree_profile": degree_profile,
        "status": "pass" if all_ok else "fail",
    }


def fundamental_decomp(n):
    """Highest-weight states of the rank-n exterior module, one per degree.

    The n+1 full-prefix states are annihilated by every raising operator and
    the degree-j graded component has dimension binomial(n, j).
    """
    checks = []
    for j in range(n + 1):
        bits = (1 << j) - 1
        vec = QVector.basis(bits, n)
        ok = all(phi_q(n, "E", i).apply(vec).is_zero() for i in range(1, n))
        checks.append(
            {
                "degree": j,
                "state": state_to_string(bits, n),
                "annihilated": ok,
                "graded_dim": comb(n, j),
            }
        )
    counts = [0] * (n + 1)
    for bits in range(1 << n):
        counts[bits.bit_count()] += 1
    dims_ok = all(counts[j] == comb(n, j) for j in range(n + 1))
    ok = dims_ok and all(c["annihilated"] for c in checks)
    return {"n": n, "status": "pass" if ok else "fail", "checks": checks}


# -- characters -----------------------------------------------------------------


class MultiPoly:
    """Sparse multivariate polynomial: exponent tuple -> exact coefficient."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for exps, c in terms.items():
                if len(exps) != nvars:
                    raise ValueError("exponent tuple has wrong arity")
                if c:
                    self.terms[tuple(exps)] = c

    @classmethod
    def one(cls, nvars):
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, nvars, exps, coeff=1):
        return cls(nvars, {tuple(exps): coeff})

    def __add__(self, other):
        if self.nvars != other.nvars:
            raise ValueError("arity mismatch")
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        p = MultiPoly(self.nvars)
        p.terms = out
        return p

    def __mul__(self, other):
        if self.nvars != other.nvars:
            raise ValueError("arity mismatch")
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(key, 0) + ca * cb
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        p = MultiPoly(self.nvars)
        p.terms = out
        return p

    def __eq__(self, other):
        return isinstance(other, MultiPoly) and self.nvars == other.nvars and self.terms == other.terms

    def embed(self, total, offset):
        """View in a larger variable ring, shifting variables by offset."""
        out = MultiPoly(total)
        for e, c in self.terms.items():
            key = (0,) * offset + e + (0,) * (total - offset - self.nvars)
            out.terms[key] = c
        return out


def _ssyt_fill(shape, p):
    """Yield all semistandard fillings of the given row lengths with 1..p."""
    rows = [list(row) for row in ([0] * r for r in shape)]
    cells = [(i, j) for i, r in enumerate(shape) for j in range(r)]

    def backtrack(pos):
        if pos == len(cells):
            yield rows
            return
        i, j = cells[pos]
        lo = 1
        if j > 0:
            lo = max(lo, rows[i][j - 1])  # weakly increasing along rows
        if i > 0:
            lo = max(lo, rows[i - 1][j] + 1)  # strictly increasing down columns
        for val in range(lo, p + 1):
            rows[i][j] = val
            yield from backtrack(pos + 1)
        rows[i][j] = 0

    yield from backtrack(0)


def schur_poly(mu, p):
    """Schur polynomial in p variables: sum of SSYT content monomials."""
    mu = Partition(mu)
    if len(mu) > p:
        return MultiPoly(p)  # no column-strict filling exists
    out = MultiPoly(p)
    for rows in _ssyt_fill(tuple(mu), p):
        exps = [0] * p
        for row in rows:
            for val in row:
                exps[val - 1] += 1
        key = tuple(exps)
        out.terms[key] = out.terms.get(key, 0) + 1
    return out


def dual_cauchy_check(n, m):
    """The three-way character identity on n + m variables.

    prod (1 + a_i b_j) equals both the conjugate-paired Schur sum over the
    box and the joint weight generating function of the basis states.
    """
    if n > 4 or m > 4:
        raise ValueError("character expansion capped at n, m <= 4")
    nv = n + m
    product = MultiPoly.one(nv)
    for i in range(n):
        for j in range(m):
            exps = [0] * nv
            exps[i] = 1
            exps[n + j] = 1
            product = product * (MultiPoly.one(nv) + MultiPoly.monomial(nv, exps))

    schur_sum = MultiPoly(nv)
    for mu in partitions_in_box(n, m):
        left = schur_poly(mu, n).embed(nv, 0)
        right = schur_poly(mu.conjugate(), m).embed(nv, n)
        schur_sum = schur_sum + left * right

    weights = MultiPoly(nv)
    shape = GridShape(n, m)
    for bits in range(1 << (n * m)):
        rows, cols = row_col_weights(shape, bits)
        key = rows + cols
        weights.terms[key] = weights.terms.get(key, 0) + 1

    ok_schur = product == schur_sum
    ok_weights = product == weights
    return {
        "n": n,
        "m": m,
        "status": "pass" if ok_schur and ok_weights else "fail",
        "product_equals_schur_sum": ok_schur,
        "product_equals_weight_enumeration": ok_weights,
        "monomials": len(product.terms),
    }


def joint_kernel_count(n, m, value=Fraction(2)):
    """Joint kernel dimension of all raising operators at specialized q.

    Works weight space by weight space (states bucketed by joint row/column
    degrees) and adds up kernel dimensions; multiplicity-freeness predicts
    binomial(n + m, n).
    """
    shape = GridShape(n, m).check()
    value = Fraction(value)
    ops = []
    for i in range(1, n):
        ops.append(lambda_q(n, m, "E", i).to_matrix(cap=16).specialize(value))
    for j in range(1, m):
        ops.append(rho_q(n, m, "E", j).to_matrix(cap=16).specialize(value))

    buckets = {}
    for bits in range(1 << shape.positions):
        rows, cols = row_col_weights(shape, bits)
        buckets.setdefault(rows + cols, []).append(bits)

    total = 0
    for states in buckets.values():
        echelon = RationalEchelon()
        rank = 0
        for s in states:
            image = {}
            for t, op in enumerate(ops):
                col = op.get(s)
                if col:
                    for r, v in col.items():
                        image[(t, r)] = v
            if echelon.insert(image) is not None:
                rank += 1
        total += len(states) - rank
    return total
