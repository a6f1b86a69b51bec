"""Command-line entry point: every verification plus the decomposition report.

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 usage or
configuration error.  Reports go to stdout (or --out FILE) as text or, with
--json, as canonically ordered JSON that is byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import braided_ext, braiding, duality, embeddings, qclifford, qgroup
from .fockspace import GridShape
from .qscalar import QLaurent, exact_div, q_binomial, q_int

USAGE_ERROR = 2
CHECK_FAILURE = 1


class UsageError(Exception):
    pass


def _parse_rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {text!r}") from exc


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qhowe",
        description="Exact verification of the quantum Clifford action, the "
        "commuting row/column quantum-group embeddings, and the "
        "multiplicity-free grid decomposition.",
    )
    parser.add_argument("--n", type=int, default=2, help="grid rows (default 2)")
    parser.add_argument("--m", type=int, default=2, help="grid columns (default 2)")
    parser.add_argument(
        "--spec-q",
        action="append",
        default=None,
        metavar="Q",
        help="specialization value for rank checks; repeatable (default 2 and 3)",
    )
    parser.add_argument("--cap", type=int, default=qclifford.DEFAULT_MATRIX_CAP,
                        help="matrix-size cap as a power of two exponent (default 16)")
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("--out", metavar="FILE", help="write the report to FILE")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for the randomized scalar self-checks (default 0)")

    sub = parser.add_subparsers(dest="command", required=True)
    verify = sub.add_parser("verify", help="run one verification suite")
    verify.add_argument(
        "suite",
        choices=["clifford", "qgroup", "embeddings", "commutant", "braiding", "module-algebra"],
    )
    sub.add_parser("decompose", help="multiplicity-free decomposition report")
    sub.add_parser("cauchy", help="dual Cauchy character identity")
    hwv = sub.add_parser("hwv", help="highest-weight vector for a partition")
    hwv.add_argument("--partition", required=True, metavar="a,b,c",
                     help="weakly decreasing parts, e.g. 2,1 (use '-' for empty)")
    explain = sub.add_parser("explain", help="print one generator image term by term")
    explain.add_argument("--map", required=True, dest="map_name",
                         choices=["phi_q", "theta", "lambda_q", "rho_q",
                                  "classical_lambda", "classical_rho"])
    explain.add_argument("--gen", required=True, metavar="E1",
                         help="generator symbol, e.g. E1, F2, L1, Linv1, K1")
    sub.add_parser("all", help="every check at the configured shape")
    return parser


def _config(args):
    n, m = args.n, args.m
    if n < 1 or m < 1:
        raise UsageError(f"grid shape must be positive, got {n}x{m}")
    if n * m > args.cap:
        raise UsageError(f"grid needs {n * m} positions but the cap allows {args.cap}")
    GridShape(n, m).check()
    values = tuple(_parse_rational(v) for v in (args.spec_q or ["2", "3"]))
    for v in values:
        if v in (0, 1, -1):
            raise UsageError(f"specialization value {v} is degenerate for rank checks")
    return {
        "n": n,
        "m": m,
        "spec_values": [str(v) for v in values],
        "cap": args.cap,
        "seed": args.seed,
    }, values


def _parse_gen(text):
    text = text.strip()
    for kind in ("Linv", "Kinv", "E", "F", "L", "K"):
        if text.startswith(kind) and text[len(kind):].isdigit():
            return kind, int(text[len(kind):])
    raise UsageError(f"cannot parse generator symbol {text!r}")


def _grid_diagram(bits, n, m):
    lines = []
    for i in range(1, n + 1):
        cells = []
        for j in range(1, m + 1):
            k = i + (j - 1) * n
            cells.append("#" if (bits >> (k - 1)) & 1 else ".")
        lines.append(" ".join(cells))
    return lines


# -- sections -------------------------------------------------------------------


def _scalar_section(seed):
    """Randomized ring self-checks; deterministic for a fixed seed."""
    rng = random.Random(seed)

    def rand_poly(max_terms=6):
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            terms[rng.randint(-6, 6)] = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
        return QLaurent(terms)

    ok = True
    for _ in range(50):
        a, b, c = rand_poly(), rand_poly(), rand_poly()
        ok = ok and (a + b) + c == a + (b + c)
        ok = ok and a * b == b * a
        ok = ok and a * (b + c) == a * b + a * c
        if b:
            ok = ok and exact_div(a * b, b) == a
    pascal = True
    for a in range(1, 9):
        for b in range(1, a + 1):
            left = q_binomial(a, b)
            right = q_binomial(a - 1, b - 1) * QLaurent.q_power(a - b)
            if b <= a - 1:
                right = right + q_binomial(a - 1, b) * QLaurent.q_power(-b)
            pascal = pascal and left == right
    dequant = all(q_int(k).specialize(1) == k for k in range(13))
    status = "pass" if ok and pascal and dequant else "fail"
    return {
        "section": "scalars",
        "status": status,
        "checks": [
            {"relation": "ring axioms + exact division roundtrip", "status": "pass" if ok else "fail"},
            {"relation": "q-Pascal recursion", "status": "pass" if pascal else "fail"},
            {"relation": "q-integers at q=1", "status": "pass" if dequant else "fail"},
        ],
    }


def _clifford_section(cfg):
    N = cfg["n"] * cfg["m"]
    report = qclifford.check_clifford(N, cap=cfg["cap"])
    report["section"] = "clifford"
    return report


def _qgroup_section(cfg):
    checks = []
    top = max(2, cfg["n"], cfg["m"])
    for p in range(1, top + 1):
        rep = qgroup.natural_rep(p)
        checks.append({"target": f"natural rank {p}", "relations": qgroup.check_relations(rep),
                       "serre": qgroup.check_serre(rep)})
    for p in range(1, top + 1):
        rep = embeddings.phi_rep(p, cap=cfg["cap"])
        checks.append({"target": f"exterior-module rank {p}", "relations": qgroup.check_relations(rep),
                       "serre": qgroup.check_serre(rep)})
    ok = all(c["relations"]["status"] == "pass" and c["serre"]["status"] == "pass" for c in checks)
    return {"section": "qgroup", "status": "pass" if ok else "fail", "targets": checks}


def _embeddings_section(cfg):
    n, m, cap = cfg["n"], cfg["m"], cfg["cap"]
    lam = embeddings.lambda_rep(n, m, cap=cap)
    rho = embeddings.rho_rep(n, m, cap=cap)
    parts = {
        "lambda_relations": qgroup.check_relations(lam),
        "lambda_serre": qgroup.check_serre(lam),
        "rho_relations": qgroup.check_relations(rho),
        "rho_serre": qgroup.check_serre(rho),
        "composition": embeddings.check_composition(n, m, cap=cap),
        "dequantization": embeddings.check_dequantization(n, m, cap=cap),
        "tensor_character": embeddings.check_tensor_character(n, m, cap=cap),
    }
    ok = all(part["status"] == "pass" for part in parts.values())
    return {"section": "embeddings", "status": "pass" if ok else "fail", **parts}


def _commutant_section(cfg):
    report = embeddings.check_commutant(cfg["n"], cfg["m"], cap=cfg["cap"])
    report["section"] = "commutant"
    return report


def _braiding_section(cfg):
    p = max(2, cfg["n"])
    rhat = braiding.build_rhat(p)
    sym_dim, wedge_dim = braiding.sym2q_dims(p, rhat)
    parts = {
        "hecke": braiding.check_hecke(p, rhat),
        "yang_baxter": braiding.check_yang_baxter(p, rhat),
        "intertwiner": braiding.check_intertwiner(p, rhat),
        "classical_limit": braiding.check_classical_limit(p, rhat),
    }
    ok = all(part["status"] == "pass" for part in parts.values())
    return {
        "section": "braiding",
        "rank": p,
        "status": "pass" if ok else "fail",
        "sym2q_dim": sym_dim,
        "degree2_quotient_dim": wedge_dim,
        **parts,
    }


def _module_algebra_section(cfg):
    p = max(2, cfg["n"])
    report = braided_ext.check_module_algebra(p)
    report["section"] = "module-algebra"
    return report


def _decompose_section(cfg, values):
    try:
        report = duality.cyclic_span_dims(cfg["n"], cfg["m"], values)
    except duality.SpecializationAnomaly as exc:
        return {"section": "decompose", "status": "specialization-anomaly", "detail": str(exc)}
    report["section"] = "decompose"
    report["dimension_identity"] = duality.dimension_identity(cfg["n"], cfg["m"])
    if report["dimension_identity"]["status"] != "pass":
        report["status"] = "fail"
    return report


def _cauchy_section(cfg):
    report = duality.dual_cauchy_check(cfg["n"], cfg["m"])
    report["section"] = "cauchy"
    return report


def _hwv_section(cfg, partition_text):
    try:
        mu = duality.Partition.from_string(partition_text)
    except ValueError as exc:
        raise UsageError(f"bad partition {partition_text!r}: {exc}") from exc
    shape = GridShape(cfg["n"], cfg["m"])
    if not mu.fits_in_box(shape.n, shape.m):
        raise UsageError(f"partition {mu} does not fit in a {shape.n}x{shape.m} box")
    report = duality.verify_hwv(mu, shape, "quantum")
    classical = duality.verify_hwv(mu, shape, "classical")
    bits = duality.hwv_state(mu, shape)
    return {
        "section": "hwv",
        "mu": str(mu),
        "mu_conj": str(mu.conjugate()),
        "state": report["state"],
        "grid": _grid_diagram(bits, shape.n, shape.m),
        "quantum": report,
        "classical": classical,
        "status": "pass" if report["status"] == classical["status"] == "pass" else "fail",
    }


def _explain_section(cfg, map_name, gen_text):
    kind, index = _parse_gen(gen_text)
    try:
        text = embeddings.explain(map_name, cfg["n"], cfg["m"], kind, index)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return {"section": "explain", "status": "pass", "map": map_name, "generator": gen_text,
            "terms": text}


# -- driver ----------------------------------------------------------------------


def run(args):
    cfg, values = _config(args)
    sections = []
    if args.command == "verify":
        dispatch = {
            "clifford": lambda: _clifford_section(cfg),
            "qgroup": lambda: _qgroup_section(cfg),
            "embeddings": lambda: _embeddings_section(cfg),
            "commutant": lambda: _commutant_section(cfg),
            "braiding": lambda: _braiding_section(cfg),
            "module-algebra": lambda: _module_algebra_section(cfg),
        }
        sections.append(dispatch[args.suite]())
    elif args.command == "decompose":
        sections.append(_decompose_section(cfg, values))
    elif args.command == "cauchy":
        sections.append(_cauchy_section(cfg))
    elif args.command == "hwv":
        sections.append(_hwv_section(cfg, args.partition))
    elif args.command == "explain":
        sections.append(_explain_section(cfg, args.map_name, args.gen))
    elif args.command == "all":
        sections.append(_scalar_section(cfg["seed"]))
        sections.append(_clifford_section(cfg))
        sections.append(_qgroup_section(cfg))
        sections.append(_embeddings_section(cfg))
        sections.append(_commutant_section(cfg))
        sections.append(_braiding_section(cfg))
        sections.append(_module_algebra_section(cfg))
        sections.append(_decompose_section(cfg, values))
        sections.append(_cauchy_section(cfg))
    status = "pass" if all(s["status"] == "pass" for s in sections) else "fail"
    return {"config": cfg, "command": args.command, "status": status, "sections": sections}


def _count_leaves(node):
    """Count deepest status-bearing dicts (individual checks) by outcome."""

    def walk(x):
        if isinstance(x, dict):
            passed = failed = 0
            child_has = False
            for value in x.values():
                p, f, has = walk(value)
                passed += p
                failed += f
                child_has = child_has or has
            has_status = x.get("status") in ("pass", "fail")
            if has_status and not child_has:
                if x["status"] == "pass":
                    passed += 1
                else:
                    failed += 1
            return passed, failed, has_status or child_has
        if isinstance(x, list):
            passed = failed = 0
            child_has = False
            for value in x:
                p, f, has = walk(value)
                passed += p
                failed += f
                child_has = child_has or has
            return passed, failed, child_has
        return 0, 0, False

    passed, failed, _ = walk(node)
    return passed, failed


def render_text(report):
    lines = []
    cfg = report["config"]
    lines.append(
        f"qhowe {report['command']}  n={cfg['n']} m={cfg['m']} "
        f"spec-q={','.join(cfg['spec_values'])} cap={cfg['cap']} seed={cfg['seed']}"
    )
    for section in report["sections"]:
        mark = "PASS" if section["status"] == "pass" else section["status"].upper()
        passed, failed = _count_leaves(section)
        lines.append(f"[{mark}] {section['section']}  ({passed} checks pass, {failed} fail)")
        if section["section"] == "hwv":
            lines.append(f"  mu = {section['mu']}   conjugate = {section['mu_conj']}")
            lines.append(f"  state = v({section['state']})")
            for row in section["grid"]:
                lines.append(f"    {row}")
        if section["section"] == "explain":
            lines.append(f"  {section['terms']}")
        if section["section"] == "decompose" and "partitions" in section:
            for row in section["partitions"]:
                ok = row["checks"]["span_matches_weyl_product"] and row["checks"]["hwv"] == "pass"
                lines.append(
                    f"  {'ok ' if ok else 'BAD'} mu={row['mu']:<12} mu'={row['mu_conj']:<12} "
                    f"dim {row['dim_n']}x{row['dim_m']} span={row['span_dim']} "
                    f"hwv=v({row['hwv_state']})"
                )
            lines.append(f"  total {section['total']} of {section['space_dim']}")
        if section["status"] == "fail":
            for leaf in _failed_leaves(section):
                lines.append(f"  FAIL {leaf}")
    lines.append(f"overall: {report['status']}")
    return "\n".join(lines) + "\n"


def _failed_leaves(node):
    out = []

    def walk(x, path):
        if isinstance(x, dict):
            child_has = False
            for key, value in x.items():
                child_has = walk(value, f"{path}.{key}" if path else key) or child_has
            has_status = x.get("status") in ("pass", "fail")
            if has_status and not child_has and x["status"] == "fail":
                desc = x.get("relation") or x.get("generator") or path
                extra = [
                    str(x[k]) for k in ("indices", "pair", "generator", "witness") if k in x
                ]
                out.append(f"{desc} {' '.join(extra)}".strip())
            return has_status or child_has
        if isinstance(x, list):
            child_has = False
            for i, value in enumerate(x):
                child_has = walk(value, f"{path}[{i}]") or child_has
            return child_has
        return False

    walk(node, "")
    return out


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        report = run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    if args.json:
        payload = json.dumps(report, indent=2, sort_keys=True, default=str) + "\n"
    else:
        payload = render_text(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(payload)
    else:
        sys.stdout.write(payload)
    return 0 if report["status"] == "pass" else CHECK_FAILURE


if __name__ == "__main__":
    sys.exit(main())
