"""Command-line front end: counting, verification sweeps, Q-fitting, SVG
rendering, and determinant-kernel benchmarks.

Output is machine readable: JSON Lines for counts, one JSON report per
verification run, CSV for benchmarks.  Big integers are emitted as decimal
strings.  Exit codes: 0 all good, 1 usage error, 2 mathematical disagreement.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import formulas, lgv, oracle, qfit, schur
from .detkernel import det_bareiss, det_modular
from .formulas import OutOfValidityError
from .hexmodel import EVEN, ODD, HexSpec

USAGE_ERROR = 1
DISAGREEMENT = 2


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad flags; the contract reserves 2 for math."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _workers() -> int:
    return max(1, int(os.environ.get("HEXATILE_THREADS", "1") or 1))


def _sweep(points, fn):
    """(cases, failures) for fn over points; deterministic order, optional fan-out."""
    workers = _workers()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            flags = list(pool.map(fn, points))
    else:
        flags = [fn(q) for q in points]
    failures = [list(q) for q, ok in zip(points, flags) if not ok]
    return len(points), failures


def _spec_dict(spec: HexSpec) -> dict:
    return {
        "a": spec.a, "b": spec.b, "c": spec.c, "d": spec.d, "p": spec.p,
        "parity": spec.parity,
    }


def _signed_for(spec: HexSpec) -> lgv.SignedCount:
    if spec.parity == EVEN:
        return lgv.even_count(spec.a, spec.b, spec.c, spec.d, spec.p)
    return lgv.odd_count(spec.a, spec.b, spec.c, spec.d, spec.p)


def _formula_value(name: str, spec: HexSpec) -> int:
    a, b, c, d, p = spec.a, spec.b, spec.c, spec.d, spec.p
    if name == "macmahon":
        if d != 0:
            raise OutOfValidityError("formula:macmahon needs d = 0")
        return formulas.macmahon(a, b, c)
    if name == "byun_even":
        if spec.parity != EVEN or a != 2 * p:
            raise OutOfValidityError("formula:byun_even needs even parity and a = 2p")
        return formulas.byun_even(p, b, c, d)
    if name == "byun_odd":
        if spec.parity != ODD or a != 2 * p + 1:
            raise OutOfValidityError("formula:byun_odd needs odd parity and a = 2p+1")
        return formulas.byun_odd(p, b, c, d)
    if name == "byun_odd_corrected":
        if spec.parity != ODD or a != 2 * p + 1:
            raise OutOfValidityError(
                "formula:byun_odd_corrected needs odd parity and a = 2p+1"
            )
        return (-1) ** d * formulas.byun_odd_corrected(p, b, c, d)
    if name == "p1md":
        if spec.parity != EVEN or p != 1 - d:
            raise OutOfValidityError("formula:p1md needs even parity and p = 1-d")
        return formulas.p_one_minus_d_simple(a, b, c, d)
    if name == "d1":
        if spec.parity != EVEN or d != 1 or p != 0:
            raise OutOfValidityError("formula:d1 needs even parity, d = 1, p = 0")
        return formulas.d1_corollary(a, b, c)
    if name == "reflection":
        if spec.parity != EVEN or a != 1:
            raise OutOfValidityError("formula:reflection needs even parity and a = 1")
        return formulas.count_a1_reflection(b, c, d, p)
    raise OutOfValidityError(
        f"unknown formula {name!r}; known: macmahon, byun_even, byun_odd, "
        "byun_odd_corrected, p1md, d1, reflection"
    )


def _run_method(method: str, spec: HexSpec):
    """(value, sign) for one counting method."""
    if method == "det":
        sc = _signed_for(spec)
        return sc.value, sc.sign
    if method == "modular":
        val = det_modular(lgv.build_matrix(spec))
        return val, (0 if val == 0 else (1 if val > 0 else -1))
    if method == "condense":
        if spec.parity != EVEN:
            raise OutOfValidityError("condense counts even intrusions only")
        val = lgv.even_count_by_condensation(spec.a, spec.b, spec.c, spec.d, spec.p)
        return val, (0 if val == 0 else (1 if val > 0 else -1))
    if method == "oracle":
        val = oracle.signed_count(spec)
        return val, (0 if val == 0 else (1 if val > 0 else -1))
    if method.startswith("formula:"):
        val = _formula_value(method.split(":", 1)[1], spec)
        return val, (0 if val == 0 else (1 if val > 0 else -1))
    raise OutOfValidityError(f"unknown method {method!r}")


def cmd_count(args) -> int:
    spec = HexSpec(args.a, args.b, args.c, args.d, args.p, args.parity)
    methods = args.method or ["det"]
    magnitudes = []
    for method in methods:
        t0 = time.perf_counter()
        try:
            value, sign = _run_method(method, spec)
        except (OutOfValidityError, ValueError, oracle.CapExceededError) as exc:
            print(f"count: {exc}", file=sys.stderr)
            return USAGE_ERROR
        elapsed = (time.perf_counter() - t0) * 1000.0
        magnitudes.append(abs(value))
        print(json.dumps({
            "spec": _spec_dict(spec),
            "method": method,
            "value": str(value),
            "sign": sign,
            "matrix_dim": spec.dim,
            "elapsed_ms": round(elapsed, 3),
        }))
    if len(set(magnitudes)) > 1:
        print("count: methods disagree on the tiling count", file=sys.stderr)
        return DISAGREEMENT
    return 0


def _suite_macmahon(amax, bmax, cmax, dmax):
    pts = [(a, b, c) for a in range(amax + 1) for b in range(1, bmax + 1)
           for c in range(1, cmax + 1)]
    cases, fails = _sweep(
        pts, lambda q: lgv.even_count(q[0], q[1], q[2], 0, 0).value
        == formulas.macmahon(*q))
    return [{"name": "macmahon_product", "cases": cases, "failures": fails}]


def _suite_byun(amax, bmax, cmax, dmax):
    pts = [(p, b, c, d)
           for p in range(0, amax // 2 + 1)
           for b in range(1, bmax + 1) for c in range(1, cmax + 1)
           for d in range(1, min(b, c, dmax) + 1)]
    cases, fails = _sweep(
        pts, lambda q: formulas.byun_even(*q)
        == lgv.even_count(2 * q[0], q[1], q[2], q[3], q[0]).value)
    out = [{"name": "halved_even_product", "cases": cases, "failures": fails}]
    cases, fails = _sweep(
        pts, lambda q: (-1) ** q[3] * formulas.byun_odd_corrected(*q)
        == lgv.odd_count(2 * q[0] + 1, q[1], q[2], q[3], q[0]).value)
    out.append({"name": "halved_odd_product_corrected", "cases": cases,
                "failures": fails})

    def printed_matches(q):
        try:
            return formulas.byun_odd(*q) == abs(
                lgv.odd_count(2 * q[0] + 1, q[1], q[2], q[3], q[0]).value)
        except (OutOfValidityError, ValueError, ArithmeticError):
            return False
    cases, fails = _sweep(pts, printed_matches)
    out.append({"name": "halved_odd_product_printed", "cases": cases,
                "failures": fails, "informational": True})
    return out


def _suite_p1md(amax, bmax, cmax, dmax):
    out = []
    pts = [(a, b, c, d) for a in range(amax + 1) for b in range(1, bmax + 1)
           for c in range(1, cmax + 1) for d in range(1, dmax + 1)]

    def simple_ok(q):
        return formulas.p_one_minus_d_simple(*q) == lgv.even_count(
            q[0], q[1], q[2], q[3], 1 - q[3]).value

    def alt_ok(variant):
        def check(q):
            try:
                want = lgv.even_count(q[0], q[1], q[2], q[3], 1 - q[3]).value
                return formulas.p_one_minus_d_alt(*q, variant=variant) == want
            except OutOfValidityError:
                return True
        return check

    cases, fails = _sweep(pts, simple_ok)
    out.append({"name": "p1md_simple", "cases": cases, "failures": fails})
    cases, fails = _sweep(pts, alt_ok("sum"))
    out.append({"name": "p1md_sum", "cases": cases, "failures": fails})
    cases, fails = _sweep(pts, alt_ok("polynomial"))
    out.append({"name": "p1md_polynomial", "cases": cases, "failures": fails})
    for res in formulas.verify_identities(
            "p1d_aux,p1d_zb,sa,factorial_sum,f_recursion,f_d_recursion,f_alternative",
            amax, bmax, cmax, dmax):
        out.append({"name": res.name, "cases": res.cases, "failures": res.failures})
    return out


def _suite_d1(amax, bmax, cmax, dmax):
    pts = [(a, b, c) for a in range(amax + 1) for b in range(1, bmax + 1)
           for c in range(1, cmax + 1)]
    cases, fails = _sweep(
        pts, lambda q: formulas.d1_corollary(*q)
        == lgv.even_count(q[0], q[1], q[2], 1, 0).value)
    return [{"name": "unit_intrusion_corollary", "cases": cases, "failures": fails}]


def _suite_lu(amax, bmax, cmax, dmax):
    pts = [(a, b, c) for a in range(1, amax + 1) for b in range(1, bmax + 1)
           for c in range(1, cmax + 1)]
    cases, fails = _sweep(
        pts, lambda q: schur.verify_inverse(schur.build_bundle(*q)))
    return [{"name": "binomial_lu_inverse", "cases": cases, "failures": fails}]


def _suite_schur(amax, bmax, cmax, dmax):
    pts = [(a, b, c, d, p)
           for a in range(1, amax + 1) for b in range(1, bmax + 1)
           for c in range(1, cmax + 1) for d in range(0, dmax + 1)
           for p in range(0, a + 1)]
    cases, fails = _sweep(
        pts, lambda q: schur.count_via_F(*q) == lgv.even_count(*q).value)
    out = [{"name": "complement_block_count", "cases": cases, "failures": fails}]
    tpts = [(a, b, c, p, i, j)
            for a in range(1, min(amax, 4) + 1)
            for b in range(1, min(bmax, 4) + 1) for c in range(1, min(cmax, 4) + 1)
            for p in range(0, min(a, 2) + 1)
            for i in range(1, min(dmax, 2) + 1) for j in range(1, min(dmax, 2) + 1)]
    cases, fails = _sweep(tpts, lambda q: schur.verify_triple_sum(*q))
    out.append({"name": "inverse_entry_sums", "cases": cases, "failures": fails})
    return out


def _suite_sums(amax, bmax, cmax, dmax):
    pts = [(a, b, c, p) for a in range(1, amax + 1) for b in range(1, bmax + 1)
           for c in range(1, cmax + 1) for p in range(0, a + 1)]

    def check(q):
        try:
            return schur.verify_sum_formula(*q)
        except OutOfValidityError:
            return True
    cases, fails = _sweep(pts, check)
    return [{"name": "telescoped_double_sum", "cases": cases, "failures": fails}]


def _suite_condense(amax, bmax, cmax, dmax):
    pts = [(a, b, c, d, p)
           for a in range(2, amax + 1) for b in range(1, bmax + 1)
           for c in range(1, cmax + 1) for d in range(0, dmax + 1)
           for p in range(0, a + 1)]
    cases, fails = _sweep(pts, lambda q: lgv.verify_dodgson_even(*q))
    out = [{"name": "condensation_even", "cases": cases, "failures": fails}]
    cases, fails = _sweep(pts, lambda q: lgv.verify_dodgson_odd(*q))
    out.append({"name": "condensation_odd", "cases": cases, "failures": fails})
    return out


def _suite_symmetry(amax, bmax, cmax, dmax):
    pts = [(a, b, c, d, p)
           for a in range(amax + 1) for b in range(1, bmax + 1)
           for c in range(1, cmax + 1) for d in range(0, dmax + 1)
           for p in range(0, a + 1)]
    cases, fails = _sweep(pts, lambda q: lgv.verify_symmetry(*q))
    return [{"name": "mirror_symmetry", "cases": cases, "failures": fails}]


_SUITES = {
    "macmahon": _suite_macmahon,
    "byun": _suite_byun,
    "p1md": _suite_p1md,
    "d1": _suite_d1,
    "lu": _suite_lu,
    "schur": _suite_schur,
    "sums": _suite_sums,
    "condense": _suite_condense,
    "symmetry": _suite_symmetry,
}


def cmd_verify(args) -> int:
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    checks = []
    for name in names:
        checks.extend(_SUITES[name](args.amax, args.bmax, args.cmax, args.dmax))
    passed = all(not ch["failures"] or ch.get("informational") for ch in checks)
    print(json.dumps({
        "suite": args.suite,
        "ranges": {"amax": args.amax, "bmax": args.bmax,
                   "cmax": args.cmax, "dmax": args.dmax},
        "checks": checks,
        "passed": passed,
    }))
    return 0 if passed else DISAGREEMENT


def cmd_fit(args) -> int:
    try:
        if args.degree is None:
            degree, poly = qfit.fit_auto(args.d)
        else:
            degree, poly = args.degree, qfit.fit(args.d, args.degree)
    except (qfit.FitInconsistentError, qfit.UnderdeterminedError) as exc:
        print(f"fit: {exc}", file=sys.stderr)
        return DISAGREEMENT
    out = args.out or f"q_d{args.d}.json"
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(qfit.poly_to_json(poly, args.d))
        fh.write("\n")
    print(f"Q(d={args.d}), total degree {degree}: {poly}")
    print(f"wrote {out}")
    return 0


def cmd_render(args) -> int:
    spec = HexSpec(args.a, args.b, args.c, args.d, args.p, args.parity)
    family = None
    if args.with_tiling:
        try:
            family = oracle.first_tiling(spec)
        except (oracle.CapExceededError, ValueError) as exc:
            print(f"render: {exc}", file=sys.stderr)
            return USAGE_ERROR
        if family is None:
            print("render: spec admits no tiling", file=sys.stderr)
            return DISAGREEMENT
    out = args.out or "hexagon_a{}b{}c{}d{}p{}_{}.svg".format(
        args.a, args.b, args.c, args.d, args.p, args.parity)
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(oracle.render_svg(spec, family))
    print(f"wrote {out}")
    return 0


def cmd_bench(args) -> int:
    dims = [int(tok) for tok in args.dims.split(",") if tok]
    kernels = ["bareiss", "modular"] if args.kernel == "both" else [args.kernel]
    rows = ["dim,kernel,elapsed_ms,result_digits"]
    for n in dims:
        matrix = lgv.build_matrix(HexSpec(n, n, n, 0, 0))
        values = {}
        for kernel in kernels:
            fn = det_bareiss if kernel == "bareiss" else det_modular
            t0 = time.perf_counter()
            values[kernel] = fn(matrix)
            elapsed = (time.perf_counter() - t0) * 1000.0
            rows.append(f"{n},{kernel},{elapsed:.3f},{len(str(abs(values[kernel])))}")
        if len(set(values.values())) > 1:
            print(f"bench: kernels disagree at dim {n}", file=sys.stderr)
            return DISAGREEMENT
        if next(iter(values.values())) != formulas.macmahon(n, n, n):
            print(f"bench: determinant disagrees with the boxed product at dim {n}",
                  file=sys.stderr)
            return DISAGREEMENT
    text = "\n".join(rows) + "\n"
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.csv}")
    else:
        print(text, end="")
    return 0


def _add_spec_flags(sub, with_parity=True):
    sub.add_argument("--a", type=int, required=True)
    sub.add_argument("--b", type=int, required=True)
    sub.add_argument("--c", type=int, required=True)
    sub.add_argument("--d", type=int, default=0)
    sub.add_argument("--p", type=int, default=0)
    if with_parity:
        sub.add_argument("--parity", choices=[EVEN, ODD], default=EVEN)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hexatile",
                     description="Tiling counts of hexagons with an intrusion")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("count", help="count tilings by one or more methods")
    _add_spec_flags(sub)
    sub.add_argument("--method", action="append",
                     help="det | modular | condense | oracle | formula:<name> "
                          "(repeatable; default det)")
    sub.set_defaults(fn=cmd_count)

    sub = subs.add_parser("verify", help="run an identity sweep suite")
    sub.add_argument("suite", choices=sorted(_SUITES) + ["all"])
    sub.add_argument("--amax", type=int, default=4)
    sub.add_argument("--bmax", type=int, default=5)
    sub.add_argument("--cmax", type=int, default=5)
    sub.add_argument("--dmax", type=int, default=3)
    sub.set_defaults(fn=cmd_verify)

    sub = subs.add_parser("fit", help="interpolate the residual polynomial factor")
    sub.add_argument("--d", type=int, required=True)
    sub.add_argument("--degree", type=int, default=None)
    sub.add_argument("--out", default=None)
    sub.set_defaults(fn=cmd_fit)

    sub = subs.add_parser("render", help="write an SVG picture of a spec")
    _add_spec_flags(sub)
    sub.add_argument("--with-tiling", action="store_true")
    sub.add_argument("--out", default=None)
    sub.set_defaults(fn=cmd_render)

    sub = subs.add_parser("bench", help="time the determinant kernels")
    sub.add_argument("--dims", default="10,20,30,40")
    sub.add_argument("--kernel", choices=["bareiss", "modular", "both"],
                     default="both")
    sub.add_argument("--csv", default=None)
    sub.set_defaults(fn=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ValueError as exc:
        print(f"hexatile: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
