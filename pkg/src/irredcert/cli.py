"""Command-line front end.

Exit codes: 0 success (certified, PASS, no disagreements), 1 negative
result (no witness, FAIL, disagreements), 2 input error, 3 oracle guard
refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .certificate import CertificateFormatError, deserialize, serialize, to_json, verify
from .criteria import AUTO, Outcome, SearchConfig, certify
from .expr import PolynomialSyntaxError, format_polynomial, parse_polynomial
from .families import Family, FamilyParameterError, FamilySpec, generate
from .oracle import Guard, OracleRefusal, kronecker_factor
from .report import Status, Theorem
from .roots import find_roots, theorem_a_validate
from .scan import SCAN_N_MAX, ScanConfig, scan, summary_json

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_REFUSED = 0, 1, 2, 3


class _InputError(Exception):
    pass


def _rational(text: str) -> Fraction:
    """num/den or an exact decimal string."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _parse_expr(text: str):
    try:
        return parse_polynomial(text).polynomial
    except PolynomialSyntaxError as e:
        raise _InputError(f"{e}\n  {text}\n  {' ' * e.position}^") from None


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _theorems(text: str) -> frozenset:
    try:
        return frozenset(Theorem(t.strip().upper()) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"theorems must be a subset of t1,t2,t3: {text!r}") from None


def _cmd_certify(args) -> int:
    f = _parse_expr(args.expr)
    explicit = [args.j, args.alpha, args.beta]
    if any(x is not None for x in explicit) and not all(x is not None for x in explicit):
        raise _InputError("--j, --alpha and --beta must be given together")
    grid = AUTO if args.j is None else ((args.j, args.alpha, args.beta),)
    try:
        cfg = SearchConfig(n_max=args.n_max, alpha_precision_bits=args.alpha_bits,
                           theorem_set=args.theorems, t2t3_grid=grid)
        res = certify(f, cfg)
    except ValueError as e:
        raise _InputError(str(e)) from None
    if res.outcome is Outcome.NOT_APPLICABLE:
        raise _InputError(f"cannot certify {format_polynomial(f)}: {res.reason}")
    cert = res.certificate
    if cert is not None and args.out:
        Path(args.out).write_bytes(serialize(cert))
    if args.json:
        _emit({
            "polynomial": format_polynomial(f),
            "outcome": res.outcome.value,
            "reason": res.reason,
            "checked_n": res.checked_n,
            "certificate": None if cert is None else to_json(cert),
        })
    elif cert is None:
        print(f"{format_polynomial(f)}: {res.outcome.value} ({res.reason})")
    else:
        w, dom = cert.arithmetic, cert.dominance
        print(f"{format_polynomial(f)}: {res.outcome.value} by {cert.theorem.value}")
        window = f"alpha = {dom.alpha}" + ("" if dom.beta is None else f", beta = {dom.beta}, j = {dom.j}")
        print(f"  {window}")
        print(f"  f({w.n}) = {'-' if w.sign < 0 else ''}{w.p}^{w.k} * {w.d}, ell = {w.ell}")
        print(verify(cert).format())
        if args.out:
            print(f"certificate written to {args.out}")
    return EXIT_OK if cert is not None else EXIT_NEGATIVE


def _cmd_verify(args) -> int:
    try:
        data = Path(args.file).read_bytes()
    except OSError as e:
        raise _InputError(str(e)) from None
    try:
        report = verify(deserialize(data))
    except CertificateFormatError as e:
        if args.json:
            _emit({"status": Status.INPUT_ERROR.value, "error": str(e)})
        else:
            print(f"malformed certificate: {e}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        _emit(report.to_dict())
    else:
        print(report.format())
        print(report.status.value)
    return {Status.PASS: EXIT_OK, Status.FAIL: EXIT_NEGATIVE}.get(report.status, EXIT_INPUT)


def _cmd_roots(args) -> int:
    f = _parse_expr(args.expr)
    if f.degree < 1:
        raise _InputError("roots needs a polynomial of degree >= 1")
    rs = find_roots(f)
    if args.json:
        _emit({
            "polynomial": format_polynomial(f),
            "converged": rs.converged,
            "iterations": rs.iterations,
            "roots": [
                {"re": float(r.real), "im": float(r.imag), "modulus": float(abs(r)), "residual": float(e)}
                for r, e in zip(rs.roots, rs.residuals)
            ],
        })
    else:
        print(f"{format_polynomial(f)}: {len(rs)} roots, converged={rs.converged} "
              f"after {rs.iterations} iterations")
        print(f"{'modulus':>22}  {'root':>44}  {'rel. residual':>13}")
        for r, e in zip(rs.roots, rs.residuals):
            print(f"{abs(r):22.15g}  {r.real:21.15g}{r.imag:+21.15g}j  {e:13.3g}")
    return EXIT_OK


def _cmd_factor(args) -> int:
    f = _parse_expr(args.expr)
    if f.is_zero():
        raise _InputError("cannot factor the zero polynomial")
    try:
        res = kronecker_factor(f, Guard(max_degree=args.max_degree))
    except OracleRefusal as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_REFUSED
    if args.json:
        _emit({
            "polynomial": format_polynomial(f),
            "content": str(res.content),
            "factors": [{"factor": [str(a) for a in g.coeffs], "text": format_polynomial(g),
                         "multiplicity": e} for g, e in res.factors],
            "irreducible": res.is_irreducible and res.content in (1, -1),
        })
    else:
        print(f"content {res.content}")
        for g, e in res.factors:
            print(f"  ({format_polynomial(g)})" + (f"^{e}" if e > 1 else ""))
    return EXIT_OK


def _cmd_gen(args) -> int:
    params = {k: v for k, v in (("p", args.p), ("m", args.m), ("ell", args.ell), ("k", args.k),
                                ("j", args.j), ("d", args.d)) if v is not None}
    if args.family != Family.THEOREM_A.value:
        params["sign"] = args.sign
    try:
        inst = generate(FamilySpec.of(args.family, **params))
    except FamilyParameterError as e:
        raise _InputError(f"parameter error: {e}") from None
    except KeyError as e:
        raise _InputError(f"{args.family} needs parameter --{e.args[0]}") from None
    out = {"family": args.family, "params": dict(inst.spec.params),
           "polynomial": format_polynomial(inst.polynomial),
           "coefficients": [str(a) for a in inst.polynomial.coeffs], "witness": None,
           "notes": inst.notes}
    if inst.theorem is not None:
        dom, w = inst.dominance, inst.arithmetic
        out["witness"] = {
            "theorem": inst.theorem.value,
            "alpha": str(dom.alpha),
            "beta": None if dom.beta is None else str(dom.beta),
            "j": None if dom.j is None else str(dom.j),
            "arithmetic": None if w is None else {
                key: str(getattr(w, key)) for key in ("n", "p", "k", "d", "sign", "ell")
            },
        }
    if args.json:
        _emit(out)
    else:
        print(out["polynomial"])
        print(json.dumps(out["witness"], sort_keys=True))
        for note in inst.notes:
            print(f"note: {note}")
    return EXIT_OK


def _cmd_theorem_a(args) -> int:
    if args.m < 2:
        raise _InputError("--m must be >= 2")
    rep = theorem_a_validate(args.m)
    if args.json:
        _emit(rep.to_dict())
    else:
        for name, ok in rep.checks.items():
            print(f"{'PASS' if ok else 'FAIL'}  {name}")
        print(f"zeta = {rep.zeta!r}, zero bound = {rep.bound!r}, "
              f"max other modulus = {rep.max_other_modulus!r}")
    return EXIT_OK if rep.passed else EXIT_NEGATIVE


def _cmd_scan(args) -> int:
    try:
        degrees = tuple(int(x) for x in args.degree.split(","))
    except ValueError:
        raise _InputError(f"--degree must be a comma-separated list of integers: {args.degree!r}") from None
    if any(d < 1 for d in degrees) or args.coeff_bound < 1 or args.jobs < 1:
        raise _InputError("degrees, --coeff-bound and --jobs must be positive")
    summary = scan(ScanConfig(degrees, args.coeff_bound, args.n_max, args.jobs))
    text = summary_json(summary)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    if args.json:
        sys.stdout.write(text)
    else:
        c = summary["counts"]
        print(f"{'degree':>6} {'total':>8} {'certified':>10} {'oracle-irr':>10}")
        for deg, row in sorted(summary["per_degree"].items(), key=lambda kv: int(kv[0])):
            print(f"{deg:>6} {row['total']:>8} {row['certified']:>10} {row['oracle_irreducible']:>10}")
        print(f"{'all':>6} {c['total']:>8} {c['certified']:>10} {c['oracle_irreducible']:>10}")
        print(f"no witness: {c['no_witness']}, oracle skipped: {c['oracle_skipped']}, "
              f"disagreements: {c['disagreements']}")
        for coeffs in summary["disagreements"]:
            print(f"  DISAGREEMENT {coeffs}")
    return EXIT_OK if summary["counts"]["disagreements"] == 0 else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="irredcert", description="Certify irreducibility of integer polynomials.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("certify", help="search for a witness and emit a certificate")
    c.add_argument("expr")
    c.add_argument("--n-max", type=int, default=SearchConfig.n_max)
    c.add_argument("--theorems", type=_theorems, default=frozenset(Theorem))
    c.add_argument("--alpha-bits", type=int, default=SearchConfig.alpha_precision_bits)
    c.add_argument("--j", type=int)
    c.add_argument("--alpha", type=_rational)
    c.add_argument("--beta", type=_rational)
    c.add_argument("--out")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=_cmd_certify)

    v = sub.add_parser("verify", help="independently verify a certificate file")
    v.add_argument("file")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=_cmd_verify)

    r = sub.add_parser("roots", help="numeric roots and modulus table")
    r.add_argument("expr")
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=_cmd_roots)

    f = sub.add_parser("factor", help="complete factorisation by Kronecker's method")
    f.add_argument("expr")
    f.add_argument("--max-degree", type=int, default=Guard.max_degree)
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=_cmd_factor)

    g = sub.add_parser("gen", help="generate a family instance and its witness")
    g.add_argument("family", choices=[x.value for x in Family])
    g.add_argument("--p", type=int)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--ell", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--j", type=int)
    g.add_argument("--d", type=int)
    g.add_argument("--sign", choices=["+", "-"], default="+")
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=_cmd_gen)

    t = sub.add_parser("validate-theorem-a", help="root geometry of z^m - z^(m-1) - ... - 1")
    t.add_argument("--m", type=int, required=True)
    t.add_argument("--json", action="store_true")
    t.set_defaults(func=_cmd_theorem_a)

    s = sub.add_parser("scan-corpus", help="exhaustive soundness scan against the oracle")
    s.add_argument("--degree", required=True, help="comma-separated degrees")
    s.add_argument("--coeff-bound", type=int, required=True)
    s.add_argument("--n-max", type=int, default=SCAN_N_MAX)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--out")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=_cmd_scan)
    return ap


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "sign", None) is not None:
        args.sign = 1 if args.sign == "+" else -1
    try:
        return args.func(args)
    except _InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    try:
        sys.exit(run())
    except BrokenPipeError:
        sys.exit(EXIT_NEGATIVE)
