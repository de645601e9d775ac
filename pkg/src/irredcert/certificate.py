"""Irreducibility certificates: data model, canonical JSON, independent verifier.

The verifier recomputes every condition from the embedded polynomial.  It
derives the Taylor coefficients at n from the binomial expansion
s_i = sum_t C(t, i) a_t n^(t-i) rather than the synthetic division used
by the searcher, so the two paths cross-check each other.
"""

from __future__ import annotations

import hashlib
import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from . import __version__
from .numtheory import DEFAULT_ROUNDS, PrimePowerSplit, is_deterministic_regime, is_prime
from .poly import Polynomial, taylor_shift
from .report import ArithmeticWitness, CheckRecord, CheckReport, Status, Theorem, _Recorder
from .zerobounds import DominanceKind, DominanceWitness

FORMAT = "irredcert-certificate"
FORMAT_VERSION = "1"
FILE_SUFFIX = ".ipcert.json"

_THEOREM_KIND = {
    Theorem.T1: DominanceKind.DISK_T1,
    Theorem.T2: DominanceKind.ANNULUS_T2,
    Theorem.T3: DominanceKind.ANNULUS_T3,
}


class CertificateFormatError(ValueError):
    """Certificate bytes are not a well-formed certificate."""


@dataclass(frozen=True)
class PrimalityMode:
    mode: str  # "DETERMINISTIC" or "PROBABLE"
    rounds: int | None = None

    @classmethod
    def for_prime(cls, p: int, rounds: int = DEFAULT_ROUNDS) -> "PrimalityMode":
        if is_deterministic_regime(p):
            return cls("DETERMINISTIC")
        return cls("PROBABLE", rounds)


@dataclass(frozen=True)
class Certificate:
    theorem: Theorem
    polynomial: Polynomial
    dominance: DominanceWitness
    arithmetic: ArithmeticWitness
    primality_mode: PrimalityMode
    tool_version: str
    shifted_digest: str
    seal: str

    @classmethod
    def build(cls, theorem: Theorem, f: Polynomial, dominance: DominanceWitness,
              arithmetic: ArithmeticWitness, tool_version: str = __version__) -> "Certificate":
        s = taylor_shift(f, arithmetic.n).s
        draft = cls(Theorem(theorem), f, dominance, arithmetic,
                    PrimalityMode.for_prime(arithmetic.p), tool_version,
                    shifted_digest(s), "")
        return cls(**{**draft.__dict__, "seal": _seal(draft)})


def shifted_digest(s) -> str:
    text = ",".join(str(int(x)) for x in s)
    return "sha256:" + hashlib.sha256(text.encode("ascii")).hexdigest()


def _rational(x: Fraction | None):
    if x is None:
        return None
    return {"num": str(x.numerator), "den": str(x.denominator)}


def _body(c: Certificate) -> dict:
    dom, ar = c.dominance, c.arithmetic
    return {
        "format": FORMAT,
        "version": FORMAT_VERSION,
        "tool_version": c.tool_version,
        "theorem": c.theorem.value,
        "polynomial": [str(a) for a in c.polynomial.coeffs],
        "dominance": {
            "kind": dom.kind.value,
            "alpha": _rational(dom.alpha),
            "beta": _rational(dom.beta),
            "j": None if dom.j is None else str(dom.j),
        },
        "arithmetic": {
            "n": str(ar.n),
            "p": str(ar.p),
            "k": str(ar.k),
            "d": str(ar.d),
            "sign": str(ar.sign),
            "ell": str(ar.ell),
        },
        "primality_mode": {
            "mode": c.primality_mode.mode,
            "rounds": None if c.primality_mode.rounds is None else str(c.primality_mode.rounds),
        },
        "shifted_digest": c.shifted_digest,
    }


def _seal(c: Certificate) -> str:
    blob = json.dumps(_body(c), separators=(",", ":"), ensure_ascii=False)
    return "sha256:" + hashlib.sha256(blob.encode("utf-8")).hexdigest()


def to_json(c: Certificate) -> dict:
    return {**_body(c), "seal": c.seal}


def serialize(c: Certificate) -> bytes:
    return (json.dumps(to_json(c), indent=2, ensure_ascii=False) + "\n").encode("utf-8")


# --- parsing -------------------------------------------------------------

def _reject_float(text):
    raise CertificateFormatError(f"float literal {text} not allowed")


def _int(obj, where: str) -> int:
    if not isinstance(obj, str):
        raise CertificateFormatError(f"{where}: integers must be decimal strings, got {obj!r}")
    try:
        return int(obj, 10)
    except ValueError:
        raise CertificateFormatError(f"{where}: not a decimal integer: {obj!r}") from None


def _frac(obj, where: str) -> Fraction:
    if not isinstance(obj, dict) or set(obj) != {"num", "den"}:
        raise CertificateFormatError(f"{where}: expected {{num, den}}")
    num, den = _int(obj["num"], where + ".num"), _int(obj["den"], where + ".den")
    if den <= 0:
        raise CertificateFormatError(f"{where}: denominator must be positive")
    if math.gcd(num, den) != 1:
        raise CertificateFormatError(f"{where}: rational not in lowest terms")
    return Fraction(num, den)


def _need(obj: dict, keys, where: str) -> None:
    missing = [k for k in keys if k not in obj]
    if missing:
        raise CertificateFormatError(f"{where}: missing fields {', '.join(missing)}")


def deserialize(data: bytes | str) -> Certificate:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise CertificateFormatError(f"not UTF-8: {exc}") from None
    try:
        obj = json.loads(data, parse_float=_reject_float, parse_constant=_reject_float)
    except json.JSONDecodeError as exc:
        raise CertificateFormatError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise CertificateFormatError("top level must be an object")
    _need(obj, ["format", "version", "tool_version", "theorem", "polynomial", "dominance",
                "arithmetic", "primality_mode", "shifted_digest", "seal"], "certificate")
    if obj["format"] != FORMAT or obj["version"] != FORMAT_VERSION:
        raise CertificateFormatError(f"unsupported format {obj['format']!r} version {obj['version']!r}")
    try:
        theorem = Theorem(obj["theorem"])
    except ValueError:
        raise CertificateFormatError(f"unknown theorem {obj['theorem']!r}") from None
    if not isinstance(obj["polynomial"], list):
        raise CertificateFormatError("polynomial must be a coefficient array")
    coeffs = [_int(a, f"polynomial[{i}]") for i, a in enumerate(obj["polynomial"])]
    if coeffs and coeffs[-1] == 0:
        raise CertificateFormatError("polynomial has a zero leading coefficient")

    dom = obj["dominance"]
    if not isinstance(dom, dict):
        raise CertificateFormatError("dominance must be an object")
    _need(dom, ["kind", "alpha", "beta", "j"], "dominance")
    try:
        kind = DominanceKind(dom["kind"])
    except ValueError:
        raise CertificateFormatError(f"unknown dominance kind {dom['kind']!r}") from None
    alpha = _frac(dom["alpha"], "dominance.alpha")
    if kind is DominanceKind.DISK_T1:
        if dom["beta"] is not None or dom["j"] is not None:
            raise CertificateFormatError("DISK_T1 takes no beta or j")
        beta = j = None
    else:
        if dom["beta"] is None or dom["j"] is None:
            raise CertificateFormatError(f"{kind.value} needs beta and j")
        beta = _frac(dom["beta"], "dominance.beta")
        j = _int(dom["j"], "dominance.j")

    ar = obj["arithmetic"]
    if not isinstance(ar, dict):
        raise CertificateFormatError("arithmetic must be an object")
    _need(ar, ["n", "p", "k", "d", "sign", "ell"], "arithmetic")
    vals = {key: _int(ar[key], f"arithmetic.{key}") for key in ("n", "p", "k", "d", "sign", "ell")}
    if vals["sign"] not in (1, -1):
        raise CertificateFormatError("arithmetic.sign must be 1 or -1")

    pm = obj["primality_mode"]
    if not isinstance(pm, dict):
        raise CertificateFormatError("primality_mode must be an object")
    _need(pm, ["mode", "rounds"], "primality_mode")
    if pm["mode"] == "DETERMINISTIC":
        if pm["rounds"] is not None:
            raise CertificateFormatError("DETERMINISTIC mode takes no rounds")
        mode = PrimalityMode("DETERMINISTIC")
    elif pm["mode"] == "PROBABLE":
        mode = PrimalityMode("PROBABLE", _int(pm["rounds"], "primality_mode.rounds"))
    else:
        raise CertificateFormatError(f"unknown primality mode {pm['mode']!r}")

    for key in ("shifted_digest", "seal", "tool_version"):
        if not isinstance(obj[key], str):
            raise CertificateFormatError(f"{key} must be a string")

    return Certificate(
        theorem=theorem,
        polynomial=Polynomial(coeffs),
        dominance=DominanceWitness(kind, alpha, beta, j),
        arithmetic=ArithmeticWitness(
            vals["n"], PrimePowerSplit(vals["d"], vals["p"], vals["k"], vals["sign"]), vals["ell"]
        ),
        primality_mode=mode,
        tool_version=obj["tool_version"],
        shifted_digest=obj["shifted_digest"],
        seal=obj["seal"],
    )


# --- verification ----------------------------------------------------------

def _taylor_binomial(coeffs, n: int) -> list[int]:
    m = len(coeffs) - 1
    return [sum(math.comb(t, i) * coeffs[t] * n ** (t - i) for t in range(i, m + 1))
            for i in range(m + 1)]


def _dominance_sides(coeffs, dom: DominanceWitness) -> tuple[Fraction, Fraction]:
    # written out directly rather than through zerobounds, as a second route
    m = len(coeffs) - 1
    a = [Fraction(abs(x)) for x in coeffs]
    alpha, beta, j = dom.alpha, dom.beta, dom.j
    if dom.kind is DominanceKind.DISK_T1:
        return a[m] * alpha**m, sum(a[i] * alpha**i for i in range(m))
    rest = [i for i in range(m + 1) if i != j]
    if dom.kind is DominanceKind.ANNULUS_T2:
        return a[j] * alpha**j, sum(beta**i * a[i] for i in rest)
    return a[j] * alpha**j, (beta / alpha) ** (m - j) * sum(a[i] * alpha**i for i in rest)


def _structure_problems(c: Certificate) -> list[str]:
    out = []
    f, dom, ar = c.polynomial, c.dominance, c.arithmetic
    if f.degree < 1:
        out.append("polynomial must have degree >= 1")
    if dom.kind is not _THEOREM_KIND[c.theorem]:
        out.append(f"theorem {c.theorem.value} does not match dominance kind {dom.kind.value}")
    if dom.alpha <= 0:
        out.append("alpha must be positive")
    if dom.kind is not DominanceKind.DISK_T1:
        if dom.beta is None or dom.j is None:
            out.append("annulus witness needs beta and j")
        else:
            if not dom.alpha < dom.beta:
                out.append("need alpha < beta")
            if not 0 <= dom.j <= max(f.degree, 0):
                out.append(f"j = {dom.j} outside 0..{f.degree}")
    if ar.sign not in (1, -1):
        out.append("sign must be +1 or -1")
    if ar.n < 1 or ar.d < 1 or ar.k < 1 or ar.p < 2:
        out.append("need n, d, k >= 1 and p >= 2")
    return out


def verify(c: Certificate) -> CheckReport:
    """Re-derive every hypothesis of the certified theorem from scratch."""
    rec = _Recorder(c.theorem)
    problems = _structure_problems(c)
    if problems:
        return rec.input_error("structure", "; ".join(problems))

    f, dom, ar = c.polynomial, c.dominance, c.arithmetic
    coeffs = f.coeffs
    m = f.degree
    n, p, k, d, sign, ell = ar.n, ar.p, ar.k, ar.d, ar.sign, ar.ell

    g = 0
    for a in coeffs:
        g = math.gcd(g, a)
    rec.check("primitivity", g == 1, f"content = {g}")

    lhs, rhs = _dominance_sides(coeffs, dom)
    rec.check("dominance", lhs > rhs,
              f"{dom.kind.value}: {lhs} > {rhs} (alpha={dom.alpha} beta={dom.beta} j={dom.j})")

    s = _taylor_binomial(coeffs, n)
    value = s[0]
    rec.check("value_split", value == sign * p**k * d, f"f({n}) = {value}, claimed {sign}*{p}^{k}*{d}")

    if c.primality_mode.mode == "PROBABLE":
        rounds = c.primality_mode.rounds or 0
        p_ok = rounds >= 1 and is_prime(p, rounds, random.SystemRandom())
        mode_ok = not is_deterministic_regime(p)
    else:
        p_ok = is_prime(p)
        mode_ok = is_deterministic_regime(p)
    rec.check("prime", p_ok, f"p = {p} ({c.primality_mode.mode.lower()})")
    rec.check("primality_mode", mode_ok, f"mode {c.primality_mode.mode} for a {p.bit_length()}-bit prime")
    rec.check("p_not_dividing_d", d % p != 0, f"d = {d}")

    window = n >= dom.alpha + d
    detail = f"n = {n} >= alpha + d = {dom.alpha + d}"
    if dom.kind is not DominanceKind.DISK_T1:
        window = window and dom.beta - d >= n
        detail = f"beta - d = {dom.beta - d} >= " + detail
    rec.check("window", window, detail)

    in_range = 1 <= ell <= m
    rec.check("ell_range", in_range, f"1 <= {ell} <= {m}")
    rec.check("gcd_k_ell", math.gcd(k, ell) == 1, f"gcd({k}, {ell}) = {math.gcd(k, ell)}")
    if in_range:
        pk = p**k
        bad = [i for i in range(ell) if s[i] % pk]
        rec.check("prefix_divisibility", not bad,
                  f"{p}^{k} | s_i for i < {ell}" + (f"; fails at i = {bad[0]}" if bad else ""))
        if k > 1:
            rec.check("k_clause", s[ell] % p != 0, f"s_{ell} mod {p} = {s[ell] % p}")

    rec.check("shifted_digest", shifted_digest(s) == c.shifted_digest, "Taylor coefficients at n")
    rec.check("seal", _seal(c) == c.seal, "digest over all certificate fields")
    return rec.report()


def verify_bytes(data: bytes | str) -> CheckReport:
    try:
        c = deserialize(data)
    except CertificateFormatError as exc:
        return CheckReport(Status.INPUT_ERROR, [CheckRecord("structure", False, str(exc))])
    return verify(c)
