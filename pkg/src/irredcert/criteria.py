"""Irreducibility checkers T1/T2/T3, the prime-power fast path, and witness search.

A witness pairs a dominance condition (zeros of f are inside |z| < alpha,
or outside the annulus alpha <= |z| <= beta) with arithmetic data at an
integer n: f(n) = +-p^k d, p prime not dividing d, p^k dividing the first
ell Taylor coefficients s_i of f at n, gcd(k, ell) = 1, and p not dividing
s_ell when k > 1.  The window n >= alpha + d (and beta - d >= n for the
annulus versions) ties the two halves together.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .numtheory import PrimePowerSplit, is_prime, prime_power_base, prime_power_splits
from .poly import Polynomial, content, derivative, evaluate, is_primitive, taylor_shift
from .report import ArithmeticWitness, CheckReport, Theorem, _Recorder
from .zerobounds import (
    DominanceKind,
    DominanceWitness,
    check_annulus_t2,
    check_annulus_t3,
    check_disk_dominance,
    disk_sides,
    annulus_t2_sides,
    annulus_t3_sides,
    minimal_disk_alpha,
)

AUTO = "AUTO"
ALL_THEOREMS = frozenset(Theorem)

_KIND = {
    Theorem.T1: DominanceKind.DISK_T1,
    Theorem.T2: DominanceKind.ANNULUS_T2,
    Theorem.T3: DominanceKind.ANNULUS_T3,
}


class Outcome(str, enum.Enum):
    CERTIFIED_IRREDUCIBLE = "CERTIFIED_IRREDUCIBLE"
    NO_WITNESS_FOUND = "NO_WITNESS_FOUND"
    NOT_APPLICABLE = "NOT_APPLICABLE"


@dataclass(frozen=True)
class SearchConfig:
    n_max: int = 10_000
    alpha_precision_bits: int = 32
    theorem_set: frozenset = ALL_THEOREMS
    # AUTO, or explicit (j, alpha, beta) triples for T2/T3
    t2t3_grid: object = AUTO
    d_max: int | None = None

    def __post_init__(self):
        if self.n_max < 1:
            raise ValueError("n_max must be >= 1")
        if self.alpha_precision_bits < 1:
            raise ValueError("alpha_precision_bits must be >= 1")
        object.__setattr__(self, "theorem_set", frozenset(Theorem(t) for t in self.theorem_set))
        if self.t2t3_grid != AUTO:
            grid = tuple((int(j), Fraction(a), Fraction(b)) for j, a, b in self.t2t3_grid)
            object.__setattr__(self, "t2t3_grid", grid)


def compute_ell(s: Sequence[int], p: int, k: int, m: int) -> int | None:
    """Smallest admissible ell for the prime power p^k at shifted coefficients s.

    Admissible: 1 <= ell <= L, where L is the longest prefix of s divisible
    by p^k (capped at m), gcd(k, ell) = 1, and p does not divide s_ell if k > 1.
    """
    pk = p**k
    L = 0
    while L < min(m, len(s)) and s[L] % pk == 0:
        L += 1
    for ell in range(1, L + 1):
        if math.gcd(k, ell) != 1:
            continue
        if k == 1 or s[ell] % p != 0:
            return ell
    return None


def _ge(x, y) -> bool:
    return Fraction(x) >= Fraction(y)


def _check_arithmetic(rec: _Recorder, f: Polynomial, w: ArithmeticWitness) -> None:
    m = f.degree
    n, p, k, d, sign, ell = w.n, w.p, w.k, w.d, w.sign, w.ell
    value = evaluate(f, n)
    if not rec.check("value_split", k >= 1 and value == sign * p**k * d,
                     f"f({n}) = {value} vs {'+' if sign > 0 else '-'}{p}^{k}*{d}"):
        return
    if not rec.check("prime", p >= 2 and is_prime(p), f"p = {p}"):
        return
    if not rec.check("p_not_dividing_d", d >= 1 and d % p != 0, f"d = {d}"):
        return
    if not rec.check("ell_range", 1 <= ell <= m, f"1 <= {ell} <= {m}"):
        return
    if not rec.check("gcd_k_ell", math.gcd(k, ell) == 1, f"gcd({k}, {ell}) = {math.gcd(k, ell)}"):
        return
    s = taylor_shift(f, n).s
    pk = p**k
    bad = [i for i in range(ell) if s[i] % pk]
    if not rec.check("prefix_divisibility", not bad,
                     f"p^k | s_i for i < {ell}" + (f"; fails at i = {bad[0]}" if bad else "")):
        return
    if k > 1:
        rec.check("k_clause", s[ell] % p != 0, f"s_{ell} mod {p} = {s[ell] % p}")
    else:
        rec.check("k_clause", True, "k = 1, no condition on s_ell")


def _check_primitive(rec: _Recorder, f: Polynomial) -> bool:
    c = content(f)
    return rec.check("primitivity", c == 1, f"content = {c}")


def check_t1(f: Polynomial, alpha, w: ArithmeticWitness) -> CheckReport:
    rec = _Recorder(Theorem.T1)
    if f.is_zero() or f.degree < 1:
        return rec.input_error("input", "polynomial must have degree >= 1")
    alpha = Fraction(alpha)
    if alpha <= 0:
        return rec.input_error("input", f"alpha = {alpha} must be positive")
    if not _check_primitive(rec, f):
        return rec.report()
    lhs, rhs = disk_sides(f, alpha)
    if not rec.check("dominance", check_disk_dominance(f, alpha),
                     f"|a_m| alpha^m = {lhs} > {rhs} at alpha = {alpha}"):
        return rec.report()
    _check_arithmetic(rec, f, w)
    if rec.ok:
        rec.check("window", _ge(w.n, alpha + w.d), f"n = {w.n} >= alpha + d = {alpha + w.d}")
    return rec.report()


def _check_annulus(theorem: Theorem, f: Polynomial, alpha, beta, j: int, w) -> CheckReport:
    rec = _Recorder(theorem)
    if f.is_zero() or f.degree < 1:
        return rec.input_error("input", "polynomial must have degree >= 1")
    alpha, beta = Fraction(alpha), Fraction(beta)
    if not 0 < alpha < beta:
        return rec.input_error("input", f"need 0 < alpha < beta, got {alpha}, {beta}")
    if not 0 <= j <= f.degree:
        return rec.input_error("input", f"j = {j} outside 0..{f.degree}")
    if not _check_primitive(rec, f):
        return rec.report()
    sides = annulus_t2_sides if theorem is Theorem.T2 else annulus_t3_sides
    lhs, rhs = sides(f, alpha, beta, j)
    if not rec.check("dominance", lhs > rhs,
                     f"{lhs} > {rhs} at j = {j}, alpha = {alpha}, beta = {beta}"):
        return rec.report()
    _check_arithmetic(rec, f, w)
    if rec.ok:
        rec.check("window", _ge(w.n, alpha + w.d) and _ge(beta - w.d, w.n),
                  f"beta - d = {beta - w.d} >= n = {w.n} >= alpha + d = {alpha + w.d}")
    return rec.report()


def check_t2(f: Polynomial, alpha, beta, j: int, w: ArithmeticWitness) -> CheckReport:
    return _check_annulus(Theorem.T2, f, alpha, beta, j, w)


def check_t3(f: Polynomial, alpha, beta, j: int, w: ArithmeticWitness) -> CheckReport:
    return _check_annulus(Theorem.T3, f, alpha, beta, j, w)


def check(theorem: Theorem, f: Polynomial, dom: DominanceWitness, w: ArithmeticWitness) -> CheckReport:
    theorem = Theorem(theorem)
    if theorem is Theorem.T1:
        return check_t1(f, dom.alpha, w)
    return _check_annulus(theorem, f, dom.alpha, dom.beta, dom.j, w)


def corollary_fast_path(f: Polynomial, alpha, n: int, d: int, beta=None, j=None) -> ArithmeticWitness | None:
    """ell = 1 specialisation: |f(n)|/d prime, or a prime power p^k with p not dividing f'(n).

    Only the window and the arithmetic are examined here; the dominance
    inequality is left to the checkers.  ``j`` is accepted for signature
    symmetry with the annulus checkers and is not used.
    """
    value = evaluate(f, n)
    if value == 0 or d < 1 or abs(value) % d:
        return None
    if not _ge(n, Fraction(alpha) + d):
        return None
    if beta is not None and not _ge(Fraction(beta) - d, n):
        return None
    q = abs(value) // d
    pk = prime_power_base(q)
    if pk is None:
        return None
    p, k = pk
    if d % p == 0:
        return None
    if k > 1 and evaluate(derivative(f), n) % p == 0:
        return None
    return ArithmeticWitness(n, PrimePowerSplit(d, p, k, 1 if value > 0 else -1), 1)


@dataclass
class SearchResult:
    outcome: Outcome
    certificate: object = None  # Certificate when certified
    reason: str = ""
    checked_n: int = 0


def _candidates(f: Polynomial, cfg: SearchConfig, alpha_star: Fraction | None,
                n: int, d: int) -> Iterator[tuple[Theorem, DominanceWitness]]:
    """Dominance witnesses compatible with (n, d), in preference order."""
    m = f.degree
    if Theorem.T1 in cfg.theorem_set and alpha_star is not None and n >= alpha_star + d:
        yield Theorem.T1, DominanceWitness(DominanceKind.DISK_T1, alpha_star)
    for thm in (Theorem.T2, Theorem.T3):
        if thm not in cfg.theorem_set:
            continue
        pred = check_annulus_t2 if thm is Theorem.T2 else check_annulus_t3
        if cfg.t2t3_grid == AUTO:
            # both predicates get easier as alpha grows and beta shrinks, so the
            # tightest window alpha = n - d, beta = n + d is optimal for (n, d)
            if n - d <= 0:
                continue
            alpha, beta = Fraction(n - d), Fraction(n + d)
            for j in range(m + 1):
                if pred(f, alpha, beta, j):
                    yield thm, DominanceWitness(_KIND[thm], alpha, beta, j)
        else:
            for j, alpha, beta in cfg.t2t3_grid:
                if n >= alpha + d and beta - d >= n and pred(f, alpha, beta, j):
                    yield thm, DominanceWitness(_KIND[thm], alpha, beta, j)


def _validate_grid(f: Polynomial, cfg: SearchConfig) -> None:
    if cfg.t2t3_grid == AUTO:
        return
    for j, alpha, beta in cfg.t2t3_grid:
        if not 0 < alpha < beta:
            raise ValueError(f"need 0 < alpha < beta, got {alpha}, {beta}")
        if not 0 <= j <= f.degree:
            raise ValueError(f"j = {j} outside 0..{f.degree}")


def certify(f: Polynomial, cfg: SearchConfig = SearchConfig()) -> SearchResult:
    """Scan n upward for a witness; the first hit (smallest n, then d) wins."""
    from .certificate import Certificate, verify

    if f.is_zero() or f.degree < 2:
        return SearchResult(Outcome.NOT_APPLICABLE, reason="degree < 2")
    if not is_primitive(f):
        return SearchResult(Outcome.NOT_APPLICABLE, reason="polynomial is not primitive")
    _validate_grid(f, cfg)
    m = f.degree
    alpha_star = None
    n_lo = cfg.n_max + 1
    if Theorem.T1 in cfg.theorem_set:
        alpha_star = minimal_disk_alpha(f, cfg.alpha_precision_bits)
        n_lo = min(n_lo, math.ceil(alpha_star) + 1)
    annulus = cfg.theorem_set & {Theorem.T2, Theorem.T3}
    if annulus:
        if cfg.t2t3_grid == AUTO:
            n_lo = min(n_lo, 2)
        else:
            for _, alpha, _ in cfg.t2t3_grid:
                n_lo = min(n_lo, math.ceil(alpha) + 1)

    def d_cap(n: int) -> int:
        cap = 0
        if alpha_star is not None:
            cap = max(cap, math.floor(n - alpha_star))
        if annulus:
            if cfg.t2t3_grid == AUTO:
                cap = max(cap, n - 1)
            else:
                for _, alpha, beta in cfg.t2t3_grid:
                    cap = max(cap, math.floor(min(n - alpha, beta - n)))
        if cfg.d_max is not None:
            cap = min(cap, cfg.d_max)
        return cap

    for n in range(max(n_lo, 1), cfg.n_max + 1):
        value = evaluate(f, n)
        if value == 0:
            continue
        cap = d_cap(n)
        if cap < 1:
            continue
        shifted = None
        for split in prime_power_splits(value, cap):
            if shifted is None:
                shifted = taylor_shift(f, n).s
            ell = compute_ell(shifted, split.p, split.k, m)
            if ell is None:
                continue
            for thm, dom in _candidates(f, cfg, alpha_star, n, split.d):
                cert = Certificate.build(thm, f, dom, ArithmeticWitness(n, split, ell))
                report = verify(cert)
                if not report.passed:
                    raise AssertionError(f"search produced an unverifiable certificate:\n{report.format()}")
                return SearchResult(Outcome.CERTIFIED_IRREDUCIBLE, cert, checked_n=n)
    return SearchResult(Outcome.NO_WITNESS_FOUND, reason=f"no witness for n <= {cfg.n_max}",
                        checked_n=cfg.n_max)


def search(f: Polynomial, cfg: SearchConfig = SearchConfig()):
    """The certificate found by :func:`certify`, or None."""
    return certify(f, cfg).certificate
