"""Ground-truth factorisation over Z by Kronecker's method, plus Lemma A checks.

Kronecker is complete but exponential, so inputs are guarded: the oracle
refuses rather than guesses.

Lemma A (constant-term form): if f = f1 f2 with f1, f2 nonconstant,
p^k | a_0..a_{ell-1}, p^(k+1) does not divide a_0, k >= 2 and
gcd(k, ell) = 1, then p | f1(0) and p | f2(0) force p | a_ell.
Lemma C is the same statement read off the reversed coefficient list,
with leading coefficients in place of constant terms.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import count

from .numtheory import factorize
from .poly import Polynomial, content, evaluate, exact_quotient, multiply, reciprocal


class OracleRefusal(Exception):
    """Input exceeds the guard limits."""


@dataclass(frozen=True)
class Guard:
    max_degree: int = 6
    max_coeff: int = 10**6


@dataclass(frozen=True)
class FactorizationResult:
    content: int
    factors: tuple[tuple[Polynomial, int], ...]

    def product(self) -> Polynomial:
        out = Polynomial([self.content])
        for g, e in self.factors:
            for _ in range(e):
                out = multiply(out, g)
        return out

    @property
    def is_irreducible(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1


def _normalise(g: Polynomial) -> Polynomial:
    c = content(g)
    if g.leading < 0:
        c = -c
    return Polynomial(a // c for a in g.coeffs)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def _nodes():
    yield 0
    for i in count(1):
        yield i
        yield -i


def _newton_to_coeffs(xs: list[int], dd: list[int]) -> Polynomial:
    # p(z) = dd0 + dd1 (z-x0) + dd2 (z-x0)(z-x1) + ...
    out = Polynomial()
    basis = Polynomial([1])
    for x, c in zip(xs, dd):
        out = out + basis * c
        basis = multiply(basis, Polynomial([-x, 1]))
    return out


def _find_factor(f: Polynomial, r: int) -> Polynomial | None:
    """A factor of degree exactly r, or None.  f has no integer roots."""
    # pick r + 1 nodes with few divisors among the first 2r + 3 candidates
    pool = []
    for x in _nodes():
        if len(pool) >= 2 * r + 3:
            break
        v = evaluate(f, x)
        if v != 0:
            pool.append((len(_divisors(v)), x, v))
    pool.sort()
    chosen = sorted(pool[: r + 1], key=lambda t: t[1])
    xs = [x for _, x, _ in chosen]
    options = []
    for i, (_, x, v) in enumerate(chosen):
        divs = _divisors(v)
        # g and -g are the same factor up to sign: fix g(x_0) > 0
        options.append(divs if i == 0 else [s * d for d in divs for s in (1, -1)])
    lead = f.leading

    # depth-first over node values; divided differences of an integer
    # polynomial at integer nodes are integers, which prunes early
    table: list[list[int]] = []

    def extend(level: int) -> Polynomial | None:
        for v in options[level]:
            # new row of the divided-difference table: g[x_{level-t}..x_level]
            row = [v]
            ok = True
            for t in range(1, level + 1):
                num = row[t - 1] - table[level - 1][t - 1]
                den = xs[level] - xs[level - t]
                if num % den:
                    ok = False
                    break
                row.append(num // den)
            if not ok:
                continue
            table.append(row)
            if level == r:
                top = row[r]
                if top != 0 and lead % top == 0:
                    dd = [table[i][i] for i in range(r + 1)]
                    g = _newton_to_coeffs(xs, dd)
                    if g.degree == r and exact_quotient(f, g) is not None:
                        table.pop()
                        return g
            else:
                found = extend(level + 1)
                if found is not None:
                    table.pop()
                    return found
            table.pop()
        return None

    return extend(0)


def _rational_root_factors(f: Polynomial) -> tuple[Polynomial, list[Polynomial]]:
    found = []
    while f.degree >= 1 and f.coeffs[0] == 0:
        found.append(Polynomial([0, 1]))
        f = exact_quotient(f, Polynomial([0, 1]))
    changed = True
    while changed and f.degree >= 1:
        changed = False
        for q in _divisors(f.leading):
            for p in _divisors(f.coeffs[0]):
                for sp in (p, -p):
                    if math.gcd(sp, q) != 1:
                        continue
                    if evaluate(f, Fraction(sp, q)) == 0:
                        g = Polynomial([-sp, q])
                        f = exact_quotient(f, g)
                        found.append(g)
                        changed = True
                        break
                if changed:
                    break
            if changed:
                break
    return f, found


def kronecker_factor(f: Polynomial, guard: Guard = Guard()) -> FactorizationResult:
    """Complete factorisation f = content * prod g^e into primitive irreducibles."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    if f.degree > guard.max_degree:
        raise OracleRefusal(f"degree {f.degree} exceeds guard {guard.max_degree}")
    if max(abs(a) for a in f.coeffs) > guard.max_coeff:
        raise OracleRefusal(f"coefficient size exceeds guard {guard.max_coeff}")
    c = content(f)
    if f.leading < 0:
        c = -c
    g = Polynomial(a // c for a in f.coeffs)
    if g.degree == 0:
        return FactorizationResult(c * g.coeffs[0], ())
    g, factors = _rational_root_factors(g)
    r = 2
    while g.degree >= 2 * r:
        h = _find_factor(g, r)
        if h is None:
            r += 1
            continue
        h = _normalise(h)
        factors.append(h)
        g = exact_quotient(g, h)
    if g.degree >= 1:
        factors.append(g)
    merged: dict[tuple[int, ...], int] = {}
    for h in factors:
        merged[h.coeffs] = merged.get(h.coeffs, 0) + 1
    ordered = sorted(merged.items(), key=lambda kv: (len(kv[0]), kv[0]))
    result = FactorizationResult(c, tuple((Polynomial(k), e) for k, e in ordered))
    if result.product() != f:
        raise AssertionError("factorisation does not reconstruct the input")
    return result


def is_irreducible_oracle(f: Polynomial, guard: Guard = Guard()) -> bool:
    if f.is_zero() or f.degree < 1 or content(f) != 1:
        return False
    return kronecker_factor(f, guard).is_irreducible


# --- Lemma A / Lemma C harness ------------------------------------------------

PASS = "PASS"
HYPOTHESIS_NOT_MET = "HYPOTHESIS_NOT_MET"
VIOLATION = "VIOLATION"
NOT_COMPARABLE = "NOT_COMPARABLE"


@dataclass(frozen=True)
class LemmaReport:
    status: str
    hypotheses: dict
    conclusion: bool | None = None


def _lemma_args(f, f1, f2, k, ell):
    if multiply(f1, f2) != f:
        raise ValueError("f != f1 * f2")
    if f1.degree < 1 or f2.degree < 1:
        raise ValueError("f1 and f2 must be nonconstant")
    if k < 2 or math.gcd(k, ell) != 1 or not 1 <= ell <= f.degree:
        raise ValueError("need k >= 2, gcd(k, ell) = 1 and 1 <= ell <= deg f")


def lemma_a_predicate(f: Polynomial, f1: Polynomial, f2: Polynomial, p: int, k: int, ell: int) -> LemmaReport:
    """Constant-term form: hypotheses on a_0..a_{ell-1}, f1(0), f2(0); conclusion p | a_ell."""
    _lemma_args(f, f1, f2, k, ell)
    a = f.coeffs
    hyp = {
        "p^k | a_0..a_{ell-1}": all(a[i] % p**k == 0 for i in range(ell)),
        "p^(k+1) does not divide a_0": a[0] % p ** (k + 1) != 0,
        "p | f1(0)": f1.coeffs[0] % p == 0,
        "p | f2(0)": f2.coeffs[0] % p == 0,
    }
    if not all(hyp.values()):
        return LemmaReport(HYPOTHESIS_NOT_MET, hyp)
    concl = a[ell] % p == 0
    return LemmaReport(PASS if concl else VIOLATION, hyp, concl)


def lemma_c_predicate(f: Polynomial, f1: Polynomial, f2: Polynomial, p: int, k: int, ell: int) -> LemmaReport:
    """Leading-coefficient form: hypotheses on a_m..a_{m-ell+1}, lc(f1), lc(f2); conclusion p | a_{m-ell}."""
    _lemma_args(f, f1, f2, k, ell)
    a = f.coeffs
    m = f.degree
    hyp = {
        "p^k | a_m..a_{m-ell+1}": all(a[m - i] % p**k == 0 for i in range(ell)),
        "p^(k+1) does not divide a_m": a[m] % p ** (k + 1) != 0,
        "p | lc(f1)": f1.leading % p == 0,
        "p | lc(f2)": f2.leading % p == 0,
    }
    if not all(hyp.values()):
        return LemmaReport(HYPOTHESIS_NOT_MET, hyp)
    concl = a[m - ell] % p == 0
    return LemmaReport(PASS if concl else VIOLATION, hyp, concl)


@dataclass(frozen=True)
class EquivalenceReport:
    status: str  # "MATCH", "MISMATCH" or NOT_COMPARABLE
    lemma_a: LemmaReport | None
    lemma_c: LemmaReport | None


def lemma_equivalence_check(f: Polynomial, f1: Polynomial, f2: Polynomial,
                            p: int, k: int, ell: int) -> EquivalenceReport:
    """Lemma A on (f, f1, f2) against Lemma C on the reversed polynomials."""
    if f.coeffs[0] == 0:
        return EquivalenceReport(NOT_COMPARABLE, None, None)
    ra = lemma_a_predicate(f, f1, f2, p, k, ell)
    rc = lemma_c_predicate(reciprocal(f), reciprocal(f1), reciprocal(f2), p, k, ell)
    same = ra.status == rc.status and ra.conclusion == rc.conclusion
    return EquivalenceReport("MATCH" if same else "MISMATCH", ra, rc)
