"""Parameterised example families F1-F6 and the Theorem A polynomials.

Each generator checks the family's parameter constraints, builds
the polynomial, and attaches the intended witness.  The arithmetic half of
the witness is derived from the actual value f(n) and the actual Taylor
coefficients at n, never copied from the family's bookkeeping: the family
exponent k and the exponent of p in f(n) differ (e.g. F3(p^2) = +-p^(k+m) d).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd
from typing import Iterator

from .criteria import check, compute_ell
from .numtheory import is_prime, prime_power_splits
from .poly import Polynomial, evaluate, taylor_shift
from .report import ArithmeticWitness, CheckRecord, CheckReport, Status, Theorem
from .roots import theorem_a_polynomial, theorem_a_validate
from .zerobounds import DominanceKind, DominanceWitness


class Family(str, enum.Enum):
    F1 = "F1"
    F2 = "F2"
    F3 = "F3"
    F4 = "F4"
    F5 = "F5"
    F6 = "F6"
    THEOREM_A = "THEOREM_A"


class FamilyParameterError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    params: tuple[tuple[str, int], ...]

    @classmethod
    def of(cls, family, **params) -> "FamilySpec":
        return cls(Family(family), tuple(sorted(params.items())))

    def __getitem__(self, key: str) -> int:
        return dict(self.params)[key]

    def get(self, key: str, default=None):
        return dict(self.params).get(key, default)

    def label(self) -> str:
        inner = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.family.value}({inner})"


@dataclass
class FamilyInstance:
    spec: FamilySpec
    polynomial: Polynomial
    theorem: Theorem | None = None
    dominance: DominanceWitness | None = None
    arithmetic: ArithmeticWitness | None = None
    printed_ell: int | None = None
    derived_ell: int | None = None
    # the family's stated value of |f(n)| / d, checked against the real one
    claimed_quotient: int | None = None
    notes: list[str] = field(default_factory=list)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise FamilyParameterError(message)


def _sign(spec: FamilySpec) -> int:
    s = spec.get("sign", 1)
    _require(s in (1, -1), "sign must be +1 or -1")
    return s


def _prime(p: int) -> None:
    _require(p >= 2 and is_prime(p), f"p = {p} is not prime")


def _coeffs(m: int, entries: dict[int, int]) -> Polynomial:
    c = [0] * (m + 1)
    for i, a in entries.items():
        c[i] += a
    return Polynomial(c)


def _build_f1(spec):
    p, ell, m, k, d = (spec[x] for x in ("p", "ell", "m", "k", "d"))
    _prime(p)
    _require(min(ell, m, k, d) >= 1, "ell, m, k, d must be positive")
    _require(k >= m + ell, "need k >= m + ell")
    _require(m > ell, "need m > ell")
    _require(p >= 1 + d, "need p >= 1 + d")
    _require(gcd(p, ell) == 1, "need gcd(p, ell) = 1")
    _require(gcd(k, ell) == 1, "need gcd(k, ell) = 1")
    entries = {i: p ** (ell - i) for i in range(ell)}
    entries[ell] = -ell
    entries[m] = _sign(spec) * p**k * d
    dom = DominanceWitness(DominanceKind.DISK_T1, Fraction(1))
    return _coeffs(m, entries), Theorem.T1, dom, p, ell, p ** (k + m)


def _build_f2(spec):
    p, ell, j, m, k, d = (spec[x] for x in ("p", "ell", "j", "m", "k", "d"))
    _prime(p)
    _require(ell >= 2, "need ell >= 2")
    _require(j > ell, "need j > ell")
    _require(k >= 2 * (m + ell) + j, "need k >= 2(m + ell) + j")
    _require(m >= j + 1, "need m >= j + 1")
    _require(d >= 1 and p >= 1 + d, "need d >= 1 and p >= 1 + d")
    _require(gcd(p, ell - 1) == 1, "need gcd(p, ell - 1) = 1")
    _require(gcd(k, ell) == 1, "need gcd(k, ell) = 1")
    entries = {0: p**m}
    for i in range(1, ell):
        entries[i] = p ** (ell - i)
    entries[ell] = -(ell - 1)
    entries[j] = _sign(spec) * p ** (k - j) * d
    entries[m] = -1
    dom = DominanceWitness(DominanceKind.ANNULUS_T2, Fraction(1, p), Fraction(p * p), j)
    return _coeffs(m, entries), Theorem.T2, dom, p, ell, p**k


def _build_f3(spec):
    p, m, k, d = (spec[x] for x in ("p", "m", "k", "d"))
    _prime(p)
    _require(m >= 2 and k >= m + 2 and m + 2 >= 4, "need k >= m + 2 >= 4")
    _require(1 <= d <= p * (p - 1), "need 1 <= d <= p(p - 1)")
    _require(p * p > p + d, "need n = p^2 > p + d")
    entries = {0: -p * p, 1: 1, m: _sign(spec) * p ** (k - m) * d}
    dom = DominanceWitness(DominanceKind.DISK_T1, Fraction(p))
    return _coeffs(m, entries), Theorem.T1, dom, p * p, 1, p ** (k + m)


def _build_f4(spec):
    p, m, k, d = (spec[x] for x in ("p", "m", "k", "d"))
    _prime(p)
    _require(k >= m >= 2, "need k >= m >= 2")
    _require(d >= 1 and p >= 1 + d, "need d >= 1 and p >= 1 + d")
    # sum_{t=1}^{m-1} (z - p)^t, expanded
    entries = {i: sum(comb(t, i) * (-p) ** (t - i) for t in range(max(i, 1), m)) for i in range(m)}
    entries[m] = _sign(spec) * p ** (2 * k - 2) * d
    dom = DominanceWitness(DominanceKind.DISK_T1, Fraction(1))
    return _coeffs(m, entries), Theorem.T1, dom, p, 1, p ** (2 * k + m - 2)


def _build_f5(spec):
    p, m, j, d = (spec[x] for x in ("p", "m", "j", "d"))
    _prime(p)
    _require(m >= 3, "need m >= 3")
    _require(2 <= j <= m - 1, "need 2 <= j <= m - 1")
    _require(1 <= d <= p - 1, "need 1 <= d <= p - 1")
    entries = {0: p**m - p, 1: 1, j: _sign(spec) * p ** (1 + 2 * m + j) * d, m: -1}
    dom = DominanceWitness(DominanceKind.ANNULUS_T2, Fraction(1, p), Fraction(p * p), j)
    return _coeffs(m, entries), Theorem.T2, dom, p, 1, p ** (1 + 2 * (m + j))


def _build_f6(spec):
    p, m, j, k, d = (spec[x] for x in ("p", "m", "j", "k", "d"))
    _prime(p)
    _require(m >= 3, "need m >= 3")
    _require(2 <= j <= m - 1, "need 2 <= j <= m - 1")
    _require(k >= 3 * m - 2 * j, "need k >= 3m - 2j")
    _require(1 <= d <= p - 1, "need 1 <= d <= p - 1")
    entries = {0: p**m - p, 1: 1, j: _sign(spec) * p**k * d, m: -1}
    dom = DominanceWitness(DominanceKind.ANNULUS_T3, Fraction(1), Fraction(p + d), j)
    return _coeffs(m, entries), Theorem.T3, dom, p, 1, p ** (k + j)


_BUILDERS = {
    Family.F1: _build_f1,
    Family.F2: _build_f2,
    Family.F3: _build_f3,
    Family.F4: _build_f4,
    Family.F5: _build_f5,
    Family.F6: _build_f6,
}


def generate(spec: FamilySpec) -> FamilyInstance:
    if spec.family is Family.THEOREM_A:
        m = spec["m"]
        _require(m >= 2, "need m >= 2")
        return FamilyInstance(spec, theorem_a_polynomial(m))

    f, theorem, dom, n, printed_ell, claimed = _BUILDERS[spec.family](spec)
    p = spec["p"]
    inst = FamilyInstance(spec, f, theorem, dom, printed_ell=printed_ell, claimed_quotient=claimed)
    value = evaluate(f, n)
    split = next((s for s in prime_power_splits(value) if s.p == p), None)
    if split is None:
        inst.notes.append(f"f({n}) = {value} is not divisible by p = {p}")
        return inst
    if abs(value) != claimed * spec["d"]:
        inst.notes.append(f"|f({n})| = {abs(value)} differs from the family's claim {claimed}*d")
    s = taylor_shift(f, n).s
    derived = compute_ell(s, p, split.k, f.degree)
    inst.derived_ell = derived
    if derived != printed_ell:
        inst.notes.append(
            f"family ell = {printed_ell}, admissible ell from the Taylor coefficients: {derived}"
        )
    inst.arithmetic = ArithmeticWitness(n, split, derived if derived is not None else printed_ell)
    return inst


def validate_family_witness(spec: FamilySpec) -> CheckReport:
    """Run the family's theorem checker on the generated instance."""
    inst = generate(spec)
    if spec.family is Family.THEOREM_A:
        rep = theorem_a_validate(spec["m"])
        records = [CheckRecord(name, ok) for name, ok in rep.checks.items()]
        return CheckReport(Status.PASS if rep.passed else Status.FAIL, records)
    if inst.arithmetic is None:
        return CheckReport(Status.FAIL, [CheckRecord("value_split", False, "; ".join(inst.notes))],
                           inst.theorem)
    return check(inst.theorem, inst.polynomial, inst.dominance, inst.arithmetic)


def _k_range(lo: int, extra: int, ell: int = 1) -> Iterator[int]:
    for k in range(lo, lo + extra + 1):
        if gcd(k, ell) == 1:
            yield k


def sweep(primes=(2, 3, 5, 7), m_max: int = 5, k_extra: int = 2) -> Iterator[FamilySpec]:
    """Every constraint-satisfying parameter tuple in the stated ranges, both signs."""
    signs = (1, -1)
    for p in primes:
        for m in range(2, m_max + 1):
            for ell in range(1, m):
                if gcd(p, ell) != 1:
                    continue
                for k in _k_range(m + ell, k_extra, ell):
                    for d in range(1, p):
                        for s in signs:
                            yield FamilySpec.of("F1", p=p, ell=ell, m=m, k=k, d=d, sign=s)
            for ell in range(2, m):
                if gcd(p, ell - 1) != 1:
                    continue
                for j in range(ell + 1, m):
                    for k in _k_range(2 * (m + ell) + j, k_extra, ell):
                        for d in range(1, p):
                            for s in signs:
                                yield FamilySpec.of("F2", p=p, ell=ell, j=j, m=m, k=k, d=d, sign=s)
            for k in _k_range(max(m + 2, 4), k_extra):
                for d in range(1, p * (p - 1) + 1):
                    if p * p > p + d:
                        for s in signs:
                            yield FamilySpec.of("F3", p=p, m=m, k=k, d=d, sign=s)
            for k in _k_range(m, k_extra):
                for d in range(1, p):
                    for s in signs:
                        yield FamilySpec.of("F4", p=p, m=m, k=k, d=d, sign=s)
            if m >= 3:
                for j in range(2, m):
                    for d in range(1, p):
                        for s in signs:
                            yield FamilySpec.of("F5", p=p, m=m, j=j, d=d, sign=s)
                    for k in _k_range(3 * m - 2 * j, k_extra):
                        for d in range(1, p):
                            for s in signs:
                                yield FamilySpec.of("F6", p=p, m=m, j=j, k=k, d=d, sign=s)
