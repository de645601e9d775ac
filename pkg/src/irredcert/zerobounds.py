"""Coefficient inequalities that pin down where the zeros of f can lie.

All comparisons are strict and exact (ints and Fractions only).

* disk dominance at radius alpha: every zero has modulus < alpha;
* the two annulus tests: no zero has modulus in [alpha, beta].
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .poly import Polynomial

Number = Union[int, Fraction]


class DominanceKind(str, enum.Enum):
    DISK_T1 = "DISK_T1"
    ANNULUS_T2 = "ANNULUS_T2"
    ANNULUS_T3 = "ANNULUS_T3"


@dataclass(frozen=True)
class DominanceWitness:
    kind: DominanceKind
    alpha: Fraction
    beta: Fraction | None = None
    j: int | None = None

    def holds_for(self, f: Polynomial) -> bool:
        if self.kind is DominanceKind.DISK_T1:
            return check_disk_dominance(f, self.alpha)
        if self.kind is DominanceKind.ANNULUS_T2:
            return check_annulus_t2(f, self.alpha, self.beta, self.j)
        return check_annulus_t3(f, self.alpha, self.beta, self.j)


def _positive(x: Number, name: str) -> Fraction:
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"{name} must be positive, got {x}")
    return x


def _annulus_args(f: Polynomial, alpha: Number, beta: Number, j: int):
    alpha = _positive(alpha, "alpha")
    beta = _positive(beta, "beta")
    if not alpha < beta:
        raise ValueError(f"need alpha < beta, got alpha={alpha}, beta={beta}")
    if f.is_zero():
        raise ValueError("zero polynomial")
    if not 0 <= j <= f.degree:
        raise ValueError(f"index j={j} outside 0..{f.degree}")
    return alpha, beta


def disk_sides(f: Polynomial, alpha: Number) -> tuple[Fraction, Fraction]:
    """(|a_m| alpha^m, sum_{i<m} |a_i| alpha^i)."""
    alpha = _positive(alpha, "alpha")
    m = f.degree
    if m < 1:
        raise ValueError("disk dominance needs degree >= 1")
    lhs = abs(f.coeffs[m]) * alpha**m
    return lhs, sum((abs(a) * alpha**i for i, a in enumerate(f.coeffs[:m])), Fraction(0))


def check_disk_dominance(f: Polynomial, alpha: Number) -> bool:
    """|a_m| alpha^m > sum_{i<m} |a_i| alpha^i."""
    alpha = _positive(alpha, "alpha")
    m = f.degree
    if m < 1:
        raise ValueError("disk dominance needs degree >= 1")
    # clear the denominator: multiply through by den^m
    num, den = alpha.numerator, alpha.denominator
    lhs = abs(f.coeffs[m]) * num**m
    rhs = sum(abs(a) * num**i * den ** (m - i) for i, a in enumerate(f.coeffs[:m]))
    return lhs > rhs


def annulus_t2_sides(f: Polynomial, alpha: Number, beta: Number, j: int) -> tuple[Fraction, Fraction]:
    """(|a_j| alpha^j, sum_{i != j} |a_i| beta^i)."""
    alpha, beta = _annulus_args(f, alpha, beta, j)
    lhs = abs(f.coeffs[j]) * alpha**j
    return lhs, sum((abs(a) * beta**i for i, a in enumerate(f.coeffs) if i != j), Fraction(0))


def check_annulus_t2(f: Polynomial, alpha: Number, beta: Number, j: int) -> bool:
    """|a_j| alpha^j > sum_{i != j} |a_i| beta^i."""
    lhs, rhs = annulus_t2_sides(f, alpha, beta, j)
    return lhs > rhs


def annulus_t3_sides(f: Polynomial, alpha: Number, beta: Number, j: int) -> tuple[Fraction, Fraction]:
    """(|a_j| alpha^m, beta^(m-j) sum_{i != j} |a_i| alpha^i).

    This is |a_j| alpha^j > (beta/alpha)^(m-j) sum_{i != j} |a_i| alpha^i
    multiplied through by alpha^(m-j).
    """
    alpha, beta = _annulus_args(f, alpha, beta, j)
    m = f.degree
    lhs = abs(f.coeffs[j]) * alpha**m
    rest = sum((abs(a) * alpha**i for i, a in enumerate(f.coeffs) if i != j), Fraction(0))
    return lhs, beta ** (m - j) * rest


def check_annulus_t3(f: Polynomial, alpha: Number, beta: Number, j: int) -> bool:
    lhs, rhs = annulus_t3_sides(f, alpha, beta, j)
    return lhs > rhs


def cauchy_bound(f: Polynomial) -> Fraction:
    """1 + max_{i<m} |a_i| / |a_m|; disk dominance always holds there."""
    m = f.degree
    top = max((abs(a) for a in f.coeffs[:m]), default=0)
    return 1 + Fraction(top, abs(f.coeffs[m]))


def _dominates_on_grid(abs_coeffs: list[int], N: int, bits: int) -> bool:
    # disk dominance at alpha = N / 2^bits, all in integers
    m = len(abs_coeffs) - 1
    return abs_coeffs[m] * N**m > sum(
        a * N**i << (bits * (m - i)) for i, a in enumerate(abs_coeffs[:m]) if a
    )


def minimal_disk_alpha(f: Polynomial, precision_bits: int = 32) -> Fraction:
    """Smallest alpha in 2^-bits * Z_{>0} at which disk dominance holds.

    |a_m| - sum |a_i| x^(i-m) is increasing in x > 0, so the predicate is
    monotone and bisection over the dyadic grid is exact.
    """
    if f.degree < 1:
        raise ValueError("need degree >= 1")
    if precision_bits < 1:
        raise ValueError("precision_bits must be >= 1")
    absc = [abs(a) for a in f.coeffs]
    hi_frac = cauchy_bound(f)
    hi = -(-(hi_frac.numerator << precision_bits) // hi_frac.denominator)
    if _dominates_on_grid(absc, 1, precision_bits):
        return Fraction(1, 1 << precision_bits)
    lo = 1
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _dominates_on_grid(absc, mid, precision_bits):
            hi = mid
        else:
            lo = mid
    return Fraction(hi, 1 << precision_bits)


def theorem_a_bound(zeta: Number, m: int) -> Fraction:
    """Modulus bound for the zeros of (z^m - z^(m-1) - ... - 1) / (z - zeta).

    max{ 1 - (zeta-1)/(zeta^(m-1)-1),  (1 - zeta^-(m-1)) / (zeta-1) },
    required for zeta in (2 - 2^(1-m), 2).
    """
    if m < 2:
        raise ValueError("m must be >= 2")
    zeta = Fraction(zeta)
    lo = 2 - Fraction(1, 2 ** (m - 1))
    if not lo < zeta < 2:
        raise ValueError(f"zeta={zeta} outside ({lo}, 2)")
    zp = zeta ** (m - 1)
    first = 1 - (zeta - 1) / (zp - 1)
    second = (1 - 1 / zp) / (zeta - 1)
    return max(first, second)
