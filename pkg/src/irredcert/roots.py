"""Aberth-Ehrlich root finding, used only to cross-check the exact predicates.

Nothing in a certificate depends on these floating-point results.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .poly import Polynomial, evaluate
from .zerobounds import theorem_a_bound

MAX_ITER = 500
ANGLE_OFFSET = 0.4
DEFAULT_MARGIN = 1e-6


@dataclass
class RootSet:
    roots: np.ndarray  # complex128, one entry per zero (with multiplicity)
    residuals: np.ndarray  # |f(t)| / sum |a_i| |t|^i, per root
    iterations: int
    converged: bool

    @property
    def moduli(self) -> np.ndarray:
        return np.abs(self.roots)

    def __len__(self) -> int:
        return len(self.roots)


def _scaled_float_coeffs(f: Polynomial) -> tuple[np.ndarray, int]:
    """Coefficients of f(2^e z) / 2^t as floats, with roots of order one.

    Returns (coeffs low-to-high, e).  Both scalings are by powers of two, so
    the only rounding is the one int -> float conversion per coefficient.
    """
    m = f.degree
    lead = abs(f.coeffs[m])
    # Fujiwara-style radius 2^e ~ max |a_i / a_m|^(1/(m-i))
    logs = [
        (math.log2(abs(a)) - math.log2(lead)) / (m - i)
        for i, a in enumerate(f.coeffs[:m])
        if a
    ]
    e = round(max(logs)) if logs else 0
    scaled = [Fraction(a) * Fraction(2) ** (e * i) for i, a in enumerate(f.coeffs)]
    top = max(abs(x) for x in scaled)
    t = top.numerator.bit_length() - top.denominator.bit_length()
    shift = Fraction(2) ** t
    return np.array([float(x / shift) for x in scaled], dtype=np.float64), e


def _horner(c: np.ndarray, dc: np.ndarray, z: np.ndarray):
    p = np.full_like(z, c[-1])
    for a in c[-2::-1]:
        p = p * z + a
    q = np.full_like(z, dc[-1]) if len(dc) else np.zeros_like(z)
    for a in dc[-2::-1]:
        q = q * z + a
    return p, q


def _relative_residuals(f: Polynomial, roots: np.ndarray) -> np.ndarray:
    out = []
    for r in roots:
        r = complex(r)
        val = 0j
        scale = 0.0
        for a in reversed(f.coeffs):
            val = val * r + float(a)
            scale = scale * abs(r) + abs(float(a))
        out.append(abs(val) / scale if scale else 0.0)
    return np.array(out)


def find_roots(f: Polynomial) -> RootSet:
    """All complex zeros of f by simultaneous Aberth-Ehrlich iteration.

    Starting points sit on the circle of the Cauchy radius of the scaled
    polynomial at angles 2*pi*k/m + 0.4.  Deterministic: no randomness.
    """
    m = f.degree
    if m < 1:
        raise ValueError("find_roots needs degree >= 1")
    if m == 1:
        root = np.array([complex(-Fraction(f.coeffs[0], f.coeffs[1]))])
        return RootSet(root, _relative_residuals(f, root), 0, True)

    c, e = _scaled_float_coeffs(f)
    c = c.astype(np.complex128)
    dc = c[1:] * np.arange(1, m + 1)
    radius = 1.0 + float(np.max(np.abs(c[:-1]))) / abs(c[-1])
    k = np.arange(m)
    z = radius * np.exp(1j * (2 * np.pi * k / m + ANGLE_OFFSET))
    tol = 1e-14 * radius
    converged = False
    it = 0
    for it in range(1, MAX_ITER + 1):
        p, q = _horner(c, dc, z)
        done = p == 0
        with np.errstate(divide="ignore", invalid="ignore"):
            w = np.where(done, 0, p / q)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0)
            s = inv.sum(axis=1)
            corr = np.where(done, 0, w / (1 - w * s))
        corr = np.where(np.isfinite(corr), corr, 0)
        z = z - corr
        if np.max(np.abs(corr)) < tol:
            converged = True
            break
    roots = z * 2.0**e
    # sort for reproducible output: by modulus, then argument
    order = np.lexsort((np.angle(roots), np.round(np.abs(roots), 12)))
    roots = roots[order]
    return RootSet(roots, _relative_residuals(f, roots), it, converged)


def count_in_disk(rs: RootSet, r, margin: float = DEFAULT_MARGIN) -> int:
    """Number of roots with modulus < r + margin."""
    return int(np.sum(rs.moduli < float(r) + margin))


def annulus_empty(rs: RootSet, alpha, beta, margin: float = DEFAULT_MARGIN) -> bool:
    """True iff no root has modulus in [alpha + margin, beta - margin]."""
    mod = rs.moduli
    inside = (mod >= float(alpha) + margin) & (mod <= float(beta) - margin)
    return not bool(np.any(inside))


def theorem_a_polynomial(m: int) -> Polynomial:
    """z^m - z^(m-1) - ... - z - 1."""
    if m < 2:
        raise ValueError("m must be >= 2")
    return Polynomial([-1] * m + [1])


@dataclass
class TheoremAReport:
    m: int
    checks: dict[str, bool] = field(default_factory=dict)
    zeta: float = float("nan")
    zeta_bracket: tuple[Fraction, Fraction] | None = None
    bound: float = float("nan")
    max_other_modulus: float = float("nan")

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        lo, hi = self.zeta_bracket or (None, None)
        return {
            "m": self.m,
            "passed": self.passed,
            "checks": self.checks,
            "zeta": self.zeta,
            "zeta_bracket": None if lo is None else [str(lo), str(hi)],
            "bound": self.bound,
            "max_other_modulus": self.max_other_modulus,
        }


def _bracket_zeta(f: Polynomial, lo: Fraction, hi: Fraction, steps: int) -> tuple[Fraction, Fraction]:
    # exact bisection on a sign change f(lo) < 0 < f(hi)
    for _ in range(steps):
        mid = (lo + hi) / 2
        if evaluate(f, mid) < 0:
            lo = mid
        else:
            hi = mid
    return lo, hi


def theorem_a_validate(m: int, margin: float = DEFAULT_MARGIN) -> TheoremAReport:
    """Exact and numeric checks of the root geometry of z^m - z^(m-1) - ... - 1.

    Exact: f(2 - 2^(1-m)) < 0 < f(2) = 1, and the identity
    (1 - 2^(1-m)) f(2 - 2^(1-m)) = 1 - 2 (1 - 2^-m)^m.
    Numeric: one root in (2 - 2^(1-m), 2), the other m - 1 roots have
    modulus < 1 - margin and lie within the specialised zero bound.
    """
    f = theorem_a_polynomial(m)
    rep = TheoremAReport(m)
    half = Fraction(1, 2 ** (m - 1))
    left = 2 - half
    f_left = evaluate(f, left)
    rep.checks["f(2) = 1"] = evaluate(f, 2) == 1
    rep.checks["f(2 - 2^(1-m)) < 0"] = f_left < 0
    rep.checks["sign identity"] = (1 - half) * f_left == 1 - 2 * (1 - Fraction(1, 2**m)) ** m
    if m % 2 == 0:
        rep.checks["f(-1) = 1 and f(0) = -1"] = evaluate(f, -1) == 1 and evaluate(f, 0) == -1

    lo, hi = _bracket_zeta(f, left, Fraction(2), m + 40)
    rep.zeta_bracket = (lo, hi)
    zeta_q = (lo + hi) / 2

    rs = find_roots(f)
    mods = rs.moduli
    real_big = [
        i for i, r in enumerate(rs.roots)
        if abs(r.imag) < 1e-9 and float(left) < r.real < 2
    ]
    rep.checks["one root in (2 - 2^(1-m), 2)"] = len(real_big) == 1
    if len(real_big) != 1:
        return rep
    i0 = real_big[0]
    rep.zeta = float(rs.roots[i0].real)
    rep.checks["numeric root inside exact bracket"] = abs(rep.zeta - float(zeta_q)) < 1e-12
    others = np.delete(mods, i0)
    rep.max_other_modulus = float(np.max(others))
    rep.checks["other roots inside unit disk"] = bool(np.all(others < 1 - margin))
    bound = theorem_a_bound(zeta_q, m)
    rep.bound = float(bound)
    rep.checks["zero bound < 1"] = bound < 1
    rep.checks["other roots within zero bound"] = bool(np.all(others <= rep.bound + 1e-9))
    return rep
