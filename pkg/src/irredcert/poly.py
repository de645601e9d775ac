"""Dense univariate polynomials over the integers.

Coefficients are stored low-to-high: ``coeffs[i]`` is the coefficient of
``z**i``.  Everything here is exact big-integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(a) for a in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial a_0 + a_1 z + ... + a_m z^m.

    The zero polynomial is the empty coefficient tuple.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "Polynomial":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __call__(self, x):
        return evaluate(self, x)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return add(self, other)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return add(self, negate(other))

    def __neg__(self) -> "Polynomial":
        return negate(self)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return multiply(self, other)
        return scalar_mul(self, other)

    __rmul__ = __mul__

    def __str__(self) -> str:
        from .expr import format_polynomial

        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)})"


@dataclass(frozen=True)
class ShiftedPolynomial:
    """Coefficients s_i of f(z + n), i.e. s_i = f^(i)(n) / i!."""

    base: Polynomial
    n: int
    s: tuple[int, ...]

    def as_polynomial(self) -> Polynomial:
        return Polynomial(self.s)


def _require_nonzero(f: Polynomial) -> None:
    if f.is_zero():
        raise ValueError("zero polynomial")


def evaluate(f: Polynomial, x):
    """Horner evaluation; exact for int and Fraction arguments."""
    acc = 0
    for a in reversed(f.coeffs):
        acc = acc * x + a
    return acc


def taylor_shift(f: Polynomial, n: int) -> ShiftedPolynomial:
    """Coefficients of f(z + n) by repeated synthetic division by (z - n).

    Each division pass peels off one remainder, which is the next s_i.
    """
    _require_nonzero(f)
    if n < 0:
        raise ValueError("shift must be non-negative")
    work = list(f.coeffs)
    m = len(work) - 1
    s = []
    for top in range(m, -1, -1):
        # synthetic division of work[0..top] by (z - n), in place
        for i in range(top - 1, -1, -1):
            work[i] += n * work[i + 1]
        s.append(work[0])
        work = work[1:top + 1]
    return ShiftedPolynomial(f, n, tuple(s))


def reciprocal(f: Polynomial) -> Polynomial:
    """z^m f(1/z).  Leading zeros created by a_0 = 0 are stripped.

    The drop in degree is ``f.degree - reciprocal(f).degree``.
    """
    _require_nonzero(f)
    return Polynomial(reversed(f.coeffs))


def content(f: Polynomial) -> int:
    _require_nonzero(f)
    g = 0
    for a in f.coeffs:
        g = gcd(g, a)
    return g


def is_primitive(f: Polynomial) -> bool:
    return content(f) == 1


def primitive_part(f: Polynomial) -> Polynomial:
    """f / content(f), normalised to a positive leading coefficient."""
    c = content(f)
    if f.leading < 0:
        c = -c
    return Polynomial(a // c for a in f.coeffs)


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    n = max(len(f), len(g))
    return Polynomial(f[i] + g[i] for i in range(n))


def negate(f: Polynomial) -> Polynomial:
    return Polynomial(-a for a in f.coeffs)


def scalar_mul(f: Polynomial, c: int) -> Polynomial:
    return Polynomial(c * a for a in f.coeffs)


def multiply(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.is_zero() or g.is_zero():
        return Polynomial()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f.coeffs):
        if a:
            for j, b in enumerate(g.coeffs):
                out[i + j] += a * b
    return Polynomial(out)


def derivative(f: Polynomial) -> Polynomial:
    return Polynomial(i * a for i, a in enumerate(f.coeffs) if i)


def exact_quotient(f: Polynomial, g: Polynomial) -> Polynomial | None:
    """Return q with f = q*g over Z, or None if g does not divide f in Z[z]."""
    _require_nonzero(g)
    rem = list(f.coeffs)
    dg = g.degree
    lc = g.leading
    if len(rem) - 1 < dg:
        return Polynomial() if not rem else None
    q = [0] * (len(rem) - dg)
    for i in range(len(rem) - 1 - dg, -1, -1):
        c, r = divmod(rem[i + dg], lc)
        if r:
            return None
        q[i] = c
        if c:
            for t, b in enumerate(g.coeffs):
                rem[i + t] -= c * b
    if any(rem):
        return None
    return Polynomial(q)

