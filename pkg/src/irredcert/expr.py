"""Text form of polynomials: ``-4 + z + 4*z^2``.

Grammar (whitespace insignificant, variable fixed as ``z``)::

    expr := ['+'|'-'] term (('+'|'-') term)*
    term := INT | INT ['*'] 'z' ['^' UINT] | 'z' ['^' UINT]
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .poly import Polynomial


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class ParsedInput:
    polynomial: Polynomial
    # (power, start, end) for every term, in source order
    spans: tuple[tuple[int, int, int], ...]


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


def _tokens(text: str):
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            yield "int", m.group(1), start
        elif m.group(2) is not None:
            yield "name", m.group(2), start
        else:
            yield "op", m.group(3), start
        pos = m.end()
    yield "end", "", len(text)


def parse_polynomial(text: str) -> ParsedInput:
    toks = list(_tokens(text))
    i = 0
    coeffs: dict[int, int] = {}
    spans = []

    def peek():
        return toks[i]

    def take():
        nonlocal i
        tok = toks[i]
        i += 1
        return tok

    def expect_var():
        kind, val, pos = take()
        if kind != "name":
            raise PolynomialSyntaxError(f"expected 'z', got {val!r}", pos)
        if val != "z":
            raise PolynomialSyntaxError(f"unknown variable {val!r}", pos)

    def power():
        if peek()[:2] == ("op", "^"):
            take()
            kind, val, pos = take()
            if kind != "int":
                raise PolynomialSyntaxError("expected exponent", pos)
            return int(val)
        return 1

    sign = 1
    kind, val, pos = peek()
    if kind == "op" and val in "+-":
        take()
        sign = -1 if val == "-" else 1
    while True:
        kind, val, start = peek()
        if kind == "int":
            take()
            c = int(val)
            if peek()[:2] == ("op", "*"):
                take()
                expect_var()
                k = power()
            elif peek()[0] == "name":
                expect_var()
                k = power()
            else:
                k = 0
        elif kind == "name":
            expect_var()
            c = 1
            k = power()
        else:
            raise PolynomialSyntaxError(
                "unexpected end of input" if kind == "end" else f"unexpected {val!r}",
                start,
            )
        coeffs[k] = coeffs.get(k, 0) + sign * c
        _, last, last_pos = toks[i - 1]
        spans.append((k, start, last_pos + len(last)))
        kind, val, pos = peek()
        if kind == "end":
            break
        if kind == "op" and val in "+-":
            take()
            sign = -1 if val == "-" else 1
            continue
        raise PolynomialSyntaxError(f"unexpected {val!r}", pos)

    top = max(coeffs, default=0)
    poly = Polynomial(coeffs.get(k, 0) for k in range(top + 1))
    return ParsedInput(poly, tuple(spans))


def parse(text: str) -> Polynomial:
    return parse_polynomial(text).polynomial


def format_polynomial(f: Polynomial) -> str:
    """Inverse of :func:`parse`, constant term first."""
    if f.is_zero():
        return "0"
    parts = []
    for k, a in enumerate(f.coeffs):
        if a == 0:
            continue
        mag = abs(a)
        if k == 0:
            body = str(mag)
        else:
            var = "z" if k == 1 else f"z^{k}"
            body = var if mag == 1 else f"{mag}*{var}"
        if not parts:
            parts.append(("-" if a < 0 else "") + body)
        else:
            parts.append(("- " if a < 0 else "+ ") + body)
    return " ".join(parts)
