"""Primality, factorisation and prime-power splits |N| = p^k * d, p not dividing d."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

# Miller-Rabin with the first 13 prime bases is exact below this bound.
DETERMINISTIC_BOUND = 3317044064679887385961981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
DEFAULT_ROUNDS = 64
TRIAL_LIMIT = 10**6


@dataclass(frozen=True, order=True)
class PrimePowerSplit:
    """|N| = p**k * d with p prime and p not dividing d; sign = sgn(N)."""

    d: int
    p: int
    k: int
    sign: int

    @property
    def value(self) -> int:
        return self.sign * self.p**self.k * self.d


@lru_cache(maxsize=None)
def _small_primes(limit: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for q in range(2, isqrt(limit) + 1):
        if sieve[q]:
            sieve[q * q :: q] = bytearray(len(range(q * q, limit + 1, q)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _strong_probable_prime(n: int, a: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_deterministic_regime(n: int) -> bool:
    return n < DETERMINISTIC_BOUND


def is_prime(n: int, rounds: int = DEFAULT_ROUNDS, rng: random.Random | None = None) -> bool:
    """Miller-Rabin primality test.

    Exact for n below :data:`DETERMINISTIC_BOUND`.  Above it, ``rounds``
    random bases are tried; the default generator is seeded from ``n`` so
    answers are reproducible.  Pass an independent ``rng`` to re-test.
    """
    if n < 2:
        raise ValueError(f"primality is defined for n >= 2, got {n}")
    for q in _MR_BASES:
        if n == q:
            return True
        if n % q == 0:
            return False
    if n < 43 * 43:
        return True
    if n < DETERMINISTIC_BOUND:
        return all(_strong_probable_prime(n, a) for a in _MR_BASES)
    if not all(_strong_probable_prime(n, a) for a in _MR_BASES):
        return False
    rng = rng or random.Random(n)
    return all(_strong_probable_prime(n, rng.randrange(2, n - 1)) for _ in range(rounds))


def _brent(n: int) -> int:
    """A nontrivial factor of the odd composite n (Pollard rho, Brent cycle)."""
    # deterministic restart schedule: c = 1, 2, 3, ... with start y0 = 2
    c = 0
    m = 128
    while True:
        c += 1
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g


def _rho_factor(n: int, out: dict[int, int]) -> None:
    stack = [n]
    while stack:
        x = stack.pop()
        if x == 1:
            continue
        if is_prime(x):
            out[x] = out.get(x, 0) + 1
            continue
        r = integer_root_if_power(x)
        if r is not None:
            base, e = r
            stack.extend([base] * e)
            continue
        g = _brent(x)
        stack.extend((g, x // g))


def factorize(n: int) -> dict[int, int]:
    """Complete prime factorisation {p: e} of n >= 1, keys ascending."""
    if n < 1:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    rest = n
    rest_is_prime = rest > 1 and is_prime(rest)
    for q in _small_primes(TRIAL_LIMIT):
        if rest_is_prime or q * q > rest:
            break
        if rest % q == 0:
            e = 0
            while rest % q == 0:
                rest //= q
                e += 1
            out[q] = e
            rest_is_prime = rest > 1 and is_prime(rest)
    if rest > 1:
        if rest_is_prime or rest < TRIAL_LIMIT**2:
            # trial division ran past sqrt(rest) or rest passed the primality test
            out[rest] = out.get(rest, 0) + 1
        else:
            _rho_factor(rest, out)
    return dict(sorted(out.items()))


def iroot(n: int, e: int) -> int:
    """floor(n ** (1/e)) for n >= 0."""
    if e == 1 or n < 2:
        return n
    if e == 2:
        return isqrt(n)
    x = 1 << -(-n.bit_length() // e)
    while True:
        y = ((e - 1) * x + n // x ** (e - 1)) // e
        if y >= x:
            return x
        x = y


def integer_root_if_power(n: int) -> tuple[int, int] | None:
    """(r, e) with r**e == n and e >= 2 maximal, or None if n is not a perfect power."""
    for e in range(n.bit_length(), 1, -1):
        r = iroot(n, e)
        if r > 1 and r**e == n:
            return r, e
    return None


def prime_power_base(q: int) -> tuple[int, int] | None:
    """(p, k) if q = p**k with p prime and k >= 1, else None."""
    if q < 2:
        return None
    if is_prime(q):
        return q, 1
    r = integer_root_if_power(q)
    if r is None:
        return None
    base, e = r
    inner = prime_power_base(base)
    if inner is None:
        return None
    return inner[0], inner[1] * e


def prime_power_splits(N: int, d_max: int | None = None) -> list[PrimePowerSplit]:
    """All splits |N| = p^k d with p prime, p not dividing d, sorted by (d, p).

    k is the full p-adic valuation of N.  With ``d_max`` only splits with
    d <= d_max are returned, and no factorisation beyond trial division up
    to d_max is needed: any prime above d_max must be the split prime.
    """
    if N == 0:
        raise ValueError("prime-power splits of 0 are undefined")
    sign = 1 if N > 0 else -1
    a = abs(N)
    if d_max is None:
        fac = factorize(a)
        return sorted(PrimePowerSplit(a // p**e, p, e, sign) for p, e in fac.items())
    if d_max < 1:
        return []
    if d_max > TRIAL_LIMIT:
        return [s for s in prime_power_splits(N) if s.d <= d_max]
    small: dict[int, int] = {}
    rest = a
    for q in _small_primes(TRIAL_LIMIT):
        if q > d_max or q * q > rest:
            break
        if rest % q == 0:
            e = 0
            while rest % q == 0:
                rest //= q
                e += 1
            small[q] = e
    if rest > 1 and rest <= d_max:
        # rest is a prime <= d_max (trial division stopped at sqrt(rest))
        small[rest] = small.get(rest, 0) + 1
        rest = 1
    splits = []
    if rest > 1:
        pk = prime_power_base(rest)
        if pk is not None:
            d = a // rest
            if d <= d_max:
                splits.append(PrimePowerSplit(d, pk[0], pk[1], sign))
        return splits
    for p, e in small.items():
        d = a // p**e
        if d <= d_max:
            splits.append(PrimePowerSplit(d, p, e, sign))
    return sorted(splits)
