import random

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from irredcert.numtheory import (
    DETERMINISTIC_BOUND,
    PrimePowerSplit,
    factorize,
    is_deterministic_regime,
    is_prime,
    prime_power_base,
    prime_power_splits,
)

LIMIT = 10**6


def _smallest_prime_factor_table(limit):
    spf = np.zeros(limit + 1, dtype=np.int64)
    for q in range(2, int(limit**0.5) + 1):
        if spf[q] == 0:
            view = spf[q * q :: q]
            view[view == 0] = q
    unset = spf == 0
    spf[unset] = np.arange(limit + 1)[unset]
    return spf


@pytest.fixture(scope="module")
def spf():
    return _smallest_prime_factor_table(LIMIT)


def _factor_with_table(n, spf):
    out = {}
    while n > 1:
        q = int(spf[n])
        out[q] = out.get(q, 0) + 1
        n //= q
    return out


@pytest.mark.parametrize("n, expected", [(13, True), (64, False), (2**31 - 1, True), (2, True),
                                         (561, False), (3215031751, False), (2**61 - 1, True)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


def test_is_prime_rejects_small():
    with pytest.raises(ValueError):
        is_prime(1)


@pytest.mark.parametrize("n, expected", [(64, {2: 6}), (35, {5: 1, 7: 1}), (82944, {2: 10, 3: 4}),
                                         (1, {})])
def test_factorize_examples(n, expected):
    assert factorize(n) == expected


def test_factorize_exhaustive_below_a_million(spf):
    for n in range(2, LIMIT + 1):
        assert factorize(n) == _factor_with_table(n, spf), n


def test_is_prime_agrees_with_factorize():
    rng = random.Random(12)
    for _ in range(10**4):
        n = rng.randint(2, 10**12)
        fac = factorize(n)
        assert is_prime(n) == (fac == {n: 1})


def test_large_inputs_against_sympy():
    rng = random.Random(3)
    for _ in range(10):
        n = rng.randint(2, 10**24)
        assert factorize(n) == sympy.factorint(n)
    big = sympy.nextprime(10**30) * sympy.nextprime(10**15) * 2**5
    assert factorize(int(big)) == {int(sympy.nextprime(10**15)): 1, int(sympy.nextprime(10**30)): 1, 2: 5}


def test_probable_regime_above_bound():
    p = int(sympy.nextprime(DETERMINISTIC_BOUND))
    assert not is_deterministic_regime(p)
    assert is_prime(p)
    assert not is_prime(p * int(sympy.nextprime(p)))


def test_prime_power_base():
    assert prime_power_base(64) == (2, 6)
    assert prime_power_base(13) == (13, 1)
    assert prime_power_base(12) is None
    assert prime_power_base(1) is None


@pytest.mark.parametrize(
    "n, expected",
    [
        (64, [PrimePowerSplit(1, 2, 6, 1)]),
        (-14, [PrimePowerSplit(7, 2, 1, -1), PrimePowerSplit(2, 7, 1, -1)]),
        (1, []),
        (-1, []),
    ],
)
def test_prime_power_split_examples(n, expected):
    assert sorted(prime_power_splits(n), key=lambda s: s.p) == sorted(expected, key=lambda s: s.p)


def test_splits_reject_zero():
    with pytest.raises(ValueError):
        prime_power_splits(0)


@given(st.integers(-10**18, 10**18).filter(lambda n: n != 0))
def test_splits_reconstruct(n):
    splits = prime_power_splits(n)
    assert len(splits) == len(factorize(abs(n)))
    for s in splits:
        assert s.value == n
        assert s.d % s.p != 0 and s.k >= 1


@given(st.integers(-10**15, 10**15).filter(lambda n: n != 0), st.integers(1, 5000))
def test_bounded_splits_are_the_full_splits_with_small_cofactor(n, d_max):
    full = {s for s in prime_power_splits(n) if s.d <= d_max}
    assert set(prime_power_splits(n, d_max)) == full
