import random
from fractions import Fraction

import pytest

from irredcert.certificate import serialize, verify
from irredcert.criteria import (
    AUTO,
    Outcome,
    SearchConfig,
    certify,
    check,
    check_t1,
    check_t2,
    check_t3,
    compute_ell,
    corollary_fast_path,
    search,
)
from irredcert.numtheory import PrimePowerSplit, prime_power_splits
from irredcert.poly import Polynomial, evaluate, taylor_shift
from irredcert.report import ArithmeticWitness, Status, Theorem
from irredcert.zerobounds import DominanceKind, DominanceWitness

from fuzz import random_poly

F3 = Polynomial([-4, 1, 4])
F3_W = ArithmeticWitness(4, PrimePowerSplit(1, 2, 6, 1), 1)
F5 = Polynomial([6, 1, 2**9, -1])  # F5(p=2, m=3, j=2, d=1): f(2) = 2^11
F5_W = ArithmeticWitness(2, PrimePowerSplit(1, 2, 11, 1), 1)
F6 = Polynomial([120, 1, 3125, -1])  # F6(p=5, m=3, j=2, k=5, d=1): f(5) = 5^7
F6_W = ArithmeticWitness(5, PrimePowerSplit(1, 5, 7, 1), 1)


def test_compute_ell_examples():
    assert compute_ell([64, 33, 4], 2, 6, 2) == 1
    assert compute_ell([13, 7, 1], 13, 1, 2) == 1
    assert compute_ell([8, 8, 2, 1], 2, 3, 3) is None  # s_1 even, ell=2 gcd 1 but 2 | s_2
    assert compute_ell([9, 9, 1, 1], 3, 2, 3) is None  # ell=1: 3 | s_1; ell=2: gcd(2,2)
    assert compute_ell([8, 8, 8, 1], 2, 3, 3) is None  # ell=3 has gcd(3, 3) = 3
    assert compute_ell([8, 8, 1, 1], 2, 3, 3) == 2
    assert compute_ell([7, 1], 7, 1, 1) == 1


def test_check_t1_f3_instance_passes():
    rep = check_t1(F3, Fraction(57, 50), F3_W)
    assert rep.status is Status.PASS, rep.format()
    names = [r.name for r in rep.records]
    assert names == ["primitivity", "dominance", "value_split", "prime", "p_not_dividing_d",
                     "ell_range", "gcd_k_ell", "prefix_divisibility", "k_clause", "window"]


@pytest.mark.parametrize(
    "f, alpha, w, failure",
    [
        (Polynomial([2, 0, 4]), 2, F3_W, "primitivity"),
        (Polynomial([-1, -1, 1]), 1, F3_W, "dominance"),
        (F3, 2, ArithmeticWitness(4, PrimePowerSplit(1, 2, 5, 1), 1), "value_split"),
        (F3, 2, ArithmeticWitness(4, PrimePowerSplit(1, 2, 6, -1), 1), "value_split"),
        (F3, 2, ArithmeticWitness(4, PrimePowerSplit(1, 2, 6, 1), 2), "gcd_k_ell"),
        (F3, 2, ArithmeticWitness(4, PrimePowerSplit(1, 2, 6, 1), 3), "ell_range"),
        (F3, Fraction(7, 2), F3_W, "window"),
        (F3, 2, ArithmeticWitness(4, PrimePowerSplit(1, 64, 1, 1), 1), "prime"),
        (F3, 2, ArithmeticWitness(4, PrimePowerSplit(2, 2, 5, 1), 1), "p_not_dividing_d"),
    ],
)
def test_check_t1_failures(f, alpha, w, failure):
    rep = check_t1(f, alpha, w)
    assert rep.status is Status.FAIL
    assert rep.failure == failure


def test_window_is_non_strict():
    # n = alpha + d exactly
    assert check_t1(F3, 3, F3_W).passed


def test_k_clause_failure():
    # z^3 at n = 2: s = [8, 12, 6, 1], and 2 | s_1
    f = Polynomial([0, 0, 0, 1])
    rep = check_t1(f, 1, ArithmeticWitness(2, PrimePowerSplit(1, 2, 3, 1), 1))
    assert rep.failure == "k_clause"


def test_prefix_failure():
    # f = z^3 - 3z^2 - 3z - 3: f(5) = 32, s = [32, 42, 12, 1]; 2^5 does not divide s_1
    f = Polynomial([-3, -3, -3, 1])
    rep = check_t1(f, 4, ArithmeticWitness(5, PrimePowerSplit(1, 2, 5, 1), 2))
    assert taylor_shift(f, 5).s == (32, 42, 12, 1)
    assert rep.failure == "prefix_divisibility"


def test_check_t2_f5_instance():
    assert check_t2(F5, Fraction(1, 2), 4, 2, F5_W).passed
    # beta - d < n
    w = ArithmeticWitness(2, PrimePowerSplit(1, 2, 11, 1), 1)
    assert check_t2(F5, Fraction(1, 2), Fraction(5, 2), 2, w).failure in ("dominance", "window")
    assert check_t2(Polynomial([6, 1, 2**12, -1]), Fraction(1, 2), Fraction(5, 2), 2,
                    ArithmeticWitness(2, PrimePowerSplit(1, 2, 14, 1), 1)).failure == "window"


def test_check_t2_input_errors():
    assert check_t2(F5, Fraction(1, 2), 4, 7, F5_W).status is Status.INPUT_ERROR
    assert check_t2(F5, 4, Fraction(1, 2), 2, F5_W).status is Status.INPUT_ERROR


def test_check_t3_f6_instance():
    assert check_t3(F6, 1, 6, 2, F6_W).passed
    assert check_t3(F6, 6, 6, 2, F6_W).status is Status.INPUT_ERROR
    assert check_t3(Polynomial([120, 1, 125, -1]), 1, 6, 2, F6_W).failure == "dominance"


def test_dispatch():
    dom = DominanceWitness(DominanceKind.ANNULUS_T3, Fraction(1), Fraction(6), 2)
    assert check(Theorem.T3, F6, dom, F6_W).passed
    assert check("T1", F3, DominanceWitness(DominanceKind.DISK_T1, Fraction(2)), F3_W).passed


def test_corollary_fast_path_examples():
    w = corollary_fast_path(Polynomial([1, 1, 1]), Fraction(1618034, 10**6), 3, 1)
    assert (w.p, w.k, w.d, w.ell) == (13, 1, 1, 1)
    w = corollary_fast_path(F3, 2, 4, 1)
    assert (w.p, w.k, w.d, w.ell) == (2, 6, 1, 1)
    # f(1) = 12 is not a prime power
    assert corollary_fast_path(Polynomial([10, 1, 1]), Fraction(1, 2), 1, 1) is None


def test_corollary_agrees_with_compute_ell():
    rng = random.Random(4)
    hits = 0
    for _ in range(400):
        f = random_poly(rng, rng.randint(2, 5), 9)
        n = rng.randint(1, 30)
        v = evaluate(f, n)
        if v == 0:
            continue
        for d in range(1, 4):
            w = corollary_fast_path(f, Fraction(1, 4), n, d)
            if w is None:
                continue
            hits += 1
            assert compute_ell(taylor_shift(f, n).s, w.p, w.k, f.degree) == 1
    assert hits > 20


def test_t3_top_index_matches_t1_as_checker():
    rng = random.Random(9)
    compared = 0
    for _ in range(300):
        f = random_poly(rng, rng.randint(2, 5), 20)
        n = rng.randint(2, 40)
        v = evaluate(f, n)
        if v == 0:
            continue
        alpha = Fraction(rng.randint(1, 80), 8)
        for split in prime_power_splits(v, 10):
            w = ArithmeticWitness(n, split, 1)
            t1 = check_t1(f, alpha, w)
            # beta large enough that the beta window never binds
            t3 = check_t3(f, alpha, alpha + n + split.d + 1, f.degree, w)
            assert t1.passed == t3.passed
            compared += 1
    assert compared > 50


@pytest.mark.parametrize(
    "coeffs, n, p",
    [
        ([1, 1, 1], 3, 13),
        ([-1, -1, 1], 3, 5),
        ([-4, 1, 4], 4, 2),
    ],
)
def test_search_examples(coeffs, n, p):
    res = certify(Polynomial(coeffs), SearchConfig(n_max=10))
    assert res.outcome is Outcome.CERTIFIED_IRREDUCIBLE
    c = res.certificate
    assert c.theorem is Theorem.T1
    assert (c.arithmetic.n, c.arithmetic.p, c.arithmetic.ell) == (n, p, 1)
    assert verify(c).passed


def test_search_golden_ratio_alpha():
    c = search(Polynomial([1, 1, 1]), SearchConfig(n_max=10))
    assert c.dominance.alpha == Fraction(3474701533, 2**31)
    assert Fraction(1618033, 10**6) < c.dominance.alpha < Fraction(1618034, 10**6)


def test_search_never_certifies_reducible():
    for coeffs in ([-1, 0, 1], [4, 0, 0, 0, 1], [-1, 0, 0, 0, 0, 0, 1], [2, 3, 1]):
        assert search(Polynomial(coeffs), SearchConfig(n_max=300)) is None


def test_not_applicable():
    assert certify(Polynomial([1, 1])).outcome is Outcome.NOT_APPLICABLE
    assert certify(Polynomial([2, 0, 4])).outcome is Outcome.NOT_APPLICABLE
    assert certify(Polynomial([])).outcome is Outcome.NOT_APPLICABLE


def test_theorem_set_is_respected():
    f = Polynomial([1, 1, 0, 1])
    for thm in Theorem:
        c = search(f, SearchConfig(n_max=200, theorem_set={thm}))
        assert c is not None and c.theorem is thm


def test_explicit_grid():
    cfg = SearchConfig(n_max=50, theorem_set={Theorem.T2}, t2t3_grid=[(2, Fraction(1, 2), 4)])
    c = search(F5, cfg)
    assert c is not None
    assert (c.dominance.alpha, c.dominance.beta, c.dominance.j) == (Fraction(1, 2), 4, 2)
    assert c.arithmetic.n <= 3
    with pytest.raises(ValueError):
        certify(F5, SearchConfig(theorem_set={Theorem.T2}, t2t3_grid=[(9, 1, 2)]))


def test_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(n_max=0)
    with pytest.raises(ValueError):
        SearchConfig(theorem_set={"T4"})
    assert SearchConfig().t2t3_grid == AUTO


def test_search_is_deterministic():
    rng = random.Random(21)
    for _ in range(30):
        f = random_poly(rng, rng.randint(2, 5), 10)
        a = certify(f, SearchConfig(n_max=100))
        b = certify(f, SearchConfig(n_max=100))
        assert a.outcome == b.outcome
        if a.certificate is not None:
            assert serialize(a.certificate) == serialize(b.certificate)


def test_negative_values_carry_sign():
    f = Polynomial([-13, 0, 1])  # f(n) < 0 for small n
    c = search(f, SearchConfig(n_max=200))
    assert c is not None
    assert c.arithmetic.sign * c.arithmetic.p ** c.arithmetic.k * c.arithmetic.d == evaluate(f, c.arithmetic.n)
