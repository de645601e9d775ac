import json
import random
from fractions import Fraction

import pytest
import sympy

from irredcert.certificate import (
    FILE_SUFFIX,
    Certificate,
    CertificateFormatError,
    PrimalityMode,
    deserialize,
    serialize,
    to_json,
    verify,
    verify_bytes,
)
from irredcert.criteria import SearchConfig, search
from irredcert.numtheory import DETERMINISTIC_BOUND, PrimePowerSplit
from irredcert.poly import Polynomial
from irredcert.report import ArithmeticWitness, Status, Theorem
from irredcert.zerobounds import DominanceKind, DominanceWitness

from fuzz import numeric_fields, searched_certificates, tampered


def f3_certificate():
    return Certificate.build(
        Theorem.T1,
        Polynomial([-4, 1, 4]),
        DominanceWitness(DominanceKind.DISK_T1, Fraction(57, 50)),
        ArithmeticWitness(4, PrimePowerSplit(1, 2, 6, 1), 1),
    )


def _edit(cert, section, key, value):
    obj = to_json(cert)
    obj[section][key] = value
    return json.dumps(obj)


def test_f3_certificate_verifies():
    rep = verify(f3_certificate())
    assert rep.status is Status.PASS, rep.format()


def test_k_edit_fails_value_split():
    rep = verify_bytes(_edit(f3_certificate(), "arithmetic", "k", "5"))
    assert rep.status is Status.FAIL
    assert rep.failure == "value_split"


def test_ell_edit_fails_gcd():
    rep = verify_bytes(_edit(f3_certificate(), "arithmetic", "ell", "2"))
    assert rep.status is Status.FAIL
    failed = {r.name for r in rep.records if not r.passed}
    assert "gcd_k_ell" in failed


def test_round_trip_is_exact():
    c = f3_certificate()
    data = serialize(c)
    assert data.endswith(b"\n") and not data.endswith(b"\n\n")
    assert deserialize(data) == c
    assert serialize(deserialize(data)) == data


def test_field_order_is_fixed():
    keys = list(json.loads(serialize(f3_certificate())))
    assert keys == ["format", "version", "tool_version", "theorem", "polynomial", "dominance",
                    "arithmetic", "primality_mode", "shifted_digest", "seal"]


def test_rejects_float_literals():
    text = serialize(f3_certificate()).decode().replace('"-4"', "-4.0", 1)
    with pytest.raises(CertificateFormatError):
        deserialize(text)


def test_rejects_bare_integers():
    text = serialize(f3_certificate()).decode().replace('"-4"', "-4", 1)
    with pytest.raises(CertificateFormatError):
        deserialize(text)


def test_rejects_negative_or_unreduced_denominator():
    obj = to_json(f3_certificate())
    obj["dominance"]["alpha"] = {"num": "-57", "den": "-50"}
    with pytest.raises(CertificateFormatError):
        deserialize(json.dumps(obj))
    obj["dominance"]["alpha"] = {"num": "114", "den": "100"}
    with pytest.raises(CertificateFormatError):
        deserialize(json.dumps(obj))


def test_missing_fields_are_listed():
    obj = to_json(f3_certificate())
    del obj["arithmetic"]
    del obj["seal"]
    with pytest.raises(CertificateFormatError) as err:
        deserialize(json.dumps(obj))
    assert "arithmetic" in str(err.value) and "seal" in str(err.value)
    rep = verify_bytes(json.dumps(obj))
    assert rep.status is Status.INPUT_ERROR


def test_structural_inconsistency_is_input_error():
    c = f3_certificate()
    bad = Certificate(Theorem.T2, c.polynomial, c.dominance, c.arithmetic, c.primality_mode,
                      c.tool_version, c.shifted_digest, c.seal)
    assert verify(bad).status is Status.INPUT_ERROR


def test_probable_prime_mode():
    # 4a + 1 prime above the deterministic bound, certified at n = 2
    a = (DETERMINISTIC_BOUND // 4) + 1
    while not sympy.isprime(4 * a + 1):
        a += 1
    f = Polynomial([1, 0, a])
    c = search(f, SearchConfig(n_max=5))
    assert c is not None and c.arithmetic.p == 4 * a + 1
    assert c.primality_mode == PrimalityMode("PROBABLE", 64)
    assert verify(c).passed
    downgraded = Certificate(c.theorem, c.polynomial, c.dominance, c.arithmetic,
                             PrimalityMode("DETERMINISTIC"), c.tool_version, c.shifted_digest, "")
    downgraded = Certificate(**{**downgraded.__dict__, "seal": c.seal})
    rep = verify(downgraded)
    assert rep.status is Status.FAIL
    assert not {r.name: r.passed for r in rep.records}["primality_mode"]


def test_searched_certificates_round_trip():
    for c in searched_certificates(5, 40):
        assert verify(c).passed
        assert deserialize(serialize(c)) == c


def test_tamper_every_field_of_one_certificate():
    cert = searched_certificates(6, 1)[0]
    obj = to_json(cert)
    paths = list(numeric_fields(obj))
    assert len(paths) >= 8
    for path in paths:
        for delta in (1, -1):
            rep = verify_bytes(json.dumps(tampered(obj, path, delta)))
            assert rep.status in (Status.FAIL, Status.INPUT_ERROR), (path, delta)


def test_file_suffix():
    assert FILE_SUFFIX == ".ipcert.json"


def test_verifier_is_independent_of_searcher_shift(monkeypatch):
    # the verifier derives the shifted coefficients on its own
    import irredcert.certificate as module

    c = f3_certificate()

    def broken(f, n):
        raise RuntimeError("searcher path used")

    monkeypatch.setattr(module, "taylor_shift", broken)
    assert verify(c).passed
