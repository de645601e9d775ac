import json
import math

from irredcert.poly import Polynomial
from irredcert.scan import ScanConfig, corpus, scan, summary_json


def _brute_count(degree, bound):
    # every coefficient vector with nonzero lead and content 1
    total = 0
    for idx in range((2 * bound + 1) ** (degree + 1)):
        c = []
        for _ in range(degree + 1):
            idx, r = divmod(idx, 2 * bound + 1)
            c.append(r - bound)
        if c[-1] != 0 and math.gcd(*c) == 1:
            total += 1
    return total


def test_corpus_counts():
    assert sum(1 for _ in corpus(1, 1)) == 6
    assert sum(1 for _ in corpus(2, 2)) == _brute_count(2, 2) == 82
    assert sum(1 for _ in corpus(3, 2)) == _brute_count(3, 2)


def test_corpus_members():
    polys = list(corpus(2, 1))
    assert all(f.degree == 2 for f in polys)
    assert Polynomial([1, 0, 1]) in polys
    assert len(set(polys)) == len(polys)


def test_small_scan_counts():
    s = scan(ScanConfig((2,), 2))
    c = s["counts"]
    assert c["total"] == 82
    assert c["certified"] + c["no_witness"] == c["total"]
    assert c["oracle_irreducible"] + c["oracle_reducible"] + c["oracle_skipped"] == c["total"]
    assert c["disagreements"] == 0 and s["disagreements"] == []
    assert c["oracle_skipped"] == 0
    assert sum(s["certified_by_theorem"].values()) == c["certified"]
    assert s["per_degree"]["2"]["total"] == 82


def test_oracle_refusals_are_skipped_not_agreed():
    s = scan(ScanConfig((7,), 1, n_max=20))
    c = s["counts"]
    assert c["oracle_skipped"] == c["total"] > 0
    assert c["oracle_irreducible"] == c["oracle_reducible"] == c["disagreements"] == 0


def test_summary_is_deterministic_and_parallel_safe():
    a = summary_json(scan(ScanConfig((2, 3), 1)))
    b = summary_json(scan(ScanConfig((2, 3), 1, jobs=2)))
    assert a == b
    assert a.endswith("\n")
    assert json.loads(a)["config"] == {"degrees": [2, 3], "coeff_bound": 1, "n_max": 200}
