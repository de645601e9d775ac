"""Exhaustive soundness harness: searcher against the Kronecker oracle.

Every primitive polynomial of the requested degrees with coefficients in
[-B, B] is run through :func:`certify` and :func:`kronecker_factor`.  A
disagreement is a certified polynomial the oracle factors.  Inputs beyond
the oracle guards count as skipped, never as agreement.  The summary is a
pure function of the configuration, so repeated runs are byte-identical.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass
from multiprocessing import Pool

from .criteria import Outcome, SearchConfig, certify
from .oracle import OracleRefusal, kronecker_factor
from .poly import Polynomial, is_primitive

SCAN_N_MAX = 200


@dataclass(frozen=True)
class ScanConfig:
    degrees: tuple[int, ...]
    coeff_bound: int
    n_max: int = SCAN_N_MAX
    jobs: int = 1


def corpus(degree: int, bound: int):
    """Primitive polynomials of exact degree, coefficients low-to-high in [-bound, bound]."""
    rng = range(-bound, bound + 1)
    for tail in itertools.product(rng, repeat=degree):
        for lead in rng:
            if lead == 0:
                continue
            f = Polynomial(tail + (lead,))
            if is_primitive(f):
                yield f


def _classify(args) -> tuple:
    coeffs, n_max = args
    f = Polynomial(coeffs)
    res = certify(f, SearchConfig(n_max=n_max))
    try:
        oracle = "IRREDUCIBLE" if kronecker_factor(f).is_irreducible else "REDUCIBLE"
    except OracleRefusal:
        oracle = "SKIPPED"
    certified = res.outcome is Outcome.CERTIFIED_IRREDUCIBLE
    theorem = res.certificate.theorem.value if certified else ""
    return coeffs, res.outcome.value, theorem, oracle


def scan(cfg: ScanConfig) -> dict:
    work = [(f.coeffs, cfg.n_max) for deg in cfg.degrees for f in corpus(deg, cfg.coeff_bound)]
    if cfg.jobs > 1:
        with Pool(cfg.jobs) as pool:
            rows = pool.map(_classify, work, chunksize=32)
    else:
        rows = list(map(_classify, work))
    # sorted merge: the summary does not depend on worker scheduling
    rows.sort()

    counts = {"total": 0, "certified": 0, "no_witness": 0, "oracle_irreducible": 0,
              "oracle_reducible": 0, "oracle_skipped": 0, "disagreements": 0}
    by_theorem = {"T1": 0, "T2": 0, "T3": 0}
    per_degree: dict[str, dict] = {}
    disagreements = []
    digest = hashlib.sha256()
    for coeffs, outcome, theorem, oracle in rows:
        deg = str(len(coeffs) - 1)
        bucket = per_degree.setdefault(deg, {"total": 0, "certified": 0, "oracle_irreducible": 0})
        counts["total"] += 1
        bucket["total"] += 1
        certified = outcome == Outcome.CERTIFIED_IRREDUCIBLE.value
        if certified:
            counts["certified"] += 1
            bucket["certified"] += 1
            by_theorem[theorem] += 1
        else:
            counts["no_witness"] += 1
        if oracle == "IRREDUCIBLE":
            counts["oracle_irreducible"] += 1
            bucket["oracle_irreducible"] += 1
        elif oracle == "REDUCIBLE":
            counts["oracle_reducible"] += 1
        else:
            counts["oracle_skipped"] += 1
        if certified and oracle == "REDUCIBLE":
            counts["disagreements"] += 1
            disagreements.append([str(a) for a in coeffs])
        line = f"{','.join(map(str, coeffs))}|{outcome}|{theorem}|{oracle}\n"
        digest.update(line.encode("ascii"))

    return {
        "config": {
            "degrees": list(cfg.degrees),
            "coeff_bound": cfg.coeff_bound,
            "n_max": cfg.n_max,
        },
        "counts": counts,
        "certified_by_theorem": by_theorem,
        "per_degree": per_degree,
        "disagreements": disagreements,
        "results_digest": "sha256:" + digest.hexdigest(),
    }


def summary_json(summary: dict) -> str:
    return json.dumps(summary, indent=2, sort_keys=True) + "\n"
