"""Run the certifier and the Kronecker oracle over every small polynomial.

A certificate on a polynomial the oracle can factor would be a soundness
bug.  The summary also shows how much of the irreducible corpus the
searcher manages to certify with n <= 200.
"""

from irredcert.scan import ScanConfig, scan

s = scan(ScanConfig(degrees=(2, 3), coeff_bound=2))
c = s["counts"]
print(f"{c['total']} primitive polynomials, degree 2 and 3, coefficients in [-2, 2]")
print(f"  oracle: {c['oracle_irreducible']} irreducible, {c['oracle_reducible']} reducible")
print(f"  certified: {c['certified']} {s['certified_by_theorem']}")
print(f"  disagreements: {c['disagreements']}")
for deg, b in sorted(s["per_degree"].items()):
    share = b["certified"] / b["oracle_irreducible"]
    print(f"  degree {deg}: certified {b['certified']} of {b['oracle_irreducible']} irreducible ({share:.0%})")
print("digest", s["results_digest"])
