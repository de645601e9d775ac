"""Generate the parametric families and replay their intended witnesses.

Families whose witness uses ell = 1 go through cleanly.  Instances with
ell >= 2 often do not: the exponent of p in f(n) is larger than the family
parameter, and the Taylor coefficients are divisible by p but not by that
full power.  Those polynomials are still irreducible, and the searcher
finds a different witness for them.
"""

from collections import Counter

from irredcert import SearchConfig, certify, format_polynomial
from irredcert.families import FamilySpec, generate, sweep, validate_family_witness

f3 = FamilySpec.of("F3", p=2, m=2, k=4, d=1)
inst = generate(f3)
print(f3.label(), "->", format_polynomial(inst.polynomial))
print(validate_family_witness(f3).format())

f1 = FamilySpec.of("F1", p=3, ell=2, m=3, k=5, d=1)
inst = generate(f1)
print("\n" + f1.label(), "->", format_polynomial(inst.polynomial))
for note in inst.notes:
    print("  note:", note)
print(validate_family_witness(f1).format())
alt = certify(inst.polynomial, SearchConfig(n_max=200)).certificate
a = alt.arithmetic
print(f"searcher instead: {alt.theorem.value} at n = {a.n}, f(n) = {a.sign}*{a.p}^{a.k}*{a.d}, ell = {a.ell}")

tally = Counter()
for spec in sweep():
    tally[spec.family.value, validate_family_witness(spec).passed] += 1
print("\nsweep (family, passed): count")
for key in sorted(tally):
    print(f"  {key}: {tally[key]}")
