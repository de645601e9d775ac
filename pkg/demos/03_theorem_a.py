"""Root geometry of z^m - z^(m-1) - ... - z - 1.

One real zero zeta lies just below 2 and the other m - 1 zeros are inside
the unit disk.  The sign change that traps zeta is checked exactly; the
modulus claims come from the numeric root finder.
"""

from irredcert.roots import theorem_a_validate

print(f"{'m':>3} {'zeta':>20} {'max |other|':>14} {'bound':>14}  ok")
for m in (2, 3, 4, 5, 8, 12, 16, 24, 32):
    rep = theorem_a_validate(m)
    print(f"{m:>3} {rep.zeta:>20.15f} {rep.max_other_modulus:>14.9f} {rep.bound:>14.11f}  {rep.passed}")

rep = theorem_a_validate(5)
print("\nchecks for m = 5:")
for name, ok in rep.checks.items():
    print(f"  {'PASS' if ok else 'FAIL'} {name}")
