"""Certify z^2 + z + 1, then watch the verifier reject a doctored copy.

The searcher finds the smallest n where f(n) is a prime power times a small
cofactor and the zeros of f sit far enough inside a disk.  Here f(3) = 13 is
prime and every zero has modulus 1 < 3 - 1, so n = 3 is the witness.
"""

import json

from irredcert import SearchConfig, certify, parse, serialize, verify
from irredcert.certificate import verify_bytes
from irredcert.roots import find_roots

f = parse("z^2 + z + 1")
print("roots:", ", ".join(f"{r:.6f}" for r in find_roots(f).roots))

res = certify(f, SearchConfig(n_max=50))
cert = res.certificate
print(f"\n{res.outcome.value} via {cert.theorem.value} at n = {cert.arithmetic.n}")
print(verify(cert).format())

# Every hypothesis is recomputed from the polynomial, so a certificate
# claiming the wrong exponent fails on the arithmetic itself.
obj = json.loads(serialize(cert))
obj["arithmetic"]["k"] = "2"
print("\nafter changing k to 2:")
print(verify_bytes(json.dumps(obj)).format())

# A reducible polynomial never gets a certificate, however far we look.
g = parse("z^2 - 1")
print("\nz^2 - 1:", certify(g, SearchConfig(n_max=500)).outcome.value)
