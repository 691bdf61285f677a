"""
The two classified families
===========================

Unlinked framed spheres reduce to a single framed sphere carrying the gcd
of the framings.  With one dotted sphere, the pass counts reduce to their
gcd ``p`` and pi_{k-1} is Z, 0 or Z/p.
"""

import numpy as np

from nkirby import DimSpec, build, pi_km1, print_certificate, recognize, reduce_general

rng = np.random.default_rng(7)

# Framings in Z (k = 4): the gcd survives
dim = DimSpec(9, 4)
framings = [6, 10, 15]
d = build(dim, [], [(f"J{i}", "", t) for i, t in enumerate(framings, 1)])
nf, cert = reduce_general(d)
print(framings, "->", nf, f"({len(cert)} slides)")
print(recognize(nf, dim))

# A random one-dotted diagram and its certificate
dim = DimSpec(7, 3)
passes = rng.integers(-9, 10, size=3)
d = build(dim, ["L1"], [(f"N{i}", [("L1", 1 if p > 0 else -1)] * abs(int(p)), 0) for i, p in enumerate(passes, 1)])
nf, cert = reduce_general(d)
print("passes", passes.tolist(), "->", nf, "pi_2 =", pi_km1(d))
print(print_certificate(cert), end="")

# pi_{k-1} of K(p;a,b) as p runs
for p in range(7):
    d = build(dim, ["L1"], [("N1", [("L1", 1)] * p, 0), ("E2", "", 0)])
    print(p, pi_km1(d), recognize(reduce_general(d)[0], dim))
