"""
Six small diagrams
==================

Three pairs of diagrams, each read at a few different dimensions.  The
point of each pair is whether the two handlebodies agree, and what the
calculus can say about it.
"""

from nkirby import apply, equivalent, example, pi_1_presentation, reduce_general

# A Mazur-type curve and a cancelling pair.  In dimension four the first is
# a contractible manifold other than the ball; once n >= 2k+1 the framed
# sphere only remembers its homotopy class, which is the generator.
for n, k in ((5, 2), (7, 3)):
    for name in ("K1", "K2"):
        _, d = example(name, n=n, k=k)
        nf, cert = reduce_general(d)
        print(f"{name} at ({n},{k}): {len(cert)} moves to {nf}, replay empty: {apply(d, cert).is_empty()}")

# For k = 2 the words live in a free group.  Both relators abelianize to
# the same thing, so homology cannot tell them apart.
_, k3 = example("K3")
_, k4 = example("K4")
print(pi_1_presentation(k3), "|", pi_1_presentation(k3).abelianization())
print(pi_1_presentation(k4), "|", pi_1_presentation(k4).abelianization())
print("verdict at (5,2):", equivalent(k3, k4).verdict)

# For k >= 3 words are abelian and the two collapse together
print("verdict at (7,3):", equivalent(example("K3", n=7, k=3)[1], example("K4", n=7, k=3)[1]).verdict)

# A commutator relator against an unlinked sphere
v = equivalent(example("K5")[1], example("K6")[1])
print(v.verdict, v.name)
print(v.name.latex("n", "k"))
