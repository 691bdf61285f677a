"""
From four dimensions upward
===========================

A classical diagram with integer framings induces an (n,2)-diagram.  Only
the parity of each framing survives, so diagrams that agree mod 2 induce
the same handlebody.  The figure catalogue is reproduced at the end.
"""

from nkirby import DimSpec, boundary_description, build, example, induce, recognize_diagram, weak_equiv

src = DimSpec(4, 2, source=True)
a = build(src, [], [("f", "", -1)])
b = build(src, [], [("f", "", 2025)])
print("weakly equivalent:", weak_equiv(a, b))
for n in (5, 6, 8):
    print(n, induce(a, n, 2) == induce(b, n, 2), recognize_diagram(induce(a, n, 2)))

# The boundary of the Mazur-type example times B^2 is an open book on S^5
print(boundary_description(example("K1", n=6)[1]))

for name, params in (("A6-circle", {}), ("A6-unknot", {}), ("A6-twisted", {}), ("A6-ball", {"t": 1}),
                     ("A6-lens", {"p": 5}), ("A6-mixed", {}), ("A6-twisted-pair", {})):
    desc, d = example(name, **params)
    print(f"{name:16s} {recognize_diagram(d).latex('n', 2):60s} {desc}")
