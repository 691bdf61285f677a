"""Names of the handlebodies in the classified families.

A :class:`ManifoldName` is a boundary connected sum of factors; the empty
sum is the ball.  Factor kinds:

``handle``   S^{k-1} x B^{n-k+1}  (a lone dotted sphere)
``bundle``   B^{n-k}-bundle over S^k with clutching class ``t``
``lens``     L(p,1)° x B^{n-3}    (k = 2, 0-framed, p passes)
``linked``   one dotted sphere with one framed sphere passing ``p`` times
``unknown``  anything else, carrying a text description
"""

from dataclasses import dataclass

from .diagram import Diagram
from .framing import FramingGroup, framing_group, normalize
from .reduce import DottedFamily, General, SimpleFamily, reduce_general

_ORDER = {"handle": 0, "bundle": 1, "lens": 2, "linked": 3, "unknown": 4}


@dataclass(frozen=True, order=True)
class Factor:
    kind: str
    p: int = 0
    t: int = 0
    text: str = ""

    def sort_key(self):
        return (_ORDER[self.kind], self.t, self.p, self.text)


def _sup(expr):
    return expr if len(expr) == 1 else "{" + expr + "}"


def _lin(n, k, a_n, a_k, c):
    """Render ``a_n*n + a_k*k + c`` with ``n``/``k`` either ints or symbols."""
    if isinstance(n, int) and isinstance(k, int):
        return str(a_n * n + a_k * k + c)
    terms = []
    const = c
    for coef, var in ((a_n, n), (a_k, k)):
        if coef == 0:
            continue
        if isinstance(var, int):
            const += coef * var
        else:
            terms.append((coef, var))
    out = ""
    for coef, var in terms:
        sign = "-" if coef < 0 else ("+" if out else "")
        out += sign + (var if abs(coef) == 1 else f"{abs(coef)}{var}")
    if const or not out:
        out += f"{const:+d}" if out else str(const)
    return out


@dataclass(frozen=True)
class ManifoldName:
    n: int
    k: int
    group: FramingGroup
    factors: tuple = ()

    @classmethod
    def of(cls, n, k, group, factors):
        return cls(n, k, group, tuple(sorted(factors, key=Factor.sort_key)))

    @property
    def is_ball(self):
        return not self.factors

    def _pieces(self, n, k, style):
        tex = style == "latex"
        times = r"\times " if tex else " × "
        twisted = r"\tilde{\times} " if tex else " ~× "

        def sph(e):
            return f"S^{_sup(e)}"

        def ball(e):
            return f"B^{_sup(e)}"

        def render(f):
            if f.kind == "handle":
                return sph(_lin(n, k, 0, 1, -1)) + times + ball(_lin(n, k, 1, -1, 1))
            if f.kind == "bundle":
                base, fibre = sph(_lin(n, k, 0, 1, 0)), ball(_lin(n, k, 1, -1, 0))
                if f.t == 0:
                    return base + times + fibre
                if self.group is FramingGroup.Z2:
                    return base + twisted + fibre
                op = rf"\times_{{{f.t}}} " if tex else f" ×_{f.t} "
                return base + op + fibre
            if f.kind == "lens":
                circ = r"^{\circ}" if tex else "°"
                return f"L({f.p},1){circ}" + times + ball(_lin(n, k, 1, 0, -3))
            if f.kind == "linked":
                return f"M_{{K({f.p};{f.t})}}" if tex else f"M[K({f.p};{f.t})]"
            return f"unrecognized: {f.text}"

        pieces = []
        for f in self.factors:
            label = render(f)
            if pieces and pieces[-1][0] == label and f.kind in ("handle", "bundle") and f.t == 0:
                pieces[-1][1] += 1
            else:
                pieces.append([label, 1])
        return pieces

    def render(self, n=None, k=None, style="text"):
        """Render with concrete dimensions, or symbolic ones if ``n``/``k`` are strings."""
        n = self.n if n is None else n
        k = self.k if k is None else k
        tex = style == "latex"
        if not self.factors:
            return f"B^{_sup(str(n))}"
        pieces = self._pieces(n, k, style)
        natural = r"\natural " if tex else " ♮ "
        if len(pieces) == 1 and pieces[0][1] == 1:
            return pieces[0][0]
        parts = []
        for label, count in pieces:
            if count == 1:
                parts.append(f"({label})")
            else:
                power = rf"\natural^{_sup(str(count))}" if tex else f"♮^{count}"
                parts.append(f"{power}({label})")
        return natural.join(parts)

    def latex(self, n=None, k=None):
        return self.render(n, k, style="latex")

    def __str__(self):
        return self.render()


def _bundle(group, t):
    t = normalize(group, t).value
    return Factor("bundle", t=abs(t))


def _linked(dim, p, a):
    if dim.k == 2 and a == 0:
        return Factor("lens", p=p)
    return Factor("linked", p=p, t=a)


def recognize(nf, dim):
    """Name the handlebody presented by a normal form."""
    group = framing_group(dim)
    if isinstance(nf, SimpleFamily):
        factors = []
        if nf.m:
            factors = [_bundle(group, nf.t.value)] + [Factor("bundle")] * (nf.m - 1)
        return ManifoldName.of(dim.n, dim.k, group, factors)
    if isinstance(nf, DottedFamily):
        if nf.p == 0:
            factors = [Factor("handle")]
            if nf.m:
                factors += [_bundle(group, nf.a_fr.value)] + [Factor("bundle")] * (nf.m - 1)
        else:
            factors = [_linked(dim, nf.p, nf.a_fr.value)]
            if nf.m >= 2:
                factors += [_bundle(group, nf.b.value)] + [Factor("bundle")] * (nf.m - 2)
        return ManifoldName.of(dim.n, dim.k, group, factors)
    if isinstance(nf, General):
        split = _split_factors(nf.diagram)
        if split is not None:
            return ManifoldName.of(dim.n, dim.k, group, split)
        return ManifoldName.of(dim.n, dim.k, group, [Factor("unknown", text=str(nf.diagram))])
    return ManifoldName.of(dim.n, dim.k, group, [Factor("unknown", text=repr(nf))])


def _split_factors(d):
    """Factors of a diagram that is visibly a boundary connected sum, else ``None``.

    Split means: every framed word is a power of a single dotted generator and
    each dotted generator occurs in at most one framed word.
    """
    owner = {}
    for f in d.framed:
        gens = f.word.generators()
        if len(gens) > 1:
            return None
        for g in gens:
            if g in owner:
                return None
            owner[g] = f
    group = d.group
    factors = []
    for e in d.dotted:
        f = owner.get(e)
        if f is None:
            factors.append(Factor("handle"))
            continue
        p = f.word.exponent(e)
        if abs(p) == 1:
            continue
        a = f.framing.value if p > 0 else normalize(group, -f.framing.value).value
        factors.append(_linked(d.dim, abs(p), a))
    for f in d.framed:
        if not f.word.generators():
            factors.append(_bundle(group, f.framing.value))
    return factors


def recognize_diagram(d: Diagram, budget=None):
    """Read a visibly split diagram directly; otherwise reduce, then recognize."""
    group = d.group
    split = _split_factors(d)
    if split is not None:
        return ManifoldName.of(d.dim.n, d.dim.k, group, split)
    nf, _ = reduce_general(d) if budget is None else reduce_general(d, budget)
    return recognize(nf, d.dim)
