"""Exact integer invariants: Smith normal form, handle homology, homotopy
data, boundary descriptions and the equivalence verdict."""

from dataclasses import dataclass, field

import numpy as np

from .diagram import canonical_equal, linking_matrix, transport
from .errors import DimMismatch, NotAComplex, RequiresK2, RequiresK3, StructureMismatch
from .framing import DimSpec
from .recognize import recognize
from .reduce import reduce_general


def _to_rows(M):
    a = np.asarray(M, dtype=object)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-d integer matrix, got shape {a.shape}")
    return [[int(x) for x in row] for row in a.tolist()], a.shape


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(M, transforms=False):
    """Smith normal form ``D`` of an integer matrix.

    With ``transforms=True`` also returns unimodular ``U, V`` with
    ``U @ M @ V == D``.  Diagonal entries are nonnegative and each divides
    the next.  Arithmetic is exact (Python ints; arrays have dtype object).
    """
    A, (m, n) = _to_rows(M)
    U, V = _identity(m), _identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            nonzero = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
            if not nonzero:
                break
            _, i, j = min(nonzero)
            swap_rows(t, i)
            swap_cols(t, j)
            p = A[t][t]
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
            if any(A[i][t] for i in range(t + 1, m)) or any(A[t][j] for j in range(t + 1, n)):
                continue
            bad = next((i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]
    D = np.array(A, dtype=object).reshape(m, n)
    if transforms:
        return D, np.array(U, dtype=object).reshape(m, m), np.array(V, dtype=object).reshape(n, n)
    return D


def diagonal(D):
    return [int(D[i, i]) for i in range(min(D.shape))]


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^rank`` plus cyclic torsion ``Z/d1 + ... + Z/ds`` with ``d1 | d2 | ...``."""

    rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")
        if any(d < 2 for d in self.torsion):
            raise ValueError("torsion coefficients must be at least 2")

    @classmethod
    def from_diagonal(cls, entries, size):
        """Cokernel of a map into ``Z^size`` whose Smith diagonal is ``entries``."""
        nonzero = [abs(d) for d in entries if d]
        return cls(size - len(nonzero), tuple(d for d in nonzero if d > 1))

    @property
    def is_trivial(self):
        return self.rank == 0 and not self.torsion

    @property
    def order(self):
        """Number of elements, or ``None`` when infinite."""
        if self.rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


Z = AbelianGroup(1)
TRIVIAL = AbelianGroup()


def cokernel(M, rows=None):
    """``Z^rows / im(M)`` for ``M`` of shape ``(rows, cols)``."""
    a = np.asarray(M, dtype=object)
    size = a.shape[0] if rows is None else rows
    if a.size == 0:
        return AbelianGroup(size)
    return AbelianGroup.from_diagonal(diagonal(smith_normal_form(a)), size)


def matrix_rank(M):
    a = np.asarray(M, dtype=object)
    if a.size == 0:
        return 0
    return sum(1 for d in diagonal(smith_normal_form(a)) if d)


def boundary_matrix(d):
    """``C_k = Z^framed -> C_{k-1} = Z^dotted``: the transposed linking matrix."""
    lm = linking_matrix(d)
    return np.array(lm.rows, dtype=object).reshape(len(lm.row_ids), len(lm.col_ids)).T


def homology(d):
    """Homology of the handle chain complex ``Z^m -> Z^a`` (0-handle in degree 0).

    Returns ``{degree: AbelianGroup}`` for all degrees ``0..n``.
    """
    k = d.dim.k
    bd = boundary_matrix(d)
    a, m = len(d.dotted), len(d.framed)
    rank = matrix_rank(bd)
    out = {deg: TRIVIAL for deg in range(d.dim.n + 1)}
    out[0] = Z
    out[k - 1] = cokernel(bd, a)
    out[k] = AbelianGroup(m - rank)
    return out


def pi_km1(d):
    """``pi_{k-1}``; the handlebody is ``(k-2)``-connected, so this is ``H_{k-1}``."""
    if d.dim.k < 3:
        raise RequiresK3("pi_1 is not abelian in general; use pi_1_presentation")
    return homology(d)[d.dim.k - 1]


@dataclass(frozen=True)
class Presentation:
    generators: tuple
    relators: tuple

    def abelianization(self):
        rows = [[w.exponent(g) for g in self.generators] for w in self.relators]
        M = np.array(rows, dtype=object).reshape(len(rows), len(self.generators)).T
        return cokernel(M, len(self.generators))

    def latex(self):
        """``\\langle x_1, x_2\\mid x_1x_2^{-1}\\rangle`` style; trailing digits become subscripts."""

        def sym(g):
            stem = g.rstrip("0123456789")
            digits = g[len(stem):]
            if not digits or not stem:
                return g
            return f"{stem}_{digits}" if len(digits) == 1 else f"{stem}_{{{digits}}}"

        def word(w):
            return "".join(sym(g) + ("" if s == 1 else "^{-1}") for g, s in w)

        gens = ", ".join(sym(g) for g in self.generators)
        if not self.relators:
            return rf"\langle {gens}\rangle"
        return rf"\langle {gens}\mid {', '.join(word(r) for r in self.relators)}\rangle"

    def __str__(self):
        gens = ", ".join(self.generators)
        if not self.relators:
            return f"<{gens}>"
        return f"<{gens} | {', '.join(str(r) for r in self.relators)}>"


def pi_1_presentation(d):
    """One generator per dotted sphere, one relator per framed sphere."""
    if d.dim.k != 2:
        raise RequiresK2(f"fundamental group presentations need k = 2, got k = {d.dim.k}")
    relators = tuple(f.word for f in d.framed if len(f.word))
    return Presentation(tuple(d.dotted), relators)


def chain_homology(boundaries):
    """Homology of ``C_N -> ... -> C_1 -> C_0``.

    ``boundaries[i]`` is the map ``C_{i+1} -> C_i`` with shape
    ``(rank C_i, rank C_{i+1})``.  Returns ``{degree: AbelianGroup}``.
    """
    mats = [np.asarray(b, dtype=object) for b in boundaries]
    for i, b in enumerate(mats):
        if b.ndim != 2:
            raise NotAComplex(f"boundary {i + 1} is not a matrix")
    for i in range(len(mats) - 1):
        lo, hi = mats[i], mats[i + 1]
        if lo.shape[1] != hi.shape[0]:
            raise NotAComplex(f"shapes of d{i + 1} {lo.shape} and d{i + 2} {hi.shape} do not compose")
        if lo.size and hi.size and np.any(lo.dot(hi) != 0):
            raise NotAComplex(f"d{i + 1} o d{i + 2} is not zero")
    if mats:
        sizes = [mats[0].shape[0]] + [b.shape[1] for b in mats]
    else:
        sizes = []
    out = {}
    for deg, size in enumerate(sizes):
        rank_out = matrix_rank(mats[deg - 1]) if deg >= 1 else 0
        incoming = mats[deg] if deg < len(mats) else np.zeros((size, 0), dtype=object)
        image = cokernel(incoming, size)
        out[deg] = AbelianGroup(image.rank - rank_out, image.torsion)
    return out


@dataclass(frozen=True)
class BoundaryDescription:
    dim: DimSpec
    double_of: object = None
    double_dim: int = 0
    page: object = None
    page_dim: int = 0
    open_book: bool = False
    ball: bool = False
    lines: tuple = field(default=())

    def __str__(self):
        return "\n".join(self.lines)


def boundary_description(d):
    """The boundary as a double, and (for ``n >= 2k+2``) as an open book."""
    n, k = d.dim.n, d.dim.k
    nf, _ = reduce_general(d)
    is_ball = recognize(nf, d.dim).is_ball
    lines = []
    if is_ball:
        lines.append(f"M = B^{n}; boundary = S^{n - 1}")
    z = transport(d, n - 1) if n - 1 >= 2 * k + 1 else None
    if z is not None:
        lines.append(f"boundary = double of Z, Z = same diagram at (n,k) = ({n - 1},{k})")
    else:
        lines.append(f"boundary = double of a {n - 1}-dimensional {k}-handlebody Z with M = Z x B^1")
    w = None
    open_book = n >= 2 * k + 2
    if open_book:
        w = transport(d, n - 2) if n - 2 >= 2 * k + 1 else None
        where = f"same diagram at (n,k) = ({n - 2},{k})" if w is not None else f"a {n - 2}-dimensional {k}-handlebody"
        target = f"S^{n - 1}" if is_ball else "boundary"
        lines.append(f"{target} = open book with page W and binding dW, W = {where}")
        if is_ball:
            lines.append("page W is contractible")
    return BoundaryDescription(d.dim, z, n - 1, w, n - 2, open_book, is_ball, tuple(lines))


def weak_equiv(d1, d2):
    """Classical diagrams with equal words and framings congruent mod 2."""
    if not (d1.dim.source and d2.dim.source):
        raise StructureMismatch("weak equivalence compares source (4,2) diagrams")
    if d1.dotted != d2.dotted or [f.id for f in d1.framed] != [f.id for f in d2.framed]:
        raise StructureMismatch("diagrams have different components")
    for f1, f2 in zip(d1.framed, d2.framed):
        if f1.word != f2.word or (f1.framing.value - f2.framing.value) % 2:
            return False
    return True


@dataclass(frozen=True)
class Diffeomorphic:
    certificates: tuple
    normal_form: object
    name: object = None
    verdict: str = "diffeomorphic"


@dataclass(frozen=True)
class Distinguished:
    invariant: str
    values: tuple
    verdict: str = "distinguished"


@dataclass(frozen=True)
class Unknown:
    report: dict
    verdict: str = "unknown"


def equivalent(d1, d2):
    """Decide diffeomorphism where the calculus and the invariants allow it."""
    if d1.dim != d2.dim:
        raise DimMismatch(f"{d1.dim} vs {d2.dim}")
    nf1, c1 = reduce_general(d1)
    nf2, c2 = reduce_general(d2)
    if nf1 == nf2 and canonical_equal(nf1.diagram, nf2.diagram):
        return Diffeomorphic((c1, c2), nf1, recognize(nf1, d1.dim))
    h1, h2 = homology(d1), homology(d2)
    for deg in sorted(h1):
        if h1[deg] != h2[deg]:
            label = f"pi_{deg}" if deg == d1.dim.k - 1 and d1.dim.k >= 3 else f"H_{deg}"
            return Distinguished(label, (h1[deg], h2[deg]))
    report = {"normal_forms": (nf1, nf2)}
    if d1.dim.k == 2:
        report["presentations"] = (pi_1_presentation(d1), pi_1_presentation(d2))
    return Unknown(report)

