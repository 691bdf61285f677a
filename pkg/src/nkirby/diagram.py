"""Combinatorial model of an (n,k)-Kirby diagram.

In the range ``n >= 2k + 1`` the framed ``(k-1)``-link is unknotted and
unlinked, so a framed component is determined by its framing and by the
homotopy class of its attaching sphere in the complement of the dotted
link.  For ``k = 2`` that class is a conjugacy class in the free group on
the dotted components; for ``k >= 3`` it is an element of the free abelian
group on them.  Words are stored in a canonical form for that class.
"""

from dataclasses import dataclass, field, replace
from itertools import permutations, product
from math import factorial
import re

import numpy as np

from .errors import DuplicateId, GroupMismatch, InvalidDim, UnknownComponent, UnknownGenerator
from .framing import DimSpec, Framing, framing_group, normalize

ID_PATTERN = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

# beyond this many candidate relabelings, canonical equality compares dotted ids by name
MAX_ORDERS = 5040


def _letter_key(letter):
    gen, sign = letter
    return (gen, 0 if sign > 0 else 1)


@dataclass(frozen=True)
class Word:
    """A word in the dotted generators: a tuple of ``(id, +1 | -1)`` letters."""

    letters: tuple = ()

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return " ".join(g if s > 0 else f"{g}^-1" for g, s in self.letters)

    def inverse(self):
        return Word(tuple((g, -s) for g, s in reversed(self.letters)))

    def generators(self):
        return {g for g, _ in self.letters}

    def exponent_sums(self):
        sums = {}
        for g, s in self.letters:
            sums[g] = sums.get(g, 0) + s
        return sums

    def exponent(self, gen):
        return sum(s for g, s in self.letters if g == gen)


def parse_word(text):
    """Parse ``"e1 e2^-1"``-style text (``⁻¹`` is also accepted) into letters."""
    letters = []
    for token in text.replace("⁻¹", "^-1").split():
        if token.endswith("^-1"):
            gen, sign = token[:-3], -1
        elif token.endswith("^1"):
            gen, sign = token[:-2], 1
        else:
            gen, sign = token, 1
        if not ID_PATTERN.match(gen):
            raise ValueError(f"bad generator token {token!r}")
        letters.append((gen, sign))
    return tuple(letters)


def _as_letters(w):
    if isinstance(w, Word):
        return w.letters
    if isinstance(w, str):
        return parse_word(w)
    return tuple((g, int(s)) for g, s in w)


def free_reduce(letters):
    out = []
    for g, s in letters:
        if out and out[-1][0] == g and out[-1][1] == -s:
            out.pop()
        else:
            out.append((g, s))
    return out


def cyclic_reduce(letters):
    letters = free_reduce(letters)
    i, j = 0, len(letters) - 1
    while i < j and letters[i][0] == letters[j][0] and letters[i][1] == -letters[j][1]:
        i += 1
        j -= 1
    return letters[i:j + 1]


def min_rotation(letters):
    if not letters:
        return ()
    keys = [_letter_key(x) for x in letters]
    n = len(letters)
    best = min(range(n), key=lambda r: keys[r:] + keys[:r])
    return tuple(letters[best:] + letters[:best])


def abelianize(letters):
    sums = {}
    for g, s in letters:
        sums[g] = sums.get(g, 0) + s
    out = []
    for g in sorted(sums):
        e = sums[g]
        out.extend([(g, 1 if e > 0 else -1)] * abs(e))
    return tuple(out)


def word_from_exponents(exponents):
    return Word(abelianize((g, 1) if e > 0 else (g, -1) for g, e in exponents.items() for _ in range(abs(e))))


def normalize_word(dim, w):
    """Canonical form of a raw word for handle index ``dim.k``.

    ``k = 2``: freely and cyclically reduced, rotated to the lexicographically
    least rotation (generators by id, ``+1`` before ``-1``).
    ``k >= 3``: abelianized, letters sorted by generator.
    """
    letters = _as_letters(w)
    if dim.k >= 3:
        return Word(abelianize(letters))
    return Word(min_rotation(cyclic_reduce(letters)))


@dataclass(frozen=True)
class FramedComponent:
    id: str
    word: Word
    framing: Framing

    def __str__(self):
        return f"{self.id}[{self.framing}]({self.word})"


@dataclass(frozen=True)
class Diagram:
    dim: DimSpec
    dotted: tuple = ()
    framed: tuple = ()

    @property
    def group(self):
        return framing_group(self.dim)

    @property
    def ids(self):
        return set(self.dotted) | {f.id for f in self.framed}

    def framed_by_id(self, fid):
        for f in self.framed:
            if f.id == fid:
                return f
        raise UnknownComponent(f"no framed component {fid!r}")

    def framed_index(self, fid):
        for i, f in enumerate(self.framed):
            if f.id == fid:
                return i
        raise UnknownComponent(f"no framed component {fid!r}")

    def require_dotted(self, eid):
        if eid not in self.dotted:
            raise UnknownComponent(f"no dotted component {eid!r}")

    def is_empty(self):
        return not self.dotted and not self.framed

    def replace_framed(self, comp):
        idx = self.framed_index(comp.id)
        framed = self.framed[:idx] + (comp,) + self.framed[idx + 1:]
        return replace(self, framed=framed)

    def __str__(self):
        parts = [f"dim {self.dim}"] + [f"dotted {e}" for e in self.dotted] + [str(f) for f in self.framed]
        return "; ".join(parts)


def new_diagram(dim):
    return Diagram(dim)


def _check_fresh(d, cid):
    if not ID_PATTERN.match(cid):
        raise ValueError(f"bad component id {cid!r}")
    if cid in d.ids:
        raise DuplicateId(f"id {cid!r} already used")


def add_dotted(d, eid):
    _check_fresh(d, eid)
    return replace(d, dotted=d.dotted + (eid,))


def _coerce_framing(d, framing):
    group = d.group
    if isinstance(framing, Framing):
        if framing.group is not group:
            raise GroupMismatch(f"framing in {framing.group}, diagram needs {group}")
        return framing
    return normalize(group, framing)


def add_framed(d, fid, word=(), framing=0):
    _check_fresh(d, fid)
    w = normalize_word(d.dim, word)
    missing = w.generators() - set(d.dotted)
    raw_missing = {g for g, _ in _as_letters(word)} - set(d.dotted)
    if missing or raw_missing:
        raise UnknownGenerator(f"word references unknown dotted ids {sorted(missing | raw_missing)}")
    comp = FramedComponent(fid, w, _coerce_framing(d, framing))
    return replace(d, framed=d.framed + (comp,))


def build(dim, dotted=(), framed=()):
    """Shorthand builder: ``framed`` is an iterable of ``(id, word, framing)``."""
    d = new_diagram(dim)
    for e in dotted:
        d = add_dotted(d, e)
    for fid, word, t in framed:
        d = add_framed(d, fid, word, t)
    return d


@dataclass(frozen=True)
class LinkingMatrix:
    """Exponent sums: row per framed component, column per dotted component."""

    row_ids: tuple
    col_ids: tuple
    rows: tuple = field(default=())

    def to_array(self):
        return np.array(self.rows, dtype=object).reshape(len(self.row_ids), len(self.col_ids))

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]


def linking_matrix(d):
    rows = tuple(tuple(f.word.exponent(e) for e in d.dotted) for f in d.framed)
    return LinkingMatrix(tuple(f.id for f in d.framed), tuple(d.dotted), rows)


def transport(d, n_new):
    """The same diagram data read in dimension ``n_new`` (product with a ball)."""
    if d.dim.source:
        raise InvalidDim("source diagrams are imported with induce(), not transported")
    dim = DimSpec(n_new, d.dim.k)
    return Diagram(
        dim,
        d.dotted,
        tuple(replace(f, framing=normalize(framing_group(dim), f.framing.value)) for f in d.framed),
    )


def _renamed_rows(d, order):
    index = {e: i for i, e in enumerate(order)}
    tag = [f"g{i}" for i in range(len(order))]
    rows = []
    for f in d.framed:
        w = normalize_word(d.dim, [(tag[index[g]], s) for g, s in f.word.letters])
        rows.append((tuple((int(g[1:]), s) for g, s in w.letters), f.framing.value))
    return tuple(sorted(rows))


def _signature(d, e):
    """Relabeling-invariant data of dotted ``e``: its letter counts per row."""
    return tuple(sorted(
        (f.word.letters.count((e, 1)), f.word.letters.count((e, -1)), len(f.word), f.framing.value)
        for f in d.framed
    ))


def _orders(d):
    """Dotted orders sorted by signature, permuting only within ties."""
    blocks = {}
    for e in sorted(d.dotted):
        blocks.setdefault(_signature(d, e), []).append(e)
    groups = [blocks[key] for key in sorted(blocks)]
    count = 1
    for g in groups:
        count *= factorial(len(g))
    if count > MAX_ORDERS:
        yield [e for g in groups for e in g]
        return
    for choice in product(*(permutations(g) for g in groups)):
        yield [e for g in choice for e in g]


def canonical_key(d):
    """An id-independent key: equal keys iff the diagrams agree up to renaming.

    Framed ids are ignored by sorting.  Dotted ids are ignored by minimising
    over the relabelings compatible with a per-generator signature, provided
    there are at most ``MAX_ORDERS`` of them.
    """
    rows = min(_renamed_rows(d, order) for order in _orders(d))
    return (d.dim, len(d.dotted), rows)


def canonical_equal(d1, d2):
    return canonical_key(d1) == canonical_key(d2)
