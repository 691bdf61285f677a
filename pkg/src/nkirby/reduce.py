"""Normal forms reached by explicit move sequences.

Every reducer works on a private replay log: each step is a real move
applied to the current diagram, so the emitted certificate replays to the
returned diagram by construction.

Sign normalisation (``p >= 0``, ``t >= 0``) uses a temporary cancelling
pair: with rows ``r`` and ``s = aux`` the six framed slides
``r-=s, s+=r, r-=s, r-=s, s+=r, r-=s`` act on ``(r, s)`` as ``-I``, after
which ``s`` is the single letter ``aux^-1`` and the pair cancels again.
"""

from dataclasses import dataclass, field

from . import framing as fr
from .diagram import Diagram, Word, canonical_key, normalize_word
from .errors import NotOneDottedFamily, NotSimpleFamily
from .moves import CancelPair, Certificate, CreatePair, SlideDotted, SlideFramed

DEFAULT_BUDGET = 64


@dataclass(frozen=True)
class SimpleFamily:
    """``m`` unlinked framed spheres, one framed ``t``, the others ``0``."""

    m: int
    t: fr.Framing
    diagram: Diagram = field(default=None, compare=False, repr=False)

    def __str__(self):
        return f"K({self.t}) m={self.m}"


@dataclass(frozen=True)
class DottedFamily:
    """One dotted sphere; ``N1`` passes ``p`` times with framing ``a_fr``,
    ``E2`` is unlinked with framing ``b``, the other ``m - 2`` are 0-framed."""

    p: int
    a_fr: fr.Framing
    b: fr.Framing
    m: int
    diagram: Diagram = field(default=None, compare=False, repr=False)

    def __str__(self):
        return f"K({self.p};{self.a_fr},{self.b}) m={self.m}"


@dataclass(frozen=True, eq=False)
class General:
    diagram: Diagram

    def __eq__(self, other):
        return isinstance(other, General) and canonical_key(self.diagram) == canonical_key(other.diagram)

    def __hash__(self):
        return hash(canonical_key(self.diagram))

    def __str__(self):
        return f"General[{self.diagram}]"


class _Run:
    """Current diagram plus the moves that produced it."""

    def __init__(self, d):
        self.d = d
        self.moves = []

    def do(self, move):
        self.d = move.apply(self.d)
        self.moves.append(move)

    def certificate(self):
        return Certificate(tuple(self.moves))

    def fresh(self, stem):
        used = self.d.ids
        i = 1
        while f"{stem}{i}" in used:
            i += 1
        return f"{stem}{i}"

    def word(self, fid):
        return self.d.framed_by_id(fid).word

    def framing(self, fid):
        return self.d.framed_by_id(fid).framing.value

    def slide(self, i, j, sign):
        """Framed slide; for ``k = 2`` the band is chosen to minimise word length."""
        if self.d.dim.k >= 3:
            self.do(SlideFramed(i, j, sign))
            return
        self.do(min(_band_choices(self.d, i, j, sign), key=lambda mv: len(_slid_word(self.d, mv))))


def _inv(letters):
    return [(g, -s) for g, s in reversed(letters)]


def _slid_word(d, mv):
    wi = d.framed_by_id(mv.i).word
    wj = d.framed_by_id(mv.j).word
    v = list(wj if mv.sign > 0 else wj.inverse())
    c = list(mv.conjugator)
    return normalize_word(d.dim, list(wi) + c + v + _inv(c))


def _band_choices(d, i, j, sign):
    """Slides of ``i`` over ``j`` whose band joins a cut of ``word_i`` to a
    rotation of ``word_j^sign``: ``x y -> x (q p) y`` for ``word_j^sign = p q``.
    The empty conjugator comes first."""
    wi = list(d.framed_by_id(i).word)
    wj = d.framed_by_id(j).word
    v = list(wj if sign > 0 else wj.inverse())
    seen = set()
    out = []
    for cut in range(len(wi), -1, -1):
        y = wi[cut:]
        for rot in range(len(v) + 1):
            if rot == len(v) and v:
                continue
            p = v[:rot]
            conj = Word(tuple(normalize_free(_inv(y) + _inv(p))))
            if conj not in seen:
                seen.add(conj)
                out.append(SlideFramed(i, j, sign, conj))
    return out


def normalize_free(letters):
    out = []
    for g, s in letters:
        if out and out[-1] == (g, -s):
            out.pop()
        else:
            out.append((g, s))
    return out


def _negate(run, fid):
    """Reverse the sign of row ``fid`` (pass counts and framing) via an auxiliary pair."""
    e = run.fresh("aux")
    s = run.fresh("auxf")
    run.do(CreatePair(e, s))
    for i, j, sign in ((fid, s, -1), (s, fid, 1), (fid, s, -1), (fid, s, -1), (s, fid, 1), (fid, s, -1)):
        run.slide(i, j, sign)
    run.do(CancelPair(e, s))


def _trunc_quotient(x, y):
    q = abs(x) // abs(y)
    return q if (x > 0) == (y > 0) else -q


def _euclid(run, ids, value):
    """Row reduction over ``ids`` until at most one has nonzero ``value``.

    Returns the id holding the surviving nonzero value, or ``None``.
    """
    ids = list(ids)
    while True:
        live = [(abs(value(run, f)), n, f) for n, f in enumerate(ids) if value(run, f) != 0]
        if len(live) <= 1:
            return live[0][2] if live else None
        _, _, pivot = min(live)
        for _, _, f in live:
            if f == pivot:
                continue
            q = _trunc_quotient(value(run, f), value(run, pivot))
            for _ in range(abs(q)):
                run.slide(f, pivot, -1 if q > 0 else 1)


def _framing_value(run, fid):
    return run.framing(fid)


def _fold_framings(run, ids):
    """Collect the gcd of the framings of ``ids`` on one component, nonnegative."""
    holder = _euclid(run, ids, _framing_value)
    if holder is not None and run.framing(holder) < 0:
        _negate(run, holder)
    return holder


def reduce_simple(d):
    """Reduce a diagram of unlinked framed spheres to ``K(t)``, ``t`` the gcd."""
    if d.dotted or any(len(f.word) for f in d.framed):
        raise NotSimpleFamily("diagram has dotted components or linked framed words")
    run = _Run(d)
    holder = _fold_framings(run, [f.id for f in d.framed])
    t = run.framing(holder) if holder is not None else 0
    nf = SimpleFamily(len(d.framed), fr.normalize(d.group, t), run.d)
    return nf, run.certificate()


def _pass_count(e):
    def value(run, fid):
        return run.word(fid).exponent(e)
    return value


def reduce_one_dotted(d):
    """Reduce a one-dotted diagram to ``K(p; a, b)`` (``p`` the gcd of the passes)."""
    if len(d.dotted) != 1:
        raise NotOneDottedFamily(f"expected exactly one dotted component, found {len(d.dotted)}")
    e = d.dotted[0]
    run = _Run(d)
    ids = [f.id for f in d.framed]
    n1 = _euclid(run, ids, _pass_count(e))
    if n1 is None:
        holder = _fold_framings(run, ids)
        a = run.framing(holder) if holder is not None else 0
        nf = DottedFamily(0, fr.normalize(d.group, a), fr.normalize(d.group, 0), len(ids), run.d)
        return nf, run.certificate()
    p = run.word(n1).exponent(e)
    if abs(p) == 1:
        run.do(CancelPair(e, n1))
        rest, cert = reduce_simple(run.d)
        return rest, run.certificate() + cert
    if p < 0:
        _negate(run, n1)
        p = -p
    holder = _fold_framings(run, [f for f in ids if f != n1])
    b = run.framing(holder) if holder is not None else 0
    nf = DottedFamily(p, fr.normalize(d.group, run.framing(n1)), fr.normalize(d.group, b), len(ids), run.d)
    return nf, run.certificate()


def _entry(run, fid, e):
    return run.word(fid).exponent(e)


def _diagonalize(run):
    """Smith reduction of the linking matrix by framed (row) and dotted
    (column) slides.  Returns the pivots as ``(framed id, dotted id)`` pairs."""
    done_rows, done_cols, pivots = set(), set(), []
    while True:
        rows = [f.id for f in run.d.framed if f.id not in done_rows]
        cols = [e for e in run.d.dotted if e not in done_cols]
        entries = [
            (abs(_entry(run, r, c)), ri, ci, r, c)
            for ri, r in enumerate(rows)
            for ci, c in enumerate(cols)
            if _entry(run, r, c) != 0
        ]
        if not entries:
            return pivots
        _, _, _, r, c = min(entries)
        pv = _entry(run, r, c)
        for other in rows:
            x = _entry(run, other, c)
            if other != r and x:
                q = _trunc_quotient(x, pv)
                for _ in range(abs(q)):
                    run.slide(other, r, -1 if q > 0 else 1)
        for other in cols:
            x = _entry(run, r, other)
            if other != c and x:
                q = _trunc_quotient(x, pv)
                for _ in range(abs(q)):
                    run.do(SlideDotted(other, c, -1 if q > 0 else 1))
        if any(_entry(run, o, c) for o in rows if o != r) or any(_entry(run, r, o) for o in cols if o != c):
            continue
        bad = next(
            (o for o in rows if o != r and any(_entry(run, o, j) % pv for j in cols if j != c)),
            None,
        )
        if bad is not None:
            run.slide(r, bad, 1)
            continue
        done_rows.add(r)
        done_cols.add(c)
        pivots.append((r, c))


def _reduce_abelian(run):
    pivots = _diagonalize(run)
    for r, c in pivots:
        v = _entry(run, r, c)
        if abs(v) == 1:
            run.do(CancelPair(c, r))
        elif v < 0:
            _negate(run, r)
    kept = {r for r, _ in pivots}
    _fold_framings(run, [f.id for f in run.d.framed if f.id not in kept])


def _measure(d):
    return (sum(len(f.word) for f in d.framed), sum(abs(f.framing.value) for f in d.framed))


def _cancellable(d):
    for f in d.framed:
        if len(f.word) == 1:
            e = f.word.letters[0][0]
            if all(e not in o.word.generators() for o in d.framed if o.id != f.id):
                return CancelPair(e, f.id)
    return None


def _candidates(d):
    """Framed slides over single-letter words first (they clear the way for
    a cancellation), then dotted slides, then all other framed slides."""
    single = [f for f in d.framed if len(f.word) == 1]
    rest = [f for f in d.framed if len(f.word) != 1]

    def framed_over(targets):
        for j in targets:
            for i in d.framed:
                if i.id != j.id:
                    for sign in (1, -1):
                        yield from _band_choices(d, i.id, j.id, sign)

    yield from framed_over(single)
    for a in d.dotted:
        for b in d.dotted:
            if a != b:
                yield SlideDotted(a, b, 1)
                yield SlideDotted(a, b, -1)
    yield from framed_over(rest)


def _greedy(run, budget):
    """Best-effort simplification for ``k = 2``: cancel whenever possible,
    otherwise take the best strictly improving slide among ``budget``
    candidates.  The measure (total word length, framing sizes) decreases
    at every step, so the loop terminates.

    Only the moves up to the last cancellation are kept: slides that do
    not lead to fewer handles are rolled back."""
    kept = (len(run.moves), run.d)
    while True:
        mv = _cancellable(run.d)
        if mv is not None:
            run.do(mv)
            kept = (len(run.moves), run.d)
            continue
        current = _measure(run.d)
        best, best_measure = None, current
        for count, cand in enumerate(_candidates(run.d)):
            if count >= budget:
                break
            m = _measure(cand.apply(run.d))
            if m < best_measure:
                best, best_measure = cand, m
        if best is None:
            break
        run.do(best)
    del run.moves[kept[0]:]
    run.d = kept[1]


def reduce_general(d, budget=DEFAULT_BUDGET):
    """Reduce any diagram as far as the calculus allows.

    ``k >= 3``: the linking matrix is brought to Smith form by slides, unit
    pivots are cancelled, and the rest is folded; the result is a
    ``SimpleFamily``/``DottedFamily`` when at most one dotted sphere is
    left and a diagonal ``General`` otherwise.  ``k = 2`` runs the greedy
    simplifier, which is not complete.
    """
    if len(d.dotted) == 0:
        return reduce_simple(d)
    if len(d.dotted) == 1:
        return reduce_one_dotted(d)
    run = _Run(d)
    if d.dim.k >= 3:
        _reduce_abelian(run)
    else:
        _greedy(run, budget)
    if len(run.d.dotted) <= 1:
        nf, cert = reduce_general(run.d, budget)
        return nf, run.certificate() + cert
    return General(run.d), run.certificate()


reduce = reduce_general
