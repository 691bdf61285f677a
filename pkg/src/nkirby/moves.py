"""Handle slides and cancelling pairs, plus replayable move certificates."""

from dataclasses import dataclass, replace

from . import framing as fr
from .diagram import Word, add_dotted, add_framed, free_reduce, normalize_word, _as_letters
from .errors import (
    ConjugatorNotAllowed,
    KirbyError,
    NotCancelling,
    ReplayError,
    SelfSlide,
    UnknownGenerator,
)


@dataclass(frozen=True)
class SlideFramed:
    """Slide framed component ``i`` over a parallel copy of framed ``j``."""

    i: str
    j: str
    sign: int = 1
    conjugator: Word = Word()

    def __post_init__(self):
        object.__setattr__(self, "conjugator", Word(tuple(free_reduce(_as_letters(self.conjugator)))))

    def apply(self, d):
        return slide_framed(d, self.i, self.j, self.sign, self.conjugator)


@dataclass(frozen=True)
class SlideDotted:
    """Slide dotted component ``a`` over dotted ``b``."""

    a: str
    b: str
    sign: int = 1

    def apply(self, d):
        return slide_dotted(d, self.a, self.b, self.sign)


@dataclass(frozen=True)
class CancelPair:
    e: str
    f: str

    def apply(self, d):
        return cancel_pair(d, self.e, self.f)


@dataclass(frozen=True)
class CreatePair:
    e: str
    f: str

    def apply(self, d):
        return create_pair(d, self.e, self.f)


@dataclass(frozen=True)
class Certificate:
    moves: tuple = ()

    def __iter__(self):
        return iter(self.moves)

    def __len__(self):
        return len(self.moves)

    def __add__(self, other):
        return Certificate(self.moves + tuple(other))


def _check_sign(sign):
    if sign not in (1, -1):
        raise ValueError(f"slide sign must be +1 or -1, got {sign!r}")


def slide_framed(d, i, j, sign=1, conjugator=()):
    """``word_i <- word_i . c . word_j^sign . c^-1`` and ``t_i <- t_i + sign t_j``."""
    _check_sign(sign)
    ci = d.framed_by_id(i)
    cj = d.framed_by_id(j)
    if i == j:
        raise SelfSlide(f"cannot slide {i!r} over itself")
    conj = free_reduce(_as_letters(conjugator))
    if conj and d.dim.k >= 3:
        raise ConjugatorNotAllowed("conjugators are only meaningful for k = 2")
    unknown = {g for g, _ in conj} - set(d.dotted)
    if unknown:
        raise UnknownGenerator(f"conjugator references unknown dotted ids {sorted(unknown)}")
    other = cj.word if sign > 0 else cj.word.inverse()
    inv_conj = [(g, -s) for g, s in reversed(conj)]
    word = normalize_word(d.dim, list(ci.word) + list(conj) + list(other) + inv_conj)
    t = fr.add(ci.framing, cj.framing if sign > 0 else fr.neg(cj.framing))
    return d.replace_framed(replace(ci, word=word, framing=t))


def slide_dotted(d, a, b, sign=1):
    """Slide dotted ``a`` over dotted ``b``.

    Words are rewritten by the free-group automorphism ``b -> b a^sign``
    (so ``b^-1 -> a^-sign b^-1``); the exponent-sum column of ``a`` gains
    ``sign`` times the column of ``b``.  Framings are unchanged.
    """
    _check_sign(sign)
    d.require_dotted(a)
    d.require_dotted(b)
    if a == b:
        raise SelfSlide(f"cannot slide {a!r} over itself")
    framed = []
    for f in d.framed:
        out = []
        for g, s in f.word:
            if g != b:
                out.append((g, s))
            elif s > 0:
                out.extend([(b, 1), (a, sign)])
            else:
                out.extend([(a, -sign), (b, -1)])
        framed.append(replace(f, word=normalize_word(d.dim, out)))
    return replace(d, framed=tuple(framed))


def cancel_pair(d, e, f):
    d.require_dotted(e)
    comp = d.framed_by_id(f)
    if len(comp.word) != 1 or comp.word.letters[0][0] != e:
        raise NotCancelling(f"{f!r} does not pass once through {e!r} (word: {comp.word or 'empty'})")
    for other in d.framed:
        if other.id != f and e in other.word.generators():
            raise NotCancelling(f"{other.id!r} also passes through {e!r}")
    return replace(
        d,
        dotted=tuple(x for x in d.dotted if x != e),
        framed=tuple(x for x in d.framed if x.id != f),
    )


def create_pair(d, e, f):
    d = add_dotted(d, e)
    return add_framed(d, f, [(e, 1)], 0)


def apply(d, cert):
    """Replay ``cert`` on ``d`` left to right.

    Fails with :class:`ReplayError` carrying the index of the first move that
    is invalid in the state produced by its predecessors.
    """
    for index, move in enumerate(cert):
        try:
            d = move.apply(d)
        except (KirbyError, ValueError) as exc:
            raise ReplayError(index, exc) from exc
    return d
