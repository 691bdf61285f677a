"""Text formats for diagrams (``.kd``) and certificates (``.kc``), the
importer from classical 4-dimensional diagrams, and the example library.

Diagram file::

    # comment
    dim 7 3                 # or: dim 4 2 source
    dotted e1
    framed f1 framing 0 word e1 e2^-1

Certificate file, one move per line::

    slide-framed f1 f2 + conj e1
    slide-dotted e1 e2 -
    cancel e1 f1
    create e3 f3
"""

from pathlib import Path

from .diagram import (
    ID_PATTERN,
    Diagram,
    FramedComponent,
    add_dotted,
    add_framed,
    new_diagram,
    normalize_word,
    parse_word,
)
from .errors import FileSyntaxError, InvalidDim, KirbyError, SemanticError, UnknownExample
from .framing import DimSpec, framing_group, project_4d
from .moves import CancelPair, Certificate, CreatePair, SlideDotted, SlideFramed


def _lines(text):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


def _int(token, number):
    try:
        return int(token)
    except ValueError:
        raise FileSyntaxError(number, f"expected an integer, got {token!r}") from None


def _id(token, number):
    if not ID_PATTERN.match(token):
        raise FileSyntaxError(number, f"bad id {token!r}")
    return token


def _word(tokens, number):
    try:
        return parse_word(" ".join(tokens))
    except ValueError as exc:
        raise FileSyntaxError(number, str(exc)) from None


def parse_text(text):
    """Parse diagram text.  Framings are reduced into the framing group."""
    d = None
    for number, tokens in _lines(text):
        head = tokens[0]
        if d is None:
            if head != "dim":
                raise FileSyntaxError(number, "the first directive must be 'dim N K'")
            if len(tokens) not in (3, 4) or (len(tokens) == 4 and tokens[3] != "source"):
                raise FileSyntaxError(number, "usage: dim N K [source]")
            try:
                d = new_diagram(DimSpec(_int(tokens[1], number), _int(tokens[2], number), len(tokens) == 4))
            except InvalidDim as exc:
                raise SemanticError(f"line {number}: {exc}") from None
            continue
        try:
            if head == "dim":
                raise FileSyntaxError(number, "only one dim line is allowed")
            elif head == "dotted":
                if len(tokens) != 2:
                    raise FileSyntaxError(number, "usage: dotted <id>")
                d = add_dotted(d, _id(tokens[1], number))
            elif head == "framed":
                if len(tokens) < 4 or tokens[2] != "framing":
                    raise FileSyntaxError(number, "usage: framed <id> framing <int> word <letters>")
                fid = _id(tokens[1], number)
                t = _int(tokens[3], number)
                rest = tokens[4:]
                if rest and rest[0] == "word":
                    rest = rest[1:]
                elif rest:
                    raise FileSyntaxError(number, "expected 'word' after the framing")
                d = add_framed(d, fid, _word(rest, number), t)
            else:
                raise FileSyntaxError(number, f"unknown directive {head!r}")
        except (FileSyntaxError, SemanticError):
            raise
        except KirbyError as exc:
            raise SemanticError(f"line {number}: {exc.code}: {exc}") from None
    if d is None:
        raise FileSyntaxError(1, "missing dim line")
    return d


def parse(path):
    return parse_text(Path(path).read_text(encoding="utf-8"))


def print_diagram(d, header=()):
    lines = [f"# {h}" for h in header]
    lines.append(f"dim {d.dim.n} {d.dim.k}" + (" source" if d.dim.source else ""))
    lines += [f"dotted {e}" for e in d.dotted]
    for f in d.framed:
        word = f" {f.word}" if len(f.word) else ""
        lines.append(f"framed {f.id} framing {f.framing.value} word{word}")
    return "\n".join(lines) + "\n"


def _sign(token, number):
    if token not in ("+", "-"):
        raise FileSyntaxError(number, f"expected + or -, got {token!r}")
    return 1 if token == "+" else -1


def parse_certificate_text(text):
    moves = []
    for number, tokens in _lines(text):
        head, args = tokens[0], tokens[1:]
        if head == "slide-framed":
            if len(args) < 3 or (len(args) > 3 and args[3] != "conj"):
                raise FileSyntaxError(number, "usage: slide-framed <i> <j> +|- [conj <letters>]")
            conj = _word(args[4:], number)
            moves.append(SlideFramed(_id(args[0], number), _id(args[1], number), _sign(args[2], number), conj))
        elif head == "slide-dotted":
            if len(args) != 3:
                raise FileSyntaxError(number, "usage: slide-dotted <a> <b> +|-")
            moves.append(SlideDotted(_id(args[0], number), _id(args[1], number), _sign(args[2], number)))
        elif head in ("cancel", "create"):
            if len(args) != 2:
                raise FileSyntaxError(number, f"usage: {head} <e> <f>")
            cls = CancelPair if head == "cancel" else CreatePair
            moves.append(cls(_id(args[0], number), _id(args[1], number)))
        else:
            raise FileSyntaxError(number, f"unknown move {head!r}")
    return Certificate(tuple(moves))


def parse_certificate(path):
    return parse_certificate_text(Path(path).read_text(encoding="utf-8"))


def print_certificate(cert):
    lines = []
    for mv in cert:
        if isinstance(mv, SlideFramed):
            conj = f" conj {mv.conjugator}" if len(mv.conjugator) else ""
            lines.append(f"slide-framed {mv.i} {mv.j} {'+' if mv.sign > 0 else '-'}{conj}")
        elif isinstance(mv, SlideDotted):
            lines.append(f"slide-dotted {mv.a} {mv.b} {'+' if mv.sign > 0 else '-'}")
        elif isinstance(mv, CancelPair):
            lines.append(f"cancel {mv.e} {mv.f}")
        else:
            lines.append(f"create {mv.e} {mv.f}")
    return "".join(line + "\n" for line in lines)


def induce(d4, n, k):
    """The (n,k)-diagram induced by a classical (4,2) source diagram."""
    if not d4.dim.source:
        raise InvalidDim("induce() expects a source (4,2) diagram")
    dim = DimSpec(n, k)
    group = framing_group(dim)
    framed = tuple(
        FramedComponent(f.id, normalize_word(dim, f.word), project_4d(f.framing.value, group))
        for f in d4.framed
    )
    return Diagram(dim, d4.dotted, framed)


# example library

def _dim(params, n, k):
    return DimSpec(int(params.get("n", n)), int(params.get("k", k)))


def _k1(p):
    return "the clasp of a Mazur-type curve; its class in the complement is the generator", \
        _build(_dim(p, 5, 2), ["e1"], [("f1", "e1 e1 e1^-1", 0)])


def _k2(p):
    return "cancelling pair: one dotted sphere, one 0-framed sphere passing once", \
        _build(_dim(p, 5, 2), ["e1"], [("f1", "e1", 0)])


def _k3(p):
    return "two dotted spheres, one framed sphere with word x1 x2 x1 x2^-1 x1^-1 x2^-1", \
        _build(_dim(p, 5, 2), ["x1", "x2"], [("f1", "x1 x2 x1 x2^-1 x1^-1 x2^-1", 0)])


def _k4(p):
    return "two dotted spheres, one framed sphere with word x1 x2^-1", \
        _build(_dim(p, 5, 2), ["x1", "x2"], [("f1", "x1 x2^-1", 0)])


def _k5(p):
    return "two dotted spheres, one framed sphere running along their commutator", \
        _build(_dim(p, 7, 3), ["x1", "x2"], [("f1", "x1 x2 x1^-1 x2^-1", 0)])


def _k6(p):
    return "two dotted spheres and one unlinked 0-framed sphere", \
        _build(_dim(p, 7, 3), ["x1", "x2"], [("f1", "", 0)])


def _kt(p):
    dim = _dim(p, 9, 4)
    m = int(p.get("m", 3))
    t = int(p.get("t", 1))
    return f"simple family K(t): {m} unlinked spheres, one framed {t}", \
        _build(dim, [], [("N1", "", t)] + [(f"N{i}", "", 0) for i in range(2, m + 1)])


def _kpab(p):
    dim = _dim(p, 7, 3)
    pp, a, b, m = (int(p.get(x, dflt)) for x, dflt in (("p", 2), ("a", 0), ("b", 0), ("m", 2)))
    framed = [("N1", " ".join(["L1"] * pp), a)]
    if m >= 2:
        framed.append(("E2", "", b))
    framed += [(f"E{i}", "", 0) for i in range(3, m + 1)]
    return f"one-dotted family K(p;a,b) with p={pp}, a={a}, b={b}, m={m}", _build(dim, ["L1"], framed)


def _a6_circle(p):
    return "a lone dotted circle", _build(_dim(p, 5, 2), ["e1"], [])


def _a6_unknot(p):
    return "0-framed unknot", _build(_dim(p, 5, 2), [], [("f1", "", 0)])


def _a6_twisted(p):
    return "1-framed unknot (image of a -1-framed trefoil after a crossing change)", \
        _build(_dim(p, 5, 2), [], [("f1", "", 1)])


def _a6_ball(p):
    t = int(p.get("t", 0))
    return f"dotted circle with a {t}-framed circle passing once", \
        _build(_dim(p, 5, 2), ["e1"], [("f1", "e1", t)])


def _a6_lens(p):
    pp = int(p.get("p", 3))
    return f"dotted circle with a 0-framed circle passing {pp} times", \
        _build(_dim(p, 5, 2), ["e1"], [("f1", " ".join(["e1"] * pp), 0)])


def _a6_mixed(p):
    return "0-framed and 1-framed unknots", _build(_dim(p, 5, 2), [], [("f1", "", 0), ("f2", "", 1)])


def _a6_twisted_pair(p):
    return "two 1-framed unknots", _build(_dim(p, 5, 2), [], [("f1", "", 1), ("f2", "", 1)])


def _build(dim, dotted, framed):
    d = new_diagram(dim)
    for e in dotted:
        d = add_dotted(d, e)
    for fid, word, t in framed:
        d = add_framed(d, fid, word, t)
    return d


EXAMPLES = {
    "K1": _k1,
    "K2": _k2,
    "K3": _k3,
    "K4": _k4,
    "K5": _k5,
    "K6": _k6,
    "Kt": _kt,
    "Kpab": _kpab,
    "A6-circle": _a6_circle,
    "A6-unknot": _a6_unknot,
    "A6-twisted": _a6_twisted,
    "A6-ball": _a6_ball,
    "A6-lens": _a6_lens,
    "A6-mixed": _a6_mixed,
    "A6-twisted-pair": _a6_twisted_pair,
}


def example(name, **params):
    """Return ``(description, Diagram)`` for a named example.

    Parameters such as ``n``, ``k``, ``p``, ``t`` override the defaults.
    """
    try:
        maker = EXAMPLES[name]
    except KeyError:
        raise UnknownExample(f"no example named {name!r}; known: {', '.join(EXAMPLES)}") from None
    return maker(params)


def example_text(name, **params):
    desc, d = example(name, **params)
    shown = " ".join(f"{k}={v}" for k, v in sorted(params.items()))
    return print_diagram(d, header=(f"example {name}{' ' + shown if shown else ''}", desc))


def examples(name=None, **params):
    """Text of one example, or ``{name: text}`` for the whole library."""
    if name is not None:
        return example_text(name, **params)
    return {n: example_text(n) for n in EXAMPLES}


__all__ = [
    "parse",
    "parse_text",
    "print_diagram",
    "parse_certificate",
    "parse_certificate_text",
    "print_certificate",
    "induce",
    "example",
    "examples",
    "EXAMPLES",
]
