import pytest
from hypothesis import given

from gen import diagrams
from nkirby import (
    DimSpec,
    EXAMPLES,
    apply,
    build,
    example,
    examples,
    induce,
    parse,
    parse_certificate_text,
    parse_text,
    print_certificate,
    print_diagram,
    reduce_general,
)
from nkirby.errors import FileSyntaxError, InvalidDim, SemanticError, UnknownExample
from nkirby.moves import CancelPair, Certificate, CreatePair, SlideDotted, SlideFramed

K4_TEXT = """\
# two dotted spheres and one framed sphere
dim 5 2
dotted e1
dotted e2
framed f1 framing 0 word e1 e2^-1
"""


def test_k4_file_round_trips(tmp_path):
    path = tmp_path / "k4.kd"
    path.write_text(K4_TEXT, encoding="utf-8")
    d = parse(path)
    assert d.dotted == ("e1", "e2") and str(d.framed[0].word) == "e1 e2^-1"
    assert parse_text(print_diagram(d)) == d


def test_comments_and_empty_word():
    d = parse_text("# head\n\ndim 7 3  # trailing\nframed f framing 4 word\nframed g framing 0\n")
    assert d.dim == DimSpec(7, 3)
    assert [f.framing.value for f in d.framed] == [0, 0]
    assert print_diagram(d).splitlines()[1] == "framed f framing 0 word"


def test_framings_normalized_except_source():
    assert parse_text("dim 5 2\nframed f framing 2025 word\n").framed[0].framing.value == 1
    assert parse_text("dim 4 2 source\nframed f framing 2025 word\n").framed[0].framing.value == 2025


@pytest.mark.parametrize(
    "text,error,line",
    [
        ("dotted e1\ndim 5 2\n", FileSyntaxError, 1),
        ("dim 5 2\ndim 5 2\n", FileSyntaxError, 2),
        ("dim 5 2\nframed f framing x word\n", FileSyntaxError, 2),
        ("dim 5 2\nframed f word e1\n", FileSyntaxError, 2),
        ("dim 5 2\nbogus\n", FileSyntaxError, 2),
        ("dim 5 2\ndotted 1e\n", FileSyntaxError, 2),
        ("# only a comment\n", FileSyntaxError, 1),
    ],
)
def test_syntax_errors(text, error, line):
    with pytest.raises(error) as info:
        parse_text(text)
    assert info.value.line == line
    assert info.value.code == "SyntaxError"


@pytest.mark.parametrize(
    "text",
    [
        "dim 4 2\n",
        "dim 6 3\n",
        "dim 5 2\ndotted e1\ndotted e1\n",
        "dim 5 2\nframed f framing 0 word e1\n",
    ],
)
def test_semantic_errors(text):
    with pytest.raises(SemanticError):
        parse_text(text)


@given(diagrams())
def test_round_trip(d):
    text = print_diagram(d)
    assert parse_text(text) == d
    assert print_diagram(parse_text(text)) == text


def test_certificate_round_trip():
    cert = Certificate((
        CreatePair("a", "b"),
        SlideFramed("f1", "b", -1, (("a", 1), ("e1", -1))),
        SlideFramed("f1", "b", 1),
        SlideDotted("a", "e1", -1),
        CancelPair("a", "b"),
    ))
    text = print_certificate(cert)
    assert "slide-framed f1 b - conj a e1^-1" in text
    assert parse_certificate_text(text) == cert
    assert print_certificate(Certificate()) == ""


@pytest.mark.parametrize("text", ["slide-framed a b\n", "slide-dotted a b *\n", "cancel a\n", "twist a b\n",
                                  "slide-framed a b + with e\n"])
def test_certificate_syntax_errors(text):
    with pytest.raises(FileSyntaxError):
        parse_certificate_text(text)


@given(diagrams())
def test_reduction_certificates_survive_text(d):
    nf, cert = reduce_general(d)
    assert apply(d, parse_certificate_text(print_certificate(cert))) == apply(d, cert)


def test_induce():
    src = DimSpec(4, 2, source=True)
    unknot = build(src, [], [("f", "", 0)])
    assert induce(unknot, 5, 2) == build(DimSpec(5, 2), [], [("f", "", 0)])
    circle = build(src, ["e"], [])
    assert induce(circle, 7, 2).dotted == ("e",)
    assert induce(build(src, [], [("f", "", 3)]), 5, 2).framed[0].framing.value == 1
    assert induce(build(src, [], [("f", "", -3)]), 9, 4).framed[0].framing.value == -3
    abel = induce(build(src, ["a", "b"], [("f", "a b a^-1", 2)]), 7, 3)
    assert str(abel.framed[0].word) == "b"
    with pytest.raises(InvalidDim):
        induce(build(DimSpec(5, 2)), 7, 3)
    with pytest.raises(InvalidDim):
        induce(unknot, 4, 2)


def test_induce_commutes_with_slides():
    from nkirby.moves import slide_framed

    src = DimSpec(4, 2, source=True)
    d = build(src, ["e"], [("f", "e e", 3), ("g", "e", -4)])
    for n, k in ((5, 2), (9, 4), (7, 3)):
        assert induce(slide_framed(d, "f", "g", -1), n, k) == slide_framed(induce(d, n, k), "f", "g", -1)


def test_examples_library():
    assert set(examples()) == set(EXAMPLES)
    text = examples("K2")
    assert text.startswith("# example K2\n")
    assert parse_text(text) == build(DimSpec(5, 2), ["e1"], [("f1", "e1", 0)])
    lens = parse_text(examples("A6-lens", p=4))
    assert lens.dotted == ("e1",) and lens.framed[0].word.exponent("e1") == 4
    assert lens.framed[0].framing.value == 0
    assert example("A6-lens", p=4, n=8)[1].dim == DimSpec(8, 2)
    with pytest.raises(UnknownExample):
        examples("nosuch")
    for name in EXAMPLES:
        assert parse_text(examples(name)) == example(name)[1]
