"""Kirby calculus for n-dimensional k-handlebodies in the range n >= 2k+1."""

from .diagram import (
    Diagram,
    FramedComponent,
    LinkingMatrix,
    Word,
    add_dotted,
    add_framed,
    build,
    canonical_equal,
    linking_matrix,
    new_diagram,
    normalize_word,
    transport,
)
from .errors import KirbyError
from .framing import DimSpec, Framing, FramingGroup, add, framing_group, neg, normalize, project_4d
from .io import EXAMPLES, example, examples, induce, parse, parse_certificate, parse_certificate_text, parse_text, print_certificate, print_diagram
from .invariants import (
    AbelianGroup,
    Presentation,
    boundary_description,
    chain_homology,
    equivalent,
    homology,
    pi_1_presentation,
    pi_km1,
    smith_normal_form,
    weak_equiv,
)
from .moves import (
    CancelPair,
    Certificate,
    CreatePair,
    SlideDotted,
    SlideFramed,
    apply,
    cancel_pair,
    create_pair,
    slide_dotted,
    slide_framed,
)
from .recognize import ManifoldName, recognize, recognize_diagram
from .reduce import DottedFamily, General, SimpleFamily, reduce, reduce_general, reduce_one_dotted, reduce_simple

__version__ = "0.1.0"
