"""Overpasses, underpasses and crossing counts of knot diagrams."""

from .codecs import emit_extended_gauss, emit_pd, load_diagrams, parse_diagram, parse_extended_gauss, parse_pd
from .diagram import CanonicalForm, Diagram, Passage, canonical_form
from .errors import (
    BoundViolation,
    CapExceeded,
    CodeSyntaxError,
    DegenerateSite,
    DiagramError,
    EmptyDiagram,
    InconsistentCode,
    InvalidK,
    NonPlanar,
    NonRealizable,
    RoutingObstruction,
    StepLimitExceeded,
    TooLarge,
)
from .invariants import bracket_by_states, kauffman_bracket, normalized_jones, writhe
from .passes import (
    bridge_number,
    certifies_trivial,
    check_bounds,
    check_rules,
    decompose,
    incidence,
    inflate,
    is_alternating,
)
from .polynomial import LaurentPolynomial
from .reduction import ReductionStep, SurgerySite, apply_surgery, find_sites, reduce, reidemeister_cleanup
from .torus import NotExtremal, TorusClass, classify_extremal, enumerate_rule_compliant, standard_torus_diagram

__version__ = "0.1.0"
