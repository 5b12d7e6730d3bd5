"""Monomial ideals attached to column windows of a generic matrix.

The package builds the diagonal-monomial ideal of every window of
consecutive columns, computes colon chains and their closed forms,
certifies linear quotients, measures regularity with an independent
homology oracle, and runs a small exact Groebner engine to compare
initial ideals of minor products against the matching monomial products.
"""

from .caps import Caps, DEFAULT_CAPS, load_caps_file, parse_caps_text
from .errors import (
    ChainOrderError,
    DiagIdealError,
    DomainError,
    FormatError,
    ResourceLimitError,
    SelectionError,
    ShapeMismatchError,
    WindowError,
)
from .fields import PrimeField, RationalField, is_prime, make_field
from .groebner import (
    GroebnerBasis,
    buchberger,
    conjecture_check,
    initial_ideal,
    is_groebner_basis,
    natural_window_generators,
    reduce,
    s_polynomial,
)
from .ideals import (
    MonomialIdeal,
    ideal_from_json,
    ideal_from_json_obj,
    minimal_generators,
    parse_ideal,
)
from .monomials import (
    GridMonomial,
    GridShape,
    compare,
    monomial_from_triples,
    parse_monomial,
)
from .polynomials import Polynomial
from .quotients import (
    CircleTable,
    DiagonalFactorization,
    QuotientChain,
    circle_table,
    closed_form_colon,
    closed_form_product_colon,
    factor_into_windows,
    quotient_chain,
    redistribute,
    verify_product_colons,
)
from .replay import run_paper_replay
from .resolution import (
    BettiTable,
    KoszulComplex,
    betti_table,
    has_linear_resolution,
    koszul_complex,
    mapping_cone_betti,
    regularity,
)
from .windows import (
    ColumnSelection,
    MinorPolynomial,
    Window,
    WindowChain,
    diagonal_ideal,
    diagonal_monomial,
    enumerate_diagonals,
    iter_sorted_chains,
    iter_windows,
    minor,
    selection_of,
    window_product_ideal,
)

__version__ = "0.1.0"

__all__ = [
    "Caps",
    "DEFAULT_CAPS",
    "load_caps_file",
    "parse_caps_text",
    "ChainOrderError",
    "DiagIdealError",
    "DomainError",
    "FormatError",
    "ResourceLimitError",
    "SelectionError",
    "ShapeMismatchError",
    "WindowError",
    "PrimeField",
    "RationalField",
    "is_prime",
    "make_field",
    "GroebnerBasis",
    "buchberger",
    "conjecture_check",
    "initial_ideal",
    "is_groebner_basis",
    "natural_window_generators",
    "reduce",
    "s_polynomial",
    "MonomialIdeal",
    "ideal_from_json",
    "ideal_from_json_obj",
    "minimal_generators",
    "parse_ideal",
    "GridMonomial",
    "GridShape",
    "compare",
    "monomial_from_triples",
    "parse_monomial",
    "Polynomial",
    "CircleTable",
    "DiagonalFactorization",
    "QuotientChain",
    "circle_table",
    "closed_form_colon",
    "closed_form_product_colon",
    "factor_into_windows",
    "quotient_chain",
    "redistribute",
    "verify_product_colons",
    "run_paper_replay",
    "BettiTable",
    "KoszulComplex",
    "betti_table",
    "has_linear_resolution",
    "koszul_complex",
    "mapping_cone_betti",
    "regularity",
    "ColumnSelection",
    "MinorPolynomial",
    "Window",
    "WindowChain",
    "diagonal_ideal",
    "diagonal_monomial",
    "enumerate_diagonals",
    "iter_sorted_chains",
    "iter_windows",
    "minor",
    "selection_of",
    "window_product_ideal",
    "__version__",
]
