"""Groebner bases and Hilbert series for finitely presented algebras.

Exact-arithmetic completion in commutative polynomial rings and free
associative algebras, plus three mutually cross-checking routes to the
Hilbert series of the graded quotient: normal-word counting, closed-form
products, and the alternating chain sum.
"""

from .algebra import Polynomial, RingContext
from .chains import (
    Chain,
    EulerReport,
    ObstructionSet,
    chain_series,
    enumerate_chains,
    euler_identity_check,
    hilbert_from_chains,
    occurrence_count,
)
from .commutative import (
    GroebnerBasis,
    buchberger,
    divides,
    is_member,
    normal_monomials,
    reduce_basis,
    s_polynomial,
)
from .errors import (
    GradingError,
    NotReducibleError,
    PresentationError,
    RingMismatchError,
    SaturationError,
    ZeroPolynomialError,
)
from .monomials import COMMUTATIVE, NONCOMMUTATIVE, CommMonomial, Word
from .noncommutative import (
    CompletionResult,
    Overlap,
    complete_to_degree,
    enumerate_overlaps,
    find_factor,
    normal_words,
)
from .ordering import DEGLEX, LEX, MonomialOrder, check_admissibility, default_order
from .presentation import (
    Presentation,
    format_monomial,
    format_polynomial,
    parse_polynomial,
    parse_presentation,
)
from .series import (
    FactorAutomaton,
    TruncatedSeries,
    exterior_algebra_series,
    free_algebra_series,
    free_product_series,
    polynomial_algebra_series,
    series_from_normal_words,
)

__version__ = "0.1.0"
