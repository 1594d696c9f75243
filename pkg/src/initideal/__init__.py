"""Initial ideals via Groebner bases and the associated-prime structure of monomial ideals."""

from .groebner import (
    GinUnstableError,
    GroebnerBasis,
    IdealGens,
    LinearChange,
    ResourceLimitError,
    apply_change,
    buchberger,
    gin,
    initial_ideal,
    membership,
    reduce,
    s_polynomial,
)
from .monoideal import (
    AssReport,
    ChainReport,
    IrreducibleComponent,
    MonomialIdeal,
    TheoremReport,
    VarPrime,
    associated_primes,
    check_theorem,
    colon,
    contains_monomial,
    elementary_move,
    intersect,
    irreducible_decomposition,
    is_borel_fixed,
    is_equidimensional,
    is_nzd,
    is_socle,
    minimal_generators,
    primary_decomposition,
    saturated_chain_property,
)
from .poly import (
    GREVLEX,
    GRLEX,
    LEX,
    QQ,
    ContextMismatch,
    MonomialOrder,
    Ordering,
    Polynomial,
    PolyRing,
    PrimeField,
    VarContext,
    compare,
    leading_term,
)
from .textio import ParseError, parse_ideal_file, parse_polynomial, print_canonical

__version__ = "0.1.0"
