"""Monomial ideal analysis."""

from ._kernels import BACKEND
from .chains import ChainReport, ChainStep, TheoremReport, check_theorem, saturated_chain_property
from .decompose import (
    AssReport,
    IrreducibleComponent,
    VarPrime,
    ass_report_from_primes,
    associated_primes,
    codim,
    dim,
    irreducible_decomposition,
    is_equidimensional,
    primary_decomposition,
)
from .ideal import (
    BorelResult,
    BorelWitness,
    MonomialIdeal,
    colon,
    contains_many,
    contains_monomial,
    elementary_move,
    intersect,
    intersect_all,
    is_borel_fixed,
    is_nzd,
    is_socle,
    minimal_generators,
)

__all__ = [
    "BACKEND", "AssReport", "BorelResult", "BorelWitness", "ChainReport", "ChainStep",
    "IrreducibleComponent", "MonomialIdeal", "TheoremReport", "VarPrime",
    "ass_report_from_primes", "associated_primes", "check_theorem", "codim", "colon",
    "contains_many", "contains_monomial", "dim", "elementary_move", "intersect",
    "intersect_all", "irreducible_decomposition", "is_borel_fixed", "is_equidimensional",
    "is_nzd", "is_socle", "minimal_generators", "primary_decomposition",
    "saturated_chain_property",
]
