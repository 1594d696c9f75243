"""Worked examples: the grevlex counterexample and catalecticant curve cones."""

from __future__ import annotations

from itertools import combinations
from typing import List

from .groebner import IdealGens, LinearChange
from .monoideal import IrreducibleComponent, MonomialIdeal, VarPrime
from .poly import GREVLEX, QQ, PolyRing
from .textio import parse_monomial, parse_polynomial

COUNTER_VARS = ("x", "y", "z", "t", "a", "b", "c")

TORIC_GENS = ("x*z - a^2", "y*z - b^2", "t*z - c^2")
SUBSTITUTED_GENS = ("x*z - a^2", "y*z - b^2", "z^2 - t*z - c^2")
J_GENS = ("z^2", "y*z", "x*z", "z*b^2", "z*a^2", "y*t*b^2", "x*t*b^2", "x*t*a^2")
J_COMPONENTS = (
    ("x", "y", "z"),
    ("y", "t", "z"),
    ("t", "z", "a^2"),
    ("z", "a^2", "b^2"),
    ("x", "y", "z^2", "a^2", "b^2"),
)
J_ASS = (
    ("x", "y", "z"),
    ("y", "t", "z"),
    ("t", "a", "z"),
    ("z", "a", "b"),
    ("x", "y", "z", "a", "b"),
)
J_CHAIN_VIOLATION = ("x", "y", "z", "a", "b")


def counter_ring(field=QQ, order=GREVLEX) -> PolyRing:
    return PolyRing.from_names(COUNTER_VARS, field, order)


def toric_ideal(ring: PolyRing = None) -> IdealGens:
    ring = ring or counter_ring()
    return IdealGens(ring, tuple(parse_polynomial(s, ring) for s in TORIC_GENS))


def substituted_ideal(ring: PolyRing = None) -> IdealGens:
    ring = ring or counter_ring()
    return IdealGens(ring, tuple(parse_polynomial(s, ring) for s in SUBSTITUTED_GENS))


def t_to_z_minus_t(field=QQ) -> LinearChange:
    """Identity on every variable except ``t -> z - t``."""
    n = len(COUNTER_VARS)
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    t, z = COUNTER_VARS.index("t"), COUNTER_VARS.index("z")
    rows[t][t] = -1
    rows[t][z] = 1
    return LinearChange(rows, field)


def monomial_ideal(names, monomials) -> MonomialIdeal:
    ring = PolyRing.from_names(names)
    return MonomialIdeal(ring.context, [parse_monomial(m, ring.context) for m in monomials])


def ideal_J(gens=J_GENS) -> MonomialIdeal:
    return monomial_ideal(COUNTER_VARS, gens)


def J_components() -> List[IrreducibleComponent]:
    return [IrreducibleComponent.from_ideal(monomial_ideal(COUNTER_VARS, c))
            for c in J_COMPONENTS]


def J_primes() -> List[VarPrime]:
    ctx = counter_ring().context
    return [VarPrime.from_names(ctx, names) for names in J_ASS]


def catalecticant_ideal(n: int, field=QQ, order=GREVLEX, prefix: str = "x") -> IdealGens:
    """2x2 minors of the 2 x n catalecticant [[x0..x_{n-1}], [x1..x_n]].

    This is the cone over the rational normal curve of degree ``n``: a
    homogeneous prime in ``n + 1`` variables with ``dim R/P = 2``.
    """
    names = [f"{prefix}{i}" for i in range(n + 1)]
    ring = PolyRing.from_names(names, field, order)
    x = ring.gens
    gens = [x[i] * x[j + 1] - x[i + 1] * x[j] for i, j in combinations(range(n), 2)]
    return IdealGens(ring, tuple(gens))


def twisted_cubic_cone(field=QQ, order=GREVLEX) -> IdealGens:
    return catalecticant_ideal(3, field, order)


def rational_quartic_cone(field=QQ, order=GREVLEX) -> IdealGens:
    return catalecticant_ideal(4, field, order)
