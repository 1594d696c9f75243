"""Monomial ideals: minimal generators, membership, colon, socle and Borel moves."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from ..poly import (
    Exponent,
    VarContext,
    ContextMismatch,
    divides,
    mono_gcd,
    mono_div,
    mono_lcm,
    _grevlex_key,
)
from . import _kernels


def _canonical_sort(gens: Iterable[Exponent]) -> Tuple[Exponent, ...]:
    # ascending grevlex, independent of any active term order
    return tuple(sorted(gens, key=_grevlex_key))


def _minimalize(monomials: Sequence[Exponent], nvars: int) -> Tuple[Exponent, ...]:
    monomials = [tuple(int(k) for k in m) for m in monomials]
    if len(monomials) <= 1:
        return tuple(monomials)
    keep = _kernels.minimal_mask(_kernels.as_matrix(monomials, nvars))
    return tuple(m for m, k in zip(monomials, keep) if k)


class MonomialIdeal:
    """Ideal generated by monomials, stored by its minimal generators.

    ``gens == ()`` is the zero ideal and ``gens == ((0, ..., 0),)`` the unit
    ideal.  Generators are sorted by ascending graded reverse lex.
    """

    __slots__ = ("context", "gens")

    def __init__(self, context: VarContext, monomials: Iterable[Exponent] = ()):
        if not isinstance(context, VarContext):
            context = VarContext(tuple(context))
        monomials = [tuple(m) for m in monomials]
        n = context.nvars
        for m in monomials:
            if len(m) != n or any(k < 0 for k in m):
                raise ValueError(f"bad exponent vector {m} for {n} variables")
        self.context = context
        self.gens = _canonical_sort(_minimalize(monomials, n))

    @classmethod
    def from_names(cls, names: Sequence[str], monomials) -> "MonomialIdeal":
        return cls(VarContext(tuple(names)), monomials)

    @property
    def nvars(self) -> int:
        return self.context.nvars

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal) and self.context == other.context
                and self.gens == other.gens)

    def __hash__(self):
        return hash((self.context, self.gens))

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __repr__(self):
        return f"MonomialIdeal({str(self)!r})"

    def __str__(self):
        if not self.gens:
            return "0"
        return ", ".join(self.context.monomial_str(g) for g in self.gens)

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return len(self.gens) == 1 and not any(self.gens[0])

    def _check(self, other: "MonomialIdeal"):
        if self.context != other.context:
            raise ContextMismatch("monomial ideals over different variables")

    def __contains__(self, m: Exponent) -> bool:
        return contains_monomial(self, m)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check(other)
        return MonomialIdeal(self.context, self.gens + other.gens)

    def __le__(self, other: "MonomialIdeal") -> bool:
        """Containment of ideals, ``self`` inside ``other``."""
        self._check(other)
        return all(contains_monomial(other, g) for g in self.gens)

    def __ge__(self, other: "MonomialIdeal") -> bool:
        return other <= self

    def lcm(self) -> Exponent:
        out = self.context.one()
        for g in self.gens:
            out = mono_lcm(out, g)
        return out

    def support(self) -> List[int]:
        """Variable positions dividing some minimal generator."""
        return [i for i in range(self.nvars) if any(g[i] for g in self.gens)]


def minimal_generators(context: VarContext, monomials: Iterable[Exponent]) -> MonomialIdeal:
    return MonomialIdeal(context, monomials)


def contains_monomial(I: MonomialIdeal, m: Exponent) -> bool:
    m = tuple(m)
    if len(m) != I.nvars:
        raise ContextMismatch(f"exponent vector of length {len(m)} in {I.nvars} variables")
    return any(divides(g, m) for g in I.gens)


def contains_many(I: MonomialIdeal, monomials: Sequence[Exponent]):
    """Boolean array: membership of each monomial, via the batch kernel."""
    return _kernels.contains_mask(_kernels.as_matrix(list(I.gens), I.nvars),
                                  _kernels.as_matrix(list(monomials), I.nvars))


# ----------------------------------------------------------------------
# elementary moves and Borel-fixedness
# ----------------------------------------------------------------------


def elementary_move(k: int, m: Exponent) -> Optional[Exponent]:
    """``e_k`` with ``k`` counted from 1: move one unit of exponent from
    variable ``k + 1`` to variable ``k``.

    Returns ``None`` (the zero monomial) when variable ``k + 1`` does not
    divide ``m``.
    """
    m = tuple(m)
    if not 1 <= k <= len(m) - 1:
        raise ValueError(f"elementary move e_{k} needs 1 <= k <= {len(m) - 1}")
    if m[k] == 0:
        return None
    out = list(m)
    out[k - 1] += 1
    out[k] -= 1
    return tuple(out)


@dataclass(frozen=True)
class BorelWitness:
    generator: Exponent
    k: int
    moved: Exponent


@dataclass(frozen=True)
class BorelResult:
    borel_fixed: bool
    witness: Optional[BorelWitness] = None

    def __bool__(self):
        return self.borel_fixed


def is_borel_fixed(I: MonomialIdeal) -> BorelResult:
    """Closure of the minimal generators under every single elementary move.

    This is the characteristic-zero criterion; it is applied verbatim over
    prime fields too.
    """
    for g in I.gens:
        for k in range(1, I.nvars):
            moved = elementary_move(k, g)
            if moved is not None and not contains_monomial(I, moved):
                return BorelResult(False, BorelWitness(g, k, moved))
    return BorelResult(True)


# ----------------------------------------------------------------------
# colon, socle, nonzerodivisors, intersection
# ----------------------------------------------------------------------


def colon(I: MonomialIdeal, m: Exponent) -> MonomialIdeal:
    """``(I : m)``, generated by ``g / gcd(g, m)`` over the generators ``g``."""
    m = tuple(m)
    if len(m) != I.nvars:
        raise ContextMismatch(f"exponent vector of length {len(m)} in {I.nvars} variables")
    return MonomialIdeal(I.context, [mono_div(g, mono_gcd(g, m)) for g in I.gens])


def is_socle(I: MonomialIdeal, m: Exponent) -> bool:
    """``m`` is outside ``I`` but every variable times ``m`` is inside."""
    if contains_monomial(I, m):
        return False
    m = tuple(m)
    for i in range(I.nvars):
        xm = list(m)
        xm[i] += 1
        if not contains_monomial(I, tuple(xm)):
            return False
    return True


def _var_position(I: MonomialIdeal, v: Union[int, str]) -> int:
    if isinstance(v, str):
        return I.context.index(v)
    if not 0 <= v < I.nvars:
        raise IndexError(f"variable position {v} out of range")
    return v


def is_nzd(I: MonomialIdeal, v: Union[int, str]) -> bool:
    """Whether the variable ``v`` (0-based position or name) is a nonzerodivisor on R/I."""
    if I.is_unit():
        raise ValueError("R/I is zero for the unit ideal")
    i = _var_position(I, v)
    return all(g[i] == 0 for g in I.gens)


def intersect(I1: MonomialIdeal, I2: MonomialIdeal) -> MonomialIdeal:
    I1._check(I2)
    return MonomialIdeal(I1.context, [mono_lcm(a, b) for a in I1.gens for b in I2.gens])


def intersect_all(ideals: Sequence[MonomialIdeal]) -> MonomialIdeal:
    ideals = list(ideals)
    if not ideals:
        raise ValueError("empty intersection")
    out = ideals[0]
    for J in ideals[1:]:
        out = intersect(out, J)
    return out
