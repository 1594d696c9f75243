"""Irreducible and primary decomposition, associated primes, dimension."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from ..poly import Exponent, VarContext
from .ideal import MonomialIdeal, _minimalize, intersect_all


@dataclass(frozen=True, init=False)
class VarPrime:
    """Prime ideal generated by a nonempty set of variables (0-based positions)."""

    codim: int
    vars: Tuple[int, ...]
    context: VarContext

    def __init__(self, context: VarContext, vars: Iterable[int]):
        vs = tuple(sorted(set(vars)))
        if not vs:
            raise ValueError("a variable prime needs at least one variable")
        if vs[0] < 0 or vs[-1] >= context.nvars:
            raise IndexError(f"variable positions {vs} out of range")
        object.__setattr__(self, "context", context)
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "codim", len(vs))

    @classmethod
    def from_names(cls, context: VarContext, names: Iterable[str]) -> "VarPrime":
        return cls(context, [context.index(n) for n in names])

    @classmethod
    def prefix(cls, context: VarContext, j: int) -> "VarPrime":
        """``(x_1, ..., x_j)``."""
        return cls(context, range(j))

    @property
    def dim(self) -> int:
        """Krull dimension of R/P."""
        return self.context.nvars - self.codim

    def is_prefix(self) -> bool:
        return self.vars == tuple(range(self.codim))

    def __le__(self, other: "VarPrime") -> bool:  # type: ignore[override]
        return set(self.vars) <= set(other.vars)

    def __lt__(self, other: "VarPrime") -> bool:  # type: ignore[override]
        return set(self.vars) < set(other.vars)

    def sort_key(self):
        return (self.codim, self.vars)

    def names(self) -> List[str]:
        return [self.context.names[i] for i in self.vars]

    def as_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.context, [self.context.var(i) for i in self.vars])

    def __str__(self):
        return "(" + ", ".join(self.names()) + ")"

    def __repr__(self):
        return f"VarPrime{str(self)}"


@dataclass(frozen=True)
class IrreducibleComponent:
    """``<x_i^a_i : a_i > 0>``; ``powers[i] == 0`` means x_i is absent."""

    context: VarContext
    powers: Tuple[int, ...]

    def __post_init__(self):
        if not any(self.powers):
            raise ValueError("irreducible component needs at least one variable power")

    @classmethod
    def from_ideal(cls, I: MonomialIdeal) -> "IrreducibleComponent":
        powers = [0] * I.nvars
        for g in I.gens:
            supp = [i for i, k in enumerate(g) if k]
            if len(supp) != 1:
                raise ValueError(f"{I} is not generated by pure powers")
            powers[supp[0]] = g[supp[0]]
        return cls(I.context, tuple(powers))

    @property
    def radical(self) -> VarPrime:
        return VarPrime(self.context, [i for i, a in enumerate(self.powers) if a])

    def as_ideal(self) -> MonomialIdeal:
        gens = []
        for i, a in enumerate(self.powers):
            if a:
                e = [0] * len(self.powers)
                e[i] = a
                gens.append(tuple(e))
        return MonomialIdeal(self.context, gens)

    def contains(self, other: "IrreducibleComponent") -> bool:
        """Ideal containment ``other`` inside ``self``."""
        return _generators_inside(other.powers, self.powers)

    def sort_key(self):
        return (self.radical.sort_key(), self.powers)

    def __str__(self):
        names = self.context.names
        return "<" + ", ".join(names[i] if a == 1 else f"{names[i]}^{a}"
                               for i, a in enumerate(self.powers) if a) + ">"


def _generators_inside(inner: Tuple[int, ...], outer: Tuple[int, ...]) -> bool:
    # every x_i^inner[i] lies in <x_j^outer[j]> iff outer[i] is present and <= inner[i]
    return all(outer[i] and outer[i] <= a for i, a in enumerate(inner) if a)


@lru_cache(maxsize=65536)
def _split(gens: Tuple[Exponent, ...], nvars: int) -> FrozenSet[Tuple[int, ...]]:
    """Irreducible components (as power tuples) of the ideal with these minimal generators."""
    for g in sorted(gens, reverse=True):
        supp = [i for i, k in enumerate(g) if k]
        if len(supp) >= 2:
            break
    else:
        powers = [0] * nvars
        for g in gens:
            i = next(i for i, k in enumerate(g) if k)
            powers[i] = g[i]
        return frozenset([tuple(powers)])
    i = supp[0]
    pure = tuple(g[i] if t == i else 0 for t in range(nvars))
    rest = tuple(0 if t == i else g[t] for t in range(nvars))
    left = _canonical(gens + (pure,), nvars)
    right = _canonical(gens + (rest,), nvars)
    return _split(left, nvars) | _split(right, nvars)


def _canonical(gens, nvars):
    return tuple(sorted(_minimalize(gens, nvars)))


def _irredundant(components: Iterable[Tuple[int, ...]]) -> List[Tuple[int, ...]]:
    comps = list(set(components))
    keep = []
    for c in comps:
        # c is redundant iff it contains another component
        if not any(d != c and _generators_inside(d, c) for d in comps):
            keep.append(c)
    return keep


def irreducible_decomposition(I: MonomialIdeal) -> List[IrreducibleComponent]:
    """Irredundant irreducible decomposition, sorted by (radical, powers).

    Splits on the lexicographically first generator whose support has at
    least two variables: ``I = (I + x_i^a) ∩ (I + m / x_i^a)``.
    """
    if I.is_zero():
        raise ValueError("the zero ideal has no irreducible decomposition")
    if I.is_unit():
        raise ValueError("the unit ideal has no irreducible decomposition")
    comps = _irredundant(_split(tuple(sorted(I.gens)), I.nvars))
    out = [IrreducibleComponent(I.context, c) for c in comps]
    out.sort(key=IrreducibleComponent.sort_key)
    return out


def primary_decomposition(I: MonomialIdeal, merge: bool = False):
    """Irreducible components grouped by radical.

    Returns ``[(prime, [components...]), ...]``; with ``merge=True`` each group
    is intersected into one primary ideal: ``[(prime, MonomialIdeal), ...]``.
    """
    groups: Dict[VarPrime, List[IrreducibleComponent]] = {}
    for c in irreducible_decomposition(I):
        groups.setdefault(c.radical, []).append(c)
    out = sorted(groups.items(), key=lambda kv: kv[0].sort_key())
    if merge:
        return [(P, intersect_all([c.as_ideal() for c in cs])) for P, cs in out]
    return out


@dataclass(frozen=True)
class AssReport:
    context: VarContext
    primes: Tuple[VarPrime, ...]
    minimal: Tuple[bool, ...]

    @property
    def minimal_primes(self) -> List[VarPrime]:
        return [P for P, m in zip(self.primes, self.minimal) if m]

    @property
    def embedded_primes(self) -> List[VarPrime]:
        return [P for P, m in zip(self.primes, self.minimal) if not m]

    @property
    def codim(self) -> int:
        return min(P.codim for P in self.minimal_primes)

    @property
    def dim(self) -> int:
        return self.context.nvars - self.codim

    def __contains__(self, P: VarPrime) -> bool:
        return P in self.primes

    def __iter__(self):
        return iter(self.primes)

    def __len__(self):
        return len(self.primes)


def _ass_from_primes(context: VarContext, primes: Iterable[VarPrime]) -> AssReport:
    primes = sorted(set(primes), key=VarPrime.sort_key)
    minimal = tuple(not any(Q < P for Q in primes) for P in primes)
    return AssReport(context, tuple(primes), minimal)


def associated_primes(I: MonomialIdeal) -> AssReport:
    """Radicals of the irredundant irreducible components, with minimal flags."""
    return _ass_from_primes(I.context, (c.radical for c in irreducible_decomposition(I)))


def ass_report_from_primes(primes: Sequence[VarPrime]) -> AssReport:
    """Build a report from an explicitly given set of variable primes."""
    primes = list(primes)
    if not primes:
        raise ValueError("need at least one prime")
    return _ass_from_primes(primes[0].context, primes)


def codim(I: MonomialIdeal) -> int:
    if I.is_zero():
        return 0
    return associated_primes(I).codim


def dim(I: MonomialIdeal) -> int:
    """Krull dimension of R/I; ``r`` for the zero ideal."""
    return I.nvars - codim(I)


def is_equidimensional(I: MonomialIdeal) -> bool:
    return len({P.codim for P in associated_primes(I).minimal_primes}) == 1
