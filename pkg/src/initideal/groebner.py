"""Division, S-polynomials, Buchberger's algorithm and coordinate changes."""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .poly import (
    Exponent,
    MonomialOrder,
    Polynomial,
    PolyRing,
    PrimeField,
    ContextMismatch,
    divides,
    mono_div,
    mono_lcm,
    mono_mul,
)


class ResourceLimitError(RuntimeError):
    """A configured pair-count or degree cap was exceeded."""


class GinUnstableError(RuntimeError):
    """Random coordinate changes produced different initial ideals."""


@dataclass(frozen=True)
class IdealGens:
    """Generators of a polynomial ideal, all in one ring."""

    ring: PolyRing
    gens: Tuple[Polynomial, ...]

    def __post_init__(self):
        gens = tuple(self.gens)
        object.__setattr__(self, "gens", gens)
        if not gens:
            raise ValueError("an ideal needs at least one generator")
        for g in gens:
            if g.ring.context != self.ring.context or g.ring.field != self.ring.field:
                raise ContextMismatch("generators from different rings")
            if g.is_zero():
                raise ValueError("zero generator")

    @classmethod
    def of(cls, *gens: Polynomial) -> "IdealGens":
        if len(gens) == 1 and not isinstance(gens[0], Polynomial):
            gens = tuple(gens[0])
        return cls(gens[0].ring, gens)

    @property
    def context(self):
        return self.ring.context

    @property
    def homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def reorder(self, order: MonomialOrder) -> "IdealGens":
        return IdealGens(self.ring.with_order(order), tuple(g.reorder(order) for g in self.gens))


@dataclass(frozen=True)
class GroebnerBasis:
    gens: Tuple[Polynomial, ...]
    order: MonomialOrder
    reduced: bool = True

    @property
    def ring(self) -> PolyRing:
        return self.gens[0].ring

    @property
    def leading_monomials(self) -> List[Exponent]:
        return [g.lm for g in self.gens]

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)


# ----------------------------------------------------------------------
# division
# ----------------------------------------------------------------------


def _normal_form(ring: PolyRing, f: Dict[Exponent, object],
                 divisors: Sequence[Polynomial]) -> Dict[Exponent, object]:
    """Full reduction of the term dict ``f`` by ``divisors`` (all in ``ring``)."""
    fld = ring.field
    norm = fld.normalize
    key = ring.order.key
    p = dict(f)
    heap = [(tuple(-k for k in key(e)), e) for e in p]
    heapq.heapify(heap)
    leads = [(g.lm, g.lc, g.terms[1:]) for g in divisors]
    rem = {}
    while heap:
        _, e = heapq.heappop(heap)
        c = p.pop(e, None)
        if c is None:
            continue
        for lm, lc, tail in leads:
            if divides(lm, e):
                break
        else:
            rem[e] = c
            continue
        q = mono_div(e, lm)
        factor = fld.div(c, lc)
        for ge, gc in tail:
            m = mono_mul(ge, q)
            old = p.get(m)
            if old is None:
                p[m] = norm(-factor * gc)
                heapq.heappush(heap, (tuple(-k for k in key(m)), m))
            else:
                v = norm(old - factor * gc)
                if v:
                    p[m] = v
                else:
                    del p[m]
    return rem


def _common_ring(f: Polynomial, order: Optional[MonomialOrder]) -> PolyRing:
    return f.ring if order is None else f.ring.with_order(order)


def reduce(f: Polynomial, G: Sequence[Polynomial],
           order: Optional[MonomialOrder] = None) -> Polynomial:
    """Normal form of ``f`` modulo ``G`` by multivariate division.

    No term of the result is divisible by a leading monomial of ``G``.
    """
    ring = _common_ring(f, order)
    G = list(G)
    for g in G:
        if g.ring.context != ring.context or g.ring.field != ring.field:
            raise ContextMismatch("divisor from a different ring")
        if g.is_zero():
            raise ValueError("cannot divide by the zero polynomial")
    divisors = [g.reorder(ring.order) for g in G]
    return Polynomial(ring, _normal_form(ring, f.as_dict(), divisors), _trusted=True)


def s_polynomial(f: Polynomial, g: Polynomial,
                 order: Optional[MonomialOrder] = None) -> Polynomial:
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of a zero polynomial")
    ring = _common_ring(f, order)
    f, g = f.reorder(ring.order), g.reorder(ring.order)
    if f.ring != g.ring:
        raise ContextMismatch("S-polynomial of polynomials from different rings")
    fld = ring.field
    L = mono_lcm(f.lm, g.lm)
    a = f.mul_term(mono_div(L, f.lm), fld.inv(f.lc))
    b = g.mul_term(mono_div(L, g.lm), fld.inv(g.lc))
    return a - b


# ----------------------------------------------------------------------
# Buchberger
# ----------------------------------------------------------------------


def _interreduce(ring: PolyRing, polys: List[Polynomial]) -> List[Polynomial]:
    """Reduced Groebner basis from a Groebner basis: minimal leads, reduced tails, monic."""
    polys = sorted((p.monic() for p in polys if p), key=lambda p: ring.order.key(p.lm))
    minimal: List[Polynomial] = []
    for p in polys:
        # ascending leads: only earlier entries can divide this one
        if not any(divides(q.lm, p.lm) for q in minimal):
            minimal.append(p)
    out = []
    for i, p in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        tail = dict(p.terms[1:])
        red = _normal_form(ring, tail, others)
        red[p.lm] = ring.field(1)
        out.append(Polynomial(ring, red, _trusted=True))
    out.sort(key=lambda p: ring.order.key(p.lm), reverse=True)
    return out


def buchberger(ideal: Union[IdealGens, Sequence[Polynomial]],
               order: Optional[MonomialOrder] = None, *,
               max_pairs: Optional[int] = None,
               max_degree: Optional[int] = None) -> GroebnerBasis:
    """Reduced Groebner basis of ``ideal`` under ``order``.

    Uses the normal selection strategy with the coprime and chain criteria.
    ``max_pairs`` caps the number of S-pairs reduced and ``max_degree`` the
    degree of any pair lcm; exceeding either raises :class:`ResourceLimitError`.
    """
    if not isinstance(ideal, IdealGens):
        ideal = IdealGens.of(list(ideal))
    ring = ideal.ring if order is None else ideal.ring.with_order(order)
    key = ring.order.key

    G: List[Polynomial] = []
    for g in ideal.gens:
        g = g.reorder(ring.order)
        h = Polynomial(ring, _normal_form(ring, g.as_dict(), G), _trusted=True) if G else g
        if h:
            G.append(h.monic())
    if any(g.is_monomial() and not any(g.lm) for g in G):
        return GroebnerBasis((ring.one(),), ring.order, True)

    pairs = {(i, j) for j in range(len(G)) for i in range(j)}
    reduced_pairs = 0
    while pairs:
        i, j = min(pairs, key=lambda ij: (
            sum(mono_lcm(G[ij[0]].lm, G[ij[1]].lm)),
            key(mono_lcm(G[ij[0]].lm, G[ij[1]].lm)), ij))
        pairs.discard((i, j))
        a, b = G[i].lm, G[j].lm
        L = mono_lcm(a, b)
        if all(x == 0 or y == 0 for x, y in zip(a, b)):
            continue
        if _chain_skip(G, pairs, i, j, L):
            continue
        if max_degree is not None and sum(L) > max_degree:
            raise ResourceLimitError(
                f"S-pair lcm degree {sum(L)} exceeds max_degree={max_degree}")
        reduced_pairs += 1
        if max_pairs is not None and reduced_pairs > max_pairs:
            raise ResourceLimitError(f"more than max_pairs={max_pairs} S-pairs reduced")
        s = s_polynomial(G[i], G[j])
        h = _normal_form(ring, s.as_dict(), G)
        if h:
            h = Polynomial(ring, h, _trusted=True).monic()
            if not any(h.lm):
                return GroebnerBasis((ring.one(),), ring.order, True)
            n = len(G)
            G.append(h)
            pairs.update((k, n) for k in range(n))
    return GroebnerBasis(tuple(_interreduce(ring, G)), ring.order, True)


def _chain_skip(G, pairs, i, j, L) -> bool:
    for k in range(len(G)):
        if k == i or k == j:
            continue
        if (min(i, k), max(i, k)) in pairs or (min(j, k), max(j, k)) in pairs:
            continue
        if divides(G[k].lm, L):
            return True
    return False


def initial_ideal(G: GroebnerBasis):
    """Monomial ideal generated by the leading monomials of ``G``."""
    from .monoideal import MonomialIdeal
    return MonomialIdeal(G.ring.context, G.leading_monomials)


def membership(f: Polynomial, G: GroebnerBasis) -> bool:
    """True iff ``f`` lies in the ideal generated by the Groebner basis ``G``."""
    if f.ring.context != G.ring.context or f.ring.field != G.ring.field:
        raise ContextMismatch("polynomial and basis from different rings")
    f = f.reorder(G.order)
    return not _normal_form(G.ring, f.as_dict(), G.gens)


# ----------------------------------------------------------------------
# linear coordinate changes
# ----------------------------------------------------------------------


def _rank(rows: List[list], field) -> int:
    rows = [list(r) for r in rows]
    n = len(rows)
    m = len(rows[0]) if rows else 0
    rank = 0
    for col in range(m):
        piv = next((r for r in range(rank, n) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = field.inv(rows[rank][col])
        for r in range(n):
            if r != rank and rows[r][col]:
                f = field.normalize(rows[r][col] * inv)
                rows[r] = [field.normalize(x - f * y) for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


class LinearChange:
    """Invertible substitution ``x_i -> sum_j g[i][j] * x_j``.

    Composition ``g * h`` is the change that applies ``h`` first and then
    ``g``: ``apply_change(g * h, f) == apply_change(g, apply_change(h, f))``.
    As a matrix this is ``h @ g``.
    """

    def __init__(self, matrix, field=None):
        from .poly import QQ
        self.field = QQ if field is None else field
        rows = [tuple(self.field(x) for x in row) for row in matrix]
        r = len(rows)
        if r == 0 or any(len(row) != r for row in rows):
            raise ValueError("change of coordinates needs a square matrix")
        if _rank(rows, self.field) != r:
            raise ValueError("singular matrix is not a change of coordinates")
        self.matrix: Tuple[Tuple, ...] = tuple(rows)

    @property
    def size(self) -> int:
        return len(self.matrix)

    @classmethod
    def identity(cls, r: int, field=None) -> "LinearChange":
        return cls([[1 if i == j else 0 for j in range(r)] for i in range(r)], field)

    def is_lower_triangular(self) -> bool:
        return all(not self.matrix[i][j] for i in range(self.size) for j in range(i + 1, self.size))

    def __mul__(self, other: "LinearChange") -> "LinearChange":
        if not isinstance(other, LinearChange):
            return NotImplemented
        if other.size != self.size or other.field != self.field:
            raise ContextMismatch("changes of different size or field")
        norm = self.field.normalize
        h, g = other.matrix, self.matrix
        r = self.size
        prod = [[norm(sum(h[i][k] * g[k][j] for k in range(r))) for j in range(r)]
                for i in range(r)]
        return LinearChange(prod, self.field)

    def __eq__(self, other):
        return isinstance(other, LinearChange) and self.matrix == other.matrix \
            and self.field == other.field

    def __repr__(self):
        return f"LinearChange({[list(map(str, row)) for row in self.matrix]})"

    def images(self, ring: PolyRing) -> List[Polynomial]:
        out = []
        for row in self.matrix:
            out.append(Polynomial(ring, {ring.context.var(j): c for j, c in enumerate(row) if c},
                                  _trusted=True))
        return out


def _substitute(f: Polynomial, images: List[Polynomial]) -> Polynomial:
    ring = f.ring
    powers: List[Dict[int, Polynomial]] = [{0: ring.one()} for _ in images]

    def power(i, k):
        cache = powers[i]
        if k not in cache:
            cache[k] = power(i, k - 1) * images[i]
        return cache[k]

    acc: Dict[Exponent, object] = {}
    norm = ring.field.normalize
    for e, c in f.terms:
        term = ring.constant(c)
        for i, k in enumerate(e):
            if k:
                term = term * power(i, k)
        for m, a in term.terms:
            acc[m] = norm(acc.get(m, 0) + a)
    return Polynomial._from_dict(ring, acc)


def apply_change(g: LinearChange, target: Union[Polynomial, IdealGens]):
    """Substitute ``x_i -> g(x_i)`` into a polynomial or into every generator of an ideal."""
    ring = target.ring
    if g.size != ring.nvars:
        raise ContextMismatch(f"{g.size}x{g.size} change on {ring.nvars} variables")
    if g.field != ring.field:
        raise ContextMismatch("change of coordinates over a different field")
    images = g.images(ring)
    if isinstance(target, Polynomial):
        return _substitute(target, images)
    return IdealGens(ring, tuple(_substitute(f, images) for f in target.gens))


def random_change(r: int, field, rng: random.Random, height: int = 101,
                  max_attempts: int = 1000) -> LinearChange:
    """Dense random invertible change; entries nonzero, from [-height, height] over Q
    and uniform nonzero residues over F_p."""
    for _ in range(max_attempts):
        if isinstance(field, PrimeField):
            rows = [[rng.randrange(1, field.p) for _ in range(r)] for _ in range(r)]
        else:
            rows = [[rng.choice((-1, 1)) * rng.randint(1, height) for _ in range(r)]
                    for _ in range(r)]
        try:
            return LinearChange(rows, field)
        except ValueError:
            continue
    raise ValueError(f"no invertible dense {r}x{r} matrix in {max_attempts} draws over {field}")


def gin(ideal: IdealGens, order: Optional[MonomialOrder] = None, seed: int = 0,
        trials: int = 2, *, height: int = 101, max_pairs: Optional[int] = None,
        max_degree: Optional[int] = None):
    """Generic initial ideal, certified by agreement across ``trials`` random changes.

    Raises :class:`GinUnstableError` if two draws disagree.
    """
    if trials < 2:
        raise ValueError("gin needs at least two trials")
    order = ideal.ring.order if order is None else order
    rng = random.Random(seed)
    result = None
    for t in range(trials):
        g = random_change(ideal.ring.nvars, ideal.ring.field, rng, height)
        gb = buchberger(apply_change(g, ideal), order,
                        max_pairs=max_pairs, max_degree=max_degree)
        ini = initial_ideal(gb)
        if result is None:
            result = ini
        elif ini != result:
            raise GinUnstableError(
                f"trial {t} gave {ini} but trial 0 gave {result}; "
                "increase trials or the entry height")
    return result


__all__ = [
    "GinUnstableError", "GroebnerBasis", "IdealGens", "LinearChange",
    "ResourceLimitError", "apply_change", "buchberger", "gin", "initial_ideal",
    "membership", "random_change", "reduce", "s_polynomial",
]
