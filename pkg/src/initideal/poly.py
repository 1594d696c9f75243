"""Exact coefficient fields, monomial orders and canonical multivariate polynomials.

Exponent vectors are plain tuples of non-negative ints, one entry per
variable of a :class:`VarContext`.  Variable position 0 is the largest
variable, so ``VarContext(("x", "y", "z"))`` means ``x > y > z``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

Exponent = Tuple[int, ...]
Coefficient = Union[int, Fraction]


class ContextMismatch(ValueError):
    """Operands live in different rings (variables, field or order)."""


# ----------------------------------------------------------------------
# fields
# ----------------------------------------------------------------------


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class RationalField:
    """The rationals; coefficients are ``fractions.Fraction``."""

    characteristic = 0

    def __call__(self, value) -> Fraction:
        return Fraction(value)

    def normalize(self, c: Fraction) -> Fraction:
        return c

    def div(self, a: Fraction, b: Fraction) -> Fraction:
        return a / b

    def inv(self, a: Fraction) -> Fraction:
        return 1 / a

    def __str__(self) -> str:
        return "Q"


@dataclass(frozen=True)
class PrimeField:
    """The field with ``p`` elements; coefficients are ints in ``[0, p)``."""

    p: int

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    @property
    def characteristic(self) -> int:
        return self.p

    def __call__(self, value) -> int:
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(
                    f"denominator {value.denominator} vanishes mod {self.p}")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        return int(value) % self.p

    def normalize(self, c: int) -> int:
        return c % self.p

    def div(self, a: int, b: int) -> int:
        return a * pow(b, -1, self.p) % self.p

    def inv(self, a: int) -> int:
        return pow(a, -1, self.p)

    def __str__(self) -> str:
        return f"Fp:{self.p}"


QQ = RationalField()
Field = Union[RationalField, PrimeField]


def field_from_name(name: str) -> Field:
    """Parse ``"Q"`` or ``"Fp:<p>"``."""
    name = name.strip()
    if name in ("Q", "QQ"):
        return QQ
    if name.startswith("Fp:"):
        try:
            p = int(name[3:])
        except ValueError:
            raise ValueError(f"bad field modulus in {name!r}") from None
        if p == 0:
            raise ValueError("zero modulus")
        return PrimeField(p)
    raise ValueError(f"unknown field {name!r} (expected 'Q' or 'Fp:<p>')")


# ----------------------------------------------------------------------
# variables and monomial orders
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class VarContext:
    """Ordered variable names; list order is the variable order."""

    names: Tuple[str, ...]
    _index: Dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ValueError("need at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def var(self, i: int) -> Exponent:
        e = [0] * len(self.names)
        e[i] = 1
        return tuple(e)

    def one(self) -> Exponent:
        return (0,) * len(self.names)

    def monomial_str(self, e: Exponent) -> str:
        parts = []
        for name, k in zip(self.names, e):
            if k == 1:
                parts.append(name)
            elif k > 1:
                parts.append(f"{name}^{k}")
        return "*".join(parts) if parts else "1"


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


def _lex_key(e: Exponent):
    return e


def _grlex_key(e: Exponent):
    return (sum(e),) + e


def _grevlex_key(e: Exponent):
    return (sum(e),) + tuple(-k for k in reversed(e))


class MonomialOrder(enum.Enum):
    """Term orders.

    ``key`` maps an exponent vector to a flat int tuple that increases with
    the order, so ``max(..., key=order.key)`` is the leading monomial.
    """

    LEX = "lex"
    GRLEX = "grlex"
    GREVLEX = "grevlex"

    @property
    def key(self):
        return _KEYS[self]

    @classmethod
    def from_name(cls, name: str) -> "MonomialOrder":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ValueError(
                f"unknown monomial order {name!r} (expected lex, grlex or grevlex)"
            ) from None

    def __str__(self) -> str:
        return self.value


_KEYS = {
    MonomialOrder.LEX: _lex_key,
    MonomialOrder.GRLEX: _grlex_key,
    MonomialOrder.GREVLEX: _grevlex_key,
}

LEX = MonomialOrder.LEX
GRLEX = MonomialOrder.GRLEX
GREVLEX = MonomialOrder.GREVLEX


def compare(order: MonomialOrder, a: Exponent, b: Exponent) -> Ordering:
    if len(a) != len(b):
        raise ContextMismatch(f"exponent vectors of length {len(a)} and {len(b)}")
    ka, kb = order.key(a), order.key(b)
    if ka == kb:
        return Ordering.EQ
    return Ordering.GT if ka > kb else Ordering.LT


# small exponent-vector helpers used throughout the package

def divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_mul(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a: Exponent, b: Exponent) -> Exponent:
    """``a / b``; caller guarantees ``b | a``."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_gcd(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x if x < y else y for x, y in zip(a, b))


# ----------------------------------------------------------------------
# polynomials
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class PolyRing:
    """Variables, coefficient field and the active term order."""

    context: VarContext
    field: Field = QQ
    order: MonomialOrder = GREVLEX

    def __post_init__(self):
        if isinstance(self.order, str) and not isinstance(self.order, MonomialOrder):
            object.__setattr__(self, "order", MonomialOrder.from_name(self.order))
        if isinstance(self.field, str):
            object.__setattr__(self, "field", field_from_name(self.field))

    @classmethod
    def from_names(cls, names: Iterable[str], field: Field = QQ,
                   order: MonomialOrder = GREVLEX) -> "PolyRing":
        return cls(VarContext(tuple(names)), field, order)

    @property
    def nvars(self) -> int:
        return self.context.nvars

    def with_order(self, order: MonomialOrder) -> "PolyRing":
        return PolyRing(self.context, self.field, order)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {self.context.one(): c})

    def monomial(self, e: Exponent, c=1) -> "Polynomial":
        return Polynomial(self, {tuple(e): c})

    def gen(self, name_or_index) -> "Polynomial":
        i = name_or_index if isinstance(name_or_index, int) else self.context.index(name_or_index)
        return self.monomial(self.context.var(i))

    @property
    def gens(self) -> Tuple["Polynomial", ...]:
        return tuple(self.gen(i) for i in range(self.nvars))


class Polynomial:
    """Immutable polynomial with nonzero terms sorted in decreasing ``ring.order``."""

    __slots__ = ("ring", "terms", "_dict", "_hash")

    def __init__(self, ring: PolyRing, terms: Mapping[Exponent, Coefficient] = None,
                 *, _trusted: bool = False):
        self.ring = ring
        if _trusted:
            # terms already a normalized dict without zeros
            d = terms
        else:
            fld = ring.field
            n = ring.nvars
            d = {}
            for e, c in (terms or {}).items():
                e = tuple(e)
                if len(e) != n or any(k < 0 for k in e):
                    raise ValueError(f"bad exponent vector {e} for {n} variables")
                c = fld(c)
                if c:
                    d[e] = c
        key = ring.order.key
        self.terms = tuple(sorted(d.items(), key=lambda t: key(t[0]), reverse=True))
        self._dict = d
        self._hash = None

    # -- construction helpers -------------------------------------------
    @classmethod
    def _from_dict(cls, ring: PolyRing, d: Dict[Exponent, Coefficient]) -> "Polynomial":
        return cls(ring, {e: c for e, c in d.items() if c}, _trusted=True)

    # -- basic queries ----------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Exponent, Coefficient]]:
        return iter(self.terms)

    def as_dict(self) -> Dict[Exponent, Coefficient]:
        return dict(self._dict)

    def coeff(self, e: Exponent) -> Coefficient:
        return self._dict.get(tuple(e), self.ring.field(0))

    @property
    def lm(self) -> Exponent:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0][0]

    @property
    def lc(self) -> Coefficient:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0][1]

    def degree(self) -> int:
        return max((sum(e) for e in self._dict), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._dict}) <= 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def reorder(self, order: MonomialOrder) -> "Polynomial":
        if order is self.ring.order:
            return self
        return Polynomial(self.ring.with_order(order), self._dict, _trusted=True)

    def monic(self) -> "Polynomial":
        inv = self.ring.field.inv(self.lc)
        return self.scale(inv)

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise ContextMismatch(f"cannot combine polynomials from {self.ring} and {other.ring}")

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        norm = self.ring.field.normalize
        d = dict(self._dict)
        for e, c in other.terms:
            s = norm(d.get(e, 0) + c)
            if s:
                d[e] = s
            else:
                d.pop(e, None)
        return Polynomial(self.ring, d, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        norm = self.ring.field.normalize
        return Polynomial(self.ring, {e: norm(-c) for e, c in self.terms}, _trusted=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def scale(self, c) -> "Polynomial":
        fld = self.ring.field
        c = fld(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {e: fld.normalize(a * c) for e, a in self.terms},
                          _trusted=True)

    def mul_term(self, e: Exponent, c) -> "Polynomial":
        """Multiply by the single term ``c * x^e``."""
        fld = self.ring.field
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring,
                          {mono_mul(m, e): fld.normalize(a * c) for m, a in self.terms},
                          _trusted=True)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        norm = self.ring.field.normalize
        d: Dict[Exponent, Coefficient] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = mono_mul(e1, e2)
                d[e] = d.get(e, 0) + c1 * c2
        return Polynomial._from_dict(self.ring, {e: norm(c) for e, c in d.items()})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._dict == other._dict
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._dict.items())))
        return self._hash

    def __repr__(self):
        from .textio import format_polynomial
        return f"Polynomial({format_polynomial(self)!r})"

    def __str__(self):
        from .textio import format_polynomial
        return format_polynomial(self)


def leading_term(f: Polynomial, order: MonomialOrder = None) -> Tuple[Coefficient, Exponent]:
    """Largest term of ``f`` under ``order`` (default: the ring's order)."""
    if f.is_zero():
        raise ValueError("zero polynomial has no leading term")
    if order is not None and order is not f.ring.order:
        f = f.reorder(order)
    e, c = f.terms[0]
    return c, e
