"""Parsing and canonical printing of polynomials, ideals and reports.

Polynomial grammar (no implicit multiplication; ``xy`` is one identifier)::

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*      # '/' only by a nonzero constant
    factor := ('+' | '-') factor | atom ('^' INT)?
    atom   := INT | NAME | '(' expr ')'

Ideal files are line oriented::

    # comment
    vars: x, y, z
    order: grevlex
    field: Q
    gens:
    x*y - 1
    y^2 - 1
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import List, Optional, Tuple

from .poly import (
    QQ,
    Field,
    MonomialOrder,
    Polynomial,
    PolyRing,
    VarContext,
    field_from_name,
)

FORMAT_VERSION = 1


class ParseError(ValueError):
    """Malformed input; ``position`` is a 0-based character offset, ``line`` 1-based."""

    def __init__(self, message: str, position: Optional[int] = None, line: Optional[int] = None):
        self.message = message
        self.position = position
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if position is not None:
            where.append(f"col {position + 1}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)


class UnknownVariableError(ParseError):
    pass


# ----------------------------------------------------------------------
# polynomial parser
# ----------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, found {val or 'end of input'!r}", pos)

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        p = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {val!r}", pos)
        return p

    def expr(self) -> Polynomial:
        p = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                q = self.term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def term(self) -> Polynomial:
        p = self.factor()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "*/":
                self.take()
                q = self.factor()
                if val == "*":
                    p = p * q
                else:
                    if q.is_zero():
                        raise ParseError("division by zero", pos)
                    if len(q) != 1 or any(q.lm):
                        raise ParseError("can only divide by a constant", pos)
                    p = p.scale(self.ring.field.inv(q.lc))
            else:
                return p

    def factor(self) -> Polynomial:
        kind, val, pos = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            p = self.factor()
            return -p if val == "-" else p
        base = self.atom()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, val, pos = self.take()
            if kind != "int":
                raise ParseError("exponent must be a non-negative integer", pos)
            return base ** int(val)
        return base

    def atom(self) -> Polynomial:
        kind, val, pos = self.take()
        if kind == "int":
            try:
                return self.ring.constant(int(val))
            except ZeroDivisionError as exc:
                raise ParseError(str(exc), pos) from None
        if kind == "name":
            try:
                return self.ring.gen(val)
            except KeyError:
                raise UnknownVariableError(f"unknown variable {val!r}", pos) from None
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect_op(")")
            return p
        raise ParseError(f"unexpected {val or 'end of input'!r}", pos)


def parse_polynomial(text: str, ring: PolyRing) -> Polynomial:
    return _Parser(text, ring).parse()


def parse_monomial(text: str, context: VarContext):
    """Exponent vector of a monomial written like ``x*y^2`` (or ``1``)."""
    ring = PolyRing(context, QQ)
    p = parse_polynomial(text, ring)
    if len(p) != 1 or p.lc != 1:
        raise ParseError(f"{text.strip()!r} is not a monomial", 0)
    return p.lm


# ----------------------------------------------------------------------
# printing
# ----------------------------------------------------------------------


def _coeff_str(c, fld) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def format_polynomial(f: Polynomial) -> str:
    """Terms in decreasing active order, e.g. ``x^2 + 2*x*y - 1/2*y^2``."""
    if f.is_zero():
        return "0"
    ctx = f.ring.context
    fld = f.ring.field
    out = []
    for idx, (e, c) in enumerate(f.terms):
        neg = isinstance(fld, type(QQ)) and c < 0
        mag = -c if neg else c
        mono = ctx.monomial_str(e)
        if mono == "1":
            body = _coeff_str(mag, fld)
        elif mag == 1:
            body = mono
        else:
            body = f"{_coeff_str(mag, fld)}*{mono}"
        if idx == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def format_monomial_ideal(I) -> str:
    return str(I)


# ----------------------------------------------------------------------
# ideal files
# ----------------------------------------------------------------------


@dataclass
class IdealFile:
    vars: List[str]
    order: MonomialOrder = MonomialOrder.GREVLEX
    field: Field = QQ
    gens: List[str] = dc_field(default_factory=list)
    comments: List[str] = dc_field(default_factory=list)
    # 1-based source line of each generator, for error messages
    gen_lines: List[int] = dc_field(default_factory=list)

    @property
    def context(self) -> VarContext:
        return VarContext(tuple(self.vars))

    def ring(self, order: Optional[MonomialOrder] = None, fld: Optional[Field] = None) -> PolyRing:
        return PolyRing(self.context, fld or self.field, order or self.order)

    def polynomials(self, order=None, fld=None) -> List[Polynomial]:
        ring = self.ring(order, fld)
        lines = self.gen_lines or [None] * len(self.gens)
        out = []
        for text, line in zip(self.gens, lines):
            try:
                out.append(parse_polynomial(text, ring))
            except ParseError as exc:
                raise type(exc)(exc.message, exc.position, line) from None
        return out

    def dumps(self) -> str:
        lines = [f"# {c}" if not c.startswith("#") else c for c in self.comments]
        lines.append("vars: " + ", ".join(self.vars))
        lines.append(f"order: {self.order}")
        lines.append(f"field: {self.field}")
        lines.append("gens:")
        lines.extend(self.gens)
        return "\n".join(lines) + "\n"


_HEADERS = ("vars", "order", "field", "gens")


def parse_ideal_file(text: str) -> IdealFile:
    vars_: Optional[List[str]] = None
    order = MonomialOrder.GREVLEX
    fld: Field = QQ
    gens: List[str] = []
    gen_lines: List[int] = []
    comments: List[str] = []
    in_gens = False
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line)
            continue
        m = re.match(r"([A-Za-z_-]+)\s*:(.*)$", line)
        if m and m.group(1) in _HEADERS:
            key, rest = m.group(1), m.group(2).strip()
            in_gens = False
            if key == "vars":
                names = [v for v in re.split(r"[,\s]+", rest) if v]
                for v in names:
                    if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", v):
                        raise ParseError(f"bad variable name {v!r}", line=lineno)
                if not names:
                    raise ParseError("empty variable list", line=lineno)
                if len(set(names)) != len(names):
                    raise ParseError("duplicate variable names", line=lineno)
                vars_ = names
            elif key == "order":
                try:
                    order = MonomialOrder.from_name(rest)
                except ValueError as exc:
                    raise ParseError(str(exc), line=lineno) from None
            elif key == "field":
                try:
                    fld = field_from_name(rest)
                except ValueError as exc:
                    raise ParseError(str(exc), line=lineno) from None
            else:
                in_gens = True
                if rest:
                    gens.append(rest)
                    gen_lines.append(lineno)
            continue
        if m and not in_gens:
            raise ParseError(f"unknown header {m.group(1)!r}", line=lineno)
        if not in_gens:
            raise ParseError(f"unexpected line outside 'gens:' section: {line!r}", line=lineno)
        gens.append(line)
        gen_lines.append(lineno)
    if vars_ is None:
        raise ParseError("missing 'vars:' header")
    if not gens:
        raise ParseError("no generators")
    f = IdealFile(vars_, order, fld, gens, comments, gen_lines)
    f.polynomials()  # validates every generator
    return f


# ----------------------------------------------------------------------
# JSON
# ----------------------------------------------------------------------


def envelope(kind: str, **payload) -> dict:
    return {"format-version": FORMAT_VERSION, "type": kind, **payload}


def _coeff_json(c):
    if isinstance(c, Fraction) and c.denominator != 1:
        return str(c)
    return int(c)


def polynomial_to_json(f: Polynomial) -> dict:
    return envelope(
        "polynomial",
        vars=list(f.ring.context.names),
        field=str(f.ring.field),
        order=str(f.ring.order),
        text=format_polynomial(f),
        terms=[{"coeff": _coeff_json(c), "exps": list(e)} for e, c in f.terms],
    )


def _mono_json(ctx, e):
    return {"text": ctx.monomial_str(e), "exps": list(e)}


def monomial_ideal_to_json(I) -> dict:
    return envelope(
        "monomial-ideal",
        vars=list(I.context.names),
        text=str(I),
        gens=[_mono_json(I.context, g) for g in I.gens],
    )


def _prime_json(P) -> dict:
    return {"vars": P.names(), "codim": P.codim, "dim": P.dim, "prefix": P.is_prefix()}


def ass_report_to_json(ass) -> dict:
    return envelope(
        "ass-report",
        vars=list(ass.context.names),
        codim=ass.codim,
        dim=ass.dim,
        primes=[dict(_prime_json(P), minimal=m) for P, m in zip(ass.primes, ass.minimal)],
    )


def chain_report_to_json(rep) -> dict:
    return envelope(
        "chain-report",
        verdict=rep.verdict,
        violations=[P.names() for P in rep.violations],
        steps=[{
            "prime": s.prime.names(),
            "witness": s.witness.names() if s.witness is not None else None,
            "chain": [P.names() for P in s.chain] if s.chain is not None else None,
        } for s in rep.steps],
    )


def borel_to_json(res, ctx) -> dict:
    w = res.witness
    return envelope(
        "borel-report",
        borel_fixed=res.borel_fixed,
        criterion="char-0 elementary moves",
        witness=None if w is None else {
            "generator": ctx.monomial_str(w.generator),
            "move": w.k,
            "moved": ctx.monomial_str(w.moved),
        },
    )


def decomposition_to_json(groups, ctx) -> dict:
    return envelope(
        "decomposition",
        vars=list(ctx.names),
        components=[{
            "radical": P.names(),
            "components": [str(c) for c in cs],
        } for P, cs in groups],
    )


def theorem_report_to_json(rep) -> dict:
    return envelope(
        "theorem-report",
        ideal=str(rep.ideal),
        status=rep.status,
        covered=rep.covered,
        hypotheses=rep.hypotheses,
        conclusion=rep.conclusion,
        borel=borel_to_json(rep.borel, rep.ideal.context),
        ass=ass_report_to_json(rep.ass),
        chain=chain_report_to_json(rep.chain),
        last_variable_nzd=rep.last_variable_nzd,
        notes=list(rep.notes),
    )


def groebner_to_json(G) -> dict:
    return envelope(
        "groebner-basis",
        vars=list(G.ring.context.names),
        field=str(G.ring.field),
        order=str(G.order),
        reduced=G.reduced,
        gens=[format_polynomial(g) for g in G.gens],
    )


# ----------------------------------------------------------------------
# text reports
# ----------------------------------------------------------------------


def format_ass_report(ass) -> str:
    lines = [f"codim: {ass.codim}", f"dim: {ass.dim}"]
    for P, m in zip(ass.primes, ass.minimal):
        lines.append(f"{P}  codim={P.codim} {'minimal' if m else 'embedded'}")
    return "\n".join(lines)


def format_chain_report(rep) -> str:
    lines = [f"saturated-chain: {rep.verdict}"]
    for s in rep.steps:
        if s.chain is not None:
            lines.append(f"{s.prime}: chain " + " < ".join(str(P) for P in s.chain))
        elif s.witness is not None:
            lines.append(f"{s.prime}: witness {s.witness}, no chain to a minimal prime")
        else:
            lines.append(f"{s.prime}: violation, no associated prime of codim "
                         f"{s.prime.codim - 1} inside it")
    return "\n".join(lines)


def format_borel(res, ctx) -> str:
    line = f"borel-fixed: {'true' if res.borel_fixed else 'false'}"
    if res.witness is not None:
        w = res.witness
        line += (f"\nwitness: e_{w.k}({ctx.monomial_str(w.generator)}) = "
                 f"{ctx.monomial_str(w.moved)} not in I")
    return line


def format_theorem_report(rep) -> str:
    lines = [f"ideal: {rep.ideal}", f"status: {rep.status}"]
    for k, v in rep.hypotheses.items():
        lines.append(f"hypothesis {k}: {str(v).lower()}")
    for k, v in rep.conclusion.items():
        lines.append(f"conclusion {k}: {str(v).lower()}")
    lines.append("ass: " + ", ".join(str(P) for P in rep.ass.primes))
    lines.extend(f"note: {n}" for n in rep.notes)
    return "\n".join(lines)


def print_canonical(value, format: str = "text") -> str:
    """Deterministic rendering of a polynomial, monomial ideal or report."""
    from .groebner import GroebnerBasis
    from .monoideal import AssReport, ChainReport, MonomialIdeal, TheoremReport

    if format not in ("text", "json"):
        raise ValueError(f"unknown format {format!r}")
    as_json = format == "json"
    if isinstance(value, Polynomial):
        obj = polynomial_to_json(value) if as_json else format_polynomial(value)
    elif isinstance(value, MonomialIdeal):
        obj = monomial_ideal_to_json(value) if as_json else str(value)
    elif isinstance(value, AssReport):
        obj = ass_report_to_json(value) if as_json else format_ass_report(value)
    elif isinstance(value, ChainReport):
        obj = chain_report_to_json(value) if as_json else format_chain_report(value)
    elif isinstance(value, TheoremReport):
        obj = theorem_report_to_json(value) if as_json else format_theorem_report(value)
    elif isinstance(value, GroebnerBasis):
        obj = groebner_to_json(value) if as_json else "\n".join(
            format_polynomial(g) for g in value.gens)
    else:
        raise TypeError(f"cannot print {type(value).__name__}")
    if as_json:
        return json.dumps(obj, indent=2, sort_keys=True)
    return obj


__all__ = [
    "FORMAT_VERSION", "IdealFile", "ParseError", "UnknownVariableError",
    "format_polynomial", "parse_ideal_file", "parse_monomial", "parse_polynomial",
    "print_canonical",
]
