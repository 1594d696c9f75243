"""Saturated chains of associated primes and the dimension-two Borel checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .decompose import AssReport, VarPrime, associated_primes, is_equidimensional
from .ideal import MonomialIdeal, is_borel_fixed, is_nzd, BorelResult


@dataclass(frozen=True)
class ChainStep:
    """Outcome for one non-minimal associated prime ``Q``."""

    prime: VarPrime
    witness: Optional[VarPrime]
    # P_1 < P_2 < ... < Q with P_1 minimal, or None when no saturated chain exists
    chain: Optional[Tuple[VarPrime, ...]]

    @property
    def ok(self) -> bool:
        return self.witness is not None and self.chain is not None


@dataclass(frozen=True)
class ChainReport:
    holds: bool
    steps: Tuple[ChainStep, ...]

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "fails"

    @property
    def violations(self) -> List[VarPrime]:
        return [s.prime for s in self.steps if s.witness is None]

    @property
    def chains(self) -> List[Tuple[VarPrime, ...]]:
        return [s.chain for s in self.steps if s.chain is not None]


def _one_step_down(ass: AssReport, Q: VarPrime) -> List[VarPrime]:
    return [P for P in ass.primes if P < Q and P.codim == Q.codim - 1]


def saturated_chain_property(ass: AssReport) -> ChainReport:
    """For each embedded ``Q`` look for an associated ``P`` inside it one dimension up,
    then extend to a saturated chain ending at a minimal prime."""
    if not ass.primes:
        raise ValueError("empty set of associated primes")
    minimal = set(ass.minimal_primes)
    memo: Dict[VarPrime, Optional[Tuple[VarPrime, ...]]] = {}

    def chain_to(Q: VarPrime) -> Optional[Tuple[VarPrime, ...]]:
        if Q in memo:
            return memo[Q]
        if Q in minimal:
            memo[Q] = (Q,)
            return memo[Q]
        found = None
        for P in _one_step_down(ass, Q):
            below = chain_to(P)
            if below is not None:
                found = below + (Q,)
                break
        memo[Q] = found
        return found

    steps = []
    for Q in ass.embedded_primes:
        down = _one_step_down(ass, Q)
        chain = chain_to(Q)
        witness = chain[-2] if chain is not None else (down[0] if down else None)
        steps.append(ChainStep(Q, witness, chain))
    holds = all(s.witness is not None for s in steps)
    return ChainReport(holds, tuple(steps))


@dataclass(frozen=True)
class TheoremReport:
    """Hypotheses and conclusions of the dimension-two Borel statement, each evaluated independently.

    ``status`` is one of ``"holds"``, ``"not covered"`` (some hypothesis fails
    and so does some conclusion) or ``"violated"`` (all checked hypotheses hold
    but a conclusion fails).  The statement also needs ``I = in(P)`` for a prime
    ``P``, which cannot be read off ``I``; a "violated" ideal that does not come
    from a prime is no counterexample.
    """

    ideal: MonomialIdeal
    ass: AssReport
    borel: BorelResult
    codim_r_minus_2: bool
    equidimensional: bool
    prefix_primes: bool
    chain: ChainReport
    embedded_implies_r_minus_1: bool
    last_variable_nzd: bool
    notes: Tuple[str, ...] = field(default=())

    @property
    def hypotheses(self) -> Dict[str, bool]:
        return {
            "borel": self.borel.borel_fixed,
            "codim_r_minus_2": self.codim_r_minus_2,
            "equidimensional": self.equidimensional,
        }

    @property
    def conclusion(self) -> Dict[str, bool]:
        return {
            "prefix_primes": self.prefix_primes,
            "saturated_chain": self.chain.holds,
            "embedded_implies_r_minus_1": self.embedded_implies_r_minus_1,
        }

    @property
    def covered(self) -> bool:
        return all(self.hypotheses.values())

    @property
    def status(self) -> str:
        if all(self.conclusion.values()):
            return "holds"
        return "violated" if self.covered else "not covered"


def check_theorem(I: MonomialIdeal, order=None) -> TheoremReport:
    """Evaluate the hypotheses (Borel-fixed, codim r-2, equidimensional) and the
    conclusions (prefix primes, saturated chains, and
    ``(x_1..x_r) in Ass => (x_1..x_{r-1}) in Ass``) on a monomial ideal.

    ``order`` only affects the wording of ``notes``.
    """
    if I.is_zero() or I.is_unit():
        raise ValueError("check_theorem needs a proper nonzero monomial ideal")
    r = I.nvars
    ctx = I.context
    ass = associated_primes(I)
    borel = is_borel_fixed(I)
    maximal = VarPrime.prefix(ctx, r)
    implied = maximal not in ass or (r >= 2 and VarPrime.prefix(ctx, r - 1) in ass)
    last_nzd = is_nzd(I, r - 1)
    notes = ["borel-fixed: char-0 elementary-move criterion"]
    if order is not None and str(order) == "grevlex":
        notes.append(f"last variable {ctx.names[-1]} is "
                     f"{'a nonzerodivisor' if last_nzd else 'a zero divisor'} on R/I")
    elif order is not None:
        notes.append(f"order {order}: last-variable regularity is only guaranteed for grevlex")
    return TheoremReport(
        ideal=I,
        ass=ass,
        borel=borel,
        codim_r_minus_2=ass.codim == r - 2,
        equidimensional=is_equidimensional(I),
        prefix_primes=all(P.is_prefix() for P in ass.primes),
        chain=saturated_chain_property(ass),
        embedded_implies_r_minus_1=implied,
        last_variable_nzd=last_nzd,
        notes=tuple(notes),
    )
