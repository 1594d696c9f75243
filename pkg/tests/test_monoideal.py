from itertools import product

import pytest
from hypothesis import assume, given, settings, strategies as st

from initideal import fixtures as F
from initideal.monoideal import (
    IrreducibleComponent,
    MonomialIdeal,
    VarPrime,
    ass_report_from_primes,
    associated_primes,
    check_theorem,
    codim,
    colon,
    contains_many,
    contains_monomial,
    dim,
    elementary_move,
    intersect,
    intersect_all,
    irreducible_decomposition,
    is_borel_fixed,
    is_equidimensional,
    is_nzd,
    is_socle,
    minimal_generators,
    primary_decomposition,
    saturated_chain_property,
)
from initideal.poly import VarContext, divides


def M(names, *monos):
    return F.monomial_ideal(names, monos)


def exps_below(bound):
    return product(*(range(b + 1) for b in bound))


def brute_member(gens, m):
    return any(all(g[i] <= m[i] for i in range(len(m))) for g in gens)


@st.composite
def monomial_ideals(draw, max_vars=4, max_exp=3, max_gens=5, nonzero=True):
    n = draw(st.integers(1, max_vars))
    ctx = VarContext(tuple(f"x{i + 1}" for i in range(n)))
    gens = draw(st.lists(st.tuples(*[st.integers(0, max_exp)] * n),
                         min_size=1 if nonzero else 0, max_size=max_gens))
    return MonomialIdeal(ctx, gens)


def proper(I):
    return not I.is_zero() and not I.is_unit()


# ---------------------------------------------------------------- generators


def test_minimal_generators_examples():
    ctx = VarContext(("x", "y"))
    assert minimal_generators(ctx, [(2, 0), (2, 1), (0, 1)]).gens == ((0, 1), (2, 0))
    assert minimal_generators(ctx, []).is_zero()
    J = F.ideal_J()
    assert len(J.gens) == 8
    assert set(J.gens) == {F.monomial_ideal(F.COUNTER_VARS, [g]).gens[0] for g in F.J_GENS}


def test_canonical_print_order():
    assert str(F.ideal_J()) == "z^2, y*z, x*z, z*b^2, z*a^2, y*t*b^2, x*t*b^2, x*t*a^2"
    assert str(MonomialIdeal(VarContext(("x",)), [])) == "0"


@given(monomial_ideals(nonzero=False))
def test_minimal_generators_invariants(I):
    gs = I.gens
    assert len(set(gs)) == len(gs)
    assert not any(a != b and divides(a, b) for a in gs for b in gs)


def test_contains_examples():
    I = M(["x1", "x2"], "x1^2", "x1*x2")
    assert contains_monomial(I, (1, 2))
    assert not contains_monomial(I, (0, 5))
    J = F.ideal_J()
    y2 = (0, 2, 0, 0, 0, 0, 0)
    assert not contains_monomial(J, y2)
    assert not contains_monomial(J, (0,) * 7)
    unit = MonomialIdeal(J.context, [(0,) * 7])
    assert unit.is_unit() and contains_monomial(unit, (0,) * 7)


@given(monomial_ideals(), st.data())
def test_batch_membership_matches_scalar(I, data):
    ms = data.draw(st.lists(st.tuples(*[st.integers(0, 4)] * I.nvars), max_size=20))
    got = list(contains_many(I, ms)) if ms else []
    assert got == [brute_member(I.gens, m) for m in ms]


# ---------------------------------------------------------------- Borel moves


def test_elementary_move_examples():
    assert elementary_move(1, (1, 1)) == (2, 0)
    assert elementary_move(2, (0, 0, 2)) == (0, 1, 1)
    assert elementary_move(1, (1, 0)) is None
    with pytest.raises(ValueError):
        elementary_move(2, (1, 1))
    with pytest.raises(ValueError):
        elementary_move(0, (1, 1))


def test_borel_examples():
    assert is_borel_fixed(M(["x1", "x2"], "x1")).borel_fixed
    res = is_borel_fixed(M(["x1", "x2"], "x2"))
    assert not res and res.witness.k == 1 and res.witness.moved == (1, 0)
    J = F.ideal_J()
    w = is_borel_fixed(J).witness
    assert J.context.monomial_str(w.generator) == "y*z"
    assert w.k == 2
    assert J.context.monomial_str(w.moved) == "y^2"
    assert not contains_monomial(J, w.moved)


def brute_borel(I):
    """Closure under every move on every member up to the lcm box (plus one)."""
    bound = tuple(k + 1 for k in I.lcm())
    for m in exps_below(bound):
        if not brute_member(I.gens, m):
            continue
        for k in range(1, I.nvars):
            mv = elementary_move(k, m)
            if mv is not None and not brute_member(I.gens, mv):
                return False
    return True


@settings(max_examples=150)
@given(monomial_ideals())
def test_borel_generator_check_matches_member_closure(I):
    assert is_borel_fixed(I).borel_fixed == brute_borel(I)


@st.composite
def borel_ideals(draw):
    """Borel closure of a few random monomials."""
    n = draw(st.integers(1, 4))
    seeds = draw(st.lists(st.tuples(*[st.integers(0, 2)] * n), min_size=1, max_size=3))
    todo, seen = list(seeds), set(seeds)
    while todo:
        m = todo.pop()
        for k in range(1, n):
            mv = elementary_move(k, m)
            if mv is not None and mv not in seen:
                seen.add(mv)
                todo.append(mv)
    return MonomialIdeal(VarContext(tuple(f"x{i + 1}" for i in range(n))), seen)


@settings(max_examples=100)
@given(borel_ideals())
def test_borel_structure(I):
    assert is_borel_fixed(I)
    if proper(I):
        assert all(P.is_prefix() for P in associated_primes(I).primes)


# ---------------------------------------------------------------- colon, socle, nzd


def test_colon_examples():
    I = M(["x", "y"], "x^2*y", "y^3")
    assert colon(I, (0, 1)) == M(["x", "y"], "x^2", "y^2")
    assert colon(I, (0, 0)) == I
    assert colon(I, (2, 1)).is_unit()
    assert not colon(I, (2, 0)).is_unit()


def test_socle_examples():
    I = M(["x", "y"], "x^2", "x*y", "y^2")
    assert is_socle(I, (1, 0))
    assert not is_socle(I, (2, 0))
    assert not is_socle(M(["x", "y"], "x^2"), (0, 0))


def test_nzd_examples():
    assert is_nzd(F.ideal_J(), "c")
    assert not is_nzd(M(["x"], "x^2"), 0)
    assert is_nzd(MonomialIdeal(VarContext(("x", "y")), []), "y")
    with pytest.raises(ValueError):
        is_nzd(MonomialIdeal(VarContext(("x",)), [(0,)]), 0)


@settings(max_examples=150)
@given(monomial_ideals(), st.data())
def test_colon_and_socle_consistency(I, data):
    m = data.draw(st.tuples(*[st.integers(0, 3)] * I.nvars))
    C = colon(I, m)
    # brute force: u in (I:m) iff u*m in I, checked on a box covering all generators
    bound = tuple(max(I.lcm()[i], 1) for i in range(I.nvars))
    for u in exps_below(bound):
        um = tuple(a + b for a, b in zip(u, m))
        assert contains_monomial(C, u) == brute_member(I.gens, um)
    all_vars = all(contains_monomial(C, tuple(int(i == j) for j in range(I.nvars)))
                   for i in range(I.nvars))
    assert is_socle(I, m) == (all_vars and not contains_monomial(I, m))


@settings(max_examples=150)
@given(monomial_ideals())
def test_nzd_matches_ass(I):
    assume(proper(I))
    primes = associated_primes(I).primes
    for v in range(I.nvars):
        assert is_nzd(I, v) == (not any(v in P.vars for P in primes))


# ---------------------------------------------------------------- intersection


def test_intersect_examples():
    xy = ["x", "y"]
    assert intersect(M(xy, "x"), M(xy, "y")) == M(xy, "x*y")
    I = M(xy, "x^2", "y")
    assert intersect(I, MonomialIdeal(I.context, [(0, 0)])) == I


@settings(max_examples=100)
@given(monomial_ideals(max_vars=3), st.data())
def test_intersect_brute(I, data):
    gens = data.draw(st.lists(st.tuples(*[st.integers(0, 3)] * I.nvars), min_size=1, max_size=4))
    K = MonomialIdeal(I.context, gens)
    both = intersect(I, K)
    for m in exps_below((4,) * I.nvars):
        assert contains_monomial(both, m) == (brute_member(I.gens, m) and brute_member(K.gens, m))


# ---------------------------------------------------------------- decomposition


def comp_strs(I):
    return [str(c) for c in irreducible_decomposition(I)]


def test_decomposition_examples():
    assert comp_strs(M(["x", "y"], "x^2", "x*y")) == ["<x>", "<x^2, y>"]
    assert comp_strs(M(["x", "y"], "x*y")) == ["<x>", "<y>"]
    with pytest.raises(ValueError):
        irreducible_decomposition(MonomialIdeal(VarContext(("x",)), []))
    with pytest.raises(ValueError):
        irreducible_decomposition(MonomialIdeal(VarContext(("x",)), [(0,)]))


def test_decomposition_of_J_matches_printed_components():
    J = F.ideal_J(F.J_GENS + ("y*a^2",))
    assert sorted(irreducible_decomposition(J), key=str) == sorted(F.J_components(), key=str)
    assert intersect_all([c.as_ideal() for c in F.J_components()]) == J


def test_primary_grouping_and_merge():
    I = M(["x", "y"], "x^2", "x*y")
    groups = primary_decomposition(I)
    assert [(str(P), [str(c) for c in cs]) for P, cs in groups] == [
        ("(x)", ["<x>"]), ("(x, y)", ["<x^2, y>"])]
    # two components with the same radical merge into one primary ideal
    K = M(["x", "y"], "x^2", "y^2", "x*y")
    K2 = intersect(K, M(["x", "y"], "x^3", "y"))
    merged = primary_decomposition(K2, merge=True)
    assert len(merged) == 1 and merged[0][1] == K2


def oracle_ass(I):
    """Primes P with (I : m) = P for some m dividing lcm(gens)."""
    out = set()
    n = I.nvars
    for m in exps_below(I.lcm()):
        C = colon(I, m)
        if C.is_unit() or C.is_zero():
            continue
        if all(sum(g) == 1 for g in C.gens):
            out.add(tuple(sorted(g.index(1) for g in C.gens)))
    return out


@settings(max_examples=200)
@given(monomial_ideals())
def test_decomposition_sound_irredundant_and_ass_oracle(I):
    assume(proper(I))
    comps = irreducible_decomposition(I)
    ideals = [c.as_ideal() for c in comps]
    assert intersect_all(ideals) == I
    for c in comps:
        assert all(sum(1 for k in g if k) == 1 for g in c.as_ideal().gens)
    if len(ideals) > 1:
        for i in range(len(ideals)):
            rest = intersect_all(ideals[:i] + ideals[i + 1:])
            assert rest != I and I <= rest
    ass = associated_primes(I)
    assert {P.vars for P in ass.primes} == oracle_ass(I)
    for P, flag in zip(ass.primes, ass.minimal):
        assert flag == (not any(Q < P for Q in ass.primes))


def test_irreducible_component_containment():
    ctx = VarContext(("x", "y"))
    big = IrreducibleComponent(ctx, (1, 1))
    small = IrreducibleComponent(ctx, (2, 1))
    assert big.contains(small) and not small.contains(big)
    with pytest.raises(ValueError):
        IrreducibleComponent(ctx, (0, 0))


# ---------------------------------------------------------------- Ass, dim


def test_ass_examples():
    ass = associated_primes(M(["x", "y"], "x^2", "x*y"))
    assert [str(P) for P in ass.primes] == ["(x)", "(x, y)"]
    assert ass.minimal == (True, False)
    assert [str(P) for P in associated_primes(M(["x"], "x")).primes] == ["(x)"]


def test_ass_of_J():
    J = F.ideal_J(F.J_GENS + ("y*a^2",))
    ass = associated_primes(J)
    assert set(ass.primes) == set(F.J_primes())
    assert ass.codim == 3 and ass.dim == 4
    assert [str(P) for P in ass.embedded_primes] == ["(x, y, z, a, b)"]


def test_literal_printed_J_has_extra_prime():
    ass = associated_primes(F.ideal_J())
    assert VarPrime.from_names(ass.context, "zt") in ass
    assert not is_equidimensional(F.ideal_J())


def test_codim_dim_degenerate():
    ctx = VarContext(("x", "y", "z"))
    assert codim(MonomialIdeal(ctx, [])) == 0 and dim(MonomialIdeal(ctx, [])) == 3
    assert dim(M(["x", "y", "z"], "x*y")) == 2


def test_equidimensional_examples():
    assert is_equidimensional(F.ideal_J(F.J_GENS + ("y*a^2",)))
    assert not is_equidimensional(intersect(M("xyz", "x"), M("xyz", "y", "z")))
    assert is_equidimensional(M("xyz", "x", "z"))


def test_var_prime():
    ctx = VarContext(("x", "y", "z"))
    P = VarPrime.prefix(ctx, 2)
    assert P.is_prefix() and P.codim == 2 and P.dim == 1 and str(P) == "(x, y)"
    assert not VarPrime.from_names(ctx, "yz").is_prefix()
    with pytest.raises(ValueError):
        VarPrime(ctx, [])


# ---------------------------------------------------------------- chains


def test_chain_examples():
    ctx = VarContext(("x", "y"))
    rep = saturated_chain_property(ass_report_from_primes([VarPrime(ctx, [0])]))
    assert rep.holds and rep.steps == ()
    rep = saturated_chain_property(associated_primes(M(["x", "y"], "x^2", "x*y")))
    assert rep.holds
    assert [[str(P) for P in c] for c in rep.chains] == [["(x)", "(x, y)"]]


def test_chain_fails_on_J():
    rep = saturated_chain_property(associated_primes(F.ideal_J(F.J_GENS + ("y*a^2",))))
    assert not rep.holds
    assert [P.names() for P in rep.violations] == [list(F.J_CHAIN_VIOLATION)]
    Q = rep.violations[0]
    assert not any(P < Q and P.codim == 4 for P in associated_primes(
        F.ideal_J(F.J_GENS + ("y*a^2",))).primes)


def test_chain_needs_primes():
    with pytest.raises(ValueError):
        ass_report_from_primes([])


@settings(max_examples=150)
@given(monomial_ideals())
def test_emitted_chains_step_by_one(I):
    assume(proper(I))
    ass = associated_primes(I)
    rep = saturated_chain_property(ass)
    for step in rep.steps:
        if step.chain is None:
            continue
        c = step.chain
        assert c[0] in ass.minimal_primes and c[-1] == step.prime
        for lo, hi in zip(c, c[1:]):
            assert lo < hi and lo.dim == hi.dim + 1
    # brute-force verdict
    expect = all(any(P < Q and P.codim == Q.codim - 1 for P in ass.primes)
                 for Q in ass.embedded_primes)
    assert rep.holds == expect


# ---------------------------------------------------------------- theorem checker


def test_check_theorem_square_of_prefix():
    I = M(["x1", "x2", "x3", "x4"], "x1^2", "x1*x2", "x2^2")
    rep = check_theorem(I)
    assert rep.covered and rep.status == "holds"
    assert all(rep.hypotheses.values()) and all(rep.conclusion.values())
    assert [str(P) for P in rep.ass.primes] == ["(x1, x2)"]


def test_check_theorem_on_J_not_covered():
    rep = check_theorem(F.ideal_J(F.J_GENS + ("y*a^2",)))
    assert rep.hypotheses["borel"] is False
    assert rep.chain.verdict == "fails"
    assert rep.status == "not covered"


def test_check_theorem_embedded_clause():
    # (x1^2, x1 x2) in 2 vars: maximal ideal associated, (x1) as well
    rep = check_theorem(M(["x1", "x2"], "x1^2", "x1*x2"))
    assert rep.embedded_implies_r_minus_1
    rep = check_theorem(M(["x1", "x2", "x3"], "x1", "x2^2", "x2*x3"))
    assert (VarPrime.prefix(rep.ideal.context, 3) in rep.ass) and rep.embedded_implies_r_minus_1
    rep = check_theorem(M(["x1", "x2", "x3"], "x1^2", "x1*x2", "x1*x3"))
    assert rep.embedded_implies_r_minus_1 is False
    # every checkable hypothesis holds, yet I is not the initial ideal of a prime
    assert rep.covered and rep.status == "violated"


def test_check_theorem_rejects_degenerate():
    with pytest.raises(ValueError):
        check_theorem(MonomialIdeal(VarContext(("x",)), []))
