from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from initideal.poly import GREVLEX, LEX, GRLEX, QQ, PolyRing, PrimeField, Polynomial

# first calls may include numba compilation
settings.register_profile("default", deadline=None)
settings.load_profile("default")

ORDERS = [LEX, GRLEX, GREVLEX]
F32003 = PrimeField(32003)


def exponents(nvars, max_exp=3):
    return st.tuples(*[st.integers(0, max_exp)] * nvars)


@st.composite
def polynomials(draw, ring, max_terms=4, max_exp=3):
    n = ring.nvars
    terms = draw(st.dictionaries(exponents(n, max_exp), st.integers(-5, 5), max_size=max_terms))
    if ring.field is QQ and draw(st.booleans()):
        terms = {e: Fraction(c, draw(st.integers(1, 4))) for e, c in terms.items()}
    return Polynomial(ring, terms)


@pytest.fixture
def ring_xyz():
    return PolyRing.from_names("xyz")


@pytest.fixture
def ring_counter():
    from initideal.fixtures import counter_ring
    return counter_ring()


# ---------------------------------------------------------------- acceptance report

ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
