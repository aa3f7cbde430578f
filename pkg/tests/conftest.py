from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from rankone.deriv import Derivation
from rankone.poly import Poly
from rankone.textio import parse_derivation, parse_poly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def polys(draw, n, max_degree=3, max_terms=4):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        mono = tuple(draw(st.lists(st.integers(0, max_degree), min_size=n, max_size=n)))
        if sum(mono) <= max_degree:
            terms[mono] = draw(rationals)
    return Poly(terms, n)


@st.composite
def derivations(draw, n, max_degree=3, max_terms=3):
    return Derivation([draw(polys(n, max_degree, max_terms)) for _ in range(n)])


def P(s, n=2):
    return parse_poly(s, n)


def D(s, n=2):
    return parse_derivation(s, n)


@pytest.fixture
def sl2_basis():
    return [D(s, 1) for s in ("d/dx", "x*d/dx", "x^2*d/dx")]
