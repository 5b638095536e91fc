"""Shared hypothesis strategies."""

from fractions import Fraction

from hypothesis import settings, strategies as st

from artifact.core import HomPolynomial, OnePS, monomials

settings.register_profile("default", deadline=None, derandomize=True)
settings.load_profile("default")

small_int = st.integers(min_value=-6, max_value=6)
rational = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 7))


@st.composite
def one_ps(draw, integral: bool = False):
    elem = small_int if integral else rational
    r = [draw(elem) for _ in range(3)]
    return OnePS(r + [-sum(r)])


@st.composite
def monomial(draw, degree=None):
    d = draw(st.integers(0, 5)) if degree is None else degree
    return draw(st.sampled_from(monomials(d)))


@st.composite
def hom_poly(draw, degree: int, max_terms: int = 6):
    mons = draw(st.lists(st.sampled_from(monomials(degree)), min_size=1, max_size=max_terms,
                         unique=True))
    coeffs = draw(st.lists(st.integers(-3, 3).filter(bool), min_size=len(mons),
                           max_size=len(mons)))
    return HomPolynomial(dict(zip(mons, coeffs)), degree)
