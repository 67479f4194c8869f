"""Hypothesis strategies shared by the property tests."""

from fractions import Fraction

from hypothesis import strategies as st

from chowm0.polycore import Polynomial

VARS = ("t1", "t2", "r")

coeffs = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


def polys(variables=VARS, max_exp=3, max_terms=5):
    n = len(variables)
    exps = st.tuples(*[st.integers(0, max_exp)] * n)
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(
        lambda d: Polynomial(d, variables))


def nonzero_polys(variables=VARS, max_exp=3, max_terms=4):
    return polys(variables, max_exp, max_terms).filter(lambda p: not p.is_zero())
