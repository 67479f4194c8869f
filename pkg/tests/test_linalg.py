from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from chowm0.linalg import Echelon, rank, to_int_row

entries = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 3))
rows = st.lists(st.lists(entries, min_size=5, max_size=5), min_size=1, max_size=7)


def as_dicts(mat):
    return [{j: c for j, c in enumerate(row) if c} for row in mat]


def test_to_int_row():
    row, mult = to_int_row({0: Fraction(1, 2), 1: Fraction(2, 3)})
    assert mult == 6 and row == {0: 3, 1: 4}


def test_rank_small():
    assert rank([{0: 1}, {0: 2}, {1: 1}]) == 2
    assert rank([]) == 0
    assert rank([{}]) == 0


@settings(max_examples=300, deadline=None)
@given(rows)
def test_rank_matches_sympy(mat):
    assert rank(as_dicts(mat)) == sympy.Matrix(mat).rank()


@settings(max_examples=300, deadline=None)
@given(rows, st.lists(entries, min_size=7, max_size=7))
def test_express_reconstructs_target(mat, coeffs):
    vecs = as_dicts(mat)
    target = {}
    for c, v in zip(coeffs, vecs):
        for k, x in v.items():
            target[k] = target.get(k, 0) + c * x
    ech = Echelon(track=True)
    for i, v in enumerate(vecs):
        ech.add(v, label=i)
    combo = ech.express(target)
    assert combo is not None
    rebuilt = {}
    for i, c in combo.items():
        for k, x in vecs[i].items():
            rebuilt[k] = rebuilt.get(k, 0) + c * x
    assert {k: v for k, v in rebuilt.items() if v} == {k: v for k, v in target.items() if v}


def test_express_outside_span():
    ech = Echelon(track=True)
    ech.add({0: 1, 1: 1}, label="a")
    assert ech.express({0: 1}) is None
    assert ech.express({0: 3, 1: 3}) == {"a": 3}
    assert ech.contains({0: -2, 1: -2})
