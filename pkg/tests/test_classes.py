import pytest
import sympy

from chowm0.classes import (K0, UnsupportedStratum, chern_classes, chern_roots, mumford_k,
                            normal_top_chern, psi, verify_newton_link)
from chowm0.strata import StratumRing, stratum
from chowm0.trees import STRATUM_NAMES, ZERODIV_TREE, parse_tree


def test_psi_examples():
    c3 = stratum("chain3")
    assert psi(c3, (0, 1), 1) == -c3.gen("r")
    assert psi(c3, (1, 2), 1) == c3.gen("r")
    s = stratum("star3")
    for leaf in range(3):
        assert psi(s, (leaf, 3), 3).is_zero()
    c2 = stratum("chain2")
    assert psi(c2, (0, 1), 0) == c2.gen("t1")
    with pytest.raises(ValueError):
        psi(c3, (0, 2), 0)


def test_psi_cancels_at_two_valent_vertices():
    for k in ("chain3", "chain4"):
        S = stratum(k)
        for v in S.tree.vertices:
            if S.tree.multiplicity(v) == 2:
                a, b = S.tree.incident_edges(v)
                assert (psi(S, a, v) + psi(S, b, v)).is_zero()


def test_strata_class_table():
    P = lambda k, s: stratum(k).parse(s)
    assert normal_top_chern("chain2") == P("chain2", "t1 + t2")
    assert normal_top_chern("chain3") == P("chain3", "(t1 - r)*(t2 + r)")
    assert normal_top_chern("chain4") == P("chain4", "(v1 - v3)*(v3 + v4)*(v2 - v4)")
    assert normal_top_chern("star3") == P("star3", "w1*w2*w3")
    assert normal_top_chern("pt") == stratum("pt").one()


def test_chain4_row_up_to_renaming():
    # (t1 - r1)(r1 + r2)(t2 - r2) with t1=v1, r1=v3, r2=v4, t2=v2
    c4 = stratum("chain4")
    sym = sympy.symbols("t1 r1 r2 t2")
    ours = sympy.sympify(str(normal_top_chern(c4)).replace("^", "**"),
                         locals=dict(zip(["v1", "v3", "v4", "v2"], sym)))
    t1, r1, r2, t2 = sym
    assert sympy.expand(ours - (t1 - r1) * (r1 + r2) * (t2 - r2)) == 0


def test_zerodiv_tree_vanishes():
    S = StratumRing(ZERODIV_TREE)
    assert normal_top_chern(S).is_zero()
    assert S.is_invariant(normal_top_chern(S))


def test_normal_top_chern_invariant():
    for k in STRATUM_NAMES:
        S = stratum(k)
        assert S.is_invariant(normal_top_chern(S))


def test_normal_top_chern_under_flip():
    for k, v in [("chain3", 1), ("chain4", 1), ("chain4", 2)]:
        S = stratum(k)
        F = S.flipped(v)
        mapped = normal_top_chern(S).substitute(S.flip_map(v))
        assert mapped == normal_top_chern(F)


def test_mumford_examples():
    pt = stratum("pt")
    assert mumford_k(pt, 2) == pt.gen("a2").scale(2)
    assert mumford_k(pt, 1).is_zero() and mumford_k(pt, 3).is_zero()
    s = stratum("star3")
    assert mumford_k(s, 2) == s.parse("-w1^2 - w2^2 - w3^2")
    assert mumford_k("chain4", 1) == stratum("chain4").parse("-v1 - v2")
    assert K0 == -2
    with pytest.raises(ValueError):
        mumford_k("chain2", 0)


def test_chern_roots():
    c2 = stratum("chain2")
    assert chern_roots(c2) == [c2.zero(), c2.gen("t1"), c2.gen("t2")]
    s = stratum("star3")
    assert chern_roots(s) == [s.gen("w1"), s.gen("w2"), s.gen("w3")]
    for k in STRATUM_NAMES[1:]:
        assert len(chern_roots(k)) == 3
    with pytest.raises(UnsupportedStratum):
        chern_roots(ZERODIV_TREE)
    with pytest.raises(UnsupportedStratum):
        chern_roots("pt")
    assert chern_classes("pt")[1] == stratum("pt").gen("a2")


@pytest.mark.parametrize("name", STRATUM_NAMES)
def test_newton_link(name):
    assert verify_newton_link(name).passed


def test_power_sums_against_roots():
    for k in STRATUM_NAMES[1:]:
        roots = chern_roots(k)
        for m in (1, 2, 3, 4):
            total = roots[0] ** m + roots[1] ** m + roots[2] ** m
            assert mumford_k(k, m) == -total


def test_symbolic_newton_identities():
    x = sympy.symbols("x1:4")
    e1 = sum(x)
    e2 = x[0] * x[1] + x[0] * x[2] + x[1] * x[2]
    e3 = x[0] * x[1] * x[2]
    p = [sum(xi ** m for xi in x) for m in range(4)]
    assert sympy.expand(-p[1] + e1) == 0
    assert sympy.expand(-p[2] - (2 * e2 - e1 ** 2)) == 0
    assert sympy.expand(-p[3] - (-e1 ** 3 + 3 * e1 * e2 - 3 * e3)) == 0


def test_generic_tree_ring():
    S = StratumRing(parse_tree("edges=0-1,1-2,2-3,3-4"))
    assert S.variables == ("r1", "r2", "r3", "t0", "t4")
    assert S.is_invariant(normal_top_chern(S))
