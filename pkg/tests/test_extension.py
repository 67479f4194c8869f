import pytest
from hypothesis import given, settings, strategies as st

from chowm0.chowring import eta, generator, rho, sigma_hat
from chowm0.classes import mumford_k, normal_top_chern
from chowm0.deformations import ordered_deformations
from chowm0.extension import ClassTuple, NotInvariant, extend_class, restrict_pushforward, substitution_map
from chowm0.strata import StratumRing, stratum
from chowm0.trees import NAMED_TREES as T, STRATUM_NAMES, ZERODIV_TREE, automorphism_group
from strategies import coeffs


def _maps(a, b):
    return {d.vertex_map: {k: str(v) for k, v in substitution_map(d).items()}
            for d in ordered_deformations(T[a], T[b])}


def test_chain3_to_chain4_substitutions():
    m = _maps("chain3", "chain4")
    assert m[(0, 0, 1, 2)] == {"t1": "v3", "t2": "v2", "r": "-v4"}
    assert m[(0, 1, 1, 2)] == {"t1": "v1", "t2": "v2", "r": "1/2*v3 - 1/2*v4"}
    assert m[(0, 1, 2, 2)] == {"t1": "v1", "t2": "v4", "r": "v3"}


def test_chain3_to_star3_kills_r():
    for images in _maps("chain3", "star3").values():
        assert images["r"] == "0"
        assert {images["t1"], images["t2"]} < {"w1", "w2", "w3"}


def test_point_target_rejected():
    (d,) = ordered_deformations(T["pt"], T["pt"])
    with pytest.raises(ValueError):
        substitution_map(d)


def test_gamma2_tuple():
    g = extend_class(1, "chain3")
    assert g.degree == 2
    assert g["pt"].is_zero() and g["chain2"].is_zero()
    assert g["chain3"] == normal_top_chern("chain3")
    assert g["star3"] == stratum("star3").parse("w1*w2 + w1*w3 + w2*w3")
    assert g["chain4"] == stratum("chain4").parse(
        "v1*v2 + v1*v3 + v2*v4 - v3^2 - v3*v4 - v4^2")


def test_point_classes_of_deepest_strata():
    g = extend_class(1, "star3")
    assert g["star3"] == stratum("star3").parse("w1*w2*w3")
    assert all(g[k].is_zero() for k in ("pt", "chain2", "chain3", "chain4"))
    h = extend_class(1, "chain4")
    assert h["chain4"] == normal_top_chern("chain4")
    assert h["star3"].is_zero()


def test_gamma3_product_vanishes():
    assert (extend_class(1, "star3") * extend_class(1, "chain4")).is_zero()


def test_q_fixtures():
    q = extend_class(eta(), "chain3")
    s = stratum("star3")
    k1 = s.parse("-w1 - w2 - w3")
    g2 = s.parse("w1*w2 + w1*w3 + w2*w3")
    g3 = s.parse("w1*w2*w3")
    assert q["star3"] == -g2 * (k1 ** 2 - g2.scale(4)) + g3.scale(3) * k1
    c4 = stratum("chain4")
    k1 = mumford_k(c4, 1)
    r, sh = rho(), sigma_hat()
    c = normal_top_chern(c4)
    assert q["chain4"] == (r.scale(3) + k1) * c + (r ** 2 - generator("gamma2").value["chain4"]) * sh


def test_sigma_hat_factors():
    c4 = stratum("chain4")
    assert sigma_hat() == c4.parse("(v1 - v2)*(v1 - v2 + v4 - v3)")


def test_self_restriction_multiplies_by_top_chern():
    for k in ("chain2", "chain3", "chain4", "star3"):
        S = stratum(k)
        for x in S.invariant_basis(2):
            assert restrict_pushforward(x, k, k) == x * normal_top_chern(S)


def test_non_invariant_input_rejected():
    with pytest.raises(NotInvariant):
        extend_class(stratum("chain3").parse("r"), "chain3")
    with pytest.raises(NotInvariant):
        restrict_pushforward(stratum("chain4").parse("v1"), "chain4", "chain4")


def test_unreachable_restriction_is_zero():
    x = stratum("star3").parse("w1 + w2 + w3")
    assert restrict_pushforward(x, "star3", "chain4").is_zero()
    assert restrict_pushforward(stratum("chain3").one(), "chain3", "chain2").is_zero()


def test_class_tuple_algebra():
    one = ClassTuple.one()
    g2 = extend_class(1, "chain3")
    assert one * g2 == g2
    assert (g2 - g2).is_zero()
    assert g2 ** 2 == g2 * g2
    assert (g2 ** 0) == one
    with pytest.raises(ValueError):
        _ = g2 + extend_class(1, "star3")
    assert g2.restricted(("pt", "chain2")).is_zero(("pt", "chain2"))


def test_outputs_invariant_over_all_pairs():
    for a in STRATUM_NAMES[1:]:
        S = stratum(a)
        for d in range(0, 4):
            for x in S.invariant_basis(d):
                for b in STRATUM_NAMES[1:]:
                    y = restrict_pushforward(x, a, b)
                    assert stratum(b).is_invariant(y)


# the extension does not depend on which edge is called infinity
FLIP_CASES = [("chain3", 1), ("chain4", 1), ("chain4", 2)]


@settings(max_examples=1000, deadline=None)
@given(st.sampled_from(FLIP_CASES), st.sampled_from(STRATUM_NAMES[1:]),
       st.integers(0, 3), st.data())
def test_extension_independent_of_orientation(case, target, d, data):
    name, v = case
    S = stratum(name)
    F = S.flipped(v)
    basis = S.invariant_basis(d)
    cs = data.draw(st.lists(coeffs, min_size=len(basis), max_size=len(basis)))
    x = S.zero()
    for c, b in zip(cs, basis):
        x = x + b.scale(c)
    xf = x.substitute(S.flip_map(v)).extend(F.variables, F.degrees)
    assert restrict_pushforward(xf, F, target) == restrict_pushforward(x, S, target)


@settings(max_examples=1000, deadline=None)
@given(st.sampled_from(STRATUM_NAMES[1:]), st.sampled_from(STRATUM_NAMES[1:]),
       st.integers(0, 3), st.data())
def test_pushforward_is_linear(a, b, d, data):
    S = stratum(a)
    basis = S.invariant_basis(d)
    c1 = data.draw(st.lists(coeffs, min_size=len(basis), max_size=len(basis)))
    c2 = data.draw(st.lists(coeffs, min_size=len(basis), max_size=len(basis)))
    x = sum((p.scale(c) for c, p in zip(c1, basis)), S.zero())
    y = sum((p.scale(c) for c, p in zip(c2, basis)), S.zero())
    lhs = restrict_pushforward(x + y, a, b)
    assert lhs == restrict_pushforward(x, a, b) + restrict_pushforward(y, a, b)


def test_zerodiv_ring_extension_runs():
    Z = StratumRing(ZERODIV_TREE)
    assert len(automorphism_group(Z.tree)) == 8
    assert restrict_pushforward(Z.one(), Z, Z).is_zero()
