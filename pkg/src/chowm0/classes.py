"""psi-classes, normal top Chern classes, Mumford and Chern classes per stratum."""

from __future__ import annotations

from .polycore import Polynomial
from .report import Report
from .strata import StratumRing, ring_of
from .trees import canonical_encode, NAMED_TREES, STRATUM_NAMES, _edge

__all__ = [
    "psi",
    "normal_top_chern",
    "mumford_k",
    "chern_roots",
    "chern_classes",
    "verify_newton_link",
    "UnsupportedStratum",
    "K0",
]

# degree-0 Mumford class on the smooth stratum; not used as a class anywhere
K0 = -2


class UnsupportedStratum(ValueError):
    pass


def psi(S, e, v: int) -> Polynomial:
    """psi at the branch of node ``e`` lying on component ``v``."""
    S = ring_of(S)
    t = S.tree
    e = _edge(*e)
    if v not in e or e not in t.edges:
        raise ValueError(f"{v} is not an endpoint of an edge {e}")
    m = t.multiplicity(v)
    if m == 1:
        return S.vertex_variable(v)
    if m == 2:
        x = S.vertex_variable(v)
        return x if t.infinity_edge(v) == e else -x
    return S.zero()


def normal_top_chern(S) -> Polynomial:
    S = ring_of(S)
    out = S.one()
    for u, v in S.tree.edges:
        out = out * (psi(S, (u, v), u) + psi(S, (u, v), v))
    return out


def _leaf_variables(S: StratumRing):
    return [S.vertex_variable(v) for v in S.tree.vertices if S.tree.multiplicity(v) == 1]


def mumford_k(S, m: int) -> Polynomial:
    """Stratum restriction of k_m: minus the m-th power sum of leaf variables."""
    if m < 1:
        raise ValueError("m must be positive (k0 is the constant K0)")
    S = ring_of(S)
    if S.is_point:
        return S.gen("a2").scale(2) if m == 2 else S.zero()
    out = S.zero()
    for x in _leaf_variables(S):
        out = out - x ** m
    return out


def _check_supported(S: StratumRing):
    code = canonical_encode(S.tree)
    if code not in {canonical_encode(NAMED_TREES[k]) for k in STRATUM_NAMES}:
        raise UnsupportedStratum(f"no Chern data for {S.tree.to_text()}")


def chern_roots(S) -> list:
    """Three roots of the rank-3 dualizing pushforward, zeros included."""
    S = ring_of(S)
    _check_supported(S)
    if S.is_point:
        raise UnsupportedStratum("the smooth stratum stores c1, c2, c3 directly")
    roots = _leaf_variables(S)
    while len(roots) < 3:
        roots.insert(0, S.zero())
    return roots


def chern_classes(S) -> tuple:
    S = ring_of(S)
    if S.is_point:
        return S.zero(), S.gen("a2"), S.zero()
    x, y, z = chern_roots(S)
    return x + y + z, x * y + x * z + y * z, x * y * z


def verify_newton_link(S, strict: bool = True) -> Report:
    S = ring_of(S)
    c1, c2, c3 = chern_classes(S)
    k1, k2, k3 = (mumford_k(S, m) for m in (1, 2, 3))
    rep = Report(f"Newton link on {S.label or S.tree.to_text()}")
    rep.check(k1 == -c1, identity="k1=-c1")
    rep.check(k2 == c2.scale(2) - c1 ** 2, identity="k2=2c2-c1^2")
    rep.check(k3 == -c1 ** 3 + (c1 * c2).scale(3) - c3.scale(3), identity="k3=-c1^3+3c1c2-3c3")
    if strict:
        rep.raise_if_failed()
    return rep
