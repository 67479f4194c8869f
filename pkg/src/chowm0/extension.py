"""Extending a class from one stratum to the whole <=3-node locus.

A class supported on the closure of stratum G is recorded by its
restrictions to all five strata.  On G itself the restriction is x times
the normal top Chern class; on a deeper stratum G' it is the average over
Aut(G) of the ordered-deformation sum below.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .classes import psi
from .deformations import OrderedDeformation, edge_correspondence, ordered_deformations
from .polycore import Polynomial
from .strata import NotInvariant, StratumRing, ring_of, stratum
from .trees import STRATUM_NAMES

__all__ = [
    "ClassTuple",
    "substitution_map",
    "restrict_pushforward",
    "extend_class",
    "NotInvariant",
]


def substitution_map(d: OrderedDeformation, target: StratumRing | None = None,
                     source: StratumRing | None = None) -> dict:
    """Pullback of the target stratum variables along the deformation d."""
    target = target or ring_of(d.target)
    source = source or ring_of(d.source)
    corr = edge_correspondence(d)
    t = target.tree
    out = {}
    if target.is_point:
        raise ValueError("the smooth stratum has no psi variables to pull back")
    for a, name in target.names.items():
        m = t.multiplicity(a)
        if m == 1:
            (b,) = t.neighbors(a)
            p, q = corr.oriented(a, b)
            out[name] = psi(source, (p, q), p)
        elif m == 2:
            inf_b = [x for x in t.infinity_edge(a) if x != a][0]
            zero_b = [x for x in t.zero_edge(a) if x != a][0]
            p_inf, q_inf = corr.oriented(a, inf_b)
            p_zero, q_zero = corr.oriented(a, zero_b)
            diff = psi(source, (p_inf, q_inf), p_inf) - psi(source, (p_zero, q_zero), p_zero)
            out[name] = diff.scale(Fraction(1, 2))
    return out


def _surviving_factor(d: OrderedDeformation, source: StratumRing) -> Polynomial:
    out = source.one()
    for p, q in edge_correspondence(d).surviving.values():
        out = out * (psi(source, (p, q), p) + psi(source, (p, q), q))
    return out


@lru_cache(maxsize=None)
def _pair_data(target_key, source_key):
    target, source = _ring(target_key), _ring(source_key)
    data = []
    for d in ordered_deformations(target.tree, source.tree):
        data.append((substitution_map(d, target, source), _surviving_factor(d, source)))
    return data


def _ring(key):
    return key if isinstance(key, StratumRing) else stratum(key)


def _key(S):
    if isinstance(S, str):
        return S
    if isinstance(S, StratumRing) and S.label:
        return S.label
    return S


def restrict_pushforward(x, G, Gp, check: bool = True) -> Polynomial:
    """Restriction to G' of the pushforward of x from the closure of G."""
    target, source = ring_of(G), ring_of(Gp)
    x = target.element(x)
    if check:
        target.check_invariant(x)
    if target.is_point:
        raise ValueError("classes on the smooth stratum extend through Chern classes, not deformations")
    total = source.zero()
    for mapping, factor in _pair_data(_key(target), _key(source)):
        total = total + x.substitute(mapping).extend(source.variables, source.degrees) * factor
    return total.scale(Fraction(1, target.order))


class ClassTuple:
    """A class on the <=3-node locus, stored as its five stratum restrictions."""

    __slots__ = ("degree", "entries")

    def __init__(self, degree: int, entries: Mapping[str, Polynomial]):
        self.degree = degree
        ent = {}
        for k in STRATUM_NAMES:
            S = stratum(k)
            p = entries.get(k)
            ent[k] = S.zero() if p is None else S.element(p)
        self.entries = ent

    @classmethod
    def zero(cls, degree: int = 0) -> "ClassTuple":
        return cls(degree, {})

    @classmethod
    def one(cls) -> "ClassTuple":
        return cls(0, {k: stratum(k).one() for k in STRATUM_NAMES})

    def __getitem__(self, k):
        return self.entries[k]

    def is_zero(self, strata=STRATUM_NAMES) -> bool:
        return all(self.entries[k].is_zero() for k in strata)

    def is_homogeneous(self) -> bool:
        return all(p.is_homogeneous(self.degree) for p in self.entries.values())

    def _combine(self, other, op):
        if isinstance(other, ClassTuple):
            if other.degree != self.degree and not (self.is_zero() or other.is_zero()):
                raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
            deg = other.degree if self.is_zero() else self.degree
            return ClassTuple(deg, {k: op(self.entries[k], other.entries[k]) for k in STRATUM_NAMES})
        return NotImplemented

    def __add__(self, other):
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._combine(other, lambda a, b: a - b)

    def __neg__(self):
        return ClassTuple(self.degree, {k: -p for k, p in self.entries.items()})

    def scale(self, c) -> "ClassTuple":
        return ClassTuple(self.degree, {k: p.scale(c) for k, p in self.entries.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, ClassTuple):
            return NotImplemented
        return ClassTuple(self.degree + other.degree,
                          {k: self.entries[k] * other.entries[k] for k in STRATUM_NAMES})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = ClassTuple.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, ClassTuple):
            return NotImplemented
        return all(self.entries[k] == other.entries[k] for k in STRATUM_NAMES)

    def restricted(self, strata) -> "ClassTuple":
        return ClassTuple(self.degree, {k: self.entries[k] for k in strata})

    def vector(self, strata=STRATUM_NAMES) -> dict:
        out = {}
        for k in strata:
            for exps, c in self.entries[k].items():
                out[(k, exps)] = c
        return out

    def __repr__(self):
        body = ", ".join(f"{k}: {self.entries[k]}" for k in STRATUM_NAMES)
        return f"ClassTuple(deg={self.degree}; {body})"


def extend_class(x, G) -> ClassTuple:
    """Extension by zero of x times the class of the closure of stratum G."""
    S = ring_of(G)
    if S.label is None:
        raise ValueError("extend_class works on the five named strata")
    if S.is_point:
        raise ValueError("the smooth stratum is open; extend powers of a2 through Chern classes")
    x = S.check_invariant(S.element(x))
    if not x.is_homogeneous():
        raise ValueError(f"{x} is not homogeneous")
    deg = max(x.degree(), 0) + S.tree.n_edges
    entries = {}
    for k in STRATUM_NAMES:
        T = stratum(k)
        if T.tree.n_edges < S.tree.n_edges:
            continue
        entries[k] = restrict_pushforward(x, S, T, check=False)
    return ClassTuple(deg, entries)
