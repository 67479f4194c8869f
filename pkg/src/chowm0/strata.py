"""Stratum rings: invariant polynomials under the signed Aut(G)-action.

Each stratum carries one degree-1 variable per leaf (``t``) and one per
2-valent component (``r``).  An automorphism permutes them, and flips the
sign of ``r_v`` exactly when it does not carry v's infinity edge onto the
infinity edge of its image.  The smooth stratum is special: its ring is
Q[a2] with a2 in degree 2 and no group in sight.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .graded import quotient_dimension, weighted_monomials
from .linalg import Echelon
from .polycore import Polynomial, parse, var
from .report import Report
from .trees import (NAMED_TREES, STRATUM_NAMES, Tree, automorphism_group,
                    edge_image, named_tree)

__all__ = [
    "StratumRing",
    "stratum",
    "ring_of",
    "NotInvariant",
    "act",
    "reynolds",
    "invariant_basis",
    "molien_dimension",
    "molien_series",
    "verify_generators_and_relation",
    "stratum_generators",
]

# vertex -> variable name for the five named strata
NAMED_VARIABLES = {
    "pt": {0: "a2"},
    "chain2": {0: "t1", 1: "t2"},
    "chain3": {0: "t1", 2: "t2", 1: "r"},
    "star3": {0: "w1", 1: "w2", 2: "w3"},
    "chain4": {0: "v1", 3: "v2", 1: "v3", 2: "v4"},
}


class NotInvariant(ValueError):
    pass


def _generic_names(t: Tree) -> dict:
    names = {}
    for v in t.vertices:
        m = t.multiplicity(v)
        if m == 1:
            names[v] = f"t{v}"
        elif m == 2:
            names[v] = f"r{v}"
    return names


class StratumRing:
    """The polynomial ring of a stratum together with its signed group action.

    Build one from a coordinatized tree; uncoordinatized trees get the
    default coordinatization.  ``names`` overrides the variable naming.
    """

    def __init__(self, tree: Tree, names: dict | None = None, label: str | None = None):
        if label is None:
            label = next((k for k in STRATUM_NAMES if NAMED_TREES[k] == tree), None)
        self.label = label
        self.tree = tree.coordinatized()
        self.is_point = self.tree.n_vertices == 1
        if names is None:
            names = NAMED_VARIABLES[label] if label else _generic_names(self.tree)
        if self.is_point:
            names = {0: names.get(0, "a2")}
            order = [0]
        else:
            order = sorted(names, key=lambda v: names[v])
            for v in self.tree.vertices:
                m = self.tree.multiplicity(v)
                if m in (1, 2) and v not in names:
                    raise ValueError(f"no variable name for vertex {v}")
        self.names = dict(names)
        self.vertex_of = {n: v for v, n in self.names.items()}
        self.variables = tuple(self.names[v] for v in order)
        self.degrees = (2,) if self.is_point else (1,) * len(self.variables)

    def __repr__(self):
        return f"StratumRing({self.label or self.tree.to_text()}, variables={self.variables})"

    # -- elements -----------------------------------------------------
    def zero(self) -> Polynomial:
        return Polynomial.zero(self.variables, self.degrees)

    def one(self) -> Polynomial:
        return Polynomial.constant(1, self.variables, self.degrees)

    def gen(self, name: str) -> Polynomial:
        return var(name, self.variables, degrees=self.degrees)

    def vertex_variable(self, v: int) -> Polynomial:
        return self.gen(self.names[v])

    def element(self, p) -> Polynomial:
        if isinstance(p, str):
            return parse(p, self.variables, self.degrees)
        if isinstance(p, (int, Fraction)):
            return Polynomial.constant(p, self.variables, self.degrees)
        return p.extend(self.variables, self.degrees)

    def parse(self, text: str) -> Polynomial:
        return parse(text, self.variables, self.degrees)

    # -- group --------------------------------------------------------
    @cached_property
    def automorphisms(self) -> list:
        return automorphism_group(self.tree)

    @property
    def order(self) -> int:
        return len(self.automorphisms)

    def signed_permutation(self, g) -> dict:
        """variable -> (sign, image variable) for the automorphism g."""
        t = self.tree
        out = {}
        for v, name in self.names.items():
            image = self.names[g[v]] if not self.is_point else name
            sign = 1
            if not self.is_point and t.multiplicity(v) == 2:
                sign = 1 if edge_image(g, t.infinity_edge(v)) == t.infinity_edge(g[v]) else -1
            out[name] = (sign, image)
        return out

    @cached_property
    def signed_group(self) -> list:
        return [self.signed_permutation(g) for g in self.automorphisms]

    def act(self, g, p: Polynomial) -> Polynomial:
        sp = g if isinstance(g, dict) else self.signed_permutation(g)
        p = self.element(p)
        index = {n: i for i, n in enumerate(self.variables)}
        perm = [index[sp[n][1]] for n in self.variables]
        signs = [sp[n][0] for n in self.variables]
        out = {}
        for exps, c in p.items():
            new = [0] * len(exps)
            s = 1
            for i, e in enumerate(exps):
                if e:
                    new[perm[i]] = e
                    if signs[i] < 0 and e % 2:
                        s = -s
            out[tuple(new)] = c * s if s > 0 else -c
        return Polynomial._raw(out, self.variables, self.degrees)

    def reynolds(self, p: Polynomial) -> Polynomial:
        p = self.element(p)
        acc = {}
        for sp in self.signed_group:
            for exps, c in self.act(sp, p).items():
                acc[exps] = acc.get(exps, 0) + c
        n = len(self.signed_group)
        return Polynomial({e: Fraction(c) / n for e, c in acc.items()}, self.variables, self.degrees)

    def is_invariant(self, p: Polynomial) -> bool:
        p = self.element(p)
        return all(self.act(sp, p) == p for sp in self.signed_group)

    def check_invariant(self, p: Polynomial) -> Polynomial:
        p = self.element(p)
        if not self.is_invariant(p):
            raise NotInvariant(f"{p} is not invariant on {self!r}")
        return p

    # -- graded pieces ------------------------------------------------
    def monomials(self, d: int) -> list:
        return [Polynomial({e: 1}, self.variables, self.degrees)
                for e in weighted_monomials(self.degrees, d)]

    def invariant_basis(self, d: int) -> list:
        """Reynolds images of degree-d monomials, pruned to an independent set."""
        ech = Echelon()
        basis = []
        for m in self.monomials(d):
            img = self.reynolds(m)
            if img and ech.add(dict(img.items())):
                basis.append(img)
        return basis

    def molien_series(self, D: int) -> list:
        """Coefficients 0..D of (1/|G|) sum_g 1/det(1 - x M_g)."""
        total = [Fraction(0)] * (D + 1)
        weight = dict(zip(self.variables, self.degrees))
        for sp in self.signed_group:
            series = [Fraction(0)] * (D + 1)
            series[0] = Fraction(1)
            seen = set()
            for start in self.variables:
                if start in seen:
                    continue
                length, sign, cur = 0, 1, start
                while cur not in seen:
                    seen.add(cur)
                    s, cur = sp[cur]
                    sign *= s
                    length += 1
                step = length * weight[start]
                # multiply by 1/(1 - sign x^step)
                for k in range(step, D + 1):
                    series[k] += sign * series[k - step]
            for k in range(D + 1):
                total[k] += series[k]
        n = len(self.signed_group)
        out = []
        for c in total:
            c = c / n
            assert c.denominator == 1
            out.append(int(c))
        return out

    def molien_dimension(self, d: int) -> int:
        return self.molien_series(d)[d]

    # -- conventions --------------------------------------------------
    def flipped(self, v: int) -> "StratumRing":
        """Same tree with v's 0/infinity labels exchanged, same variable names."""
        return StratumRing(self.tree.flipped(v), self.names, label=None)

    def flip_map(self, v: int) -> dict:
        """The ring isomorphism r_v -> -r_v as a substitution."""
        name = self.names[v]
        return {name: -self.gen(name)}


_CACHE: dict = {}


def stratum(name: str) -> StratumRing:
    if name not in _CACHE:
        _CACHE[name] = StratumRing(named_tree(name), label=name)
    return _CACHE[name]


def ring_of(x) -> StratumRing:
    if isinstance(x, StratumRing):
        return x
    if isinstance(x, str):
        if x in NAMED_TREES:
            return stratum(x)
        from .trees import parse_tree
        return StratumRing(parse_tree(x))
    if isinstance(x, Tree):
        for k in STRATUM_NAMES:
            if NAMED_TREES[k] == x:
                return stratum(k)
        return StratumRing(x)
    raise TypeError(f"cannot make a stratum ring from {x!r}")


def act(S, g, p):
    return ring_of(S).act(g, p)


def reynolds(S, p):
    return ring_of(S).reynolds(p)


def invariant_basis(S, d: int):
    return ring_of(S).invariant_basis(d)


def molien_dimension(S, d: int) -> int:
    return ring_of(S).molien_dimension(d)


def molien_series(S, D: int) -> list:
    return ring_of(S).molien_series(D)


# -- generator / relation verification ----------------------------------

def _evaluate_monomials(gens: Sequence[Polynomial], degrees, d: int, cache: dict):
    """Values of all degree-d monomials in the gens, memoised in ``cache``."""
    out = []
    for e in weighted_monomials(tuple(degrees), d):
        out.append(_monomial_value(gens, e, cache))
    return out


def _monomial_value(gens, e, cache):
    if e in cache:
        return cache[e]
    i = next((k for k, x in enumerate(e) if x), None)
    if i is None:
        val = gens[0] * 0 + 1
    else:
        lower = e[:i] + (e[i] - 1,) + e[i + 1:]
        val = _monomial_value(gens, lower, cache) * gens[i]
    cache[e] = val
    return val


def verify_generators_and_relation(S, gens: Sequence[Polynomial], rels: Sequence[Polynomial],
                                   D: int, names: Sequence[str] | None = None,
                                   strict: bool = True) -> Report:
    """Check that ``gens`` generate the invariant ring of S with ideal ``rels`` up to degree D.

    ``rels`` are polynomials in the generator names (default ``u1, u2, ...``)
    graded by the generator degrees.
    """
    S = ring_of(S)
    gens = [S.element(g) for g in gens]
    names = tuple(names or [f"u{i + 1}" for i in range(len(gens))])
    degrees = []
    for g in gens:
        if not g.is_homogeneous() or g.is_zero():
            raise ValueError(f"generator {g} is not homogeneous and nonzero")
        degrees.append(g.degree())
    degrees = tuple(degrees)
    rels = [r.extend(names, degrees) for r in rels]
    report = Report(f"stratum {S.label or S.tree.to_text()}: {len(gens)} generators, {len(rels)} relations, D={D}")
    for g, n in zip(gens, names):
        report.check(S.is_invariant(g), check="invariant", generator=n)
    substitution = dict(zip(names, gens))
    for k, r in enumerate(rels):
        val = r.substitute(substitution) if r else r
        report.check(val.is_zero(), check="a", relation=k + 1, witness=val)
    molien = S.molien_series(D)
    cache: dict = {}
    for d in range(D + 1):
        values = _evaluate_monomials(gens, degrees, d, cache)
        ech = Echelon()
        for v in values:
            ech.add(dict(S.element(v).items()))
        report.check(ech.rank == molien[d], f"rank={ech.rank} molien={molien[d]}", check="b", d=d)
        qd = quotient_dimension(rels, names, degrees, d)
        report.check(qd == molien[d], f"quotient={qd} molien={molien[d]}", check="c", d=d)
    if strict:
        report.raise_if_failed()
    return report


def stratum_generators(name: str):
    """The generator lists and relations used for the singular strata."""
    S = stratum(name)
    P = S.parse
    if name == "chain2":
        gens = [P("t1 + t2"), P("t1^2 + t2^2")]
        rels = []
    elif name == "chain3":
        gens = [P("t1 + t2"), P("t1^2 + t2^2"), P("r*t1 - r*t2"), P("r^2")]
        rels = [parse("u3^2 - 2*u2*u4 + u1^2*u4", ("u1", "u2", "u3", "u4"), (1, 2, 2, 2))]
    elif name == "chain4":
        gens = [P("v1 + v2"), P("v3 + v4"), P("v1^2 + v2^2"), P("v3^2 + v4^2"), P("v1*v4 + v2*v3")]
        rels = [parse("2*u3*u4 + 2*u1*u2*u5 - u2^2*u3 - u1^2*u4 - 2*u5^2",
                      ("u1", "u2", "u3", "u4", "u5"), (1, 1, 2, 2, 2))]
    elif name == "star3":
        gens = [P("w1 + w2 + w3"), P("w1^2 + w2^2 + w3^2"), P("w1^3 + w2^3 + w3^3")]
        rels = []
    elif name == "pt":
        gens = [S.gen("a2")]
        rels = []
    else:
        raise KeyError(name)
    return gens, rels
