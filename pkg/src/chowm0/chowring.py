"""The Chow ring of the <=3-node locus as a ring of restriction tuples.

Generators are ClassTuples, relations are polynomials in generator names
(``k1 k2 gamma2 gamma3p gamma3pp q r4 s5 t5 u6``), and verification is
exact linear algebra degree by degree against the Hilbert profile coming
from the Molien series of the five stratum rings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .classes import chern_classes, mumford_k
from .extension import ClassTuple, extend_class
from .graded import count_monomials, ideal_part, weighted_monomials
from .linalg import Echelon
from .polycore import Polynomial, parse
from .report import Report
from .strata import stratum
from .trees import STRATUM_NAMES

__all__ = [
    "Generator",
    "Presentation",
    "builtin_generators",
    "generator",
    "CODIM",
    "UNIVERSES",
    "hilbert_profile",
    "spanning_basis",
    "chern_tuple",
    "theorem_presentation",
    "presentation",
    "corrected_presentation",
    "verify_relations",
    "verify_presentation",
    "find_relations",
    "rho",
    "sigma_hat",
    "eta",
]

CODIM = {"pt": 0, "chain2": 1, "chain3": 2, "star3": 3, "chain4": 3}
UNIVERSES = {
    1: ("pt", "chain2"),
    2: ("pt", "chain2", "chain3"),
    3: STRATUM_NAMES,
}


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    value: ClassTuple = field(compare=False, repr=False)


def eta() -> Polynomial:
    S = stratum("chain3")
    return S.parse("t1 - t2") * S.parse("2*r - t1 + t2")


def rho() -> Polynomial:
    return stratum("chain4").parse("v3 + v4")


def sigma_hat() -> Polynomial:
    P = stratum("chain4").parse
    return (P("v1*v4 + v2*v3").scale(2) + P("v1^2 + v2^2").scale(2)
            - P("v1 + v2") ** 2 - P("v1 + v2") * P("v3 + v4"))


def chern_tuple(i: int) -> ClassTuple:
    return ClassTuple(i, {k: chern_classes(k)[i - 1] for k in STRATUM_NAMES})


def _mumford_tuple(m: int) -> ClassTuple:
    return ClassTuple(m, {k: mumford_k(k, m) for k in STRATUM_NAMES})


@lru_cache(maxsize=None)
def _builtin():
    rho_, sig = rho(), sigma_hat()
    gens = [
        Generator("k1", 1, _mumford_tuple(1)),
        Generator("k2", 2, _mumford_tuple(2)),
        Generator("gamma2", 2, extend_class(1, "chain3")),
        Generator("gamma3p", 3, extend_class(1, "star3")),
        Generator("gamma3pp", 3, extend_class(1, "chain4")),
        Generator("q", 4, extend_class(eta(), "chain3")),
        Generator("r4", 4, extend_class(rho_, "chain4")),
        Generator("s5", 5, extend_class(sig, "chain4")),
        Generator("t5", 5, extend_class(rho_ ** 2, "chain4")),
        Generator("u6", 6, extend_class(rho_ * sig, "chain4")),
    ]
    return tuple(gens)


def builtin_generators() -> list:
    return list(_builtin())


def generator(name: str) -> Generator:
    for g in _builtin():
        if g.name == name:
            return g
    raise KeyError(name)


def hilbert_profile(D: int, strata: Sequence[str] = STRATUM_NAMES) -> list:
    out = [0] * (D + 1)
    for k in strata:
        series = stratum(k).molien_series(D)
        c = CODIM[k]
        for d in range(c, D + 1):
            out[d] += series[d - c]
    return out


def spanning_basis(d: int, strata: Sequence[str] = STRATUM_NAMES) -> list:
    """Extensions of an invariant basis of every stratum, shifted by codimension."""
    out = []
    for k in strata:
        e = d - CODIM[k]
        if e < 0:
            continue
        if k == "pt":
            if e % 2 == 0:
                out.append(chern_tuple(2) ** (e // 2))
            continue
        for b in stratum(k).invariant_basis(e):
            out.append(extend_class(b, k))
    return [x.restricted(strata) for x in out]


class Presentation:
    """Generators (ClassTuples) and relations (polynomials in generator names)."""

    def __init__(self, generators: Sequence[Generator], relations: Sequence[Polynomial | str],
                 strata: Sequence[str] = STRATUM_NAMES, title: str = ""):
        self.generators = list(generators)
        self.strata = tuple(strata)
        self.title = title
        self.names = tuple(g.name for g in self.generators)
        self.degrees = tuple(g.degree for g in self.generators)
        self.relations = [self.formal(r) for r in relations]
        self._cache: dict = {}

    @property
    def max_nodes(self) -> int:
        return max(CODIM[k] for k in self.strata)

    def formal(self, r) -> Polynomial:
        if isinstance(r, str):
            return parse(r, self.names, self.degrees)
        return r.extend(self.names, self.degrees)

    def monomial_value(self, e: tuple) -> ClassTuple:
        if e in self._cache:
            return self._cache[e]
        i = next((k for k, x in enumerate(e) if x), None)
        if i is None:
            val = ClassTuple.one().restricted(self.strata)
        else:
            lower = e[:i] + (e[i] - 1,) + e[i + 1:]
            val = self.monomial_value(lower) * self.generators[i].value.restricted(self.strata)
        self._cache[e] = val
        return val

    def evaluate(self, r) -> ClassTuple:
        r = self.formal(r)
        deg = max(r.degree(), 0)
        out = ClassTuple.zero(deg)
        for exps, c in r.items():
            out = out + self.monomial_value(exps).scale(c)
        out.degree = deg
        return out

    def monomials(self, d: int) -> tuple:
        return weighted_monomials(self.degrees, d)

    def to_json(self) -> str:
        return json.dumps({
            "generators": [{"name": g.name, "degree": g.degree} for g in self.generators],
            "relations": [str(r) for r in self.relations],
            "max_nodes": self.max_nodes,
        }, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Presentation":
        data = json.loads(text)
        gens = []
        for item in data["generators"]:
            try:
                g = generator(item["name"])
            except KeyError:
                raise ValueError(f"unknown generator {item['name']!r}") from None
            if g.degree != item["degree"]:
                raise ValueError(f"generator {g.name} has degree {g.degree}, not {item['degree']}")
            gens.append(g)
        strata = UNIVERSES[data.get("max_nodes", 3)]
        return cls(gens, data["relations"], strata, title=f"presentation from JSON ({len(gens)} generators)")


THEOREM_RELATIONS = [
    "gamma3p*(-k2 + 2*gamma2 - k1^2)",
    "gamma3p*(q + gamma2*(k1^2 - 4*gamma2))",
    "gamma3p*gamma3pp",
    "gamma3p*r4",
    "gamma3p*s5",
    "gamma3p*t5",
    "gamma3p*u6",
    "r4^2 - gamma3pp*t5",
    "r4*s5 - gamma3pp*u6",
    "q^2 + gamma2^2*(2*k2 + k1^2)*(k1^2 - 4*gamma2)",
    "s5^2 - (2*k2 + k1^2)*((-k1*gamma3pp + 2*r4)*(k1*gamma3pp + r4) + 4*gamma2*gamma3pp^2)",
]


def theorem_presentation() -> Presentation:
    P = Presentation(builtin_generators(), [], STRATUM_NAMES, title="<=3 nodes, 10 generators, 11 relations")
    P.relations = [P.formal(t) for t in THEOREM_RELATIONS]
    return P


def presentation(max_nodes: int) -> Presentation:
    if max_nodes == 3:
        return theorem_presentation()
    gens = builtin_generators()
    if max_nodes == 1:
        return Presentation(gens[:2], [], UNIVERSES[1], title="<=1 node, Q[k1, k2]")
    if max_nodes == 2:
        chosen = [gens[0], gens[1], gens[2], gens[5]]
        P = Presentation(chosen, [], UNIVERSES[2], title="<=2 nodes, Q[k1, k2, gamma2, q]/(1 relation)")
        P.relations = [P.formal(THEOREM_RELATIONS[9])]
        return P
    raise ValueError("max_nodes must be 1, 2 or 3")


# -- verification ---------------------------------------------------------

def _first_nonzero(value: ClassTuple, strata):
    for k in strata:
        if not value[k].is_zero():
            return k
    return None


def verify_relations(P: Presentation, strict: bool = True, report: Report | None = None) -> Report:
    rep = report or Report(f"relations of {P.title or 'presentation'}")
    for k, r in enumerate(P.relations, 1):
        val = P.evaluate(r)
        bad = _first_nonzero(val, P.strata)
        if bad is None:
            rep.check(True, d=val.degree, relation=k)
        else:
            text = str(val[bad])
            if len(text) > 120:
                text = text[:120] + f" ... ({len(val[bad])} terms)"
            rep.check(False, f"nonzero on {bad}: {text}", witness=val, d=val.degree, relation=k)
    if strict:
        rep.raise_if_failed()
    return rep


def _vectors(values, strata):
    return [v.vector(strata) for v in values]


def verify_presentation(P: Presentation, D: int = 10, strict: bool = True) -> Report:
    rep = Report(f"{P.title or 'presentation'}: verify up to degree {D}")
    verify_relations(P, strict=False, report=rep)
    hp = hilbert_profile(D, P.strata)
    for d in range(D + 1):
        basis = spanning_basis(d, P.strata)
        ech = Echelon()
        for b in basis:
            ech.add(b.vector(P.strata))
        ok = ech.rank == len(basis) == hp[d]
        rep.check(ok, f"basis={len(basis)} rank={ech.rank} hilbert={hp[d]}", d=d, check="a")
        gen_ech = Echelon()
        for e in P.monomials(d):
            gen_ech.add(P.monomial_value(e).vector(P.strata))
        missing = [b for b in basis if not gen_ech.contains(b.vector(P.strata))]
        rep.check(gen_ech.rank == hp[d] and not missing,
                  f"monomials={count_monomials(P.degrees, d)} rank={gen_ech.rank} hilbert={hp[d]}",
                  witness=missing[0] if missing else None, d=d, check="b")
        qd = count_monomials(P.degrees, d) - ideal_part(P.relations, P.names, P.degrees, d).rank
        rep.check(qd == hp[d], f"quotient={qd} hilbert={hp[d]}", d=d, check="c")
    if rep.passed:
        rep.note(f"presentation correct and complete, verified up to degree {D}; higher degrees not certified")
    else:
        rep.note(f"presentation NOT verified up to degree {D}")
    if strict:
        rep.raise_if_failed()
    return rep


def find_relations(P: Presentation, D: int, start: Sequence[Polynomial] = ()) -> list:
    """Relations that, added to ``start``, make Q[gens]/(relations) exact up to D.

    Works degree by degree: every generator monomial that depends linearly on
    earlier ones gives a kernel element, which is kept unless it already lies
    in the ideal generated so far.
    """
    rels = [P.formal(r) for r in start]
    found = []
    for d in range(D + 1):
        ideal = ideal_part(rels, P.names, P.degrees, d)
        ech = Echelon(track=True)
        monos = _preferred_order(P.monomials(d))
        for idx, e in enumerate(monos):
            vec = P.monomial_value(e).vector(P.strata)
            combo = ech.express(vec)
            if combo is None:
                ech.add(vec, label=idx)
                continue
            terms = {e: Fraction(1)}
            for j, c in combo.items():
                terms[monos[j]] = terms.get(monos[j], 0) - c
            rel = Polynomial(terms, P.names, P.degrees)
            if ideal.contains(dict(rel.items())):
                continue
            ideal.add(dict(rel.items()))
            rels.append(rel)
            found.append(rel)
    return found


def _preferred_order(monos):
    # monomials in later (deeper-supported) generators first, so that
    # corrections are written in terms of them
    return sorted(monos, key=lambda e: tuple(reversed(e)), reverse=True)


def corrected_presentation(D: int = 10) -> Presentation:
    """The 10 generators with every failing theorem relation corrected.

    A relation R that does not vanish is replaced by R - sum(c_m m), where
    sum(c_m m) is a combination of generator monomials with the same tuple
    value; then any relations still missing up to degree D are appended.
    """
    P = theorem_presentation()
    fixed = []
    for r in P.relations:
        val = P.evaluate(r)
        if val.is_zero():
            fixed.append(r)
            continue
        d = val.degree
        ech = Echelon(track=True)
        monos = _preferred_order(P.monomials(d))
        for idx, e in enumerate(monos):
            ech.add(P.monomial_value(e).vector(P.strata), label=idx)
        combo = ech.express(val.vector(P.strata))
        if combo is None:
            fixed.append(r)
            continue
        corr = dict(r.items())
        for j, c in combo.items():
            corr[monos[j]] = corr.get(monos[j], 0) - c
        fixed.append(Polynomial(corr, P.names, P.degrees))
    extra = find_relations(P, D, fixed)
    out = Presentation(P.generators, fixed + extra, STRATUM_NAMES,
                       title=f"<=3 nodes, corrected relations ({len(fixed) + len(extra)})")
    out._cache = P._cache
    return out
