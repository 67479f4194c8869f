"""Weighted monomials and degree-wise quotient dimensions.

Formal polynomials in generator names are ordinary :class:`Polynomial`
objects whose variables carry the generator degrees.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .linalg import Echelon
from .polycore import Polynomial


@lru_cache(maxsize=None)
def weighted_monomials(weights: tuple, d: int) -> tuple:
    """All exponent tuples e with sum(e_i * w_i) == d, in lex-descending order."""
    if d < 0:
        return ()
    if not weights:
        return ((),) if d == 0 else ()
    w, rest = weights[0], weights[1:]
    out = []
    for e in range(d // w, -1, -1):
        for tail in weighted_monomials(rest, d - w * e):
            out.append((e,) + tail)
    return tuple(out)


def count_monomials(weights: Sequence[int], d: int) -> int:
    return len(weighted_monomials(tuple(weights), d))


def ideal_part(relations: Sequence[Polynomial], names, degrees, d: int) -> Echelon:
    """Echelon form of the degree-d part of the ideal spanned by ``relations``.

    Relations are assumed homogeneous; each one is multiplied by every
    monomial of complementary degree.
    """
    names, degrees = tuple(names), tuple(degrees)
    ech = Echelon()
    for rel in relations:
        rel = rel.extend(names, degrees)
        e = rel.degree()
        if e < 0 or e > d:
            continue
        for m in weighted_monomials(degrees, d - e):
            prod = {}
            for exps, c in rel.items():
                key = tuple(a + b for a, b in zip(exps, m))
                prod[key] = c
            ech.add(prod)
    return ech


def quotient_dimension(relations: Sequence[Polynomial], names, degrees, d: int) -> int:
    """dim_Q of the degree-d part of Q[names]/(relations)."""
    return count_monomials(degrees, d) - ideal_part(relations, names, degrees, d).rank
