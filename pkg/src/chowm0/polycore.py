"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Polynomial` is an immutable map from exponent vectors to nonzero
:class:`fractions.Fraction` coefficients over an ordered tuple of named
variables.  Every variable carries a grading degree (1 unless declared
otherwise), so ``graded_part`` and ``degree`` are weighted.

Text grammar (round-trips exactly through :func:`parse` / ``str``)::

    -3/2*t1^2*r + t2
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Union

__all__ = [
    "Polynomial",
    "NotDivisible",
    "PolynomialParseError",
    "parse",
    "var",
    "variables",
]

Scalar = Union[int, Fraction]
VAR_NAME = re.compile(r"[a-z][a-z0-9]*")


class NotDivisible(ArithmeticError):
    """Raised by :meth:`Polynomial.divide_exact` when no exact quotient exists."""


class PolynomialParseError(ValueError):
    def __init__(self, text: str, position: int, expected: str):
        self.text = text
        self.position = position
        self.expected = expected
        super().__init__(f"parse error at position {position}: expected {expected} in {text!r}")


def _merge_universe(a_vars, a_degs, b_vars, b_degs):
    if a_vars == b_vars and a_degs == b_degs:
        return a_vars, a_degs
    names = list(a_vars)
    degs = list(a_degs)
    known = dict(zip(a_vars, a_degs))
    for name, d in zip(b_vars, b_degs):
        if name in known:
            if known[name] != d:
                raise ValueError(f"variable {name} declared with degrees {known[name]} and {d}")
            continue
        names.append(name)
        degs.append(d)
        known[name] = d
    return tuple(names), tuple(degs)


class Polynomial:
    """Immutable sparse polynomial over QQ.

    ``terms`` maps exponent tuples (aligned with ``variables``) to nonzero
    Fractions.  Equality is by named terms, so two polynomials over different
    variable universes compare equal when they agree after dropping unused
    variables.
    """

    __slots__ = ("variables", "degrees", "_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, Scalar] | None = None,
                 variables: Iterable[str] = (), degrees: Iterable[int] | None = None):
        self.variables = tuple(variables)
        self.degrees = tuple(degrees) if degrees is not None else (1,) * len(self.variables)
        if len(self.degrees) != len(self.variables):
            raise ValueError("degrees must align with variables")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")
        clean = {}
        n = len(self.variables)
        for exps, c in (terms or {}).items():
            if len(exps) != n:
                raise ValueError(f"exponent {exps} does not match {n} variables")
            if c:
                clean[tuple(exps)] = Fraction(c)
        self._terms = clean
        self._hash = None

    # -- constructors -------------------------------------------------
    @classmethod
    def _raw(cls, terms, variables, degrees):
        p = cls.__new__(cls)
        p.variables = variables
        p.degrees = degrees
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c: Scalar, variables: Iterable[str] = (), degrees=None) -> "Polynomial":
        variables = tuple(variables)
        return cls({(0,) * len(variables): c}, variables, degrees)

    @classmethod
    def zero(cls, variables: Iterable[str] = (), degrees=None) -> "Polynomial":
        return cls({}, variables, degrees)

    @classmethod
    def monomial(cls, exps: tuple, variables, degrees=None, coeff: Scalar = 1) -> "Polynomial":
        return cls({tuple(exps): coeff}, variables, degrees)

    # -- basic accessors ----------------------------------------------
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def coefficient(self, exps: tuple) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def monomial_degree(self, exps: tuple) -> int:
        return sum(e * d for e, d in zip(exps, self.degrees))

    def degree(self) -> int:
        """Maximal weighted degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(self.monomial_degree(e) for e in self._terms)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {self.monomial_degree(e) for e in self._terms}
        if not degs:
            return True
        if len(degs) > 1:
            return False
        return d is None or degs == {d}

    def used_variables(self) -> tuple:
        used = set()
        for exps in self._terms:
            used.update(i for i, e in enumerate(exps) if e)
        return tuple(self.variables[i] for i in sorted(used))

    def named_terms(self) -> frozenset:
        out = []
        for exps, c in self._terms.items():
            key = tuple(sorted((self.variables[i], e) for i, e in enumerate(exps) if e))
            out.append((key, c))
        return frozenset(out)

    # -- universe handling --------------------------------------------
    def extend(self, variables: Iterable[str], degrees: Iterable[int] | None = None) -> "Polynomial":
        """Re-express in a universe that contains every used variable."""
        variables = tuple(variables)
        degrees = tuple(degrees) if degrees is not None else None
        if variables == self.variables and (degrees is None or degrees == self.degrees):
            return self
        if degrees is None:
            own = dict(zip(self.variables, self.degrees))
            degrees = tuple(own.get(v, 1) for v in variables)
        index = {v: i for i, v in enumerate(variables)}
        used = self.used_variables()
        for v in used:
            if v not in index:
                raise ValueError(f"variable {v} missing from target universe {variables}")
        positions = [index.get(v) for v in self.variables]
        n = len(variables)
        out = {}
        for exps, c in self._terms.items():
            new = [0] * n
            for pos, e in zip(positions, exps):
                if e:
                    new[pos] = e
            out[tuple(new)] = c
        return Polynomial._raw(out, variables, degrees)

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other, self.variables, self.degrees)
        return NotImplemented

    def _aligned(self, other: "Polynomial"):
        if other.variables == self.variables and other.degrees == self.degrees:
            return self, other
        names, degs = _merge_universe(self.variables, self.degrees, other.variables, other.degrees)
        return self.extend(names, degs), other.extend(names, degs)

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._aligned(other)
        out = dict(a._terms)
        for e, c in b._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(out, a.variables, a.degrees)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({e: -c for e, c in self._terms.items()}, self.variables, self.degrees)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.variables, self.degrees)
        return Polynomial._raw({e: v * c for e, v in self._terms.items()}, self.variables, self.degrees)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self._aligned(other)
        out = {}
        bt = list(b._terms.items())
        for ea, ca in a._terms.items():
            for eb, cb in bt:
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial._raw(out, a.variables, a.degrees)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(1, self.variables, self.degrees)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other, self.variables, self.degrees)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.variables == self.variables:
            return self._terms == other._terms
        return self.named_terms() == other.named_terms()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.named_terms())
        return self._hash

    # -- degree-wise operations ---------------------------------------
    def graded_part(self, d: int) -> "Polynomial":
        if d < 0:
            raise ValueError("degree must be nonnegative")
        out = {e: c for e, c in self._terms.items() if self.monomial_degree(e) == d}
        return Polynomial._raw(out, self.variables, self.degrees)

    def substitute(self, mapping: Mapping[str, "Polynomial | Scalar"]) -> "Polynomial":
        """Simultaneous substitution; unmapped variables map to themselves."""
        images = {}
        for name, img in mapping.items():
            if not isinstance(img, Polynomial):
                img = Polynomial.constant(img)
            images[name] = img
        unmapped = [v for v in self.variables if v not in images]
        if unmapped:
            own = dict(zip(self.variables, self.degrees))
            for v in unmapped:
                images[v] = var(v, degree=own[v])
        names, degs = (), ()
        for v in self.variables:
            names, degs = _merge_universe(names, degs, images[v].variables, images[v].degrees)
        imgs = [images[v].extend(names, degs) for v in self.variables]
        power_cache: dict = {}

        def power(i, e):
            key = (i, e)
            if key not in power_cache:
                power_cache[key] = imgs[i] ** e
            return power_cache[key]

        result = Polynomial.zero(names, degs)
        one = Polynomial.constant(1, names, degs)
        for exps, c in self._terms.items():
            term = one
            for i, e in enumerate(exps):
                if e:
                    term = term * power(i, e)
            result = result + term.scale(c)
        return result

    def leading_term(self):
        """Lex-leading (exponent, coefficient) in the variable order."""
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms)
        return e, self._terms[e]

    def divide_exact(self, q: "Polynomial") -> "Polynomial":
        """Return ``s`` with ``s * q == self``; raise :class:`NotDivisible` otherwise."""
        if not isinstance(q, Polynomial):
            q = self._coerce(q)
        if q.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        p, q = self._aligned(q)
        qe, qc = q.leading_term()
        rem = p
        quot = {}
        while not rem.is_zero():
            re_, rc = rem.leading_term()
            diff = tuple(a - b for a, b in zip(re_, qe))
            if any(x < 0 for x in diff):
                raise NotDivisible(f"{q} does not divide {self}")
            c = rc / qc
            quot[diff] = quot.get(diff, 0) + c
            rem = rem - Polynomial._raw({diff: c}, p.variables, p.degrees) * q
        return Polynomial(quot, p.variables, p.degrees)

    # -- text form ----------------------------------------------------
    def sort_key(self, exps):
        # graded, then lex by variable order (descending)
        return (-self.monomial_degree(exps), tuple(-x for x in exps))

    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for exps in sorted(self._terms, key=self.sort_key):
            c = self._terms[exps]
            factors = []
            for name, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            coeff = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
            if factors:
                body = "*".join(factors) if mag == 1 else coeff + "*" + "*".join(factors)
            else:
                body = coeff
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Polynomial({str(self)!r}, variables={self.variables})"


def var(name: str, variables: Iterable[str] | None = None, degree: int = 1,
        degrees: Iterable[int] | None = None) -> Polynomial:
    """The polynomial ``name``; in ``variables`` if given, else a one-variable universe."""
    if variables is None:
        return Polynomial({(1,): 1}, (name,), (degree,))
    variables = tuple(variables)
    exps = tuple(1 if v == name else 0 for v in variables)
    if sum(exps) != 1:
        raise ValueError(f"{name} not in {variables}")
    return Polynomial({exps: 1}, variables, degrees)


def variables(names: Iterable[str], degrees: Iterable[int] | None = None) -> list:
    names = tuple(names)
    degrees = tuple(degrees) if degrees is not None else None
    return [var(n, names, degrees=degrees) for n in names]


# -- parser -------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[a-z][a-z0-9]*)|(?P<op>[-+*/^()]))")


def _tokenize(text):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise PolynomialParseError(text, start, "number, variable name or operator")
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def parse(text: str, variables: Iterable[str] | None = None,
          degrees: Mapping[str, int] | Iterable[int] | None = None) -> Polynomial:
    """Parse the text grammar (parentheses are accepted as well).

    ``variables`` fixes the universe (and its order); otherwise variables
    appear in order of first occurrence.  ``degrees`` may be a name->degree
    map or a sequence aligned with ``variables``.
    """
    tokens = _tokenize(text)
    pos = 0
    order: list[str] = []

    if variables is not None:
        names = tuple(variables)
        if degrees is None:
            degree_of = {}
        elif isinstance(degrees, Mapping):
            degree_of = dict(degrees)
        else:
            degree_of = dict(zip(names, degrees))
    else:
        names = None
        degree_of = dict(degrees) if isinstance(degrees, Mapping) else {}

    def peek():
        return tokens[pos]

    def take(kind, value=None, expected=None):
        nonlocal pos
        tk = tokens[pos]
        if tk[0] != kind or (value is not None and tk[1] != value):
            raise PolynomialParseError(text, tk[2], expected or value or kind)
        pos += 1
        return tk

    def is_op(*ops):
        tk = peek()
        return tk[0] == "op" and tk[1] in ops

    def atom():
        tk = peek()
        if tk[0] == "num":
            num = Fraction(int(take("num")[1]))
            if is_op("/") and tokens[pos + 1][0] == "num":
                take("op", "/")
                den_tk = take("num", expected="denominator")
                if int(den_tk[1]) == 0:
                    raise PolynomialParseError(text, den_tk[2], "nonzero denominator")
                num /= int(den_tk[1])
            return Polynomial.constant(num)
        if tk[0] == "name":
            name = take("name")[1]
            if names is not None and name not in names:
                raise PolynomialParseError(text, tk[2], "variable in " + ",".join(names))
            if name not in order:
                order.append(name)
            return var(name, degree=degree_of.get(name, 1))
        if is_op("("):
            take("op", "(")
            inner = expr()
            take("op", ")", expected="')'")
            return inner
        raise PolynomialParseError(text, tk[2], "number, variable name or '('")

    def factor():
        base = atom()
        if is_op("^"):
            take("op", "^")
            base = base ** int(take("num", expected="exponent")[1])
        return base

    def term():
        out = factor()
        while is_op("*"):
            take("op", "*")
            out = out * factor()
        return out

    def expr():
        sign = 1
        if is_op("+", "-"):
            sign = -1 if take("op")[1] == "-" else 1
        if peek()[0] == "end":
            raise PolynomialParseError(text, peek()[2], "term")
        out = term().scale(sign)
        while is_op("+", "-"):
            sign = -1 if take("op")[1] == "-" else 1
            out = out + term().scale(sign)
        return out

    result = expr()
    if peek()[0] != "end":
        raise PolynomialParseError(text, peek()[2], "'+' or '-'")
    if names is None:
        names = tuple(order)
    degs = tuple(degree_of.get(n, 1) for n in names)
    return result.extend(names, degs)
