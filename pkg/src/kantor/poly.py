"""Sparse multivariate polynomials over exact rationals.

A polynomial is stored as a map from monomials to nonzero ``Fraction``
coefficients.  A monomial is a tuple of ``(name, exponent)`` pairs, sorted
by name, with strictly positive exponents; the empty tuple is the constant
monomial.  Indeterminate names are interned strings, so name comparisons
inside hot loops are pointer comparisons.

The zero polynomial is the empty term map.  Every operation normalizes its
result (zero coefficients are never stored), which makes polynomial
equality plain structural equality: ``p - q == 0`` iff the two term maps
agree.  That canonical-form property is what the identity checker and the
classifiers rely on, so no floating point appears anywhere.

Printing uses a graded lexicographic term order (total degree first, then
the name/exponent sequence), giving deterministic strings such as
``-1/2*u1 + u3^2``.  ``parse_poly`` reads the same syntax back.
"""

from __future__ import annotations

import re
import sys
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

from .errors import ParseError

QQ = Fraction

Monomial = Tuple[Tuple[str, int], ...]
Scalar = Union[int, Fraction]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"not an exact scalar: {value!r}")


def _mono_degree(mono: Monomial) -> int:
    return sum(e for _, e in mono)


def _mono_key(mono: Monomial):
    return (_mono_degree(mono), mono)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps: Dict[str, int] = dict(a)
    for name, e in b:
        exps[name] = exps.get(name, 0) + e
    return tuple(sorted(exps.items()))


class Poly:
    """Immutable sparse polynomial over the rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        normalized: Dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = _as_fraction(coeff)
                if coeff:
                    normalized[mono] = coeff
        object.__setattr__(self, "terms", normalized)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return _ZERO

    @staticmethod
    def const(value: Scalar) -> "Poly":
        value = _as_fraction(value)
        if not value:
            return _ZERO
        return Poly({(): value})

    @staticmethod
    def var(name: str) -> "Poly":
        return Poly({((sys.intern(name), 1),): Fraction(1)})

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not mono for mono in self.terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial (raises if indeterminates remain)."""
        if not self.terms:
            return Fraction(0)
        if self.is_constant():
            return self.terms[()]
        raise ValueError(f"not a constant polynomial: {self}")

    def names(self) -> set:
        out = set()
        for mono in self.terms:
            for name, _ in mono:
                out.add(name)
        return out

    def degree_in(self, names: Iterable[str]) -> int:
        """Maximal total degree of the given indeterminates over all terms."""
        names = set(names)
        best = 0
        for mono in self.terms:
            d = sum(e for n, e in mono if n in names)
            if d > best:
                best = d
        return best

    def coefficient(self, name: str) -> "Poly":
        """The coefficient of ``name`` in a polynomial of degree <= 1 in it."""
        out: Dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            rest = []
            seen = 0
            for n, e in mono:
                if n == name:
                    seen = e
                else:
                    rest.append((n, e))
            if seen == 1:
                out[tuple(rest)] = out.get(tuple(rest), Fraction(0)) + coeff
            elif seen > 1:
                raise ValueError(f"degree {seen} in {name}: {self}")
        return Poly(out)

    def drop(self, name: str) -> "Poly":
        """All terms not containing ``name``."""
        return Poly({m: c for m, c in self.terms.items() if all(n != name for n, _ in m)})

    def split_by(self, names) -> Dict[Monomial, "Poly"]:
        """Group terms by their sub-monomial in ``names``.

        Returns a map from the restricted monomial to the polynomial formed
        by the remaining factors, so that ``p = sum(key * value)``.
        """
        names = set(names)
        groups: Dict[Monomial, Dict[Monomial, Fraction]] = {}
        for mono, coeff in self.terms.items():
            selected = tuple((n, e) for n, e in mono if n in names)
            rest = tuple((n, e) for n, e in mono if n not in names)
            bucket = groups.setdefault(selected, {})
            bucket[rest] = bucket.get(rest, Fraction(0)) + coeff
        return {sel: Poly(bucket) for sel, bucket in groups.items() if any(bucket.values())}

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms:
            return other
        if not other.terms:
            return self
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            out[mono] = out.get(mono, Fraction(0)) + coeff
        return Poly(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "Poly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.terms or not other.terms:
            return _ZERO
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _mono_mul(m1, m2)
                out[mono] = out.get(mono, Fraction(0)) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Poly":
        if isinstance(other, Poly):
            if not other.is_constant():
                raise ZeroDivisionError("division only by nonzero constants")
            other = other.constant_value()
        other = _as_fraction(other)
        if not other:
            raise ZeroDivisionError("division by zero")
        return Poly({m: c / other for m, c in self.terms.items()})

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.const(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    # -- substitution ------------------------------------------------------

    def substitute(self, bindings: Mapping[str, "Poly | Scalar"]) -> "Poly":
        """Replace indeterminates by polynomials; unbound names stay symbolic."""
        if not bindings:
            return self
        resolved = {name: _coerce_strict(value) for name, value in bindings.items()}
        total = _ZERO
        for mono, coeff in self.terms.items():
            factor = Poly.const(coeff)
            for name, e in mono:
                if name in resolved:
                    factor = factor * resolved[name] ** e
                else:
                    factor = factor * Poly({((name, e),): Fraction(1)})
            total = total + factor
        return total

    # -- printing ----------------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for mono in sorted(self.terms, key=_mono_key):
            coeff = self.terms[mono]
            factors = ["*".join(_format_power(n, e) for n, e in mono)] if mono else []
            if not mono:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = factors[0]
            else:
                body = f"{abs(coeff)}*{factors[0]}"
            if not pieces:
                pieces.append(body if coeff > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"Poly({self})"


_ZERO = Poly()


def _coerce(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.const(value)
    return NotImplemented


def _coerce_strict(value) -> Poly:
    out = _coerce(value)
    if out is NotImplemented:
        raise TypeError(f"cannot treat {value!r} as a polynomial")
    return out


def _format_power(name: str, exp: int) -> str:
    return name if exp == 1 else f"{name}^{exp}"


def poly_substitute(p: Poly, bindings: Mapping[str, Poly | Scalar]) -> Poly:
    """Functional form of :meth:`Poly.substitute`."""
    return p.substitute(bindings)


# -- parsing ---------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos:].strip()[0]!r} in {text!r}")
            break
        if m.lastgroup == "int":
            tokens.append(("int", int(m.group("int"))))
        elif m.lastgroup == "name":
            tokens.append(("name", sys.intern(m.group("name"))))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
    tokens.append(("end", None))
    return tokens


class _Parser:
    def __init__(self, text: str, allowed=None):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.allowed = None if allowed is None else set(allowed)

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_op(self, op: str):
        kind, value = self.next()
        if kind != "op" or value != op:
            raise ParseError(f"expected {op!r} in {self.text!r}")

    def parse(self) -> Poly:
        p = self.sum()
        if self.peek()[0] != "end":
            raise ParseError(f"trailing input in {self.text!r}")
        return p

    def sum(self) -> Poly:
        kind, value = self.peek()
        negate = False
        if kind == "op" and value in "+-":
            self.next()
            negate = value == "-"
        p = self.product()
        if negate:
            p = -p
        while True:
            kind, value = self.peek()
            if kind == "op" and value in "+-":
                self.next()
                q = self.product()
                p = p - q if value == "-" else p + q
            else:
                return p

    def product(self) -> Poly:
        p = self.power()
        while True:
            kind, value = self.peek()
            if kind == "op" and value in "*/":
                self.next()
                q = self.power()
                if value == "*":
                    p = p * q
                else:
                    if not q.is_constant() or q.is_zero():
                        raise ParseError(f"division by non-constant in {self.text!r}")
                    p = p / q.constant_value()
            else:
                return p

    def power(self) -> Poly:
        p = self.atom()
        kind, value = self.peek()
        if kind == "op" and value == "^":
            self.next()
            kind, value = self.next()
            if kind != "int":
                raise ParseError(f"exponent must be an integer in {self.text!r}")
            p = p ** value
        return p

    def atom(self) -> Poly:
        kind, value = self.next()
        if kind == "int":
            return Poly.const(value)
        if kind == "name":
            if self.allowed is not None and value not in self.allowed:
                raise ParseError(f"unknown indeterminate {value!r} in {self.text!r}")
            return Poly.var(value)
        if kind == "op" and value == "(":
            p = self.sum()
            self.expect_op(")")
            return p
        if kind == "op" and value == "-":
            return -self.atom()
        raise ParseError(f"unexpected token in {self.text!r}")


def parse_poly(text: str, allowed=None) -> Poly:
    """Parse the canonical polynomial syntax, e.g. ``-1/2*u1 + u3^2``.

    ``allowed`` optionally restricts the indeterminate names; any other
    name raises :class:`ParseError`.
    """
    return _Parser(text, allowed).parse()
