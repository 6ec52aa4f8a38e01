"""Finite-dimensional algebras given by structure constants.

A ``Multiplication`` is the rank-3 tensor ``c[i][j][k]`` holding the
coefficient of ``e_k`` in ``e_i * e_j``; entries are polynomials, so one
representation covers rational tables, parameterized families, and the
symbolic output of the Kantor constructions.  ``Element`` is a coordinate
vector of polynomials over the same basis.

Subspace computations (annihilator, nucleus, centralizer, derived series)
work over the rationals only: callers substitute parameters first.  Doing
exact linear algebra over a polynomial ring would need case analysis,
which is the classifier's job, not this module's.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from . import linsolve
from .errors import DimMismatch, SymbolicEntries
from .poly import Poly, parse_poly


def _as_poly(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.const(value)
    if isinstance(value, str):
        return parse_poly(value)
    raise TypeError(f"cannot use {value!r} as a structure constant")


class Element:
    """A vector of polynomial coordinates over a fixed basis."""

    __slots__ = ("dim", "coords")

    def __init__(self, coords: Sequence[Poly]):
        coords = tuple(_as_poly(c) for c in coords)
        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "dim", len(coords))

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    @staticmethod
    def zero(dim: int) -> "Element":
        return Element([Poly.zero()] * dim)

    @staticmethod
    def basis(dim: int, index: int) -> "Element":
        return Element([Poly.const(int(i == index)) for i in range(dim)])

    @staticmethod
    def symbolic(prefix: str, dim: int) -> "Element":
        return Element([Poly.var(f"{prefix}{i + 1}") for i in range(dim)])

    def __add__(self, other: "Element") -> "Element":
        if self.dim != other.dim:
            raise DimMismatch("element dimensions differ")
        return Element([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other: "Element") -> "Element":
        if self.dim != other.dim:
            raise DimMismatch("element dimensions differ")
        return Element([a - b for a, b in zip(self.coords, other.coords)])

    def scale(self, factor) -> "Element":
        return Element([c * factor for c in self.coords])

    def __eq__(self, other) -> bool:
        return isinstance(other, Element) and self.coords == other.coords

    __hash__ = None

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def is_rational(self) -> bool:
        return all(c.is_constant() for c in self.coords)

    def rational_coords(self) -> Tuple[Fraction, ...]:
        if not self.is_rational():
            raise SymbolicEntries(f"element has symbolic coordinates: {self}")
        return tuple(c.constant_value() for c in self.coords)

    def substitute(self, bindings) -> "Element":
        return Element([c.substitute(bindings) for c in self.coords])

    def names(self) -> set:
        out = set()
        for c in self.coords:
            out |= c.names()
        return out

    def render(self, labels: Sequence[str] | None = None) -> str:
        labels = labels or [f"e{i + 1}" for i in range(self.dim)]
        pieces = []
        for coeff, label in zip(self.coords, labels):
            if coeff.is_zero():
                continue
            if coeff == 1:
                body = label
            elif coeff == -1:
                body = f"-{label}"
            elif coeff.is_constant() or len(coeff.terms) == 1:
                body = f"{coeff}*{label}"
            else:
                body = f"({coeff})*{label}"
            pieces.append(body)
        if not pieces:
            return "0"
        out = pieces[0]
        for piece in pieces[1:]:
            out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return out

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"Element({self})"


class Multiplication:
    """Structure tensor of a bilinear product on an n-dimensional space."""

    __slots__ = ("dim", "c")

    def __init__(self, c: Sequence[Sequence[Sequence[Poly]]]):
        dim = len(c)
        tensor = tuple(
            tuple(tuple(_as_poly(entry) for entry in row) for row in plane) for plane in c
        )
        for plane in tensor:
            if len(plane) != dim or any(len(row) != dim for row in plane):
                raise DimMismatch("structure tensor must be n x n x n")
        object.__setattr__(self, "c", tensor)
        object.__setattr__(self, "dim", dim)

    def __setattr__(self, name, value):
        raise AttributeError("Multiplication is immutable")

    @staticmethod
    def zero(dim: int) -> "Multiplication":
        z = Poly.zero()
        return Multiplication([[[z] * dim for _ in range(dim)] for _ in range(dim)])

    @staticmethod
    def from_table(dim: int, entries: Dict[Tuple[int, int, int], object]) -> "Multiplication":
        """Build a tensor from a sparse table with 1-based indices."""
        c = [[[Poly.zero() for _ in range(dim)] for _ in range(dim)] for _ in range(dim)]
        for (i, j, k), value in entries.items():
            if not (1 <= i <= dim and 1 <= j <= dim and 1 <= k <= dim):
                raise DimMismatch(f"index ({i},{j},{k}) out of range for dim {dim}")
            c[i - 1][j - 1][k - 1] = c[i - 1][j - 1][k - 1] + _as_poly(value)
        return Multiplication(c)

    def entry(self, i: int, j: int, k: int) -> Poly:
        return self.c[i][j][k]

    def row(self, i: int, j: int) -> Element:
        """The product ``e_i * e_j`` (0-based indices)."""
        return Element(self.c[i][j])

    def table(self) -> Dict[Tuple[int, int, int], Poly]:
        """Nonzero entries, 1-based, sorted by index."""
        out = {}
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    if not self.c[i][j][k].is_zero():
                        out[(i + 1, j + 1, k + 1)] = self.c[i][j][k]
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, Multiplication) and self.dim == other.dim and self.c == other.c

    __hash__ = None

    def is_zero(self) -> bool:
        return all(e.is_zero() for p in self.c for row in p for e in row)

    def is_rational(self) -> bool:
        return all(e.is_constant() for p in self.c for row in p for e in row)

    def names(self) -> set:
        out = set()
        for plane in self.c:
            for row in plane:
                for e in row:
                    out |= e.names()
        return out

    def substitute(self, bindings) -> "Multiplication":
        return Multiplication(
            [[[e.substitute(bindings) for e in row] for row in plane] for plane in self.c]
        )

    def __add__(self, other: "Multiplication") -> "Multiplication":
        if self.dim != other.dim:
            raise DimMismatch("tensor dimensions differ")
        return Multiplication(
            [
                [
                    [a + b for a, b in zip(r1, r2)]
                    for r1, r2 in zip(p1, p2)
                ]
                for p1, p2 in zip(self.c, other.c)
            ]
        )

    def __neg__(self) -> "Multiplication":
        return self.scale(-1)

    def scale(self, factor) -> "Multiplication":
        return Multiplication(
            [[[e * factor for e in row] for row in plane] for plane in self.c]
        )

    def opposite(self) -> "Multiplication":
        """The tensor of the reversed product ``x *op y = y * x``."""
        n = self.dim
        return Multiplication(
            [[[self.c[j][i][k] for k in range(n)] for j in range(n)] for i in range(n)]
        )

    def render(self, labels: Sequence[str] | None = None, opsym: str = "*") -> str:
        labels = labels or [f"e{i + 1}" for i in range(self.dim)]
        lines = []
        for i in range(self.dim):
            for j in range(self.dim):
                value = self.row(i, j)
                if not value.is_zero():
                    lines.append(f"{labels[i]} {opsym} {labels[j]} = {value.render(labels)}")
        if not lines:
            return "(all products zero)"
        return "\n".join(lines)

    def __repr__(self) -> str:
        return f"Multiplication(dim={self.dim})"


def multiply(m: Multiplication, x: Element, y: Element) -> Element:
    """Evaluate the product: ``(x*y)_k = sum_ij x_i y_j c[i][j][k]``."""
    if not (m.dim == x.dim == y.dim):
        raise DimMismatch("dimensions of multiplication and elements differ")
    n = m.dim
    coords = [Poly.zero()] * n
    for i in range(n):
        xi = x.coords[i]
        if xi.is_zero():
            continue
        for j in range(n):
            yj = y.coords[j]
            if yj.is_zero():
                continue
            factor = xi * yj
            row = m.c[i][j]
            for k in range(n):
                if not row[k].is_zero():
                    coords[k] = coords[k] + factor * row[k]
    return Element(coords)


@dataclass(frozen=True)
class Subspace:
    """A rational subspace, stored with a canonical reduced basis."""

    ambient: int
    basis: Tuple[Tuple[Fraction, ...], ...]

    @staticmethod
    def from_vectors(ambient: int, vectors: Sequence[Sequence[Fraction]]) -> "Subspace":
        rows = [list(map(Fraction, v)) for v in vectors]
        reduced, pivots = linsolve.rref(rows) if rows else ([], [])
        basis = tuple(tuple(row) for row in reduced[: len(pivots)])
        return Subspace(ambient, basis)

    @staticmethod
    def zero(ambient: int) -> "Subspace":
        return Subspace(ambient, ())

    @staticmethod
    def full(ambient: int) -> "Subspace":
        return Subspace.from_vectors(ambient, linsolve.mat_identity(ambient))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vector: Sequence[Fraction]) -> bool:
        return linsolve.in_span([list(b) for b in self.basis], list(vector))

    def basis_elements(self) -> Tuple[Element, ...]:
        return tuple(Element([Poly.const(x) for x in row]) for row in self.basis)

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)


@dataclass(frozen=True)
class Algebra:
    """A named multiplication with basis labels and declared parameters."""

    name: str
    mult: Multiplication
    labels: Tuple[str, ...] = ()
    params: Tuple[str, ...] = ()
    constraints: Tuple[Poly, ...] = ()

    def __post_init__(self):
        labels = self.labels or tuple(f"e{i + 1}" for i in range(self.mult.dim))
        object.__setattr__(self, "labels", tuple(labels))
        if len(self.labels) != self.mult.dim:
            raise DimMismatch("label count must equal the dimension")
        used = self.mult.names()
        undeclared = used - set(self.params)
        if undeclared:
            raise ValueError(f"undeclared parameters in table: {sorted(undeclared)}")

    @property
    def dim(self) -> int:
        return self.mult.dim


def _require_rational(m: Multiplication):
    if not m.is_rational():
        raise SymbolicEntries("operation needs a parameter-free multiplication")


def annihilator(m: Multiplication) -> Subspace:
    """The space of v with ``v*e_j = e_j*v = 0`` for every basis vector."""
    _require_rational(m)
    n = m.dim
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append([m.c[i][j][k].constant_value() for i in range(n)])
            rows.append([m.c[j][i][k].constant_value() for i in range(n)])
    return Subspace.from_vectors(n, linsolve.nullspace(rows, n))


def centralizer(m: Multiplication, x: Element) -> Subspace:
    """The space ``{y : x*y = y*x = 0}`` for a rational element x."""
    _require_rational(m)
    xc = x.rational_coords()
    n = m.dim
    rows = []
    for k in range(n):
        rows.append(
            [sum((xc[i] * m.c[i][j][k].constant_value() for i in range(n)), Fraction(0)) for j in range(n)]
        )
        rows.append(
            [sum((xc[i] * m.c[j][i][k].constant_value() for i in range(n)), Fraction(0)) for j in range(n)]
        )
    return Subspace.from_vectors(n, linsolve.nullspace(rows, n))


def nucleus(m: Multiplication) -> Subspace:
    """Elements associating with all basis pairs in every slot."""
    _require_rational(m)
    n = m.dim
    basis = [Element.basis(n, i) for i in range(n)]
    rows = []

    def associator(x, y, z) -> Element:
        return multiply(m, multiply(m, x, y), z) - multiply(m, x, multiply(m, y, z))

    for a in range(n):
        for b in range(n):
            for position in range(3):
                for k in range(n):
                    row = []
                    for i in range(n):
                        args = [basis[a], basis[b]]
                        args.insert(position, basis[i])
                        row.append(associator(*args).coords[k].constant_value())
                    rows.append(row)
    return Subspace.from_vectors(n, linsolve.nullspace(rows, n))


def _product_space(m: Multiplication, left: Subspace, right: Subspace) -> Subspace:
    vectors = []
    for u in left.basis_elements():
        for v in right.basis_elements():
            w = multiply(m, u, v)
            vectors.append([c.constant_value() for c in w.coords])
    return Subspace.from_vectors(m.dim, vectors)


def _sum_spaces(ambient: int, spaces: Sequence[Subspace]) -> Subspace:
    vectors = [list(v) for s in spaces for v in s.basis]
    return Subspace.from_vectors(ambient, vectors)


def derived_indices(m: Multiplication) -> Tuple[Optional[int], Optional[int]]:
    """Solvability and nilpotency indices (``None`` when a series stabilizes).

    Derived series: ``A(0) = A``, ``A(s+1) = A(s) * A(s)``; the solvability
    index is the first s with ``A(s) = 0``.  Nilpotency uses the filtration
    ``A^1 = A``, ``A^k = sum_{p+q=k} A^p * A^q`` (which covers every
    bracketing by induction) and reports the first k with ``A^k = 0``.
    """
    _require_rational(m)
    n = m.dim

    solvability = None
    current = Subspace.full(n)
    for step in range(1, n + 2):
        nxt = _product_space(m, current, current)
        if nxt.dim == 0:
            solvability = step
            break
        if nxt.dim == current.dim and nxt <= current:
            break
        current = nxt

    nilpotency = None
    powers = {1: Subspace.full(n)}
    k = 1
    while True:
        k += 1
        pieces = [_product_space(m, powers[p], powers[k - p]) for p in range(1, k)]
        space = _sum_spaces(n, pieces)
        if space.dim == 0:
            nilpotency = k
            break
        if space.dim == powers[k - 1].dim:
            break
        powers[k] = space
    return solvability, nilpotency


def apply_basis_change(m: Multiplication, matrix: Sequence[Sequence[Fraction]]) -> Multiplication:
    """The same product expressed in the new basis ``e*_i = sum_j M[j][i] e_j``."""
    n = m.dim
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise DimMismatch("basis-change matrix has the wrong shape")
    inverse = linsolve.mat_inverse(matrix)
    columns = [Element([Poly.const(matrix[j][i]) for j in range(n)]) for i in range(n)]
    tensor = []
    for i in range(n):
        plane = []
        for j in range(n):
            product = multiply(m, columns[i], columns[j])
            plane.append(linsolve.mat_vec_poly(inverse, list(product.coords)))
        tensor.append(plane)
    return Multiplication(tensor)


def verify_isomorphism(
    matrix: Sequence[Sequence[Fraction]], a: Multiplication, b: Multiplication
) -> bool:
    """True iff the basis change by ``matrix`` carries ``a`` onto ``b``.

    Concretely: the linear map sending basis vector i of ``b`` to column i
    of ``matrix`` (in the basis of ``a``) is then an algebra isomorphism
    from ``b`` to ``a``.
    """
    if a.dim != b.dim:
        raise DimMismatch("algebras have different dimensions")
    return apply_basis_change(a, matrix) == b
