"""Exact linear algebra over the rationals.

Matrices are plain lists of lists of ``Fraction``; everything is done by
fraction-free-enough Gaussian elimination (exact ``Fraction`` arithmetic,
first nonzero pivot).  On top of the matrix kernel sits ``solve_linear``,
which takes polynomial equations that are affine in a designated unknown
set and returns the full solution space with pivot unknowns expressed as
affine polynomials in the free ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .errors import InconsistentSystem, NonlinearInput, SingularMatrix
from .poly import Poly

Vector = List[Fraction]
Matrix = List[List[Fraction]]


def _clone(rows: Sequence[Sequence[Fraction]]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows: Sequence[Sequence[Fraction]]) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and the pivot column indices."""
    m = _clone(rows)
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: List[int] = []
    r = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][col]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = m[r][col]
        m[r] = [x / inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r] + [[Fraction(0)] * ncols for _ in range(len(m) - r)], pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> List[Vector]:
    """A basis of the right kernel of the matrix (``ncols`` unknowns)."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis: List[Vector] = []
    for free in free_cols:
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row, pcol in zip(reduced, pivots):
            vec[pcol] = -row[free]
        basis.append(vec)
    return basis


def mat_identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_mul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    if a and len(a[0]) != k:
        raise ValueError("matrix shape mismatch")
    return [
        [sum((a[i][t] * b[t][j] for t in range(k)), Fraction(0)) for j in range(m)]
        for i in range(n)
    ]


def mat_inverse(a: Sequence[Sequence[Fraction]]) -> Matrix:
    n = len(a)
    if any(len(row) != n for row in a):
        raise SingularMatrix("matrix is not square")
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is not invertible")
    return [row[n:] for row in reduced[:n]]


def mat_vec(a: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> Vector:
    return [sum((row[j] * v[j] for j in range(len(v))), Fraction(0)) for row in a]


def mat_vec_poly(a: Sequence[Sequence[Fraction]], v: Sequence[Poly]) -> List[Poly]:
    """Rational matrix applied to a vector of polynomials."""
    out = []
    for row in a:
        acc = Poly.zero()
        for coeff, entry in zip(row, v):
            if coeff:
                acc = acc + entry * coeff
        out.append(acc)
    return out


def in_span(basis: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> bool:
    """Whether ``v`` lies in the row span of ``basis``."""
    rows = [list(map(Fraction, b)) for b in basis]
    base_rank = rank(rows)
    return rank(rows + [list(map(Fraction, v))]) == base_rank


@dataclass(frozen=True)
class LinearSolution:
    """Affine solution space of a linear system.

    ``assignments`` maps each pivot unknown to an affine polynomial in the
    free unknowns; every unknown not listed there is free.
    """

    unknowns: Tuple[str, ...]
    assignments: Dict[str, Poly]
    free: Tuple[str, ...]

    def substitute(self, p: Poly) -> Poly:
        return p.substitute(self.assignments)

    def kernel_dim(self) -> int:
        return len(self.free)


def solve_linear(system: Sequence[Poly], unknowns: Sequence[str]) -> LinearSolution:
    """Solve polynomial equations that are affine in ``unknowns``.

    Coefficients must be rational (no other indeterminates may appear);
    the full affine solution space is returned.  Raises
    :class:`NonlinearInput` for degree >= 2 or foreign symbols and
    :class:`InconsistentSystem` when no solution exists.
    """
    unknowns = list(unknowns)
    index = {name: i for i, name in enumerate(unknowns)}
    rows: Matrix = []
    for p in system:
        row = [Fraction(0)] * (len(unknowns) + 1)
        for mono, coeff in p.terms.items():
            if not mono:
                row[-1] += coeff
                continue
            if len(mono) != 1 or mono[0][1] != 1:
                raise NonlinearInput(f"not affine in the unknowns: {p}")
            name = mono[0][0]
            if name not in index:
                raise NonlinearInput(f"foreign symbol {name!r} in {p}")
            row[index[name]] += coeff
        rows.append(row)

    reduced, pivots = rref(rows) if rows else ([], [])
    ncols = len(unknowns)
    if ncols in pivots:
        raise InconsistentSystem("system has no solution")

    assignments: Dict[str, Poly] = {}
    pivot_set = set(pivots)
    for row, pcol in zip(reduced, pivots):
        value = Poly.const(-row[-1])
        for col in range(ncols):
            if col != pcol and col not in pivot_set and row[col]:
                value = value - Poly.var(unknowns[col]) * row[col]
        assignments[unknowns[pcol]] = value
    free = tuple(name for name in unknowns if name not in assignments)

    for p in system:
        if not p.substitute(assignments).is_zero():
            raise AssertionError("linear solve failed to satisfy the system")
    return LinearSolution(tuple(unknowns), assignments, free)
