"""The Kantor product and square of multiplications.

For multiplications A, B on the same space and a fixed vector u, the
(left) Kantor product is the bilinear product

    [[A, B]](x, y) = A(u, B(x, y)) - B(A(u, x), y) - B(x, A(u, y)),

and the Kantor square is the special case B = A.  The right product is
the mirror form

    [[A, B]]_r(x, y) = A(B(x, y), u) - B(A(x, u), y) - B(x, A(y, u)),

which agrees with the left square exactly on weakly associative algebras.
When no u is supplied, a symbolic vector with fresh coordinates (u1, ...,
un by default) is used, so the resulting tensor stays linear in the
u-coordinates.
"""

from __future__ import annotations

from .algebra import Element, Multiplication, multiply
from .errors import DimMismatch


def symbolic_vector(dim: int, avoid=()) -> Element:
    """A symbolic vector whose coordinate names avoid the given set."""
    avoid = set(avoid)
    prefix = "u"
    while any(f"{prefix}{i + 1}" in avoid for i in range(dim)):
        prefix = {"u": "v", "v": "w"}.get(prefix, prefix + "u")
    return Element.symbolic(prefix, dim)


def _resolve_u(a: Multiplication, b: Multiplication, u: Element | None) -> Element:
    if u is None:
        return symbolic_vector(a.dim, a.names() | b.names())
    if u.dim != a.dim:
        raise DimMismatch("reference vector has the wrong dimension")
    return u


def kantor_product(a: Multiplication, b: Multiplication, u: Element | None = None) -> Multiplication:
    """The left Kantor product [[a, b]] with respect to u (symbolic if omitted)."""
    if a.dim != b.dim:
        raise DimMismatch("multiplications act on different dimensions")
    u = _resolve_u(a, b, u)
    n = a.dim
    basis = [Element.basis(n, i) for i in range(n)]
    au = [multiply(a, u, e) for e in basis]
    tensor = []
    for i in range(n):
        plane = []
        for j in range(n):
            value = (
                multiply(a, u, multiply(b, basis[i], basis[j]))
                - multiply(b, au[i], basis[j])
                - multiply(b, basis[i], au[j])
            )
            plane.append(list(value.coords))
        tensor.append(plane)
    return Multiplication(tensor)


def kantor_square(a: Multiplication, u: Element | None = None) -> Multiplication:
    """The Kantor square [[a, a]] with respect to u (symbolic if omitted)."""
    return kantor_product(a, a, u)


def right_kantor_product(a: Multiplication, b: Multiplication, u: Element | None = None) -> Multiplication:
    """The mirror (right) Kantor product with respect to u."""
    if a.dim != b.dim:
        raise DimMismatch("multiplications act on different dimensions")
    u = _resolve_u(a, b, u)
    n = a.dim
    basis = [Element.basis(n, i) for i in range(n)]
    ua = [multiply(a, e, u) for e in basis]
    tensor = []
    for i in range(n):
        plane = []
        for j in range(n):
            value = (
                multiply(a, multiply(b, basis[i], basis[j]), u)
                - multiply(b, ua[i], basis[j])
                - multiply(b, basis[i], ua[j])
            )
            plane.append(list(value.coords))
        tensor.append(plane)
    return Multiplication(tensor)
