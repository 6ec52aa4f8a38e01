"""Polynomial identities in one or several multiplications, checked exactly.

A ``Term`` is a binary product tree over numbered variables; an
``IdentitySpec`` is a rational linear combination of such trees.  The
checker substitutes a generic element (fresh symbolic coordinates) for
every variable and expands: over the rationals a polynomial vanishes
identically iff all its coefficients vanish, so this is a complete
decision procedure, including for non-multilinear identities such as the
Jordan identity.

The ``builtin`` registry returns, for each named variety, the tuple of
identity specs that define it (several for bundled definitions such as
``mock_lie`` = commutative + Jacobi).  Two-slot names follow a fixed slot
convention: slot 0 is the plain/juxtaposition product, slot 1 the
decorated one (bracket or circle).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple, Union

from .algebra import Element, Multiplication, Subspace, centralizer, multiply
from .errors import DimMismatch, SlotMismatch, SymbolicCoefficient, SymbolicEntries, UnknownIdentity
from .poly import Poly


class Term:
    """Node of a binary product tree."""

    __slots__ = ()


@dataclass(frozen=True)
class Var(Term):
    index: int


@dataclass(frozen=True)
class App(Term):
    slot: int
    left: Term
    right: Term


@dataclass(frozen=True)
class IdentitySpec:
    name: str
    nvars: int
    nslots: int
    terms: Tuple[Tuple[Fraction, Term], ...]


@dataclass(frozen=True)
class Verdict:
    holds: bool
    obstructions: Tuple[Poly, ...]


SpecOrBundle = Union[IdentitySpec, Sequence[IdentitySpec]]


# -- spec construction helpers ----------------------------------------------

_X, _Y, _Z, _T = Var(0), Var(1), Var(2), Var(3)

Lin = List[Tuple[Fraction, Term]]


def _one(term: Term) -> Lin:
    return [(Fraction(1), term)]


def _scale(c, lin: Lin) -> Lin:
    c = Fraction(c)
    return [(c * coeff, term) for coeff, term in lin]


def _add(*parts: Lin) -> Lin:
    out: Lin = []
    for part in parts:
        out.extend(part)
    return out


def _sub(a: Lin, b: Lin) -> Lin:
    return _add(a, _scale(-1, b))


def _ap(slot: int, left: Lin, right: Lin) -> Lin:
    return [
        (cl * cr, App(slot, tl, tr))
        for cl, tl in left
        for cr, tr in right
    ]


def _v(term: Term) -> Lin:
    return _one(term)


def _mk(name: str, nvars: int, lin: Lin, nslots: int = 1) -> IdentitySpec:
    merged: Dict[Term, Fraction] = {}
    for coeff, term in lin:
        merged[term] = merged.get(term, Fraction(0)) + coeff
    terms = tuple((c, t) for t, c in merged.items() if c)
    if not terms:
        raise ValueError(f"identity {name!r} reduced to the empty combination")
    return IdentitySpec(name, nvars, nslots, terms)


def _associator(x: Lin, y: Lin, z: Lin, slot: int = 0) -> Lin:
    return _sub(_ap(slot, _ap(slot, x, y), z), _ap(slot, x, _ap(slot, y, z)))


def _jacobiator(x: Lin, y: Lin, z: Lin, slot: int = 0) -> Lin:
    return _add(
        _ap(slot, _ap(slot, x, y), z),
        _ap(slot, _ap(slot, z, x), y),
        _ap(slot, _ap(slot, y, z), x),
    )


def reslot(spec: IdentitySpec, nslots: int, mapping: Dict[int, int]) -> IdentitySpec:
    """Reindex the multiplication slots of a spec inside a larger slot set."""

    def walk(term: Term) -> Term:
        if isinstance(term, Var):
            return term
        return App(mapping[term.slot], walk(term.left), walk(term.right))

    terms = tuple((c, walk(t)) for c, t in spec.terms)
    return IdentitySpec(spec.name, spec.nvars, nslots, terms)


def _build_registry() -> Dict[str, Tuple[IdentitySpec, ...]]:
    x, y, z, t = _v(_X), _v(_Y), _v(_Z), _v(_T)
    m = lambda a, b: _ap(0, a, b)

    commutative = _mk("commutative", 2, _sub(m(x, y), m(y, x)))
    anticommutative = _mk("anticommutative", 2, _add(m(x, y), m(y, x)))
    associative = _mk("associative", 3, _associator(x, y, z))
    anti_associative = _mk("anti_associative", 3, _add(m(m(x, y), z), m(x, m(y, z))))
    flexible = _mk("flexible", 2, _sub(m(m(x, y), x), m(x, m(y, x))))
    middle_commutative = _mk("middle_commutative", 3, _sub(m(m(x, y), z), m(z, m(y, x))))
    pseudo_flexible = _mk("pseudo_flexible", 2, _sub(m(x, m(x, y)), m(m(y, x), x)))
    weakly_associative = _mk(
        "weakly_associative",
        3,
        _sub(_add(_associator(x, y, z), _associator(y, z, x)), _associator(y, x, z)),
    )
    left_symmetric = _mk("left_symmetric", 3, _sub(_associator(x, y, z), _associator(y, x, z)))
    right_symmetric = _mk("right_symmetric", 3, _sub(_associator(x, y, z), _associator(x, z, y)))
    right_commutative = _mk("right_commutative", 3, _sub(m(m(x, y), z), m(m(x, z), y)))
    left_commutative = _mk("left_commutative", 3, _sub(m(x, m(y, z)), m(y, m(x, z))))
    right_leibniz = _mk(
        "right_leibniz", 3, _sub(m(m(x, y), z), _add(m(m(x, z), y), m(x, m(y, z))))
    )
    right_zinbiel = _mk(
        "right_zinbiel", 3, _sub(m(m(x, y), z), _add(m(x, m(y, z)), m(x, m(z, y))))
    )
    jacobi = _mk("jacobi", 3, _jacobiator(x, y, z))
    xx = m(x, x)
    jordan = _mk("jordan", 2, _sub(m(m(xx, y), x), m(xx, m(y, x))))
    almost_jordan = _mk(
        "almost_jordan",
        2,
        _sub(
            _add(_scale(2, m(m(m(y, x), x), x)), m(y, m(xx, x))),
            _scale(3, m(m(y, xx), x)),
        ),
    )
    binary_lie_j = _mk(
        "binary_lie_jacobiator",
        2,
        _add(m(m(m(x, y), x), y), m(m(y, m(x, y)), x), m(m(x, y), m(x, y))),
    )
    almost_lie_2_j = _mk("jacobiator_times_t", 4, _ap(0, _jacobiator(x, y, z), t))
    two_sided_zero = _mk("squares_annihilate_left", 3, _ap(0, _add(m(x, y), m(y, x)), z))
    left_alternative = _mk("left_alternative", 2, _sub(m(xx, y), m(x, m(x, y))))
    right_alternative = _mk("right_alternative", 2, _sub(m(m(y, x), x), m(y, xx)))
    assoc_alt_12 = _mk("associator_alternating_12", 3, _add(_associator(x, y, z), _associator(y, x, z)))
    assoc_cyclic = _mk("associator_cyclic", 3, _sub(_associator(x, y, z), _associator(y, z, x)))

    # Two-slot specs: slot 0 carries the plain product, slot 1 the bracket
    # or circle product.
    d = lambda a, b: _ap(0, a, b)
    s = lambda a, b: _ap(1, a, b)
    leibniz_rule = _mk(
        "leibniz_rule", 3, _sub(s(x, d(y, z)), _add(d(s(x, y), z), d(y, s(x, z)))), nslots=2
    )
    dual_leibniz_rule = _mk(
        "dual_leibniz_rule",
        3,
        _sub(_scale(2, d(z, s(x, y))), _add(s(d(z, x), y), s(x, d(z, y)))),
        nslots=2,
    )
    nva = _mk("novikov_poisson_nva", 3, _sub(s(x, d(y, z)), d(s(x, y), z)), nslots=2)
    nvb = _mk(
        "novikov_poisson_nvb",
        3,
        _sub(
            _sub(s(d(x, y), z), d(x, s(y, z))),
            _sub(s(d(x, z), y), d(x, s(z, y))),
        ),
        nslots=2,
    )
    prelie_poisson_1 = _mk(
        "prelie_poisson_1", 3, _sub(s(d(x, y), z), d(x, s(y, z))), nslots=2
    )
    prelie_poisson_2 = _mk(
        "prelie_poisson_2",
        3,
        _sub(
            _sub(d(s(x, y), z), d(s(y, x), z)),
            _sub(s(x, d(y, z)), s(y, d(x, z))),
        ),
        nslots=2,
    )
    postlie_2 = _mk(
        "postlie_2", 3, _sub(d(s(x, y), z), _sub(d(x, d(y, z)), d(y, d(x, z)))), nslots=2
    )
    postlie_3 = _mk(
        "postlie_3", 3, _sub(d(x, s(y, z)), _add(s(d(x, y), z), s(y, d(x, z)))), nslots=2
    )

    def on_dot(spec: IdentitySpec) -> IdentitySpec:
        return reslot(spec, 2, {0: 0})

    def on_second(spec: IdentitySpec) -> IdentitySpec:
        return reslot(spec, 2, {0: 1})

    registry: Dict[str, Tuple[IdentitySpec, ...]] = {
        "commutative": (commutative,),
        "anticommutative": (anticommutative,),
        "associative": (associative,),
        "anti_associative": (anti_associative,),
        "flexible": (flexible,),
        "middle_commutative": (middle_commutative,),
        "pseudo_flexible": (pseudo_flexible,),
        "weakly_associative": (weakly_associative,),
        "left_symmetric": (left_symmetric,),
        "right_symmetric": (right_symmetric,),
        "right_commutative": (right_commutative,),
        "left_commutative": (left_commutative,),
        "right_leibniz": (right_leibniz,),
        "right_zinbiel": (right_zinbiel,),
        "right_novikov": (right_commutative, left_symmetric),
        "left_novikov": (left_commutative, right_symmetric),
        "jacobi": (jacobi,),
        "jordan": (jordan,),
        "almost_jordan": (almost_jordan,),
        "mock_lie": (commutative, jacobi),
        "binary_lie": (anticommutative, binary_lie_j),
        "almost_lie_1": (middle_commutative, jacobi),
        "almost_lie_2": (anticommutative, almost_lie_2_j),
        "two_sided_leibniz": (middle_commutative, jacobi, two_sided_zero),
        "alternative": (left_alternative, right_alternative),
        "left_alternative": (left_alternative,),
        "right_alternative": (right_alternative,),
        "quasi_commutative_associative": (middle_commutative, associative),
        "quasi_commutative_alternative": (middle_commutative, assoc_alt_12, assoc_cyclic),
        "quasi_commutative_jordan": (middle_commutative, jordan),
        "noncommutative_jordan": (flexible, jordan),
        "leibniz_rule": (leibniz_rule,),
        "dual_leibniz_rule": (dual_leibniz_rule,),
        "novikov_poisson_nva": (nva,),
        "novikov_poisson_nvb": (nvb,),
        "prelie_poisson_1": (prelie_poisson_1,),
        "prelie_poisson_2": (prelie_poisson_2,),
        "postlie_2": (postlie_2,),
        "postlie_3": (postlie_3,),
        "transposed_poisson": (
            on_dot(commutative),
            on_dot(associative),
            on_second(anticommutative),
            on_second(jacobi),
            dual_leibniz_rule,
        ),
        "poisson": (
            on_dot(commutative),
            on_dot(associative),
            on_second(anticommutative),
            on_second(jacobi),
            leibniz_rule,
        ),
        "generic_poisson": (on_second(anticommutative), leibniz_rule),
        "left_novikov_poisson": (
            on_dot(commutative),
            on_dot(associative),
            on_second(left_commutative),
            on_second(right_symmetric),
            nva,
            nvb,
        ),
        "right_prelie_poisson": (
            on_dot(commutative),
            on_dot(associative),
            on_second(left_symmetric),
            prelie_poisson_1,
            prelie_poisson_2,
        ),
    }
    return registry


_REGISTRY = _build_registry()


def builtin(name: str) -> Tuple[IdentitySpec, ...]:
    """The identity bundle registered under ``name`` (often a single spec)."""
    try:
        return _REGISTRY[name]
    except KeyError:
        raise UnknownIdentity(f"no identity named {name!r}") from None


def builtin_names() -> Tuple[str, ...]:
    return tuple(sorted(_REGISTRY))


# -- the checker -------------------------------------------------------------

def fresh_generic_names(nvars: int, dim: int, avoid: Iterable[str]) -> List[List[str]]:
    """Coordinate names for generic elements, disjoint from ``avoid``."""
    avoid = set(avoid)
    prefix = "x"
    while any(f"{prefix}{v + 1}_{i + 1}" in avoid for v in range(nvars) for i in range(dim)):
        prefix += "x"
    return [[f"{prefix}{v + 1}_{i + 1}" for i in range(dim)] for v in range(nvars)]


def _eval_term(term: Term, mults: Sequence[Multiplication], elements: Sequence[Element]) -> Element:
    if isinstance(term, Var):
        return elements[term.index]
    left = _eval_term(term.left, mults, elements)
    right = _eval_term(term.right, mults, elements)
    return multiply(mults[term.slot], left, right)


def _expand(spec: IdentitySpec, mults: Sequence[Multiplication], elements: Sequence[Element]) -> Element:
    dim = mults[0].dim
    total = Element.zero(dim)
    for coeff, term in spec.terms:
        total = total + _eval_term(term, mults, elements).scale(coeff)
    return total


def _monomial_ideal_reduce(p: Poly, generators: Sequence[Poly]) -> Poly:
    """Remainder of ``p`` modulo a monomial ideal given by monomial generators."""
    gens = []
    for g in generators:
        if g.is_zero():
            continue
        if len(g.terms) != 1:
            raise ValueError(f"constraint {g} is not a single monomial")
        (mono, _), = g.terms.items()
        gens.append(dict(mono))
    if not gens:
        return p
    kept = {}
    for mono, coeff in p.terms.items():
        exps = dict(mono)
        divisible = any(
            all(exps.get(name, 0) >= e for name, e in gen.items()) for gen in gens
        )
        if not divisible:
            kept[mono] = coeff
    return Poly(kept)


def _normalize_specs(spec: SpecOrBundle) -> Tuple[IdentitySpec, ...]:
    if isinstance(spec, IdentitySpec):
        return (spec,)
    return tuple(spec)


def check_identity(
    mults: Union[Multiplication, Sequence[Multiplication]],
    spec: SpecOrBundle,
    modulo: Sequence[Poly] = (),
) -> Verdict:
    """Decide whether the identities hold for the given multiplications.

    Obstructions are the coefficients of the generic-coordinate monomials
    that fail to vanish: polynomials in whatever parameters remain in the
    structure constants.  ``modulo`` reduces obstructions by a monomial
    ideal first (used for tables carrying side constraints such as
    ``ab = 0``).
    """
    if isinstance(mults, Multiplication):
        mults = [mults]
    mults = list(mults)
    specs = _normalize_specs(spec)
    if not mults:
        raise SlotMismatch("no multiplications supplied")
    dim = mults[0].dim
    if any(m.dim != dim for m in mults):
        raise DimMismatch("multiplications act on different dimensions")

    avoid = set()
    for m in mults:
        avoid |= m.names()
    for g in modulo:
        avoid |= g.names()

    obstructions: List[Poly] = []
    seen = set()
    for one in specs:
        if one.nslots != len(mults):
            raise SlotMismatch(
                f"identity {one.name!r} needs {one.nslots} multiplications, got {len(mults)}"
            )
        names = fresh_generic_names(one.nvars, dim, avoid)
        generic = set(n for group in names for n in group)
        elements = [Element([Poly.var(n) for n in group]) for group in names]
        result = _expand(one, mults, elements)
        for coordinate in result.coords:
            for _, coeff in coordinate.split_by(generic).items():
                reduced = _monomial_ideal_reduce(coeff, modulo)
                if not reduced.is_zero():
                    key = str(reduced)
                    if key not in seen:
                        seen.add(key)
                        obstructions.append(reduced)
    return Verdict(not obstructions, tuple(obstructions))


def check_ann_equality(
    mults: Union[Multiplication, Sequence[Multiplication]],
    lhs: IdentitySpec,
    rhs: IdentitySpec,
    ann: Subspace,
) -> Verdict:
    """Whether lhs - rhs lands in the given annihilator for all arguments.

    Expands the difference with generic coordinates; for each monomial in
    the generic coordinates, the vector of coefficients (one per basis
    index) must be rational and must lie in the span of ``ann``.
    """
    if isinstance(mults, Multiplication):
        mults = [mults]
    mults = list(mults)
    dim = mults[0].dim
    if ann.ambient != dim:
        raise DimMismatch("annihilator ambient dimension differs")
    if lhs.nslots != len(mults) or rhs.nslots != len(mults):
        raise SlotMismatch("slot count differs from the number of multiplications")
    nvars = max(lhs.nvars, rhs.nvars)

    avoid = set()
    for m in mults:
        avoid |= m.names()
    names = fresh_generic_names(nvars, dim, avoid)
    generic = set(n for group in names for n in group)
    elements = [Element([Poly.var(n) for n in group]) for group in names]

    diff = _expand(lhs, mults, elements) - _expand(rhs, mults, elements)
    by_monomial: Dict[tuple, List[Poly]] = {}
    for k, coordinate in enumerate(diff.coords):
        for mono, coeff in coordinate.split_by(generic).items():
            by_monomial.setdefault(mono, [Poly.zero()] * dim)[k] = coeff

    obstructions: List[Poly] = []
    for mono, vector in sorted(by_monomial.items()):
        values = []
        for coeff in vector:
            if not coeff.is_constant():
                raise SymbolicCoefficient(
                    f"coefficient {coeff} is not rational; substitute parameters first"
                )
            values.append(coeff.constant_value())
        if not ann.contains(values):
            witness = Poly({mono: Fraction(1)})
            combo = Poly.zero()
            for k, value in enumerate(values):
                if value:
                    combo = combo + Poly.var(f"E{k + 1}") * value
            obstructions.append(witness * combo)
    return Verdict(not obstructions, tuple(obstructions))


# -- probe-based CB/CL reports -----------------------------------------------

@dataclass(frozen=True)
class CBResult:
    """Commutative-bonding check for one ordered probe pair with x*y = 0."""

    pair: Tuple[int, int]
    holds: bool
    failures: Tuple[int, ...]


@dataclass(frozen=True)
class CLResult:
    """Whether the centralizer of one probe is closed under multiplication."""

    probe: int
    centralizer_dim: int
    holds: bool
    failures: Tuple[str, ...]


@dataclass(frozen=True)
class ProbeReport:
    cb: Tuple[CBResult, ...]
    cl: Tuple[CLResult, ...]

    @property
    def all_pass(self) -> bool:
        return all(r.holds for r in self.cb) and all(r.holds for r in self.cl)


def probe_cb_cl(m: Multiplication, probes: Sequence[Element]) -> ProbeReport:
    """Sample commutative-bonding and centralizer-ideal behavior.

    For every ordered probe pair (x, y) with x*y = 0 the CB check asks
    that (x*e_z)*y = 0 for all basis z; for every probe x the CL check
    asks that the centralizer of x be closed under left and right
    multiplication by basis elements.  This is a probe report, not a
    universal verification.
    """
    if not m.is_rational():
        raise SymbolicEntries("probe checks need a rational multiplication")
    for p in probes:
        if not p.is_rational():
            raise SymbolicEntries("probes must be rational elements")
    n = m.dim
    basis = [Element.basis(n, i) for i in range(n)]

    cb: List[CBResult] = []
    for i, x in enumerate(probes):
        for j, y in enumerate(probes):
            if not multiply(m, x, y).is_zero():
                continue
            failures = tuple(
                z for z in range(n) if not multiply(m, multiply(m, x, basis[z]), y).is_zero()
            )
            cb.append(CBResult((i, j), not failures, failures))

    cl: List[CLResult] = []
    for i, x in enumerate(probes):
        space = centralizer(m, x)
        failures = []
        for v in space.basis_elements():
            for z in range(n):
                for tag, w in (("left", multiply(m, basis[z], v)), ("right", multiply(m, v, basis[z]))):
                    if not space.contains([c.constant_value() for c in w.coords]):
                        failures.append(f"{tag}:e{z + 1}")
        cl.append(CLResult(i, space.dim, not failures, tuple(sorted(set(failures)))))
    return ProbeReport(tuple(cb), tuple(cl))
