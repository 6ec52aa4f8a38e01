"""Classification of Poisson and commutative post-Lie structures.

The pipeline is the constructive two-stage method: an exact linear stage
expressed through Kantor products with a symbolic reference vector,
followed by a quadratic stage solved by branching triangular
decomposition (``case_split_solve``).

Stage-1 conventions.  The unknown bracket/product is an antisymmetric or
symmetric tensor with fresh coefficients g<pair>_<k>.  For post-Lie
structures the linear constraint is [[a, l]] = 0 for all u, which is
exactly the identity  x.[y,z] = [x.y, z] + [y, x.z].  For Poisson-type
structures both mixed Kantor products are required to vanish for all u:
[[l, a]] = 0 is the Leibniz rule, and [[a, l]] = 0 is the companion
condition that multiplication operators act as derivations of the
bracket; the worked two-dimensional classification pins both.  The
fixed-reference variant of stage 1 (a weaker, tabulated filter) is also
available for comparison via the ``fixed_u`` argument.

Every returned family is re-verified against the defining identities of
the structure by direct expansion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .algebra import Algebra, Element, Multiplication
from .errors import LieCheckFailed, SymbolicEntries
from .identities import builtin, check_identity, reslot
from .linsolve import LinearSolution, solve_linear
from .poly import Poly
from .product import kantor_product, symbolic_vector

RationalValue = Tuple[Poly, Poly]


@dataclass(frozen=True)
class SolutionFamily:
    """One branch of a classification.

    ``assignment`` maps solved unknowns to (numerator, denominator) pairs
    in the free unknowns; denominators other than 1 only appear when a
    branch pivoted on a non-constant coefficient, and that coefficient is
    then recorded among the inequations.  ``equations`` holds residual
    constraints that were not resolved within the branching depth.
    """

    unknowns: Tuple[str, ...]
    assignment: Mapping[str, RationalValue]
    free: Tuple[str, ...]
    equations: Tuple[Poly, ...]
    inequations: Tuple[Poly, ...]
    label: str

    def is_polynomial(self) -> bool:
        return all(den == 1 for _, den in self.assignment.values())

    def polynomial_assignment(self) -> Dict[str, Poly]:
        if not self.is_polynomial():
            raise ValueError("family has rational-function assignments")
        return {name: num for name, (num, den) in self.assignment.items()}

    def tensor(self, ansatz: Multiplication) -> Optional[Multiplication]:
        """The parameterized multiplication of this family, when polynomial."""
        if not self.is_polynomial():
            return None
        return ansatz.substitute(self.polynomial_assignment())

    def evaluate(self, point: Mapping[str, Fraction]) -> Optional[Dict[str, Fraction]]:
        """Full unknown values at a rational point of the free parameters.

        Returns ``None`` when the point violates an inequation or a
        residual equation.
        """
        values: Dict[str, Fraction] = {name: Fraction(v) for name, v in point.items()}
        for q in self.inequations:
            if q.substitute(values).constant_value() == 0:
                return None
        for q in self.equations:
            if q.substitute(values).constant_value() != 0:
                return None
        for name, (num, den) in self.assignment.items():
            d = den.substitute(values).constant_value()
            if d == 0:
                return None
            values[name] = num.substitute(values).constant_value() / d
        for name in self.unknowns:
            values.setdefault(name, Fraction(0))
        return values

    def describe(self) -> str:
        parts = []
        for name in self.unknowns:
            if name in self.assignment:
                num, den = self.assignment[name]
                parts.append(f"{name} = {num}" if den == 1 else f"{name} = ({num})/({den})")
        if self.free:
            parts.append("free: " + ", ".join(self.free))
        if self.equations:
            parts.append("residual: " + "; ".join(str(q) + " = 0" for q in self.equations))
        if self.inequations:
            parts.append("assuming: " + "; ".join(str(q) + " != 0" for q in self.inequations))
        return "; ".join(parts) if parts else "unconstrained"


# -- polynomial helpers -------------------------------------------------------

def _coeffs_in(p: Poly, name: str) -> Dict[int, Poly]:
    """Coefficients of the powers of ``name``: p = sum_k coeffs[k] * name^k."""
    groups: Dict[int, Dict] = {}
    for mono, coeff in p.terms.items():
        e = 0
        rest = []
        for n, exp in mono:
            if n == name:
                e = exp
            else:
                rest.append((n, exp))
        bucket = groups.setdefault(e, {})
        key = tuple(rest)
        bucket[key] = bucket.get(key, Fraction(0)) + coeff
    return {e: Poly(bucket) for e, bucket in groups.items()}


def _subst_rational(p: Poly, name: str, num: Poly, den: Poly) -> Poly:
    """p with ``name := num/den``, cleared of denominators (den assumed nonzero)."""
    parts = _coeffs_in(p, name)
    degree = max(parts) if parts else 0
    total = Poly.zero()
    for e, coeff in parts.items():
        total = total + coeff * num ** e * den ** (degree - e)
    return total


def _subst_rational_pair(
    value: RationalValue, name: str, num: Poly, den: Poly
) -> RationalValue:
    """A rational value with ``name := num/den`` substituted in num and den."""
    vnum, vden = value
    deg = max(
        max(_coeffs_in(vnum, name), default=0),
        max(_coeffs_in(vden, name), default=0),
    )
    if deg == 0:
        return value

    def clear(p: Poly) -> Poly:
        parts = _coeffs_in(p, name)
        total = Poly.zero()
        for e, coeff in parts.items():
            total = total + coeff * num ** e * den ** (deg - e)
        return total

    new_num, new_den = clear(vnum), clear(vden)
    if new_den.is_constant():
        new_num = new_num / new_den.constant_value()
        new_den = Poly.const(1)
    return new_num, new_den


def _content_normalize(p: Poly) -> Poly:
    """Divide by the rational content and fix the leading sign."""
    if p.is_zero():
        return p
    coeffs = list(p.terms.values())
    num_gcd = math.gcd(*(abs(c.numerator) for c in coeffs))
    den_lcm = 1
    for c in coeffs:
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    scale = Fraction(den_lcm, num_gcd if num_gcd else 1)
    q = p * scale
    lead = min(q.terms)
    if q.terms[lead] < 0:
        q = -q
    return q


def _rational_sqrt(value: Fraction) -> Optional[Fraction]:
    if value < 0:
        return None
    num = math.isqrt(value.numerator)
    den = math.isqrt(value.denominator)
    if num * num == value.numerator and den * den == value.denominator:
        return Fraction(num, den)
    return None


def _univariate_roots(p: Poly, name: str) -> Optional[List[Fraction]]:
    """Rational roots of a univariate polynomial of degree <= 2, else None."""
    parts = _coeffs_in(p, name)
    coeffs = {e: c.constant_value() for e, c in parts.items()}
    degree = max(coeffs)
    if degree == 1:
        return [-coeffs.get(0, Fraction(0)) / coeffs[1]]
    if degree == 2:
        a = coeffs[2]
        b = coeffs.get(1, Fraction(0))
        c = coeffs.get(0, Fraction(0))
        root = _rational_sqrt(b * b - 4 * a * c)
        if root is None:
            return None
        return sorted(set([(-b + root) / (2 * a), (-b - root) / (2 * a)]))
    return None


# -- the case-splitting solver ------------------------------------------------

def _monomial_names(p: Poly) -> Optional[List[str]]:
    """The variable names of a single-term polynomial, else None."""
    if len(p.terms) != 1:
        return None
    (mono, _), = p.terms.items()
    if not mono:
        return None
    return [name for name, _ in mono]


def _split_inequation(q: Poly) -> List[Poly]:
    """Factor the monomial content: m * p != 0 iff each variable of m and p != 0."""
    common = None
    for mono, _ in q.terms.items():
        exps = dict(mono)
        if common is None:
            common = exps
        else:
            common = {n: min(e, common[n]) for n, e in exps.items() if n in common}
        if not common:
            break
    parts = [Poly.var(name) for name in sorted(common or {})]
    if common:
        stripped = {}
        for mono, coeff in q.terms.items():
            exps = dict(mono)
            for name, e in common.items():
                exps[name] -= e
            stripped[tuple(sorted((n, e) for n, e in exps.items() if e))] = coeff
        rest = _content_normalize(Poly(stripped))
    else:
        rest = _content_normalize(q)
    if not rest.is_constant():
        parts.append(rest)
    return parts


def case_split_solve(
    equations: Sequence[Poly], unknowns: Sequence[str], max_depth: int = 16
) -> List[SolutionFamily]:
    """Solve a polynomial system over the rationals by branch decomposition.

    Strategy, in order: eliminate unknowns occurring linearly with a
    rational coefficient; split univariate equations of degree at most
    two at their rational roots; split monomial equations into disjoint
    variable-vanishing branches; otherwise branch on a linear occurrence
    whose coefficient c is a polynomial (one branch assumes c != 0 and
    eliminates, the other adds c = 0).  At the depth cap the remaining
    equations are reported as residuals, never dropped.  Branches whose
    hypotheses become contradictory are pruned.
    """
    unknowns = tuple(unknowns)
    families: List[SolutionFamily] = []

    def normalize(eqs: Sequence[Poly], ineqs: Sequence[Poly]):
        out = []
        seen = set()
        for q in eqs:
            q = _content_normalize(q)
            if q.is_zero():
                continue
            if q.is_constant():
                return None
            key = str(q)
            if key not in seen:
                seen.add(key)
                out.append(q)
        if set(str(q) for q in ineqs) & seen:
            return None
        return out

    def add_inequations(ineqs, q):
        """Extend the hypothesis list with the factors of q; None if q is 0."""
        q = _content_normalize(q)
        if q.is_zero():
            return None
        out = list(ineqs)
        for part in _split_inequation(q):
            if str(part) not in set(str(r) for r in out):
                out.append(part)
        return out

    def substitute_all(eqs, ineqs, name, num, den):
        new_eqs = [_subst_rational(q, name, num, den) for q in eqs]
        new_ineqs: List[Poly] = []
        for q in ineqs:
            q2 = _content_normalize(_subst_rational(q, name, num, den))
            if q2.is_zero():
                return None, None
            if q2.is_constant():
                continue
            updated = add_inequations(new_ineqs, q2)
            if updated is None:
                return None, None
            new_ineqs = updated
        return new_eqs, new_ineqs

    def emit(assign_order, residual, ineqs, labels):
        final: Dict[str, RationalValue] = {}
        for name, value in reversed(assign_order):
            for done, (dnum, dden) in final.items():
                value = _subst_rational_pair(value, done, dnum, dden)
            final[name] = value
        assigned = set(final)
        free = tuple(n for n in unknowns if n not in assigned)
        families.append(
            SolutionFamily(
                unknowns=unknowns,
                assignment=final,
                free=free,
                equations=tuple(residual),
                inequations=tuple(ineqs),
                label="; ".join(labels) if labels else "general",
            )
        )

    def assign_and_descend(eqs, q, name, value, assign_order, ineqs, labels, depth):
        rest = [e for e in eqs if e is not q]
        new_eqs, new_ineqs = substitute_all(rest, ineqs, name, value, Poly.const(1))
        if new_eqs is None:
            return
        descend(new_eqs, assign_order + [(name, (value, Poly.const(1)))], new_ineqs,
                labels, depth)

    def descend(eqs, assign_order, ineqs, labels, depth):
        eqs = normalize(eqs, ineqs)
        if eqs is None:
            return
        if not eqs:
            emit(assign_order, [], ineqs, labels)
            return

        # 1. Unknowns occurring linearly with a rational coefficient.
        for q in eqs:
            for name in unknowns:
                if q.degree_in([name]) != 1:
                    continue
                c = q.coefficient(name)
                if not c.is_constant():
                    continue
                value = -q.drop(name) / c.constant_value()
                assign_and_descend(eqs, q, name, value, assign_order, ineqs, labels, depth)
                return

        # 2. Univariate equations of degree <= 2 with rational roots.
        for q in eqs:
            names = sorted(q.names())
            if len(names) != 1:
                continue
            roots = _univariate_roots(q, names[0])
            if roots is None:
                continue
            for root in roots:
                assign_and_descend(
                    eqs, q, names[0], Poly.const(root), assign_order, ineqs,
                    labels + [f"{names[0]} = {root}"], depth - 1,
                )
            return

        # 3. Monomial equations split into disjoint variable-vanishing branches.
        for q in eqs:
            mono_names = _monomial_names(q)
            if mono_names is None:
                continue
            names = sorted(set(mono_names))
            hypotheses = list(ineqs)
            for pos, name in enumerate(names):
                assign_and_descend(
                    eqs, q, name, Poly.zero(), assign_order, hypotheses,
                    labels + [f"{name} = 0"], depth - 1,
                )
                if pos + 1 < len(names):
                    updated = add_inequations(hypotheses, Poly.var(name))
                    if updated is None:
                        return
                    hypotheses = updated
            return

        # 4. Branch on a linear occurrence with a polynomial coefficient;
        #    prefer the smallest coefficient.
        if depth > 0:
            candidates = []
            for q in eqs:
                for name in unknowns:
                    if q.degree_in([name]) == 1:
                        c = q.coefficient(name)
                        candidates.append((len(c.terms), len(q.terms), name, q, c))
            if candidates:
                candidates.sort(key=lambda item: (item[0], item[1], item[2]))
                _, _, name, q, c = candidates[0]
                d = q.drop(name)
                rest = [e for e in eqs if e is not q]
                branch_ineqs = add_inequations(ineqs, c)
                if branch_ineqs is not None:
                    new_eqs, new_ineqs = substitute_all(rest, branch_ineqs, name, -d, c)
                    if new_eqs is not None:
                        descend(
                            new_eqs,
                            assign_order + [(name, (-d, c))],
                            new_ineqs,
                            labels + [f"{c} != 0"],
                            depth - 1,
                        )
                descend(
                    eqs + [c],
                    assign_order,
                    ineqs,
                    labels + [f"{c} = 0"],
                    depth - 1,
                )
                return

        emit(assign_order, eqs, ineqs, labels + ["depth cap"])

    descend(list(equations), [], [], [], max_depth)
    return families


# -- ansatz construction ------------------------------------------------------

def antisymmetric_ansatz(dim: int) -> Tuple[Multiplication, Tuple[str, ...]]:
    """Generic antisymmetric tensor with unknowns g<pair>_<k> (pairs i<j)."""
    entries = {}
    names: List[str] = []
    pair = 0
    for i in range(1, dim + 1):
        for j in range(i + 1, dim + 1):
            pair += 1
            for k in range(1, dim + 1):
                name = f"g{pair}_{k}"
                names.append(name)
                entries[(i, j, k)] = Poly.var(name)
                entries[(j, i, k)] = -Poly.var(name)
    return Multiplication.from_table(dim, entries), tuple(names)


def symmetric_ansatz(dim: int) -> Tuple[Multiplication, Tuple[str, ...]]:
    """Generic symmetric tensor with unknowns g<pair>_<k> (pairs i<=j)."""
    entries = {}
    names: List[str] = []
    pair = 0
    for i in range(1, dim + 1):
        for j in range(i, dim + 1):
            pair += 1
            for k in range(1, dim + 1):
                name = f"g{pair}_{k}"
                names.append(name)
                entries[(i, j, k)] = Poly.var(name)
                if i != j:
                    entries[(j, i, k)] = Poly.var(name)
    return Multiplication.from_table(dim, entries), tuple(names)


@dataclass(frozen=True)
class LinearStage:
    """Result of the linear stage: solved ansatz plus the solution space."""

    unknowns: Tuple[str, ...]
    solution: LinearSolution
    ansatz: Multiplication
    tensor: Multiplication

    @property
    def free(self) -> Tuple[str, ...]:
        return self.solution.free


def _mult_of(a) -> Multiplication:
    mult = a.mult if isinstance(a, Algebra) else a
    if not mult.is_rational():
        raise SymbolicEntries("classification needs a rational structure tensor")
    return mult


def _linear_equations(
    base: Multiplication,
    ansatz: Multiplication,
    unknowns: Sequence[str],
    sides: Sequence[str],
    fixed_u: Element | None,
) -> List[Poly]:
    eqs: List[Poly] = []
    if fixed_u is None:
        u = symbolic_vector(base.dim, base.names() | set(unknowns))
        u_names = u.names()
    else:
        u = fixed_u
        u_names = set()
    for side in sides:
        pair = (ansatz, base) if side == "ansatz_first" else (base, ansatz)
        product = kantor_product(pair[0], pair[1], u)
        for plane in product.c:
            for row in plane:
                for entry in row:
                    if entry.is_zero():
                        continue
                    if u_names:
                        eqs.extend(entry.split_by(u_names).values())
                    else:
                        eqs.append(entry)
    return eqs


def _stage1(base, ansatz, unknowns, sides, fixed_u) -> LinearStage:
    eqs = _linear_equations(base, ansatz, unknowns, sides, fixed_u)
    solution = solve_linear(eqs, unknowns)
    tensor = ansatz.substitute(solution.assignments)
    return LinearStage(tuple(unknowns), solution, ansatz, tensor)


def poisson_stage1(a, fixed_u: Element | None = None) -> LinearStage:
    """Linear stage of the Poisson classification (antisymmetric ansatz)."""
    mult = _mult_of(a)
    ansatz, unknowns = antisymmetric_ansatz(mult.dim)
    return _stage1(mult, ansatz, unknowns, ("ansatz_first", "base_first"), fixed_u)


def postlie_stage1(lie, fixed_u: Element | None = None) -> LinearStage:
    """Linear stage of the post-Lie classification (symmetric ansatz)."""
    mult = _mult_of(lie)
    ansatz, unknowns = symmetric_ansatz(mult.dim)
    return _stage1(mult, ansatz, unknowns, ("ansatz_first",), fixed_u)


def _merge_families(
    stage: LinearStage, branch_families: Sequence[SolutionFamily]
) -> List[SolutionFamily]:
    merged = []
    for family in branch_families:
        assignment: Dict[str, RationalValue] = dict(family.assignment)
        for pivot, affine in stage.solution.assignments.items():
            value: RationalValue = (affine, Poly.const(1))
            for name, (bnum, bden) in family.assignment.items():
                value = _subst_rational_pair(value, name, bnum, bden)
            assignment[pivot] = value
        merged.append(
            SolutionFamily(
                unknowns=stage.unknowns,
                assignment=assignment,
                free=family.free,
                equations=family.equations,
                inequations=family.inequations,
                label=family.label,
            )
        )
    return merged


_ANTI_ON_BRACKET = reslot(builtin("anticommutative")[0], 2, {0: 1})
_JACOBI_ON_BRACKET = reslot(builtin("jacobi")[0], 2, {0: 1})

# Slot 0 is the base product, slot 1 the classified bracket.
_POISSON_VERIFY = (
    (_ANTI_ON_BRACKET, _JACOBI_ON_BRACKET)
    + builtin("leibniz_rule")
    + builtin("postlie_3")
)
_GENERIC_POISSON_VERIFY = (_ANTI_ON_BRACKET,) + builtin("leibniz_rule") + builtin("postlie_3")
# Slot 0 is the classified commutative product, slot 1 the Lie bracket.
_POSTLIE_VERIFY = builtin("postlie_2") + builtin("postlie_3")


def _reverify(stage: LinearStage, families, mults_of, bundle):
    for family in families:
        if family.equations or not family.is_polynomial():
            continue
        tensor = family.tensor(stage.ansatz)
        verdict = check_identity(mults_of(tensor), bundle)
        if not verdict.holds:
            raise AssertionError(
                f"classification produced an unsound family ({family.label}): "
                f"{[str(p) for p in verdict.obstructions]}"
            )


def poisson_structures(a, max_depth: int = 16) -> List[SolutionFamily]:
    """All Poisson-compatible Lie brackets on the given algebra.

    Stage 1 imposes both mixed Kantor products vanishing for all u; stage
    2 imposes the Jacobi identity by case splitting.
    """
    mult = _mult_of(a)
    stage = poisson_stage1(a)
    obstructions = check_identity(stage.tensor, builtin("jacobi")).obstructions
    branches = case_split_solve(list(obstructions), stage.free, max_depth)
    families = _merge_families(stage, branches)
    _reverify(stage, families, lambda t: [mult, t], _POISSON_VERIFY)
    return families


def generic_poisson_structures(a) -> List[SolutionFamily]:
    """The single linear family of generic Poisson brackets (no Jacobi stage)."""
    mult = _mult_of(a)
    stage = poisson_stage1(a)
    family = SolutionFamily(
        unknowns=stage.unknowns,
        assignment={k: (v, Poly.const(1)) for k, v in stage.solution.assignments.items()},
        free=stage.free,
        equations=(),
        inequations=(),
        label="linear stage",
    )
    _reverify(stage, [family], lambda t: [mult, t], _GENERIC_POISSON_VERIFY)
    return [family]


def postlie_structures(lie, require_lie: bool = True, max_depth: int = 16) -> List[SolutionFamily]:
    """All commutative post-Lie structures on the given Lie algebra.

    Stage 1 solves x.[y,z] = [x.y, z] + [y, x.z] (linear); stage 2 imposes
    [x,y].z = x.(y.z) - y.(x.z) by case splitting.
    """
    mult = _mult_of(lie)
    if require_lie:
        verdict = check_identity(mult, builtin("anticommutative") + builtin("jacobi"))
        if not verdict.holds:
            raise LieCheckFailed(
                f"input is not a Lie algebra: {[str(p) for p in verdict.obstructions]}"
            )
    stage = postlie_stage1(lie)
    obstructions = check_identity([stage.tensor, mult], builtin("postlie_2")).obstructions
    branches = case_split_solve(list(obstructions), stage.free, max_depth)
    families = _merge_families(stage, branches)
    _reverify(stage, families, lambda t: [t, mult], _POSTLIE_VERIFY)
    return families
