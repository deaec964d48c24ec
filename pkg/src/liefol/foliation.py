"""Algebraic foliations presented by generating vector fields.

Everything here happens at the generic point: rank means rank over the
rational function field, span membership is exact linear algebra there,
and the singular locus is cut out by the maximal minors of the
coefficient matrix after the codimension-one part common to all of them
is divided away.

The two geometric constructions are ``tangent_foliation`` — the kernel
of the Jacobian of a dominant rational map, cleared to polynomial
generators — and the invariance tests: a foliation is invariant under a
field when all brackets of the field with generators stay inside the
generic span; a squarefree hypersurface is invariant under a rank-one
field exactly when its equation divides its own derivative along the
saturated generator.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import List, NamedTuple, Optional, Sequence, Tuple, Union

from . import linalg
from .liecalc import VectorField, lie_bracket
from .poly import (
    Chart,
    ChartMismatchError,
    Poly,
    RatFunc,
    content,
    divexact,
    divides,
    glex_key,
    normalize,
    poly_det,
    squarefree_part,
)


def saturate_rank1(v: VectorField) -> VectorField:
    """The content-one polynomial representative of the direction of v.

    Denominators are multiplied out and the GCD of the resulting
    coefficients divided away; the result generates the same rank-one
    subsheaf saturated in the tangent sheaf.
    """
    if v.is_zero():
        raise ValueError("the zero field spans no direction")
    polys = linalg.clear_to_polynomials(v.coefficients)
    return VectorField.from_coefficients(v.chart, polys)


def same_rank1_foliation(v: VectorField, w: VectorField) -> bool:
    """Do two nonzero fields span the same direction over the function field?

    Checked by the vanishing of all 2x2 cross products v_i w_j - v_j w_i.
    """
    if v.chart != w.chart:
        raise ChartMismatchError("fields on different charts")
    if v.is_zero() or w.is_zero():
        raise ValueError("proportionality is only defined for nonzero fields")
    n = v.chart.size
    for i in range(n):
        for j in range(i + 1, n):
            cross = v.coefficients[i] * w.coefficients[j] - v.coefficients[j] * w.coefficients[i]
            if not cross.is_zero():
                return False
    return True


@dataclass(frozen=True)
class FoliationGens:
    """A non-empty family of generating fields, stored saturated.

    Each admitted generator is cleared to polynomial coefficients of
    content one (zero fields are rejected); generators need not be
    independent.
    """

    chart: Chart
    generators: Tuple[VectorField, ...]

    def __post_init__(self) -> None:
        if not self.generators:
            raise ValueError("a foliation needs at least one generator")
        cleaned = []
        for g in self.generators:
            if g.chart != self.chart:
                raise ChartMismatchError("generator on a different chart")
            if g.is_zero():
                raise ValueError("zero generator")
            cleaned.append(saturate_rank1(g))
        object.__setattr__(self, "generators", tuple(cleaned))

    def coefficient_matrix(self) -> List[List[RatFunc]]:
        return [list(g.coefficients) for g in self.generators]

    def polynomial_matrix(self) -> List[List[Poly]]:
        return [[c.as_poly() for c in g.coefficients] for g in self.generators]


def generic_rank(fol: FoliationGens) -> int:
    """Rank of the coefficient matrix over the rational function field."""
    return linalg.rank(fol.coefficient_matrix())


class InvolutivityResult(NamedTuple):
    ok: bool
    witness: Optional[VectorField]  # a bracket outside the generic span


def is_involutive(fol: FoliationGens) -> InvolutivityResult:
    """Are all pairwise brackets of generators inside the generic span?"""
    rows = fol.coefficient_matrix()
    for i, gi in enumerate(fol.generators):
        for gj in fol.generators[i + 1 :]:
            br = lie_bracket(gi, gj)
            if br.is_zero():
                continue
            if not linalg.in_row_span(rows, br.coefficients):
                return InvolutivityResult(False, br)
    return InvolutivityResult(True, None)


class InvarianceResult(NamedTuple):
    ok: bool
    witness: Optional[VectorField]


def is_invariant_subsheaf(fol: FoliationGens, v: VectorField) -> InvarianceResult:
    """Does bracketing with ``v`` preserve the generic span of the foliation?"""
    if v.chart != fol.chart:
        raise ChartMismatchError("field on a different chart")
    rows = fol.coefficient_matrix()
    for g in fol.generators:
        br = lie_bracket(v, g)
        if br.is_zero():
            continue
        if not linalg.in_row_span(rows, br.coefficients):
            return InvarianceResult(False, br)
    return InvarianceResult(True, None)


@dataclass(frozen=True)
class SingularIdeal:
    """Generators for the locus where the generators drop rank.

    Normalized: the common content of the minors is divided away, each
    generator is sign-normalized, duplicates are removed, and the tuple
    is sorted in descending graded-lex order.  ``(1)`` means the locus
    is empty.
    """

    chart: Chart
    generators: Tuple[Poly, ...]

    def is_trivial(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.generators)

    def __str__(self) -> str:
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def singular_locus(fol: FoliationGens) -> SingularIdeal:
    """Ideal of maximal minors of an independent generator family, with the
    common codimension-one factor removed.

    Requires the generators to be generically independent (rank equal to
    their number); a dependent family has no well-defined minor ideal.
    """
    p = len(fol.generators)
    if generic_rank(fol) != p:
        raise ValueError("generators are dependent at the generic point")
    matrix = fol.polynomial_matrix()
    n = fol.chart.size
    minors: List[Poly] = []
    for cols in combinations(range(n), p):
        sub = [[row[c] for c in cols] for row in matrix]
        det = poly_det(sub)
        if not det.is_zero():
            minors.append(det)
    # rank == p guarantees at least one nonzero minor
    common = content(minors)
    reduced = []
    for m in minors:
        q = normalize(divexact(m, common))
        if q not in reduced:
            reduced.append(q)
    if any(q.is_constant() for q in reduced):
        reduced = [Poly.one(fol.chart)]
    reduced.sort(key=lambda q: glex_key(q.leading_term()[0]), reverse=True)
    return SingularIdeal(fol.chart, tuple(reduced))


def tangent_foliation(components: Sequence[Union[RatFunc, Poly]], chart: Chart) -> FoliationGens:
    """Foliation tangent to the fibres of a dominant rational map.

    ``components`` are the coordinate functions of the map; the
    generators returned span the kernel of its Jacobian over the
    rational function field, cleared to content-one polynomial fields.
    The Jacobian must have full rank (= number of components) at the
    generic point, and the map must have positive-dimensional fibres.
    """
    comps = [c if isinstance(c, RatFunc) else RatFunc(c) for c in components]
    if not comps:
        raise ValueError("a map needs at least one component")
    for c in comps:
        if c.chart != chart:
            raise ChartMismatchError("component on a different chart")
    m = len(comps)
    n = chart.size
    jac = [[c.partial(k) for k in range(n)] for c in comps]
    r = linalg.rank(jac)
    if r != m:
        raise ValueError(
            f"map is not dominant onto its {m}-dimensional target (Jacobian rank {r})"
        )
    if m == n:
        raise ValueError("map has finite generic fibres; the tangent foliation is zero")
    kernel = linalg.kernel_basis(jac)
    gens = [
        VectorField.from_coefficients(chart, linalg.clear_to_polynomials(vec)) for vec in kernel
    ]
    return FoliationGens(chart, tuple(gens))


def invariant_hypersurface(f: Poly, v: VectorField) -> bool:
    """Is the squarefree hypersurface f = 0 invariant under the flow of v?

    True exactly when f divides the derivative of f along the saturated
    polynomial representative of v.
    """
    if f.chart != v.chart:
        raise ChartMismatchError("hypersurface on a different chart")
    if f.is_zero() or f.is_constant():
        raise ValueError("need a non-constant equation")
    if squarefree_part(f) != normalize(f):
        raise ValueError("equation must be squarefree")
    w = saturate_rank1(v)
    derivative = Poly.zero(f.chart)
    for k, coeff in enumerate(w.polynomial_coefficients()):
        derivative = derivative + coeff * f.partial(k)
    return derivative.is_zero() or divides(f, derivative)
