"""Behaviour of planar polynomial fields along the line at infinity.

A planar field ``a(x,y) d/dx + b(x,y) d/dy`` with coprime coefficients
is rewritten in the chart ``s = 1/x, t = y/x`` that attaches the line
``s = 0`` at infinity.  With ``n = max(deg a, deg b)`` and
``p^(s,t) = s^n p(1/s, t/s)`` the rescaled field is

    w_s = -s * a^(s,t),        w_t = -t * a^(s,t) + b^(s,t),

and the restriction ``P(t) = w_t(0, t)`` controls the dynamics on the
line at infinity.  The binary invariant is carried by the homogeneous
form ``Q(x, y) = x*b_n - y*a_n`` built from the top-degree parts: the
line at infinity is invariant exactly when Q is not identically zero,
in which case its roots are the singular points at infinity and
``P(t) = Q(1, t)``.

For an invariant algebraic curve C (with Q nonzero) the points of C at
infinity must land among those singular points; concretely the
squarefree part of the top form of C has to divide the squarefree part
of Q.  ``invariant_curve_constraint`` reports whether that necessary
condition is met ("consistent") or violated ("excluded").
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .liecalc import VectorField
from .foliation import saturate_rank1
from .poly import (
    Chart,
    ChartMismatchError,
    Exponents,
    Poly,
    content,
    divexact,
    divides,
    normalize,
    squarefree_part,
)

INFINITY_CHART = Chart(("s", "t"))
LINE_CHART = Chart(("t",))


@dataclass(frozen=True)
class PlanarField:
    """A polynomial field on a two-variable chart, with coprime coefficients.

    ``degree`` is the common working degree n = max(deg a, deg b); the
    coprimality requirement means the field is the saturated generator
    of its direction (use ``from_vector_field`` to saturate first).
    """

    a: Poly
    b: Poly

    def __post_init__(self) -> None:
        if self.a.chart != self.b.chart:
            raise ChartMismatchError("coefficients on different charts")
        if self.a.chart.size != 2:
            raise ValueError("planar analysis needs a two-variable chart")
        if self.a.is_zero() and self.b.is_zero():
            raise ValueError("the zero field has no direction at infinity")
        if not content([c for c in (self.a, self.b) if not c.is_zero()]).is_constant():
            raise ValueError("coefficients share a common factor; saturate the field first")

    @classmethod
    def from_vector_field(cls, v: VectorField) -> "PlanarField":
        sat = saturate_rank1(v)
        coeffs = sat.polynomial_coefficients()
        return cls(coeffs[0], coeffs[1])

    @property
    def chart(self) -> Chart:
        return self.a.chart

    @property
    def degree(self) -> int:
        return max(self.a.total_degree(), self.b.total_degree())

    def as_vector_field(self) -> VectorField:
        return VectorField.from_coefficients(self.chart, (self.a, self.b))

    def __str__(self) -> str:
        x, y = self.chart.variables
        return f"({self.a}) d/d{x} + ({self.b}) d/d{y}"


def _hat(p: Poly, n: int) -> Poly:
    """``s^n p(1/s, t/s)`` as a polynomial on the infinity chart."""
    acc: Dict[Exponents, Fraction] = {}
    for (e1, e2), coeff in p.terms.items():
        d = e1 + e2
        if d > n:
            raise ValueError("degree exceeds the homogenization degree")
        acc[(n - d, e2)] = acc.get((n - d, e2), Fraction(0)) + coeff
    return Poly(INFINITY_CHART, acc)


def to_infinity_chart(field: PlanarField) -> Tuple[Poly, Poly]:
    """The rescaled field in the chart at infinity: (w_s, w_t) as displayed above."""
    n = field.degree
    a_hat = _hat(field.a, n)
    b_hat = _hat(field.b, n)
    s = INFINITY_CHART.var("s")
    t = INFINITY_CHART.var("t")
    return (-s * a_hat, -t * a_hat + b_hat)


def q_polynomial(field: PlanarField) -> Poly:
    """The homogeneous form Q = x*b_n - y*a_n of degree n+1 (possibly zero)."""
    n = field.degree
    x, y = field.chart.vars()
    return x * field.b.homogeneous_part(n) - y * field.a.homogeneous_part(n)


def _restrict_to_line(p: Poly) -> Poly:
    """Evaluate a polynomial on the infinity chart at s = 0, as a poly in t."""
    acc: Dict[Exponents, Fraction] = {}
    for (es, et), coeff in p.terms.items():
        if es == 0:
            acc[(et,)] = coeff
    return Poly(LINE_CHART, acc)


def _divisors(n: int) -> List[int]:
    n = abs(n)
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def rational_roots(p: Poly) -> List[Fraction]:
    """All rational roots of a nonzero univariate polynomial, sorted."""
    if p.chart.size != 1:
        raise ValueError("rational root search needs one variable")
    if p.is_zero():
        raise ValueError("the zero polynomial vanishes everywhere")
    if p.is_constant():
        return []
    roots: List[Fraction] = []
    low = min(e[0] for e in p.terms)
    if low > 0:
        roots.append(Fraction(0))
        p = Poly(p.chart, {(e[0] - low,): c for e, c in p.terms.items()})
    scaled = normalize(p)  # integer coefficients, content 1
    const = scaled.coefficient((0,)).numerator
    lead = scaled.leading_coefficient().numerator
    seen = set(roots)
    for num in _divisors(const):
        for den in _divisors(lead):
            for sign in (1, -1):
                cand = Fraction(sign * num, den)
                if cand not in seen and scaled.evaluate([cand]) == 0:
                    seen.add(cand)
                    roots.append(cand)
    return sorted(roots)


@dataclass(frozen=True)
class InfinityReport:
    """Everything this package knows about a field along the line at infinity.

    ``w_s`` and ``w_t`` are the rescaled field with the content of the
    pair divided out (a no-op whenever the line is invariant);
    ``sing_infinity`` is the squarefree part of Q when the line is
    invariant and None otherwise; ``rational_points`` lists rational
    projective points [x : y] of Q on the line at infinity.
    """

    field: PlanarField
    w_s: Poly
    w_t: Poly
    p_restricted: Poly
    q_form: Poly
    line_invariant: bool
    sing_infinity: Optional[Poly]
    rational_points: Tuple[Tuple[Fraction, Fraction], ...]


def infinity_analysis(field: PlanarField) -> InfinityReport:
    """Rescale to the chart at infinity and classify the line there."""
    w_s, w_t = to_infinity_chart(field)
    p_line = _restrict_to_line(w_t)
    q = q_polynomial(field)
    invariant = not q.is_zero()

    nonzero = [w for w in (w_s, w_t) if not w.is_zero()]
    common = content(nonzero)
    if not common.is_constant():
        w_s = w_s if w_s.is_zero() else divexact(w_s, common)
        w_t = w_t if w_t.is_zero() else divexact(w_t, common)

    sing = None
    points: List[Tuple[Fraction, Fraction]] = []
    if invariant:
        s_var = INFINITY_CHART.var("s")
        if not w_s.is_zero() and not divides(s_var, w_s):
            raise AssertionError(
                "internal inconsistency: line invariant but transform not tangent to it"
            )
        sing = squarefree_part(q)
        for root in rational_roots(p_line):
            points.append((Fraction(1), root))
        if q.evaluate([0, 1]) == 0:
            points.append((Fraction(0), Fraction(1)))
    return InfinityReport(
        field=field,
        w_s=w_s,
        w_t=w_t,
        p_restricted=p_line,
        q_form=q,
        line_invariant=invariant,
        sing_infinity=sing,
        rational_points=tuple(points),
    )


CONSISTENT = "consistent"
EXCLUDED = "excluded"


def invariant_curve_constraint(curve: Poly, field: PlanarField) -> str:
    """Necessary condition for ``curve = 0`` to be invariant under the field.

    Requires a non-constant curve and Q nonzero.  Returns "consistent"
    when the squarefree part of the curve's top form divides the
    squarefree part of Q, and "excluded" otherwise; an excluded curve
    cannot be invariant, while a consistent one merely survives this
    test.
    """
    if curve.chart != field.chart:
        raise ChartMismatchError("curve on a different chart")
    if curve.is_zero() or curve.is_constant():
        raise ValueError("need a non-constant curve")
    q = q_polynomial(field)
    if q.is_zero():
        raise ValueError("the line at infinity is not invariant (Q = 0); no constraint applies")
    top = curve.homogeneous_part(curve.total_degree())
    if divides(squarefree_part(top), squarefree_part(q)):
        return CONSISTENT
    return EXCLUDED
