"""Vector fields as derivations, Lie brackets, and formal flow series.

A vector field on a chart is a tuple of rational-function coefficients,
one per coordinate; it acts on functions as the derivation
``f -> sum_i v_i * df/dx_i``.  The bracket below is the coordinate
formula

    [v, w]_i = sum_j ( v_j * dw_i/dx_j  -  w_j * dv_i/dx_j ),

which agrees with the commutator of the two derivations; the test
suite checks that agreement through an independent composition oracle.

Flow series are formal: ``exp(t v)`` applied to a function collects
``v^k(f)/k!`` as the t^k coefficient; applied to a field it collects
iterated Lie derivatives the same way.  No convergence claims are made
or needed — truncations are compared coefficient-wise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence, Tuple, Union, TYPE_CHECKING

from .poly import Chart, ChartMismatchError, Poly, RatFunc

if TYPE_CHECKING:  # pragma: no cover
    from .dmod import Connection

FieldLike = Union[RatFunc, Poly, int, Fraction]


def _as_ratfunc(chart: Chart, value: FieldLike) -> RatFunc:
    if isinstance(value, RatFunc):
        if value.chart != chart:
            raise ChartMismatchError("coefficient lives on a different chart")
        return value
    if isinstance(value, Poly):
        if value.chart != chart:
            raise ChartMismatchError("coefficient lives on a different chart")
        return RatFunc(value)
    if isinstance(value, (int, Fraction)):
        return RatFunc(Poly.constant(chart, value))
    raise TypeError(f"bad coefficient: {type(value).__name__}")


@dataclass(frozen=True)
class VectorField:
    """A derivation of the rational function field of a chart.

    The zero field is permitted (``is_zero`` flags it); several
    downstream constructions reject it explicitly.
    """

    chart: Chart
    coefficients: Tuple[RatFunc, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(_as_ratfunc(self.chart, c) for c in self.coefficients)
        if len(coeffs) != self.chart.size:
            raise ValueError(
                f"need {self.chart.size} coefficients for chart {self.chart}, got {len(coeffs)}"
            )
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def from_coefficients(cls, chart: Chart, coeffs: Sequence[FieldLike]) -> "VectorField":
        return cls(chart, tuple(_as_ratfunc(chart, c) for c in coeffs))

    @classmethod
    def zero(cls, chart: Chart) -> "VectorField":
        return cls(chart, tuple(RatFunc.zero(chart) for _ in range(chart.size)))

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coefficients)

    def is_polynomial(self) -> bool:
        return all(c.is_polynomial() for c in self.coefficients)

    def polynomial_coefficients(self) -> Tuple[Poly, ...]:
        return tuple(c.as_poly() for c in self.coefficients)

    # Module structure over the function field; handy for witnesses and
    # series, not part of the geometric interface.
    def __add__(self, other: "VectorField") -> "VectorField":
        if not isinstance(other, VectorField):
            return NotImplemented
        if self.chart != other.chart:
            raise ChartMismatchError("adding fields on different charts")
        return VectorField(
            self.chart, tuple(a + b for a, b in zip(self.coefficients, other.coefficients))
        )

    def __sub__(self, other: "VectorField") -> "VectorField":
        if not isinstance(other, VectorField):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "VectorField":
        return VectorField(self.chart, tuple(-c for c in self.coefficients))

    def scale(self, factor: FieldLike) -> "VectorField":
        f = _as_ratfunc(self.chart, factor)
        return VectorField(self.chart, tuple(f * c for c in self.coefficients))

    def __str__(self) -> str:
        from .expr import basis_names

        pieces = []
        for coeff, name in zip(self.coefficients, basis_names(self.chart)):
            if coeff.is_zero():
                continue
            pieces.append(name if coeff == 1 else f"({coeff})*{name}")
        return " + ".join(pieces) if pieces else "0"


def apply_derivation(v: VectorField, f: Union[RatFunc, Poly]) -> RatFunc:
    """The derivation of ``v`` applied to a function: sum_i v_i df/dx_i."""
    g = _as_ratfunc(v.chart, f)
    total = RatFunc.zero(v.chart)
    for k, coeff in enumerate(v.coefficients):
        if coeff.is_zero():
            continue
        total = total + coeff * g.partial(k)
    return total


def lie_bracket(v: VectorField, w: VectorField) -> VectorField:
    """Coordinate Lie bracket of two fields on one chart."""
    if v.chart != w.chart:
        raise ChartMismatchError("bracket of fields on different charts")
    chart = v.chart
    out = []
    for i in range(chart.size):
        acc = RatFunc.zero(chart)
        wi = w.coefficients[i]
        vi = v.coefficients[i]
        for j in range(chart.size):
            vj = v.coefficients[j]
            wj = w.coefficients[j]
            if not vj.is_zero():
                acc = acc + vj * wi.partial(j)
            if not wj.is_zero():
                acc = acc - wj * vi.partial(j)
        out.append(acc)
    return VectorField(chart, tuple(out))


def jacobian_matrix(v: VectorField) -> Tuple[Tuple[RatFunc, ...], ...]:
    """Matrix of partials A[i][j] = dv_i/dx_j."""
    return tuple(
        tuple(v.coefficients[i].partial(j) for j in range(v.chart.size))
        for i in range(v.chart.size)
    )


def lie_connection_matrix(v: VectorField) -> "Connection":
    """Package the Lie derivative along ``v`` as a connection on the
    trivialized tangent module.

    With A[i][j] = dv_i/dx_j, the Lie derivative of a field w along v
    acts on coefficient columns as (d/dv) - A; the returned connection
    therefore stores -A so that applying it reproduces lie_bracket(v, .).
    """
    from .dmod import Connection

    jac = jacobian_matrix(v)
    matrix = tuple(tuple(-entry for entry in row) for row in jac)
    return Connection(base_field=v, matrix=matrix)


@dataclass(frozen=True)
class FlowSeries:
    """Truncated formal flow expansion: coefficient k is (base's) k-th
    iterated derivative divided by k!.

    ``kind`` is "function" (coefficients are RatFunc) or "field"
    (coefficients are VectorField).
    """

    kind: str
    order: int
    coefficients: Tuple[object, ...]

    def __post_init__(self) -> None:
        if self.kind not in ("function", "field"):
            raise ValueError(f"bad series kind {self.kind!r}")
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if len(self.coefficients) != self.order + 1:
            raise ValueError("need order + 1 coefficients")

    def coefficient(self, k: int):
        return self.coefficients[k]

    def derivative(self) -> "FlowSeries":
        """Formal d/dt: drops to order-1; coefficient k becomes (k+1)*c_{k+1}."""
        if self.order == 0:
            raise ValueError("cannot differentiate an order-0 truncation")
        coeffs = []
        for k in range(self.order):
            c = self.coefficients[k + 1]
            if isinstance(c, VectorField):
                coeffs.append(c.scale(k + 1))
            else:
                coeffs.append(c * Fraction(k + 1))
        return FlowSeries(self.kind, self.order - 1, tuple(coeffs))

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coefficients):
            body = str(c)
            if k == 0:
                parts.append(body)
            elif k == 1:
                parts.append(f"({body})*t")
            else:
                parts.append(f"({body})*t^{k}")
        return " + ".join(parts)


def flow_series_function(v: VectorField, f: Union[RatFunc, Poly], order: int) -> FlowSeries:
    """Formal expansion of f along the flow of v, truncated at ``order``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    g = _as_ratfunc(v.chart, f)
    coeffs = []
    current = g
    for k in range(order + 1):
        coeffs.append(current * Fraction(1, factorial(k)))
        if k < order:
            current = apply_derivation(v, current)
    return FlowSeries("function", order, tuple(coeffs))


def flow_series_field(v: VectorField, w: VectorField, order: int) -> FlowSeries:
    """Formal expansion of a field pushed along the flow of v: the t^n
    coefficient is the n-th iterated Lie derivative of w divided by n!."""
    if v.chart != w.chart:
        raise ChartMismatchError("fields on different charts")
    if order < 0:
        raise ValueError("order must be non-negative")
    coeffs = []
    current = w
    for k in range(order + 1):
        coeffs.append(current.scale(Fraction(1, factorial(k))))
        if k < order:
            current = lie_bracket(v, current)
    return FlowSeries("field", order, tuple(coeffs))
