"""Connections on trivialized modules and the differential-morphism check.

A connection here is the data ``(v, A)``: a base derivation ``v`` and a
square matrix ``A`` of rational functions, acting on coefficient columns
as ``nabla(f) = v(f) + A f``.  Pulling back along a polynomial map
substitutes the map into every matrix entry and swaps in the chosen
source derivation.

``check_dmorphism`` verifies, for a triple (phi, v, w), first the
compatibility condition

    sum_k  dphi_j/dx_k * v_k  =  w_j o phi        (for every j)

and then the matrix identity that makes the differential of phi a
morphism of modules-with-connection,

    B^phi . J  =  J . A  +  v(J),

where J is the Jacobian of phi, A and B are the partials matrices of v
and w, and B^phi is B composed with phi.  The identity is a theorem
whenever the compatibility condition holds, so a False verdict from the
second stage indicates a defect in this package rather than in the
input; the result carries a witness entry for exactly that reason.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence, Tuple, Union

from .liecalc import VectorField, apply_derivation, jacobian_matrix
from .poly import Chart, ChartMismatchError, Poly, RatFunc


def _square(matrix: Sequence[Sequence[RatFunc]]) -> Tuple[Tuple[RatFunc, ...], ...]:
    rows = tuple(tuple(row) for row in matrix)
    if not rows:
        raise ValueError("empty connection matrix")
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ValueError("connection matrix must be square")
    return rows


@dataclass(frozen=True)
class Connection:
    """``nabla = v + A`` on a free module with a chosen trivialization."""

    base_field: VectorField
    matrix: Tuple[Tuple[RatFunc, ...], ...]

    def __post_init__(self) -> None:
        rows = _square(self.matrix)
        chart = self.base_field.chart
        for row in rows:
            for entry in row:
                if entry.chart != chart:
                    raise ChartMismatchError("matrix entry on a different chart")
        object.__setattr__(self, "matrix", rows)

    @property
    def chart(self) -> Chart:
        return self.base_field.chart

    @property
    def rank(self) -> int:
        return len(self.matrix)


def nabla_apply(conn: Connection, section: Sequence[Union[RatFunc, Poly]]) -> Tuple[RatFunc, ...]:
    """Apply the connection to a coefficient column: v(f_i) + sum_j A[i][j] f_j."""
    chart = conn.chart
    col = [f if isinstance(f, RatFunc) else RatFunc(f) for f in section]
    if len(col) != conn.rank:
        raise ValueError(f"section has length {len(col)}, connection has rank {conn.rank}")
    out = []
    for i in range(conn.rank):
        acc = apply_derivation(conn.base_field, col[i])
        for j in range(conn.rank):
            entry = conn.matrix[i][j]
            if not entry.is_zero():
                acc = acc + entry * col[j]
        out.append(acc)
    return tuple(out)


@dataclass(frozen=True)
class PolyMap:
    """A polynomial map between charts, one component per target variable."""

    source: Chart
    target: Chart
    components: Tuple[Poly, ...]

    def __post_init__(self) -> None:
        comps = tuple(self.components)
        if len(comps) != self.target.size:
            raise ValueError(
                f"map into {self.target} needs {self.target.size} components, got {len(comps)}"
            )
        for c in comps:
            if c.chart != self.source:
                raise ChartMismatchError("component not defined on the source chart")
        object.__setattr__(self, "components", comps)

    def jacobian(self) -> Tuple[Tuple[Poly, ...], ...]:
        """J[j][k] = d(phi_j)/dx_k, a (target x source) matrix."""
        return tuple(
            tuple(c.partial(k) for k in range(self.source.size)) for c in self.components
        )

    def pull_back(self, f: Union[RatFunc, Poly]) -> RatFunc:
        """f o phi for a function on the target chart."""
        g = f if isinstance(f, RatFunc) else RatFunc(f)
        if g.chart != self.target:
            raise ChartMismatchError("can only pull back functions on the target chart")
        return g.substitute(self.components)

    def __str__(self) -> str:
        body = ", ".join(str(c) for c in self.components)
        return f"({body})"


def pullback_connection(conn: Connection, phi: PolyMap, v: VectorField) -> Connection:
    """Pull a connection on the target back along phi, with base derivation v.

    The matrix entries are composed with phi; the derivation part is
    replaced by the chosen derivation on the source.
    """
    if conn.chart != phi.target:
        raise ChartMismatchError("connection does not live on the target chart")
    if v.chart != phi.source:
        raise ChartMismatchError("base derivation does not live on the source chart")
    matrix = tuple(tuple(phi.pull_back(entry) for entry in row) for row in conn.matrix)
    return Connection(base_field=v, matrix=matrix)


class MorphismPreconditionError(ValueError):
    """The triple (phi, v, w) fails the compatibility condition.

    ``coordinate`` names the first target coordinate j with
    ``v(phi_j) != w_j o phi``.
    """

    def __init__(self, coordinate: int, name: str, lhs: RatFunc, rhs: RatFunc):
        super().__init__(
            f"v(phi_{coordinate + 1}) != w_{coordinate + 1} o phi "
            f"in coordinate {name!r}: {lhs} vs {rhs}"
        )
        self.coordinate = coordinate


class DMorphismResult(NamedTuple):
    ok: bool
    witness: Optional[Tuple[int, int, RatFunc]]  # (row, col, defect entry)


def check_dmorphism(phi: PolyMap, v: VectorField, w: VectorField) -> DMorphismResult:
    """Verify that dphi intertwines the Lie-derivative connections of v and w.

    Raises MorphismPreconditionError if (phi, v, w) is not a morphism of
    flows in the first place.  Once the precondition holds the matrix
    identity is guaranteed, so ``ok=False`` (with its witness entry)
    signals an internal inconsistency, not bad input.
    """
    if v.chart != phi.source:
        raise ChartMismatchError("v must live on the source chart")
    if w.chart != phi.target:
        raise ChartMismatchError("w must live on the target chart")

    for j, component in enumerate(phi.components):
        lhs = apply_derivation(v, component)
        rhs = phi.pull_back(w.coefficients[j])
        if lhs != rhs:
            raise MorphismPreconditionError(j, phi.target.variables[j], lhs, rhs)

    jac = [[RatFunc(e) for e in row] for row in phi.jacobian()]  # q x p
    a = jacobian_matrix(v)  # p x p
    b = jacobian_matrix(w)  # q x q
    b_phi = [[phi.pull_back(entry) for entry in row] for row in b]

    q = phi.target.size
    p = phi.source.size
    for i in range(q):
        for k in range(p):
            left = RatFunc.zero(phi.source)
            for j in range(q):
                left = left + b_phi[i][j] * jac[j][k]
            right = apply_derivation(v, jac[i][k])
            for j in range(p):
                right = right + jac[i][j] * a[j][k]
            if left != right:
                return DMorphismResult(False, (i, k, left - right))
    return DMorphismResult(True, None)
