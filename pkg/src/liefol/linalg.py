"""Exact linear algebra over the rational function field of a chart.

Plain Gaussian elimination with RatFunc entries: at the sizes this
package meets (matrices no wider than a handful of variables), exact
pivoting beats anything cleverer, and every rank/kernel/span answer is
a theorem rather than a numerical judgement.
"""

from __future__ import annotations

from typing import List, Sequence, Tuple

from .poly import Chart, Poly, RatFunc, clear_denominators, content, divexact

Matrix = Sequence[Sequence[RatFunc]]


def _copy(rows: Matrix) -> List[List[RatFunc]]:
    return [list(r) for r in rows]


def rref(rows: Matrix) -> Tuple[List[List[RatFunc]], List[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    m = _copy(rows)
    if not m:
        return [], []
    width = len(m[0])
    for row in m:
        if len(row) != width:
            raise ValueError("ragged matrix")
    pivots: List[int] = []
    r = 0
    for col in range(width):
        pivot_row = next((i for i in range(r, len(m)) if not m[i][col].is_zero()), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = m[r][col]
        m[r] = [entry / inv for entry in m[r]]
        for i in range(len(m)):
            if i != r and not m[i][col].is_zero():
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: Matrix) -> int:
    if not rows:
        return 0
    return len(rref(rows)[1])


def in_row_span(rows: Matrix, vector: Sequence[RatFunc]) -> bool:
    """True iff ``vector`` lies in the row space of ``rows`` over the
    rational function field."""
    base = rank(rows)
    return rank(list(rows) + [list(vector)]) == base


def kernel_basis(rows: Matrix) -> List[List[RatFunc]]:
    """Basis of the right kernel {u : rows . u = 0}."""
    if not rows:
        raise ValueError("kernel of an empty matrix is ambiguous; pass at least one row")
    width = len(rows[0])
    reduced, pivots = rref(rows)
    chart = rows[0][0].chart
    free_cols = [c for c in range(width) if c not in pivots]
    basis: List[List[RatFunc]] = []
    for free in free_cols:
        vec = [RatFunc.zero(chart) for _ in range(width)]
        vec[free] = RatFunc.constant(chart, 1)
        for row_idx, pivot_col in enumerate(pivots):
            vec[pivot_col] = -reduced[row_idx][free]
        basis.append(vec)
    return basis


def clear_to_polynomials(vector: Sequence[RatFunc]) -> Tuple[Poly, ...]:
    """Scale a rational vector to polynomial entries with content 1.

    The common denominator is multiplied out, then the GCD of the
    entries is divided away; the zero vector is rejected.
    """
    vec = tuple(vector)
    if all(v.is_zero() for v in vec):
        raise ValueError("cannot normalize the zero vector")
    polys = clear_denominators(vec)
    g = content([p for p in polys if not p.is_zero()])
    return tuple(p if p.is_zero() else divexact(p, g) for p in polys)
