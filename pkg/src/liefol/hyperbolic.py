"""Numeric test bench for the suspension of the torus automorphism [[2, 1], [1, 1]].

The suspension lives on (R^2/Z^2) x [0, 1) with the automorphism applied
once per unit of roof time.  States carry exact `Fraction` coordinates:
the automorphism is an integer matrix and the roof advances by exact
rational steps, so the flow's group law holds on the nose instead of
drowning in the ~2.618^t amplification a float mod-1 iteration suffers.

The differential of the time-t flow in the flat trivialization is
block-diagonal: the integer matrix power on the torus factor (one factor
per roof crossing) and 1 on the flow direction.  The hyperbolic
splitting is spanned by the eigenvectors of the automorphism; those are
irrational, and a float copy of the stable direction is useless for
long-time contraction measurements — its ~1e-16 unstable component
overtakes the true signal near t = 19.  The bound verifier therefore
carries the directions exactly in Q(sqrt 5) (pairs of Fractions), applies
the exact cocycle, and only then takes logarithms, using the algebraic
conjugate to dodge catastrophic cancellation.  The regression that
estimates the contraction rate never consults the claimed eigenvalues.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

CAT: Tuple[Tuple[int, int], Tuple[int, int]] = ((2, 1), (1, 1))
CAT_INV: Tuple[Tuple[int, int], Tuple[int, int]] = ((1, -1), (-1, 2))

_MAX_CROSSINGS = 600  # keeps every norm within float range


def _mat_mul(m1, m2):
    return (
        (m1[0][0] * m2[0][0] + m1[0][1] * m2[1][0], m1[0][0] * m2[0][1] + m1[0][1] * m2[1][1]),
        (m1[1][0] * m2[0][0] + m1[1][1] * m2[1][0], m1[1][0] * m2[0][1] + m1[1][1] * m2[1][1]),
    )


def cat_power(k: int) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """Exact integer power of the automorphism (negative k uses the inverse)."""
    base = CAT if k >= 0 else CAT_INV
    k = abs(k)
    result = ((1, 0), (0, 1))
    while k:
        if k & 1:
            result = _mat_mul(result, base)
        base = _mat_mul(base, base)
        k >>= 1
    return result


def _mod1(value: Fraction) -> Fraction:
    return value - math.floor(value)


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)  # exact binary expansion
    raise TypeError(f"bad coordinate type: {type(value).__name__}")


@dataclass(frozen=True)
class SuspensionState:
    """A point of the mapping torus: torus coordinates and roof coordinate,
    each normalized into [0, 1)."""

    x: Fraction
    y: Fraction
    roof: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", _mod1(_as_fraction(self.x)))
        object.__setattr__(self, "y", _mod1(_as_fraction(self.y)))
        object.__setattr__(self, "roof", _mod1(_as_fraction(self.roof)))

    def as_floats(self) -> Tuple[float, float, float]:
        return (float(self.x), float(self.y), float(self.roof))


def fixed_point() -> SuspensionState:
    """The origin: a closed orbit of period 1."""
    return SuspensionState(Fraction(0), Fraction(0), Fraction(0))


def crossings(state: SuspensionState, t) -> int:
    """Number of roof crossings in flowing for time t (negative if t < 0)."""
    return math.floor(state.roof + _as_fraction(t))


def suspension_flow(state: SuspensionState, t) -> SuspensionState:
    """Flow the state for time t (any sign), exactly."""
    tq = _as_fraction(t)
    total = state.roof + tq
    k = math.floor(total)
    m = cat_power(k)
    x = m[0][0] * state.x + m[0][1] * state.y
    y = m[1][0] * state.x + m[1][1] * state.y
    return SuspensionState(_mod1(x), _mod1(y), total - k)


def torus_distance(s1: SuspensionState, s2: SuspensionState) -> float:
    """Sup distance on the mapping torus' flat coordinates (each circle-valued)."""

    def circ(a: Fraction, b: Fraction) -> Fraction:
        d = abs(a - b)
        return min(d, 1 - d)

    return float(max(circ(s1.x, s2.x), circ(s1.y, s2.y), circ(s1.roof, s2.roof)))


def differential_flow(
    u: Sequence[float], t, state: SuspensionState
) -> Tuple[float, float, float]:
    """Image of a tangent vector under the differential of the time-t flow.

    In the flat trivialization this is the integer matrix power on the
    torus components and the identity on the roof component.
    """
    if len(u) != 3:
        raise ValueError("tangent vectors have three components")
    k = crossings(state, t)
    if abs(k) > _MAX_CROSSINGS:
        raise ValueError(f"time {t} crosses the roof {k} times; refuse beyond {_MAX_CROSSINGS}")
    m = cat_power(k)
    return (
        m[0][0] * u[0] + m[0][1] * u[1],
        m[1][0] * u[0] + m[1][1] * u[1],
        float(u[2]),
    )


# ---------------------------------------------------------------------------
# Exact arithmetic in Q(sqrt 5)
# ---------------------------------------------------------------------------

_SQRT5 = math.sqrt(5.0)


@dataclass(frozen=True)
class _Q5:
    """a + b*sqrt(5) with exact rational a, b."""

    a: Fraction
    b: Fraction

    def __add__(self, other: "_Q5") -> "_Q5":
        return _Q5(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "_Q5") -> "_Q5":
        return _Q5(self.a - other.a, self.b - other.b)

    def __mul__(self, other: "_Q5") -> "_Q5":
        return _Q5(
            self.a * other.a + 5 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def scale(self, c: int) -> "_Q5":
        return _Q5(self.a * c, self.b * c)

    def to_float(self) -> float:
        return float(self.a) + float(self.b) * _SQRT5


def _int_log(n: int) -> float:
    # math.log handles arbitrary-size ints exactly enough
    return math.log(n)


def _frac_log(fr: Fraction) -> float:
    if fr <= 0:
        raise ValueError("log of a non-positive rational")
    return _int_log(fr.numerator) - _int_log(fr.denominator)


def _q5_log(value: _Q5) -> float:
    """log of a positive element of Q(sqrt 5), safe against cancellation.

    Whichever of value and its conjugate is larger in magnitude is
    computed accurately in floats; the smaller one is recovered through
    the exact rational norm value * conjugate = a^2 - 5 b^2.
    """
    fa = float(value.a)
    fb = float(value.b) * _SQRT5
    direct = fa + fb
    conj = fa - fb
    if abs(direct) >= abs(conj):
        if direct <= 0:
            raise ValueError("element is not positive")
        return math.log(direct)
    norm = value.a * value.a - 5 * value.b * value.b
    return _frac_log(abs(norm)) - math.log(abs(conj))


# Exact eigendata of the automorphism: eigenvalues (3 -+ sqrt5)/2 with
# eigenvectors (1, lambda - 2).
_LAMBDA_S = _Q5(Fraction(3, 2), Fraction(-1, 2))
_LAMBDA_U = _Q5(Fraction(3, 2), Fraction(1, 2))
_E_SS = (_Q5(Fraction(1), Fraction(0)), _Q5(Fraction(-1, 2), Fraction(-1, 2)))
_E_SU = (_Q5(Fraction(1), Fraction(0)), _Q5(Fraction(-1, 2), Fraction(1, 2)))


def _apply_int_matrix(m, vec: Tuple[_Q5, _Q5]) -> Tuple[_Q5, _Q5]:
    return (
        vec[0].scale(m[0][0]) + vec[1].scale(m[0][1]),
        vec[0].scale(m[1][0]) + vec[1].scale(m[1][1]),
    )


def _q5_lognorm(vec: Tuple[_Q5, _Q5]) -> float:
    return 0.5 * _q5_log(vec[0] * vec[0] + vec[1] * vec[1])


@dataclass(frozen=True)
class TangentFrame:
    """Float view of the splitting: stable / unstable torus directions plus
    the flow direction (0, 0, 1); the exact forms live module-private."""

    stable: Tuple[float, float]
    unstable: Tuple[float, float]
    lambda_stable: float
    lambda_unstable: float

    FLOW: Tuple[float, float, float] = (0.0, 0.0, 1.0)

    @classmethod
    def cat_frame(cls) -> "TangentFrame":
        ls = (3.0 - _SQRT5) / 2.0
        lu = (3.0 + _SQRT5) / 2.0

        def unit(vx: float, vy: float) -> Tuple[float, float]:
            n = math.hypot(vx, vy)
            return (vx / n, vy / n)

        return cls(
            stable=unit(1.0, ls - 2.0),
            unstable=unit(1.0, lu - 2.0),
            lambda_stable=ls,
            lambda_unstable=lu,
        )


def _regress_slope(points: List[Tuple[float, float]]) -> float:
    n = len(points)
    mean_t = sum(p[0] for p in points) / n
    mean_y = sum(p[1] for p in points) / n
    num = sum((t - mean_t) * (y - mean_y) for t, y in points)
    den = sum((t - mean_t) ** 2 for t, y in points)
    return num / den


def _measure_rate(direction: Tuple[_Q5, _Q5], matrix, t_max, states) -> Tuple[float, List[float]]:
    """Pooled log-norm growth of an exact direction under an integer cocycle.

    Returns the least-squares slope and the per-time log norms relative
    to time zero (identical across states: the splitting is constant and
    integer times cross the roof exactly t times from any roof offset).
    """
    base_log = _q5_lognorm(direction)
    logs: List[float] = []
    vec = direction
    for _ in range(t_max):
        vec = _apply_int_matrix(matrix, vec)
        logs.append(_q5_lognorm(vec) - base_log)
    points: List[Tuple[float, float]] = []
    for state in states:
        for t in range(1, t_max + 1):
            # integer times cross the roof exactly t times regardless of offset
            assert crossings(state, t) - crossings(state, 0) == t
            points.append((float(t), logs[t - 1]))
    return _regress_slope(points), logs


@dataclass(frozen=True)
class AnosovReport:
    """Outcome of the splitting verification.

    Rates are regression estimates from measured norms; the C constants
    are the extremal deviations from pure exponential behaviour (both
    should sit at 1 for a constant splitting).  ``passed`` asserts
    contraction/expansion in the claimed directions, forward/backward
    consistency, unit eigenvalue product, and a flat flow direction —
    it does not compare against any externally claimed rate.
    """

    lambda_stable_est: float
    lambda_unstable_est: float
    lambda_stable_backward: float
    lambda_unstable_backward: float
    c_stable: float
    c_unstable: float
    c_stable_lower: float
    flow_exponent: float
    passed: bool
    samples: int
    t_max: int
    seed: int
    swapped: bool


def verify_anosov_bounds(
    samples: int = 50,
    t_max: int = 100,
    seed: int = 0,
    swap_bundles: bool = False,
) -> AnosovReport:
    """Measure contraction/expansion rates of the claimed splitting.

    ``swap_bundles`` feeds the unstable direction as the claimed stable
    one (and vice versa); the report then fails, which is the negative
    control for this harness.
    """
    if samples < 1:
        raise ValueError("need at least one sample state")
    if not 2 <= t_max <= 300:
        raise ValueError("t_max must lie in [2, 300]")
    rng = random.Random(seed)
    states = [
        SuspensionState(Fraction(rng.random()), Fraction(rng.random()), Fraction(rng.random()))
        for _ in range(samples)
    ]
    claimed_stable = _E_SU if swap_bundles else _E_SS
    claimed_unstable = _E_SS if swap_bundles else _E_SU

    slope_s, logs_s = _measure_rate(claimed_stable, CAT, t_max, states)
    slope_u, logs_u = _measure_rate(claimed_unstable, CAT, t_max, states)
    slope_s_back, logs_s_back = _measure_rate(claimed_stable, CAT_INV, t_max, states)
    slope_u_back, _ = _measure_rate(claimed_unstable, CAT_INV, t_max, states)

    lambda_s = math.exp(slope_s)
    lambda_u = math.exp(slope_u)
    lambda_s_back = math.exp(-slope_s_back)
    lambda_u_back = math.exp(-slope_u_back)

    c_stable = max(
        math.exp(lognorm - t * slope_s) for t, lognorm in enumerate(logs_s, start=1)
    )
    c_unstable = max(
        math.exp(t * slope_u - lognorm) for t, lognorm in enumerate(logs_u, start=1)
    )
    c_stable_lower = min(
        math.exp(lognorm - t * slope_s_back) for t, lognorm in enumerate(logs_s_back, start=1)
    )

    # flow direction through the public float differential
    flow_points = []
    for state in states[: min(samples, 8)]:
        for t in range(1, min(t_max, 32) + 1):
            img = differential_flow(TangentFrame.FLOW, t, state)
            flow_points.append((float(t), math.log(math.hypot(*img))))
    flow_exponent = _regress_slope(flow_points)

    passed = (
        lambda_s < 1.0
        and lambda_u > 1.0
        and abs(lambda_s * lambda_u - 1.0) < 1e-12
        and abs(lambda_s_back - lambda_s) < 1e-9
        and abs(lambda_u_back - lambda_u) < 1e-9
        and c_stable < 10.0
        and c_unstable < 10.0
        and c_stable_lower > 0.1
        and abs(flow_exponent) < 1e-9
    )
    return AnosovReport(
        lambda_stable_est=lambda_s,
        lambda_unstable_est=lambda_u,
        lambda_stable_backward=lambda_s_back,
        lambda_unstable_backward=lambda_u_back,
        c_stable=c_stable,
        c_unstable=c_unstable,
        c_stable_lower=c_stable_lower,
        flow_exponent=flow_exponent,
        passed=passed,
        samples=samples,
        t_max=t_max,
        seed=seed,
        swapped=swap_bundles,
    )


# ---------------------------------------------------------------------------
# Invariant lines and planes along a closed orbit
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LabeledLine:
    label: str  # "stable" | "flow" | "unstable"
    eigenvalue: float
    direction: Tuple[float, float, float]


@dataclass(frozen=True)
class LabeledPlane:
    label: str  # "stable" | "unstable" | "strong"
    basis: Tuple[Tuple[float, float, float], Tuple[float, float, float]]


_PERIOD_TOL = 1e-9
_SPECTRUM_TOL = 1e-9


def return_map_matrix(state: SuspensionState, period) -> np.ndarray:
    """The differential of the flow over one period of a closed orbit."""
    image = suspension_flow(state, period)
    if torus_distance(image, state) > _PERIOD_TOL:
        raise ValueError(
            f"orbit does not close after time {period} "
            f"(distance {torus_distance(image, state):.3e})"
        )
    k = crossings(state, period)
    m = cat_power(k)
    out = np.zeros((3, 3))
    out[0, 0], out[0, 1] = float(m[0][0]), float(m[0][1])
    out[1, 0], out[1, 1] = float(m[1][0]), float(m[1][1])
    out[2, 2] = 1.0
    return out


def _sign_normalized(vec: np.ndarray) -> Tuple[float, float, float]:
    v = vec / np.linalg.norm(vec)
    for component in v:
        if abs(component) > 1e-12:
            if component < 0:
                v = -v
            break
    return (float(v[0]), float(v[1]), float(v[2]))


def classify_invariant_lines(state: SuspensionState, period) -> Tuple[LabeledLine, ...]:
    """The three invariant tangent lines along a closed orbit.

    The return differential must have three real eigenvalues of distinct
    moduli with exactly one on the unit circle; anything else is an
    error, not a silent answer.
    """
    m = return_map_matrix(state, period)
    values, vectors = np.linalg.eig(m)
    if np.max(np.abs(values.imag)) > 1e-10:
        raise ValueError("return map has a non-real spectrum")
    values = values.real
    vectors = vectors.real
    order = np.argsort(np.abs(values))
    moduli = np.abs(values)[order]
    if moduli[1] - moduli[0] < _SPECTRUM_TOL or moduli[2] - moduli[1] < _SPECTRUM_TOL:
        raise ValueError("return map has eigenvalues of equal modulus; lines are not isolated")
    if abs(moduli[1] - 1.0) > _SPECTRUM_TOL:
        raise ValueError("no unit eigenvalue along the flow direction")
    labels = ("stable", "flow", "unstable")
    lines = []
    for label, idx in zip(labels, order):
        lines.append(
            LabeledLine(
                label=label,
                eigenvalue=float(values[idx]),
                direction=_sign_normalized(vectors[:, idx]),
            )
        )
    return tuple(lines)


def line_is_invariant(state: SuspensionState, period, direction: Sequence[float]) -> bool:
    """Does the return differential map the line of ``direction`` to itself?"""
    m = return_map_matrix(state, period)
    d = np.asarray(direction, dtype=float)
    norm = np.linalg.norm(d)
    if norm == 0:
        raise ValueError("zero direction")
    d = d / norm
    image = m @ d
    residual = image - (image @ d) * d
    return bool(np.linalg.norm(residual) <= _PERIOD_TOL * np.linalg.norm(image))


def classify_invariant_planes(state: SuspensionState, period) -> Tuple[LabeledPlane, ...]:
    """The three invariant tangent planes along a closed orbit: the two
    center bundles (flow + stable / flow + unstable) and the strong span."""
    lines = {line.label: line for line in classify_invariant_lines(state, period)}
    pairs = (
        ("stable", ("flow", "stable")),
        ("unstable", ("flow", "unstable")),
        ("strong", ("stable", "unstable")),
    )
    planes = []
    for label, (first, second) in pairs:
        basis = (lines[first].direction, lines[second].direction)
        if not plane_is_invariant(state, period, basis[0], basis[1]):
            raise AssertionError(f"eigenplane {label!r} failed its invariance check")
        planes.append(LabeledPlane(label=label, basis=basis))
    return tuple(planes)


def plane_is_invariant(
    state: SuspensionState, period, u: Sequence[float], w: Sequence[float]
) -> bool:
    """Does the return differential preserve the plane spanned by u, w?"""
    m = return_map_matrix(state, period)
    normal = np.cross(np.asarray(u, dtype=float), np.asarray(w, dtype=float))
    n_norm = np.linalg.norm(normal)
    if n_norm == 0:
        raise ValueError("basis does not span a plane")
    normal = normal / n_norm
    for vec in (u, w):
        image = m @ np.asarray(vec, dtype=float)
        if abs(image @ normal) > _PERIOD_TOL * np.linalg.norm(image):
            return False
    return True


# ---------------------------------------------------------------------------
# Density of a leaf line on the torus fibre
# ---------------------------------------------------------------------------


def leaf_density(
    epsilon: float,
    arc_length: float,
    direction: Optional[Tuple[float, float]] = None,
) -> float:
    """Fraction of the epsilon-grid boxes met by a line through the origin.

    The line follows ``direction`` (default: the stable eigendirection)
    on the unit torus; the walk samples every epsilon/8 of arc length,
    so no visited box of the round(1/epsilon)-per-side grid is skipped.
    """
    if not 0 < epsilon <= 1:
        raise ValueError("epsilon must lie in (0, 1]")
    if arc_length <= 0:
        raise ValueError("arc_length must be positive")
    grid = max(1, round(1.0 / epsilon))
    if direction is None:
        frame = TangentFrame.cat_frame()
        dx, dy = frame.stable
    else:
        dx, dy = float(direction[0]), float(direction[1])
        norm = math.hypot(dx, dy)
        if norm == 0:
            raise ValueError("zero direction")
        dx, dy = dx / norm, dy / norm
    step = epsilon / 8.0
    steps = int(arc_length / step)
    x = 0.0
    y = 0.0
    visited = set()
    visited.add(0)
    for _ in range(steps):
        x = (x + dx * step) % 1.0
        y = (y + dy * step) % 1.0
        visited.add(int(x * grid) * grid + int(y * grid))
    return len(visited) / (grid * grid)
