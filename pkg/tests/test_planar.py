"""Behaviour of planar polynomial fields along the line at infinity."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from conftest import XY, random_poly
from liefol import (
    CONSISTENT,
    EXCLUDED,
    PlanarField,
    Poly,
    RatFunc,
    VectorField,
    apply_derivation,
    infinity_analysis,
    invariant_curve_constraint,
    q_polynomial,
    rational_roots,
    to_infinity_chart,
)
from liefol.planar import INFINITY_CHART, LINE_CHART

X, Y = XY.vars()
ZERO = Poly.zero(XY)

RADIAL = PlanarField(X, Y)
ROTATION = PlanarField(-Y, X)
HYPERBOLIC = PlanarField(X, -Y)  # x dx - y dy


class TestPlanarField:
    def test_common_factor_rejected(self):
        with pytest.raises(ValueError, match="saturate"):
            PlanarField(X**2, X * Y)

    def test_from_vector_field_saturates(self):
        v = VectorField.from_coefficients(XY, (X**2, X * Y))
        f = PlanarField.from_vector_field(v)
        assert (f.a, f.b) == (X, Y)

    def test_zero_field_rejected(self):
        with pytest.raises(ValueError):
            PlanarField(ZERO, ZERO)

    def test_degree(self):
        assert RADIAL.degree == 1
        assert PlanarField(Poly.one(XY), ZERO).degree == 0
        assert PlanarField(X**2 + 1, Y).degree == 2

    def test_needs_two_variables(self):
        one_var = __import__("liefol").Chart(("x",))
        x = one_var.var("x")
        with pytest.raises(ValueError):
            PlanarField(x, x + 1)


class TestChartTransform:
    def test_hyperbolic(self):
        w_s, w_t = to_infinity_chart(HYPERBOLIC)
        s, t = INFINITY_CHART.vars()
        assert (w_s, w_t) == (-s, -2 * t)

    def test_rotation(self):
        w_s, w_t = to_infinity_chart(ROTATION)
        s, t = INFINITY_CHART.vars()
        assert (w_s, w_t) == (s * t, t**2 + 1)

    def test_constant_field(self):
        w_s, w_t = to_infinity_chart(PlanarField(Poly.one(XY), ZERO))
        s, t = INFINITY_CHART.vars()
        assert (w_s, w_t) == (-s, -t)


class TestBoundaryForm:
    def test_worked_values(self):
        assert q_polynomial(HYPERBOLIC) == -2 * X * Y
        assert q_polynomial(ROTATION) == X**2 + Y**2
        assert q_polynomial(RADIAL).is_zero()

    def test_homogeneous_of_degree_n_plus_1(self):
        rng = random.Random(61)
        produced = 0
        while produced < 30:
            a = random_poly(rng, XY, 3, 5)
            b = random_poly(rng, XY, 3, 5)
            if a.is_zero() and b.is_zero():
                continue
            from liefol import content

            nonzero = [p for p in (a, b) if not p.is_zero()]
            if not content(nonzero).is_constant():
                continue
            field = PlanarField(a, b)
            produced += 1
            q = q_polynomial(field)
            n = field.degree
            if not q.is_zero():
                assert q.homogeneous_part(n + 1) == q


class TestRationalRoots:
    def test_linear(self):
        t = LINE_CHART.var("t")
        assert rational_roots(2 * t - 3) == [Fraction(3, 2)]

    def test_quadratic_with_two_roots(self):
        t = LINE_CHART.var("t")
        p = (t - 1) * (2 * t + 5)
        assert sorted(rational_roots(p)) == [Fraction(-5, 2), Fraction(1)]

    def test_root_at_zero(self):
        t = LINE_CHART.var("t")
        assert rational_roots(t**2 + t) == [Fraction(-1), Fraction(0)]

    def test_irrational_only(self):
        t = LINE_CHART.var("t")
        assert rational_roots(t**2 - 2) == []

    def test_no_real_roots(self):
        t = LINE_CHART.var("t")
        assert rational_roots(t**2 + 1) == []


class TestInfinityAnalysis:
    def test_hyperbolic_field(self):
        report = infinity_analysis(HYPERBOLIC)
        assert report.line_invariant
        assert str(report.sing_infinity) == "x*y"
        assert report.rational_points == ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)))

    def test_rotation_field(self):
        report = infinity_analysis(ROTATION)
        assert report.line_invariant
        assert str(report.sing_infinity) == "x^2 + y^2"
        assert report.rational_points == ()

    def test_radial_field_degenerates(self):
        report = infinity_analysis(RADIAL)
        assert not report.line_invariant
        assert report.q_form.is_zero()

    def test_restriction_matches_q(self):
        """w_t restricted to s = 0 equals Q(1, t)."""
        rng = random.Random(62)
        from liefol import content

        produced = 0
        while produced < 200:
            a = random_poly(rng, XY, 3, 6)
            b = random_poly(rng, XY, 3, 6)
            if a.is_zero() and b.is_zero():
                continue
            nonzero = [p for p in (a, b) if not p.is_zero()]
            if not content(nonzero).is_constant():
                continue
            field = PlanarField(a, b)
            q = q_polynomial(field)
            if q.is_zero():
                continue
            produced += 1
            report = infinity_analysis(field)
            # the line s = 0 is a trajectory: s divides w_s
            from liefol import divides

            s, t = INFINITY_CHART.vars()
            assert divides(s, report.w_s)
            # and the induced field on the line is Q(1, t)
            one_t = q.substitute((Poly.one(LINE_CHART), LINE_CHART.var("t")))
            assert report.p_restricted == one_t

    def test_transformed_pair_is_saturated(self):
        from liefol import content

        for field in (HYPERBOLIC, ROTATION):
            report = infinity_analysis(field)
            nonzero = [p for p in (report.w_s, report.w_t) if not p.is_zero()]
            assert content(nonzero).is_constant()


class TestCurveConstraint:
    def test_hyperbola_consistent(self):
        assert invariant_curve_constraint(X * Y - 1, HYPERBOLIC) == CONSISTENT
        # cross-check: the curve really is invariant in the affine chart
        v = HYPERBOLIC.as_vector_field()
        from liefol import divides

        d = apply_derivation(v, X * Y - 1)
        assert divides(X * Y - 1, d.as_poly())

    def test_line_excluded(self):
        assert invariant_curve_constraint(X + Y - 1, HYPERBOLIC) == EXCLUDED

    def test_conic_under_swap_field(self):
        field = PlanarField(Y, X)  # Q = x^2 - y^2
        assert invariant_curve_constraint(X**2 - Y**2 - 1, field) == CONSISTENT

    def test_degenerate_line_rejected(self):
        with pytest.raises(ValueError):
            invariant_curve_constraint(X * Y - 1, RADIAL)

    def test_constant_curve_rejected(self):
        with pytest.raises(ValueError):
            invariant_curve_constraint(Poly.one(XY), HYPERBOLIC)

    def test_first_integral_curves_never_excluded(self):
        """Level sets of first integrals pass the infinity constraint.

        For a Hamiltonian-style field (-f_y, f_x) every level f = c is
        invariant, so its top form must divide Q.
        """
        rng = random.Random(63)
        produced = 0
        while produced < 50:
            f = random_poly(rng, XY, 3, 5)
            if f.is_constant():
                continue
            fy = f.partial("y")
            fx = f.partial("x")
            if fy.is_zero() and fx.is_zero():
                continue
            v = VectorField.from_coefficients(XY, (-fy, fx))
            if v.is_zero():
                continue
            field = PlanarField.from_vector_field(v)
            if q_polynomial(field).is_zero():
                continue
            shift = f - Fraction(rng.randint(-5, 5))
            if shift.is_constant():
                continue
            produced += 1
            assert invariant_curve_constraint(shift, field) == CONSISTENT
