#!/usr/bin/env python3
"""Behaviour at the line at infinity for a gallery of planar fields."""

from __future__ import annotations

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from liefol import Chart, PlanarField, invariant_curve_constraint  # noqa: E402
from liefol.expr import parse_polynomial  # noqa: E402
from liefol.planar import infinity_analysis  # noqa: E402

XY = Chart(("x", "y"))

GALLERY = [
    ("radial", "x", "y"),
    ("rotation", "-y", "x"),
    ("hyperbolic", "x", "-y"),
    ("drift", "1", "x"),
    ("node", "x + y", "y"),
    ("cubic twist", "x^3 - y^3", "x^2*y"),
    ("dipole", "x^2 - y^2", "2*x*y"),
]

CURVES = [
    ("hyperbolic", "x*y - 1"),
    ("hyperbolic", "x + y - 1"),
    ("dipole", "x^2 + y^2"),
]


def field(a: str, b: str) -> PlanarField:
    return PlanarField(parse_polynomial(a, XY), parse_polynomial(b, XY))


def main() -> int:
    names = {}
    print(f"{'field':>12} {'invariant':>9}  Q / singular points at infinity")
    for name, a, b in GALLERY:
        v = field(a, b)
        names[name] = v
        report = infinity_analysis(v)
        if not report.line_invariant:
            print(f"{name:>12} {'no':>9}  (degenerate: transform vanishes on the line)")
            continue
        points = ", ".join(f"[{p}:{q}]" for p, q in report.rational_points) or "none rational"
        print(f"{name:>12} {'yes':>9}  Q = {report.q_form}; sing = {report.sing_infinity}; {points}")

    print()
    print("candidate invariant curves:")
    for name, curve_text in CURVES:
        curve = parse_polynomial(curve_text, XY)
        verdict = invariant_curve_constraint(curve, names[name])
        print(f"  {curve_text}  under {name}: {verdict}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
