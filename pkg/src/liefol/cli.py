"""Command-line interface: problem files in, JSON reports out.

Problem files are line-oriented; ``#`` starts a comment.  The first
significant line declares the chart, then named objects follow::

    vars: x y
    field v = x*dx + y*dy
    field w = -y*dx + x*dy
    map phi = x^2 + y^2, x*y
    foliation F = v, w
    curve C = x*y - 1

Expressions use integers, rationals ``p/q``, variable names, ``+ - * ^``
with non-negative integer exponents, and parentheses.  Field
expressions additionally use the basis symbols ``d<var>`` (``dx1 ..
dxn`` also accepted); map components are comma-separated.

Every subcommand prints a single JSON report to standard output —
``{"op": ..., "inputs": ..., "result": ..., "status": "ok"}`` on
success, ``{"op": ..., "status": "error", "error": msg}`` with exit
code 1 otherwise.  All symbolic values appear in the canonical text
form, which re-parses to the same object; ``anosov`` floats are rounded
to 12 significant digits so reports are byte-stable for a fixed seed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from . import hyperbolic
from .expr import ParseError, parse_field_coefficients, parse_polynomial
from .foliation import (
    FoliationGens,
    generic_rank,
    invariant_hypersurface,
    is_invariant_subsheaf,
    is_involutive,
    singular_locus,
    tangent_foliation,
)
from .liecalc import VectorField, flow_series_field, flow_series_function, lie_bracket
from .planar import PlanarField, infinity_analysis, invariant_curve_constraint
from .poly import Chart, Poly

_KINDS = ("field", "map", "foliation", "curve")


class ProblemError(ValueError):
    """A malformed problem file; the message carries the line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass
class ProblemFile:
    chart: Chart
    fields: Dict[str, VectorField]
    maps: Dict[str, Tuple[Poly, ...]]
    foliations: Dict[str, FoliationGens]
    curves: Dict[str, Poly]

    def sole(self, kind: str) -> str:
        table = getattr(self, kind + "s")
        if len(table) != 1:
            raise ValueError(
                f"problem file declares {len(table)} {kind}s; name one explicitly"
            )
        return next(iter(table))


def parse_problem(text: str) -> ProblemFile:
    chart: Optional[Chart] = None
    fields: Dict[str, VectorField] = {}
    maps: Dict[str, Tuple[Poly, ...]] = {}
    foliations: Dict[str, FoliationGens] = {}
    curves: Dict[str, Poly] = {}

    def known(name: str) -> bool:
        return name in fields or name in maps or name in foliations or name in curves

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if chart is None:
            if not line.startswith("vars:"):
                raise ProblemError("the first declaration must be 'vars: <names>'", lineno)
            names = line[len("vars:") :].replace(",", " ").split()
            if not names:
                raise ProblemError("no variables declared", lineno)
            try:
                chart = Chart(tuple(names))
            except ValueError as exc:
                raise ProblemError(str(exc), lineno) from None
            continue
        if line.startswith("vars:"):
            raise ProblemError("variables are already declared", lineno)
        head, _, payload = line.partition("=")
        declaration = head.split()
        if len(declaration) != 2 or declaration[0] not in _KINDS or not payload.strip():
            raise ProblemError(
                "expected '<field|map|foliation|curve> <name> = <payload>'", lineno
            )
        kind, name = declaration
        if not name.isidentifier():
            raise ProblemError(f"bad name {name!r}", lineno)
        if known(name) or name in chart.variables:
            raise ProblemError(f"duplicate name {name!r}", lineno)
        payload = payload.strip()
        try:
            if kind == "field":
                coeffs = parse_field_coefficients(payload, chart)
                fields[name] = VectorField.from_coefficients(chart, coeffs)
            elif kind == "map":
                comps = tuple(
                    parse_polynomial(part, chart) for part in payload.split(",")
                )
                maps[name] = comps
            elif kind == "foliation":
                gen_names = payload.replace(",", " ").split()
                gens = []
                for g in gen_names:
                    if g not in fields:
                        raise ProblemError(f"foliation references unknown field {g!r}", lineno)
                    gens.append(fields[g])
                if not gens:
                    raise ProblemError("foliation needs at least one generator", lineno)
                foliations[name] = FoliationGens(chart, tuple(gens))
            else:  # curve
                curves[name] = parse_polynomial(payload, chart)
        except ProblemError:
            raise
        except (ParseError, ValueError) as exc:
            raise ProblemError(str(exc), lineno) from None
    if chart is None:
        raise ProblemError("empty problem file", 1)
    return ProblemFile(chart, fields, maps, foliations, curves)


# ---------------------------------------------------------------------------
# Report plumbing
# ---------------------------------------------------------------------------


def _f12(x: float) -> float:
    """Round to 12 significant digits (and normalize -0.0) for byte-stable JSON."""
    return float(f"{float(x):.12g}") + 0.0


def _field_json(v: VectorField) -> List[str]:
    return [str(c) for c in v.coefficients]


def _named_field(name: str, v: VectorField) -> Dict[str, object]:
    return {"name": name, "coefficients": _field_json(v)}


def _emit(report: Dict[str, object]) -> None:
    sys.stdout.write(json.dumps(report, indent=2) + "\n")


def _ok(op: str, inputs: Dict[str, object], result: Dict[str, object]) -> int:
    _emit({"op": op, "inputs": inputs, "result": result, "status": "ok"})
    return 0


def _fail(op: str, message: str) -> int:
    _emit({"op": op, "status": "error", "error": message})
    return 1


def _read_problem(path: Optional[str]) -> ProblemFile:
    if path is None:
        raise ValueError("this subcommand needs a problem file (or '-' for stdin)")
    if path == "-":
        return parse_problem(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as handle:
        return parse_problem(handle.read())


def _get(table: Dict[str, object], name: str, kind: str) -> object:
    if name not in table:
        raise ValueError(f"no {kind} named {name!r} in the problem file")
    return table[name]


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_bracket(args: argparse.Namespace) -> int:
    problem = _read_problem(args.problem)
    if args.v is not None and args.w is not None:
        name_v, name_w = args.v, args.w
    elif args.v is None and args.w is None:
        declared = list(problem.fields)
        if len(declared) != 2:
            raise ValueError("name two fields (the file does not declare exactly two)")
        name_v, name_w = declared
    else:
        raise ValueError("name either both fields or neither")
    v = _get(problem.fields, name_v, "field")
    w = _get(problem.fields, name_w, "field")
    result = lie_bracket(v, w)
    return _ok(
        "bracket",
        {
            "vars": list(problem.chart.variables),
            "v": _named_field(name_v, v),
            "w": _named_field(name_w, w),
        },
        {"coefficients": _field_json(result)},
    )


def _resolve_foliation(problem: ProblemFile, name: str) -> FoliationGens:
    if name in problem.foliations:
        return problem.foliations[name]
    if name in problem.maps:
        return tangent_foliation(problem.maps[name], problem.chart)
    raise ValueError(f"no foliation or map named {name!r} in the problem file")


def _cmd_invariance(args: argparse.Namespace) -> int:
    problem = _read_problem(args.problem)
    field_name = args.field if args.field is not None else problem.sole("field")
    v = _get(problem.fields, field_name, "field")
    if args.foliation is None and args.curve is None:
        raise ValueError("nothing to check: pass --foliation and/or --curve")
    inputs: Dict[str, object] = {
        "vars": list(problem.chart.variables),
        "field": _named_field(field_name, v),
    }
    result: Dict[str, object] = {}
    if args.foliation is not None:
        fol = _resolve_foliation(problem, args.foliation)
        inputs["foliation"] = {
            "name": args.foliation,
            "generators": [_field_json(g) for g in fol.generators],
        }
        verdict = is_invariant_subsheaf(fol, v)
        result["foliation"] = {
            "invariant": verdict.ok,
            "witness": None if verdict.witness is None else _field_json(verdict.witness),
        }
    if args.curve is not None:
        curve = _get(problem.curves, args.curve, "curve")
        inputs["curve"] = {"name": args.curve, "equation": str(curve)}
        result["curve"] = {"invariant": invariant_hypersurface(curve, v)}
    return _ok("invariance", inputs, result)


def _cmd_foliation(args: argparse.Namespace) -> int:
    problem = _read_problem(args.problem)
    if args.name is not None:
        name = args.name
    elif len(problem.foliations) == 1:
        name = next(iter(problem.foliations))
    elif not problem.foliations and len(problem.maps) == 1:
        name = next(iter(problem.maps))
    else:
        raise ValueError("name a foliation or map explicitly")
    fol = _resolve_foliation(problem, name)
    rank = generic_rank(fol)
    involutive = is_involutive(fol)
    if rank == len(fol.generators):
        locus: Optional[List[str]] = [str(g) for g in singular_locus(fol).generators]
        note = None
    else:
        locus = None
        note = "generators are dependent at the generic point; no minor ideal"
    result: Dict[str, object] = {
        "rank": rank,
        "involutive": involutive.ok,
        "witness": None if involutive.witness is None else _field_json(involutive.witness),
        "singular_locus": locus,
    }
    if note:
        result["note"] = note
    return _ok(
        "foliation",
        {
            "vars": list(problem.chart.variables),
            "name": name,
            "generators": [_field_json(g) for g in fol.generators],
        },
        result,
    )


def _cmd_planar(args: argparse.Namespace) -> int:
    problem = _read_problem(args.problem)
    field_name = args.field if args.field is not None else problem.sole("field")
    v = _get(problem.fields, field_name, "field")
    planar = PlanarField.from_vector_field(v)
    report = infinity_analysis(planar)
    result: Dict[str, object] = {
        "degree": planar.degree,
        "saturated_coefficients": [str(planar.a), str(planar.b)],
        "Q": str(report.q_form),
        "P": str(report.p_restricted),
        "line_invariant": report.line_invariant,
        "w_s": str(report.w_s),
        "w_t": str(report.w_t),
        "sing_infinity": None if report.sing_infinity is None else str(report.sing_infinity),
        "rational_infinity_points": [[str(px), str(py)] for px, py in report.rational_points],
    }
    inputs: Dict[str, object] = {
        "vars": list(problem.chart.variables),
        "field": _named_field(field_name, v),
    }
    if args.curve is not None:
        curve = _get(problem.curves, args.curve, "curve")
        inputs["curve"] = {"name": args.curve, "equation": str(curve)}
        result["curve_verdict"] = invariant_curve_constraint(curve, planar)
    return _ok("planar", inputs, result)


def _cmd_flow_series(args: argparse.Namespace) -> int:
    problem = _read_problem(args.problem)
    field_name = args.v if args.v is not None else problem.sole("field")
    v = _get(problem.fields, field_name, "field")
    target = args.target
    inputs: Dict[str, object] = {
        "vars": list(problem.chart.variables),
        "field": _named_field(field_name, v),
        "order": args.order,
    }
    if target in problem.fields:
        series = flow_series_field(v, problem.fields[target], args.order)
        inputs["target"] = {"kind": "field", "name": target}
        coeffs: object = [_field_json(c) for c in series.coefficients]
    elif target in problem.curves:
        series = flow_series_function(v, problem.curves[target], args.order)
        inputs["target"] = {"kind": "function", "name": target}
        coeffs = [str(c) for c in series.coefficients]
    else:
        raise ValueError(f"no field or curve named {target!r} to expand")
    return _ok(
        "flow-series",
        inputs,
        {"kind": series.kind, "order": series.order, "coefficients": coeffs},
    )


def _cmd_anosov(args: argparse.Namespace) -> int:
    bounds = hyperbolic.verify_anosov_bounds(
        samples=args.samples,
        t_max=args.t_max,
        seed=args.seed,
        swap_bundles=args.swap_bundles,
    )
    state = hyperbolic.fixed_point()
    lines = hyperbolic.classify_invariant_lines(state, 1)
    planes = hyperbolic.classify_invariant_planes(state, 1)
    coverage = hyperbolic.leaf_density(args.epsilon, args.arc_length)
    control = hyperbolic.leaf_density(args.epsilon, args.arc_length, direction=(1.0, 1.0))
    result = {
        "bounds": {
            "lambda_stable": _f12(bounds.lambda_stable_est),
            "lambda_unstable": _f12(bounds.lambda_unstable_est),
            "lambda_stable_backward": _f12(bounds.lambda_stable_backward),
            "lambda_unstable_backward": _f12(bounds.lambda_unstable_backward),
            "C_stable": _f12(bounds.c_stable),
            "C_unstable": _f12(bounds.c_unstable),
            "C_stable_lower": _f12(bounds.c_stable_lower),
            "flow_exponent": _f12(bounds.flow_exponent),
            "passed": bounds.passed,
        },
        "closed_orbit": {
            "state": [0.0, 0.0, 0.0],
            "period": 1,
            "lines": [
                {
                    "label": line.label,
                    "eigenvalue": _f12(line.eigenvalue),
                    "direction": [_f12(c) for c in line.direction],
                }
                for line in lines
            ],
            "line_count": len(lines),
            "planes": [
                {
                    "label": plane.label,
                    "basis": [[_f12(c) for c in vec] for vec in plane.basis],
                }
                for plane in planes
            ],
            "plane_count": len(planes),
        },
        "leaf_density": {
            "epsilon": _f12(args.epsilon),
            "arc_length": _f12(args.arc_length),
            "coverage": _f12(coverage),
            "control_coverage": _f12(control),
        },
    }
    inputs = {
        "seed": args.seed,
        "samples": args.samples,
        "t_max": args.t_max,
        "epsilon": _f12(args.epsilon),
        "arc_length": _f12(args.arc_length),
        "swap_bundles": args.swap_bundles,
    }
    return _ok("anosov", inputs, result)


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liefol",
        description="Lie calculus, foliations, and the hyperbolic suspension bench.",
    )
    sub = parser.add_subparsers(dest="op", required=True)

    p = sub.add_parser("bracket", help="Lie bracket of two declared fields")
    p.add_argument("problem", nargs="?", help="problem file ('-' for stdin)")
    p.add_argument("v", nargs="?", default=None, help="first field name")
    p.add_argument("w", nargs="?", default=None, help="second field name")
    p.set_defaults(handler=_cmd_bracket)

    p = sub.add_parser("invariance", help="invariance of a foliation and/or curve under a field")
    p.add_argument("problem", nargs="?")
    p.add_argument("--field", default=None, help="field name (default: the only field)")
    p.add_argument("--foliation", default=None, help="foliation or map name")
    p.add_argument("--curve", default=None, help="curve name")
    p.set_defaults(handler=_cmd_invariance)

    p = sub.add_parser("foliation", help="rank, involutivity, and singular locus")
    p.add_argument("problem", nargs="?")
    p.add_argument("name", nargs="?", default=None, help="foliation or map name")
    p.set_defaults(handler=_cmd_foliation)

    p = sub.add_parser("planar", help="behaviour at the line at infinity")
    p.add_argument("problem", nargs="?")
    p.add_argument("--field", default=None)
    p.add_argument("--curve", default=None, help="check the curve's constraint at infinity")
    p.set_defaults(handler=_cmd_planar)

    p = sub.add_parser("flow-series", help="formal flow expansion of a function or field")
    p.add_argument("problem", nargs="?")
    p.add_argument("target", help="name of the curve (function) or field to expand")
    p.add_argument("--v", default=None, help="flowing field (default: the only field)")
    p.add_argument("--order", type=int, default=8)
    p.set_defaults(handler=_cmd_flow_series)

    p = sub.add_parser("anosov", help="suspension bench: bounds, lines, planes, leaf density")
    p.add_argument("problem", nargs="?", help="ignored; present for interface uniformity")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--t-max", type=int, default=100)
    p.add_argument("--epsilon", type=float, default=0.05)
    p.add_argument("--arc-length", type=float, default=2000.0)
    p.add_argument("--swap-bundles", action="store_true", help="negative control")
    p.set_defaults(handler=_cmd_anosov)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except BrokenPipeError:  # pragma: no cover
        return 1
    except (ValueError, KeyError, OSError, ZeroDivisionError) as exc:
        return _fail(args.op, str(exc))


if __name__ == "__main__":
    sys.exit(main())
