"""Command-line front end.

Subcommands mirror the library operations one-to-one; all invariant
values are printed as exact rationals (``{"num": .., "den": ..}`` in
JSON mode), never floats.  Output is deterministic: keys sorted, fixed
formatting.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import calculus, classical, diagram, generator, linking
from .errors import (
    AsymmetricEntry,
    BandObstructed,
    CurvesIntersect,
    DuplicateIndex,
    HaefligerError,
    InconsistentEvent,
    IndexOutOfRange,
    InvalidParams,
    LabelMismatch,
    MalformedToken,
    NonGenericProjection,
    NonIntegerResult,
    NonRealizable,
    ParseError,
)

EXIT_CODES = {
    ParseError: 2,
    IndexOutOfRange: 3,
    AsymmetricEntry: 4,
    DuplicateIndex: 5,
    InconsistentEvent: 6,
    NonGenericProjection: 7,
    CurvesIntersect: 8,
    BandObstructed: 9,
    InvalidParams: 10,
    MalformedToken: 11,
    LabelMismatch: 12,
    NonIntegerResult: 13,
    NonRealizable: 14,
}
GENERIC_ERROR = 15


def _rational(value) -> dict:
    frac = Fraction(value)
    return {"num": frac.numerator, "den": frac.denominator}


def _format_value(value):
    if isinstance(value, Fraction):
        return _rational(value)
    return value


def emit_report(result: dict, as_json: bool) -> str:
    """Render a result mapping as stable JSON or aligned human text."""
    rendered = {k: _format_value(v) for k, v in result.items()}
    if as_json:
        return json.dumps(rendered, sort_keys=True, separators=(",", ":"))
    lines = []
    for key in sorted(rendered):
        value = rendered[key]
        if isinstance(value, dict) and set(value) == {"num", "den"}:
            if value["den"] == 1:
                value = str(value["num"])
            else:
                value = f"{value['num']}/{value['den']}"
        lines.append(f"{key}: {value}")
    return "\n".join(lines)


def _load_json(path: str) -> dict:
    try:
        with open(path) as handle:
            return json.load(handle)
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _axis(arg: str | None) -> linking.ProjectionAxis:
    if arg is None:
        return linking.EZ
    try:
        parts = [float(x) for x in arg.split(",")]
        if len(parts) != 3:
            raise ValueError("need three components")
    except ValueError as exc:
        raise ParseError(f"bad axis {arg!r}: {exc}") from exc
    return linking.ProjectionAxis(tuple(parts))


def _indices(arg: str) -> list[int]:
    try:
        return [int(x) for x in arg.split(",") if x]
    except ValueError as exc:
        raise ParseError(f"bad index list {arg!r}") from exc


def _two_curves(path: str) -> tuple[linking.PolyCurve, linking.PolyCurve]:
    curves = linking.curves_from_dict(_load_json(path))
    if len(curves) != 2:
        raise ParseError(f"{path}: expected exactly 2 components")
    return curves[0], curves[1]


def _cmd_lk(args) -> dict:
    m, n = _two_curves(args.curves)
    result = {"lk": linking.linking_number_pl(m, n, _axis(args.axis))}
    if args.quadrature:
        result["quadrature"] = linking.gauss_linking_quadrature(
            m, n, args.quadrature
        )
    return result


def _cmd_writhe(args) -> dict:
    curves = linking.curves_from_dict(_load_json(args.curves))
    axis = _axis(args.axis)
    return {
        f"writhe_{i}": linking.writhe_pl(curve, axis)
        for i, curve in enumerate(curves)
    }


def _cmd_delta_h(args) -> dict:
    d = diagram.diagram_from_dict(_load_json(args.diagram))
    switched = set(_indices(args.switch))
    value = calculus.delta_h_reduced(d, switched)
    full = calculus.delta_h_full(d, switched)
    assert value == full
    return {"delta_h": value}


def _cmd_vfinite(args) -> dict:
    from itertools import combinations

    d = diagram.diagram_from_dict(_load_json(args.diagram))
    indices = _indices(args.indices)
    h0 = Fraction(args.h0)
    result = {"v": calculus.v_alternating(h0, d, indices)}
    if args.verbose:
        for r in range(len(indices) + 1):
            for subset in combinations(indices, r):
                key = "h_S_" + ",".join(str(i) for i in subset)
                result[key] = h0 - calculus.delta_h_full(d, subset)
    return result


def _cmd_e_jump(args) -> dict:
    event = calculus.HomotopyEvent(
        kind=args.kind,
        sign=args.sign,
        index=args.index,
        joins_components=args.joins,
        lk00=args.lk00,
        lk11=args.lk11,
        pattern=args.pattern,
    )
    return {"jump": calculus.e_jump(event, args.k)}


def _cmd_generator(args) -> dict:
    result: dict = {
        "diagram": diagram.diagram_to_dict(generator.generator_diagram(args.k))
    }
    if args.curves:
        params = generator.BorromeanParams(
            alpha=Fraction(args.alpha), beta=Fraction(args.beta), k=args.k
        )
        labeled = generator.generator_double_point_curves(params, n=args.resolution)
        result["curves"] = linking.curves_to_dict([c.curve for c in labeled])
        result["labels"] = [
            {"i": c.lift.crossing, "e": c.lift.level, "sphere": c.sphere}
            for c in labeled
        ]
    return result


def _cmd_v2(args) -> dict:
    code = args.code
    if args.file:
        with open(code) as handle:
            code = handle.read()
    g = classical.parse_gauss_code(code)
    result: dict = {"v2": classical.v2(g)}
    if args.verbose:
        descended = classical.switch(g, classical.descending_set(g))
        result["x_pairing"] = classical.x_pairing(g)
        result["x_pairing_descending"] = classical.x_pairing(descended)
        result["descending_set"] = sorted(classical.descending_set(g))
    return result


def _cmd_jacobian(args) -> dict:
    return {"det": calculus.jacobian_det(args.k)}


def _cmd_murai_ohba(args) -> dict:
    l0, l1 = _two_curves(args.curves)
    d, switched, delta = calculus.murai_ohba_certificate(l0, l1, _axis(args.axis))
    return {
        "diagram": diagram.diagram_to_dict(d),
        "switch": sorted(switched),
        "delta_h": delta,
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="haefliger",
        description="Crossing-change calculus for high-dimensional knot invariants",
    )
    parser.add_argument(
        "--format", choices=("human", "json"), default="human",
        help="output format (default: human)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lk", help="linking number of a 2-component curve file")
    p.add_argument("curves")
    p.add_argument("--axis", help="projection axis as x,y,z (default 0,0,1)")
    p.add_argument(
        "--quadrature", type=int, default=0, metavar="N",
        help="also report the Gauss integral with N subdivisions",
    )
    p.set_defaults(func=_cmd_lk)

    p = sub.add_parser("writhe", help="writhe of each component of a curve file")
    p.add_argument("curves")
    p.add_argument("--axis")
    p.set_defaults(func=_cmd_writhe)

    p = sub.add_parser("delta-h", help="invariant difference under crossing changes")
    p.add_argument("diagram")
    p.add_argument("--switch", required=True, help="comma-separated crossing indices")
    p.set_defaults(func=_cmd_delta_h)

    p = sub.add_parser("vfinite", help="alternating finite-type sum")
    p.add_argument("diagram")
    p.add_argument("--indices", required=True)
    p.add_argument("--h0", default="0", help="base invariant value (rational)")
    p.add_argument("--verbose", action="store_true",
                   help="include the subset lattice values")
    p.set_defaults(func=_cmd_vfinite)

    p = sub.add_parser("e-jump", help="jump of the immersion invariant at an event")
    p.add_argument("--kind", required=True, choices=(
        "definite_tangency", "indefinite_tangency", "triple_point"))
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--sign", type=int, default=1, choices=(1, -1))
    p.add_argument("--index", type=int, help="index of the quadratic form")
    p.add_argument("--joins", action="store_true",
                   help="the deformation joins two components")
    p.add_argument("--lk00", type=int, default=0)
    p.add_argument("--lk11", type=int, default=0)
    p.add_argument("--pattern", choices=(
        "all_distinct", "i_eq_j", "p_eq_i", "j_eq_p", "all_equal"))
    p.set_defaults(func=_cmd_e_jump)

    p = sub.add_parser("generator", help="emit the six-crossing generator data")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--curves", action="store_true",
                   help="include the twelve k=1 double point circles")
    p.add_argument("--alpha", default="4")
    p.add_argument("--beta", default="1")
    p.add_argument("--resolution", type=int, default=64)
    p.set_defaults(func=_cmd_generator)

    p = sub.add_parser("v2", help="classical order-2 invariant of a Gauss code")
    p.add_argument("code", help="extended Gauss code, or a file with --file")
    p.add_argument("--file", action="store_true")
    p.add_argument("--verbose", action="store_true",
                   help="include pairing values and the descending set")
    p.set_defaults(func=_cmd_v2)

    p = sub.add_parser("jacobian", help="determinant of the crossing-count Jacobian")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_jacobian)

    p = sub.add_parser("murai-ohba", help="single-crossing unknotting certificate")
    p.add_argument("curves")
    p.add_argument("--axis")
    p.set_defaults(func=_cmd_murai_ohba)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except HaefligerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        for klass, code in EXIT_CODES.items():
            if isinstance(exc, klass):
                return code
        return GENERIC_ERROR
    print(emit_report(result, as_json=args.format == "json"))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
