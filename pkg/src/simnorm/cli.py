"""Command line interface: normalize, classify, convert, compare, draw.

Every command builds one or more ReportRecord values and prints them in
either human-readable text or structured JSON (one record per line).
Numbers are serialized with repr so 64-bit values round-trip exactly.

Exit codes: 0 success, 2 parse or validation error, 3 domain error
(unbounded type, degenerate input, out-of-domain point, arity mismatch),
4 I/O error.  Diagnostics go to stderr as "error: <ErrorName>: <detail>".
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, fields

from .conversions import (
    DEGENERATE,
    angles_from_normal_point,
    angles_from_sides,
    normal_point_from_sides,
    sides_from_angles,
)
from .errors import (
    ArityMismatch,
    DegenerateAngles,
    DegenerateQuad,
    DegenerateSegment,
    GeometryError,
    InvalidSides,
    OutOfDomain,
    PreconditionViolated,
    UnboundedType,
)
from .figures import domain_figure, render_svg, with_point, with_triangle
from .geometry import Point, Tolerance
from .quads import Quadrilateral, in_d_region, normalize_quad
from .triangles import (
    AngleTriple,
    FormKind,
    SideLengths,
    Triangle,
    circle_normal_form,
    classify,
    c_normal_point,
    in_c_domain,
    in_domain,
    normal_point,
    side_lengths,
    triangle_from_sides,
)

_VALIDATION_ERRORS = (InvalidSides, ValueError)
_DOMAIN_ERRORS = (
    UnboundedType,
    DegenerateAngles,
    DegenerateQuad,
    OutOfDomain,
    ArityMismatch,
    DegenerateSegment,
    PreconditionViolated,
)


@dataclass(frozen=True)
class ShapeInput:
    """Exactly one populated variant: vertex list, side lengths, or angles."""

    points: tuple[Point, ...] | None = None
    sides: tuple[float, float, float] | None = None
    angles: tuple[float, float, float] | None = None

    def arity(self) -> int:
        if self.points is not None:
            return len(self.points)
        return 3


@dataclass(frozen=True)
class ReportRecord:
    """Flat serializable result of one computation; unset fields are None."""

    command: str
    form_kind: str | None = None
    normal_point: tuple[float, float] | None = None
    circle_vertices: tuple[tuple[float, float], ...] | None = None
    quad_c: tuple[float, float] | None = None
    quad_d: tuple[float, float] | None = None
    in_domain: bool | None = None
    angle_class: str | None = None
    side_class: str | None = None
    angles: tuple[float, float, float] | None = None
    side_ratios: tuple[float, float, float] | None = None
    degenerate: bool | None = None
    similar: bool | None = None
    key_a: tuple[float, ...] | None = None
    key_b: tuple[float, ...] | None = None
    outputs: tuple[str, ...] | None = None

    def to_dict(self) -> dict:
        out: dict = {}
        for f in fields(self):
            value = getattr(self, f.name)
            if value is not None:
                out[f.name] = _jsonable(value)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> ReportRecord:
        kwargs = {f.name: _tupled(data[f.name]) for f in fields(cls) if f.name in data}
        return cls(**kwargs)


def _jsonable(value):
    if isinstance(value, tuple):
        return [_jsonable(v) for v in value]
    return value


def _tupled(value):
    if isinstance(value, list):
        return tuple(_tupled(v) for v in value)
    return value


def _format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, tuple):
        if value and isinstance(value[0], tuple):
            return "; ".join(_format_value(v) for v in value)
        return "(" + ", ".join(_format_value(v) for v in value) + ")"
    return str(value)


def _emit(records: list[ReportRecord], fmt: str) -> None:
    if fmt == "structured":
        for rec in records:
            sys.stdout.write(json.dumps(rec.to_dict(), sort_keys=True) + "\n")
        return
    blocks = []
    for rec in records:
        lines = [
            f"{f.name}: {_format_value(getattr(rec, f.name))}"
            for f in fields(rec)
            if getattr(rec, f.name) is not None
        ]
        blocks.append("\n".join(lines))
    sys.stdout.write("\n\n".join(blocks) + "\n")


def _parse_point(token: str) -> Point:
    parts = token.split(",")
    if len(parts) != 2:
        raise ValueError(f"point must be 'x,y', got {token!r}")
    return Point(float(parts[0]), float(parts[1]))


def _shape_from_args(args, prefix: str = "") -> ShapeInput:
    points = getattr(args, prefix + "points", None)
    sides = getattr(args, prefix + "sides", None)
    angles = getattr(args, prefix + "angles", None)
    if points is not None:
        pts = tuple(_parse_point(tok) for tok in points)
        if len(pts) not in (3, 4):
            raise ValueError(f"expected 3 or 4 points, got {len(pts)}")
        return ShapeInput(points=pts)
    if sides is not None:
        return ShapeInput(sides=tuple(sides))
    values = tuple(angles)
    if args.degrees:
        values = tuple(math.radians(v) for v in values)
    return ShapeInput(angles=values)


def _triangle_and_sides(shape: ShapeInput) -> tuple[Triangle, SideLengths]:
    if shape.points is not None:
        t = Triangle.of(*shape.points)
        return t, side_lengths(t)
    if shape.sides is not None:
        s = SideLengths.of(*shape.sides)
    else:
        s = sides_from_angles(AngleTriple(*shape.angles))
    return triangle_from_sides(s), s


def _report_angles(s: SideLengths, tol: Tolerance, degrees: bool):
    try:
        ang = angles_from_sides(s, tol)
    except DegenerateAngles:
        return None
    return _angles_out(ang.as_tuple(), degrees)


def _angles_out(values: tuple[float, float, float], degrees: bool):
    if degrees:
        return tuple(math.degrees(v) for v in values)
    return values


def _point_pair(p: Point) -> tuple[float, float]:
    return (p.x, p.y)


def _triangle_record(
    command: str, shape: ShapeInput, kind: FormKind, tol: Tolerance, degrees: bool
) -> ReportRecord:
    t, s = _triangle_and_sides(shape)
    cls = classify(t, tol)
    angles = _report_angles(s, tol, degrees)
    if kind is FormKind.CIRCLE:
        ref = circle_normal_form(angles_from_sides(s, tol))
        return ReportRecord(
            command=command,
            form_kind=kind.value,
            circle_vertices=tuple(_point_pair(v) for v in ref.vertices),
            angle_class=cls.angle_class.value,
            side_class=cls.side_class.value,
            angles=angles,
            side_ratios=s.ratios(),
        )
    if shape.points is not None:
        p = normal_point(kind, t, tol)
    else:
        p = normal_point_from_sides(kind, s)
    return ReportRecord(
        command=command,
        form_kind=kind.value,
        normal_point=_point_pair(p),
        in_domain=in_domain(kind, p, tol),
        angle_class=cls.angle_class.value,
        side_class=cls.side_class.value,
        angles=angles,
        side_ratios=s.ratios(),
        degenerate=True if angles is None else None,
    )


def _quad_record(command: str, shape: ShapeInput, tol: Tolerance) -> ReportRecord:
    nf = normalize_quad(Quadrilateral.of(*shape.points), tol)
    ok = in_c_domain(nf.c, tol) and in_d_region(nf.d, nf.c, tol)
    return ReportRecord(
        command=command,
        quad_c=_point_pair(nf.c),
        quad_d=_point_pair(nf.d),
        in_domain=ok,
    )


def _kind_from_args(args) -> FormKind:
    return FormKind(args.kind) if args.kind is not None else FormKind.C_VERTEX


_BATCH_ARITY = {"sides": (3,), "angles": (3,), "points": (6, 8)}


def _batch_shapes(path: str, degrees: bool) -> list[tuple[int, ShapeInput]]:
    shapes = []
    with open(path, encoding="utf-8") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            try:
                shapes.append((lineno, _batch_shape(line, degrees)))
            except (GeometryError, ValueError) as exc:
                raise type(exc)(f"line {lineno}: {exc}") from exc
    return shapes


def _batch_shape(line: str, degrees: bool) -> ShapeInput:
    tag, *rest = line.split()
    if tag not in _BATCH_ARITY:
        raise ValueError(f"unknown record tag {tag!r}")
    values = [float(tok) for tok in rest]
    if len(values) not in _BATCH_ARITY[tag]:
        raise ValueError(f"record {tag!r} takes {_BATCH_ARITY[tag]} numbers, got {len(values)}")
    if tag == "sides":
        return ShapeInput(sides=tuple(values))
    if tag == "angles":
        if degrees:
            values = [math.radians(v) for v in values]
        return ShapeInput(angles=tuple(values))
    pts = tuple(Point(values[i], values[i + 1]) for i in range(0, len(values), 2))
    return ShapeInput(points=pts)


def _cmd_normalize(args, tol: Tolerance) -> list[ReportRecord]:
    if args.batch is not None:
        numbered = _batch_shapes(args.batch, args.degrees)
    else:
        numbered = [(0, _shape_from_args(args))]
    records = []
    for lineno, shape in numbered:
        try:
            if shape.arity() == 4:
                if args.kind is not None:
                    raise ArityMismatch("--kind applies to triangles; got 4 points")
                records.append(_quad_record("normalize", shape, tol))
            else:
                records.append(
                    _triangle_record("normalize", shape, _kind_from_args(args), tol, args.degrees)
                )
        except (GeometryError, ValueError) as exc:
            if lineno == 0:
                raise
            # batch runs fail fast, pointing at the offending record
            raise type(exc)(f"line {lineno}: {exc}") from exc
    return records


def _cmd_classify(args, tol: Tolerance) -> list[ReportRecord]:
    shape = _shape_from_args(args)
    if shape.arity() != 3:
        raise ArityMismatch("classify applies to triangles; got 4 points")
    t, s = _triangle_and_sides(shape)
    cls = classify(t, tol)
    return [
        ReportRecord(
            command="classify",
            angle_class=cls.angle_class.value,
            side_class=cls.side_class.value,
            angles=_report_angles(s, tol, args.degrees),
            side_ratios=s.ratios(),
        )
    ]


def _cmd_convert(args, tol: Tolerance) -> list[ReportRecord]:
    kind = _kind_from_args(args)
    if args.point is not None:
        p = _parse_point(args.point)
        recovered = angles_from_normal_point(kind, p, tol)
        if recovered is DEGENERATE:
            return [
                ReportRecord(
                    command="convert",
                    form_kind=kind.value,
                    normal_point=_point_pair(p),
                    degenerate=True,
                )
            ]
        s = sides_from_angles(recovered, kind)
        return [
            ReportRecord(
                command="convert",
                form_kind=kind.value,
                normal_point=_point_pair(p),
                angles=_angles_out(recovered.as_tuple(), args.degrees),
                side_ratios=s.ratios(),
            )
        ]
    shape = _shape_from_args(args)
    return [_triangle_record("convert", shape, kind, tol, args.degrees)]


def _cmd_similar(args, tol: Tolerance) -> list[ReportRecord]:
    a = _shape_from_args(args, "a_")
    b = _shape_from_args(args, "b_")
    if a.arity() != b.arity():
        raise ArityMismatch(f"cannot compare arity {a.arity()} with arity {b.arity()}")
    if a.arity() == 4:
        fa = normalize_quad(Quadrilateral.of(*a.points), tol)
        fb = normalize_quad(Quadrilateral.of(*b.points), tol)
        verdict = fa.close_to(fb, tol)
        key_a = _point_pair(fa.c) + _point_pair(fa.d)
        key_b = _point_pair(fb.c) + _point_pair(fb.d)
    else:
        pa = c_normal_point(_triangle_and_sides(a)[0])
        pb = c_normal_point(_triangle_and_sides(b)[0])
        verdict = pa.close_to(pb, tol)
        key_a = _point_pair(pa)
        key_b = _point_pair(pb)
    return [
        ReportRecord(command="similar", similar=verdict, key_a=key_a, key_b=key_b)
    ]


def _cmd_quad_normalize(args, tol: Tolerance) -> list[ReportRecord]:
    shape = _shape_from_args(args)
    if shape.arity() != 4:
        raise ArityMismatch("quad-normalize needs exactly 4 points")
    return [_quad_record("quad-normalize", shape, tol)]


def _write_text(path: str, text: str) -> None:
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)


_ALL_KINDS = (FormKind.A_VERTEX, FormKind.B_VERTEX, FormKind.C_VERTEX, FormKind.CIRCLE)


def _cmd_domains(args, tol: Tolerance) -> list[ReportRecord]:
    if args.kind is None or args.kind == "all":
        kinds = _ALL_KINDS
        out_dir = args.out if args.out is not None else "."
        paths = [os.path.join(out_dir, f"domain_{k.value}.svg") for k in kinds]
    else:
        kinds = (FormKind(args.kind),)
        paths = [args.out if args.out is not None else f"domain_{args.kind}.svg"]
    for kind, path in zip(kinds, paths):
        _write_text(path, render_svg(domain_figure(kind)))
    return [ReportRecord(command="domains", outputs=tuple(paths))]


def _cmd_plot(args, tol: Tolerance) -> list[ReportRecord]:
    kind = _kind_from_args(args)
    shape = _shape_from_args(args)
    if shape.arity() != 3:
        raise ArityMismatch("plot applies to triangles; got 4 points")
    record = _triangle_record("plot", shape, kind, tol, args.degrees)
    fig = domain_figure(kind)
    if kind is FormKind.CIRCLE:
        verts = tuple(Point(x, y) for x, y in record.circle_vertices)
        fig = with_triangle(fig, Triangle(verts))
    else:
        x, y = record.normal_point
        fig = with_point(fig, Point(x, y), f"({x:.4f}, {y:.4f})")
    path = args.out if args.out is not None else f"plot_{kind.value}.svg"
    _write_text(path, render_svg(fig))
    return [
        ReportRecord(
            command="plot",
            form_kind=record.form_kind,
            normal_point=record.normal_point,
            circle_vertices=record.circle_vertices,
            outputs=(path,),
        )
    ]


def _add_shape_flags(parser: argparse.ArgumentParser, batch: bool = False) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--points", nargs="+", metavar="X,Y", help="3 or 4 vertices")
    group.add_argument("--sides", nargs=3, type=float, metavar="L", help="3 side lengths")
    group.add_argument("--angles", nargs=3, type=float, metavar="A", help="3 interior angles")
    if batch:
        group.add_argument("--batch", metavar="FILE", help="file of 'tag numbers...' records")
    else:
        parser.set_defaults(batch=None)


def _add_pair_flags(parser: argparse.ArgumentParser, prefix: str) -> None:
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument(f"--{prefix}-points", nargs="+", metavar="X,Y")
    group.add_argument(f"--{prefix}-sides", nargs=3, type=float, metavar="L")
    group.add_argument(f"--{prefix}-angles", nargs=3, type=float, metavar="A")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--eps", type=float, default=1e-9, help="comparison tolerance")
    common.add_argument("--degrees", action="store_true", help="angles in degrees")
    common.add_argument(
        "--format", choices=("text", "structured"), default="text", help="output format"
    )

    parser = argparse.ArgumentParser(
        prog="simnorm",
        description="Canonical representatives of triangles and quadrilaterals up to similarity.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("normalize", parents=[common], help="compute a normal form")
    _add_shape_flags(p, batch=True)
    p.add_argument("--kind", choices=("a", "b", "c", "circle"), default=None)
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("classify", parents=[common], help="angle and side classification")
    _add_shape_flags(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("convert", parents=[common], help="convert between representations")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--points", nargs="+", metavar="X,Y")
    group.add_argument("--sides", nargs=3, type=float, metavar="L")
    group.add_argument("--angles", nargs=3, type=float, metavar="A")
    group.add_argument("--point", metavar="X,Y", help="normal point to invert")
    p.add_argument("--kind", choices=("a", "b", "c", "circle"), default=None)
    p.set_defaults(func=_cmd_convert, batch=None)

    p = sub.add_parser("similar", parents=[common], help="decide similarity of two shapes")
    _add_pair_flags(p, "a")
    _add_pair_flags(p, "b")
    p.set_defaults(func=_cmd_similar)

    p = sub.add_parser("quad-normalize", parents=[common], help="quadrilateral normal form")
    _add_shape_flags(p)
    p.set_defaults(func=_cmd_quad_normalize)

    p = sub.add_parser("domains", parents=[common], help="render domain figures to SVG")
    p.add_argument("--kind", choices=("a", "b", "c", "circle", "all"), default=None)
    p.add_argument("--out", help="output file (directory for --kind all)")
    p.set_defaults(func=_cmd_domains)

    p = sub.add_parser("plot", parents=[common], help="domain figure with a shape's normal point")
    _add_shape_flags(p)
    p.add_argument("--kind", choices=("a", "b", "c", "circle"), default=None)
    p.add_argument("--out", help="output SVG file")
    p.set_defaults(func=_cmd_plot)

    return parser


def _fail(exc: BaseException, code: int) -> int:
    sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
    return code


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        tol = Tolerance(args.eps)
        records = args.func(args, tol)
    except InvalidSides as exc:
        return _fail(exc, 2)
    except _DOMAIN_ERRORS as exc:
        return _fail(exc, 3)
    except GeometryError as exc:
        return _fail(exc, 3)
    except ValueError as exc:
        return _fail(exc, 2)
    except OSError as exc:
        return _fail(exc, 4)
    _emit(records, args.format)
    return 0
