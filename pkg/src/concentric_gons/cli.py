"""Command-line interface.

Exit codes are strict: 0 for success/feasible, 2 for mathematically
infeasible or empty results, 1 for usage or parse errors. With ``--json``
the machine-readable document goes to stdout; otherwise a short human
summary is printed. JSON and SVG output are byte-deterministic.
"""

import argparse
import sys

from .errors import (
    CoincidentAuxiliaryCircles,
    GeometryError,
    InfeasibleFamily,
    InfeasibleMoments,
    MismatchedOrder,
)
from .geom import PlanePoint, Tolerance
from .instances import (
    FORMAT_NAME,
    InstanceDocument,
    InstanceFormatError,
    dump_canonical,
    load_instance,
    polygon_record,
)
from .moments import (
    CircleFamily,
    MAX_VERTEX_COUNT,
    assess_feasibility,
    cyclic_averages,
    recover_circumradii,
)
from .oracle import angle_sweep, power_identity_residual, random_instance
from .pairing import candidate_centers, pair_polygons
from .reconstruct import reconstruct_polygons
from .svg import render_configuration

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2

IDENTITY_TOLERANCE = 1e-10
SWEEP_TOLERANCE = 1e-6
CERTIFICATION_SAMPLES = 200
CERTIFICATION_ORDERS = range(3, 13)


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; remap to the usage code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _parse_radii(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(part) for part in text.split(",") if part.strip() != "")
    except ValueError:
        raise InstanceFormatError(f"cannot parse radii list {text!r}") from None
    if len(values) < 3:
        raise InstanceFormatError("need at least 3 radii")
    return values


def _family_from_args(args) -> CircleFamily:
    if args.radii is not None:
        values = _parse_radii(args.radii)
        if sorted(values) != list(values):
            print("warning: radii were not sorted ascending; sorting", file=sys.stderr)
            values = tuple(sorted(values))
        return CircleFamily(center=PlanePoint(0.0, 0.0), radii=values)
    if args.input is not None:
        doc = load_instance(args.input)
        for note in doc.load_warnings:
            print(f"warning: {note}", file=sys.stderr)
        if doc.kind != "circles":
            raise InstanceFormatError(f"expected a circles instance, got {doc.kind}")
        return doc.circles
    raise InstanceFormatError("provide --radii or --input")


def _tolerance_from_args(args) -> Tolerance:
    if args.tol is None:
        return Tolerance()
    return Tolerance(relative_eps=args.tol)


def _report_record(report) -> dict:
    return {
        "condition1_ok": report.condition1_ok,
        "condition1_ratio": report.condition1_ratio,
        "condition2_ok": report.condition2_ok,
        "condition2_residuals": [
            {"m": m, "residual": res}
            for m, res in enumerate(report.condition2_residuals, start=3)
        ],
        "degenerate_single_polygon": report.degenerate_single_polygon,
    }


def _emit(args, payload: dict, human_lines: list[str]) -> None:
    if args.json:
        sys.stdout.write(dump_canonical(payload))
    else:
        for line in human_lines:
            print(line)


def cmd_check(args) -> int:
    tol = _tolerance_from_args(args)
    family = _family_from_args(args)
    averages = cyclic_averages(family, max_n=args.max_n)
    report = assess_feasibility(averages, tol)
    recovered = None
    try:
        pair = recover_circumradii(averages, tol)
        recovered = {
            "larger": pair.larger,
            "smaller": pair.smaller,
            "degenerate": pair.degenerate,
        }
    except InfeasibleMoments:
        pass
    payload = {
        "format": FORMAT_NAME,
        "command": "check",
        "n": family.n,
        "radii": list(family.radii),
        "feasible": report.feasible,
        "report": _report_record(report),
        "recovered": recovered,
    }
    lines = [
        f"n = {family.n}",
        f"feasible: {'yes' if report.feasible else 'no'}",
        f"condition 1 ratio: {report.condition1_ratio!r} (ok: {report.condition1_ok})",
        f"condition 2 ok: {report.condition2_ok}",
    ]
    for m, res in enumerate(report.condition2_residuals, start=3):
        lines.append(f"  m={m} residual: {res!r}")
    if recovered is not None:
        lines.append(
            f"circumradii: {recovered['larger']!r}, {recovered['smaller']!r}"
            + (" (single polygon)" if recovered["degenerate"] else "")
        )
    _emit(args, payload, lines)
    return EXIT_OK if report.feasible else EXIT_INFEASIBLE


def _reconstruction_svg(family: CircleFamily, rec) -> str:
    return render_configuration(
        circles=[(family.center, r) for r in family.radii],
        polygons=[rec.polygon1, rec.polygon2],
        centers=[rec.polygon1.center, rec.polygon2.center],
        common_points=[family.center],
    )


def cmd_reconstruct(args) -> int:
    tol = _tolerance_from_args(args)
    family = _family_from_args(args)
    cyclic_averages(family, max_n=args.max_n)  # enforce the vertex-count cap
    try:
        rec = reconstruct_polygons(family, tol)
    except InfeasibleFamily as exc:
        payload = {
            "format": FORMAT_NAME,
            "command": "reconstruct",
            "n": family.n,
            "radii": list(family.radii),
            "feasible": False,
            "report": _report_record(exc.report),
        }
        _emit(args, payload, ["feasible: no"])
        return EXIT_INFEASIBLE
    payload = {
        "format": FORMAT_NAME,
        "command": "reconstruct",
        "n": family.n,
        "radii": list(family.radii),
        "feasible": True,
        "report": _report_record(rec.report),
        "circumradii": {
            "larger": rec.circumradii.larger,
            "smaller": rec.circumradii.smaller,
            "degenerate": rec.circumradii.degenerate,
        },
        "polygons": [polygon_record(rec.polygon1), polygon_record(rec.polygon2)],
        "point_polygon": rec.point_polygon,
        "residuals": list(rec.residuals),
    }
    lines = [
        "feasible: yes",
        f"circumradii: {rec.circumradii.larger!r}, {rec.circumradii.smaller!r}",
        f"polygon 1: center ({rec.polygon1.center.x!r}, {rec.polygon1.center.y!r}), "
        f"phase {rec.polygon1.phase!r}",
        f"polygon 2: center ({rec.polygon2.center.x!r}, {rec.polygon2.center.y!r}), "
        f"phase {rec.polygon2.phase!r}" + (" (point polygon)" if rec.point_polygon else ""),
        f"verification residuals: {rec.residuals[0]!r}, {rec.residuals[1]!r}",
    ]
    _emit(args, payload, lines)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as handle:
            handle.write(_reconstruction_svg(family, rec))
    return EXIT_OK


def cmd_pair(args) -> int:
    tol = _tolerance_from_args(args)
    doc = load_instance(args.input)
    if doc.kind != "polygon_pair":
        raise InstanceFormatError(f"expected a polygon_pair instance, got {doc.kind}")
    p1, p2 = doc.polygons
    payload = {
        "format": FORMAT_NAME,
        "command": "pair",
        "n": p1.n,
        "polygons": [polygon_record(p1), polygon_record(p2)],
    }
    try:
        results = pair_polygons(p1, p2, tol)
    except MismatchedOrder as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CoincidentAuxiliaryCircles as exc:
        payload.update({"results": [], "count": 0, "degenerate_continuum": True})
        _emit(args, payload, [f"degenerate continuum: {exc}"])
        return EXIT_INFEASIBLE
    payload.update(
        {
            "results": [
                {
                    "center": [res.center.x, res.center.y],
                    "radii": list(res.circles.radii),
                    "aligned_second": polygon_record(res.aligned_second),
                    "matched_vertices": list(res.matched_vertex_pair),
                }
                for res in results
            ],
            "count": len(results),
            "degenerate_continuum": False,
        }
    )
    lines = [f"configurations found: {len(results)}"]
    for res in results:
        lines.append(
            f"  point ({res.center.x!r}, {res.center.y!r}), "
            f"second phase {res.aligned_second.phase!r}"
        )
    _emit(args, payload, lines)
    if args.svg:
        if results:
            first = results[0]
            text = render_configuration(
                circles=[(first.center, r) for r in first.circles.radii],
                polygons=[p1, first.aligned_second],
                centers=[p1.center, p2.center],
                common_points=[first.center],
            )
        else:
            text = render_configuration(
                circles=[(p1.center, p2.circumradius), (p2.center, p1.circumradius)],
                polygons=[p1, p2],
                centers=[p1.center, p2.center],
                common_points=[],
            )
        with open(args.svg, "w", encoding="utf-8") as handle:
            handle.write(text)
    return EXIT_OK if results else EXIT_INFEASIBLE


def _verify_circles(doc: InstanceDocument, tol: Tolerance, max_n: int) -> tuple[dict, bool]:
    family = doc.circles
    averages = cyclic_averages(family, max_n=max_n)
    report = assess_feasibility(averages, tol)
    sweeps = []
    ok = report.feasible
    if report.feasible:
        pair = recover_circumradii(averages, tol)
        if pair.smaller > tol.gap(pair.larger):
            arms = [(pair.larger, pair.smaller), (pair.smaller, pair.larger)]
            for r, l in arms:
                sweep = angle_sweep(r, l, family.n, family.radii)
                sweeps.append(
                    {"vertex_arm": r, "center_arm": l, "best_phase": sweep.best_phase,
                     "best_residual": sweep.best_residual}
                )
            ok = all(s["best_residual"] <= SWEEP_TOLERANCE for s in sweeps)
    section = {
        "kind": "circles",
        "report": _report_record(report),
        "angle_sweeps": sweeps,
        "pass": ok,
    }
    return section, ok


def _verify_polygon_pair(doc: InstanceDocument, tol: Tolerance) -> tuple[dict, bool]:
    p1, p2 = doc.polygons
    try:
        candidates = candidate_centers(p1, p2, tol)
    except CoincidentAuxiliaryCircles:
        candidates = ()
    if candidates:
        probe = candidates[0]
    else:
        probe = PlanePoint(
            (p1.center.x + p2.center.x) / 2.0, (p1.center.y + p2.center.y) / 2.0
        )
    identity = [
        {"polygon": idx, "m": m,
         "residual": power_identity_residual(poly, probe, m)}
        for idx, poly in enumerate((p1, p2))
        for m in range(1, poly.n)
    ]
    identity_ok = all(item["residual"] <= IDENTITY_TOLERANCE for item in identity)
    sweeps = []
    sweep_ok = True
    try:
        results = pair_polygons(p1, p2, tol)
    except CoincidentAuxiliaryCircles:
        results = []
    if results:
        target = results[0].circles.radii
        point = results[0].center
        for poly in (p1, p2):
            arm = point.distance_to(poly.center)
            if poly.circumradius > tol.gap(1.0) and arm > tol.gap(1.0):
                sweep = angle_sweep(poly.circumradius, arm, poly.n, target)
                sweeps.append(
                    {"vertex_arm": poly.circumradius, "center_arm": arm,
                     "best_phase": sweep.best_phase,
                     "best_residual": sweep.best_residual}
                )
        sweep_ok = all(s["best_residual"] <= SWEEP_TOLERANCE for s in sweeps)
    ok = identity_ok and sweep_ok
    section = {
        "kind": "polygon_pair",
        "probe_point": [probe.x, probe.y],
        "power_identity_residuals": identity,
        "pairing_count": len(results),
        "angle_sweeps": sweeps,
        "pass": ok,
    }
    return section, ok


def _verify_certification(seed: int) -> tuple[dict, bool]:
    rows = []
    ok = True
    for n in CERTIFICATION_ORDERS:
        worst = 0.0
        for index in range(CERTIFICATION_SAMPLES):
            instance = random_instance(n, seed * 100003 + n * 1009 + index)
            m = 1 + (index % (n - 1))
            worst = max(
                worst,
                power_identity_residual(instance.polygon1, instance.point, m),
                power_identity_residual(instance.polygon2, instance.point, m),
            )
        rows.append({"n": n, "samples": CERTIFICATION_SAMPLES, "worst_residual": worst})
        ok = ok and worst <= IDENTITY_TOLERANCE
    section = {"kind": "certification", "seed": seed, "per_n": rows, "pass": ok}
    return section, ok


def cmd_verify(args) -> int:
    tol = _tolerance_from_args(args)
    if args.input is not None:
        doc = load_instance(args.input)
        for note in doc.load_warnings:
            print(f"warning: {note}", file=sys.stderr)
        if doc.kind == "circles":
            section, ok = _verify_circles(doc, tol, args.max_n)
        else:
            section, ok = _verify_polygon_pair(doc, tol)
    else:
        section, ok = _verify_certification(args.seed)
    payload = {"format": FORMAT_NAME, "command": "verify", "result": section}
    lines = [f"verify kind: {section['kind']}", f"pass: {'yes' if ok else 'no'}"]
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_INFEASIBLE


def cmd_render(args) -> int:
    tol = _tolerance_from_args(args)
    doc = load_instance(args.input)
    for note in doc.load_warnings:
        print(f"warning: {note}", file=sys.stderr)
    if doc.kind == "circles":
        family = doc.circles
        circles = [(family.center, r) for r in family.radii]
        try:
            rec = reconstruct_polygons(family, tol)
            text = _reconstruction_svg(family, rec)
        except GeometryError:
            text = render_configuration(
                circles=circles, polygons=[], centers=[], common_points=[family.center]
            )
    else:
        p1, p2 = doc.polygons
        try:
            results = pair_polygons(p1, p2, tol)
        except GeometryError:
            results = []
        if results:
            first = results[0]
            text = render_configuration(
                circles=[(first.center, r) for r in first.circles.radii],
                polygons=[p1, first.aligned_second],
                centers=[p1.center, p2.center],
                common_points=[first.center],
            )
        else:
            text = render_configuration(
                circles=[(p1.center, p2.circumradius), (p2.center, p1.circumradius)],
                polygons=[p1, p2],
                centers=[p1.center, p2.center],
                common_points=[],
            )
    with open(args.svg, "w", encoding="utf-8") as handle:
        handle.write(text)
    if args.json:
        payload = {"format": FORMAT_NAME, "command": "render", "svg": args.svg}
        sys.stdout.write(dump_canonical(payload))
    else:
        print(f"wrote {args.svg}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="concentric-gons",
        description="Decide and construct the correspondence between two "
        "regular n-gons and n concentric circles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, radii=False, input_file=False, svg=False, seed=False):
        if radii:
            p.add_argument("--radii", help="comma-separated circle radii")
        if input_file:
            p.add_argument("--input", help="instance JSON file")
        if svg:
            p.add_argument("--svg", help="write an SVG drawing to this path")
        if seed:
            p.add_argument("--seed", type=int, default=1, help="certification seed")
        p.add_argument("--tol", type=float, default=None, help="relative tolerance override")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument(
            "--max-n", type=int, default=MAX_VERTEX_COUNT,
            help="vertex-count cap for moment computations",
        )

    p_check = sub.add_parser("check", help="decide whether radii admit two polygons")
    add_common(p_check, radii=True, input_file=True)
    p_check.set_defaults(func=cmd_check)

    p_rec = sub.add_parser("reconstruct", help="build the two polygons from radii")
    add_common(p_rec, radii=True, input_file=True, svg=True)
    p_rec.set_defaults(func=cmd_reconstruct)

    p_pair = sub.add_parser("pair", help="find shared circles for two polygons")
    add_common(p_pair, input_file=True, svg=True)
    p_pair.set_defaults(func=cmd_pair)

    p_verify = sub.add_parser("verify", help="brute-force cross-checks")
    add_common(p_verify, input_file=True, seed=True)
    p_verify.set_defaults(func=cmd_verify)

    p_render = sub.add_parser("render", help="draw an instance to SVG")
    add_common(p_render, input_file=True, svg=True)
    p_render.set_defaults(func=cmd_render)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse help/usage paths
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if args.command == "pair" and not args.input:
        print("error: pair requires --input", file=sys.stderr)
        return EXIT_USAGE
    if args.command == "render" and not (args.input and args.svg):
        print("error: render requires --input and --svg", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except InstanceFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
