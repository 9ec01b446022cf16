"""Command-line front end: deterministic JSON reports and SVG renderings.

Subcommands:

* ``enumerate``: generator census for a region under an action bound or at
  an exact index;
* ``obstruct``: run one of the obstruction checkers and emit its report;
* ``render``: SVG picture of regions, optional witness path and generator
  overlay;
* ``selftest``: run the embedded acceptance checks.

Verdicts are data: the process exits 0 for any verdict and nonzero only on
malformed input or internal failure.  Identical invocations produce
byte-identical stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .domainspec import (
    SpecError,
    load_domain_file,
    normalize,
    parse_rational,
    to_region,
)
from .geometry import (
    CONCAVE,
    CONVEX,
    Direction,
    ToricRegion,
    axis_caps,
    ball,
    ellipsoid,
    polydisk,
)
from .lattice import (
    EdgeSpec,
    LABEL_E,
    PathGenerator,
    action,
    encode_generator,
    enumerate_by_action,
    enumerate_by_index,
    extents,
    generator_index,
    generator_j0,
    index_convex,
    j0_convex,
    lattice_count_concave,
    lattice_count_convex,
    parse_generator,
    path_generator,
    paths_by_extents,
    vertices,
)
from .obstruct import (
    WitnessConstructionError,
    WitnessPath,
    check_2anchored,
    check_convex1,
    check_cross_anchor,
    check_inclusion_anchor,
    check_polydisk_ball,
    min_action_bound,
    witness_violations,
)
from .orbits import ech_index, iota, j0_index

TOOL_NAME = "toricech"


def jsonable(value):
    """Recursively convert report payloads to JSON-safe values; rationals
    become canonical p/q strings."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {k: jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


def envelope(command: str, options: dict, inputs: dict, result: dict) -> str:
    doc = {
        "tool": {"name": TOOL_NAME, "version": __version__},
        "command": command,
        "options": jsonable(options),
        "inputs": jsonable(inputs),
        "result": jsonable(result),
    }
    return json.dumps(doc, indent=2) + "\n"


def _census_rows(region: ToricRegion, generators: list[PathGenerator]) -> list[dict]:
    rows = []
    for g in generators:
        x, y = extents(g)
        rows.append(
            {
                "generator": encode_generator(g),
                "edges": [
                    {"label": e.label, "direction": [e.direction.a, e.direction.b], "multiplicity": e.multiplicity}
                    for e in g.edges
                ],
                "x": x,
                "y": y,
                "index": generator_index(g),
                "j0": generator_j0(g),
                "action": action(g, region),
            }
        )
    return rows


def _rows_as_table(rows: list[dict]) -> str:
    headers = ["generator", "x", "y", "index", "j0", "action"]
    cells = [["(empty)" if r[h] == "" else str(r[h]) for h in headers] for r in rows]
    widths = [max(len(h), *(len(row[i]) for row in cells)) if cells else len(h) for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths))]
    for row in cells:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)))
    return "\n".join(lines) + "\n"


def cmd_enumerate(args) -> int:
    spec = load_domain_file(args.domain)
    region = to_region(spec)
    if (args.action_bound is None) == (args.index is None):
        raise SpecError("pass exactly one of --action-bound or --index")
    if args.action_bound is not None:
        bound = parse_rational(args.action_bound)
        kwargs = {}
        if args.max_index is not None:
            kwargs["max_index"] = args.max_index
        generators = enumerate_by_action(region, bound, **kwargs)
        options = {"action_bound": bound, "max_index": args.max_index, "format": args.format}
    else:
        generators = enumerate_by_index(region.flavor, args.index)
        options = {"index": args.index, "format": args.format}
    rows = _census_rows(region, generators)
    if args.format == "table":
        sys.stdout.write(_rows_as_table(rows))
        return 0
    result = {"ordering": "action,encoding" if args.action_bound else "encoding", "count": len(rows), "census": rows}
    sys.stdout.write(envelope("enumerate", options, {"domain": normalize(spec)}, result))
    return 0


def _report_payload(report) -> dict:
    return {
        "verdict": report.verdict,
        "theorem": report.theorem,
        "certificate": report.certificate,
        "notes": list(report.notes),
    }


def cmd_obstruct(args) -> int:
    theorem = args.theorem
    if theorem == "polydisk-ball":
        if args.a is None or args.c is None:
            raise SpecError("polydisk-ball takes --a and --c")
        a, c = parse_rational(args.a), parse_rational(args.c)
        report = check_polydisk_ball(a, c)
        inputs = {"a": a, "c": c}
    else:
        if not args.inner or not args.outer:
            raise SpecError(f"theorem {theorem} takes inner and outer domain files")
        inner_spec = load_domain_file(args.inner)
        outer_spec = load_domain_file(args.outer)
        inner, outer = to_region(inner_spec), to_region(outer_spec)
        checker = {
            "convex1": check_convex1,
            "2anchored": check_2anchored,
            "cross-anchor": check_cross_anchor,
            "inclusion": check_inclusion_anchor,
        }[theorem]
        report = checker(inner, outer)
        inputs = {"inner": normalize(inner_spec), "outer": normalize(outer_spec)}
    sys.stdout.write(envelope("obstruct", {"theorem": theorem}, inputs, _report_payload(report)))
    return 0


def _svg_coords(x: float, y: float, world: float) -> str:
    return f"{x:.6f},{world - y:.6f}"


def render_svg(
    regions: list[ToricRegion],
    witness: WitnessPath | None = None,
    generator: PathGenerator | None = None,
) -> str:
    caps = [max(axis_caps(r)) for r in regions]
    world = float(max(caps)) * 1.1
    if generator is not None:
        gx, gy = extents(generator)
        world = max(world, max(gx, gy) * 1.1)
    stroke = world / 400
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" '
        f'viewBox="0 0 {world:.6f} {world:.6f}">'
    ]
    parts.append(
        f'<line x1="0.000000" y1="{world:.6f}" x2="{world:.6f}" y2="{world:.6f}" '
        f'stroke="black" stroke-width="{stroke:.6f}" />'
    )
    parts.append(
        f'<line x1="0.000000" y1="{world:.6f}" x2="0.000000" y2="0.000000" '
        f'stroke="black" stroke-width="{stroke:.6f}" />'
    )
    fills = ["#cfe2f3", "#f4cccc"]
    for idx, region in enumerate(reversed(regions)):
        pts = [(0.0, 0.0)] + [(float(x), float(y)) for x, y in region.boundary]
        points = " ".join(_svg_coords(x, y, world) for x, y in pts)
        fill = fills[(len(regions) - 1 - idx) % len(fills)]
        parts.append(
            f'<polygon class="region" points="{points}" fill="{fill}" '
            f'fill-opacity="0.6" stroke="black" stroke-width="{stroke:.6f}" />'
        )
    if witness is not None:
        points = " ".join(_svg_coords(float(x), float(y), world) for x, y in witness.points)
        parts.append(
            f'<polyline class="witness" points="{points}" fill="none" '
            f'stroke="green" stroke-width="{2 * stroke:.6f}" />'
        )
    if generator is not None:
        verts = vertices(generator)
        if len(verts) >= 2:
            d = "M " + " L ".join(_svg_coords(float(x), float(y), world) for x, y in verts)
            parts.append(
                f'<path class="generator" d="{d}" fill="none" '
                f'stroke="purple" stroke-width="{2 * stroke:.6f}" />'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def cmd_render(args) -> int:
    inner_spec = load_domain_file(args.inner)
    regions = [to_region(inner_spec)]
    if args.outer:
        regions.append(to_region(load_domain_file(args.outer)))
    witness = None
    if args.witness:
        if len(regions) != 2:
            raise SpecError("--witness needs both inner and outer domains")
        if any(r.flavor != CONVEX for r in regions):
            raise SpecError("witness rendering is unsupported for concave flavor")
        report = check_cross_anchor(regions[0], regions[1])
        if report.verdict != "not_obstructed":
            raise SpecError("no witness exists: the cross-anchor criterion fails for this pair")
        witness = WitnessPath(tuple((Fraction(x), Fraction(y)) for x, y in report.certificate["points"]))
    generator = None
    if args.generator:
        generator = parse_generator(args.generator, regions[0].flavor)
    sys.stdout.write(render_svg(regions, witness, generator))
    return 0


def _pick_lattice_count(g: PathGenerator) -> int:
    """Shoelace + Pick count of lattice points in the closed path region."""
    x, y = extents(g)
    if x == 0 or y == 0:
        return max(x, y) + 1
    poly = [(0, 0)] + [(int(px), int(py)) for px, py in reversed(vertices(g))]
    twice_area = 0
    for (px, py), (qx, qy) in zip(poly, poly[1:] + poly[:1]):
        twice_area += px * qy - qx * py
    twice_area = abs(twice_area)
    boundary = x + y + sum(e.multiplicity for e in g.edges)
    return (twice_area + boundary) // 2 + 1


def _selftest_checks() -> list[tuple[str, str, str]]:
    checks: list[tuple[str, str, str]] = []

    census = enumerate_by_index(CONVEX, 4)
    checks.append(
        ("index4-census", "e:0,1x2 e:1,0x2 e:1,1x1", " ".join(encode_generator(g) for g in census))
    )
    checks.append(("index4-j0", "-1 -1 -1", " ".join(str(generator_j0(g)) for g in census)))

    checks.append(
        ("index2-census", "e:0,1x1 e:1,0x1", " ".join(encode_generator(g) for g in enumerate_by_index(CONVEX, 2)))
    )

    bound = min_action_bound(polydisk(2, 1), Direction(1, 1), ["e10"])
    checks.append(("polydisk-min-action", "3", str(bound)))

    verdicts = (check_polydisk_ball(2, 3).verdict, check_polydisk_ball(2, Fraction(31, 10)).verdict)
    checks.append(("polydisk-ball-boundary", "obstructed not_obstructed", " ".join(verdicts)))

    rep = check_convex1(polydisk(8, 2), ellipsoid(11, 7))
    cert = rep.certificate or {}
    checks.append(
        (
            "convex1-p82-e117",
            "obstructed (7,11) 78>77",
            f"{rep.verdict} ({cert.get('direction', ['?', '?'])[0]},{cert.get('direction', ['?', '?'])[1]}) "
            f"{cert.get('inner_support')}>{cert.get('outer_support')}",
        )
    )

    mismatches = 0
    total = 0
    for path in paths_by_extents(CONVEX, 5, 5):
        base = path_generator(CONVEX, tuple(EdgeSpec(d, m, LABEL_E) for d, m in path))
        for g in _all_labelings(base):
            total += 1
            alpha = iota(g)
            if ech_index(alpha) != index_convex(g) or j0_index(alpha) != j0_convex(g):
                mismatches += 1
    checks.append(("orbit-index-crosscheck", "0 mismatches", f"{mismatches} mismatches"))
    checks.append(("orbit-index-crosscheck-size", "nonempty", "nonempty" if total > 500 else f"only {total}"))

    count_bad = 0
    seen = 0
    for path in paths_by_extents(CONVEX, 6, 6):
        g = path_generator(CONVEX, tuple(EdgeSpec(d, m, LABEL_E) for d, m in path))
        seen += 1
        if lattice_count_convex(g) != _pick_lattice_count(g):
            count_bad += 1
    for path in paths_by_extents(CONCAVE, 6, 6):
        g = path_generator(CONCAVE, tuple(EdgeSpec(d, m, LABEL_E) for d, m in path))
        seen += 1
        on_path = sum(e.multiplicity for e in g.edges) + 1
        if lattice_count_concave(g) != _pick_lattice_count(g) - on_path:
            count_bad += 1
    checks.append(("lattice-count-oracle", "0 disagreements", f"{count_bad} disagreements"))

    rep = check_cross_anchor(ball(1), ball(Fraction(3, 2)))
    if rep.verdict == "not_obstructed":
        path = WitnessPath(tuple((Fraction(x), Fraction(y)) for x, y in rep.certificate["points"]))
        problems = witness_violations(path, ball(1), ball(Fraction(3, 2)))
        checks.append(("cross-anchor-witness", "valid", "valid" if not problems else "; ".join(problems)))
    else:
        checks.append(("cross-anchor-witness", "valid", f"unexpected verdict {rep.verdict}"))

    from .obstruct import folding_embedding_exists

    gap = []
    for c in (Fraction(13, 2), Fraction(6), Fraction(10)):
        plain = folding_embedding_exists(8, c)
        anchored = check_polydisk_ball(8, c).verdict
        gap.append(f"{plain}+{anchored}")
    checks.append(
        ("anchored-gap-a8", "yes+obstructed unknown+obstructed yes+not_obstructed", " ".join(gap))
    )

    doc1 = envelope("selftest", {}, {}, {"probe": [Fraction(1, 3), Fraction(2)]})
    doc2 = envelope("selftest", {}, {}, {"probe": [Fraction(1, 3), Fraction(2)]})
    checks.append(("envelope-determinism", "identical", "identical" if doc1 == doc2 else "differs"))

    return checks


def _all_labelings(base: PathGenerator):
    from .lattice import _labelings

    yield from _labelings(base.flavor, tuple((e.direction, e.multiplicity) for e in base.edges))


def cmd_selftest(_args) -> int:
    checks = _selftest_checks()
    name_w = max(len(name) for name, _, _ in checks)
    exp_w = max(len(exp) for _, exp, _ in checks)
    act_w = max(len(act) for _, _, act in checks)
    failures = 0
    header = f"{'check'.ljust(name_w)}  {'expected'.ljust(exp_w)}  {'actual'.ljust(act_w)}  status"
    sys.stdout.write(header + "\n")
    for name, expected, actual in checks:
        ok = expected == actual
        failures += 0 if ok else 1
        sys.stdout.write(
            f"{name.ljust(name_w)}  {expected.ljust(exp_w)}  {actual.ljust(act_w)}  {'PASS' if ok else 'FAIL'}\n"
        )
    sys.stdout.write(f"selftest: {len(checks)} checks, {failures} failures\n")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=TOOL_NAME,
        description="Combinatorial ECH data of toric domains and anchored-embedding obstruction checks",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p_enum = sub.add_parser("enumerate", help="generator census for a region")
    p_enum.add_argument("domain", help="domain-spec JSON file")
    p_enum.add_argument("--action-bound", help="strict action bound (rational string)")
    p_enum.add_argument("--index", type=int, help="exact combinatorial index")
    p_enum.add_argument("--max-index", type=int, help="index cap for concave action censuses")
    p_enum.add_argument("--format", choices=("json", "table"), default="json")
    p_enum.set_defaults(func=cmd_enumerate)

    p_obs = sub.add_parser("obstruct", help="run an obstruction checker")
    p_obs.add_argument(
        "--theorem",
        required=True,
        choices=("polydisk-ball", "convex1", "2anchored", "cross-anchor", "inclusion"),
    )
    p_obs.add_argument("inner", nargs="?", help="inner domain-spec file")
    p_obs.add_argument("outer", nargs="?", help="outer domain-spec file")
    p_obs.add_argument("--a", help="polydisk long-factor capacity (rational string)")
    p_obs.add_argument("--c", help="ball capacity (rational string)")
    p_obs.set_defaults(func=cmd_obstruct)

    p_render = sub.add_parser("render", help="render regions to SVG on stdout")
    p_render.add_argument("inner", help="inner domain-spec file")
    p_render.add_argument("outer", nargs="?", help="outer domain-spec file")
    p_render.add_argument("--witness", action="store_true", help="overlay the cross-anchor witness path")
    p_render.add_argument("--generator", help="generator overlay, e.g. e:1,1x1+h:2,1x1")
    p_render.set_defaults(func=cmd_render)

    p_self = sub.add_parser("selftest", help="run the embedded acceptance checks")
    p_self.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (SpecError, ValueError, WitnessConstructionError) as exc:
        sys.stderr.write(f"{TOOL_NAME}: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
