"""Command-line interface.

Reports are line-oriented ``key=value`` text.  Exit codes: 0 when the
command succeeds and every checked property holds, 1 for violations or
failed checks, 2 for usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from . import __version__
from .census import census, check_identities, verify_min_degree7_theorem
from .constructions import FIXTURE_NAMES, GlueSpec, fixture, glue_copies
from .core import (
    CombinatorialDrawing,
    IntegrityError,
    PreconditionError,
    StructureError,
    ident_key,
    underlying_graph,
    validate,
)
from .io1pd import ParseError, load, save, serialize
from .matching import maximum_matching
from .render import LayoutError, render_svg
from .triangulation import is_triangulated, triangulate

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oneplanar",
        description="Verification toolkit for combinatorial 1-planar drawings.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the good-drawing rules")
    p.add_argument("file")

    p = sub.add_parser("stats", help="census counts and counting identities")
    p.add_argument("file")

    p = sub.add_parser("triangulate", help="insert edges until all regions are triangles")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)

    p = sub.add_parser("theorem", help="run the minimum-degree-7 lower-bound chain")
    p.add_argument("file")

    p = sub.add_parser("matching", help="maximum matching of the underlying graph")
    p.add_argument("file")
    p.add_argument(
        "--certificate",
        nargs="+",
        metavar="V",
        help="separator vertices U for a Tutte-Berge upper bound",
    )

    p = sub.add_parser("construct", help="generate drawings")
    csub = p.add_subparsers(dest="what", required=True)
    g = csub.add_parser("glue", help="glue copies of a base drawing at a hub vertex")
    g.add_argument("--copies", type=int, required=True)
    g.add_argument("--base", help="base drawing file (default: the 24-vertex fixture)")
    g.add_argument("--hub", help="hub vertex (default: smallest identifier)")
    g.add_argument("-o", "--output", required=True)
    f = csub.add_parser("fixture", help="write a named fixture")
    f.add_argument("name", help=f"one of: {', '.join(FIXTURE_NAMES)}, stacked(N)")
    f.add_argument("-o", "--output", required=True)

    p = sub.add_parser("render", help="render a drawing to SVG")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--outer", type=int, help="canonical index of the outer region")

    return parser


def _cmd_validate(args) -> int:
    d = load(args.file)
    report = validate(d)
    print(f"accepted={'true' if report.accepted else 'false'}")
    print(f"n={d.n}")
    print(f"m={d.m}")
    print(f"x={d.x}")
    for violation in report.violations:
        print(f"violation={violation}")
    return EXIT_OK if report.accepted else EXIT_FAIL


def _cmd_stats(args) -> int:
    d = load(args.file)
    report = validate(d)
    if not report.accepted:
        for violation in report.violations:
            print(f"violation={violation}")
        return EXIT_FAIL
    c = census(d)
    print(f"n={c.n}")
    print(f"m={c.m}")
    print(f"x={c.x}")
    print(f"t={c.t}")
    print(f"n7={c.n7}")
    print(f"min_degree={c.min_degree}")
    print("degree_histogram=" + ",".join(f"{deg}:{cnt}" for deg, cnt in c.degree_histogram))
    print(f"triangulated={'true' if is_triangulated(d) else 'false'}")
    identities = check_identities(d)
    failed = False
    for chk in identities.checks:
        if not chk.applicable:
            print(f"identity.{chk.name}=inapplicable({chk.reason})")
        else:
            state = "holds" if chk.holds else "fails"
            failed = failed or not chk.holds
            print(f"identity.{chk.name}={state} left={chk.left} right={chk.right}")
    return EXIT_FAIL if failed else EXIT_OK


def _cmd_triangulate(args) -> int:
    d = load(args.file)
    result = triangulate(d)
    save(result.drawing, args.output)
    print(f"edges_added={len(result.steps)}")
    print(f"n={result.drawing.n}")
    print(f"m={result.drawing.m}")
    print(f"mode={result.drawing.mode}")
    for step in result.steps:
        print(f"step={step.new_edge}:{step.vertex_a}-{step.vertex_b}")
    print(f"output={args.output}")
    return EXIT_OK


def _cmd_theorem(args) -> int:
    d = load(args.file)
    report = verify_min_degree7_theorem(d)
    print("chain=" + ",".join(str(v) for v in report.chain))
    print(f"n7_triangulated={report.n7_triangulated}")
    print(f"n7={report.n7_original}")
    print(f"triangulation_steps={report.triangulation_steps}")
    print(f"holds={'true' if report.holds else 'false'}")
    return EXIT_OK if report.holds else EXIT_FAIL


def _cmd_matching(args) -> int:
    d = load(args.file)
    validate(d).raise_if_rejected()
    g = underlying_graph(d)
    result = maximum_matching(g, certificate_vertices=args.certificate)
    print(f"matching_size={result.size}")
    print(
        "matching="
        + " ".join(f"{u}-{v}" for u, v in sorted(result.matching, key=lambda e: (ident_key(e[0]), ident_key(e[1]))))
    )
    if result.certificate is not None:
        cert = result.certificate
        print("certificate.U=" + ",".join(sorted(cert.separator, key=ident_key)))
        print(f"certificate.odd_components={cert.odd_components}")
        print(f"certificate.bound={cert.bound}")
        print(f"size_le_bound={'true' if result.size <= cert.bound else 'false'}")
    return EXIT_OK


def _cmd_construct(args) -> int:
    if args.what == "glue":
        base = load(args.base) if args.base else fixture("fig1")
        hub = args.hub or min(base.vertices, key=ident_key)
        drawing = glue_copies(GlueSpec(base, hub, args.copies))
    else:
        drawing = fixture(args.name)
    save(drawing, args.output)
    print(f"n={drawing.n}")
    print(f"m={drawing.m}")
    print(f"x={drawing.x}")
    print(f"output={args.output}")
    return EXIT_OK


def _cmd_render(args) -> int:
    d = load(args.file)
    svg = render_svg(d, outer_region=args.outer)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(svg)
    warnings = svg.count("<!-- warning:")
    print(f"crossings={d.x}")
    print(f"warnings={warnings}")
    print(f"output={args.output}")
    return EXIT_OK


_COMMANDS = {
    "validate": _cmd_validate,
    "stats": _cmd_stats,
    "triangulate": _cmd_triangulate,
    "theorem": _cmd_theorem,
    "matching": _cmd_matching,
    "construct": _cmd_construct,
    "render": _cmd_render,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for usage errors already
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"error={exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, KeyError) as exc:
        print(f"error={exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PreconditionError, StructureError, IntegrityError, LayoutError) as exc:
        print(f"error={exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
