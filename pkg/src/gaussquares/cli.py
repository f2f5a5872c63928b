"""Command-line interface.

Subcommands mirror the library: check, unfold, fold, siblings, pseudo,
study-origin, search, plot, fixture. Grid arguments are JSON files (or
"-" for stdin); triples and triplets are comma-separated components in
the form "8-4i,4+7i,4-i" (whitespace-insensitive). All outputs are
deterministic; exit status is 0 on success and 2 on validation errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import jsonio
from .correspond import (
    ArithTriplet,
    LegTriple,
    NotArithmetic,
    NotPythagorean,
    NotSquare,
    TrivialTriple,
    ZeroSumTriple,
    to_zero_sum,
    triplet_to_pyth_int,
    triplet_to_triple,
    triplets_from_triple,
)
from .exact import GaussInt, MixedRadicals
from .fixtures import FIXTURE_NAMES, fixture
from .grids import InvalidGrid, NotAGap, gap_recover, magic_report
from .jsonio import FormatError
from .search import SearchConfig, gap_candidates, write_certificate
from .siblings import DEMO_STUDY_BASIS, grid_siblings, origin_shift_study, pseudo_grid
from .svgplot import emit_svg, grid_plot, triple_plot, triplet_plot

_GAUSS_RE = re.compile(r"^(?P<re>[+-]?\d+)?(?P<im>[+-]?\d*)i$")


class CliError(ValueError):
    pass


def parse_gauss(text: str) -> GaussInt:
    """Parse "a", "bi" or "a+bi" / "a-bi" into a Gaussian integer."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise CliError("empty component")
    if re.fullmatch(r"[+-]?\d+", s):
        return GaussInt(int(s))
    m = _GAUSS_RE.fullmatch(s)
    if not m:
        raise CliError(f"cannot parse component {text!r}")
    re_part = int(m.group("re")) if m.group("re") else 0
    im_text = m.group("im")
    if im_text in ("", "+"):
        im_part = 1
    elif im_text == "-":
        im_part = -1
    else:
        im_part = int(im_text)
    return GaussInt(re_part, im_part)


def parse_components(text: str) -> list[GaussInt]:
    parts = text.split(",")
    if len(parts) != 3:
        raise CliError(f"expected three comma-separated components, got {len(parts)}")
    return [parse_gauss(p) for p in parts]


def _load_json_arg(arg: str):
    if arg == "-":
        return json.loads(sys.stdin.read())
    with open(arg, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


# -- subcommand handlers ---------------------------------------------------------


def _cmd_check(args) -> int:
    sq = jsonio.parse_grid(_load_json_arg(args.grid))
    _emit(jsonio.report_to_json(magic_report(sq)))
    return 0


def _cmd_unfold(args) -> int:
    comps = parse_components(args.triple)
    try:
        z = to_zero_sum(LegTriple(*comps))
    except NotPythagorean:
        try:
            z = ZeroSumTriple.of(*comps)
        except (ValueError, TrivialTriple) as exc:
            raise CliError(
                f"components satisfy neither A^2+B^2=C^2 nor a zero-sum identity: {exc}"
            ) from exc
    triplets = triplets_from_triple(z)
    _emit(
        {
            "zero_sum": jsonio.zero_sum_to_json(z),
            "triplets": [jsonio.triplet_to_json(t, derived=True) for t in triplets],
        }
    )
    return 0


def _cmd_fold(args) -> int:
    comps = parse_components(args.triplet)
    if all(c.is_real() and c.re >= 0 for c in comps):
        try:
            legs = triplet_to_pyth_int(comps[0].re, comps[1].re, comps[2].re)
            _emit(jsonio.leg_triple_to_json(legs))
            return 0
        except (NotSquare, NotArithmetic):
            pass  # fall through to the root reading
    t = ArithTriplet(*comps)
    try:
        z = triplet_to_triple(t)
    except (NotArithmetic, TrivialTriple) as exc:
        raise CliError(f"not a foldable triplet: {exc}") from exc
    _emit(jsonio.zero_sum_to_json(z))
    return 0


def _cmd_siblings(args) -> int:
    sq = jsonio.parse_grid(_load_json_arg(args.grid))
    fam = grid_siblings(sq)
    if args.exact and any(e.float_backed for e in fam.entries):
        raise CliError("exact mode requested but some lines need the floating backend")
    out = jsonio.family_to_json(fam)
    which = "younger" if args.younger else "older"
    for line in out["lines"]:
        del line["younger" if which == "older" else "older"]
    _emit(out)
    return 0


def _cmd_pseudo(args) -> int:
    sq = jsonio.parse_grid(_load_json_arg(args.grid))
    direction = "rows" if args.direction == "rows" else "cols"
    assembly = "younger" if args.younger else "older"
    pg = pseudo_grid(sq, direction, assembly=assembly)
    _emit(jsonio.pseudo_to_json(pg))
    return 0


def _cmd_study_origin(args) -> int:
    if args.demo:
        basis = DEMO_STUDY_BASIS
    else:
        if args.grid is None:
            raise CliError("give a grid JSON file or --demo")
        sq = jsonio.parse_grid(_load_json_arg(args.grid))
        basis = gap_recover(sq).basis
    shifts = [float(s) for s in args.shifts.split(",") if s]
    if not shifts:
        raise CliError("no shifts given")
    series = origin_shift_study(basis, shifts, direction=args.direction)
    _emit(
        {
            "basis": {
                "m": jsonio.scalar_to_json(basis.m),
                "u": jsonio.scalar_to_json(basis.u),
                "v": jsonio.scalar_to_json(basis.v),
            },
            "direction": args.direction,
            "points": jsonio.shift_series_to_json(series),
        }
    )
    return 0


def _cmd_search(args) -> int:
    cfg = SearchConfig(
        norm_bound=args.norm_bound,
        ring=args.ring,
        worker_count=args.workers,
        score_floor=args.floor,
    )
    hits = []

    def sink(cand):
        write_certificate(cand, args.certificate)
        print(f"nine-square candidate! certificate written to {args.certificate}", file=sys.stderr)

    ranked = gap_candidates(cfg, certificate_sink=sink)
    for cand in ranked:
        print(json.dumps(jsonio.candidate_to_json(cand)))
        hits.append(cand)
    return 0


def _cmd_plot(args) -> int:
    obj = _load_json_arg(args.input)
    rotate = args.rotate_older
    if isinstance(obj, dict) and "cells" in obj:
        sq = jsonio.parse_grid(obj)
        spec = grid_plot(sq, siblings=args.siblings, rotate_older=rotate)
    elif isinstance(obj, dict) and obj.get("kind") in ("legs", "zero_sum"):
        spec = triple_plot(jsonio.parse_triple(obj), siblings=True)
    elif isinstance(obj, dict) and obj.get("kind") == "triplet":
        spec = triplet_plot(jsonio.parse_triple(obj))
    else:
        raise CliError("input is neither a grid nor a triple/triplet record")
    svg = emit_svg(spec)
    with open(args.output, "w", encoding="utf-8") as fh:
        fh.write(svg)
    return 0


def _cmd_fixture(args) -> int:
    obj = fixture(args.name)
    if isinstance(obj, LegTriple):
        _emit(jsonio.leg_triple_to_json(obj))
    else:
        _emit(jsonio.grid_to_json(obj))
    return 0


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="gaussquares",
        description="Exact arithmetic-triplet and slant-grid toolkit over the Gaussian integers",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="near-miss report for a grid")
    c.add_argument("grid", help="grid JSON file, or - for stdin")
    c.set_defaults(fn=_cmd_check)

    c = sub.add_parser("unfold", help="zero-sum triple and its three triplets")
    c.add_argument("triple", help='e.g. "8-4i,4+7i,4-i" (legs) or a zero-sum triple')
    c.set_defaults(fn=_cmd_unfold)

    c = sub.add_parser("fold", help="inverse map: values or roots back to a triple")
    c.add_argument("triplet", help='e.g. "1,25,49" (values) or "12+3i,4-i,4-11i" (roots)')
    c.set_defaults(fn=_cmd_fold)

    c = sub.add_parser("siblings", help="sibling family of a grid")
    c.add_argument("grid", help="grid JSON file, or - for stdin")
    c.add_argument("--younger", action="store_true", help="show younger siblings instead of older")
    g = c.add_mutually_exclusive_group()
    g.add_argument("--exact", action="store_true", help="fail instead of using the floating backend")
    g.add_argument("--float", action="store_true", dest="float_", help="accepted for symmetry; the backend is chosen per line")
    c.set_defaults(fn=_cmd_siblings)

    c = sub.add_parser("pseudo", help="sibling pseudo-grid with its exact error term")
    c.add_argument("grid", help="grid JSON file, or - for stdin")
    c.add_argument("--direction", choices=("rows", "cols"), required=True)
    c.add_argument("--younger", action="store_true", help="assemble younger siblings instead of older")
    c.set_defaults(fn=_cmd_pseudo)

    c = sub.add_parser("study-origin", help="error decay as the grid moves away from the origin")
    c.add_argument("grid", nargs="?", help="grid JSON file, or - for stdin")
    c.add_argument("--demo", action="store_true", help="use the built-in demo slant grid")
    c.add_argument("--shifts", required=True, help="comma-separated real offsets")
    c.add_argument("--direction", choices=("rows", "cols"), default="rows")
    c.set_defaults(fn=_cmd_study_origin)

    c = sub.add_parser("search", help="slant-grid candidates from center-sharing triplets")
    c.add_argument("--ring", choices=("integers", "gaussians"), default="gaussians")
    c.add_argument("--norm-bound", type=int, required=True, dest="norm_bound")
    c.add_argument("--workers", type=int, default=1)
    c.add_argument("--floor", type=int, default=5, help="minimum square count (5..9)")
    c.add_argument("--certificate", default="certificate.json", help="output path for a nine-square certificate")
    c.set_defaults(fn=_cmd_search)

    c = sub.add_parser("plot", help="schematic SVG of a grid or triple")
    c.add_argument("input", help="grid or triple JSON file, or - for stdin")
    c.add_argument("-o", "--output", required=True)
    c.add_argument("--siblings", action="store_true")
    c.add_argument("--rotate-older", action="store_true", dest="rotate_older")
    c.set_defaults(fn=_cmd_plot)

    c = sub.add_parser("fixture", help="print a built-in fixture")
    c.add_argument("name", choices=FIXTURE_NAMES)
    c.set_defaults(fn=_cmd_fixture)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (
        CliError,
        FormatError,
        InvalidGrid,
        NotAGap,
        NotPythagorean,
        NotArithmetic,
        NotSquare,
        TrivialTriple,
        MixedRadicals,
        json.JSONDecodeError,
        FileNotFoundError,
        KeyError,
        ValueError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
