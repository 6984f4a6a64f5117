"""Command-line interface.

Every command writes exactly one JSON document to stdout (SVG bytes go only
to ``--out`` files) and exits with: 0 ok, 1 consistency-check failure,
2 bad input, 3 budget exceeded, 4 I/O error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import math
import sys
import time

from arithbilliards import billiards, circseq, walks
from arithbilliards.core import (
    BudgetExceededError,
    DirectionMask,
    GridSpec,
    Point,
)
from arithbilliards.render import RenderOptions, render_grid

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_BAD_INPUT = 2
EXIT_BUDGET = 3
EXIT_IO = 4


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"{what} must be comma-separated integers, got {text!r}") from None


def _grid(dims_text: str) -> GridSpec:
    return GridSpec(_parse_ints(dims_text, "--dims"))


def _mask(grid: GridSpec, text: str | None) -> DirectionMask:
    if text is None:
        return DirectionMask.ascending(grid.p)
    mask = DirectionMask.parse(text)
    if len(mask.signs) != grid.p:
        raise ValueError(f"mask {text!r} does not match grid arity {grid.p}")
    return mask


def cmd_count(args) -> tuple[dict, int]:
    grid = _grid(args.dims)
    closed = billiards.count_closed(grid)
    opened = billiards.count_open(grid)
    k = billiards.step_length(grid)
    payload = {
        "closed": closed,
        "open": opened,
        "step_length": k,
        "geometric_length": {
            "steps": k,
            "per_step": f"sqrt({grid.p})",
            "approx": k * math.sqrt(grid.p),
        },
        "gcd_or_lcm_details": {
            "gcd": grid.gcd,
            "lcm": grid.lcm,
            "dims_product": math.prod(grid.dims),
        },
        "enumeration": None,
        "consistent": None,
    }
    try:
        paths = billiards.enumerate_paths(grid)
    except BudgetExceededError:
        return payload, EXIT_BUDGET
    enum_closed = sum(1 for p in paths if p.kind is billiards.PathKind.CLOSED)
    enum_open = sum(1 for p in paths if p.kind is billiards.PathKind.OPEN)
    payload["enumeration"] = {
        "closed": enum_closed,
        "open": enum_open,
        "segments_total": sum(p.distinct_segments for p in paths),
    }
    payload["consistent"] = (enum_closed == closed and enum_open == opened)
    return payload, EXIT_OK if payload["consistent"] else EXIT_INCONSISTENT


def cmd_simulate(args) -> tuple[dict, int]:
    grid = _grid(args.dims)
    start = Point(_parse_ints(args.start, "--start"))
    mask = _mask(grid, args.mask)
    traj = billiards.simulate(grid, start, mask, args.steps)
    closed_at = billiards.first_closure(grid, traj.states[0], args.steps)
    payload = {
        "points": [list(p.coords) for p in traj.points],
        "closed_at": closed_at,
    }
    return payload, EXIT_OK


def cmd_reach(args) -> tuple[dict, int]:
    grid = _grid(args.dims)
    source = Point(_parse_ints(args.src, "--from"))
    target = Point(_parse_ints(args.to, "--to"))
    if args.any_direction:
        masks = [
            DirectionMask(signs) for signs in itertools.product((0, 1), repeat=grid.p)
        ]
    else:
        masks = [_mask(grid, args.mask)]
    best = billiards.ReachAnswer(False, None, None)
    best_mask = masks[0]
    for mask in masks:
        ans = billiards.light_reachable(grid, source, mask, target)
        if ans.reachable and (best.witness_steps is None or ans.witness_steps < best.witness_steps):
            best, best_mask = ans, mask
    payload = {
        "reachable": best.reachable,
        "witness_steps": best.witness_steps,
        "sign_choice": list(best.sign_choice) if best.sign_choice is not None else None,
        "mask": "any" if args.any_direction else best_mask.to_string(),
        "oracle_checked": False,
    }
    code = EXIT_OK
    if args.verify:
        agree = True
        for mask in masks:
            fast = billiards.light_reachable(grid, source, mask, target)
            slow = billiards.light_reachable_oracle(grid, source, mask, target)
            agree = agree and fast == slow
        payload["oracle_checked"] = True
        payload["oracle_agrees"] = agree
        if not agree:
            code = EXIT_INCONSISTENT
    return payload, code


def cmd_orbits(args) -> tuple[dict, int]:
    grid = _grid(args.dims)
    summaries = walks.orbit_partition(grid)
    try:
        brute = walks.orbit_sizes_bruteforce(grid)
    except BudgetExceededError:
        brute = None
    rows = []
    all_agree = True
    for summary in summaries:
        row = {
            "index": list(summary.index.bits),
            "size_formula": summary.size,
            "size_bruteforce": None,
            "agree": None,
        }
        if brute is not None:
            row["size_bruteforce"] = brute.get(summary.index.bits, 0)
            row["agree"] = row["size_bruteforce"] == summary.size
            all_agree = all_agree and row["agree"]
        rows.append(row)
    payload = {"orbits": rows, "total_points": grid.n_points}
    return payload, EXIT_OK if all_agree else EXIT_INCONSISTENT


def cmd_genfunc(args) -> tuple[dict, int]:
    spec = circseq.SeqSpec(sign=args.sign, first_term=args.t, height=args.m)
    gf = circseq.gen_function(spec)
    payload = {
        "sign": spec.sign,
        "t": spec.first_term,
        "m": spec.height,
        "numerator_coeffs": list(gf.numerator.coeffs),
        "period": gf.period,
    }
    if args.expand is not None:
        if args.expand < 0:
            raise ValueError(f"--expand must be >= 0, got {args.expand}")
        payload["expansion"] = circseq.series_expand(gf, args.expand)
    return payload, EXIT_OK


def cmd_render(args) -> tuple[dict, int]:
    grid = _grid(args.dims)
    if grid.p != 2:
        raise ValueError(f"render requires a 2-D grid, got {grid.p} dimensions")
    paths = billiards.enumerate_paths(grid)
    if args.paths == "open":
        paths = [p for p in paths if p.kind is billiards.PathKind.OPEN]
    elif args.paths == "closed":
        paths = [p for p in paths if p.kind is billiards.PathKind.CLOSED]
    opts = RenderOptions(
        cell_size=args.cell_size,
        margin=args.margin,
        palette=tuple(args.palette.split(",")) if args.palette else ("green", "blue", "red"),
    )
    svg = render_grid(grid, paths, opts)
    data = svg.encode("utf-8")
    with open(args.out, "wb") as fh:
        fh.write(data)
    payload = {"file": args.out, "path_count": len(paths), "bytes": len(data)}
    return payload, EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arithbilliards",
        description="Arithmetic billiards on integer grids: counting, simulation, "
        "reachability, walk orbits, generating functions, SVG rendering.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="closed/open path counts with enumeration cross-check")
    p.add_argument("--dims", required=True, help="grid dimensions, e.g. 6,4")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("simulate", help="walk a trajectory and report visited points")
    p.add_argument("--dims", required=True)
    p.add_argument("--start", required=True, help="start point, e.g. 2,2")
    p.add_argument("--mask", help="initial directions as +/- per coordinate (default all +)")
    p.add_argument("--steps", type=int, required=True)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("reach", help="can the light from one point pass through another?")
    p.add_argument("--dims", required=True)
    p.add_argument("--from", dest="src", required=True)
    p.add_argument("--to", required=True)
    p.add_argument("--mask", help="source directions as +/- (default all +)")
    p.add_argument("--any-direction", action="store_true",
                   help="try every initial direction mask")
    p.add_argument("--verify", action="store_true",
                   help="cross-check against the full-period iteration oracle")
    p.set_defaults(func=cmd_reach)

    p = sub.add_parser("orbits", help="diagonal-walk orbit sizes by parity index")
    p.add_argument("--dims", required=True)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("genfunc", help="triangle-wave generating function")
    p.add_argument("--sign", required=True, choices=["+", "-"])
    p.add_argument("--t", type=int, required=True, help="first term")
    p.add_argument("--m", type=int, required=True, help="wave height")
    p.add_argument("--expand", type=int, help="also expand the series up to x**N")
    p.set_defaults(func=cmd_genfunc)

    p = sub.add_parser("render", help="write an SVG drawing of a 2-D grid")
    p.add_argument("--dims", required=True)
    p.add_argument("--out", required=True, help="output SVG file")
    p.add_argument("--paths", choices=["all", "open", "closed"], default="all")
    p.add_argument("--cell-size", type=int, default=40)
    p.add_argument("--margin", type=int, default=20)
    p.add_argument("--palette", help="comma-separated stroke colors")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    doc = {"schema_version": SCHEMA_VERSION, "command": args.command, "grid": None}
    if getattr(args, "dims", None):
        try:
            doc["grid"] = {"dims": list(_parse_ints(args.dims, "--dims"))}
        except ValueError:
            pass
    try:
        payload, code = args.func(args)
        doc["payload"] = payload
    except (ValueError, OverflowError) as exc:
        doc["error"] = {"type": type(exc).__name__, "message": str(exc)}
        code = EXIT_BAD_INPUT
    except BudgetExceededError as exc:
        doc["error"] = {"type": "BudgetExceededError", "message": str(exc)}
        code = EXIT_BUDGET
    except OSError as exc:
        doc["error"] = {"type": type(exc).__name__, "message": str(exc)}
        code = EXIT_IO
    doc["elapsed_ms"] = round((time.perf_counter() - started) * 1000.0, 3)
    print(json.dumps(doc))
    return code


if __name__ == "__main__":
    sys.exit(main())
