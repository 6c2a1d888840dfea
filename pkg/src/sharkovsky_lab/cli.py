"""Command-line surface with machine-readable output.

Every command is deterministic given its arguments: identical invocations
produce byte-identical output.  JSON objects carry a top-level
``"schema": "sharkovsky-lab/1"`` and all rationals appear as "p/q"
strings.  Exit codes: 0 on success, 2 on usage or precondition errors,
3 when an exact enumeration exceeds its budget (the message names the
budget).

Budgets come from ``--piece-budget`` / ``--walk-budget``, with environment
overrides SHARKOVSKY_PIECE_BUDGET and SHARKOVSKY_WALK_BUDGET.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import pattern_dynamics as patterns
from . import tent_constructions as tent
from . import witnesses
from .errors import BudgetError, PreconditionError, SharkovskyLabError
from .exact_pwl import DEFAULT_PIECE_BUDGET, orbit_of
from .serialize import SCHEMA, format_rational, orbit_to_list, pwlmap_to_obj
from .sharkovsky_order import forced_periods_upto, sharkovsky_compare

SPECTRUM_CSV_COLUMNS = "period,orbit_count,continuum"


def _emit_json(obj: dict) -> None:
    payload = {"schema": SCHEMA}
    payload.update(obj)
    print(json.dumps(payload, sort_keys=True, separators=(", ", ": ")))


def _parse_pattern(text: str) -> patterns.CyclicPattern:
    text = text.strip()
    if text.startswith("["):
        return patterns.CyclicPattern(tuple(json.loads(text)))
    return patterns.CyclicPattern.from_cycle_string(text)


def _spectrum_rows(entries) -> list[dict]:
    return [
        {"period": e.period, "orbit_count": e.orbit_count, "continuum": e.continuum}
        for e in entries
    ]


def _cmd_compare(args) -> None:
    order = sharkovsky_compare(args.m, args.n)
    _emit_json({"m": args.m, "n": args.n, "order": order.value})


def _cmd_forced(args) -> None:
    _emit_json(
        {
            "m": args.m,
            "upto": args.upto,
            "periods": forced_periods_upto(args.m, args.upto),
        }
    )


def _cmd_pattern(args) -> None:
    if args.action == "graph":
        pattern = _parse_pattern(args.pattern)
        graph = patterns.markov_graph(pattern)
        if args.dot:
            print(graph.to_dot())
        else:
            _emit_json(
                {
                    "pattern": pattern.cycle_string(),
                    "nodes": graph.node_count,
                    "edges": sorted([i, j] for i, j in graph.edges),
                }
            )
    else:  # stefan
        pattern = patterns.stefan_pattern(args.m)
        _emit_json(
            {
                "pattern": pattern.cycle_string(),
                "one_line": list(pattern.mapping),
            }
        )


def _fmt_opt(value) -> Optional[str]:
    return None if value is None else format_rational(value)


def _cmd_witness(args) -> None:
    pattern = _parse_pattern(args.pattern)
    f = patterns.connect_the_dots(pattern)
    realization = orbit_of(f, 0)
    if args.kind == "period2":
        w = witnesses.period_two_from_orbit(f, realization)
        payload = {
            "pattern": pattern.cycle_string(),
            "case": w.case.value,
            "lower": format_rational(w.lower),
            "upper": format_rational(w.upper),
            "first_fixed": format_rational(w.first_fixed),
            "upper_preimage": format_rational(w.upper_preimage),
            "left_fixed": _fmt_opt(w.left_fixed),
            "lower_preimage": _fmt_opt(w.lower_preimage),
            "witness": format_rational(w.point),
            "orbit": orbit_to_list(orbit_of(f, w.point)),
        }
        if args.json:
            _emit_json(payload)
        else:
            print(f"least period 2 point: {payload['witness']}")
    else:  # odd
        if args.period is None:
            raise PreconditionError("--period is required for 'witness odd'")
        trace = witnesses.analyze_odd_orbit(f, realization)
        point = witnesses.odd_period_witness(
            f, realization, args.period, piece_budget=args.piece_budget
        )
        payload = {
            "pattern": pattern.cycle_string(),
            "period": args.period,
            "case": trace.case.value,
            "mirrored": trace.mirrored,
            "switch": trace.switch,
            "straddle": trace.straddle,
            "escape_time": trace.escape_time,
            "rebound_time": trace.rebound_time,
            "fixed_point": format_rational(trace.fixed_point),
            "fixed_preimage": _fmt_opt(trace.fixed_preimage),
            "upper_relay": _fmt_opt(trace.upper_relay),
            "lower_relay": _fmt_opt(trace.lower_relay),
            "witness": format_rational(point),
            "orbit": orbit_to_list(orbit_of(f, point)),
        }
        if args.json:
            _emit_json(payload)
        else:
            print(f"least period {args.period} point: {payload['witness']}")


def _cmd_tent(args) -> None:
    base = tent.tent_map()
    if args.action == "pk":
        orbit = tent.minimal_diameter_orbit(
            base, args.k, piece_budget=args.piece_budget
        )
        _emit_json(
            {
                "k": args.k,
                "orbit": orbit_to_list(orbit),
                "diameter": format_rational(orbit.diameter),
            }
        )
    elif args.action == "truncate":
        orbit = tent.minimal_diameter_orbit(
            base, args.k, piece_budget=args.piece_budget
        )
        truncated = tent.truncate_at_orbit(base, orbit)
        entries = tent.period_spectrum(
            truncated.map, args.spectrum, piece_budget=args.piece_budget
        )
        if args.format == "csv":
            print(SPECTRUM_CSV_COLUMNS)
            for e in entries:
                print(f"{e.period},{e.orbit_count},{str(e.continuum).lower()}")
        else:
            _emit_json(
                {
                    "k": args.k,
                    "bounds": [
                        format_rational(truncated.bounds.lo),
                        format_rational(truncated.bounds.hi),
                    ],
                    "map": pwlmap_to_obj(truncated.map),
                    "spectrum": _spectrum_rows(entries),
                }
            )
    else:  # chain
        chain = tent.doubling_chain(args.levels, piece_budget=args.piece_budget)
        _emit_json(
            {
                "levels": [orbit_to_list(o) for o in chain.levels],
                "q0": format_rational(chain.q0),
                "q1": format_rational(chain.q1),
                "clamped_map": pwlmap_to_obj(tent.t_infinity_level(chain)),
            }
        )


def _cmd_spectrum(args) -> None:
    pattern = _parse_pattern(args.pattern)
    realized = patterns.realized_periods(
        pattern,
        args.upto,
        method=args.method,
        piece_budget=args.piece_budget,
        walk_budget=args.walk_budget,
    )
    _emit_json(
        {
            "pattern": pattern.cycle_string(),
            "upto": args.upto,
            "method": args.method,
            "realized": sorted(realized),
        }
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sharkovsky",
        description="Exact dynamics of piecewise-linear interval maps.",
    )
    parser.add_argument(
        "--piece-budget",
        type=int,
        default=int(os.environ.get("SHARKOVSKY_PIECE_BUDGET", DEFAULT_PIECE_BUDGET)),
        help="cap on breakpoints of composed maps (env SHARKOVSKY_PIECE_BUDGET)",
    )
    parser.add_argument(
        "--walk-budget",
        type=int,
        default=int(
            os.environ.get("SHARKOVSKY_WALK_BUDGET", patterns.DEFAULT_WALK_BUDGET)
        ),
        help="cap on enumerated closed walks (env SHARKOVSKY_WALK_BUDGET)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compare", help="compare two periods in the forcing order")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("forced", help="periods forced by m, up to a bound")
    p.add_argument("m", type=int)
    p.add_argument("--upto", type=int, required=True)
    p.set_defaults(func=_cmd_forced)

    p = sub.add_parser("pattern", help="covering graphs and canonical spirals")
    psub = p.add_subparsers(dest="action", required=True)
    g = psub.add_parser("graph", help="covering graph of a pattern")
    g.add_argument("pattern", help="cycle notation '1>3>2' or JSON one-line list")
    g.add_argument("--dot", action="store_true", help="emit DOT instead of JSON")
    s = psub.add_parser("stefan", help="the canonical odd-period spiral")
    s.add_argument("m", type=int)
    p.set_defaults(func=_cmd_pattern)

    p = sub.add_parser("witness", help="certified periodic-point witnesses")
    p.add_argument("kind", choices=["period2", "odd"])
    p.add_argument("--pattern", required=True)
    p.add_argument("--period", type=int, default=None)
    p.add_argument("--json", action="store_true", help="emit the full trace")
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("tent", help="tent-map orbits, truncations, chains")
    tsub = p.add_subparsers(dest="action", required=True)
    pk = tsub.add_parser("pk", help="minimal-diameter period-k orbit")
    pk.add_argument("k", type=int)
    tr = tsub.add_parser("truncate", help="clamp at the period-k orbit hull")
    tr.add_argument("k", type=int)
    tr.add_argument("--spectrum", type=int, required=True, metavar="J",
                    help="report orbit counts for periods up to J")
    tr.add_argument("--format", choices=["json", "csv"], default="json",
                    help=f"csv columns: {SPECTRUM_CSV_COLUMNS}")
    ch = tsub.add_parser("chain", help="nested doubling orbits and clamp bounds")
    ch.add_argument("--levels", type=int, required=True)
    ch.add_argument("--json", action="store_true", help="JSON output (the default)")
    p.set_defaults(func=_cmd_tent)

    p = sub.add_parser("spectrum", help="realized least periods of a pattern")
    p.add_argument("--pattern", required=True)
    p.add_argument("--upto", type=int, required=True)
    p.add_argument(
        "--method", choices=["auto", "direct", "walks", "both"], default="auto"
    )
    p.set_defaults(func=_cmd_spectrum)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        args.func(args)
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (SharkovskyLabError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


def main() -> None:
    sys.exit(run())
