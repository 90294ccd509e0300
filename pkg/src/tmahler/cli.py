"""Command-line front end.

Subcommands:
    mt measure <alpha> -t <real|inf>       scalar value + attaining tuples
    mt tuples <alpha> [--all|--minimal]    factorization table
    mt profile <alpha> -T <real>           piecewise envelope as JSON
    mt plot <alpha> -T <real> [--step]     per-tuple norm curves + envelope CSV
    mt check-integer <n_max>               closed-form oracle comparison

Exit codes: 0 success, 1 domain error, 2 usage/parse error, 3 I/O error.
Output is deterministic: fixed key order, tuples sorted, floats rendered as
the shortest round-trip representation truncated to the configured number of
decimal digits.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from .envelope import (
    CrossingSearchConfig,
    attaining_tuples,
    integer_closed_form,
    minimal_tuples,
    mt_measure,
    profile,
)
from .errors import DomainError, EnumerationCapError
from .factorization import DEFAULT_REPRESENTATION_CAP, enumerate_representations
from .rational import parse_rational
from .tuples import measure_tuple, norm_t


@dataclass(frozen=True)
class OutputConfig:
    format: str = "table"  # table | json | csv
    t_step: float = 0.01
    precision: int = 12
    path: str | None = None  # None -> stdout

    def __post_init__(self):
        if self.t_step <= 0:
            raise DomainError("t_step must be positive")
        if not 1 <= self.precision <= 17:
            raise DomainError("precision must be in [1, 17]")


def format_float(v: float, precision: int = 12) -> str:
    """Shortest round-trip representation truncated to `precision` decimals."""
    s = repr(float(v))
    if "e" in s or "E" in s or "n" in s:  # scientific notation, nan/inf
        return f"{v:.{precision}g}"
    if "." in s:
        head, frac = s.split(".")
        frac = frac[:precision].rstrip("0")
        s = f"{head}.{frac}" if frac else head
    return s


def _parse_t(text: str) -> float:
    if text.strip().lower() in ("inf", "infinity", "oo"):
        return math.inf
    try:
        t = float(text)
    except ValueError:
        raise DomainError(f"cannot parse t from {text!r}")
    if t <= 0:
        raise DomainError("t must be positive")
    return t


def _tuple_str(x) -> str:
    return "(" + ",".join(str(e) for e in x) + ")"


def _emit(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def cmd_measure(args) -> int:
    alpha = parse_rational(args.alpha)
    t = _parse_t(args.t)
    value = mt_measure(alpha, t, cap=args.cap)
    attaining = sorted(attaining_tuples(alpha, t, cap=args.cap))
    lines = [
        format_float(value, args.precision),
        "attaining: " + " ".join(_tuple_str(x) for x in attaining),
        "assumes_conjecture: true",
    ]
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_tuples(args) -> int:
    alpha = parse_rational(args.alpha)
    if args.minimal:
        rows = [_tuple_str(x) for x in minimal_tuples(alpha, cap=args.cap)]
    else:
        reps = enumerate_representations(alpha, cap=args.cap)
        table = sorted(
            (tuple(sorted((max(p.a, p.b) for p in rep))), rep) for rep in reps
        )
        rows = []
        for _, rep in table:
            factors = " * ".join(
                str(p.a) if p.b == 1 else f"{p.a}/{p.b}" for p in rep
            )
            rows.append(f"{factors or '1'}\t{_tuple_str(measure_tuple(rep))}")
    _emit("\n".join(rows) + "\n", args.output)
    return 0


def _profile_document(args) -> dict:
    alpha = parse_rational(args.alpha)
    config = CrossingSearchConfig(
        scan_step=args.scan_step, bisect_width=args.bisect_tol
    )
    prof = profile(alpha, args.T, config=config, cap=args.cap)
    p = args.precision
    rounded = lambda v: float(format_float(v, p))
    return {
        "alpha": str(alpha),
        "T": rounded(prof.T),
        "assumes_conjecture": prof.assumes_conjecture,
        "pieces": [
            {
                "t_lo": rounded(piece.t_lo),
                "t_hi": rounded(piece.t_hi),
                "tuple": list(piece.active),
            }
            for piece in prof.pieces
        ],
        "exceptional_points": [
            {"t": rounded(e.t), "residual": rounded(e.residual)}
            for e in prof.exceptional_points
        ],
    }


def cmd_profile(args) -> int:
    doc = _profile_document(args)
    if args.format == "table":
        lines = [f"alpha: {doc['alpha']}  T: {doc['T']}  assumes_conjecture: true"]
        for piece in doc["pieces"]:
            lines.append(
                f"({piece['t_lo']}, {piece['t_hi']}]  active "
                + _tuple_str(piece["tuple"])
            )
        for e in doc["exceptional_points"]:
            lines.append(f"exceptional t={e['t']}  residual={e['residual']}")
        _emit("\n".join(lines) + "\n", args.output)
    else:
        _emit(json.dumps(doc, indent=2) + "\n", args.output)
    return 0


def cmd_plot(args) -> int:
    alpha = parse_rational(args.alpha)
    tuples = minimal_tuples(alpha, cap=args.cap)
    p = args.precision
    header = "t," + ",".join(f"f_{k + 1}" for k in range(len(tuples))) + ",envelope"
    lines = [header]
    n = int(round(args.T / args.step))
    for i in range(1, n + 1):
        t = i * args.step
        if t > args.T + 1e-12:
            break
        values = [norm_t(x, t) for x in tuples]
        cells = [format_float(t, p)]
        cells += [format_float(v, p) for v in values]
        cells.append(format_float(min(values), p))
        lines.append(",".join(cells))
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_check_integer(args) -> int:
    if args.n_max < 2:
        raise argparse.ArgumentTypeError("n_max must be >= 2")
    t_grid = [_parse_t(s) for s in args.t_grid.split(",")]
    worst = 0.0
    from .rational import reduce

    for n in range(2, args.n_max + 1):
        for t in t_grid:
            dev = abs(mt_measure(reduce(n, 1), t, cap=args.cap) - integer_closed_form(n, t))
            worst = max(worst, dev)
    status = "PASS" if worst <= 1e-10 else "FAIL"
    _emit(
        f"{status} max deviation {format_float(worst, args.precision)} "
        f"over n in [2, {args.n_max}], t in {{{args.t_grid}}}\n",
        args.output,
    )
    return 0 if status == "PASS" else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mt",
        description="t-metric Mahler measures of rational numbers "
        "(values for 1 < t < inf assume the rational-infimum conjecture)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, alpha=True):
        if alpha:
            p.add_argument("alpha", help="rational as p/q or p")
        p.add_argument("--precision", type=int, default=12)
        p.add_argument("-o", "--output", default=None, help="output path")
        p.add_argument(
            "--cap",
            type=int,
            default=DEFAULT_REPRESENTATION_CAP,
            help="max representations per rational",
        )

    p = sub.add_parser("measure", help="evaluate the measure at one t")
    common(p)
    p.add_argument("-t", default="1", help="positive real or 'inf'")
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("tuples", help="list representations or minimal tuples")
    common(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--all", action="store_true", dest="all")
    group.add_argument("--minimal", action="store_true", dest="minimal")
    p.set_defaults(func=cmd_tuples)

    p = sub.add_parser("profile", help="piecewise envelope decomposition")
    common(p)
    p.add_argument("-T", type=float, default=3.0)
    p.add_argument("--format", choices=["table", "json"], default="json")
    p.add_argument("--scan-step", type=float, default=1e-3)
    p.add_argument("--bisect-tol", type=float, default=1e-12)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("plot", help="CSV of tuple norm curves and envelope")
    common(p)
    p.add_argument("-T", type=float, default=5.0)
    p.add_argument("--step", type=float, default=0.01)
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("check-integer", help="compare against the integer closed form")
    common(p, alpha=False)
    p.add_argument("n_max", type=int)
    p.add_argument("--t-grid", default="0.5,1,1.5,2,4,8")
    p.set_defaults(func=cmd_check_integer)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        OutputConfig(precision=args.precision)  # validate shared knobs
        return args.func(args)
    except argparse.ArgumentTypeError as exc:
        parser.error(str(exc))  # exits 2
    except (DomainError, EnumerationCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
