"""Command line front end.

    genlogistic time-domain [--curve K,BETA,NU ...] [--t-min T] [--t-max T] [-n N]
    genlogistic spectrum    [--curve ...] [--omega-min W] [--omega-max W] [-n N]
    genlogistic parametric  [--curve ...] [--omega-min W] [--omega-max W] [-n N]
    genlogistic verify      [--json]

Tables go to stdout (or --output) as CSV or JSON.  Exit codes: 0 success,
1 I/O failure, 2 usage error, 3 a verification gate failed.
"""
import argparse
from fractions import Fraction
import io
import json
import sys
from typing import List, Optional, Sequence

import numpy as np

from . import verify
from ._backend import backend_name
from .errors import ArgumentError
from .model import SigmoidParams, sample_time_domain
from .spectral import FrequencyGrid, sample_spectrum

EXIT_OK, EXIT_IO, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2, 3

_F = Fraction
# figures 1 and 2: 1/nu in {1, 1/4, 1/8, 1/12} and {1, 4, 8, 12}, k = 1, beta = 2
FIGURE_1_2_SETS = tuple(SigmoidParams(1.0, 2.0, float(nu)) for nu in
                        (_F(1), _F(4), _F(8), _F(12), _F(1, 4), _F(1, 8), _F(1, 12)))
# figure 3: nu = 1, 4, 8..12, 1/4, 1/8..1/12
FIGURE_3_SETS = tuple(SigmoidParams(1.0, 2.0, float(nu)) for nu in
                      (_F(1), _F(4), *(_F(n) for n in range(8, 13)),
                       _F(1, 4), *(_F(1, n) for n in range(8, 13))))

DEFAULT_GRIDS = {
    "time-domain": (-6.0, 6.0, 1201),
    "spectrum": (-15.0, 15.0, 1201),
    "parametric": (-30.0, 30.0, 2401),
}


def _number(text: str) -> float:
    num, _, den = text.strip().partition("/")
    return float(num) / float(den) if den else float(num)


def parse_curve(text: str) -> SigmoidParams:
    """'k,beta,nu' with each entry a decimal or a ratio such as 1/12."""
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected k,beta,nu but got {text!r}")
    try:
        k, b, nu = (_number(p) for p in parts)
        return SigmoidParams(k, b, nu)
    except (ValueError, ZeroDivisionError, ArgumentError) as exc:
        raise argparse.ArgumentTypeError(f"bad curve {text!r}: {exc}") from None


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


class Table:
    """One abscissa column plus named value columns for each parameter set."""

    def __init__(self, subcommand: str, axis: str, axis_values: np.ndarray):
        self.subcommand = subcommand
        self.axis = axis
        self.axis_values = np.asarray(axis_values, dtype=float)
        self.curves: List[tuple] = []

    def add(self, params: SigmoidParams, columns: dict):
        self.curves.append((params, {name: np.asarray(v, dtype=float) for name, v in columns.items()}))

    def column(self, name: str, index: int) -> np.ndarray:
        return self.curves[index][1][name]

    def header(self) -> List[str]:
        names = [self.axis]
        for params, cols in self.curves:
            names.extend(f"{name}[{params.label}]" for name in cols)
        return names

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write(",".join(self.header()) + "\n")
        data = [self.axis_values] + [c for _, cols in self.curves for c in cols.values()]
        for row in zip(*data):
            buf.write(",".join(_fmt(x) for x in row) + "\n")
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {
            "subcommand": self.subcommand,
            "params": [p.as_dict() for p, _ in self.curves],
            self.axis: self.axis_values.tolist(),
            "curves": [
                {"params": p.as_dict(), "label": p.label, **{n: c.tolist() for n, c in cols.items()}}
                for p, cols in self.curves
            ],
        }
        return json.dumps(doc, allow_nan=False) + "\n"


def cmd_time_domain(curves: Sequence[SigmoidParams], t_min: float, t_max: float, n: int,
                    which: str = "derivative") -> Table:
    table = None
    for p in curves:
        series = sample_time_domain(p, t_min, t_max, n, which)
        if table is None:
            table = Table("time-domain", "t", series.t)
        table.add(p, {which: series.values})
    return table


def cmd_spectrum(curves: Sequence[SigmoidParams], omega_min: float, omega_max: float, n: int) -> Table:
    grid = FrequencyGrid(omega_min, omega_max, n)
    table = Table("spectrum", "omega", grid.values())
    for p in curves:
        s = sample_spectrum(p, grid)
        table.add(p, {"re": s.real, "im": s.imag, "magnitude": s.magnitude, "phase": s.phase})
    return table


def cmd_parametric(curves: Sequence[SigmoidParams], omega_min: float, omega_max: float, n: int) -> Table:
    grid = FrequencyGrid(omega_min, omega_max, n)
    table = Table("parametric", "omega", grid.values())
    for p in curves:
        s = sample_spectrum(p, grid)
        table.add(p, {"re": s.real, "im": s.imag})
    return table


def cmd_verify(as_json: bool = False):
    """Run every identity check; returns (exit status, report text)."""
    results = verify.run_all()
    ok = all(r.passed for r in results)
    if as_json:
        text = json.dumps({"passed": ok, "backend": backend_name(),
                           "checks": [r.as_dict() for r in results]}, allow_nan=False, indent=2) + "\n"
    else:
        text = verify.format_report(results)
    return (EXIT_OK if ok else EXIT_VERIFY), text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genlogistic",
        description="Generalized logistic pulse and its Fourier transform: figure data and self-checks.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, lo_name, hi_name, key):
        lo, hi, n = DEFAULT_GRIDS[key]
        p.add_argument("--curve", action="append", type=parse_curve, metavar="K,BETA,NU",
                       help="parameter set; repeat for several curves (fractions like 1/12 allowed)")
        p.add_argument(f"--{lo_name}", type=float, default=lo)
        p.add_argument(f"--{hi_name}", type=float, default=hi)
        p.add_argument("-n", "--samples", type=int, default=n, help="number of grid points")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("-o", "--output", help="write to this file instead of stdout")

    td = sub.add_parser("time-domain", help="samples of f = y' (or y) on a t grid")
    common(td, "t-min", "t-max", "time-domain")
    td.add_argument("--which", choices=("derivative", "curve"), default="derivative")
    common(sub.add_parser("spectrum", help="re/im/magnitude/phase of F on an omega grid"),
           "omega-min", "omega-max", "spectrum")
    common(sub.add_parser("parametric", help="(re F, im F) traces ordered by omega"),
           "omega-min", "omega-max", "parametric")
    vp = sub.add_parser("verify", help="run all identity/oracle checks")
    vp.add_argument("--json", action="store_true", help="machine-readable report")
    vp.add_argument("-o", "--output")
    return parser


def _emit(text: str, output: Optional[str]) -> int:
    if output is None:
        sys.stdout.write(text)
        return EXIT_OK
    try:
        with open(output, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"genlogistic: cannot write {output}: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.subcommand == "verify":
        status, text = cmd_verify(args.json)
        io_status = _emit(text, args.output)
        return io_status if io_status != EXIT_OK else status

    try:
        if args.subcommand == "time-domain":
            curves = args.curve or FIGURE_1_2_SETS
            table = cmd_time_domain(curves, args.t_min, args.t_max, args.samples, args.which)
        elif args.subcommand == "spectrum":
            curves = args.curve or FIGURE_1_2_SETS
            table = cmd_spectrum(curves, args.omega_min, args.omega_max, args.samples)
        else:
            curves = args.curve or FIGURE_3_SETS
            table = cmd_parametric(curves, args.omega_min, args.omega_max, args.samples)
    except ArgumentError as exc:
        parser.error(str(exc))  # exits with status 2

    text = table.to_csv() if args.format == "csv" else table.to_json()
    return _emit(text, args.output)


if __name__ == "__main__":
    sys.exit(main())
