"""``bench`` command line entry point.

Exit codes: 0 success, 1 validation error, 2 parse error, 3 internal error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import replace
from typing import Optional, Sequence

from .cnn import CnnConfig
from .errors import (
    InvalidParameterError,
    LibraryParseError,
    LibraryValidationError,
    UnknownMetricError,
    XcmosError,
)
from .library import default_library_path, load_device_library
from .results import emit_csv, emit_svg_scatter, to_csv
from .suite import SUITES, SuiteOptions, Sweep, run_suite

EXIT_OK, EXIT_VALIDATION, EXIT_PARSE, EXIT_INTERNAL = 0, 1, 2, 3

# default scatter axes and the benchmark rows they are drawn from
PLOT_AXES = {
    "alu": ("alu", "t_op", "E_op", "Energy vs delay, 32-bit ALU"),
    "all": ("alu", "t_op", "E_op", "Energy vs delay, 32-bit ALU"),
    "throughput": ("throughput", "theta_capped", "p_density_capped", "Power density vs throughput density"),
    "wire": ("wire", "delay", "energy", "Energy vs delay, repeated interconnect"),
    "span": ("span", "t_int", "n_gates", "Span of control vs intrinsic delay"),
    "cnn": ("cnn", "t_assoc", "E_assoc", "Energy vs delay per association"),
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bench", description="Beyond-CMOS energy/delay benchmarks.")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--library", help="device library JSON (default: $XCMOS_LIB or the shipped library)")
    p.add_argument("--p-cap", type=float, default=10.0, help="power density cap, W/cm^2 (default 10)")
    p.add_argument("--length", type=float, default=100.0, help="wire length, um (default 100)")
    p.add_argument("--activity", type=float, default=SuiteOptions.activity, help="static-logic switching activity")
    p.add_argument("--seed", type=int, default=0, help="CNN recall seed")
    p.add_argument("--trials", type=int, default=CnnConfig.n_trials, help="CNN recall trials")
    p.add_argument("--csv", help="write results CSV here (default: stdout)")
    p.add_argument("--svg", help="write a log-log scatter SVG here")
    p.add_argument("--x", help="scatter x metric (default depends on suite)")
    p.add_argument("--y", help="scatter y metric (default depends on suite)")
    p.add_argument("--sweep", help="field=start:stop:steps, e.g. length=10:1000:5 or V_dd=0.2:0.8:4")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.ERROR, format="%(levelname)s %(message)s")
    try:
        sweep = Sweep.parse(args.sweep) if args.sweep else None
    except InvalidParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        lib = load_device_library(args.library or default_library_path())
        opts = SuiteOptions(
            p_cap=args.p_cap,
            length=args.length,
            activity=args.activity,
            seed=args.seed,
            cnn=replace(CnnConfig(), n_trials=args.trials),
            sweep=sweep,
        )
        if not (args.p_cap > 0 and args.length >= 0 and 0 <= args.activity <= 1):
            raise InvalidParameterError("need --p-cap > 0, --length >= 0, 0 <= --activity <= 1")
        rs = run_suite(lib, args.suite, opts)
        if args.csv:
            emit_csv(rs, args.csv)
        elif not args.svg:
            sys.stdout.write(to_csv(rs))
        if args.svg:
            bench, x, y, title = PLOT_AXES[args.suite]
            emit_svg_scatter(rs, args.x or x, args.y or y, args.svg, title=title, benchmark=bench)
    except LibraryParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (LibraryValidationError, InvalidParameterError, UnknownMetricError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except XcmosError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
