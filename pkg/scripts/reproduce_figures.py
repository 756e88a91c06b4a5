"""Regenerate every benchmark surface from the default library.

Writes one CSV and one log-log SVG per plane into the output directory:

    alu          energy vs delay of the 32-bit adder
    throughput   power density vs throughput density, unpipelined
    pipelined    the same after ultra-deep pipelining
    wire         energy vs delay of a 100 um repeated interconnect
    span         reachable gates vs intrinsic delay
    cnn          energy vs delay per association

    python3 scripts/reproduce_figures.py out/
"""

from __future__ import annotations

import argparse
import logging
from pathlib import Path

from xcmos.library import default_library_path, load_device_library
from xcmos.results import ResultSet, emit_csv, emit_svg_scatter
from xcmos.suite import SuiteOptions, run_suite

PLANES = [
    # (file stem, suite, benchmark rows, x, y, title)
    ("alu", "alu", "alu", "t_op", "E_op", "32-bit adder: energy vs delay"),
    ("throughput", "throughput", "throughput", "theta_capped", "p_density_capped", "Throughput under 10 W/cm^2"),
    ("pipelined", "throughput", "alu_pipelined", "theta_capped", "p_density_capped", "Pipelined throughput"),
    ("wire", "wire", "wire", "delay", "energy", "100 um interconnect"),
    ("span", "span", "span", "t_int", "n_gates", "Span of control"),
    ("cnn", "cnn", "cnn", "t_assoc", "E_assoc", "CNN association"),
]


def main(argv=None):
    ap = argparse.ArgumentParser(description="Write CSV + SVG for every benchmark plane.")
    ap.add_argument("out", type=Path)
    ap.add_argument("--library", default=None)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.WARNING)

    lib = load_device_library(args.library or default_library_path())
    args.out.mkdir(parents=True, exist_ok=True)
    opts = SuiteOptions(seed=args.seed)
    cache = {}
    for stem, suite, bench, x, y, title in PLANES:
        if suite not in cache:
            cache[suite] = run_suite(lib, suite, opts)
        rows = ResultSet([r for r in cache[suite].rows if r.benchmark == bench])
        emit_csv(rows, args.out / f"{stem}.csv")
        emit_svg_scatter(rows, x, y, args.out / f"{stem}.svg", title=title, benchmark=bench)
        print(f"{stem:<11} {len(rows):3d} rows -> {args.out / stem}.{{csv,svg}}")


if __name__ == "__main__":
    main()
