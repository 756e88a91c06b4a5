"""Benchmark suites over a device library."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np

from .circuits import (
    DEFAULT_ACTIVITY,
    alu32_metrics,
    native_style,
    pipeline_transform,
    pipelined_style,
    throughput_density,
)
from .cnn import CnnConfig, association_benchmark, run_recall
from .devices import DeviceParams
from .errors import InvalidParameterError, XcmosError
from .interconnect import (
    WireParams,
    device_span,
    intrinsic_delay,
    repeated_wire_delay,
    repeated_wire_energy,
    repeater_from_device,
)
from .library import DeviceLibrary
from .results import ResultSet, Row

log = logging.getLogger(__name__)

SUITES = ("alu", "throughput", "wire", "span", "cnn", "all")

DEVICE_SWEEP_FIELDS = ("V_dd", "I_on", "I_off", "C_gate", "A_dev", "t_p")
OPTION_SWEEP_FIELDS = {"length": "um", "p_cap": "W/cm^2", "activity": "1"}
DEVICE_FIELD_UNITS = {"V_dd": "V", "I_on": "A", "I_off": "A", "C_gate": "F", "A_dev": "m^2", "t_p": "s"}

# used when a library carries no interconnect section
FALLBACK_WIRE = WireParams(r_w=1.0e8, c_w=2.0e-10)


@dataclass(frozen=True)
class Sweep:
    field: str
    values: Tuple[float, ...]

    @classmethod
    def parse(cls, text: str) -> "Sweep":
        """``field=start:stop:steps`` with linearly spaced points."""
        try:
            name, spec = text.split("=", 1)
            start, stop, steps = spec.split(":")
            start, stop, steps = float(start), float(stop), int(steps)
        except ValueError as exc:
            raise InvalidParameterError(f"bad sweep {text!r}; expected field=start:stop:steps") from exc
        name = name.strip()
        if name not in DEVICE_SWEEP_FIELDS and name not in OPTION_SWEEP_FIELDS:
            known = sorted(DEVICE_SWEEP_FIELDS + tuple(OPTION_SWEEP_FIELDS))
            raise InvalidParameterError(f"cannot sweep {name!r}; sweepable fields: {known}")
        if steps < 1:
            raise InvalidParameterError("sweep needs at least one step")
        return cls(name, tuple(float(v) for v in np.linspace(start, stop, steps)))

    @property
    def unit(self) -> str:
        return OPTION_SWEEP_FIELDS.get(self.field) or DEVICE_FIELD_UNITS[self.field]


@dataclass(frozen=True)
class SuiteOptions:
    p_cap: float = 10.0  # W/cm^2
    length: float = 100.0  # um
    activity: float = DEFAULT_ACTIVITY
    seed: int = 0
    cnn: CnnConfig = field(default_factory=CnnConfig)
    sweep: Optional[Sweep] = None

    @property
    def p_cap_si(self) -> float:
        return self.p_cap * 1e4

    @property
    def length_si(self) -> float:
        return self.length * 1e-6


def _warning_row(dev: str, bench: str, exc: Exception) -> Row:
    log.warning("skipping %s/%s: %s", dev, bench, exc)
    return Row(device=dev, benchmark=bench, note=f"skipped: {type(exc).__name__}: {exc}")


def _alu_rows(dev: DeviceParams, opts: SuiteOptions) -> List[Row]:
    c = alu32_metrics(dev, native_style(dev.device_class), opts.activity)
    return [
        Row(
            dev.name,
            "alu",
            {
                "t_op": c.t_op,
                "E_op": c.E_op,
                "E_dynamic": c.E_dynamic,
                "E_static": c.E_static,
                "A_circ": c.A_circ,
                "p_density": c.p_density,
                "edp": c.edp,
                "logic_depth": float(c.logic_depth),
            },
            {
                "t_op": "s",
                "E_op": "J",
                "E_dynamic": "J",
                "E_static": "J",
                "A_circ": "m^2",
                "p_density": "W/m^2",
                "edp": "J*s",
                "logic_depth": "1",
            },
            note=c.style.value,
        )
    ]


def _throughput_metrics(c, opts):
    t = throughput_density(c, opts.p_cap_si)
    metrics = {
        "t_cycle": c.t_cycle,
        "E_op": c.E_op,
        "A_circ": c.A_circ,
        "p_density": c.p_density,
        "theta_unconstrained": t.theta_unconstrained,
        "theta_capped": t.theta_capped,
        "p_density_capped": t.theta_capped * c.E_op,
        "p_cap": t.p_cap,
        "power_limited": 1.0 if t.limited_by == "Power" else 0.0,
    }
    units = {
        "t_cycle": "s",
        "E_op": "J",
        "A_circ": "m^2",
        "p_density": "W/m^2",
        "theta_unconstrained": "1/(s*m^2)",
        "theta_capped": "1/(s*m^2)",
        "p_density_capped": "W/m^2",
        "p_cap": "W/m^2",
        "power_limited": "1",
    }
    return metrics, units


def _throughput_rows(dev: DeviceParams, opts: SuiteOptions) -> List[Row]:
    base = alu32_metrics(dev, native_style(dev.device_class), opts.activity)
    rows = [Row(dev.name, "throughput", *_throughput_metrics(base, opts), note=base.style.value)]
    deep = pipeline_transform(alu32_metrics(dev, pipelined_style(dev.device_class), opts.activity))
    m, u = _throughput_metrics(deep, opts)
    m["logic_depth"], u["logic_depth"] = float(deep.logic_depth), "1"
    rows.append(Row(dev.name, "alu_pipelined", m, u, note=deep.style.value))
    return rows


def _wire_rows(dev: DeviceParams, opts: SuiteOptions, wire: WireParams) -> List[Row]:
    rep = repeater_from_device(dev)
    l = opts.length_si
    return [
        Row(
            dev.name,
            "wire",
            {
                "length": l,
                "delay": repeated_wire_delay(wire, rep, l),
                "energy": repeated_wire_energy(wire, rep, l),
                "R0": rep.R0,
                "C0": rep.C0,
                "t_p": rep.t_p,
            },
            {"length": "m", "delay": "s", "energy": "J", "R0": "ohm", "C0": "F", "t_p": "s"},
        )
    ]


def _span_rows(dev: DeviceParams, opts: SuiteOptions, wire: WireParams) -> List[Row]:
    s = device_span(dev, wire)
    return [
        Row(
            dev.name,
            "span",
            {"t_int": intrinsic_delay(dev), "T_clk": s.T_clk, "l_max": s.l_max, "n_gates": float(s.n_gates)},
            {"t_int": "s", "T_clk": "s", "l_max": "m", "n_gates": "1"},
        )
    ]


def _device_suites(suite: str) -> Tuple[str, ...]:
    if suite == "all":
        return ("alu", "throughput", "wire", "span")
    return (suite,) if suite != "cnn" else ()


def _run_once(lib: DeviceLibrary, suite: str, opts: SuiteOptions) -> List[Row]:
    wire = lib.wire or FALLBACK_WIRE
    runners: Dict[str, Callable[[DeviceParams], List[Row]]] = {
        "alu": lambda d: _alu_rows(d, opts),
        "throughput": lambda d: _throughput_rows(d, opts),
        "wire": lambda d: _wire_rows(d, opts, wire),
        "span": lambda d: _span_rows(d, opts, wire),
    }
    bench_name = {"alu": "alu", "throughput": "throughput", "wire": "wire", "span": "span"}
    rows: List[Row] = []
    for name in _device_suites(suite):
        for dev in lib.devices:
            try:
                rows.extend(runners[name](dev))
            except XcmosError as exc:
                rows.append(_warning_row(dev.name, bench_name[name], exc))
    if suite in ("cnn", "all") and lib.cnn_models:
        stats = run_recall(opts.cnn, seed=opts.seed)
        for model in lib.cnn_models:
            try:
                r = association_benchmark(model, opts.cnn, stats=stats)
            except XcmosError as exc:
                rows.append(_warning_row(model.name, "cnn", exc))
                continue
            rows.append(
                Row(
                    model.name,
                    "cnn",
                    {
                        "E_assoc": r.E_assoc,
                        "t_assoc": r.t_assoc,
                        "pixel_accuracy": r.pixel_accuracy,
                        "trials_recalled": r.trials_recalled,
                        "settle_steps": r.settle_steps,
                        "accuracy_pass": 1.0 if r.accuracy_pass else 0.0,
                    },
                    {
                        "E_assoc": "J",
                        "t_assoc": "s",
                        "pixel_accuracy": "1",
                        "trials_recalled": "1",
                        "settle_steps": "1",
                        "accuracy_pass": "1",
                    },
                    note=f"{r.kind.value}:{model.device.name}",
                )
            )
    return rows


def _swept_library(lib: DeviceLibrary, field_name: str, value: float):
    devices, failures = [], []
    for d in lib.devices:
        try:
            devices.append(replace(d, **{field_name: value}))
        except XcmosError as exc:
            failures.append((d.name, exc))
    return replace(lib, devices=tuple(devices)), failures


def run_suite(lib: DeviceLibrary, suite: str, options: SuiteOptions = SuiteOptions()) -> ResultSet:
    """One row per (device, benchmark); deterministic for fixed options."""
    if suite not in SUITES:
        raise InvalidParameterError(f"unknown suite {suite!r}; choose from {SUITES}")
    rs = ResultSet()
    sweep = options.sweep
    if sweep is None:
        rs.extend(_run_once(lib, suite, options))
        return rs
    for value in sweep.values:
        if sweep.field in OPTION_SWEEP_FIELDS:
            sub_lib, failures = lib, []
            opts = replace(options, **{sweep.field: value}, sweep=None)
        else:
            sub_lib, failures = _swept_library(lib, sweep.field, value)
            opts = replace(options, sweep=None)
        rows = _run_once(sub_lib, suite, opts)
        for name, exc in failures:
            for bench in _device_suites(suite):
                rows.append(_warning_row(name, bench, exc))
        key = f"sweep_{sweep.field}"
        for r in rows:
            r.metrics[key] = value
            r.units[key] = sweep.unit
        rs.extend(rows)
    return rs
