"""32-bit adder/ALU composition and power-density-constrained throughput.

The ALU is a 32-bit ripple-carry adder built from one full-adder netlist per
bit. Netlists are plain JSON (gate counts per bit, per-bit carry path, sum
tail) so alternate topologies do not need code changes.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Dict, Mapping, Optional, Tuple, Union

from .devices import (
    DEFAULT_CONVENTION,
    DeviceClass,
    DeviceParams,
    GateConvention,
    GateKind,
    GateMetrics,
    gate_metrics,
)
from .errors import InvalidParameterError, NotPipelinableError, StyleMismatchError

P_CAP_DEFAULT = 1e5  # W/m^2, i.e. 10 W/cm^2
DEFAULT_ACTIVITY = 0.25


class CircuitStyle(str, Enum):
    StaticCMOSLike = "StaticCMOSLike"
    DominoNP = "DominoNP"
    NdrClocked = "NdrClocked"
    MajoritySpin = "MajoritySpin"
    ComplementarySpin = "ComplementarySpin"


STYLE_CLASSES = {
    CircuitStyle.StaticCMOSLike: {DeviceClass.ChargeFET, DeviceClass.Ferroelectric},
    CircuitStyle.DominoNP: {DeviceClass.ChargeFET, DeviceClass.Ferroelectric},
    CircuitStyle.NdrClocked: {DeviceClass.NDR},
    CircuitStyle.MajoritySpin: {
        DeviceClass.ASL,
        DeviceClass.CSL,
        DeviceClass.MEMTJ,
        DeviceClass.SWD,
        DeviceClass.CoMET,
    },
    CircuitStyle.ComplementarySpin: {DeviceClass.mLogic},
}


def native_style(cls: DeviceClass) -> CircuitStyle:
    """Unpipelined ALU style a device class is benchmarked with."""
    cls = DeviceClass(cls)
    if cls is DeviceClass.NDR:
        return CircuitStyle.NdrClocked
    if cls is DeviceClass.mLogic:
        return CircuitStyle.ComplementarySpin
    if cls.is_spin:
        return CircuitStyle.MajoritySpin
    return CircuitStyle.StaticCMOSLike


def pipelined_style(cls: DeviceClass) -> CircuitStyle:
    style = native_style(cls)
    return CircuitStyle.DominoNP if style is CircuitStyle.StaticCMOSLike else style


# --- netlists ----------------------------------------------------------------


@dataclass(frozen=True)
class Netlist:
    gates: Mapping[GateKind, int]
    critical_path: Tuple[Tuple[GateKind, int], ...]
    sum_tail: Tuple[Tuple[GateKind, int], ...] = ()
    bits: int = 32
    stage_boundary: str = "FA"
    held_output: Optional[GateKind] = None

    @classmethod
    def from_dict(cls, d: dict) -> "Netlist":
        known = {"gates", "critical_path", "sum_tail", "bits", "stage_boundary", "held_output"}
        unknown = set(d) - known
        if unknown:
            raise InvalidParameterError(f"netlist: unknown keys {sorted(unknown)}")
        if d.get("stage_boundary", "FA") != "FA":
            raise InvalidParameterError("netlist: only stage_boundary 'FA' is supported")
        try:
            gates = {GateKind(g["kind"]): int(g["count"]) for g in d["gates"]}
            path = tuple((GateKind(p["kind"]), int(p["levels"])) for p in d["critical_path"])
            tail = tuple((GateKind(p["kind"]), int(p["levels"])) for p in d.get("sum_tail", ()))
        except (KeyError, ValueError, TypeError) as exc:
            raise InvalidParameterError(f"netlist: malformed entry ({exc})") from exc
        held = d.get("held_output")
        return cls(
            gates=gates,
            critical_path=path,
            sum_tail=tail,
            bits=int(d.get("bits", 32)),
            held_output=GateKind(held) if held else None,
        )

    @classmethod
    def load(cls, path: Union[str, Path]) -> "Netlist":
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    @classmethod
    def builtin(cls, name: str) -> "Netlist":
        text = resources.files("xcmos.data.netlists").joinpath(f"{name}.json").read_text()
        return cls.from_dict(json.loads(text))


NAND_FA = Netlist.builtin("nand_fa")
MAJORITY_FA = Netlist.builtin("majority_fa")
NDR_FA = Netlist.builtin("ndr_fa")


# --- gate provider ------------------------------------------------------------


class GateProvider:
    """Caches per-kind gate metrics for one device."""

    def __init__(self, dev: DeviceParams, convention: GateConvention = DEFAULT_CONVENTION):
        self.device = dev
        self.convention = convention
        self._cache: Dict[GateKind, GateMetrics] = {}

    @property
    def device_class(self) -> DeviceClass:
        return self.device.device_class

    def __call__(self, kind) -> GateMetrics:
        kind = GateKind(kind)
        if kind not in self._cache:
            self._cache[kind] = gate_metrics(self.device, kind, self.convention)
        return self._cache[kind]


@dataclass(frozen=True)
class AluConfig:
    area_overhead: float = 1.2
    energy_overhead: float = 1.0
    spin_activity: float = 1.0
    domino_activity: float = 0.5
    domino_clock_devices: int = 4
    pipeline_area_overhead: Mapping[CircuitStyle, float] = field(
        default_factory=lambda: {
            CircuitStyle.DominoNP: 1.1,
            CircuitStyle.NdrClocked: 1.0,
            CircuitStyle.MajoritySpin: 1.0,
            CircuitStyle.ComplementarySpin: 1.0,
        }
    )


DEFAULT_ALU = AluConfig()


@dataclass(frozen=True)
class CircuitMetrics:
    """Latency, energy and area of one 32-bit operation.

    ``t_cycle`` is the interval between results: equal to ``t_op`` for an
    unpipelined circuit and to the stage delay after pipelining.
    """

    t_op: float
    E_op: float
    A_circ: float
    logic_depth: int
    t_cycle: float
    t_stage: float
    E_dynamic: float
    E_static: float
    style: CircuitStyle

    @property
    def p_density(self) -> float:
        return self.E_op / (self.t_cycle * self.A_circ)

    @property
    def edp(self) -> float:
        return self.E_op * self.t_op


@dataclass(frozen=True)
class ThroughputResult:
    theta_unconstrained: float
    theta_capped: float
    p_cap: float
    limited_by: str  # "Delay" | "Power"


def _path_delay(path, gates):
    return sum(levels * gates(kind).t_gate for kind, levels in path)


def _check_style(gates: GateProvider, style: CircuitStyle) -> None:
    if gates.device_class not in STYLE_CLASSES[style]:
        raise StyleMismatchError(
            f"style {style.value} cannot be built from {gates.device_class.value} device {gates.device.name!r}"
        )


def domino_fa_metrics(gates: GateProvider, config: AluConfig = DEFAULT_ALU) -> GateMetrics:
    """One N-P domino full adder: dynamic carry (majority) and sum (XOR) nodes.

    ``t_gate`` is the carry evaluation delay; ``E_dyn`` is the per-cycle energy
    including the precharge/evaluate clock devices, which toggle every cycle.
    """
    carry, total = gates(GateKind.MAJ3), gates(GateKind.XOR2)
    dev = gates.device
    e_clock = config.domino_clock_devices * dev.C_gate * dev.V_dd**2
    n_clock = config.domino_clock_devices
    return GateMetrics(
        kind=GateKind.DominoFA,
        t_gate=carry.t_gate,
        E_dyn=config.domino_activity * (carry.E_dyn + total.E_dyn) + e_clock,
        P_leak=carry.P_leak + total.P_leak + n_clock * dev.I_off * dev.V_dd / 2,
        A_gate=carry.A_gate + total.A_gate + n_clock * dev.A_dev,
    )


def alu32_metrics(
    gates: Union[GateProvider, DeviceParams],
    style: CircuitStyle,
    activity: float = DEFAULT_ACTIVITY,
    netlist: Optional[Netlist] = None,
    config: AluConfig = DEFAULT_ALU,
) -> CircuitMetrics:
    if isinstance(gates, DeviceParams):
        gates = GateProvider(gates)
    style = CircuitStyle(style)
    _check_style(gates, style)
    if not 0 <= activity <= 1:
        raise InvalidParameterError(f"activity must lie in [0, 1], got {activity}")

    if style is CircuitStyle.DominoNP:
        return _domino_alu(gates, netlist.bits if netlist else 32, config)

    default_netlist = {
        CircuitStyle.StaticCMOSLike: NAND_FA,
        CircuitStyle.ComplementarySpin: NAND_FA,
        CircuitStyle.MajoritySpin: MAJORITY_FA,
        CircuitStyle.NdrClocked: NDR_FA,
    }[style]
    nl = netlist or default_netlist
    bits = nl.bits
    t_stage = _path_delay(nl.critical_path, gates)
    t_op = bits * t_stage + _path_delay(nl.sum_tail, gates)
    area = config.area_overhead * bits * sum(n * gates(k).A_gate for k, n in nl.gates.items())
    switch_energy = bits * sum(n * gates(k).E_dyn for k, n in nl.gates.items())

    if style is CircuitStyle.NdrClocked:
        # every gate is clocked once; only the sum-output gate of each bit stays
        # clocked, bit i holding until the word completes: (bits - i) stages
        held = gates(nl.held_output or GateKind.XOR2)
        e_dyn = switch_energy * config.energy_overhead
        hold_stages = sum(bits - i for i in range(1, bits + 1))
        e_static = held.P_leak * hold_stages * t_stage
    else:
        a = config.spin_activity if style is CircuitStyle.MajoritySpin else activity
        e_dyn = switch_energy * a * config.energy_overhead
        p_leak = bits * sum(n * gates(k).P_leak for k, n in nl.gates.items())
        e_static = p_leak * t_op

    return CircuitMetrics(
        t_op=t_op,
        E_op=e_dyn + e_static,
        A_circ=area,
        logic_depth=bits,
        t_cycle=t_op,
        t_stage=t_stage,
        E_dynamic=e_dyn,
        E_static=e_static,
        style=style,
    )


def _domino_alu(gates, bits, config):
    fa = domino_fa_metrics(gates, config)
    sum_tail = gates(GateKind.XOR2).t_gate
    t_op = bits * fa.t_gate + sum_tail
    e_dyn = bits * fa.E_dyn * config.energy_overhead
    e_static = bits * fa.P_leak * t_op
    return CircuitMetrics(
        t_op=t_op,
        E_op=e_dyn + e_static,
        A_circ=config.area_overhead * bits * fa.A_gate,
        logic_depth=bits,
        t_cycle=t_op,
        t_stage=2 * fa.t_gate,  # evaluate + precharge
        E_dynamic=e_dyn,
        E_static=e_static,
        style=CircuitStyle.DominoNP,
    )


def throughput_density(c: CircuitMetrics, p_cap: float = P_CAP_DEFAULT) -> ThroughputResult:
    """Throughput per unit area, optionally capped by a power density budget."""
    if not p_cap > 0:
        raise InvalidParameterError("p_cap must be > 0")
    theta = 1.0 / (c.t_cycle * c.A_circ)
    power_bound = p_cap / c.E_op if c.E_op > 0 else math.inf
    if theta <= power_bound:
        return ThroughputResult(theta, theta, p_cap, "Delay")
    return ThroughputResult(theta, power_bound, p_cap, "Power")


def pipeline_transform(
    c: CircuitMetrics, style: Optional[CircuitStyle] = None, config: AluConfig = DEFAULT_ALU
) -> CircuitMetrics:
    """Ultra-deep pipelining: one full-adder stage per pipeline stage."""
    style = CircuitStyle(style or c.style)
    if style is CircuitStyle.StaticCMOSLike:
        raise NotPipelinableError("static logic needs explicit latches to pipeline")
    if style is not c.style:
        raise StyleMismatchError(f"metrics were built as {c.style.value}, not {style.value}")
    return replace(
        c,
        A_circ=c.A_circ * config.pipeline_area_overhead[style],
        logic_depth=1,
        t_cycle=min(c.t_stage, c.t_cycle),
    )
