"""Analytical device-level models.

Every technology is described by a :class:`DeviceParams` record. The functions
here turn such a record into :class:`GateMetrics` (delay, switching energy,
leakage, area) for a gate kind. Charge devices follow the C*V/I law; spintronic
devices are built from a macrospin switching model, a 1D spin diffusion
channel, a linear domain wall velocity law and magnetoelectric write energies.

All quantities are SI.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field, replace
from enum import Enum
from types import MappingProxyType
from typing import Mapping, Optional, Tuple

from scipy.constants import elementary_charge as Q_E
from scipy.constants import hbar as HBAR
from scipy.constants import k as K_B
from scipy.constants import physical_constants

from .errors import (
    ClassMismatchError,
    DegenerateGeometryError,
    InvalidParameterError,
    NoMotionError,
    NoSwitchingError,
    SwitchingDelayCapError,
    ThermalStabilityError,
    UnphysicalParameterWarning,
)

MU_B = physical_constants["Bohr magneton"][0]

MIN_THERMAL_STABILITY = 40.0
DEFAULT_DELAY_CAP = 1e-3  # s


class DeviceClass(str, Enum):
    ChargeFET = "ChargeFET"
    Ferroelectric = "Ferroelectric"
    NDR = "NDR"
    ASL = "ASL"
    CSL = "CSL"
    mLogic = "mLogic"
    MEMTJ = "MEMTJ"
    SWD = "SWD"
    CoMET = "CoMET"

    @property
    def is_charge(self) -> bool:
        return self in CHARGE_CLASSES

    @property
    def is_spin(self) -> bool:
        return not self.is_charge

    @property
    def is_voltage_controlled(self) -> bool:
        return self in (DeviceClass.MEMTJ, DeviceClass.SWD, DeviceClass.CoMET)


CHARGE_CLASSES = frozenset({DeviceClass.ChargeFET, DeviceClass.Ferroelectric, DeviceClass.NDR})
SPIN_CLASSES = frozenset(set(DeviceClass) - CHARGE_CLASSES)


class CslVariant(str, Enum):
    Base = "Base"
    CopperCollector = "CopperCollector"
    Complementary = "Complementary"
    YIG = "YIG"


class MemtjVariant(str, Enum):
    Standard = "Standard"
    CompactSingleDomain = "CompactSingleDomain"
    Preset = "Preset"


class AnisotropyKind(str, Enum):
    InPlane = "InPlane"
    PMA = "PMA"


class GateKind(str, Enum):
    INV = "INV"
    NAND2 = "NAND2"
    XOR2 = "XOR2"
    MAJ3 = "MAJ3"
    DominoFA = "DominoFA"


@dataclass(frozen=True)
class GateConvention:
    """Per-gate input-device multipliers and device counts for C*V/I gates."""

    k_gate: Mapping[GateKind, float] = field(
        default_factory=lambda: MappingProxyType(
            {GateKind.INV: 1.0, GateKind.NAND2: 1.5, GateKind.XOR2: 3.0, GateKind.MAJ3: 2.0}
        )
    )
    n_dev: Mapping[GateKind, int] = field(
        default_factory=lambda: MappingProxyType(
            {GateKind.INV: 2, GateKind.NAND2: 4, GateKind.XOR2: 10, GateKind.MAJ3: 6}
        )
    )


DEFAULT_CONVENTION = GateConvention()


def _check_positive(owner: str, **values: float) -> None:
    for key, v in values.items():
        if not (isinstance(v, (int, float)) and math.isfinite(v) and v > 0):
            raise InvalidParameterError(f"{owner}: {key} must be finite and > 0, got {v!r}")


@dataclass(frozen=True)
class MagnetParams:
    M_s: float
    K_u: float
    alpha: float
    eta: float
    dims: Tuple[float, float, float]
    T: float = 300.0
    anisotropy_kind: AnisotropyKind = AnisotropyKind.InPlane

    def __post_init__(self):
        _check_positive("magnet", M_s=self.M_s, K_u=self.K_u, T=self.T)
        if len(self.dims) != 3:
            raise InvalidParameterError("magnet: dims must be (length, width, thickness)")
        _check_positive("magnet", length=self.dims[0], width=self.dims[1], thickness=self.dims[2])
        if not 0.0 <= self.alpha < 1.0:
            raise InvalidParameterError(f"magnet: alpha must lie in (0, 1), got {self.alpha}")
        if self.alpha == 0.0:
            warnings.warn("magnet: alpha = 0 is unphysical", UnphysicalParameterWarning, stacklevel=3)
        if not 0.0 < self.eta <= 1.0:
            raise InvalidParameterError(f"magnet: eta must lie in (0, 1], got {self.eta}")
        object.__setattr__(self, "dims", tuple(float(d) for d in self.dims))
        object.__setattr__(self, "anisotropy_kind", AnisotropyKind(self.anisotropy_kind))
        delta = self.thermal_stability
        # relative slack so that a barrier built as exactly 40 kT is accepted
        if delta < MIN_THERMAL_STABILITY * (1 - 1e-9):
            raise ThermalStabilityError(
                f"magnet: thermal stability {delta:.3g} < {MIN_THERMAL_STABILITY:g}"
            )

    @property
    def volume(self) -> float:
        l, w, t = self.dims
        return l * w * t

    @property
    def thermal_stability(self) -> float:
        # InPlane: K_u is already the effective barrier density (shape anisotropy included).
        return self.K_u * self.volume / (K_B * self.T)

    @property
    def n_spins(self) -> float:
        """Number of Bohr magnetons carried by the magnet."""
        return self.M_s * self.volume / MU_B

    def scaled(self, factor: float) -> "MagnetParams":
        l, w, t = self.dims
        return replace(self, dims=(l * factor, w, t))


@dataclass(frozen=True)
class SpinChannelParams:
    beta: float
    l_sf: float
    l_c: float
    l_g: float
    rho: float
    cross_section: float

    def __post_init__(self):
        if not 0.0 < self.beta <= 1.0:
            raise InvalidParameterError(f"channel: beta must lie in (0, 1], got {self.beta}")
        _check_positive("channel", l_sf=self.l_sf, rho=self.rho, cross_section=self.cross_section)
        if self.l_c < 0 or self.l_g < 0:
            raise InvalidParameterError("channel: lengths must be >= 0")

    @property
    def resistance(self) -> float:
        return self.rho * (self.l_c + self.l_g) / self.cross_section


@dataclass(frozen=True)
class DeviceParams:
    name: str
    device_class: DeviceClass
    V_dd: float
    I_on: float
    I_off: float
    C_gate: float
    A_dev: float
    t_p: float = 0.0
    variant: Optional[str] = None
    magnet: Optional[MagnetParams] = None
    channel: Optional[SpinChannelParams] = None
    extras: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        cls = DeviceClass(self.device_class)
        object.__setattr__(self, "device_class", cls)
        object.__setattr__(self, "extras", MappingProxyType(dict(self.extras)))
        where = f"device {self.name!r}"
        _check_positive(where, V_dd=self.V_dd, I_on=self.I_on, C_gate=self.C_gate, A_dev=self.A_dev)
        if not (self.I_off >= 0 and self.I_off < self.I_on):
            raise InvalidParameterError(f"{where}: need I_on > I_off >= 0")
        if not self.t_p >= 0:
            raise InvalidParameterError(f"{where}: t_p must be >= 0")
        if cls.is_spin and self.magnet is None:
            raise InvalidParameterError(f"{where}: spintronic class {cls.value} requires a magnet")
        if cls in (DeviceClass.ASL, DeviceClass.CSL) and self.channel is None:
            raise InvalidParameterError(f"{where}: {cls.value} requires a spin channel")
        if cls is DeviceClass.CSL:
            object.__setattr__(self, "variant", CslVariant(self.variant or CslVariant.Base))
        elif cls is DeviceClass.MEMTJ:
            object.__setattr__(self, "variant", MemtjVariant(self.variant or MemtjVariant.Standard))
        elif self.variant is not None:
            raise InvalidParameterError(f"{where}: class {cls.value} takes no variant")
        for key, v in self.extras.items():
            if not isinstance(v, (int, float)) or math.isnan(v):
                raise InvalidParameterError(f"{where}: extras[{key!r}] must be numeric")

    def extra(self, key: str, default: Optional[float] = None) -> float:
        if key in self.extras:
            return float(self.extras[key])
        if default is None:
            raise InvalidParameterError(f"device {self.name!r}: missing extras[{key!r}]")
        return default


@dataclass(frozen=True)
class GateMetrics:
    kind: GateKind
    t_gate: float
    E_dyn: float
    P_leak: float
    A_gate: float
    E_hold: float = 0.0

    def __post_init__(self):
        if not (self.t_gate > 0 and math.isfinite(self.t_gate)):
            raise InvalidParameterError(f"gate delay must be finite and > 0, got {self.t_gate}")
        for name in ("E_dyn", "P_leak", "A_gate", "E_hold"):
            v = getattr(self, name)
            if not (v >= 0 and math.isfinite(v)):
                raise InvalidParameterError(f"{name} must be finite and >= 0, got {v}")


def _require_class(dev: DeviceParams, *allowed: DeviceClass) -> None:
    if dev.device_class not in allowed:
        names = ", ".join(c.value for c in allowed)
        raise ClassMismatchError(f"device {dev.name!r} is {dev.device_class.value}, expected one of: {names}")


# --- charge devices ----------------------------------------------------------


def _drive_capacitance(dev, kind, fanout, ext_load, convention):
    if fanout < 1:
        raise InvalidParameterError("fanout must be >= 1")
    if ext_load < 0:
        raise InvalidParameterError("ext_load must be >= 0")
    k = convention.k_gate[GateKind(kind)]
    return k * dev.C_gate * (1 + fanout) + ext_load


def fet_gate_metrics(
    dev: DeviceParams,
    kind: GateKind = GateKind.INV,
    fanout: int = 1,
    ext_load: float = 0.0,
    convention: GateConvention = DEFAULT_CONVENTION,
) -> GateMetrics:
    """C*V/I gate model; ferroelectric devices add one polarization delay per gate."""
    _require_class(dev, DeviceClass.ChargeFET, DeviceClass.Ferroelectric, DeviceClass.NDR)
    if dev.I_on <= 0:
        raise InvalidParameterError(f"device {dev.name!r}: I_on must be > 0")
    kind = GateKind(kind)
    c_drive = _drive_capacitance(dev, kind, fanout, ext_load, convention)
    n = convention.n_dev[kind]
    return GateMetrics(
        kind=kind,
        t_gate=c_drive * dev.V_dd / dev.I_on + dev.t_p,
        E_dyn=c_drive * dev.V_dd**2,
        P_leak=n * dev.I_off * dev.V_dd,
        A_gate=n * dev.A_dev,
    )


def ndr_gate_metrics(
    dev: DeviceParams,
    hold_time: float = 0.0,
    kind: GateKind = GateKind.INV,
    fanout: int = 1,
    ext_load: float = 0.0,
    convention: GateConvention = DEFAULT_CONVENTION,
) -> GateMetrics:
    """NDR latch gate: dynamic C*V^2 plus static leakage while the clock is held.

    Only the conducting branch of a clocked NDR gate leaks, so the static
    power is ``I_off * V_dd`` per gate irrespective of the gate kind.
    """
    _require_class(dev, DeviceClass.NDR)
    if hold_time < 0:
        raise InvalidParameterError("hold_time must be >= 0")
    kind = GateKind(kind)
    c_drive = _drive_capacitance(dev, kind, fanout, ext_load, convention)
    p_leak = dev.I_off * dev.V_dd
    return GateMetrics(
        kind=kind,
        t_gate=c_drive * dev.V_dd / dev.I_on,
        E_dyn=c_drive * dev.V_dd**2,
        P_leak=p_leak,
        A_gate=convention.n_dev[kind] * dev.A_dev,
        E_hold=p_leak * hold_time,
    )


# --- spin transport and magnet switching --------------------------------------


def asl_spin_current_density(ch: SpinChannelParams, J_c: float) -> float:
    """Spin current density reaching the output magnet of an ASL channel.

    Injector at the junction, a grounded branch of length ``l_g`` and an ideal
    absorber (the output magnet) at distance ``l_c``.
    """
    if J_c < 0:
        raise InvalidParameterError("J_c must be >= 0")
    if ch.l_g <= 0:
        raise DegenerateGeometryError("ground path length l_g must be > 0")
    c = ch.l_c / ch.l_sf
    g = ch.l_g / ch.l_sf
    if g > 350 or c > 350:
        # cosh overflows; coth(g) -> 1 and the denominator is exp(c)
        denom = math.exp(c) if c < 700 else math.inf
    else:
        denom = math.sinh(c) * math.cosh(g) / math.sinh(g) + math.cosh(c)
    return ch.beta * J_c / denom


def critical_spin_current(m: MagnetParams) -> float:
    """Critical spin current 4*q*alpha*Delta*k_B*T / (hbar*eta)."""
    delta = m.thermal_stability
    if delta < MIN_THERMAL_STABILITY * (1 - 1e-9):
        raise ThermalStabilityError(f"thermal stability {delta:.3g} < {MIN_THERMAL_STABILITY:g}")
    if m.alpha == 0:
        warnings.warn("alpha = 0 gives a zero critical current", UnphysicalParameterWarning, stacklevel=2)
    return 4 * Q_E * m.alpha * delta * K_B * m.T / (HBAR * m.eta)


def magnet_switching_delay(m: MagnetParams, I_s: float, cap: float = DEFAULT_DELAY_CAP) -> float:
    """Angular-momentum-transfer switching time q*N_spins / (I_s - I_c)."""
    i_c = critical_spin_current(m)
    if not I_s > i_c:
        raise NoSwitchingError(f"spin current {I_s:.4g} A does not exceed I_c = {i_c:.4g} A")
    t = Q_E * m.n_spins / (I_s - i_c)
    if t > cap:
        raise SwitchingDelayCapError(f"switching delay {t:.3g} s exceeds cap {cap:g} s")
    return t


def asl_gate_metrics(dev: DeviceParams, kind: GateKind = GateKind.MAJ3) -> GateMetrics:
    """All-spin logic gate. Drive is held for the whole switching time."""
    _require_class(dev, DeviceClass.ASL)
    ch = dev.channel
    i_drive = dev.I_on
    j_s = asl_spin_current_density(ch, i_drive / ch.cross_section)
    t = magnet_switching_delay(dev.magnet, j_s * ch.cross_section)
    return GateMetrics(kind=GateKind(kind), t_gate=t, E_dyn=dev.V_dd * i_drive * t, P_leak=0.0, A_gate=dev.A_dev)


# --- CSL ---------------------------------------------------------------------

CSL_SPIN_GAIN = {
    CslVariant.Base: 1.0,
    CslVariant.CopperCollector: 2.0,
    CslVariant.Complementary: 1.0,
    CslVariant.YIG: 3.0,
}
CSL_MAGNET_SCALE = {
    CslVariant.Base: 3.0,
    CslVariant.CopperCollector: 3.0,
    CslVariant.Complementary: 1.0,
    CslVariant.YIG: 1.0,
}
CSL_AREA_FACTOR = {
    CslVariant.Base: 1.0,
    CslVariant.CopperCollector: 1.0,
    CslVariant.Complementary: 1.5,
    CslVariant.YIG: 1.0,
}


def _csl_setup(dev, variant):
    _require_class(dev, DeviceClass.CSL)
    if dev.magnet is None or dev.channel is None:
        raise ClassMismatchError(f"device {dev.name!r}: CSL needs magnet and channel")
    variant = CslVariant(variant or dev.variant)
    magnet = dev.magnet.scaled(CSL_MAGNET_SCALE[variant])
    return variant, magnet


def csl_spin_current(dev: DeviceParams, variant=None, i_drive: Optional[float] = None) -> float:
    """Effective spin current into the write magnet for a given drive current."""
    variant, _ = _csl_setup(dev, variant)
    if i_drive is None:
        i_drive = dev.I_on * dev.extra("drive_derating", 1.0)
    return CSL_SPIN_GAIN[variant] * dev.extra("spin_hall_gain") * i_drive


def csl_gate_metrics(
    dev: DeviceParams, variant: Optional[CslVariant] = None, i_drive: Optional[float] = None
) -> GateMetrics:
    variant, magnet = _csl_setup(dev, variant)
    if i_drive is None:
        i_drive = dev.I_on * dev.extra("drive_derating", 1.0)
    t = magnet_switching_delay(magnet, csl_spin_current(dev, variant, i_drive))
    e = i_drive**2 * dev.extra("r_write") * t + dev.extra("c_clock", 0.0) * dev.V_dd**2
    return GateMetrics(
        kind=GateKind.MAJ3, t_gate=t, E_dyn=e, P_leak=0.0, A_gate=dev.A_dev * CSL_AREA_FACTOR[variant]
    )


def csl_drive_for_delay(dev: DeviceParams, variant: CslVariant, t_target: float) -> float:
    """Drive current that makes ``variant`` switch in exactly ``t_target``."""
    variant, magnet = _csl_setup(dev, variant)
    i_s = critical_spin_current(magnet) + Q_E * magnet.n_spins / t_target
    return i_s / (CSL_SPIN_GAIN[variant] * dev.extra("spin_hall_gain"))


# --- mLogic ------------------------------------------------------------------


def domain_wall_velocity(mobility: float, J: float, J_c0: float) -> float:
    if not J > J_c0:
        raise NoMotionError(f"current density {J:.4g} A/m^2 does not exceed J_c0 = {J_c0:.4g}")
    return mobility * (J - J_c0)


def mlogic_gate_metrics(
    dev: DeviceParams, kind: GateKind = GateKind.NAND2, convention: GateConvention = DEFAULT_CONVENTION
) -> GateMetrics:
    _require_class(dev, DeviceClass.mLogic)
    kind = GateKind(kind)
    i_write = dev.I_on
    J = i_write / dev.extra("track_cross_section")
    v = domain_wall_velocity(dev.extra("dw_mobility"), J, dev.extra("j_c0"))
    t = dev.extra("track_length") / v
    e = i_write**2 * dev.extra("write_resistance") * t + dev.extra("c_out", 0.0) * dev.V_dd**2
    return GateMetrics(kind=kind, t_gate=t, E_dyn=e, P_leak=0.0, A_gate=convention.n_dev.get(kind, 1) * dev.A_dev)


# --- magnetoelectric devices ------------------------------------------------

DEFAULT_ME_SWITCH_TIME = 0.5e-9  # s


def memtj_output_swing(dev: DeviceParams, variant: Optional[MemtjVariant] = None) -> float:
    """Worst-case output swing of the matched MTJ divider.

    Three paralleled Standard dividers resolve a 2-vs-1 majority with a third
    of the single-divider swing; the compact device keeps the full swing.
    """
    _require_class(dev, DeviceClass.MEMTJ)
    variant = MemtjVariant(variant or dev.variant)
    tmr = dev.extra("tmr")
    full = dev.V_dd * tmr / (2 + tmr)
    return full if variant is MemtjVariant.CompactSingleDomain else full / 3


def memtj_gate_metrics(
    dev: DeviceParams, variant: Optional[MemtjVariant] = None, kind: GateKind = GateKind.MAJ3
) -> GateMetrics:
    _require_class(dev, DeviceClass.MEMTJ)
    variant = MemtjVariant(variant or dev.variant)
    kind = GateKind(kind)
    c_me, v_me = dev.extra("c_me"), dev.extra("v_me")
    r_p, tmr = dev.extra("r_mtj"), dev.extra("tmr")
    t_me = dev.extra("t_me_switch", DEFAULT_ME_SWITCH_TIME)
    c_load = dev.extra("c_read_load", c_me)

    r_ap = r_p * (1 + tmr)
    r_out = r_p * r_ap / (r_p + r_ap)
    t_read = math.log(2) * r_out * c_load
    v_swing = dev.V_dd * tmr / (2 + tmr)
    e_read = c_load * v_swing**2 + dev.V_dd**2 / (r_p + r_ap) * t_read

    n_cells = 3 if kind is GateKind.MAJ3 and variant is not MemtjVariant.CompactSingleDomain else 1
    n_events, n_phases = n_cells, 1
    if variant is MemtjVariant.Preset:
        n_events += 1
        n_phases += 1
    return GateMetrics(
        kind=kind,
        t_gate=n_phases * t_me + t_read,
        E_dyn=n_events * c_me * v_me**2 + e_read,
        P_leak=0.0,
        A_gate=n_cells * dev.A_dev,
    )


def me_device_metrics(dev: DeviceParams, kind: DeviceClass) -> GateMetrics:
    """Spin-wave device or CoMET gate."""
    kind = DeviceClass(kind)
    if kind not in (DeviceClass.SWD, DeviceClass.CoMET):
        raise ClassMismatchError(f"me_device_metrics handles SWD and CoMET, not {kind.value}")
    _require_class(dev, kind)
    if kind is DeviceClass.SWD:
        t = dev.extra("t_metastable_settle") + dev.extra("t_wave_prop", 0.0)
        e_clock_share = dev.extra("e_clock") / dev.extra("n_cells_per_clock_driver")
        e = dev.extra("c_me") * dev.extra("v_me") ** 2 + e_clock_share
    else:
        v_dw = dev.extra("v_dw")
        t = dev.extra("t_nucleation") + (0.0 if math.isinf(v_dw) else dev.extra("l_prop") / v_dw)
        e = dev.extra("e_transistor") + dev.extra("e_joule") + dev.extra("p_leak_inv") * t
    return GateMetrics(kind=GateKind.MAJ3, t_gate=t, E_dyn=e, P_leak=0.0, A_gate=dev.A_dev)


# --- dispatch ----------------------------------------------------------------


def gate_metrics(dev: DeviceParams, kind: GateKind, convention: GateConvention = DEFAULT_CONVENTION) -> GateMetrics:
    """Metrics for ``kind`` built in ``dev``'s technology (unloaded, fanout 1).

    Spintronic majority devices implement INV and MAJ3 with the same element;
    the returned record carries the requested kind.
    """
    kind = GateKind(kind)
    cls = dev.device_class
    if cls in (DeviceClass.ChargeFET, DeviceClass.Ferroelectric):
        return fet_gate_metrics(dev, kind, convention=convention)
    if cls is DeviceClass.NDR:
        return ndr_gate_metrics(dev, 0.0, kind, convention=convention)
    if cls is DeviceClass.mLogic:
        return mlogic_gate_metrics(dev, kind, convention)
    if cls is DeviceClass.MEMTJ:
        return memtj_gate_metrics(dev, kind=kind)
    if cls is DeviceClass.ASL:
        g = asl_gate_metrics(dev)
    elif cls is DeviceClass.CSL:
        g = csl_gate_metrics(dev)
    else:
        g = me_device_metrics(dev, cls)
    return replace(g, kind=kind)


def intrinsic_delay(dev: DeviceParams) -> float:
    """Switching time of a minimum device charging its own input capacitance."""
    if dev.device_class.is_charge:
        return dev.C_gate * dev.V_dd / dev.I_on + dev.t_p
    return gate_metrics(dev, GateKind.INV).t_gate
