"""Repeated interconnect delay/energy and span of control.

The closed forms assume optimally sized and spaced repeaters.
:func:`repeater_oracle_minimize` solves the same Elmore problem numerically
(integer repeater count, continuous size) and is used to cross-check them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import minimize_scalar

from .devices import DeviceParams, GateKind, gate_metrics, intrinsic_delay
from .errors import InvalidParameterError

CLOCK_TO_INTRINSIC = 300.0

# Elmore coefficients: lumped driver (0.7) and distributed wire (0.4).
K_DRIVER = 0.7
K_WIRE = 0.4


@dataclass(frozen=True)
class WireParams:
    r_w: float  # ohm/m
    c_w: float  # F/m

    def __post_init__(self):
        if not (self.r_w > 0 and self.c_w > 0):
            raise InvalidParameterError("wire: r_w and c_w must be > 0")


@dataclass(frozen=True)
class RepeaterParams:
    R0: float
    C0: float
    V_dd: float
    t_p: float = 0.0

    def __post_init__(self):
        if not (self.R0 > 0 and self.C0 > 0 and self.V_dd > 0):
            raise InvalidParameterError("repeater: R0, C0 and V_dd must be > 0")
        if not self.t_p >= 0:
            raise InvalidParameterError("repeater: t_p must be >= 0")


@dataclass(frozen=True)
class SpanResult:
    T_clk: float
    l_max: float
    n_gates: int


def delay_per_length(w: WireParams, r: RepeaterParams) -> float:
    """Slope of the optimally repeated wire delay, s/m."""
    rc = w.r_w * w.c_w
    return 1.4 * math.sqrt(r.R0 * r.C0 * rc) + 2 * math.sqrt((K_DRIVER * r.R0 * r.C0 + r.t_p) * K_WIRE * rc)


def repeated_wire_delay(w: WireParams, r: RepeaterParams, l: float) -> float:
    if l < 0:
        raise InvalidParameterError("wire length must be >= 0")
    return delay_per_length(w, r) * l


def repeated_wire_energy(w: WireParams, r: RepeaterParams, l: float) -> float:
    if l < 0:
        raise InvalidParameterError("wire length must be >= 0")
    return 0.5 * w.c_w * l * (1 + repeater_energy_share(r)) * r.V_dd**2


def repeater_energy_share(r: RepeaterParams) -> float:
    """Repeater input charge relative to wire charge; vanishes as t_p grows."""
    r0c0 = r.R0 * r.C0
    return math.sqrt(K_WIRE * r0c0 / (K_DRIVER * r0c0 + r.t_p))


def elmore_repeated_delay(w: WireParams, r: RepeaterParams, l: float, n: int, s: float) -> float:
    """Elmore delay of ``n`` equal segments driven by repeaters of size ``s``."""
    h = l / n
    stage = K_DRIVER * (r.R0 / s) * (s * r.C0 + w.c_w * h) + w.r_w * h * (K_WIRE * w.c_w * h + K_DRIVER * s * r.C0)
    return n * stage


def _best_size(w, r, l, n):
    # size enters as a/s + b*s; search in log space, bracketing generously
    res = minimize_scalar(
        lambda u: elmore_repeated_delay(w, r, l, n, math.exp(u)),
        bounds=(-60.0, 60.0),
        method="bounded",
        options={"xatol": 1e-10},
    )
    return math.exp(res.x), res.fun


def repeater_oracle_minimize(w: WireParams, r: RepeaterParams, l: float):
    """Brute-force repeater optimization: integer count, continuous size.

    Returns ``(n_opt, s_opt, t_opt)``. Delay is convex in ``n`` after the
    size is optimized, so an integer ternary search followed by a local scan
    finds the global minimum.
    """
    if not l > 0:
        raise InvalidParameterError("wire length must be > 0")

    cache = {}

    def cost(n):
        if n not in cache:
            cache[n] = _best_size(w, r, l, n)
        return cache[n][1]

    lo, hi = 1, 2
    while cost(hi) < cost(hi - 1):
        lo, hi = hi, hi * 2
    lo = max(1, lo // 2)
    while hi - lo > 2:
        m1 = lo + (hi - lo) // 3
        m2 = hi - (hi - lo) // 3
        if cost(m1) <= cost(m2):
            hi = m2
        else:
            lo = m1
    n_opt = min(range(max(1, lo - 1), hi + 2), key=cost)
    s_opt, t_opt = cache[n_opt]
    return n_opt, float(s_opt), float(t_opt)


def span_of_control(t_int: float, w: WireParams, r: RepeaterParams, A_gate: float) -> SpanResult:
    """Gates reachable by an optimally repeated wire within one clock period.

    The clock period is ``300 * t_int``; reach is the Euclidean disc covered
    by the whole period spent on the wire.
    """
    if t_int < 0:
        raise InvalidParameterError("t_int must be >= 0")
    if not A_gate > 0:
        raise InvalidParameterError("A_gate must be > 0")
    T_clk = CLOCK_TO_INTRINSIC * t_int
    l_max = T_clk / delay_per_length(w, r)
    return SpanResult(T_clk=T_clk, l_max=l_max, n_gates=int(math.floor(math.pi * l_max**2 / A_gate)))


def repeater_from_device(dev: DeviceParams) -> RepeaterParams:
    """Minimum repeater built in ``dev``'s technology.

    Spintronic repeaters carry their magnet switching time in ``t_p``: like the
    ferroelectric polarization delay it is a fixed per-stage latency on top of
    the electrical RC of the driver.
    """
    t_p = dev.t_p if dev.device_class.is_charge else intrinsic_delay(dev)
    return RepeaterParams(R0=dev.V_dd / dev.I_on, C0=dev.C_gate, V_dd=dev.V_dd, t_p=t_p)


def device_span(dev: DeviceParams, w: WireParams) -> SpanResult:
    """Span of control measured in the device's own NAND2 footprints."""
    return span_of_control(intrinsic_delay(dev), w, repeater_from_device(dev), gate_metrics(dev, GateKind.NAND2).A_gate)
