"""Cellular neural network associative memory benchmark.

Functional part: one-shot Hebbian template design over a disc neighbourhood,
uniform weight quantization, and forward-Euler integration of the Chua-Yang
cell equation ``dx/dt = -x + sum(A * y) + z`` with the saturating output
``y = (|x + 1| - |x - 1|) / 2``. Noise is injected in the initial state.

Cost part: analog, digital and spintronic energy/delay models evaluated on
the settle statistics of the functional simulation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.constants import elementary_charge as Q_E
from scipy.constants import k as K_B

from .devices import (
    DeviceClass,
    DeviceParams,
    GateKind,
    asl_spin_current_density,
    csl_gate_metrics,
    domain_wall_velocity,
    fet_gate_metrics,
    magnet_switching_delay,
)
from .errors import ClassMismatchError, InvalidParameterError

ACCURACY_TARGET = 0.90


@dataclass(frozen=True)
class CnnConfig:
    rows: int = 16
    cols: int = 16
    neighborhood_radius: int = 3
    weight_bits: int = 4
    noise_fraction: float = 0.10
    settle_tolerance: float = 1e-6
    dt: float = 0.1
    max_steps: int = 2000
    stable_steps: int = 10
    self_boost: float = 2.0
    n_trials: int = 100
    quantize: bool = True

    def __post_init__(self):
        if self.rows * self.cols < 16:
            raise InvalidParameterError("cnn: grid needs at least 16 cells")
        if not 1 <= self.weight_bits <= 8:
            raise InvalidParameterError("cnn: weight_bits must lie in [1, 8]")
        if not 0 <= self.noise_fraction <= 0.5:
            raise InvalidParameterError("cnn: noise_fraction must lie in [0, 0.5]")
        if self.neighborhood_radius < 1:
            raise InvalidParameterError("cnn: neighborhood_radius must be >= 1")
        if not (0 < self.dt <= 1 and self.max_steps >= 1 and self.n_trials >= 1):
            raise InvalidParameterError("cnn: need 0 < dt <= 1, max_steps >= 1, n_trials >= 1")

    @property
    def n_cells(self) -> int:
        return self.rows * self.cols

    @property
    def offsets(self) -> Tuple[Tuple[int, int], ...]:
        return neighborhood_offsets(self.neighborhood_radius)

    @property
    def n_neighbors(self) -> int:
        return len(self.offsets)


def neighborhood_offsets(radius: int) -> Tuple[Tuple[int, int], ...]:
    """Disc neighbourhood, centre excluded. Radius 3 gives 28 neighbours."""
    r = int(radius)
    return tuple(
        (dy, dx)
        for dy in range(-r, r + 1)
        for dx in range(-r, r + 1)
        if (dy, dx) != (0, 0) and dy * dy + dx * dx <= r * r
    )


# --- patterns ----------------------------------------------------------------


def parse_pattern(text: str) -> np.ndarray:
    rows = [line.strip() for line in text.splitlines() if line.strip()]
    if not rows:
        raise InvalidParameterError("pattern: empty")
    if len({len(r) for r in rows}) != 1:
        raise InvalidParameterError("pattern: ragged rows")
    bad = set("".join(rows)) - {"#", "."}
    if bad:
        raise InvalidParameterError(f"pattern: unexpected characters {sorted(bad)}")
    return np.array([[1 if c == "#" else -1 for c in r] for r in rows], dtype=np.int8)


def format_pattern(p: np.ndarray) -> str:
    return "\n".join("".join("#" if v > 0 else "." for v in row) for row in p) + "\n"


def load_pattern(path: Union[str, Path]) -> np.ndarray:
    return parse_pattern(Path(path).read_text())


def default_patterns() -> List[np.ndarray]:
    """The four shipped 16x16 patterns."""
    pkg = resources.files("xcmos.data.patterns")
    names = sorted(p.name for p in pkg.iterdir() if p.name.endswith(".txt"))
    return [parse_pattern(pkg.joinpath(n).read_text()) for n in names]


def random_patterns(n: int, rows: int, cols: int, seed: int) -> List[np.ndarray]:
    rng = np.random.default_rng(seed)
    return [rng.choice(np.array([-1, 1], dtype=np.int8), size=(rows, cols)) for _ in range(n)]


def _check_patterns(patterns, cfg):
    if len(patterns) == 0:
        raise InvalidParameterError("need at least one pattern")
    out = []
    for p in patterns:
        p = np.asarray(p)
        if p.shape != (cfg.rows, cfg.cols):
            raise InvalidParameterError(f"pattern shape {p.shape} != grid {(cfg.rows, cfg.cols)}")
        if not np.all(np.abs(p) == 1):
            raise InvalidParameterError("patterns must be bipolar (+1/-1)")
        out.append(p.astype(np.float64))
    return out


# --- weights -----------------------------------------------------------------


@dataclass(frozen=True)
class TemplateWeights:
    """Space-variant feedback template.

    ``A[k]`` holds, for every cell, the weight from the neighbour at
    ``offsets[k]``; ``self_weight`` is the (boosted) centre element.
    """

    offsets: Tuple[Tuple[int, int], ...]
    A: np.ndarray
    self_weight: np.ndarray
    z: float = 0.0
    weight_bits: Optional[int] = None


def quantize(w: np.ndarray, bits: int, w_max: float = 1.0) -> np.ndarray:
    """Mid-rise uniform quantizer with 2**bits levels symmetric about zero."""
    levels = 2**bits
    step = 2 * w_max / levels
    idx = np.clip(np.floor((np.asarray(w, dtype=np.float64) + w_max) / step), 0, levels - 1)
    return -w_max + (idx + 0.5) * step


def _shift(x: np.ndarray, dy: int, dx: int) -> np.ndarray:
    """out[i, j] = x[i + dy, j + dx], zero outside the grid."""
    rows, cols = x.shape[-2:]
    out = np.zeros_like(x)
    ys, yd = (slice(dy, rows), slice(0, rows - dy)) if dy >= 0 else (slice(0, rows + dy), slice(-dy, rows))
    xs, xd = (slice(dx, cols), slice(0, cols - dx)) if dx >= 0 else (slice(0, cols + dx), slice(-dx, cols))
    out[..., yd, xd] = x[..., ys, xs]
    return out


def hebbian_raw(patterns: Sequence[np.ndarray], cfg: CnnConfig) -> np.ndarray:
    """Unquantized outer-product weights, shape (n_neighbors, rows, cols)."""
    ps = _check_patterns(patterns, cfg)
    A = np.zeros((cfg.n_neighbors, cfg.rows, cfg.cols))
    for p in ps:
        for k, (dy, dx) in enumerate(cfg.offsets):
            A[k] += p * _shift(p, dy, dx)
    return A / len(ps)


def hebbian_weights(patterns: Sequence[np.ndarray], cfg: CnnConfig) -> TemplateWeights:
    A = hebbian_raw(patterns, cfg)
    centre = np.ones((cfg.rows, cfg.cols))  # x_ij * x_ij averaged over patterns
    bits = None
    if cfg.quantize:
        bits = cfg.weight_bits
        A, centre = quantize(A, bits), quantize(centre, bits)
    # neighbours that fall outside the grid carry no weight
    mask = np.stack([_shift(np.ones((cfg.rows, cfg.cols)), dy, dx) for dy, dx in cfg.offsets])
    return TemplateWeights(
        offsets=cfg.offsets,
        A=A * mask,
        self_weight=centre + cfg.self_boost,
        z=0.0,
        weight_bits=bits,
    )


# --- dynamics ----------------------------------------------------------------


def output(x: np.ndarray) -> np.ndarray:
    return 0.5 * (np.abs(x + 1) - np.abs(x - 1))


def feedback(weights: TemplateWeights, y: np.ndarray) -> np.ndarray:
    acc = weights.self_weight * y + weights.z
    for k, (dy, dx) in enumerate(weights.offsets):
        acc += weights.A[k] * _shift(y, dy, dx)
    return acc


def euler_step(weights: TemplateWeights, x: np.ndarray, dt: float) -> np.ndarray:
    return x + dt * (-x + feedback(weights, output(x)))


@dataclass(frozen=True)
class RecallStats:
    pixel_accuracy: float
    trials_recalled: float
    settle_steps: float
    settle_time_tau: float
    n_trials: int
    n_unconverged: int


def settle(weights: TemplateWeights, x0: np.ndarray, cfg: CnnConfig) -> Tuple[np.ndarray, int, bool]:
    """Integrate until every cell is saturated and outputs are stable.

    Returns ``(final_output, steps, converged)``; ``steps`` counts Euler steps
    up to and including the stability window.
    """
    x = np.array(x0, dtype=np.float64)
    y = output(x)
    stable = 0
    for step in range(1, cfg.max_steps + 1):
        x = euler_step(weights, x, cfg.dt)
        y_new = output(x)
        saturated = np.all(np.abs(x) >= 1 - cfg.settle_tolerance)
        unchanged = np.max(np.abs(y_new - y)) <= cfg.settle_tolerance
        y = y_new
        stable = stable + 1 if (saturated and unchanged) else 0
        if stable >= cfg.stable_steps:
            return y, step, True
    return y, cfg.max_steps, False


def corrupt(pattern: np.ndarray, fraction: float, rng: np.random.Generator) -> np.ndarray:
    """Flip ``round(fraction * N)`` distinct pixels chosen uniformly."""
    flat = np.array(pattern, dtype=np.float64).ravel()
    n_flip = int(round(fraction * flat.size))
    idx = rng.choice(flat.size, size=n_flip, replace=False)
    flat[idx] *= -1
    return flat.reshape(np.shape(pattern))


def simulate_recall(
    weights: TemplateWeights, stored: Sequence[np.ndarray], cfg: CnnConfig, seed: int = 0
) -> RecallStats:
    """Recall trials from noisy copies of the stored patterns.

    Trial ``t`` starts from pattern ``t % len(stored)`` and draws its noise
    from its own child of ``SeedSequence(seed)``, so any trial can be replayed
    in isolation.
    """
    ps = _check_patterns(stored, cfg)
    children = np.random.SeedSequence(seed).spawn(cfg.n_trials)
    acc, recalled, steps, unconverged = 0.0, 0, 0, 0
    for t, ss in enumerate(children):
        target = ps[t % len(ps)]
        x0 = corrupt(target, cfg.noise_fraction, np.random.default_rng(ss))
        y, n, ok = settle(weights, x0, cfg)
        match = np.mean(np.sign(y) == target)
        acc += match
        recalled += match == 1.0
        steps += n
        unconverged += not ok
    n_trials = cfg.n_trials
    mean_steps = steps / n_trials
    return RecallStats(
        pixel_accuracy=float(acc / n_trials),
        trials_recalled=float(recalled / n_trials),
        settle_steps=mean_steps,
        settle_time_tau=mean_steps * cfg.dt,
        n_trials=n_trials,
        n_unconverged=unconverged,
    )


# --- cost models -------------------------------------------------------------


class CnnKind(str, Enum):
    Analog = "Analog"
    DigitalCMOSLike = "DigitalCMOSLike"
    SpinDiffusion = "SpinDiffusion"
    SpinHall = "SpinHall"
    DomainWall = "DomainWall"


KIND_CLASSES = {
    CnnKind.Analog: {DeviceClass.ChargeFET, DeviceClass.Ferroelectric},
    CnnKind.DigitalCMOSLike: {DeviceClass.ChargeFET, DeviceClass.Ferroelectric},
    CnnKind.SpinDiffusion: {DeviceClass.ASL},
    CnnKind.SpinHall: {DeviceClass.CSL},
    CnnKind.DomainWall: {DeviceClass.mLogic},
}

REQUIRED_PARAMS = {
    CnnKind.Analog: ("i_bias", "c_state", "n_slope"),
    CnnKind.DigitalCMOSLike: (),
    CnnKind.SpinDiffusion: ("i_syn", "r_ch", "e_overhead"),
    CnnKind.SpinHall: ("i_syn", "r_ch", "e_overhead"),
    CnnKind.DomainWall: ("i_syn", "r_ch", "e_overhead"),
}

DIGITAL_DEFAULTS = {"g_mac": 200.0, "d_mul": 10.0}


@dataclass(frozen=True)
class CnnCostModel:
    name: str
    kind: CnnKind
    device: DeviceParams
    params: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        kind = CnnKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if self.device.device_class not in KIND_CLASSES[kind]:
            raise ClassMismatchError(
                f"cnn model {self.name!r}: {kind.value} cannot use {self.device.device_class.value} device"
            )
        missing = [k for k in REQUIRED_PARAMS[kind] if k not in self.params]
        if missing:
            raise InvalidParameterError(f"cnn model {self.name!r}: missing params {missing}")

    def param(self, key: str) -> float:
        if key in self.params:
            return float(self.params[key])
        if key in DIGITAL_DEFAULTS:
            return DIGITAL_DEFAULTS[key]
        raise InvalidParameterError(f"cnn model {self.name!r}: missing param {key!r}")


def spin_integration_time(cost: CnnCostModel) -> float:
    """Time for one synaptic integration step: a full magnet reversal or a
    domain wall transit of the free layer."""
    dev, i_syn = cost.device, cost.param("i_syn")
    if cost.kind is CnnKind.SpinDiffusion:
        ch = dev.channel
        i_s = asl_spin_current_density(ch, i_syn / ch.cross_section) * ch.cross_section
        return magnet_switching_delay(dev.magnet, i_s)
    if cost.kind is CnnKind.SpinHall:
        return csl_gate_metrics(dev, i_drive=i_syn).t_gate
    # the neuron's free layer may differ from the logic device's track
    track = {k: cost.params.get(k, dev.extras.get(k)) for k in ("dw_mobility", "j_c0", "track_length", "track_cross_section")}
    missing = [k for k, v in track.items() if v is None]
    if missing:
        raise InvalidParameterError(f"cnn model {cost.name!r}: missing domain wall params {missing}")
    v = domain_wall_velocity(track["dw_mobility"], i_syn / track["track_cross_section"], track["j_c0"])
    return track["track_length"] / v


def cnn_energy_delay(cost: CnnCostModel, cfg: CnnConfig, stats: RecallStats) -> Tuple[float, float]:
    """Energy and delay of one association, ``(E_assoc, t_assoc)``."""
    n_cells, n_nb = cfg.n_cells, cfg.n_neighbors
    steps = stats.settle_steps
    dev = cost.device
    if cost.kind is CnnKind.Analog:
        v_t = K_B * 300.0 / Q_E
        g_m = cost.param("i_bias") / (cost.param("n_slope") * v_t)
        tau = cost.param("c_state") / g_m
        t = stats.settle_time_tau * tau
        return n_cells * (1 + n_nb) * cost.param("i_bias") * dev.V_dd * t, t
    if cost.kind is CnnKind.DigitalCMOSLike:
        nand = fet_gate_metrics(dev, GateKind.NAND2)
        e_mac = cost.param("g_mac") * nand.E_dyn
        t_step = (cost.param("d_mul") + 4 * math.ceil(math.log2(n_nb + 1))) * nand.t_gate
        return steps * n_cells * (n_nb + 1) * e_mac, steps * t_step
    t_int = spin_integration_time(cost)
    e_step = cost.param("i_syn") ** 2 * cost.param("r_ch") * t_int + cost.param("e_overhead")
    return steps * n_cells * e_step, steps * t_int


@dataclass(frozen=True)
class CnnResult:
    model: str
    kind: CnnKind
    pixel_accuracy: float
    trials_recalled: float
    settle_steps: float
    E_assoc: float
    t_assoc: float

    @property
    def accuracy_pass(self) -> bool:
        return self.pixel_accuracy >= ACCURACY_TARGET


def run_recall(cfg: CnnConfig, patterns: Optional[Sequence[np.ndarray]] = None, seed: int = 0) -> RecallStats:
    patterns = default_patterns() if patterns is None else patterns
    return simulate_recall(hebbian_weights(patterns, cfg), patterns, cfg, seed)


def association_benchmark(
    cost: CnnCostModel,
    cfg: CnnConfig = CnnConfig(),
    patterns: Optional[Sequence[np.ndarray]] = None,
    seed: int = 0,
    stats: Optional[RecallStats] = None,
) -> CnnResult:
    """Recall simulation plus cost model for one technology.

    ``stats`` may be passed to reuse one functional simulation across cost
    models; the dynamics do not depend on the technology.
    """
    if stats is None:
        stats = run_recall(cfg, patterns, seed)
    e, t = cnn_energy_delay(cost, cfg, stats)
    return CnnResult(
        model=cost.name,
        kind=cost.kind,
        pixel_accuracy=stats.pixel_accuracy,
        trials_recalled=stats.trials_recalled,
        settle_steps=stats.settle_steps,
        E_assoc=e,
        t_assoc=t,
    )
