"""Acceptance criteria, one test per criterion."""

from __future__ import annotations

import math
import time
from dataclasses import replace
from fractions import Fraction

import numpy as np
import pytest

from oracles import fd_spin_current, ndr_clocked_events, ndr_unclocked_events
from xcmos import cli
from xcmos.circuits import (
    NDR_FA,
    CircuitStyle,
    GateProvider,
    alu32_metrics,
    native_style,
    pipeline_transform,
    pipelined_style,
    throughput_density,
)
from xcmos.cnn import CnnConfig, run_recall
from xcmos.devices import (
    SPIN_CLASSES,
    CslVariant,
    DeviceClass,
    SpinChannelParams,
    asl_spin_current_density,
    csl_gate_metrics,
)
from xcmos.interconnect import (
    RepeaterParams,
    WireParams,
    delay_per_length,
    device_span,
    repeated_wire_delay,
    repeater_oracle_minimize,
)
from xcmos.library import load_default_library
from xcmos.results import from_csv, read_csv, to_csv
from xcmos.suite import SuiteOptions, run_suite


@pytest.fixture(scope="module")
def lib():
    return load_default_library()


def _loguniform(rng, lo, hi, size=None):
    return np.exp(rng.uniform(np.log(lo), np.log(hi), size))


def test_spin_current_matches_diffusion_solver(criterion):
    criterion(1, "ASL spin current vs finite-difference diffusion solver (1%, limits 0.1%)")
    start = time.perf_counter()
    rng = np.random.default_rng(1)
    beta, J_c = 0.4, 1e10
    worst = 0.0
    for _ in range(50):
        l_c, l_g = _loguniform(rng, 20e-9, 1e-6, 2)
        l_sf = _loguniform(rng, 50e-9, 2e-6)
        ch = SpinChannelParams(beta=beta, l_sf=l_sf, l_c=l_c, l_g=l_g, rho=1e-8, cross_section=1e-16)
        ref = fd_spin_current(beta, J_c, l_sf, l_c, l_g)
        worst = max(worst, abs(asl_spin_current_density(ch, J_c) / ref - 1))
    assert worst < 0.01

    # short channel: everything injected arrives
    ch = SpinChannelParams(beta=beta, l_sf=500e-9, l_c=1e-12, l_g=200e-9, rho=1e-8, cross_section=1e-16)
    assert asl_spin_current_density(ch, J_c) == pytest.approx(beta * J_c, rel=1e-3)
    # no spin relaxation: resistive current divider between the two branches
    l_c, l_g = 300e-9, 150e-9
    ch = SpinChannelParams(beta=beta, l_sf=1e3, l_c=l_c, l_g=l_g, rho=1e-8, cross_section=1e-16)
    assert asl_spin_current_density(ch, J_c) == pytest.approx(beta * J_c / (1 + l_c / l_g), rel=1e-3)
    assert time.perf_counter() - start < 10


def test_repeated_wire_matches_elmore_optimizer(criterion):
    criterion(2, "repeated-wire closed form vs brute-force Elmore optimization (5%)")
    start = time.perf_counter()
    rng = np.random.default_rng(2)
    worst = 0.0
    for _ in range(100):
        r = RepeaterParams(
            R0=_loguniform(rng, 1e3, 1e6), C0=_loguniform(rng, 1e-17, 1e-15), V_dd=rng.uniform(0.1, 1.0), t_p=0.0
        )
        w = WireParams(r_w=_loguniform(rng, 1e6, 1e9), c_w=_loguniform(rng, 5e-11, 5e-10))
        # lengths from one optimal segment up to 1e4 segments
        l_seg = math.sqrt(0.7 * r.R0 * r.C0 / (0.4 * w.r_w * w.c_w))
        l = l_seg * 10 ** rng.uniform(0, 4)
        _, _, t_ref = repeater_oracle_minimize(w, r, l)
        worst = max(worst, abs(repeated_wire_delay(w, r, l) / t_ref - 1))
    assert worst < 0.05

    r, w = RepeaterParams(R0=1e4, C0=1e-16, V_dd=0.7), WireParams(r_w=1e8, c_w=2e-10)
    coeff = delay_per_length(w, r) / math.sqrt(r.R0 * r.C0 * w.r_w * w.c_w)
    assert coeff == pytest.approx(2.458, rel=1e-3)
    assert time.perf_counter() - start < 30


def test_ndr_clocking_divides_dynamic_energy_by_word_length(criterion, lib):
    criterion(3, "NdrClocked dynamic energy is exactly 1/32 of the unclocked cycle count")
    bits = NDR_FA.bits
    assert bits == 32
    for dev in lib.devices:
        if dev.device_class is not DeviceClass.NDR:
            continue
        gates = GateProvider(dev)
        engine = alu32_metrics(gates, CircuitStyle.NdrClocked).E_dynamic
        unclocked = ndr_unclocked_events(NDR_FA, bits)
        reference = sum(n * gates(k).E_dyn for k, n in unclocked.items())
        assert Fraction(reference) == 32 * Fraction(engine)
        clocked = ndr_clocked_events(NDR_FA, bits)
        assert all(32 * clocked[k] == unclocked[k] for k in unclocked)


def test_throughput_law_and_pipelining(criterion, lib):
    criterion(4, "theta_capped = min(theta, p_cap/E_op); pipelining never hurts, no gain when power-limited")
    p_cap = 10.0 * 1e4  # 10 W/cm^2 in W/m^2
    for dev in lib.devices:
        base = alu32_metrics(dev, pipelined_style(dev.device_class))
        t0 = throughput_density(base, p_cap)
        assert t0.theta_capped == min(t0.theta_unconstrained, p_cap / base.E_op)
        deep = pipeline_transform(base)
        t1 = throughput_density(deep, p_cap)
        assert t1.theta_capped == min(t1.theta_unconstrained, p_cap / deep.E_op)
        assert t1.theta_capped >= t0.theta_capped
        if t0.limited_by == "Power":
            assert t1.theta_capped == t0.theta_capped
        # the native (possibly static) circuit obeys the same law
        nat = alu32_metrics(dev, native_style(dev.device_class))
        tn = throughput_density(nat, p_cap)
        assert tn.theta_capped == min(tn.theta_unconstrained, p_cap / nat.E_op)


def test_polarization_delay_widens_span(criterion, lib):
    criterion(5, "span of control strictly increases as t_p goes 0 -> 10 ps")
    fe = [d for d in lib.devices if d.device_class is DeviceClass.Ferroelectric]
    assert fe
    for dev in fe:
        spans = [device_span(replace(dev, t_p=float(tp)), lib.wire) for tp in np.linspace(0, 10e-12, 11)]
        n = [s.n_gates for s in spans]
        l_max = [s.l_max for s in spans]
        assert all(b > a for a, b in zip(n, n[1:])), n
        assert all(b > a for a, b in zip(l_max, l_max[1:]))


def test_cnn_recall_accuracy(criterion):
    criterion(6, "CNN recall: 16x16, 4 patterns, r=3, 4-bit, 10% noise, 100 trials -> accuracy >= 0.90 in < 60 s")
    cfg = CnnConfig()
    assert (cfg.rows, cfg.cols, cfg.neighborhood_radius, cfg.weight_bits) == (16, 16, 3, 4)
    assert (cfg.noise_fraction, cfg.n_trials, cfg.n_neighbors) == (0.10, 100, 28)
    start = time.perf_counter()
    stats = run_recall(cfg, seed=0)
    elapsed = time.perf_counter() - start
    assert stats.pixel_accuracy >= 0.90
    assert elapsed < 60


def test_default_library_orderings(criterion, lib):
    criterion(7, "default-library regressions: ME energy, spin slowness, CSL ordering, spin CNN energy")
    rs = run_suite(lib, "all", SuiteOptions())
    alu = {r.device: r.metrics for r in rs.select("alu").rows}
    cls = {d.name: d.device_class for d in lib.devices}

    # (a) voltage-controlled magnetics beat current-driven spin logic on energy
    low = [alu[n]["E_op"] for n in ("MEMTJ", "SWD", "CoMET")]
    high = [alu[n]["E_op"] for n in ("ASL", "CSL", "mLogic")]
    assert max(low) < min(high)

    # (b) every spin device is slower than every charge device
    spin_t = [m["t_op"] for n, m in alu.items() if cls[n] in SPIN_CLASSES]
    charge_t = [m["t_op"] for n, m in alu.items() if cls[n].is_charge]
    assert spin_t and charge_t
    assert min(spin_t) > max(charge_t)

    # (c) CSL variants
    t = {v: csl_gate_metrics(lib.device(n)).t_gate for v, n in
         ((CslVariant.YIG, "CSL-YIG"), (CslVariant.CopperCollector, "CSL-CC"), (CslVariant.Base, "CSL"))}
    assert t[CslVariant.YIG] < t[CslVariant.CopperCollector] < t[CslVariant.Base]
    assert alu["CSL-YIG"]["t_op"] < alu["CSL-CC"]["t_op"] < alu["CSL"]["t_op"]

    # (d) some spin CNN undercuts the analog CMOS-like CNN
    cnn = {r.device: (r.note, r.metrics["E_assoc"]) for r in rs.select("cnn").rows}
    analog = [e for note, e in cnn.values() if note.startswith("Analog:CMOS")]
    spin = [e for note, e in cnn.values() if note.split(":")[0] in ("SpinDiffusion", "SpinHall", "DomainWall")]
    assert analog and spin
    assert min(spin) < min(analog)


def test_cli_determinism_and_round_trip(criterion, tmp_path):
    criterion(8, "identical CLI runs give identical CSV/SVG bytes; CSV round-trips losslessly")
    outs = []
    for run in ("a", "b"):
        csv_path, svg_path = tmp_path / f"{run}.csv", tmp_path / f"{run}.svg"
        assert cli.main(["all", "--csv", str(csv_path), "--svg", str(svg_path)]) == 0
        outs.append((csv_path.read_bytes(), svg_path.read_bytes()))
    assert outs[0] == outs[1]

    text = outs[0][0].decode()
    rs = read_csv(tmp_path / "a.csv")
    assert to_csv(rs) == text
    again = from_csv(to_csv(rs))
    for a, b in zip(rs.sorted_rows(), again.sorted_rows()):
        assert (a.device, a.benchmark, a.note, a.units) == (b.device, b.benchmark, b.note, b.units)
        assert all(a.metrics[k] == b.metrics[k] for k in a.metrics)
        assert a.metrics.keys() == b.metrics.keys()
