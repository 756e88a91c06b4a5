"""Small hand-built devices with round numbers."""

from __future__ import annotations

from scipy.constants import k as K_B

from xcmos.devices import DeviceParams, MagnetParams, SpinChannelParams


def magnet(delta=40.0, alpha=0.01, eta=1.0, M_s=1e6, dims=(60e-9, 30e-9, 2e-9), T=300.0) -> MagnetParams:
    """Magnet whose barrier is exactly ``delta`` kT."""
    vol = dims[0] * dims[1] * dims[2]
    return MagnetParams(M_s=M_s, K_u=delta * K_B * T / vol, alpha=alpha, eta=eta, dims=dims, T=T)


def channel(beta=0.8, l_sf=100e-9, l_c=100e-9, l_g=100e-9) -> SpinChannelParams:
    return SpinChannelParams(beta=beta, l_sf=l_sf, l_c=l_c, l_g=l_g, rho=2e-8, cross_section=1e-16)


def fet(name="fet", cls="ChargeFET", **kw) -> DeviceParams:
    base = dict(V_dd=0.7, I_on=1e-5, I_off=1e-9, C_gate=1e-16, A_dev=1e-15, t_p=0.0)
    base.update(kw)
    return DeviceParams(name=name, device_class=cls, **base)


def ndr(**kw) -> DeviceParams:
    base = dict(V_dd=0.4, I_on=1e-5, I_off=1e-6, C_gate=1e-16, A_dev=1e-15)
    base.update(kw)
    return DeviceParams(name="ndr", device_class="NDR", **base)


def asl(I_on=1e-3, **kw) -> DeviceParams:
    return DeviceParams(
        name="asl", device_class="ASL", V_dd=0.02, I_on=I_on, I_off=0.0, C_gate=1e-17, A_dev=1e-14,
        magnet=kw.pop("magnet", magnet()), channel=kw.pop("channel", channel()), **kw,
    )


def csl(variant="Base", I_on=1e-3, mag=None, **extras) -> DeviceParams:
    ex = {"spin_hall_gain": 1.0, "r_write": 500.0, "c_clock": 1e-16}
    ex.update(extras)
    return DeviceParams(
        name=f"csl-{variant}", device_class="CSL", V_dd=0.1, I_on=I_on, I_off=0.0, C_gate=1e-17, A_dev=1e-14,
        variant=variant, magnet=mag or magnet(), channel=channel(), extras=ex,
    )


def mlogic(j_c0=1e11, mobility=1e-9, track_length=100e-9, cross=1e-16, j_ratio=2.0, **extras) -> DeviceParams:
    ex = {
        "dw_mobility": mobility, "j_c0": j_c0, "track_length": track_length,
        "track_cross_section": cross, "write_resistance": 1000.0, "c_out": 1e-16,
    }
    ex.update(extras)
    return DeviceParams(
        name="mlogic", device_class="mLogic", V_dd=0.1, I_on=j_ratio * j_c0 * cross, I_off=0.0,
        C_gate=1e-17, A_dev=1e-14, magnet=magnet(), extras=ex,
    )


def memtj(variant="Standard", **extras) -> DeviceParams:
    ex = {"c_me": 1e-15, "v_me": 0.1, "r_mtj": 1e4, "tmr": 1.5}
    ex.update(extras)
    return DeviceParams(
        name=f"memtj-{variant}", device_class="MEMTJ", V_dd=0.1, I_on=1e-5, I_off=0.0, C_gate=1e-15,
        A_dev=1e-14, variant=variant, magnet=magnet(), extras=ex,
    )


def swd(**extras) -> DeviceParams:
    ex = {"t_metastable_settle": 1e-9, "t_wave_prop": 1e-10, "c_me": 1e-15, "v_me": 0.1,
          "e_clock": 1e-15, "n_cells_per_clock_driver": 100.0}
    ex.update(extras)
    return DeviceParams(name="swd", device_class="SWD", V_dd=0.1, I_on=1e-5, I_off=0.0, C_gate=1e-15,
                        A_dev=1e-14, magnet=magnet(), extras=ex)


def comet(**extras) -> DeviceParams:
    ex = {"t_nucleation": 1e-10, "l_prop": 1e-7, "v_dw": 100.0, "e_transistor": 1e-17,
          "e_joule": 1e-17, "p_leak_inv": 1e-7}
    ex.update(extras)
    return DeviceParams(name="comet", device_class="CoMET", V_dd=0.1, I_on=1e-5, I_off=0.0, C_gate=1e-15,
                        A_dev=1e-14, magnet=magnet(), extras=ex)
