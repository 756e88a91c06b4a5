"""Regenerate the shipped device library JSON.

Numbers tagged "paper" are the explicitly stated anchors (Heusler K_u and M_s,
NDR on/off ratio of 10, 10 ps polarization delay). Everything else is a
representative placeholder chosen to land in the published magnitude bands.

    python3 scripts/make_default_library.py src/xcmos/data/default_library.json
"""

from __future__ import annotations

import argparse
import json

P, X = "paper", "placeholder"


def num(d, prov=None):
    """Attach a provenance tag to every numeric field."""
    out = {}
    prov = prov or {}
    for k, v in d.items():
        out[k] = v
        out[k + "_provenance"] = prov.get(k, X)
    return out


devices = []


def fet(name, cls, V, Ion, Ioff, C, A, tp=0.0, prov=None, note=None):
    d = {"name": name, "class": cls}
    if note: d["note"] = note
    d.update(num({"V_dd": V, "I_on": Ion, "I_off": Ioff, "C_gate": C, "A_dev": A, "t_p": tp}, prov))
    devices.append(d)

A0 = 5e-15
fet("CMOS-HP", "ChargeFET", 0.73, 3.0e-5, 3.0e-9, 1.0e-16, A0)
fet("CMOS-LV", "ChargeFET", 0.30, 4.0e-6, 4.0e-11, 1.0e-16, A0)
fet("HomJTFET", "ChargeFET", 0.20, 1.0e-6, 1.0e-12, 8.0e-17, A0)
fet("HetJTFET", "ChargeFET", 0.40, 8.0e-6, 8.0e-12, 8.0e-17, A0)
fet("ThinTFET", "ChargeFET", 0.20, 6.0e-6, 6.0e-12, 5.0e-17, A0)
fet("GaNTFET", "ChargeFET", 0.40, 1.2e-5, 1.2e-11, 1.0e-16, A0)
fet("TMDTFET", "ChargeFET", 0.30, 5.0e-6, 5.0e-12, 6.0e-17, A0)
fet("GPNJ", "ChargeFET", 0.40, 2.0e-5, 2.0e-6, 5.0e-16, 2.0e-14)
fet("vdWFET", "ChargeFET", 0.50, 1.5e-5, 1.5e-10, 1.0e-16, A0)
fet("NCFET", "Ferroelectric", 0.30, 1.0e-5, 1.0e-11, 1.2e-16, A0, 10e-12, {"t_p": P})
fet("FEFET", "Ferroelectric", 0.50, 1.0e-5, 1.0e-10, 1.5e-16, A0, 10e-12)
fet("MITFET", "Ferroelectric", 0.40, 1.2e-5, 1.2e-10, 1.2e-16, A0, 10e-12)
fet("BisFET", "NDR", 0.025, 1.0e-6, 1.0e-7, 3.0e-16, A0, 0.0, {"I_off": P}, "I_on/I_off = 10")
fet("ITFET", "NDR", 0.10, 2.0e-6, 2.0e-7, 2.0e-16, A0, 0.0, {"I_off": P}, "I_on/I_off = 10")


def spin(name, cls, V, Ion, C, A, magnet, channel=None, extras=None, variant=None, mprov=None, eprov=None, note=None):
    d = {"name": name, "class": cls}
    if variant: d["variant"] = variant
    if note: d["note"] = note
    d.update(num({"V_dd": V, "I_on": Ion, "I_off": 0.0, "C_gate": C, "A_dev": A}))
    m = dict(magnet); kind = m.pop("anisotropy_kind")
    d["magnet"] = {"anisotropy_kind": kind, **num(m, mprov)}
    if channel: d["channel"] = num(channel)
    if extras: d["extras"] = num(extras, eprov)
    devices.append(d)

inplane = {"M_s": 1.0e6, "K_u": 6.0e5, "alpha": 0.01, "eta": 0.8, "dims": [60e-9, 30e-9, 2e-9], "T": 300.0, "anisotropy_kind": "InPlane"}
cu = {"beta": 0.4, "l_sf": 300e-9, "l_c": 100e-9, "l_g": 100e-9, "rho": 2.0e-8, "cross_section": 1.0e-15}
spin("ASL", "ASL", 0.02, 1.5e-3, 1e-16, 2e-14, inplane, cu)
ha = {"M_s": 4.0e5, "K_u": 2.6e6, "alpha": 0.002, "eta": 0.8, "dims": [10e-9, 10e-9, 1.5e-9], "T": 300.0, "anisotropy_kind": "PMA"}
spin("ASL-HA", "ASL", 0.02, 5.0e-5, 1e-16, 1e-14, ha, cu, mprov={"M_s": P, "K_u": P})
has = dict(ha, M_s=1.0e5)
spin("ASL-HAS", "ASL", 0.02, 3.8e-5, 1e-16, 1e-14, has, cu, mprov={"M_s": P, "K_u": P})

csl_m = {"M_s": 1.0e6, "K_u": 8.0e4, "alpha": 0.01, "eta": 0.8, "dims": [40e-9, 30e-9, 2e-9], "T": 300.0, "anisotropy_kind": "InPlane"}
csl_x = {"spin_hall_gain": 0.6, "r_write": 500.0, "c_clock": 1e-16, "drive_derating": 1.0}
for name, var in [("CSL", "Base"), ("CSL-CC", "CopperCollector"), ("CSL-New", "Complementary"), ("CSL-YIG", "YIG")]:
    spin(name, "CSL", 0.1, 1.0e-4, 1e-16, 2e-14, csl_m, cu, csl_x, var)

ml_m = {"M_s": 6.0e5, "K_u": 3.0e5, "alpha": 0.02, "eta": 0.7, "dims": [100e-9, 20e-9, 2e-9], "T": 300.0, "anisotropy_kind": "PMA"}
spin("mLogic", "mLogic", 0.1, 2.0e-4, 1e-16, 1e-14, ml_m, None,
     {"dw_mobility": 1.0e-9, "j_c0": 1.0e11, "track_length": 200e-9, "write_resistance": 1000.0,
      "track_cross_section": 1.0e-15, "c_out": 1e-16})

me_m = {"M_s": 1.0e6, "K_u": 8.0e5, "alpha": 0.01, "eta": 0.8, "dims": [20e-9, 20e-9, 1e-9], "T": 300.0, "anisotropy_kind": "PMA"}
me_x = {"c_me": 1.0e-15, "v_me": 0.1, "r_mtj": 1.0e5, "tmr": 2.0, "t_me_switch": 5e-10, "c_read_load": 1.0e-16}
for name, var in [("MEMTJ", "Standard"), ("MEMTJs", "CompactSingleDomain"), ("MEMTJ-Preset", "Preset")]:
    spin(name, "MEMTJ", 0.1, 1e-6, 1e-15, 1e-14, me_m, None, me_x, var)
spin("SWD", "SWD", 0.1, 1e-6, 1e-15, 1e-14, me_m, None,
     {"t_metastable_settle": 5e-10, "t_wave_prop": 5e-11, "c_me": 1.0e-15, "v_me": 0.1, "e_clock": 1e-15, "n_cells_per_clock_driver": 100.0})
spin("CoMET", "CoMET", 0.1, 1e-6, 1e-15, 1e-14, me_m, None,
     {"t_nucleation": 2e-10, "l_prop": 100e-9, "v_dw": 500.0, "e_transistor": 1e-16, "e_joule": 5e-17, "p_leak_inv": 1e-7})

lib = {
    "description": "Default beyond-CMOS device library. Values tagged 'paper' come from explicitly stated numbers; everything else is a representative placeholder.",
    "devices": devices,
    "interconnect": {**num({"r_w": 1.0e8, "c_w": 2.0e-10}),
                     "repeater": num({"R0": 1.0e4, "C0": 1.0e-16, "V_dd": 0.7, "t_p": 0.0})},
    "cnn_models": [
        {"name": "CMOS-HP-analog", "kind": "Analog", "device": "CMOS-HP", "params": num({"i_bias": 1e-7, "c_state": 1e-14, "n_slope": 1.5})},
        {"name": "HetJTFET-analog", "kind": "Analog", "device": "HetJTFET", "params": num({"i_bias": 1e-7, "c_state": 1e-14, "n_slope": 0.6})},
        {"name": "CMOS-HP-digital", "kind": "DigitalCMOSLike", "device": "CMOS-HP", "params": num({"g_mac": 200.0, "d_mul": 10.0})},
        {"name": "CMOS-LV-digital", "kind": "DigitalCMOSLike", "device": "CMOS-LV", "params": num({"g_mac": 200.0, "d_mul": 10.0})},
        {"name": "ASL-HA-cnn", "kind": "SpinDiffusion", "device": "ASL-HA", "params": num({"i_syn": 2.0e-4, "r_ch": 10.0, "e_overhead": 1e-17})},
        {"name": "CSL-YIG-cnn", "kind": "SpinHall", "device": "CSL-YIG", "params": num({"i_syn": 1.0e-4, "r_ch": 200.0, "e_overhead": 1e-17})},
        {"name": "DW-cnn", "kind": "DomainWall", "device": "mLogic", "params": num({"i_syn": 2.0e-5, "r_ch": 100.0, "e_overhead": 1e-17, "track_cross_section": 1.0e-16})},
    ],
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("out")
    args = ap.parse_args()
    with open(args.out, "w") as fh:
        json.dump(lib, fh, indent=1)


if __name__ == "__main__":
    main()
