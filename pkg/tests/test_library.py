from __future__ import annotations

import copy
import json

import pytest

from xcmos.errors import LibraryParseError, LibraryValidationError
from xcmos.library import (
    LIBRARY_ENV,
    default_library_path,
    library_from_dict,
    load_default_library,
    load_device_library,
)


def _tagged(**values):
    out = {}
    for k, v in values.items():
        out[k] = v
        out[f"{k}_provenance"] = "placeholder"
    return out


FET = {"name": "fet", "class": "ChargeFET", **_tagged(V_dd=0.7, I_on=1e-5, I_off=1e-9, C_gate=1e-16, A_dev=1e-15)}


def _lib(*devices, **top):
    return {"devices": [copy.deepcopy(d) for d in devices], **top}


def test_shipped_library_loads():
    lib = load_default_library()
    assert len(lib.devices) >= 15
    assert len(set(lib.names)) == len(lib.names)
    assert set(lib.provenance.values()) == {"paper", "placeholder"}
    assert lib.wire is not None and lib.repeater is not None
    assert lib.cnn_models


def test_shipped_paper_anchors():
    lib = load_default_library()
    prov = lib.provenance
    assert lib.device("NCFET").t_p == 10e-12
    assert prov["device 'NCFET'.t_p"] == "paper"
    heusler = lib.device("ASL-HA").magnet
    assert heusler.K_u == 2.6e6
    assert prov["device 'ASL-HA'.magnet.K_u"] == "paper"
    assert {lib.device(n).magnet.M_s for n in ("ASL-HA", "ASL-HAS")} == {4e5, 1e5}
    for name in ("BisFET", "ITFET"):
        d = lib.device(name)
        assert d.I_on / d.I_off == pytest.approx(10)


def test_minimal_library():
    lib = library_from_dict(_lib(FET))
    assert lib.names == ("fet",)
    assert lib.provenance["device 'fet'.V_dd"] == "placeholder"


def test_empty_library_is_fine():
    assert library_from_dict({}).devices == ()


@pytest.mark.parametrize(
    "mutate, match",
    [
        (lambda d: d.update(colour="red"), "unknown field"),
        (lambda d: d.pop("I_on_provenance"), "I_on"),
        (lambda d: d.update(I_on_provenance="folklore"), "I_on"),
        (lambda d: d.pop("C_gate"), "C_gate"),
        (lambda d: d.update(V_dd="high"), "V_dd"),
        (lambda d: d.update(I_off=1.0), "I_on > I_off"),
        (lambda d: d.update({"class": "Quantum"}), "fet"),
    ],
)
def test_validation_names_device_and_field(mutate, match):
    dev = copy.deepcopy(FET)
    mutate(dev)
    with pytest.raises(LibraryValidationError, match=match) as exc:
        library_from_dict(_lib(dev))
    assert "fet" in str(exc.value)


def test_low_barrier_magnet_names_device():
    lib = json.loads(default_library_path().read_text())
    asl = next(d for d in lib["devices"] if d["name"] == "ASL-HA")
    asl["magnet"]["K_u"] = asl["magnet"]["K_u"] * 30 / asl_delta(asl)
    with pytest.raises(LibraryValidationError, match="ASL-HA"):
        library_from_dict(lib)


def asl_delta(entry):
    from scipy.constants import k

    m = entry["magnet"]
    l, w, t = m["dims"]
    return m["K_u"] * l * w * t / (k * m["T"])


def test_duplicate_names_rejected():
    with pytest.raises(LibraryValidationError, match="duplicate"):
        library_from_dict(_lib(FET, FET))


def test_unknown_top_level_key():
    with pytest.raises(LibraryValidationError):
        library_from_dict({"devices": [], "extra": 1})


def test_cnn_model_must_reference_device():
    data = _lib(FET, cnn_models=[{"name": "m", "kind": "DigitalCMOSLike", "device": "nope", "params": {}}])
    with pytest.raises(LibraryValidationError, match="nope"):
        library_from_dict(data)


def test_empty_file_is_parse_error(tmp_path):
    p = tmp_path / "empty.json"
    p.write_text("")
    with pytest.raises(LibraryParseError):
        load_device_library(p)


def test_parse_error_reports_position(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{\n  "devices": [\n    {"name": }\n  ]\n}\n')
    with pytest.raises(LibraryParseError, match=r"bad\.json:3:\d+"):
        load_device_library(p)


def test_missing_file_is_parse_error(tmp_path):
    with pytest.raises(LibraryParseError):
        load_device_library(tmp_path / "absent.json")


def test_env_override(tmp_path, monkeypatch):
    p = tmp_path / "lib.json"
    p.write_text(json.dumps(_lib(FET)))
    monkeypatch.setenv(LIBRARY_ENV, str(p))
    assert default_library_path() == p
    assert load_default_library().names == ("fet",)
