"""JSON device library: loading and eager validation.

Layout::

    {
      "description": "...",
      "devices": [ {"name": ..., "class": ..., "V_dd": 0.7, "V_dd_provenance": "paper", ...} ],
      "interconnect": {"r_w": ..., "c_w": ..., "repeater": {"R0": ..., ...}},
      "cnn_models": [ {"name": ..., "kind": ..., "device": ..., "params": {...}} ]
    }

Every numeric field has a sibling ``<field>_provenance`` string, either
``"paper"`` or ``"placeholder"``. Unknown keys are rejected.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Dict, Iterable, Optional, Tuple, Union

from .cnn import CnnCostModel
from .devices import DeviceParams, MagnetParams, SpinChannelParams
from .errors import LibraryParseError, LibraryValidationError, XcmosError
from .interconnect import RepeaterParams, WireParams

PROVENANCE = ("paper", "placeholder")
LIBRARY_ENV = "XCMOS_LIB"

DEVICE_NUMERIC = ("V_dd", "I_on", "I_off", "C_gate", "A_dev", "t_p")
DEVICE_TEXT = ("name", "class", "variant", "note")
MAGNET_NUMERIC = ("M_s", "K_u", "alpha", "eta", "dims", "T")
MAGNET_TEXT = ("anisotropy_kind",)
CHANNEL_NUMERIC = ("beta", "l_sf", "l_c", "l_g", "rho", "cross_section")
WIRE_NUMERIC = ("r_w", "c_w")
REPEATER_NUMERIC = ("R0", "C0", "V_dd", "t_p")


@dataclass(frozen=True)
class DeviceLibrary:
    devices: Tuple[DeviceParams, ...] = ()
    wire: Optional[WireParams] = None
    repeater: Optional[RepeaterParams] = None
    cnn_models: Tuple[CnnCostModel, ...] = ()
    provenance: Dict[str, str] = field(default_factory=dict)

    def device(self, name: str) -> DeviceParams:
        for d in self.devices:
            if d.name == name:
                return d
        raise KeyError(name)

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(d.name for d in self.devices)


def _numeric_section(obj: dict, numeric: Iterable[str], text: Iterable[str], where: str, prov: dict) -> dict:
    """Validate keys and provenance of one JSON object, return plain values."""
    if not isinstance(obj, dict):
        raise LibraryValidationError(f"{where}: expected an object")
    numeric, text = tuple(numeric), tuple(text)
    allowed = set(text) | set(numeric) | {f"{k}_provenance" for k in numeric}
    unknown = sorted(set(obj) - allowed)
    if unknown:
        raise LibraryValidationError(f"{where}: unknown field(s) {unknown}")
    out = {}
    for key, value in obj.items():
        if key.endswith("_provenance"):
            continue
        if key in numeric:
            _check_number(value, f"{where}.{key}")
            tag = obj.get(f"{key}_provenance")
            if tag not in PROVENANCE:
                raise LibraryValidationError(
                    f"{where}.{key}: '{key}_provenance' must be one of {PROVENANCE}, got {tag!r}"
                )
            prov[f"{where}.{key}"] = tag
        out[key] = value
    for key in numeric:
        if f"{key}_provenance" in obj and key not in obj:
            raise LibraryValidationError(f"{where}: provenance given for missing field {key!r}")
    return out


def _check_number(value, where):
    values = value if isinstance(value, list) else [value]
    for v in values:
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise LibraryValidationError(f"{where}: expected a number, got {v!r}")


def _extras(obj, where, prov):
    if not isinstance(obj, dict):
        raise LibraryValidationError(f"{where}: expected an object")
    keys = [k for k in obj if not k.endswith("_provenance")]
    orphans = [k for k in obj if k.endswith("_provenance") and k[: -len("_provenance")] not in obj]
    if orphans:
        raise LibraryValidationError(f"{where}: provenance without value: {orphans}")
    return _numeric_section(obj, keys, (), where, prov)


def _build(cls, where, **kwargs):
    try:
        return cls(**kwargs)
    except (XcmosError, TypeError, ValueError) as exc:
        raise LibraryValidationError(f"{where}: {exc}") from exc


def _device(obj: dict, prov: dict) -> DeviceParams:
    name = obj.get("name") if isinstance(obj, dict) else None
    if not isinstance(name, str) or not name:
        raise LibraryValidationError("device without a name")
    where = f"device {name!r}"
    nested = {k: obj[k] for k in ("magnet", "channel", "extras") if k in obj}
    flat = _numeric_section({k: v for k, v in obj.items() if k not in nested}, DEVICE_NUMERIC, DEVICE_TEXT, where, prov)
    for key in ("V_dd", "I_on", "I_off", "C_gate", "A_dev"):
        if key not in flat:
            raise LibraryValidationError(f"{where}: missing field {key!r}")
    if "class" not in flat:
        raise LibraryValidationError(f"{where}: missing field 'class'")
    magnet = channel = None
    if "magnet" in nested:
        m = _numeric_section(nested["magnet"], MAGNET_NUMERIC, MAGNET_TEXT, f"{where}.magnet", prov)
        if not isinstance(m.get("dims"), list) or len(m["dims"]) != 3:
            raise LibraryValidationError(f"{where}.magnet.dims: expected [length, width, thickness]")
        m["dims"] = tuple(m["dims"])
        magnet = _build(MagnetParams, f"{where}.magnet", **m)
    if "channel" in nested:
        c = _numeric_section(nested["channel"], CHANNEL_NUMERIC, (), f"{where}.channel", prov)
        channel = _build(SpinChannelParams, f"{where}.channel", **c)
    extras = _extras(nested.get("extras", {}), f"{where}.extras", prov)
    flat.pop("note", None)
    return _build(
        DeviceParams,
        where,
        name=flat.pop("name"),
        device_class=flat.pop("class"),
        magnet=magnet,
        channel=channel,
        extras=extras,
        **flat,
    )


def library_from_dict(data: dict) -> DeviceLibrary:
    if not isinstance(data, dict):
        raise LibraryValidationError("library: top level must be an object")
    unknown = sorted(set(data) - {"description", "devices", "interconnect", "cnn_models"})
    if unknown:
        raise LibraryValidationError(f"library: unknown top-level field(s) {unknown}")
    prov: Dict[str, str] = {}
    devices = tuple(_device(d, prov) for d in data.get("devices", []))
    names = [d.name for d in devices]
    dupes = sorted({n for n in names if names.count(n) > 1})
    if dupes:
        raise LibraryValidationError(f"library: duplicate device name(s) {dupes}")

    wire = repeater = None
    if "interconnect" in data:
        ic = dict(data["interconnect"]) if isinstance(data["interconnect"], dict) else None
        if ic is None:
            raise LibraryValidationError("interconnect: expected an object")
        rep = ic.pop("repeater", None)
        w = _numeric_section(ic, WIRE_NUMERIC, (), "interconnect", prov)
        wire = _build(WireParams, "interconnect", **w)
        if rep is not None:
            r = _numeric_section(rep, REPEATER_NUMERIC, (), "interconnect.repeater", prov)
            repeater = _build(RepeaterParams, "interconnect.repeater", **r)

    by_name = {d.name: d for d in devices}
    models = []
    for m in data.get("cnn_models", []):
        mname = m.get("name") if isinstance(m, dict) else None
        where = f"cnn model {mname!r}"
        if not isinstance(m, dict) or set(m) - {"name", "kind", "device", "params"}:
            raise LibraryValidationError(f"{where}: unknown or malformed fields")
        if m.get("device") not in by_name:
            raise LibraryValidationError(f"{where}: unknown device {m.get('device')!r}")
        params = _extras(m.get("params", {}), f"{where}.params", prov)
        models.append(_build(CnnCostModel, where, name=mname, kind=m.get("kind"), device=by_name[m["device"]], params=params))
    return DeviceLibrary(devices=devices, wire=wire, repeater=repeater, cnn_models=tuple(models), provenance=prov)


def load_device_library(path: Union[str, Path]) -> DeviceLibrary:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise LibraryParseError(f"{path}: cannot read ({exc.strerror})") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LibraryParseError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    return library_from_dict(data)


def default_library_path() -> Path:
    env = os.environ.get(LIBRARY_ENV)
    if env:
        return Path(env)
    return Path(str(resources.files("xcmos.data").joinpath("default_library.json")))


def load_default_library() -> DeviceLibrary:
    return load_device_library(default_library_path())
