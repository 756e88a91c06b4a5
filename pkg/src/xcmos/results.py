"""Result rows plus CSV and SVG emitters."""

from __future__ import annotations

import csv
import io
import math
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union
from xml.sax.saxutils import escape

from .errors import InvalidParameterError, UnknownMetricError

BENCHMARKS = ("alu", "alu_pipelined", "wire", "span", "throughput", "cnn")
FIXED_COLUMNS = ("benchmark", "device", "note")
_HEADER_RE = re.compile(r"^(?P<name>[^\[]+?) \[(?P<unit>[^\]]*)\]$")


@dataclass
class Row:
    device: str
    benchmark: str
    metrics: Dict[str, float] = field(default_factory=dict)
    units: Dict[str, str] = field(default_factory=dict)
    note: str = ""

    def __post_init__(self):
        if self.benchmark not in BENCHMARKS:
            raise InvalidParameterError(f"unknown benchmark {self.benchmark!r}")
        for name, value in self.metrics.items():
            if name not in self.units:
                raise InvalidParameterError(f"metric {name!r} has no unit")
            if not math.isfinite(value):
                raise InvalidParameterError(f"{self.device}/{self.benchmark}: metric {name!r} is not finite")


@dataclass
class ResultSet:
    rows: List[Row] = field(default_factory=list)

    def add(self, row: Row) -> None:
        self.rows.append(row)

    def extend(self, rows: Iterable[Row]) -> None:
        self.rows.extend(rows)

    def __len__(self):
        return len(self.rows)

    def sorted_rows(self) -> List[Row]:
        # stable: sweep points keep their generation order
        return sorted(self.rows, key=lambda r: (r.benchmark, r.device))

    def select(self, benchmark: Optional[str] = None) -> "ResultSet":
        return ResultSet([r for r in self.rows if benchmark is None or r.benchmark == benchmark])

    def metric_units(self) -> Dict[str, str]:
        units: Dict[str, str] = {}
        for r in self.sorted_rows():
            for name in r.metrics:
                unit = r.units[name]
                if units.setdefault(name, unit) != unit:
                    raise InvalidParameterError(f"metric {name!r} has conflicting units {units[name]!r}, {unit!r}")
        return units


def _fmt(v: float) -> str:
    return format(v, ".17g")


def to_csv(rs: ResultSet) -> str:
    units = rs.metric_units()
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(list(FIXED_COLUMNS) + [f"{name} [{unit}]" for name, unit in units.items()])
    for r in rs.sorted_rows():
        writer.writerow(
            [r.benchmark, r.device, r.note] + [_fmt(r.metrics[n]) if n in r.metrics else "" for n in units]
        )
    return buf.getvalue()


def emit_csv(rs: ResultSet, path: Union[str, Path]) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(to_csv(rs))


def from_csv(text: str) -> ResultSet:
    reader = csv.reader(io.StringIO(text, newline=""))
    header = next(reader)
    if tuple(header[:3]) != FIXED_COLUMNS:
        raise InvalidParameterError(f"not a result CSV: header starts {header[:3]}")
    cols: List[Tuple[str, str]] = []
    for h in header[3:]:
        m = _HEADER_RE.match(h)
        if not m:
            raise InvalidParameterError(f"metric column without unit: {h!r}")
        cols.append((m["name"], m["unit"]))
    rs = ResultSet()
    for rec in reader:
        metrics = {n: float(v) for (n, _), v in zip(cols, rec[3:]) if v != ""}
        units = {n: u for n, u in cols if n in metrics}
        rs.add(Row(device=rec[1], benchmark=rec[0], metrics=metrics, units=units, note=rec[2]))
    return rs


def read_csv(path: Union[str, Path]) -> ResultSet:
    with open(path, newline="") as fh:
        return from_csv(fh.read())


# --- SVG ---------------------------------------------------------------------

WIDTH, HEIGHT = 720, 540
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 90, 30, 40, 70


def _decades(values: Sequence[float]) -> Tuple[int, int]:
    lo = math.floor(math.log10(min(values)))
    hi = math.ceil(math.log10(max(values)))
    return lo, hi if hi > lo else lo + 1


def _star(cx, cy, r):
    pts = []
    for i in range(10):
        rad = r if i % 2 == 0 else r * 0.45
        a = math.pi / 2 + i * math.pi / 5
        pts.append(f"{cx + rad * math.cos(a):.2f},{cy - rad * math.sin(a):.2f}")
    return " ".join(pts)


def scatter_svg(
    rs: ResultSet, x: str, y: str, title: Optional[str] = None, benchmark: Optional[str] = None
) -> str:
    """Log-log scatter with one labelled marker per row.

    Rows lacking either metric are left out; non-positive values cannot be
    placed on log axes and are skipped too.
    """
    pool = rs.select(benchmark)
    units = pool.metric_units()
    if pool.rows and (x not in units or y not in units):
        bad = [m for m in (x, y) if m not in units]
        raise UnknownMetricError(f"unknown metric(s) {bad}; available: {sorted(units)}")
    pts = [
        (r.device, r.metrics[x], r.metrics[y])
        for r in pool.sorted_rows()
        if x in r.metrics and y in r.metrics and r.metrics[x] > 0 and r.metrics[y] > 0
    ]
    x_unit, y_unit = units.get(x, ""), units.get(y, "")
    if pts:
        xlo, xhi = _decades([p[1] for p in pts])
        ylo, yhi = _decades([p[2] for p in pts])
    else:
        xlo, xhi, ylo, yhi = 0, 1, 0, 1
    pw = WIDTH - MARGIN_L - MARGIN_R
    ph = HEIGHT - MARGIN_T - MARGIN_B

    def px(v):
        return MARGIN_L + (math.log10(v) - xlo) / (xhi - xlo) * pw

    def py(v):
        return MARGIN_T + ph - (math.log10(v) - ylo) / (yhi - ylo) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="11">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<rect x="{MARGIN_L}" y="{MARGIN_T}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
    ]
    if title:
        out.append(f'<text x="{WIDTH / 2:.1f}" y="22" text-anchor="middle" font-size="14">{escape(title)}</text>')
    for d in range(xlo, xhi + 1):
        xx = px(10.0**d)
        out.append(f'<line x1="{xx:.2f}" y1="{MARGIN_T}" x2="{xx:.2f}" y2="{MARGIN_T + ph}" stroke="#ddd"/>')
        out.append(f'<text x="{xx:.2f}" y="{MARGIN_T + ph + 16}" text-anchor="middle">1e{d}</text>')
    for d in range(ylo, yhi + 1):
        yy = py(10.0**d)
        out.append(f'<line x1="{MARGIN_L}" y1="{yy:.2f}" x2="{MARGIN_L + pw}" y2="{yy:.2f}" stroke="#ddd"/>')
        out.append(f'<text x="{MARGIN_L - 6}" y="{yy + 4:.2f}" text-anchor="end">1e{d}</text>')
    out.append(
        f'<text x="{MARGIN_L + pw / 2:.1f}" y="{HEIGHT - 20}" text-anchor="middle" font-size="13">'
        f"{escape(x)} [{escape(x_unit)}]</text>"
    )
    out.append(
        f'<text x="20" y="{MARGIN_T + ph / 2:.1f}" text-anchor="middle" font-size="13" '
        f'transform="rotate(-90 20 {MARGIN_T + ph / 2:.1f})">{escape(y)} [{escape(y_unit)}]</text>'
    )
    # preferred corner: low delay, low energy
    out.append(
        f'<polygon points="{_star(px(10.0**xlo), py(10.0**ylo), 9)}" fill="red">'
        "<title>preferred corner</title></polygon>"
    )
    for name, xv, yv in pts:
        cx, cy = px(xv), py(yv)
        out.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="4" fill="steelblue"/>')
        out.append(f'<text x="{cx + 6:.2f}" y="{cy - 5:.2f}">{escape(name)}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_svg_scatter(
    rs: ResultSet,
    x: str,
    y: str,
    path: Union[str, Path],
    title: Optional[str] = None,
    benchmark: Optional[str] = None,
) -> None:
    Path(path).write_text(scatter_svg(rs, x, y, title, benchmark))
