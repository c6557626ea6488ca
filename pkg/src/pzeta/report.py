"""CSV and plot-script emission for scan tables."""

from __future__ import annotations

import csv
import io
import math
from pathlib import Path

from .analysis import Axis, ScanTable

CSV_HEADER = ("t_or_s", "method", "re", "im", "abs_diff_vs_reference")


def _fmt(v: float) -> str:
    return "" if v is None or math.isnan(v) else format(v, ".15g")


def scan_to_csv(table: ScanTable) -> str:
    """Render a scan as CSV text, one line per (sample, method).

    ``abs_diff_vs_reference`` is measured against the Moebius column when
    present (else the first method) and uses real parts on the cut.
    """
    ref = table.reference
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\r\n")
    writer.writerow(CSV_HEADER)
    for row in table.rows:
        rv = row.values.get(ref)
        for m in table.methods:
            v = row.values.get(m)
            if v is None:
                writer.writerow([_fmt(row.abscissa), m.value, "", "", ""])
                continue
            if rv is None:
                diff = math.nan
            elif row.on_cut:
                diff = abs(v.real - rv.real)
            else:
                diff = abs(v - rv)
            writer.writerow([_fmt(row.abscissa), m.value, _fmt(v.real), _fmt(v.imag), _fmt(diff)])
    return buf.getvalue()


def write_scan_csv(table: ScanTable, path: str | Path) -> Path:
    path = Path(path)
    path.write_bytes(scan_to_csv(table).encode("utf-8"))
    return path


_PLOT_TEMPLATE = '''\
"""Plot {csv_name} ({title}). Run from the directory holding the CSV."""
import csv
from collections import defaultdict

import matplotlib.pyplot as plt

series = defaultdict(lambda: ([], []))
with open("{csv_name}", newline="") as fh:
    for rec in csv.DictReader(fh):
        if rec["{component}"] == "":
            continue
        xs, ys = series[rec["method"]]
        xs.append(float(rec["t_or_s"]))
        ys.append(float(rec["{component}"]))

fig, ax = plt.subplots(figsize=(9, 4.5))
for method, (xs, ys) in sorted(series.items()):
    ax.plot(xs, ys, label=method, linewidth=1)
ax.set_xlabel("{xlabel}")
ax.set_ylabel("{ylabel}")
ax.set_title("{title}")
ax.legend()
fig.tight_layout()
fig.savefig("{png_name}", dpi=150)
'''


def plot_script(csv_name: str, table: ScanTable, component: str = "re") -> str:
    """Source of a standalone matplotlib script that plots one CSV column."""
    part = "Re" if component == "re" else "Im"
    if table.axis is Axis.REAL_S:
        xlabel = "s"
        title = f"{part}[P(s)] on the real axis, x = {table.x:g}"
    else:
        xlabel = "t"
        title = f"{part}[P({table.sigma:g} + it)], x = {table.x:g}"
    stem = Path(csv_name).stem
    return _PLOT_TEMPLATE.format(
        csv_name=csv_name,
        component=component,
        xlabel=xlabel,
        ylabel=f"{part} P",
        title=title,
        png_name=f"{stem}.png",
    )
