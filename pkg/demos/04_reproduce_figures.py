# Regenerate the data behind the three published figures and plot them.
#
# Run:  python demos/04_reproduce_figures.py [outdir]
# (equivalent to `pzeta figures --out outdir --plot`, plus rendering)

import sys
from pathlib import Path

from pzeta import sieve
from pzeta.analysis import first_envelope_violation, scan_real, scan_vertical
from pzeta.primezeta import Method
from pzeta.report import write_scan_csv

out = Path(sys.argv[1] if len(sys.argv) > 1 else "figures_out")
out.mkdir(exist_ok=True)
x = 1e4
table = sieve(10**6)

fig1 = scan_real(0.5001, 2.0, 0.001, x, table=table)
fig23 = scan_vertical(0.75, 0.1, 50.0, 0.1, x, table=table)
for name, scan in (("fig1", fig1), ("fig2", fig23), ("fig3", fig23)):
    write_scan_csv(scan, out / f"{name}.csv")

print("fig1: largest |Re diff| =", fig1.max_pairwise_diff(),
      "first envelope violation:", first_envelope_violation(fig1))
diffs = [r.component_diffs(Method.RH, Method.MOBIUS) for r in fig23.rows]
print("fig2/3: max |Re diff| = %.4f, max |Im diff| = %.4f" % (max(d[0] for d in diffs), max(d[1] for d in diffs)))

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    sys.exit("matplotlib not installed; CSVs written to %s" % out)

fig, axes = plt.subplots(3, 1, figsize=(9, 11))
s = fig1.abscissas()
axes[0].plot(s, fig1.column("mobius").real, label="Moebius")
axes[0].plot(s, fig1.column("rh").real, "--", label="prime sum + E1")
axes[0].set_xlabel("s")
axes[0].set_ylabel("Re P(s)")
t = fig23.abscissas()
for ax, part, label in ((axes[1], "real", "Re"), (axes[2], "imag", "Im")):
    ax.plot(t, getattr(fig23.column("mobius"), part), label="Moebius")
    ax.plot(t, getattr(fig23.column("rh"), part), "--", label="prime sum + E1")
    ax.set_xlabel("t")
    ax.set_ylabel(f"{label} P(0.75 + it)")
for ax in axes:
    ax.legend()
fig.tight_layout()
fig.savefig(out / "figures.png", dpi=120)
print("wrote", out / "figures.png")
