"""Scans, convergence studies and quadrature checks built on the evaluators."""

from __future__ import annotations

import enum
import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, PZetaError
from .primes import PrimeTable, sieve
from .primezeta import Evaluation, Method, error_bound, evaluate, on_cut, prime_zeta_rh
from .quadrature import integrate_to
from .specfun import exp_integral_e1

DEFAULT_METHODS = (Method.MOBIUS, Method.RH)


class Axis(str, enum.Enum):
    REAL_S = "real"
    VERTICAL_T = "vertical"


@dataclass
class ScanRow:
    abscissa: float
    s: complex
    values: dict[Method, complex | None]
    errors: dict[Method, str] = field(default_factory=dict)
    on_cut: bool = False
    # sample moved off s = 1 by half a step
    skipped_pole: bool = False

    @property
    def pairwise_abs_diff(self) -> float:
        """Largest |v_i - v_j| over successful methods (real parts on the cut)."""
        vals = [v for v in self.values.values() if v is not None]
        if len(vals) < 2:
            return math.nan
        if self.on_cut:
            return max(abs(a.real - b.real) for a, b in itertools.combinations(vals, 2))
        return max(abs(a - b) for a, b in itertools.combinations(vals, 2))

    def component_diffs(self, a: Method, b: Method) -> tuple[float, float]:
        va, vb = self.values[a], self.values[b]
        if va is None or vb is None:
            return math.nan, math.nan
        return abs(va.real - vb.real), abs(va.imag - vb.imag)


@dataclass
class ScanTable:
    axis: Axis
    x: float
    methods: tuple[Method, ...]
    rows: list[ScanRow]
    sigma: float = math.nan

    @property
    def reference(self) -> Method:
        return Method.MOBIUS if Method.MOBIUS in self.methods else self.methods[0]

    def abscissas(self) -> np.ndarray:
        return np.array([r.abscissa for r in self.rows])

    def column(self, method: Method | str) -> np.ndarray:
        method = Method(method)
        return np.array([np.nan if r.values[method] is None else r.values[method]
                         for r in self.rows], dtype=complex)

    def max_pairwise_diff(self) -> float:
        diffs = [r.pairwise_abs_diff for r in self.rows]
        diffs = [d for d in diffs if not math.isnan(d)]
        return max(diffs) if diffs else math.nan


def _grid(lo: float, hi: float, step: float) -> list[float]:
    if not step > 0:
        raise DomainError("step must be positive")
    if hi < lo:
        raise DomainError("empty range")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return [lo + k * step for k in range(count)]


def _normalise_methods(methods) -> tuple[Method, ...]:
    out = tuple(Method(m) for m in (methods or DEFAULT_METHODS))
    if not out:
        raise DomainError("at least one method required")
    return out


def _table_for(methods, x: float, table: PrimeTable | None) -> PrimeTable | None:
    if table is not None:
        return table
    if all(m is Method.MOBIUS for m in methods):
        return None
    return sieve(max(int(math.ceil(x)), 10**6))


def _eval_row(abscissa, s, skipped, methods, x, table, n_max) -> ScanRow:
    row = ScanRow(abscissa, s, {}, on_cut=on_cut(s), skipped_pole=skipped)
    for m in methods:
        try:
            row.values[m] = evaluate(m, s, x=x, table=table, n_max=n_max).value
        except PZetaError as exc:
            row.values[m] = None
            row.errors[m] = str(exc)
    return row


def _run(points, methods, x, table, n_max, workers) -> list[ScanRow]:
    def job(p):
        return _eval_row(*p, methods, x, table, n_max)
    if workers and workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            return list(pool.map(job, points))
    return [job(p) for p in points]


def scan_real(s_min: float, s_max: float, step: float, x: float = 1e4,
              methods: Iterable[Method | str] | None = None, *,
              table: PrimeTable | None = None, n_max: int = 1000,
              workers: int | None = None) -> ScanTable:
    """Evaluate the requested methods along real s in [s_min, s_max].

    A sample landing exactly on s = 1 is moved up by step/2 and marked.
    Evaluator errors are stored on the row instead of aborting the scan.
    """
    if not 0.5 < s_min:
        raise DomainError("scan_real requires s_min > 1/2")
    methods = _normalise_methods(methods)
    table = _table_for(methods, x, table)
    points = []
    for s in _grid(s_min, s_max, step):
        skipped = s == 1.0
        if skipped:
            s += step / 2
        points.append((s, complex(s, 0.0), skipped))
    rows = _run(points, methods, x, table, n_max, workers)
    return ScanTable(Axis.REAL_S, float(x), methods, rows)


def scan_vertical(sigma: float, t_min: float, t_max: float, step: float, x: float = 1e4,
                  methods: Iterable[Method | str] | None = None, *,
                  table: PrimeTable | None = None, n_max: int = 1000,
                  workers: int | None = None) -> ScanTable:
    """Evaluate the requested methods along s = sigma + i t, t in [t_min, t_max]."""
    if not sigma > 0.5:
        raise DomainError("scan_vertical requires sigma > 1/2")
    if not 0 < t_min:
        raise DomainError("scan_vertical requires t_min > 0")
    methods = _normalise_methods(methods)
    table = _table_for(methods, x, table)
    points = [(t, complex(sigma, t), False) for t in _grid(t_min, t_max, step)]
    rows = _run(points, methods, x, table, n_max, workers)
    return ScanTable(Axis.VERTICAL_T, float(x), methods, rows, sigma=float(sigma))


@dataclass(frozen=True)
class ConvergenceRow:
    x: float
    abs_error: float
    bound: float

    @property
    def exceeds(self) -> bool:
        return self.abs_error > self.bound


def convergence_study(s, x_values: Sequence[float], reference: Evaluation,
                      table: PrimeTable | None = None) -> list[ConvergenceRow]:
    """Deviation of the RH route from ``reference`` at each x, next to the envelope."""
    s = complex(s)
    x_values = [float(v) for v in x_values]
    if not x_values:
        return []
    if any(b <= a for a, b in zip(x_values, x_values[1:])):
        raise DomainError("x_values must be strictly increasing")
    if table is None:
        table = sieve(int(math.ceil(x_values[-1])))
    cut = on_cut(s)
    out = []
    for x in x_values:
        ev = prime_zeta_rh(s, x, table)
        diff = ev.value - reference.value
        err = abs(diff.real) if cut else abs(diff)
        out.append(ConvergenceRow(x, err, error_bound(s, x)))
    return out


def first_envelope_violation(table: ScanTable, a: Method | str = Method.RH,
                             b: Method | str = Method.MOBIUS) -> float | None:
    """Largest abscissa where |Re a - Re b| exceeds the envelope, scanning downward.

    Only meaningful for real-axis scans; returns None when every sample is
    inside the envelope.
    """
    a, b = Method(a), Method(b)
    for row in reversed(table.rows):
        dre, _ = row.component_diffs(a, b)
        if math.isnan(dre):
            continue
        if dre > error_bound(row.s, table.x):
            return row.abscissa
    return None


def tail_integral(s, x: float) -> complex:
    """int_x^inf dt / (t^s log t), integrated in u = log t."""
    s = complex(s)
    x = float(x)
    if not s.real > 1.0:
        raise DomainError("tail integral converges only for Re(s) > 1")
    if not x >= 2.0:
        raise DomainError("x must be >= 2")
    a = math.log(x)
    rate = s.real - 1.0
    # e^{-rate U} / U < 1e-16 past U
    upper = a
    while math.exp(-rate * upper) / upper >= 1e-16:
        upper += 1.0
    period = 2 * math.pi / abs(s.imag) if s.imag else math.inf
    panel = min(1.0, period / 2)
    return integrate_to(lambda u: np.exp(-(s - 1.0) * u) / u, a, upper, tol=1e-13, panel=panel)


def tail_identity_check(s, x: float) -> float:
    """|quadrature of the tail integral - E1((s-1) log x)|."""
    s = complex(s)
    return abs(tail_integral(s, x) - exp_integral_e1((s - 1.0) * math.log(float(x))))


def branch_jump(sigma: float, x: float, table: PrimeTable, eps: float = 1e-8) -> float:
    """Jump of Im P across the real axis at s = sigma, RH route.

    Im P(sigma + i e) - Im P(sigma - i e) picks up a smooth 2 e Re P'(sigma)
    part; combining step sizes e and 2e removes it to O(e^3).
    """
    def raw(e):
        up = prime_zeta_rh(complex(sigma, e), x, table).value
        down = prime_zeta_rh(complex(sigma, -e), x, table).value
        return up.imag - down.imag
    return 2.0 * raw(eps) - raw(2.0 * eps)
