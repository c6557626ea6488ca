"""Self-checks run by ``pzeta verify``.

Each check returns a :class:`CheckResult`; a suite is a list of checks.
Tolerances here mirror the ones in the test suite.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass
from typing import Callable

import numpy as np

from . import analysis, primes, primezeta, specfun
from .primezeta import Method


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.suite}/{self.name}: {self.detail}"


class _Context:
    """Lazily built tables shared between checks."""

    def __init__(self, x: float = 1e4):
        self.x = x
        self._table = None

    @property
    def table(self) -> primes.PrimeTable:
        if self._table is None:
            self._table = primes.sieve(10**6)
        return self._table


def _result(suite, name, worst, tol, what="max error"):
    return CheckResult(suite, name, bool(worst <= tol), f"{what} {worst:.3e} (tol {tol:.0e})")


# --- specfun -----------------------------------------------------------------


def check_e1_derivative(ctx):
    worst = 0.0
    for r in (0.3, 1.5, 3.0, 6.0, 12.0):
        for k in range(8):
            z = cmath.rect(r, -2.9 + k * (5.8 / 7))
            h = 1e-5 * max(1.0, abs(z))
            fd = (specfun.exp_integral_e1(z + h) - specfun.exp_integral_e1(z - h)) / (2 * h)
            exact = -cmath.exp(-z) / z
            worst = max(worst, abs(fd - exact) / max(1.0, abs(exact)))
    return _result("specfun", "e1-derivative", worst, 1e-6)


def check_e1_crossover(ctx):
    rng = random.Random(7)
    worst = 0.0
    for _ in range(400):
        z = cmath.rect(rng.uniform(3.2, 4.8), rng.uniform(-3.0, 3.0))
        a = specfun._e1_series(z, specfun.DEFAULT_CONTROL)
        b = specfun._e1_continued_fraction(z, specfun.DEFAULT_CONTROL)
        worst = max(worst, abs(a - b) / abs(b))
    return _result("specfun", "e1-series-vs-cf", worst, 1e-12, "max rel diff")


def check_e1_quadrature(ctx):
    worst = 0.0
    for z in (0.1 + 0.5j, 1, 2 + 3j, 0.5 - 4j, 5, 8 + 8j, 20 - 1j):
        q = specfun.e1_quadrature_oracle(z)
        worst = max(worst, abs(specfun.exp_integral_e1(z) - q) / abs(q))
    return _result("specfun", "e1-vs-quadrature", worst, 1e-10, "max rel diff")


def check_conjugate_symmetry(ctx):
    rng = random.Random(11)
    worst = 0.0
    for _ in range(100):
        z = complex(rng.uniform(-10, 10), rng.uniform(0.01, 10))
        worst = max(worst, abs(specfun.exp_integral_e1(z.conjugate())
                               - specfun.exp_integral_e1(z).conjugate()))
        s = complex(rng.uniform(0.1, 4), rng.uniform(0.01, 60))
        worst = max(worst, abs(specfun.riemann_zeta(s.conjugate())
                               - specfun.riemann_zeta(s).conjugate()))
    return _result("specfun", "conjugate-symmetry", worst, 1e-13)


def check_e1_cut_jump(ctx):
    worst = 0.0
    for x in (0.5, 1.0, 2.0):
        jump = specfun.exp_integral_e1(complex(-x, 1e-8)) - specfun.exp_integral_e1(complex(-x, -1e-8))
        worst = max(worst, abs(jump + 2j * math.pi))
    return _result("specfun", "e1-cut-jump", worst, 1e-6)


def check_li_derivative(ctx):
    worst = 0.0
    for x in (10.0, 1e2, 1e4):
        h = 1e-3 * x
        fd = (specfun.log_integral(x + h) - specfun.log_integral(x - h)) / (2 * h)
        worst = max(worst, abs(fd * math.log(x) - 1.0))
    return _result("specfun", "li-derivative", worst, 1e-6, "max rel error")


def check_zeta_stability(ctx):
    worst = 0.0
    for s in (2, 0.75 + 10j, 0.75 + 50j, 1.5 + 99j, 3 - 40j, 0.6 + 0.1j):
        s = complex(s)
        n = specfun._zeta_terms(abs(s.imag))
        a = specfun._zeta_em(s, n, 12)
        b = specfun._zeta_em(s, 2 * n, 14)
        worst = max(worst, abs(a - b) / abs(b))
    worst = max(worst, abs(specfun.riemann_zeta(2) - math.pi**2 / 6) / (math.pi**2 / 6))
    return _result("specfun", "zeta-em-stability", worst, 1e-12, "max rel diff")


# --- primes ------------------------------------------------------------------


def _trial_division_primes(n):
    out = []
    for k in range(2, n + 1):
        if all(k % p for p in out if p * p <= k):
            out.append(k)
    return out


def check_sieve(ctx):
    ok = primes.sieve(10**5).primes.tolist() == _trial_division_primes(10**5)
    return CheckResult("primes", "sieve-vs-trial-division", ok, "limit 1e5")


def check_half_step(ctx):
    table = primes.sieve(1000)
    bad = [int(p) for p in table.primes
           if primes.prime_count(p - 1e-9, table) + primes.prime_count(p + 1e-9, table)
           != 2 * primes.prime_count(p, table)]
    return CheckResult("primes", "half-step-average", not bad, f"{len(bad)} violations")


def check_squarefree(ctx):
    mu = primes.mobius_sieve(1000)
    brute = sum(1 for n in range(1, 1001) if all(n % (k * k) for k in range(2, 32)))
    got = int(np.abs(mu.mu[1:]).sum())
    return CheckResult("primes", "squarefree-count", got == brute, f"{got} vs {brute}")


# --- primezeta ---------------------------------------------------------------


def check_cross_method(ctx):
    rng = random.Random(3)
    worst = 0.0
    for _ in range(20):
        s = complex(rng.uniform(1.5, 3), rng.uniform(-20, 20))
        d = primezeta.prime_zeta_direct(s, ctx.table)
        m = primezeta.prime_zeta_mobius(s)
        worst = max(worst, abs(d.value - m.value) / (d.error_bound + 1e-12))
    return _result("primezeta", "direct-vs-mobius", worst, 1.0, "max diff/tail bound")


def check_x_stability(ctx):
    rng = random.Random(5)
    worst = 0.0
    for _ in range(20):
        s = complex(rng.uniform(1.05, 3), rng.uniform(-20, 20))
        a = primezeta.prime_zeta_rh(s, 1e4, ctx.table).value
        b = primezeta.prime_zeta_rh(s, 1e3, ctx.table).value
        worst = max(worst, abs(a - b) / primezeta.error_bound(s, 1e3))
    return _result("primezeta", "x-stability", worst, 1.0, "max diff/envelope")


def check_error_decay(ctx):
    bad = []
    for s in (0.75 + 2j, 1.5):
        ref = primezeta.prime_zeta_mobius(s, 2000)
        rows = analysis.convergence_study(s, [1e2, 1e3, 1e4], ref, ctx.table)
        if any(r.exceeds for r in rows) or not rows[-1].abs_error < rows[0].abs_error:
            bad.append(s)
    return CheckResult("primezeta", "error-decay", not bad, f"failing s: {bad}")


def check_p_cut_jump(ctx):
    worst = 0.0
    for sigma in (0.6, 0.75, 0.9):
        worst = max(worst, abs(analysis.branch_jump(sigma, ctx.x, ctx.table) + 2 * math.pi))
    flat = abs(analysis.branch_jump(1.2, ctx.x, ctx.table))
    ok = worst <= 1e-3 and flat <= 1e-9
    return CheckResult("primezeta", "branch-jump", ok,
                       f"cut jump err {worst:.2e}, jump at 1.2 {flat:.2e}")


def check_evaluator_conjugates(ctx):
    worst = 0.0
    for s in (0.75 + 10j, 1.5 + 3j, 2.2 - 7j):
        sc = s.conjugate()
        for ev in (lambda z: primezeta.prime_zeta_mobius(z),
                   lambda z: primezeta.prime_zeta_rh(z, ctx.x, ctx.table),
                   lambda z: primezeta.prime_zeta_rh_corrected(z, ctx.x, ctx.table)):
            worst = max(worst, abs(ev(sc).value - ev(s).value.conjugate()))
    return _result("primezeta", "conjugate-symmetry", worst, 1e-12)


def check_corrected_identity(ctx):
    worst = 0.0
    for s, x in ((2, 1e4), (0.75 + 2j, 1e4), (2, 9973)):
        a = primezeta.prime_zeta_rh(s, x, ctx.table).value
        b = primezeta.prime_zeta_rh_corrected(s, x, ctx.table).value
        worst = max(worst, abs((a - b) - primezeta.boundary_term(s, x, ctx.table)))
    return _result("primezeta", "corrected-identity", worst, 1e-15)


# --- analysis ----------------------------------------------------------------


def check_tail_identity(ctx):
    worst = max(analysis.tail_identity_check(s, x)
                for s in (2, 3, 2 + 5j) for x in (math.e, 10, 1e3))
    return _result("analysis", "tail-identity", worst, 1e-8, "max residual")


def check_scan_consistency(ctx):
    table = analysis.scan_vertical(0.75, 1, 5, 0.5, ctx.x, table=ctx.table)
    bad = 0
    for row in table.rows:
        a, b = row.values[Method.MOBIUS], row.values[Method.RH]
        bad += row.pairwise_abs_diff != abs(a - b)
    return CheckResult("analysis", "scan-self-consistency", bad == 0, f"{bad} inconsistent rows")


def check_convergence_envelope(ctx):
    bad = []
    for s in (0.75 + 5j, 0.9 + 14j, 1.2 + 1j):
        ref = primezeta.prime_zeta_mobius(s)
        rows = analysis.convergence_study(s, [1e2, 1e3, 1e4], ref, ctx.table)
        bad += [(s, r.x) for r in rows if r.exceeds]
    return CheckResult("analysis", "convergence-envelope", not bad, f"violations: {bad}")


SUITES: dict[str, list[Callable[[_Context], CheckResult]]] = {
    "specfun": [check_e1_derivative, check_e1_crossover, check_e1_quadrature,
                check_conjugate_symmetry, check_e1_cut_jump, check_li_derivative,
                check_zeta_stability],
    "primes": [check_sieve, check_half_step, check_squarefree],
    "primezeta": [check_cross_method, check_x_stability, check_error_decay,
                  check_p_cut_jump, check_evaluator_conjugates, check_corrected_identity],
    "analysis": [check_tail_identity, check_scan_consistency, check_convergence_envelope],
}


def run_checks(suites=None, x: float = 1e4) -> list[CheckResult]:
    """Run the named suites (all by default) and collect results."""
    ctx = _Context(x)
    out = []
    for name in suites or SUITES:
        for check in SUITES[name]:
            try:
                out.append(check(ctx))
            except Exception as exc:  # a crashing check is a failed check
                out.append(CheckResult(name, check.__name__, False, f"raised {exc!r}"))
    return out
