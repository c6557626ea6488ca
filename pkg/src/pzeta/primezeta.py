"""Evaluators for the prime zeta function P(s) = sum_p p^-s.

Four routes are provided:

* ``prime_zeta_direct``: the defining sum over a prime table (Re(s) > 1).
* ``prime_zeta_mobius``: sum_n mu(n)/n log zeta(ns), principal log.
* ``prime_zeta_rh``: truncated prime sum plus E1((s-1) log x), valid for
  Re(s) > 1/2 under RH, with a cut on (1/2, 1].
* ``prime_zeta_rh_corrected``: the previous value minus the boundary term
  (pi(x) - li(x)) / x^s.

On the cut the RH route takes E1 from the upper half-plane while the
Moebius route takes log of a negative zeta value as +i*pi, so only real
parts are comparable there; :func:`deviation` handles that.
"""

from __future__ import annotations

import cmath
import enum
import functools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError, PoleError, RangeError
from .primes import MobiusTable, PrimeTable, mobius_sieve, prime_count
from .specfun import exp_integral_e1, log_integral, zeta_unchecked

# log zeta(ns) ~ 2^{-Re(ns)} drops below binary64 resolution past this
MOBIUS_RE_CUTOFF = 60.0
# principal log of zeta(ns) is flagged when |arg| exceeds this
ARG_FLAG = 3.0


class Method(str, enum.Enum):
    DIRECT = "direct"
    MOBIUS = "mobius"
    RH = "rh"
    RH_CORRECTED = "rh-corrected"


@dataclass(frozen=True)
class Evaluation:
    """A P(s) value with the method and truncation that produced it.

    ``truncation`` is the prime limit (direct), the effective n (Moebius)
    or the limit variable x (RH routes). ``error_bound`` is an a-priori
    envelope, 0 when none applies.
    """

    value: complex
    method: Method
    truncation: float
    error_bound: float
    on_cut: bool
    notes: tuple[str, ...] = field(default=())

    @property
    def real(self) -> float:
        return self.value.real

    @property
    def imag(self) -> float:
        return self.value.imag


def on_cut(s: complex) -> bool:
    """True for real s in (1/2, 1], where P has its branch cut."""
    return s.imag == 0 and 0.5 < s.real <= 1.0


def deviation(a: Evaluation | complex, b: Evaluation | complex, cut: bool | None = None) -> float:
    """|a - b|, or |Re a - Re b| when either value sits on the cut."""
    if cut is None:
        cut = any(isinstance(e, Evaluation) and e.on_cut for e in (a, b))
    va = a.value if isinstance(a, Evaluation) else complex(a)
    vb = b.value if isinstance(b, Evaluation) else complex(b)
    return abs(va.real - vb.real) if cut else abs(va - vb)


def prime_power_sum(primes: np.ndarray, s: complex) -> complex:
    """sum p^-s over ``primes`` with correctly rounded accumulation."""
    if len(primes) == 0:
        return 0j
    terms = np.exp(-s * np.log(primes.astype(np.float64)))
    return complex(math.fsum(terms.real), math.fsum(terms.imag))


def error_bound(s, x: float) -> float:
    """Envelope x^(1/2 - Re s) log x for the truncation error at x."""
    s = complex(s)
    x = float(x)
    if not s.real > 0.5:
        raise DomainError(f"error_bound needs Re(s) > 1/2, got {s}")
    if not x >= 2.0:
        raise DomainError(f"error_bound needs x >= 2, got {x}")
    return x ** (0.5 - s.real) * math.log(x)


def prime_zeta_direct(s, table: PrimeTable) -> Evaluation:
    """Sum p^-s over every prime in ``table``; Re(s) must exceed 1.

    The bound is the integral tail estimate L^(1-σ) / ((σ-1) log L).
    """
    s = complex(s)
    sigma = s.real
    if not sigma > 1.0:
        raise DomainError(f"direct sum diverges for Re(s) <= 1 (s={s})")
    value = prime_power_sum(table.primes, s)
    limit = table.limit
    bound = limit ** (1.0 - sigma) / ((sigma - 1.0) * math.log(limit))
    return Evaluation(value, Method.DIRECT, float(limit), bound, False)


@functools.lru_cache(maxsize=8)
def _mobius_table(n_max: int) -> MobiusTable:
    return mobius_sieve(n_max)


def check_domain(s: complex) -> None:
    """Reject s = 1 and Re(s) <= 1/2."""
    if s == 1:
        raise PoleError("pole at s=1 (logarithmic singularity of P)")
    if not s.real > 0.5:
        raise DomainError(f"supported domain is Re(s) > 1/2, got s={s}")


def prime_zeta_mobius(s, n_max: int = 1000) -> Evaluation:
    """P(s) from Moebius inversion of log zeta(ns), principal logarithm.

    Terms with Re(ns) > 60 are skipped as negligible, so the effective
    number of terms is usually far below ``n_max``. Sample points where
    |arg zeta(ns)| > 3 are listed in ``notes``; there the principal log
    may sit on a different sheet than the analytic continuation.
    """
    s = complex(s)
    check_domain(s)
    n_max = int(n_max)
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    mu = _mobius_table(n_max)
    re_parts, im_parts = [], []
    notes = []
    n_eff = 0
    for n in range(1, n_max + 1):
        ns = n * s
        if ns.real > MOBIUS_RE_CUTOFF:
            break
        n_eff = n
        m = mu[n]
        if m == 0:
            continue
        z = zeta_unchecked(ns)
        if abs(cmath.phase(z)) > ARG_FLAG:
            notes.append(f"|arg zeta({n}s)| = {abs(cmath.phase(z)):.3f} > {ARG_FLAG}")
        term = m * cmath.log(z) / n
        re_parts.append(term.real)
        im_parts.append(term.imag)
    value = complex(math.fsum(re_parts), math.fsum(im_parts))
    return Evaluation(value, Method.MOBIUS, float(n_eff), 0.0, on_cut(s), tuple(notes))


def _check_rh_args(s: complex, x: float, table: PrimeTable) -> None:
    check_domain(s)
    if not x >= 2.0:
        raise DomainError(f"limit variable x must be >= 2, got {x}")
    if x > table.limit:
        raise RangeError(f"x={x:g} exceeds prime table limit {table.limit}")


def prime_zeta_rh(s, x: float, table: PrimeTable) -> Evaluation:
    """sum_{p<=x} p^-s + E1((s-1) log x).

    Analytic for Re(s) > 1/2 off the cut (1/2, 1]; on the cut E1 is taken
    from above, so the imaginary part there is -pi plus the prime sum's.
    """
    s = complex(s)
    x = float(x)
    _check_rh_args(s, x, table)
    log_x = math.log(x)
    head = prime_power_sum(table.up_to(x), s)
    value = head + exp_integral_e1((s - 1.0) * log_x)
    return Evaluation(value, Method.RH, x, error_bound(s, x), on_cut(s))


def boundary_term(s, x: float, table: PrimeTable) -> complex:
    """(pi(x) - li(x)) / x^s with the half-step pi."""
    s = complex(s)
    x = float(x)
    return (prime_count(x, table) - log_integral(x)) * cmath.exp(-s * math.log(x))


def prime_zeta_rh_corrected(s, x: float, table: PrimeTable) -> Evaluation:
    """The RH route minus the boundary term (pi(x) - li(x)) / x^s.

    The correction has the same order as the neglected remainder, so the
    envelope is unchanged and convergence is not expected to improve.
    """
    base = prime_zeta_rh(s, x, table)
    value = base.value - boundary_term(s, x, table)
    return Evaluation(value, Method.RH_CORRECTED, base.truncation, base.error_bound, base.on_cut)


def evaluate(method: Method | str, s, *, x: float = 1e4, table: PrimeTable | None = None,
             n_max: int = 1000) -> Evaluation:
    """Dispatch to one evaluator by name."""
    method = Method(method)
    if method is Method.MOBIUS:
        return prime_zeta_mobius(s, n_max)
    if table is None:
        raise ValueError(f"method {method.value} needs a prime table")
    if method is Method.DIRECT:
        return prime_zeta_direct(s, table)
    if method is Method.RH:
        return prime_zeta_rh(s, x, table)
    return prime_zeta_rh_corrected(s, x, table)
