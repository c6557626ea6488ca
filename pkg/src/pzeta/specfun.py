"""Special functions in binary64: E1, Ei, li and the Riemann zeta function.

All functions accept anything ``complex()`` (or ``float()``) accepts and are
pure, so they can be called concurrently.
"""

from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ConvergenceError, DomainError, E1OverflowError, PoleError

__all__ = [
    "EULER_GAMMA",
    "E1_CROSSOVER",
    "SeriesControl",
    "ZetaAccuracyWarning",
    "exp_integral_e1",
    "exp_integral_ei",
    "log_integral",
    "riemann_zeta",
    "e1_quadrature_oracle",
]

EULER_GAMMA = 0.57721566490153286061

# |z| below which E1 uses the power series
E1_CROSSOVER = 4.0
# |arg z| above which the series is used regardless of |z| (CF stalls near the cut)
E1_CUT_WEDGE = 3.0
E1_OVERFLOW_RE = -700.0
_CF_MAX_ITER = 20000

ZETA_CALIBRATED_IM = 100.0
ZETA_BERNOULLI_TERMS = 12


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for the power series."""

    rel_tolerance: float = 1e-15
    max_terms: int = 500

    def __post_init__(self):
        if not self.rel_tolerance > 0:
            raise ValueError("rel_tolerance must be positive")
        if self.max_terms < 1:
            raise ValueError("max_terms must be at least 1")


DEFAULT_CONTROL = SeriesControl()


class ZetaAccuracyWarning(UserWarning):
    """riemann_zeta was called outside its calibrated |Im(s)| range."""


# ---------------------------------------------------------------------------
# Exponential integrals
# ---------------------------------------------------------------------------


def _e1_series(z: complex, control: SeriesControl) -> complex:
    # -gamma - log z - sum_{k>=1} (-z)^k / (k k!)
    head = -EULER_GAMMA - cmath.log(z)
    term = 1.0 + 0j  # (-z)^k / k!
    running = 0j
    re_parts = []
    im_parts = []
    for k in range(1, control.max_terms + 1):
        term *= -z / k
        contrib = term / k
        running += contrib
        re_parts.append(contrib.real)
        im_parts.append(contrib.imag)
        if k > abs(z) and abs(contrib) <= 1e-2 * control.rel_tolerance * abs(head - running):
            break
    else:
        raise ConvergenceError(f"E1 series did not converge in {control.max_terms} terms at z={z}")
    s = complex(math.fsum(re_parts), math.fsum(im_parts))
    return head - s


def _e1_continued_fraction(z: complex, control: SeriesControl) -> complex:
    # modified Lentz on the even contraction
    # E1(z) = e^{-z} / (z+1 - 1/(z+3 - 4/(z+5 - ...)))
    tiny = 1e-300
    b = z + 1.0
    c = 1.0 / tiny
    d = 1.0 / b
    h = d
    eps = max(control.rel_tolerance, 2.3e-16)
    for i in range(1, _CF_MAX_ITER + 1):
        an = -float(i * i)
        b += 2.0
        d = an * d + b
        if d == 0:
            d = tiny
        c = b + an / c
        if c == 0:
            c = tiny
        d = 1.0 / d
        delta = c * d
        h *= delta
        if abs(delta - 1.0) < eps:
            return h * cmath.exp(-z)
    raise ConvergenceError(f"E1 continued fraction did not converge at z={z}")


def exp_integral_e1(z, control: SeriesControl = DEFAULT_CONTROL) -> complex:
    """Principal-branch exponential integral E1(z) = int_z^inf e^-t / t dt.

    On the cut (real z < 0) the value from the upper half-plane is returned,
    i.e. ``log(-x) = ln x + i*pi``.

    Raises
    ------
    PoleError
        For z = 0.
    E1OverflowError
        For Re(z) < -700, where exp(-z) overflows.
    """
    z = complex(z)
    if z == 0:
        raise PoleError("E1 has a logarithmic singularity at z = 0")
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite argument {z}")
    if z.real < E1_OVERFLOW_RE:
        raise E1OverflowError(f"exp(-z) overflows for Re(z) = {z.real}")
    if z.imag == 0.0:
        z = complex(z.real, 0.0)  # drop a -0.0 so the cut maps to +i*pi
    if abs(z) <= E1_CROSSOVER or abs(cmath.phase(z)) > E1_CUT_WEDGE:
        return _e1_series(z, control)
    return _e1_continued_fraction(z, control)


def exp_integral_ei(x: float, control: SeriesControl = DEFAULT_CONTROL) -> float:
    """Principal-value exponential integral Ei(x) for real x != 0."""
    x = float(x)
    if x == 0.0:
        raise PoleError("Ei has a logarithmic singularity at x = 0")
    if not math.isfinite(x):
        raise DomainError(f"non-finite argument {x}")
    if x < 0.0:
        return -exp_integral_e1(-x, control).real
    term = 1.0
    parts = []
    for k in range(1, control.max_terms + 1):
        term *= x / k
        parts.append(term / k)
        if parts[-1] <= control.rel_tolerance * 1e-3 * parts[0] and k > x:
            break
    else:
        raise ConvergenceError(f"Ei series did not converge in {control.max_terms} terms at x={x}")
    return math.fsum([EULER_GAMMA, math.log(x), *parts])


def log_integral(x: float) -> float:
    """Principal-value logarithmic integral li(x) = Ei(log x).

    ``x = 1`` is rejected rather than mapped to -inf.
    """
    x = float(x)
    if not x > 0.0:
        raise DomainError(f"li(x) requires x > 0, got {x}")
    if x == 1.0:
        raise PoleError("li(x) diverges at x = 1")
    return exp_integral_ei(math.log(x))


# ---------------------------------------------------------------------------
# Riemann zeta
# ---------------------------------------------------------------------------


def _bernoulli_even(count: int) -> list[Fraction]:
    """B_2, B_4, ..., B_{2*count} via the Akiyama-Tanigawa algorithm."""
    top = 2 * count
    a = [Fraction(0)] * (top + 1)
    out = []
    for m in range(top + 1):
        a[m] = Fraction(1, m + 1)
        for j in range(m, 0, -1):
            a[j - 1] = j * (a[j - 1] - a[j])
        if m >= 2 and m % 2 == 0:
            out.append(a[0])
    return out


# B_{2j} / (2j)! for j = 1..ZETA_BERNOULLI_TERMS, rounded once to binary64
_EM_COEFFS = tuple(
    float(b / math.factorial(2 * j))
    for j, b in enumerate(_bernoulli_even(ZETA_BERNOULLI_TERMS), start=1)
)


def _zeta_terms(im_abs: float) -> int:
    return max(20, math.ceil(1.3 * im_abs) + 20)


def _zeta_em(s: complex, n: int, m: int = ZETA_BERNOULLI_TERMS) -> complex:
    if m > len(_EM_COEFFS):
        coeffs = [float(b / math.factorial(2 * j))
                  for j, b in enumerate(_bernoulli_even(m), start=1)]
    else:
        coeffs = _EM_COEFFS[:m]
    k = np.arange(1, n, dtype=np.float64)
    powers = np.exp(-s * np.log(k))
    head = complex(math.fsum(powers.real), math.fsum(powers.imag))
    logn = math.log(n)
    n_pow = cmath.exp(-s * logn)  # N^{-s}
    tail = n_pow / 2.0 + n * n_pow / (s - 1.0)
    # T_j = B_2j/(2j)! * s(s+1)...(s+2j-2) * N^{-s-2j+1}
    rising = s
    npow = n_pow / n
    corr = 0j
    for j, c in enumerate(coeffs, start=1):
        corr += c * rising * npow
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        npow /= n * n
    value = head + tail + corr
    if s.imag == 0:
        value = complex(value.real, 0.0)  # real on the real axis
    return value


def riemann_zeta(s) -> complex:
    """Riemann zeta function for Re(s) > 0 by Euler-Maclaurin summation.

    The summation length grows with |Im(s)|; results are calibrated to
    ~1e-12 relative for |Im(s)| <= 100 and a ``ZetaAccuracyWarning`` is
    emitted beyond that.
    """
    s = complex(s)
    if s == 1:
        raise PoleError("zeta has a pole at s = 1")
    if not s.real > 0:
        raise DomainError(f"riemann_zeta requires Re(s) > 0, got {s}")
    if abs(s.imag) > ZETA_CALIBRATED_IM:
        warnings.warn(
            f"|Im(s)| = {abs(s.imag):g} exceeds the calibrated range {ZETA_CALIBRATED_IM:g}",
            ZetaAccuracyWarning,
            stacklevel=2,
        )
    return _zeta_em(s, _zeta_terms(abs(s.imag)))


def zeta_unchecked(s: complex) -> complex:
    """riemann_zeta without the range warning; s must already be validated."""
    return _zeta_em(s, _zeta_terms(abs(s.imag)))


# ---------------------------------------------------------------------------
# Test oracle
# ---------------------------------------------------------------------------


def e1_quadrature_oracle(z, tol: float = 1e-12) -> complex:
    """E1(z) by adaptive quadrature along the ray t = z + u, u >= 0.

    Independent of :func:`exp_integral_e1`; meant for verification only.
    """
    from .quadrature import integrate_to_infinity

    z = complex(z)
    if not z.real > 0:
        raise DomainError("quadrature oracle needs Re(z) > 0")
    scale = math.exp(-z.real) / abs(z)
    return integrate_to_infinity(
        lambda u: np.exp(-(z + u)) / (z + u), 0.0, tol=tol * scale * 1e-2
    )
