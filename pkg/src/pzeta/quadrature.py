"""Adaptive Gauss-Legendre quadrature for smooth complex integrands.

Used as an independent check on the series/continued-fraction code paths,
so it deliberately shares nothing with :mod:`pzeta.specfun`.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from .errors import ConvergenceError

_NODES, _WEIGHTS = np.polynomial.legendre.leggauss(15)


def _panel(f, a: float, b: float) -> complex:
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    vals = f(mid + half * _NODES)
    return complex(half * np.dot(_WEIGHTS, vals))


def integrate(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    tol: float = 1e-13,
    max_depth: int = 40,
) -> complex:
    """Integrate vectorised ``f`` over [a, b].

    Each panel is bisected until the 15-point estimate on the panel and the
    sum over its two halves differ by less than ``tol`` (absolute, scaled
    by the panel's share of the interval).
    """
    total = 0.0j
    stack = [(a, b, _panel(f, a, b), 0)]
    width = b - a
    while stack:
        lo, hi, coarse, depth = stack.pop()
        mid = 0.5 * (lo + hi)
        left = _panel(f, lo, mid)
        right = _panel(f, mid, hi)
        fine = left + right
        if abs(fine - coarse) <= tol * (hi - lo) / width:
            total += fine
        elif depth >= max_depth:
            raise ConvergenceError(f"refinement stalled on [{lo}, {hi}]")
        else:
            stack.append((lo, mid, left, depth + 1))
            stack.append((mid, hi, right, depth + 1))
    return total


def integrate_to_infinity(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    tol: float = 1e-13,
    first_width: float = 1.0,
    max_panels: int = 200,
) -> complex:
    """Integrate an exponentially decaying ``f`` over [a, inf).

    Panels double in width until a panel contributes less than ``tol``.
    """
    total = 0.0j
    lo, width = a, first_width
    for _ in range(max_panels):
        hi = lo + width
        piece = integrate(f, lo, hi, tol=tol)
        total += piece
        if abs(piece) < tol:
            return total
        lo, width = hi, width * 2.0
    raise ConvergenceError("semi-infinite quadrature did not settle")


def integrate_to(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    upper: float,
    tol: float = 1e-13,
    panel: float = 1.0,
) -> complex:
    """Integrate over [a, upper] in panels of roughly unit width."""
    n = max(1, math.ceil((upper - a) / panel))
    edges = np.linspace(a, upper, n + 1)
    return sum((integrate(f, lo, hi, tol=tol / n) for lo, hi in zip(edges[:-1], edges[1:])), 0j)
