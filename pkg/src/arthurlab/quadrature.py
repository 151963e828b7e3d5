"""Adaptive quadrature for improper integrals with algebraic decay."""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

_LO_X, _LO_W = np.polynomial.legendre.leggauss(10)
_HI_X, _HI_W = np.polynomial.legendre.leggauss(21)


class QuadratureError(RuntimeError):
    pass


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    abs_error_estimate: float
    evaluations: int
    intervals: int


def _rule(f, a: float, b: float) -> tuple[complex, float, int]:
    mid, half = (a + b) / 2, (b - a) / 2
    hi = half * np.dot(_HI_W, f(mid + half * _HI_X))
    lo = half * np.dot(_LO_W, f(mid + half * _LO_X))
    return hi, float(abs(hi - lo)), _HI_X.size + _LO_X.size


def adaptive(f: Callable[[np.ndarray], np.ndarray], a: float, b: float, abs_tol: float = 1e-10,
             rel_tol: float = 1e-13, max_evals: int = 400_000) -> QuadratureResult:
    """Globally adaptive bisection on [a, b] with a Gauss-Legendre 10/21 error estimate.

    ``f`` is called on numpy arrays of interior nodes only, so integrable endpoint
    singularities are fine.
    """
    val, err, evals = _rule(f, a, b)
    heap = [(-err, a, b, val)]
    total, total_err = val, err
    while total_err > max(abs_tol, rel_tol * abs(total)):
        if evals >= max_evals:
            raise QuadratureError(
                f"evaluation budget {max_evals} exhausted; error estimate {total_err:.3e}")
        neg, lo, hi, v = heapq.heappop(heap)
        mid = (lo + hi) / 2
        if mid <= lo or mid >= hi:
            raise QuadratureError("interval underflow before reaching the tolerance")
        v1, e1, n1 = _rule(f, lo, mid)
        v2, e2, n2 = _rule(f, mid, hi)
        evals += n1 + n2
        total += v1 + v2 - v
        total_err += e1 + e2 + neg
        heapq.heappush(heap, (-e1, lo, mid, v1))
        heapq.heappush(heap, (-e2, mid, hi, v2))
        if len(heap) % 64 == 0:
            # refresh the running sums to keep cancellation error down
            total = sum(item[3] for item in heap)
            total_err = sum(-item[0] for item in heap)
    total = sum(item[3] for item in heap)
    total_err = sum(-item[0] for item in heap)
    return QuadratureResult(complex(total), float(total_err), evals, len(heap))


def _half_line_pieces(kernel):
    """int_0^inf k(r) dr split at r = 1 and written in theta with r = tan(theta).

    On [pi/4, pi/2) the complement phi = pi/2 - theta keeps full precision:
    r = cot(phi), dr = dphi / sin(phi)^2.
    """

    def near(theta):
        c = np.cos(theta)
        return kernel(np.tan(theta)) / (c * c)

    def far(phi):
        s = np.sin(phi)
        return kernel(np.cos(phi) / s) / (s * s)

    return near, far


def quad_improper(kernel: Callable[[np.ndarray], np.ndarray], domain: str = "half",
                  abs_tol: float = 1e-10, max_evals: int = 400_000) -> QuadratureResult:
    """Integrate ``kernel`` over ``[0, inf)`` (``"half"``) or the real line (``"line"``)."""
    if domain == "half":
        pieces = list(_half_line_pieces(kernel))
    elif domain == "line":
        pieces = list(_half_line_pieces(kernel)) + list(_half_line_pieces(lambda u: kernel(-u)))
    else:
        raise ValueError(f"unknown domain {domain!r}")
    value, err, evals, intervals = 0j, 0.0, 0, 0
    tol = abs_tol / len(pieces)
    for g in pieces:
        res = adaptive(g, 0.0, math.pi / 4, abs_tol=tol, max_evals=max_evals)
        value += res.value
        err += res.abs_error_estimate
        evals += res.evaluations
        intervals += res.intervals
    return QuadratureResult(value, err, evals, intervals)
