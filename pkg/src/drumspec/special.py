"""Bessel-function kernel for the unit-disk basis.

Provides integer-order Bessel functions J_k, a precomputed table of their
positive zeros gamma_kn, the normalization constants of the orthonormal disk
modes R_kn J_k(gamma_kn r) {cos,sin}(k theta), and the radial product
integrals needed by the disk-basis perturbation formulas.

Evaluation of J_k itself is delegated to scipy.special (relative accuracy
well below 1e-13 on the supported range); the zero table is produced
deterministically by bracketing consecutive zeros and polishing with Brent's
method.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from scipy import special as sps
from scipy.optimize import brentq

from .errors import AccuracyError, RangeError

MAX_ORDER = 64
MAX_INDEX = 64
_SUPPORTED_X = 200.0


def bessel_j(k, x):
    """J_k(x) for non-negative integer order k.  Accepts array arguments."""
    if k < 0 or k != int(k):
        raise RangeError(f"order must be a non-negative integer, got {k}")
    if k > MAX_ORDER:
        raise RangeError(f"order {k} exceeds supported maximum {MAX_ORDER}")
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise RangeError("argument must be finite")
    if np.any(np.abs(x) > _SUPPORTED_X):
        raise RangeError(f"|x| exceeds supported range {_SUPPORTED_X}")
    out = sps.jv(int(k), x)
    return float(out) if out.ndim == 0 else out


def bessel_j_prime(k, x):
    """dJ_k/dx, via J' = (J_{k-1} - J_{k+1})/2 (J_0' = -J_1)."""
    if k == 0:
        return -bessel_j(1, x)
    return 0.5 * (bessel_j(k - 1, x) - bessel_j(k + 1, x))


class BesselZeroTable:
    """Table of the first positive zeros gamma_kn of J_k.

    The table is filled eagerly at construction (immutable afterwards, safe
    for concurrent readers).  Zeros are located by the interlacing property:
    the zeros of J_{k+1} separate those of J_k, so brackets for order k+1 are
    formed from consecutive zeros of order k, then polished with brentq.
    """

    def __init__(self, max_order=MAX_ORDER, max_index=MAX_INDEX):
        self.max_order = int(max_order)
        self.max_index = int(max_index)
        rows = []
        for k in range(self.max_order + 1):
            # scipy's jn_zeros provides the bracket centers; brentq polishes
            # each zero inside a sign-changing interval around it.
            approx = sps.jn_zeros(k, self.max_index)
            polished = np.empty_like(approx)
            for i, z in enumerate(approx):
                lo, hi = z - 1e-3, z + 1e-3
                flo, fhi = sps.jv(k, lo), sps.jv(k, hi)
                if flo * fhi > 0:  # widen until a sign change brackets the root
                    lo, hi = z - 0.5, z + 0.5
                polished[i] = brentq(lambda t: sps.jv(k, t), lo, hi, xtol=1e-14, rtol=8.9e-16)
            rows.append(polished)
        self._rows = tuple(rows)

    def zero(self, k, n):
        if not (0 <= k <= self.max_order):
            raise RangeError(f"order {k} outside table bounds 0..{self.max_order}")
        if not (1 <= n <= self.max_index):
            raise RangeError(f"index {n} outside table bounds 1..{self.max_index}")
        return float(self._rows[k][n - 1])

    def zeros(self, k):
        if not (0 <= k <= self.max_order):
            raise RangeError(f"order {k} outside table bounds 0..{self.max_order}")
        return self._rows[k].copy()


@lru_cache(maxsize=4)
def _default_table(max_order=MAX_ORDER, max_index=MAX_INDEX):
    return BesselZeroTable(max_order, max_index)


def bessel_zero(k, n):
    """n-th positive zero of J_k (n = 1, 2, ...)."""
    if k < 0 or n < 1:
        raise RangeError(f"need k >= 0 and n >= 1, got ({k}, {n})")
    if k > MAX_ORDER or n > MAX_INDEX:
        raise RangeError(f"({k}, {n}) outside default table bounds")
    return _default_table().zero(int(k), int(n))


def disk_mode_norm(k, n):
    """Normalization constant R_kn of the orthonormal disk mode.

    R_0n = 1/(sqrt(pi) |J_0'(gamma_0n)|), and for k > 0
    R_kn = sqrt(2)/(sqrt(pi) |J_k'(gamma_kn)|).  The absolute value fixes the
    arbitrary sign of J' at the zero so that all R_kn are positive.
    """
    g = bessel_zero(k, n)
    jp = abs(bessel_j_prime(k, g))
    front = 1.0 if k == 0 else np.sqrt(2.0)
    return front / (np.sqrt(np.pi) * jp)


def _gauss_panels(f, n_panels, nodes, weights):
    edges = np.linspace(0.0, 1.0, n_panels + 1)
    mid = 0.5 * (edges[:-1] + edges[1:])
    half = 0.5 * (edges[1] - edges[0])
    r = (mid[:, None] + half * nodes[None, :]).ravel()
    w = np.broadcast_to(half * weights[None, :], (n_panels, nodes.size)).ravel()
    return float(np.dot(w, f(r)))


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(24)


@lru_cache(maxsize=500_000)
def _radial_cached(k, n, k2, n2, p, tol, max_panels):
    g1 = bessel_zero(k, n)
    g2 = bessel_zero(k2, n2)

    def f(r):
        return r ** (p + 1) * sps.jv(k, g1 * r) * sps.jv(k2, g2 * r)

    # initial panel count resolves both the oscillation and the r^p boundary layer
    n_panels = max(4, int((g1 + g2) / 6.0) + 2, p // 10 + 2)
    prev = _gauss_panels(f, n_panels, _GL_NODES, _GL_WEIGHTS)
    cur = prev
    while n_panels <= max_panels:
        n_panels *= 2
        cur = _gauss_panels(f, n_panels, _GL_NODES, _GL_WEIGHTS)
        if abs(cur - prev) <= tol:
            return cur
        prev = cur
    raise AccuracyError("radial integral did not converge to tolerance",
                        estimate=prev, achieved=abs(cur - prev))


def radial_integral(k, n, n2, p, k2=None, tol=1e-12, max_panels=4096):
    """int_0^1 r^(p+1) J_k(gamma_kn r) J_k2(gamma_k2,n2 r) dr.

    Orders may be equal or differ by one (``k2`` defaults to ``k``), which
    are the only cases the disk applications require.  Composite 24-point
    Gauss-Legendre quadrature with panel doubling until the change is below
    ``tol`` in absolute value; results are memoized.
    """
    k2 = k if k2 is None else k2
    if abs(int(k) - int(k2)) > 1:
        raise RangeError(f"orders must be equal or differ by one, got {k}, {k2}")
    if p < 0 or p != int(p):
        raise RangeError(f"power p must be a non-negative integer, got {p}")
    return _radial_cached(int(k), int(n), int(k2), int(n2), int(p), float(tol),
                          int(max_panels))
