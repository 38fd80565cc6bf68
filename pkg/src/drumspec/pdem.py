"""Perturbation theory and collocation for position-dependent-mass problems.

The Hamiltonian H = Sigma^(-1/2) (-Lap) Sigma^(-1/2) + V (units hbar^2/2m = 1,
hbar = 1) is split around an exactly solvable reference H0 = -Lap + V0 by
writing Sigma = 1 + sigma and treating sigma and V - V0 as the perturbation.
To second order,

    E1 = -eps_n <n|s|n> + <n|W|n>,
    E2 =  eps_n <n|s|n>^2 + eps_n^2 sum' <n|s|k>^2 / w_nk
        - (<n|s W|n> - <n|s|n><n|W|n>)
        - 2 sum' (eps_k / w_nk) <n|s|k><k|W|n>
        + sum' <n|W|k>^2 / w_nk,

with W = V - V0 and w_nk = eps_n - eps_k; the cross term appears in its
completeness-free form (the product element <n|s W|n> is a single quadrature,
so no resolution of the identity is truncated).

Two one-dimensional references ship: the particle in a box and the harmonic
oscillator V0 = x^2 (levels 2n + 1).  The numeric cross-check is the same
sinc-collocation operator as the 2D engine, extended by the diagonal of the
potential; see :func:`assemble_with_potential`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from . import ccm, linalg
from .errors import ConformalityError, DegeneracyError, RangeError
from .perturbation import PTReport
from .validation import check_positive_int


class BoxReference:
    """Particle in the 1D box [-L, L]: eps_n = (n pi / (2L))^2, n = 1, 2, ..."""

    name = "box"

    def __init__(self, n_max=40, half_width=1.0):
        self.n_max = check_positive_int("n_max", n_max)
        self.half_width = float(half_width)
        n = np.arange(1, n_max + 1)
        self.energies = (n * np.pi / (2 * self.half_width)) ** 2

    def potential(self, x):
        return np.zeros_like(np.asarray(x, dtype=float))

    def quadrature(self, order=None):
        order = order or 2 * self.n_max + 48
        nodes, weights = np.polynomial.legendre.leggauss(order)
        return nodes * self.half_width, weights * self.half_width

    def basis(self, x):
        """psi_n(x) rows, orthonormal on [-L, L]."""
        x = np.asarray(x, dtype=float)
        n = np.arange(1, self.n_max + 1)[:, None]
        arg = n * np.pi * (x[None, :] + self.half_width) / (2 * self.half_width)
        return np.sin(arg) / math.sqrt(self.half_width)

    def basis_derivative(self, x):
        x = np.asarray(x, dtype=float)
        n = np.arange(1, self.n_max + 1)[:, None]
        scale = n * np.pi / (2 * self.half_width)
        arg = scale * (x[None, :] + self.half_width)
        return scale * np.cos(arg) / math.sqrt(self.half_width)


class OscillatorReference:
    """Harmonic oscillator V0 = x^2 on the line: eps_n = 2n + 1, n = 0, 1, ..."""

    name = "oscillator"

    def __init__(self, n_max=40):
        self.n_max = check_positive_int("n_max", n_max)
        self.energies = 2.0 * np.arange(n_max) + 1.0

    def potential(self, x):
        x = np.asarray(x, dtype=float)
        return x * x

    def quadrature(self, order=None):
        span = math.sqrt(2 * (2 * self.n_max + 1)) + 8.0
        order = order or 4 * self.n_max + 64
        nodes, weights = np.polynomial.legendre.leggauss(order)
        return nodes * span, weights * span

    def _ladder(self, x):
        x = np.asarray(x, dtype=float)
        rows = [np.pi ** -0.25 * np.exp(-0.5 * x * x)]
        if self.n_max > 1:
            rows.append(math.sqrt(2.0) * x * rows[0])
        for n in range(1, self.n_max - 1):
            rows.append(math.sqrt(2.0 / (n + 1)) * x * rows[n]
                        - math.sqrt(n / (n + 1)) * rows[n - 1])
        return rows

    def basis(self, x):
        return np.array(self._ladder(x))

    def basis_derivative(self, x):
        # d/dx psi_n = (sqrt(n) psi_{n-1} - sqrt(n+1) psi_{n+1}) / sqrt(2)
        psi = self._ladder(x)
        zero = np.zeros_like(psi[0])
        out = []
        for n in range(self.n_max):
            lower = psi[n - 1] if n >= 1 else zero
            upper = psi[n + 1] if n + 1 < self.n_max else _hermite_row(n + 1, x)
            out.append(math.sqrt(n / 2.0) * lower - math.sqrt((n + 1) / 2.0) * upper)
        return np.array(out)


def _hermite_row(n, x):
    x = np.asarray(x, dtype=float)
    a = np.pi ** -0.25 * np.exp(-0.5 * x * x)
    if n == 0:
        return a
    b = math.sqrt(2.0) * x * a
    for m in range(1, n):
        a, b = b, math.sqrt(2.0 / (m + 1)) * x * b - math.sqrt(m / (m + 1)) * a
    return b


SCALED_POTENTIAL = "v0_over_sqrt_sigma"


@dataclass
class PdemProblem:
    """Reference problem plus density perturbation and potential.

    ``potential=None`` means V = V0.  ``special_form`` may declare the shape
    V = V0/sqrt(Sigma) required by the wavefunction and uncertainty formulas;
    the potential is then implied by sigma and must not be passed separately.
    """

    reference: object
    sigma: callable
    potential: callable = None
    special_form: str = None

    def __post_init__(self):
        if self.special_form not in (None, SCALED_POTENTIAL):
            raise ValueError(f"unknown special form {self.special_form!r}")
        if self.special_form and self.potential is not None:
            raise ValueError("special_form implies the potential; do not pass one")
        e = self.reference.energies
        if np.min(np.diff(np.sort(e))) < 1e-9 * max(1.0, np.max(np.abs(e))):
            raise DegeneracyError("degenerate reference spectra are not supported")

    def potential_difference(self, x):
        """W = V - V0 on quadrature points."""
        v0 = self.reference.potential(x)
        if self.special_form == SCALED_POTENTIAL:
            return v0 / np.sqrt(1.0 + self.sigma(x)) - v0
        if self.potential is None:
            return np.zeros_like(v0)
        return self.potential(x) - v0


class PdemElements:
    """Quadrature matrix elements of sigma, W, their product, x, x^2 and p^2."""

    def __init__(self, problem, n_internal, quad_order=None):
        ref = problem.reference
        self.n_internal = check_positive_int("n_internal", n_internal,
                                             maximum=ref.n_max)
        x, w = ref.quadrature(quad_order)
        psi = ref.basis(x)[: n_internal]
        dpsi = ref.basis_derivative(x)[: n_internal]
        sig = np.asarray(problem.sigma(x), dtype=float)
        if np.any(1.0 + sig <= 0.0):
            raise ConformalityError("density 1 + sigma must stay positive")
        wdiff = problem.potential_difference(x)
        self.energies = ref.energies[: n_internal]
        self.sigma = (psi * w) @ (sig * psi).T
        self.wdiff = (psi * w) @ (wdiff * psi).T
        self.sigma_wdiff = (psi * w) @ (sig * wdiff * psi).T
        self.x1 = (psi * w) @ (x * psi).T
        self.x2 = (psi * w) @ (x * x * psi).T
        self.p2 = (dpsi * w) @ dpsi.T

    def completeness_defect(self, n):
        """|<n|s W|n> - sum_k <n|s|k><k|W|n>| at this cutoff."""
        approx = self.sigma[n] @ self.wdiff[:, n]
        return abs(self.sigma_wdiff[n, n] - approx)


def pdem_pt(problem, level, order=2, n_internal=40, quad_order=None,
            elements=None):
    """Perturbative corrections of a reference level (order <= 2)."""
    if order not in (1, 2):
        raise RangeError("order must be 1 or 2")
    el = elements or PdemElements(problem, n_internal, quad_order)
    n = _level_index(problem.reference, level)
    if n >= el.n_internal:
        raise RangeError("level outside the internal cutoff")
    eps = el.energies
    e0 = float(eps[n])
    s_nn = el.sigma[n, n]
    w_nn = el.wdiff[n, n]
    corr = [-e0 * s_nn + w_nn]
    if order >= 2:
        mask = np.ones(el.n_internal, dtype=bool)
        mask[n] = False
        omega = e0 - eps[mask]
        s_nk = el.sigma[n, mask]
        w_nk = el.wdiff[n, mask]
        e2 = e0 * s_nn ** 2 + e0 ** 2 * float(np.sum(s_nk ** 2 / omega))
        e2 -= el.sigma_wdiff[n, n] - s_nn * w_nn
        e2 -= 2.0 * float(np.sum((eps[mask] / omega) * s_nk * w_nk))
        e2 += float(np.sum(w_nk ** 2 / omega))
        corr.append(e2)
    return PTReport(str(level), 1, e0, corr, el.n_internal,
                    problem.reference.name,
                    {"completeness_defect": el.completeness_defect(n)})


def _level_index(reference, level):
    offset = 1 if isinstance(reference, BoxReference) else 0
    idx = int(level) - offset
    if idx < 0 or idx >= reference.n_max:
        raise RangeError(f"level {level} outside the reference basis")
    return idx


def pdem_wavefunction_first(problem, level, n_internal=40, quad_order=None,
                            elements=None):
    """First-order coefficients of |Psi_n> for the scaled-potential form.

    c_k = -(1/2) (eps_n + eps_k)/(eps_n - eps_k) <k|sigma|n> for k != n,
    c_n = 1.  Requires ``special_form = 'v0_over_sqrt_sigma'``.
    """
    if problem.special_form != SCALED_POTENTIAL:
        raise ValueError("wavefunction formula requires the V = V0/sqrt(Sigma) form")
    el = elements or PdemElements(problem, n_internal, quad_order)
    n = _level_index(problem.reference, level)
    eps = el.energies
    coeffs = np.zeros(el.n_internal)
    coeffs[n] = 1.0
    for k in range(el.n_internal):
        if k == n:
            continue
        coeffs[k] = -0.5 * (eps[n] + eps[k]) / (eps[n] - eps[k]) * el.sigma[k, n]
    return coeffs


def uncertainty_product(problem, level, n_internal=40, quad_order=None,
                        elements=None):
    """First-order (Delta x, Delta p, product) for the scaled-potential form."""
    if problem.special_form != SCALED_POTENTIAL:
        raise ValueError("uncertainty formula requires the V = V0/sqrt(Sigma) form")
    el = elements or PdemElements(problem, n_internal, quad_order)
    n = _level_index(problem.reference, level)
    eps = el.energies
    dx0 = math.sqrt(el.x2[n, n] - el.x1[n, n] ** 2)
    dp0 = math.sqrt(el.p2[n, n])  # <p> = 0 for real bound states
    cx = 0.0
    cp = 0.0
    for k in range(el.n_internal):
        if k == n:
            continue
        front = 0.5 * (eps[n] + eps[k]) / (eps[n] - eps[k]) * el.sigma[k, n]
        cx += front * (el.x2[n, k] - el.x1[n, n] * el.x1[n, k]) / dx0 ** 2
        cp += front * el.p2[n, k] / dp0 ** 2
    dx = dx0 * (1.0 - cx)
    dp = dp0 * (1.0 - cp)
    product = dx0 * dp0 * (1.0 - cx - cp)
    return dx, dp, product


def assemble_with_potential(sigma_values, v_values, n_grid, half_width=1.0):
    """Sinc-collocation operator with density scaling and a potential diagonal.

    1D inputs of length N-1 build Sigma^(-1/2)(-d2/L^2)Sigma^(-1/2) + diag(V)
    on the interior grid of [-L, L]; (N-1)x(N-1) inputs build the 2D
    analogue on [-L, L]^2 (x-major flattening).  The caller chooses the box
    half-width L and samples sigma-density and potential at the physical
    nodes ``half_width * grid_nodes(n_grid)``.
    """
    sig = np.asarray(sigma_values, dtype=float)
    v = np.asarray(v_values, dtype=float)
    if sig.shape != v.shape:
        raise ValueError("sigma and potential grids must have equal shapes")
    if np.any(sig <= 0.0):
        raise ConformalityError("density must be positive on the grid")
    m = n_grid - 1
    if sig.ndim == 1:
        if sig.shape != (m,):
            raise ValueError(f"expected {m} grid values")
        lap = sp.csr_matrix(-ccm.d2_matrix(n_grid)) / half_width ** 2
    elif sig.ndim == 2:
        if sig.shape != (m, m):
            raise ValueError(f"expected a {m} x {m} grid")
        lap = ccm.laplacian_2d(n_grid) / half_width ** 2
        sig = sig.ravel()
        v = v.ravel()
    else:
        raise ValueError("grids must be 1D or 2D")
    d = sp.diags(1.0 / np.sqrt(sig))
    mat = (d @ lap @ d + sp.diags(v)).tocsr()
    return linalg.SparseOperator(mat.shape[0], mat, meta={"n_grid": n_grid,
                                                          "half_width": half_width})


def solve_lowest(operator, count):
    """Lowest eigenvalues of an assembled operator (dense path)."""
    w, _ = linalg.sym_eig(operator.matrix.toarray(), count)
    return w
