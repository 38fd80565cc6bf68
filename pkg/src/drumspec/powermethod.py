"""Inverse power iteration in the square basis, with variational bounds.

The inverse of the symmetrized operator factorizes as
sqrt(Sigma) (-Lap)^(-1) sqrt(Sigma), so one application in coefficient space
is c <- S D S c with S the matrix of <k|sqrt(Sigma)|l> over the sine basis
and D = diag(1/eps).  Repeated application amplifies the lowest mode
(worst-case rate governed by the disk ratio E1/E0 <= (j_11/j_01)^2 ~ 2.539);
a squared, shifted variant extracts interior, possibly degenerate,
eigenspaces.  The same matrices yield a variational upper bound on the
ground energy from a single application, minimized in closed form as a small
generalized eigenproblem.

sqrt(Sigma) = |f'| is generally not polynomial, so S (and the Sigma matrix
entering the bound's denominator) are built once per cutoff by tensor-product
Gauss-Legendre quadrature with an internal accuracy check.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np
import scipy.linalg as sla
from sklearn.base import BaseEstimator

from . import conformal, linalg, squarebasis
from .errors import AccuracyError, DegeneracyError, ShiftError
from .spectrum import build_spectrum
from .validation import check_positive_int

SLOW_GAP_RATIO = 1.05


def _sigma_source(domain):
    """Normalize a domain argument into (sigma_on_square callable, scale_sq)."""
    if callable(domain) and not isinstance(domain, conformal.ConformalMap):
        return domain, 1.0
    spec = conformal.domain_from_descriptor(domain)
    return spec.sigma_on_square, spec.scale_sq


def _basis_products(n_internal, nodes):
    """phi_a(x_i) phi_b(x_i) stacked as (n_quad, n_internal^2) per direction."""
    phis = np.array([np.sin((k * np.pi / 2) * (nodes + 1))
                     for k in range(1, n_internal + 1)])
    prod = phis[:, None, :] * phis[None, :, :]
    return prod.reshape(n_internal * n_internal, -1).T


def _project(weighted, products):
    """(A^T W A reshaped) -> matrix indexed by folded (kx, ky) pairs."""
    n2 = products.shape[1]
    n = int(round(np.sqrt(n2)))
    t = products.T @ weighted @ products
    t = t.reshape(n, n, n, n).transpose(0, 2, 1, 3)
    return np.ascontiguousarray(t.reshape(n2, n2))


class BasisOperators:
    """Quadrature-assembled <k|sqrt(Sigma)|l> and <k|Sigma|l> at a cutoff.

    ``domain`` may be anything :func:`conformal.domain_from_descriptor`
    accepts, or a callable sigma(x, y) on the square.  The quadrature order
    defaults to one resolving the highest basis product; the build is
    verified against a finer rule and fails with AccuracyError if the two
    disagree beyond ``quad_tol``.
    """

    def __init__(self, domain, n_internal, quad_order=None, quad_tol=1e-12,
                 verify=True):
        self.n_internal = check_positive_int("n_internal", n_internal)
        sigma_fn, self.scale_sq = _sigma_source(domain)
        order = quad_order or max(64, 2 * n_internal + 48)
        self.sqrt_sigma, self.sigma = self._build(sigma_fn, order)
        if verify:
            finer_s, finer_sig = self._build(sigma_fn, order + 24)
            err = max(np.max(np.abs(finer_s - self.sqrt_sigma)),
                      np.max(np.abs(finer_sig - self.sigma)))
            if err > quad_tol:
                raise AccuracyError("basis quadrature not converged",
                                    estimate=None, achieved=err)
            self.sqrt_sigma, self.sigma = finer_s, finer_sig
        nx = np.arange(1, n_internal + 1)
        self.energies = (np.pi ** 2 / 4.0) * (nx[:, None] ** 2 + nx[None, :] ** 2).ravel()
        self.labels = [(a, b) for a in nx for b in nx]

    def _build(self, sigma_fn, order):
        nodes, weights = np.polynomial.legendre.leggauss(order)
        gx, gy = np.meshgrid(nodes, nodes, indexing="ij")
        sig = np.asarray(sigma_fn(gx, gy), dtype=float)
        prod = _basis_products(self.n_internal, nodes)
        w2 = weights[:, None] * weights[None, :]
        s_mat = _project(w2 * np.sqrt(sig), prod)
        sig_mat = _project(w2 * sig, prod)
        return 0.5 * (s_mat + s_mat.T), 0.5 * (sig_mat + sig_mat.T)

    def inverse_apply(self, coeffs):
        """One application of sqrt(Sigma) (-Lap)^(-1) sqrt(Sigma)."""
        return self.sqrt_sigma @ ((self.sqrt_sigma @ coeffs) / self.energies)

    def inverse_matrix(self):
        return (self.sqrt_sigma / self.energies[None, :]) @ self.sqrt_sigma


@dataclass
class BasisState:
    coeffs: np.ndarray
    n_internal: int
    generation: int = 0

    def normalized(self):
        return BasisState(self.coeffs / np.linalg.norm(self.coeffs),
                          self.n_internal, self.generation)


def apply_inverse(state, ops):
    """Advance a basis state by one inverse application (generation += 1)."""
    return BasisState(ops.inverse_apply(state.coeffs), state.n_internal,
                      state.generation + 1)


def box_ground_state(n_internal):
    c = np.zeros(n_internal * n_internal)
    c[0] = 1.0  # label (1,1) in folded ordering
    return BasisState(c, n_internal)


@dataclass
class GroundResult:
    energy: float
    state: BasisState
    history: list = field(default_factory=list)
    slow_gap: bool = False


def iterate_ground(ops, tol=1e-12, max_iter=500, guess=None):
    """Ground energy by repeated inverse application (deterministic start).

    Stops when the Rayleigh-quotient estimate changes by less than ``tol``
    relative; emits a warning when the estimated gap ratio E1/E0 falls below
    SLOW_GAP_RATIO (a dilatation of the domain is the usual cure).
    """
    state = guess or box_ground_state(ops.n_internal)
    energy, x, history = linalg.power_smallest(ops.inverse_apply,
                                               state.coeffs, tol, max_iter)
    slow = False
    if len(history) >= 3:
        d1 = abs(history[-1] - history[-2])
        d2 = abs(history[-2] - history[-3])
        if d2 > 0 and d1 > 0:
            # contraction per sweep is (E0/E1)^2, so (d2/d1)^(1/2) estimates E1/E0
            slow = (d2 / d1) ** 0.5 < SLOW_GAP_RATIO
    if slow:
        warnings.warn("spectral gap ratio close to 1; convergence is slow "
                      "(consider a dilatation of the domain)", RuntimeWarning)
    final = BasisState(x, ops.n_internal, len(history))
    return GroundResult(energy, final, history, slow)


def energy_first_order(coeffs, ops):
    """Variational upper bound after one inverse application of ``coeffs``.

    Numerator and denominator are the quadratic forms
    c' S D S c  and  c' S D Sigma D S c (D = diag(1/eps)); the quotient
    bounds the true ground energy from above.
    """
    c = np.zeros(len(ops.energies))
    c[: len(coeffs)] = coeffs
    d = 1.0 / ops.energies
    t = d * (ops.sqrt_sigma @ c)
    num = (ops.sqrt_sigma @ c) @ t
    den = t @ (ops.sigma @ t)
    return num / den


def variational_optimize(ops, n_basis):
    """Minimize the first-order bound over coefficients with nx, ny <= n_basis.

    The quotient of two quadratic forms is minimized by the smallest
    eigenvalue of the corresponding (restricted) symmetric-definite pencil.
    Returns (coefficients over the restricted block, bound).
    """
    n_basis = check_positive_int("n_basis", n_basis, maximum=ops.n_internal)
    rows = [squarebasis.fold_index(nx, ny, ops.n_internal) - 1
            for nx in range(1, n_basis + 1) for ny in range(1, n_basis + 1)]
    s_rows = ops.sqrt_sigma[rows, :]
    d = 1.0 / ops.energies
    a = (s_rows * d[None, :]) @ s_rows.T
    b = (s_rows * d[None, :]) @ ops.sigma @ (d[:, None] * s_rows.T)
    w, v = linalg.gen_eig(a, b, 1)
    return v[:, 0], float(w[0])


def excited_subspace(ops, lam, degeneracy, tol=1e-11, max_iter=200, guesses=None):
    """Eigenvalues and states of the d-fold level nearest the shift ``lam``.

    Block iteration with (O - lam)^(-2) in coefficient space: with
    M = S D S (the inverse of O at this cutoff), each application solves
    (I - lam M) y = M x, so only M is ever formed.  The converged block is
    orthonormalized and O is diagonalized inside it.
    """
    degeneracy = check_positive_int("degeneracy", degeneracy)
    m = ops.inverse_matrix()
    ident = np.eye(len(m))
    try:
        lu = sla.lu_factor(ident - lam * m)
    except sla.LinAlgError as exc:
        raise ShiftError(f"shift {lam} is singular at this cutoff") from exc

    def shifted_solve(x):
        return sla.lu_solve(lu, m @ x)

    if guesses is None:
        # box states nearest the shift: deterministic, nonzero overlap
        nearest = np.argsort(np.abs(ops.energies - lam))[:degeneracy]
        guesses = np.zeros((len(m), degeneracy))
        for i, j in enumerate(nearest):
            guesses[j, i] = 1.0
    basis = linalg.shifted_inverse_sq(shifted_solve, lam, guesses, tol, max_iter)
    cho = sla.cho_factor(m)
    projected = basis.T @ sla.cho_solve(cho, basis)
    w, rot = np.linalg.eigh(0.5 * (projected + projected.T))
    states = basis @ rot
    if not np.all(np.isfinite(w)):
        raise DegeneracyError("projected block is ill-conditioned")
    return w, states


class InversePowerGround(BaseEstimator):
    """Estimator interface for the ground-state inverse iteration.

    After ``fit``: ``energy_``, ``state_``, ``history_``, ``spectrum_``.
    """

    def __init__(self, n_internal=36, tol=1e-12, max_iter=500, quad_order=None):
        self.n_internal = n_internal
        self.tol = tol
        self.max_iter = max_iter
        self.quad_order = quad_order

    def fit(self, domain, y=None):
        spec = conformal.domain_from_descriptor(domain)
        self.operators_ = BasisOperators(spec, self.n_internal, self.quad_order)
        res = iterate_ground(self.operators_, self.tol, self.max_iter)
        self.energy_ = res.energy / spec.scale_sq
        self.state_ = res.state
        self.history_ = res.history
        self.spectrum_ = build_spectrum([self.energy_], "power",
                                        n=self.n_internal, n_int=self.n_internal,
                                        labels=["ground"])
        return self

    def predict(self, indices=None):
        return np.array([self.energy_])
