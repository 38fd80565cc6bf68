"""Dense and iterative symmetric eigensolvers.

The dense paths wrap LAPACK (via scipy) behind the package's contracts:
``sym_eig`` for standard problems, ``gen_eig`` for symmetric-definite
pencils A v = w B v reduced through Cholesky.  The iterative paths,
``power_smallest`` and ``shifted_inverse_sq``, implement plain inverse
power iteration and the squared-shifted block iteration used to extract
(possibly degenerate) interior eigenspaces; both operate through caller
supplied apply/solve callbacks so they work for dense matrices, sparse
factorizations and basis-space operators alike.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg as sla
import scipy.sparse as sp

from .errors import ConvergenceError, DefinitenessError, DegeneracyError, ShiftError

SYMMETRY_RTOL = 1e-12


def symmetrize(a):
    """Return (A + A^T)/2 after checking A is numerically symmetric."""
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("expected a square matrix")
    scale = np.max(np.abs(a)) or 1.0
    if np.max(np.abs(a - a.T)) > SYMMETRY_RTOL * scale:
        raise ValueError("matrix is not symmetric to tolerance")
    return 0.5 * (a + a.T)


@dataclass
class SparseOperator:
    """Sparse symmetric operator with an optional diagonal left scaling."""

    order: int
    matrix: sp.spmatrix
    left_scaling: np.ndarray | None = None
    meta: dict = field(default_factory=dict)

    @classmethod
    def from_triplets(cls, order, rows, cols, values, left_scaling=None):
        rows = np.asarray(rows)
        cols = np.asarray(cols)
        if np.any(rows < 0) or np.any(rows >= order) or np.any(cols < 0) or np.any(cols >= order):
            raise ValueError("triplet indices out of range")
        m = sp.coo_matrix((values, (rows, cols)), shape=(order, order)).tocsr()
        m.sum_duplicates()
        return cls(order, m, left_scaling)

    def apply(self, x):
        y = self.matrix @ x
        if self.left_scaling is not None:
            y = self.left_scaling * y
        return y


def sym_eig(a, count):
    """Lowest ``count`` eigenpairs of a dense symmetric matrix, ascending."""
    a = symmetrize(a)
    n = a.shape[0]
    if not (1 <= count <= n):
        raise ValueError(f"count must be in 1..{n}")
    try:
        w, v = sla.eigh(a, subset_by_index=[0, count - 1])
    except sla.LinAlgError as exc:  # pragma: no cover - LAPACK failure path
        raise ConvergenceError(f"dense eigensolver failed: {exc}") from exc
    return w, v


def gen_eig(a, b, count):
    """Lowest ``count`` eigenpairs of A v = w B v with B positive definite.

    Reduction through the Cholesky factor of B; eigenvectors come back
    B-orthonormal.
    """
    a = symmetrize(a)
    b = symmetrize(b)
    n = a.shape[0]
    if b.shape != a.shape:
        raise ValueError("A and B must have equal shapes")
    if not (1 <= count <= n):
        raise ValueError(f"count must be in 1..{n}")
    try:
        np.linalg.cholesky(b)
    except np.linalg.LinAlgError as exc:
        raise DefinitenessError("B is not positive definite") from exc
    w, v = sla.eigh(a, b, subset_by_index=[0, count - 1])
    return w, v


def power_smallest(apply_inverse, guess, tol=1e-12, max_iter=500, orthogonal_to=()):
    """Smallest eigenvalue of an operator given its inverse application.

    ``apply_inverse`` must apply the inverse of the target operator; the
    dominant eigenpair of the inverse is then the reciprocal of the smallest
    eigenvalue of the original.  Convergence is declared when the Rayleigh
    quotient changes by less than ``tol`` relatively.  Vectors listed in
    ``orthogonal_to`` are projected out each sweep (deflation), so the
    iteration converges inside their orthogonal complement.
    """
    x = np.asarray(guess, dtype=float).copy()
    if not np.any(x):
        raise ValueError("guess must be nonzero")
    basis = [np.asarray(q, dtype=float) / np.linalg.norm(q) for q in orthogonal_to]

    def deflate(v):
        for q in basis:
            v = v - (q @ v) * q
        return v

    x = deflate(x)
    x /= np.linalg.norm(x)
    history = []
    est = None
    for it in range(1, max_iter + 1):
        y = deflate(np.asarray(apply_inverse(x), dtype=float))
        mu = x @ y
        norm = np.linalg.norm(y)
        if norm == 0 or mu == 0:
            raise ConvergenceError("iteration collapsed to zero vector",
                                   last_estimate=est, iterations=it)
        x = y / norm
        new = 1.0 / mu
        history.append(new)
        if est is not None and abs(new - est) <= tol * abs(new):
            return new, x, history
        est = new
    raise ConvergenceError(f"power iteration stagnated after {max_iter} sweeps",
                           last_estimate=est, iterations=max_iter)


def shifted_inverse_sq(apply_shifted_solve, lam, guesses, tol=1e-12, max_iter=200):
    """Orthonormal basis of the invariant subspace nearest the shift ``lam``.

    Iterates X <- solve(solve(X)), i.e. applies (O - lam)^(-2), with a QR
    re-orthonormalization of the block each sweep.  The block dimension d is
    the expected degeneracy; rank loss in the QR factor raises
    :class:`DegeneracyError`.  Returns the converged orthonormal basis; the
    caller projects the operator onto it and diagonalizes the d x d block.
    """
    x = np.atleast_2d(np.asarray(guesses, dtype=float))
    if x.shape[0] < x.shape[1]:
        x = x.T
    n, d = x.shape
    q, r = np.linalg.qr(x)
    if np.min(np.abs(np.diag(r))) < 1e-12 * np.max(np.abs(np.diag(r))):
        raise DegeneracyError("initial guesses are not linearly independent")
    x = q
    prev = None
    for it in range(1, max_iter + 1):
        y = apply_shifted_solve(apply_shifted_solve(x))
        y = np.asarray(y, dtype=float)
        if not np.all(np.isfinite(y)):
            raise ShiftError("shifted solve returned non-finite values "
                             "(shift too close to an eigenvalue)")
        # Rayleigh quotients of (O - lam)^(-2) on the block, for the stop test
        h = x.T @ y
        rq = np.sort(np.linalg.eigvalsh(0.5 * (h + h.T)))
        q, r = np.linalg.qr(y)
        diag = np.abs(np.diag(r))
        if np.min(diag) < 1e-13 * np.max(diag):
            raise DegeneracyError(
                f"block lost rank at sweep {it}; retry with d={d - 1} or d={d + 1}")
        x = q
        if prev is not None and np.all(np.abs(rq - prev) <= tol * np.abs(rq)):
            return x
        prev = rq
    raise ConvergenceError(f"subspace iteration stagnated after {max_iter} sweeps",
                           last_estimate=prev, iterations=max_iter)
