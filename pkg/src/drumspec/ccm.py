"""Collocation solution of the mapped Helmholtz problem on a uniform grid.

The discrete basis is the little sinc functions (LSF): trigonometric cardinal
functions on the uniform interior grid x_k = k h, h = 2/N, k = -N/2+1 ..
N/2-1, satisfying Dirichlet conditions at x = +-1 and s_k(x_j) = delta_kj.
Their second derivatives at the nodes are known in closed form, so the 2D
negative Laplacian becomes a universal sparse matrix (a Kronecker sum) that
depends only on N and is cached and shared across maps.  A specific domain
enters solely through the diagonal of grid values of Sigma: no integrals are
computed at assembly time.

The raw collocation operator -(1/Sigma) Lap is similar to the manifestly
symmetric Sigma^(-1/2) (-Lap) Sigma^(-1/2) and shares its (real) spectrum;
the symmetric form is the default solve path.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla
import scipy.sparse as sp
import scipy.sparse.linalg as spla
from sklearn.base import BaseEstimator

from . import conformal
from .errors import ConformalityError, RangeError
from .spectrum import build_spectrum
from .validation import check_positive_int

DENSE_ORDER_LIMIT = 4000


def grid_nodes(n_grid):
    """Interior nodes k h, k = -N/2+1 .. N/2-1 (N even)."""
    if n_grid < 4 or n_grid % 2:
        raise RangeError("grid parameter N must be even and >= 4")
    h = 2.0 / n_grid
    return np.arange(-n_grid // 2 + 1, n_grid // 2) * h


def lsf(k, h, n_grid, x):
    """Little sinc function s_k(h, N, x) on (-1, 1).

    Evaluated through its trigonometric closed form; at the grid points the
    removable singularities are resolved by the cardinal property
    s_k(x_j) = delta_kj.
    """
    x = np.asarray(x, dtype=float)
    d1 = np.sin(np.pi / (2 * n_grid * h) * (x - k * h))
    d2 = np.cos(np.pi / (2 * n_grid * h) * (x + k * h))
    tiny = 1e-9
    safe1 = np.where(np.abs(d1) < tiny, 1.0, d1)
    safe2 = np.where(np.abs(d2) < tiny, 1.0, d2)
    t1 = np.sin((1 + 1 / (2 * n_grid)) * np.pi / h * (x - k * h)) / safe1
    t2 = np.cos((1 + 1 / (2 * n_grid)) * np.pi / h * (x + k * h)) / safe2
    val = (t1 - t2) / (2 * n_grid)
    if np.any(np.abs(d1) < tiny) or np.any(np.abs(d2) < tiny):
        # limit values: 1 at the own node, 0 at the others
        near = np.abs(d1) < tiny
        val = np.where(near, np.where(np.abs(x - k * h) < h / 2, 1.0, 0.0), val)
        val = np.where((np.abs(d2) < tiny) & ~near, 0.0, val)
    return float(val) if val.ndim == 0 else val


def d2_matrix(n_grid):
    """Closed-form second-derivative collocation matrix c2[k, j] = s_k''(x_j).

    Derived by differentiating the cardinal series twice and summing the
    resulting trigonometric sums: with A = N - 1/2, phi = pi p / (2N),

        U(p) = sum_{m=1}^{N-1} m^2 cos(m pi p / N)
             = (-1)^(p+1) [A^2/2 - A cos^2(phi)/(2 sin^2(phi))
                            - (1 + cos^2(phi))/(8 sin^2(phi))],  p != 0,
        U(0) = (N-1) N (2N-1)/6,

        c2[k, j] = -(pi^2/(4N)) (U(k - j) - U(k + j + N)).
    """
    n_grid = check_positive_int("n_grid", n_grid, minimum=4)
    if n_grid % 2:
        raise RangeError("grid parameter N must be even")
    n = n_grid
    a_const = n - 0.5

    def u(p):
        if p % (2 * n) == 0:
            return (n - 1) * n * (2 * n - 1) / 6.0
        phi = np.pi * p / (2 * n)
        s2 = np.sin(phi) ** 2
        c2_ = np.cos(phi) ** 2
        sgn = 1.0 if (p + 1) % 2 == 0 else -1.0
        return sgn * (a_const * a_const / 2 - a_const * c2_ / (2 * s2) - (1 + c2_) / (8 * s2))

    idx = np.arange(-n // 2 + 1, n // 2)
    out = np.empty((n - 1, n - 1))
    for i, k in enumerate(idx):
        for j, l in enumerate(idx):
            out[i, j] = -(np.pi ** 2 / (4 * n)) * (u(k - l) - u(k + l + n))
    return out


_LAPLACIAN_CACHE: dict = {}
_CACHE_LOCK = threading.Lock()


def laplacian_2d(n_grid):
    """Universal sparse 2D negative Laplacian for grid size N (cached).

    Kronecker sum kron(-c2, I) + kron(I, -c2) with x-major point folding
    K = (k + N/2 - 1)(N - 1) + (k' + N/2 - 1), matching exact integer
    folding/unfolding of the grid points.
    """
    with _CACHE_LOCK:
        hit = _LAPLACIAN_CACHE.get(n_grid)
        if hit is None:
            c2 = sp.csr_matrix(-d2_matrix(n_grid))
            eye = sp.identity(n_grid - 1, format="csr")
            hit = (sp.kron(c2, eye) + sp.kron(eye, c2)).tocsr()
            _LAPLACIAN_CACHE[n_grid] = hit
        return hit


def fold_grid_index(k, kp, n_grid):
    """Single integer K (1-based) for grid point (k, k')."""
    m = n_grid - 1
    a = k + n_grid // 2 - 1
    b = kp + n_grid // 2 - 1
    if not (0 <= a < m and 0 <= b < m):
        raise RangeError("grid indices out of range")
    return a * m + b + 1


def unfold_grid_index(big_k, n_grid):
    """Inverse of :func:`fold_grid_index`, by exact integer division."""
    m = n_grid - 1
    if not (1 <= big_k <= m * m):
        raise RangeError("folded index out of range")
    a, b = divmod(big_k - 1, m)
    return a - n_grid // 2 + 1, b - n_grid // 2 + 1


@dataclass
class CollocationOperator:
    n_grid: int
    matrix: sp.spmatrix
    laplacian: sp.spmatrix          # the shared universal part
    sigma_values: np.ndarray        # Sigma at the (N-1)^2 nodes, x-major
    symmetrized: bool

    @property
    def order(self):
        return (self.n_grid - 1) ** 2


def assemble_operator(domain, n_grid, symmetrized=True):
    """Collocation operator for a domain on the N-grid.

    ``domain`` may be a ConformalMap over the square, a DomainSpec (disk maps
    are composed with the square-to-disk map numerically) or a JSON
    descriptor.  With ``symmetrized`` the operator is
    Sigma^(-1/2) (-Lap) Sigma^(-1/2); otherwise diag(1/Sigma) (-Lap).
    """
    spec = conformal.domain_from_descriptor(domain)
    nodes = grid_nodes(n_grid)
    gx, gy = np.meshgrid(nodes, nodes, indexing="ij")
    sig = np.asarray(spec.sigma_on_square(gx, gy), dtype=float).ravel()
    if np.any(sig <= 0.0):
        raise ConformalityError("Sigma is non-positive at a collocation node")
    lap = laplacian_2d(n_grid)
    if symmetrized:
        d = sp.diags(1.0 / np.sqrt(sig))
        mat = (d @ lap @ d).tocsr()
    else:
        mat = (sp.diags(1.0 / sig) @ lap).tocsr()
    return CollocationOperator(n_grid, mat, lap, sig, symmetrized)


def solve(operator, count):
    """Lowest ``count`` eigenvalues of a symmetrized collocation operator.

    Dense LAPACK below DENSE_ORDER_LIMIT, shift-inverted Lanczos above
    (deterministic start vector).
    """
    if not operator.symmetrized:
        raise ValueError("solve expects the symmetrized operator")
    count = check_positive_int("count", count, maximum=operator.order - 1)
    if operator.order <= DENSE_ORDER_LIMIT:
        w = sla.eigh(operator.matrix.toarray(), eigvals_only=True,
                     subset_by_index=[0, count - 1])
    else:
        v0 = np.ones(operator.order)
        w = spla.eigsh(operator.matrix, k=count, sigma=0.0, which="LM",
                       v0=v0, return_eigenvectors=False)
        w = np.sort(w)
    return build_spectrum(w, "ccm", n=operator.n_grid)


class SincCollocation(BaseEstimator):
    """Estimator interface for the collocation engine.

    Parameters
    ----------
    n_grid : even grid parameter N ((N-1)^2 interior points).
    count : number of eigenvalues to return.
    symmetrized : solve the symmetric similarity transform (default).

    After ``fit``: ``operator_``, ``spectrum_``, ``eigenvalues_``.
    """

    def __init__(self, n_grid=40, count=6, symmetrized=True):
        self.n_grid = n_grid
        self.count = count
        self.symmetrized = symmetrized

    def fit(self, domain, y=None):
        spec = conformal.domain_from_descriptor(domain)
        self.operator_ = assemble_operator(spec, self.n_grid, self.symmetrized)
        raw = solve(self.operator_, self.count)
        self.spectrum_ = conformal.rescale_spectrum(raw, spec.scale_sq)
        self.eigenvalues_ = self.spectrum_.eigenvalues
        return self

    def predict(self, indices=None):
        if indices is None:
            return self.eigenvalues_
        return self.eigenvalues_[np.asarray(indices)]
