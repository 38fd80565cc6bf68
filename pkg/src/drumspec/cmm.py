"""Galerkin solution of the mapped Helmholtz problem in the square basis.

For a polynomial map over the side-2 square the density Sigma is a bivariate
polynomial, so every Galerkin element <a|Sigma|b> follows exactly from the
moment-integral tables; no numerical quadrature appears anywhere in this
engine.  The discrete problem is the symmetric-definite pencil

    diag(eps) c = E Sigma c,

whose lowest eigenvalues decrease monotonically with the basis cutoff and
bound the true ones from above.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from sklearn.base import BaseEstimator

from . import conformal, linalg, squarebasis
from .errors import UnsupportedMapError
from .spectrum import build_spectrum
from .validation import check_positive_int


@dataclass
class CmmProblem:
    cmap: conformal.ConformalMap
    n_basis: int
    matrix: np.ndarray          # <a|Sigma|b>, order n_basis^2
    energies: np.ndarray        # box energies eps_k, folded ordering
    labels: list = field(default_factory=list)


def assemble(cmap, n_basis, table=None):
    """Build the Galerkin matrix of Sigma for a polynomial square map."""
    if isinstance(cmap, conformal.DomainSpec):
        cmap = cmap.over_square()
    if cmap.reference != conformal.SQUARE2:
        raise UnsupportedMapError("Galerkin assembly needs a map over the square; "
                                  "compose disk maps with the square-to-disk map first")
    n_basis = check_positive_int("n_basis", n_basis)
    kappa = conformal.sigma_polynomial(cmap)
    mat = squarebasis.sigma_matrix(kappa, n_basis, table)
    labels = [squarebasis.unfold_index(k, n_basis) for k in range(1, n_basis * n_basis + 1)]
    energies = np.array([squarebasis.box_energy(nx, ny) for nx, ny in labels])
    return CmmProblem(cmap, n_basis, mat, energies, labels)


def solve(problem, count):
    """Lowest ``count`` eigenvalues of diag(eps) c = E Sigma c, ascending."""
    count = check_positive_int("count", count, maximum=problem.n_basis ** 2)
    w, v = linalg.gen_eig(np.diag(problem.energies), problem.matrix, count)
    labels = [_dominant_label(problem, v[:, i]) for i in range(count)]
    return build_spectrum(w, "cmm", n=problem.n_basis,
                          labels=labels, vectors=v)


def _dominant_label(problem, vec):
    nx, ny = problem.labels[int(np.argmax(np.abs(vec)))]
    return f"({nx},{ny})"


class ConformalGalerkin(BaseEstimator):
    """Estimator interface for the Galerkin engine.

    Parameters
    ----------
    n_basis : sine modes per direction (matrix order is n_basis^2).
    count : number of eigenvalues to return.

    After ``fit`` the instance carries ``spectrum_``, ``eigenvalues_`` and
    ``problem_``.
    """

    def __init__(self, n_basis=20, count=6):
        self.n_basis = n_basis
        self.count = count

    def fit(self, domain, y=None):
        spec = conformal.domain_from_descriptor(domain)
        self.problem_ = assemble(spec, self.n_basis)
        raw = solve(self.problem_, self.count)
        self.spectrum_ = conformal.rescale_spectrum(raw, spec.scale_sq)
        self.eigenvalues_ = self.spectrum_.eigenvalues
        return self

    def predict(self, indices=None):
        if indices is None:
            return self.eigenvalues_
        return self.eigenvalues_[np.asarray(indices)]
