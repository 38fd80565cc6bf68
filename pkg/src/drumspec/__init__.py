"""Helmholtz eigenvalues of conformally mapped drums and quantum billiards.

Four engines over a shared domain catalog:

* :class:`ConformalGalerkin` -- exact Galerkin assembly in the square sine
  basis for polynomial maps (``cmm``),
* :class:`SincCollocation` -- little-sinc collocation on a uniform grid with
  a universal cached Laplacian (``ccm``),
* :class:`InversePowerGround` -- inverse power iteration in basis space with
  variational bounds and degenerate-level extraction (``powermethod``),
* :class:`ShapePerturbation` -- shape perturbation theory to third order
  around the square or the disk (``perturbation``),

plus the position-dependent-mass extension in :mod:`drumspec.pdem` and the
``spectra`` command line tool (:mod:`drumspec.cli`).
"""

from . import (ccm, cmm, conformal, errors, linalg, pdem, perturbation,
               powermethod, refdata, special, spectrum, squarebasis)
from .ccm import SincCollocation
from .cmm import ConformalGalerkin
from .conformal import (ConformalMap, DomainSpec, domain_from_descriptor,
                        map_polygon, map_robnik, map_square_to_disk,
                        rescale_spectrum)
from .perturbation import ShapePerturbation
from .powermethod import InversePowerGround
from .spectrum import Spectrum

__all__ = [
    "ccm", "cmm", "conformal", "errors", "linalg", "pdem", "perturbation",
    "powermethod", "refdata", "special", "spectrum", "squarebasis",
    "SincCollocation", "ConformalGalerkin", "ShapePerturbation",
    "InversePowerGround", "ConformalMap", "DomainSpec",
    "domain_from_descriptor", "map_polygon", "map_robnik",
    "map_square_to_disk", "rescale_spectrum", "Spectrum",
]

__version__ = "0.1.0"
