"""Conformal maps of the reference domains and the domain catalog.

A :class:`ConformalMap` is a truncated Taylor series f(z) = sum a_j z^j about
the origin of a reference domain Omega (the side-2 square or the unit disk).
f sends Omega onto the physical billiard, and every engine in this package
consumes the induced density

    Sigma(x, y) = |f'(x + i y)|^2

on Omega.  The catalog covers the four families used throughout:

* the Riemann map of the side-2 square onto the unit disk (frozen Taylor
  table, exponents 1 mod 4),
* quadratic disk deformations f(z) = z + lambda z^2 of constant area
  (the Robnik family), handled in rescaled form with the dilatation
  cos^2 p = 1/(1 + 2 lambda^2) pulled out,
* the Schwarz-Christoffel series sending the disk onto a regular polygon
  inscribed in the circle, again rescaled, with its Gamma-function scale
  constant,
* arbitrary user polynomials over the square.

Maps whose reference is the disk can still feed the square-based collocation
and Galerkin engines by composition with the square-to-disk map; see
:meth:`DomainSpec.over_square` and :meth:`DomainSpec.sigma_on_square`.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
import scipy.signal

from .errors import ConformalityError, DomainError, RangeError, UnsupportedMapError

SQUARE2 = "square2"
UNIT_DISK = "unit_disk"

# Taylor coefficients of the Riemann map of the square [-1,1]^2 onto the unit
# disk (origin and derivative-sign fixed, so the map is unique).  Derived once
# by inverting the disk-to-square Schwarz-Christoffel integral
#   g(w) = sqrt(2)/ell * int_0^w (1 + t^4)^(-1/2) dt,
#   ell  = Gamma(1/4) Gamma(1/2) / (4 Gamma(3/4)),
# and frozen after validation (corner images on the unit circle to 1e-18,
# reference circle spectra reproduced).  Only exponents 1 mod 4 occur.
SQUARE_TO_DISK_COEFFS = {
    1: "0.927037338650685959216925173598",
    5: "0.0684677622187698947923002338537",
    9: "0.00421399285282044652731477815444",
    13: "0.000263349218875211306815898660311",
    17: "0.0000164597431422106850906034830072",
    21: "0.00000102873347660399536574879354573",
    25: "0.0000000642958403131994664938558876195",
    29: "0.00000000401849002525509525938851280013",
    33: "2.51155626582815800220393351407e-10",
    37: "1.56972266613843532003487756921e-11",
    41: "9.81076666336553026324329058193e-13",
    45: "6.13172916460347810205297783071e-14",
    49: "3.8323307278771733167064296854e-15",
    53: "2.3952067049232333163458444999e-16",
    57: "1.49700419057702082311916483667e-17",
}
MAX_SQUARE_TO_DISK_ORDER = max(SQUARE_TO_DISK_COEFFS)
TAIL_TOLERANCE = 1e-10


@dataclass(frozen=True)
class ConformalMap:
    """Truncated Taylor series of an analytic map on a reference domain."""

    coeffs: tuple          # complex Taylor coefficients a_0, a_1, ...
    reference: str = SQUARE2
    scale: float = 1.0     # dilatation factor pulled out of the full map
    name: str = "polynomial"
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(complex(c) for c in self.coeffs))
        if self.reference not in (SQUARE2, UNIT_DISK):
            raise ValueError(f"unknown reference domain {self.reference!r}")

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def derivative_coeffs(self):
        a = np.asarray(self.coeffs)
        return a[1:] * np.arange(1, len(a))

    def evaluate(self, z):
        a = np.asarray(self.coeffs)
        return np.polyval(a[::-1], z)

    def derivative(self, z):
        b = self.derivative_coeffs()
        return np.polyval(b[::-1], z)

    def contains(self, x, y):
        if self.reference == SQUARE2:
            return (np.abs(x) <= 1.0 + 1e-14) & (np.abs(y) <= 1.0 + 1e-14)
        return x * x + y * y <= 1.0 + 1e-14

    def is_real(self):
        return all(abs(c.imag) == 0.0 for c in self.coeffs)


def sigma(cmap: ConformalMap, x, y):
    """Density Sigma = |f'(x+iy)|^2, evaluated by Horner on the derivative series."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if not np.all(cmap.contains(x, y)):
        raise DomainError("evaluation point outside the reference domain")
    val = np.abs(cmap.derivative(x + 1j * y)) ** 2
    if np.any(val <= 0.0):
        raise ConformalityError("Sigma <= 0 inside the reference domain; "
                                "the truncated map is not conformal there")
    return float(val) if val.ndim == 0 else val


def sigma_polynomial(cmap: ConformalMap):
    """Bivariate coefficients kappa[n, m] with Sigma = sum kappa_nm x^n y^m.

    Exact (up to float rounding) for polynomial maps; the total degree is
    2 (deg f - 1).
    """
    b = cmap.derivative_coeffs()
    deg = len(b) - 1
    # coefficients of f'(x+iy) as a bivariate polynomial
    p = np.zeros((deg + 1, deg + 1), dtype=complex)
    zpow = np.zeros((deg + 1, deg + 1), dtype=complex)
    zpow[0, 0] = 1.0
    for j in range(deg + 1):
        if b[j] != 0:
            p += b[j] * zpow
        if j < deg:
            nxt = np.zeros_like(zpow)
            nxt[1:, :] += zpow[:-1, :]
            nxt[:, 1:] += 1j * zpow[:, :-1]
            zpow = nxt
    kappa = scipy.signal.convolve2d(p, np.conj(p)).real
    kappa[np.abs(kappa) < 1e-300] = 0.0
    return kappa


def map_square_to_disk(truncation_order=37):
    """Riemann map of the side-2 square onto the unit disk, truncated.

    ``truncation_order`` must be odd; exponents congruent to 1 mod 4 up to it
    are retained from the frozen coefficient table.
    """
    if truncation_order % 2 == 0 or truncation_order < 1:
        raise RangeError("truncation order must be odd and positive")
    if truncation_order > MAX_SQUARE_TO_DISK_ORDER:
        raise RangeError(f"truncation order {truncation_order} exceeds the frozen "
                         f"table ({MAX_SQUARE_TO_DISK_ORDER})")
    coeffs = [0.0] * (truncation_order + 1)
    for j, s in SQUARE_TO_DISK_COEFFS.items():
        if j <= truncation_order:
            coeffs[j] = float(s)
    return ConformalMap(coeffs, SQUARE2, 1.0, "square_to_disk",
                        {"truncation_order": truncation_order})


def polygon_coefficient(sides, k):
    """Series coefficient f_k of the rescaled polygon map (f_0 = 1)."""
    if k == 0:
        return 1.0
    prod = 1.0
    for j in range(k):
        prod *= 2.0 / sides + j
    return prod / (math.factorial(k) * (sides * k + 1))


def polygon_scale(sides):
    """Scale constant C_N = Gamma(1-1/N) / (Gamma(1+1/N) Gamma(1-2/N))."""
    n = float(sides)
    return math.gamma(1 - 1 / n) / (math.gamma(1 + 1 / n) * math.gamma(1 - 2 / n))


def map_polygon(sides, k_max=40):
    """Rescaled disk-to-polygon map fbar(z) = sum f_k z^(N k + 1) and C_N.

    Physical eigenvalues are recovered from the rescaled ones through
    E = Ebar / C_N^2.
    """
    if sides < 3:
        raise RangeError("a polygon needs at least 3 sides")
    if k_max < 1:
        raise RangeError("k_max must be >= 1")
    coeffs = [0.0] * (sides * k_max + 2)
    for k in range(k_max + 1):
        coeffs[sides * k + 1] = polygon_coefficient(sides, k)
    cn = polygon_scale(sides)
    return ConformalMap(coeffs, UNIT_DISK, cn, "polygon",
                        {"sides": sides, "k_max": k_max}), cn


def map_robnik(lam):
    """Rescaled quadratic disk deformation fbar(z) = z + lambda z^2.

    Returns the map and the dilatation factor cos^2 p = 1/(1 + 2 lambda^2);
    physical eigenvalues are Ebar / cos^2 p.  Univalence on the disk requires
    |lambda| < 1/2.
    """
    lam = float(lam)
    if abs(lam) >= 0.5:
        raise ConformalityError(f"|lambda| = {abs(lam)} >= 1/2: map not univalent on the disk")
    cos2p = 1.0 / (1.0 + 2.0 * lam * lam)
    return ConformalMap([0.0, 1.0, lam], UNIT_DISK, math.sqrt(cos2p), "robnik",
                        {"lambda": lam}), cos2p


def compose_polynomial(outer: ConformalMap, inner: ConformalMap):
    """Polynomial composition outer(inner(z)) over the inner map's reference."""
    out = np.zeros(1, dtype=complex)
    power = np.ones(1, dtype=complex)
    inner_c = np.asarray(inner.coeffs)
    for j, c in enumerate(outer.coeffs):
        if j > 0:
            power = np.convolve(power, inner_c)
        if c != 0:
            if len(out) < len(power):
                out = np.pad(out, (0, len(power) - len(out)))
            out[: len(power)] += c * power
    return ConformalMap(out, inner.reference, outer.scale * inner.scale,
                        f"{outer.name}_o_{inner.name}",
                        {"outer": outer.params, "inner": inner.params})


def rescale_spectrum(spectrum, scale_sq):
    """Divide every eigenvalue by ``scale_sq`` (dilatation law E = Ebar / s)."""
    return spectrum.rescaled(scale_sq)


@lru_cache(maxsize=2)
def _square_to_disk_cached(order=37):
    return map_square_to_disk(order)


@dataclass
class DomainSpec:
    """A billiard domain: catalog kind, map over its reference, energy scale.

    ``scale_sq`` is the factor dividing the rescaled eigenvalues (1 for maps
    stored at physical size).
    """

    kind: str
    cmap: ConformalMap
    scale_sq: float = 1.0
    params: dict = field(default_factory=dict)

    @property
    def reference(self):
        return self.cmap.reference

    def over_square(self):
        """A polynomial map over the square equivalent to this domain.

        Disk-referenced maps are composed with the square-to-disk map; the
        result feeds the Galerkin and collocation engines.  Raises for maps
        whose composition would not be a manageable polynomial.
        """
        if self.reference == SQUARE2:
            return self.cmap
        if self.kind == "robnik":
            return compose_polynomial(self.cmap, _square_to_disk_cached())
        raise UnsupportedMapError(
            f"domain kind {self.kind!r} has no polynomial square representation; "
            "use the collocation grid path or the disk-basis perturbation engine")

    def sigma_on_square(self, x, y):
        """Sigma of the (possibly composed) map, evaluated on square points."""
        if self.reference == SQUARE2:
            return sigma(self.cmap, x, y)
        z = np.asarray(x, float) + 1j * np.asarray(y, float)
        inner = _square_to_disk_cached()
        w = inner.evaluate(z)
        val = np.abs(self.cmap.derivative(w)) ** 2 * np.abs(inner.derivative(z)) ** 2
        if np.any(val <= 0.0):
            raise ConformalityError("composed density non-positive on the square")
        return val


def domain_from_descriptor(desc):
    """Build a :class:`DomainSpec` from a JSON descriptor (dict or string).

    Kinds: ``polynomial`` (coeffs over the square), ``square_to_disk``
    (truncation_order), ``robnik`` (lambda), ``polygon`` (sides, k_max).
    """
    if isinstance(desc, str):
        desc = json.loads(desc)
    if isinstance(desc, DomainSpec):
        return desc
    if isinstance(desc, ConformalMap):
        return DomainSpec("polynomial", desc, 1.0, dict(desc.params))
    if not isinstance(desc, dict) or "kind" not in desc:
        raise ValueError("domain descriptor must be a dict with a 'kind' key")
    kind = desc["kind"]
    if kind == "polynomial":
        raw = desc["coeffs"]
        coeffs = [complex(c[0], c[1]) if isinstance(c, (list, tuple)) else complex(c)
                  for c in raw]
        if coeffs and coeffs[0] != 0:
            raise ValueError("catalog maps fix the origin: a_0 must be 0")
        return DomainSpec(kind, ConformalMap(coeffs, SQUARE2), 1.0, {"coeffs": raw})
    if kind == "square_to_disk":
        order = int(desc.get("truncation_order", 37))
        return DomainSpec(kind, map_square_to_disk(order), 1.0,
                          {"truncation_order": order})
    if kind == "robnik":
        lam = float(desc.get("lambda", desc.get("lam", 0.0)))
        cmap, cos2p = map_robnik(lam)
        return DomainSpec(kind, cmap, cos2p, {"lambda": lam})
    if kind == "polygon":
        sides = int(desc["sides"])
        k_max = int(desc.get("k_max", 40))
        cmap, cn = map_polygon(sides, k_max)
        return DomainSpec(kind, cmap, cn * cn, {"sides": sides, "k_max": k_max})
    raise ValueError(f"unknown domain kind {kind!r}")
