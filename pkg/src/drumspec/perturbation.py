"""Shape perturbation theory for deformed squares and disks.

With Sigma = 1 + sigma, the symmetrized operator expands in powers of sigma
and Rayleigh-Schroedinger theory collapses (after operator-identity
simplifications) to closed forms driven solely by matrix elements of sigma
in the unperturbed basis:

    E1 = -eps_n <n|s|n>
    E2 =  eps_n <n|s|n>^2 + eps_n^2 sum_k <n|s|k>^2 / w_nk
    E3 = -eps_n <n|s|n>^3 + eps_n^3 <n|s|n> sum_k <n|s|k>^2 / w_nk^2
         - 3 eps_n^2 <n|s|n> sum_k <n|s|k>^2 / w_nk
         - eps_n^3 sum_km <n|s|k><k|s|m><m|s|n> / (w_nk w_nm),

with w_nk = eps_n - eps_k and sums over internal states excluding n (and
its degenerate partners; degenerate levels are first rotated to the
eigenbasis of the block of sigma, which the perturbation then does not mix).

Two unperturbed bases are supported: the square sine basis (elements exact
through the moment-integral tables) and the unit-disk Bessel basis (elements
through angular selection rules and radial quadrature), the latter carrying
the quadratic disk deformation and regular-polygon applications with their
closed first/second-order forms.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import mpmath as mp
import numpy as np
from sklearn.base import BaseEstimator

from . import conformal, special, squarebasis
from .errors import ConformalityError, DegeneracyError, RangeError, UnsupportedMapError
from .spectrum import Level, Spectrum
from .squarebasis import PiPoly, box_energy
from .validation import check_positive_int

GAP_RTOL = 1e-9


# ---------------------------------------------------------------------------
# report and sigma-matrix containers

@dataclass
class PTReport:
    """Perturbative corrections of one level, with per-order partial sums."""

    label: str
    degeneracy: int
    e0: float
    corrections: list
    n_internal: int
    basis: str
    meta: dict = field(default_factory=dict)

    @property
    def order(self):
        return len(self.corrections)

    @property
    def partial_sums(self):
        out = [self.e0]
        for c in self.corrections:
            out.append(out[-1] + c)
        return out

    @property
    def energy(self):
        return self.partial_sums[-1]

    def to_json(self):
        return json.dumps({
            "label": self.label, "degeneracy": self.degeneracy,
            "basis": self.basis, "N_int": self.n_internal,
            "e0": self.e0, "corrections": list(self.corrections),
            "partial_sums": self.partial_sums, "meta": self.meta,
        }, indent=2, sort_keys=True) + "\n"


@dataclass
class SigmaMatrix:
    """Dense matrix of <a|sigma|b> over an explicit list of basis labels."""

    basis: str                  # "square2" or "unit_disk"
    labels: list
    energies: np.ndarray
    matrix: np.ndarray
    meta: dict = field(default_factory=dict)

    def index(self, label):
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"label {label!r} not in basis") from None

    def degenerate_partners(self, label):
        """Labels sharing the unperturbed energy (exact integer test where possible)."""
        if self.basis == "square2":
            nx, ny = label
            ss = nx * nx + ny * ny
            return [lab for lab in self.labels if lab[0] ** 2 + lab[1] ** 2 == ss]
        i = self.index(label)
        e = self.energies[i]
        return [lab for j, lab in enumerate(self.labels)
                if abs(self.energies[j] - e) <= GAP_RTOL * abs(e)]


# ---------------------------------------------------------------------------
# sigma matrices, square basis

def sigma_elements_square(domain, n_internal, table=None):
    """Exact <a|sigma|b> over the square basis for a polynomial map."""
    spec = conformal.domain_from_descriptor(domain)
    cmap = spec.over_square()
    n_internal = check_positive_int("n_internal", n_internal)
    kappa = conformal.sigma_polynomial(cmap)
    mat = squarebasis.sigma_matrix(kappa, n_internal, table)
    mat = mat - np.eye(mat.shape[0])
    labels = [squarebasis.unfold_index(k, n_internal)
              for k in range(1, n_internal * n_internal + 1)]
    energies = np.array([box_energy(nx, ny) for nx, ny in labels])
    return SigmaMatrix("square2", labels, energies, mat,
                       {"kind": spec.kind, "scale_sq": spec.scale_sq})


# ---------------------------------------------------------------------------
# disk basis

def disk_labels(n_rad=30, k_ang=12):
    """Bessel-basis labels (k, n, s) ordered by gamma_kn^2 (s = 1 before 2)."""
    labs = []
    for k in range(0, k_ang + 1):
        for n in range(1, n_rad + 1):
            g = special.bessel_zero(k, n)
            labs.append((g * g, (k, n, 1)))
            if k > 0:
                labs.append((g * g, (k, n, 2)))
    labs.sort(key=lambda t: (t[0], t[1]))
    return [lab for _, lab in labs]


def _robnik_coupling(k, kp, s):
    """Angular factor of <k n s| r cos(theta) |k' n' s>."""
    g = 0.0
    if abs(k - kp) == 1:
        g += math.pi / 2
    if k + kp == 1:
        g += ((-1) ** (s + 1)) * math.pi / 2
    return g


def sigma_elements_disk(domain, n_rad=30, k_ang=12, l_max=None):
    """<a|sigma|b> over the disk basis for the quadratic or polygon map.

    For the quadratic map the full matrix (both deformation orders folded at
    the map's lambda) is assembled from the angular selection rules and the
    radial product integrals.  For polygon maps only the k-diagonal blocks
    are filled, which is all the first-order theory consumes; the result is
    tagged ``first_order_only`` and refused by higher-order evaluations.
    """
    spec = conformal.domain_from_descriptor(domain)
    labels = disk_labels(n_rad, k_ang)
    energies = np.array([special.bessel_zero(k, n) ** 2 for k, n, _ in labels])
    dim = len(labels)
    mat = np.zeros((dim, dim))
    meta = {"kind": spec.kind, "scale_sq": spec.scale_sq}
    if spec.kind == "robnik":
        lam = spec.params["lambda"]
        norms = {(k, n): special.disk_mode_norm(k, n)
                 for k, n, s in labels if s == 1}
        for i, (k, n, s) in enumerate(labels):
            gi = special.bessel_zero(k, n)
            for j in range(i, dim):
                kp, npr, sp_ = labels[j]
                if sp_ != s:
                    continue
                val = 0.0
                if kp == k:  # quadratic part 4 lam^2 r^2
                    ang = 2 * math.pi if k == 0 else math.pi
                    val += 4 * lam * lam * ang * norms[(k, n)] * norms[(kp, npr)] \
                        * special.radial_integral(k, n, npr, 2)
                g = _robnik_coupling(k, kp, s)
                if g != 0.0:
                    val += 4 * lam * g * norms[(k, n)] * norms[(kp, npr)] \
                        * special.radial_integral(k, n, npr, 1, k2=kp)
                mat[i, j] = mat[j, i] = val
        meta["lambda"] = lam
    elif spec.kind == "polygon":
        sides = spec.params["sides"]
        l_max = l_max or spec.params.get("k_max", 40)
        for i, (k, n, s) in enumerate(labels):
            for j in range(i, dim):
                kp, npr, sp_ = labels[j]
                if sp_ != s or kp != k:
                    continue
                mat[i, j] = mat[j, i] = _polygon_element(sides, k, n, npr, s, l_max)
        meta.update({"sides": sides, "first_order_only": True, "l_max": l_max})
    else:
        raise UnsupportedMapError("disk sigma elements exist for the quadratic "
                                  "and polygon catalog maps")
    return SigmaMatrix("unit_disk", labels, energies, mat, meta)


def _polygon_element(sides, k, n, npr, s, l_max):
    """<k n s|sigma|k n' s> for the rescaled polygon map (k-diagonal)."""
    f = [conformal.polygon_coefficient(sides, l) for l in range(l_max + 1)]
    rkn = special.disk_mode_norm(k, n)
    rknp = special.disk_mode_norm(k, npr)
    ang = 2 * math.pi if k == 0 else math.pi
    total = -1.0 if n == npr else 0.0
    for l in range(0, l_max + 1):  # l = m diagonal tower, includes the unit l = 0 term
        j_int = special.radial_integral(k, n, npr, sides * 2 * l)
        total += ang * (sides * l + 1) ** 2 * f[l] ** 2 * rkn * rknp * j_int
    if k > 0 and (2 * k) % sides == 0:
        d = 2 * k // sides
        extra = 0.0
        for l in range(d, l_max + 1):
            m = l - d
            j_int = special.radial_integral(k, n, npr, sides * (l + m))
            extra += math.pi * (sides * l + 1) * (sides * m + 1) * f[l] * f[m] \
                * rkn * rknp * j_int
        total += ((-1) ** (s + 1)) * extra
    return total


# ---------------------------------------------------------------------------
# generic Rayleigh-Schroedinger evaluation

def _rspt(sig, vec, e0, exclude, order, gap_rtol=GAP_RTOL):
    """Corrections E1..E_order for the (possibly rotated) state ``vec``."""
    mat, energies = sig.matrix, sig.energies
    sv = mat @ vec
    dnn = float(vec @ sv)
    mask = np.ones(len(energies), dtype=bool)
    mask[list(exclude)] = False
    omega = e0 - energies[mask]
    bad = np.abs(omega) < gap_rtol * max(abs(e0), 1.0)
    if np.any(bad):
        culprit = [sig.labels[i] for i in np.nonzero(mask)[0][bad]]
        raise DegeneracyError(
            f"internal states {culprit} are degenerate with the level; "
            "declare them in the degenerate block")
    snk = sv[mask]
    out = [-e0 * dnn]
    if order >= 2:
        out.append(e0 * dnn ** 2 + e0 ** 2 * float(np.sum(snk ** 2 / omega)))
    if order >= 3:
        inner = mat[np.ix_(mask, mask)]
        chain = float((snk / omega) @ inner @ (snk / omega))
        out.append(-e0 * dnn ** 3
                   + e0 ** 3 * dnn * float(np.sum(snk ** 2 / omega ** 2))
                   - 3 * e0 ** 2 * dnn * float(np.sum(snk ** 2 / omega))
                   - e0 ** 3 * chain)
    return out


@dataclass
class DegenerateBlock:
    """Eigen-resolution of the sigma block spanned by degenerate labels."""

    labels: list
    indices: list
    vectors: np.ndarray            # columns: rotated zeroth-order states
    block_eigenvalues: np.ndarray  # eigenvalues of the sigma block
    e0: float

    @property
    def split(self):
        if len(self.block_eigenvalues) < 2:
            return False
        spread = np.max(self.block_eigenvalues) - np.min(self.block_eigenvalues)
        return bool(spread > 1e-13 * max(1.0, np.max(np.abs(self.block_eigenvalues))))

    @property
    def first_order(self):
        """First-order energies -e0 * block eigenvalues, ascending."""
        return np.sort(-self.e0 * self.block_eigenvalues)


def degenerate_block(sig, labels_in_block):
    """Diagonalize the sigma block of a degenerate multiplet.

    All labels must share the unperturbed energy.  Returns the rotated
    zeroth-order states; higher orders then run through :func:`pt_energy`
    with the block excluded from the internal sums.
    """
    idx = [sig.index(lab) for lab in labels_in_block]
    e0s = sig.energies[idx]
    if np.max(e0s) - np.min(e0s) > GAP_RTOL * max(1.0, abs(e0s[0])):
        raise DegeneracyError("labels passed to degenerate_block are not degenerate")
    block = sig.matrix[np.ix_(idx, idx)]
    w, v = np.linalg.eigh(0.5 * (block + block.T))
    return DegenerateBlock(list(labels_in_block), idx, v, w, float(e0s[0]))


def pt_energy(sig, level, order=3, block=None):
    """Perturbative corrections of one level (degenerate ones need ``block``).

    Returns one report for a simple level; for a degenerate level with a
    resolved block, a list of reports (one per rotated state, ascending
    first order).
    """
    if not 1 <= order <= 3:
        raise RangeError("order must be 1, 2 or 3")
    if sig.meta.get("first_order_only") and order > 1:
        raise UnsupportedMapError("this sigma matrix was assembled for "
                                  "first-order use only")
    partners = sig.degenerate_partners(level)
    i = sig.index(level)
    e0 = float(sig.energies[i])
    if len(partners) == 1:
        vec = np.zeros(len(sig.labels))
        vec[i] = 1.0
        corr = _rspt(sig, vec, e0, [i], order)
        return PTReport(str(level), 1, e0, corr, _n_int(sig), sig.basis)
    if block is None:
        raise DegeneracyError(
            f"level {level} is degenerate with {partners}; resolve it first "
            "with degenerate_block")
    reports = []
    for t in range(len(block.indices)):
        vec = np.zeros(len(sig.labels))
        for row, j in enumerate(block.indices):
            vec[j] = block.vectors[row, t]
        corr = _rspt(sig, vec, e0, block.indices, order)
        reports.append(PTReport(str(level), len(block.indices), e0, corr,
                                _n_int(sig), sig.basis,
                                {"block": [str(l) for l in block.labels],
                                 "split": block.split}))
    reports.sort(key=lambda r: r.partial_sums[1])
    return reports


def _n_int(sig):
    if sig.basis == "square2":
        return int(round(math.sqrt(len(sig.labels))))
    return len(sig.labels)


def pt_levels(sig, count, order=3):
    """Reports for the lowest ``count`` levels, blocks resolved automatically.

    Levels are ordered by unperturbed energy, then by corrected value inside
    each degenerate block.
    """
    order_idx = np.argsort(sig.energies, kind="stable")
    reports = []
    seen = set()
    for i in order_idx:
        if len(reports) >= count:
            break
        lab = sig.labels[i]
        if lab in seen:
            continue
        partners = sig.degenerate_partners(lab)
        seen.update(partners)
        if len(partners) == 1:
            reports.append(pt_energy(sig, lab, order))
        else:
            blk = degenerate_block(sig, partners)
            reports.extend(pt_energy(sig, lab, order, blk))
    return reports[:count]


# ---------------------------------------------------------------------------
# closed forms: deformed square

def deformed_square_f(nx, rtol=1e-14):
    """Second-order lattice sum F(nx) of the quadratic square deformation.

    F(nx) = sum_{m != nx} m^2 (1 - (-1)^(m+nx)) / (2 (nx^2 - m^2)^5),
    summed until the running term falls below ``rtol`` relatively.  Only
    opposite-parity m contribute; F(1) < 0 while F(nx >= 2) > 0, and
    F(nx) -> pi^4/(3072 nx^4) for large nx.
    """
    nx = check_positive_int("nx", nx)
    acc = 0.0
    m = 1
    while True:
        if m != nx and (m + nx) % 2 == 1:
            term = m * m / (nx * nx - m * m) ** 5
            acc += term
            if m > 2 * nx + 6 and abs(term) < rtol * max(abs(acc), 1e-10):
                break
        m += 1
        if m > 100000:
            break
    return acc


def deformed_square_f_asymptotic(nx):
    return math.pi ** 4 / (3072.0 * nx ** 4)


def deformed_square_closed(level, alpha):
    """Energy of a quadratic square deformation level to second deformation order.

    E = eps + E1 + E2 with
    E1 = -(8/3) alpha^2 eps (1 - 3/(pi^2 nx^2) - 3/(pi^2 ny^2)) and
    E2 = alpha^2 eps^2 nx^2 (2^14/pi^6) F(nx).  The shift (E - eps)/alpha^2
    is independent of alpha and is stored in the report metadata.
    """
    nx, ny = level
    eps = box_energy(nx, ny)
    e1 = -(8.0 / 3.0) * alpha ** 2 * eps * (1 - 3 / (math.pi ** 2 * nx ** 2)
                                            - 3 / (math.pi ** 2 * ny ** 2))
    e2 = alpha ** 2 * eps ** 2 * nx ** 2 * (2 ** 14 / math.pi ** 6) * deformed_square_f(nx)
    shift = (e1 + e2) / alpha ** 2 if alpha != 0 else 0.0
    return PTReport(str(level), 1, eps, [e1, e2], 0, "square2",
                    {"alpha": alpha, "shift_per_alpha_sq": shift})


def deformed_square_shift(level):
    """(E - eps)/alpha^2 of the closed second-order form (alpha-independent)."""
    return deformed_square_closed(level, 1.0).meta["shift_per_alpha_sq"]


# ---------------------------------------------------------------------------
# closed forms: general first-order map over the square

def _c_tensor_exact(j, nx, mx, ny, my, table):
    """Exact first-order coefficient of the z^j/j map term in <n|sigma|m>."""
    acc = PiPoly()
    for k in range(j):
        rem = j - 1 - k
        if rem % 2:
            continue
        qx = table.q_exact(nx, mx, k)
        qy = table.q_exact(ny, my, rem)
        if qx.is_zero() or qy.is_zero():
            continue
        factor = math.comb(j - 1, k) * 2 * (-1) ** (rem // 2)
        prod = _pipoly_mul(qx, qy).scaled(factor)
        acc = acc + prod
    return acc


def _pipoly_mul(a: PiPoly, b: PiPoly) -> PiPoly:
    out = {}
    for ja, ca in a.terms.items():
        for jb, cb in b.terms.items():
            j = ja + jb
            out[j] = out.get(j, 0) + ca * cb
    return PiPoly(out)


@dataclass
class FirstOrderForm:
    """-E1/eps of a general weak map deformation, as a linear form.

    ``diagonal[j]`` multiplies the strength of the z^j/j map term for the
    state itself; for an even-sum degenerate pair ``split[j]`` is the
    off-diagonal linear form whose magnitude separates the rotated states
    (the pair energies are the block eigenvalues, not diagonal +- split,
    once the diagonal entries differ).
    """

    level: tuple
    diagonal: dict
    split: dict | None


def general_map_first_order(level, j_max=19, table=None):
    """First-order coefficients of each odd map power for one square level.

    Even powers vanish identically; a degenerate mirror pair (nx + ny even)
    additionally carries a nonzero off-diagonal form.
    """
    table = table or squarebasis.default_table()
    nx, ny = level
    diag = {}
    for j in range(1, j_max + 1):
        diag[j] = _c_tensor_exact(j, nx, nx, ny, ny, table).to_float()
    split = None
    if nx != ny and (nx + ny) % 2 == 0:
        split = {}
        for j in range(1, j_max + 1):
            split[j] = _c_tensor_exact(j, nx, ny, ny, nx, table).to_float()
    return FirstOrderForm(level, diag, split)


# ---------------------------------------------------------------------------
# closed forms: quadratic disk deformation (second order in lambda)

def robnik_pt2(level, lam, n_rad=30):
    """Energy of a quadratic disk-deformation level to second order in lambda.

    Ebar = gamma^2 + lambda^2 Ebar2 with
    Ebar2 = -gamma^2 <4 r^2> + gamma^4 sum' <4 r cos>^2/(gamma^2 - gamma'^2),
    then E = Ebar (1 + 2 lambda^2) undoes the area-fixing dilatation.  The
    degeneracy is lifted at this order only for angular number k = 1.
    """
    k, n, s = level
    if abs(lam) >= 0.5:
        raise ConformalityError(f"|lambda| = {abs(lam)} >= 1/2: not univalent")
    g = special.bessel_zero(k, n)
    rkn = special.disk_mode_norm(k, n)
    ang = 2 * math.pi if k == 0 else math.pi
    second_diag = 4.0 * ang * rkn ** 2 * special.radial_integral(k, n, n, 2)
    acc = 0.0
    for kp in (k - 1, k + 1):
        if kp < 0:
            continue
        if kp == 0 and s == 2:
            continue
        gfac = _robnik_coupling(k, kp, s)
        if gfac == 0.0:
            continue
        for npr in range(1, n_rad + 1):
            gp = special.bessel_zero(kp, npr)
            el = 4.0 * gfac * rkn * special.disk_mode_norm(kp, npr) \
                * special.radial_integral(k, n, npr, 1, k2=kp)
            acc += el * el / (g * g - gp * gp)
    ebar2 = -g * g * second_diag + g ** 4 * acc
    scale = 1.0 + 2.0 * lam * lam
    e0 = g * g * scale
    e2 = lam * lam * ebar2 * scale
    return PTReport(str(level), 1 if k == 0 else 2, e0, [0.0, e2], n_rad,
                    "unit_disk", {"lambda": lam, "ebar2": ebar2,
                                  "split_at_this_order": k == 1})


# ---------------------------------------------------------------------------
# closed forms: regular polygons (first order)

def polygon_pt1(level, sides, k_max=40, l_max=None):
    """Polygon level energy at orders zero and one.

    E0 = gamma^2 / C_N^2 and E1 applies the diagonal sigma element:
    E = (gamma^2/C_N^2)(1 - <sigma>).  The degeneracy of the (k, n) doublet
    is lifted at first order exactly when 2k is a multiple of N.
    """
    k, n, s = level
    if sides < 3:
        raise RangeError("sides must be >= 3")
    l_max = l_max or k_max
    g = special.bessel_zero(k, n)
    cn2 = conformal.polygon_scale(sides) ** 2
    diag = _polygon_element(sides, k, n, n, s, l_max)
    e0 = g * g / cn2
    e1 = -e0 * diag
    lifted = k > 0 and (2 * k) % sides == 0
    return PTReport(str(level), 1 if k == 0 else 2, e0, [e1], l_max,
                    "unit_disk", {"sides": sides, "split_at_this_order": lifted})


def polygon_scale_expansion(order=4):
    """Coefficients of 1/C_N^2 = 1 + c2/N^2 + c3/N^3 + ... recovered numerically.

    High-precision Taylor extraction of the Gamma-function ratio around
    1/N = 0; returns [c0, c1, ..., c_order].
    """
    with mp.workdps(60):
        def f(u):
            return (mp.gamma(1 + u) * mp.gamma(1 - 2 * u) / mp.gamma(1 - u)) ** 2
        coeffs = mp.taylor(f, 0, order)
        return [float(c) for c in coeffs]


# ---------------------------------------------------------------------------
# estimator


class ShapePerturbation(BaseEstimator):
    """Estimator interface for the perturbative engines.

    Dispatches on the domain kind: square-referenced maps run the generic
    Rayleigh-Schroedinger machinery in the sine basis (order <= 3), the
    quadratic disk map its second-order closed form, polygons the
    first-order one.  After ``fit``: ``reports_``, ``spectrum_``,
    ``eigenvalues_``.
    """

    def __init__(self, order=None, count=20, n_internal=20, n_rad=30, k_ang=12):
        self.order = order
        self.count = count
        self.n_internal = n_internal
        self.n_rad = n_rad
        self.k_ang = k_ang

    def fit(self, domain, y=None):
        spec = conformal.domain_from_descriptor(domain)
        if spec.kind == "robnik":
            order = 2 if self.order is None else self.order
            if order != 2:
                raise RangeError("the quadratic disk closed form is second order; "
                                 "use sigma_elements_disk + pt_energy for experiments")
            labels = disk_labels(self.n_rad, self.k_ang)[: self.count]
            reports = [robnik_pt2(lab, spec.params["lambda"], self.n_rad)
                       for lab in labels]
        elif spec.kind == "polygon":
            order = 1 if self.order is None else self.order
            if order not in (0, 1):
                raise RangeError("polygon theory ships at orders 0 and 1")
            labels = disk_labels(self.n_rad, self.k_ang)[: self.count]
            reports = [polygon_pt1(lab, spec.params["sides"],
                                   spec.params.get("k_max", 40)) for lab in labels]
            if order == 0:
                reports = [PTReport(r.label, r.degeneracy, r.e0, [], r.n_internal,
                                    r.basis, r.meta) for r in reports]
        else:
            order = 3 if self.order is None else self.order
            sig = sigma_elements_square(spec, self.n_internal)
            reports = pt_levels(sig, self.count, order)
        self.reports_ = reports
        levels = [Level(i, r.energy, r.label, r.degeneracy)
                  for i, r in enumerate(reports)]
        self.spectrum_ = Spectrum(levels, "pt", self.n_internal, self.n_internal,
                                  {"kind": spec.kind, "order": order})
        self.eigenvalues_ = self.spectrum_.eigenvalues
        return self

    def predict(self, indices=None):
        if indices is None:
            return self.eigenvalues_
        return self.eigenvalues_[np.asarray(indices)]
