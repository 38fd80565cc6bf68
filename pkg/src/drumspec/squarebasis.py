"""Sine/cosine eigenbasis of the side-2 square and its moment integrals.

The Dirichlet basis is phi_n(x) = sin(n pi (x+1)/2), the Neumann partner
chi_n(x) = delta_n0/sqrt(2) + cos(n pi (x+1)/2) (n >= 1); both families are
orthonormal on [-1, 1] and the box energies are eps = (pi^2/4)(nx^2 + ny^2).

The moment integrals

    Q_nmk = int_-1^1 x^k phi_n phi_m dx,
    R_nmk = int_-1^1 x^k chi_n chi_m dx,

satisfy closed-form seeds at k = 0, 1 and coupled upward recurrences in k.
Values are exact rational combinations of powers of 1/pi^2; this module
keeps two synchronized tables:

* an exact one (Fraction coefficients of 1/pi^2 powers, :class:`PiPoly`),
  used where exact output matters (coefficient extraction, identities);
* a float one, computed by running the same recurrences in mpmath at a
  precision budget that grows with k.  The recurrences amplify roundoff by
  roughly k^2/pi^2 per step, so plain doubles lose all digits near k ~ 30;
  the high-precision sweep keeps the converted doubles correctly rounded.

The Neumann R family ships only as the recurrence partner of Q and for
tests; no Neumann eigenproblem is built on top of it.
"""

from __future__ import annotations

import threading
from fractions import Fraction

import mpmath as mp
import numpy as np

from .errors import RangeError


class PiPoly:
    """Exact value sum_j c_j * pi^(-2j) with Fraction coefficients c_j."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {j: c for j, c in (terms or {}).items() if c != 0}

    @classmethod
    def rational(cls, num, den=1):
        return cls({0: Fraction(num, den)})

    def __add__(self, other):
        out = dict(self.terms)
        for j, c in other.terms.items():
            s = out.get(j, Fraction(0)) + c
            if s:
                out[j] = s
            elif j in out:
                del out[j]
        return PiPoly(out)

    def scaled(self, factor):
        factor = Fraction(factor)
        return PiPoly({j: c * factor for j, c in self.terms.items()})

    def times_inv_pi2(self):
        return PiPoly({j + 1: c for j, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, PiPoly) and self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def to_float(self):
        """Convert at a precision adapted to the internal cancellation."""
        if not self.terms:
            return 0.0
        # digit budget: largest term magnitude relative to pi^(-2j) decay
        digits = 0
        for j, c in self.terms.items():
            # log10 |c_j / pi^(2j)| ~ digits(num) - digits(den) - 0.9943 j
            digits = max(digits, len(str(abs(c.numerator))) - len(str(c.denominator)) - int(0.9943 * j))
        dps = 30 + max(0, digits)
        with mp.workdps(dps):
            inv = 1 / mp.pi ** 2
            acc = mp.mpf(0)
            for j in sorted(self.terms):
                c = self.terms[j]
                acc += mp.mpf(c.numerator) / c.denominator * inv ** j
            return float(acc)

    def __repr__(self):
        return f"PiPoly({self.terms!r})"


def _exact_pair_sweep(n, m, kmax):
    """Exact (Q_k, R_k) PiPoly values for k = 0..kmax, n <= m, n >= 1."""
    if n == m:
        qs = [PiPoly.rational(1), PiPoly()]
        for k in range(kmax - 1):
            term = PiPoly.rational(1 + (-1) ** k, 2 * (k + 3))
            nxt = term + qs[k].scaled(-(k * k + 3 * k + 2)).scaled(Fraction(1, n * n)).times_inv_pi2()
            qs.append(nxt)
        out = []
        for k, q in enumerate(qs[: kmax + 1]):
            ident = PiPoly.rational(1 + (-1) ** k, k + 1)
            out.append((q, ident + q.scaled(-1)))
        return out
    d2 = (m * m - n * n) ** 2
    par = (-1) ** (m + n)
    qs = [PiPoly(), PiPoly({1: Fraction(8 * m * n * (par - 1), d2)})]
    rs = [PiPoly(), PiPoly({1: Fraction(4 * (m * m + n * n) * (par - 1), d2)})]
    for k in range(kmax - 1):
        pk = (-1) ** k + par
        qn = PiPoly({1: Fraction(8 * (k + 2) * m * n * pk, d2)}) \
            + qs[k].scaled(Fraction(-4 * (k + 1) * (k + 2) * (m * m + n * n), d2)).times_inv_pi2() \
            + rs[k].scaled(Fraction(-8 * (k + 1) * (k + 2) * m * n, d2)).times_inv_pi2()
        rn = PiPoly({1: Fraction(4 * (k + 2) * (m * m + n * n) * pk, d2)}) \
            + qs[k].scaled(Fraction(-8 * (k + 1) * (k + 2) * m * n, d2)).times_inv_pi2() \
            + rs[k].scaled(Fraction(-4 * (k + 1) * (k + 2) * (m * m + n * n), d2)).times_inv_pi2()
        qs.append(qn)
        rs.append(rn)
    return list(zip(qs[: kmax + 1], rs[: kmax + 1]))


def _float_pair_sweep(n, m, kmax):
    """Run the same recurrences in mpmath and return float (Q, R) lists."""
    dps = 40 + int(1.2 * kmax)
    with mp.workdps(dps):
        pi2 = mp.pi ** 2
        if n == m:
            qs = [mp.mpf(1), mp.mpf(0)]
            for k in range(kmax - 1):
                qs.append(mp.mpf(1 + (-1) ** k) / (2 * (k + 3))
                          - mp.mpf(k * k + 3 * k + 2) / (pi2 * n * n) * qs[k])
            out = []
            for k, q in enumerate(qs[: kmax + 1]):
                r = mp.mpf(1 + (-1) ** k) / (k + 1) - q
                out.append((float(q), float(r)))
            return out
        d2 = (m * m - n * n) ** 2
        par = (-1) ** (m + n)
        qs = [mp.mpf(0), mp.mpf(8 * m * n * (par - 1)) / (pi2 * d2)]
        rs = [mp.mpf(0), mp.mpf(4 * (m * m + n * n) * (par - 1)) / (pi2 * d2)]
        for k in range(kmax - 1):
            pk = (-1) ** k + par
            qn = (mp.mpf(8 * (k + 2) * m * n * pk)
                  - mp.mpf(4 * (k + 1) * (k + 2) * (m * m + n * n)) * qs[k]
                  - mp.mpf(8 * (k + 1) * (k + 2) * m * n) * rs[k]) / (pi2 * d2)
            rn = (mp.mpf(4 * (k + 2) * (m * m + n * n) * pk)
                  - mp.mpf(8 * (k + 1) * (k + 2) * m * n) * qs[k]
                  - mp.mpf(4 * (k + 1) * (k + 2) * (m * m + n * n)) * rs[k]) / (pi2 * d2)
            qs.append(qn)
            rs.append(rn)
        return [(float(q), float(r)) for q, r in zip(qs[: kmax + 1], rs[: kmax + 1])]


def _r_zero_order_sweep(m, kmax):
    """Float R_0mk = (1/sqrt(2)) int x^k cos(m pi (x+1)/2) dx for m >= 1."""
    with mp.workdps(40 + int(1.2 * kmax)):
        pi2 = mp.pi ** 2
        vals = [mp.mpf(0), mp.mpf(4 * ((-1) ** m - 1)) / (m * m * pi2)]
        for k in range(kmax - 1):
            vals.append(mp.mpf(4 * (k + 2) * ((-1) ** m + (-1) ** k)) / (pi2 * m * m)
                        - mp.mpf(4 * (k + 2) * (k + 1)) / (pi2 * m * m) * vals[k])
        inv_sqrt2 = 1 / mp.sqrt(2)
        return [float(v * inv_sqrt2) for v in vals[: kmax + 1]]


class IntegralTable:
    """Memoized Q/R moment integrals (exact and float views)."""

    def __init__(self, block=16):
        self._block = block          # sweeps extend in blocks of this many k
        self._float = {}
        self._exact = {}
        self._r0 = {}
        self._lock = threading.Lock()

    def _float_sweep(self, n, m, k):
        key = (min(n, m), max(n, m))
        kmax = ((k // self._block) + 1) * self._block
        with self._lock:
            got = self._float.get(key)
            if got is None or len(got) <= k:
                got = _float_pair_sweep(key[0], key[1], kmax)
                self._float[key] = got
        return got

    def _exact_sweep(self, n, m, k):
        key = (min(n, m), max(n, m))
        kmax = ((k // self._block) + 1) * self._block
        with self._lock:
            got = self._exact.get(key)
            if got is None or len(got) <= k:
                got = _exact_pair_sweep(key[0], key[1], kmax)
                self._exact[key] = got
        return got

    def q(self, n, m, k):
        """Q_nmk as a float (n, m >= 1)."""
        self._check(n, m, k, family="Q")
        return self._float_sweep(n, m, k)[k][0]

    def r(self, n, m, k):
        """R_nmk as a float (n, m >= 0)."""
        self._check(n, m, k, family="R")
        if n == 0 and m == 0:
            return (1 + (-1) ** k) / (2.0 * (k + 1))
        if n == 0 or m == 0:
            mm = max(n, m)
            with self._lock:
                got = self._r0.get(mm)
                if got is None or len(got) <= k:
                    got = _r_zero_order_sweep(mm, ((k // self._block) + 1) * self._block)
                    self._r0[mm] = got
            return got[k]
        return self._float_sweep(n, m, k)[k][1]

    def q_exact(self, n, m, k) -> PiPoly:
        self._check(n, m, k, family="Q")
        return self._exact_sweep(n, m, k)[k][0]

    def r_exact(self, n, m, k) -> PiPoly:
        self._check(n, m, k, family="R")
        if n == 0 or m == 0:
            if n == m == 0:
                return PiPoly.rational(1 + (-1) ** k, 2 * (k + 1))
            raise RangeError("exact R values with a single zero index carry a "
                             "sqrt(2) factor; use the float accessor r()")
        return self._exact_sweep(n, m, k)[k][1]

    def qr_sum_check(self, n, k):
        """Q_nnk + R_nnk; equals (1 + (-1)^k)/(k+1) identically."""
        return self.q(n, n, k) + self.r(n, n, k)

    def q_matrix(self, n_basis, k):
        """Matrix of Q_abk over a, b = 1..n_basis."""
        out = np.empty((n_basis, n_basis))
        for a in range(1, n_basis + 1):
            for b in range(a, n_basis + 1):
                v = self.q(a, b, k)
                out[a - 1, b - 1] = out[b - 1, a - 1] = v
        return out

    @staticmethod
    def _check(n, m, k, family):
        if k < 0 or k != int(k):
            raise RangeError(f"k must be a non-negative integer, got {k}")
        low = 1 if family == "Q" else 0
        if n < low or m < low:
            raise RangeError(f"{family} indices must be >= {low}, got ({n}, {m})")


_DEFAULT = IntegralTable()


def default_table():
    return _DEFAULT


def q_integral(n, m, k):
    return _DEFAULT.q(n, m, k)


def r_integral(n, m, k):
    return _DEFAULT.r(n, m, k)


def qr_sum_check(n, k):
    return _DEFAULT.qr_sum_check(n, k)


def box_energy(nx, ny):
    """Unperturbed square energy eps = (pi^2/4)(nx^2 + ny^2)."""
    return (np.pi ** 2 / 4.0) * (nx * nx + ny * ny)


def fold_index(nx, ny, n_basis):
    """Bijection (nx, ny) in 1..N x 1..N  ->  k in 1..N^2, k = ny + N(nx-1)."""
    if not (1 <= nx <= n_basis and 1 <= ny <= n_basis):
        raise RangeError(f"({nx}, {ny}) outside 1..{n_basis}")
    return ny + n_basis * (nx - 1)


def unfold_index(k, n_basis):
    """Inverse of :func:`fold_index`, by exact integer division."""
    if not (1 <= k <= n_basis * n_basis):
        raise RangeError(f"k = {k} outside 1..{n_basis * n_basis}")
    nx = (k - 1) // n_basis + 1
    ny = k - n_basis * (nx - 1)
    return nx, ny


def sigma_matrix_element(kappa, a, b, table=None):
    """Galerkin element <a|Sigma|b> = sum_nm kappa_nm Q_{ax bx n} Q_{ay by m}."""
    table = table or _DEFAULT
    kappa = np.asarray(kappa)
    (ax, ay), (bx, by) = a, b
    total = 0.0
    for n in range(kappa.shape[0]):
        row = kappa[n]
        qx = None
        for m in range(kappa.shape[1]):
            if row[m] == 0.0:
                continue
            if qx is None:
                qx = table.q(ax, bx, n)
            total += row[m] * qx * table.q(ay, by, m)
    return total


def sigma_matrix(kappa, n_basis, table=None):
    """Full N^2 x N^2 matrix of <a|Sigma|b>, folded per :func:`fold_index`.

    Assembled as sum_n Qx[n] (x) Y_n with Y_n = sum_m kappa_nm Qy[m]; this
    factorization keeps the cost at O(#powers N^4) instead of
    O(#coefficients N^4).
    """
    table = table or _DEFAULT
    kappa = np.asarray(kappa, dtype=float)
    used = [k for k in range(max(kappa.shape)) if
            (k < kappa.shape[0] and np.any(kappa[k, :])) or
            (k < kappa.shape[1] and np.any(kappa[:, k]))]
    qmats = {k: table.q_matrix(n_basis, k) for k in used}
    buf = np.zeros((n_basis, n_basis, n_basis, n_basis))
    for n in range(kappa.shape[0]):
        if not np.any(kappa[n, :]):
            continue
        y = np.zeros((n_basis, n_basis))
        for m in range(kappa.shape[1]):
            if kappa[n, m] != 0.0:
                y += kappa[n, m] * qmats[m]
        buf += np.multiply.outer(qmats[n], y)
    # buf[ax, bx, ay, by] -> matrix[(ax, ay), (bx, by)]
    mat = buf.transpose(0, 2, 1, 3).reshape(n_basis * n_basis, n_basis * n_basis)
    return 0.5 * (mat + mat.T)
