import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from drumspec import special
from drumspec.errors import RangeError

import oracles


def test_bessel_trivial_values():
    assert special.bessel_j(0, 0.0) == 1.0
    assert special.bessel_j(1, 0.0) == 0.0
    assert abs(special.bessel_j(0, 2.404825557695773)) < 1e-12


@pytest.mark.parametrize("k", [0, 1, 3, 8])
@pytest.mark.parametrize("x", [0.3, 1.7, 4.0])
def test_bessel_matches_series(k, x):
    assert special.bessel_j(k, x) == pytest.approx(oracles.bessel_series(k, x), rel=1e-13, abs=1e-15)


@pytest.mark.parametrize("k", [0, 2, 5])
@pytest.mark.parametrize("x", [7.5, 19.0, 60.0])
def test_bessel_matches_miller_recurrence(k, x):
    assert special.bessel_j(k, x) == pytest.approx(oracles.bessel_miller(k, x), rel=1e-11)


def test_bessel_range_errors():
    with pytest.raises(RangeError):
        special.bessel_j(-1, 1.0)
    with pytest.raises(RangeError):
        special.bessel_j(0, 300.0)
    with pytest.raises(RangeError):
        special.bessel_j(65, 1.0)
    with pytest.raises(RangeError):
        special.bessel_zero(0, 0)


def test_zero_values():
    assert special.bessel_zero(0, 1) ** 2 == pytest.approx(5.7831859629, abs=1e-9)
    assert special.bessel_zero(1, 1) ** 2 == pytest.approx(14.681970642, abs=1e-8)
    ratio = (special.bessel_zero(1, 1) / special.bessel_zero(0, 1)) ** 2
    assert ratio == pytest.approx(2.539, abs=1e-3)


def test_zero_sign_change_and_interlacing():
    for k in (0, 1, 5, 20):
        for n in (1, 2, 10):
            g = special.bessel_zero(k, n)
            assert special.bessel_j(k, g - 1e-9) * special.bessel_j(k, g + 1e-9) < 0
    for k in range(0, 12):
        for n in range(1, 12):
            assert special.bessel_zero(k, n) < special.bessel_zero(k + 1, n) \
                < special.bessel_zero(k, n + 1)


@pytest.mark.parametrize("k,n", [(0, 1), (0, 3), (2, 1), (5, 4)])
def test_disk_mode_normalization(k, n):
    r_kn = special.disk_mode_norm(k, n)
    angular = 2 * np.pi if k == 0 else np.pi
    integral = special.radial_integral(k, n, n, 0)
    assert angular * r_kn ** 2 * integral == pytest.approx(1.0, abs=1e-10)


def test_disk_norm_first_mode():
    g = special.bessel_zero(0, 1)
    expected = 1.0 / (np.sqrt(np.pi) * abs(special.bessel_j_prime(0, g)))
    assert special.disk_mode_norm(0, 1) == expected


def test_mode_overlap_vanishes():
    # <(0,1)|(0,2)> over the disk: orthogonality of same-order radial modes
    r1 = special.disk_mode_norm(0, 1)
    r2 = special.disk_mode_norm(0, 2)
    overlap = 2 * np.pi * r1 * r2 * special.radial_integral(0, 1, 2, 0)
    assert abs(overlap) < 1e-10


def test_radial_integral_against_brute_force_trapezoid():
    r = np.linspace(0.0, 1.0, 1_000_001)
    g1 = special.bessel_zero(0, 1)
    g2 = special.bessel_zero(0, 2)
    brute = np.trapezoid(r ** 3 * special.bessel_j(0, g1 * r) * special.bessel_j(0, g2 * r), r)
    assert special.radial_integral(0, 1, 2, 2) == pytest.approx(brute, abs=1e-10)


@pytest.mark.parametrize("k,n,p", [(0, 1, 0), (0, 2, 2), (1, 1, 4), (3, 2, 8), (2, 4, 16)])
def test_diagonal_radial_matches_hypergeometric_form(k, n, p):
    g = special.bessel_zero(k, n)
    closed = oracles.diag_radial_closed_form(k, g, p)
    assert special.radial_integral(k, n, n, p) == pytest.approx(closed, abs=1e-9)


@settings(max_examples=40, deadline=None)
@given(k=st.integers(0, 6), n=st.integers(1, 6), n2=st.integers(1, 6),
       p=st.integers(0, 10), dk=st.integers(-1, 1))
def test_radial_integral_quadrature_property(k, n, n2, p, dk):
    from scipy import integrate, special as sps
    k2 = max(0, k + dk)
    if abs(k2 - k) > 1:
        k2 = k
    g1 = special.bessel_zero(k, n)
    g2 = special.bessel_zero(k2, n2)
    ref, _ = integrate.quad(lambda r: r ** (p + 1) * sps.jv(k, g1 * r) * sps.jv(k2, g2 * r),
                            0, 1, limit=200, epsabs=1e-13)
    assert special.radial_integral(k, n, n2, p, k2=k2) == pytest.approx(ref, abs=1e-10)


def test_radial_integral_rejects_distant_orders():
    with pytest.raises(RangeError):
        special.radial_integral(0, 1, 1, 2, k2=2)


def test_zero_table_is_immutable_snapshot():
    table = special.BesselZeroTable(max_order=3, max_index=5)
    row = table.zeros(2)
    row[0] = -1.0
    assert table.zero(2, 1) > 0
