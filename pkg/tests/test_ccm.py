import numpy as np
import pytest

from drumspec import ccm, conformal
from drumspec.errors import RangeError

BOX = conformal.ConformalMap([0, 1])


def test_lsf_cardinal_property():
    n = 12
    h = 2.0 / n
    nodes = ccm.grid_nodes(n)
    for k in (-5, 0, 3):
        vals = ccm.lsf(k, h, n, nodes)
        expected = np.zeros_like(nodes)
        expected[np.argmin(np.abs(nodes - k * h))] = 1.0
        assert np.allclose(vals, expected, atol=1e-12)


def test_lsf_interpolates_sine_mode():
    n = 20
    h = 2.0 / n
    nodes = ccm.grid_nodes(n)
    f = lambda x: np.sin(np.pi * (x + 1) / 2)
    xs = np.linspace(-0.999, 0.999, 301)
    interp = np.zeros_like(xs)
    for k, node in zip(range(-n // 2 + 1, n // 2), nodes):
        interp += f(node) * ccm.lsf(k, h, n, xs)
    assert np.max(np.abs(interp - f(xs))) < 1e-3


def test_d2_matrix_against_finite_differences():
    n = 16
    h = 2.0 / n
    c2 = ccm.d2_matrix(n)
    idx = np.arange(-n // 2 + 1, n // 2)
    eps = 1e-5
    worst = 0.0
    for i, k in enumerate(idx):
        for j, l in enumerate(idx):
            x = l * h
            fd = (ccm.lsf(k, h, n, x + eps) - 2 * ccm.lsf(k, h, n, x)
                  + ccm.lsf(k, h, n, x - eps)) / eps ** 2
            worst = max(worst, abs(fd - c2[i, j]))
    assert worst < 1e-5  # finite-difference truncation floor


def test_d2_matrix_properties():
    c2 = ccm.d2_matrix(40)
    assert np.all(np.diag(c2) < 0)
    # reflection symmetry c2[k, j] = c2[-k, -j]
    assert np.allclose(c2, c2[::-1, ::-1], atol=1e-11)
    # 1D Dirichlet spectrum: eigenvalues of -c2 are exactly (n pi/2)^2
    w = np.linalg.eigvalsh(-c2)
    assert w[0] == pytest.approx(np.pi ** 2 / 4, rel=1e-3)
    exact = (np.arange(1, 40) * np.pi / 2) ** 2
    assert np.allclose(np.sort(w), exact, rtol=1e-12)


def test_d2_matrix_validation():
    with pytest.raises(RangeError):
        ccm.d2_matrix(15)


def test_grid_folding_round_trip():
    n = 10
    for k in range(-4, 5):
        for kp in range(-4, 5):
            big = ccm.fold_grid_index(k, kp, n)
            assert ccm.unfold_grid_index(big, n) == (k, kp)


def test_laplacian_cache_is_shared_identity():
    op1 = ccm.assemble_operator(BOX, 12)
    op2 = ccm.assemble_operator(conformal.ConformalMap([0, 1, 0.05]), 12)
    assert op1.laplacian is op2.laplacian


def test_identity_map_symmetrized_equals_unsymmetrized():
    sym = ccm.assemble_operator(BOX, 12, symmetrized=True)
    raw = ccm.assemble_operator(BOX, 12, symmetrized=False)
    assert np.allclose(sym.matrix.toarray(), raw.matrix.toarray(), atol=1e-14)


def test_identity_map_ground_is_exact():
    est = ccm.SincCollocation(n_grid=40, count=3).fit(BOX)
    assert est.eigenvalues_[0] == pytest.approx(np.pi ** 2 / 2, rel=1e-12)


def test_circle_reference_row_n40(circle):
    est = ccm.SincCollocation(n_grid=40, count=5).fit(circle)
    assert est.eigenvalues_[0] == pytest.approx(5.7831962133, abs=1e-9)
    assert est.eigenvalues_[1] == pytest.approx(14.682036989, abs=1e-9)
    assert est.eigenvalues_[3] == pytest.approx(26.374723431, abs=1e-9)


def test_circle_monotone_decrease_with_grid(circle):
    e20 = ccm.SincCollocation(n_grid=20, count=1).fit(circle).eigenvalues_[0]
    e30 = ccm.SincCollocation(n_grid=30, count=1).fit(circle).eigenvalues_[0]
    e40 = ccm.SincCollocation(n_grid=40, count=1).fit(circle).eigenvalues_[0]
    assert e20 > e30 > e40


def test_symmetrized_and_unsymmetrized_spectra_coincide(circle):
    import scipy.linalg as sla
    sym = ccm.assemble_operator(circle, 20, symmetrized=True)
    raw = ccm.assemble_operator(circle, 20, symmetrized=False)
    w_sym = np.sort(np.linalg.eigvalsh(sym.matrix.toarray()))
    w_raw = sla.eigvals(raw.matrix.toarray())
    assert np.max(np.abs(w_raw.imag)) < 1e-9
    assert np.allclose(np.sort(w_raw.real), w_sym, atol=1e-10)


def test_solve_requires_symmetrized():
    raw = ccm.assemble_operator(BOX, 12, symmetrized=False)
    with pytest.raises(ValueError):
        ccm.solve(raw, 2)
