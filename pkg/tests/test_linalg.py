import numpy as np
import pytest

from drumspec import linalg
from drumspec.errors import ConvergenceError, DefinitenessError, DegeneracyError

import oracles


def test_sym_eig_identity():
    w, v = linalg.sym_eig(np.eye(3), 3)
    assert np.allclose(w, [1, 1, 1])


def test_sym_eig_diagonal_subset():
    w, _ = linalg.sym_eig(np.diag([3.0, 1.0, 2.0]), 2)
    assert np.allclose(w, [1.0, 2.0])


def test_sym_eig_trace_identity():
    rng = np.random.default_rng(7)
    a = rng.standard_normal((6, 6))
    a = a + a.T
    w, v = linalg.sym_eig(a, 6)
    assert np.sum(w) == pytest.approx(np.trace(a), abs=1e-10)
    # residual contract
    for i in range(6):
        res = np.linalg.norm(a @ v[:, i] - w[i] * v[:, i])
        assert res <= 1e-9 * np.linalg.norm(a, 2)
    assert np.allclose(v.T @ v, np.eye(6), atol=1e-10)


def test_gen_eig_identity_b_matches_sym_eig():
    rng = np.random.default_rng(3)
    a = rng.standard_normal((5, 5))
    a = a + a.T
    w1, v1 = linalg.sym_eig(a, 5)
    w2, v2 = linalg.gen_eig(a, np.eye(5), 5)
    assert np.allclose(w1, w2, rtol=1e-12, atol=1e-12)
    assert list(np.argsort(w1)) == list(np.argsort(w2))


def test_gen_eig_diagonal_example():
    w, _ = linalg.gen_eig(np.diag([2.0, 6.0]), np.diag([1.0, 2.0]), 2)
    assert np.allclose(w, [2.0, 3.0])


def test_gen_eig_characteristic_polynomial_oracle():
    rng = np.random.default_rng(11)
    m = rng.standard_normal((5, 5))
    a = m + m.T
    c = rng.standard_normal((5, 5))
    b = c @ c.T + 5 * np.eye(5)
    b /= np.linalg.norm(b, 2)  # keep roots within the oracle's sampling window
    w, v = linalg.gen_eig(a, b, 5)
    ref = oracles.gen_eig_charpoly(a, b)
    assert np.allclose(w, ref, atol=1e-8)
    # B-orthonormality
    assert np.allclose(v.T @ b @ v, np.eye(5), atol=1e-10)


def test_gen_eig_rejects_indefinite_b():
    with pytest.raises(DefinitenessError):
        linalg.gen_eig(np.eye(2), np.diag([1.0, -1.0]), 1)


def test_power_smallest_diagonal():
    inv = np.diag([1.0, 0.5, 0.25])
    val, vec, hist = linalg.power_smallest(lambda x: inv @ x, np.ones(3))
    assert val == pytest.approx(1.0, rel=1e-12)
    assert abs(vec[0]) == pytest.approx(1.0, abs=1e-6)


def test_power_smallest_deflated_converges_to_next():
    inv = np.diag([1.0, 0.5, 0.25])
    ground = np.array([1.0, 0.0, 0.0])
    val, vec, _ = linalg.power_smallest(lambda x: inv @ x, np.array([0.3, 1.0, 0.8]),
                                        orthogonal_to=[ground])
    assert val == pytest.approx(2.0, rel=1e-10)


def test_power_smallest_stagnation_raises():
    # nearly degenerate pair: contraction far too slow for the sweep budget
    inv = np.diag([1.0, 1.0 / 1.0001])
    with pytest.raises(ConvergenceError) as err:
        linalg.power_smallest(lambda x: inv @ x, np.array([1.0, 0.8]),
                              tol=1e-14, max_iter=5)
    assert err.value.last_estimate is not None


def test_power_rayleigh_monotone_on_spd():
    rng = np.random.default_rng(5)
    m = rng.standard_normal((8, 8))
    spd = m @ m.T + 8 * np.eye(8)
    inv = np.linalg.inv(spd)
    _, _, hist = linalg.power_smallest(lambda x: inv @ x, rng.standard_normal(8),
                                       tol=1e-14, max_iter=200)
    diffs = np.diff(hist)
    assert np.all(diffs <= 1e-11 * np.abs(hist[1:]))


def test_shifted_inverse_sq_degenerate_plane():
    a = np.diag([1.0, 5.0, 5.0, 9.0])
    lam = 4.8

    def solve(x):
        return np.linalg.solve(a - lam * np.eye(4), x)

    guesses = np.array([[1.0, 1.0, 1.0, 1.0], [1.0, -1.0, 1.0, -1.0]]).T / 2.0
    basis = linalg.shifted_inverse_sq(solve, lam, guesses)
    # span of axes 1 and 2
    proj = basis @ basis.T
    expected = np.zeros((4, 4))
    expected[1, 1] = expected[2, 2] = 1.0
    assert np.allclose(proj, expected, atol=1e-10)

    single = linalg.shifted_inverse_sq(solve, lam, np.array([[0.2, 0.9, 0.1, 0.4]]).T)
    vec = single[:, 0]
    assert abs(vec[0]) < 1e-10 and abs(vec[3]) < 1e-10
    assert np.linalg.norm(vec) == pytest.approx(1.0)


def test_shifted_inverse_sq_rejects_dependent_guesses():
    a = np.diag([1.0, 2.0, 3.0])

    def solve(x):
        return np.linalg.solve(a - 1.5 * np.eye(3), x)

    g = np.ones((3, 2))
    with pytest.raises(DegeneracyError):
        linalg.shifted_inverse_sq(solve, 1.5, g)


def test_sparse_operator_from_triplets_sums_duplicates():
    op = linalg.SparseOperator.from_triplets(3, [0, 0, 1], [0, 0, 2], [1.0, 2.0, 5.0])
    assert op.matrix[0, 0] == 3.0
    assert op.matrix[1, 2] == 5.0
    with pytest.raises(ValueError):
        linalg.SparseOperator.from_triplets(2, [0, 5], [0, 0], [1.0, 1.0])


def test_symmetrize_rejects_asymmetric():
    with pytest.raises(ValueError):
        linalg.symmetrize(np.array([[0.0, 1.0], [0.5, 0.0]]))
