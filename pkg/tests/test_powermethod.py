import numpy as np
import pytest

from drumspec import ccm, cmm, conformal, perturbation, powermethod as pm
from conftest import EXACT_CIRCLE

BOX = conformal.ConformalMap([0, 1])
EPS0 = np.pi ** 2 / 2


def test_identity_map_inverse_divides_by_energies():
    ops = pm.BasisOperators(BOX, 6)
    assert np.allclose(ops.sqrt_sigma, np.eye(36), atol=1e-13)
    state = pm.BasisState(np.arange(1.0, 37.0), 6)
    advanced = pm.apply_inverse(state, ops)
    assert advanced.generation == 1
    assert np.allclose(advanced.coeffs, state.coeffs / ops.energies, atol=1e-12)


def test_identity_map_ground_energy_exact():
    ops = pm.BasisOperators(BOX, 6)
    res = pm.iterate_ground(ops)
    assert res.energy == pytest.approx(EPS0, rel=1e-12)
    bound = pm.energy_first_order(np.eye(36)[0], ops)
    assert bound == pytest.approx(EPS0, rel=1e-12)


def test_single_application_improves_box_guess(circle_ops20):
    # successive Rayleigh estimates move toward the true circle ground from
    # above (the disk sits inside the square, so its levels lie above eps0)
    state = pm.box_ground_state(20)
    y1 = circle_ops20.inverse_apply(state.coeffs)
    est1 = (state.coeffs @ state.coeffs) / (state.coeffs @ y1)
    x1 = y1 / np.linalg.norm(y1)
    y2 = circle_ops20.inverse_apply(x1)
    est2 = (x1 @ x1) / (x1 @ y2)
    assert est1 > est2 >= EXACT_CIRCLE[0]
    assert abs(est2 - EXACT_CIRCLE[0]) < abs(est1 - EXACT_CIRCLE[0])


def test_ground_iteration_converges_quickly(circle_ops20):
    res = pm.iterate_ground(circle_ops20, tol=1e-10)
    assert len(res.history) <= 40
    assert res.energy == pytest.approx(5.7831879053, abs=1e-8)
    assert res.energy >= EXACT_CIRCLE[0]
    # Rayleigh estimates decrease monotonically for the positive operator
    diffs = np.diff(res.history)
    assert np.all(diffs <= 1e-10 * np.abs(np.array(res.history)[1:]))


def test_reduced_single_state_bound_matches_simple_formula(circle):
    # with one internal state the bound collapses to eps0 / <0|Sigma|0>
    ops = pm.BasisOperators(circle, 1)
    bound = pm.energy_first_order(np.array([1.0]), ops)
    assert bound == pytest.approx(float(ops.energies[0] / ops.sigma[0, 0]), rel=1e-12)


def test_variational_bound_circle(circle):
    ops = pm.BasisOperators(circle, 36)
    coeffs, bound = pm.variational_optimize(ops, 6)
    assert bound >= EXACT_CIRCLE[0]
    assert bound == pytest.approx(EXACT_CIRCLE[0], abs=1e-4)
    # nested variational spaces: larger block can only improve the bound
    _, b4 = pm.variational_optimize(ops, 4)
    _, b8 = pm.variational_optimize(ops, 8)
    assert b8 <= b4
    # decay with block size: error shrinks by well over 10x from N=4 to N=16
    _, b16 = pm.variational_optimize(ops, 16)
    assert (b4 - EXACT_CIRCLE[0]) >= 10 * (b16 - EXACT_CIRCLE[0])


def test_random_coefficients_never_beat_the_exact_ground(circle_ops20):
    rng = np.random.default_rng(42)
    for _ in range(50):
        c = rng.standard_normal(36)
        bound = pm.energy_first_order(_embed(c, 6, 20), circle_ops20)
        assert bound >= EXACT_CIRCLE[0]


def _embed(block_coeffs, n_block, n_internal):
    out = np.zeros(n_internal * n_internal)
    from drumspec.squarebasis import fold_index
    i = 0
    for nx in range(1, n_block + 1):
        for ny in range(1, n_block + 1):
            out[fold_index(nx, ny, n_internal) - 1] = block_coeffs[i]
            i += 1
    return out


def test_excited_subspace_identity_map():
    ops = pm.BasisOperators(BOX, 6)
    target = (np.pi ** 2 / 4) * 5  # the (1,2)/(2,1) doublet
    w, states = pm.excited_subspace(ops, 0.9 * target, 2)
    assert np.allclose(w, [target, target], rtol=1e-10)
    assert states.shape[1] == 2


def test_excited_subspace_circle_doublet(circle_ops20):
    w, _ = pm.excited_subspace(circle_ops20, 14.6, 2)
    assert np.allclose(w, w[::-1])
    assert w[0] == pytest.approx(EXACT_CIRCLE[1], abs=2e-5)


class _NearDegenerateOps:
    """Stand-in operator pair with E1/E0 = 1.01 (below the warning ratio)."""

    n_internal = 2
    energies = np.array([1.0, 1.01, 5.0, 7.0])

    def inverse_apply(self, coeffs):
        return coeffs / self.energies


def test_slow_gap_warning_emitted():
    ops = _NearDegenerateOps()
    guess = pm.BasisState(np.array([1.0, 0.8, 0.1, 0.1]), 2)
    with pytest.warns(RuntimeWarning):
        res = pm.iterate_ground(ops, tol=1e-13, max_iter=5000, guess=guess)
    assert res.slow_gap
    assert res.energy == pytest.approx(1.0, rel=1e-9)


def test_power_ratio_derivative_matches_first_order_theory(deformed_square):
    """Differentiating the iteration ratio at zero deformation strength
    reproduces -eps0 <0|sigma|0>, propagated with exact linearization."""
    alpha = 0.05
    n_int = 12
    sig = perturbation.sigma_elements_square(deformed_square, n_int)
    s1 = 0.5 * sig.matrix          # d/d eta <k|sqrt(1+eta sigma)|l> at eta=0
    d = 1.0 / sig.energies
    # jets (value, derivative) through n applications of M = S D S
    def apply_jet(v, dv):
        # M0 = D (value part), M1 = (S1 D + D S1)
        mv = d * v
        mdv = d * dv + s1 @ (d * v) + d * (s1 @ v)
        return mv, mdv

    psi = np.zeros(n_int * n_int)
    psi[0] = 1.0
    v, dv = psi.copy(), np.zeros_like(psi)
    numer = []
    for _ in range(4):
        numer.append((v, dv))
        v, dv = apply_jet(v, dv)
    numer.append((v, dv))
    # ratio_n = <psi|M^(n-1)|psi> / <psi|M^n|psi>, derivative at eta = 0
    n = 4
    a, da = psi @ numer[n - 1][0], psi @ numer[n - 1][1]
    b, db = psi @ numer[n][0], psi @ numer[n][1]
    ratio_deriv = da / b - a * db / b ** 2
    expected = -sig.energies[0] * sig.matrix[0, 0]
    assert ratio_deriv == pytest.approx(expected, abs=1e-10)


def test_matched_cutoff_agreement_deformed_square(deformed_square):
    n = 30
    e_galerkin = cmm.ConformalGalerkin(n_basis=n, count=1).fit(deformed_square).eigenvalues_[0]
    ops = pm.BasisOperators(deformed_square, n)
    e_power = pm.iterate_ground(ops).energy
    assert abs(e_power - e_galerkin) < 1e-8


def test_bound_property_against_collocation_reference():
    rng = np.random.default_rng(9)
    for desc in ({"kind": "polynomial", "coeffs": [0, 1, 0.05]},
                 {"kind": "robnik", "lambda": 0.1}):
        dom = conformal.domain_from_descriptor(desc)
        reference = ccm.SincCollocation(n_grid=40, count=1).fit(dom).eigenvalues_[0]
        ops = pm.BasisOperators(dom, 12)
        raw_reference = reference * dom.scale_sq  # ops work on the rescaled map
        for _ in range(20):
            c = rng.standard_normal(16)
            bound = pm.energy_first_order(_embed(c, 4, 12), ops)
            assert bound >= raw_reference - 1e-6
