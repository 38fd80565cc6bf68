import numpy as np
import pytest

from drumspec import ccm, pdem, perturbation as pert
from drumspec.errors import ConformalityError, DegeneracyError, RangeError


def gaussian(amplitude=0.3, width=1.0, center=0.0):
    def f(x):
        return amplitude * np.exp(-((x - center) / width) ** 2)
    return f


def test_zero_perturbation_gives_zero_corrections():
    ref = pdem.OscillatorReference(20)
    prob = pdem.PdemProblem(ref, lambda x: np.zeros_like(x))
    rep = pdem.pdem_pt(prob, 0, 2, 20)
    assert rep.e0 == pytest.approx(1.0, abs=1e-12)
    assert np.allclose(rep.corrections, 0.0, atol=1e-13)


def test_box_reference_matches_pure_sigma_theory_bitwise():
    # with V = V0 (zero difference) the corrections collapse to the pure
    # density expansion; on the box reference the two code paths agree
    # to the last bit at equal cutoffs
    ref = pdem.BoxReference(16, 1.0)
    sigma_fn = gaussian(0.2, 0.5, 0.1)
    prob = pdem.PdemProblem(ref, sigma_fn)
    el = pdem.PdemElements(prob, 16)
    rep = pdem.pdem_pt(prob, 3, 2, 16, elements=el)
    sig = pert.SigmaMatrix("box", list(range(1, 17)), el.energies, el.sigma)
    ref_rep = pert.pt_energy(sig, 3, order=2)
    assert rep.corrections[0] == ref_rep.corrections[0]
    assert rep.corrections[1] == ref_rep.corrections[1]


def test_oscillator_levels_and_uncertainty_ground():
    ref = pdem.OscillatorReference(30)
    prob = pdem.PdemProblem(ref, lambda x: np.zeros_like(x),
                            special_form=pdem.SCALED_POTENTIAL)
    dx, dp, product = pdem.uncertainty_product(prob, 0, 30)
    assert product == pytest.approx(0.5, abs=1e-10)
    assert dx == pytest.approx(np.sqrt(0.5), abs=1e-10)


def test_wavefunction_first_order():
    ref = pdem.OscillatorReference(24)
    eta = 1e-3
    prob = pdem.PdemProblem(ref, gaussian(eta, 0.9), special_form=pdem.SCALED_POTENTIAL)
    coeffs = pdem.pdem_wavefunction_first(prob, 0, 24)
    assert coeffs[0] == 1.0
    # even sigma: odd states do not couple to the even ground state
    assert abs(coeffs[1]) < 1e-14
    assert abs(coeffs[3]) < 1e-14
    # norm deviates from one only at second order in the strength
    norm_dev = abs(np.linalg.norm(coeffs) - 1.0)
    assert norm_dev < 10 * eta ** 2

    prob_wrong = pdem.PdemProblem(ref, gaussian(eta, 0.9))
    with pytest.raises(ValueError):
        pdem.pdem_wavefunction_first(prob_wrong, 0, 24)


def test_uncertainty_product_correction_is_second_order_for_oscillator():
    # for the oscillator the first-order shifts of Delta x and Delta p cancel
    # in the product, which therefore stays at its minimum up to O(eta^2)
    ref = pdem.OscillatorReference(30)
    for eta in (2e-2, 1e-2):
        prob = pdem.PdemProblem(ref, gaussian(eta, 1.3),
                                special_form=pdem.SCALED_POTENTIAL)
        dx, dp, product = pdem.uncertainty_product(prob, 0, 30)
        assert abs(dx - np.sqrt(0.5)) > 1e-4          # individual shifts are O(eta)
        assert product == pytest.approx(0.5, abs=1e-12)


def test_scaled_potential_difference_definition():
    ref = pdem.OscillatorReference(8)
    prob = pdem.PdemProblem(ref, gaussian(0.2), special_form=pdem.SCALED_POTENTIAL)
    x = np.array([0.0, 0.7])
    expected = x ** 2 / np.sqrt(1 + gaussian(0.2)(x)) - x ** 2
    assert np.allclose(prob.potential_difference(x), expected, atol=1e-14)
    with pytest.raises(ValueError):
        pdem.PdemProblem(ref, gaussian(0.2), potential=lambda x: x ** 2,
                         special_form=pdem.SCALED_POTENTIAL)


def test_cross_term_two_evaluations_agree_with_completeness_defect():
    ref = pdem.BoxReference(40, 1.0)
    sigma_fn = gaussian(0.3, 0.4, 0.15)
    wdiff_fn = gaussian(0.2, 0.5, -0.2)
    prob = pdem.PdemProblem(ref, sigma_fn, potential=lambda x: wdiff_fn(x))
    el = pdem.PdemElements(prob, 40)
    n = 2
    eps = el.energies
    mask = np.ones(40, bool)
    mask[n] = False
    omega = eps[n] - eps[mask]
    raw = -np.sum((eps[n] + eps[mask]) / omega * el.sigma[n, mask] * el.wdiff[mask, n])
    reduced = -(el.sigma_wdiff[n, n] - el.sigma[n, n] * el.wdiff[n, n]) \
        - 2 * np.sum(eps[mask] / omega * el.sigma[n, mask] * el.wdiff[mask, n])
    defect = el.completeness_defect(n)
    # the two evaluations differ exactly by the completeness defect
    assert abs(raw - reduced) <= defect + 1e-10


def test_numeric_operator_sho_convention():
    # Sigma = 1, V = x^2 + y^2 on a generous box: 2D oscillator ground = 2
    n = 60
    half = 7.0
    nodes = ccm.grid_nodes(n) * half
    gx, gy = np.meshgrid(nodes, nodes, indexing="ij")
    op = pdem.assemble_with_potential(np.ones_like(gx), gx ** 2 + gy ** 2, n,
                                      half_width=half)
    w = pdem.solve_lowest(op, 3)
    assert w[0] == pytest.approx(2.0, abs=1e-8)
    assert w[1] == pytest.approx(4.0, abs=1e-7)


def test_numeric_operator_1d_plain_box():
    # Sigma = 1, V = 0: plain collocation Laplacian on [-1, 1]
    n = 32
    op = pdem.assemble_with_potential(np.ones(n - 1), np.zeros(n - 1), n)
    w = pdem.solve_lowest(op, 2)
    assert w[0] == pytest.approx(np.pi ** 2 / 4, rel=1e-12)
    assert w[1] == pytest.approx(np.pi ** 2, rel=1e-12)


def test_numeric_operator_validation():
    with pytest.raises(ValueError):
        pdem.assemble_with_potential(np.ones(7), np.zeros(6), 8)
    with pytest.raises(ConformalityError):
        pdem.assemble_with_potential(-np.ones(7), np.zeros(7), 8)


def test_degenerate_reference_rejected():
    class DegenerateRef:
        n_max = 4
        energies = np.array([1.0, 2.0, 2.0, 3.0])

    with pytest.raises(DegeneracyError):
        pdem.PdemProblem(DegenerateRef(), lambda x: x)


def test_order_and_level_validation():
    ref = pdem.BoxReference(8)
    prob = pdem.PdemProblem(ref, lambda x: np.zeros_like(x))
    with pytest.raises(RangeError):
        pdem.pdem_pt(prob, 1, order=3, n_internal=8)
    with pytest.raises(RangeError):
        pdem.pdem_pt(prob, 99, order=2, n_internal=8)


def test_second_order_matches_numeric_oracle_box():
    # eta^3 residual when PT2 is compared with the collocation eigenvalue
    half, n = 1.0, 60
    ref = pdem.BoxReference(30, half)
    nodes = ccm.grid_nodes(n) * half
    sig_hat = 0.5 * np.exp(-(nodes / 0.35) ** 2)
    w_hat = 0.8 * np.exp(-((nodes - 0.2) / 0.3) ** 2)
    resid = []
    etas = (1e-2, 5e-3)
    for eta in etas:
        prob = pdem.PdemProblem(ref, lambda x, s=eta: s * 0.5 * np.exp(-(x / 0.35) ** 2),
                                lambda x, s=eta: s * 0.8 * np.exp(-((x - 0.2) / 0.3) ** 2))
        rep = pdem.pdem_pt(prob, 1, 2, 30)
        op = pdem.assemble_with_potential(1 + eta * sig_hat, eta * w_hat, n, half)
        resid.append(abs(pdem.solve_lowest(op, 1)[0] - rep.energy))
    slope = np.log(resid[0] / resid[1]) / np.log(etas[0] / etas[1])
    assert slope >= 2.7


def test_second_order_matches_scheme_family_oracle_oscillator():
    # same check around the oscillator; the numeric operator carries the
    # potential V0/Sigma + eta (V - V0) matching the expansion's bookkeeping
    ref = pdem.OscillatorReference(50)
    half, n = 9.0, 96
    nodes = ccm.grid_nodes(n) * half
    bump = 0.6 * np.exp(-nodes ** 2)
    v0 = nodes ** 2
    resid = []
    etas = (1e-2, 5e-3)
    for eta in etas:
        prob = pdem.PdemProblem(ref, lambda x, s=eta: s * 0.6 * np.exp(-x ** 2))
        rep = pdem.pdem_pt(prob, 0, 2, 50)
        op = pdem.assemble_with_potential(1 + eta * bump, v0 / (1 + eta * bump), n, half)
        resid.append(abs(pdem.solve_lowest(op, 1)[0] - rep.energy))
    slope = np.log(resid[0] / resid[1]) / np.log(etas[0] / etas[1])
    assert slope >= 2.7
