import math

import numpy as np
import pytest

from twocenter.model import PhysicalSetup, StateLabel
from twocenter.trial import (ParamDomainError, TrialParams,
                             eval_guillemin_zener, eval_hund_mulliken,
                             eval_psi, eval_X, eval_Y, phase_of_trial_eta,
                             phase_of_trial_xi, pt_phase_eta_small,
                             pt_phase_xi_small, wkb_phase_eta_large,
                             wkb_phase_xi_large)

# published parameter set at the equilibrium distance
SETUP_EQ = PhysicalSetup(1.997193)
PARS_EQ = TrialParams(alpha=1.48407, gamma=1.0299, a1=0.9164, a2=0.05384,
                      b2=0.06, b3=0.00011, p=1.483403)
GS = StateLabel(0, 0, 0, +1)


def test_eval_X_closed_form_at_axis_end():
    # X(1) = (gamma+1)^(R/p-1) exp(-(alpha+p)/(gamma+1)) for the nodeless
    # sigma states; finite and positive with the published parameters
    kappa = SETUP_EQ.R / PARS_EQ.p
    expected = (PARS_EQ.gamma + 1.0) ** (kappa - 1.0) * math.exp(
        -(PARS_EQ.alpha + PARS_EQ.p) / (PARS_EQ.gamma + 1.0))
    got = eval_X(PARS_EQ, GS, SETUP_EQ, 1.0)
    assert got == pytest.approx(expected, rel=1e-14)
    assert got > 0.0


def test_eval_X_boundary_zero_for_lam1():
    lab = StateLabel(0, 0, 1, +1)
    assert eval_X(PARS_EQ, lab, SETUP_EQ, 1.0) == 0.0


def test_eval_X_node_zero():
    pars = PARS_EQ.replace(xi0=1.5)
    lab = StateLabel(1, 0, 0, +1)
    assert eval_X(pars, lab, SETUP_EQ, 1.5) == 0.0


def test_eval_Y_odd_branch_vanishes_at_origin():
    lab = StateLabel(0, 0, 0, -1)
    assert eval_Y(PARS_EQ, lab, 0.0) == 0.0


def test_eval_Y_even_branch_symmetric():
    # exact negation in, bit-identical values out
    half = np.linspace(0.0, 1.0, 21)
    etas = np.concatenate([-half[::-1], half])
    vals = eval_Y(PARS_EQ, GS, etas)
    assert np.array_equal(vals, vals[::-1])


def test_eval_Y_reduces_to_sinh():
    pars = TrialParams(alpha=1.0, gamma=1.0, a1=1.0, a2=0.0, b2=0.0, b3=0.0,
                       p=1.0)
    lab = StateLabel(0, 0, 0, -1)
    assert eval_Y(pars, lab, 0.5) == pytest.approx(math.sinh(0.5), rel=1e-15)


def test_eval_psi_phase_structure():
    lab = StateLabel(0, 0, 1, +1)
    psi = eval_psi(PARS_EQ, lab, SETUP_EQ, 1.5, 0.3, 0.0)
    assert psi.imag == 0.0
    mags = [abs(eval_psi(PARS_EQ, lab, SETUP_EQ, 1.5, 0.3, phi))
            for phi in (0.0, 0.7, 2.1, 5.5)]
    assert max(mags) - min(mags) < 1e-15 * max(mags)
    # sigma states are real
    assert eval_psi(PARS_EQ, GS, SETUP_EQ, 1.5, 0.3, 1.2).imag == 0.0


def test_eval_psi_parity():
    lab = StateLabel(0, 0, 0, -1)
    plus = eval_psi(PARS_EQ, lab, SETUP_EQ, 1.4, 0.6, 0.4)
    minus = eval_psi(PARS_EQ, lab, SETUP_EQ, 1.4, -0.6, 0.4)
    assert minus == pytest.approx(-plus, rel=1e-14)


def test_param_domain_checks():
    with pytest.raises(ParamDomainError):
        TrialParams(1.0, -1.5, 1.0, 0.0, 0.0, 0.0, 1.0).validate()
    with pytest.raises(ParamDomainError):
        TrialParams(1.0, 1.0, 1.0, 0.0, -2.0, 0.5, 1.0).validate()
    with pytest.raises(ParamDomainError):
        TrialParams(1.0, 1.0, 1.0, 0.0, 0.0, 0.0, 1.0, xi0=0.8).validate()
    with pytest.raises(ParamDomainError):
        eval_X(PARS_EQ, GS, SETUP_EQ, 0.5)


# ----------------------------------------------------------------------
# phase machinery


def test_phase_derivatives_vs_finite_differences():
    # central-difference oracle at xi = 2 with the published parameters;
    # the second derivative gets a larger step to stay above the
    # cancellation floor
    xi = 2.0
    h = 1e-5
    phi, dphi, ddphi = phase_of_trial_xi(PARS_EQ, GS, SETUP_EQ,
                                         np.array([xi - h, xi, xi + h]))
    fd1 = (phi[2] - phi[0]) / (2.0 * h)
    assert dphi[1] == pytest.approx(fd1, rel=1e-8)
    h = 5e-4
    phi, _, ddphi = phase_of_trial_xi(PARS_EQ, GS, SETUP_EQ,
                                      np.array([xi - h, xi, xi + h]))
    fd2 = (phi[2] - 2.0 * phi[1] + phi[0]) / h**2
    assert ddphi[1] == pytest.approx(fd2, rel=1e-5)


@pytest.mark.parametrize("parity", [+1, -1])
def test_eta_phase_derivatives_vs_finite_differences(parity):
    lab = StateLabel(0, 0, 0, parity)
    h = 1e-5
    for eta in (0.02, 0.4, -0.75):
        grid = np.array([eta - h, eta, eta + h])
        rho, drho, ddrho = phase_of_trial_eta(PARS_EQ, lab, grid)
        assert drho[1] == pytest.approx((rho[2] - rho[0]) / (2 * h), rel=1e-7,
                                        abs=1e-9)
        assert ddrho[1] == pytest.approx(
            (rho[2] - 2 * rho[1] + rho[0]) / h**2, rel=1e-4, abs=1e-6)


def test_phase_slope_approaches_p():
    _, dphi, _ = phase_of_trial_xi(PARS_EQ, GS, SETUP_EQ,
                                   np.array([1e4, 1e6, 1e9]))
    gaps = np.abs(dphi - PARS_EQ.p)
    assert gaps[2] < 1e-9 * PARS_EQ.p
    assert gaps[0] / gaps[1] == pytest.approx(100.0, rel=0.01)  # ~ 1/xi


def test_phase_large_gamma_degeneration():
    # gamma -> inf with alpha/gamma fixed: the exponent degenerates to a
    # linear slope alpha/gamma * xi without overflow
    c = 0.7
    gamma = 1e9
    pars = TrialParams(alpha=c * gamma, gamma=gamma, a1=0.5, a2=0.0, b2=0.0,
                       b3=0.0, p=1.3)
    xi = np.array([1.0, 5.0, 20.0])
    phi, dphi, _ = phase_of_trial_xi(pars, GS, SETUP_EQ, xi)
    assert np.all(np.isfinite(phi))
    # subtract the log term; the remainder slope is ~ alpha/gamma
    kappa = SETUP_EQ.R / pars.p
    u_slope = dphi - (1.0 - kappa) / (gamma + xi)
    assert u_slope == pytest.approx(np.full(3, c), rel=1e-6)


def test_phase_asymptotic_matching_growing_terms():
    # the ansatz exponent reproduces p xi and the power of (gamma+xi)
    # reproduces the log-xi coefficient: the residual slope decays ~ 1/xi^2
    kappa = SETUP_EQ.R / PARS_EQ.p
    for xi in (1e3, 1e4):
        _, dphi, _ = phase_of_trial_xi(PARS_EQ, GS, SETUP_EQ, xi)
        resid = dphi - PARS_EQ.p - (1.0 - kappa) / xi
        assert abs(resid) * xi**2 < 10.0


# ----------------------------------------------------------------------
# printed asymptotic series


def _fit_coefficients(fn, basis, grid):
    vals = fn(grid)
    M = np.vstack([b(grid) for b in basis]).T
    coef, *_ = np.linalg.lstsq(M, vals, rcond=None)
    return coef


def test_small_xi_series_printed_coefficients():
    # fit the module series on a tiny grid and compare with the printed
    # closed forms; no constant or linear term is present
    E, A = -1.20526842899, 0.8117295846
    setup = PhysicalSetup(2.0)
    from twocenter.model import p_from_energy
    p = p_from_energy(E, setup)
    assert pt_phase_xi_small(E, A, GS, setup, 0.0) == 0.0
    # divide out xi^2 first: the remaining quadratic fit is well conditioned
    grid = np.linspace(1e-3, 6e-3, 9)
    c = _fit_coefficients(
        lambda x: pt_phase_xi_small(E, A, GS, setup, x) / x**2,
        [lambda x: np.ones_like(x), lambda x: x, lambda x: x**2], grid)
    assert c[0] == pytest.approx(-A / 2.0, rel=1e-12)
    assert c[1] == pytest.approx(-setup.R / 3.0, rel=1e-10)
    assert c[2] == pytest.approx((p * p + A * A - 3.0 * A) / 12.0, rel=1e-8)


def test_large_xi_series_printed_coefficients():
    E, A = -1.20526842899, 0.8117295846
    setup = PhysicalSetup(2.0)
    from twocenter.model import p_from_energy
    p = p_from_energy(E, setup)
    kap = setup.R / p
    grid = np.geomspace(50.0, 5e3, 12)
    c = _fit_coefficients(lambda x: wkb_phase_xi_large(E, A, GS, setup, x),
                          [lambda x: x, np.log, lambda x: 1.0 / x], grid)
    assert c[0] == pytest.approx(p, rel=1e-12)
    assert c[1] == pytest.approx(-(kap - 1.0), rel=1e-9)
    assert c[2] == pytest.approx(
        0.5 * ((A + (kap - 1.0) * kap) / p - p), rel=1e-6)


def test_wkb_coefficient_zeros():
    # E' = -4 makes p = R, i.e. kappa = R/p = 1: the log coefficient
    # vanishes, and at A = p^2 the 1/(2 xi) coefficient vanishes too, so
    # the phase is exactly p xi
    setup = PhysicalSetup(1.5)
    E = -4.0 + setup.repulsion
    p = setup.R
    xi = np.array([50.0, 500.0])
    ph = wkb_phase_xi_large(E, p * p, GS, setup, xi)
    assert np.max(np.abs(ph - p * xi)) < 1e-12


def test_eta_series_printed_coefficients():
    # eta-channel analogues with the printed signs (no cubic term)
    E, A = -1.20526842899, 0.8117295846
    setup = PhysicalSetup(2.0)
    from twocenter.model import p_from_energy
    p = p_from_energy(E, setup)
    grid = np.linspace(1e-3, 6e-3, 9)
    c = _fit_coefficients(
        lambda x: pt_phase_eta_small(E, A, GS, setup, x) / x**2,
        [lambda x: np.ones_like(x), lambda x: x**2, lambda x: x], grid)
    assert c[0] == pytest.approx(-A / 2.0, rel=1e-12)
    assert c[1] == pytest.approx((p * p + A * A - 3.0 * A) / 12.0, rel=1e-8)
    assert abs(c[2]) < 1e-8  # odd term absent (b = 0 in this channel)
    grid = np.geomspace(50.0, 5e3, 12)
    c = _fit_coefficients(lambda x: wkb_phase_eta_large(E, A, GS, setup, x),
                          [lambda x: x, np.log, lambda x: 1.0 / x], grid)
    assert c[0] == pytest.approx(-p, rel=1e-12)
    assert c[1] == pytest.approx(1.0, rel=1e-9)
    assert c[2] == pytest.approx(-0.5 * (A / p - p), rel=1e-6)


# ----------------------------------------------------------------------
# baseline two-exponential functions


def test_hund_mulliken_matches_distance_form():
    setup = PhysicalSetup(2.0)
    alpha2 = 0.7
    rng = np.random.default_rng(7)
    xi = 1.0 + 3.0 * rng.random(20)
    eta = -1.0 + 2.0 * rng.random(20)
    a = setup.a
    r1 = a * (xi - eta)
    r2 = a * (xi + eta)
    direct = np.exp(-2 * alpha2 * r1) + np.exp(-2 * alpha2 * r2)
    prolate = eval_hund_mulliken(alpha2, setup, +1, xi, eta)
    assert np.max(np.abs(prolate / direct - 1.0)) < 1e-13


def test_hund_mulliken_odd_vanishes_at_midplane():
    assert eval_hund_mulliken(0.7, PhysicalSetup(2.0), -1, 1.5, 0.0) == 0.0


def test_guillemin_zener_reduces_to_hund_mulliken():
    setup = PhysicalSetup(2.0)
    xi, eta = 1.7, 0.3
    gz = eval_guillemin_zener(0.6, 0.6, setup, +1, xi, eta)
    # alpha3 = alpha4 kills the eta dependence entirely (cosh(0) = 1)
    gz_other_eta = eval_guillemin_zener(0.6, 0.6, setup, +1, xi, -0.9)
    assert gz == pytest.approx(gz_other_eta, rel=1e-15)
    hm = eval_hund_mulliken(0.6, setup, +1, xi, 0.0)
    assert gz == pytest.approx(2.0 * math.exp(-1.2 * setup.R * xi), rel=1e-15)
    assert hm == pytest.approx(2.0 * math.exp(-0.6 * setup.R * xi), rel=1e-15)
