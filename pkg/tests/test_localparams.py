import numpy as np
import pytest

from circlepoly import (
    CircleMeasure,
    ab_diagnostics,
    ladder_from_coeffs,
    local_approx_error,
    local_params,
    zero_distance,
)
from circlepoly.errors import DomainError
from circlepoly.localparams import gamma


def _random_F(rng, n, radius):
    r = radius * np.sqrt(rng.uniform(size=n))
    return r * np.exp(2j * np.pi * rng.uniform(size=n))


def test_gamma_is_half_rotation_root():
    for n in (1, 4, 17):
        assert abs(gamma(n) ** n + 1.0) < 1e-12


def test_sum_of_squares_identity():
    rng = np.random.default_rng(20)
    sys = ladder_from_coeffs(_random_F(rng, 24, 1.0))
    for n in (4, 12, 24):
        s = np.exp(2j * np.pi * rng.uniform())
        lp = local_params(sys, s, n)
        assert abs(lp.sum_of_squares() - 2.0) < 1e-12


def test_individual_bounds():
    rng = np.random.default_rng(21)
    sys = ladder_from_coeffs(_random_F(rng, 16, 1.0))
    lp = local_params(sys, np.exp(0.3j), 16)
    root2 = np.sqrt(2.0) + 1e-12
    assert abs(lp.A) <= root2 and abs(lp.B) <= root2
    assert abs(lp.Atilde) <= root2 and abs(lp.Btilde) <= root2


def test_interpolation_is_exact_at_both_nodes():
    rng = np.random.default_rng(22)
    sys = ladder_from_coeffs(_random_F(rng, 20, 0.8))
    s = np.exp(1.1j)
    n = 20
    lp = local_params(sys, s, n)
    for z in (s, s * gamma(n)):
        assert abs(sys.phi[n](z) - lp.A * z ** n - lp.B) < 1e-12
        assert abs(sys.phitilde[n](z) - lp.Atilde * z ** n - lp.Btilde) < 1e-12


def test_local_params_domain():
    sys = ladder_from_coeffs(np.zeros(4))
    with pytest.raises(DomainError):
        local_params(sys, 0.5, 2)
    with pytest.raises(DomainError):
        local_params(sys, 1.0, 0)


def test_local_approx_error_zero_coeffs():
    # phi_n = z^n: the local model A z^n + B is exact everywhere
    sys = ladder_from_coeffs(np.zeros(32))
    s = np.exp(0.2j)
    err = local_approx_error(sys, s, 32, s * np.exp(0.05j))
    assert err < 1e-12


def test_local_approx_error_small_for_mu_r():
    sys = ladder_from_coeffs(np.concatenate([[0.5], np.zeros(31)]))
    s = 1j
    n = 32
    z = s * np.exp(1j * 2.0 / n)
    assert local_approx_error(sys, s, n, z) < 0.05


def test_local_approx_error_preconditions():
    sys = ladder_from_coeffs(np.zeros(32))
    with pytest.raises(DomainError):
        local_approx_error(sys, 1j, 32, 1j, C=3.0)
    with pytest.raises(DomainError):
        local_approx_error(sys, 1j, 8, 1j, C=4.0)
    with pytest.raises(DomainError):
        local_approx_error(sys, 1j, 32, -1j)


def test_ab_diagnostics_decay_for_mu_r():
    sys = ladder_from_coeffs(np.concatenate([[0.5], np.zeros(63)]))
    mu = CircleMeasure.mu_r(0.5)
    d8 = ab_diagnostics(sys, mu, 1j, 8)
    d64 = ab_diagnostics(sys, mu, 1j, 64)
    assert d64["prod"] < d8["prod"]
    assert d64["diff"] < d8["diff"]
    ws = mu.density_at(1j)
    assert abs(d8["w_inv"] - 1.0 / np.conj(ws)) < 1e-12


def test_zero_distance_mu_r():
    # monic Phi_n = z^{n-1} (z + r): roots at 0 and -r
    r = 0.5
    sys = ladder_from_coeffs(np.concatenate([[r], np.zeros(5)]))
    assert abs(zero_distance(sys, 1.0, 4) - 1.0) < 1e-8
    assert abs(zero_distance(sys, -1.0, 4) - 0.5) < 1e-8
    with pytest.raises(DomainError):
        zero_distance(sys, 1.0, 0)
