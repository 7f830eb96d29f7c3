import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from circlepoly import (
    LaurentPoly,
    NLFSPair,
    circle_nodes,
    convergence_functional,
    forward,
    from_polys,
    ladder_from_coeffs,
    layer_strip,
    layer_strip_truncated,
    measure_from_pair,
    outer_from_modulus,
    to_polys,
    w_from_ab,
)
from circlepoly.errors import HypothesisError, MalformedPairError, StrippingError
from circlepoly.nlfs import B_SUP_THRESHOLD, exp_series, su2_residual


def _random_F(rng, n, radius=1.0):
    r = radius * np.sqrt(rng.uniform(size=n))
    return r * np.exp(2j * np.pi * rng.uniform(size=n))


def test_forward_single_factor():
    f = 0.5 + 0.25j
    pair = forward(np.array([f]))
    rho = np.sqrt(1 + abs(f) ** 2)
    assert abs(pair.a[0] - 1 / rho) < 1e-15
    assert abs(pair.b[1] - f / rho) < 1e-15
    assert pair.n == 1


def test_forward_empty_is_identity():
    pair = forward(np.zeros(0))
    assert pair.a == LaurentPoly.one()
    assert pair.b.is_zero()


def test_su2_law_exact():
    rng = np.random.default_rng(0)
    pair = forward(_random_F(rng, 20))
    assert su2_residual(pair.a, pair.b) < 1e-12
    pair.validate()


def test_a0_is_norm_product():
    rng = np.random.default_rng(1)
    F = _random_F(rng, 12)
    pair = forward(F)
    expect = np.prod(1.0 + np.abs(F) ** 2) ** -0.5
    assert abs(pair.a[0] - expect) < 1e-13


def test_supports():
    rng = np.random.default_rng(2)
    pair = forward(_random_F(rng, 9))
    assert pair.a.lo >= -9 and pair.a.hi <= 0
    assert pair.b.lo >= 1 and pair.b.hi <= 9


def test_validate_rejects_bad_supports():
    good = forward(np.array([0.5]))
    with pytest.raises(MalformedPairError):
        NLFSPair(good.a.shift(1), good.b, 1).validate()
    with pytest.raises(MalformedPairError):
        NLFSPair(good.a, good.b.shift(3), 1).validate()
    with pytest.raises(MalformedPairError):
        NLFSPair(good.a.scale(2), good.b, 1).validate()


def test_pair_json_roundtrip():
    rng = np.random.default_rng(3)
    pair = forward(_random_F(rng, 7))
    pair2 = NLFSPair.from_json(pair.to_json())
    assert (pair2.a - pair.a).max_abs() < 1e-15
    assert (pair2.b - pair.b).max_abs() < 1e-15
    assert pair2.n == 7


def test_to_polys_matches_ladder():
    rng = np.random.default_rng(4)
    F = _random_F(rng, 10)
    sys = ladder_from_coeffs(F)
    pair = forward(F)
    phi, phitilde = to_polys(pair)
    assert (phi - sys.phi[10]).max_abs() < 1e-12
    assert (phitilde - sys.phitilde[10]).max_abs() < 1e-12


def test_from_polys_roundtrip():
    rng = np.random.default_rng(5)
    pair = forward(_random_F(rng, 8))
    phi, phitilde = to_polys(pair)
    pair2 = from_polys(phi, phitilde, 8)
    assert (pair2.a - pair.a).max_abs() < 1e-12
    assert (pair2.b - pair.b).max_abs() < 1e-12


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 12), st.integers(0, 2 ** 32 - 1))
def test_layer_strip_inverts_forward(n, seed):
    rng = np.random.default_rng(seed)
    F = _random_F(rng, n)
    F2 = layer_strip(forward(F))
    assert np.max(np.abs(F2 - F)) < 1e-9


def test_layer_strip_rejects_non_su2():
    pair = forward(np.array([0.5]))
    broken = NLFSPair(pair.a.scale(1.01), pair.b, 1)
    with pytest.raises(StrippingError):
        layer_strip(broken)


def test_layer_strip_rejects_non_series():
    # SU(2)-valid but not a nonlinear Fourier series: reversing the a-part
    # keeps |a|^2 + |b|^2 = 1 on the circle but destroys the factorization
    pair = forward(np.array([0.8, -0.5 + 0.3j, 0.6j]))
    fudged = NLFSPair(pair.a.star().shift(-3), pair.b, 3)
    assert su2_residual(fudged.a, fudged.b) < 1e-12
    with pytest.raises(StrippingError):
        layer_strip(fudged)


def test_layer_strip_accepts_padded_label():
    # declaring a longer length than the true degree just yields trailing zeros
    pair = forward(np.array([0.4, 0.3]))
    F = layer_strip(NLFSPair(pair.a, pair.b, 3))
    assert np.max(np.abs(F - [0.4, 0.3, 0.0])) < 1e-12


def test_truncated_strip_recovers_finite_series():
    rng = np.random.default_rng(6)
    F = _random_F(rng, 6, 0.4)
    pair = forward(F)
    F2, report = layer_strip_truncated(pair.a, pair.b, 6, 64)
    assert np.max(np.abs(F2 - F)) < 1e-10
    assert report["b_residual_sup"] < 1e-10
    assert report["su2_grid_residual"] < 1e-9


def test_outer_recovers_polynomial_modulus():
    # log|1 + 0.5 z| on the circle determines the outer function 1 + 0.5 z
    zs = circle_nodes(1024)
    target = 1 + 0.5 * zs
    poly, err, clamped = outer_from_modulus(np.log(np.abs(target)), 64)
    assert err < 1e-10
    assert not clamped
    assert abs(poly[0] - 1.0) < 1e-10
    assert abs(poly[1] - 0.5) < 1e-10


def test_outer_clamps_log_floor():
    samples = np.full(256, -800.0)
    _, _, clamped = outer_from_modulus(samples, 16)
    assert clamped


def test_exp_series_matches_scalar_exp():
    h = LaurentPoly([0.3, 0.2, -0.1j])
    e = exp_series(h, 40)
    zs = circle_nodes(9) * 0.5
    assert np.max(np.abs(e(zs) - np.exp(h(zs)))) < 1e-12


def test_exp_series_rejects_nonanalytic():
    with pytest.raises(MalformedPairError):
        exp_series(LaurentPoly([1.0], lo=-1), 8)


def test_w_from_ab_mu_r_closed_form():
    r = 0.5
    pair = forward(np.array([r]))
    w = w_from_ab(pair.a, pair.b, 256)
    zs = circle_nodes(256)
    expect = (1 + r * r) / (1 - r * r - 2j * r * zs.imag)
    assert np.max(np.abs(w - expect)) < 1e-12


def test_w_from_ab_threshold_is_enforced():
    b = LaurentPoly([0.71], lo=1)
    logmod = 0.5 * np.log1p(-np.abs(b(circle_nodes(512))) ** 2)
    astar, _, _ = outer_from_modulus(logmod, 32)
    with pytest.raises(HypothesisError):
        w_from_ab(astar.star(), b, 512)
    assert 0.71 >= B_SUP_THRESHOLD


def test_measure_from_pair_normalizes():
    rng = np.random.default_rng(7)
    pair = forward(_random_F(rng, 5, 0.1))
    mu = measure_from_pair(pair.a, pair.b, 1024)
    assert abs(np.mean(mu.samples) - 1.0) < 1e-8


def test_convergence_functional_mu_r():
    # (phi* phitilde)(s) = conj(1/w_r(s)) once n >= 1, so the square matches
    r = 0.5
    pair = forward(np.array([r]))
    s = np.exp(0.7j)
    w = (1 + r * r) / (1 - r * r - 2j * r * np.imag(s))
    assert abs(convergence_functional(pair, s) - np.conj(1 / w) ** 2) < 1e-12
    with pytest.raises(MalformedPairError):
        convergence_functional(pair, 2.0)
