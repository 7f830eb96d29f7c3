import numpy as np
import pytest

from circlepoly import (
    CircleMeasure,
    LaurentPoly,
    Z,
    circle_nodes,
    l_functional,
    measure_from_json,
    moment,
    pairing,
)
from circlepoly.errors import ConfigError, DomainError


def test_circle_nodes_are_unimodular_and_exact():
    zs = circle_nodes(16)
    assert np.allclose(np.abs(zs), 1.0)
    # quadrature with 16 nodes integrates z^j exactly for |j| < 16
    for j in range(-15, 16):
        val = np.mean(zs ** j)
        assert abs(val - (1.0 if j == 0 else 0.0)) < 1e-14


def test_uniform_moments():
    mu = CircleMeasure.uniform()
    assert abs(moment(mu, 0) - 1) < 1e-14
    for j in (1, -1, 3, -7):
        assert abs(moment(mu, j)) < 1e-14


def test_mu_r_moments_closed_form():
    # c_j = (-r)^j for j >= 0 and c_{-j} = r^j
    r = 0.5
    mu = CircleMeasure.mu_r(r)
    for j in range(0, 4):
        assert abs(moment(mu, j) - (-r) ** j) < 1e-12
        assert abs(moment(mu, -j) - r ** j) < 1e-12


def test_mu_r_domain():
    with pytest.raises(DomainError):
        CircleMeasure.mu_r(1.0)
    with pytest.raises(DomainError):
        CircleMeasure.mu_r(-0.1)


def test_atoms_are_exact():
    mu = CircleMeasure.from_atoms([(1.0, 0.5), (-1.0, 0.5)])
    assert abs(moment(mu, 0) - 1.0) < 1e-15
    assert abs(moment(mu, 1)) < 1e-15
    assert abs(moment(mu, 2) - 1.0) < 1e-15
    with pytest.raises(DomainError):
        CircleMeasure.from_atoms([(0.5, 1.0)])


def test_mixture_with_atoms():
    mu = CircleMeasure.uniform().scaled(0.5).with_atoms([(1j, 0.5)])
    assert abs(moment(mu, 0) - 1.0) < 1e-12
    assert abs(moment(mu, 1) - 0.5j) < 1e-12


def test_from_samples_roundtrip():
    # samples of a low-degree density are reproduced exactly on the grid
    m = 64
    zs = circle_nodes(m)
    vals = 1.0 + 0.3 * zs + 0.3 * np.conj(zs)
    mu = CircleMeasure.from_samples(vals)
    assert np.allclose(mu.density_on_grid(m), vals)
    assert np.allclose(mu.density_on_grid(2 * m)[::2], vals)
    assert np.allclose(mu.density_on_grid(m // 2), vals[::2])
    assert abs(mu.density_at(zs[3]) - vals[3]) < 1e-12


def test_from_samples_requires_power_of_two():
    with pytest.raises(DomainError):
        CircleMeasure.from_samples(np.ones(48))


def test_conjugate_measure():
    mu = CircleMeasure.mu_r(0.5)
    mub = mu.conjugate()
    assert abs(moment(mub, 1) - np.conj(moment(mu, -1))) < 1e-12


def test_adaptive_matches_fixed_for_smooth_density():
    mu = CircleMeasure.mu_r(0.3)
    f = lambda z: z ** 2 / (1.5 - z.real)
    assert abs(mu.integrate_adaptive(f, 64) - mu.integrate(f, 2 ** 16)) < 1e-9


def test_check_normalization():
    assert CircleMeasure.mu_r(0.5).check_normalization() < 1e-10
    bad = CircleMeasure.uniform().scaled(2.0)
    with pytest.raises(DomainError):
        bad.check_normalization()


def test_pairing_against_uniform():
    mu = CircleMeasure.uniform()
    # <z^j, z^k> = delta_{jk} under the uniform measure
    for j in range(3):
        for k in range(3):
            val = pairing(Z ** j if j else LaurentPoly.one(),
                          Z ** k if k else LaurentPoly.one(), mu)
            assert abs(val - (1.0 if j == k else 0.0)) < 1e-12


def test_l_functional_uniform_is_zero():
    mu = CircleMeasure.uniform()
    assert l_functional(mu, 1j, 8) == 0.0


def test_l_functional_atom_contribution():
    # an atom sitting at s contributes exactly (n+1)|weight|
    mu = CircleMeasure.uniform().scaled(0.75).with_atoms([(1.0, 0.25)])
    base = CircleMeasure.uniform().scaled(0.75)
    n = 7
    diff = l_functional(mu, 1.0, n) - l_functional(base, 1.0, n)
    assert abs(diff - (n + 1) * 0.25) < 1e-12


def test_l_functional_decays_for_mu_r():
    mu = CircleMeasure.mu_r(0.5)
    vals = [l_functional(mu, 1j, n, m=16384) for n in (8, 32, 128)]
    assert vals[0] > vals[1] > vals[2] > 0


def test_l_functional_domain():
    mu = CircleMeasure.uniform()
    with pytest.raises(DomainError):
        l_functional(mu, 2.0, 4)
    with pytest.raises(DomainError):
        l_functional(mu, 1.0, -1)


def test_measure_from_json_kinds():
    assert measure_from_json({"kind": "uniform"}).kind == "uniform"
    mu = measure_from_json({"kind": "mu_r", "r": 0.25})
    assert mu.r == 0.25
    vals = [[1.0, 0.0]] * 8
    assert measure_from_json({"kind": "samples", "values": vals}).samples.shape == (8,)
    mu = measure_from_json(
        {"kind": "atoms", "list": [{"point": [1, 0], "weight": [1, 0]}]}
    )
    assert mu.atoms == ((1 + 0j, 1 + 0j),)


def test_measure_from_json_composition():
    mu = measure_from_json(
        {
            "kind": "uniform",
            "scale": 0.5,
            "atoms": [{"point": [0, 1], "weight": [0.5, 0]}],
        }
    )
    assert abs(moment(mu, 0) - 1.0) < 1e-12


@pytest.mark.parametrize(
    "spec",
    [
        42,
        {},
        {"kind": "nope"},
        {"kind": "mu_r"},
        {"kind": "samples"},
        {"kind": "samples", "values": [[1.0]]},
        {"kind": "atoms", "list": [{"point": [1, 0]}]},
    ],
)
def test_measure_from_json_rejects_malformed(spec):
    with pytest.raises(ConfigError):
        measure_from_json(spec)
