import math
from fractions import Fraction

import numpy as np
import pytest

from mickepler.basis_mic import z_angular
from mickepler.channels import (OscCylindricalQN, OscSphericalQN, SphericalQN, make_channel,
                                parabolic_states)
from mickepler.coords import Cartesian4, DoublePolar4, Hyperspherical4
from mickepler.fdiff import d1
from mickepler.ks_duality import OscillatorParams, double_polar_to_cart4, hyperspherical_to_cart4
from mickepler.oscillator4d import (apply_L2, laplacian_cartesian, laplacian_hyperspherical,
                                    osc_energy, osc_hamiltonian_residual, psi_osc,
                                    psi_osc_cylindrical, psi_osc_spherical)
from mickepler.quadrature import doublepolar_grid, hyperspherical_grid
from mickepler.specfun import DomainError

rng = np.random.default_rng(7)
HALF = Fraction(1, 2)


def samples(k=30, top=2.0):
    d = DoublePolar4(rng.uniform(0.05, top, k), rng.uniform(0.05, top, k),
                     rng.uniform(0, 2 * math.pi, k), rng.uniform(0, 2 * math.pi, k))
    return double_polar_to_cart4(d)


def test_osc_energy_examples():
    q0 = OscSphericalQN(0, 0, 0, 0)
    assert osc_energy(q0, OscillatorParams(2.0)) == 4.0
    assert osc_energy(OscSphericalQN(2, 1, 0, 0), OscillatorParams(1.0)) == 4.0
    assert osc_energy(q0) == 4.0
    # at M = M' = 0, delta1 = sqrt(4 lambda1) = 1 for lambda1 = 1/4, i.e. c1 = 1/2
    q = OscSphericalQN(0, 0, 0, 0, c1=0.5, c2=0.0)
    assert q.channel.delta1 + q.channel.delta2 == pytest.approx(1.0)
    assert osc_energy(q, OscillatorParams(1.7)) == pytest.approx(3 * 1.7)


def test_ground_state_value_and_norm():
    q = OscSphericalQN(0, 0, 0, 0)
    h = Hyperspherical4(1.0, 0.3, 1.1, 2.0)
    assert psi_osc_spherical(q, h) == pytest.approx(2 / math.pi * math.exp(-1), rel=1e-14)
    hg = hyperspherical_grid(0.25, 32, 8, 4, 4)
    coords, w = hg.mesh()
    assert abs(np.sum(w * np.abs(psi_osc_spherical(q, Hyperspherical4(*coords))) ** 2) - 1) <= 1e-9


def test_excited_norms():
    q = OscSphericalQN(2, 1, 0, 0)
    hg = hyperspherical_grid(0.5, 48, 16, 4, 4, radial_power=1.0)
    coords, w = hg.mesh()
    assert abs(np.sum(w * np.abs(psi_osc_spherical(q, Hyperspherical4(*coords))) ** 2) - 1) <= 1e-9
    qc = OscCylindricalQN(1, 0, 1, 0)
    ch = qc.channel
    eps = 1 / (float(qc.mic().n) + ch.delta_bar)
    dg = doublepolar_grid(1 / eps, 48, 8, rho1_power=ch.m1, rho2_power=ch.m2)
    coords, w = dg.mesh()
    assert abs(np.sum(w * np.abs(psi_osc_cylindrical(qc, DoublePolar4(*coords))) ** 2) - 1) <= 1e-9


def test_cylindrical_phase_factorization():
    qc = OscCylindricalQN(1, 1, 2, -1, 0.3, 0.2)
    base = psi_osc_cylindrical(qc, DoublePolar4(0.7, 0.9, 0.0, 0.0))
    for p1, p2 in ((0.4, 1.3), (3.0, 5.5), (6.0, 0.1)):
        v = psi_osc_cylindrical(qc, DoublePolar4(0.7, 0.9, p1, p2))
        assert v == pytest.approx(base * np.exp(1j * (2 * p1 - 1 * p2)), rel=1e-13)


def test_cylindrical_ground_equals_spherical_ground():
    u = samples()
    np.testing.assert_allclose(psi_osc(OscCylindricalQN(0, 0, 0, 0), u),
                               psi_osc(OscSphericalQN(0, 0, 0, 0), u), rtol=1e-13)


def test_gamma_eigenvalue():
    q = OscSphericalQN(3, Fraction(3, 2), HALF, HALF, 0.6, 0.2)
    g = rng.uniform(0, 4 * math.pi, 10)
    f = lambda gm: psi_osc_spherical(q, Hyperspherical4(1.1, 0.4, 1.2, gm))  # noqa: E731
    res = -1j * d1(f, g, 1e-3) - 0.5 * f(g)
    assert np.max(np.abs(res)) <= 1e-8 * np.max(np.abs(f(g)))


def _lifted_angular(qn: SphericalQN):
    s = float(qn.channel.s)
    return lambda a, b, g: z_angular(qn, b, a) * np.exp(1j * s * (g - a))


@pytest.mark.parametrize("s,m,j,expected", [(0, 0, 1, 2.0), ("1/2", "1/2", "1/2", 0.75),
                                             ("1/2", "-1/2", "3/2", 3.75)])
def test_L2_eigenvalues(s, m, j, expected):
    ch = make_channel(s, m)
    qn = SphericalQN(Fraction(j) + 1, Fraction(j), ch)
    f = _lifted_angular(qn)
    a, b, g = rng.uniform(0, 6, 10), rng.uniform(0.2, 2.9, 10), rng.uniform(0, 12, 10)
    res = apply_L2(f, a, b, g) - expected * f(a, b, g)
    assert np.max(np.abs(res)) <= 1e-6 * expected * np.max(np.abs(f(a, b, g)))


def test_L2_constant_and_pole_guard():
    a, b, g = np.array([0.3]), np.array([1.0]), np.array([0.5])
    assert abs(apply_L2(lambda a, b, g: np.ones_like(b) * 3.0, a, b, g)[0]) <= 1e-9
    with pytest.raises(DomainError):
        apply_L2(lambda a, b, g: b, a, np.array([1e-3]), g)


def test_laplacian_identity_smooth_function():
    def f(c):
        return np.exp(-0.3 * (c.u0**2 + 2 * c.u1**2 + 0.5 * c.u2**2 + c.u3**2)) * (1 + c.u0 * c.u3)

    h = Hyperspherical4(rng.uniform(0.3, 2, 10), rng.uniform(0, 2 * math.pi, 10),
                        rng.uniform(0.2, math.pi - 0.2, 10), rng.uniform(0, 4 * math.pi, 10))
    lhs = laplacian_cartesian(f, hyperspherical_to_cart4(h))
    rhs = laplacian_hyperspherical(lambda p: f(hyperspherical_to_cart4(p)), h)
    assert np.max(np.abs(lhs - rhs)) <= 1e-5 * np.max(np.abs(lhs))


def test_laplacian_identity_on_lifted_state():
    q = OscSphericalQN(2, 1, 0, 1, 0.4, 0.2)
    h = Hyperspherical4(rng.uniform(0.4, 1.8, 8), rng.uniform(0, 2 * math.pi, 8),
                       rng.uniform(0.3, math.pi - 0.3, 8), rng.uniform(0, 4 * math.pi, 8))
    lhs = laplacian_cartesian(lambda c: psi_osc(q, c), hyperspherical_to_cart4(h))
    rhs = laplacian_hyperspherical(lambda p: psi_osc_spherical(q, p), h)
    assert np.max(np.abs(lhs - rhs)) <= 1e-5 * np.max(np.abs(lhs))


def test_residual_examples():
    u = samples()
    assert osc_hamiltonian_residual(OscSphericalQN(0, 0, 0, 0), u) <= 1e-6
    assert osc_hamiltonian_residual(OscSphericalQN(2, 1, 0, 0), u) <= 1e-6
    ch = make_channel("1/2", "1/2", 0.3, 0.1)
    lowest = OscCylindricalQN.from_mic(parabolic_states(ch, ch.m_plus + 1)[0])
    assert osc_hamiltonian_residual(lowest, u) <= 1e-5


def test_residual_detects_wrong_frequency():
    u = samples()
    q = OscSphericalQN(2, 1, 0, 0)
    assert osc_hamiltonian_residual(q, u, OscillatorParams(1.3)) > 1e-2


def test_residual_detects_flipped_barrier_sign():
    # the oscillator only matches with both barrier terms repulsive
    from mickepler import oscillator4d as o4
    q = OscSphericalQN(0, 0, 0, 0, 0.8, 0.4)
    u = samples()
    assert osc_hamiltonian_residual(q, u) <= 1e-5
    params = o4.params_for(q)
    f = lambda c: psi_osc(q, c)  # noqa: E731
    pa, pb = u.u0**2 + u.u1**2, u.u2**2 + u.u3**2
    lap = laplacian_cartesian(f, u)
    wrong = -0.5 * lap + (0.5 * params.omega**2 * (pa + pb) + q.c1 / pa - q.c2 / pb) * f(u)
    eps = osc_energy(q, params)
    assert np.max(np.abs(wrong - eps * f(u))) / (eps * np.max(np.abs(f(u)))) > 1e-2


def test_degenerate_plane_rejected():
    from mickepler.ks_duality import DegeneratePointError
    from mickepler.oscillator4d import apply_osc_hamiltonian, params_for
    q = OscSphericalQN(0, 0, 0, 0)
    with pytest.raises(DegeneratePointError):
        apply_osc_hamiltonian(lambda c: psi_osc(q, c), q, params_for(q),
                              Cartesian4(np.array([0.0]), np.array([0.0]), np.array([1.0]),
                                         np.array([0.5])))
