"""4D double singular oscillator built by pulling back the MIC-Kepler bases.

H = -(hbar^2/2mu) sum_mu d^2/du_mu^2 + mu omega^2 u^2/2
    + c1/(u0^2 + u1^2) + c2/(u2^2 + u3^2)

State (N, ...) at frequency omega(n) from :func:`osc_params_from_level` has
energy hbar omega (N + delta1 + delta2 + 2) = 4 e^2.
"""

from __future__ import annotations

import numpy as np

from .basis_mic import FD_STEP, psi_parabolic, psi_spherical
from .channels import OscCylindricalQN, OscSphericalQN
from .coords import Cartesian4, DoublePolar4, Hyperspherical4, Parabolic3, Spherical3
from .fdiff import d1, d2
from .ks_duality import (DegeneratePointError, OscillatorParams, amplitude_factor,
                         cart4_to_double_polar, cart4_to_hyperspherical,
                         double_polar_relations, lift_wavefunction, osc_params_from_level)
from .specfun import DomainError

__all__ = [
    "OscSphericalQN", "OscCylindricalQN", "osc_energy", "psi_osc_spherical",
    "psi_osc_cylindrical", "psi_osc", "apply_L2", "apply_osc_hamiltonian",
    "osc_hamiltonian_residual", "laplacian_cartesian", "laplacian_hyperspherical",
]


def params_for(qn) -> OscillatorParams:
    """Frequency at which ``qn`` is the partner of its MIC-Kepler level."""
    mic = qn.mic()
    return osc_params_from_level(mic.n, mic.channel)


def osc_energy(qn, params: OscillatorParams | None = None) -> float:
    params = params or params_for(qn)
    ch = qn.channel
    return params.hbar * params.omega * (qn.N + ch.delta1 + ch.delta2 + 2.0)


def psi_osc_spherical(qn: OscSphericalQN, h: Hyperspherical4):
    mic = qn.mic()
    lifted = lift_wavefunction(lambda p: psi_spherical(mic, p), mic.channel.s)
    u = np.asarray(h.u, dtype=float)
    return amplitude_factor(mic.n, mic.channel) * lifted(Spherical3(u**2, h.beta, h.alpha), h.gamma)


def psi_osc_cylindrical(qn: OscCylindricalQN, d: DoublePolar4):
    mic = qn.mic()
    xi, eta, phi, gamma = double_polar_relations(d)
    lifted = lift_wavefunction(lambda p: psi_parabolic(mic, p), mic.channel.s)
    return amplitude_factor(mic.n, mic.channel) * lifted(Parabolic3(xi, eta, phi), gamma)


def psi_osc(qn, u: Cartesian4):
    """Either oscillator family evaluated at Cartesian points."""
    if isinstance(qn, OscSphericalQN):
        return psi_osc_spherical(qn, cart4_to_hyperspherical(u))
    return psi_osc_cylindrical(qn, cart4_to_double_polar(u))


def apply_L2(f, alpha, beta, gamma, h: float = FD_STEP):
    """Finite-difference L^2 on f(alpha, beta, gamma)."""
    beta = np.asarray(beta, dtype=float)
    if np.any((beta < 10 * h) | (beta > np.pi - 10 * h)):
        raise DomainError("apply_L2: beta within 10 h of a pole")
    sb, cb = np.sin(beta), np.cos(beta)
    fb = d1(lambda b: f(alpha, b, gamma), beta, h)
    fbb = d2(lambda b: f(alpha, b, gamma), beta, h)
    faa = d2(lambda a: f(a, beta, gamma), alpha, h)
    fgg = d2(lambda g: f(alpha, beta, g), gamma, h)
    fag = d1(lambda a: d1(lambda g: f(a, beta, g), gamma, h), alpha, h)
    return -(fbb + cb / sb * fb + (faa - 2 * cb * fag + fgg) / sb**2)


def laplacian_cartesian(f, u: Cartesian4, h: float = FD_STEP):
    """sum_mu d^2 f / du_mu^2 for f taking a Cartesian4."""
    comps = list(u)
    total = 0.0
    for k in range(4):
        def along(x, k=k):
            c = list(comps)
            c[k] = x
            return f(Cartesian4(*c))
        total = total + d2(along, comps[k], h)
    return total


def laplacian_hyperspherical(f, p: Hyperspherical4, h: float = FD_STEP):
    """u^-3 d_u(u^3 d_u f) - 4 u^-2 L^2 f for f taking a Hyperspherical4."""
    u = np.asarray(p.u, dtype=float)
    hu = h * np.maximum(u, 1.0)
    fu = d1(lambda x: f(Hyperspherical4(x, p.alpha, p.beta, p.gamma)), u, hu)
    fuu = d2(lambda x: f(Hyperspherical4(x, p.alpha, p.beta, p.gamma)), u, hu)
    l2 = apply_L2(lambda a, b, g: f(Hyperspherical4(u, a, b, g)), p.alpha, p.beta, p.gamma, h)
    return fuu + 3.0 / u * fu - 4.0 / u**2 * l2


def apply_osc_hamiltonian(f, qn, params: OscillatorParams, u: Cartesian4, h: float = FD_STEP):
    u = Cartesian4(*(np.asarray(c, dtype=float) for c in u))
    pa = u.u0**2 + u.u1**2
    pb = u.u2**2 + u.u3**2
    if np.any((pa == 0.0) | (pb == 0.0)):
        raise DegeneratePointError("oscillator potential is singular on u0=u1=0 or u2=u3=0")
    potential = (0.5 * params.mass * params.omega**2 * (pa + pb) + qn.c1 / pa + qn.c2 / pb)
    return -(params.hbar**2 / (2 * params.mass)) * laplacian_cartesian(f, u, h) + potential * f(u)


def osc_hamiltonian_residual(qn, samples: Cartesian4, params: OscillatorParams | None = None,
                             h: float = FD_STEP) -> float:
    """max |H psi - eps psi| / (|eps| max |psi|) over the sample points."""
    params = params or params_for(qn)
    eps = osc_energy(qn, params)
    f = lambda u: psi_osc(qn, u)  # noqa: E731
    vals = f(samples)
    hv = apply_osc_hamiltonian(f, qn, params, samples, h)
    return float(np.max(np.abs(hv - eps * vals)) / (abs(eps) * np.max(np.abs(vals))))
