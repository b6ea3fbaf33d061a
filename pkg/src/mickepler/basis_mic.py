"""Spherical and parabolic bound-state bases of the generalized MIC-Kepler system.

All evaluators are vectorized over the coordinate arrays. Wavefunctions are
normalized in d^3r for any choice of :class:`~mickepler.channels.Constants`;
with natural units the radial and parabolic prefactors reduce to the
textbook ``2 eps^2`` and ``sqrt(2) eps^2``.
"""

from __future__ import annotations

import math

import numpy as np

from .channels import Channel, ParabolicQN, SphericalQN, energy_mic, epsilon_scale
from .coords import Parabolic3, Spherical3, parabolic_to_spherical, spherical_to_parabolic
from .fdiff import d1, d2
from .specfun import DomainError, jacobi_p, kummer_1f1, ln_gamma

FD_STEP = 1e-3


def _lgf(k) -> float:
    """ln(k!) for nonnegative (possibly non-integer) k."""
    return ln_gamma(float(k) + 1.0)


def angular_norm(qn: SphericalQN) -> float:
    """Normalization of Z_jm over the unit sphere.

    The two Gamma factors in the denominator pair delta1 with j + m_minus and
    delta2 with j - m_minus, as required by the Jacobi weight (1-x)^m2 (1+x)^m1.
    """
    ch = qn.channel
    k = float(qn.j - ch.m_plus)
    jm, d1_, d2_ = float(qn.j), ch.delta1, ch.delta2
    mm = float(ch.m_minus)
    log_n2 = (math.log(2 * jm + d1_ + d2_ + 1) + _lgf(k) + ln_gamma(k + ch.m1 + ch.m2 + 1)
              - math.log(4 * math.pi) - ln_gamma(jm + mm + d1_ + 1) - ln_gamma(jm - mm + d2_ + 1))
    return math.exp(0.5 * log_n2)


def angular_norm_as_printed(qn: SphericalQN) -> float:
    """Normalization with the Gamma arguments j -/+ m_minus as typeset in the source formula.

    Kept for reporting; differs from :func:`angular_norm` when m_minus != 0
    and delta1 != delta2.
    """
    ch = qn.channel
    k = float(qn.j - ch.m_plus)
    jm, d1_, d2_ = float(qn.j), ch.delta1, ch.delta2
    mm = float(ch.m_minus)
    log_n2 = (math.log(2 * jm + d1_ + d2_ + 1) + _lgf(k)
              + ln_gamma(jm + float(ch.m_plus) + d1_ + d2_ + 1)
              - math.log(4 * math.pi) - ln_gamma(jm - mm + d1_ + 1) - ln_gamma(jm + mm + d2_ + 1))
    return math.exp(0.5 * log_n2)


def z_angular(qn: SphericalQN, theta, phi):
    ch = qn.channel
    k = qn.j - ch.m_plus
    if k < 0 or k.denominator != 1:
        raise DomainError(f"j - m_plus must be a nonnegative integer, got {k}")
    theta = np.asarray(theta, dtype=float)
    if np.any((theta <= 0.0) | (theta >= math.pi)):
        raise DomainError("z_angular is evaluated on the open interval 0 < theta < pi")
    poly = jacobi_p(int(k), ch.m2, ch.m1, np.cos(theta))
    amp = angular_norm(qn) * np.cos(theta / 2) ** ch.m1 * np.sin(theta / 2) ** ch.m2 * poly
    return amp * np.exp(1j * float(ch.m + ch.s) * np.asarray(phi, dtype=float))


def radial_norm(qn: SphericalQN) -> float:
    ch = qn.channel
    eps = epsilon_scale(qn.n, ch)
    n, j, dsum = float(qn.n), float(qn.j), ch.delta1 + ch.delta2
    a = ch.constants.bohr_radius
    return (2.0 * eps**2 * math.sqrt(a)
            * math.exp(0.5 * (ln_gamma(n + j + dsum + 1) - _lgf(n - j - 1)) - ln_gamma(2 * j + dsum + 2)))


def r_radial(qn: SphericalQN):
    """Return R_nj as a function of r (r > 0)."""
    ch = qn.channel
    eps = epsilon_scale(qn.n, ch)
    j, dsum = float(qn.j), ch.delta1 + ch.delta2
    power = j + 0.5 * dsum
    log_c = math.log(radial_norm(qn))
    a_param = float(-qn.n + qn.j + 1)
    c_param = 2 * j + dsum + 2

    def radial(r):
        r = np.asarray(r, dtype=float)
        if np.any(r <= 0.0):
            raise DomainError("r_radial requires r > 0")
        x = 2.0 * eps * r
        envelope = np.exp(log_c + power * np.log(x) - eps * r)
        return envelope * kummer_1f1(a_param, c_param, x)

    return radial


def psi_spherical(qn: SphericalQN, p: Spherical3):
    return r_radial(qn)(p.r) * z_angular(qn, p.theta, p.phi)


def phi_parabolic(n_i: int, m_i: float, eps: float):
    """Return Phi_{n_i m_i}(x), normalized so that int Phi^2 dx = 1/eps."""
    if n_i < 0 or int(n_i) != n_i:
        raise DomainError(f"n_i must be a nonnegative integer, got {n_i!r}")
    log_c = 0.5 * (ln_gamma(n_i + m_i + 1) - _lgf(n_i)) - ln_gamma(m_i + 1)

    def phi(x):
        x = np.asarray(x, dtype=float)
        if np.any(x <= 0.0):
            raise DomainError("phi_parabolic requires x > 0")
        t = eps * x
        return np.exp(log_c - 0.5 * t + 0.5 * m_i * np.log(t)) * kummer_1f1(-n_i, m_i + 1, t)

    return phi


def psi_parabolic(qn: ParabolicQN, p: Parabolic3):
    ch = qn.channel
    eps = epsilon_scale(qn.n, ch)
    pref = math.sqrt(2.0 * ch.constants.bohr_radius) * eps**2 / math.sqrt(2 * math.pi)
    f1 = phi_parabolic(qn.n1, ch.m1, eps)(p.xi)
    f2 = phi_parabolic(qn.n2, ch.m2, eps)(p.eta)
    return pref * f1 * f2 * np.exp(1j * float(ch.m + ch.s) * np.asarray(p.phi, dtype=float))


def psi(qn, p: Spherical3):
    """Evaluate a spherical or parabolic state at spherical coordinates."""
    if isinstance(qn, SphericalQN):
        return psi_spherical(qn, p)
    return psi_parabolic(qn, spherical_to_parabolic(p))


def psi_at_parabolic(qn, p: Parabolic3):
    if isinstance(qn, ParabolicQN):
        return psi_parabolic(qn, p)
    return psi_spherical(qn, parabolic_to_spherical(p))


def energy_of(qn) -> float:
    return energy_mic(qn.n, qn.channel)


def apply_angular_operator(f, channel: Channel, theta, phi, h: float = FD_STEP):
    """Apply the angular part of the spherical-form Hamiltonian (times r^2, in units hbar^2/2mu).

    A = -[(1/sin)d_theta(sin d_theta) + (1/sin^2) d_phi^2] + 2is/(1-cos) d_phi
        + 2s^2/(1-cos) + (2mu/hbar^2)[lambda1/(1+cos) + lambda2/(1-cos)]

    ``f(theta, phi)`` must accept arrays. Eigenfunctions Z_jm have eigenvalue
    (j + delta_bar)(j + delta_bar + 1).
    """
    theta = np.asarray(theta, dtype=float)
    if np.any((theta < 10 * h) | (theta > math.pi - 10 * h)):
        raise DomainError("apply_angular_operator: theta within 10 h of a pole")
    c = channel.constants
    s = float(channel.s)
    ct, st = np.cos(theta), np.sin(theta)
    f0 = f(theta, phi)
    ft = d1(lambda t: f(t, phi), theta, h)
    ftt = d2(lambda t: f(t, phi), theta, h)
    fp = d1(lambda p: f(theta, p), phi, h)
    fpp = d2(lambda p: f(theta, p), phi, h)
    coup = 2 * c.mass / c.hbar**2
    return (-(ftt + ct / st * ft + fpp / st**2)
            + 2j * s / (1 - ct) * fp
            + (2 * s * s / (1 - ct) + coup * (channel.lambda1 / (1 + ct) + channel.lambda2 / (1 - ct))) * f0)


def apply_jz(f, s, phi, h: float = FD_STEP):
    """-(s + i d/dphi) f for f a function of phi."""
    return -(float(s) * f(phi) + 1j * d1(f, phi, h))


def apply_hamiltonian_mic(f, channel: Channel, p: Spherical3, h: float = FD_STEP):
    """H f for f(r, theta, phi), with derivatives by finite differences.

    H = -(hbar^2/2mu)[radial Laplacian - A/r^2] - e^2/r where A is the
    operator of :func:`apply_angular_operator`; the r step scales with r.
    """
    r = np.asarray(p.r, dtype=float)
    theta, phi = p.theta, p.phi
    c = channel.constants
    hr = h * np.maximum(r, c.bohr_radius * 0.25)
    hr = np.minimum(hr, r / 4)
    f0 = f(r, theta, phi)
    fr = d1(lambda x: f(x, theta, phi), r, hr)
    frr = d2(lambda x: f(x, theta, phi), r, hr)
    ang = apply_angular_operator(lambda t, q: f(r, t, q), channel, theta, phi, h)
    kin = -(c.hbar**2 / (2 * c.mass)) * (frr + 2 * fr / r - ang / r**2)
    return kin - c.charge**2 / r * f0


def state_function(qn):
    """Wrap a state as f(r, theta, phi) for the operator appliers."""
    return lambda r, t, q: psi(qn, Spherical3(r, t, q))


def declared_x_eigenvalue(qn: ParabolicQN) -> float:
    return qn.x_eigenvalue
