"""Generalized Kustaanheimo-Stiefel map between R^4 and (R^3, gamma).

Angles conventions: with u0 + i u1 = rho1 e^{i phi1}, u2 + i u3 = rho2 e^{i phi2}
the 3D azimuth is alpha = phi1 + phi2 and the extra angle gamma = phi1 - phi2.
A point in R^4 fixes (alpha, gamma) only up to the joint shift
(alpha + 2pi, gamma + 2pi), so the two are always reduced together; a lifted
state with half-integer s changes sign if only one of them is shifted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .channels import Channel, OscCylindricalQN, OscSphericalQN, effective_n
from .coords import (Cartesian3, Cartesian4, DoublePolar4, Hyperspherical4, Spherical3)

TWO_PI = 2.0 * math.pi


class DegeneratePointError(ValueError):
    """Raised at points where the map or a phase is not defined."""


def _phases(u: Cartesian4):
    rho1 = np.hypot(u.u0, u.u1)
    rho2 = np.hypot(u.u2, u.u3)
    return rho1, rho2, np.arctan2(u.u1, u.u0), np.arctan2(u.u3, u.u2)


def ks_forward(u: Cartesian4):
    """Return (Cartesian3, gamma); gamma is NaN where rho1 = 0 or rho2 = 0.

    gamma equals atan2(u1, u0) - atan2(u3, u2) modulo 2pi and is shifted into
    [0, 4pi) so that it pairs with the azimuth atan2(y, x) mod 2pi of the image.
    """
    u0, u1, u2, u3 = (np.asarray(c, dtype=float) for c in u)
    rho1, rho2, phi1, phi2 = _phases(Cartesian4(u0, u1, u2, u3))
    if np.any((rho1 == 0.0) & (rho2 == 0.0)):
        raise DegeneratePointError("ks_forward: u = 0 has no KS image direction")
    x = 2.0 * (u0 * u2 - u1 * u3)
    y = 2.0 * (u0 * u3 + u1 * u2)
    z = u0**2 + u1**2 - u2**2 - u3**2
    _, gamma = _reduce(phi1 + phi2, phi1 - phi2)
    gamma = np.where((rho1 == 0.0) | (rho2 == 0.0), np.nan, gamma)
    if gamma.ndim == 0:
        gamma = float(gamma)
    return Cartesian3(x, y, z), gamma


def gamma_log_form(u: Cartesian4):
    """gamma = (i/2) ln[(u0 - i u1)(u2 + i u3) / ((u0 + i u1)(u2 - i u3))], principal branch.

    The logarithm fixes gamma only modulo pi.
    """
    a = np.asarray(u.u0) + 1j * np.asarray(u.u1)
    b = np.asarray(u.u2) + 1j * np.asarray(u.u3)
    return np.real(0.5j * np.log(np.conj(a) * b / (a * np.conj(b))))


def _reduce(alpha, gamma):
    k = np.floor(alpha / TWO_PI)
    alpha = alpha - TWO_PI * k
    gamma = np.mod(gamma - TWO_PI * k, 2 * TWO_PI)
    return alpha, gamma


def hyperspherical_to_cart4(h: Hyperspherical4) -> Cartesian4:
    a = h.u * np.cos(h.beta / 2)
    b = h.u * np.sin(h.beta / 2)
    p1 = (h.alpha + h.gamma) / 2
    p2 = (h.alpha - h.gamma) / 2
    return Cartesian4(a * np.cos(p1), a * np.sin(p1), b * np.cos(p2), b * np.sin(p2))


def cart4_to_hyperspherical(u: Cartesian4) -> Hyperspherical4:
    rho1, rho2, phi1, phi2 = _phases(u)
    if np.any((rho1 == 0.0) | (rho2 == 0.0)):
        raise DegeneratePointError("hyperspherical angles undefined on the poles beta = 0, pi")
    alpha, gamma = _reduce(phi1 + phi2, phi1 - phi2)
    return Hyperspherical4(np.hypot(rho1, rho2), alpha, 2.0 * np.arctan2(rho2, rho1), gamma)


def double_polar_to_cart4(d: DoublePolar4) -> Cartesian4:
    return Cartesian4(d.rho1 * np.cos(d.phi1), d.rho1 * np.sin(d.phi1),
                      d.rho2 * np.cos(d.phi2), d.rho2 * np.sin(d.phi2))


def cart4_to_double_polar(u: Cartesian4) -> DoublePolar4:
    rho1, rho2, phi1, phi2 = _phases(u)
    return DoublePolar4(rho1, rho2, np.mod(phi1, TWO_PI), np.mod(phi2, TWO_PI))


def double_polar_relations(d: DoublePolar4):
    """(xi, eta, phi, gamma) of a double-polar point.

    xi = 2 rho1^2 and eta = 2 rho2^2, so that r = (xi + eta)/2 = rho1^2 + rho2^2
    and z = (xi - eta)/2 = rho1^2 - rho2^2 agree with the KS image.
    phi and gamma are reduced jointly (phi in [0, 2pi), gamma in [0, 4pi)).
    """
    phi, gamma = _reduce(np.asarray(d.phi1 + d.phi2, dtype=float),
                         np.asarray(d.phi1 - d.phi2, dtype=float))
    return 2.0 * d.rho1**2, 2.0 * d.rho2**2, phi, gamma


def lift_wavefunction(psi3, s):
    """Lift psi^(s)(r) to psi(r, gamma) = psi^(s) e^{is(gamma - phi)} / sqrt(4 pi).

    ``psi3`` maps a 3D point (:class:`Spherical3` or :class:`Parabolic3`;
    only its ``phi`` is used here) to amplitudes. The returned function takes
    (point, gamma); gamma may be NaN only when s = 0.
    """
    s = float(s)

    def lifted(p, gamma):
        gamma = np.asarray(gamma, dtype=float)
        if s != 0.0 and np.any(np.isnan(gamma)):
            raise DegeneratePointError("lifted state with s != 0 has no phase on a degenerate axis")
        phase = 1.0 if s == 0.0 else np.exp(1j * s * (gamma - np.asarray(p.phi, dtype=float)))
        return psi3(p) * phase / math.sqrt(4.0 * math.pi)

    return lifted


def lifted_at_cart4(lifted, u: Cartesian4):
    """Evaluate a lifted state at a point of R^4 through the KS image."""
    h = cart4_to_hyperspherical(u)
    return lifted(Spherical3(h.u**2, h.beta, h.alpha), h.gamma)


@dataclass(frozen=True)
class OscillatorParams:
    omega: float
    mass: float = 1.0
    hbar: float = 1.0
    eps_osc: float = 4.0


def osc_params_from_level(n, channel: Channel) -> OscillatorParams:
    """Oscillator partner of MIC-Kepler level n: eps_osc = 4e^2, E_n = -mu omega^2 / 8."""
    c = channel.constants
    omega = 2.0 * c.charge**2 / (c.hbar * effective_n(n, channel))
    return OscillatorParams(omega, c.mass, c.hbar, 4.0 * c.charge**2)


def amplitude_factor(n, channel: Channel) -> float:
    """4 (n + delta_bar) sqrt(a): oscillator amplitude per unit lifted MIC-Kepler amplitude."""
    return 4.0 * effective_n(n, channel) * math.sqrt(channel.constants.bohr_radius)


def correspondence_spherical(qn):
    """Map OscSphericalQN <-> SphericalQN (n = N/2 + 1, j = L, m = M, s = M')."""
    if isinstance(qn, OscSphericalQN):
        return qn.mic()
    return OscSphericalQN.from_mic(qn)


def correspondence_parabolic(qn):
    """Map OscCylindricalQN <-> ParabolicQN (n_i = N_i, m = (M1+M2)/2, s = (M1-M2)/2)."""
    if isinstance(qn, OscCylindricalQN):
        return qn.mic()
    return OscCylindricalQN.from_mic(qn)
