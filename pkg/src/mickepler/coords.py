"""Coordinate point types. Fields may be scalars or equally shaped arrays."""

from __future__ import annotations

from typing import NamedTuple

import numpy as np


class Cartesian3(NamedTuple):
    x: object
    y: object
    z: object


class Spherical3(NamedTuple):
    r: object
    theta: object
    phi: object


class Parabolic3(NamedTuple):
    xi: object
    eta: object
    phi: object


class Cartesian4(NamedTuple):
    u0: object
    u1: object
    u2: object
    u3: object


class Hyperspherical4(NamedTuple):
    u: object
    alpha: object
    beta: object
    gamma: object


class DoublePolar4(NamedTuple):
    rho1: object
    rho2: object
    phi1: object
    phi2: object


def spherical_to_cartesian(p: Spherical3) -> Cartesian3:
    st = np.sin(p.theta)
    return Cartesian3(p.r * st * np.cos(p.phi), p.r * st * np.sin(p.phi), p.r * np.cos(p.theta))


def cartesian_to_spherical(c: Cartesian3) -> Spherical3:
    r = np.sqrt(c.x**2 + c.y**2 + c.z**2)
    theta = np.arctan2(np.sqrt(c.x**2 + c.y**2), c.z)
    return Spherical3(r, theta, np.mod(np.arctan2(c.y, c.x), 2 * np.pi))


def parabolic_to_spherical(p: Parabolic3) -> Spherical3:
    # cos(theta) = (xi - eta)/(xi + eta); atan2 keeps precision near the axis
    r = 0.5 * (p.xi + p.eta)
    theta = 2.0 * np.arctan2(np.sqrt(p.eta), np.sqrt(p.xi))
    return Spherical3(r, theta, p.phi)


def spherical_to_parabolic(p: Spherical3) -> Parabolic3:
    return Parabolic3(p.r * (1.0 + np.cos(p.theta)), p.r * (1.0 - np.cos(p.theta)), p.phi)


def parabolic_to_cartesian(p: Parabolic3) -> Cartesian3:
    rho = np.sqrt(p.xi * p.eta)
    return Cartesian3(rho * np.cos(p.phi), rho * np.sin(p.phi), 0.5 * (p.xi - p.eta))
