"""Quadrature rules and inner products over the coordinate systems in use.

Every :class:`Grid1D` integrates against the plain Lebesgue measure of its
axis (``sum(w * f(x)) ~ integral f dx``). Rules built for a singular weight
(Gauss-Jacobi, generalized Gauss-Laguerre) have that weight divided out of
their weights, so they are exact for integrands of the form
``weight(x) * polynomial(x)`` while still accepting arbitrary ``f``.

Measures applied by :func:`inner_product`:

=================  ==============================================
``spherical3``     r^2 sin(theta) dr dtheta dphi  (theta axis: cos theta)
``parabolic3``     (xi + eta)/4 dxi deta dphi
``hyperspherical4`` u^3/8 sin(beta) du dalpha dbeta dgamma, gamma in [0, 4pi)
``doublepolar4``   rho1 rho2 drho1 drho2 dphi1 dphi2
=================  ==============================================
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import roots_genlaguerre, roots_jacobi

DEFAULT_RADIAL = 96
DEFAULT_POLAR = 64
DEFAULT_AZIMUTHAL = 32

SYSTEMS = ("spherical3", "parabolic3", "hyperspherical4", "doublepolar4")


@dataclass(frozen=True)
class Grid1D:
    nodes: np.ndarray
    weights: np.ndarray
    kind: str

    def integrate(self, values) -> complex:
        return np.sum(self.weights * values)

    def __len__(self):
        return len(self.nodes)


def gauss_legendre(n: int) -> Grid1D:
    if not 1 <= n <= 512:
        raise ValueError(f"gauss_legendre supports 1 <= n <= 512, got {n}")
    x, w = leggauss(n)
    return Grid1D(x, w, "legendre")


def gauss_jacobi(n: int, alpha: float, beta: float) -> Grid1D:
    """Nodes for weight (1-x)^alpha (1+x)^beta on [-1, 1], weight divided out."""
    x, w = roots_jacobi(n, alpha, beta)
    w = w / ((1.0 - x) ** alpha * (1.0 + x) ** beta)
    return Grid1D(x, w, "jacobi")


def radial_grid(scale: float, n: int, power: float = 0.0) -> Grid1D:
    """Generalized Gauss-Laguerre nodes on (0, inf) with r = scale * t.

    Exact for ``r**power * exp(-r/scale) * polynomial(r)``. For a product of
    two states decaying like exp(-eps r) pass ``scale = 1/(2 eps)``.
    """
    t, w = roots_genlaguerre(n, power)
    with np.errstate(divide="ignore"):
        logw = np.log(w)
    w_eff = scale * np.exp(logw + t - power * np.log(t))
    return Grid1D(scale * t, w_eff, "laguerre")


def periodic_grid(n: int, period: float = 2.0 * math.pi) -> Grid1D:
    x = period * np.arange(n) / n
    return Grid1D(x, np.full(n, period / n), "periodic-trapezoid")


def sqrt_map(grid: Grid1D, factor: float = 1.0) -> Grid1D:
    """Reparametrize an axis in t as v = sqrt(t/factor), so t = factor*v^2."""
    v = np.sqrt(grid.nodes / factor)
    return Grid1D(v, grid.weights / (2.0 * factor * v), grid.kind + "-sqrt")


@dataclass(frozen=True)
class ProductGrid:
    """Tensor-product grid for one of :data:`SYSTEMS`.

    ``axes`` are in coordinate order; polar axes (theta, beta) are stored as
    ``cos(angle)`` nodes and converted when the mesh is built.
    """

    system: str
    axes: tuple

    def __post_init__(self):
        if self.system not in SYSTEMS:
            raise ValueError(f"unknown coordinate system {self.system!r}")

    @property
    def sizes(self) -> tuple:
        return tuple(len(a) for a in self.axes)

    @property
    def size(self) -> int:
        return int(np.prod(self.sizes))

    def mesh(self, first=slice(None)):
        """Return (coordinates tuple, measure weights) on the flattened mesh.

        ``first`` restricts the first axis, which lets callers stream large grids.
        """
        nodes = [a.nodes for a in self.axes]
        weights = [a.weights for a in self.axes]
        nodes[0], weights[0] = nodes[0][first], weights[0][first]
        grids = np.meshgrid(*nodes, indexing="ij")
        wts = np.meshgrid(*weights, indexing="ij")
        w = np.prod(wts, axis=0).ravel()
        c = [g.ravel() for g in grids]
        if self.system == "spherical3":
            r, x, phi = c
            return (r, np.arccos(x), phi), w * r**2
        if self.system == "parabolic3":
            xi, eta, phi = c
            return (xi, eta, phi), w * (xi + eta) / 4.0
        if self.system == "hyperspherical4":
            u, alpha, x, gamma = c
            return (u, alpha, np.arccos(x), gamma), w * u**3 / 8.0
        rho1, rho2, phi1, phi2 = c
        return (rho1, rho2, phi1, phi2), w * rho1 * rho2

    def chunks(self, max_points: int = 1 << 18):
        """Yield mesh pieces of at most about ``max_points`` nodes each."""
        per_row = max(1, self.size // len(self.axes[0]))
        step = max(1, max_points // per_row)
        for start in range(0, len(self.axes[0]), step):
            yield self.mesh(slice(start, start + step))


def spherical_grid(scale=0.5, n_radial=DEFAULT_RADIAL, n_polar=DEFAULT_POLAR,
                   n_azimuthal=DEFAULT_AZIMUTHAL, radial_power=0.0,
                   jacobi=(0.0, 0.0)) -> ProductGrid:
    return ProductGrid("spherical3", (
        radial_grid(scale, n_radial, radial_power),
        gauss_jacobi(n_polar, *jacobi),
        periodic_grid(n_azimuthal),
    ))


def parabolic_grid(scale=1.0, n_radial=DEFAULT_RADIAL, n_azimuthal=DEFAULT_AZIMUTHAL,
                   xi_power=0.0, eta_power=0.0) -> ProductGrid:
    return ProductGrid("parabolic3", (
        radial_grid(scale, n_radial, xi_power),
        radial_grid(scale, n_radial, eta_power),
        periodic_grid(n_azimuthal),
    ))


def hyperspherical_grid(scale=0.5, n_radial=64, n_polar=32, n_alpha=16, n_gamma=16,
                        radial_power=0.0, jacobi=(0.0, 0.0)) -> ProductGrid:
    """The radial axis is built in r = u^2 and mapped back to u."""
    return ProductGrid("hyperspherical4", (
        sqrt_map(radial_grid(scale, n_radial, radial_power)),
        periodic_grid(n_alpha),
        gauss_jacobi(n_polar, *jacobi),
        periodic_grid(n_gamma, 4.0 * math.pi),
    ))


def doublepolar_grid(scale=1.0, n_radial=48, n_angular=16,
                     rho1_power=0.0, rho2_power=0.0) -> ProductGrid:
    """Radial axes are built in xi = 2 rho1^2, eta = 2 rho2^2 and mapped back."""
    return ProductGrid("doublepolar4", (
        sqrt_map(radial_grid(scale, n_radial, rho1_power), 2.0),
        sqrt_map(radial_grid(scale, n_radial, rho2_power), 2.0),
        periodic_grid(n_angular),
        periodic_grid(n_angular),
    ))


def inner_product(f: Callable, g: Callable, grid: ProductGrid) -> complex:
    """<f|g> = integral conj(f) g dV on ``grid`` (f, g take coordinate arrays)."""
    return complex(gram_matrix([f, g], grid)[0, 1])


def gram_matrix(funcs, grid: ProductGrid) -> np.ndarray:
    """Matrix of <f_i|f_j>, accumulated chunk by chunk in a fixed order."""
    k = len(funcs)
    out = np.zeros((k, k), dtype=complex)
    for coords, w in grid.chunks():
        vals = np.array([np.broadcast_to(np.asarray(fn(*coords), dtype=complex), w.shape)
                         for fn in funcs])
        out += (np.conj(vals) * w) @ vals.T
    return out
