"""Verification suites with machine-readable reports.

Each check returns one or more :class:`VerificationReport`. Tolerances live
in :data:`TOLERANCES` only; an override replaces all of them at once (used to
force failures). Random samples come from ``numpy.random.default_rng(seed)``
created inside each check, so results do not depend on job scheduling.
"""

from __future__ import annotations

import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from fractions import Fraction

import numpy as np

from . import quadrature as quad
from .basis_mic import (angular_norm, angular_norm_as_printed, apply_angular_operator,
                        apply_hamiltonian_mic, apply_jz, energy_of, psi, psi_parabolic,
                        psi_spherical, state_function, z_angular)
from .channels import (Channel, OscCylindricalQN, OscSphericalQN, ParabolicQN, SphericalQN,
                       energy_mic, epsilon_scale, format_half, make_channel,
                       parabolic_states, spherical_states)
from .coords import (Cartesian4, DoublePolar4, Hyperspherical4, Parabolic3, Spherical3,
                     cartesian_to_spherical, parabolic_to_spherical)
from .fdiff import d1
from .ks_duality import (amplitude_factor, double_polar_to_cart4, ks_forward,
                         lift_wavefunction, osc_params_from_level)
from .interbasis import (expand_osc_cylindrical, expand_parabolic_in_spherical,
                         printed_form_discrepancies)
from .oscillator4d import (osc_energy, osc_hamiltonian_residual, psi_osc, psi_osc_cylindrical,
                           psi_osc_spherical)

TOLERANCES = {
    "spectrum": 1e-14,
    "ortho": 1e-8,
    "residual_mic": 1e-5,
    "residual_osc": 1e-5,
    "eigen_angular": 1e-6,
    "eigen_jz": 1e-8,
    "eigen_gamma": 1e-8,
    "interbasis_oracle": 1e-8,
    "unitarity": 1e-10,
    "reconstruction": 1e-8,
    "duality_pointwise": 1e-10,
    "ks_identity": 1e-13,
    "dictionary": 1e-13,
}

# (s, m, lambda1, lambda2)
TEST_CHANNELS = (("0", "0", 0.0, 0.0), ("1/2", "1/2", 0.5, 0.2), ("1", "0", 0.3, 0.1))

SUITES = ("spectrum", "ortho", "residual-mic", "residual-osc", "eigen", "interbasis", "duality")

THETA_MARGIN = 0.1
RHO_MARGIN = 0.05


def default_channels(constants=None) -> list[Channel]:
    kw = {} if constants is None else {"constants": constants}
    return [make_channel(*row, **kw) for row in TEST_CHANNELS]


@dataclass
class VerificationReport:
    check_name: str
    parameters: dict
    max_error: float
    tolerance: float
    passed: bool = field(init=False)
    grid_meta: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def __post_init__(self):
        self.max_error = float(self.max_error)
        self.tolerance = float(self.tolerance)
        self.passed = bool(self.max_error <= self.tolerance)

    def to_dict(self) -> dict:
        return asdict(self)


def reports_to_json(reports) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True) + "\n"


@dataclass(frozen=True)
class GridSpec:
    """Node counts; the 4D grids use their own (smaller) counts."""

    radial: int = quad.DEFAULT_RADIAL
    polar: int = quad.DEFAULT_POLAR
    azimuthal: int = quad.DEFAULT_AZIMUTHAL
    radial4: int = 48
    polar4: int = 24
    angular4: int = 8

    def doubled(self) -> "GridSpec":
        return GridSpec(*(2 * v for v in asdict(self).values()))

    @classmethod
    def from_counts(cls, radial: int | None = None, angular: int | None = None) -> "GridSpec":
        g = cls()
        if radial is not None:
            g = replace(g, radial=radial, radial4=max(8, radial // 2))
        if angular is not None:
            g = replace(g, polar=angular, polar4=max(8, angular // 2))
        return g

    def to_json(self) -> dict:
        return asdict(self)


def _tol(key: str, override: float | None) -> float:
    return TOLERANCES[key] if override is None else float(override)


def _ch_params(channel: Channel, **extra) -> dict:
    return {"channel": channel.to_json(), **extra}


def _label(qn) -> str:
    if isinstance(qn, SphericalQN):
        return f"spherical(n={format_half(qn.n)}, j={format_half(qn.j)})"
    if isinstance(qn, ParabolicQN):
        return f"parabolic(n1={qn.n1}, n2={qn.n2})"
    if isinstance(qn, OscSphericalQN):
        return f"osc-spherical(N={qn.N}, L={format_half(qn.L)})"
    return f"osc-cylindrical(N1={qn.N1}, N2={qn.N2}, M1={qn.M1}, M2={qn.M2})"


def _worst(errors: list[tuple[float, str]]) -> tuple[float, list[str]]:
    if not errors:
        return 0.0, ["no admissible states"]
    err, lab = max(errors, key=lambda t: t[0])
    return err, [f"worst: {lab} ({err:.3e})"]


# sampling -------------------------------------------------------------------

def sample_spherical(rng, count: int, channel: Channel, n) -> Spherical3:
    a = channel.constants.bohr_radius
    nu = float(n) + channel.delta_bar
    r = rng.uniform(0.1 * a, (2.0 * nu * nu + 1.0) * a, count)
    theta = rng.uniform(THETA_MARGIN, math.pi - THETA_MARGIN, count)
    phi = rng.uniform(0.0, 2.0 * math.pi, count)
    return Spherical3(r, theta, phi)


def sample_double_polar(rng, count: int, channel: Channel, n) -> DoublePolar4:
    a = channel.constants.bohr_radius
    nu = float(n) + channel.delta_bar
    top = max(2.0, nu) * math.sqrt(a)
    lo = RHO_MARGIN * math.sqrt(a)
    return DoublePolar4(rng.uniform(lo, top, count), rng.uniform(lo, top, count),
                        rng.uniform(0.0, 2.0 * math.pi, count), rng.uniform(0.0, 2.0 * math.pi, count))


# grids ----------------------------------------------------------------------

def _eps_range(channel: Channel, ns) -> tuple[float, float]:
    eps = [epsilon_scale(n, channel) for n in ns]
    return min(eps), max(eps)


def grid_for(basis: str, channel: Channel, ns, spec: GridSpec) -> quad.ProductGrid:
    """Product grid matched to the decay and endpoint powers of ``basis`` states with n in ``ns``."""
    lo, hi = _eps_range(channel, ns)
    if basis == "spherical3":
        return quad.spherical_grid(1.0 / (lo + hi), spec.radial, spec.polar, spec.azimuthal,
                                   radial_power=2.0 * channel.delta_bar + 2.0,
                                   jacobi=(channel.m2, channel.m1))
    if basis == "parabolic3":
        return quad.parabolic_grid(2.0 / (lo + hi), spec.radial, spec.azimuthal,
                                   xi_power=channel.m1, eta_power=channel.m2)
    if basis == "osc4-spherical":
        return quad.hyperspherical_grid(1.0 / (lo + hi), spec.radial4, spec.polar4,
                                        spec.angular4, spec.angular4,
                                        radial_power=2.0 * channel.delta_bar + 1.0,
                                        jacobi=(channel.m2, channel.m1))
    if basis == "osc4-cylindrical":
        return quad.doublepolar_grid(2.0 / (lo + hi), spec.radial4, spec.angular4,
                                     rho1_power=channel.m1, rho2_power=channel.m2)
    raise ValueError(f"unknown basis {basis!r}")


def _evaluators(basis: str, states):
    if basis == "spherical3":
        return [lambda r, t, p, q=q: psi_spherical(q, Spherical3(r, t, p)) for q in states]
    if basis == "parabolic3":
        return [lambda x, e, p, q=q: psi_parabolic(q, Parabolic3(x, e, p)) for q in states]
    if basis == "osc4-spherical":
        return [lambda u, a, b, g, q=q: psi_osc_spherical(q, Hyperspherical4(u, a, b, g))
                for q in states]
    return [lambda r1, r2, p1, p2, q=q: psi_osc_cylindrical(q, DoublePolar4(r1, r2, p1, p2))
            for q in states]


def _blocks(basis: str, channel: Channel, n_max):
    """Groups of states sharing one quadrature grid (4D: one block per level)."""
    if basis == "spherical3":
        return [(channel.n_values(n_max), spherical_states(channel, n_max))]
    if basis == "parabolic3":
        return [(channel.n_values(n_max), parabolic_states(channel, n_max))]
    out = []
    for n in channel.n_values(n_max):
        if basis == "osc4-spherical":
            states = [OscSphericalQN.from_mic(q) for q in spherical_states(channel, n_max) if q.n == n]
        else:
            states = [OscCylindricalQN.from_mic(q) for q in parabolic_states(channel, n_max) if q.n == n]
        out.append(([n], states))
    return out


BASES = ("spherical3", "parabolic3", "osc4-spherical", "osc4-cylindrical")


def check_orthonormality(basis: str, channel: Channel, n_max, grid: GridSpec | None = None,
                         doubling: bool = True, tolerance: float | None = None) -> VerificationReport:
    """max |G - I| over Gram matrices; with ``doubling`` also on the doubled grid.

    4D Gram matrices are formed per level N because each level has its own
    frequency omega(n).
    """
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}; expected one of {BASES}")
    if Fraction(n_max) > 5:
        raise ValueError(f"n_max <= 5 required, got {n_max}")
    grid = grid or GridSpec()
    specs = [grid, grid.doubled()] if doubling else [grid]
    errs, meta = [], {}
    for i, spec in enumerate(specs):
        worst = 0.0
        for ns, states in _blocks(basis, channel, n_max):
            if not states:
                continue
            pg = grid_for(basis, channel, ns, spec)
            g = quad.gram_matrix(_evaluators(basis, states), pg)
            worst = max(worst, float(np.max(np.abs(g - np.eye(len(states))))))
            meta[f"grid{i}"] = list(pg.sizes)
        errs.append(worst)
    notes = [f"grid {i}: max |G - I| = {e:.3e}" for i, e in enumerate(errs)]
    if doubling:
        notes.append(f"doubling changed the deviation by {abs(errs[1] - errs[0]):.3e}")
    return VerificationReport(f"ortho.{basis}", _ch_params(channel, n_max=str(n_max), basis=basis),
                              max(errs), _tol("ortho", tolerance), meta, notes)


def _rel(err, scale) -> float:
    return float(err / scale) if scale > 0 else float(err)


def check_residual_mic(qn, samples: Spherical3, tolerance: float | None = None) -> VerificationReport:
    """max |H psi - E psi| / (|E| max |psi|) with H applied by finite differences."""
    ch = qn.channel
    f = state_function(qn)
    e = energy_of(qn)
    vals = f(*samples)
    hv = apply_hamiltonian_mic(f, ch, samples)
    err = _rel(np.max(np.abs(hv - e * vals)), abs(e) * np.max(np.abs(vals)))
    return VerificationReport("residual-mic", _ch_params(ch, state=_label(qn), samples=len(samples.r)),
                              err, _tol("residual_mic", tolerance))


def check_residual_osc(qn, samples: Cartesian4, tolerance: float | None = None) -> VerificationReport:
    err = osc_hamiltonian_residual(qn, samples)
    return VerificationReport("residual-osc", _ch_params(qn.channel, state=_label(qn),
                                                         samples=len(np.atleast_1d(samples.u0))),
                              err, _tol("residual_osc", tolerance))


def _mic_states(channel, n_max):
    return list(spherical_states(channel, n_max)) + list(parabolic_states(channel, n_max))


def residual_mic_suite(channel: Channel, n_max, seed: int = 0, count: int = 30,
                       tolerance: float | None = None) -> VerificationReport:
    errors = []
    for qn in _mic_states(channel, n_max):
        rng = np.random.default_rng(seed)
        rep = check_residual_mic(qn, sample_spherical(rng, count, channel, qn.n), tolerance)
        errors.append((rep.max_error, _label(qn)))
    err, notes = _worst(errors)
    return VerificationReport("residual-mic", _ch_params(channel, n_max=str(n_max), seed=seed,
                                                         samples=count, states=len(errors)),
                              err, _tol("residual_mic", tolerance), {}, notes)


def residual_osc_suite(channel: Channel, n_max, seed: int = 0, count: int = 30,
                       tolerance: float | None = None) -> VerificationReport:
    errors = []
    for mq in _mic_states(channel, n_max):
        oq = (OscSphericalQN.from_mic(mq) if isinstance(mq, SphericalQN)
              else OscCylindricalQN.from_mic(mq))
        rng = np.random.default_rng(seed)
        u = double_polar_to_cart4(sample_double_polar(rng, count, channel, mq.n))
        errors.append((check_residual_osc(oq, u, tolerance).max_error, _label(oq)))
    err, notes = _worst(errors)
    return VerificationReport("residual-osc", _ch_params(channel, n_max=str(n_max), seed=seed,
                                                         samples=count, states=len(errors)),
                              err, _tol("residual_osc", tolerance), {}, notes)


def check_eigen(channel: Channel, n_max, seed: int = 0, count: int = 30,
                tolerance: float | None = None) -> list[VerificationReport]:
    """Angular operator, J_z and -i d/dgamma eigenvalue checks by finite differences."""
    rng = np.random.default_rng(seed)
    theta = rng.uniform(THETA_MARGIN, math.pi - THETA_MARGIN, count)
    phi = rng.uniform(0.0, 2.0 * math.pi, count)
    gamma = rng.uniform(0.0, 4.0 * math.pi, count)
    dbar = channel.delta_bar
    ang, jz, gam = [], [], []
    m, s = float(channel.m), float(channel.s)
    for qn in spherical_states(channel, n_max):
        lam = (float(qn.j) + dbar) * (float(qn.j) + dbar + 1.0)
        f = lambda t, p, q=qn: z_angular(q, t, p)  # noqa: E731
        v = f(theta, phi)
        res = apply_angular_operator(f, channel, theta, phi) - lam * v
        ang.append((_rel(np.max(np.abs(res)), max(lam, 1.0) * np.max(np.abs(v))), _label(qn)))
    for qn in _mic_states(channel, n_max):
        p = sample_spherical(rng, count, channel, qn.n)
        g = lambda q_, qn=qn, p=p: psi(qn, Spherical3(p.r, p.theta, q_))  # noqa: E731
        v = g(p.phi)
        res = apply_jz(g, s, p.phi) - m * v
        jz.append((_rel(np.max(np.abs(res)), max(abs(m), 1.0) * np.max(np.abs(v))), _label(qn)))
        lifted = lift_wavefunction(lambda pt, qn=qn: psi(qn, pt), s)
        lg = lambda gm, p=p, lifted=lifted: lifted(p, gm)  # noqa: E731
        lv = lg(gamma)
        res = -1j * d1(lg, gamma, 1e-3) - s * lv
        gam.append((_rel(np.max(np.abs(res)), max(abs(s), 1.0) * np.max(np.abs(lv))), _label(qn)))
    params = _ch_params(channel, n_max=str(n_max), seed=seed, samples=count)
    out = []
    for name, key, errors, note in (
            ("eigen.angular", "eigen_angular", ang, "eigenvalue (j + delta_bar)(j + delta_bar + 1)"),
            ("eigen.jz", "eigen_jz", jz, "eigenvalue m"),
            ("eigen.gamma", "eigen_gamma", gam, "eigenvalue s of -i d/dgamma on lifted states")):
        err, notes = _worst(errors)
        out.append(VerificationReport(name, params, err, _tol(key, tolerance), {}, [note] + notes))
    x_notes = [f"declared X eigenvalue {_label(q)}: {q.x_eigenvalue:.17e} (not operator-verified)"
               for q in parabolic_states(channel, n_max)]
    out[-1].notes.extend(x_notes)
    return out


def _typo_notes(channel: Channel, n_max) -> list[str]:
    notes = ["xi = 2 rho1^2, eta = 2 rho2^2 used; the printed eta = rho2^2 breaks r = (xi + eta)/2"]
    for qn in spherical_states(channel, n_max):
        a, b = angular_norm(qn), angular_norm_as_printed(qn)
        if abs(a - b) > 1e-12 * a:
            notes.append(f"printed N_jm pairing differs at {_label(qn)}: {b:.12g} vs {a:.12g}")
    return notes


def check_interbasis(channel: Channel, n_max, grid: GridSpec | None = None, seed: int = 0,
                     count: int = 50, tolerance: float | None = None) -> list[VerificationReport]:
    """Closed-form coefficients against quadrature overlaps, unitarity and reconstruction (3D and 4D)."""
    grid = grid or GridSpec()
    params = _ch_params(channel, n_max=str(n_max), seed=seed)
    oracle, unitary, rec3, rec4 = [], [], [], []
    meta = {}
    for n in channel.n_values(n_max):
        sph = [q for q in spherical_states(channel, n) if q.n == n]
        par = [q for q in parabolic_states(channel, n) if q.n == n]
        pg = grid_for("parabolic3", channel, [n], grid)
        meta[f"n={format_half(n)}"] = list(pg.sizes)
        gram = quad.gram_matrix(_evaluators("parabolic3", par)
                                + [lambda x, e, p, q=q: psi_spherical(q, Spherical3(
                                    *_par_to_sph(x, e, p))) for q in sph], pg)
        overlap = gram[len(par):, :len(par)]  # <sph_j | par_k>
        w = np.zeros((len(sph), len(par)))
        for k, pq in enumerate(par):
            for j, val in expand_parabolic_in_spherical(pq):
                w[int(j - channel.m_plus), k] = val
        oracle.append((float(np.max(np.abs(overlap - w))), f"n={format_half(n)}"))
        eye = np.eye(len(sph))
        unitary.append((max(float(np.max(np.abs(w @ w.T - eye))),
                            float(np.max(np.abs(w.T @ w - eye)))), f"n={format_half(n)}"))
        rng = np.random.default_rng(seed)
        p = sample_spherical(rng, count, channel, n)
        for k, pq in enumerate(par):
            lhs = psi(pq, p)
            rhs = sum(w[i, k] * psi(q, p) for i, q in enumerate(sph))
            rec3.append((_rel(np.max(np.abs(lhs - rhs)), np.max(np.abs(lhs))), _label(pq)))
            oq = OscCylindricalQN.from_mic(pq)
            u = double_polar_to_cart4(sample_double_polar(rng, count, channel, n))
            lhs = psi_osc(oq, u)
            rhs = sum(c * psi_osc(OscSphericalQN(oq.N, L, channel.m, channel.s, oq.c1, oq.c2,
                                                 channel.constants), u)
                      for L, c in expand_osc_cylindrical(oq))
            rec4.append((_rel(np.max(np.abs(lhs - rhs)), np.max(np.abs(lhs))), _label(oq)))
    out = []
    for name, key, errors, extra in (
            ("interbasis.oracle3d", "interbasis_oracle", oracle,
             printed_form_discrepancies(channel, n_max) + _typo_notes(channel, n_max)),
            ("interbasis.unitarity", "unitarity", unitary, []),
            ("interbasis.reconstruction3d", "reconstruction", rec3, []),
            ("interbasis.reconstruction4d", "reconstruction", rec4, [])):
        err, notes = _worst(errors)
        out.append(VerificationReport(name, params, err, _tol(key, tolerance),
                                      meta if name == "interbasis.oracle3d" else {}, notes + extra))
    return out


def _par_to_sph(xi, eta, phi):
    return parabolic_to_spherical(Parabolic3(xi, eta, phi))


def check_duality(channel: Channel, n_max, count: int = 50, seed: int = 0,
                  tolerance: float | None = None) -> list[VerificationReport]:
    """Pointwise oscillator/MIC-Kepler correspondence, KS identity and parameter dictionary.

    The oscillator side is evaluated through the hyperspherical or double-polar
    inverse maps; the MIC-Kepler side through ks_forward and the 3D spherical
    coordinates of the image.
    """
    params = _ch_params(channel, n_max=str(n_max), seed=seed, samples=count)
    s = float(channel.s)
    point, eta_alt = [], []
    for mq in _mic_states(channel, n_max):
        oq = (OscSphericalQN.from_mic(mq) if isinstance(mq, SphericalQN)
              else OscCylindricalQN.from_mic(mq))
        rng = np.random.default_rng(seed)
        d = sample_double_polar(rng, count, channel, mq.n)
        u = double_polar_to_cart4(d)
        a_side = psi_osc(oq, u)
        cart, gamma = ks_forward(u)
        lifted = lift_wavefunction(lambda p, mq=mq: psi(mq, p), s)
        b_side = amplitude_factor(mq.n, channel) * lifted(cartesian_to_spherical(cart), gamma)
        point.append((_rel(np.max(np.abs(a_side - b_side)), np.max(np.abs(a_side))), _label(oq)))
        if isinstance(mq, ParabolicQN):
            # same comparison with the printed eta = rho2^2
            alt = psi_parabolic(mq, Parabolic3(2 * d.rho1**2, d.rho2**2, d.phi1 + d.phi2))
            alt = amplitude_factor(mq.n, channel) * alt * np.exp(-2j * s * d.phi2) / math.sqrt(4 * math.pi)
            eta_alt.append(_rel(np.max(np.abs(alt - a_side)), np.max(np.abs(a_side))))
    rng = np.random.default_rng(seed)
    u = Cartesian4(*rng.normal(size=(4, 1000)))
    cart, _ = ks_forward(u)
    u2 = u.u0**2 + u.u1**2 + u.u2**2 + u.u3**2
    r2 = cart.x**2 + cart.y**2 + cart.z**2
    ks_err = float(np.max(np.abs(r2 - u2**2) / u2**2))
    c = channel.constants
    dict_err = []
    for n in channel.n_values(max(Fraction(n_max), channel.m_plus + 4)):
        op = osc_params_from_level(n, channel)
        N = int(2 * (n - 1))
        eps = op.hbar * op.omega * (N + channel.delta1 + channel.delta2 + 2.0)
        e_n = energy_mic(n, channel)
        dict_err.append(max(abs(eps - 4 * c.charge**2) / (4 * c.charge**2),
                            abs(-op.mass * op.omega**2 / 8 - e_n) / abs(e_n)))
        if mq_level := [q for q in spherical_states(channel, n) if q.n == n]:
            oe = osc_energy(OscSphericalQN.from_mic(mq_level[0]), op)
            dict_err.append(abs(oe - 4 * c.charge**2) / (4 * c.charge**2))
    err, notes = _worst(point)
    if eta_alt:
        notes.append(f"with the printed eta = rho2^2 the parabolic states would miss by {max(eta_alt):.3e}")
    return [
        VerificationReport("duality.pointwise", params, err, _tol("duality_pointwise", tolerance),
                           {}, notes + ["amplitude factor 4 (n + delta_bar) sqrt(a)"]),
        VerificationReport("duality.ks_identity", _ch_params(channel, seed=seed, samples=1000), ks_err,
                           _tol("ks_identity", tolerance), {}, ["x^2 + y^2 + z^2 = u^4, relative"]),
        VerificationReport("duality.dictionary", params, max(dict_err), _tol("dictionary", tolerance), {},
                           ["hbar omega (N + delta1 + delta2 + 2) = 4 e^2 and -mu omega^2 / 8 = E_n"]),
    ]


def check_spectrum(channel: Channel, n_top: int = 10, tolerance: float | None = None) -> VerificationReport:
    """Reduction to the Coulomb levels -mu e^4 / (2 hbar^2 n^2) when s = lambda = 0."""
    c = channel.constants
    base = make_channel(0, 0, 0.0, 0.0, c)
    errs = []
    for n in range(1, n_top + 1):
        ref = -c.mass * c.charge**4 / (2.0 * c.hbar**2 * n * n)
        errs.append(abs(energy_mic(n, base) - ref) / abs(ref))
    return VerificationReport("spectrum", {"constants": base.to_json(), "n_max": n_top}, max(errs),
                              _tol("spectrum", tolerance))


# orchestration ----------------------------------------------------------------

def _jobs(name: str, channel: Channel, n_max, grid: GridSpec, seed: int, tolerance):
    if name == "spectrum":
        return [lambda: [check_spectrum(channel, tolerance=tolerance)]]
    if name == "ortho":
        return [lambda b=b: [check_orthonormality(b, channel, n_max, grid, tolerance=tolerance)]
                for b in BASES]
    if name == "residual-mic":
        return [lambda: [residual_mic_suite(channel, n_max, seed, tolerance=tolerance)]]
    if name == "residual-osc":
        return [lambda: [residual_osc_suite(channel, n_max, seed, tolerance=tolerance)]]
    if name == "eigen":
        return [lambda: check_eigen(channel, n_max, seed, tolerance=tolerance)]
    if name == "interbasis":
        return [lambda: check_interbasis(channel, n_max, grid, seed, tolerance=tolerance)]
    if name == "duality":
        return [lambda: check_duality(channel, n_max, seed=seed, tolerance=tolerance)]
    raise ValueError(f"unknown check {name!r}; expected one of {SUITES} or 'all'")


def run_checks(names, channels, n_max, grid: GridSpec | None = None, seed: int = 0,
               workers: int | None = None, tolerance: float | None = None) -> list[VerificationReport]:
    """Run checks for every channel on a thread pool; the output order is fixed by the inputs."""
    grid = grid or GridSpec()
    if "all" in names:
        names = SUITES
    jobs = [job for ch in channels for name in names
            for job in _jobs(name, ch, n_max, grid, seed, tolerance)]
    workers = workers or os.cpu_count() or 1
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(lambda f: f(), jobs))
    return [r for batch in results for r in batch]
