"""Parabolic-to-spherical expansion coefficients in 3D and in 4D.

The coefficients are analytically continued SU(2) Clebsch-Gordan
coefficients. Two forms are provided for each:

* ``w3`` / ``w4`` give the overlap <spherical | parabolic> of the bases in
  :mod:`mickepler.basis_mic`, i.e. the values that reconstruct one basis from
  the other. In 3D the first spin label is (n - m_minus + delta2 - 1)/2 and
  the second (n + m_minus + delta1 - 1)/2; the 4D phase is (-1)^N1.
* ``w3_printed`` / ``w4_printed`` follow the typeset index pattern
  (m_minus entering with the opposite sign in 3D, phase e^{i pi Phi} in 4D).
  They agree with ``w3`` / ``w4`` when m_minus = 0 (3D) and when M <= M'
  (4D); :func:`printed_form_discrepancies` lists where they do not.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .channels import (Channel, OscCylindricalQN, ParabolicQN, QuantumNumberError,
                       format_half, parabolic_states)
from .specfun import DomainError, cg_real


def _check_j(n, j, channel: Channel):
    if j < channel.m_plus or j > n - 1 or (j - channel.m_plus).denominator != 1:
        raise QuantumNumberError(
            f"j={format_half(j)} outside m_plus..n-1 = {format_half(channel.m_plus)}..{format_half(n - 1)}")


def _w3_generic(n1: int, n2: int, channel: Channel, j, m_minus_sign: int) -> float:
    j = Fraction(j)
    n = n1 + n2 + channel.m_plus + 1
    _check_j(n, j, channel)
    nf, mm = float(n), m_minus_sign * float(channel.m_minus)
    d1, d2 = channel.delta1, channel.delta2
    m1, m2 = channel.m1, channel.m2
    c = cg_real((nf + mm + d2 - 1) / 2, (m2 + n2 - n1) / 2,
                (nf - mm + d1 - 1) / 2, (m1 + n1 - n2) / 2,
                float(j) + channel.delta_bar, (m1 + m2) / 2)
    return (-1.0) ** n1 * c


def w3(n1: int, n2: int, channel: Channel, j) -> float:
    """<psi_{n j m} | psi_{n1 n2 m}> in closed form."""
    return _w3_generic(n1, n2, channel, j, -1)


def w3_printed(n1: int, n2: int, channel: Channel, j) -> float:
    """Typeset index pattern; raises DomainError when its Racah sum does not terminate."""
    return _w3_generic(n1, n2, channel, j, +1)


def expand_parabolic_in_spherical(qn: ParabolicQN) -> list[tuple[Fraction, float]]:
    ch = qn.channel
    out = []
    j = ch.m_plus
    while j <= qn.n - 1:
        out.append((j, w3(qn.n1, qn.n2, ch, j)))
        j += 1
    return out


@dataclass(frozen=True)
class W4DIndices:
    a0: float
    alpha0: float
    b0: float
    beta0: float
    c0: float
    gamma0: float
    L_min: Fraction
    Phi: int


def w4_indices(qn: OscCylindricalQN, L) -> W4DIndices:
    ch = qn.channel
    M, Mp = ch.m, ch.s
    amm = abs(M - Mp)
    apm = abs(M + Mp)
    d1, d2 = ch.delta1, ch.delta2
    phi = qn.N1 + (M - Mp + amm) / 2
    return W4DIndices(
        a0=(qn.N1 + qn.N2 + float(amm) + d2) / 2,
        alpha0=(qn.N2 - qn.N1 + float(amm) + d2) / 2,
        b0=(qn.N1 + qn.N2 + float(apm) + d1) / 2,
        beta0=(qn.N1 - qn.N2 + float(apm) + d1) / 2,
        c0=float(Fraction(L)) + ch.delta_bar,
        gamma0=(float(apm + amm) + d1 + d2) / 2,
        L_min=(apm - amm) / 2,
        Phi=int(phi),
    )


def _check_L(qn: OscCylindricalQN, L) -> Fraction:
    L = Fraction(L)
    ch = qn.channel
    top = Fraction(qn.N, 2)
    if L < ch.m_plus or L > top or (L - ch.m_plus).denominator != 1:
        raise QuantumNumberError(
            f"L={format_half(L)} outside {format_half(ch.m_plus)}..N/2={format_half(top)}")
    return L


def _w4_cg(qn: OscCylindricalQN, L) -> tuple[W4DIndices, float]:
    idx = w4_indices(qn, _check_L(qn, L))
    return idx, cg_real(idx.a0, idx.alpha0, idx.b0, idx.beta0, idx.c0, idx.gamma0)


def w4(qn: OscCylindricalQN, L) -> float:
    """<psi_{N L M M'} | psi_{N1 N2 M1 M2}> for the pulled-back oscillator bases."""
    _, c = _w4_cg(qn, L)
    return (-1.0) ** qn.N1 * c


def w4_printed(qn: OscCylindricalQN, L) -> float:
    idx, c = _w4_cg(qn, L)
    return (-1.0) ** idx.Phi * c


def expand_osc_cylindrical(qn: OscCylindricalQN) -> list[tuple[Fraction, float]]:
    """Coefficients over L = m_plus .. N/2.

    The typeset lower limit (|M+M'| - |M-M'|)/2 can lie below m_plus, where
    no (N, L, M, M') state exists; the sum starts at m_plus.
    """
    ch = qn.channel
    out = []
    L = ch.m_plus
    while L <= Fraction(qn.N, 2):
        out.append((L, w4(qn, L)))
        L += 1
    return out


def coefficient_table(channel: Channel, n_max) -> list[dict]:
    """Rows (n, n1, n2, 2m, 2s, 2j, W) for every parabolic state with n <= n_max."""
    rows = []
    for pq in parabolic_states(channel, n_max):
        for j, w in expand_parabolic_in_spherical(pq):
            rows.append({
                "n": format_half(pq.n), "n1": pq.n1, "n2": pq.n2,
                "2m": int(2 * channel.m), "2s": int(2 * channel.s), "2j": int(2 * j), "W": w,
            })
    return rows


def printed_form_discrepancies(channel: Channel, n_max, tol: float = 1e-10) -> list[str]:
    """Describe every state where the typeset 3D or 4D coefficients differ from the overlaps."""
    notes = []
    for pq in parabolic_states(channel, n_max):
        for j, w in expand_parabolic_in_spherical(pq):
            try:
                wp = w3_printed(pq.n1, pq.n2, channel, j)
                bad = abs(wp - w) > tol
                detail = f"{wp:.12g}"
            except DomainError:
                bad, detail = True, "non-terminating index set"
            if bad:
                notes.append(
                    f"3D printed index pattern: n={format_half(pq.n)} n1={pq.n1} n2={pq.n2} "
                    f"j={format_half(j)}: printed {detail} vs overlap {w:.12g}")
        oq = OscCylindricalQN.from_mic(pq)
        for L, w in expand_osc_cylindrical(oq):
            wp = w4_printed(oq, L)
            if abs(wp - w) > tol:
                notes.append(
                    f"4D printed phase e^(i pi Phi): N1={oq.N1} N2={oq.N2} M1={oq.M1} M2={oq.M2} "
                    f"L={format_half(L)}: printed {wp:.12g} vs overlap {w:.12g}")
        idx = w4_indices(oq, channel.m_plus)
        if idx.L_min != channel.m_plus:
            notes.append(
                f"4D printed lower limit L_min={format_half(idx.L_min)} differs from "
                f"m_plus={format_half(channel.m_plus)} for M1={oq.M1} M2={oq.M2}")
    return sorted(set(notes), key=notes.index)
