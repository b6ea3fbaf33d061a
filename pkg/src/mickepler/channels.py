"""Quantum-number algebra of a (s, m, lambda1, lambda2) sector.

Half-integers (s, m, j and the principal number n, which is half-integer
whenever s is) are held as :class:`fractions.Fraction` with denominator 1
or 2, so selection rules stay exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction


class QuantumNumberError(ValueError):
    """An inadmissible quantum number; the message names the violated rule."""


def half_int(value) -> Fraction:
    """Parse ``value`` as a half-integer.

    Accepts ints, Fractions, floats ending in .0/.5 and strings such as
    ``"1/2"``, ``"-3/2"``, ``"0.5"`` or ``"2"``.
    """
    if isinstance(value, str):
        text = value.strip()
        try:
            frac = Fraction(text)
        except ValueError:
            raise QuantumNumberError(f"cannot parse {value!r} as a half-integer") from None
    elif isinstance(value, float):
        if not math.isfinite(value):
            raise QuantumNumberError(f"{value!r} is not a half-integer")
        frac = Fraction(value)
    else:
        frac = Fraction(value)
    if frac.denominator not in (1, 2):
        raise QuantumNumberError(f"{value!r} is not an integer or half-integer")
    return frac


def is_integer(x: Fraction) -> bool:
    return Fraction(x).denominator == 1


def format_half(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/2"


@dataclass(frozen=True)
class Constants:
    """Physical constants; natural units hbar = mass = charge = 1 by default.

    ``mass`` is the reduced mass of the charge-dyon pair and is used for the
    dual oscillator as well.
    """

    hbar: float = 1.0
    mass: float = 1.0
    charge: float = 1.0
    light_speed: float = 1.0

    def __post_init__(self):
        for name in ("hbar", "mass", "charge", "light_speed"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v > 0.0):
                raise ValueError(f"constant {name} must be finite and > 0, got {v!r}")

    @property
    def bohr_radius(self) -> float:
        return self.hbar**2 / (self.mass * self.charge**2)


NATURAL = Constants()


def _delta(k: Fraction, lam: float, constants: Constants) -> float:
    # sqrt(k^2 + q) - |k| written without cancellation
    q = 4.0 * constants.mass * lam / constants.hbar**2
    if q == 0.0:
        return 0.0
    ak = abs(float(k))
    return q / (math.sqrt(ak * ak + q) + ak)


@dataclass(frozen=True)
class Channel:
    s: Fraction
    m: Fraction
    lambda1: float = 0.0
    lambda2: float = 0.0
    constants: Constants = NATURAL
    m_plus: Fraction = field(init=False)
    m_minus: Fraction = field(init=False)
    delta1: float = field(init=False)
    delta2: float = field(init=False)
    m1: float = field(init=False)
    m2: float = field(init=False)

    def __post_init__(self):
        s = half_int(self.s)
        m = half_int(self.m)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "m", m)
        if (2 * s).numerator % 2 != (2 * m).numerator % 2:
            raise QuantumNumberError(
                f"m={format_half(m)} and s={format_half(s)} must both be integers "
                "or both half-integers (m+s and m-s integer)")
        for name in ("lambda1", "lambda2"):
            lam = float(getattr(self, name))
            if not math.isfinite(lam) or lam < 0.0:
                raise QuantumNumberError(f"{name} must be finite and >= 0, got {lam!r}")
            object.__setattr__(self, name, lam)
        mps, mms = abs(m + s), abs(m - s)
        object.__setattr__(self, "m_plus", (mps + mms) / 2)
        object.__setattr__(self, "m_minus", (mps - mms) / 2)
        d1 = _delta(m + s, self.lambda1, self.constants)
        d2 = _delta(m - s, self.lambda2, self.constants)
        object.__setattr__(self, "delta1", d1)
        object.__setattr__(self, "delta2", d2)
        object.__setattr__(self, "m1", float(mps) + d1)
        object.__setattr__(self, "m2", float(mms) + d2)

    @property
    def delta_bar(self) -> float:
        return 0.5 * (self.delta1 + self.delta2)

    @property
    def magnetic_charge(self) -> float:
        c = self.constants
        return c.hbar * c.light_speed * float(self.s) / c.charge

    def n_values(self, n_max) -> list[Fraction]:
        """Admissible principal numbers m_plus+1, m_plus+2, ... not exceeding n_max."""
        out = []
        n = self.m_plus + 1
        while n <= Fraction(n_max):
            out.append(n)
            n += 1
        return out

    def to_json(self) -> dict:
        c = self.constants
        return {
            "s": format_half(self.s),
            "m": format_half(self.m),
            "lambda1": self.lambda1,
            "lambda2": self.lambda2,
            "hbar": c.hbar,
            "mass": c.mass,
            "charge": c.charge,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Channel":
        constants = Constants(
            hbar=float(data.get("hbar", 1.0)),
            mass=float(data.get("mass", 1.0)),
            charge=float(data.get("charge", 1.0)),
        )
        return cls(half_int(data["s"]), half_int(data["m"]),
                   float(data.get("lambda1", 0.0)), float(data.get("lambda2", 0.0)),
                   constants)


def make_channel(s, m, lambda1: float = 0.0, lambda2: float = 0.0,
                 constants: Constants = NATURAL) -> Channel:
    return Channel(half_int(s), half_int(m), lambda1, lambda2, constants)


def _check_n(n, channel: Channel) -> Fraction:
    n = half_int(n)
    if n < channel.m_plus + 1 or not is_integer(n - channel.m_plus):
        raise QuantumNumberError(
            f"n={format_half(n)} inadmissible: need n - m_plus a positive integer "
            f"(m_plus={format_half(channel.m_plus)})")
    return n


def effective_n(n, channel: Channel) -> float:
    """n + (delta1 + delta2)/2, the number that fixes the energy."""
    return float(_check_n(n, channel)) + channel.delta_bar


def energy_mic(n, channel: Channel) -> float:
    c = channel.constants
    nu = effective_n(n, channel)
    return -c.mass * c.charge**4 / (2.0 * c.hbar**2 * nu * nu)


def epsilon_scale(n, channel: Channel) -> float:
    return 1.0 / (channel.constants.bohr_radius * effective_n(n, channel))


@dataclass(frozen=True)
class SphericalQN:
    n: Fraction
    j: Fraction
    channel: Channel

    def __post_init__(self):
        n = half_int(self.n)
        j = half_int(self.j)
        object.__setattr__(self, "j", j)
        ch = self.channel
        n = _check_n(n, ch)
        object.__setattr__(self, "n", n)
        if j < ch.m_plus or not is_integer(j - ch.m_plus):
            raise QuantumNumberError(
                f"j={format_half(j)} inadmissible: need j = m_plus, m_plus+1, ... "
                f"(m_plus={format_half(ch.m_plus)})")
        if j > n - 1:
            raise QuantumNumberError(
                f"j={format_half(j)} inadmissible for n={format_half(n)}: need j <= n-1")
        if abs(ch.m) > j:
            raise QuantumNumberError(f"|m| <= j violated (m={format_half(ch.m)})")

    @property
    def m(self) -> Fraction:
        return self.channel.m

    @property
    def s(self) -> Fraction:
        return self.channel.s


@dataclass(frozen=True)
class ParabolicQN:
    n1: int
    n2: int
    channel: Channel

    def __post_init__(self):
        for name in ("n1", "n2"):
            v = getattr(self, name)
            if int(v) != v or v < 0:
                raise QuantumNumberError(f"{name} must be a nonnegative integer, got {v!r}")
            object.__setattr__(self, name, int(v))

    @property
    def n(self) -> Fraction:
        return self.n1 + self.n2 + self.channel.m_plus + 1

    @property
    def x_eigenvalue(self) -> float:
        """Declared eigenvalue of the separation operator of the parabolic basis."""
        ch = self.channel
        c = ch.constants
        eps = epsilon_scale(self.n, ch)
        return (c.hbar * eps / math.sqrt(c.mass)
                * (self.n1 - self.n2 + float(ch.m_minus) + 0.5 * (ch.delta1 - ch.delta2)))


def spherical_states(channel: Channel, n_max) -> list[SphericalQN]:
    out = []
    for n in channel.n_values(n_max):
        j = channel.m_plus
        while j <= n - 1:
            out.append(SphericalQN(n, j, channel))
            j += 1
    return out


def parabolic_states(channel: Channel, n_max) -> list[ParabolicQN]:
    out = []
    for n in channel.n_values(n_max):
        total = int(n - channel.m_plus - 1)
        for n1 in range(total + 1):
            out.append(ParabolicQN(n1, total - n1, channel))
    return out


def _check_osc_level(N, two_s: int) -> int:
    if int(N) != N or N < 0:
        raise QuantumNumberError(f"N must be a nonnegative integer, got {N!r}")
    if (int(N) - two_s) % 2:
        raise QuantumNumberError(
            f"N={N} has no MIC-Kepler partner: parity rule N = 2(n-1) needs N = 2M' (mod 2)")
    return int(N)


@dataclass(frozen=True)
class OscSphericalQN:
    """(N, L, M, M') state of the 4D double singular oscillator with couplings c1, c2."""

    N: int
    L: Fraction
    M: Fraction
    Mprime: Fraction
    c1: float = 0.0
    c2: float = 0.0
    constants: Constants = NATURAL

    def __post_init__(self):
        for name in ("L", "M", "Mprime"):
            object.__setattr__(self, name, half_int(getattr(self, name)))
        object.__setattr__(self, "N", _check_osc_level(self.N, int(2 * self.Mprime)))
        self.mic()

    @property
    def channel(self) -> Channel:
        return Channel(self.Mprime, self.M, self.c1 / 2, self.c2 / 2, self.constants)

    @property
    def n(self) -> Fraction:
        return Fraction(self.N, 2) + 1

    def mic(self) -> SphericalQN:
        return SphericalQN(self.n, self.L, self.channel)

    @classmethod
    def from_mic(cls, qn: SphericalQN) -> "OscSphericalQN":
        ch = qn.channel
        return cls(int(2 * (qn.n - 1)), qn.j, ch.m, ch.s, 2 * ch.lambda1, 2 * ch.lambda2, ch.constants)


@dataclass(frozen=True)
class OscCylindricalQN:
    """(N1, N2, M1, M2) state; M1 = m + s and M2 = m - s are integers."""

    N1: int
    N2: int
    M1: int
    M2: int
    c1: float = 0.0
    c2: float = 0.0
    constants: Constants = NATURAL

    def __post_init__(self):
        for name in ("N1", "N2", "M1", "M2"):
            v = getattr(self, name)
            if int(v) != v:
                raise QuantumNumberError(f"{name} must be an integer, got {v!r}")
            object.__setattr__(self, name, int(v))
        if self.N1 < 0 or self.N2 < 0:
            raise QuantumNumberError("N1, N2 must be nonnegative")

    @property
    def N(self) -> int:
        return 2 * self.N1 + 2 * self.N2 + abs(self.M1) + abs(self.M2)

    @property
    def channel(self) -> Channel:
        return Channel(Fraction(self.M1 - self.M2, 2), Fraction(self.M1 + self.M2, 2),
                       self.c1 / 2, self.c2 / 2, self.constants)

    def mic(self) -> ParabolicQN:
        return ParabolicQN(self.N1, self.N2, self.channel)

    @classmethod
    def from_mic(cls, qn: ParabolicQN) -> "OscCylindricalQN":
        ch = qn.channel
        return cls(qn.n1, qn.n2, int(ch.m + ch.s), int(ch.m - ch.s),
                   2 * ch.lambda1, 2 * ch.lambda2, ch.constants)
