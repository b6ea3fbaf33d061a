"""Generalized MIC-Kepler system, its dual 4D double singular oscillator, and their bases."""

from .channels import (Channel, Constants, OscCylindricalQN, OscSphericalQN, ParabolicQN,
                       QuantumNumberError, SphericalQN, energy_mic, make_channel)
from .specfun import DomainError

__all__ = [
    "Channel", "Constants", "DomainError", "OscCylindricalQN", "OscSphericalQN",
    "ParabolicQN", "QuantumNumberError", "SphericalQN", "energy_mic", "make_channel",
]

__version__ = "0.1.0"
