"""Central finite differences, 4th order with one Richardson step (6th order)."""

from __future__ import annotations


def _d1(f, x, h):
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h)


def _d2(f, x, h):
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h)


def d1(f, x, h):
    coarse, fine = _d1(f, x, h), _d1(f, x, h / 2)
    return fine + (fine - coarse) / 15.0


def d2(f, x, h):
    coarse, fine = _d2(f, x, h), _d2(f, x, h / 2)
    return fine + (fine - coarse) / 15.0
