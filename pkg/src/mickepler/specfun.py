"""Real-argument special functions used by the bound-state bases.

Everything here is a pure function of its arguments. ``jacobi_p`` and
``kummer_1f1`` accept numpy arrays for the evaluation point so that whole
quadrature grids can be evaluated at once; the parameters are scalars.
"""

from __future__ import annotations

import math

import numpy as np

INTEGER_TOL = 1e-9


class DomainError(ValueError):
    """Raised when an argument lies outside the supported domain."""


def _nearest_int(x: float, tol: float = INTEGER_TOL) -> int | None:
    k = round(x)
    if abs(x - k) <= tol:
        return int(k)
    return None


def ln_gamma(x: float) -> float:
    """Natural logarithm of the Gamma function for ``x > 0``."""
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"ln_gamma requires a finite x > 0, got {x!r}")
    return math.lgamma(x)


def rgamma(x: float) -> float:
    """Reciprocal Gamma function, entire in ``x``; exactly 0 at the poles."""
    x = float(x)
    if x > 0.0:
        return math.exp(-math.lgamma(x))
    k = _nearest_int(x, 1e-14)
    if k is not None:
        return 0.0
    # reflection: 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi
    return math.exp(math.lgamma(1.0 - x)) * math.sin(math.pi * x) / math.pi


def jacobi_p(n: int, alpha: float, beta: float, x):
    """Jacobi polynomial P_n^(alpha, beta)(x) by the three-term recurrence.

    ``x`` may be a scalar or an array with all entries in [-1, 1].
    """
    if n < 0 or int(n) != n:
        raise DomainError(f"jacobi_p degree must be a nonnegative integer, got {n!r}")
    if alpha <= -1.0 or beta <= -1.0:
        raise DomainError(f"jacobi_p needs alpha, beta > -1, got ({alpha}, {beta})")
    x = np.asarray(x, dtype=float)
    if np.any(np.abs(x) > 1.0 + 1e-14):
        raise DomainError("jacobi_p argument must satisfy |x| <= 1")
    n = int(n)
    p_prev = np.ones_like(x)
    if n == 0:
        return p_prev if p_prev.ndim else float(p_prev)
    ab = alpha + beta
    p = 0.5 * (alpha - beta) + 0.5 * (ab + 2.0) * x
    for k in range(2, n + 1):
        c = 2.0 * k + ab
        a1 = 2.0 * k * (k + ab) * (c - 2.0)
        a2 = (c - 1.0) * (alpha * alpha - beta * beta)
        a3 = (c - 2.0) * (c - 1.0) * c
        a4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * c
        p_prev, p = p, ((a2 + a3 * x) * p - a4 * p_prev) / a1
    return p if p.ndim else float(p)


def kummer_1f1(a: float, c: float, x):
    """Confluent hypergeometric 1F1(a; c; x) for nonpositive integer ``a``.

    The series terminates after ``-a + 1`` terms; it is summed with
    Neumaier compensation so alternating terms do not lose digits needlessly.
    """
    if c <= 0.0:
        raise DomainError(f"kummer_1f1 requires c > 0, got {c!r}")
    k = _nearest_int(a)
    if k is None or k > 0:
        raise DomainError(f"kummer_1f1 only supports a = 0, -1, -2, ...; got {a!r}")
    x = np.asarray(x, dtype=float)
    if np.any(x < 0.0):
        raise DomainError("kummer_1f1 argument must be nonnegative")
    degree = -k
    total = np.ones_like(x)
    comp = np.zeros_like(x)
    term = np.ones_like(x)
    for i in range(degree):
        term = term * ((i - degree) / ((c + i) * (i + 1.0))) * x
        t = total + term
        big = np.abs(total) >= np.abs(term)
        comp = comp + np.where(big, (total - t) + term, (term - t) + total)
        total = t
    out = total + comp
    return out if out.ndim else float(out)


def _slot(x: float):
    """Classify a factorial argument: (is_integer, value)."""
    k = _nearest_int(x)
    return (k is not None), (float(k) if k is not None else x)


def cg_real(a: float, alpha: float, b: float, beta: float, c: float, gamma: float) -> float:
    """Clebsch-Gordan coefficient <a alpha; b beta | c gamma> for real arguments.

    Racah's single-sum formula with every factorial n! read as Gamma(n+1).
    With half-integer arguments this is the ordinary SU(2) coefficient
    (Condon-Shortley phase). For real arguments the sum is finite as long as
    at least one of the decreasing slots a+b-c, a-alpha, b+beta is a
    nonnegative integer; the remaining slots enter through 1/Gamma, which is
    finite (possibly negative) for negative non-integer arguments.
    """
    if abs(alpha + beta - gamma) > INTEGER_TOL:
        return 0.0

    pre_args = [a + b - c, a - b + c, -a + b + c, a + alpha, a - alpha,
                b + beta, b - beta, c + gamma, c - gamma]
    for arg in pre_args:
        if arg < -INTEGER_TOL:
            if _nearest_int(arg) is not None:
                # negative integer factorial: outside the SU(2) multiplet
                return 0.0
            raise DomainError(
                f"cg_real: Gamma argument {arg + 1:.6g} <= 0 in the prefactor; "
                f"invalid index set {(a, alpha, b, beta, c, gamma)}")
    pre_args = [max(arg, 0.0) if abs(arg) <= INTEGER_TOL else arg for arg in pre_args]

    log_pre = 0.5 * (
        math.log(2.0 * c + 1.0)
        + sum(math.lgamma(arg + 1.0) for arg in pre_args)
        - math.lgamma(a + b + c + 2.0)
    )

    decreasing = [_slot(a + b - c), _slot(a - alpha), _slot(b + beta)]
    increasing = [_slot(c - b + alpha), _slot(c - a - beta)]

    upper = [v for is_int, v in decreasing if is_int]
    if not upper:
        raise DomainError(
            "cg_real: no integer-valued decreasing slot, the Racah sum does not terminate "
            f"for {(a, alpha, b, beta, c, gamma)}")
    k_hi = int(min(upper))
    k_lo = 0
    for is_int, v in increasing:
        if is_int:
            k_lo = max(k_lo, int(-v))

    terms = []
    for k in range(k_lo, k_hi + 1):
        denom = (rgamma(k + 1.0)
                 * rgamma(decreasing[0][1] - k + 1.0)
                 * rgamma(decreasing[1][1] - k + 1.0)
                 * rgamma(decreasing[2][1] - k + 1.0)
                 * rgamma(increasing[0][1] + k + 1.0)
                 * rgamma(increasing[1][1] + k + 1.0))
        terms.append((-1.0) ** k * denom)
    return math.exp(log_pre) * math.fsum(terms)
