import math
from fractions import Fraction

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mickepler.quadrature import gauss_jacobi
from mickepler.specfun import DomainError, cg_real, jacobi_p, kummer_1f1, ln_gamma, rgamma

PARAMS = (0.0, 0.37, 1.5, 2.83)


# ln_gamma ---------------------------------------------------------------

def test_ln_gamma_examples():
    assert ln_gamma(1.0) == 0.0
    assert ln_gamma(0.5) == pytest.approx(0.57236494292470008, rel=1e-15)
    assert ln_gamma(5.0) == pytest.approx(math.log(24.0), rel=1e-15)


def test_ln_gamma_against_mpmath():
    xs = np.geomspace(1e-3, 1e4, 301)
    for x in xs:
        ref = float(mpmath.loggamma(mpmath.mpf(float(x))))
        # relative error, with an absolute floor where ln Gamma crosses zero (x = 1, 2)
        assert abs(ln_gamma(float(x)) - ref) <= 1e-13 * max(abs(ref), 1.0), x


@given(st.floats(min_value=0.1, max_value=100.0))
def test_ln_gamma_recurrence(x):
    assert abs(ln_gamma(x + 1) - ln_gamma(x) - math.log(x)) <= 1e-12


@pytest.mark.parametrize("bad", [0.0, -1.5, math.inf, math.nan])
def test_ln_gamma_domain(bad):
    with pytest.raises(DomainError):
        ln_gamma(bad)


def test_rgamma_poles_and_values():
    assert rgamma(0.0) == 0.0
    assert rgamma(-3.0) == 0.0
    assert rgamma(4.0) == pytest.approx(1 / 6)
    assert rgamma(-0.5) == pytest.approx(float(1 / mpmath.gamma(-0.5)), rel=1e-14)


# jacobi_p ---------------------------------------------------------------

def jacobi_series(n, a, b, x):
    """Explicit finite sum, evaluated in 50-digit arithmetic."""
    with mpmath.workdps(50):
        x = mpmath.mpf(x)
        tot = mpmath.mpf(0)
        for s in range(n + 1):
            tot += (mpmath.binomial(n + a, n - s) * mpmath.binomial(n + b, s)
                    * ((x - 1) / 2) ** s * ((x + 1) / 2) ** (n - s))
        return float(tot)


def test_jacobi_examples():
    assert jacobi_p(0, 0.7, 2.1, 0.3) == 1.0
    assert jacobi_p(1, 0.0, 0.0, 0.3) == pytest.approx(0.3, abs=1e-16)
    assert jacobi_p(2, 0.5, 1.5, 0.2) == pytest.approx(jacobi_series(2, 0.5, 1.5, 0.2), rel=1e-13)


def test_jacobi_against_series_oracle():
    xs = np.linspace(-1.0, 1.0, 21)
    for n in range(11):
        for a in PARAMS:
            for b in PARAMS:
                ref = np.array([jacobi_series(n, a, b, x) for x in xs])
                got = jacobi_p(n, a, b, xs)
                # relative to the polynomial's size on [-1, 1]; pointwise relative
                # error is meaningless at the roots
                scale = np.max(np.abs(ref))
                assert np.max(np.abs(got - ref)) <= 1e-11 * scale, (n, a, b)


def test_jacobi_orthogonality_gauss_jacobi_64():
    for a in PARAMS:
        for b in PARAMS:
            g = gauss_jacobi(64, a, b)
            w = g.weights * (1 - g.nodes) ** a * (1 + g.nodes) ** b
            vals = [jacobi_p(n, a, b, g.nodes) for n in range(11)]
            for i in range(11):
                for k in range(i):
                    assert abs(np.sum(w * vals[i] * vals[k])) <= 1e-9, (a, b, i, k)


@given(st.integers(0, 8), st.sampled_from(PARAMS), st.sampled_from(PARAMS),
       st.floats(-1.0, 1.0))
def test_jacobi_reflection_symmetry(n, a, b, x):
    lhs = jacobi_p(n, a, b, -x)
    rhs = (-1) ** n * jacobi_p(n, b, a, x)
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs))


def test_jacobi_domain():
    with pytest.raises(DomainError):
        jacobi_p(-1, 0, 0, 0.0)
    with pytest.raises(DomainError):
        jacobi_p(2, 0, 0, 1.5)


# kummer_1f1 -------------------------------------------------------------

def test_kummer_examples():
    assert kummer_1f1(-3, 2.0, 0.0) == 1.0
    assert kummer_1f1(-1, 2.5, 1.0) == pytest.approx(0.6, abs=1e-15)
    assert kummer_1f1(-2, 1.0, 0.5) == pytest.approx(0.125, abs=1e-15)


@pytest.mark.parametrize("k", range(7))
@pytest.mark.parametrize("c", [0.5, 1.0, 2.7, 6.3])
def test_kummer_is_polynomial(k, c):
    x = np.linspace(0.0, 6.0, k + 5)
    vals = np.asarray(kummer_1f1(-k, c, x), dtype=float)
    diff = np.diff(vals, n=k + 1)
    assert np.max(np.abs(diff)) <= 1e-9 * max(1.0, np.max(np.abs(vals)))


def test_kummer_against_mpmath():
    for k in range(8):
        for c in (0.7, 1.0, 3.4):
            for x in (0.1, 2.0, 9.5):
                ref = float(mpmath.hyp1f1(-k, c, x))
                assert kummer_1f1(-k, c, x) == pytest.approx(ref, rel=1e-12, abs=1e-14)


def test_kummer_domain():
    with pytest.raises(DomainError):
        kummer_1f1(-1, 0.0, 1.0)
    with pytest.raises(DomainError):
        kummer_1f1(-0.5, 1.0, 1.0)


# cg_real ----------------------------------------------------------------

def _jops(j):
    """J_z, J_+ in the |j, m> basis ordered m = j, j-1, ..., -j."""
    ms = [j - k for k in range(int(2 * j) + 1)]
    dim = len(ms)
    jz = np.diag(ms).astype(float)
    jp = np.zeros((dim, dim))
    for i in range(1, dim):
        m = ms[i]
        jp[i - 1, i] = math.sqrt(j * (j + 1) - m * (m + 1))
    return ms, jz, jp


def cg_by_diagonalization(j1, j2):
    """Condon-Shortley coefficients from the coupled basis built by lowering |J J>."""
    ms1, jz1, jp1 = _jops(j1)
    ms2, jz2, jp2 = _jops(j2)
    i1, i2 = np.eye(len(ms1)), np.eye(len(ms2))
    jz = np.kron(jz1, i2) + np.kron(i1, jz2)
    jp = np.kron(jp1, i2) + np.kron(i1, jp2)
    jm = jp.T
    j2op = jm @ jp + jz @ jz + jz
    labels = [(m1, m2) for m1 in ms1 for m2 in ms2]
    table = {}
    J = j1 + j2
    while J >= abs(j1 - j2) - 1e-12:
        sel = [k for k, (m1, m2) in enumerate(labels) if abs(m1 + m2 - J) < 1e-12]
        sub = j2op[np.ix_(sel, sel)]
        vals, vecs = np.linalg.eigh(sub)
        v = vecs[:, np.argmin(np.abs(vals - J * (J + 1)))]
        state = np.zeros(len(labels))
        state[sel] = v
        k_top = labels.index((j1, J - j1))
        if state[k_top] < 0:
            state = -state
        M = J
        while M >= -J - 1e-12:
            for k, (m1, m2) in enumerate(labels):
                if abs(m1 + m2 - M) < 1e-12:
                    table[(m1, m2, J)] = state[k]
            state = jm @ state
            nrm = np.linalg.norm(state)
            if nrm > 0:
                state = state / nrm
            M -= 1
        J -= 1
    return table


def test_cg_examples():
    assert cg_real(0, 0, 0, 0, 0, 0) == pytest.approx(1.0, abs=1e-15)
    assert cg_real(0.5, 0.5, 0.5, 0.5, 1, 1) == pytest.approx(1.0, abs=1e-15)
    table = cg_by_diagonalization(0.5, 0.5)
    assert table[(0.5, -0.5, 1.0)] == pytest.approx(1 / math.sqrt(2), abs=1e-15)
    assert cg_real(0.5, 0.5, 0.5, -0.5, 1, 0) == pytest.approx(1 / math.sqrt(2), abs=1e-15)


HALVES = [0.0, 0.5, 1.0, 1.5, 2.0]


@pytest.mark.parametrize("j1", HALVES)
@pytest.mark.parametrize("j2", HALVES)
def test_cg_matches_diagonalization(j1, j2):
    for (m1, m2, J), ref in cg_by_diagonalization(j1, j2).items():
        assert cg_real(j1, m1, j2, m2, J, m1 + m2) == pytest.approx(ref, abs=1e-12)


@pytest.mark.parametrize("j1", HALVES)
@pytest.mark.parametrize("j2", HALVES)
def test_cg_orthonormality(j1, j2):
    Js = [j1 + j2 - k for k in range(int(round(2 * min(j1, j2))) + 1)]
    for J in Js:
        for J2 in Js:
            M = -min(J, J2)
            while M <= min(J, J2) + 1e-12:
                tot = 0.0
                m1 = -j1
                while m1 <= j1 + 1e-12:
                    m2 = M - m1
                    if abs(m2) <= j2 + 1e-12:
                        tot += cg_real(j1, m1, j2, m2, J, M) * cg_real(j1, m1, j2, m2, J2, M)
                    m1 += 1
                assert tot == pytest.approx(1.0 if J == J2 else 0.0, abs=1e-12)
                M += 1


def test_cg_selection_rule_zero():
    assert cg_real(1, 1, 1, 0, 1, 0) == 0.0


def test_cg_continuation_symmetric_in_real_shift():
    # a real shift of all labels keeps the coupling unitary (two-state column)
    d = 0.37
    a, b = 0.5 + d / 2, 0.5 + d / 2
    c = 1 + d
    col = [cg_real(a, a - k, b, b - 1 + k, c, a + b - 1) for k in range(2)]
    row2 = [cg_real(a, a - k, b, b - 1 + k, c - 1, a + b - 1) for k in range(2)]
    assert sum(x * x for x in col) == pytest.approx(1.0, abs=1e-12)
    assert sum(x * y for x, y in zip(col, row2)) == pytest.approx(0.0, abs=1e-12)


def test_cg_invalid_index_set_raises():
    # a non-integer slot hitting a Gamma pole: nothing makes the sum terminate
    with pytest.raises(DomainError):
        cg_real(0.3, 0.1, 0.4, 0.2, 0.6, 0.3)


@settings(max_examples=50)
@given(st.sampled_from([Fraction(k, 2) for k in range(5)]),
       st.sampled_from([Fraction(k, 2) for k in range(5)]))
def test_cg_stretched_state_is_one(j1, j2):
    assert cg_real(float(j1), float(j1), float(j2), float(j2),
                   float(j1 + j2), float(j1 + j2)) == pytest.approx(1.0, abs=1e-13)
