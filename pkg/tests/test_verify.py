import json
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from mickepler.channels import OscSphericalQN, ParabolicQN, SphericalQN, make_channel
from mickepler.coords import Cartesian4
from mickepler.verify import (TOLERANCES, GridSpec, VerificationReport, check_duality,
                              check_interbasis, check_orthonormality, check_residual_mic,
                              check_residual_osc, check_spectrum, default_channels,
                              reports_to_json, run_checks, sample_double_polar, sample_spherical)

SMALL = GridSpec(radial=48, polar=32, azimuthal=8, radial4=32, polar4=16, angular4=4)


@given(st.floats(0, 1e-3), st.floats(1e-12, 1e-3))
def test_report_passed_iff_within_tolerance(err, tol):
    r = VerificationReport("x", {}, err, tol)
    assert r.passed == (err <= tol)


def test_report_json_round_trip():
    r = VerificationReport("x", {"a": 1}, 1e-9, 1e-8, {"grid0": [2, 3]}, ["note"])
    data = json.loads(reports_to_json([r]))
    assert data == [r.to_dict()]
    assert data[0]["passed"] is True


def test_grid_spec_doubling_and_counts():
    g = GridSpec()
    assert g.doubled().radial == 2 * g.radial and g.doubled().angular4 == 2 * g.angular4
    g = GridSpec.from_counts(64, 40)
    assert (g.radial, g.polar, g.radial4, g.polar4) == (64, 40, 32, 20)


def test_samples_respect_margins():
    ch = make_channel("1/2", "1/2", 0.5, 0.2)
    rng = np.random.default_rng(0)
    p = sample_spherical(rng, 200, ch, 2)
    assert np.all(p.theta >= 0.1) and np.all(p.theta <= math.pi - 0.1) and np.all(p.r > 0)
    d = sample_double_polar(rng, 200, ch, 2)
    assert np.all(d.rho1 >= 0.05) and np.all(d.rho2 >= 0.05)


def test_ortho_examples():
    r = check_orthonormality("spherical3", make_channel(0, 0), 3)
    assert r.passed and r.max_error <= 1e-8 and set(r.grid_meta) == {"grid0", "grid1"}
    r = check_orthonormality("parabolic3", make_channel("1/2", "1/2", 0.5, 0.0), 3)
    assert r.passed and r.max_error <= 1e-8
    r = check_orthonormality("osc4-spherical", make_channel(0, 0), 1, doubling=False)
    assert r.max_error <= 1e-9


def test_ortho_rejects_bad_inputs():
    with pytest.raises(ValueError):
        check_orthonormality("cubic", make_channel(0, 0), 2)
    with pytest.raises(ValueError):
        check_orthonormality("spherical3", make_channel(0, 0), 6)


def test_residual_examples():
    ch = make_channel("1/2", "1/2", 0.3, 0.1)
    rng = np.random.default_rng(1)
    r = check_residual_mic(SphericalQN(1, 0, make_channel(0, 0)),
                           sample_spherical(rng, 30, make_channel(0, 0), 1))
    assert r.max_error <= 1e-6
    p = sample_spherical(rng, 30, ch, 2.5)
    assert check_residual_mic(SphericalQN("5/2", "3/2", ch), p).max_error <= 1e-5
    assert check_residual_mic(ParabolicQN(1, 0, ch), p).max_error <= 1e-5
    u = Cartesian4(*rng.normal(size=(4, 30)))
    assert check_residual_osc(OscSphericalQN(2, 1, 0, 0), u).passed


def test_interbasis_examples():
    for ch in (make_channel(0, 0), make_channel("1/2", "1/2", 0.5, 0.2)):
        reports = {r.check_name: r for r in check_interbasis(ch, 3, SMALL)}
        assert reports["interbasis.oracle3d"].max_error <= 1e-8
        assert reports["interbasis.unitarity"].max_error <= 1e-10
        assert reports["interbasis.reconstruction4d"].max_error <= 1e-8
    notes = reports["interbasis.oracle3d"].notes
    assert any("printed index pattern" in n for n in notes)
    assert any("printed N_jm" in n for n in notes)


def test_duality_examples():
    r = check_duality(make_channel(0, 0), 1)[0]
    assert r.max_error <= 1e-12
    reps = check_duality(make_channel("1/2", "1/2", 0.3, 0.1), "7/2")
    assert all(x.passed for x in reps)
    assert reps[0].max_error <= 1e-10 and reps[2].max_error <= 1e-13


def test_spectrum_check():
    r = check_spectrum(make_channel(0, 0))
    assert r.passed and r.tolerance == TOLERANCES["spectrum"]


def test_run_checks_deterministic_and_ordered():
    chans = default_channels()[:2]
    a = reports_to_json(run_checks(["eigen", "duality"], chans, 2, SMALL, seed=3, workers=1))
    b = reports_to_json(run_checks(["eigen", "duality"], chans, 2, SMALL, seed=3, workers=4))
    assert a == b
    names = [r["check_name"] for r in json.loads(a)]
    assert names[:3] == ["eigen.angular", "eigen.jz", "eigen.gamma"]


def test_tolerance_override_fails_checks():
    reps = run_checks(["spectrum", "duality"], default_channels()[:1], 2, seed=0, tolerance=1e-300)
    assert any(not r.passed for r in reps)
    assert all(r.tolerance == 1e-300 for r in reps)


def test_unknown_check_rejected():
    with pytest.raises(ValueError):
        run_checks(["nonsense"], default_channels()[:1], 2)
