import json
import math

import numpy as np
import pytest

import stokeslab as sl


def test_grid_is_staggered_and_symmetric():
    u = sl.grid_points(8)
    assert u[0] == pytest.approx(-math.pi + math.pi / 8)
    assert np.array_equal(u, -u[::-1])


def test_hilbert_of_cosine():
    u = sl.grid_points(32)
    h = sl.hilbert(np.cos(3 * u))
    assert np.max(np.abs(h + np.sin(3 * u))) < 1e-14
    assert np.max(np.abs(sl.apply_k(np.cos(3 * u)) - 3 * np.cos(3 * u))) < 1e-13


def test_residual_of_single_cosine():
    u = sl.grid_points(64)
    eps = 0.1
    r = sl.residual(eps * np.cos(u), 1.0)
    assert np.max(np.abs(r + 0.5 * eps**2 * (1 + 2 * np.cos(2 * u)))) < 1e-15


def test_newton_small_wave():
    eta, c = sl.small_amplitude_seed(256, 0.002)
    r = sl.newton_solve(eta, c, height=0.002)
    assert r["iterations"] <= 6
    assert r["c"] > 1.0
    assert (r["c"] - 1.0) / (0.002**2 / 8) == pytest.approx(1.0, rel=1e-4)
    assert sl.wave_height(r["eta"]) == pytest.approx(0.002, rel=1e-12)


def test_singular_linearization():
    with pytest.raises(sl.SingularJacobian):
        sl.newton_solve(np.zeros(64), 1.0)
    with pytest.raises(sl.InvalidArgument):
        sl.newton_solve(0.01 * np.sin(sl.grid_points(32)), 1.0, height=0.02)


def test_branch_and_fit():
    b = sl.continue_branch(128, 0.002, 0.3)
    assert b["stop"] == "target_reached"
    s = [e["s"] for e in b["entries"]]
    assert s == sorted(s) and s[-1] == 0.3
    assert all(e["diagnostics"]["residual_norm"] <= 1e-10 for e in b["entries"])
    last = b["entries"][-1]
    x, y, angle = sl.physical_surface(last["eta"], last["c"])
    assert 150 < angle < 180
    assert len(x) == 128


def test_exponents_and_reports():
    e = sl.find_exponents()
    assert e["beta_root"] == pytest.approx(2 / 3, abs=1e-12)
    assert round(e["grant_roots"][0], 3) == 1.469
    assert abs(sl.grant_lhs(2 / 3)) < 1e-12
    with pytest.raises(ValueError):
        sl.grant_lhs(1.0)
    assert sl.predicted_action_coefficient(0.5) == pytest.approx(-0.5)
    assert sl.measured_action_coefficient(0.5, 8192) == pytest.approx(-0.5, rel=0.01)
    c = sl.cancellation_check(1.0, 4096)
    assert abs(c["sum"]) < 0.02 * c["expected"]
    json.dumps(sl.lemma_remainder_report(0.5, False, 1.0, [1024, 2048]))


def test_crest_fit_synthetic():
    u = sl.grid_points(16384)
    eta = 0.5 - 2.0 * np.abs(u) ** (2 / 3)
    f = sl.crest_fit(eta, 1.0)
    assert f["A"] == pytest.approx(2.0, rel=1e-6)
    assert f["beta"] == pytest.approx(2 / 3, rel=1e-6)
    with pytest.raises(ValueError):
        sl.crest_fit(eta, 0.1)
