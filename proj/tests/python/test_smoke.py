import math

import numpy as np
import pytest

import gsk


def test_group_compose_matches_matrix():
    g1 = [1.0, 0.0, 2.0, math.log(2.0), 0.0]
    g2 = [1.0, 1.0, 0.0, 0.0, math.log(3.0)]
    assert gsk.compose("GAFF", g1, g2) == pytest.approx([2, 4, 2, math.log(2.0), math.log(3.0)])
    m = gsk.to_matrix("GAFF", g1) @ gsk.to_matrix("GAFF", g2)
    assert np.abs(m - gsk.to_matrix("GAFF", gsk.compose("GAFF", g1, g2))).max() < 1e-14
    assert len(gsk.group_tags()) == 16


def test_orbits():
    assert gsk.dual_act("gaff", [1, 0, 0], [1, 1]) == pytest.approx([0, 1])
    assert gsk.orbit_label("gaff", [3, -2]) == "HALF_PLANE_NEG"
    assert gsk.orbit_label("gms", [1, 1, 1]) == "PARABOLA_INTERIOR"
    assert gsk.orbit_coords("gs", [4, 2]) == pytest.approx([1, 2])
    with pytest.raises(gsk.Error, match="singular"):
        gsk.orbit_coords("gs", [1, 0])


def test_transforms():
    dt = 1 / 64
    t = np.arange(256) * dt
    x = np.cos(2 * np.pi * 8 * t)
    S = gsk.stockwell(x, dt, 64)
    assert S.values.shape == (64, 256)
    assert S.axis1[np.abs(S.values).mean(axis=1).argmax()] == pytest.approx(8.0)
    marg = gsk.stockwell_time_marginal(S)
    assert abs(marg[31]) == pytest.approx(2.0, rel=1e-9)  # dt * N / 2

    x = np.cos(2 * np.pi * 5 * np.arange(1024) / 256)
    om = 2 * np.pi * 5
    W = gsk.cwt(x, 1 / 256, gsk.log_uniform(1.5 / om, 12 / om, 64))
    back = gsk.icwt(W)
    assert np.linalg.norm(back - x) / np.linalg.norm(x) < 1e-2
    assert gsk.admissibility_constant(gsk.Window.mexican_hat()) == pytest.approx(0.5, abs=1e-8)
    with pytest.raises(gsk.Error):
        gsk.icwt(W, gsk.Window.gaussian(0.2))


def test_verify_report():
    r = gsk.verify("orbits", seed=3, samples=50)
    assert r["suite"] == "orbits" and r["seed"] == 3 and r["pass"] is True
    assert all(set(c) == {"name", "defect", "tol", "pass"} for c in r["checks"])
    assert gsk.suite_names() == ["groups", "cocycles", "orbits", "reps", "transforms"]
