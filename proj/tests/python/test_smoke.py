import math

import numpy as np
import pytest

import fracdiff


def test_special_functions():
    assert fracdiff.gamma(5.0) == pytest.approx(24.0)
    assert fracdiff.mittag_leffler(1.0, 1.0) == pytest.approx(math.e, rel=1e-14)
    assert fracdiff.mittag_leffler(0.5, 0.0) == 1.0
    with pytest.raises(ValueError):
        fracdiff.gamma(-1.0)
    with pytest.raises(fracdiff.ConvergenceError):
        fracdiff.mittag_leffler(0.5, -1.0, max_terms=3)


def test_meshes_and_weights():
    pts = fracdiff.time_mesh(1.0, 4, "graded:3")
    np.testing.assert_allclose(pts, [0, 1 / 64, 1 / 8, 27 / 64, 1])
    w = fracdiff.weights_row(fracdiff.time_mesh(1.0, 10), 0.5, 10)
    assert w.shape == (10,)
    assert np.all(w > 0)
    assert w.sum() == pytest.approx(1.0 / math.gamma(1.5), rel=1e-12)


def test_operators():
    v = np.array([0.0, 1.0, 0.0])
    assert fracdiff.apply_hh(v)[1] == pytest.approx(10 / 12)
    assert fracdiff.apply_delta_x2(v, 0.5)[1] == pytest.approx(-8.0)
    assert fracdiff.norm_a(v, 0.5) == pytest.approx(math.sqrt(10 / 3))
    w = fracdiff.solve_tridiagonal([1.0, 1.0], [4.0, 4.0, 4.0], [1.0, 1.0], [6.0, 12.0, 6.0])
    np.testing.assert_allclose(w, [6 / 7, 18 / 7, 6 / 7])


def test_solve_manufactured():
    out = fracdiff.solve("manufactured-sin", 0.75, 100, 10)
    assert out["u"].shape == (11, 101)
    assert out["max_error"] == pytest.approx(0.0022, rel=0.02)
    assert np.all(out["u"][:, 0] == 0.0) and np.all(out["u"][:, -1] == 0.0)


def test_sweep_rows():
    rows = fracdiff.run_sweep([0.5], 20, "10:40:x2")
    assert [r["N"] for r in rows] == [10, 20, 40]
    assert rows[0]["rate"] is None
    assert rows[2]["rate"] == pytest.approx(math.log2(rows[1]["E1"] / rows[2]["E1"]))
    with pytest.raises(ValueError):
        fracdiff.run_sweep([0.5], 20, "10:40:x2", scheme="l1", mesh="graded:2")
