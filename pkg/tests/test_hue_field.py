import math

import numpy as np
import pytest

import oracles
from shsm.color import LhcImage
from shsm.errors import ImageTooSmallError
from shsm.filters import filter_valid, gaussian_kernel_2d
from shsm.hue_field import (
    Direction,
    GradientField,
    ShsmParams,
    Stage,
    angle_diff,
    chroma_gate,
    gated_gradients,
    normalize_gradients,
    spatial_weight,
    weighted_fields,
)

P = ShsmParams()
GATE_AT_ZERO = 0.006692850924284855  # 1/(1+e^5), mpmath at 30 digits


def img(hue, chroma, L=50.0):
    hue = np.asarray(hue)
    return LhcImage(np.full(hue.shape, L), hue.astype(np.uint8), np.broadcast_to(chroma, hue.shape).astype(float))


def test_default_params():
    assert (P.c0, P.k_c, P.h0, P.k_h, P.sigma, P.window, P.epsilon) == (5, 1, 5, 1, 1.5, 11, 0.03)


@pytest.mark.parametrize(
    "kwargs",
    [{"c0": 0}, {"h0": -1}, {"k_c": 0}, {"k_h": -2}, {"sigma": 0}, {"epsilon": 0},
     {"window": 4}, {"window": 1}, {"window": 5.5}, {"c0": float("nan")}],
)
def test_invalid_params(kwargs):
    with pytest.raises(ValueError):
        ShsmParams(**kwargs)


@pytest.mark.parametrize("h1, h2, want", [(37, 37, 0), (0, 128, 128), (10, 250, 16), (255, 0, 1), (0, 129, 127)])
def test_angle_diff(h1, h2, want):
    assert angle_diff(h1, h2) == want
    assert angle_diff(h2, h1) == want


def test_angle_diff_exhaustive_against_loop():
    h = np.arange(256)
    got = angle_diff(h[:, None], h[None, :])
    want = np.array([[oracles.circ(a, b) for b in range(256)] for a in range(256)])
    assert np.array_equal(got, want)


def test_chroma_gate_values():
    assert chroma_gate(5.0, P) == 0.5
    assert chroma_gate(0.0, P) == pytest.approx(GATE_AT_ZERO, rel=1e-12)
    assert chroma_gate(100.0, P) > 0.9999


def test_constant_hue_gives_zero_gradients():
    for f in gated_gradients(img(np.full((6, 9), 77), 40.0), P):
        assert f.values.shape == (5, 8)
        assert np.all(f.values == 0)


def test_two_by_two_wraparound():
    dr, dl = gated_gradients(img([[10, 10], [10, 250]], 100.0), P)
    assert dr.direction is Direction.DIAG_DOWN_RIGHT
    assert dr.values[0, 0] == pytest.approx(16.0, abs=1e-12)
    assert dl.values[0, 0] == 0


def test_gate_suppresses_achromatic_hue_jump():
    dr, dl = gated_gradients(img([[0, 0], [0, 128]], 0.0), P)
    assert dr.values[0, 0] == pytest.approx(128 * GATE_AT_ZERO, rel=1e-12)
    assert dr.values[0, 0] == pytest.approx(0.856685, abs=1e-6)


def test_gate_uses_smaller_endpoint_chroma():
    chroma = np.array([[100.0, 0.0], [100.0, 5.0]])
    dr, _ = gated_gradients(img([[0, 0], [0, 64]], chroma), P)
    assert dr.values[0, 0] == pytest.approx(64 * 0.5)


def test_down_left_direction_pairs():
    hue = np.array([[0, 20], [50, 0]])
    dr, dl = gated_gradients(img(hue, 100.0), P)
    assert dr.values[0, 0] == pytest.approx(0.0)
    assert dl.values[0, 0] == pytest.approx(30.0)


def test_too_small_for_gradients():
    with pytest.raises(ImageTooSmallError):
        gated_gradients(img([[1, 2]], 10.0), P)


@pytest.mark.parametrize("v, want", [(5.0, 0.5), (9.0, 0.9820137900379085), (0.0, GATE_AT_ZERO)])
def test_normalize_values(v, want):
    f = normalize_gradients(GradientField(Direction.DIAG_DOWN_LEFT, np.array([[v]])), P)
    assert f.stage is Stage.NORMALIZED
    assert f.values[0, 0] == pytest.approx(want, rel=1e-12)


def test_spatial_weight_constant_and_zero():
    for v in (0.0, 0.37, 1.0):
        f = GradientField(Direction.DIAG_DOWN_RIGHT, np.full((15, 13), v), Stage.NORMALIZED)
        out = spatial_weight(f, P).values
        assert out.shape == (5, 3)
        np.testing.assert_allclose(out, v, atol=1e-15)


def test_spatial_weight_impulse_is_kernel_centre():
    field = np.zeros((11, 11))
    field[5, 5] = 1.0
    out = spatial_weight(GradientField(Direction.DIAG_DOWN_RIGHT, field, Stage.NORMALIZED), P).values
    centre = oracles.kernel(11, 1.5)[5][5]
    assert out.shape == (1, 1)
    assert out[0, 0] == pytest.approx(centre, rel=1e-12)
    assert centre == pytest.approx(0.07076, abs=1e-5)


def test_kernel_matches_direct_evaluation():
    k = gaussian_kernel_2d(11, 1.5)
    ref = np.array(oracles.kernel(11, 1.5))
    np.testing.assert_allclose(k, ref, rtol=1e-12)
    assert k.sum() == pytest.approx(1.0, abs=1e-15)


def test_filter_valid_matches_loop(rng):
    plane = rng.random((17, 14))
    np.testing.assert_allclose(filter_valid(plane, 11, 1.5),
                               oracles.weighted_local_mean(plane.tolist(), 11, 1.5), rtol=1e-12)


def test_spatial_weight_too_small():
    with pytest.raises(ValueError):
        spatial_weight(GradientField(Direction.DIAG_DOWN_RIGHT, np.zeros((10, 20))), P)


def test_weighted_fields_match_oracle(rng):
    hue = rng.integers(0, 256, (20, 18))
    chroma = rng.uniform(0, 15, (20, 18))
    got = weighted_fields(img(hue, chroma), P)
    ref = oracles.hue_fields(hue.tolist(), chroma.tolist())
    for g, r in zip(got, ref):
        assert g.values.shape == (9, 7)
        np.testing.assert_allclose(g.values, r, rtol=1e-12, atol=1e-15)


def test_weighted_fields_need_window_plus_one():
    with pytest.raises(ImageTooSmallError):
        weighted_fields(img(np.zeros((11, 30), int), 10.0), P)
    assert weighted_fields(img(np.zeros((12, 12), int), 10.0), P)[0].values.shape == (1, 1)


def test_logistic_constants_from_mpmath():
    assert 1 / (1 + math.exp(5)) == pytest.approx(GATE_AT_ZERO, rel=1e-14)
