import math

import numpy as np
import pytest

from shsm.baselines import Channel, PEAK, mse, psnr, psnr_from_mse
from shsm.errors import DimensionMismatchError


def test_mse_zero(rng):
    x = rng.random((5, 5))
    assert mse(x, x, Channel.CHROMA) == 0


def test_hue_mse_is_naive():
    x = np.array([[0, 0]], np.uint8)
    y = np.array([[255, 255]], np.uint8)
    assert mse(x, y, Channel.HUE) == 65025
    assert mse(x, y, Channel.HUE, circular=True) == 1


def test_constant_offset():
    assert mse(np.full((3, 4), 10.0), np.full((3, 4), 13.0), Channel.L) == 9


def test_circular_only_for_hue():
    with pytest.raises(ValueError):
        mse(np.zeros((2, 2)), np.ones((2, 2)), Channel.CHROMA, circular=True)


def test_mismatch():
    with pytest.raises(DimensionMismatchError):
        mse(np.zeros((2, 2)), np.zeros((2, 3)), Channel.L)


def test_peaks():
    assert PEAK == {Channel.HUE: 255.0, Channel.CHROMA: 181.02, Channel.L: 100.0}


@pytest.mark.parametrize("channel", list(Channel))
def test_psnr_zero_db_at_peak_mse(channel):
    assert psnr_from_mse(PEAK[channel] ** 2, PEAK[channel]) == pytest.approx(0.0, abs=1e-12)


def test_psnr_identical_is_inf():
    x = np.ones((4, 4), np.uint8)
    assert psnr(x, x, Channel.HUE) == math.inf


def test_psnr_reference_pair():
    assert psnr_from_mse(1660, 255) == pytest.approx(15.93, abs=0.01)


def test_psnr_strictly_decreasing():
    vals = [psnr_from_mse(e, 255) for e in np.linspace(0.1, 65025, 200)]
    assert all(b < a for a, b in zip(vals, vals[1:]))


def test_uint8_planes_do_not_wrap():
    x = np.array([[10]], np.uint8)
    y = np.array([[250]], np.uint8)
    assert mse(x, y, "hue_u8") == 240**2
