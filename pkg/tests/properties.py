"""Hypothesis property checks shared by the unit suite and the acceptance run.

Each entry in PROPERTIES pairs a strategy tuple with a plain check function,
so callers can choose the example budget and count executions.
"""
import numpy as np
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from shsm.color import LhcImage, rotate_hue
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
)
from shsm.metric import shsm_map

P = ShsmParams()
SMALL = ShsmParams(window=3, sigma=0.8)
hue = st.integers(0, 255)
# strictness is only observable where float64 can resolve the output gap:
# below UNSATURATED above the midpoint and for inputs at least MIN_GAP apart
UNSATURATED = 15.0
MIN_GAP = 1e-6


@st.composite
def lhc_images(draw, max_side=12, min_side=4):
    h = draw(st.integers(min_side, max_side))
    w = draw(st.integers(min_side, max_side))
    hues = draw(hnp.arrays(np.uint8, (h, w)))
    chroma = draw(hnp.arrays(float, (h, w), elements=st.floats(0, 150, allow_nan=False)))
    L = draw(hnp.arrays(float, (h, w), elements=st.floats(0, 100)))
    return LhcImage(L, hues, chroma)


unit_fields = hnp.arrays(
    float,
    st.tuples(st.integers(3, 9), st.integers(3, 9)),
    elements=st.floats(0, 1, allow_nan=False, allow_subnormal=False),
)


def check_angle_diff(h1, h2, h3, delta):
    d = angle_diff(h1, h2)
    assert d == angle_diff(h2, h1)
    assert 0 <= d <= 128
    assert angle_diff(h1, h3) <= d + angle_diff(h2, h3)
    assert angle_diff((h1 + delta) % 256, (h2 + delta) % 256) == d


def check_gate_monotone(c1, c2, c0):
    lo, hi = sorted((c1, c2))
    params = ShsmParams(c0=c0)
    g_lo, g_hi = chroma_gate(lo, params), chroma_gate(hi, params)
    assert 0 <= g_lo <= g_hi <= 1
    if hi - lo >= MIN_GAP and hi - c0 <= UNSATURATED:
        assert g_lo < g_hi
    # a larger threshold never lets more gradient through
    assert chroma_gate(hi, ShsmParams(c0=c0 + 1.0)) <= g_hi


def check_normalize(v1, v2):
    lo, hi = sorted((v1, v2))
    f = GradientField(Direction.DIAG_DOWN_RIGHT, np.array([[lo, hi]]))
    n = normalize_gradients(f, P).values[0]
    assert np.all(np.isfinite(n))
    assert 0 < n[0] <= n[1] <= 1
    if hi - P.h0 <= UNSATURATED:
        assert n[1] < 1
        if hi - lo >= MIN_GAP:
            assert n[0] < n[1]


def check_spatial_weight(values):
    f = GradientField(Direction.DIAG_DOWN_LEFT, values, Stage.NORMALIZED)
    out = spatial_weight(f, SMALL).values
    assert out.shape == (values.shape[0] - 2, values.shape[1] - 2)
    assert np.all(np.isfinite(out))
    win = np.lib.stride_tricks.sliding_window_view(values, (3, 3))
    tol = 1e-12
    assert np.all(out >= win.min(axis=(-1, -2)) - tol)
    assert np.all(out <= win.max(axis=(-1, -2)) + tol)
    const = GradientField(f.direction, np.full_like(values, values.flat[0]), Stage.NORMALIZED)
    np.testing.assert_allclose(spatial_weight(const, SMALL).values, values.flat[0], rtol=1e-12, atol=1e-15)


def check_shsm_map(data):
    a = data.draw(unit_fields)
    b = data.draw(hnp.arrays(float, a.shape, elements=st.floats(0, 1, allow_nan=False, allow_subnormal=False)))
    fa = GradientField(Direction.DIAG_DOWN_RIGHT, a, Stage.WEIGHTED)
    fb = GradientField(Direction.DIAG_DOWN_RIGHT, b, Stage.WEIGHTED)
    m = shsm_map(fa, fb, P).values
    assert np.all(np.isfinite(m))
    assert np.all((m > 0) & (m <= 1))
    assert np.array_equal(m, shsm_map(fb, fa, P).values)
    assert np.all(shsm_map(fa, fa, P).values == 1.0)


PROPERTIES = {
    "angle_diff shift invariance": ((hue, hue, hue, hue), check_angle_diff),
    "gate monotonicity": (
        (st.floats(0, 200), st.floats(0, 200), st.floats(0.5, 20)),
        check_gate_monotone,
    ),
    "normalize range": ((st.floats(0, 128), st.floats(0, 128)), check_normalize),
    "spatial_weight window bounds": ((unit_fields,), check_spatial_weight),
    "shsm_map range": ((st.data(),), check_shsm_map),
}


def build(name, max_examples, counter=None):
    """Wrap one property as a hypothesis test with the given example budget."""
    strategies, check = PROPERTIES[name]

    def run(args):
        if counter is not None:
            counter[name] = counter.get(name, 0) + 1
        check(*args)

    return settings(
        max_examples=max_examples,
        deadline=None,
        database=None,
        derandomize=True,
        suppress_health_check=[HealthCheck.too_slow],
    )(given(st.tuples(*strategies))(run))
