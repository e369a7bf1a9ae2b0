import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from photon_bec.cavity import BoxCavity
from photon_bec.errors import DomainError
from photon_bec.profile import (ProfileRequest, half_width, half_width_closed_form, profile_samples,
                                profile_value)

UNIT = BoxCavity(1.0, 1.0, 1.0)
BOX = BoxCavity(1.0, 0.6, 2.5)


@pytest.mark.parametrize("n1", [1, 5, 100, 5000])
def test_centre_is_one(n1):
    assert profile_value(BOX, n1, (0.0, 0.0, 0.0)) == 1.0


@pytest.mark.parametrize("x", [(0.5, 0.0, 0.0), (0.1, -0.3, 0.0), (0.0, 0.0, 1.25)])
def test_walls_are_zero(x):
    assert profile_value(BOX, 5, x) == 0.0


def test_closed_form_point():
    assert profile_value(UNIT, 5, (0.25, 0.0, 0.0)) == pytest.approx(2 ** -2.5, rel=1e-14)
    assert round(profile_value(UNIT, 5, (0.25, 0.0, 0.0)), 6) == 0.176777


def test_two_coordinates_mean_midplane():
    assert profile_value(BOX, 3, (0.2, 0.1)) == profile_value(BOX, 3, (0.2, 0.1, 0.0))


def test_outside_box():
    with pytest.raises(DomainError):
        profile_value(UNIT, 5, (0.51, 0.0, 0.0))
    with pytest.raises(DomainError):
        profile_value(UNIT, 0, (0.0, 0.0, 0.0))


def test_large_occupation_underflows_to_zero():
    assert profile_value(UNIT, 5000, (0.3, 0.0, 0.0)) == 0.0


def test_samples():
    x, f = profile_samples(ProfileRequest(UNIT, 5, axis=1, n_points=512))
    assert x.size == f.size == 512
    assert x[0] == -0.5 and x[-1] == 0.5
    assert f[0] == 0.0 and f[-1] == 0.0
    np.testing.assert_array_equal(f, f[::-1])
    assert np.all((f >= 0) & (f <= 1))


def test_samples_match_pointwise():
    x, f = profile_samples(ProfileRequest(BOX, 7, axis=2, n_points=33))
    for xi, fi in zip(x, f):
        assert fi == pytest.approx(profile_value(BOX, 7, (0.0, xi, 0.0)), rel=1e-12, abs=1e-300)


def test_sharpening_with_occupation():
    curves = [profile_samples(ProfileRequest(UNIT, n, n_points=512))[1] for n in (5, 100, 5000)]
    interior = slice(1, -1)
    assert np.all(curves[0][interior] > curves[1][interior])
    assert np.all(curves[1][interior] > curves[2][interior])


def test_request_validation():
    with pytest.raises(DomainError):
        ProfileRequest(UNIT, 5, axis=4)
    with pytest.raises(DomainError):
        ProfileRequest(UNIT, 5, n_points=1)


@given(st.floats(-0.5, 0.5), st.floats(-0.3, 0.3), st.floats(-1.25, 1.25), st.integers(1, 200))
def test_separable(x1, x2, x3, n1):
    whole = profile_value(BOX, n1, (x1, x2, x3))
    parts = profile_value(BOX, n1, (x1, 0, 0)) * profile_value(BOX, n1, (0, x2, 0)) * profile_value(BOX, n1, (0, 0, x3))
    assert whole == pytest.approx(parts, rel=1e-12, abs=1e-300)
    assert 0.0 <= whole <= 1.0


@given(st.floats(1e-3, 0.49), st.integers(1, 2000))
def test_decreasing_in_occupation(x, n1):
    a = profile_value(UNIT, n1, (x, 0, 0))
    b = profile_value(UNIT, n1 + 1, (x, 0, 0))
    assert b < a or a == 0.0


def test_half_width_values():
    assert half_width(UNIT, 1) == pytest.approx(1 / 3, rel=1e-12)
    w = half_width(UNIT, 100)
    assert w == pytest.approx(half_width_closed_form(UNIT, 100), rel=1e-12)
    assert w == pytest.approx(0.03748, abs=1e-4)
    assert w == pytest.approx(math.sqrt(2 * math.log(2) / 100) / math.pi, rel=2e-3)


def test_half_width_other_axis():
    assert half_width(BOX, 50, axis=3) == pytest.approx(2.5 * half_width(UNIT, 50), rel=1e-12)


def test_half_width_scaling():
    ratio = half_width(UNIT, 4000) / half_width(UNIT, 1000)
    assert 0.49 <= ratio <= 0.51
