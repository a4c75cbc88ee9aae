import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from demandshaping.metrics import compare, mse, relative_levels
from demandshaping.model import Schedule
from demandshaping.scheduling import gc_schedule, optimal_schedule, uc_schedule

from conftest import instances

loads = st.lists(st.floats(0, 100, allow_nan=False), min_size=1, max_size=12)


@pytest.mark.parametrize(
    "a, b, expected",
    [((4, 3, 5), (4, 4, 4), 2.0), ((9, 3, 0), (4, 4, 4), 42.0), ((1.5, 2), (1.5, 2), 0.0)],
)
def test_mse(a, b, expected):
    assert mse(a, b) == expected


def test_mse_accepts_schedules():
    assert mse(Schedule((1.0, 2.0)), Schedule((0.0, 0.0), label="GC")) == 5.0


def test_mse_horizon_mismatch():
    with pytest.raises(ValueError, match="horizon"):
        mse((1, 2), (1, 2, 3))


@given(st.integers(1, 12).flatmap(lambda n: st.tuples(*[st.lists(st.floats(0, 100), min_size=n, max_size=n)] * 2)))
def test_mse_symmetric_nonnegative(pair):
    a, b = pair
    assert mse(a, b) == mse(b, a) >= 0
    assert mse(a, a) == 0


@given(loads, st.floats(0.1, 10))
def test_mse_scales_quadratically(a, c):
    b = [x + 1 for x in a]
    scaled = mse([c * x for x in a], [c * x for x in b])
    assert scaled == pytest.approx(c * c * mse(a, b), rel=1e-9)


def test_compare_two_task_example(two_task_instance):
    m = compare(optimal_schedule(two_task_instance), two_task_instance)
    assert (m.peak, m.gamma, m.zeta) == (5.0, 2.0, 50.0)


@given(instances())
@settings(max_examples=100, deadline=None)
def test_extremes_score_zero_on_their_own_axis(instance):
    assert compare(uc_schedule(instance), instance).zeta == 0
    assert compare(gc_schedule(instance), instance).gamma == pytest.approx(0, abs=1e-18)


@pytest.mark.parametrize(
    "values, expected",
    [([0, 250, 500], [0, 50, 100]), ([7], [100]), ([517, 1590], [517 / 15.9, 100])],
)
def test_relative_levels(values, expected):
    assert relative_levels(values) == pytest.approx(expected)


def test_relative_levels_sweep_illustration():
    assert relative_levels([517, 1590])[0] == pytest.approx(32.5, abs=0.1)


@pytest.mark.parametrize("values", [[], [0, 0], [0.0]])
def test_relative_levels_undefined(values):
    with pytest.raises(ValueError):
        relative_levels(values)
