"""Peak and sum-of-squares distances of a schedule to the flat and preferred extremes."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .model import Instance, Schedule
from .scheduling import gc_schedule, uc_schedule


@dataclass(frozen=True)
class ScheduleComparison:
    """Metric bundle for one schedule.

    Attributes:
        peak: Maximum per-slot load (kWh).
        gamma: Squared distance to the flat benchmark (kWh^2).
        zeta: Squared distance to the preferred-start schedule (kWh^2).
    """

    peak: float
    gamma: float
    zeta: float


def _load(x: Schedule | Sequence[float]) -> np.ndarray:
    return np.asarray(x.load if isinstance(x, Schedule) else x, dtype=float)


def mse(a: Schedule | Sequence[float], b: Schedule | Sequence[float]) -> float:
    """Sum over slots of the squared load difference.

    This is an unnormalised sum, not divided by the horizon.

    Raises:
        ValueError: if the horizons differ.
    """
    la, lb = _load(a), _load(b)
    if la.shape != lb.shape:
        raise ValueError(f"horizon mismatch: {la.size} vs {lb.size}")
    return float(np.sum((la - lb) ** 2))


def compare(schedule: Schedule, instance: Instance) -> ScheduleComparison:
    if schedule.horizon != instance.horizon:
        raise ValueError(f"horizon mismatch: schedule {schedule.horizon} vs instance {instance.horizon}")
    return ScheduleComparison(
        peak=schedule.peak,
        gamma=mse(schedule, gc_schedule(instance)),
        zeta=mse(schedule, uc_schedule(instance)),
    )


def relative_levels(values: Sequence[float]) -> list[float]:
    """Express each value as a percentage of the largest one."""
    if len(values) == 0:
        raise ValueError("relative_levels needs at least one value")
    top = max(values)
    if top <= 0:
        raise ValueError("relative_levels is undefined when every value is zero")
    return [100.0 * v / top for v in values]
