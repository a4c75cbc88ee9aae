"""Peak-minimising placement of shiftable household tasks and trade-off sweeps."""

from .metrics import ScheduleComparison, compare, mse, relative_levels
from .model import (
    CapacityError,
    FlexTask,
    Instance,
    Schedule,
    ValidationError,
    Window,
    fold_inflexible,
    per_slot_profile,
    window,
)
from .oracle import oracle_schedule
from .scheduling import gc_schedule, greedy_schedule, optimal_schedule, place_task, uc_schedule

__all__ = [
    "CapacityError",
    "FlexTask",
    "Instance",
    "Schedule",
    "ScheduleComparison",
    "ValidationError",
    "Window",
    "compare",
    "fold_inflexible",
    "gc_schedule",
    "greedy_schedule",
    "mse",
    "optimal_schedule",
    "oracle_schedule",
    "per_slot_profile",
    "place_task",
    "relative_levels",
    "uc_schedule",
    "window",
]
