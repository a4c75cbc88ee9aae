"""Problem data model: flexible tasks, instances, schedules and windows.

Slots are 1-indexed throughout. Loads are kWh per slot.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, replace
from typing import Any, Iterable, Mapping, Sequence

TOL = 1e-9

LABELS = ("GC", "UC", "OPTIMAL", "GREEDY", "ORACLE")


class ValidationError(ValueError):
    """Raised when an instance or schedule violates its invariants.

    ``problems`` holds one message per violated invariant.
    """

    def __init__(self, problems: Sequence[str]):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


class CapacityError(RuntimeError):
    """Raised when an exhaustive search exceeds its enumeration guard."""


@dataclass(frozen=True)
class FlexTask:
    """One shiftable appliance task.

    Attributes:
        id: Unique task identifier.
        energy: Total energy in kWh.
        duration: Number of contiguous slots the task runs for.
        preferred_start: The user's preferred start slot.
        deviation: Slots the task may shift left or right of its preferred start.
        is_flexible: If False the task is pinned at ``preferred_start``.
    """

    id: int
    energy: float
    duration: int
    preferred_start: int
    deviation: int = 0
    is_flexible: bool = True

    @property
    def power(self) -> float:
        return self.energy / self.duration

    def last_start(self, horizon: int) -> int:
        return horizon - self.duration + 1

    def problems(self, horizon: int) -> list[str]:
        out = []
        tag = f"task {self.id}"
        if not (isinstance(self.energy, (int, float)) and math.isfinite(self.energy)) or self.energy <= 0:
            out.append(f"{tag}: energy must be finite and > 0 (got {self.energy!r})")
        if not 1 <= self.duration <= horizon:
            out.append(f"{tag}: duration must lie in [1, {horizon}] (got {self.duration})")
        elif not 1 <= self.preferred_start <= self.last_start(horizon):
            out.append(
                f"{tag}: preferred_start must lie in [1, {self.last_start(horizon)}] "
                f"(got {self.preferred_start})"
            )
        if self.deviation < 0:
            out.append(f"{tag}: deviation must be >= 0 (got {self.deviation})")
        return out


@dataclass(frozen=True)
class Window:
    """Feasible start interval ``[lo, hi]`` (inclusive)."""

    lo: int
    hi: int

    def __iter__(self):
        return iter(range(self.lo, self.hi + 1))

    def __len__(self) -> int:
        return self.hi - self.lo + 1


@dataclass(frozen=True)
class Instance:
    """Horizon, essential load per slot, and the ordered list of tasks.

    Construction validates every invariant and raises ``ValidationError``
    listing all violations at once.
    """

    horizon: int
    essential: tuple[float, ...]
    tasks: tuple[FlexTask, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "essential", tuple(float(e) for e in self.essential))
        object.__setattr__(self, "tasks", tuple(self.tasks))
        problems = []
        if self.horizon < 1:
            problems.append(f"horizon must be a positive integer (got {self.horizon})")
        if len(self.essential) != self.horizon:
            problems.append(
                f"essential must have exactly {self.horizon} entries (got {len(self.essential)})"
            )
        for t, e in enumerate(self.essential, start=1):
            if not math.isfinite(e) or e < 0:
                problems.append(f"essential[{t}] must be finite and >= 0 (got {e})")
        seen = set()
        for task in self.tasks:
            if task.id in seen:
                problems.append(f"duplicate task id {task.id}")
            seen.add(task.id)
            problems.extend(task.problems(self.horizon))
        if problems:
            raise ValidationError(problems)

    @property
    def total_energy(self) -> float:
        return sum(self.essential) + sum(task.energy for task in self.tasks)

    def with_tasks(self, tasks: Iterable[FlexTask]) -> "Instance":
        return replace(self, tasks=tuple(tasks))

    def to_dict(self) -> dict[str, Any]:
        return {
            "horizon": self.horizon,
            "essential": list(self.essential),
            "tasks": [
                {
                    "id": t.id,
                    "energy": t.energy,
                    "duration": t.duration,
                    "preferred_start": t.preferred_start,
                    "deviation": t.deviation,
                    "is_flexible": t.is_flexible,
                }
                for t in self.tasks
            ],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "Instance":
        try:
            tasks = [
                FlexTask(
                    id=_as_int(t["id"], "id"),
                    energy=float(t["energy"]),
                    duration=_as_int(t["duration"], "duration"),
                    preferred_start=_as_int(t["preferred_start"], "preferred_start"),
                    deviation=_as_int(t.get("deviation", 0), "deviation"),
                    is_flexible=bool(t.get("is_flexible", True)),
                )
                for t in data.get("tasks", [])
            ]
            return cls(
                horizon=_as_int(data["horizon"], "horizon"),
                essential=tuple(float(e) for e in data["essential"]),
                tasks=tuple(tasks),
            )
        except (KeyError, TypeError) as exc:
            raise ValidationError([f"malformed instance JSON: {exc!r}"]) from exc

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Instance":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValidationError([f"invalid JSON: {exc}"]) from exc
        if not isinstance(data, dict):
            raise ValidationError(["instance JSON must be an object"])
        return cls.from_dict(data)


def _as_int(value: Any, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or int(value) != value:
        raise TypeError(f"{name} must be an integer (got {value!r})")
    return int(value)


@dataclass(frozen=True)
class Schedule:
    """Per-slot total load plus the start chosen for each task.

    ``starts`` is empty for the GC benchmark, which is not a placement.
    """

    load: tuple[float, ...]
    starts: Mapping[int, int] = field(default_factory=dict)
    label: str = "UC"

    def __post_init__(self):
        object.__setattr__(self, "load", tuple(float(x) for x in self.load))
        object.__setattr__(self, "starts", dict(sorted(self.starts.items())))
        if self.label not in LABELS:
            raise ValidationError([f"unknown schedule label {self.label!r}"])

    def __hash__(self):
        return hash((self.load, tuple(self.starts.items()), self.label))

    @property
    def horizon(self) -> int:
        return len(self.load)

    @property
    def peak(self) -> float:
        return max(self.load)

    def to_dict(self) -> dict[str, Any]:
        return {
            "label": self.label,
            "load": list(self.load),
            "starts": {str(k): v for k, v in self.starts.items()},
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "Schedule":
        try:
            return cls(
                load=tuple(float(x) for x in data["load"]),
                starts={int(k): int(v) for k, v in data.get("starts", {}).items()},
                label=data["label"],
            )
        except (KeyError, TypeError, AttributeError) as exc:
            raise ValidationError([f"malformed schedule JSON: {exc!r}"]) from exc


def per_slot_profile(task: FlexTask, start: int, horizon: int) -> list[float]:
    """Load vector of ``task`` running from ``start`` for ``task.duration`` slots.

    Raises:
        ValueError: if the task would not fit inside the horizon.
    """
    if not 1 <= start <= task.last_start(horizon):
        raise ValueError(
            f"task {task.id}: start {start} outside [1, {task.last_start(horizon)}]"
        )
    out = [0.0] * horizon
    p = task.power
    for t in range(start - 1, start - 1 + task.duration):
        out[t] = p
    return out


def window(task: FlexTask, horizon: int) -> Window:
    if not task.is_flexible:
        return Window(task.preferred_start, task.preferred_start)
    lo = max(1, task.preferred_start - task.deviation)
    hi = min(task.last_start(horizon), task.preferred_start + task.deviation)
    return Window(lo, hi)


def add_profile(load: list[float], power: float, start: int, duration: int) -> None:
    """In place: add ``power`` to slots ``start .. start+duration-1``."""
    for t in range(start - 1, start - 1 + duration):
        load[t] += power


def fold_inflexible(instance: Instance) -> tuple[list[float], list[FlexTask]]:
    """Add every inflexible task into the essential load at its preferred start.

    Returns:
        The effective essential load and the flexible tasks, in input order.
    """
    load = list(instance.essential)
    flexible = []
    for task in instance.tasks:
        if task.is_flexible:
            flexible.append(task)
        else:
            add_profile(load, task.power, task.preferred_start, task.duration)
    return load, flexible


def reconstruct_load(instance: Instance, starts: Mapping[int, int]) -> list[float]:
    """Rebuild the load implied by ``starts``; tasks missing from it sit at their preferred start."""
    load = list(instance.essential)
    for task in instance.tasks:
        add_profile(load, task.power, starts.get(task.id, task.preferred_start), task.duration)
    return load
