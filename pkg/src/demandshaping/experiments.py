"""Random instance generation and the device-count / deviation sweeps.

Each trial draws a fresh instance from a seed derived from the master seed
with ``numpy.random.SeedSequence(master, spawn_key=(trial,))``. Every
swept setting within a trial reuses that same instance and only changes
which tasks are flexible and by how much.
"""

from __future__ import annotations

import csv
import io
import math
from collections import defaultdict
from concurrent.futures import Executor
from dataclasses import dataclass, field, replace
from typing import Sequence

import numpy as np

from .metrics import ScheduleComparison, compare
from .model import FlexTask, Instance, Schedule, ValidationError
from .oracle import oracle_schedule
from .scheduling import gc_schedule, greedy_schedule, optimal_schedule, uc_schedule

CSV_HEADER = ("param", "value", "trial", "algorithm", "peak", "gamma", "zeta")


def run_algorithm(
    name: str, instance: Instance, *, override_guard: bool = False, pool: Executor | None = None
) -> Schedule:
    """Dispatch by lowercase algorithm name (gc, uc, optimal, greedy, oracle)."""
    name = name.lower()
    if name == "gc":
        return gc_schedule(instance)
    if name == "uc":
        return uc_schedule(instance)
    if name == "greedy":
        return greedy_schedule(instance)
    if name == "optimal":
        return optimal_schedule(instance, override_guard=override_guard, pool=pool)
    if name == "oracle":
        return oracle_schedule(instance, override_guard=override_guard, pool=pool)
    raise ValueError(f"unknown algorithm {name!r}")


ALGORITHMS = ("gc", "uc", "optimal", "greedy", "oracle")


@dataclass(frozen=True)
class GenConfig:
    """Parameters of the random instance generator.

    Ranges are inclusive integer intervals. ``deviation`` is the tolerance
    given to every generated task; ``None`` means the full horizon, so
    tasks are fully flexible.
    """

    horizon: int = 24
    n_tasks: int = 100
    essential_range: tuple[int, int] = (1, 5)
    energy_range: tuple[int, int] = (1, 5)
    duration_range: tuple[int, int] = (1, 5)
    seed: int = 0
    deviation: int | None = None

    def __post_init__(self):
        problems = []
        if self.horizon < 1:
            problems.append(f"horizon must be >= 1 (got {self.horizon})")
        if self.n_tasks < 0:
            problems.append(f"n_tasks must be >= 0 (got {self.n_tasks})")
        for name in ("essential_range", "energy_range", "duration_range"):
            lo, hi = getattr(self, name)
            if not 0 < lo <= hi:
                problems.append(f"{name} must satisfy 0 < lo <= hi (got [{lo}, {hi}])")
        if self.duration_range[1] > self.horizon:
            problems.append(
                f"duration upper bound {self.duration_range[1]} exceeds horizon {self.horizon}"
            )
        if self.deviation is not None and self.deviation < 0:
            problems.append(f"deviation must be >= 0 (got {self.deviation})")
        if problems:
            raise ValidationError(problems)


def generate(config: GenConfig) -> Instance:
    """Draw an instance with discrete-uniform essential loads, energies, durations and starts."""
    rng = np.random.default_rng(config.seed)
    T = config.horizon
    essential = rng.integers(config.essential_range[0], config.essential_range[1], endpoint=True, size=T)
    deviation = T if config.deviation is None else config.deviation
    tasks = []
    for i in range(1, config.n_tasks + 1):
        energy = int(rng.integers(config.energy_range[0], config.energy_range[1], endpoint=True))
        duration = int(rng.integers(config.duration_range[0], config.duration_range[1], endpoint=True))
        start = int(rng.integers(1, T - duration + 1, endpoint=True))
        tasks.append(FlexTask(i, float(energy), duration, start, deviation, True))
    return Instance(horizon=T, essential=tuple(float(e) for e in essential), tasks=tuple(tasks))


def trial_seed(master: int, trial: int) -> int:
    return int(np.random.SeedSequence(master, spawn_key=(trial,)).generate_state(1, np.uint64)[0])


def with_flexible(instance: Instance, count: int, deviation: int) -> Instance:
    """First ``count`` tasks by id become flexible with ``deviation``; the rest are pinned."""
    if count > len(instance.tasks):
        raise ValueError(f"cannot make {count} tasks flexible; instance has {len(instance.tasks)}")
    chosen = {t.id for t in sorted(instance.tasks, key=lambda t: t.id)[:count]}
    return instance.with_tasks(
        replace(t, is_flexible=t.id in chosen, deviation=deviation if t.id in chosen else 0)
        for t in instance.tasks
    )


def _sig6(x: float) -> float:
    return float(f"{x:.6g}")


@dataclass(frozen=True)
class SweepRow:
    """One (setting, trial) measurement. Metrics are held at 6 significant digits."""

    param: str
    value: int
    trial: int
    algorithm: str
    peak: float
    gamma: float
    zeta: float

    def __post_init__(self):
        for name in ("peak", "gamma", "zeta"):
            object.__setattr__(self, name, _sig6(getattr(self, name)))


@dataclass(frozen=True)
class SweepResult:
    """Rows of a sweep, ordered by (param, value, trial) in sweep order."""

    param: str
    values: tuple[int, ...]
    rows: tuple[SweepRow, ...] = field(default_factory=tuple)

    def aggregate(self) -> dict[tuple[str, int], ScheduleComparison]:
        """Mean metrics per (param, value) over trials."""
        groups = defaultdict(list)
        for row in self.rows:
            groups[(row.param, row.value)].append(row)
        return {
            key: ScheduleComparison(
                peak=math.fsum(r.peak for r in rs) / len(rs),
                gamma=math.fsum(r.gamma for r in rs) / len(rs),
                zeta=math.fsum(r.zeta for r in rs) / len(rs),
            )
            for key, rs in groups.items()
        }

    def series(self, metric: str, param: str | None = None) -> list[float]:
        """Mean of ``metric`` per swept value, in the order of ``values``."""
        param = param or self.param
        agg = self.aggregate()
        return [getattr(agg[(param, v)], metric) for v in self.values]

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\r\n")
        writer.writerow(CSV_HEADER)
        for r in self.rows:
            writer.writerow(
                [r.param, r.value, r.trial, r.algorithm, f"{r.peak:.6g}", f"{r.gamma:.6g}", f"{r.zeta:.6g}"]
            )
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "SweepResult":
        reader = csv.reader(io.StringIO(text))
        header = next(reader, None)
        if header is None or tuple(header) != CSV_HEADER:
            raise ValidationError([f"unexpected sweep CSV header {header!r}"])
        rows = [
            SweepRow(p, int(v), int(tr), alg, float(pk), float(g), float(z))
            for p, v, tr, alg, pk, g, z in reader
        ]
        values = tuple(dict.fromkeys(r.value for r in rows))
        base = rows[0].param.split(":")[0] if rows else ""
        return cls(param=base, values=values, rows=tuple(rows))


def _trial_rows(config, algorithm, trial, settings, override_guard):
    """All rows of one trial. ``settings`` holds (param, value, flex count, deviation) tuples."""
    inst = generate(replace(config, seed=trial_seed(config.seed, trial)))
    out = []
    for param, value, count, dev in settings:
        variant = with_flexible(inst, count, dev)
        m = compare(run_algorithm(algorithm, variant, override_guard=override_guard), variant)
        out.append(SweepRow(param, value, trial, algorithm, m.peak, m.gamma, m.zeta))
    return out


def _run_sweep(config, algorithm, settings, n_trials, override_guard, pool):
    if pool is None:
        per_trial = [_trial_rows(config, algorithm, k, settings, override_guard) for k in range(n_trials)]
    else:
        futures = [
            pool.submit(_trial_rows, config, algorithm, k, settings, override_guard) for k in range(n_trials)
        ]
        per_trial = [f.result() for f in futures]
    # ordering: setting position, then trial
    return tuple(per_trial[k][j] for j in range(len(settings)) for k in range(n_trials))


def sweep_devices(
    config: GenConfig,
    algorithm: str,
    counts: Sequence[int],
    n_trials: int,
    *,
    override_guard: bool = False,
    pool: Executor | None = None,
) -> SweepResult:
    """Vary how many tasks are fully flexible; the rest sit at their preferred start."""
    for y in counts:
        if not 0 <= y <= config.n_tasks:
            raise ValueError(f"device count {y} outside [0, {config.n_tasks}]")
    settings = [("devices", y, y, config.horizon) for y in counts]
    rows = _run_sweep(config, algorithm, settings, n_trials, override_guard, pool)
    return SweepResult(param="devices", values=tuple(counts), rows=rows)


def sweep_deviation(
    config: GenConfig,
    algorithm: str,
    x_values: Sequence[int],
    flex_counts: Sequence[int],
    n_trials: int,
    *,
    override_guard: bool = False,
    pool: Executor | None = None,
) -> SweepResult:
    """Vary the shared deviation tolerance for several flexible-device counts.

    Rows for flexible count ``c`` carry param ``"deviation:flex=c"``.
    """
    for c in flex_counts:
        if not 0 <= c <= config.n_tasks:
            raise ValueError(f"flexible count {c} outside [0, {config.n_tasks}]")
    for x in x_values:
        if x < 0:
            raise ValueError(f"deviation {x} must be >= 0")
    settings = [(deviation_param(c), x, c, x) for c in flex_counts for x in x_values]
    rows = _run_sweep(config, algorithm, settings, n_trials, override_guard, pool)
    return SweepResult(param="deviation", values=tuple(x_values), rows=rows)


def deviation_param(count: int) -> str:
    return f"deviation:flex={count}"
