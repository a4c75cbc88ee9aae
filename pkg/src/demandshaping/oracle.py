"""Exhaustive minimum-peak search over every feasible combination of start slots.

Used as ground truth for the heuristics. Start vectors are ordered by task
id and visited lexicographically; the first vector reaching the minimum
peak is returned.
"""

from __future__ import annotations

import math
from concurrent.futures import Executor

from .model import CapacityError, Instance, Schedule, add_profile, fold_inflexible, reconstruct_load, window
from .scheduling import peak_key

MAX_COMBINATIONS = 10**7


def combination_count(instance: Instance) -> int:
    _, flex = fold_inflexible(instance)
    return math.prod(len(window(task, instance.horizon)) for task in flex)


def _search(load, tasks, wins, depth, starts, best):
    """``best`` is ``[key, starts, load]``, updated in place on strict improvement."""
    if depth == len(tasks):
        k = peak_key(max(load))
        if k < best[0]:
            best[:] = [k, tuple(starts), list(load)]
        return
    task = tasks[depth]
    p, d = task.power, task.duration
    floor = peak_key(max(load))
    for t in wins[depth]:
        if peak_key(max(load[t - 1 : t - 1 + d]) + p) >= best[0]:
            continue
        for s in range(t - 1, t - 1 + d):
            load[s] += p
        starts.append(t)
        _search(load, tasks, wins, depth + 1, starts, best)
        starts.pop()
        for s in range(t - 1, t - 1 + d):
            load[s] -= p
        if best[0] <= floor:
            return


def _first_slot_branch(base, tasks, wins, t):
    best = [float("inf"), None, None]
    load = list(base)
    add_profile(load, tasks[0].power, t, tasks[0].duration)
    _search(load, tasks, wins, 1, [t], best)
    return best


def oracle_schedule(
    instance: Instance,
    *,
    override_guard: bool = False,
    pool: Executor | None = None,
) -> Schedule:
    """Exact minimum-peak schedule by enumeration with bound pruning.

    Args:
        instance: Problem instance.
        override_guard: Allow more than ``MAX_COMBINATIONS`` start vectors.
        pool: Optional executor; the first task's window is split across it.

    Raises:
        CapacityError: the search space exceeds the guard and no override.
    """
    base, flex = fold_inflexible(instance)
    if not flex:
        return Schedule(load=base, starts={}, label="ORACLE")
    count = combination_count(instance)
    if count > MAX_COMBINATIONS and not override_guard:
        raise CapacityError(
            f"oracle_schedule: {count} start combinations exceeds the bound of "
            f"{MAX_COMBINATIONS} (pass override_guard to force)"
        )
    tasks = sorted(flex, key=lambda task: task.id)
    wins = [range(w.lo, w.hi + 1) for w in (window(task, instance.horizon) for task in tasks)]

    if pool is None:
        best = [float("inf"), None, None]
        _search(list(base), tasks, wins, 0, [], best)
    else:
        futures = [pool.submit(_first_slot_branch, base, tasks, wins, t) for t in wins[0]]
        best = [float("inf"), None, None]
        for fut in futures:
            sub = fut.result()
            if sub[0] < best[0]:
                best = sub
    # rebuild from scratch; the search adds and subtracts in place
    starts = {task.id: t for task, t in zip(tasks, best[1])}
    return Schedule(load=reconstruct_load(instance, starts), starts=starts, label="ORACLE")
