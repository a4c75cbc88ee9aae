"""Extreme schedules and the two placement algorithms for minimum-peak scheduling."""

from __future__ import annotations

from concurrent.futures import Executor
from typing import Iterable, Sequence

from .model import (
    CapacityError,
    FlexTask,
    Instance,
    Schedule,
    Window,
    add_profile,
    fold_inflexible,
    reconstruct_load,
    window,
)

MAX_PERMUTATION_TASKS = 10


def peak_key(x: float) -> float:
    """Comparison key for peaks; collapses float noise below the 1e-9 kWh tolerance."""
    return round(x, 9)


def gc_schedule(instance: Instance) -> Schedule:
    flat = instance.total_energy / instance.horizon
    return Schedule(load=(flat,) * instance.horizon, starts={}, label="GC")


def uc_schedule(instance: Instance) -> Schedule:
    load = list(instance.essential)
    starts = {}
    for task in instance.tasks:
        add_profile(load, task.power, task.preferred_start, task.duration)
        starts[task.id] = task.preferred_start
    return Schedule(load=load, starts=starts, label="UC")


def best_start(load: Sequence[float], power: float, duration: int, win: Window) -> tuple[int, float]:
    """Start in ``win`` minimising the peak over the occupied slots if ``power`` is added.

    Ties go to the earliest start.

    Returns:
        (start, peak over the occupied slots after placement)
    """
    best_t, best_peak, best_k = win.lo, float("inf"), float("inf")
    for t in range(win.lo, win.hi + 1):
        peak = max(load[t - 1 : t - 1 + duration]) + power
        k = peak_key(peak)
        if k < best_k:
            best_t, best_peak, best_k = t, peak, k
    return best_t, best_peak


def place_task(
    load: Sequence[float], task: FlexTask, win: Window, power: float | None = None
) -> tuple[int, list[float]]:
    """Place ``task`` at its min-peak start within ``win``.

    Args:
        load: Current per-slot load; not modified.
        task: Task to place.
        win: Allowed start interval.
        power: Per-slot power to place with; defaults to the task's own.

    Returns:
        The chosen start and the updated load.
    """
    p = task.power if power is None else power
    t, _ = best_start(load, p, task.duration, win)
    out = list(load)
    add_profile(out, p, t, task.duration)
    return t, out


def place_in_order(
    base: Sequence[float], tasks: Iterable[FlexTask], horizon: int
) -> tuple[list[float], dict[int, int]]:
    """Sequentially place ``tasks`` starting from ``base``, each at its best start."""
    load = list(base)
    starts = {}
    for task in tasks:
        t, _ = best_start(load, task.power, task.duration, window(task, horizon))
        add_profile(load, task.power, t, task.duration)
        starts[task.id] = t
    return load, starts


# Permutation search. Permutations are visited in lexicographic order of task
# ids; subtrees sharing a prefix share its placements. A prefix whose peak
# already reaches the best complete peak is cut, since loads only grow.


def _permutation_search(load, remaining, windows, prefix, starts, best):
    """Depth-first search; ``best`` is ``[key, order, starts, load]`` and is updated in place."""
    if not remaining:
        k = peak_key(max(load))
        if k < best[0]:
            best[:] = [k, tuple(prefix), dict(starts), load]
        return
    for i, task in enumerate(remaining):
        w = windows[task.id]
        t, _ = best_start(load, task.power, task.duration, w)
        child = list(load)
        add_profile(child, task.power, t, task.duration)
        if peak_key(max(child)) >= best[0]:
            continue
        prefix.append(task.id)
        starts[task.id] = t
        _permutation_search(child, remaining[:i] + remaining[i + 1 :], windows, prefix, starts, best)
        prefix.pop()
        del starts[task.id]
        if best[0] <= peak_key(max(load)):
            # nothing below this node can beat the current best
            return


def _subtree(base, tasks, windows, first):
    """Best permutation among those starting with ``tasks[first]``."""
    best = [float("inf"), None, None, None]
    rest = tasks[:first] + tasks[first + 1 :]
    head = tasks[first]
    t, _ = best_start(base, head.power, head.duration, windows[head.id])
    load = list(base)
    add_profile(load, head.power, t, head.duration)
    _permutation_search(load, rest, windows, [head.id], {head.id: t}, best)
    return best


def _final(instance, starts):
    # canonical summation order, so equal placements give bit-equal loads
    return Schedule(load=reconstruct_load(instance, starts), starts=starts, label="OPTIMAL")


def optimal_schedule(
    instance: Instance,
    *,
    orders: Sequence[Sequence[int]] | None = None,
    override_guard: bool = False,
    pool: Executor | None = None,
) -> Schedule:
    """Best sequential placement over all orderings of the flexible tasks.

    Inflexible tasks are folded into the essential load first. Every
    permutation of the flexible tasks is placed task-by-task with
    ``best_start``; the permutation with the lowest final peak wins,
    ties going to the lexicographically smallest sequence of task ids.

    Args:
        instance: Problem instance.
        orders: Restrict the search to these orderings (sequences of task
            ids). Each must be a permutation of the flexible task ids.
        override_guard: Allow more than ``MAX_PERMUTATION_TASKS`` flexible tasks.
        pool: Optional executor; top-level branches are evaluated on it.
            The result is identical to the sequential search.

    Raises:
        CapacityError: too many flexible tasks and no override.
        ValueError: an entry of ``orders`` is not a permutation of the flexible ids.
    """
    base, flex = fold_inflexible(instance)
    if not flex:
        return Schedule(load=base, starts={}, label="OPTIMAL")
    windows = {task.id: window(task, instance.horizon) for task in flex}

    if orders is not None:
        by_id = {task.id: task for task in flex}
        best = None
        for order in sorted(tuple(o) for o in orders):
            if sorted(order) != sorted(by_id):
                raise ValueError(f"order {order} is not a permutation of flexible ids {sorted(by_id)}")
            load, starts = place_in_order(base, (by_id[i] for i in order), instance.horizon)
            k = peak_key(max(load))
            if best is None or k < best[0]:
                best = (k, order, starts, load)
        return _final(instance, best[2])

    if len(flex) > MAX_PERMUTATION_TASKS and not override_guard:
        raise CapacityError(
            f"optimal_schedule: {len(flex)} flexible tasks exceeds the enumeration bound of "
            f"{MAX_PERMUTATION_TASKS} (pass override_guard to force)"
        )

    tasks = tuple(sorted(flex, key=lambda task: task.id))
    if pool is None:
        best = [float("inf"), None, None, None]
        _permutation_search(base, tasks, windows, [], {}, best)
    else:
        futures = [pool.submit(_subtree, base, tasks, windows, i) for i in range(len(tasks))]
        best = [float("inf"), None, None, None]
        for fut in futures:
            sub = fut.result()
            if sub[0] < best[0]:
                best = sub
    return _final(instance, best[2])


def greedy_schedule(instance: Instance) -> Schedule:
    """Single-pass placement assuming every flexible task draws the maximum power.

    Tasks are placed in input order with per-slot power equal to the
    largest ``energy / duration`` among flexible tasks. Afterwards each
    task's occupied slots are reduced by the over-provisioned amount,
    restoring its real energy.
    """
    base, flex = fold_inflexible(instance)
    if not flex:
        return Schedule(load=base, starts={}, label="GREEDY")
    s_hat = max(task.power for task in flex)
    load = list(base)
    starts = {}
    for task in flex:
        t, _ = best_start(load, s_hat, task.duration, window(task, instance.horizon))
        add_profile(load, s_hat, t, task.duration)
        starts[task.id] = t
    # Restore: subtracting (s_hat - power) from each occupied slot equals
    # re-adding every task at its real power. Rebuilding avoids float residue
    # from add-then-subtract; a slot never goes negative because it already
    # holds s_hat for each task covering it.
    return Schedule(load=reconstruct_load(instance, starts), starts=starts, label="GREEDY")
