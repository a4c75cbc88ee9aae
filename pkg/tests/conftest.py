import numpy as np
import pytest
from hypothesis import strategies as st

from demandshaping.model import FlexTask, Instance

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def report():
    def _report(name, ok, detail=""):
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
        print(ACCEPTANCE_LINES[-1])
        return ok

    return _report


@pytest.fixture
def two_task_instance():
    """Three slots, essential {2,1,0}; tasks 5 kWh x 1 slot and 4 kWh x 2 slots, fully flexible."""
    return Instance(
        horizon=3,
        essential=(2, 1, 0),
        tasks=(FlexTask(1, 5.0, 1, 1, 3), FlexTask(2, 4.0, 2, 1, 3)),
    )


def random_instance(rng: np.random.Generator, max_horizon=12, max_tasks=5) -> Instance:
    """Small mixed instance: random deviations, some inflexible tasks, fractional powers."""
    T = int(rng.integers(1, max_horizon, endpoint=True))
    essential = rng.integers(0, 5, endpoint=True, size=T).astype(float)
    tasks = []
    for i in range(int(rng.integers(0, max_tasks, endpoint=True))):
        d = int(rng.integers(1, min(5, T), endpoint=True))
        tasks.append(
            FlexTask(
                id=int(rng.integers(0, 4)) * 10 + i,
                energy=float(rng.integers(1, 5, endpoint=True)),
                duration=d,
                preferred_start=int(rng.integers(1, T - d + 1, endpoint=True)),
                deviation=int(rng.integers(0, T + 3)),
                is_flexible=bool(rng.random() < 0.8),
            )
        )
    return Instance(T, tuple(essential), tuple(tasks))


@st.composite
def instances(draw, max_horizon=10, max_tasks=4):
    T = draw(st.integers(1, max_horizon))
    essential = draw(st.lists(st.integers(0, 6), min_size=T, max_size=T))
    n = draw(st.integers(0, max_tasks))
    tasks = []
    for i in range(n):
        d = draw(st.integers(1, min(5, T)))
        tasks.append(
            FlexTask(
                id=i + 1,
                energy=draw(st.floats(0.5, 6.0, allow_nan=False)),
                duration=d,
                preferred_start=draw(st.integers(1, T - d + 1)),
                deviation=draw(st.integers(0, T + 2)),
                is_flexible=draw(st.booleans()),
            )
        )
    return Instance(T, tuple(float(e) for e in essential), tuple(tasks))
