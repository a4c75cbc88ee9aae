import json

import pytest

from demandshaping.cli import main
from demandshaping.experiments import SweepResult
from demandshaping.model import FlexTask, Instance


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_is_byte_identical(capsys):
    a = run(capsys, "gen", "--seed", "7", "--tasks", "5")
    b = run(capsys, "gen", "--seed", "7", "--tasks", "5")
    assert a[0] == 0 and a[1] == b[1]
    assert len(json.loads(a[1])["tasks"]) == 5


def test_gen_zero_tasks(capsys):
    code, out, _ = run(capsys, "gen", "--tasks", "0")
    assert code == 0
    assert Instance.from_json(out).tasks == ()


def test_gen_range_violation_exits_2(capsys):
    code, _, err = run(capsys, "gen", "--duration-max", "30", "--horizon", "24")
    assert code == 2 and "exceeds horizon" in err


def test_bad_flag_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["gen", "--nope"])
    assert exc.value.code == 2


def test_write_failure_exits_1(capsys, tmp_path):
    code, _, _ = run(capsys, "gen", "-o", str(tmp_path / "missing" / "x.json"))
    assert code == 1


@pytest.fixture
def two_task_file(tmp_path, two_task_instance):
    p = tmp_path / "inst.json"
    p.write_text(two_task_instance.to_json())
    return p


def test_schedule_optimal(capsys, two_task_file):
    code, out, _ = run(capsys, "schedule", str(two_task_file), "--algorithm", "optimal")
    data = json.loads(out)
    assert code == 0
    assert data["label"] == "OPTIMAL" and data["load"] == [4, 3, 5] and data["peak"] == 5
    assert data["starts"] == {"1": 3, "2": 1}
    assert (data["gamma"], data["zeta"]) == (2, 50)


@pytest.mark.parametrize("algorithm", ["gc", "uc", "greedy", "oracle"])
def test_schedule_each_algorithm(capsys, two_task_file, algorithm):
    code, out, _ = run(capsys, "schedule", str(two_task_file), "--algorithm", algorithm)
    data = json.loads(out)
    assert code == 0 and data["label"] == algorithm.upper()
    if algorithm == "uc":
        assert data["zeta"] == 0


def test_schedule_guard_exits_3(capsys, tmp_path):
    inst = Instance(2, (0, 0), tuple(FlexTask(i, 1.0, 1, 1, 1) for i in range(11)))
    p = tmp_path / "big.json"
    p.write_text(inst.to_json())
    code, _, err = run(capsys, "schedule", str(p), "--algorithm", "optimal")
    assert code == 3 and "11 flexible tasks" in err


def test_schedule_invalid_instance_exits_2(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"horizon": 2, "essential": [1], "tasks": []}')
    code, _, err = run(capsys, "schedule", str(p))
    assert code == 2 and "essential must have exactly 2" in err


def test_schedule_missing_file_exits_1(capsys, tmp_path):
    code, _, _ = run(capsys, "schedule", str(tmp_path / "nope.json"))
    assert code == 1


def test_schedule_parallel_matches_serial(capsys, tmp_path):
    p = tmp_path / "inst.json"
    run(capsys, "gen", "--tasks", "5", "--horizon", "10", "--seed", "3", "-o", str(p))
    _, serial, _ = run(capsys, "schedule", str(p), "--algorithm", "oracle")
    _, par, _ = run(capsys, "schedule", str(p), "--algorithm", "oracle", "--parallel", "2")
    assert serial == par


def test_sweep_devices_zero(capsys):
    code, out, _ = run(capsys, "sweep", "--mode", "devices", "--counts", "0", "--tasks", "10", "--trials", "3")
    r = SweepResult.from_csv(out)
    assert code == 0 and len(r.rows) == 3 and all(row.zeta == 0 for row in r.rows)


def test_sweep_identical_bytes(capsys):
    argv = ("sweep", "--mode", "devices", "--counts", "0,5,10", "--tasks", "10", "--trials", "2", "--seed", "4")
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_sweep_deviation_x0(capsys):
    code, out, _ = run(
        capsys, "sweep", "--mode", "deviation", "--x-values", "0", "--counts", "4,8", "--tasks", "8", "--trials", "2"
    )
    r = SweepResult.from_csv(out)
    assert code == 0 and len(r.rows) == 4 and all(row.zeta == 0 for row in r.rows)


def test_sweep_bad_count_exits_2(capsys):
    code, _, _ = run(capsys, "sweep", "--mode", "devices", "--counts", "20", "--tasks", "10", "--trials", "1")
    assert code == 2
