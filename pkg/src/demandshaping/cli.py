"""Command-line front end.

Exit codes: 0 success, 1 I/O failure, 2 validation or usage error,
3 enumeration guard hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from dataclasses import asdict

from .experiments import ALGORITHMS, GenConfig, generate, run_algorithm, sweep_deviation, sweep_devices
from .metrics import compare
from .model import CapacityError, Instance, ValidationError

EXIT_OK, EXIT_IO, EXIT_INVALID, EXIT_CAPACITY = 0, 1, 2, 3


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _add_gen_flags(p: argparse.ArgumentParser) -> None:
    d = GenConfig()
    p.add_argument("--horizon", type=int, default=d.horizon)
    p.add_argument("--tasks", type=int, default=d.n_tasks, help="number of shiftable tasks")
    p.add_argument("--seed", type=int, default=d.seed)
    p.add_argument("--essential-min", type=int, default=d.essential_range[0])
    p.add_argument("--essential-max", type=int, default=d.essential_range[1])
    p.add_argument("--energy-min", type=int, default=d.energy_range[0])
    p.add_argument("--energy-max", type=int, default=d.energy_range[1])
    p.add_argument("--duration-min", type=int, default=d.duration_range[0])
    p.add_argument("--duration-max", type=int, default=d.duration_range[1])


def _config(args) -> GenConfig:
    return GenConfig(
        horizon=args.horizon,
        n_tasks=args.tasks,
        essential_range=(args.essential_min, args.essential_max),
        energy_range=(args.energy_min, args.energy_max),
        duration_range=(args.duration_min, args.duration_max),
        seed=args.seed,
        deviation=getattr(args, "deviation", None),
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="demandshaping", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a random instance as JSON")
    _add_gen_flags(gen)
    gen.add_argument("--deviation", type=int, default=None, help="tolerance for every task (default: horizon)")
    gen.add_argument("-o", "--output", default="-")

    sch = sub.add_parser("schedule", help="schedule an instance and report metrics")
    sch.add_argument("instance", help="instance JSON path, or - for stdin")
    sch.add_argument("--algorithm", choices=ALGORITHMS, default="greedy")
    sch.add_argument("--override-guards", action="store_true")
    sch.add_argument("--parallel", type=int, default=1, metavar="N", help="worker processes")
    sch.add_argument("-o", "--output", default="-")

    sw = sub.add_parser("sweep", help="run a device-count or deviation sweep, emit CSV")
    _add_gen_flags(sw)
    sw.add_argument("--mode", choices=("devices", "deviation"), required=True)
    sw.add_argument("--algorithm", choices=ALGORITHMS, default="greedy")
    sw.add_argument("--counts", type=_int_list, default=None, help="device counts, e.g. 0,10,20")
    sw.add_argument("--x-values", type=_int_list, default=None, help="deviation values (deviation mode)")
    sw.add_argument("--trials", type=int, default=20)
    sw.add_argument("--override-guards", action="store_true")
    sw.add_argument("--parallel", type=int, default=1, metavar="N")
    sw.add_argument("-o", "--output", default="-")
    return parser


@contextmanager
def _pool(n: int):
    if n > 1:
        with ProcessPoolExecutor(max_workers=n) as pool:
            yield pool
    else:
        yield None


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", newline="") as fh:
            fh.write(text)


def cmd_gen(args) -> int:
    _write(args.output, generate(_config(args)).to_json() + "\n")
    return EXIT_OK


def cmd_schedule(args) -> int:
    instance = Instance.from_json(_read(args.instance))
    with _pool(args.parallel) as pool:
        schedule = run_algorithm(args.algorithm, instance, override_guard=args.override_guards, pool=pool)
    out = schedule.to_dict()
    out.update(asdict(compare(schedule, instance)))
    _write(args.output, json.dumps(out, indent=2) + "\n")
    return EXIT_OK


def cmd_sweep(args) -> int:
    config = _config(args)
    with _pool(args.parallel) as pool:
        if args.mode == "devices":
            counts = args.counts if args.counts is not None else list(range(0, config.n_tasks + 1, 10))
            result = sweep_devices(
                config, args.algorithm, counts, args.trials, override_guard=args.override_guards, pool=pool
            )
        else:
            counts = args.counts if args.counts is not None else [config.n_tasks]
            xs = args.x_values if args.x_values is not None else list(range(0, 15, 2))
            result = sweep_deviation(
                config, args.algorithm, xs, counts, args.trials, override_guard=args.override_guards, pool=pool
            )
    _write(args.output, result.to_csv())
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = {"gen": cmd_gen, "schedule": cmd_schedule, "sweep": cmd_sweep}[args.command]
    try:
        return handler(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
