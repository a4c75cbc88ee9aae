#!/usr/bin/env python3
"""Sweep a shared deviation tolerance X for several flexible-device counts out of 50 devices."""

import argparse
from pathlib import Path

from demandshaping.experiments import GenConfig, deviation_param, sweep_deviation


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--horizon", type=int, default=24)
    parser.add_argument("--tasks", type=int, default=50)
    parser.add_argument("--counts", default="10,20,30,40,50")
    parser.add_argument("--algorithm", default="greedy")
    parser.add_argument("--csv", type=Path, default=None)
    args = parser.parse_args()

    counts = [int(c) for c in args.counts.split(",")]
    xs = list(range(0, 15, 2)) + [args.horizon]
    cfg = GenConfig(horizon=args.horizon, n_tasks=args.tasks, seed=args.seed)
    result = sweep_deviation(cfg, args.algorithm, xs, counts, args.trials)

    for metric in ("gamma", "zeta"):
        print(f"\nmean {metric}")
        print(f"{'flex':>5} " + " ".join(f"X={x:<6}" for x in xs))
        for c in counts:
            row = result.series(metric, deviation_param(c))
            print(f"{c:>5} " + " ".join(f"{v:<8.1f}" for v in row))
    if args.csv:
        args.csv.write_text(result.to_csv())


if __name__ == "__main__":
    main()
