#!/usr/bin/env python3
"""Sweep the number of fully flexible devices and report flatness and inconvenience."""

import argparse
from pathlib import Path

from demandshaping.experiments import GenConfig, sweep_devices
from demandshaping.metrics import relative_levels


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--horizon", type=int, default=24)
    parser.add_argument("--tasks", type=int, default=100)
    parser.add_argument("--step", type=int, default=10)
    parser.add_argument("--algorithm", default="greedy")
    parser.add_argument("--csv", type=Path, default=None, help="write per-trial rows here")
    args = parser.parse_args()

    counts = list(range(0, args.tasks + 1, args.step))
    cfg = GenConfig(horizon=args.horizon, n_tasks=args.tasks, seed=args.seed)
    result = sweep_devices(cfg, args.algorithm, counts, args.trials)
    gamma, zeta = result.series("gamma"), result.series("zeta")
    gamma_rel, zeta_rel = relative_levels(gamma), relative_levels(zeta)

    print(f"{'devices':>7} {'gamma':>10} {'gamma%':>7} {'zeta':>10} {'zeta%':>7}")
    for y, g, gr, z, zr in zip(counts, gamma, gamma_rel, zeta, zeta_rel):
        print(f"{y:>7} {g:>10.2f} {gr:>7.1f} {z:>10.2f} {zr:>7.1f}")
    if args.csv:
        args.csv.write_text(result.to_csv())


if __name__ == "__main__":
    main()
