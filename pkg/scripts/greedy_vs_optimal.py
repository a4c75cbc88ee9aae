#!/usr/bin/env python3
"""Mean squared distance to the flat schedule for greedy vs permutation search, 1..7 fully flexible devices."""

import argparse

from demandshaping.experiments import GenConfig, sweep_devices


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=20)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--horizon", type=int, default=24)
    parser.add_argument("--max-devices", type=int, default=7)
    args = parser.parse_args()

    print(f"{'devices':>7} {'greedy':>10} {'optimal':>10} {'ratio':>7}")
    for y in range(1, args.max_devices + 1):
        cfg = GenConfig(horizon=args.horizon, n_tasks=y, seed=args.seed)
        g = sweep_devices(cfg, "greedy", [y], args.trials).series("gamma")[0]
        o = sweep_devices(cfg, "optimal", [y], args.trials).series("gamma")[0]
        print(f"{y:>7} {g:>10.2f} {o:>10.2f} {g / o:>7.3f}")


if __name__ == "__main__":
    main()
