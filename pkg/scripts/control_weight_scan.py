#!/usr/bin/env python3
"""Scan the control-qubit weight p numerically. The analytic closed form
only covers p=1/2; this script checks, via the ensemble optimizer, where
the communication rate actually peaks."""

import argparse

import numpy as np

from switchcap.capacity import optimize_ensemble
from switchcap.channels import depolarizing_channel
from switchcap.switch import ControlState, switch_with_fixed_control


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dim", type=int, default=2)
    parser.add_argument("--q", type=float, default=0.0)
    parser.add_argument("--points", type=int, default=11)
    parser.add_argument("--trials", type=int, default=100)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    dep = depolarizing_channel(args.dim, args.q)
    best = (None, -1.0)
    for p in np.linspace(0.0, 1.0, args.points):
        ch = switch_with_fixed_control(dep, dep, ControlState(float(p)))
        res = optimize_ensemble(ch, args.dim, trials=args.trials, seed=args.seed)
        marker = ""
        if res.chi > best[1]:
            best = (p, res.chi)
            marker = " *"
        print(f"p={p:.3f}  chi_numeric={res.chi:.9f}{marker}")
    print(f"peak at p={best[0]:.3f} with chi={best[1]:.9f}")


if __name__ == "__main__":
    main()
