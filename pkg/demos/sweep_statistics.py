"""Sweep all small quasiorders plus random ones and tabulate the invariant suites."""
import argparse

import numpy as np

from roughnelson import relations as rel
from roughnelson.rough import enumerate_rs_generated
from roughnelson.sweep import sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=4)
    ap.add_argument("--samples", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rep = sweep(max_size=max(args.max_size, 5) if args.samples else args.max_size, samples=args.samples, seed=args.seed)
    print(f"tested {rep.tested} relations, by size {dict(sorted(rep.by_size.items()))}")
    for name in rep.runs:
        if rep.runs[name]:
            print(f"  {name:<28} {rep.passes[name]:4d}/{rep.runs[name]}")
    print("all passed:", rep.all_passed)

    sizes = np.array([len(enumerate_rs_generated(R)) for R in rel.enumerate_preorders(3)])
    print(f"|RS| over the 29 quasiorders on 3 points: min {sizes.min()}, max {sizes.max()}, mean {sizes.mean():.2f}")


if __name__ == "__main__":
    main()
