#!/usr/bin/env python3
"""Cross-checking the three halfspace-depth engines against each other.

The package ships three ways to compute Tukey (halfspace) depth:

  * depth_2d_exact      -- angular sweep, exact in the plane;
  * depth_bruteforce    -- arrangement enumeration with rational-arithmetic
                           tie breaking, exact for d <= 3 and n <= 200;
  * depth_approx        -- seeded random directions, an upper bound that
                           tightens as k grows (optionally refined).

This demo runs them side by side on small instances: first the classic
worked examples, then random clouds where sweep and brute force must agree
bit for bit, and finally the approximation closing in on the exact value
as the direction count doubles.
"""

import argparse

import numpy as np

from halfdepth.depth import (depth_2d_exact, depth_approx, depth_bruteforce)


def worked_examples() -> None:
    cross = np.array([[1.0, 0.0], [-1.0, 0.0], [0.0, 1.0], [0.0, -1.0]])
    tri = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]])
    r = depth_2d_exact(cross, [0.0, 0.0])
    print(f"cross of 4 points, center:   {r.count}/{r.n}  (expected 2/4)")
    r = depth_2d_exact(tri, [0.0, 0.0])
    print(f"triangle, corner vertex:     {r.fraction}  (expected 1/3)")
    octa = np.array([[1.0, 0, 0], [-1, 0, 0], [0, 1, 0],
                     [0, -1, 0], [0, 0, 1], [0, 0, -1]])
    r = depth_bruteforce(octa, [0.0, 0.0, 0.0])
    print(f"octahedron, center:          {r.count}/{r.n}  (expected 3/6)")


def engine_agreement(trials: int, seed: int) -> None:
    rng = np.random.default_rng(seed)
    worst = 0
    for _ in range(trials):
        n = int(rng.integers(3, 40))
        pts = rng.standard_normal((n, 2))
        if rng.random() < 0.3:
            pts = np.round(pts * 2) / 2  # force ties and collinearity
        x = pts[int(rng.integers(n))] if rng.random() < 0.5 \
            else rng.standard_normal(2)
        a = depth_2d_exact(pts, x).count
        b = depth_bruteforce(pts, x).count
        if a != b:
            raise AssertionError(f"engines disagree: sweep {a} brute {b}")
        worst = max(worst, n)
    print(f"sweep == brute force on {trials} random instances "
          f"(n up to {worst}), exact integer agreement")


def approximation_tightens(seed: int) -> None:
    rng = np.random.default_rng(seed)
    pts = rng.standard_normal((60, 2))
    x = np.array([0.2, -0.1])
    exact = depth_2d_exact(pts, x)
    print(f"\nexact depth of a 60-point cloud at {x.tolist()}: "
          f"{exact.count}/{exact.n}")
    print(f"{'k':>6} {'approx count':>13} {'gap':>5}")
    for k in (4, 16, 64, 256, 1024, 4096):
        r = depth_approx(pts, x, k=k, seed=99)
        print(f"{k:6d} {r.count:13d} {r.count - exact.count:5d}")
    r = depth_approx(pts, x, k=64, seed=99, refine=True)
    print(f"k=64 with refinement: {r.count}  "
          "(descent usually recovers the exact count)")


def main(argv=None) -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--trials", type=int, default=60)
    p.add_argument("--seed", type=int, default=3)
    args = p.parse_args(argv)

    worked_examples()
    print()
    engine_agreement(args.trials, args.seed)
    approximation_tightens(args.seed)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
