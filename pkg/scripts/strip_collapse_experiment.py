#!/usr/bin/env python3
"""Drive the strip-collapsing flow on a synthetic divisor with four
off-line zeros and watch the divisor transport, the measured boundary
jump, and the covering image of the collapsed points.

Usage:
    python scripts/strip_collapse_experiment.py [--a 0.2] [--steps 5]
"""

import argparse

from zetasphere.flow import FlowParams, continuity_probe, transport_divisor
from zetasphere.mero import Divisor, divisor_degree
from zetasphere.sphere import INFINITY
from zetasphere.zeros import scan_zeros


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--a", type=float, default=0.2)
    parser.add_argument("--steps", type=int, default=5)
    args = parser.parse_args()

    t0 = scan_zeros(10.0, 16.0, 0.25)[0].ordinate
    divisor = Divisor(
        {
            complex(args.a, 5): 1,
            complex(1 - args.a, 5): 1,
            complex(args.a, -5): 1,
            complex(1 - args.a, -5): 1,
            complex(0.5, t0): 1,
            complex(0.5, -t0): 1,
            0j: -1,
            1 + 0j: -1,
            INFINITY: -4,
        }
    )
    print(f"start divisor (degree {divisor_degree(divisor)}): {divisor}")
    for k in range(args.steps + 1):
        t = k / args.steps
        moved = transport_divisor(FlowParams(a=args.a, t=t), divisor)
        spread = max(
            (abs(complex(p).real - 0.5) for p, m in moved.items() if p is not INFINITY and m > 0),
            default=0.0,
        )
        print(f"t = {t:4.2f}: degree {divisor_degree(moved)}, "
              f"max |Re - 1/2| over the zeros = {spread:.3f}, "
              f"support size {len(moved)}")

    print("\nboundary-jump probe at t = 1:")
    for item in continuity_probe(FlowParams(a=args.a, t=1.0)):
        print(f"  {item.status:16s} {item.name}: computed {item.computed:.3e} "
              f"target {item.target:.3e}")


if __name__ == "__main__":
    main()
