#!/usr/bin/env python3
"""Show how the Molien-integral quadrature error behaves under node
doubling, against the exact Chebyshev-moment values.

The integrand is a trigonometric polynomial, so once the panels resolve its
highest harmonic the error collapses to roundoff; before that point every
doubling at least halves it.

Usage: python scripts/quadrature_convergence.py [--max-d 4] [--max-m 8]
"""

import argparse
import sys

from ncinv.hilbert import dims_by_chebyshev, dims_by_quadrature


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-d", type=int, default=4)
    parser.add_argument("--max-m", type=int, default=8)
    parser.add_argument("--max-panels", type=int, default=1024)
    args = parser.parse_args(argv)

    for d in range(1, args.max_d + 1):
        exact = dims_by_chebyshev(d, args.max_m).dims
        print(f"# d = {d}")
        print("panels,max_abs_err,estimate")
        panels = 1
        while panels <= args.max_panels:
            series = dims_by_quadrature(d, args.max_m, panels)
            err = max(abs(a - b) for a, b in zip(series.dims, exact))
            estimate = max(series.error)
            print(f"{panels},{err:.3e},{estimate:.3e}")
            panels *= 2
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
