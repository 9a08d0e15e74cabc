"""Trapezoid error vs. steps for a few random spectra; CSV to stdout.

    python scripts/quadrature_convergence.py --profiles 5 --seed 0 > conv.csv
"""

import argparse

import numpy as np

from entropy_profile import build_profile, entropy_boundary, entropy_quadrature, make_distribution, spectrum_of


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--profiles", type=int, default=5)
    ap.add_argument("--dim", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    print("profile,steps,abs_error")
    for i in range(args.profiles):
        p = build_profile(spectrum_of(make_distribution(rng.dirichlet(np.ones(args.dim)))))
        exact = entropy_boundary(p)
        for k in range(11):
            steps = 1000 * 2**k
            print(f"{i},{steps},{abs(entropy_quadrature(p, steps) - exact):.17g}")


if __name__ == "__main__":
    main()
