"""Entropy gain and profile drop under random doubly stochastic maps and pinchings.

Writes one CSV row per trial:

    python scripts/monotonicity_sweep.py --trials 200 --dim 12 --perms 3 > sweep.csv
"""

import argparse

import numpy as np

from entropy_profile import (
    BlockStructure,
    apply_transform,
    build_profile,
    entropy_direct,
    make_density,
    make_distribution,
    random_doubly_stochastic,
    spectrum_of,
)


def profile_drop(before, after):
    a, b = build_profile(spectrum_of(before)), build_profile(spectrum_of(after))
    grid = np.union1d(a.rinf, b.rinf)
    return float(np.min(a(grid) - b(grid)))


def random_density(rng, d):
    x = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    m = x @ x.conj().T
    m /= np.trace(m).real
    m = 0.5 * (m + m.conj().T)
    return make_density(m.real, m.imag)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--dim", type=int, default=12)
    ap.add_argument("--perms", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print("trial,kind,entropy_before,entropy_after,min_profile_drop")
    for t in range(args.trials):
        rng = np.random.default_rng([args.seed, t])
        if t % 2 == 0:
            transform = random_doubly_stochastic(args.dim, args.perms, [args.seed, t, 0])
            state = make_distribution(rng.dirichlet(np.ones(args.dim)))
            kind = "doubly_stochastic"
        else:
            cut = int(rng.integers(1, args.dim + 1))
            transform = BlockStructure((cut, args.dim - cut) if cut < args.dim else (args.dim,))
            state = random_density(rng, args.dim)
            kind = "pinch"
        after = apply_transform(transform, state)
        h0, h1 = entropy_direct(spectrum_of(state)), entropy_direct(spectrum_of(after))
        print(f"{t},{kind},{h0:.17g},{h1:.17g},{profile_drop(state, after):.17g}")


if __name__ == "__main__":
    main()
