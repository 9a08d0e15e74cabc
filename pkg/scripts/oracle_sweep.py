"""Sampled ball-intersection search against F on a grid around the boundary.

    python scripts/oracle_sweep.py --states 10 --samples 300 > oracle.csv
"""

import argparse

import numpy as np

from entropy_profile import eval_F, make_density, make_distribution, oracle_consistency, spectrum_of


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--states", type=int, default=10)
    ap.add_argument("--dim", type=int, default=6)
    ap.add_argument("--samples", type=int, default=300)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    print("state,kind,r1,rinf,F,intersects,best_found_norm1")
    for i in range(args.states):
        rng = np.random.default_rng([args.seed, i])
        if i % 2:
            x = rng.normal(size=(args.dim, args.dim)) + 1j * rng.normal(size=(args.dim, args.dim))
            m = x @ x.conj().T
            m = m / np.trace(m).real
            m = 0.5 * (m + m.conj().T)
            state, kind = make_density(m.real, m.imag), "density"
        else:
            state, kind = make_distribution(rng.dirichlet(np.ones(args.dim))), "distribution"
        s = spectrum_of(state)
        grid = [(f * eval_F(s, r), r) for r in np.linspace(0.05, 0.95, 7) * s.values[0] for f in (0.8, 0.99, 1.01, 1.2)]
        report = oracle_consistency(state, grid, samples=args.samples, seed=[args.seed, i])
        for p in report.points:
            print(f"{i},{kind},{p['r1']:.17g},{p['rinf']:.17g},{p['F']:.17g},{int(p['intersects'])},{p['best_found_norm1']:.17g}")
        if report.violations:
            raise SystemExit(f"state {i}: {len(report.violations)} inconsistent grid points")


if __name__ == "__main__":
    main()
