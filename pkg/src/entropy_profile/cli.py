"""Command line entry point.

Exit codes: 0 ok, 2 parse/validation error, 3 internal discrepancy,
4 output I/O error, 5 precondition (non-contractive map).
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import io as eio
from .contractions import monotonicity_report, random_doubly_stochastic
from .entropy import entropy_boundary, entropy_direct, entropy_quadrature
from .errors import EntropyProfileError, NotContractive
from .oracle import witness_search
from .profile import build_profile
from .spectral import spectrum_of
from .states import make_distribution

EXIT_OK, EXIT_PARSE, EXIT_DISCREPANCY, EXIT_IO, EXIT_PRECONDITION = 0, 2, 3, 4, 5
DISCREPANCY_TOL = 1e-8


class OutputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    inputs: list = field(default_factory=list)
    seed: int = 0
    trials: int = 1
    samples: int = 1000
    steps: int = 1_000_000
    tol: float = 1e-9
    out: Optional[str] = None
    threads: int = 1


def _threads() -> int:
    try:
        return max(1, int(os.environ.get("ENTROPY_PROFILE_THREADS", "1")))
    except ValueError:
        return 1


def _emit(text: str, out: Optional[str]) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise OutputError(str(exc)) from exc


def cmd_entropy(cfg: RunConfig) -> int:
    state = eio.load_state(cfg.inputs[0], tol=cfg.tol)
    s = spectrum_of(state, tol=cfg.tol)
    p = build_profile(s)
    values = {
        "direct": entropy_direct(s),
        "boundary": entropy_boundary(p),
        "quadrature": entropy_quadrature(p, cfg.steps),
    }
    v = list(values.values())
    values["max_discrepancy"] = max(abs(a - b) for a in v for b in v)
    _emit(eio.dumps(values), cfg.out)
    return EXIT_OK if values["max_discrepancy"] <= DISCREPANCY_TOL else EXIT_DISCREPANCY


def cmd_profile(cfg: RunConfig) -> int:
    state = eio.load_state(cfg.inputs[0], tol=cfg.tol)
    _emit(eio.profile_to_csv(build_profile(spectrum_of(state, tol=cfg.tol))), cfg.out)
    return EXIT_OK


def _random_trial(n: int, k: int, seed: int, trial: int, state):
    t = random_doubly_stochastic(n, k, [seed, trial, 0])
    if state is None:
        rng = np.random.default_rng([seed, trial, 1])
        state = make_distribution(rng.dirichlet(np.ones(n)))
    return monotonicity_report(t, state)


def cmd_check_monotone(cfg: RunConfig, random_nk=None) -> int:
    state_path, transform_path = (cfg.inputs + [None, None])[:2]
    state = eio.load_state(state_path, tol=cfg.tol) if state_path else None
    if random_nk is not None:
        n, k = random_nk
        if transform_path is not None:
            raise EntropyProfileError("give either a transform file or --random, not both")
        trials = range(cfg.trials)
        with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
            reports = list(pool.map(lambda t: _random_trial(n, k, cfg.seed, t, state), trials))
    else:
        if state is None or transform_path is None:
            raise EntropyProfileError("check-monotone needs STATE and TRANSFORM, or --random N K")
        reports = [monotonicity_report(eio.load_transform(transform_path), state)]
    doc = {
        "trials": [dict(trial=i, **r.as_dict()) for i, r in enumerate(reports)],
        "all_verdicts": all(r.verdict for r in reports),
    }
    _emit(eio.dumps(doc), cfg.out)
    return EXIT_OK if doc["all_verdicts"] else EXIT_DISCREPANCY


def cmd_oracle(cfg: RunConfig, r1: float, rinf: float) -> int:
    state = eio.load_state(cfg.inputs[0], tol=cfg.tol)
    verdict = witness_search(state, r1, rinf, samples=cfg.samples, seed=cfg.seed)
    _emit(eio.dumps(verdict.as_dict()), cfg.out)
    return EXIT_OK


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-9, help="state validation tolerance")
    common.add_argument("--out", default=None, help="write output here instead of stdout")
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(prog="entropy-profile", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("entropy", parents=[common], help="entropy by the three routes")
    p.add_argument("state")
    p.add_argument("--steps", type=_positive_int, default=1_000_000, help="quadrature steps per unit r1")

    p = sub.add_parser("profile", parents=[common], help="breakpoint CSV of the boundary curve")
    p.add_argument("state")

    p = sub.add_parser("check-monotone", parents=[common], help="entropy monotonicity under a transform")
    p.add_argument("state", nargs="?")
    p.add_argument("transform", nargs="?")
    p.add_argument("--random", nargs=2, type=_positive_int, metavar=("N", "K"),
                   help="random doubly stochastic N x N maps from K permutations")
    p.add_argument("--trials", type=_positive_int, default=1)

    p = sub.add_parser("oracle", parents=[common], help="sampled ball-intersection search")
    p.add_argument("state")
    p.add_argument("r1", type=float)
    p.add_argument("rinf", type=float)
    p.add_argument("--samples", type=_positive_int, default=1000)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK

    inputs = [x for x in (getattr(args, "state", None), getattr(args, "transform", None)) if x]
    cfg = RunConfig(
        command=args.command,
        inputs=inputs,
        seed=args.seed,
        trials=getattr(args, "trials", 1),
        samples=getattr(args, "samples", 1000),
        steps=getattr(args, "steps", 1_000_000),
        tol=args.tol,
        out=args.out,
        threads=_threads(),
    )
    try:
        if args.command == "entropy":
            return cmd_entropy(cfg)
        if args.command == "profile":
            return cmd_profile(cfg)
        if args.command == "check-monotone":
            return cmd_check_monotone(cfg, args.random)
        return cmd_oracle(cfg, args.r1, args.rinf)
    except OutputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except NotContractive as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (EntropyProfileError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return getattr(exc, "exit_code", EXIT_PARSE)


if __name__ == "__main__":
    sys.exit(main())
