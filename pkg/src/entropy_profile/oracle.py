"""Brute-force search for points where the two open balls meet.

Balls of radius r1 (l1 / trace norm) and rinf (sup / operator norm) whose
centres differ by w intersect iff ``w = u + v`` with ``|u|_1 < r1`` and
``|v|_inf < rinf``.  The search samples such splits: clipping w at a grid
of levels below rinf, plus random perturbations of those clips.  It can
only ever *find* an intersection; "no witness" is evidence, not proof.

Norms here come from LAPACK (``numpy.linalg.eigvalsh``) rather than the
package's Jacobi solver, so the search does not share code with what it
corroborates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from .profile import eval_F
from .spectral import spectrum_of
from .states import DensityOperator, DiscreteDistribution, HermitianMatrix, RealSequence

MARGIN = 1e-9
N_LEVELS = 64

State = Union[DiscreteDistribution, DensityOperator]


@dataclass(frozen=True)
class Decomposition:
    u: Union[RealSequence, HermitianMatrix]
    v: Union[RealSequence, HermitianMatrix]


@dataclass(frozen=True)
class SeparationVerdict:
    intersects: bool
    witness: Optional[Decomposition]
    best_found_norm1: float
    witness_norm1: Optional[float] = None
    witness_norm_inf: Optional[float] = None

    def as_dict(self) -> dict:
        out = {
            "intersects": self.intersects,
            "best_found_norm1": self.best_found_norm1 if np.isfinite(self.best_found_norm1) else None,
            "witness": None,
        }
        if self.witness is not None:
            out["witness"] = {
                "norm1_u": self.witness_norm1,
                "norm_inf_v": self.witness_norm_inf,
                "u": _element_dict(self.witness.u),
                "v": _element_dict(self.witness.v),
            }
        return out


@dataclass
class ConsistencyReport:
    points: list = field(default_factory=list)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _element_dict(a) -> dict:
    if isinstance(a, RealSequence):
        return {"kind": "sequence", "entries": a.entries.tolist()}
    return {"kind": "hermitian", "re": a.re.tolist(), "im": a.im.tolist()}


def _is_operator(state) -> bool:
    return isinstance(state, HermitianMatrix)


def _raw(state) -> np.ndarray:
    return state.to_complex() if _is_operator(state) else np.asarray(state.entries, dtype=float)


def _herm(a: np.ndarray) -> np.ndarray:
    return 0.5 * (a + np.swapaxes(a, -1, -2).conj())


def _norms(u: np.ndarray, v: np.ndarray, operator: bool):
    """Batched ``(|u|_1, |v|_inf)`` over the leading axis."""
    if operator:
        return (
            np.sum(np.abs(np.linalg.eigvalsh(_herm(u))), axis=-1),
            np.max(np.abs(np.linalg.eigvalsh(_herm(v))), axis=-1),
        )
    return np.sum(np.abs(u), axis=-1), np.max(np.abs(v), axis=-1)


def _clip_spectral(a: np.ndarray, lo, hi) -> np.ndarray:
    """Clip the eigenvalues of (a batch of) Hermitian matrices into [lo, hi]."""
    lam, q = np.linalg.eigh(_herm(a))
    lam = np.clip(lam, np.asarray(lo)[..., None], np.asarray(hi)[..., None])
    return _herm((q * lam[..., None, :]) @ np.swapaxes(q, -1, -2).conj())


def _wrap(a: np.ndarray, operator: bool):
    if operator:
        return HermitianMatrix(a.real, a.imag)
    return RealSequence(a)


def clip_decomposition(state: State, r: float) -> Decomposition:
    """Split ``w = u + v`` with v = w clipped at level r (spectrally for densities)."""
    w = _raw(state)
    if _is_operator(state):
        v = _clip_spectral(w[None], -np.inf, np.array([r]))[0]
        return Decomposition(_wrap(w - v, True), _wrap(v, True))
    v = np.minimum(w, r)
    return Decomposition(RealSequence(w - v), RealSequence(v))


def clip_levels(rinf: float, n: int = N_LEVELS) -> np.ndarray:
    """Levels strictly inside (0, rinf).

    Half are geometric in the level itself, to resolve small weights;
    half are geometric in the gap to rinf, since the best clip sits just
    below rinf.
    """
    lo = n // 2
    low = np.geomspace(rinf * 1e-9, rinf, lo, endpoint=False)
    near = rinf * (1.0 - np.geomspace(0.5, 1e-12, n - lo))
    levels = np.unique(np.concatenate([low, near]))
    return levels[(levels > 0) & (levels < rinf)]


def _random_directions(rng, count: int, dim: int, operator: bool) -> np.ndarray:
    """Random elements normalized to sup / operator norm 1."""
    if operator:
        x = rng.normal(size=(count, dim, dim)) + 1j * rng.normal(size=(count, dim, dim))
        h = _herm(x)
        scale = np.max(np.abs(np.linalg.eigvalsh(h)), axis=-1)
        return h / scale[:, None, None]
    x = rng.normal(size=(count, dim))
    return x / np.max(np.abs(x), axis=-1, keepdims=True)


def _candidates(state: State, rinf: float, samples: int, rng):
    """All sampled splits: clip grid first, then perturbed clips."""
    operator = _is_operator(state)
    w = _raw(state)
    levels = clip_levels(rinf)
    if levels.size == 0:
        return None, None
    if operator:
        lam, q = np.linalg.eigh(w)
        clipped = np.minimum(lam[None, :], levels[:, None])
        vs = (q[None] * clipped[:, None, :]) @ q.conj().T[None]
    else:
        vs = np.minimum(w[None, :], levels[:, None])

    base_idx = rng.integers(0, levels.size, size=samples)
    # bias half the perturbations toward the best (highest) clip levels
    top = rng.random(samples) < 0.5
    base_idx[top] = levels.size - 1 - rng.integers(0, min(8, levels.size), size=int(top.sum()))
    lvl = levels[base_idx]
    eps = lvl * 10.0 ** rng.uniform(-8, 0, size=samples)
    dim = w.shape[0]
    dirs = _random_directions(rng, samples, dim, operator)
    if operator:
        pv = vs[base_idx] + eps[:, None, None] * dirs
        pv = _clip_spectral(pv, -lvl, lvl)
    else:
        pv = vs[base_idx] + eps[:, None] * dirs
        pv = np.clip(pv, -lvl[:, None], lvl[:, None])
    return np.concatenate([vs, pv]), w


def witness_search(state: State, r1: float, rinf: float, samples: int = 1000, seed=0) -> SeparationVerdict:
    """Look for ``w = u + v`` with ``|u|_1 < r1`` and ``|v|_inf < rinf``."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    if rinf <= 0:
        return SeparationVerdict(False, None, float("inf"))
    vs, w = _candidates(state, rinf, samples, rng)
    if vs is None:
        return SeparationVerdict(False, None, float("inf"))
    operator = _is_operator(state)
    us = w[None] - vs
    n1, ninf = _norms(us, vs, operator)
    feasible = ninf < rinf
    if not np.any(feasible):
        return SeparationVerdict(False, None, float("inf"))
    n1_feasible = np.where(feasible, n1, np.inf)
    best = int(np.argmin(n1_feasible))
    best_norm = float(n1_feasible[best])
    if best_norm < r1:
        witness = Decomposition(_wrap(us[best], operator), _wrap(vs[best], operator))
        return SeparationVerdict(True, witness, best_norm, best_norm, float(ninf[best]))
    return SeparationVerdict(False, None, best_norm)


def oracle_consistency(
    state: State, grid: Sequence[tuple], samples: int = 200, seed=0, margin: float = MARGIN
) -> ConsistencyReport:
    """Compare witness_search against the closed-form boundary on a grid.

    A witness at a point with ``r1 <= F(rinf) - margin`` is a violation;
    points within ``margin`` of the boundary are never judged.
    """
    s = spectrum_of(state)
    report = ConsistencyReport()
    for j, (r1, rinf) in enumerate(grid):
        f = eval_F(s, rinf)
        verdict = witness_search(state, r1, rinf, samples=samples, seed=[_seed_int(seed), j])
        point = {
            "r1": float(r1),
            "rinf": float(rinf),
            "F": f,
            "intersects": verdict.intersects,
            "best_found_norm1": verdict.best_found_norm1,
        }
        report.points.append(point)
        if verdict.intersects and r1 <= f - margin:
            report.violations.append(point)
    return report


def random_split_norms(state: State, rinf: float, samples: int, seed=0) -> np.ndarray:
    """``|w - v|_1`` for random v with ``|v|_inf < rinf``.

    v is a random direction of unit sup / operator norm scaled by a
    uniform radius in [0, rinf).
    """
    rng = np.random.default_rng(seed)
    operator = _is_operator(state)
    w = _raw(state)
    dirs = _random_directions(rng, samples, w.shape[0], operator)
    radius = rinf * rng.random(samples)
    shape = (samples, 1, 1) if operator else (samples, 1)
    vs = dirs * radius.reshape(shape)
    n1, ninf = _norms(w[None] - vs, vs, operator)
    return n1[ninf < rinf]


def _seed_int(seed) -> int:
    if isinstance(seed, (list, tuple)):
        return int(np.random.SeedSequence(list(seed)).generate_state(1)[0])
    return int(seed)
