"""Maps that contract both norms, and the entropy-monotonicity check.

Sequence side: doubly stochastic matrices and block averaging over a
partition.  Operator side: pinching to a block-diagonal subalgebra and
unitary conjugation.  Each projection here is self-adjoint for the
pairing and non-expansive in both norms.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np

from .entropy import entropy_direct
from .errors import DimensionMismatch, KindMismatch, NotContractive, OutputNotDistribution, StateError
from .profile import build_profile, profile_dominates
from .spectral import spectrum_of
from .states import (
    DensityOperator,
    DiscreteDistribution,
    HermitianMatrix,
    RealSequence,
    make_distribution,
)

CONTRACTIVE_SLACK = 1e-12
ENTROPY_SLACK = 1e-9


@dataclass(frozen=True)
class SequenceMap:
    matrix: np.ndarray

    def __post_init__(self):
        m = np.array(self.matrix, dtype=float)
        if m.ndim != 2 or m.size == 0:
            raise StateError(f"map must be a nonempty 2-d matrix, got shape {m.shape}")
        if not np.all(np.isfinite(m)):
            raise StateError("map has non-finite entries")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty index blocks covering ``range(n)``."""

    blocks: tuple

    def __post_init__(self):
        blocks = tuple(tuple(int(i) for i in b) for b in self.blocks)
        if not blocks or any(len(b) == 0 for b in blocks):
            raise StateError("partition blocks must be nonempty")
        flat = sorted(i for b in blocks for i in b)
        if flat != list(range(len(flat))):
            raise StateError("partition blocks must be disjoint and cover 0..n-1")
        object.__setattr__(self, "blocks", blocks)

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls(tuple((i,) for i in range(n)))


@dataclass(frozen=True)
class BlockStructure:
    """Contiguous diagonal blocks, given by their sizes."""

    sizes: tuple

    def __post_init__(self):
        sizes = tuple(int(s) for s in self.sizes)
        if not sizes or min(sizes) < 1:
            raise StateError("block sizes must be positive")
        object.__setattr__(self, "sizes", sizes)

    @property
    def d(self) -> int:
        return sum(self.sizes)

    @property
    def ranges(self) -> list[range]:
        edges = np.cumsum((0,) + self.sizes)
        return [range(int(a), int(b)) for a, b in zip(edges[:-1], edges[1:])]

    def mask(self) -> np.ndarray:
        labels = np.repeat(np.arange(len(self.sizes)), self.sizes)
        return labels[:, None] == labels[None, :]


@dataclass(frozen=True)
class Unitary:
    matrix: np.ndarray

    def __post_init__(self):
        u = np.array(self.matrix, dtype=complex)
        if u.ndim != 2 or u.shape[0] != u.shape[1]:
            raise StateError("unitary must be square")
        if np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))) > 1e-10:
            raise StateError("matrix is not unitary")
        u.setflags(write=False)
        object.__setattr__(self, "matrix", u)


@dataclass(frozen=True)
class MonotonicityReport:
    entropy_before: float
    entropy_after: float
    region_shrank: bool
    verdict: bool

    def as_dict(self) -> dict:
        return {
            "entropy_before": self.entropy_before,
            "entropy_after": self.entropy_after,
            "region_shrank": self.region_shrank,
            "verdict": self.verdict,
        }


Transform = Union[SequenceMap, Partition, BlockStructure, Unitary]


def induced_norm_1(t: SequenceMap) -> float:
    """l1 -> l1 operator norm: largest absolute column sum."""
    return float(np.max(np.sum(np.abs(t.matrix), axis=0)))


def induced_norm_inf(t: SequenceMap) -> float:
    """l_inf -> l_inf operator norm: largest absolute row sum."""
    return float(np.max(np.sum(np.abs(t.matrix), axis=1)))


def apply_map(t: SequenceMap, omega: DiscreteDistribution, tol: float = 1e-9) -> DiscreteDistribution:
    if t.matrix.shape[1] != omega.dim:
        raise DimensionMismatch(f"map is {t.matrix.shape}, state has dimension {omega.dim}")
    out = t.matrix @ omega.entries
    try:
        return make_distribution(out, tol=tol)
    except StateError as exc:
        raise OutputNotDistribution(f"image is not a distribution: {exc}") from exc


def random_doubly_stochastic(n: int, k: int, seed) -> SequenceMap:
    """Random convex combination of ``k`` uniformly random n x n permutation matrices."""
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    if n == 1:
        return SequenceMap(np.ones((1, 1)))
    rng = np.random.default_rng(seed)
    weights = rng.dirichlet(np.ones(k))
    m = np.zeros((n, n))
    rows = np.arange(n)
    for w in weights:
        m[rows, rng.permutation(n)] += w
    return SequenceMap(m)


def project_partition(a: RealSequence, p: Partition) -> RealSequence:
    """Replace each entry by the mean over its block."""
    if a.dim != p.n:
        raise DimensionMismatch(f"sequence of length {a.dim}, partition of {p.n}")
    x = a.entries
    out = np.empty_like(x)
    for block in p.blocks:
        idx = list(block)
        out[idx] = np.sum(x[idx]) / len(idx)
    return RealSequence(out)


def cond_exp_partition(omega: DiscreteDistribution, p: Partition) -> DiscreteDistribution:
    return DiscreteDistribution(project_partition(omega, p).entries)


def project_blocks(a: HermitianMatrix, b: BlockStructure) -> HermitianMatrix:
    """Zero every entry outside the diagonal blocks."""
    if a.dim != b.d:
        raise DimensionMismatch(f"matrix of dimension {a.dim}, blocks cover {b.d}")
    m = b.mask()
    cls = DensityOperator if isinstance(a, DensityOperator) else HermitianMatrix
    return cls(np.where(m, a.re, 0.0), np.where(m, a.im, 0.0))


def pinch(rho: DensityOperator, b: BlockStructure) -> DensityOperator:
    out = project_blocks(rho, b)
    return DensityOperator(out.re, out.im)


def conjugate(rho: DensityOperator, u: Unitary) -> DensityOperator:
    """``U rho U^*``."""
    if u.matrix.shape[0] != rho.dim:
        raise DimensionMismatch(f"unitary of dimension {u.matrix.shape[0]}, state of {rho.dim}")
    m = u.matrix @ rho.to_complex() @ u.matrix.conj().T
    m = 0.5 * (m + m.conj().T)
    return DensityOperator(m.real, m.imag)


def permutation_unitary(order: Sequence[int]) -> Unitary:
    """Unitary sending basis vector ``order[i]`` to position ``i``.

    Conjugating by it before :func:`pinch` realizes non-contiguous blocks.
    """
    n = len(order)
    u = np.zeros((n, n))
    u[np.arange(n), list(order)] = 1.0
    return Unitary(u)


def apply_transform(transform: Transform, state):
    """Image of a state; raises NotContractive for a non-contractive SequenceMap."""
    if isinstance(transform, SequenceMap):
        if not isinstance(state, DiscreteDistribution):
            raise KindMismatch("a SequenceMap acts on distributions")
        n1, ninf = induced_norm_1(transform), induced_norm_inf(transform)
        if n1 > 1 + CONTRACTIVE_SLACK or ninf > 1 + CONTRACTIVE_SLACK:
            raise NotContractive(f"induced norms are {n1:.17g} (l1) and {ninf:.17g} (l_inf)")
        return apply_map(transform, state)
    if isinstance(transform, Partition):
        if not isinstance(state, DiscreteDistribution):
            raise KindMismatch("a Partition acts on distributions")
        return cond_exp_partition(state, transform)
    if isinstance(transform, BlockStructure):
        if not isinstance(state, DensityOperator):
            raise KindMismatch("a BlockStructure acts on density operators")
        return pinch(state, transform)
    if isinstance(transform, Unitary):
        if not isinstance(state, DensityOperator):
            raise KindMismatch("a Unitary acts on density operators")
        return conjugate(state, transform)
    raise KindMismatch(f"unknown transform {type(transform).__name__}")


def monotonicity_report(transform: Transform, state) -> MonotonicityReport:
    after = apply_transform(transform, state)
    s0, s1 = spectrum_of(state), spectrum_of(after)
    h0, h1 = entropy_direct(s0), entropy_direct(s1)
    shrank = profile_dominates(build_profile(s0), build_profile(s1))
    return MonotonicityReport(h0, h1, shrank, bool(h1 >= h0 - ENTROPY_SLACK and shrank))
