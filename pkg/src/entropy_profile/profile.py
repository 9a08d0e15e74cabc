"""The boundary curve F(r) = sum_i max(0, w_i - r) of the separation region.

A pair ``(r1, rinf)`` lies in the region iff ``r1 == 0`` or
``r1 < F(rinf)``.  F is convex, non-increasing and piecewise linear with
kinks at the distinct positive weights; on the piece just below a kink
the r1-vs-rinf slope is minus the number of weights above it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptySpectrum
from .spectral import Spectrum

DOMINANCE_TOL = 1e-12


def eval_F(s: Spectrum, rinf: float) -> float:
    w = s.values if isinstance(s, Spectrum) else np.asarray(s, dtype=float)
    return float(np.sum(np.maximum(w - rinf, 0.0)))


def in_region(s: Spectrum, r1: float, rinf: float) -> bool:
    # boundary points r1 == F(rinf) > 0 are excluded
    return r1 == 0 or r1 < eval_F(s, rinf)


@dataclass(frozen=True)
class EntropyProfile:
    """Breakpoints ``(r1[k], rinf[k])`` and the multiplicity of each segment.

    ``rinf`` runs from ``max(w)`` down to 0 and ``r1`` from 0 up to
    ``sum(w)``; ``multiplicity[k]`` belongs to the segment between
    breakpoints ``k`` and ``k + 1``.
    """

    r1: np.ndarray
    rinf: np.ndarray
    multiplicity: np.ndarray

    def __post_init__(self):
        for name in ("r1", "rinf", "multiplicity"):
            a = np.array(getattr(self, name))
            a.setflags(write=False)
            object.__setattr__(self, name, a)

    @property
    def breakpoints(self) -> list[tuple[float, float]]:
        return [(float(a), float(b)) for a, b in zip(self.r1, self.rinf)]

    @property
    def segments(self) -> list[tuple[float, float, int]]:
        """``(rinf_hi, rinf_lo, n)`` per segment, in order of increasing r1."""
        return [
            (float(self.rinf[k]), float(self.rinf[k + 1]), int(self.multiplicity[k]))
            for k in range(len(self.multiplicity))
        ]

    def __call__(self, rinf):
        """F by linear interpolation between breakpoints; 0 beyond max(w)."""
        return np.interp(rinf, self.rinf[::-1], self.r1[::-1], left=self.r1[-1], right=0.0)


def build_profile(s: Spectrum) -> EntropyProfile:
    w = np.asarray(s.values, dtype=float)
    if w.size == 0:
        raise EmptySpectrum("cannot build a profile from an empty spectrum")
    levels = np.unique(w[w > 0])[::-1]  # distinct positive values, decreasing; exact equality
    if levels.size == 0:
        raise EmptySpectrum("spectrum has no positive weight")
    rinf = np.append(levels, 0.0)
    r1 = np.array([eval_F(s, r) for r in rinf])
    multiplicity = np.array([np.count_nonzero(w > lo) for lo in rinf[1:]], dtype=int)
    return EntropyProfile(r1, rinf, multiplicity)


def profile_dominates(a: EntropyProfile, b: EntropyProfile, tol: float = DOMINANCE_TOL) -> bool:
    """True iff ``F_a >= F_b - tol`` everywhere, i.e. the region of b sits inside that of a.

    Both curves are piecewise linear, so checking the merged breakpoints
    suffices.
    """
    grid = np.union1d(a.rinf, b.rinf)
    return bool(np.all(a(grid) >= b(grid) - tol))
