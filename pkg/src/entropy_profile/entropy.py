"""Entropy three ways: the direct sum, the closed-form boundary integral,
and a trapezoid quadrature of the same integral.

Along the boundary curve r1 increases as rinf decreases, so on a segment
with multiplicity n we have ``dr1 = -n drinf``.  Integrating ``-ln(rinf)``
against dr1 over the whole curve gives entropy + 1.
"""

from __future__ import annotations

import math

import numpy as np

from .profile import EntropyProfile
from .spectral import Spectrum


def _xlogx(x: float) -> float:
    return x * math.log(x) if x > 0 else 0.0


def entropy_direct(s: Spectrum) -> float:
    w = np.asarray(s.values, dtype=float)
    w = w[w > 0]
    return float(-np.sum(w * np.log(w))) + 0.0


def segment_contribution(hi: float, lo: float, n: int, r1_lo: float, r1_hi: float) -> float:
    """Integral of -ln(rinf) dr1 across one segment, from rinf=hi down to rinf=lo."""
    return n * (_xlogx(lo) - _xlogx(hi)) + (r1_hi - r1_lo)


def entropy_boundary(p: EntropyProfile) -> float:
    total = 0.0
    for k, (hi, lo, n) in enumerate(p.segments):
        total += segment_contribution(hi, lo, n, float(p.r1[k]), float(p.r1[k + 1]))
    return total - 1.0


def entropy_quadrature(p: EntropyProfile, steps: int = 100_000) -> float:
    """Trapezoid rule in r1 on every segment but the last.

    ``steps`` is the number of r1 subintervals per unit length, spread over
    the segments in proportion to their r1 extent (at least one each).  The
    last segment ends at rinf = 0 where the log diverges; it is integrated
    exactly with the antiderivative ``r ln r - r``.
    """
    if steps < 2:
        raise ValueError("steps must be >= 2")
    segs = p.segments
    total = 0.0
    for k, (hi, lo, n) in enumerate(segs[:-1]):
        a, b = float(p.r1[k]), float(p.r1[k + 1])
        m = max(1, math.ceil(steps * (b - a)))
        x = np.linspace(a, b, m + 1)
        rinf = hi - (x - a) / n
        rinf[-1] = lo
        f = -np.log(rinf)
        total += float(np.sum(0.5 * (f[1:] + f[:-1]) * np.diff(x)))
    hi, lo, n = segs[-1]
    # n * int_lo^hi ln(r) dr, with lo == 0
    total += n * ((hi - _xlogx(hi)) - (lo - _xlogx(lo)))
    return total - 1.0
