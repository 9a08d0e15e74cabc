"""Finite-dimensional elements of the trace-class / l1 spaces and their states.

Sequences are real 1-d arrays; Hermitian matrices keep real and imaginary
planes separately.  Distributions and density operators are the same
types with extra validation, so every norm and pairing accepts them too.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .errors import (
    DimensionMismatch,
    KindMismatch,
    NegativeWeight,
    NonFinite,
    NotHermitian,
    NotPositive,
    StateError,
    SumNotOne,
    TraceNotOne,
)
from .spectral import eigen_hermitian

DEFAULT_TOL = 1e-9


def _frozen(a) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class RealSequence:
    entries: np.ndarray

    def __post_init__(self):
        entries = _frozen(self.entries)
        if entries.ndim != 1 or entries.size < 1:
            raise StateError(f"sequence must be 1-d and nonempty, got shape {entries.shape}")
        if not np.all(np.isfinite(entries)):
            raise NonFinite("sequence has non-finite entries")
        object.__setattr__(self, "entries", entries)

    @property
    def dim(self) -> int:
        return self.entries.size

    def __len__(self):
        return self.entries.size


@dataclass(frozen=True)
class DiscreteDistribution(RealSequence):
    """Nonnegative weights summing to one; build with :func:`make_distribution`."""

    @property
    def weights(self) -> np.ndarray:
        return self.entries


@dataclass(frozen=True)
class HermitianMatrix:
    re: np.ndarray
    im: np.ndarray

    def __post_init__(self):
        re, im = _frozen(self.re), _frozen(self.im)
        if re.ndim != 2 or re.shape[0] != re.shape[1] or re.shape[0] < 1:
            raise StateError(f"matrix must be square and nonempty, got shape {re.shape}")
        if im.shape != re.shape:
            raise DimensionMismatch(f"real part {re.shape} vs imaginary part {im.shape}")
        if not (np.all(np.isfinite(re)) and np.all(np.isfinite(im))):
            raise NonFinite("matrix has non-finite entries")
        object.__setattr__(self, "re", re)
        object.__setattr__(self, "im", im)

    @classmethod
    def from_complex(cls, a, tol: Optional[float] = None):
        """Wrap a complex array; with ``tol`` set, check Hermiticity first."""
        a = np.asarray(a, dtype=complex)
        out = cls(a.real, a.imag)
        if tol is not None:
            _check_hermitian(out, tol)
        return out

    @property
    def dim(self) -> int:
        return self.re.shape[0]

    def to_complex(self) -> np.ndarray:
        return self.re + 1j * self.im


@dataclass(frozen=True)
class DensityOperator(HermitianMatrix):
    """Positive semidefinite, trace one; build with :func:`make_density`."""


Element = Union[RealSequence, HermitianMatrix]


@dataclass(frozen=True)
class JordanParts:
    alpha_plus: float
    alpha_minus: float
    omega_plus: Optional[Element]
    omega_minus: Optional[Element]

    def reconstruct(self) -> np.ndarray:
        """``alpha_plus*omega_plus - alpha_minus*omega_minus`` as a raw array."""
        parts = [
            alpha * _raw(omega)
            for alpha, omega in ((self.alpha_plus, self.omega_plus), (-self.alpha_minus, self.omega_minus))
            if omega is not None
        ]
        return sum(parts[1:], parts[0]) if parts else None


def _raw(a: Element) -> np.ndarray:
    return a.entries if isinstance(a, RealSequence) else a.to_complex()


def _check_hermitian(h: HermitianMatrix, tol: float) -> None:
    a = h.to_complex()
    err = np.max(np.abs(a - a.conj().T))
    if err > tol:
        raise NotHermitian(f"|A - A^H| reaches {err:.3e} > {tol:.1e}")


def make_distribution(raw, tol: float = DEFAULT_TOL) -> DiscreteDistribution:
    """Validate ``raw`` as a probability vector.  Nothing is renormalized."""
    w = np.asarray(raw, dtype=float)
    if not np.all(np.isfinite(w)):
        raise NonFinite("weights must be finite")
    if w.ndim != 1 or w.size < 1:
        raise StateError("weights must be a nonempty list")
    if np.min(w) < -tol:
        raise NegativeWeight(f"weight {np.min(w):.17g} is negative")
    total = float(np.sum(w))
    if abs(total - 1.0) > tol:
        raise SumNotOne(f"weights sum to {total:.17g}")
    return DiscreteDistribution(w)


def make_density(re, im=None, tol: float = DEFAULT_TOL) -> DensityOperator:
    re = np.asarray(re, dtype=float)
    im = np.zeros_like(re) if im is None else np.asarray(im, dtype=float)
    if not (np.all(np.isfinite(re)) and np.all(np.isfinite(im))):
        raise NonFinite("matrix entries must be finite")
    rho = DensityOperator(re, im)
    _check_hermitian(rho, tol)
    trace = float(np.trace(re))
    if abs(trace - 1.0) > tol:
        raise TraceNotOne(f"trace is {trace:.17g}")
    lowest = float(eigen_hermitian(rho).spectrum.values[-1])
    if lowest < -tol:
        raise NotPositive(f"eigenvalue {lowest:.17g} is negative")
    return rho


def _eigenvalues(a: HermitianMatrix) -> np.ndarray:
    return eigen_hermitian(a).spectrum.values


def norm_one(a: Element) -> float:
    """l1 norm of a sequence, trace norm of a Hermitian matrix."""
    if isinstance(a, RealSequence):
        return float(np.sum(np.abs(a.entries)))
    if isinstance(a, HermitianMatrix):
        return float(np.sum(np.abs(_eigenvalues(a))))
    raise KindMismatch(f"not an element: {type(a).__name__}")


def norm_inf(a: Element) -> float:
    """Sup norm of a sequence, operator norm of a Hermitian matrix."""
    if isinstance(a, RealSequence):
        return float(np.max(np.abs(a.entries)))
    if isinstance(a, HermitianMatrix):
        return float(np.max(np.abs(_eigenvalues(a))))
    raise KindMismatch(f"not an element: {type(a).__name__}")


def pairing(a: Element, b: Element) -> float:
    """``sum(a_i b_i)`` for sequences, ``tr(ab)`` for Hermitian matrices."""
    if isinstance(a, RealSequence) and isinstance(b, RealSequence):
        if a.dim != b.dim:
            raise DimensionMismatch(f"{a.dim} vs {b.dim}")
        return float(np.dot(a.entries, b.entries))
    if isinstance(a, HermitianMatrix) and isinstance(b, HermitianMatrix):
        if a.dim != b.dim:
            raise DimensionMismatch(f"{a.dim} vs {b.dim}")
        # tr(AB) = sum_ij A_ij B_ji; real for Hermitian A, B
        return float(np.sum(a.re * b.re.T) - np.sum(a.im * b.im.T))
    raise KindMismatch(f"cannot pair {type(a).__name__} with {type(b).__name__}")


def jordan_decompose(a: Element, tol: float = DEFAULT_TOL) -> JordanParts:
    """Split ``a`` into ``alpha_plus*omega_plus - alpha_minus*omega_minus``.

    Sequences split entrywise, matrices spectrally.  Eigenvalues in
    ``[-tol, tol]`` go to the positive part.  A zero part is returned as
    ``alpha = 0`` with its state absent.
    """
    if isinstance(a, RealSequence):
        x = a.entries
        pos, neg = np.maximum(x, 0.0), np.maximum(-x, 0.0)
        ap, am = float(pos.sum()), float(neg.sum())
        wp = DiscreteDistribution(pos / ap) if ap > 0 else None
        wm = DiscreteDistribution(neg / am) if am > 0 else None
        return JordanParts(ap, am, wp, wm)
    if isinstance(a, HermitianMatrix):
        eig = eigen_hermitian(a)
        lam, q = eig.spectrum.values, eig.basis
        plus = lam >= -tol
        ap = float(np.sum(np.abs(lam[plus])))
        am = float(np.sum(np.abs(lam[~plus])))

        def _state(mask, alpha):
            if alpha <= 0:
                return None
            qm = q[:, mask]
            m = (qm * np.abs(lam[mask])) @ qm.conj().T / alpha
            m = 0.5 * (m + m.conj().T)
            return DensityOperator(m.real, m.imag)

        return JordanParts(ap, am, _state(plus, ap), _state(~plus, am))
    raise KindMismatch(f"not an element: {type(a).__name__}")


def sequence(entries) -> RealSequence:
    return RealSequence(np.asarray(entries, dtype=float))


def hermitian(re, im=None, tol: float = DEFAULT_TOL) -> HermitianMatrix:
    re = np.asarray(re, dtype=float)
    h = HermitianMatrix(re, np.zeros_like(re) if im is None else np.asarray(im, dtype=float))
    _check_hermitian(h, tol)
    return h
