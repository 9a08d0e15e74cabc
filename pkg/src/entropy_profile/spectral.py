"""Hermitian eigendecomposition by cyclic complex Jacobi rotations.

Rotations are applied in round-robin (tournament) order: each step of a
sweep annihilates ``d // 2`` disjoint off-diagonal pairs at once, and a
sweep visits every pair exactly once.  This is the usual cyclic Jacobi
method with a parallel ordering, so convergence is quadratic as usual.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, StateError

DEFAULT_TOL = 1e-12
DEFAULT_MAX_SWEEPS = 64


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a)
    a.setflags(write=False)
    return a


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Pairings for one sweep; every unordered pair appears exactly once."""
    m = n + (n % 2)
    players = list(range(m))
    rounds = []
    for _ in range(m - 1):
        ps, qs = [], []
        for k in range(m // 2):
            a, b = players[k], players[m - 1 - k]
            if a < n and b < n:
                ps.append(min(a, b))
                qs.append(max(a, b))
        rounds.append((np.array(ps, dtype=int), np.array(qs, dtype=int)))
        players = [players[0]] + [players[-1]] + players[1:-1]
    return rounds


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def jacobi_eigh(a, tol: float = DEFAULT_TOL, max_sweeps: int = DEFAULT_MAX_SWEEPS):
    """Eigenvalues and eigenvectors of a Hermitian array.

    Returns ``(w, v)`` with ``a ≈ v @ diag(w) @ v.conj().T``.  Eigenvalues
    come back in the order the sweeps leave them on the diagonal, unsorted.
    Convergence is declared once the off-diagonal Frobenius mass drops to
    ``tol * max(1, ||a||_F)``.
    """
    a = np.array(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise StateError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    a = 0.5 * (a + a.conj().T)
    threshold = tol * max(1.0, float(np.linalg.norm(a)))
    rounds = _round_robin(n)
    # entries this small cannot keep the off-diagonal mass above threshold
    negligible = max(1e-3 * threshold / max(n, 1), np.finfo(float).tiny * 1e16)

    for _ in range(max_sweeps + 1):
        if _off_norm(a) <= threshold:
            w = np.real(np.diag(a)).copy()
            return w, v
        for ps, qs in rounds:
            apq = a[ps, qs]
            mag = np.abs(apq)
            active = mag > negligible
            if not np.any(active):
                continue
            ps, qs, apq, mag = ps[active], qs[active], apq[active], mag[active]
            phase = apq / mag
            app = np.real(a[ps, ps])
            aqq = np.real(a[qs, qs])
            theta = (aqq - app) / (2.0 * mag)
            with np.errstate(over="ignore"):
                t = np.sign(theta) / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
            t[theta == 0.0] = 1.0
            big = np.abs(theta) > 1e150
            t[big] = 0.5 / theta[big]
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c

            g = np.eye(n, dtype=complex)
            g[ps, ps] = c
            g[qs, qs] = c
            g[ps, qs] = s * phase
            g[qs, ps] = -s * np.conj(phase)

            a = g.conj().T @ a @ g
            a[ps, qs] = 0.0
            a[qs, ps] = 0.0
            a = 0.5 * (a + a.conj().T)
            v = v @ g
    raise NoConvergence(
        f"off-diagonal mass {_off_norm(a):.3e} above {threshold:.3e} after {max_sweeps} sweeps"
    )


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues (or weights) sorted non-increasing."""

    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", _frozen(np.asarray(self.values, dtype=float)))

    def __len__(self):
        return len(self.values)

    @classmethod
    def from_values(cls, values, state: bool = False, tol: float = 1e-9) -> "Spectrum":
        """Sort stably by decreasing value; ties keep their original order.

        With ``state=True`` the values must be a state spectrum (entries
        >= -tol, sum within tol of 1).  Negative entries are clamped to 0
        and the result is not rescaled.
        """
        values = np.asarray(values, dtype=float).ravel()
        order = np.argsort(-values, kind="stable")
        values = values[order]
        if state:
            if values.size == 0:
                from .errors import EmptySpectrum

                raise EmptySpectrum("state spectrum is empty")
            if values[-1] < -tol:
                raise StateError(f"state spectrum has entry {values[-1]:.3e} < -tol")
            if abs(values.sum() - 1.0) > tol:
                raise StateError(f"state spectrum sums to {values.sum():.17g}")
            values = np.maximum(values, 0.0)
        return cls(values)


@dataclass(frozen=True)
class EigenDecomposition:
    spectrum: Spectrum
    basis: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "basis", _frozen(self.basis))

    def reconstruct(self) -> np.ndarray:
        q = self.basis
        return (q * self.spectrum.values) @ q.conj().T


def eigen_hermitian(h, tol: float = DEFAULT_TOL, max_sweeps: int = DEFAULT_MAX_SWEEPS) -> EigenDecomposition:
    """Eigendecomposition of a :class:`HermitianMatrix` (or a complex array).

    The basis columns are permuted to match the non-increasing spectrum.
    """
    a = h.to_complex() if hasattr(h, "to_complex") else np.asarray(h)
    w, v = jacobi_eigh(a, tol=tol, max_sweeps=max_sweeps)
    order = np.argsort(-w, kind="stable")
    return EigenDecomposition(Spectrum(w[order]), v[:, order])


def spectrum_of(state, tol: float = 1e-9) -> Spectrum:
    """Non-increasing weights of a distribution, or eigenvalues of a density."""
    from .states import DensityOperator, DiscreteDistribution

    if isinstance(state, DiscreteDistribution):
        return Spectrum.from_values(state.entries, state=True, tol=tol)
    if isinstance(state, DensityOperator):
        return Spectrum.from_values(eigen_hermitian(state).spectrum.values, state=True, tol=tol)
    raise TypeError(f"expected a state, got {type(state).__name__}")
