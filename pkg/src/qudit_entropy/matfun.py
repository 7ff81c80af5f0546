"""Hermitian matrix algebra: spectra, spectral functions and entropies.

Matrices are plain complex ``numpy`` arrays.  All logarithms are natural.
Degenerate eigenvalues need no special care: every quantity computed here is
a spectral function and therefore independent of the basis chosen inside a
degenerate eigenspace.
"""

from __future__ import annotations

import sys
from typing import NamedTuple

import numpy as np

HERMITIAN_TOL = 1e-12
STATE_TOL = 1e-10
EIG_CUTOFF = 1e-14

# Finite stand-in for +infinity when a relative entropy diverges.
SATURATED = sys.float_info.max


class NotHermitianError(ValueError):
    def __init__(self, a: int, b: int, deviation: float):
        self.index_pair = (a, b)
        self.deviation = deviation
        super().__init__(
            f"matrix is not Hermitian: entries ({a}, {b}) and ({b}, {a}) "
            f"differ from conjugates by {deviation:.3e}"
        )


class NotAStateError(ValueError):
    """Raised when a matrix is expected to be a density matrix but is not."""


class Spectrum(NamedTuple):
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_hermitian(m, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Validate ``m`` as a finite square Hermitian matrix and return it as complex."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError(f"expected a nonempty square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    diff = m - m.conj().T
    dev = np.maximum(np.abs(diff.real), np.abs(diff.imag))
    if dev.max() > tol:
        a, b = np.unravel_index(int(np.argmax(dev)), dev.shape)
        raise NotHermitianError(int(a), int(b), float(dev[a, b]))
    return m


def hermitize(m) -> np.ndarray:
    """Symmetrize away rounding noise in a matrix that is Hermitian in exact arithmetic."""
    m = np.asarray(m, dtype=complex)
    return 0.5 * (m + m.conj().T)


def eigen_hermitian(m, tol: float = HERMITIAN_TOL) -> Spectrum:
    """Eigendecomposition with ascending eigenvalues and a fixed phase convention.

    Each eigenvector is rotated so that its first component with modulus above
    ``1e-12`` is real and positive, which makes the result deterministic.
    """
    m = as_hermitian(m, tol)
    vals, vecs = np.linalg.eigh(m)
    for col in range(vecs.shape[1]):
        v = vecs[:, col]
        nz = np.flatnonzero(np.abs(v) > 1e-12)
        if nz.size:
            lead = v[nz[0]]
            vecs[:, col] = v * (abs(lead) / lead)
    return Spectrum(vals, vecs)


def spectral_function(m, func) -> np.ndarray:
    """Return ``U diag(func(lambda)) U^dagger``."""
    vals, vecs = eigen_hermitian(m)
    return (vecs * func(vals)) @ vecs.conj().T


def check_state(rho, tol: float = STATE_TOL) -> np.ndarray:
    """Validate a density matrix and return its eigenvalues."""
    vals = eigen_hermitian(rho).eigenvalues
    if vals[0] < -tol:
        raise NotAStateError(f"not a state: eigenvalue {vals[0]:.3e} is negative")
    tr = float(np.real(np.trace(np.asarray(rho))))
    if abs(tr - 1.0) > tol:
        raise NotAStateError(f"unnormalized: trace is {tr!r}")
    return vals


def shannon_of_eigenvalues(vals, cutoff: float = EIG_CUTOFF) -> float:
    p = np.asarray(vals, dtype=float)
    p = p[p > cutoff]
    return float(-np.sum(p * np.log(p)))


def matrix_entropy(rho) -> float:
    """Von Neumann entropy ``-Tr rho ln rho`` of a density matrix."""
    return shannon_of_eigenvalues(check_state(rho))


def quantum_relative_entropy(rho, sigma) -> float:
    """``Tr rho (ln rho - ln sigma)``.

    Returns :data:`SATURATED` when ``sigma`` has a vanishing eigenvalue on the
    support of ``rho``.
    """
    p = check_state(rho)
    q, b = eigen_hermitian(sigma)
    tr = float(np.real(np.trace(np.asarray(sigma))))
    if abs(tr - 1.0) > STATE_TOL:
        raise NotAStateError(f"unnormalized: trace of sigma is {tr!r}")
    if q[0] < -STATE_TOL:
        raise NotAStateError(f"not a state: sigma eigenvalue {q[0]:.3e} is negative")

    # weight of rho on each eigenvector of sigma
    weights = np.real(np.einsum("ik,ij,jk->k", b.conj(), np.asarray(rho, dtype=complex), b))
    dead = q <= EIG_CUTOFF
    if np.any(weights[dead] > EIG_CUTOFF):
        return SATURATED

    live = p > EIG_CUTOFF
    first = float(np.sum(p[live] * np.log(p[live])))
    second = float(np.sum(weights[~dead] * np.log(q[~dead])))
    return first - second


def matrix_exp_trace(h) -> float:
    """``ln Tr exp(h)``, shifted by the largest eigenvalue to avoid overflow."""
    vals = eigen_hermitian(h).eigenvalues
    top = vals[-1]
    return float(top + np.log(np.sum(np.exp(vals - top))))


def gibbs_state(h) -> np.ndarray:
    """``exp(h) / Tr exp(h)``."""
    vals, vecs = eigen_hermitian(h)
    w = np.exp(vals - vals[-1])
    w /= w.sum()
    return hermitize((vecs * w) @ vecs.conj().T)
