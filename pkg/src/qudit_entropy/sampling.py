"""Seeded random inputs for inequality sweeps."""

from __future__ import annotations

import numpy as np

from .matfun import hermitize


def _rng(rng) -> np.random.Generator:
    return rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)


def random_pure_state(dim: int, rng=None) -> np.ndarray:
    """Haar-random projector from a normalized complex Gaussian vector."""
    rng = _rng(rng)
    v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    v /= np.linalg.norm(v)
    return hermitize(np.outer(v, v.conj()))


def random_state(dim: int, rng=None, rank: int | None = None) -> np.ndarray:
    """Density matrix ``G G^dagger / Tr`` with ``G`` a ``dim x rank`` Ginibre matrix.

    ``rank`` defaults to a uniform draw from ``1..dim``, so pure states appear
    with probability ``1/dim``.
    """
    rng = _rng(rng)
    if rank is None:
        rank = int(rng.integers(1, dim + 1))
    g = rng.normal(size=(dim, rank)) + 1j * rng.normal(size=(dim, rank))
    rho = g @ g.conj().T
    return hermitize(rho / np.real(np.trace(rho)))


def random_hermitian(dim: int, rng=None, scale: float = 1.0) -> np.ndarray:
    """Hermitian matrix with real and imaginary parts uniform in ``[-scale, scale]``."""
    rng = _rng(rng)
    a = rng.uniform(-scale, scale, (dim, dim)) + 1j * rng.uniform(-scale, scale, (dim, dim))
    return hermitize(a)


def random_unitary(dim: int, rng=None) -> np.ndarray:
    """Haar unitary from the QR decomposition of a Ginibre matrix."""
    rng = _rng(rng)
    z = (rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def random_probability_vector(n: int, rng=None) -> np.ndarray:
    """Uniform draw from the probability simplex."""
    rng = _rng(rng)
    return rng.dirichlet(np.ones(n))


def random_observable(n: int, rng=None, scale: float = 1.0) -> np.ndarray:
    rng = _rng(rng)
    return rng.uniform(-scale, scale, n)
