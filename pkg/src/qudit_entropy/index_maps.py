"""Relabeling of a single N-level system as a pseudo-bipartite/tripartite one.

A :class:`LabelingScheme` with factors ``(n1, n2[, n3])`` maps the flat level
index ``s = 1..N`` onto tuples in row-major order::

    s - 1 = (j - 1) * n2 + (k - 1)                      # two factors
    s - 1 = ((j - 1) * n2 + (k - 1)) * n3 + (l - 1)     # three factors

Axes and indices are 1-based, matching the usual subsystem numbering.
Marginals of vectors and partial contractions of matrices are taken in this
labeling.  For N = 4 with factors (2, 2) the axis-1 contraction of a matrix is

    [[r11 + r22, r13 + r24],
     [r31 + r42, r33 + r44]]

which is the only index-sum map of this kind that keeps the result Hermitian.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterable

import numpy as np

PROB_TOL = 1e-10
NEG_CLAMP = 1e-12


@dataclass(frozen=True)
class LabelingScheme:
    factors: tuple[int, ...]

    def __post_init__(self):
        factors = tuple(int(f) for f in self.factors)
        if not 1 <= len(factors) <= 3:
            raise ValueError(f"between one and three factors are supported, got {factors}")
        if any(f < 1 for f in factors):
            raise ValueError(f"factors must be positive, got {factors}")
        object.__setattr__(self, "factors", factors)

    @property
    def total(self) -> int:
        return prod(self.factors)

    @property
    def ndim(self) -> int:
        return len(self.factors)

    @classmethod
    def parse(cls, text: str) -> "LabelingScheme":
        """Build a scheme from ``"m,n"`` or ``"n1,n2,n3"``."""
        return cls(tuple(int(part) for part in text.split(",") if part.strip()))

    def __str__(self) -> str:
        return ",".join(str(f) for f in self.factors)


def flat_to_tuple(scheme: LabelingScheme, s: int) -> tuple[int, ...]:
    if not 1 <= s <= scheme.total:
        raise IndexError(f"flat index {s} outside 1..{scheme.total}")
    return tuple(int(i) + 1 for i in np.unravel_index(s - 1, scheme.factors))


def tuple_to_flat(scheme: LabelingScheme, labels: Iterable[int]) -> int:
    labels = tuple(labels)
    if len(labels) != scheme.ndim:
        raise ValueError(f"expected {scheme.ndim} labels, got {labels}")
    for lab, f in zip(labels, scheme.factors):
        if not 1 <= lab <= f:
            raise IndexError(f"label {lab} outside 1..{f}")
    return int(np.ravel_multi_index(tuple(lab - 1 for lab in labels), scheme.factors)) + 1


def as_probability_vector(p, tol: float = PROB_TOL) -> np.ndarray:
    """Validate a probability vector; tiny negative entries are clamped to zero."""
    p = np.asarray(p, dtype=float)
    if p.ndim != 1 or p.size < 1:
        raise ValueError("probability vector must be a nonempty 1-d sequence")
    if not np.all(np.isfinite(p)):
        raise ValueError("probability vector has non-finite entries")
    if p.min() < -NEG_CLAMP:
        raise ValueError(f"negative probability {p.min():.3e}")
    total = p.sum()
    if abs(total - 1.0) > tol:
        raise ValueError(f"probabilities sum to {total!r}, not 1")
    return np.clip(p, 0.0, None)


def _normalize_keep(scheme: LabelingScheme, keep) -> tuple[int, ...]:
    if isinstance(keep, int):
        keep = (keep,)
    keep = tuple(sorted(set(int(k) for k in keep)))
    if not keep or any(not 1 <= k <= scheme.ndim for k in keep):
        raise ValueError(f"unsupported axis set {keep} for scheme {scheme.factors}")
    return keep


def prob_marginal(p, scheme: LabelingScheme, keep) -> np.ndarray:
    """Marginal of ``p`` over every axis not in ``keep``.

    The result is flattened row-major over the kept axes.
    """
    p = as_probability_vector(p)
    if p.size != scheme.total:
        raise ValueError(f"vector of length {p.size} does not fit scheme {scheme.factors}")
    keep = _normalize_keep(scheme, keep)
    drop = tuple(ax - 1 for ax in range(1, scheme.ndim + 1) if ax not in keep)
    return p.reshape(scheme.factors).sum(axis=drop).ravel()


_LETTERS = "abc"
_PRIMED = "ABC"


def matrix_partial_contraction(m, scheme: LabelingScheme, keep) -> np.ndarray:
    """Partial trace of ``m`` over the axes not in ``keep``.

    Keeping axis 1 of a two-factor scheme gives
    ``out[j, j'] = sum_k m[(j, k), (j', k)]``; keeping axis 2 gives
    ``out[k, k'] = sum_j m[(j, k), (j, k')]``.
    """
    m = np.asarray(m, dtype=complex)
    if m.shape != (scheme.total, scheme.total):
        raise ValueError(f"matrix of shape {m.shape} does not fit scheme {scheme.factors}")
    if scheme.ndim < 2:
        raise ValueError("contraction needs a scheme with two or three factors")
    keep = _normalize_keep(scheme, keep)
    if len(keep) == scheme.ndim:
        return m.copy()

    rows = list(_LETTERS[: scheme.ndim])
    cols = list(_PRIMED[: scheme.ndim])
    for ax in range(1, scheme.ndim + 1):
        if ax not in keep:
            cols[ax - 1] = rows[ax - 1]
    out_idx = "".join(rows[k - 1] for k in keep) + "".join(cols[k - 1] for k in keep)
    subscripts = "".join(rows) + "".join(cols) + "->" + out_idx
    t = m.reshape(scheme.factors + scheme.factors)
    dim = prod(scheme.factors[k - 1] for k in keep)
    return np.einsum(subscripts, t).reshape(dim, dim)
