"""Mapping arbitrary Hermitian matrices onto density matrices.

A Hermitian ``h`` of size ``N = m * n`` is shifted and normalized,

    rho(x) = (h + x * 1) / (N * x + Tr h),

which is a density matrix whenever ``x`` is at least ``-lambda_min(h)``.  Viewing
``rho(x)`` as an ``m x m`` array of ``n x n`` blocks gives two marginals and a
mutual information that is nonnegative for every Hermitian ``h``.

A 3x3 matrix is handled by zero-padding to 4x4 and shifting only the three
physical levels, so the (2,2) block receives ``x * diag(1, 0)`` instead of
``x * 1``.  The marginal diagonals therefore pick up ``2x`` and ``x`` rather
than ``2x`` and ``2x``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .index_maps import LabelingScheme, matrix_partial_contraction
from .matfun import (
    EIG_CUTOFF,
    as_hermitian,
    eigen_hermitian,
    hermitize,
    matrix_entropy,
)
from .reports import InequalityReport

SHIFT_SLACK = 1e-12


class ShiftTooSmallError(ValueError):
    def __init__(self, x: float, minimum: float):
        self.x = x
        self.minimum = minimum
        super().__init__(f"shift below spectral floor: x={x!r}, need x >= {minimum!r}")


def spectral_floor(h) -> float:
    """Smallest admissible shift, ``-lambda_min(h)``."""
    return float(-eigen_hermitian(h).eigenvalues[0])


def default_shift(h) -> float:
    """Always-admissible shift ``max(0, -lambda_min) + 1``."""
    return max(0.0, spectral_floor(h)) + 1.0


def _check_shift(h, x: float, weight: int, trace: float) -> None:
    floor = spectral_floor(h)
    if x < floor - SHIFT_SLACK or weight * x + trace <= 0:
        raise ShiftTooSmallError(x, floor)


@dataclass(frozen=True)
class LiftedState:
    rho_x: np.ndarray
    x: float
    norm: float
    scheme: LabelingScheme
    h: np.ndarray = field(repr=False)


@dataclass(frozen=True)
class EmbeddedQutrit:
    h3: np.ndarray
    x: float
    rho4: np.ndarray

    @property
    def norm(self) -> float:
        return float(3 * self.x + np.real(np.trace(self.h3)))

    @property
    def scheme(self) -> LabelingScheme:
        return LabelingScheme((2, 2))


def lift_hermitian(h, x: float, scheme: LabelingScheme) -> LiftedState:
    h = as_hermitian(h)
    if scheme.ndim != 2 or scheme.total != h.shape[0]:
        raise ValueError(f"scheme {scheme.factors} does not factor dimension {h.shape[0]}")
    n_levels = h.shape[0]
    trace = float(np.real(np.trace(h)))
    _check_shift(h, x, n_levels, trace)
    norm = n_levels * x + trace
    rho = (h + x * np.eye(n_levels)) / norm
    return LiftedState(rho_x=rho, x=float(x), norm=norm, scheme=scheme, h=h)


def _blocks(h: np.ndarray, scheme: LabelingScheme) -> np.ndarray:
    m, n = scheme.factors
    # blocks[j, k] is the n x n block h^{jk}
    return h.reshape(m, n, m, n).transpose(0, 2, 1, 3)


def lift_marginal_1(ls: LiftedState) -> np.ndarray:
    """``[Tr h^{jk} + n x delta_jk] / (N x + Tr h)`` built from the blocks of ``h``."""
    m, n = ls.scheme.factors
    block_traces = np.trace(_blocks(ls.h, ls.scheme), axis1=2, axis2=3)
    return hermitize((block_traces + n * ls.x * np.eye(m)) / ls.norm)


def lift_marginal_2(ls: LiftedState) -> np.ndarray:
    """``[m x 1_n + sum_k h^{kk}] / (N x + Tr h)``."""
    m, n = ls.scheme.factors
    blocks = _blocks(ls.h, ls.scheme)
    diag_sum = sum(blocks[k, k] for k in range(m))
    return hermitize((m * ls.x * np.eye(n) + diag_sum) / ls.norm)


def mutual_information(ls: LiftedState) -> float:
    """``S(rho(1,x)) + S(rho(2,x)) - S(rho(x))``."""
    return (
        matrix_entropy(lift_marginal_1(ls))
        + matrix_entropy(lift_marginal_2(ls))
        - matrix_entropy(ls.rho_x)
    )


def _tr_a_ln_a_over(a, total: float) -> float:
    vals = eigen_hermitian(hermitize(a)).eigenvalues
    vals = vals[vals > EIG_CUTOFF * total]
    return float(np.sum(vals * np.log(vals / total)))


def mutual_information_unshifted(h, scheme: LabelingScheme) -> float:
    """Mutual information at zero shift, evaluated directly on ``h``.

    For ``h >= 0`` the combination

        Tr h ln(h / Tr h) - Tr A ln(A / Tr h) - Tr B ln(B / Tr h),

    with ``A = [Tr h^{jk}]`` and ``B = sum_k h^{kk}``, equals ``Tr h`` times the
    mutual information of ``rho(0)``; the returned value is divided by ``Tr h``.
    """
    h = as_hermitian(h)
    if scheme.ndim != 2 or scheme.total != h.shape[0]:
        raise ValueError(f"scheme {scheme.factors} does not factor dimension {h.shape[0]}")
    if eigen_hermitian(h).eigenvalues[0] < -1e-10:
        raise ShiftTooSmallError(0.0, spectral_floor(h))
    m, _ = scheme.factors
    total = float(np.real(np.trace(h)))
    blocks = _blocks(h, scheme)
    a = np.trace(blocks, axis1=2, axis2=3)
    b = sum(blocks[k, k] for k in range(m))
    raw = _tr_a_ln_a_over(h, total) - _tr_a_ln_a_over(a, total) - _tr_a_ln_a_over(b, total)
    return raw / total


def embed_qutrit(h3, x: float) -> EmbeddedQutrit:
    """Embed a 3x3 Hermitian matrix as a normalized 4x4 matrix on levels 1..3."""
    h3 = as_hermitian(h3)
    if h3.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {h3.shape}")
    trace = float(np.real(np.trace(h3)))
    _check_shift(h3, x, 3, trace)
    padded = np.zeros((4, 4), dtype=complex)
    padded[:3, :3] = h3 + x * np.eye(3)
    return EmbeddedQutrit(h3=h3, x=float(x), rho4=padded / (3 * x + trace))


def qutrit_marginals(eq: EmbeddedQutrit) -> tuple[np.ndarray, np.ndarray]:
    scheme = eq.scheme
    return (
        hermitize(matrix_partial_contraction(eq.rho4, scheme, 1)),
        hermitize(matrix_partial_contraction(eq.rho4, scheme, 2)),
    )


def qutrit_inequality(h3, x: float) -> InequalityReport:
    eq = embed_qutrit(h3, x)
    r1, r2 = qutrit_marginals(eq)
    joint = matrix_entropy(eq.rho4)
    marginal_sum = matrix_entropy(r1) + matrix_entropy(r2)
    return InequalityReport.from_sides(
        "qutrit-mutual-info",
        lhs=joint,
        rhs=marginal_sum,
        parameters={"x": float(x), "factors": "2,2"},
    )


def lifted_subadditivity(h, x: float, scheme: LabelingScheme) -> InequalityReport:
    ls = lift_hermitian(h, x, scheme)
    s1 = matrix_entropy(lift_marginal_1(ls))
    s2 = matrix_entropy(lift_marginal_2(ls))
    return InequalityReport.from_sides(
        "mutual-information",
        lhs=matrix_entropy(ls.rho_x),
        rhs=s1 + s2,
        parameters={"x": float(x), "factors": str(scheme)},
    )
