"""Entropic inequalities for a single qudit seen through a labeling scheme."""

from __future__ import annotations

import numpy as np

from .index_maps import LabelingScheme, matrix_partial_contraction
from .matfun import (
    as_hermitian,
    check_state,
    eigen_hermitian,
    gibbs_state,
    hermitize,
    matrix_entropy,
    matrix_exp_trace,
    quantum_relative_entropy,
)
from .reports import InequalityReport

SSA_TOL = 1e-9


def _state(rho, scheme: LabelingScheme | None = None) -> np.ndarray:
    rho = as_hermitian(rho)
    check_state(rho)
    if scheme is not None and scheme.total != rho.shape[0]:
        raise ValueError(f"scheme {scheme.factors} does not factor dimension {rho.shape[0]}")
    return rho


def _reduced(rho, scheme: LabelingScheme, keep) -> np.ndarray:
    return hermitize(matrix_partial_contraction(rho, scheme, keep))


def _two_factor(scheme: LabelingScheme) -> None:
    if scheme.ndim != 2:
        raise ValueError(f"expected a two-factor scheme, got {scheme.factors}")


def marginal_entropies(rho, scheme: LabelingScheme) -> tuple[float, float, float]:
    """``(S(rho), S(rho(1)), S(rho(2)))`` for a two-factor scheme."""
    rho = _state(rho, scheme)
    _two_factor(scheme)
    return (
        matrix_entropy(rho),
        matrix_entropy(_reduced(rho, scheme, 1)),
        matrix_entropy(_reduced(rho, scheme, 2)),
    )


def qudit_subadditivity(rho, scheme: LabelingScheme) -> InequalityReport:
    s, s1, s2 = marginal_entropies(rho, scheme)
    return InequalityReport.from_sides("subadditivity", lhs=s, rhs=s1 + s2,
                                       parameters={"factors": str(scheme)})


def araki_lieb(rho, scheme: LabelingScheme) -> InequalityReport:
    s, s1, s2 = marginal_entropies(rho, scheme)
    return InequalityReport.from_sides("araki-lieb", lhs=abs(s1 - s2), rhs=s,
                                       parameters={"factors": str(scheme)})


def strong_subadditivity(rho, scheme: LabelingScheme) -> InequalityReport:
    """``S(rho) + S(rho_2) <= S(rho_12) + S(rho_23)`` in a three-factor labeling."""
    if scheme.ndim != 3:
        raise ValueError(f"strong subadditivity needs a three-factor scheme, got {scheme.factors}")
    rho = _state(rho, scheme)
    s = matrix_entropy(rho)
    s12 = matrix_entropy(_reduced(rho, scheme, (1, 2)))
    s23 = matrix_entropy(_reduced(rho, scheme, (2, 3)))
    s2 = matrix_entropy(_reduced(rho, scheme, 2))
    return InequalityReport.from_sides("strong-subadditivity", lhs=s + s2, rhs=s12 + s23,
                                       tol=SSA_TOL, parameters={"factors": str(scheme)})


def observable_marginal(f, scheme: LabelingScheme) -> np.ndarray:
    f = as_hermitian(f)
    _two_factor(scheme)
    if scheme.total != f.shape[0]:
        raise ValueError(f"scheme {scheme.factors} does not factor dimension {f.shape[0]}")
    return _reduced(f, scheme, 1)


def default_observable_state_shift(f, scheme: LabelingScheme) -> float:
    """``2 |lambda_min(f(1))| + 1``."""
    lam = eigen_hermitian(observable_marginal(f, scheme)).eigenvalues[0]
    return 2 * abs(float(lam)) + 1.0


def lifted_observable_marginal(f, x: float, scheme: LabelingScheme) -> np.ndarray:
    """``(f(1) + x 1) / (Tr f + m x)`` with ``f(1)`` the axis-1 contraction of ``f``."""
    f1 = observable_marginal(f, scheme)
    m = scheme.factors[0]
    lam = float(eigen_hermitian(f1).eigenvalues[0])
    if x <= -lam:
        raise ValueError(f"shift below positivity floor of f(1): x={x!r}, need x > {-lam!r}")
    return hermitize((f1 + x * np.eye(m)) / (np.real(np.trace(f1)) + m * x))


def observable_state_inequality(rho, f, x: float | None, scheme: LabelingScheme) -> InequalityReport:
    """``D(rho(1) || (f(1) + x 1) / (Tr f + m x)) >= 0``."""
    rho = _state(rho, scheme)
    _two_factor(scheme)
    if x is None:
        x = default_observable_state_shift(f, scheme)
    sigma = lifted_observable_marginal(f, x, scheme)
    d = quantum_relative_entropy(_reduced(rho, scheme, 1), sigma)
    return InequalityReport.from_sides("observable-relative-entropy", lhs=0.0, rhs=d,
                                       parameters={"x": float(x), "factors": str(scheme)})


def energy_entropy_bound(rho, h) -> InequalityReport:
    """``Tr(rho h) + S(rho) <= ln Tr exp(h)``; equality at the Gibbs state."""
    rho = _state(rho)
    h = as_hermitian(h)
    if h.shape != rho.shape:
        raise ValueError(f"dimension mismatch: rho {rho.shape}, h {h.shape}")
    energy = float(np.real(np.trace(rho @ h)))
    return InequalityReport.from_sides("energy-entropy", lhs=energy + matrix_entropy(rho),
                                       rhs=matrix_exp_trace(h))


def gibbs_relative_entropy(rho, h) -> float:
    """``D(rho || exp(h)/Z)``, equal to the energy-entropy margin."""
    return quantum_relative_entropy(rho, gibbs_state(h))
