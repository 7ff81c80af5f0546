"""Classical observables treated as probability distributions.

An observable ``f = (f_1, ..., f_N)`` is turned into a distribution by one
scalar shift ``x``,

    F_j = (f_j + x) / (sum_i f_i + N x),

after which every entropic inequality for distributions applies to ``f``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .index_maps import LabelingScheme, as_probability_vector, prob_marginal
from .matfun import SATURATED
from .reports import InequalityReport

ZERO_CUTOFF = 1e-300
CLASSICAL_TOL = 1e-12


class InadmissibleShiftError(ValueError):
    def __init__(self, x: float, minimum: float):
        self.x = x
        self.minimum = minimum
        super().__init__(f"inadmissible shift x={x!r}; need x > {minimum!r}")


@dataclass(frozen=True)
class LiftedDistribution:
    probs: np.ndarray
    x: float
    norm: float  # 1 / (sum f + N x)


def as_observable(f) -> np.ndarray:
    f = np.asarray(f, dtype=float)
    if f.ndim != 1 or f.size < 1:
        raise ValueError("observable must be a nonempty 1-d sequence")
    if not np.all(np.isfinite(f)):
        raise ValueError("observable has non-finite values")
    return f


def moments(f, p, k: int = 1) -> float:
    """``sum_j f_j**k P_j``."""
    f = as_observable(f)
    p = as_probability_vector(p)
    if f.size != p.size:
        raise ValueError(f"length mismatch: {f.size} values, {p.size} probabilities")
    return float(np.sum(f**k * p))


def minimum_shift(f) -> float:
    return float(-np.min(as_observable(f)))


def default_observable_shift(f) -> float:
    """``|f_min| + 1`` when some value is negative, else ``1``."""
    return max(0.0, minimum_shift(f)) + 1.0


def lift_observable(f, x: float) -> LiftedDistribution:
    f = as_observable(f)
    floor = minimum_shift(f)
    shifted = f + x
    denom = float(np.sum(f) + f.size * x)
    negative = floor > 0
    if (negative and x <= floor) or (not negative and x < floor) or denom <= 0:
        raise InadmissibleShiftError(x, floor)
    return LiftedDistribution(probs=shifted / denom, x=float(x), norm=1.0 / denom)


def shannon(p) -> float:
    p = np.asarray(p, dtype=float)
    p = p[p > ZERO_CUTOFF]
    return float(-np.sum(p * np.log(p)))


def shannon_of_observable(ld: LiftedDistribution) -> float:
    return shannon(ld.probs)


def tsallis(p, q: float) -> float:
    if abs(q - 1.0) <= 1e-8:
        raise ValueError(f"q={q!r} is too close to 1; use the Shannon entropy")
    p = np.asarray(p, dtype=float)
    p = p[p > ZERO_CUTOFF]
    return float((np.sum(p**q) - 1.0) / (1.0 - q))


def tsallis_of_observable(ld: LiftedDistribution, q: float) -> float:
    return tsallis(ld.probs, q)


def relative_entropy_distributions(a, b) -> float:
    """``sum_j a_j ln(a_j / b_j)``; :data:`SATURATED` if ``b`` misses support of ``a``."""
    a = as_probability_vector(a)
    b = as_probability_vector(b)
    if a.size != b.size:
        raise ValueError(f"length mismatch: {a.size} vs {b.size}")
    live = a > 0
    if np.any(b[live] <= 0):
        return SATURATED
    return float(np.sum(a[live] * np.log(a[live] / b[live])))


def observable_relative_entropy(p, f, x: float) -> InequalityReport:
    """Nonnegativity of ``D(P || F(x))`` for a distribution and a lifted observable."""
    ld = lift_observable(f, x)
    d = relative_entropy_distributions(p, ld.probs)
    return InequalityReport.from_sides(
        "observable-relative-entropy-classical", lhs=0.0, rhs=d, tol=CLASSICAL_TOL,
        parameters={"x": float(x)},
    )


def subadditivity_of_distribution(p, scheme: LabelingScheme, name: str = "prob-subadditivity",
                                  parameters: dict | None = None) -> InequalityReport:
    """``H(P) <= H(P_1) + H(P_2)`` for the two axis marginals of a two-factor scheme."""
    if scheme.ndim != 2:
        raise ValueError("subadditivity needs a two-factor scheme")
    p = as_probability_vector(p)
    s1 = shannon(prob_marginal(p, scheme, 1))
    s2 = shannon(prob_marginal(p, scheme, 2))
    params = {"factors": str(scheme)}
    params.update(parameters or {})
    return InequalityReport.from_sides(name, lhs=shannon(p), rhs=s1 + s2,
                                       tol=CLASSICAL_TOL, parameters=params)


def observable_subadditivity(f, x: float, scheme: LabelingScheme | None = None) -> InequalityReport:
    """Subadditivity of the lifted observable.

    For four values and the default ``(2, 2)`` scheme the marginals are
    ``(F1+F2, F3+F4)`` and ``(F1+F3, F2+F4)``.
    """
    f = as_observable(f)
    if scheme is None:
        if f.size != 4:
            raise ValueError("a labeling scheme is required unless N = 4")
        scheme = LabelingScheme((2, 2))
    if scheme.total != f.size:
        raise ValueError(f"scheme {scheme.factors} does not factor N={f.size}")
    ld = lift_observable(f, x)
    return subadditivity_of_distribution(ld.probs, scheme, name="observable-subadditivity",
                                         parameters={"x": float(x)})
