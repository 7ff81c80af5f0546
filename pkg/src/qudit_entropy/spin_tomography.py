"""Spin tomograms of states and observables.

The rotation attached to a unit vector with polar angle ``theta`` and azimuth
``phi`` is ``u = exp(-i phi J_z) exp(-i theta J_y)`` and the tomogram of a
matrix ``M`` is the diagonal of ``u M u^dagger`` in the ``J_z`` basis ordered
``m = j, j-1, ..., -j``.  Another parametrization of ``u`` would change the
tomogram values pointwise but not the sign of any relative-entropy margin.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .classical_obs import lift_observable, relative_entropy_distributions
from .matfun import as_hermitian, check_state, eigen_hermitian, NotAStateError
from .reports import InequalityReport

TOMOGRAM_TOL = 1e-10


@dataclass(frozen=True)
class RotationAxis:
    theta: float = 0.0
    phi: float = 0.0

    def __post_init__(self):
        if not 0.0 <= self.theta <= math.pi:
            raise ValueError(f"theta={self.theta!r} outside [0, pi]")
        if not 0.0 <= self.phi < 2 * math.pi:
            raise ValueError(f"phi={self.phi!r} outside [0, 2 pi)")

    @classmethod
    def wrapped(cls, theta: float, phi: float) -> "RotationAxis":
        return cls(theta, phi % (2 * math.pi))

    @property
    def vector(self) -> np.ndarray:
        st = math.sin(self.theta)
        return np.array([st * math.cos(self.phi), st * math.sin(self.phi), math.cos(self.theta)])


@dataclass(frozen=True)
class Tomogram:
    values: np.ndarray
    axis: RotationAxis
    kind: str  # "state" or "observable"


def spin_dimension(j) -> int:
    two_j = Fraction(j) * 2
    if two_j.denominator != 1 or two_j < 0:
        raise ValueError(f"j={j!r} is not a nonnegative half-integer")
    return int(two_j) + 1


def angular_momentum_matrices(j) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """``(J_x, J_y, J_z)`` in the basis ``m = j, ..., -j``."""
    dim = spin_dimension(j)
    jf = float(Fraction(j))
    m = jf - np.arange(dim)
    # J_+ |m> = sqrt(j(j+1) - m(m+1)) |m+1>, and |m+1> sits one row above |m>
    raise_amp = np.sqrt(jf * (jf + 1) - m[1:] * (m[1:] + 1))
    j_plus = np.diag(raise_amp, k=1).astype(complex)
    j_minus = j_plus.conj().T
    jx = (j_plus + j_minus) / 2
    jy = (j_plus - j_minus) / 2j
    jz = np.diag(m).astype(complex)
    return jx, jy, jz


def rotation_unitary(j, axis: RotationAxis) -> np.ndarray:
    _, jy, jz = angular_momentum_matrices(j)
    vals, vecs = eigen_hermitian(jy)
    about_y = (vecs * np.exp(-1j * axis.theta * vals)) @ vecs.conj().T
    about_z = np.exp(-1j * axis.phi * np.real(np.diag(jz)))
    return about_z[:, None] * about_y


def tomogram(mat, j, axis: RotationAxis) -> Tomogram:
    mat = as_hermitian(mat)
    dim = spin_dimension(j)
    if mat.shape[0] != dim:
        raise ValueError(f"matrix dimension {mat.shape[0]} does not match 2j+1={dim}")
    u = rotation_unitary(j, axis)
    values = np.real(np.einsum("ma,ab,mb->m", u, mat, u.conj()))
    try:
        check_state(mat, TOMOGRAM_TOL)
        kind = "state"
    except NotAStateError:
        kind = "observable"
    return Tomogram(values=values, axis=axis, kind=kind)


def default_tomographic_shift(f, j, axis: RotationAxis) -> float:
    """``|min_m w_f(m)| + 1``."""
    return abs(float(np.min(tomogram(f, j, axis).values))) + 1.0


def tomographic_relative_entropy(rho, f, j, axis: RotationAxis, x: float | None = None) -> InequalityReport:
    """Relative entropy of the state tomogram against the shifted observable tomogram.

    The observable tomogram is lifted exactly like a classical observable, with
    the normalization taken at this axis.
    """
    w_rho = tomogram(rho, j, axis)
    if w_rho.kind != "state":
        raise NotAStateError("not a state: rho tomogram is not a probability vector")
    w_f = tomogram(f, j, axis)
    if x is None:
        x = abs(float(np.min(w_f.values))) + 1.0
    lifted = lift_observable(w_f.values, x)
    d = relative_entropy_distributions(w_rho.values, lifted.probs)
    return InequalityReport.from_sides(
        "tomographic-relative-entropy", lhs=0.0, rhs=d,
        parameters={"x": float(x), "j": str(Fraction(j)), "theta": axis.theta, "phi": axis.phi},
    )
