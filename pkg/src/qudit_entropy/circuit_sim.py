"""Parametric oscillator model of a superconducting circuit.

Units are hbar = m = omega(0) = 1.  The complex mode function ``eps`` solves

    eps'' + omega(t)**2 eps = 0,    eps(0) = 1,  eps'(0) = i,

and fixes every second moment of the Gaussian ground state:

    sigma_xx = |eps|**2 / 2,  sigma_pp = |eps'|**2 / 2,  sigma_xp = Re(eps conj(eps')) / 2.

The Wronskian ``Im(eps conj(eps'))`` is conserved and equals -1, which is the
same statement as ``sigma_xx sigma_pp - sigma_xp**2 = 1/4``.

Quadrature tomograms are Gaussians with variance
``mu**2 sigma_xx + nu**2 sigma_pp + 2 mu nu sigma_xp`` (optical frame:
``mu, nu = cos(theta), sin(theta)``), multiplied by
``H_n(X / sqrt(2 var))**2 / (2**n n!)`` for the n-th excited state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.integrate import quad, solve_ivp

from .reports import InequalityReport

MAX_FOCK = 12
WINDOW_SIGMAS = 12.0
ENTROPY_TOL = 1e-6
UNCERTAINTY_BOUND = math.log(math.pi * math.e)


class IntegrationError(RuntimeError):
    def __init__(self, message: str, time: float):
        self.time = time
        super().__init__(f"integration failed at t={time!r}: {message}")


@dataclass(frozen=True)
class FrequencyProfile:
    """Squared frequency ``omega(t)**2`` of the oscillator.

    kinds: ``constant`` (1), ``sinusoidal`` (``1 + depth sin(rate t)``), and
    ``sampled`` (linear interpolation of a ``(t, omega**2)`` table).
    """

    kind: str = "constant"
    depth: float = 0.0
    rate: float = 2.0
    table: tuple[tuple[float, ...], tuple[float, ...]] | None = None

    def __post_init__(self):
        if self.kind not in ("constant", "sinusoidal", "sampled"):
            raise ValueError(f"unknown profile kind {self.kind!r}")
        if self.kind == "sampled":
            if self.table is None:
                raise ValueError("sampled profile needs a (t, omega^2) table")
            t, w2 = (np.asarray(c, dtype=float) for c in self.table)
            if t.ndim != 1 or t.shape != w2.shape or t.size < 2:
                raise ValueError("profile table must hold two equal-length columns")
            if np.any(np.diff(t) <= 0) or t[0] > 0:
                raise ValueError("profile times must be ascending and start at or before 0")
            if not np.all(np.isfinite(w2)):
                raise ValueError("profile values must be finite")
        if abs(self.omega_squared(0.0) - 1.0) > 1e-9:
            raise ValueError("omega(0) must equal 1 in oscillator units")

    @classmethod
    def constant(cls) -> "FrequencyProfile":
        return cls("constant")

    @classmethod
    def sinusoidal(cls, depth: float, rate: float) -> "FrequencyProfile":
        return cls("sinusoidal", depth=depth, rate=rate)

    @classmethod
    def sampled(cls, times, omega2) -> "FrequencyProfile":
        return cls("sampled", table=(tuple(map(float, times)), tuple(map(float, omega2))))

    @property
    def span(self) -> float:
        return math.inf if self.table is None else float(self.table[0][-1])

    def omega_squared(self, t: float) -> float:
        if self.kind == "constant":
            return 1.0
        if self.kind == "sinusoidal":
            return 1.0 + self.depth * math.sin(self.rate * t)
        return float(np.interp(t, self.table[0], self.table[1]))


@dataclass(frozen=True)
class EpsilonTrajectory:
    times: np.ndarray
    eps: np.ndarray
    deps: np.ndarray
    dense: Callable[[float], np.ndarray] = field(repr=False, compare=False)

    @property
    def end(self) -> float:
        return float(self.times[-1])

    def at(self, t: float) -> tuple[complex, complex]:
        """``(eps(t), eps'(t))`` from the integrator's continuous extension."""
        if not 0.0 <= t <= self.end + 1e-12:
            raise ValueError(f"t={t!r} outside trajectory range [0, {self.end}]")
        y = self.dense(min(t, self.end))
        return complex(y[0], y[1]), complex(y[2], y[3])

    def wronskian(self) -> np.ndarray:
        return np.imag(self.eps * np.conj(self.deps))


def integrate_epsilon(profile: FrequencyProfile, T: float, tol: float = 1e-10,
                      n_samples: int = 101) -> EpsilonTrajectory:
    """Integrate the mode function on ``[0, T]`` with the DOP853 embedded pair."""
    if T <= 0:
        raise ValueError("T must be positive")
    if not 1e-12 <= tol <= 1e-4:
        raise ValueError(f"tol={tol!r} outside [1e-12, 1e-4]")
    if T > profile.span:
        raise ValueError(f"profile table ends at t={profile.span}, before T={T}")

    def rhs(t, y):
        w2 = profile.omega_squared(t)
        return (y[2], y[3], -w2 * y[0], -w2 * y[1])

    grid = np.linspace(0.0, T, max(int(n_samples), 2))
    sol = solve_ivp(rhs, (0.0, T), [1.0, 0.0, 0.0, 1.0], method="DOP853",
                    rtol=tol, atol=tol, t_eval=grid, dense_output=True)
    if sol.status != 0:
        reached = float(sol.t[-1]) if sol.t.size else 0.0
        raise IntegrationError(sol.message, reached)
    y = sol.y
    return EpsilonTrajectory(times=sol.t, eps=y[0] + 1j * y[1], deps=y[2] + 1j * y[3],
                             dense=sol.sol)


@dataclass(frozen=True)
class QuadratureStats:
    sigma_xx: float
    sigma_pp: float
    sigma_xp: float
    r: float
    t: float

    @property
    def determinant(self) -> float:
        return self.sigma_xx * self.sigma_pp - self.sigma_xp**2


def quadrature_stats(traj: EpsilonTrajectory, t: float) -> QuadratureStats:
    e, de = traj.at(t)
    sxx = abs(e) ** 2 / 2
    spp = abs(de) ** 2 / 2
    sxp = (e * de.conjugate()).real / 2
    return QuadratureStats(sxx, spp, sxp, sxp / math.sqrt(sxx * spp), float(t))


def sr_bound_check(qs: QuadratureStats, tol: float = 1e-9) -> InequalityReport:
    """Schroedinger-Robertson: ``sigma_xx sigma_pp >= 1 / (4 (1 - r**2))``."""
    if abs(qs.r) >= 1:
        raise ValueError(f"|r| = {abs(qs.r)!r} must be below 1")
    bound = 1.0 / (4.0 * (1.0 - qs.r**2))
    return InequalityReport.from_sides("schroedinger-robertson", lhs=bound,
                                       rhs=qs.sigma_xx * qs.sigma_pp, tol=tol,
                                       parameters={"t": qs.t})


@dataclass(frozen=True)
class OscillatorState:
    kind: str = "ground"
    n: int = 0
    alpha: complex = 0j

    def __post_init__(self):
        if self.kind not in ("ground", "fock", "coherent"):
            raise ValueError(f"unknown state kind {self.kind!r}")
        if self.kind == "fock" and not 0 <= self.n <= MAX_FOCK:
            raise ValueError(f"fock level {self.n} outside 0..{MAX_FOCK}")
        if not (math.isfinite(self.alpha.real) and math.isfinite(self.alpha.imag)):
            raise ValueError("coherent amplitude must be finite")

    @classmethod
    def ground(cls) -> "OscillatorState":
        return cls("ground")

    @classmethod
    def fock(cls, n: int) -> "OscillatorState":
        return cls("fock", n=int(n))

    @classmethod
    def coherent(cls, alpha: complex) -> "OscillatorState":
        return cls("coherent", alpha=complex(alpha))

    @classmethod
    def parse(cls, text: str) -> "OscillatorState":
        """``ground``, ``fock:N`` or ``coherent:RE,IM``."""
        kind, _, arg = text.partition(":")
        if kind == "ground":
            return cls.ground()
        if kind == "fock":
            return cls.fock(int(arg))
        if kind == "coherent":
            parts = [float(v) for v in arg.split(",")]
            return cls.coherent(complex(parts[0], parts[1] if len(parts) > 1 else 0.0))
        raise ValueError(f"cannot parse state {text!r}")

    @property
    def level(self) -> int:
        return self.n if self.kind == "fock" else 0

    def __str__(self) -> str:
        if self.kind == "fock":
            return f"fock:{self.n}"
        if self.kind == "coherent":
            return f"coherent:{self.alpha.real!r},{self.alpha.imag!r}"
        return "ground"


def hermite_eval(n: int, y):
    """Physicists' Hermite polynomial by upward recurrence."""
    if not 0 <= n <= MAX_FOCK:
        raise ValueError(f"Hermite degree {n} outside 0..{MAX_FOCK}")
    y = np.asarray(y, dtype=float)
    prev, cur = np.ones_like(y), 2 * y
    if n == 0:
        return prev if prev.ndim else float(prev)
    for k in range(1, n):
        prev, cur = cur, 2 * y * cur - 2 * k * prev
    return cur if cur.ndim else float(cur)


@dataclass(frozen=True)
class TomogramCurve:
    state: OscillatorState
    frame: tuple
    mean: float
    variance: float
    X: np.ndarray = field(repr=False)
    w: np.ndarray = field(repr=False)

    def density(self, X):
        return _density(self.state.level, self.mean, self.variance, X)

    @property
    def window(self) -> tuple[float, float]:
        half = WINDOW_SIGMAS * math.sqrt(self.variance)
        return self.mean - half, self.mean + half

    def _quad(self, func) -> float:
        lo, hi = self.window
        val, err = quad(func, lo, hi, epsabs=1e-11, epsrel=1e-11, limit=400)
        if err > ENTROPY_TOL:
            raise ArithmeticError(f"quadrature did not converge (error estimate {err:.2e})")
        return val

    def normalization(self) -> float:
        return self._quad(self.density)

    def moment(self, k: int) -> float:
        return self._quad(lambda x: x**k * self.density(x))


def _density_scalar(level: int, mean: float, var: float, x: float) -> float:
    z = x - mean
    w = math.exp(-z * z / (2 * var)) / math.sqrt(2 * math.pi * var)
    if level:
        y = z / math.sqrt(2 * var)
        prev, cur = 1.0, 2 * y
        for k in range(1, level):
            prev, cur = cur, 2 * y * cur - 2 * k * prev
        w *= cur * cur / (2**level * math.factorial(level))
    return w


def _density(level: int, mean: float, var: float, X):
    if isinstance(X, float):
        return _density_scalar(level, mean, var, X)
    X = np.asarray(X, dtype=float)
    z = X - mean
    w = np.exp(-z * z / (2 * var)) / math.sqrt(2 * math.pi * var)
    if level:
        h = hermite_eval(level, z / math.sqrt(2 * var))
        w = w * h * h / (2**level * math.factorial(level))
    return w if w.ndim else float(w)


def _frame_moments(traj: EpsilonTrajectory, t: float, mu: float, nu: float,
                   state: OscillatorState) -> tuple[float, float]:
    e, de = traj.at(t)
    sxp = (e * de.conjugate()).real / 2
    var = mu * mu * abs(e) ** 2 / 2 + nu * nu * abs(de) ** 2 / 2 + 2 * mu * nu * sxp
    mean = 0.0
    if state.kind == "coherent":
        mean = math.sqrt(2) * (state.alpha * (mu * e.conjugate() + nu * de.conjugate())).real
    return mean, var


def _curve(state, frame, mean, var, n_points) -> TomogramCurve:
    if var <= 0:
        raise ValueError("quadrature variance must be positive")
    half = WINDOW_SIGMAS * math.sqrt(var)
    X = np.linspace(mean - half, mean + half, n_points)
    return TomogramCurve(state, frame, mean, var, X, _density(state.level, mean, var, X))


def symplectic_tomogram(traj: EpsilonTrajectory, t: float, mu: float, nu: float,
                        state: OscillatorState, n_points: int = 401) -> TomogramCurve:
    if mu == 0 and nu == 0:
        raise ValueError("(mu, nu) = (0, 0) is degenerate")
    mean, var = _frame_moments(traj, t, mu, nu, state)
    return _curve(state, ("symplectic", float(mu), float(nu)), mean, var, n_points)


def optical_tomogram(traj: EpsilonTrajectory, t: float, theta: float,
                     state: OscillatorState, n_points: int = 401) -> TomogramCurve:
    mean, var = _frame_moments(traj, t, math.cos(theta), math.sin(theta), state)
    return _curve(state, ("optical", float(theta)), mean, var, n_points)


def tomogram_entropy(curve: TomogramCurve) -> float:
    """Differential entropy ``-int w ln w dX`` by adaptive quadrature."""
    def integrand(x):
        w = curve.density(x)
        return -w * math.log(w) if w > 0 else 0.0
    return curve._quad(integrand)


def entropic_uncertainty_check(traj: EpsilonTrajectory, t: float, theta: float,
                               state: OscillatorState, tol: float = ENTROPY_TOL) -> InequalityReport:
    """``H(theta) + H(theta + pi/2) >= ln(pi e)``."""
    h1 = tomogram_entropy(optical_tomogram(traj, t, theta, state))
    h2 = tomogram_entropy(optical_tomogram(traj, t, theta + math.pi / 2, state))
    return InequalityReport.from_sides(
        "entropic-uncertainty", lhs=UNCERTAINTY_BOUND, rhs=h1 + h2, tol=tol,
        parameters={"t": float(t), "theta": float(theta), "state": str(state)},
    )
