"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run on its own with ``pytest tests/test_acceptance.py -v``.  Every test
asserts the stated tolerance, and the timed criteria also assert their
runtime budget.
"""

import math
import time
from fractions import Fraction

import numpy as np
import pytest

from oracles import loop_contraction, loop_prob_marginal
from qudit_entropy.circuit_sim import (
    UNCERTAINTY_BOUND,
    FrequencyProfile,
    OscillatorState,
    entropic_uncertainty_check,
    integrate_epsilon,
    optical_tomogram,
    quadrature_stats,
)
from qudit_entropy.classical_obs import (
    lift_observable,
    observable_relative_entropy,
    observable_subadditivity,
    relative_entropy_distributions,
    shannon_of_observable,
    subadditivity_of_distribution,
    tsallis_of_observable,
)
from qudit_entropy.index_maps import LabelingScheme, matrix_partial_contraction, prob_marginal
from qudit_entropy.lift import (
    embed_qutrit,
    lift_hermitian,
    lift_marginal_1,
    lift_marginal_2,
    mutual_information,
    mutual_information_unshifted,
    qutrit_inequality,
    qutrit_marginals,
)
from qudit_entropy.matfun import gibbs_state
from qudit_entropy.qudit_inequalities import (
    araki_lieb,
    energy_entropy_bound,
    observable_state_inequality,
    qudit_subadditivity,
    strong_subadditivity,
)
from qudit_entropy.sampling import (
    random_hermitian,
    random_observable,
    random_probability_vector,
    random_pure_state,
    random_state,
)
from qudit_entropy.spin_tomography import (
    RotationAxis,
    default_tomographic_shift,
    tomogram,
    tomographic_relative_entropy,
)

S22 = LabelingScheme((2, 2))
TWO_FACTOR = {4: [(2, 2)], 6: [(2, 3), (3, 2)], 8: [(2, 4), (4, 2)]}


@pytest.fixture
def verdict(capsys):
    def record(number: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\ncriterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail
    return record


def _axis(rng) -> RotationAxis:
    return RotationAxis(rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi))


def test_criterion_01_probability_subadditivity(rng, verdict):
    start = time.perf_counter()
    worst = math.inf
    for _ in range(10_000):
        n = (4, 6, 8)[int(rng.integers(3))]
        p = random_probability_vector(n, rng)
        for factors in TWO_FACTOR[n]:
            worst = min(worst, subadditivity_of_distribution(p, LabelingScheme(factors)).margin)
    elapsed = time.perf_counter() - start
    verdict(1, worst >= -1e-12 and elapsed < 5.0,
            f"min margin {worst:.3e} (>= -1e-12), {elapsed:.2f} s (< 5 s)")


def test_criterion_02_lifted_mutual_information(rng, verdict):
    start = time.perf_counter()
    worst, disagreement = math.inf, 0.0
    for dim, factors in ((4, (2, 2)), (6, (2, 3))):
        scheme = LabelingScheme(factors)
        for _ in range(1000):
            h = random_hermitian(dim, rng)
            x = abs(np.linalg.eigvalsh(h)[0]) + 1
            worst = min(worst, mutual_information(lift_hermitian(h, x, scheme)))
            g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
            h0 = g @ g.conj().T
            direct = mutual_information(lift_hermitian(h0, 0.0, scheme))
            disagreement = max(disagreement, abs(direct - mutual_information_unshifted(h0, scheme)))
    elapsed = time.perf_counter() - start
    verdict(2, worst >= -1e-10 and disagreement <= 1e-10 and elapsed < 10.0,
            f"min I(x) {worst:.3e}, x=0 path gap {disagreement:.1e}, {elapsed:.2f} s (< 10 s)")


def test_criterion_03_embedded_qutrit(rng, verdict):
    formula_gap = 0.0
    for _ in range(1000):
        h = random_hermitian(3, rng)
        x = abs(np.linalg.eigvalsh(h)[0]) + 1
        norm = 3 * x + np.trace(h).real
        r1, r2 = qutrit_marginals(embed_qutrit(h, x))
        e1 = np.array([[h[0, 0] + h[1, 1] + 2 * x, h[0, 2]], [h[2, 0], h[2, 2] + x]]) / norm
        e2 = np.array([[h[0, 0] + h[2, 2] + 2 * x, h[0, 1]], [h[1, 0], h[1, 1] + x]]) / norm
        formula_gap = max(formula_gap, np.abs(r1 - e1).max(), np.abs(r2 - e2).max())
    worst = min(qutrit_inequality(random_state(3, rng), 0.0).margin for _ in range(1000))
    verdict(3, formula_gap <= 1e-12 and worst >= -1e-10,
            f"marginal formula gap {formula_gap:.1e} (<= 1e-12), min margin {worst:.3e}")


def test_criterion_04_classical_observables(rng, verdict):
    worst_rel, worst_sub = math.inf, math.inf
    for _ in range(10_000):
        n, scheme = ((4, S22), (6, LabelingScheme((2, 3))))[int(rng.integers(2))]
        f = random_observable(n, rng, scale=rng.uniform(0.1, 10))
        p = random_probability_vector(n, rng)
        for k in range(-1, 4):
            x = abs(f.min()) + 10.0**k
            worst_rel = min(worst_rel, observable_relative_entropy(p, f, x).margin)
            worst_sub = min(worst_sub, observable_subadditivity(f, x, scheme).margin)
    limit_err = 0.0
    for _ in range(1000):
        n = int(rng.integers(2, 9))
        f = random_observable(n, rng)
        ld = lift_observable(f, abs(f.min()) + 1)
        s = shannon_of_observable(ld)
        for q in (1 - 1e-5, 1 + 1e-5):
            limit_err = max(limit_err, abs(tsallis_of_observable(ld, q) - s))
    verdict(4, worst_rel >= -1e-12 and worst_sub >= -1e-12 and limit_err <= 1e-4,
            f"min D {worst_rel:.3e}, min subadditivity {worst_sub:.3e}, Tsallis gap {limit_err:.1e}")


def test_criterion_05_qudit_subadditivity(rng, verdict):
    worst = min(qudit_subadditivity(random_state(4, rng), S22).margin for _ in range(1000))
    product_max = max(
        abs(qudit_subadditivity(np.kron(random_pure_state(2, rng), random_pure_state(2, rng)), S22).margin)
        for _ in range(100)
    )
    bell = np.array([1, 0, 0, 1]) / math.sqrt(2)
    bell_gap = abs(qudit_subadditivity(np.outer(bell, bell), S22).margin - 2 * math.log(2))
    verdict(5, worst >= -1e-10 and product_max <= 1e-10 and bell_gap <= 1e-10,
            f"min margin {worst:.3e}, product |margin| {product_max:.1e}, Bell gap {bell_gap:.1e}")


def test_criterion_06_strong_subadditivity_araki_lieb(rng, verdict):
    s222 = LabelingScheme((2, 2, 2))
    worst_ssa = min(strong_subadditivity(random_state(8, rng), s222).margin for _ in range(200))
    worst_al = min(araki_lieb(random_state(4, rng), S22).margin for _ in range(1000))
    verdict(6, worst_ssa >= -1e-9 and worst_al >= -1e-10,
            f"min SSA margin {worst_ssa:.3e} (>= -1e-9), min Araki-Lieb {worst_al:.3e}")


def test_criterion_07_observable_and_tomographic(rng, verdict):
    j = Fraction(3, 2)
    worst_state, worst_tomo, shared_gap = math.inf, math.inf, 0.0
    for _ in range(1000):
        rho, f, axis = random_state(4, rng), random_hermitian(4, rng, scale=3), _axis(rng)
        worst_state = min(worst_state, observable_state_inequality(rho, f, None, S22).margin)
        rep = tomographic_relative_entropy(rho, f, j, axis)
        worst_tomo = min(worst_tomo, rep.margin)
        x = default_tomographic_shift(f, j, axis)
        classical = relative_entropy_distributions(tomogram(rho, j, axis).values,
                                                   lift_observable(tomogram(f, j, axis).values, x).probs)
        shared_gap = max(shared_gap, abs(rep.margin - classical))
    verdict(7, worst_state >= -1e-10 and worst_tomo >= -1e-10 and shared_gap <= 1e-14,
            f"min margins {worst_state:.3e} / {worst_tomo:.3e}, shared-path gap {shared_gap:.1e}")


def test_criterion_08_energy_entropy(rng, verdict):
    worst = math.inf
    for _ in range(1000):
        worst = min(worst, energy_entropy_bound(random_state(4, rng), random_hermitian(4, rng, 3)).margin)
    gibbs_gap = 0.0
    for _ in range(100):
        h = random_hermitian(4, rng, 3)
        gibbs_gap = max(gibbs_gap, abs(energy_entropy_bound(gibbs_state(h), h).margin))
    verdict(8, worst >= -1e-10 and gibbs_gap <= 1e-9,
            f"min margin {worst:.3e}, Gibbs |margin| {gibbs_gap:.1e} (<= 1e-9)")


def test_criterion_09_simulator(verdict):
    start = time.perf_counter()
    free = integrate_epsilon(FrequencyProfile.constant(), 2 * math.pi)
    period_gap = abs(free.at(2 * math.pi)[0] - 1)
    sxx_gap = max(abs(quadrature_stats(free, t).sigma_xx - 0.5) for t in free.times)
    mod = integrate_epsilon(FrequencyProfile.sinusoidal(0.1, 2.0), 10.0, n_samples=100)
    wronskian_gap = float(np.abs(mod.wronskian() + 1).max())
    purity_gap = max(abs(quadrature_stats(mod, t).determinant - 0.25) for t in mod.times)
    elapsed = time.perf_counter() - start
    ok = max(period_gap, sxx_gap, wronskian_gap, purity_gap) <= 1e-8 and elapsed < 5.0
    verdict(9, ok, f"period {period_gap:.1e}, sigma_xx {sxx_gap:.1e}, Wronskian {wronskian_gap:.1e}, "
                   f"purity {purity_gap:.1e}, {elapsed:.2f} s (< 5 s)")


def test_criterion_10_entropic_uncertainty(verdict):
    mod = integrate_epsilon(FrequencyProfile.sinusoidal(0.1, 2.0), 10.0)
    thetas = [k * math.pi / 8 for k in range(8)]
    worst = math.inf
    for n in range(6):
        state = OscillatorState.fock(n)
        for t in np.linspace(0.0, 10.0, 11):
            for theta in thetas:
                worst = min(worst, entropic_uncertainty_check(mod, float(t), theta, state).margin)
    free = integrate_epsilon(FrequencyProfile.constant(), 2 * math.pi)
    ground = entropic_uncertainty_check(free, 1.0, 0.3, OscillatorState.ground())
    ground_gap = abs(ground.rhs - 2.1447299)
    norm_gap, moment_gap = 0.0, 0.0
    for n in range(6):
        for t in (0.0, 5.0, 10.0):
            curve = optical_tomogram(mod, t, 0.6, OscillatorState.fock(n))
            norm_gap = max(norm_gap, abs(curve.normalization() - 1))
            moment_gap = max(moment_gap, abs(curve.moment(2) - (2 * n + 1) * curve.variance))
    ok = worst >= -1e-6 and ground_gap <= 1e-6 and norm_gap <= 1e-6 and moment_gap <= 1e-5
    verdict(10, ok, f"min margin {worst:.3e}, ground sum - ln(pi e) {ground_gap:.1e} "
                    f"(bound {UNCERTAINTY_BOUND:.7f}), norm {norm_gap:.1e}, <X^2> {moment_gap:.1e}")


def test_criterion_11_oracle_equivalence(rng, verdict):
    gap = 0.0
    for dim, options in ((4, [(2, 2)]), (6, [(2, 3), (3, 2)]), (8, [(2, 4), (4, 2), (2, 2, 2)])):
        for trial in range(500):
            factors = options[trial % len(options)]
            scheme = LabelingScheme(factors)
            keeps = [(1,), (2,)] if len(factors) == 2 else [(1,), (2,), (3,), (1, 2), (2, 3), (1, 3)]
            p = random_probability_vector(dim, rng)
            h = random_hermitian(dim, rng)
            for keep in keeps:
                gap = max(gap, np.abs(prob_marginal(p, scheme, keep) - loop_prob_marginal(p, factors, keep)).max())
                gap = max(gap, np.abs(matrix_partial_contraction(h, scheme, keep)
                                      - loop_contraction(h, factors, keep)).max())
            if len(factors) == 2:
                ls = lift_hermitian(h, abs(np.linalg.eigvalsh(h)[0]) + 1, scheme)
                gap = max(gap, np.abs(lift_marginal_1(ls) - loop_contraction(ls.rho_x, factors, [1])).max())
                gap = max(gap, np.abs(lift_marginal_2(ls) - loop_contraction(ls.rho_x, factors, [2])).max())
    for _ in range(500):
        h3 = random_hermitian(3, rng)
        eq = embed_qutrit(h3, abs(np.linalg.eigvalsh(h3)[0]) + 1)
        r1, r2 = qutrit_marginals(eq)
        gap = max(gap, np.abs(r1 - loop_contraction(eq.rho4, (2, 2), [1])).max(),
                  np.abs(r2 - loop_contraction(eq.rho4, (2, 2), [2])).max())
    verdict(11, gap <= 1e-14, f"max deviation from index-sum oracles {gap:.1e} (<= 1e-14)")
