"""Command-line front end.

Verbs:
    check           evaluate inequalities on matrix/vector records
    simulate        integrate the parametric oscillator and emit curves
    random          generate seeded random inputs
    report-summary  aggregate a report stream

Reports are written one JSON object per line.  Exit status is 0 when every
report passes, 1 when some margin falls below its tolerance and 2 when an
input is invalid.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from collections import defaultdict
from fractions import Fraction
from pathlib import Path
from typing import Iterator

import numpy as np

from . import circuit_sim as cs
from . import classical_obs as co
from . import lift
from . import qudit_inequalities as qi
from . import sampling
from .index_maps import LabelingScheme
from .matfun import eigen_hermitian
from .matrix_io import Record, matrix_record, read_records, vector_record, write_records
from .reports import InequalityReport
from .spin_tomography import RotationAxis, angular_momentum_matrices, tomographic_relative_entropy

EXIT_OK, EXIT_FAIL, EXIT_INVALID = 0, 1, 2

MATRIX_CHECKS = (
    "subadditivity",
    "araki-lieb",
    "strong-subadditivity",
    "mutual-information",
    "qutrit-mutual-info",
    "observable-relative-entropy",
    "tomographic-relative-entropy",
    "energy-entropy",
)
VECTOR_CHECKS = ("prob-subadditivity", "observable-subadditivity")
ALL_MATRIX = (
    "subadditivity",
    "araki-lieb",
    "observable-relative-entropy",
    "tomographic-relative-entropy",
    "energy-entropy",
)


def _open_out(path: str | None):
    if path in (None, "-"):
        return sys.stdout
    Path(path).parent.mkdir(parents=True, exist_ok=True)
    return open(path, "w", newline="")


def _parse_x(text: str) -> float | None:
    return None if text == "auto" else float(text)


def _default_scheme(dim: int) -> LabelingScheme:
    if dim % 2:
        raise ValueError(f"no default labeling for odd dimension {dim}; pass --factors")
    return LabelingScheme((2, dim // 2))


def _spin_observable(dim: int) -> np.ndarray:
    return angular_momentum_matrices(Fraction(dim - 1, 2))[2]


def _check_matrix(name: str, mat: np.ndarray, args, observable) -> InequalityReport:
    dim = mat.shape[0]
    scheme = args.factors
    if name == "qutrit-mutual-info":
        x = args.x if args.x is not None else lift.default_shift(mat)
        return lift.qutrit_inequality(mat, x)
    if name == "strong-subadditivity":
        if scheme is None or scheme.ndim != 3:
            raise ValueError("strong-subadditivity needs --factors n1,n2,n3")
        return qi.strong_subadditivity(mat, scheme)
    if scheme is None:
        scheme = _default_scheme(dim)
    f = observable if observable is not None else _spin_observable(dim)
    if f.shape != mat.shape:
        raise ValueError(f"observable dimension {f.shape[0]} does not match input {dim}")
    if name == "subadditivity":
        return qi.qudit_subadditivity(mat, scheme)
    if name == "araki-lieb":
        return qi.araki_lieb(mat, scheme)
    if name == "mutual-information":
        x = args.x if args.x is not None else lift.default_shift(mat)
        return lift.lifted_subadditivity(mat, x, scheme)
    if name == "observable-relative-entropy":
        return qi.observable_state_inequality(mat, f, args.x, scheme)
    if name == "tomographic-relative-entropy":
        axis = RotationAxis.wrapped(args.theta, args.phi)
        return tomographic_relative_entropy(mat, f, Fraction(dim - 1, 2), axis, args.x)
    if name == "energy-entropy":
        return qi.energy_entropy_bound(mat, f)
    raise ValueError(f"{name} does not apply to matrix input")


def _check_vector(name: str, vec: np.ndarray, args) -> InequalityReport:
    scheme = args.factors or _default_scheme(vec.size)
    if name == "prob-subadditivity":
        return co.subadditivity_of_distribution(vec, scheme)
    if name == "observable-subadditivity":
        x = args.x if args.x is not None else co.default_observable_shift(vec)
        return co.observable_subadditivity(vec, x, scheme)
    raise ValueError(f"{name} does not apply to vector input")


def _names_for(record: Record, inequality: str) -> tuple[str, ...]:
    if inequality != "all":
        return (inequality,)
    if record.kind == "matrix":
        return ALL_MATRIX
    return VECTOR_CHECKS if abs(record.data.sum() - 1) <= 1e-10 and record.data.min() >= 0 \
        else ("observable-subadditivity",)


def run_check(args) -> int:
    observable = None
    if args.observable:
        observable = next(iter(read_records(args.observable, args.hermitian_tol))).data
    status = EXIT_OK
    out = _open_out(args.out)
    try:
        for index, record in enumerate(read_records(args.input, args.hermitian_tol)):
            for name in _names_for(record, args.inequality):
                try:
                    if record.kind == "matrix":
                        rep = _check_matrix(name, record.data, args, observable)
                    else:
                        rep = _check_vector(name, record.data, args)
                except ValueError as exc:
                    out.write(json.dumps({"name": name, "input": index, "error": str(exc),
                                          "pass": False}) + "\n")
                    status = EXIT_INVALID
                    continue
                if args.tol is not None:
                    rep.tol = args.tol
                    rep.passed = rep.margin >= -args.tol
                rep.parameters.update({"input": index, "seed": args.seed})
                out.write(rep.to_json() + "\n")
                if not rep.passed and status == EXIT_OK:
                    status = EXIT_FAIL
    finally:
        if out is not sys.stdout:
            out.close()
    return status


def _load_profile(args) -> cs.FrequencyProfile:
    if args.profile == "constant":
        return cs.FrequencyProfile.constant()
    if args.profile == "sinusoidal":
        return cs.FrequencyProfile.sinusoidal(args.depth, args.rate)
    table = np.loadtxt(args.profile, delimiter=",", ndmin=2)
    return cs.FrequencyProfile.sampled(table[:, 0], table[:, 1])


def _write_csv(path: Path, header, rows) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def _simulation_reports(traj, args, state) -> Iterator[InequalityReport]:
    for t in traj.times:
        yield cs.sr_bound_check(cs.quadrature_stats(traj, float(t)), tol=args.tol or 1e-9)
    thetas = [k * math.pi / args.n_theta for k in range(args.n_theta)]
    times = np.linspace(0.0, traj.end, args.n_times)
    for t in times:
        for theta in thetas:
            yield cs.entropic_uncertainty_check(traj, float(t), theta, state, tol=args.tol or 1e-6)


def run_simulate(args) -> int:
    try:
        profile = _load_profile(args)
        state = cs.OscillatorState.parse(args.state)
        traj = cs.integrate_epsilon(profile, args.T, args.ode_tol, args.samples)
    except (cs.IntegrationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID

    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    stats = [cs.quadrature_stats(traj, float(t)) for t in traj.times]
    _write_csv(outdir / "stats.csv", ["t", "sigma_xx", "sigma_pp", "sigma_xp", "r"],
               [(s.t, s.sigma_xx, s.sigma_pp, s.sigma_xp, s.r) for s in stats])

    t_tomo = traj.end if args.t is None else args.t
    curve = cs.optical_tomogram(traj, t_tomo, args.theta, state, n_points=args.points)
    _write_csv(outdir / "tomogram.csv", ["X", "w"], zip(curve.X, curve.w))

    thetas = np.linspace(0.0, math.pi, args.points_theta)
    rows = []
    for theta in thetas:
        h = cs.tomogram_entropy(cs.optical_tomogram(traj, t_tomo, theta, state))
        h_perp = cs.tomogram_entropy(cs.optical_tomogram(traj, t_tomo, theta + math.pi / 2, state))
        rows.append((theta, h + h_perp, cs.UNCERTAINTY_BOUND))
    _write_csv(outdir / "entropy.csv", ["theta", "entropy_sum", "bound"], rows)

    status = EXIT_OK
    sink = _open_out(args.report)
    try:
        for rep in _simulation_reports(traj, args, state):
            rep.parameters["seed"] = args.seed
            sink.write(rep.to_json() + "\n")
            if not rep.passed:
                status = EXIT_FAIL
    finally:
        if sink is not sys.stdout:
            sink.close()
    return status


def run_random(args) -> int:
    rng = np.random.default_rng(args.seed)
    records = []
    floors = []
    for _ in range(args.count):
        if args.kind == "state":
            records.append(matrix_record(sampling.random_state(args.dim, rng)))
        elif args.kind == "hermitian":
            h = sampling.random_hermitian(args.dim, rng)
            floor = float(-eigen_hermitian(h).eigenvalues[0])
            floors.append(floor)
            records.append(matrix_record(h, spectral_floor=floor))
        elif args.kind == "observable":
            records.append(vector_record(sampling.random_observable(args.dim, rng)))
        else:
            records.append(vector_record(sampling.random_probability_vector(args.dim, rng)))
    out = _open_out(args.out)
    try:
        write_records(records, out)
    finally:
        if out is not sys.stdout:
            out.close()
    if floors:
        print(f"spectral floors: min {min(floors):.6g}, max {max(floors):.6g}; "
              f"auto shift covers up to x = {max(0.0, max(floors)) + 1:.6g}", file=sys.stderr)
    return EXIT_OK


def run_summary(args) -> int:
    stream = sys.stdin if args.input in (None, "-") else open(args.input)
    groups: dict[str, dict] = defaultdict(lambda: {"count": 0, "passed": 0, "errors": 0,
                                                   "min_margin": math.inf})
    try:
        for line in stream:
            if not line.strip():
                continue
            rec = json.loads(line)
            g = groups[rec["name"]]
            g["count"] += 1
            if "error" in rec:
                g["errors"] += 1
                continue
            g["passed"] += bool(rec["pass"])
            g["min_margin"] = min(g["min_margin"], rec["margin"])
    finally:
        if stream is not sys.stdin:
            stream.close()
    status = EXIT_OK
    for name in sorted(groups):
        g = groups[name]
        failed = g["count"] - g["passed"] - g["errors"]
        print(json.dumps({"name": name, "count": g["count"], "passed": g["passed"],
                          "failed": failed, "errors": g["errors"],
                          "min_margin": None if math.isinf(g["min_margin"]) else g["min_margin"]}))
        if g["errors"]:
            status = EXIT_INVALID
        elif failed and status == EXIT_OK:
            status = EXIT_FAIL
    return status


def _scheme_arg(text: str) -> LabelingScheme:
    try:
        return LabelingScheme.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qudit-entropy", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="evaluate inequalities on input records")
    p.add_argument("input", help="JSON-lines file of matrix or vector records")
    p.add_argument("--inequality", "-i", default="all",
                   choices=MATRIX_CHECKS + VECTOR_CHECKS + ("all",))
    p.add_argument("--factors", type=_scheme_arg, default=None, help="labeling, e.g. 2,2 or 2,2,2")
    p.add_argument("--x", type=_parse_x, default=None, help="shift value or 'auto'")
    p.add_argument("--observable", help="record file whose first matrix is the observable f")
    p.add_argument("--theta", type=float, default=0.0, help="tomogram polar angle")
    p.add_argument("--phi", type=float, default=0.0, help="tomogram azimuth")
    p.add_argument("--tol", type=float, default=None, help="override pass tolerance")
    p.add_argument("--hermitian-tol", type=float, default=1e-10)
    p.add_argument("--seed", type=int, default=None, help="recorded in every report")
    p.add_argument("--out", default=None, help="report file (default stdout)")
    p.set_defaults(func=run_check)

    p = sub.add_parser("simulate", help="parametric oscillator curves and checks")
    p.add_argument("--profile", default="constant",
                   help="constant, sinusoidal, or a CSV file of (t, omega^2) rows")
    p.add_argument("--depth", type=float, default=0.1, help="sinusoidal modulation depth")
    p.add_argument("--rate", type=float, default=2.0, help="sinusoidal modulation frequency")
    p.add_argument("--T", type=float, default=10.0)
    p.add_argument("--samples", type=int, default=101)
    p.add_argument("--ode-tol", type=float, default=1e-10)
    p.add_argument("--state", default="ground", help="ground, fock:N or coherent:RE,IM")
    p.add_argument("--t", type=float, default=None, help="tomogram time (default T)")
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--points", type=int, default=401, help="tomogram grid size")
    p.add_argument("--points-theta", type=int, default=33, help="entropy-curve grid size")
    p.add_argument("--n-theta", type=int, default=8, help="theta grid for uncertainty checks")
    p.add_argument("--n-times", type=int, default=11, help="time grid for uncertainty checks")
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out", default="simulation", help="output directory for CSV curves")
    p.add_argument("--report", default=None, help="report file (default stdout)")
    p.set_defaults(func=run_simulate)

    p = sub.add_parser("random", help="seeded random input records")
    p.add_argument("--kind", choices=("state", "hermitian", "observable", "probability"),
                   default="state")
    p.add_argument("--dim", type=int, default=4)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=run_random)

    p = sub.add_parser("report-summary", help="aggregate a report stream")
    p.add_argument("input", nargs="?", default="-")
    p.set_defaults(func=run_summary)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "random" and not (1 <= args.dim <= 64 and 1 <= args.count <= 10**6):
        parser.error("random needs 1 <= dim <= 64 and 1 <= count <= 1e6")
    if args.command == "simulate" and not 1e-12 <= args.ode_tol <= 1e-4:
        parser.error("--ode-tol must lie in [1e-12, 1e-4]")
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
