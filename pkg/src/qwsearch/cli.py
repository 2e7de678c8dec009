"""Command-line front end.

Exit codes: 0 success, 1 validation failure, 2 bad arguments, 3 dimension cap,
4 encoding mismatch, 5 I/O or format error.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

import numpy as np

from . import closedform, fullsim, noise, resources, validate
from .errors import DimensionTooLarge, EncodingMismatch, InvalidMarkedCount, InvalidPartition, OutOfRange, TooManyQubits
from .model import angles, make_instance
from .series import RESOURCE_COLUMNS, ResourceSeries, SeriesFormatError
from .svgplot import render_line_chart

EXIT_OK, EXIT_VALIDATION, EXIT_ARGS, EXIT_DIM, EXIT_ENCODING, EXIT_IO = 0, 1, 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _emit(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(f"cannot write {out}: {exc}", EXIT_IO) from exc


def _instance(args):
    try:
        return make_instance(args.n1, args.n2, args.k, args.init)
    except (InvalidPartition, InvalidMarkedCount) as exc:
        raise CliError(str(exc), EXIT_ARGS) from exc


def _parse_alphas(text: str) -> list[float]:
    try:
        alphas = [float(a) for a in text.split(",") if a.strip()]
    except ValueError as exc:
        raise CliError(f"bad alpha list {text!r}", EXIT_ARGS) from exc
    if not alphas or any(not 0.0 <= a <= 1.0 for a in alphas):
        raise CliError(f"alpha values must lie in [0, 1], got {text!r}", EXIT_ARGS)
    return alphas


def cmd_params(args) -> int:
    inst = _instance(args)
    theta, delta, phi = angles(inst)
    print(f"n1={inst.n1} n2={inst.n2} k={inst.k} init={inst.init.value}")
    print(f"theta={theta:.12g}")
    print(f"delta={delta:.12g}")
    print(f"phi={phi:.12g}")
    print(f"sin2theta={math.sin(2 * theta):.12g}")
    print(f"cos2theta_sq={math.cos(theta) ** 2:.12g}")
    print(f"optimal_even_t={closedform.optimal_even_step(inst)}")
    return EXIT_OK


def _coherence_cells(c: float) -> dict:
    return {"C_l1": c, "C_norm": closedform.normalized_coherence(max(c, 0.0))}


def cmd_evolve(args) -> int:
    inst = _instance(args)
    steps = resources.parity_steps(args.steps, args.parity)
    wanted = set(steps)
    columns = list(RESOURCE_COLUMNS)
    if args.backend == "both":
        columns.append("agreement")
    series = ResourceSeries(columns)

    full = {}
    if args.backend in ("full", "both"):
        try:
            op = fullsim.build_step_operator(inst, max_dim=args.max_dim)
        except DimensionTooLarge as exc:
            raise CliError(str(exc), EXIT_DIM) from exc
        basis = fullsim.subspace_basis(inst)
        for t, state in enumerate(fullsim.iter_evolution(inst, args.steps, op)):
            if t in wanted:
                amps, _ = fullsim.project_to_subspace(state, basis)
                full[t] = (amps, fullsim.success_probability_full(state, inst))

    for t in steps:
        closed = closedform.state_at(inst, t)
        agreement = None
        if args.backend == "both":
            agreement = abs(float(np.dot(closed, full[t][0])))
        if args.backend in ("closed", "both"):
            extra = {"agreement": agreement} if args.backend == "both" else {}
            series.add(t=t, backend="closed", P=closedform.success_probability(inst, t),
                       **_coherence_cells(closedform.coherence_at(inst, t)), **extra)
        if args.backend in ("full", "both"):
            amps, prob = full[t]
            c = float(np.abs(amps.as_array()).sum() ** 2 - 1)
            extra = {"agreement": agreement} if args.backend == "both" else {}
            series.add(t=t, backend="full", P=prob, **_coherence_cells(c), **extra)
    _emit(series.to_csv(), args.out)
    return EXIT_OK


def cmd_entangle(args) -> int:
    try:
        p = resources.EncodingParams(args.n_qubits)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_ARGS) from exc
    size = p.partition_size
    n1 = args.n1 if args.n1 is not None else size
    n2 = args.n2 if args.n2 is not None else size
    k = args.k if args.k is not None else 1
    try:
        inst = make_instance(n1, n2, k, args.init)
    except (InvalidPartition, InvalidMarkedCount) as exc:
        raise CliError(str(exc), EXIT_ARGS) from exc
    brute = None if args.brute == "auto" else args.brute == "yes"
    try:
        rows = resources.resource_series(inst, p, args.steps, args.parity, brute_force=brute)
    except EncodingMismatch as exc:
        raise CliError(str(exc), EXIT_ENCODING) from exc
    except TooManyQubits as exc:
        raise CliError(str(exc), EXIT_DIM) from exc
    series = ResourceSeries(list(RESOURCE_COLUMNS))
    for r in rows:
        series.add(t=r.t, backend="closed", P=r.P, **_coherence_cells(r.C_l1),
                   sC_closed=r.sC_closed, sC_brute=r.sC_brute, MC=r.MC)
    _emit(series.to_csv(), args.out)
    return EXIT_OK


def cmd_noise(args) -> int:
    alphas = _parse_alphas(args.alpha)
    inst = _instance(args)
    steps = resources.parity_steps(args.steps, args.parity)
    base = [c for c in RESOURCE_COLUMNS if c not in ("Q_noisy", "C_l1_noisy")]
    if len(alphas) == 1:
        groups = [("Q_noisy", "C_l1_noisy", "agree")]
    else:
        groups = [(f"Q_noisy@{a:g}", f"C_l1_noisy@{a:g}", f"agree@{a:g}") for a in alphas]
    series = ResourceSeries(base + [c for g in groups for c in g])
    per_alpha = [noise.noisy_series(inst, noise.NoiseConfig(a), args.steps) for a in alphas]
    for t in steps:
        cells = dict(t=t, backend="closed", P=closedform.success_probability(inst, t),
                     **_coherence_cells(closedform.coherence_at(inst, t)))
        for (q_col, c_col, flag_col), rows in zip(groups, per_alpha):
            row = rows[t]
            cells[q_col] = row.Q_t
            cells[c_col] = row.C_noisy
            cells[flag_col] = row.agrees
        series.add(**cells)
    _emit(series.to_csv(), args.out)
    return EXIT_OK


def cmd_validate(args) -> int:
    results = validate.run_validation(tol=args.tol)
    text = validate.format_json(results) if args.report == "json" else validate.format_text(results, args.verbose)
    _emit(text, args.out)
    return EXIT_OK if validate.all_hard_passed(results) else EXIT_VALIDATION


def cmd_plot(args) -> int:
    try:
        series = ResourceSeries.read(args.csv)
        if args.columns:
            columns = [c.strip() for c in args.columns.split(",") if c.strip()]
        else:
            numeric = [c for c in series.columns if c not in ("t", "backend")]
            columns = [c for c in numeric if any(isinstance(v, float) for v in series.column(c))]
        svg = render_line_chart(series, columns, title=args.title or Path(args.csv).stem, backend=args.backend)
    except SeriesFormatError as exc:
        raise CliError(str(exc), EXIT_IO) from exc
    _emit(svg, args.out)
    return EXIT_OK


def _add_instance_args(p, defaults=(4, 4, 1)):
    n1, n2, k = defaults
    p.add_argument("--n1", type=int, default=n1, help="size of partition X")
    p.add_argument("--n2", type=int, default=n2, help="size of partition Y")
    p.add_argument("--k", type=int, default=k, help="number of marked vertices (in X)")
    p.add_argument("--init", choices=("s", "sigma"), default="s", help="vertex-uniform (s) or edge-uniform (sigma) start")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qwsearch", description="Quantum-walk search on complete bipartite graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("params", help="print the angle parameters of an instance")
    _add_instance_args(p)
    p.set_defaults(func=cmd_params)

    p = sub.add_parser("evolve", help="success probability and coherence per step (CSV)")
    _add_instance_args(p)
    p.add_argument("--steps", type=int, default=30)
    p.add_argument("--parity", choices=("even", "odd", "all"), default="all")
    p.add_argument("--backend", choices=("closed", "full", "both"), default="closed")
    p.add_argument("--max-dim", type=int, default=fullsim.DEFAULT_MAX_DIM, help="arc-space dimension cap")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("entangle", help="pairwise and multipartite concurrence per step (CSV)")
    p.add_argument("--n-qubits", type=int, required=True, help="qubits per vertex label; n1 = n2 = 2^(n-1)")
    p.add_argument("--n1", type=int, default=None)
    p.add_argument("--n2", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--init", choices=("s", "sigma"), default="s")
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--parity", choices=("even", "odd", "all"), default="all")
    p.add_argument("--brute", choices=("auto", "yes", "no"), default="auto")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_entangle)

    p = sub.add_parser("noise", help="depolarizing-noise dynamics (CSV)")
    _add_instance_args(p)
    p.add_argument("--alpha", default="0.5", help="comma-separated retention parameters in [0, 1]")
    p.add_argument("--steps", type=int, default=30)
    p.add_argument("--parity", choices=("even", "odd", "all"), default="all")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_noise)

    p = sub.add_parser("validate", help="run every cross-check and report deviations")
    p.add_argument("--report", choices=("text", "json"), default="text")
    p.add_argument("--tol", type=float, default=1e-8, help="threshold of the soft pairwise-sum agreement check")
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("plot", help="render a CSV produced by this tool as an SVG line chart")
    p.add_argument("csv")
    p.add_argument("--columns", default=None, help="comma-separated columns (default: all numeric)")
    p.add_argument("--backend", default=None, help="row backend to plot when several are present")
    p.add_argument("--title", default=None)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_plot)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("steps",):
        if getattr(args, name, 0) is not None and getattr(args, name, 0) < 0:
            parser.error(f"--{name} must be nonnegative")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"qwsearch: {exc}", file=sys.stderr)
        return exc.code
    except OutOfRange as exc:
        print(f"qwsearch: {exc}", file=sys.stderr)
        return EXIT_ARGS


if __name__ == "__main__":
    sys.exit(main())
