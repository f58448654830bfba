"""Command-line front end.

Examples::

    bbinterp power --eps 0 --eps 100 --nodes equispaced:2
    bbinterp power-decay --eps 0 --eps 1 --n-max 1000
    bbinterp flat-limit --nodes equispaced:9
    bbinterp optimal-check --n 5 --eps 10 --seed 7
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from typing import Sequence

import numpy as np

from bbinterp import analysis
from bbinterp.errors import BBInterpError, IllConditionedError
from bbinterp.interp import GramInterpolant, SampleData, interpolate
from bbinterp.kernel import KernelParams
from bbinterp.tables import parse_nodes, read_samples_csv, write_table

FLAT_LIMIT_EPS = (1e-1, 1e-2, 1e-3, 1e-4)


def _eps_list(args, default=None) -> list[float]:
    eps = args.eps if args.eps else default
    if not eps:
        raise BBInterpError("at least one --eps is required")
    for e in eps:
        if not np.isfinite(e) or e < 0:
            raise BBInterpError(f"eps must be finite and >= 0, got {e}")
    return list(eps)


def _profile_grid(args, nodes) -> np.ndarray:
    if args.grid < 2:
        raise BBInterpError("--grid must be >= 2")
    return analysis.sup_grid(nodes, args.grid)


def cmd_interpolate(args):
    if not args.samples:
        raise BBInterpError("interpolate needs --samples")
    data = read_samples_csv(args.samples)
    xs = _profile_grid(args, data.nodes)
    rows = []
    for eps in _eps_list(args):
        params = KernelParams(1, eps)
        if args.oracle:
            values = GramInterpolant(params, data)(xs)
        else:
            values = interpolate(params, data, xs)
        rows.extend((x, v, eps) for x, v in zip(xs, values))
    return ["x", "value", "eps"], rows


def _profile_cmd(kind):
    def run(args):
        if not args.nodes:
            raise BBInterpError(f"{kind} needs --nodes")
        nodes = parse_nodes(args.nodes)
        _profile_grid(args, nodes)
        rows = []
        for eps in _eps_list(args):
            table = analysis.profile(kind, KernelParams(1, eps), nodes, args.grid)
            rows.extend((x, v, eps) for x, v in zip(table.abscissae, table.values))
        return ["x", "value", "eps"], rows

    return run


def cmd_power_decay(args):
    rows = []
    for eps in _eps_list(args):
        counts, sups = analysis.power_decay(eps, args.n_max)
        rows.extend((int(n), eps, s) for n, s in zip(counts, sups))
    return ["N", "eps", "power_sup"], rows


def cmd_flat_limit(args):
    if args.samples:
        data = read_samples_csv(args.samples)
    else:
        nodes = parse_nodes(args.nodes or "equispaced:9")
        data = SampleData.from_function(nodes, lambda x: np.sin(np.pi * x))
    grid = _profile_grid(args, data.nodes)
    scale = data.sup_norm()
    rows = []
    for eps in _eps_list(args, FLAT_LIMIT_EPS):
        if eps == 0:
            raise BBInterpError("flat-limit needs eps > 0")
        observed = analysis.flat_limit_observed(eps, data, grid)
        rows.append((eps, observed, analysis.flat_limit_bound(eps, data.nodes) * scale))
    return ["eps", "observed", "bound"], rows


def cmd_optimal_check(args):
    eps_values = _eps_list(args)
    if len(eps_values) != 1:
        raise BBInterpError("optimal-check takes exactly one --eps")
    eps = eps_values[0]
    trials = analysis.optimality_trials(args.n, eps, args.trials, args.seed, args.scale)
    passed = sum(p > ref for _, p, ref in trials)
    verdict = "PASS" if passed == len(trials) else "FAIL"
    print(
        f"optimal-check N={args.n} eps={eps!r} seed={args.seed}: "
        f"{passed}/{len(trials)} perturbed sets worse than equispaced -> {verdict}",
        file=sys.stderr,
    )
    return ["trial", "seed", "perturbed_sup", "equispaced_sup"], [
        (t, args.seed, p, ref) for t, p, ref in trials
    ]


COMMANDS = {
    "interpolate": cmd_interpolate,
    "lebesgue": _profile_cmd("lebesgue"),
    "power": _profile_cmd("power"),
    "power-decay": cmd_power_decay,
    "flat-limit": cmd_flat_limit,
    "optimal-check": cmd_optimal_check,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--eps", type=float, action="append", help="shape parameter (repeatable)")
    common.add_argument("--nodes", help="nodes CSV with column 'x', or 'equispaced:N'")
    common.add_argument("--samples", help="samples CSV with columns 'x,f'")
    common.add_argument("--grid", type=int, default=analysis.DEFAULT_GRID, help="uniform grid points (default 2048)")
    common.add_argument("--output", "-o", default="-", help="output path (default: stdout)")
    common.add_argument("--format", choices=["csv", "json"], default="csv")

    parser = argparse.ArgumentParser(prog="bbinterp", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("interpolate", parents=[common], help="evaluate the interpolant of sampled data")
    p.add_argument("--oracle", action="store_true", help="use the dense Gram solve instead of the cardinal form")
    sub.add_parser("lebesgue", parents=[common], help="Lebesgue function profile")
    sub.add_parser("power", parents=[common], help="power function profile")
    p = sub.add_parser("power-decay", parents=[common], help="sup of the power function for N equispaced nodes")
    p.add_argument("--n-max", type=int, default=1000)
    sub.add_parser("flat-limit", parents=[common], help="observed vs bounded eps -> 0 deviation")
    p = sub.add_parser("optimal-check", parents=[common], help="random perturbations of equispaced nodes")
    p.add_argument("--n", type=int, required=True, help="number of nodes")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--scale", type=float, default=0.4, help="perturbation size in units of 1/(N+1)")
    return parser


@contextlib.contextmanager
def _open_output(path: str):
    if path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        header, rows = COMMANDS[args.command](args)
        with _open_output(args.output) as out:
            write_table(header, rows, out, args.format)
    except IllConditionedError as exc:
        print(f"bbinterp: numerical failure: {exc}", file=sys.stderr)
        return 2
    except (BBInterpError, OSError) as exc:
        print(f"bbinterp: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
