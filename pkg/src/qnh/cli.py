"""Command-line interface.

Subcommands: ``sweep`` (time series to CSV), ``figure`` (preset CSVs for
the six standard figures, both modes), ``measure`` (quantifiers of a
density matrix stored as JSON), ``selftest`` (oracle-equivalence suite).

Exit codes: 0 success, 1 configuration/parse error, 2 numerical-invariant
failure.
"""

from __future__ import annotations

import argparse
import sys

from .errors import ConfigError, NumericalInvariantError, ParseError, QnhError
from .measures import MeasureMode
from .selftest import run_selftest
from .states import StateFamily
from .sweep import SweepConfig, emit_csv, measure_file, run_figure, run_sweep


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting, so the exit-code
    contract (1 = config error) stays in one place."""

    def error(self, message):
        raise ConfigError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="qnh", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    sw = sub.add_parser("sweep", help="run a (gamma_tilde, tau) sweep and write CSV")
    sw.add_argument("--family", required=True, choices=("phi", "psi"))
    sw.add_argument("--a", type=float, help="first coefficient of the pure state")
    sw.add_argument("--b", type=float, help="second coefficient of the pure state")
    sw.add_argument("--mixed-r", type=float, dest="mixed_r",
                    help="mixing parameter; selects the Werner-like family instead of --a/--b")
    sw.add_argument("--gamma-tilde", required=True,
                    help="comma-separated list of gamma_tilde values")
    sw.add_argument("--tau-max", type=float, default=10.0)
    sw.add_argument("--steps", type=int, default=1001)
    sw.add_argument("--mode", choices=("faithful", "paper"), default="faithful")
    sw.add_argument("--out", required=True)

    fig = sub.add_parser("figure", help="emit preset CSVs (both modes) for a figure")
    fig.add_argument("number", type=int, help="figure number, 1..6")
    fig.add_argument("--outdir", required=True)

    me = sub.add_parser("measure", help="evaluate the quantifiers of a stored state")
    me.add_argument("--rho", required=True, help='JSON file: {"rho": 4x4 of [re, im]}')
    me.add_argument("--mode", choices=("faithful", "paper"), default="faithful")

    sub.add_parser("selftest", help="run the oracle-equivalence suite")
    return p


def _family_from_args(args) -> StateFamily:
    if args.mixed_r is not None:
        if args.a is not None or args.b is not None:
            raise ConfigError("--mixed-r cannot be combined with --a/--b")
        if args.family == "phi":
            return StateFamily.mixed_phi(args.mixed_r)
        return StateFamily.mixed_psi(args.mixed_r)
    if args.a is None or args.b is None:
        raise ConfigError("pure states need both --a and --b (or use --mixed-r)")
    if args.family == "phi":
        return StateFamily.pure_phi(args.a, args.b)
    return StateFamily.pure_psi(args.a, args.b)


def _parse_gammas(text: str) -> tuple[float, ...]:
    try:
        values = tuple(float(part) for part in text.split(",") if part.strip() != "")
    except ValueError as exc:
        raise ConfigError(f"--gamma-tilde: {exc}") from None
    if not values:
        raise ConfigError("--gamma-tilde: empty list")
    return values


def _cmd_sweep(args) -> int:
    cfg = SweepConfig(
        family=_family_from_args(args),
        gamma_tilde_list=_parse_gammas(args.gamma_tilde),
        tau_max=args.tau_max,
        steps=args.steps,
        mode=MeasureMode.parse(args.mode),
        output_path=args.out,
    )
    rows = run_sweep(cfg)
    emit_csv(rows, args.out)
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def _cmd_figure(args) -> int:
    paths = run_figure(args.number, args.outdir)
    for mode, path in paths.items():
        print(f"{mode}: {path}")
    return 0


def _cmd_measure(args) -> int:
    report = measure_file(args.rho, MeasureMode.parse(args.mode))
    print(f"mode: {report.mode.value}")
    print(f"concurrence: {report.concurrence:.12g}")
    print(f"hs_min: {report.hs_min:.12g}")
    print(f"trace_min: {report.trace_min:.12g}")
    print(f"bell: {report.bell:.12g}")
    if report.argmax_direction is not None:
        d = report.argmax_direction
        print(f"measurement_direction: {d[0]:.12g} {d[1]:.12g} {d[2]:.12g}")
    return 0


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "figure":
            return _cmd_figure(args)
        if args.command == "measure":
            return _cmd_measure(args)
        if args.command == "selftest":
            return 0 if run_selftest() else 2
        raise ConfigError(f"unknown command {args.command!r}")
    except NumericalInvariantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ConfigError, ParseError, QnhError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry_point():
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
