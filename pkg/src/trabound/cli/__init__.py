"""Command-line front end: ``trabound {gamma,spectrum,wavefunction,verify,catalog}``.

Exit codes: 0 success, 1 configuration error, 2 physics-domain error,
3 solver produced no result.
"""

from __future__ import annotations

import argparse
import sys
import warnings

from trabound.cli import commands
from trabound.cli.config import RunConfig, load_config
from trabound.errors import (
    BranchAmbiguityError,
    ConfigError,
    DomainError,
    FavardError,
    NoBoundStateError,
    NoRootsFoundError,
    PoleError,
    TraError,
)

EXIT_OK, EXIT_CONFIG, EXIT_DOMAIN, EXIT_NO_RESULT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit 2, which means "domain error" here
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def _config_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("-c", "--config", required=True, help="config file or shipped example name")
    p.add_argument("--set", action="append", default=[], metavar="KEY=VALUE", help="override a config field, e.g. solver.max_levels=5")
    p.add_argument("--format", help="csv or json (overrides output.format)")
    p.add_argument("-o", "--output", help="output path (overrides output.path; '-' for stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="trabound", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gamma", help="angular separation constant from the dipole matrix")
    g.add_argument("--d", type=float, required=True, help="electric dipole moment")
    g.add_argument("--m", type=int, default=0, help="azimuthal quantum number")
    g.add_argument("--tol", type=float, default=1e-12)
    g.add_argument("--size", type=int, default=16, help="starting truncation")
    g.add_argument("--max-size", type=int, default=1024)
    g.add_argument("--format", default="text", help="text or json")

    s = sub.add_parser("spectrum", help="bound-state energies")
    _config_args(s)

    w = sub.add_parser("wavefunction", help="sampled wavefunctions with oracle columns")
    _config_args(w)
    w.add_argument("--levels", help="comma-separated k list (overrides output.levels)")
    w.add_argument("--sidecar", help="path of the overlap summary JSON")

    v = sub.add_parser("verify", help="run the identity and catalog self-checks")
    v.add_argument("suite", help="polys, catalog or all")
    v.add_argument("--seed", type=int, default=20240607)
    v.add_argument("--draws", type=int, default=20)
    v.add_argument("--report", help="write the JSON report here")

    c = sub.add_parser("catalog", help="export the basis/potential catalog")
    c.add_argument("--format", default="json", help="json or csv")
    c.add_argument("-o", "--output", help="output path")
    return parser


def _resolve(args) -> RunConfig:
    cfg = load_config(args.config)
    overrides = list(args.set)
    if args.format:
        overrides.append(f"output.format={args.format}")
    if args.output:
        overrides.append(f"output.path={args.output}")
    if getattr(args, "levels", None):
        try:
            ks = [int(t) for t in args.levels.split(",") if t.strip()]
        except ValueError as exc:
            raise ConfigError(f"--levels: {exc}") from exc
        overrides.append(f"output.levels={ks}")
    return cfg.with_overrides(overrides) if overrides else cfg


def _run(args) -> int:
    if args.command == "gamma":
        if args.format not in ("text", "json"):
            raise ConfigError(f"--format: expected text or json, got {args.format!r}")
        commands.emit(None, commands.cmd_gamma(args.d, args.m, args.tol, args.size, args.max_size, args.format))
        return EXIT_OK
    if args.command == "spectrum":
        cfg = _resolve(args)
        commands.emit(cfg.output.path, commands.cmd_spectrum(cfg))
        return EXIT_OK
    if args.command == "wavefunction":
        cfg = _resolve(args)
        text, side = commands.cmd_wavefunction(cfg)
        commands.emit(cfg.output.path, text)
        side_path = args.sidecar or commands.sidecar_path(cfg.output.path)
        if side_path:
            commands.emit(side_path, side)
        else:
            sys.stderr.write(side)
        return EXIT_OK
    if args.command == "verify":
        if args.suite not in ("polys", "catalog", "all"):
            raise ConfigError(f"verify: unknown suite {args.suite!r} (polys, catalog, all)")
        summary, report, ok = commands.cmd_verify(args.suite, args.seed, args.draws)
        commands.emit(None, summary)
        if args.report:
            commands.emit(args.report, report)
        return EXIT_OK if ok else 1
    if args.command == "catalog":
        if args.format not in ("json", "csv"):
            raise ConfigError(f"--format: expected json or csv, got {args.format!r}")
        commands.emit(args.output, commands.cmd_catalog(args.format))
        return EXIT_OK
    raise ConfigError(f"unknown command {args.command!r}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("default")
            return _run(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (NoRootsFoundError, NoBoundStateError) as exc:
        print(f"no result: {exc}", file=sys.stderr)
        return EXIT_NO_RESULT
    except (DomainError, FavardError, PoleError, BranchAmbiguityError, TraError) as exc:
        print(f"domain error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


__all__ = ["main", "build_parser", "EXIT_OK", "EXIT_CONFIG", "EXIT_DOMAIN", "EXIT_NO_RESULT"]
