"""``bcx`` command-line front end.

Subcommands::

    bcx verify [--seed S] [--trials T] [--dim D] [--degree N] [--tol E]
               [--suite NAME ...] [--format json|text] [--timing]
    bcx norm --kind matrix|vector|series FILE [--weight W]
    bcx compose F PHI --degree N
    bcx bound PHI --degree N

``BCX_SEED`` and ``BCX_FORMAT`` supply defaults for ``--seed`` and
``--format``; explicit flags win.  Exit status is 0 when everything passes,
1 when a mathematical violation is detected and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .algebra import Tolerance
from .errors import BicomplexError
from .hardy import (
    BCPowerSeries,
    SelfMap,
    compose,
    composition_matrix,
    hardy_norm,
    littlewood_bound,
    mobius_series,
)
from .jsonio import (
    decode_matrix,
    decode_scalar,
    decode_series,
    decode_vector,
    decode_weights,
    encode_hyperbolic,
    encode_series,
    load_json,
)
from .linalg import OperatorNormReport, dnorm_vec, op_dnorm
from .suites import SUITES, SuiteConfig, verify

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2

# slack below which the bound command reports a violation
BOUND_SLACK = 1e-6


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting, so main() owns the exit code."""

    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _env_seed() -> int | None:
    raw = os.environ.get("BCX_SEED")
    if raw is None or raw == "":
        return None
    try:
        return int(raw, 0)
    except ValueError:
        raise _UsageError(f"BCX_SEED must be an integer, got {raw!r}") from None


def _env_format() -> str | None:
    raw = os.environ.get("BCX_FORMAT")
    if raw is None or raw == "":
        return None
    if raw not in ("json", "text"):
        raise _UsageError(f"BCX_FORMAT must be json or text, got {raw!r}")
    return raw


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bcx", description="Bicomplex operator theory verifier and utilities.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    v = sub.add_parser("verify", help="run seeded property suites")
    v.add_argument("--seed", type=int, default=None, help="master seed (default: BCX_SEED or 0)")
    v.add_argument("--trials", type=int, default=200)
    v.add_argument("--dim", type=int, default=6, help="largest module dimension")
    v.add_argument("--degree", type=int, default=32, help="series truncation degree")
    v.add_argument("--tol", type=float, default=1e-8, help="relative tolerance")
    v.add_argument("--suite", action="append", default=None, metavar="NAME",
                   help=f"suite to run, repeatable (default: all of {', '.join(sorted(SUITES))})")
    v.add_argument("--format", choices=("json", "text"), default=None,
                   help="report format (default: BCX_FORMAT or json)")
    v.add_argument("--timing", action="store_true", help="include wall times in the report")

    n = sub.add_parser("norm", help="norm of a matrix, vector or series file")
    n.add_argument("--kind", required=True, choices=("matrix", "vector", "series"))
    n.add_argument("file")
    n.add_argument("--weight", default=None, help="weight sequence file (series only)")

    c = sub.add_parser("compose", help="truncated composition f o Phi")
    c.add_argument("f")
    c.add_argument("phi")
    c.add_argument("--degree", type=int, required=True)

    b = sub.add_parser("bound", help="Littlewood bound against the truncated composition norm")
    b.add_argument("phi")
    b.add_argument("--degree", type=int, required=True)
    return p


def _cmd_verify(args) -> int:
    seed = args.seed if args.seed is not None else _env_seed()
    fmt = args.format or _env_format() or "json"
    try:
        tol = Tolerance(rel=args.tol)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    cfg = SuiteConfig(
        seed=0 if seed is None else seed,
        trials=args.trials,
        dim=args.dim,
        degree=args.degree,
        tol=tol,
        suites=tuple(args.suite or ()),
    )
    report = verify(cfg)
    if fmt == "json":
        _emit(report.to_json(timing=args.timing))
    else:
        sys.stdout.write(_text_report(report, args.timing))
    return EXIT_OK if report.passed else EXIT_VIOLATION


def _text_report(report, timing: bool) -> str:
    cfg = report.config
    lines = [f"bcx verify  seed={cfg.seed} trials={cfg.trials} dim={cfg.dim} "
             f"degree={cfg.degree} tol={cfg.tol.rel:g}"]
    width = max(len(r.name) for r in report.results)
    for r in sorted(report.results, key=lambda r: r.name):
        mv = r.max_violation
        mv_s = f"[{mv.x1:.3e}, {mv.x2:.3e}]" if hasattr(mv, "x1") else f"{mv:.3e}"
        line = f"{'PASS' if r.passed else 'FAIL'}  {r.name:<{width}}  trials={r.trials}  " \
               f"max_violation={mv_s}  threshold={r.threshold:.0e}"
        if timing:
            line += f"  time={r.wall_time:.3f}s"
        lines.append(line)
    lines.append("overall: " + ("PASS" if report.passed else "FAIL"))
    return "\n".join(lines) + "\n"


def _cmd_norm(args) -> int:
    doc = load_json(args.file)
    if args.weight is not None and args.kind != "series":
        raise _UsageError("--weight applies only to --kind series")
    if args.kind == "matrix":
        _emit(op_dnorm(decode_matrix(doc)).to_json())
    elif args.kind == "vector":
        _emit(OperatorNormReport(dnorm_vec(decode_vector(doc))).to_json())
    else:
        f = decode_series(doc)
        beta = decode_weights(load_json(args.weight)) if args.weight else None
        _emit({"hardy_norm": encode_hyperbolic(hardy_norm(f, beta))})
    return EXIT_OK


def _load_phi(path: str, N: int) -> SelfMap | BCPowerSeries:
    """A series document, or ``{"mobius": scalar}`` for the Moebius map ``T_a``."""
    doc = load_json(path)
    if isinstance(doc, dict) and "mobius" in doc:
        return mobius_series(decode_scalar(doc["mobius"], "mobius"), N)
    return decode_series(doc, "phi")


def _require_degree(N: int) -> None:
    if N < 0:
        raise _UsageError(f"--degree must be non-negative, got {N}")


def _cmd_compose(args) -> int:
    _require_degree(args.degree)
    f = decode_series(load_json(args.f), "f")
    phi = _load_phi(args.phi, args.degree)
    _emit(encode_series(compose(f, phi, args.degree)))
    return EXIT_OK


def _cmd_bound(args) -> int:
    N = args.degree
    _require_degree(N)
    phi = _load_phi(args.phi, N)
    bound = littlewood_bound(phi)
    smap = phi if isinstance(phi, SelfMap) else SelfMap(phi, strict=False)
    norm = op_dnorm(composition_matrix(phi, N)).dnorm
    slack = bound - norm
    violation = min(slack.x1, slack.x2) < -BOUND_SLACK
    _emit({
        "degree": N,
        "bound": encode_hyperbolic(bound),
        "truncated_norm": encode_hyperbolic(norm),
        "slack": encode_hyperbolic(slack),
        "self_map_certified": smap.certified,
        "violation": violation,
    })
    if not smap.certified:
        print("bcx: warning: Phi failed the self-map grid check; the bound need not apply",
              file=sys.stderr)
        return EXIT_OK
    return EXIT_VIOLATION if violation else EXIT_OK


_COMMANDS = {"verify": _cmd_verify, "norm": _cmd_norm, "compose": _cmd_compose, "bound": _cmd_bound}


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BicomplexError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # never surface a traceback for bad input
        print(f"error: unexpected {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
