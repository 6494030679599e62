"""``qframes`` command line.

Every subcommand prints one JSON document on stdout. Exit codes:
0 success, 1 parse error, 2 dimension mismatch, 3 the family is not a frame
(``analyze``) or not a Riesz basis (``dual``, ``verify``, ``reconstruct``).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import fileformat
from .errors import DimensionMismatch, QFramesError
from .fileformat import FamilyFile, ParseError, to_json
from .frames import analyze
from .gen import GenConfig, Kind, SplitMix64, gen_family, gen_vector
from .riesz import dual_riesz, is_riesz_basis, reconstruction_residuals, riesz_sequence_bounds
from .tolerances import Tolerances

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_DIMENSION = 2
EXIT_NEGATIVE = 3

SEED_ENV = "QFRAMES_SEED"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        _emit({"error": "usage", "message": message})
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def _emit(doc) -> None:
    sys.stdout.write(to_json(doc))


def _tolerances(args, family: FamilyFile | None = None) -> Tolerances:
    tol = Tolerances() if family is None else family.resolved_tolerances()
    return tol.override(eq=args.tol_eq, rank=args.tol_rank, spec=args.tol_spec)


def _seed(args) -> int:
    env = os.environ.get(SEED_ENV)
    if env is not None and env.strip():
        try:
            return int(env, 0)
        except ValueError:
            raise ParseError(f"{SEED_ENV}={env!r} is not an integer") from None
    return args.seed


def cmd_analyze(args) -> int:
    family = fileformat.load(args.path)
    report = analyze(family.vectors, _tolerances(args, family))
    _emit(report.to_dict())
    return EXIT_OK if report.is_frame else EXIT_NEGATIVE


def cmd_dual(args) -> int:
    family = fileformat.load(args.path)
    tol = _tolerances(args, family)
    verdict = is_riesz_basis(family.vectors, tol)
    if not verdict:
        _emit(verdict.to_dict())
        return EXIT_NEGATIVE
    Y = dual_riesz(family.vectors, tol)
    _emit(FamilyFile(n=family.n, vectors=Y, tolerances=tol.to_dict()).to_dict())
    return EXIT_OK


def cmd_verify(args) -> int:
    family = fileformat.load(args.path)
    tol = _tolerances(args, family)
    if args.sequence:
        bounds = riesz_sequence_bounds(family.vectors, tol)
        doc = bounds.to_dict()
        doc["tolerances"] = tol.to_dict()
        _emit(doc)
        return EXIT_OK if bounds.is_riesz_sequence else EXIT_NEGATIVE
    verdict = is_riesz_basis(family.vectors, tol)
    _emit(verdict.to_dict())
    return EXIT_OK if verdict else EXIT_NEGATIVE


def cmd_reconstruct(args) -> int:
    family = fileformat.load(args.path)
    tol = _tolerances(args, family)
    if args.signal is not None:
        try:
            text = Path(args.signal).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {args.signal}: {exc.strerror}") from None
        u = fileformat.parse_signal(text, family.n)
        seed = None
    else:
        seed = _seed(args)
        u = gen_vector(SplitMix64(seed), family.n)
    if args.dual is not None:
        other = fileformat.load(args.dual)
        if other.n != family.n or other.m != family.m:
            raise DimensionMismatch("dual family has a different shape")
        Y = other.vectors
    else:
        verdict = is_riesz_basis(family.vectors, tol)
        if not verdict:
            _emit(verdict.to_dict())
            return EXIT_NEGATIVE
        Y = dual_riesz(family.vectors, tol)
    r_xy, r_yx = reconstruction_residuals(family.vectors, Y, u)
    doc = {"n": family.n, "m": family.m}
    if seed is not None:
        doc["signal_seed"] = seed
    doc.update({"residual_xy": r_xy, "residual_yx": r_yx, "tolerances": tol.to_dict()})
    _emit(doc)
    return EXIT_OK


def cmd_gen(args) -> int:
    cfg = GenConfig(seed=_seed(args), dim=args.dim, count=args.count, kind=args.kind.upper(), condition_cap=args.condition_cap)
    fam = gen_family(cfg)
    doc = FamilyFile(n=cfg.dim, vectors=list(fam.vectors), U=fam.U, gen=fam.config.to_dict())
    text = fileformat.dumps(doc)
    if args.out:
        Path(args.out).write_text(text)
        _emit({"written": str(args.out), "n": doc.n, "m": doc.m, "gen": doc.gen})
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    tol_flags = argparse.ArgumentParser(add_help=False)
    tol_flags.add_argument("--tol-eq", type=float, default=None, help="equality tolerance (default 1e-9)")
    tol_flags.add_argument("--tol-rank", type=float, default=None, help="relative rank tolerance (default 1e-8)")
    tol_flags.add_argument("--tol-spec", type=float, default=None, help="spectral tolerance (default 1e-7)")

    parser = _Parser(prog="qframes", description="Frames and Riesz bases in quaternionic H^n.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", parents=[tol_flags], help="frame bounds and classification")
    p.add_argument("path")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("dual", parents=[tol_flags], help="dual Riesz basis, written as a family file")
    p.add_argument("path")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("verify", parents=[tol_flags], help="Riesz-basis certificate or counterexample")
    p.add_argument("path")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--riesz", action="store_true", help="check for a Riesz basis (default)")
    mode.add_argument("--sequence", action="store_true", help="only check the Riesz-sequence bounds")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reconstruct", parents=[tol_flags], help="reconstruction residuals through a dual pair")
    p.add_argument("path")
    p.add_argument("--signal", help="signal file; a seeded random signal is used when absent")
    p.add_argument("--dual", help="family file to use as the dual (default: computed)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("gen", parents=[tol_flags], help="generate a seeded family")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--kind", choices=[k.value.lower() for k in Kind], type=str.lower, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--condition-cap", type=float, default=1e6)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        _emit({"error": "parse", "message": str(exc)})
        print(f"qframes: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DimensionMismatch as exc:
        _emit({"error": "dimension", "message": str(exc)})
        print(f"qframes: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except QFramesError as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        print(f"qframes: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
