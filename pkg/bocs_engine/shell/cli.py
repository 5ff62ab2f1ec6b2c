"""The ``bocs`` command line.

Exit codes: 0 on success or a terminal (or stopped) reduction, 2 when the reduction
meets a loop, 3 when it exceeds the step or arrow limits, 1 on usage or input errors.
"""

from __future__ import annotations

import argparse
import pathlib
import sys

from bocs_engine.config import MAX_ARROWS, MAX_STEPS
from bocs_engine.dbq import enumerate_indecomposables, right_algebra_dim, validate
from bocs_engine.errors import BocsError
from bocs_engine.logger import log_to_file, logger, set_verbosity
from bocs_engine.pathalg import algebra_basis
from bocs_engine.pipelines import module_count_from_p1, schur_an, standardize, two_simple
from bocs_engine.reduce import LimitExceeded, LoopEncountered, ReductionRun, Verdict, ar_quiver, run
from bocs_engine.shell.exporters import emit_dot, emit_log_json, emit_log_table
from bocs_engine.shell.fixtures import FixtureRegistry, load_algebra, load_bocs, load_script
from bocs_engine.shell.parsers import emit_algebra, emit_bocs, emit_script

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_LOOP = 2
EXIT_LIMIT = 3


class _Parser(argparse.ArgumentParser):
    """An argument parser that reports usage errors as ``BocsError``."""

    def error(self, message: str):
        raise BocsError(f"{self.prog}: {message}")


def exit_code(verdict: Verdict) -> int:
    if isinstance(verdict, LoopEncountered):
        return EXIT_LOOP
    if isinstance(verdict, LimitExceeded):
        return EXIT_LIMIT
    return EXIT_OK


def _write(text: str, out: str | None = None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    with open(pathlib.Path(out), "w", encoding="utf-8") as f:
        f.write(text)


def _run(args, dbq) -> ReductionRun:
    script = load_script(args.script) if args.script else None
    return run(dbq, args.max_steps, args.max_arrows, script)


# ------------------------------ Commands ------------------------------ #


def _validate(args) -> int:
    dbq = load_bocs(args.file)
    report = validate(dbq)
    vertices, arrows = dbq.counts()
    if not report:
        for violation in report.violations:
            print(violation, file=sys.stderr)
        return EXIT_ERROR
    directed = "directed" if report.directed else "not directed"
    print(f"{dbq.name}: valid, {directed}, {vertices} vertices, {arrows} arrows")
    return EXIT_OK


def _reduce(args) -> int:
    result = _run(args, load_bocs(args.file))
    if args.log == "json":
        sys.stdout.write(emit_log_json(result.log))
    else:
        sys.stdout.write(emit_log_table(result.log, grouped=args.grouped))
    print(f"verdict: {result.verdict}", file=sys.stderr)
    return exit_code(result.verdict)


def _ar(args) -> int:
    result = _run(args, load_bocs(args.file))
    code = exit_code(result.verdict)
    if code != EXIT_OK or result.verdict.kind != "terminal":
        print(f"No AR quiver: {result.verdict}", file=sys.stderr)
        return code or EXIT_ERROR
    arq = ar_quiver(result.verdict, result.provenance)
    if args.dot:
        _write(emit_dot(arq), args.dot)
        print(f"nodes={len(arq.nodes)} edges={len(arq.edges)}")
    else:
        _write(emit_dot(arq))
    return EXIT_OK


def _p1(args) -> int:
    basis = algebra_basis(load_algebra(args.file))
    verdict = module_count_from_p1(basis, two_sided=not args.one_sided, max_steps=args.max_steps)
    print(f"{basis.presentation.name}: {verdict}")
    if verdict.finite or verdict.run is None:
        return EXIT_OK
    return exit_code(verdict.run.verdict)


def _standardize(args) -> int:
    basis = algebra_basis(load_algebra(args.file))
    claimed = load_bocs(args.against) if args.against else None
    report = standardize(basis, claimed)

    print(f"{report.name}: dimension {basis.dimension}")
    if not report.heredity:
        print(f"Not quasi-hereditary in this order: fails at vertex {report.heredity.failed_at}", file=sys.stderr)
        return EXIT_ERROR
    print("[P(i):Delta(j)]")
    print(report.multiplicities.to_string())
    for degree, table in report.ext.items():
        print(f"Ext^{degree}(Delta(i), Delta(j))")
        print(table.to_string())
    if report.counts is not None:
        if report.counts.clean:
            print(f"{claimed.name}: arrow and relation counts match")
        else:
            print(report.counts.to_frame().to_string(), file=sys.stderr)
            return EXIT_ERROR
    return EXIT_OK


def _twosimple(args) -> int:
    member = two_simple(args.s, args.t)
    if args.emit:
        _write(emit_bocs(member.dbq))
        return EXIT_OK
    dimension = right_algebra_dim(member.dbq)
    print(f"{member.dbq.name}: right algebra dimension {dimension} (expected {member.expected_dim})")
    result = run(member.dbq, args.max_steps, args.max_arrows)
    print(f"verdict: {result.verdict}")
    return exit_code(result.verdict)


def _schur(args) -> int:
    member = schur_an(args.n)
    algebra_dim = algebra_basis(member.presentation).dimension
    borel_dim = algebra_basis(member.dbq.solid_algebra()).dimension
    right_dim = right_algebra_dim(member.dbq)
    rows = [
        ("algebra", algebra_dim, member.expected_algebra_dim),
        ("Borel subalgebra", borel_dim, member.expected_borel_dim),
        ("right algebra", right_dim, member.expected_right_dim),
    ]
    for label, found, expected in rows:
        print(f"{label}: {found} (expected {expected})")
        if found != expected:
            logger.warning(f"{member.dbq.name}: {label} has dimension {found}, expected {expected}")
    return EXIT_OK


def _example(args) -> int:
    fixture = FixtureRegistry().get(args.name)
    if args.emit == "algebra":
        if fixture.algebra is None:
            raise BocsError(f"Fixture '{fixture.name}' has no algebra presentation")
        _write(emit_algebra(fixture.algebra))
    elif args.emit == "script":
        if fixture.script is None:
            raise BocsError(f"Fixture '{fixture.name}' has no move script")
        _write(emit_script(fixture.script))
    else:
        _write(emit_bocs(fixture.dbq))
    return EXIT_OK


def _caps(text: str) -> list[int]:
    try:
        return [int(c) for c in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"caps must be comma separated integers, got '{text}'")


def _oracle(args) -> int:
    dbq = load_bocs(args.file)
    if len(args.caps) != len(dbq.vertices):
        raise BocsError(f"{dbq.name} has {len(dbq.vertices)} vertices, got {len(args.caps)} caps")
    result = enumerate_indecomposables(dbq, args.char, dict(zip(dbq.vertices, args.caps)))
    print(f"{dbq.name} over GF({args.char}): {result.count} indecomposables in {result.examined} representations")
    for vector in result.dimension_vectors():
        print(" ".join(str(d) for d in vector))
    return EXIT_OK


# ------------------------------ Parser ------------------------------ #


def _add_limits(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--max-steps", type=int, default=MAX_STEPS)
    parser.add_argument("--max-arrows", type=int, default=MAX_ARROWS)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bocs", description="Reduce bocses and study quasi-hereditary algebras.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log every reduction move")
    parser.add_argument("--log-file", metavar="PATH", help="also write the full log to PATH")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("validate", help="check degrees, d^2 = 0 and compatibility")
    sub.add_argument("file", help="a bocs file or example:NAME")
    sub.set_defaults(handler=_validate)

    for name, handler, text in (
        ("reduce", _reduce, "run the reduction algorithm and print its log"),
        ("ar", _ar, "reduce to a terminal bocs and print its AR quiver"),
    ):
        sub = commands.add_parser(name, help=text)
        sub.add_argument("file", help="a bocs file or example:NAME")
        sub.add_argument("--script", help="a move script, by path or builtin name")
        _add_limits(sub)
        sub.set_defaults(handler=handler)
        if name == "reduce":
            sub.add_argument("--log", choices=("table", "json"), default="table")
            sub.add_argument("--grouped", action="store_true", help="one row per run of regularisations")
        else:
            sub.add_argument("--dot", metavar="OUT", help="write the DOT text to OUT")

    sub = commands.add_parser("p1", help="count indecomposable modules through the P1 bocs")
    sub.add_argument("file", help="an algebra file or example:NAME")
    sub.add_argument("--one-sided", action="store_true", help="dashed arrows on the P side only")
    sub.add_argument("--max-steps", type=int, default=MAX_STEPS)
    sub.set_defaults(handler=_p1)

    sub = commands.add_parser("standardize", help="heredity, Delta multiplicities and Ext tables")
    sub.add_argument("file", help="an algebra file or example:NAME")
    sub.add_argument("--against", metavar="FILE", help="a bocs to compare with Ext of the standards")
    sub.set_defaults(handler=_standardize)

    sub = commands.add_parser("twosimple", help="the bocs with s solid and t dashed arrows 1 -> 2")
    sub.add_argument("s", type=int)
    sub.add_argument("t", type=int)
    sub.add_argument("--emit", action="store_true", help="print the bocs file instead of reducing")
    _add_limits(sub)
    sub.set_defaults(handler=_twosimple)

    sub = commands.add_parser("schur", help="dimensions for the Schur block with n simples")
    sub.add_argument("n", type=int)
    sub.set_defaults(handler=_schur)

    sub = commands.add_parser("example", help="print a builtin fixture")
    sub.add_argument("name")
    sub.add_argument("--emit", choices=("bocs", "algebra", "script"), default="bocs")
    sub.set_defaults(handler=_example)

    sub = commands.add_parser("oracle", help="enumerate indecomposables over a small prime field")
    sub.add_argument("file", help="a bocs file or example:NAME")
    sub.add_argument("--char", type=int, required=True)
    sub.add_argument("--caps", type=_caps, required=True, metavar="C1,C2,...")
    sub.set_defaults(handler=_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    """Run one command and return its exit code."""
    parser = build_parser()
    handler = None
    try:
        args = parser.parse_args(argv)
        set_verbosity(args.verbose)
        if args.log_file:
            handler = log_to_file(args.log_file)
        return args.handler(args)
    except SystemExit as stop:
        return stop.code if isinstance(stop.code, int) else EXIT_ERROR
    except (BocsError, ValueError, KeyError, OSError) as error:
        message = error.args[0] if isinstance(error, KeyError) and error.args else error
        print(f"error: {message}", file=sys.stderr)
        return EXIT_ERROR
    finally:
        if handler is not None:
            logger.removeHandler(handler)
            handler.close()


if __name__ == "__main__":
    sys.exit(main())
