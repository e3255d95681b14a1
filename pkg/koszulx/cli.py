"""Command-line interface ``kv``.

Examples
--------
::

    kv hilbert --quotient "xy,xz,yz"
    kv syz "xy,xz,yz"
    kv saturate "x^2,x*y,x*z"
    kv check "x^2,x*y,y^2" --json
    kv verify arrangements --workers 4

Exit codes: 0 on success, 1 on input or precondition errors and failed
verification cases, 2 when an internal consistency check failed.
"""

import argparse
import json
import sys

from koszulx import __version__
from koszulx.algorithms.groebner import buchberger
from koszulx.algorithms.hilbert import hilbert_polynomial
from koszulx.algorithms.kv import KVReport, kv_verdict
from koszulx.algorithms.modules import saturate, syzygies
from koszulx.classes.module import QuotientModule, Submodule
from koszulx.config import SessionConfig
from koszulx.exception import InconsistencyError, KoszulXError, PreconditionError
from koszulx.read_write import (
    dump_report,
    format_polynomials,
    parse_polynomials,
    read_polynomials,
)
from koszulx.verification import SUITES, run_suite

__all__ = ["build_parser", "main"]

PROG = "kv"
EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INCONSISTENT = 2


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=None, metavar="PRIME",
                        help="field characteristic (default: $KV_DEFAULT_P or 32003)")
    common.add_argument("--seed", type=int, default=0, metavar="N",
                        help="seed of random draws")
    common.add_argument("--json", action="store_true",
                        help="print a JSON document instead of text")
    common.add_argument("--degree-cap", type=int, default=120, metavar="N",
                        help="largest degree used to certify Hilbert polynomials")
    common.add_argument("--workers", type=int, default=1, metavar="N",
                        help="worker processes for verification suites")
    common.add_argument("-v", "--verbose", action="store_true",
                        help="print progress to stderr")
    return common


def build_parser() -> argparse.ArgumentParser:
    """Return the argument parser of ``kv``."""
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Koszul and vanishing syzygies of codimension-two ideals in k[x,y,z].",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("gb", "print the reduced Gröbner basis"),
        ("syz", "print minimal generators of the syzygy module"),
        ("saturate", "print the saturation"),
        ("hilbert", "print Hilbert function and polynomial"),
        ("check", "compare Koszul and vanishing syzygies"),
    ):
        sub = commands.add_parser(name, parents=[common], help=help_text)
        sub.add_argument("ideal", nargs="?", help="comma separated generators")
        sub.add_argument("--file", metavar="PATH", help="read generators from a file, one per line")
        if name == "hilbert":
            sub.add_argument("--quotient", action="store_true", help="use R/I instead of I")

    verify = commands.add_parser("verify", parents=[common], help="run a verification suite")
    verify.add_argument("suite", help=f"one of: {', '.join(SUITES)}")
    verify.add_argument("--trials", type=int, default=None, metavar="N",
                        help="number of random cases")
    return parser


def _config(args) -> SessionConfig:
    kwargs = dict(
        seed=args.seed,
        degree_cap=args.degree_cap,
        output="json" if args.json else "text",
        workers=args.workers,
    )
    if args.p is not None:
        kwargs["p"] = args.p
    return SessionConfig(**kwargs)


def _forms(args, config: SessionConfig):
    if args.file:
        return read_polynomials(args.file, config.field)
    if args.ideal is None:
        raise PreconditionError("no generators given, pass them as an argument or with --file")
    return parse_polynomials(args.ideal, config.field)


def _log(args, message: str) -> None:
    if args.verbose:
        print(f"[{PROG}] {message}", file=sys.stderr)


def _emit(config: SessionConfig, document: dict, lines: list[str]) -> None:
    if config.output == "json":
        print(json.dumps(document, sort_keys=True, indent=2))
    else:
        print("\n".join(lines))


def _document(command: str, config: SessionConfig, forms, **fields) -> dict:
    return {"command": command, "field_char": config.p, "input": [str(f) for f in forms], **fields}


def cmd_gb(args, config: SessionConfig) -> int:
    """Print the reduced Gröbner basis of the ideal."""
    forms = _forms(args, config)
    basis = buchberger(Submodule.ideal(forms, config.field))
    elements = [str(g[0]) for g in basis]
    _emit(config, _document("gb", config, forms, basis=elements), elements)
    return EXIT_OK


def cmd_syz(args, config: SessionConfig) -> int:
    """Print minimal generators of the syzygy module."""
    forms = _forms(args, config)
    S = syzygies(Submodule.ideal(forms, config.field))
    generators = [str(g) for g in S]
    lines = [f"{g}  [degree {d}]" for g, d in zip(generators, S.degrees)]
    document = _document("syz", config, forms, syzygies=generators, degrees=list(S.degrees))
    _emit(config, document, lines)
    return EXIT_OK


def cmd_saturate(args, config: SessionConfig) -> int:
    """Print the saturation of the ideal."""
    forms = _forms(args, config)
    saturation = saturate(Submodule.ideal(forms, config.field)).polynomials()
    text = format_polynomials(saturation)
    _emit(config, _document("saturate", config, forms, saturation=[str(f) for f in saturation]), [text])
    return EXIT_OK


def cmd_hilbert(args, config: SessionConfig) -> int:
    """Print the Hilbert function and polynomial of I or R/I."""
    forms = _forms(args, config)
    I = Submodule.ideal(forms, config.field)
    data = hilbert_polynomial(QuotientModule(I) if args.quotient else I, config.degree_cap)
    lines = [
        f"Hilbert polynomial: {data}",
        f"stable from: {data.stable_from}",
        f"values: {' '.join(str(v) for v in data.values)}",
    ]
    document = _document("hilbert", config, forms, quotient=args.quotient, hilbert=data.to_dict())
    _emit(config, document, lines)
    return EXIT_OK


def _report_lines(report: KVReport) -> list[str]:
    def flag(value) -> str:
        return "n/a" if value is None else str(value).lower()

    lines = [
        f"input: {format_polynomials(report.forms)}",
        f"degrees: {', '.join(str(d) for d in report.degrees)}",
        f"deg Z: {report.deg_Z}",
        f"H(I/I^2): {report.H_I_mod_I2}",
        f"H(K): {report.H_K}",
        f"H(V): {report.H_V}",
        f"slack: {report.herzog_slack}",
        f"K=V: {flag(report.verdict_KeqV)}",
        f"lci: {flag(report.verdict_lci)}",
        f"consistent: {flag(report.verdict_theorem_consistent)}",
    ]
    lines.extend(f"witness: {w}" for w in report.witnesses)
    return lines


def cmd_check(args, config: SessionConfig) -> int:
    """Print the report comparing K and V; exit 2 if the verdicts disagree."""
    forms = _forms(args, config)
    if len(forms) not in (3, 4):
        raise PreconditionError(f"expected 3 or 4 generators, got {len(forms)}")
    _log(args, f"checking {len(forms)} forms over GF({config.p})")
    report = kv_verdict(forms, config.degree_cap)
    document = report.to_dict()
    if config.output == "json":
        print(dump_report(document))
    else:
        print("\n".join(_report_lines(report)))
    if report.verdict_theorem_consistent is False:
        return EXIT_INCONSISTENT
    return EXIT_OK


def cmd_verify(args, config: SessionConfig) -> int:
    """Run a verification suite and print one line per case."""
    if args.suite not in SUITES:
        raise PreconditionError(f"unknown suite {args.suite!r}, choose from {', '.join(SUITES)}")

    def progress(result) -> None:
        _log(args, f"{'PASS' if result.passed else 'FAIL'} {result.name}")

    results = run_suite(args.suite, config, args.trials, progress=progress)
    passed = sum(r.passed for r in results)
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name}  {r.detail}" for r in results]
    lines.append(f"{args.suite}: {passed}/{len(results)} passed")
    document = {
        "command": "verify",
        "suite": args.suite,
        "field_char": config.p,
        "seed": config.seed,
        "cases": [r.to_dict() for r in results],
        "passed": passed,
        "total": len(results),
    }
    _emit(config, document, lines)
    return EXIT_OK if passed == len(results) else EXIT_INPUT


COMMANDS = {
    "gb": cmd_gb,
    "syz": cmd_syz,
    "saturate": cmd_saturate,
    "hilbert": cmd_hilbert,
    "check": cmd_check,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    """Run ``kv`` and return its exit code."""
    args = build_parser().parse_args(argv)
    try:
        config = _config(args)
        return COMMANDS[args.command](args, config)
    except InconsistencyError as error:
        print(f"{PROG}: internal inconsistency: {error}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (KoszulXError, ValueError, OSError) as error:
        print(f"{PROG}: error: {error}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
