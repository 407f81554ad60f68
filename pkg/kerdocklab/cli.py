#!/usr/bin/env python3

""" Command line interface.

Every subcommand prints its result as JSON to stdout. Exit status is 0 on
success, 1 if ``verify-all`` finds a failing claim and 2 for usage errors and
for errors raised by kerdocklab.
"""

# std
import argparse
import json
import logging
import sys
from typing import List, Optional

# 3rd party
import numpy as np

# ours
from kerdocklab.analysis.components import GRAPH, SPAN, ComponentAnalyzer
from kerdocklab.analysis.design import design_strength
from kerdocklab.analysis.scheme import FULL, SAMPLED, restriction_scheme_check
from kerdocklab.codes.families import FAMILIES, ParityCheckCode, cached_family
from kerdocklab.codes.operators import (
    as_linear,
    distance_set,
    extend_complement,
    kernel,
    puncture,
    shorten,
    translate,
)
from kerdocklab.codes.storage import read_code, write_code
from kerdocklab.errors import KerdockLabError, SizeCapError
from kerdocklab.util.log import get_logger, set_global_log_level
from kerdocklab.util.metadata import failsafe_serialize
from kerdocklab.verify.claim import FULL as FULL_EFFORT, QUICK
from kerdocklab.verify.harness import VerificationHarness

logger = get_logger("cli")


def _print(obj) -> None:
    print(json.dumps(failsafe_serialize(obj), indent=2, sort_keys=True))


def _overwrite(args) -> str:
    return "overwrite" if args.overwrite else "raise"


# ******************************************************************************
# Subcommands
# ******************************************************************************


def cmd_build(args) -> int:
    code = cached_family(args.family, args.m, args.e)
    if isinstance(code, ParityCheckCode):
        raise SizeCapError(
            "{} is only available by its parity checks and can't be "
            "written to a file.".format(code)
        )
    write_code(code, args.out, overwrite=_overwrite(args))
    _print(code.describe())
    return 0


def cmd_derive(args) -> int:
    code = read_code(args.input)
    if args.operation in ("puncture", "shorten"):
        if args.coordinate is None:
            raise KerdockLabError(
                "{} needs --coordinate.".format(args.operation)
            )
        op = puncture if args.operation == "puncture" else shorten
        derived = op(code, args.coordinate)
    elif args.operation == "translate":
        if args.word is None:
            raise KerdockLabError("translate needs --word.")
        derived = translate(code, np.array([c == "1" for c in args.word]))
    else:
        extension = extend_complement(code)
        if not extension.precondition_holds:
            logger.warning(
                "Distances of the code and its complement-shifted copy "
                "overlap at {}.".format(sorted(extension.overlap))
            )
        derived = extension.code
    write_code(derived, args.out, overwrite=_overwrite(args))
    _print(derived.describe())
    return 0


def cmd_analyze(args) -> int:
    code = read_code(args.input)
    if args.quantity == "weights":
        _print(code.weight_distribution().to_dict())
    elif args.quantity == "distances":
        _print(sorted(distance_set(code)))
    else:
        ker = kernel(code)
        _print({"size": ker.size, "dimension": ker.size.bit_length() - 1})
    return 0


def cmd_design(args) -> int:
    code = read_code(args.input)
    report = design_strength(
        code.with_weight(args.weight),
        max_t=args.max_t,
        seed=args.seed,
    )
    _print(report.to_dict())
    return 0


def cmd_scheme(args) -> int:
    code = read_code(args.input)
    tensor = restriction_scheme_check(
        code,
        mode=SAMPLED if args.sampled else FULL,
        seed=args.seed,
        trials=args.trials,
    )
    _print(tensor.to_dict())
    return 0


def cmd_components(args) -> int:
    code = read_code(args.input)
    if args.method == SPAN:
        code = as_linear(code)
    analyzer = ComponentAnalyzer()
    analyzer.set_method(args.method)
    analyzer.set_coordinates(None if args.all else [args.coordinate])
    _print(analyzer.run(code).to_dict())
    return 0


def cmd_verify_all(args) -> int:
    harness = VerificationHarness()
    harness.set_effort(FULL_EFFORT if args.full else QUICK)
    harness.set_no_workers(args.workers)
    harness.set_progress_bar(args.progress)
    report = harness.run()
    if args.json:
        report.write(args.json)
    print(report.to_json())
    return report.exit_code


# ******************************************************************************
# Parser
# ******************************************************************************


def parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="kerdocklab",
        description="Build and analyze Kerdock codes, BCH codes and their "
        "duals; check the claims about them.",
    )
    verbosity = p.add_mutually_exclusive_group()
    verbosity.add_argument(
        "--verbose", "-v", action="store_true", help="Log at level INFO."
    )
    verbosity.add_argument(
        "--debug", action="store_true", help="Log at level DEBUG."
    )
    sub = p.add_subparsers(dest="command")
    sub.required = True

    build = sub.add_parser("build", help="Construct a code and save it.")
    build.add_argument("--family", required=True, choices=FAMILIES)
    build.add_argument("--m", required=True, type=int)
    build.add_argument(
        "--e", type=int, default=3, help="Exponent of the trace dual."
    )
    build.add_argument("--out", required=True)
    build.add_argument("--overwrite", action="store_true")
    build.set_defaults(func=cmd_build)

    derive = sub.add_parser("derive", help="Derive a code from a code file.")
    derive.add_argument(
        "operation", choices=["puncture", "shorten", "translate", "extend"]
    )
    derive.add_argument("--in", dest="input", required=True)
    derive.add_argument("--coordinate", type=int)
    derive.add_argument(
        "--word", help="Translation vector as 0/1 string, e.g. 0110."
    )
    derive.add_argument("--out", required=True)
    derive.add_argument("--overwrite", action="store_true")
    derive.set_defaults(func=cmd_derive)

    analyze = sub.add_parser("analyze", help="Weights, distances, kernel.")
    analyze.add_argument("quantity", choices=["weights", "distances", "kernel"])
    analyze.add_argument("--in", dest="input", required=True)
    analyze.set_defaults(func=cmd_analyze)

    design = sub.add_parser(
        "design", help="Design strength of the words of one weight."
    )
    design.add_argument("--in", dest="input", required=True)
    design.add_argument("--weight", required=True, type=int)
    design.add_argument("--max-t", dest="max_t", required=True, type=int)
    design.add_argument("--seed", type=int, default=0)
    design.set_defaults(func=cmd_design)

    scheme = sub.add_parser(
        "scheme", help="Intersection numbers of the restricted Hamming scheme."
    )
    scheme.add_argument("--in", dest="input", required=True)
    scheme.add_argument("--sampled", action="store_true")
    scheme.add_argument("--seed", type=int)
    scheme.add_argument("--trials", type=int, default=10 ** 5)
    scheme.set_defaults(func=cmd_scheme)

    components = sub.add_parser("components", help="i-components.")
    components.add_argument("--in", dest="input", required=True)
    which = components.add_mutually_exclusive_group(required=True)
    which.add_argument("--coordinate", type=int)
    which.add_argument("--all", action="store_true")
    components.add_argument("--method", choices=[GRAPH, SPAN], default=GRAPH)
    components.set_defaults(func=cmd_components)

    verify = sub.add_parser("verify-all", help="Check all registered claims.")
    effort = verify.add_mutually_exclusive_group()
    effort.add_argument("--quick", action="store_true", help="Default.")
    effort.add_argument("--full", action="store_true")
    verify.add_argument("--json", help="Also write the report to this file.")
    verify.add_argument(
        "--workers",
        type=int,
        help="Number of worker processes (default: $KERDOCKLAB_THREADS or "
        "number of CPUs).",
    )
    verify.add_argument("--progress", action="store_true")
    verify.set_defaults(func=cmd_verify_all)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = parser().parse_args(argv)
    except SystemExit as e:
        return e.code
    if args.debug:
        set_global_log_level(logging.DEBUG)
    elif args.verbose:
        set_global_log_level(logging.INFO)
    try:
        return args.func(args)
    except (KerdockLabError, ValueError, IndexError, OSError) as e:
        print("kerdocklab: error: {}".format(e), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
