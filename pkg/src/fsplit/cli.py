"""Command line interface over the compatibility toolkit."""

import argparse
import json
import sys

from .algorithm import CompatProblem, compatible_primes, singular_locus_ideal
from .decompose import minimal_primes
from .errors import (
    EngineError, ParseError, PreconditionError, RingMismatchError,
)
from .frobenius import (
    fedder_witness, frobenius_root, is_surjective_mod, stabilize_chain,
)
from .problem import parse_problem
from .report import (
    format_ideal, ideal_strings, render_dot, render_figure, render_json,
    render_text,
)


def _read_input(path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as err:
        raise PreconditionError("cannot read %s: %s" % (path, err))


def _emit(text):
    sys.stdout.write(text)


def _cmd_compat(args):
    problem = parse_problem(_read_input(args.input))
    if args.mode:
        problem = CompatProblem(problem.ring, problem.phi, problem.seed,
                                mode=args.mode,
                                locus_override=problem.locus_override)
    if args.threads < 1:
        raise PreconditionError("threads must be at least 1")
    result = compatible_primes(problem, threads=args.threads)
    if args.format == "json":
        _emit(render_json(problem, result, trace=args.trace))
    elif args.format == "dot":
        _emit(render_dot(result))
    else:
        _emit(render_text(problem, result, trace=args.trace))
    if args.figure:
        render_figure(result, args.figure)
    return 0


def _cmd_froot(args):
    problem = parse_problem(_read_input(args.input))
    e = args.e if args.e is not None else problem.phi.e
    if e < 1:
        raise PreconditionError("e must be at least 1")
    root = frobenius_root(problem.seed, e)
    if args.format == "json":
        _emit(json.dumps({"generators": ideal_strings(root)}, indent=2) + "\n")
    else:
        _emit(format_ideal(root) + "\n")
    return 0


def _cmd_star(args):
    problem = parse_problem(_read_input(args.input))
    mode = args.mode or problem.mode
    if mode == "auto":
        surjective = is_surjective_mod(problem.phi, problem.seed)
        mode = "surjective" if surjective else "general"
    chain, steps = stabilize_chain(problem.phi, problem.seed,
                                   mode == "general")
    if args.format == "json":
        _emit(json.dumps({"generators": ideal_strings(chain),
                          "steps": steps}, indent=2) + "\n")
    else:
        _emit("steps:\t%d\n%s\n" % (steps, format_ideal(chain)))
    return 0


def _cmd_fedder(args):
    problem = parse_problem(_read_input(args.input), fedder_check=False)
    witness = fedder_witness(problem.phi, problem.seed)
    if args.format == "json":
        entry = None
        if witness is not None:
            entry = {"generator": str(witness[0]),
                     "normal_form": str(witness[1])}
        _emit(json.dumps({"compatible": witness is None,
                          "witness": entry}, indent=2) + "\n")
    elif witness is None:
        _emit("compatible:\tyes\n")
    else:
        _emit("compatible:\tno\nwitness:\tu*(%s) has normal form %s modulo "
              "the bracket power of I\n" % (str(witness[0]), str(witness[1])))
    return 0


def _cmd_minprimes(args):
    problem = parse_problem(_read_input(args.input))
    components = minimal_primes(problem.seed)
    if args.format == "json":
        payload = {"primes": [
            {"id": i, "generators": ideal_strings(comp.ideal),
             "certified": comp.certified}
            for i, comp in enumerate(components)
        ]}
        _emit(json.dumps(payload, indent=2) + "\n")
    else:
        for i, comp in enumerate(components):
            flag = "certified" if comp.certified else "uncertified"
            _emit("[%d]\t%s\t%s\n" % (i, format_ideal(comp.ideal), flag))
    return 0


def _cmd_singular(args):
    problem = parse_problem(_read_input(args.input))
    locus = singular_locus_ideal(problem.seed)
    if args.format == "json":
        _emit(json.dumps({"generators": ideal_strings(locus)}, indent=2)
              + "\n")
    else:
        _emit(format_ideal(locus) + "\n")
    return 0


def _add_common(sub, formats=("text", "json")):
    sub.add_argument("--input", required=True, metavar="FILE",
                     help="problem file to read")
    sub.add_argument("--format", choices=formats, default="text",
                     help="output format")


def build_parser():
    """Assemble the argument parser with one subcommand per operation."""
    parser = argparse.ArgumentParser(
        prog="fsplit",
        description="Enumerate prime ideals compatible with a Frobenius "
                    "premultiplier map.")
    commands = parser.add_subparsers(dest="command", required=True)

    compat = commands.add_parser(
        "compat", help="enumerate the compatible primes of a problem file")
    _add_common(compat, formats=("text", "json", "dot"))
    compat.add_argument("--mode", choices=("auto", "surjective", "general"),
                        help="override the recursion mode from the file")
    compat.add_argument("--trace", action="store_true",
                        help="include per-round trace data")
    compat.add_argument("--threads", type=int, default=1, metavar="N",
                        help="worker threads per recursion level")
    compat.add_argument("--figure", metavar="PATH",
                        help="also draw the prime poset to an image file")
    compat.set_defaults(func=_cmd_compat)

    froot = commands.add_parser(
        "froot", help="Frobenius root of the ideal in a problem file")
    _add_common(froot)
    froot.add_argument("--e", type=int, metavar="N",
                       help="override the Frobenius power from the file")
    froot.set_defaults(func=_cmd_froot)

    star = commands.add_parser(
        "star", help="stabilized chain closure of the ideal under the map")
    _add_common(star)
    star.add_argument("--mode", choices=("auto", "surjective", "general"),
                      help="override the chain variant from the file")
    star.set_defaults(func=_cmd_star)

    fedder = commands.add_parser(
        "fedder", help="report whether the premultiplier respects the ideal")
    _add_common(fedder)
    fedder.set_defaults(func=_cmd_fedder)

    minprimes = commands.add_parser(
        "minprimes", help="minimal primes of the ideal in a problem file")
    _add_common(minprimes)
    minprimes.set_defaults(func=_cmd_minprimes)

    singular = commands.add_parser(
        "singular", help="singular locus ideal of the ideal in a problem file")
    _add_common(singular)
    singular.set_defaults(func=_cmd_singular)
    return parser


def main(argv=None):
    """Run one command and translate failures into exit codes."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, PreconditionError) as err:
        sys.stderr.write("error: %s\n" % err)
        return 1
    except (EngineError, RingMismatchError) as err:
        sys.stderr.write("error: %s\n" % err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
