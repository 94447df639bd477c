"""
Argument parser for the cubegraph command line
"""

import argparse
from typing import List, Sequence

from ..cubes.exceptions import CubeError
from ..services.constructions import CONSTRUCTION_KINDS
from .config import CliConfig
from .models import CommandConfig


class UsageError(CubeError):
    """Malformed command line"""
    exit_code = 1


class CommandParser(argparse.ArgumentParser):
    """ArgumentParser that raises instead of exiting with status 2"""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def int_list(text: str) -> List[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'")


def float_list(text: str) -> List[float]:
    try:
        return [float(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got '{text}'")


def coordinate_sets(text: str) -> List[List[int]]:
    """'1,2;3;' -> [[1, 2], [3], []]; an empty entry is the class of the full cube"""
    return [int_list(part) for part in text.split(";")]


def _common() -> argparse.ArgumentParser:
    common = CommandParser(add_help=False)
    common.add_argument("--human", action="store_true", help="Aligned text tables instead of JSON")
    common.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")
    return common


def _add_output(parser: argparse.ArgumentParser, help_text: str) -> None:
    parser.add_argument("-o", "--output", help=help_text)


def _add_orders(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("-d", type=int, required=True, help="Cube dimension")
    parser.add_argument("-k", type=int, required=True, help="Clique order")
    parser.add_argument("-l", type=int, required=True, help="Independent set order")


def build_parser() -> CommandParser:
    common = _common()
    parser = CommandParser(
        prog=CliConfig.PROG,
        description="Subcube intersection graphs of {0,1}^d",
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=CommandParser)

    construct = sub.add_parser("construct", parents=[common], help="Build an extremal family")
    construct.add_argument("action", metavar="KIND", choices=CONSTRUCTION_KINDS,
                           help=" | ".join(CONSTRUCTION_KINDS))
    for flag in ("n", "d", "k", "r", "q", "x"):
        construct.add_argument(f"-{flag}", type=int)
    construct.add_argument("--fixed", dest="fixed_sets", type=coordinate_sets,
                           help="Fixed sets of the mixed construction, e.g. '1,2;3,4'")
    construct.add_argument("--enlarge", action="store_true", help="Blocks partition all of [d]")
    construct.add_argument("--format", choices=CliConfig.REPORT_FORMATS, default="family",
                           help="Family file (subcube kinds) or JSON document")
    _add_output(construct, "Write the family here and print a summary")

    analyze = sub.add_parser("analyze", parents=[common], help="Analyze a family file")
    analyze.add_argument("input", metavar="FILE")
    analyze.add_argument("--clique-sizes", type=int_list, help="Clique sizes to count, e.g. 2,3,4")

    optimize = sub.add_parser("optimize", parents=[common], help="Exact best partite profile")
    optimize.add_argument("-n", type=int, required=True)
    optimize.add_argument("-d", type=int, required=True)
    optimize.add_argument("-r", type=int, required=True)
    _add_output(optimize, "Write the realized family here")

    ramsey = sub.add_parser("ramsey", help="Ramsey values R_d(k, l)")
    actions = ramsey.add_subparsers(dest="action", required=True, parser_class=CommandParser)

    exact = actions.add_parser("exact", parents=[common], help="Exact value by exhaustive search")
    _add_orders(exact)
    exact.add_argument("--method", choices=("search", "bruteforce"), default="search")
    exact.add_argument("--workers", type=int, help="Worker processes (results do not depend on it)")
    exact.add_argument("--checkpoint", help="Checkpoint file")
    exact.add_argument("--resume", action="store_true", help="Continue from the checkpoint")
    exact.add_argument("--max-branches", type=int, help="Stop after this many branches and checkpoint")
    _add_output(exact, "Witness family file")

    bounds = actions.add_parser("bounds", parents=[common], help="Closed-form bounds")
    _add_orders(bounds)
    bounds.add_argument("--alpha", help="Override alpha in the l=3 bound, a positive rational such as 3/2")

    blowup = actions.add_parser("blowup", parents=[common], help="Blow-up lower bound")
    _add_orders(blowup)
    blowup.add_argument("-x", type=int, required=True, help="Clique bound of the witness graph")
    _add_output(blowup, "Blow-up family file")

    verify = actions.add_parser("verify", parents=[common], help="Check a witness family")
    verify.add_argument("input", metavar="FILE")
    verify.add_argument("-k", type=int, required=True)
    verify.add_argument("-l", type=int, required=True)

    sample = sub.add_parser("sample", parents=[common], help="Random subcube family")
    sample.add_argument("-n", type=int, required=True)
    sample.add_argument("-d", type=int, required=True)
    sample.add_argument("-p", type=float, help="Probability of each fixed value")
    sample.add_argument("--codim", type=float_list, help="Codimension distribution, d+1 entries")
    sample.add_argument("--seed", type=int, help="64-bit seed; generated and recorded when absent")
    sample.add_argument("--pairs", type=int, help="Estimate the edge probability from this many pairs")
    sample.add_argument("--workers", type=int, help="Sampling threads (results do not depend on it)")
    _add_output(sample, "Write the family here")

    export = sub.add_parser("export", parents=[common], help="Export the intersection graph")
    export.add_argument("input", metavar="FILE")
    export.add_argument("--format", choices=CliConfig.EXPORT_FORMATS, required=True)
    _add_output(export, "Write the export here instead of stdout")

    return parser


def parse_command(argv: Sequence[str]) -> CommandConfig:
    """Parse and validate argv"""
    namespace = build_parser().parse_args(list(argv))
    values = {key: value for key, value in vars(namespace).items() if key in CommandConfig.model_fields}
    return CommandConfig.build(**values)
