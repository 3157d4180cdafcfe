"""
The `gpcode` command line.

    gpcode construct --family {ngon|pg2|wq|q4|q5minus|hexagon} --q <int> [--dual] --out <file.gpg>
    gpcode verify --in <file.gpg> --n <int>
    gpcode code --in <file.gpg> --p <prime> [--min-weight] [--w-max <int>] [--classify]
    gpcode blocking --in <file.gpg> [--exhaustive-cap <int>]
    gpcode traces --in <file.gpg> --d <int>
    gpcode perp --in <file.gpg> [--variant literal|augmented]
    gpcode report --config <file.json> --out <file.json> [--seed <int>]

Results go to stdout, logs to stderr. The exit code follows the service
status: 0 success, 1 anomaly or certification failure, 2 bad input,
3 a cost guard stopped a search.
"""

import argparse
import sys
from typing import Awaitable, Callable, Dict, List, Optional

from src.app.core.codes.features.analyseCode.factory.FUNCTION_AnalyseCode import FUNCTION_AnalyseCode
from src.app.core.codes.features.analyseCode.schemas.INPUT_AnalyseCode import INPUT_AnalyseCode
from src.app.core.constructions.features.constructGeometry.factory.FUNCTION_ConstructGeometry import (
    FUNCTION_ConstructGeometry,
)
from src.app.core.constructions.features.constructGeometry.schemas.INPUT_ConstructGeometry import (
    INPUT_ConstructGeometry,
)
from src.app.core.constructions.functions.families import FAMILIES
from src.app.core.geometry.features.verifyGeometry.factory.FUNCTION_VerifyGeometry import (
    FUNCTION_VerifyGeometry,
)
from src.app.core.geometry.features.verifyGeometry.schemas.INPUT_VerifyGeometry import (
    INPUT_VerifyGeometry,
)
from src.app.core.origin.schemas.ServiceOutput import ServiceOutput
from src.app.core.reports.features.runPipeline.factory.FUNCTION_RunPipeline import FUNCTION_RunPipeline
from src.app.core.reports.features.runPipeline.schemas.INPUT_RunPipeline import INPUT_RunPipeline
from src.app.core.traces.features.analyseBlocking.factory.FUNCTION_AnalyseBlocking import (
    FUNCTION_AnalyseBlocking,
)
from src.app.core.traces.features.analyseBlocking.schemas.INPUT_AnalyseBlocking import (
    INPUT_AnalyseBlocking,
)
from src.app.core.traces.features.analysePerp.factory.FUNCTION_AnalysePerp import FUNCTION_AnalysePerp
from src.app.core.traces.features.analysePerp.schemas.INPUT_AnalysePerp import INPUT_AnalysePerp
from src.app.core.traces.features.listTraces.factory.FUNCTION_ListTraces import FUNCTION_ListTraces
from src.app.core.traces.features.listTraces.schemas.INPUT_ListTraces import INPUT_ListTraces
from src.app.infra.logger.services.service_logger import get_service_logger
from src.framework.helpers.cli_output import render, to_response
from src.framework.middlewares.command_error_handler import handle_command

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gpcode",
        description="Generalised polygons, their incidence codes, blocking sets and distance traces.",
    )
    parser.add_argument("--format", choices=["json", "text"], default="json", help="stdout format")
    parser.add_argument("--log-level", choices=LOG_LEVELS, type=str.upper, default=None)
    commands = parser.add_subparsers(dest="command", required=True)

    construct = commands.add_parser("construct", help="build a classical geometry and write it as .gpg")
    construct.add_argument("--family", choices=FAMILIES, required=True)
    construct.add_argument("--q", type=int, required=True, help="field order, or n for ngon")
    construct.add_argument("--dual", action="store_true")
    construct.add_argument("--out", required=True)

    verify = commands.add_parser("verify", help="certify a geometry as a generalised n-gon")
    verify.add_argument("--in", dest="path", required=True)
    verify.add_argument("--n", type=int, required=True)

    code = commands.add_parser("code", help="the incidence code over GF(p)")
    code.add_argument("--in", dest="path", required=True)
    code.add_argument("--p", type=int, required=True)
    code.add_argument("--min-weight", action="store_true")
    code.add_argument("--w-max", type=int, default=None)
    code.add_argument("--classify", action="store_true")
    code.add_argument("--allow-expensive", action="store_true", help="search past weight s+2")

    blocking = commands.add_parser("blocking", help="X-blocking sets and the line-blocking bound")
    blocking.add_argument("--in", dest="path", required=True)
    blocking.add_argument("--exhaustive-cap", type=int, default=None)
    blocking.add_argument("--n", type=int, default=None)

    traces = commands.add_parser("traces", help="distinct distance d-traces")
    traces.add_argument("--in", dest="path", required=True)
    traces.add_argument("--d", type=int, required=True)
    traces.add_argument("--n", type=int, default=None)

    perp = commands.add_parser("perp", help="perp geometries and projective points")
    perp.add_argument("--in", dest="path", required=True)
    perp.add_argument("--variant", choices=["literal", "augmented"], default="augmented")
    perp.add_argument("--point", type=int, default=None)
    perp.add_argument("--n", type=int, default=None)

    report = commands.add_parser("report", help="run the verification pipeline from a JSON config")
    report.add_argument("--config", required=True)
    report.add_argument("--out", required=True)
    report.add_argument("--seed", type=int, default=None)
    return parser


async def _construct(args: argparse.Namespace) -> ServiceOutput:
    return await FUNCTION_ConstructGeometry(
        INPUT_ConstructGeometry(family=args.family, q=args.q, dual=args.dual, out=args.out),
        command="construct",
    )


async def _verify(args: argparse.Namespace) -> ServiceOutput:
    return await FUNCTION_VerifyGeometry(INPUT_VerifyGeometry(path=args.path, n=args.n), command="verify")


async def _code(args: argparse.Namespace) -> ServiceOutput:
    return await FUNCTION_AnalyseCode(
        INPUT_AnalyseCode(
            path=args.path,
            p=args.p,
            min_weight=args.min_weight,
            w_max=args.w_max,
            classify=args.classify,
            allow_expensive=args.allow_expensive,
        ),
        command="code",
    )


async def _blocking(args: argparse.Namespace) -> ServiceOutput:
    return await FUNCTION_AnalyseBlocking(
        INPUT_AnalyseBlocking(path=args.path, exhaustive_cap=args.exhaustive_cap, n=args.n),
        command="blocking",
    )


async def _traces(args: argparse.Namespace) -> ServiceOutput:
    return await FUNCTION_ListTraces(INPUT_ListTraces(path=args.path, d=args.d, n=args.n), command="traces")


async def _perp(args: argparse.Namespace) -> ServiceOutput:
    return await FUNCTION_AnalysePerp(
        INPUT_AnalysePerp(path=args.path, variant=args.variant, point=args.point, n=args.n),
        command="perp",
    )


async def _report(args: argparse.Namespace) -> ServiceOutput:
    return await FUNCTION_RunPipeline(
        INPUT_RunPipeline(config_path=args.config, out=args.out, seed=args.seed),
        command="report",
    )


COMMANDS: Dict[str, Callable[[argparse.Namespace], Awaitable[ServiceOutput]]] = {
    "construct": _construct,
    "verify": _verify,
    "code": _code,
    "blocking": _blocking,
    "traces": _traces,
    "perp": _perp,
    "report": _report,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.log_level:
        get_service_logger().set_level(args.log_level)
    output = handle_command(args.command, lambda: COMMANDS[args.command](args))
    sys.stdout.write(render(to_response(args.command, output), args.format))
    sys.stdout.flush()
    return output.exit_code


if __name__ == "__main__":
    sys.exit(main())
