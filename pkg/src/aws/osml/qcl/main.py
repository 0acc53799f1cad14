#  Copyright 2023-2024 Amazon.com, Inc. or its affiliates.

import argparse
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional

from pydantic import TypeAdapter, ValidationError
from pythonjsonlogger.jsonlogger import JsonFormatter

from .allocator import DEFAULT_GRID_STEP, SAParams, Strategy, make_problem, solve
from .app_config import QclConfig
from .confidence_fn import parse_components
from .errors import QclComputationError, QclInputError, SchemaError
from .experiments import Rq1Config, Rq2Config, load_config, run_rq1, run_rq2, write_csv
from .fault_tree import parse_ft, translate
from .logic import Confidence, dump_proof, find_proof_error, parse_proof
from .utils import ThreadingLocalContextFilter, configure_logger

EXIT_SUCCESS = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2
EXIT_COMPUTATION_ERROR = 3

CONFIDENCES_ADAPTER: TypeAdapter = TypeAdapter(Dict[str, Confidence])

logger = logging.getLogger(__name__)


def configure_qcl_logging(log_level: int = QclConfig.log_level) -> logging.Logger:
    """
    This function sets up structured JSON logging on stderr for the QCL package. Records emitted while an
    experiment instance runs carry the experiment and instance names.

    :param log_level: the level of the package logger
    :return: the package logger
    """
    package_logger = logging.getLogger("aws.osml.qcl")
    if not package_logger.handlers:
        package_logger.addHandler(logging.StreamHandler(sys.stderr))
    context_formatter = JsonFormatter(
        fmt="%(asctime)s %(levelname)s %(experiment)s %(instance)s %(message)s", datefmt="%Y-%m-%dT%H:%M:%S"
    )
    context_filter = ThreadingLocalContextFilter(["experiment", "instance"])
    configure_logger(package_logger, log_level, log_formatter=context_formatter, log_filter=context_filter)
    return package_logger


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text + "\n")
    else:
        Path(out).write_text(text + "\n", encoding="utf-8")


def cmd_allocate(args: argparse.Namespace) -> int:
    ft = parse_ft(_read(args.fault_tree))
    components = parse_components(_read(args.components))
    problem = make_problem(ft, components, args.budget)
    params = SAParams(iterations=args.iterations, cooling=args.cooling, initial_temperature=args.initial_temperature)
    result = solve(problem, Strategy(args.strategy), params, args.seed, args.grid_step)
    _emit(result.dump_json(), args.out)
    return EXIT_SUCCESS


def cmd_translate(args: argparse.Namespace) -> int:
    ft = parse_ft(_read(args.fault_tree))
    try:
        confidences = CONFIDENCES_ADAPTER.validate_json(_read(args.confidences))
    except ValidationError as err:
        raise SchemaError(f"Invalid confidences file: {err}") from err
    _emit(dump_proof(translate(ft, confidences)), args.out)
    return EXIT_SUCCESS


def cmd_check(args: argparse.Namespace) -> int:
    diagnostic = find_proof_error(parse_proof(_read(args.proof)))
    if diagnostic is not None:
        _emit(f"FAILED at {diagnostic}", args.out)
        return EXIT_CHECK_FAILED
    _emit("OK", args.out)
    return EXIT_SUCCESS


def _experiment_config(args: argparse.Namespace, config_type):
    cfg = load_config(config_type, _read(args.config)) if args.config else config_type()
    overrides = {}
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.workers is not None:
        overrides["workers"] = args.workers
    return cfg.model_copy(update=overrides) if overrides else cfg


def _write_rows(rows, out: Optional[str]) -> None:
    write_csv(rows, out if out is not None else sys.stdout)


def cmd_rq1(args: argparse.Namespace) -> int:
    _write_rows(run_rq1(_experiment_config(args, Rq1Config)), args.out)
    return EXIT_SUCCESS


def cmd_rq2(args: argparse.Namespace) -> int:
    _write_rows(run_rq2(_experiment_config(args, Rq2Config)), args.out)
    return EXIT_SUCCESS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qcl", description="Quantitative confidence logic and test resource allocation")
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default=None,
        help="level of the JSON logs written to stderr",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    allocate = commands.add_parser("allocate", help="split a test budget over the components of a fault tree")
    allocate.add_argument("--fault-tree", required=True, help="fault tree JSON")
    allocate.add_argument("--components", required=True, help="components JSON")
    allocate.add_argument("--budget", type=float, required=True, help="resources to distribute")
    allocate.add_argument("--strategy", choices=[strategy.value for strategy in Strategy], default=Strategy.SA.value)
    allocate.add_argument("--seed", type=int, default=0)
    allocate.add_argument("--iterations", type=int, default=SAParams().iterations)
    allocate.add_argument("--cooling", type=float, default=SAParams().cooling)
    allocate.add_argument("--initial-temperature", type=float, default=SAParams().initial_temperature)
    allocate.add_argument("--grid-step", type=float, default=DEFAULT_GRID_STEP)
    allocate.add_argument("--out", help="output path, stdout when absent")
    allocate.set_defaults(handler=cmd_allocate)

    translate_cmd = commands.add_parser("translate", help="translate a fault tree into a proof tree")
    translate_cmd.add_argument("--fault-tree", required=True, help="fault tree JSON")
    translate_cmd.add_argument("--confidences", required=True, help='JSON mapping leaves to {"t": .., "f": ..}')
    translate_cmd.add_argument("--out", help="output path, stdout when absent")
    translate_cmd.set_defaults(handler=cmd_translate)

    check = commands.add_parser("check", help="check a proof tree")
    check.add_argument("--proof", required=True, help="proof tree JSON")
    check.add_argument("--out", help="output path, stdout when absent")
    check.set_defaults(handler=cmd_check)

    for name, handler in (("rq1", cmd_rq1), ("rq2", cmd_rq2)):
        experiment = commands.add_parser(name, help=f"run the {name} experiment and write a CSV report")
        experiment.add_argument("--config", help="experiment configuration JSON, full scale defaults when absent")
        experiment.add_argument("--seed", type=int, default=None, help="overrides the configured seed")
        experiment.add_argument("--workers", type=int, default=None, help="overrides the configured worker count")
        experiment.add_argument("--out", help="output CSV path, stdout when absent")
        experiment.set_defaults(handler=handler)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Entry point of the qcl command. Exit statuses: 0 success, 1 failed proof check, 2 invalid input, 3 failed
    computation.

    :param argv: the command line arguments, defaults to sys.argv
    :return: the exit status
    """
    args = build_parser().parse_args(argv)
    log_level = logging.getLevelName(args.log_level) if args.log_level else QclConfig.log_level
    configure_qcl_logging(log_level)
    try:
        return args.handler(args)
    except (QclInputError, ValidationError, OSError, UnicodeDecodeError) as err:
        logger.error(f"Invalid input: {err}")
        sys.stderr.write(f"error: {err}\n")
        return EXIT_INPUT_ERROR
    except QclComputationError as err:
        logger.error(f"Computation failed: {err}")
        sys.stderr.write(f"error: {err}\n")
        return EXIT_COMPUTATION_ERROR


if __name__ == "__main__":
    sys.exit(main())
