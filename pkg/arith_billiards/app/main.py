# Entry point for the arith_billiards command line
import argparse
import logging
import sys
import time
from typing import List, Optional, Sequence, Tuple

from app import commands
from app.config import settings
from app.errors import BilliardsError, BudgetExceededError, GridOverflowError, InvalidInputError
from app.schemas.command import CommandResult
from app.schemas.render import RenderOptions
from app.utils.setup_logger import setup_logger

logger = logging.getLogger("arith_billiards")


class _Parser(argparse.ArgumentParser):
    """Report usage errors as InvalidInputError so they still produce a JSON document."""

    def error(self, message: str):
        raise InvalidInputError(message)


def int_list(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="arith_billiards", description="Arithmetic billiards on integer grids")
    parser.add_argument("--log-level", default=None, help="overrides BILLIARDS_LOG_LEVEL")
    parser.add_argument("--max-states", type=int, default=None, help="overrides BILLIARDS_MAX_STATES")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count open and closed paths")
    p.add_argument("--dims", type=int_list, required=True)

    p = sub.add_parser("simulate", help="follow the light for a number of steps")
    p.add_argument("--dims", type=int_list, required=True)
    p.add_argument("--start", type=int_list, required=True)
    p.add_argument("--mask", default=None, help="direction mask, e.g. +-")
    p.add_argument("--steps", type=int, default=0)

    p = sub.add_parser("reach", help="decide whether the light passes through a point")
    p.add_argument("--dims", type=int_list, required=True)
    p.add_argument("--from", dest="source", type=int_list, required=True)
    p.add_argument("--to", dest="target", type=int_list, required=True)
    direction = p.add_mutually_exclusive_group()
    direction.add_argument("--mask", default=None)
    direction.add_argument("--any-direction", action="store_true")
    p.add_argument("--min-steps", type=int, default=0)
    p.add_argument("--verify", action="store_true", help="cross-check by iterating one period")

    p = sub.add_parser("orbits", help="diagonal-walk orbits and their sizes")
    p.add_argument("--dims", type=int_list, required=True)

    p = sub.add_parser("genfunc", help="generating function of a circular sequence")
    p.add_argument("--sign", choices=["+", "-", "−"], required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--expand", type=int, default=None)

    p = sub.add_parser("render", help="draw the paths of a planar grid as SVG")
    p.add_argument("--dims", type=int_list, required=True)
    p.add_argument("--out", default="grid.svg")
    p.add_argument("--paths", choices=["all", "open", "closed"], default="all")
    p.add_argument("--cell-size", type=int, default=None)
    p.add_argument("--margin", type=int, default=None)
    p.add_argument("--palette", default=None, help="comma-separated colors")

    return parser


def _render_options(args: argparse.Namespace) -> RenderOptions:
    overrides = {}
    if args.cell_size is not None:
        overrides["cell_size"] = args.cell_size
    if args.margin is not None:
        overrides["margin"] = args.margin
    if args.palette is not None:
        overrides["palette"] = tuple(c.strip() for c in args.palette.split(",") if c.strip())
    return RenderOptions(**overrides)


def dispatch(args: argparse.Namespace) -> commands.CommandOutcome:
    if args.command == "count":
        return commands.cmd_count(args.dims, args.max_states)
    if args.command == "simulate":
        return commands.cmd_simulate(args.dims, args.start, args.mask, args.steps, args.max_states)
    if args.command == "reach":
        return commands.cmd_reach(
            args.dims, args.source, args.target,
            mask=args.mask,
            any_direction=args.any_direction,
            verify=args.verify,
            min_steps=args.min_steps,
            max_states=args.max_states,
        )
    if args.command == "orbits":
        return commands.cmd_orbits(args.dims, args.max_states)
    if args.command == "genfunc":
        return commands.cmd_genfunc(args.sign, args.t, args.m, args.expand)
    if args.command == "render":
        return commands.cmd_render(args.dims, args.out, args.paths, _render_options(args), args.max_states)
    raise InvalidInputError(f"unknown command {args.command!r}")


def _error_result(command: Optional[str], e: BaseException) -> CommandResult:
    return CommandResult(
        command=command or "",
        payload={"error": {"type": type(e).__name__, "message": str(e)}},
    )


def run(argv: Optional[Sequence[str]] = None) -> Tuple[CommandResult, int]:
    """Parse ``argv`` and execute one command; never raises for library errors."""
    command: Optional[str] = None
    started = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        command = args.command
        setup_logger(
            level=(args.log_level or settings.log_level).upper(),
            log_dir=settings.log_dir,
            to_file=settings.log_to_file,
        )
        logger.debug(f"Running {command} with {vars(args)}")
        result, code = dispatch(args)
    except BudgetExceededError as e:
        logger.exception(f"Budget exceeded in {command}")
        result, code = _error_result(command, e), commands.EXIT_BUDGET
    except (InvalidInputError, GridOverflowError, ValueError) as e:
        # pydantic's ValidationError is a ValueError
        logger.exception(f"Invalid input for {command}")
        result, code = _error_result(command, e), commands.EXIT_BAD_INPUT
    except OSError as e:
        logger.exception(f"I/O failure in {command}")
        result, code = _error_result(command, e), commands.EXIT_IO
    except BilliardsError as e:
        logger.exception(f"{command} failed")
        result, code = _error_result(command, e), commands.EXIT_INCONSISTENT

    result.elapsed_ms = round((time.perf_counter() - started) * 1000, 3)
    return result, code


def main(argv: Optional[List[str]] = None) -> int:
    result, code = run(argv)
    print(result.model_dump_json())
    return code


if __name__ == "__main__":
    sys.exit(main())
