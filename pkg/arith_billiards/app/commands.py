# app/commands.py
#
# One handler per CLI command. Each handler takes parsed arguments, calls the
# library and returns (CommandResult, exit code). Library exceptions are left
# to propagate; app.main maps them to exit codes.

import itertools
import logging
from pathlib import Path as FilePath
from typing import Any, Dict, List, Optional, Sequence, Tuple

from app.core.billiards import (
    boundary_count_formula,
    closed_at,
    count_closed,
    count_open,
    enumerate_paths,
    geometric_length,
    light_reachable,
    light_reachable_any,
    light_reachable_oracle,
    simulate,
    step_length,
)
from app.core.circseq import definitional_numerator, gen_function, series_expand
from app.core.polynomial import parse
from app.core.walks import orbit_partition, orbit_size_bruteforce
from app.errors import BudgetExceededError, InvalidInputError
from app.render.svg_render import render_grid
from app.schemas.command import CommandResult
from app.schemas.grid import DirectionMask, GridSpec, Point
from app.schemas.path import PathKind, ReachAnswer
from app.schemas.render import RenderOptions
from app.schemas.sequence import SeqSign, SeqSpec
from app.utils.arith import checked_lcm, checked_product, gcd_all
from app.utils.load_reference import load_factored_numerator

logger = logging.getLogger("arith_billiards")

EXIT_OK = 0
EXIT_INCONSISTENT = 1
EXIT_BAD_INPUT = 2
EXIT_BUDGET = 3
EXIT_IO = 4

CommandOutcome = Tuple[CommandResult, int]


def _result(command: str, grid: Optional[GridSpec], payload: Dict[str, Any]) -> CommandResult:
    return CommandResult(command=command, grid=grid.dims if grid else None, payload=payload)


def _consistency_exit(*flags: Optional[bool]) -> int:
    # None means the check was skipped
    return EXIT_INCONSISTENT if any(flag is False for flag in flags) else EXIT_OK


def cmd_count(dims: Sequence[int], max_states: Optional[int] = None) -> CommandOutcome:
    grid = GridSpec(dims=tuple(dims))
    closed, open_ = count_closed(grid), count_open(grid)
    k = step_length(grid)
    payload: Dict[str, Any] = {
        "closed": closed,
        "open": open_,
        "step_length": k,
        "geometric_length": {
            "steps": k,
            "per_step": f"sqrt({grid.p})",
            "approx": geometric_length(grid),
        },
        "details": {
            "lcm": checked_lcm(grid.dims),
            "gcd": gcd_all(grid.dims),
            "product": checked_product(grid.dims),
        },
        "enumeration": None,
        "consistent": None,
    }
    if grid.p == 2:
        payload["boundary_points"] = boundary_count_formula(grid)

    try:
        paths = enumerate_paths(grid, max_states)
    except BudgetExceededError as e:
        logger.warning(f"Skipping enumeration of grid {grid}: {e}")
        payload["enumeration"] = {"skipped": str(e)}
        return _result("count", grid, payload), EXIT_BUDGET

    enumerated_closed = sum(p.kind == PathKind.closed for p in paths)
    enumerated_open = sum(p.kind == PathKind.open for p in paths)
    payload["enumeration"] = {"closed": enumerated_closed, "open": enumerated_open}
    payload["consistent"] = enumerated_closed == closed and enumerated_open == open_
    if not payload["consistent"]:
        logger.warning(
            f"Grid {grid}: formula gives {closed} closed / {open_} open, "
            f"enumeration gives {enumerated_closed} / {enumerated_open}"
        )
    return _result("count", grid, payload), _consistency_exit(payload["consistent"])


def cmd_simulate(
    dims: Sequence[int],
    start: Sequence[int],
    mask: Optional[str] = None,
    steps: int = 0,
    max_states: Optional[int] = None,
) -> CommandOutcome:
    grid = GridSpec(dims=tuple(dims))
    direction = DirectionMask.parse(mask) if mask else None
    trajectory = simulate(grid, Point(coords=tuple(start)), direction, steps, max_states)
    origin = trajectory.points[0]
    returns_at = next((k for k, pt in enumerate(trajectory.points) if k >= 1 and pt == origin), None)
    payload = {
        "points": [list(pt.coords) for pt in trajectory.points],
        "closed_at": closed_at(grid, trajectory.states[0], max_steps=steps),
        "position_returns_at": returns_at,
    }
    return _result("simulate", grid, payload), EXIT_OK


def _answer_payload(answer: ReachAnswer) -> Dict[str, Any]:
    return {
        "reachable": answer.reachable,
        "witness_steps": answer.witness_steps,
        "sign_choice": list(answer.sign_choice) if answer.sign_choice is not None else None,
    }


def _oracle_any(grid: GridSpec, source: Point, target: Point, min_steps: int, max_states: Optional[int]) -> ReachAnswer:
    best = ReachAnswer(reachable=False)
    for signs in itertools.product((0, 1), repeat=grid.p):
        answer = light_reachable_oracle(grid, source, DirectionMask(signs=signs), target, min_steps, max_states)
        if answer.reachable and (not best.reachable or answer.witness_steps < best.witness_steps):
            best = answer
    return best


def cmd_reach(
    dims: Sequence[int],
    source: Sequence[int],
    target: Sequence[int],
    mask: Optional[str] = None,
    any_direction: bool = False,
    verify: bool = False,
    min_steps: int = 0,
    max_states: Optional[int] = None,
) -> CommandOutcome:
    grid = GridSpec(dims=tuple(dims))
    src, dst = Point(coords=tuple(source)), Point(coords=tuple(target))

    if any_direction:
        direction, answer = light_reachable_any(grid, src, dst, min_steps)
    else:
        direction = DirectionMask.parse(mask) if mask else DirectionMask.ascending(grid.p)
        answer = light_reachable(grid, src, direction, dst, min_steps)

    payload = _answer_payload(answer)
    payload["mask"] = str(direction) if direction is not None else None
    payload["oracle_checked"] = False
    payload["agree"] = None

    if verify:
        if any_direction:
            oracle = _oracle_any(grid, src, dst, min_steps, max_states)
        else:
            oracle = light_reachable_oracle(grid, src, direction, dst, min_steps, max_states)
        payload["oracle_checked"] = True
        payload["agree"] = (oracle.reachable, oracle.witness_steps) == (answer.reachable, answer.witness_steps)
        if not payload["agree"]:
            logger.warning(f"Reachability disagrees with iteration on grid {grid}: {answer} vs {oracle}")

    return _result("reach", grid, payload), _consistency_exit(payload["agree"])


def cmd_orbits(dims: Sequence[int], max_states: Optional[int] = None) -> CommandOutcome:
    grid = GridSpec(dims=tuple(dims))
    rows: List[Dict[str, Any]] = []
    for summary in orbit_partition(grid):
        try:
            counted: Optional[int] = orbit_size_bruteforce(grid, summary.index, max_states)
        except BudgetExceededError as e:
            logger.warning(f"Skipping brute-force orbit count: {e}")
            counted = None
        rows.append({
            "index": list(summary.index.bits),
            "size_formula": summary.size,
            "size_bruteforce": counted,
            "agree": None if counted is None else counted == summary.size,
            "sample": list(summary.sample.coords),
        })
    payload = {"orbits": rows, "total": sum(row["size_formula"] for row in rows)}
    return _result("orbits", grid, payload), _consistency_exit(*(row["agree"] for row in rows))


def cmd_genfunc(sign: str, t: int, m: int, expand: Optional[int] = None) -> CommandOutcome:
    spec = SeqSpec(sign=SeqSign("-" if sign in ("-", "−") else sign), t=t, m=m)
    gf = gen_function(spec)
    payload: Dict[str, Any] = {
        "numerator_coeffs": list(gf.numerator.coeffs),
        "period": gf.period,
        "consistent": gf.numerator == definitional_numerator(spec),
    }
    if expand is not None:
        payload["expansion"] = series_expand(gf, expand)

    reference_agree = None
    factored = load_factored_numerator(spec)
    if factored is not None:
        reference_agree = parse(factored) == gf.numerator
        payload["reference"] = {"factored": factored, "agree": reference_agree}

    return _result("genfunc", None, payload), _consistency_exit(payload["consistent"], reference_agree)


def cmd_render(
    dims: Sequence[int],
    out: str,
    which: str = "all",
    opts: Optional[RenderOptions] = None,
    max_states: Optional[int] = None,
) -> CommandOutcome:
    grid = GridSpec(dims=tuple(dims))
    if grid.p != 2:
        raise InvalidInputError(f"only planar grids can be rendered, got {grid.p} dimensions")
    paths = enumerate_paths(grid, max_states)
    if which != "all":
        paths = [p for p in paths if p.kind == PathKind(which)]
    svg = render_grid(grid, paths, opts)
    data = svg.encode("utf-8")
    target = FilePath(out)
    target.write_bytes(data)
    logger.info(f"Wrote {len(paths)} paths of grid {grid} to {target}")
    payload = {"file": str(target), "path_count": len(paths), "bytes": len(data)}
    return _result("render", grid, payload), EXIT_OK
