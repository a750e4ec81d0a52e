# app/core/billiards.py

import itertools
import logging
import math
from typing import List, Optional, Tuple

import numpy as np

from app.config import resolve_budget
from app.core.grid_core import (
    lift,
    period,
    project_residues,
    validate_mask,
    validate_point,
    validate_state,
)
from app.errors import BudgetExceededError, InvalidInputError
from app.schemas.grid import DirectionMask, GridSpec, PhaseState, Point
from app.schemas.path import Path, PathKind, ReachAnswer, Trajectory
from app.utils.arith import check_int64, checked_lcm, checked_product, solve_congruences

logger = logging.getLogger("arith_billiards")


def step_length(grid: GridSpec) -> int:
    return period(grid)


def geometric_length(grid: GridSpec) -> float:
    # one unit-cell main diagonal per step
    return step_length(grid) * math.sqrt(grid.p)


def _orbit_shift(grid: GridSpec, src: Tuple[int, ...], dst: Tuple[int, ...]) -> Optional[int]:
    """Least k >= 0 with src + k = dst on every phase circle, or None."""
    solution = solve_congruences((d - s, mod) for s, d, mod in zip(src, dst, grid.moduli))
    return None if solution is None else solution[0]


def _reverse_residues(grid: GridSpec, residues: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple((mod - u) % mod for u, mod in zip(residues, grid.moduli))


def classify_path(grid: GridSpec, state: PhaseState) -> PathKind:
    """Open iff the orbit of ``state`` is its own time reversal."""
    validate_state(grid, state)
    shift = _orbit_shift(grid, state.residues, _reverse_residues(grid, state.residues))
    return PathKind.open if shift is not None else PathKind.closed


def _first_vertex_shift(grid: GridSpec, residues: Tuple[int, ...]) -> Optional[int]:
    # u_i in {0, m_i} on Z_{2m_i}  <=>  u_i = 0 (mod m_i)
    solution = solve_congruences((-u, m) for u, m in zip(residues, grid.dims))
    return None if solution is None else solution[0]


def _make_path(grid: GridSpec, residues: Tuple[int, ...], kind: PathKind, k: int) -> Path:
    return Path(
        representative=PhaseState.model_construct(residues=residues),
        kind=kind,
        step_length=k,
        distinct_segments=k if kind == PathKind.closed else k // 2,
    )


def enumerate_paths(grid: GridSpec, max_states: Optional[int] = None) -> List[Path]:
    """
    Partition the phase space into step orbits and pair each orbit with its
    time reversal. Self-paired orbits are open paths; the remaining orbits
    pair up into closed paths. One Path per geometric path, ordered by
    representative.

    Raises:
        BudgetExceededError: more phase states than ``max_states``.
        GridOverflowError: state or segment totals beyond 64-bit range.
    """
    budget = resolve_budget(max_states)
    moduli = grid.moduli
    n_states = checked_product(moduli, "phase state count")
    check_int64(2 ** (grid.p - 1) * checked_product(grid.dims), "segment total")
    if n_states > budget:
        raise BudgetExceededError(f"enumeration of grid {grid}", n_states, budget)

    k = step_length(grid)
    logger.debug(f"Enumerating {n_states} phase states of grid {grid}, orbit length {k}")

    mod_col = np.array(moduli, dtype=np.int64)[:, None]
    ks = np.arange(k, dtype=np.int64)
    label = np.full(n_states, -1, dtype=np.int32)
    reps: List[Tuple[int, ...]] = []

    # every orbit meets u_1 = 0, so its least state starts with 0
    for rest in itertools.product(*(range(mod) for mod in moduli[1:])):
        start = (0,) + rest
        flat = int(np.ravel_multi_index(start, moduli))
        if label[flat] >= 0:
            continue
        orbit = (np.array(start, dtype=np.int64)[:, None] + ks) % mod_col
        label[np.ravel_multi_index(tuple(orbit), moduli)] = len(reps)
        reps.append(start)

    paths: List[Path] = []
    for orbit_id, rep in enumerate(reps):
        partner = int(label[np.ravel_multi_index(_reverse_residues(grid, rep), moduli)])
        if partner == orbit_id:
            paths.append(_make_path(grid, rep, PathKind.open, k))
        elif orbit_id < partner:
            paths.append(_make_path(grid, rep, PathKind.closed, k))

    logger.info(
        f"Grid {grid}: {len(reps)} orbits -> "
        f"{sum(p.kind == PathKind.open for p in paths)} open, "
        f"{sum(p.kind == PathKind.closed for p in paths)} closed paths"
    )
    return paths


def count_closed(grid: GridSpec) -> int:
    scale = 2 ** (grid.p - 2)
    return scale * (checked_product(grid.dims) // checked_lcm(grid.dims)) - scale


def count_open(grid: GridSpec) -> int:
    return 2 ** (grid.p - 1)


def _orbit_residues(grid: GridSpec, state: PhaseState, n: int) -> np.ndarray:
    """Residues of state, step(state), ..., as a (p, n) array."""
    mod_col = np.array(grid.moduli, dtype=np.int64)[:, None]
    start = np.array(state.residues, dtype=np.int64)[:, None]
    return (start + np.arange(n, dtype=np.int64)) % mod_col


def boundary_hits(grid: GridSpec, path: Path) -> int:
    """Visited states touching the boundary during one period of the path's orbit."""
    validate_state(grid, path.representative)
    orbit = _orbit_residues(grid, path.representative, step_length(grid))
    dims = np.array(grid.dims, dtype=np.int64)[:, None]
    return int(np.any((orbit == 0) | (orbit == dims), axis=0).sum())


def boundary_count_formula(grid: GridSpec) -> int:
    if grid.p != 2:
        raise InvalidInputError(f"the boundary-point formula is planar, grid {grid} has p={grid.p}")
    m1, m2 = grid.dims
    return 2 * (m1 + m2) // math.gcd(m1, m2)


def coordinate_sums(grid: GridSpec, start: PhaseState) -> List[int]:
    """Per-coordinate sums of positions over k = 0 .. K-1."""
    validate_state(grid, start)
    orbit = _orbit_residues(grid, start, step_length(grid))
    dims = np.array(grid.dims, dtype=np.int64)[:, None]
    positions = dims - np.abs(dims - orbit)
    return [int(s) for s in positions.sum(axis=1)]


def coordinate_sum_formula(grid: GridSpec) -> List[int]:
    lcm = checked_lcm(grid.dims)
    return [m * lcm for m in grid.dims]


def simulate(
    grid: GridSpec,
    start: Point,
    mask: Optional[DirectionMask] = None,
    n_steps: int = 0,
    max_states: Optional[int] = None,
) -> Trajectory:
    if n_steps < 0:
        raise InvalidInputError(f"n_steps must be nonnegative, got {n_steps}")
    budget = resolve_budget(max_states)
    if n_steps + 1 > budget:
        raise BudgetExceededError("trajectory", n_steps + 1, budget)

    state = lift(grid, start, mask)
    states = []
    points = []
    residues = state.residues
    for _ in range(n_steps + 1):
        states.append(PhaseState.model_construct(residues=residues))
        points.append(Point.model_construct(coords=project_residues(grid.dims, residues)))
        residues = tuple((u + 1) % mod for u, mod in zip(residues, grid.moduli))
    logger.debug(f"Simulated {n_steps} steps on grid {grid} from {start.coords}")
    return Trajectory(points=points, states=states)


def closed_at(grid: GridSpec, state: PhaseState, max_steps: Optional[int] = None) -> Optional[int]:
    """Least k >= 1 with step^k(s) = s and step^(k-1)(s) = step_back(s), by iteration."""
    validate_state(grid, state)
    limit = step_length(grid) if max_steps is None else max_steps
    start = state.residues
    before = tuple((u - 1) % mod for u, mod in zip(start, grid.moduli))
    previous = start
    for k in range(1, limit + 1):
        current = tuple((u + 1) % mod for u, mod in zip(previous, grid.moduli))
        if current == start and previous == before:
            return k
        previous = current
    return None


def path_trajectory(grid: GridSpec, path: Path) -> Trajectory:
    """Drawable trajectory of a path: a full loop if closed, vertex to vertex if open."""
    validate_state(grid, path.representative)
    k = step_length(grid)
    if path.kind == PathKind.closed:
        residues, n_steps = path.representative.residues, k
    else:
        shift = _first_vertex_shift(grid, path.representative.residues)
        if shift is None:
            raise InvalidInputError(f"path {path.representative.residues} is not open on grid {grid}")
        residues = tuple((u + shift) % mod for u, mod in zip(path.representative.residues, grid.moduli))
        n_steps = k // 2
    start = Point.model_construct(coords=project_residues(grid.dims, residues))
    mask = DirectionMask(signs=tuple(1 if u > m else 0 for u, m in zip(residues, grid.dims)))
    return simulate(grid, start, mask, n_steps, max_states=n_steps + 1)


def open_path_endpoints(grid: GridSpec, path: Path) -> Tuple[Point, Point]:
    trajectory = path_trajectory(grid, path)
    if path.kind != PathKind.open:
        raise InvalidInputError("only open paths have endpoints")
    return trajectory.points[0], trajectory.points[-1]


def _check_min_steps(min_steps: int) -> None:
    if min_steps < 0:
        raise InvalidInputError(f"min_steps must be nonnegative, got {min_steps}")


def _least_at_or_after(k0: int, modulus: int, min_steps: int) -> int:
    if k0 >= min_steps:
        return k0
    return k0 + -(-(min_steps - k0) // modulus) * modulus


def light_reachable(
    grid: GridSpec,
    source: Point,
    mask: Optional[DirectionMask],
    target: Point,
    min_steps: int = 0,
) -> ReachAnswer:
    """
    Decide whether the light from ``source`` (phase branch ``mask``) passes
    through ``target`` at some k >= min_steps, by solving
    k = v_i - u_i (mod 2m_i) for every phase lift v of the target.
    """
    _check_min_steps(min_steps)
    validate_point(grid, target)
    u = lift(grid, source, mask).residues
    best: Optional[Tuple[int, Tuple[int, ...]]] = None

    for choice in itertools.product((0, 1), repeat=grid.p):
        # boundary coordinates have a single lift, reached with choice 0
        if any(c and y in (0, m) for c, y, m in zip(choice, target.coords, grid.dims)):
            continue
        v = tuple((2 * m - y) % (2 * m) if c else y for c, y, m in zip(choice, target.coords, grid.dims))
        solution = solve_congruences((vi - ui, mod) for vi, ui, mod in zip(v, u, grid.moduli))
        if solution is None:
            continue
        k = _least_at_or_after(solution[0], solution[1], min_steps)
        if best is None or k < best[0]:
            best = (k, choice)

    logger.debug(f"Reach {source.coords} -> {target.coords} on grid {grid}: {best}")
    if best is None:
        return ReachAnswer(reachable=False)
    return ReachAnswer(reachable=True, witness_steps=best[0], sign_choice=best[1])


def light_reachable_oracle(
    grid: GridSpec,
    source: Point,
    mask: Optional[DirectionMask],
    target: Point,
    min_steps: int = 0,
    max_states: Optional[int] = None,
) -> ReachAnswer:
    """Same contract as light_reachable, decided by walking one full period."""
    _check_min_steps(min_steps)
    validate_point(grid, target)
    k_total = step_length(grid)
    budget = resolve_budget(max_states)
    if k_total > budget:
        raise BudgetExceededError(f"reachability walk on grid {grid}", k_total, budget)

    residues = lift(grid, source, mask).residues
    residues = tuple((u + min_steps) % mod for u, mod in zip(residues, grid.moduli))
    goal = target.coords
    for k in range(min_steps, min_steps + k_total):
        if project_residues(grid.dims, residues) == goal:
            choice = tuple(1 if u > m else 0 for u, m in zip(residues, grid.dims))
            return ReachAnswer(reachable=True, witness_steps=k, sign_choice=choice)
        residues = tuple((u + 1) % mod for u, mod in zip(residues, grid.moduli))
    return ReachAnswer(reachable=False)


def light_reachable_any(
    grid: GridSpec, source: Point, target: Point, min_steps: int = 0
) -> Tuple[Optional[DirectionMask], ReachAnswer]:
    """Try every starting direction; least witness wins, ties go to the lexicographically least mask."""
    best_mask: Optional[DirectionMask] = None
    best = ReachAnswer(reachable=False)
    for signs in itertools.product((0, 1), repeat=grid.p):
        mask = validate_mask(grid, DirectionMask(signs=signs))
        answer = light_reachable(grid, source, mask, target, min_steps)
        if answer.reachable and (not best.reachable or answer.witness_steps < best.witness_steps):
            best_mask, best = mask, answer
    return best_mask, best
