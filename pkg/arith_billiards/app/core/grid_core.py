# app/core/grid_core.py
#
# Every coordinate lives on a phase circle Z_{2m}: residue u encodes position
# and direction together, and the tent map m - |m - u| recovers the position.
# Stepping the light one unit diagonal adds 1 to every residue.

import itertools
import logging
from typing import Iterator, Optional, Sequence, Tuple

from app.errors import ArityMismatchError, InvalidInputError
from app.schemas.grid import DirectionMask, GridSpec, OrbitIndex, PhaseState, Point
from app.utils.arith import check_int64, checked_lcm

logger = logging.getLogger("arith_billiards")


def tent(u: int, m: int) -> int:
    return m - abs(m - u)


def period(grid: GridSpec) -> int:
    """Step length 2*lcm(m_1, ..., m_p), overflow checked."""
    return check_int64(2 * checked_lcm(grid.dims), "2*lcm(dims)")


def _check_arity(grid: GridSpec, values: Sequence[int], what: str) -> None:
    if len(values) != grid.p:
        raise ArityMismatchError(what, grid.p, len(values))


def validate_point(grid: GridSpec, point: Point) -> Point:
    _check_arity(grid, point.coords, "point")
    for x, m in zip(point.coords, grid.dims):
        if not 0 <= x <= m:
            raise InvalidInputError(f"point {point.coords} lies outside grid {grid}")
    return point


def validate_state(grid: GridSpec, state: PhaseState) -> PhaseState:
    _check_arity(grid, state.residues, "phase state")
    for u, mod in zip(state.residues, grid.moduli):
        if not 0 <= u < mod:
            raise InvalidInputError(f"residue {u} is not in [0, {mod}) for grid {grid}")
    return state


def validate_mask(grid: GridSpec, mask: DirectionMask) -> DirectionMask:
    _check_arity(grid, mask.signs, "direction mask")
    return mask


def _state(residues: Tuple[int, ...]) -> PhaseState:
    return PhaseState.model_construct(residues=residues)


def project_residues(dims: Sequence[int], residues: Sequence[int]) -> Tuple[int, ...]:
    return tuple(m - abs(m - u) for u, m in zip(residues, dims))


def project(grid: GridSpec, state: PhaseState) -> Point:
    validate_state(grid, state)
    return Point.model_construct(coords=project_residues(grid.dims, state.residues))


def lift(grid: GridSpec, point: Point, mask: Optional[DirectionMask] = None) -> PhaseState:
    """Pick the phase residue of each coordinate; ascending branch unless the mask says otherwise."""
    validate_point(grid, point)
    if mask is None:
        mask = DirectionMask.ascending(grid.p)
    validate_mask(grid, mask)
    return _state(tuple(
        (2 * m - x) % (2 * m) if s else x
        for x, m, s in zip(point.coords, grid.dims, mask.signs)
    ))


def advance(grid: GridSpec, state: PhaseState, k: int) -> PhaseState:
    """Apply step k times (k < 0 steps backward)."""
    validate_state(grid, state)
    return _state(tuple((u + k) % mod for u, mod in zip(state.residues, grid.moduli)))


def step(grid: GridSpec, state: PhaseState) -> PhaseState:
    return advance(grid, state, 1)


def step_back(grid: GridSpec, state: PhaseState) -> PhaseState:
    return advance(grid, state, -1)


def step_directed(grid: GridSpec, state: PhaseState, mask: DirectionMask) -> PhaseState:
    validate_state(grid, state)
    validate_mask(grid, mask)
    return _state(tuple(
        (u + (-1 if s else 1)) % mod
        for u, mod, s in zip(state.residues, grid.moduli, mask.signs)
    ))


def reverse(grid: GridSpec, state: PhaseState) -> PhaseState:
    validate_state(grid, state)
    return _state(tuple((mod - u) % mod for u, mod in zip(state.residues, grid.moduli)))


def index_of(point: Point) -> OrbitIndex:
    coords = point.coords
    if len(coords) < 2:
        raise InvalidInputError("the orbit index needs a point with at least 2 coordinates")
    x1 = coords[0]
    return OrbitIndex(bits=tuple((x1 + x) % 2 for x in coords[1:]))


def is_vertex_state(grid: GridSpec, state: PhaseState) -> bool:
    validate_state(grid, state)
    return all(u == 0 or u == m for u, m in zip(state.residues, grid.dims))


def is_boundary_state(grid: GridSpec, state: PhaseState) -> bool:
    validate_state(grid, state)
    return any(u == 0 or u == m for u, m in zip(state.residues, grid.dims))


def all_states(grid: GridSpec) -> Iterator[PhaseState]:
    for residues in itertools.product(*(range(mod) for mod in grid.moduli)):
        yield _state(residues)


def lattice_points(grid: GridSpec) -> Iterator[Point]:
    for coords in itertools.product(*(range(m + 1) for m in grid.dims)):
        yield Point.model_construct(coords=coords)
