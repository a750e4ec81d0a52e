# app/core/walks.py
#
# Diagonal walks: each move changes every coordinate by one (reflecting at
# the walls). The parity vector I(P) is conserved, and it separates the
# lattice into 2^(p-1) orbits.

import itertools
import logging
from collections import deque
from typing import Dict, List, Optional, Set, Tuple

import numpy as np

from app.config import resolve_budget
from app.core.grid_core import index_of, lift, project, step_directed, validate_mask, validate_point
from app.errors import BudgetExceededError, ConsistencyError, InvalidInputError
from app.schemas.grid import DirectionMask, GridSpec, OrbitIndex, Point
from app.schemas.orbit import OrbitSummary
from app.utils.arith import checked_product

logger = logging.getLogger("arith_billiards")

Coords = Tuple[int, ...]


def same_orbit(grid: GridSpec, p1: Point, p2: Point) -> bool:
    validate_point(grid, p1)
    validate_point(grid, p2)
    return index_of(p1) == index_of(p2)


def _check_index(grid: GridSpec, index: OrbitIndex) -> None:
    if len(index.bits) != grid.p - 1:
        raise InvalidInputError(f"orbit index needs {grid.p - 1} bits for grid {grid}, got {len(index.bits)}")


def _parity_counts(m: int) -> Tuple[int, int]:
    """(evens, odds) in 0..m."""
    return (m + 1 + (m + 1) % 2) // 2, (m + 1 - (m + 1) % 2) // 2


def orbit_size(grid: GridSpec, index: OrbitIndex) -> int:
    """Points with x_1 even plus points with x_1 odd, the other parities fixed by the index."""
    _check_index(grid, index)
    parities = (0,) + tuple(index.bits)
    total = 0
    for first in (0, 1):
        term = 1
        for m, delta in zip(grid.dims, parities):
            term *= _parity_counts(m)[(first + delta) % 2]
        total += term
    return total


def _lattice_budget(grid: GridSpec, max_states: Optional[int]) -> int:
    budget = resolve_budget(max_states)
    n_points = checked_product((m + 1 for m in grid.dims), "lattice point count")
    if n_points > budget:
        raise BudgetExceededError(f"lattice scan of grid {grid}", n_points, budget)
    return n_points


def orbit_size_bruteforce(grid: GridSpec, index: OrbitIndex, max_states: Optional[int] = None) -> int:
    _check_index(grid, index)
    _lattice_budget(grid, max_states)
    coords = np.indices(tuple(m + 1 for m in grid.dims))
    matches = np.ones(coords.shape[1:], dtype=bool)
    for j, bit in enumerate(index.bits, start=1):
        matches &= (coords[0] + coords[j]) % 2 == bit
    return int(matches.sum())


def orbit_partition(
    grid: GridSpec, verify: bool = False, max_states: Optional[int] = None
) -> List[OrbitSummary]:
    summaries = []
    for bits in itertools.product((0, 1), repeat=grid.p - 1):
        index = OrbitIndex(bits=bits)
        size = orbit_size(grid, index)
        if verify:
            counted = orbit_size_bruteforce(grid, index, max_states)
            if counted != size:
                logger.warning(f"Orbit {bits} of grid {grid}: formula {size}, counted {counted}")
                raise ConsistencyError(f"orbit {bits} of grid {grid}: formula {size} != count {counted}")
        summaries.append(OrbitSummary(index=index, size=size, sample=Point(coords=(0,) + bits)))
    return summaries


def diagonal_move(grid: GridSpec, point: Point, mask: DirectionMask) -> Point:
    return project(grid, step_directed(grid, lift(grid, point), mask))


def _move(coords: Coords, dims: Coords, signs: Coords) -> Coords:
    # same as diagonal_move, on plain tuples
    return tuple(
        (x - 1 if x > 0 else 1) if s else (x + 1 if x < m else m - 1)
        for x, m, s in zip(coords, dims, signs)
    )


def walk_component(grid: GridSpec, point: Point, max_states: Optional[int] = None) -> Set[Point]:
    """Every lattice point reachable from ``point`` by diagonal moves."""
    validate_point(grid, point)
    _lattice_budget(grid, max_states)
    all_signs = list(itertools.product((0, 1), repeat=grid.p))
    seen = {point.coords}
    queue = deque([point.coords])
    while queue:
        cur = queue.popleft()
        for signs in all_signs:
            nxt = _move(cur, grid.dims, signs)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return {Point.model_construct(coords=c) for c in seen}


def find_walk(
    grid: GridSpec, p1: Point, p2: Point, max_states: Optional[int] = None
) -> Optional[List[DirectionMask]]:
    """
    Shortest sequence of direction masks moving ``p1`` to ``p2``, or None
    when the points lie in different orbits. Masks are tried in
    lexicographic order, so the first shortest walk is returned.
    """
    if not same_orbit(grid, p1, p2):
        logger.debug(f"No walk {p1.coords} -> {p2.coords}: indexes differ")
        return None
    if p1 == p2:
        return []
    _lattice_budget(grid, max_states)

    all_signs = list(itertools.product((0, 1), repeat=grid.p))
    start, goal = p1.coords, p2.coords
    prev: Dict[Coords, Tuple[Coords, Coords]] = {}
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if cur == goal:
            walk = []
            node = cur
            while node != start:
                node, signs = prev[node]
                walk.append(validate_mask(grid, DirectionMask(signs=signs)))
            walk.reverse()
            logger.debug(f"Walk {start} -> {goal} of length {len(walk)} on grid {grid}")
            return walk
        for signs in all_signs:
            nxt = _move(cur, grid.dims, signs)
            if nxt not in seen:
                seen.add(nxt)
                prev[nxt] = (cur, signs)
                queue.append(nxt)

    logger.warning(f"Points {start} and {goal} share an index but no walk joins them on grid {grid}")
    return None
