import itertools
import math

import numpy as np
import pytest

from app.core.billiards import (
    boundary_count_formula,
    boundary_hits,
    classify_path,
    closed_at,
    coordinate_sum_formula,
    coordinate_sums,
    count_closed,
    count_open,
    enumerate_paths,
    geometric_length,
    open_path_endpoints,
    path_trajectory,
    simulate,
    step_length,
)
from app.core.grid_core import all_states, is_vertex_state, lift, project
from app.errors import BudgetExceededError, GridOverflowError, InvalidInputError
from app.schemas.grid import DirectionMask, GridSpec, PhaseState, Point
from app.schemas.path import PathKind
from tests.conftest import SMALL_PLANAR, SMALL_SPATIAL


@pytest.mark.parametrize(
    "dims, closed, open_",
    [
        ((6, 4), 1, 2),
        ((4, 3), 0, 2),
        ((4, 3, 2), 2, 4),
        ((1, 1), 0, 2),
        ((2, 2, 2), 6, 4),
        ((5, 5), 4, 2),
    ],
)
def test_count_formulas(dims, closed, open_):
    grid = GridSpec(dims=dims)
    assert count_closed(grid) == closed
    assert count_open(grid) == open_


@pytest.mark.parametrize("m, n", list(itertools.product(range(1, 21), repeat=2)))
def test_planar_closed_count_is_gcd_minus_one(m, n):
    grid, swapped, shifted = GridSpec.of(m, n), GridSpec.of(n, m), GridSpec.of(m + n, n)
    assert count_closed(grid) == math.gcd(m, n) - 1
    assert count_closed(grid) == count_closed(swapped) == count_closed(shifted)
    assert count_closed(GridSpec.of(n, n)) == n - 1


def _kinds(grid):
    paths = enumerate_paths(grid)
    return sum(p.kind == PathKind.closed for p in paths), sum(p.kind == PathKind.open for p in paths)


@pytest.mark.parametrize("dims", list(itertools.product(range(1, 31), repeat=2)))
def test_enumeration_matches_formulas_planar(dims):
    grid = GridSpec(dims=dims)
    assert _kinds(grid) == (count_closed(grid), count_open(grid))


@pytest.mark.parametrize("dims", SMALL_SPATIAL + [(3, 3, 3), (6, 4, 2), (2, 2, 2, 2), (3, 2, 2, 1)])
def test_enumeration_matches_formulas_spatial(dims):
    grid = GridSpec(dims=dims)
    assert _kinds(grid) == (count_closed(grid), count_open(grid))


@pytest.mark.parametrize("dims", SMALL_PLANAR + SMALL_SPATIAL)
def test_enumerated_paths_are_well_formed(dims):
    grid = GridSpec(dims=dims)
    k = step_length(grid)
    paths = enumerate_paths(grid)
    n_states = math.prod(grid.moduli)
    n_orbits = sum(2 if p.kind == PathKind.closed else 1 for p in paths)
    assert n_orbits * k == n_states
    reps = [p.representative.residues for p in paths]
    assert reps == sorted(reps)
    for path in paths:
        assert path.step_length == k
        assert classify_path(grid, path.representative) == path.kind
        assert path.distinct_segments == (k if path.kind == PathKind.closed else k // 2)


@pytest.mark.parametrize("dims", [(6, 4), (4, 3), (3, 3), (2, 2, 2)])
def test_open_states_fill_the_open_orbits(dims):
    grid = GridSpec(dims=dims)
    n_open = sum(classify_path(grid, s) == PathKind.open for s in all_states(grid))
    assert n_open == count_open(grid) * step_length(grid)


def test_classify_examples(grid_6x4, grid_4x3):
    assert classify_path(grid_6x4, lift(grid_6x4, Point.of(0, 3))) == PathKind.closed
    assert classify_path(grid_6x4, PhaseState.of(0, 0)) == PathKind.open
    # gcd(4, 3) = 1, so every path of 4x3 is open
    assert classify_path(grid_4x3, lift(grid_4x3, Point.of(2, 2))) == PathKind.open


def test_enumeration_budget_and_overflow(grid_6x4):
    with pytest.raises(BudgetExceededError):
        enumerate_paths(grid_6x4, max_states=10)
    with pytest.raises(GridOverflowError):
        count_closed(GridSpec.of(2**62, 3))
    with pytest.raises(GridOverflowError):
        step_length(GridSpec.of(2**62, 3))


def test_geometric_length(grid_6x4):
    assert step_length(grid_6x4) == 24
    assert geometric_length(grid_6x4) == pytest.approx(24 * math.sqrt(2))
    assert geometric_length(GridSpec.of(4, 3, 2)) == pytest.approx(24 * math.sqrt(3))


@pytest.mark.parametrize(
    "dims, kind, hits",
    [((6, 4), PathKind.closed, 10), ((5, 5), PathKind.closed, 4), ((1, 1), PathKind.open, 2)],
)
def test_boundary_hits_examples(dims, kind, hits):
    grid = GridSpec(dims=dims)
    path = next(p for p in enumerate_paths(grid) if p.kind == kind)
    assert boundary_hits(grid, path) == hits


@pytest.mark.parametrize("dims", list(itertools.product(range(1, 13), repeat=2)))
def test_boundary_hits_match_formula(dims):
    grid = GridSpec(dims=dims)
    formula = boundary_count_formula(grid)
    for path in enumerate_paths(grid):
        # open orbits pass through two vertices, each touching two walls at once
        expected = formula if path.kind == PathKind.closed else formula - 2
        assert boundary_hits(grid, path) == expected


def test_boundary_count_formula_is_planar():
    assert boundary_count_formula(GridSpec.of(6, 4)) == 10
    with pytest.raises(InvalidInputError):
        boundary_count_formula(GridSpec.of(2, 2, 2))


@pytest.mark.parametrize(
    "dims, sums",
    [((6, 4), [72, 48]), ((1, 1), [1, 1]), ((4, 3, 2), [48, 36, 24])],
)
def test_coordinate_sums(dims, sums):
    grid = GridSpec(dims=dims)
    assert coordinate_sum_formula(grid) == sums
    for state in itertools.islice(all_states(grid), 0, None, 7):
        assert coordinate_sums(grid, state) == sums


def _small_grids(max_m: int):
    planar = list(itertools.product(range(1, max_m + 1), repeat=2))
    return planar + list(itertools.product(range(1, max_m + 1), repeat=3))


@pytest.mark.parametrize("dims", _small_grids(6))
def test_coordinate_sums_from_every_state(dims):
    grid = GridSpec(dims=dims)
    sums = coordinate_sum_formula(grid)
    for state in all_states(grid):
        assert coordinate_sums(grid, state) == sums, state


def test_simulate_follows_the_light(grid_6x4):
    trajectory = simulate(grid_6x4, Point.of(0, 3), n_steps=3)
    assert [pt.coords for pt in trajectory.points] == [(0, 3), (1, 4), (2, 3), (3, 2)]
    assert trajectory.n_steps == 3
    assert trajectory.states[-1] == PhaseState.of(3, 6)

    descending = simulate(grid_6x4, Point.of(3, 3), DirectionMask.parse("-+"), n_steps=2)
    assert [pt.coords for pt in descending.points] == [(3, 3), (2, 4), (1, 3)]


def test_simulate_rejects_bad_input(grid_6x4):
    with pytest.raises(InvalidInputError):
        simulate(grid_6x4, Point.of(0, 3), n_steps=-1)
    with pytest.raises(InvalidInputError):
        simulate(grid_6x4, Point.of(7, 3), n_steps=1)
    with pytest.raises(BudgetExceededError):
        simulate(grid_6x4, Point.of(0, 3), n_steps=100, max_states=50)


def test_closed_at_is_the_period(grid_4x3):
    assert closed_at(grid_4x3, lift(grid_4x3, Point.of(2, 2))) == 24
    assert closed_at(grid_4x3, PhaseState.of(0, 0), max_steps=23) is None
    for state in itertools.islice(all_states(GridSpec.of(3, 2, 2)), 0, None, 5):
        assert closed_at(GridSpec.of(3, 2, 2), state) == 12


def _closed_at_grids():
    planar = list(itertools.product(range(1, 9), repeat=2))
    # relabelling axes permutes the residues, so sorted triples cover p = 3
    return planar + list(itertools.combinations_with_replacement(range(1, 9), 3))


@pytest.mark.parametrize("dims", _closed_at_grids())
def test_closed_at_every_state(dims):
    grid = GridSpec(dims=dims)
    k = step_length(grid)
    # least common multiple of the phase moduli
    assert k == min(j for j in range(1, k + 1) if all(j % mod == 0 for mod in grid.moduli))
    for state in all_states(grid):
        assert closed_at(grid, state) == k, state
        assert closed_at(grid, state, max_steps=k - 1) is None


def test_position_repeats_before_the_path_closes(grid_4x3):
    points = simulate(grid_4x3, Point.of(2, 2), n_steps=24).points
    assert next(k for k in range(1, 25) if points[k] == points[0]) == 8


@pytest.mark.parametrize("dims", SMALL_PLANAR + SMALL_SPATIAL + [(9, 6)])
def test_path_trajectories(dims):
    grid = GridSpec(dims=dims)
    k = step_length(grid)
    for path in enumerate_paths(grid):
        trajectory = path_trajectory(grid, path)
        if path.kind == PathKind.closed:
            assert trajectory.n_steps == k
            assert trajectory.points[0] == trajectory.points[-1]
            assert not any(is_vertex_state(grid, s) for s in trajectory.states)
        else:
            assert trajectory.n_steps == k // 2
            assert is_vertex_state(grid, trajectory.states[0])
            assert is_vertex_state(grid, trajectory.states[-1])
            assert trajectory.points[0] != trajectory.points[-1]


@pytest.mark.parametrize("dims", [(6, 4), (4, 3), (1, 1), (2, 2, 2), (4, 3, 2)])
def test_open_paths_pair_up_the_vertices(dims):
    grid = GridSpec(dims=dims)
    corners = set()
    for path in enumerate_paths(grid):
        if path.kind != PathKind.open:
            with pytest.raises(InvalidInputError):
                open_path_endpoints(grid, path)
            continue
        start, end = open_path_endpoints(grid, path)
        for point in (start, end):
            assert all(x in (0, m) for x, m in zip(point.coords, grid.dims))
        corners.update({start.coords, end.coords})
    assert corners == set(itertools.product(*((0, m) for m in grid.dims)))


def test_trajectory_states_project_to_points(grid_6x4):
    trajectory = simulate(grid_6x4, Point.of(1, 1), n_steps=30)
    projected = np.array([project(grid_6x4, s).coords for s in trajectory.states])
    assert (projected == np.array([pt.coords for pt in trajectory.points])).all()
