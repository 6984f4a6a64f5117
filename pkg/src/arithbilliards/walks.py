"""Diagonal-walk reachability between lattice points.

A walk moves a point by one unit-cell diagonal per step (every coordinate
changes by +-1, staying inside the grid).  Connectivity is governed by the
parity index of :func:`core.index_of`: points are mutually reachable exactly
when their indexes agree, giving ``2**(p-1)`` orbits with sizes in closed
form.  The BFS here does not assume that; the test suite verifies it.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass

from arithbilliards import kernels
from arithbilliards.core import (
    DEFAULT_STATE_BUDGET,
    BudgetExceededError,
    DirectionMask,
    GridSpec,
    OrbitIndex,
    Point,
    index_of,
    lift,
    project,
    step_directed,
    validate_point,
)


@dataclass(frozen=True)
class OrbitSummary:
    index: OrbitIndex
    size: int
    sample: Point


def same_orbit(p1: Point, p2: Point) -> bool:
    """True iff the two points can reach each other by diagonal walking."""
    if len(p1.coords) != len(p2.coords):
        raise ValueError(
            f"point arities differ: {len(p1.coords)} vs {len(p2.coords)}"
        )
    return index_of(p1) == index_of(p2)


def orbit_size(grid: GridSpec, index: OrbitIndex) -> int:
    """Closed-form size of the orbit with the given parity index.

    Splitting on the parity of the first coordinate: with ``e_i`` the count
    of even values and ``o_i`` the count of odd values in ``[0, m_i]``, the
    orbit holds the points whose coordinate parities all match the index with
    ``x_1`` even, plus those matching with ``x_1`` odd.
    """
    bits = index.bits
    if len(bits) != grid.p - 1:
        raise ValueError(f"index arity {len(bits)} does not match grid arity {grid.p}")
    total = 0
    for first_parity in (0, 1):
        prod = 1
        for m, delta in zip(grid.dims, (0,) + bits):
            want = (delta + first_parity) % 2
            # values in [0, m] with the wanted parity
            prod *= m // 2 + 1 if want == 0 else (m + 1) // 2
        total += prod
    return total


def orbit_partition(grid: GridSpec) -> list[OrbitSummary]:
    """One summary per parity index, in lexicographic index order."""
    out = []
    for bits in itertools.product((0, 1), repeat=grid.p - 1):
        idx = OrbitIndex(bits)
        sample = Point((0,) + bits)
        out.append(OrbitSummary(index=idx, size=orbit_size(grid, idx), sample=sample))
    return out


def orbit_sizes_bruteforce(grid: GridSpec,
                           max_points: int = DEFAULT_STATE_BUDGET) -> dict[tuple[int, ...], int]:
    """Count points per parity index by enumerating the whole grid."""
    if grid.n_points > max_points:
        raise BudgetExceededError(
            f"grid has {grid.n_points} points, budget is {max_points}"
        )
    counts: dict[tuple[int, ...], int] = {}
    for coords in itertools.product(*[range(m + 1) for m in grid.dims]):
        first = coords[0]
        bits = tuple((first + x) % 2 for x in coords[1:])
        counts[bits] = counts.get(bits, 0) + 1
    return counts


def bfs_component_ids(grid: GridSpec,
                      max_points: int = DEFAULT_STATE_BUDGET) -> list[int]:
    """Component id per encoded lattice point under diagonal moves."""
    if grid.n_points > max_points:
        raise BudgetExceededError(
            f"grid has {grid.n_points} points, budget is {max_points}"
        )
    return kernels.bfs_components(list(grid.dims))


def find_walk(grid: GridSpec, start: Point, goal: Point,
              max_points: int = DEFAULT_STATE_BUDGET) -> list[DirectionMask] | None:
    """Shortest diagonal walk from ``start`` to ``goal``, or None.

    Breadth-first search over lattice points, exploring the ``2**p`` move
    directions in lexicographic order, so the returned walk is deterministic.
    The walk is replayed through :func:`core.step_directed` before returning.
    """
    validate_point(grid, start)
    validate_point(grid, goal)
    if grid.n_points > max_points:
        raise BudgetExceededError(
            f"grid has {grid.n_points} points, budget is {max_points}"
        )
    p = grid.p
    dims = grid.dims
    moves = [
        (DirectionMask(signs), tuple(1 if s == 0 else -1 for s in signs))
        for signs in itertools.product((0, 1), repeat=p)
    ]
    seen: dict[tuple[int, ...], tuple[tuple[int, ...], DirectionMask] | None] = {
        start.coords: None
    }
    queue = deque([start.coords])
    while queue:
        coords = queue.popleft()
        if coords == goal.coords:
            break
        for mask, delta in moves:
            nxt = tuple(c + d for c, d in zip(coords, delta))
            if any(not 0 <= c <= m for c, m in zip(nxt, dims)):
                continue
            if nxt not in seen:
                seen[nxt] = (coords, mask)
                queue.append(nxt)
    if goal.coords not in seen:
        return None
    walk: list[DirectionMask] = []
    coords = goal.coords
    while coords != start.coords:
        coords, mask = seen[coords]  # type: ignore[misc]
        walk.append(mask)
    walk.reverse()
    # replay through the phase dynamics to guarantee the walk is valid
    state = lift(grid, start, DirectionMask.ascending(p))
    at = start
    for mask in walk:
        state = step_directed(grid, state, mask)
        nxt = project(grid, state)
        expected = tuple(
            c + (1 if s == 0 else -1) for c, s in zip(at.coords, mask.signs)
        )
        assert nxt.coords == expected, "BFS emitted a move the dynamics rejects"
        at = nxt
    assert at == goal
    return walk
