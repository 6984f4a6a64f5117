"""Trajectory simulation, path enumeration and counting, light reachability.

A trajectory is the orbit of a phase state under :func:`core.step`.  Every
orbit has length ``2*lcm(dims)``.  Undirected geometric paths come in two
kinds: an orbit that equals its own time reversal traces a path between two
grid vertices (open), while the remaining orbits pair up two-by-two into
closed loops.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum

from arithbilliards import kernels
from arithbilliards.core import (
    DEFAULT_STATE_BUDGET,
    BudgetExceededError,
    DirectionMask,
    GridSpec,
    PhaseState,
    Point,
    decode_state,
    lift,
    project,
    step_back,
    validate_mask,
    validate_point,
    validate_state,
)


class PathKind(str, Enum):
    CLOSED = "closed"
    OPEN = "open"


@dataclass(frozen=True)
class Path:
    """One undirected geometric path.

    ``representative`` is the lexicographically least phase state anywhere on
    the path (over both travel directions).  Open paths traverse each of
    their segments twice per period, so they have half as many distinct
    segments.
    """

    representative: PhaseState
    kind: PathKind
    step_length: int
    distinct_segments: int


@dataclass(frozen=True)
class Trajectory:
    points: tuple[Point, ...]
    states: tuple[PhaseState, ...]


@dataclass(frozen=True)
class ReachAnswer:
    reachable: bool
    witness_steps: int | None
    sign_choice: tuple[int, ...] | None


def step_length(grid: GridSpec) -> int:
    """Number of unit-diagonal steps in one full period: ``2*lcm(dims)``."""
    return 2 * grid.lcm


def geometric_length(grid: GridSpec) -> float:
    """Euclidean length of one closed-path period.

    Each step crosses a unit cell along its main diagonal, so the length is
    ``2*lcm(dims) * sqrt(p)``.
    """
    return step_length(grid) * math.sqrt(grid.p)


def simulate(grid: GridSpec, start: Point, mask: DirectionMask, n_steps: int,
             max_steps: int = DEFAULT_STATE_BUDGET) -> Trajectory:
    """Walk ``n_steps`` unit diagonals from ``start``, initially along ``mask``."""
    validate_point(grid, start)
    validate_mask(grid, mask)
    if n_steps < 0:
        raise ValueError(f"n_steps must be >= 0, got {n_steps}")
    if n_steps > max_steps:
        raise BudgetExceededError(f"{n_steps} steps exceeds budget {max_steps}")
    two_m = grid.two_m
    dims = grid.dims
    state = lift(grid, start, mask)
    states = [state]
    points = [start]
    residues = list(state.residues)
    for _ in range(n_steps):
        for i, tm in enumerate(two_m):
            residues[i] = (residues[i] + 1) % tm
        state = PhaseState(tuple(residues))
        states.append(state)
        points.append(Point(tuple(m - abs(m - u) for m, u in zip(dims, residues))))
    return Trajectory(tuple(points), tuple(states))


def first_closure(grid: GridSpec, state: PhaseState, limit: int) -> int | None:
    """Least ``k`` in ``[1, limit]`` at which the trajectory from ``state``
    re-reads both its start position and the position one step before it.

    This is the operational definition of one full loop; it always equals
    ``2*lcm(dims)`` (checked exhaustively by the acceptance suite), so this
    function doubles as the iteration oracle for :func:`step_length`.
    """
    validate_state(grid, state)
    two_m = grid.two_m
    base = state.residues
    back = step_back(grid, state).residues
    cur = list(base)
    for k in range(1, limit + 1):
        ok = True
        for i, tm in enumerate(two_m):
            prev = cur[i]
            nxt = prev + 1
            if nxt == tm:
                nxt = 0
            cur[i] = nxt
            if ok:
                if nxt != base[i] and (nxt + base[i]) % tm != 0:
                    ok = False
                elif prev != back[i] and (prev + back[i]) % tm != 0:
                    ok = False
        if ok:
            return k
    return None


def _merge_congruence(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int] | None:
    """Merge ``k = r1 (mod m1)`` with ``k = r2 (mod m2)``; None if incompatible."""
    g = math.gcd(m1, m2)
    diff = r2 - r1
    if diff % g:
        return None
    mg = m2 // g
    t = (diff // g) * pow(m1 // g, -1, mg) % mg
    m = m1 // g * m2
    return (r1 + m1 * t) % m, m


def solve_congruences(residues, moduli) -> int | None:
    """Least ``k >= 0`` satisfying all ``k = residues[i] (mod moduli[i])``."""
    r, m = 0, 1
    for a, mod in zip(residues, moduli):
        merged = _merge_congruence(r, m, a % mod, mod)
        if merged is None:
            return None
        r, m = merged
    return r


def classify_path(grid: GridSpec, state: PhaseState) -> PathKind:
    """OPEN iff the orbit of ``state`` is its own time reversal.

    The reversal of the orbit of ``u`` is the orbit of ``-u``; they coincide
    exactly when ``k = -2*u_i (mod 2*m_i)`` has a common solution, which is
    also exactly when the orbit passes through a grid vertex.
    """
    validate_state(grid, state)
    residues = [(-2 * u) % tm for u, tm in zip(state.residues, grid.two_m)]
    if solve_congruences(residues, grid.two_m) is not None:
        return PathKind.OPEN
    return PathKind.CLOSED


def enumerate_paths(grid: GridSpec, max_states: int = DEFAULT_STATE_BUDGET) -> list[Path]:
    """All geometric paths of the grid, by exhaustive orbit tracing.

    Partitions every phase state into step orbits, pairs each orbit with its
    reversal, and reports one :class:`Path` per geometric path in ascending
    order of representative.  Independent of the counting formulas, which it
    is used to cross-check.
    """
    n_states = grid.n_states
    if n_states > max_states:
        raise BudgetExceededError(
            f"grid has {n_states} phase states, budget is {max_states}"
        )
    k = step_length(grid)
    paths = []
    for rep_idx, is_open in kernels.trace_paths(list(grid.two_m)):
        kind = PathKind.OPEN if is_open else PathKind.CLOSED
        paths.append(
            Path(
                representative=decode_state(grid, rep_idx),
                kind=kind,
                step_length=k,
                distinct_segments=k // 2 if is_open else k,
            )
        )
    return paths


def count_closed(grid: GridSpec) -> int:
    """Closed-path count by formula: ``2**(p-2) * (prod(dims)/lcm(dims) - 1)``.

    For ``p == 2`` this is ``gcd(m_1, m_2) - 1``.
    """
    quarter = 2 ** (grid.p - 2)
    return quarter * (math.prod(grid.dims) // grid.lcm) - quarter


def count_open(grid: GridSpec) -> int:
    """Open-path count: ``2**(p-1)`` (one per pair of grid vertices)."""
    return 2 ** (grid.p - 1)


def boundary_hits(grid: GridSpec, path: Path) -> int:
    """Boundary states visited in one full period of ``path``.

    A state is on the boundary when some coordinate sits at a wall
    (``u_i`` equal to 0 or ``m_i``).  For closed paths of a 2-D grid this
    equals ``2*(m_1 + m_2) / gcd(m_1, m_2)``.
    """
    dims = grid.dims
    two_m = grid.two_m
    cur = list(path.representative.residues)
    hits = 0
    for _ in range(path.step_length):
        if any(u == 0 or u == m for u, m in zip(cur, dims)):
            hits += 1
        for i, tm in enumerate(two_m):
            cur[i] = (cur[i] + 1) % tm
    return hits


def coordinate_sums(grid: GridSpec, start: PhaseState,
                    max_steps: int = DEFAULT_STATE_BUDGET) -> tuple[int, ...]:
    """Per-coordinate position sums over one full period from ``start``.

    Direct summation over ``k = 0 .. 2*lcm(dims)-1``; equals
    ``m_i * lcm(dims)`` per coordinate regardless of the start state.
    """
    validate_state(grid, start)
    period = step_length(grid)
    if period > max_steps:
        raise BudgetExceededError(f"period {period} exceeds budget {max_steps}")
    dims = grid.dims
    two_m = grid.two_m
    cur = list(start.residues)
    sums = [0] * grid.p
    for _ in range(period):
        for i, m in enumerate(dims):
            sums[i] += m - abs(m - cur[i])
            cur[i] = (cur[i] + 1) % two_m[i]
    return tuple(sums)


def _sign_tuples(p: int):
    return itertools.product((0, 1), repeat=p)


def light_reachable(grid: GridSpec, source: Point, mask: DirectionMask,
                    target: Point) -> ReachAnswer:
    """Does the trajectory from ``source`` (lifted along ``mask``) ever pass
    through ``target``?  Decided by congruences, without iterating.

    The trajectory reaches ``target`` at step ``k`` iff ``u_i + k`` lands on
    one of the (at most two) phase lifts of each target coordinate, i.e. the
    system ``k = v_i - u_i (mod 2*m_i)`` is solvable for some choice of lift
    signs.  All ``2**p`` sign choices are tried in lexicographic order and
    the least witness wins (ties keep the lexicographically first signs).
    """
    validate_point(grid, source)
    validate_point(grid, target)
    validate_mask(grid, mask)
    two_m = grid.two_m
    u = lift(grid, source, mask).residues
    best: int | None = None
    best_signs: tuple[int, ...] | None = None
    for signs in _sign_tuples(grid.p):
        residues = [
            ((t if s == 0 else (tm - t) % tm) - ui) % tm
            for t, s, ui, tm in zip(target.coords, signs, u, two_m)
        ]
        k = solve_congruences(residues, two_m)
        if k is not None and (best is None or k < best):
            best = k
            best_signs = signs
    if best is None:
        return ReachAnswer(False, None, None)
    return ReachAnswer(True, best, best_signs)


def light_reachable_oracle(grid: GridSpec, source: Point, mask: DirectionMask,
                           target: Point,
                           max_steps: int = DEFAULT_STATE_BUDGET) -> ReachAnswer:
    """Same contract as :func:`light_reachable`, decided by walking the full
    ``2*lcm(dims)`` period.  Kept independent as a cross-check."""
    validate_point(grid, source)
    validate_point(grid, target)
    validate_mask(grid, mask)
    period = step_length(grid)
    if period > max_steps:
        raise BudgetExceededError(f"period {period} exceeds budget {max_steps}")
    dims = grid.dims
    two_m = grid.two_m
    cur = list(lift(grid, source, mask).residues)
    tgt = target.coords
    for k in range(period):
        if all(m - abs(m - u) == t for m, u, t in zip(dims, cur, tgt)):
            signs = tuple(0 if u == t else 1 for u, t in zip(cur, tgt))
            return ReachAnswer(True, k, signs)
        for i, tm in enumerate(two_m):
            cur[i] = (cur[i] + 1) % tm
    return ReachAnswer(False, None, None)
