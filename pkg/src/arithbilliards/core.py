"""Integer grids, lattice points, and phase-circle states.

A billiard trajectory moving along unit-cell diagonals of an
``m_1 x ... x m_p`` grid is awkward to iterate on positions alone, because
the next position depends on the current direction of travel.  Instead,
each coordinate lives on a cycle of ``2*m_i`` phase positions; advancing the
phase by one and projecting through the tent map ``x = m - |m - u|``
reproduces the reflecting motion exactly.  Everything else in this package
is built on these phase circles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

INT64_MAX = 2**63 - 1

#: Default ceiling for exhaustive work (phase states, lattice points, steps).
DEFAULT_STATE_BUDGET = 10_000_000


class BudgetExceededError(RuntimeError):
    """An exhaustive operation would exceed its state/step budget."""


@dataclass(frozen=True)
class GridSpec:
    """Dimensions ``(m_1, ..., m_p)`` of an integer grid, ``p >= 2``.

    Construction rejects grids whose full period ``2*lcm(dims)`` or total
    directed-segment count would not fit in a signed 64-bit integer, so the
    compiled kernels can always work in machine words.
    """

    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        dims = tuple(self.dims)
        object.__setattr__(self, "dims", dims)
        if len(dims) < 2:
            raise ValueError(
                f"a grid needs at least 2 dimensions, got {len(dims)}; "
                "one-dimensional grids are not supported"
            )
        for m in dims:
            if not isinstance(m, int) or isinstance(m, bool) or m < 1:
                raise ValueError(f"grid dimensions must be positive integers, got {dims!r}")
        if 2 * math.lcm(*dims) > INT64_MAX:
            raise OverflowError(f"2*lcm{dims!r} does not fit in 64 bits")
        if math.prod(2 * m for m in dims) > INT64_MAX:
            raise OverflowError(f"phase-state count of grid {dims!r} does not fit in 64 bits")

    @property
    def p(self) -> int:
        return len(self.dims)

    @property
    def two_m(self) -> tuple[int, ...]:
        return tuple(2 * m for m in self.dims)

    @property
    def lcm(self) -> int:
        return math.lcm(*self.dims)

    @property
    def gcd(self) -> int:
        return math.gcd(*self.dims)

    @property
    def n_points(self) -> int:
        return math.prod(m + 1 for m in self.dims)

    @property
    def n_states(self) -> int:
        return math.prod(self.two_m)

    @property
    def total_segments(self) -> int:
        """Number of unit-cell diagonals: ``2**(p-1) * m_1 * ... * m_p``."""
        return 2 ** (self.p - 1) * math.prod(self.dims)


@dataclass(frozen=True)
class Point:
    """Lattice point with ``0 <= x_i <= m_i``."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(self.coords))


@dataclass(frozen=True)
class PhaseState:
    """Per-coordinate residues ``u_i`` modulo ``2*m_i``.

    The lattice position is recovered per coordinate by the tent map
    ``x_i = m_i - |m_i - u_i|``; residues above ``m_i`` encode descending
    (reflected) travel.
    """

    residues: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "residues", tuple(self.residues))


@dataclass(frozen=True)
class DirectionMask:
    """Per-coordinate travel directions: 0 = forward, 1 = backward."""

    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        signs = tuple(self.signs)
        object.__setattr__(self, "signs", signs)
        if any(s not in (0, 1) for s in signs):
            raise ValueError(f"mask signs must be 0 or 1, got {signs!r}")

    @classmethod
    def ascending(cls, p: int) -> "DirectionMask":
        return cls((0,) * p)

    @classmethod
    def descending(cls, p: int) -> "DirectionMask":
        return cls((1,) * p)

    @classmethod
    def parse(cls, text: str) -> "DirectionMask":
        """Parse a string of ``+``/``-`` characters, one per coordinate."""
        table = {"+": 0, "-": 1}
        try:
            return cls(tuple(table[ch] for ch in text))
        except KeyError:
            raise ValueError(f"mask must consist of '+'/'-' characters, got {text!r}") from None

    def to_string(self) -> str:
        return "".join("+" if s == 0 else "-" for s in self.signs)


@dataclass(frozen=True)
class OrbitIndex:
    """Parity vector ``((x_1+x_2) mod 2, ..., (x_1+x_p) mod 2)`` of a point."""

    bits: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "bits", tuple(self.bits))


def validate_point(grid: GridSpec, point: Point) -> None:
    if len(point.coords) != grid.p:
        raise ValueError(f"point arity {len(point.coords)} does not match grid arity {grid.p}")
    for x, m in zip(point.coords, grid.dims):
        if not 0 <= x <= m:
            raise ValueError(f"point {point.coords!r} outside grid {grid.dims!r}")


def validate_state(grid: GridSpec, state: PhaseState) -> None:
    if len(state.residues) != grid.p:
        raise ValueError(f"state arity {len(state.residues)} does not match grid arity {grid.p}")
    for u, tm in zip(state.residues, grid.two_m):
        if not 0 <= u < tm:
            raise ValueError(f"state {state.residues!r} outside phase circles of {grid.dims!r}")


def validate_mask(grid: GridSpec, mask: DirectionMask) -> None:
    if len(mask.signs) != grid.p:
        raise ValueError(f"mask arity {len(mask.signs)} does not match grid arity {grid.p}")


def make_state(grid: GridSpec, residues) -> PhaseState:
    """Build a PhaseState, reducing each residue modulo its ``2*m_i`` circle.

    Accepts "unrolled" residues (e.g. a step counter that was never wrapped).
    """
    if len(residues) != grid.p:
        raise ValueError(f"residue arity {len(residues)} does not match grid arity {grid.p}")
    return PhaseState(tuple(u % tm for u, tm in zip(residues, grid.two_m)))


def project(grid: GridSpec, state: PhaseState) -> Point:
    """Tent-map projection of a phase state onto its lattice point."""
    validate_state(grid, state)
    return Point(tuple(m - abs(m - u) for m, u in zip(grid.dims, state.residues)))


def lift(grid: GridSpec, point: Point, mask: DirectionMask) -> PhaseState:
    """Choose the phase representative of ``point`` travelling along ``mask``.

    Forward (0) picks the ascending branch ``u_i = x_i``; backward (1) picks
    the descending branch ``u_i = (2*m_i - x_i) mod 2*m_i``.  Boundary
    coordinates (``x_i`` equal to 0 or ``m_i``) have a single representative,
    so both mask values agree there.  ``project(lift(point)) == point``.
    """
    validate_point(grid, point)
    validate_mask(grid, mask)
    residues = tuple(
        x if s == 0 else (tm - x) % tm
        for x, s, tm in zip(point.coords, mask.signs, grid.two_m)
    )
    return PhaseState(residues)


def step(grid: GridSpec, state: PhaseState) -> PhaseState:
    """Advance every phase circle by one (one unit-cell diagonal of travel)."""
    validate_state(grid, state)
    return PhaseState(tuple((u + 1) % tm for u, tm in zip(state.residues, grid.two_m)))


def step_back(grid: GridSpec, state: PhaseState) -> PhaseState:
    """Inverse of :func:`step`."""
    validate_state(grid, state)
    return PhaseState(tuple((u - 1) % tm for u, tm in zip(state.residues, grid.two_m)))


def step_directed(grid: GridSpec, state: PhaseState, mask: DirectionMask) -> PhaseState:
    """Advance each circle by +1 or -1 according to ``mask``."""
    validate_state(grid, state)
    validate_mask(grid, mask)
    return PhaseState(
        tuple(
            (u + (1 if s == 0 else -1)) % tm
            for u, s, tm in zip(state.residues, mask.signs, grid.two_m)
        )
    )


def reverse(grid: GridSpec, state: PhaseState) -> PhaseState:
    """Time-reverse a state: ``u_i -> -u_i``.  Keeps the position, flips travel.

    Conjugates :func:`step` into :func:`step_back`, and pairs each directed
    orbit with the one tracing the same geometric path the other way.
    """
    validate_state(grid, state)
    return PhaseState(tuple((tm - u) % tm for u, tm in zip(state.residues, grid.two_m)))


def index_of(point: Point) -> OrbitIndex:
    """Parity index classifying diagonal-walk orbits."""
    coords = point.coords
    if len(coords) < 2:
        raise ValueError("index is defined for points of arity >= 2")
    first = coords[0]
    return OrbitIndex(tuple((first + x) % 2 for x in coords[1:]))


# Mixed-radix encodings shared with the kernels (first coordinate is the most
# significant digit, so integer order equals lexicographic order on tuples).

def encode_state(grid: GridSpec, state: PhaseState) -> int:
    idx = 0
    for u, tm in zip(state.residues, grid.two_m):
        idx = idx * tm + u
    return idx


def decode_state(grid: GridSpec, index: int) -> PhaseState:
    residues = [0] * grid.p
    for i in range(grid.p - 1, -1, -1):
        tm = grid.two_m[i]
        index, residues[i] = divmod(index, tm)
    return PhaseState(tuple(residues))


def encode_point(grid: GridSpec, point: Point) -> int:
    idx = 0
    for x, m in zip(point.coords, grid.dims):
        idx = idx * (m + 1) + x
    return idx


def decode_point(grid: GridSpec, index: int) -> Point:
    coords = [0] * grid.p
    for i in range(grid.p - 1, -1, -1):
        index, coords[i] = divmod(index, grid.dims[i] + 1)
    return Point(tuple(coords))
