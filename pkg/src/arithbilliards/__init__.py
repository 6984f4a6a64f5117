"""Arithmetic billiards on p-dimensional integer grids.

Simulation and exact enumeration of reflecting diagonal trajectories,
closed-form path counts cross-checked by brute force, light reachability via
congruence systems, parity-orbit analysis of diagonal walks, triangle-wave
generating functions, and SVG rendering of 2-D grids.
"""

from arithbilliards.billiards import (
    Path,
    PathKind,
    ReachAnswer,
    Trajectory,
    boundary_hits,
    classify_path,
    coordinate_sums,
    count_closed,
    count_open,
    enumerate_paths,
    first_closure,
    geometric_length,
    light_reachable,
    light_reachable_oracle,
    simulate,
    step_length,
)
from arithbilliards.circseq import (
    IntPolynomial,
    RationalGF,
    SeqSpec,
    circ_seq,
    circ_seq_closed,
    gen_function,
    numerator_poly,
    ramp_poly,
    series_expand,
)
from arithbilliards.core import (
    DEFAULT_STATE_BUDGET,
    BudgetExceededError,
    DirectionMask,
    GridSpec,
    OrbitIndex,
    PhaseState,
    Point,
    index_of,
    lift,
    make_state,
    project,
    reverse,
    step,
    step_back,
    step_directed,
)
from arithbilliards.render import RenderOptions, render_grid
from arithbilliards.walks import (
    OrbitSummary,
    bfs_component_ids,
    find_walk,
    orbit_partition,
    orbit_size,
    orbit_sizes_bruteforce,
    same_orbit,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "DEFAULT_STATE_BUDGET",
    "DirectionMask",
    "GridSpec",
    "IntPolynomial",
    "OrbitIndex",
    "OrbitSummary",
    "Path",
    "PathKind",
    "PhaseState",
    "Point",
    "RationalGF",
    "ReachAnswer",
    "RenderOptions",
    "SeqSpec",
    "Trajectory",
    "bfs_component_ids",
    "boundary_hits",
    "circ_seq",
    "circ_seq_closed",
    "classify_path",
    "coordinate_sums",
    "count_closed",
    "count_open",
    "enumerate_paths",
    "find_walk",
    "first_closure",
    "gen_function",
    "geometric_length",
    "index_of",
    "lift",
    "light_reachable",
    "light_reachable_oracle",
    "make_state",
    "numerator_poly",
    "orbit_partition",
    "orbit_size",
    "orbit_sizes_bruteforce",
    "project",
    "ramp_poly",
    "render_grid",
    "reverse",
    "same_orbit",
    "series_expand",
    "simulate",
    "step",
    "step_back",
    "step_directed",
    "step_length",
]
