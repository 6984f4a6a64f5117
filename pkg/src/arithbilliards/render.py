"""Static SVG drawings of 2-D grids and their billiard trajectories.

Trajectories render as polylines through every lattice point they visit,
reflection vertices included, with the y axis flipped so (0, 0) sits at the
bottom-left.  Output is a pure function of the inputs: integer coordinates
only, fixed attribute order, byte-identical across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from arithbilliards.billiards import Path, PathKind, Trajectory, step_length
from arithbilliards.core import GridSpec, PhaseState, Point


@dataclass(frozen=True)
class RenderOptions:
    cell_size: int = 40
    margin: int = 20
    palette: tuple[str, ...] = ("green", "blue", "red")
    grid_stroke_width: int = 1
    path_stroke_width: int = 2

    def __post_init__(self) -> None:
        object.__setattr__(self, "palette", tuple(self.palette))
        if self.cell_size < 1:
            raise ValueError(f"cell_size must be >= 1, got {self.cell_size}")
        if self.margin < 0:
            raise ValueError(f"margin must be >= 0, got {self.margin}")


def _orbit_points(grid: GridSpec, start: PhaseState, n_steps: int) -> list[Point]:
    two_m = grid.two_m
    dims = grid.dims
    cur = list(start.residues)
    pts = [Point(tuple(m - abs(m - u) for m, u in zip(dims, cur)))]
    for _ in range(n_steps):
        for i, tm in enumerate(two_m):
            cur[i] = (cur[i] + 1) % tm
        pts.append(Point(tuple(m - abs(m - u) for m, u in zip(dims, cur))))
    return pts


def _path_points(grid: GridSpec, path: Path) -> list[Point]:
    """Vertex list for drawing a Path.

    Closed paths draw one full period (a loop).  Open paths start from a
    vertex state on the orbit and draw half a period, giving the
    vertex-to-vertex beam without retracing.
    """
    k = step_length(grid)
    if path.kind is PathKind.CLOSED:
        return _orbit_points(grid, path.representative, k)
    cur = list(path.representative.residues)
    for _ in range(k):
        if all(u == 0 or u == m for u, m in zip(cur, grid.dims)):
            break
        for i, tm in enumerate(grid.two_m):
            cur[i] = (cur[i] + 1) % tm
    else:
        raise AssertionError("open path orbit never reached a grid vertex")
    return _orbit_points(grid, PhaseState(tuple(cur)), k // 2)


def render_grid(grid: GridSpec, paths, opts: RenderOptions | None = None) -> str:
    """Render a 2-D grid with the given Trajectory/Path items as an SVG document."""
    if grid.p != 2:
        raise ValueError(f"rendering requires a 2-D grid, got {grid.p} dimensions")
    opts = opts or RenderOptions()
    if not opts.palette:
        raise ValueError("palette must not be empty")
    m1, m2 = grid.dims
    cell = opts.cell_size
    margin = opts.margin
    width = 2 * margin + cell * m1
    height = 2 * margin + cell * m2

    def sx(x: int) -> int:
        return margin + cell * x

    def sy(y: int) -> int:
        return margin + cell * (m2 - y)

    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="{sx(0)}" y="{sy(m2)}" width="{cell * m1}" height="{cell * m2}" '
        f'fill="white" stroke="black" stroke-width="{opts.grid_stroke_width}"/>',
    ]
    for x in range(1, m1):
        parts.append(
            f'<line x1="{sx(x)}" y1="{sy(0)}" x2="{sx(x)}" y2="{sy(m2)}" '
            f'stroke="gray" stroke-width="{opts.grid_stroke_width}"/>'
        )
    for y in range(1, m2):
        parts.append(
            f'<line x1="{sx(0)}" y1="{sy(y)}" x2="{sx(m1)}" y2="{sy(y)}" '
            f'stroke="gray" stroke-width="{opts.grid_stroke_width}"/>'
        )
    for i, item in enumerate(paths):
        if isinstance(item, Trajectory):
            pts = list(item.points)
        elif isinstance(item, Path):
            pts = _path_points(grid, item)
        else:
            raise TypeError(f"cannot render {type(item).__name__}")
        for pt in pts:
            if len(pt.coords) != 2:
                raise ValueError("trajectory arity does not match the 2-D grid")
        color = opts.palette[i % len(opts.palette)]
        coords = " ".join(f"{sx(x)},{sy(y)}" for x, y in (pt.coords for pt in pts))
        parts.append(
            f'<polyline points="{coords}" fill="none" stroke="{color}" '
            f'stroke-width="{opts.path_stroke_width}"/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
