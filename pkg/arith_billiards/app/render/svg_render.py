# app/render/svg_render.py

import logging
from pathlib import Path as FilePath
from typing import Optional, Sequence, Union

from jinja2 import Environment, FileSystemLoader, StrictUndefined

from app.core.billiards import path_trajectory
from app.core.grid_core import validate_point
from app.errors import InvalidInputError
from app.schemas.grid import GridSpec
from app.schemas.path import Path, Trajectory
from app.schemas.render import RenderOptions

logger = logging.getLogger("arith_billiards")

TEMPLATE_DIR = FilePath(__file__).parent / "templates"

_env = Environment(
    loader=FileSystemLoader(str(TEMPLATE_DIR)),
    autoescape=True,
    undefined=StrictUndefined,
    keep_trailing_newline=True,
)


def _fmt(value: float) -> str:
    return f"{value:g}"


def render_grid(
    grid: GridSpec,
    paths: Sequence[Union[Trajectory, Path]] = (),
    opts: Optional[RenderOptions] = None,
) -> str:
    """
    Draw a planar grid with one polyline per trajectory, (0, 0) at the
    bottom left. Paths are expanded with path_trajectory; colors cycle
    through the palette in input order.
    """
    if grid.p != 2:
        raise InvalidInputError(f"only planar grids can be rendered, grid {grid} has p={grid.p}")
    opts = opts or RenderOptions()
    m1, m2 = grid.dims
    cell, margin = opts.cell_size, opts.margin

    def sx(x: int) -> int:
        return margin + cell * x

    def sy(y: int) -> int:
        return margin + cell * (m2 - y)

    grid_lines = [dict(x1=sx(x), y1=sy(0), x2=sx(x), y2=sy(m2)) for x in range(1, m1)]
    grid_lines += [dict(x1=sx(0), y1=sy(y), x2=sx(m1), y2=sy(y)) for y in range(1, m2)]

    polylines = []
    for i, item in enumerate(paths):
        if isinstance(item, Path):
            kind = item.kind.value
            trajectory = path_trajectory(grid, item)
        else:
            kind = "trajectory"
            trajectory = item
        for point in trajectory.points:
            validate_point(grid, point)
        polylines.append(dict(
            kind=kind,
            color=opts.palette[i % len(opts.palette)],
            points=" ".join(f"{sx(pt.coords[0])},{sy(pt.coords[1])}" for pt in trajectory.points),
        ))

    svg = _env.get_template("grid.svg.j2").render(
        title=f"{m1}x{m2} grid",
        width=2 * margin + cell * m1,
        height=2 * margin + cell * m2,
        inner_width=cell * m1,
        inner_height=cell * m2,
        margin=margin,
        grid_lines=grid_lines,
        polylines=polylines,
        grid_stroke=_fmt(opts.grid_stroke_width),
        boundary_stroke=_fmt(opts.boundary_stroke_width),
        path_stroke=_fmt(opts.path_stroke_width),
    )
    logger.debug(f"Rendered grid {grid} with {len(polylines)} polylines ({len(svg)} bytes)")
    return svg
