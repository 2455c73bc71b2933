"""
Top view of an assembled network as SVG: reference lines dashed, lane
boundaries solid, connecting roads inside junctions filled. Roads are
sampled at most `step` meters apart; the y-axis points up as on a map.
"""

import math
from pathlib import Path

import svgwrite

from ..errors import InputError
from ..lanes import Side
from ..run.logging import make_logger

logger = make_logger('display')

MARGIN = 10.0
EMPTY_SIZE = 100.0

REFERENCE_STYLE = dict(fill='none', stroke='#8888FF', stroke_width=0.1,
                       stroke_dasharray='1,1')
BOUNDARY_STYLE = dict(fill='none', stroke='#000000', stroke_width=0.15)
JUNCTION_STYLE = dict(fill='#CCCCCC', stroke='none', opacity=0.7)


def _section_at(sections, s):
    current = sections[0]
    for section in sections[1:]:
        if section.s_start <= s + 1e-9:
            current = section
    return current


def _lane_offset(road, s):
    if road.lane_offset is None:
        return 0.0
    return road.lane_offset(s)


def road_outlines(road, step=0.5):
    """Sampled geometry of one road.

    :return: ``(reference, boundaries)``: the reference line as a list of
        ``(x, y)`` and a list of polylines, one per lane boundary and
        section.
    """
    samples = road.resolved.sample(step)
    reference = [(pose.x, pose.y) for _, pose in samples]
    boundaries = []
    sections = road.sections
    for section in sections:
        end = section.s_start + section.length
        inside = [(s, pose) for s, pose in samples
                  if section.s_start - 1e-9 <= s <= end + 1e-9]
        for side in Side:
            count = len(section.lanes_on(side))
            for j in range(count + 1):
                if j == 0 and side is Side.RIGHT:
                    continue
                line = []
                for s, pose in inside:
                    local = s - section.s_start
                    t = section.boundaries(side, local)[j] + \
                        _lane_offset(road, s)
                    p = pose.lateral(t)
                    line.append((p.x, p.y))
                if len(line) > 1:
                    boundaries.append(line)
    return reference, boundaries


def _surface(road, step):
    samples = road.resolved.sample(step)
    left, right = [], []
    for s, pose in samples:
        section = _section_at(road.sections, s)
        local = s - section.s_start
        offset = _lane_offset(road, s)
        left.append(pose.lateral(
            section.outer_offset(Side.LEFT, local) + offset))
        right.append(pose.lateral(
            -section.outer_offset(Side.RIGHT, local) + offset))
    return [(p.x, p.y) for p in left + right[::-1]]


def _flip(points):
    return [(x, -y) for x, y in points]


def render_svg(model, path, step=0.5):
    """Write the top view of `model` to `path`.

    :param model: :py:class:`roadgen.network.NetworkModel`
    :param step: sampling distance along the roads in meters.
    :raises InputError: if the file cannot be written.
    """
    drawing = draw(model, step)
    try:
        Path(path).write_text(drawing.tostring(), encoding='utf-8')
    except OSError as exc:
        raise InputError("cannot write SVG '{}': {}".format(path, exc))
    logger.info("top view written to %s", path)


def draw(model, step=0.5):
    """The top view as a :py:class:`svgwrite.Drawing`."""
    surfaces = []
    references = []
    boundaries = []
    for road in model.roads:
        reference, lines = road_outlines(road, step)
        references.append(_flip(reference))
        boundaries.extend(_flip(line) for line in lines)
        if road.junction is not None:
            surfaces.append(_flip(_surface(road, step)))

    points = [p for line in references + boundaries for p in line]
    if points:
        xs = [p[0] for p in points]
        ys = [p[1] for p in points]
        x0, y0 = min(xs) - MARGIN, min(ys) - MARGIN
        width = max(xs) - min(xs) + 2 * MARGIN
        height = max(ys) - min(ys) + 2 * MARGIN
    else:
        x0, y0, width, height = 0.0, 0.0, EMPTY_SIZE, EMPTY_SIZE

    drawing = svgwrite.Drawing(
        size=("{:.3f}mm".format(width), "{:.3f}mm".format(height)),
        viewBox="{:.3f} {:.3f} {:.3f} {:.3f}".format(
            x0, y0, width, height))
    for outline in surfaces:
        drawing.add(drawing.polygon(_rounded(outline), **JUNCTION_STYLE))
    for line in boundaries:
        drawing.add(drawing.polyline(_rounded(line), **BOUNDARY_STYLE))
    for line in references:
        drawing.add(drawing.polyline(_rounded(line), **REFERENCE_STYLE))
    return drawing


def _rounded(points):
    return [(round(x, 3), round(y, 3)) for x, y in points
            if math.isfinite(x) and math.isfinite(y)]
