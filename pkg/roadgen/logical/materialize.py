"""
Turn the lane description of a logical road into lane tracks, filling in
the class defaults from :py:class:`roadgen.config.Defaults`.
"""

from ..lanes import (
    RoadLanes, Marking, constant_track, default_lanes, lane_change_track,
    parse_enum)
from ..run.logging import make_logger
from .model import Classification

logger = make_logger('lanes')


def road_lanes(road, defaults):
    """Lane tracks over the full length of `road`.

    Without explicit ``<lane>`` entries the road gets the default layout
    of its classification; roundabout rings are one-way with right lanes
    only. Lane widenings and lapses are added outermost on their side.

    :param road: :py:class:`RoadSpec`
    :param defaults: :py:class:`roadgen.config.Defaults`
    :rtype: :py:class:`roadgen.lanes.RoadLanes`
    """
    rd = defaults.road(road.classification.value)
    length = road.length
    spec = road.lanes
    lane_marking = parse_enum(Marking, rd.lane_marking, 'marking')

    if spec is None or not spec.lanes:
        one_way = road.classification is Classification.ROUNDABOUT
        lanes = default_lanes(rd, length, one_way)
        logger.debug("road '%s': default %s lanes, %d per direction",
                     road.id, road.classification.value,
                     rd.lanes_per_direction)
    else:
        tracks = tuple(
            constant_track(entry.side, entry.width or rd.lane_width, length,
                           entry.lane_type, entry.marking or lane_marking)
            for entry in spec.lanes)
        lanes = RoadLanes(length, tracks,
                          parse_enum(Marking, rd.center_marking, 'marking'))

    if spec is None:
        return lanes

    if spec.center_marking is not None:
        lanes = RoadLanes(lanes.length, lanes.tracks, spec.center_marking)

    for change in spec.changes:
        track = lane_change_track(
            change.side, change.width or rd.lane_width, change.s,
            change.length, length, change.kind, change.lane_type,
            lane_marking)
        lanes = lanes.with_track(track)

    return lanes
