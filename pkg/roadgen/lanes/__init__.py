"""
Lanes in the s,t-frame of a road: width polynomials, lane tracks and the
lane sections built from them.
"""

from .width import (
    WidthPoly, constant_width, widening, lapse, transition)

from .layout import (
    Side, LaneType, Marking, LaneSpec, LaneSectionPlan, LaneTrack, RoadLanes,
    outer_offset, check_indices, constant_track, default_lanes,
    lane_change_track, turn_lane_track, parse_enum)

__all__ = [
    'WidthPoly', 'constant_width', 'widening', 'lapse', 'transition',
    'Side', 'LaneType', 'Marking', 'LaneSpec', 'LaneSectionPlan',
    'LaneTrack', 'RoadLanes', 'outer_offset', 'check_indices',
    'constant_track', 'default_lanes', 'lane_change_track',
    'turn_lane_track', 'parse_enum']
