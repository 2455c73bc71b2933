"""
Junction construction: arm positioning, junction area cuts and the
line/arc connecting lanes.
"""

from .connect import (
    ConnectionGeometry, connect, connect_offset, COLLINEAR_EPS, OFFSET_EPS)

from .frame import (
    Arm, ArmGroup, JunctionFrame, position_arms, cut_junction_area,
    default_area)

from .builder import (
    build_segment, build_junction, build_roundabout, build_connection_road,
    build_connecting_road, classify_turn, policy_pairs, add_turn_lanes)

__all__ = [
    'ConnectionGeometry', 'connect', 'connect_offset', 'COLLINEAR_EPS',
    'OFFSET_EPS',
    'Arm', 'ArmGroup', 'JunctionFrame', 'position_arms', 'cut_junction_area',
    'default_area',
    'build_segment', 'build_junction', 'build_roundabout',
    'build_connection_road', 'build_connecting_road', 'classify_turn',
    'policy_pairs', 'add_turn_lanes']
