"""
Concrete roads and their assembly into one network in world coordinates.
"""

from .model import (
    Contact, BuiltRoad, JunctionConnection, JunctionRecord, EndRef,
    BuiltSegment, PlacedSegment, NetworkModel)

from .compound import (
    CompoundCurve, close_gap, symmetric_profile, asymmetric_profile,
    levenberg_marquardt)

from .assembler import (
    place_all, assemble, lane_links, closing_lanes, frame_for)

__all__ = [
    'Contact', 'BuiltRoad', 'JunctionConnection', 'JunctionRecord', 'EndRef',
    'BuiltSegment', 'PlacedSegment', 'NetworkModel',
    'CompoundCurve', 'close_gap', 'symmetric_profile', 'asymmetric_profile',
    'levenberg_marquardt',
    'place_all', 'assemble', 'lane_links', 'closing_lanes', 'frame_for']
