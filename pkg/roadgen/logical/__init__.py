"""
The logical road network: the compact input format, its schema, the
parser and the canonical serializer.
"""

from .model import (
    SegmentKind, Classification, Turn, LaneEntry, LaneChangeSpec, LanesSpec,
    RoadSpec, IntersectionPoint, JunctionArea, AdditionalLane,
    ConnectionSpec, CouplerSpec, IntersectionSpec, SegmentSpec, EndSpec,
    LinkSpec, CloseSpec, WorldOffset, LogicalNetwork, END_NAMES)

from .parser import (
    parse, serialize, read_file, from_string, document_root, arm_ends,
    crossing_s)

from .schema import (validate_schema, load_schema, SCHEMA_FILE)

from .overrides import (apply_overrides, parse_override)

from .materialize import (road_lanes)

__all__ = [
    'SegmentKind', 'Classification', 'Turn', 'LaneEntry', 'LaneChangeSpec',
    'LanesSpec', 'RoadSpec', 'IntersectionPoint', 'JunctionArea',
    'AdditionalLane', 'ConnectionSpec', 'CouplerSpec', 'IntersectionSpec',
    'SegmentSpec', 'EndSpec', 'LinkSpec', 'CloseSpec', 'WorldOffset',
    'LogicalNetwork', 'END_NAMES',
    'parse', 'serialize', 'read_file', 'from_string', 'document_root',
    'arm_ends', 'crossing_s',
    'validate_schema', 'load_schema', 'SCHEMA_FILE',
    'apply_overrides', 'parse_override', 'road_lanes']
