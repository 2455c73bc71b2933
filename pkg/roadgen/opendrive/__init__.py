"""
OpenDRIVE 1.4 and 1.5 output.
"""

from .document import (
    OdrHeader, OdrGeometry, OdrLink, OdrLane, OdrLaneSection, OdrRoad,
    OdrConnection, OdrJunction, OdrDocument, VERSIONS, build_document,
    check_document, bounds)

from .writer import (emit, to_xml, write_file)

from .validate import (validate)

__all__ = [
    'OdrHeader', 'OdrGeometry', 'OdrLink', 'OdrLane', 'OdrLaneSection',
    'OdrRoad', 'OdrConnection', 'OdrJunction', 'OdrDocument', 'VERSIONS',
    'build_document', 'check_document', 'bounds',
    'emit', 'to_xml', 'write_file', 'validate']
