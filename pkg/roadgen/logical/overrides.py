"""
Parameter overrides
===================

Overrides change attributes of the logical input before it is parsed, so
that one logical definition can be swept over a parameter space without
editing files. A key is a dotted path:

``header.<attr>``
    attribute of the ``<header>`` element;
``<segment>.<attr>``
    attribute of the segment element with that id;
``<segment>.<road>.<attr>``
    attribute of the road, or else of the road's ``<intersectionPoint>`` or
    ``<junctionArea>``;
``<segment>.<road>.<k>.<attr>``
    attribute of the `k`-th element (counting from 0) of the road's
    reference line.

For example ``--set x1.main.0.radius=80``.
"""

import copy

from ..errors import InputError
from ..run.logging import make_logger
from .model import SegmentKind
from .parser import document_root

logger = make_logger('overrides')


def parse_override(text):
    """Split ``key=value``."""
    key, sep, value = text.partition('=')
    if not sep or not key.strip():
        raise InputError("override '{}' is not of the form key=value".format(
            text))
    return key.strip(), value.strip()


def _segment(root, segment_id):
    segments = root.find('segments')
    if segments is not None:
        for el in segments:
            if el.tag in [k.value for k in SegmentKind] and \
                    el.get('id') == segment_id:
                return el
    raise InputError("override: no segment '{}'".format(segment_id))


def _road(segment, road_id):
    for el in segment.findall('road'):
        if el.get('id') == road_id:
            return el
    raise InputError("override: no road '{}' in segment '{}'".format(
        road_id, segment.get('id')))


def _target(root, path):
    if path[0] == 'header':
        header = root.find('header')
        if header is None or len(path) != 1:
            raise InputError("override: bad header key '{}'".format(
                '.'.join(path)))
        return [header]

    segment = _segment(root, path[0])
    if len(path) == 1:
        return [segment]

    road = _road(segment, path[1])
    if len(path) == 2:
        candidates = [road]
        candidates += [el for el in segment.findall('intersectionPoint')
                       if el.get('road') == path[1]]
        candidates += [el for el in segment.findall('coupler/junctionArea')
                       if el.get('road') == path[1]]
        return candidates

    if len(path) == 3:
        elements = road.find('referenceLine')
        try:
            k = int(path[2])
            if k < 0:
                raise ValueError(k)
            return [elements[k]]
        except (ValueError, IndexError, TypeError):
            raise InputError("override: road '{}' has no reference line "
                             "element {}".format(path[1], path[2]))

    raise InputError("override: key '{}' has too many parts".format(
        '.'.join(path)))


def apply_overrides(document, overrides):
    """Return a copy of `document` with overrides applied.

    :param document: lxml tree or root element of a logical network.
    :param overrides: iterable of ``(key, value)`` pairs or ``key=value``
        strings, applied in order.
    :raises InputError: if a key does not name an existing attribute.
    """
    root = copy.deepcopy(document_root(document))
    for item in overrides:
        key, value = parse_override(item) if isinstance(item, str) else item
        path = key.split('.')
        if len(path) < 2:
            raise InputError("override: key '{}' needs at least two parts"
                             .format(key))
        attribute = path[-1]
        for el in _target(root, path[:-1]):
            if attribute in el.attrib:
                logger.debug("override %s: %s -> %s", key,
                             el.get(attribute), value)
                el.set(attribute, value)
                break
        else:
            raise InputError("override: no attribute '{}' at '{}'".format(
                attribute, '.'.join(path[:-1])))
    return root
