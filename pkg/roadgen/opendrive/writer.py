"""
Writes an :py:class:`OdrDocument` as OpenDRIVE XML. Numbers are written
with 17 significant digits so that reading them back gives the same
floats; negative zero is written as zero. The output depends on nothing
but the document, so emitting a model twice gives identical text.
"""

from pathlib import Path

from lxml import etree

from ..errors import ValidationError
from ..geometry import ElementKind
from .document import (build_document, check_document)


def _num(x):
    x = float(x)
    if x == 0.0:
        x = 0.0
    return format(x, '.17g')


def _header(root, header):
    el = etree.SubElement(
        root, 'header', revMajor=str(header.rev_major),
        revMinor=str(header.rev_minor), name=header.name)
    if header.date is not None:
        el.set('date', header.date)
    for key in ('north', 'south', 'east', 'west'):
        el.set(key, _num(getattr(header, key)))
    geo = etree.SubElement(el, 'geoReference')
    geo.text = etree.CDATA(header.geo_reference)


def _road_link(parent, road):
    link = etree.SubElement(parent, 'link')
    for tag, target in (('predecessor', road.predecessor),
                        ('successor', road.successor)):
        if target is None:
            continue
        item = etree.SubElement(link, tag, elementType=target.element_type,
                                elementId=target.element_id)
        if target.contact_point is not None:
            item.set('contactPoint', target.contact_point)


def _plan_view(parent, road):
    plan = etree.SubElement(parent, 'planView')
    for g in road.geometry:
        el = etree.SubElement(plan, 'geometry', s=_num(g.s), x=_num(g.x),
                              y=_num(g.y), hdg=_num(g.hdg),
                              length=_num(g.length))
        if g.kind is ElementKind.LINE:
            etree.SubElement(el, 'line')
        elif g.kind is ElementKind.ARC:
            etree.SubElement(el, 'arc', curvature=_num(g.curv_start))
        else:
            etree.SubElement(el, 'spiral', curvStart=_num(g.curv_start),
                             curvEnd=_num(g.curv_end))


def _road_mark(parent, marking):
    etree.SubElement(parent, 'roadMark', sOffset='0', type=marking,
                     weight='standard', color='standard',
                     width='0' if marking == 'none' else '0.12')


def _lane(parent, lane):
    el = etree.SubElement(parent, 'lane', id=str(lane.id),
                          type=lane.lane_type, level='false')
    if lane.predecessor is not None or lane.successor is not None:
        link = etree.SubElement(el, 'link')
        if lane.predecessor is not None:
            etree.SubElement(link, 'predecessor', id=str(lane.predecessor))
        if lane.successor is not None:
            etree.SubElement(link, 'successor', id=str(lane.successor))
    for s_offset, a, b, c, d in lane.width:
        etree.SubElement(el, 'width', sOffset=_num(s_offset), a=_num(a),
                         b=_num(b), c=_num(c), d=_num(d))
    _road_mark(el, lane.marking)


def _lanes(parent, road):
    lanes = etree.SubElement(parent, 'lanes')
    if road.lane_offset is not None:
        a, b, c, d = road.lane_offset
        etree.SubElement(lanes, 'laneOffset', s='0', a=_num(a), b=_num(b),
                         c=_num(c), d=_num(d))
    for section in road.sections:
        el = etree.SubElement(lanes, 'laneSection', s=_num(section.s))
        if section.left:
            left = etree.SubElement(el, 'left')
            for lane in section.left:
                _lane(left, lane)
        center = etree.SubElement(el, 'center')
        lane = etree.SubElement(center, 'lane', id='0', type='none',
                                level='false')
        _road_mark(lane, section.center_marking)
        if section.right:
            right = etree.SubElement(el, 'right')
            for lane in section.right:
                _lane(right, lane)


def _road(root, road):
    el = etree.SubElement(root, 'road', name=road.name,
                          length=_num(road.length), id=road.id,
                          junction=road.junction)
    _road_link(el, road)
    etree.SubElement(el, 'type', s='0', type=road.road_type)
    _plan_view(el, road)
    _lanes(el, road)


def _junction(root, junction, version):
    el = etree.SubElement(root, 'junction', id=junction.id,
                          name=junction.name)
    if version == '1.5':
        el.set('type', 'default')
    for c in junction.connections:
        item = etree.SubElement(el, 'connection', id=c.id,
                                incomingRoad=c.incoming,
                                connectingRoad=c.connecting,
                                contactPoint=c.contact_point)
        for from_lane, to_lane in c.lane_links:
            etree.SubElement(item, 'laneLink', **{'from': str(from_lane),
                                                   'to': str(to_lane)})


def to_xml(document):
    """Format `document` as pretty-printed UTF-8 XML text."""
    root = etree.Element('OpenDRIVE')
    _header(root, document.header)
    for road in document.roads:
        _road(root, road)
    for junction in document.junctions:
        _junction(root, junction, document.version)
    return etree.tostring(root, pretty_print=True, xml_declaration=True,
                          encoding='UTF-8').decode('utf-8')


def emit(model, version='1.4'):
    """OpenDRIVE text of `model`.

    :param model: :py:class:`roadgen.network.NetworkModel`
    :param version: ``'1.4'`` or ``'1.5'``.
    :raises ValidationError: if the document fails the consistency checks.
    """
    document = build_document(model, version)
    problems = check_document(document)
    if problems:
        raise ValidationError("inconsistent OpenDRIVE model: " +
                              "; ".join(problems))
    return to_xml(document)


def write_file(text, path):
    Path(path).write_text(text, encoding='utf-8')
