from dataclasses import replace

from lxml import etree
from pytest import (raises, approx, fixture)

from roadgen.errors import ValidationError
from roadgen.logical import read_file
from roadgen.opendrive import (
    emit, to_xml, build_document, check_document, OdrLink, writer)

from ..networks import (model_of, document, connection_road)


@fixture(scope='module')
def two_tjunctions(examples, defaults):
    return model_of(read_file(examples / 'two_tjunctions.xml'), defaults)


def _root(text):
    return etree.fromstring(text.encode('utf-8'))


def test_deterministic(examples, defaults, two_tjunctions):
    again = model_of(read_file(examples / 'two_tjunctions.xml'), defaults)
    assert emit(two_tjunctions) == emit(again)


def test_counts(two_tjunctions):
    root = _root(emit(two_tjunctions))
    roads = root.findall('road')
    assert len(roads) == 19
    assert [r.get('id') for r in roads] == [str(n) for n in range(1, 20)]
    junctions = root.findall('junction')
    assert [j.get('id') for j in junctions] == ['1000', '1001']
    assert [len(j.findall('connection')) for j in junctions] == [6, 6]
    connecting = [r for r in roads if r.get('junction') != '-1']
    assert len(connecting) == 12


def test_header(two_tjunctions):
    header = _root(emit(two_tjunctions)).find('header')
    assert header.get('revMajor') == '1'
    assert header.get('revMinor') == '4'
    assert header.get('name') == 'two T-junctions'
    assert header.get('date') is None
    assert float(header.get('north')) >= float(header.get('south'))
    assert float(header.get('east')) > float(header.get('west'))
    assert header.find('geoReference').text.startswith('+proj')


def test_versions(two_tjunctions):
    text_14 = emit(two_tjunctions, '1.4')
    text_15 = emit(two_tjunctions, '1.5')
    assert _root(text_15).find('header').get('revMinor') == '5'
    assert all(j.get('type') is None
               for j in _root(text_14).findall('junction'))
    assert all(j.get('type') == 'default'
               for j in _root(text_15).findall('junction'))
    with raises(ValueError):
        emit(two_tjunctions, '1.6')


def test_numbers(two_tjunctions):
    text = emit(two_tjunctions)
    assert '"-0"' not in text
    root = _root(text)
    geometry = root.find('road/planView/geometry')
    for key in ('s', 'x', 'y', 'hdg', 'length'):
        float(geometry.get(key))


def test_plan_view(two_tjunctions):
    doc = build_document(two_tjunctions)
    for road in doc.roads:
        s = 0.0
        for g in road.geometry:
            assert g.s == approx(s, abs=1e-9)
            s += g.length
        assert s == approx(road.length)


def test_connecting_road(two_tjunctions):
    doc = build_document(two_tjunctions)
    road = next(r for r in doc.roads if r.junction != '-1')
    assert road.sections[0].left == ()
    lane, = road.sections[0].right
    assert lane.id == -1
    assert road.lane_offset is not None
    assert road.predecessor.element_type == 'road'
    assert road.successor.element_type == 'road'


def test_road_links(defaults):
    model = model_of(document(connection_road('a'), connection_road('b'),
                              links='<segmentLink fromSegment="a" '
                                    'fromRoad="r" fromEnd="end" '
                                    'toSegment="b" toRoad="r" '
                                    'toEnd="start"/>'), defaults)
    root = _root(emit(model))
    first, second = root.findall('road')
    successor = first.find('link/successor')
    assert dict(successor.attrib) == {'elementType': 'road', 'elementId': '2',
                                'contactPoint': 'start'}
    lane = second.find("lanes/laneSection/right/lane[@id='-1']")
    assert lane.find('link/predecessor').get('id') == '-1'


def test_check_document(two_tjunctions):
    doc = build_document(two_tjunctions)
    assert check_document(doc) == []

    road = doc.roads[0]
    g = road.geometry[0]
    broken = replace(road, geometry=(replace(g, length=g.length + 1),)
                     + road.geometry[1:])
    roads = (broken,) + doc.roads[1:]
    problems = check_document(replace(doc, roads=roads))
    assert any('add up' in p for p in problems)


def test_check_links(two_tjunctions):
    doc = build_document(two_tjunctions)
    k, road = next((k, r) for k, r in enumerate(doc.roads)
                   if r.successor is not None
                   and r.successor.element_type == 'road')
    wrong = replace(road, successor=OdrLink('road', road.id, 'start'))
    roads = doc.roads[:k] + (wrong,) + doc.roads[k + 1:]
    problems = check_document(replace(doc, roads=roads))
    assert any('link back' in p for p in problems)


def test_emit_refuses_inconsistent(two_tjunctions, monkeypatch):
    monkeypatch.setattr(writer, 'check_document',
                        lambda document: ['made up'])
    with raises(ValidationError) as info:
        emit(two_tjunctions)
    assert info.value.exit_code == 3


def test_to_xml_roundtrip(two_tjunctions):
    doc = build_document(two_tjunctions)
    root = _root(to_xml(doc))
    for road, el in zip(doc.roads, root.findall('road')):
        assert float(el.get('length')) == road.length
        hdg = float(el.find('planView/geometry').get('hdg'))
        assert hdg == road.geometry[0].hdg
