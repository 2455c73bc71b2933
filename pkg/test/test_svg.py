from pytest import (raises, approx)

from roadgen.display import (draw, render_svg, road_outlines)
from roadgen.errors import InputError
from roadgen.network import NetworkModel

from .networks import (document, connection_road, xjunction, model_of)


def test_empty_model():
    drawing = draw(NetworkModel('empty', (), ()))
    assert drawing['viewBox'] == '0.000 0.000 100.000 100.000'
    assert 'polyline' not in drawing.tostring()


def test_straight_road(defaults, tmp_path):
    model = model_of(document(connection_road(length=50)), defaults)
    road, = model.roads
    reference, boundaries = road_outlines(road, step=5.0)
    assert reference[0] == approx((0, 0))
    assert reference[-1] == approx((50, 0))
    # centre line plus one outer boundary per side
    assert len(boundaries) == 3
    ys = sorted(line[0][1] for line in boundaries)
    assert ys == approx([-3.5, 0.0, 3.5])

    path = tmp_path / 'road.svg'
    render_svg(model, path)
    text = path.read_text()
    assert text.startswith('<svg')
    assert text.count('<polyline') == 4
    assert '<polygon' not in text


def test_junction_surfaces(defaults):
    model = model_of(document(xjunction()), defaults)
    drawing = draw(model, step=2.0)
    polygons = [e for e in drawing.elements if e.elementname == 'polygon']
    assert len(polygons) == sum(1 for r in model.roads if r.junction)


def test_unwritable(defaults, tmp_path):
    model = model_of(document(connection_road()), defaults)
    with raises(InputError):
        render_svg(model, tmp_path / 'missing' / 'road.svg')
