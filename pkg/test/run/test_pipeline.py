from pytest import (raises, mark)

from roadgen.run.pipeline import (compile_network, export_svg)

from ..conftest import SUBSET_XSD
from ..networks import (document, connection_road, pair)


def _write(tmp_path, text, name='input.xml'):
    path = tmp_path / name
    path.write_text(text)
    return path


@mark.parametrize('name', ['xjunction', 'two_tjunctions', 'network'])
def test_examples(examples, name):
    outcome = compile_network(examples / (name + '.xml'), xsd=SUBSET_XSD)
    assert outcome.ok, outcome.diagnostics
    assert outcome.exit_code == 0
    assert outcome.xodr.startswith('<?xml')
    assert outcome.model is not None


def test_threads_do_not_change_output(examples):
    one = compile_network(examples / 'network.xml', n_threads=1)
    four = compile_network(examples / 'network.xml', n_threads=4)
    assert one.xodr == four.xodr


def test_notes(tmp_path):
    path = _write(tmp_path, document(
        '<connectionRoad id="c"><road id="r"><referenceLine>'
        '<line length="10"/></referenceLine></road></connectionRoad>'))
    outcome = compile_network(path)
    assert outcome.ok
    notes = [d for d in outcome.diagnostics if d.severity == 'note']
    assert notes and all(d.stage == 'parse' for d in notes)


def test_missing_input(tmp_path):
    outcome = compile_network(tmp_path / 'nothing.xml')
    assert outcome.exit_code == 1
    assert outcome.xodr is None
    assert outcome.errors[0].stage == 'read'


def test_schema_errors(tmp_path):
    path = _write(tmp_path, document(connection_road()).replace(
        'length="100"', 'length="0"'))
    outcome = compile_network(path)
    assert outcome.exit_code == 1
    assert {d.stage for d in outcome.errors} == {'schema'}


def test_bad_override(examples):
    outcome = compile_network(examples / 'xjunction.xml',
                              overrides=['x1.nowhere.0.radius=3'])
    assert outcome.exit_code == 1
    assert outcome.errors[0].stage == 'overrides'


def test_bad_defaults(examples, tmp_path):
    path = _write(tmp_path, "[main]\nlane_width = wide\n", 'defaults.ini')
    outcome = compile_network(examples / 'xjunction.xml',
                              defaults_path=path)
    assert outcome.exit_code == 1
    assert outcome.errors[0].stage == 'defaults'


def test_geometry_failure(tmp_path):
    curved = ('<connectionRoad id="k"><road id="r"><referenceLine>'
              '<arc length="20" radius="40"/></referenceLine></road>'
              '</connectionRoad>')
    path = _write(tmp_path, document(
        connection_road(), curved,
        links=pair('segmentLink', ('c', 'r', 'end'), ('k', 'r', 'start'))))
    outcome = compile_network(path)
    assert outcome.exit_code == 2
    error, = outcome.errors
    assert error.stage == 'assemble'
    assert error.line is not None
    assert outcome.model is None


def test_validation_failure(examples, tmp_path):
    xsd = _write(tmp_path,
                 '<xs:schema xmlns:xs="http://www.w3.org/2001/XMLSchema">'
                 '<xs:element name="other"/></xs:schema>', 'strict.xsd')
    outcome = compile_network(examples / 'xjunction.xml', xsd=xsd)
    assert outcome.exit_code == 3
    assert outcome.errors[0].stage == 'validate'
    assert outcome.xodr is None
    assert outcome.model is not None


def test_version(examples):
    outcome = compile_network(examples / 'two_tjunctions.xml',
                              version='1.5')
    assert 'revMinor="5"' in outcome.xodr


def test_export_svg(examples, tmp_path):
    outcome = compile_network(examples / 'two_tjunctions.xml')
    assert export_svg(outcome, tmp_path / 'view.svg')
    assert (tmp_path / 'view.svg').read_text().startswith('<svg')

    failed = compile_network(tmp_path / 'nothing.xml')
    with raises(ValueError):
        export_svg(failed, tmp_path / 'other.svg')
