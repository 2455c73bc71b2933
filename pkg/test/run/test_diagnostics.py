import json

from pytest import raises

from roadgen.errors import (InputError, GeometryError, ValidationError)
from roadgen.run import (Diagnostic, Fail, failed, stage)


@stage('first')
def first(x):
    if x < 0:
        raise GeometryError("negative", line=12)
    return x


@stage('second')
def second(x, y=0):
    return x + y


def test_pass_through():
    assert second(first(1), y=2) == 3


def test_root_cause():
    result = second(first(-1))
    assert failed(result)
    assert not result
    assert result.name == 'second'
    assert not result.is_root_cause
    assert result.root.name == 'first'
    assert result.exit_code == 2
    d = result.diagnostic()
    assert (d.stage, d.severity, d.message, d.line, d.exit_code) == \
        ('first', 'error', 'negative', 12, 2)
    assert 'GeometryError' in str(result)


def test_keyword_fail():
    result = second(1, y=first(-5))
    assert failed(result)
    assert result.fails[0][0] == 'y'


def test_other_errors_propagate():
    @stage('broken')
    def broken():
        raise KeyError('x')

    with raises(KeyError):
        broken()


def test_exit_codes():
    for error, code in ((InputError, 1), (GeometryError, 2),
                        (ValidationError, 3)):
        @stage('s')
        def raising():
            raise error("boom")
        assert raising().exit_code == code


def test_json():
    d = Diagnostic('parse', 'error', "bad", line=3, exit_code=1)
    assert json.loads(d.to_json()) == {
        'stage': 'parse', 'severity': 'error', 'message': 'bad', 'line': 3,
        'exit_code': 1}
    note = json.loads(Diagnostic('parse', 'note', "default").to_json())
    assert 'exit_code' not in note and 'line' not in note


def test_severity():
    with raises(ValueError):
        Diagnostic('parse', 'fatal', "no such severity")
    assert isinstance(Fail('x', exception=InputError('y')), Fail)
