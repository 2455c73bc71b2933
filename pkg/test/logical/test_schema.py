from roadgen.logical import (validate_schema, read_file)

from ..networks import (document, connection_road, xjunction)


def test_examples_valid(examples):
    for path in sorted(examples.glob('*.xml')):
        assert validate_schema(read_file(path)) == [], path.name


def test_schema_violation():
    text = document(connection_road()).replace(
        'length="100"', 'length="-5"')
    problems = validate_schema(text)
    assert problems
    assert all(d.stage == 'schema' and d.severity == 'error'
               for d in problems)
    assert all(d.exit_code == 1 for d in problems)
    assert problems[0].line is not None


def test_unknown_element():
    text = document(connection_road()).replace(
        '</segments>', '<bridge id="b"/></segments>')
    assert validate_schema(text)


def test_semantic_check():
    # schema-valid, but the crossing lies beyond the end of the main road
    text = document(xjunction().replace('refS="100"', 'refS="250"'))
    problems = validate_schema(text)
    assert len(problems) == 1
    assert 'beyond' in problems[0].message


def test_malformed():
    problems = validate_schema('<roadNetwork>')
    assert len(problems) == 1
    assert 'malformed' in problems[0].message
