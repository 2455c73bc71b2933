"""
Input validation against the shipped schema ``roadnetwork.xsd``, followed
by the semantic checks of the parser. Problems come back as a list of
:py:class:`roadgen.run.Diagnostic` records in stead of exceptions.
"""

from functools import lru_cache
from pathlib import Path

from lxml import etree

from ..errors import (InputError, ValidationError)
from ..run.diagnostics import Diagnostic
from .parser import (parse, document_root)

SCHEMA_FILE = Path(__file__).parent.parent / 'data' / 'roadnetwork.xsd'


@lru_cache(maxsize=None)
def load_schema(path=SCHEMA_FILE):
    """Compile an XSD file; cached per path."""
    try:
        return etree.XMLSchema(etree.parse(str(path)))
    except (OSError, etree.XMLSyntaxError, etree.XMLSchemaParseError) as exc:
        raise ValidationError("unusable schema '{}': {}".format(path, exc))


def schema_errors(root, schema, stage_name, exit_code):
    """Run `schema` on `root`; one error diagnostic per violation."""
    schema.validate(root)
    return [Diagnostic(stage_name, 'error', error.message, line=error.line,
                       exit_code=exit_code)
            for error in schema.error_log]


def validate_schema(document):
    """Check a logical network document.

    :param document: XML text, lxml tree or root element.
    :return: list of diagnostics; empty if the document is valid.
    """
    try:
        root = document_root(document)
    except InputError as exc:
        return [Diagnostic('schema', 'error', exc.msg, line=exc.line,
                           exit_code=exc.exit_code)]

    diagnostics = schema_errors(root, load_schema(), 'schema', 1)
    if diagnostics:
        return diagnostics

    try:
        parse(root)
    except InputError as exc:
        diagnostics.append(Diagnostic('schema', 'error', exc.msg,
                                      line=exc.line,
                                      exit_code=exc.exit_code))
    return diagnostics
