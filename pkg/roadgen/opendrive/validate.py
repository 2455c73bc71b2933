"""
Validation of emitted OpenDRIVE against schema files supplied by the
user; the official schemas are not shipped.
"""

from lxml import etree

from ..errors import ValidationError
from ..logical.schema import (load_schema, schema_errors)
from ..run.diagnostics import Diagnostic


def validate(xml, xsd):
    """Check OpenDRIVE text against an XSD file.

    :param xml: OpenDRIVE document as ``str`` or ``bytes``.
    :param xsd: path of the schema.
    :return: list of :py:class:`roadgen.run.Diagnostic`, one per
        violation; empty if valid.
    :raises ValidationError: if the schema cannot be read or compiled.
    """
    schema = load_schema(str(xsd))
    if isinstance(xml, str):
        xml = xml.encode('utf-8')
    try:
        root = etree.fromstring(xml)
    except etree.XMLSyntaxError as exc:
        return [Diagnostic('validate', 'error',
                           "malformed XML: {}".format(exc.msg),
                           line=exc.lineno,
                           exit_code=ValidationError.exit_code)]
    return schema_errors(root, schema, 'validate',
                         ValidationError.exit_code)
