"""
Pipeline
========

The compiler runs as a chain of stages: read, overrides, schema, parse,
build, assemble, emit and optionally validate and svg. Every stage is
wrapped by |stage|, so a failure becomes a |Fail| record that the later
stages pass on without running. |compile_network| collects what came out
in an |Outcome|.

.. |stage| replace:: :py:func:`roadgen.run.stage`
.. |Fail| replace:: :py:class:`roadgen.run.Fail`
.. |compile_network| replace:: :py:func:`compile_network`
.. |Outcome| replace:: :py:class:`Outcome`
"""

from functools import partial

from ..config import (config, load_defaults)
from ..errors import InputError
from ..junction import build_segment
from ..lib import parallel_map
from ..logical import (read_file, apply_overrides, document_root, parse)
from ..logical.schema import (load_schema, schema_errors)
from ..network import assemble
from ..opendrive import (emit, validate)
from ..display import render_svg
from .diagnostics import (Diagnostic, failed, stage)
from .logging import make_logger

logger = make_logger('pipeline')


class Outcome:
    """Result of one pipeline run.

    .. py:attribute:: diagnostics

        List of :py:class:`Diagnostic` in the order they were produced.

    .. py:attribute:: xodr

        The emitted OpenDRIVE text, or None if a stage failed.

    .. py:attribute:: model

        The assembled :py:class:`roadgen.network.NetworkModel`, if any.
    """
    def __init__(self):
        self.diagnostics = []
        self.xodr = None
        self.model = None

    @property
    def errors(self):
        return [d for d in self.diagnostics if d.is_error]

    @property
    def ok(self):
        return not self.errors

    @property
    def exit_code(self):
        """Exit code of the first error, 0 without errors."""
        errors = self.errors
        return errors[0].exit_code if errors else 0

    def add(self, severity, stage_name, messages):
        for message in messages:
            self.diagnostics.append(Diagnostic(stage_name, severity, message))

    def check(self, result):
        """Record `result` if it is a failure; return True if it is not."""
        if failed(result):
            self.diagnostics.append(result.diagnostic())
            return False
        return True


@stage('defaults')
def read_defaults(path):
    return load_defaults(path)


@stage('read')
def read_input(path):
    return read_file(path)


@stage('overrides')
def override(document, overrides):
    if not overrides:
        return document_root(document)
    root = apply_overrides(document, overrides)
    logger.info("applied %d overrides", len(overrides))
    return root


@stage('schema')
def check_schema(root):
    """Schema violations of the logical input, as diagnostics."""
    return schema_errors(root, load_schema(), 'schema',
                         InputError.exit_code)


@stage('parse')
def parse_input(root):
    network = parse(root)
    logger.info("parsed '%s': %d segments, %d links, %d close requests",
                network.name, len(network.segments), len(network.links),
                len(network.close_requests))
    return network


@stage('build')
def build_segments(network, defaults, n_threads=1):
    built = parallel_map(partial(build_segment, defaults=defaults),
                         network.segments, n_threads)
    logger.info("built %d segments", len(built))
    return built


@stage('assemble')
def assemble_network(network, built, defaults, n_threads=1):
    return assemble(network, built, defaults, n_threads)


@stage('emit')
def emit_model(model, version):
    text = emit(model, version)
    logger.info("emitted OpenDRIVE %s, %d characters", version, len(text))
    return text


@stage('validate')
def validate_output(xodr, xsd):
    return validate(xodr, xsd)


@stage('svg')
def write_svg(model, path):
    render_svg(model, path)
    return path


def compile_network(input_path, overrides=(), defaults_path=None,
                    version='1.4', xsd=None, n_threads=None):
    """Run the pipeline on one input file. Nothing is written; see
    :py:func:`roadgen.cli.run` for the files.

    :param input_path: logical road network file.
    :param overrides: ``(key, value)`` pairs or ``key=value`` strings.
    :param defaults_path: user defaults file or None.
    :param version: OpenDRIVE version, ``'1.4'`` or ``'1.5'``.
    :param xsd: OpenDRIVE schema to validate the output against, or None.
    :param n_threads: worker threads; ``config['threads']`` if None.
    :rtype: :py:class:`Outcome`
    """
    outcome = Outcome()
    n_threads = config['threads'] if n_threads is None else n_threads
    overrides = list(overrides)

    defaults = read_defaults(defaults_path)
    root = override(read_input(input_path), overrides)
    if not (outcome.check(defaults) and outcome.check(root)):
        return outcome

    problems = check_schema(root)
    if not outcome.check(problems):
        return outcome
    if problems:
        outcome.diagnostics.extend(problems)
        return outcome

    network = parse_input(root)
    if not outcome.check(network):
        return outcome
    outcome.add('note', 'parse', network.defaults_applied)

    built = build_segments(network, defaults, n_threads)
    model = assemble_network(network, built, defaults, n_threads)
    if not outcome.check(model):
        return outcome
    outcome.model = model
    outcome.add('warning', 'assemble', model.notes)

    xodr = emit_model(model, version)
    if not outcome.check(xodr):
        return outcome

    if xsd is not None:
        problems = validate_output(xodr, xsd)
        if not outcome.check(problems):
            return outcome
        if problems:
            outcome.diagnostics.extend(problems)
            return outcome
        logger.info("output valid against %s", xsd)
    outcome.xodr = xodr
    return outcome


def export_svg(outcome, path):
    """Draw the model of a successful run; failures go into `outcome`."""
    if outcome.model is None:
        raise ValueError("no model to draw")
    return outcome.check(write_svg(outcome.model, path))

