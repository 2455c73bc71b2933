"""
Command-line tool
=================

.. code-block:: bash

    > roadgen --input xjunction.xml --output xjunction.xodr --validate \\
          OpenDRIVE_1.4H.xsd --stats --svg xjunction.svg

Diagnostics go to standard error as one JSON object per line; log messages
(``--log-level``) are written there too, as plain text. The output file is
only written when every stage succeeded. The exit status is 0 on success,
1 for input errors, 2 for geometry failures and 3 for validation failures.
"""

import argparse
import os
import sys
from dataclasses import (dataclass, field)
from pathlib import Path
from typing import (List, Optional, Union)

from . import __version__
from .config import config
from .errors import InputError
from .opendrive import (VERSIONS, write_file)
from .run import (Diagnostic, configure, make_logger)
from .run.pipeline import (compile_network, export_svg)

try:
    import ujson as json
except ImportError:
    import json

logger = make_logger('cli')


@dataclass
class RunConfig:
    """Everything one run needs.

    :param validate: False, True (consistency checks only) or the path of
        an OpenDRIVE XSD file.
    :param overrides: ``key=value`` strings for
        :py:func:`roadgen.logical.apply_overrides`.
    """
    input: Path
    output: Path
    odr_version: str = '1.4'
    validate: Union[bool, Path] = False
    stats: bool = False
    overrides: List[str] = field(default_factory=list)
    svg: Optional[Path] = None
    defaults: Optional[Path] = None
    threads: int = 1

    @property
    def xsd(self):
        if self.validate is True or not self.validate:
            return None
        return self.validate


def _count(path):
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        raise InputError("cannot read '{}': {}".format(path, exc))
    return data.count(b'\n') + 1, len(data)


def stats(input, output):
    """Compare the size of a logical input with the OpenDRIVE it produced.

    Characters are counted as bytes, lines as the number of newlines plus
    one, the same way for both files.

    :return: dictionary with ``input`` and ``output`` as ``(lines,
        chars)`` and ``lines_percent``, ``chars_percent`` giving the input
        as a percentage of the output.
    :raises InputError: if a file cannot be read.
    """
    in_lines, in_chars = _count(input)
    out_lines, out_chars = _count(output)
    return {
        'input': (in_lines, in_chars),
        'output': (out_lines, out_chars),
        'lines_percent': 100.0 * in_lines / out_lines,
        'chars_percent': 100.0 * in_chars / out_chars if out_chars else 0.0}


def format_stats(report):
    """Format a :py:func:`stats` report as a small table."""
    rows = [('', 'lines', 'chars'),
            ('OpenDRIVE', str(report['output'][0]),
             "{:,}".format(report['output'][1])),
            ('logical', str(report['input'][0]),
             "{:,}".format(report['input'][1])),
            ('ratio', "{:.1f}%".format(report['lines_percent']),
             "{:.1f}%".format(report['chars_percent']))]
    return "\n".join("{:<10} {:>8} {:>10}".format(*row) for row in rows)


def _report(diagnostics, stream):
    for d in diagnostics:
        print(d.to_json(), file=stream)
    stream.flush()


def run(run_config, stdout=None, stderr=None):
    """Compile, write and report.

    :param run_config: :py:class:`RunConfig`
    :return: exit status.
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr

    config['threads'] = run_config.threads
    outcome = compile_network(
        run_config.input, run_config.overrides, run_config.defaults,
        run_config.odr_version, run_config.xsd)
    if run_config.validate is True:
        outcome.diagnostics.append(Diagnostic(
            'validate', 'note',
            "no OpenDRIVE schema given; internal consistency checks only"))

    # no OpenDRIVE file if the top view cannot be written
    if outcome.ok and run_config.svg is not None:
        export_svg(outcome, run_config.svg)

    if outcome.ok:
        try:
            write_file(outcome.xodr, run_config.output)
            logger.info("wrote %s", run_config.output)
        except OSError as exc:
            outcome.diagnostics.append(Diagnostic(
                'write', 'error', "cannot write '{}': {}".format(
                    run_config.output, exc),
                exit_code=InputError.exit_code))

    if outcome.ok and run_config.stats:
        try:
            report = stats(run_config.input, run_config.output)
            print(format_stats(report), file=stdout)
            logger.debug("stats: %s", json.dumps(report))
        except InputError as exc:
            outcome.diagnostics.append(Diagnostic(
                'stats', 'error', exc.msg, exit_code=exc.exit_code))

    _report(outcome.diagnostics, stderr)
    return outcome.exit_code


def _positive(text):
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("needs at least one thread")
    return n


def argument_parser():
    parser = argparse.ArgumentParser(
        prog="{py} -m roadgen".format(py=os.path.basename(sys.executable)),
        description="Compile a logical road network description into "
                    "OpenDRIVE.")

    parser.add_argument(
        "--version", action="version",
        version="roadgen {}".format(__version__))
    parser.add_argument(
        "--input", type=Path, required=True,
        help="logical road network (XML)")
    parser.add_argument(
        "--output", type=Path, required=True,
        help="OpenDRIVE file to write")
    parser.add_argument(
        "--odr-version", choices=VERSIONS, default='1.4',
        help="OpenDRIVE revision of the output")
    parser.add_argument(
        "--validate", nargs='?', const=True, default=False, type=Path,
        metavar="XSD",
        help="validate the output, against the given OpenDRIVE schema if "
             "one is given")
    parser.add_argument(
        "--stats", action='store_true', default=False,
        help="print line and character counts of input and output")
    parser.add_argument(
        "--set", dest='overrides', action='append', default=[],
        metavar="KEY=VALUE",
        help="override an attribute of the input, e.g. x1.main.0.radius=80;"
             " may be repeated")
    parser.add_argument(
        "--svg", type=Path, default=None,
        help="also write a top view as SVG")
    parser.add_argument(
        "--defaults", type=Path, default=None,
        help="defaults file overriding the shipped defaults.ini")
    parser.add_argument(
        "--threads", type=_positive, default=1,
        help="number of worker threads")
    parser.add_argument(
        "--log-level", default='WARNING',
        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
        help="level of log messages on standard error")
    return parser


def main(argv=None):
    args = argument_parser().parse_args(argv)
    configure(args.log_level, sys.stderr)
    run_config = RunConfig(
        input=args.input, output=args.output, odr_version=args.odr_version,
        validate=args.validate, stats=args.stats, overrides=args.overrides,
        svg=args.svg, defaults=args.defaults, threads=args.threads)
    return run(run_config)
