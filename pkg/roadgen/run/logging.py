"""
Provides logging facilities for the pipeline stages. All loggers are
children of the ``roadgen`` logger, so a single handler configured by the
command-line tool (or by an application embedding the library) catches
everything.
"""

import logging


def _sugar(s):
    """Shorten strings that are too long for decency."""
    if len(s) > 50:
        return s[:20] + " ... " + s[-20:]
    else:
        return s


def make_logger(name):
    """Create a logger component.

    :param name: name of logger child, i.e. logger will be named
        `roadgen.<name>`.
    :type name: str

    :return: a :py:class:`logging.Logger`."""
    return logging.getLogger('roadgen').getChild(name)


def configure(level='WARNING', stream=None):
    """Attach a stream handler to the package logger. Calling this twice
    replaces the earlier handler."""
    logger = logging.getLogger('roadgen')
    for handler in list(logger.handlers):
        logger.removeHandler(handler)

    handler = logging.StreamHandler(stream)
    handler.setFormatter(logging.Formatter(
        "%(levelname)-7s %(name)s: %(message)s"))
    logger.addHandler(handler)
    logger.setLevel(level.upper() if isinstance(level, str) else level)
    return logger
