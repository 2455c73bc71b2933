from .diagnostics import (Diagnostic, Fail, failed, stage)
from .logging import (make_logger, configure)

__all__ = ['Diagnostic', 'Fail', 'failed', 'stage',
           'make_logger', 'configure']
