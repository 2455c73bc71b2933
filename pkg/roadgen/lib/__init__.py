"""
Generic helpers that do not know about roads.
"""

from .thread_pool import (
    thread_counter, parallel_map, EndOfQueue)

__all__ = ['thread_counter', 'parallel_map', 'EndOfQueue']
