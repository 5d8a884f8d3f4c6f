"""
Progress lines for long computations

Written to stderr so that command output stays byte-identical across runs.
"""

import sys

from config import Config


def status(message: str):
    if Config.VERBOSE:
        print(message, file=sys.stderr, flush=True)
