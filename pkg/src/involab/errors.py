"""Exception types shared across the package.

The CLI maps these onto its exit codes: bad input is distinguished from
blowing a resource cap, and internal cross-check failures are never
silently swallowed.
"""

from __future__ import annotations


class ValidationError(ValueError):
    """Malformed or out-of-contract input (bad vertex index, bad file, ...)."""


class CapError(RuntimeError):
    """A configurable resource cap would be exceeded; the message names the cap."""


class NotASurfaceError(ValueError):
    """An operation that requires a closed surface was handed something else."""


class CrossCheckError(RuntimeError):
    """Two independent routes to the same answer disagreed.

    This always indicates a bug, never a property of the input, so it is
    raised hard instead of being folded into a return value.
    """
