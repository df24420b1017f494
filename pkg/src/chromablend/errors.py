"""Exception taxonomy shared by the library and the CLI exit-code mapping."""


class ChromablendError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(ChromablendError):
    """Input violates a precondition or an invariant (CLI exit code 2)."""


class CapExceededError(ChromablendError):
    """A size cap would be exceeded; the operation refuses rather than
    approximate or materialize something huge (CLI exit code 3)."""


class TerminalStateError(ChromablendError):
    """The blending recursion was asked to step past its fixed point
    (a single-class cluster / edgeless graph has no further step)."""
