"""Exception hierarchy shared by all modules."""


class SegreError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(SegreError, ValueError):
    """Invalid dimension list or subsystem count."""


class MultiIndexError(SegreError, IndexError):
    """A multi-index component lies outside its subsystem range."""


class FormatError(SegreError, ValueError):
    """Malformed state description (duplicate entries, bad state file line).

    ``lineno`` is set when the error comes from a state file.
    """

    def __init__(self, message, lineno=None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


class DegenerateStateError(SegreError, ValueError):
    """Zero-norm state or zero factor vector."""


class NormalizationError(SegreError, ValueError):
    """A measure was requested on a state that is not normalized."""


class ClassError(SegreError, ValueError):
    """Empty, full or out-of-range position set for a bipartition."""


class TrivialTermError(SegreError, ValueError):
    """The requested minor vanishes identically."""


class ArityError(SegreError, ValueError):
    """Operation restricted to a fixed number of subsystems."""
