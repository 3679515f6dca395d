"""Exception taxonomy shared across the library.

The CLI maps these onto exit codes: configuration/usage problems -> 2,
numeric failures during training or adaptation -> 3, file problems -> 4.
"""


class GraphataError(Exception):
    """Base class for all library errors."""


class ShapeError(GraphataError):
    """Operand dimensions do not line up."""


class UsageError(GraphataError):
    """An API was called in an unsupported way (bad argument, missing state)."""


class ParameterError(GraphataError):
    """A parameter object violates its own invariants."""


class NumericError(GraphataError):
    """Non-finite or otherwise invalid numeric values were encountered."""


class TrainingError(GraphataError):
    """Source training diverged or failed."""


class AdaptationError(GraphataError):
    """The adaptation loop diverged or failed."""


class ParseError(GraphataError):
    """A data file could not be parsed."""


class CheckpointError(GraphataError):
    """A checkpoint file is malformed or incompatible."""


class ConfigError(GraphataError):
    """An experiment configuration is invalid."""
