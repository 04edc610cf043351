"""Exception types raised by the walk engine.

Every error the public API raises deliberately is a subclass of
:class:`QwprobeError`, so callers can catch one base class.  Parse-stage
errors additionally derive from :class:`ParseError` and carry the
offending line (and column where it is meaningful).
"""


class QwprobeError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(QwprobeError):
    """Operands describe different position or coin dimensions."""


class NotNormalized(QwprobeError):
    """A state flagged as normalized fails the unit-norm check."""


class InvalidDimension(QwprobeError):
    """Coin dimension outside the supported range."""


class NonFiniteParameter(QwprobeError):
    """A parameter or amplitude is NaN or infinite."""


class InvalidSize(QwprobeError):
    """Requested lattice or layer count is too small."""


class ParseError(QwprobeError):
    """Malformed graph description.

    Carries ``line`` (1-based) and, when known, ``column``.
    """

    def __init__(self, message, line=None, column=None):
        loc = ""
        if line is not None:
            loc = f"line {line}"
            if column is not None:
                loc += f", column {column}"
            loc += ": "
        super().__init__(loc + message)
        self.line = line
        self.column = column


class DuplicateEdge(ParseError):
    """The same (source, label) pair is wired twice."""


class LabelOutOfRange(ParseError):
    """A coin label that does not belong to the label set for D."""


class NonInjectiveLabelMap(QwprobeError):
    """Two vertices send the same coin label to one target.

    Such a map cannot come from a unitary step on the full space.
    """


class HorizonExceeded(QwprobeError):
    """A step would move amplitude off the edge of a layered graph."""


class IndexOutOfRange(QwprobeError):
    """Position index outside the lattice."""


class InvalidSigma(QwprobeError):
    """Gaussian width must be positive and finite."""


class TooLargeForDense(QwprobeError):
    """Refusing to materialize a dense operator of this size."""


class NonPositiveFisher(QwprobeError):
    """A precision bound needs strictly positive Fisher information."""


class UnnormalizedProfile(QwprobeError):
    """Site weights of a probe profile do not sum to one."""


class ConfigError(QwprobeError):
    """Bad key, value, or combination in an experiment config."""
