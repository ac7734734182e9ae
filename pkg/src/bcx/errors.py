"""Exception hierarchy shared by every bcx module."""


class BicomplexError(Exception):
    """Base class for all errors raised by bcx."""


class NullConeError(BicomplexError, ZeroDivisionError):
    """A zero divisor (or zero) was inverted."""


class NegativeComponentError(BicomplexError, ValueError):
    """A hyperbolic square root was taken of a non-positive number."""


class DimensionMismatchError(BicomplexError, ValueError):
    pass


class NotSquareError(BicomplexError, ValueError):
    pass


class RepresenterNotInSubmoduleError(BicomplexError, ValueError):
    pass


class DegreeMismatchError(BicomplexError, ValueError):
    pass


class NotInDiscusError(BicomplexError, ValueError):
    """Some idempotent component lies outside the open unit disk."""


class PoleAtOneError(BicomplexError, ZeroDivisionError):
    """The Cayley map was evaluated where an idempotent component equals 1."""


class NotSelfMapError(BicomplexError, ValueError):
    """A series failed the boundary-adjacent self-map grid check."""


class ParseError(BicomplexError, ValueError):
    """Malformed JSON input or a document that violates the declared schema."""


class UnknownSuiteError(BicomplexError, KeyError):
    pass


class InvalidConfigError(BicomplexError, ValueError):
    pass
