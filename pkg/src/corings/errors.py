"""Exception types raised across the package."""


class CoringsError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(CoringsError):
    """Matrix or vector shapes are inconsistent."""


class RingMismatch(CoringsError):
    """Objects over different ground rings were combined."""


class ModuleMismatch(CoringsError):
    """Element handles from different modules were combined."""


class SubmoduleMismatch(CoringsError):
    """A submodule does not live in the expected parent module."""


class IllDefinedMap(CoringsError):
    """A matrix does not send domain relations into codomain relations."""


class BadArity(CoringsError):
    """An iteration count or arity is out of range."""


class BadInput(CoringsError):
    """Builder input is empty or malformed."""


class BaseMismatch(CoringsError):
    """Two bimodules are not over the same base algebra."""


class AxiomViolation(CoringsError):
    """A structure failed the verification required by an operation."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class UnsupportedBase(CoringsError):
    """The operation is only implemented for corings over the ground ring."""


class AmbiguousCoaction(CoringsError):
    """The pairing is not an alpha-pairing, so coactions are not unique."""


class NotRational(CoringsError):
    """An element is not in the rational part of its module."""


class NotSubalgebra(CoringsError):
    """A candidate subalgebra is not closed under the required operations."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotGrouplike(CoringsError):
    """An element is not grouplike."""


class ParseError(CoringsError):
    """A structure document could not be parsed."""

    def __init__(self, message, line=None, column=None):
        loc = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + loc)
        self.line = line
        self.column = column


class UnresolvedReference(CoringsError):
    """A structure document refers to a name it does not define."""


class VerificationFailed(CoringsError):
    """A loaded structure did not pass its verification."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class UnknownExample(CoringsError):
    """No built-in example has the requested name."""
