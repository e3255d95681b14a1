"""Base classes for KoszulX exceptions."""


class KoszulXException(Exception):
    """Base class for exceptions in KoszulX."""


class KoszulXError(KoszulXException):
    """Exception for a serious error in KoszulX."""


class KoszulXNotImplementedError(KoszulXError):
    """Exception for methods not implemented for an object type."""


class FieldError(KoszulXError):
    """Exception for invalid coefficient arithmetic, such as inverting zero."""


class PolynomialParseError(KoszulXError):
    """Exception for text that does not conform to the polynomial grammar.

    Parameters
    ----------
    message : str
        Description of the problem.
    position : int
        Zero-based character offset in the input text.
    """

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


class AmbientMismatchError(KoszulXError):
    """Exception for operations mixing elements of different free modules."""


class HomogeneityError(KoszulXError):
    """Exception for inputs that must be homogeneous but are not."""


class PreconditionError(KoszulXError):
    """Exception for inputs violating a mathematical precondition."""


class CodimensionError(PreconditionError):
    """Exception for ideals that do not have codimension two."""


class StabilizationError(KoszulXError):
    """Exception for a Hilbert function whose polynomial could not be certified."""


class InconsistencyError(KoszulXError):
    """Exception for an engine invariant that failed to hold.

    Every instance signals a bug: the invariants checked are theorems.
    """
