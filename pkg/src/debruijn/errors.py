"""Domain error types shared across the package."""


class DeBruijnError(ValueError):
    """Base class for every domain error raised by this package."""


class BadOrderError(DeBruijnError):
    """A register order is outside the range an operation accepts."""


class OrderTooLargeError(BadOrderError):
    """A register order exceeds the desk-scale enumeration cap."""


class WindowTooLongError(DeBruijnError):
    """A window length exceeds the period of the sequence."""


class ArityMismatchError(DeBruijnError):
    """A function was applied to a state of a different width."""


class AnfSyntaxError(DeBruijnError):
    """Unparseable function text; ``position`` is the failing offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class BadLengthError(DeBruijnError):
    """A truth table length is not a power of two."""


class NotPrimitiveError(DeBruijnError):
    """The polynomial's state orbit is shorter than full length."""


class DegreeTooLargeError(DeBruijnError):
    """Polynomial degree exceeds the primitivity-test cap."""


class DegreeOutOfRangeError(DeBruijnError):
    """Polynomial degree is incompatible with the requested order."""


class BadTError(DeBruijnError):
    """Index parameter t lies outside the legal range."""


class BadParamsError(DeBruijnError):
    """Parameters violate a catalog row's side conditions."""


class BadInitialStateError(DeBruijnError):
    """The initial state is not one the algorithm accepts."""


class NotDeBruijnSeedError(DeBruijnError):
    """A seed function's register output is not a full de Bruijn cycle."""


class NotDeBruijnError(DeBruijnError):
    """A sequence expected to be de Bruijn is not."""


class NonTerminatingError(DeBruijnError):
    """A greedy run hit its step cap without returning to the start."""
