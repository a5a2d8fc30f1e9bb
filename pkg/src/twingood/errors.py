"""Exception types shared by every module in the package."""


class Error(Exception):
    """Base class for all twingood errors."""


class RingParseError(Error):
    """A ring descriptor string could not be parsed."""


class DocumentParseError(Error):
    """A matrix / certificate / report document could not be parsed."""


class ExhaustionBoundExceeded(Error):
    """An exhaustive operation was asked to enumerate a ring above the bound."""

    def __init__(self, ring, bound):
        super().__init__(f"ring {ring} has {ring.order} elements, exceeding bound {bound}")
        self.ring = ring
        self.bound = bound


class RingMismatch(Error):
    """Operands belong to different rings, or an entry is not a ring element."""


class ShapeMismatch(Error):
    """Matrix shapes are not conformable for the requested operation."""


class NotSquare(Error):
    """A square matrix is required."""


class UnsupportedRing(Error):
    """The ring family is outside what this operation supports."""


class NotUnitRegular(Error):
    """No (idempotent, unit) factorization exists for the element."""

    def __init__(self, ring, element):
        super().__init__(f"{element!r} has no idempotent*unit factorization in {ring}")
        self.ring = ring
        self.element = element


class ConstructionVerificationFailed(Error):
    """An internal certificate failed its own replay check; this is a bug signal."""


class FieldTooSmall(Error):
    """Element-level twin units need a field with at least 4 elements."""

    def __init__(self, ring):
        super().__init__(f"{ring} has only {ring.order} elements; twin units need a field of size >= 4")
        self.ring = ring


class QuotientUnsolvable(Error):
    """The twin problem over the radical quotient has no solution."""


class NotTwinGood(Error):
    """No unit U exists with M+U and M-U both invertible."""

    def __init__(self, message, component=None, quotient=None):
        super().__init__(message)
        self.component = component
        self.quotient = quotient


class NotTwoGood(Error):
    """The element is not a sum of two units."""
