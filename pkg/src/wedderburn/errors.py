"""Exception hierarchy shared across the package."""


class WedderburnError(Exception):
    """Base class for all library errors."""


class NonPrime(WedderburnError):
    def __init__(self, value):
        super().__init__(f"{value} is not prime")
        self.value = value


class UnsupportedSize(WedderburnError):
    """Field or search parameters exceed the configured limits."""


class FieldMismatch(WedderburnError):
    """Operands belong to different fields."""


class DivisionByZero(WedderburnError, ZeroDivisionError):
    pass


class ZeroPolynomial(WedderburnError):
    pass


class NotCoprime(WedderburnError):
    pass


class NotAPrimePower(WedderburnError):
    pass


class NotAGroup(WedderburnError):
    """Cayley-table validation failure; the message names the first violation."""


class OutOfRange(WedderburnError):
    pass


class NotNormal(WedderburnError):
    pass


class NotSemisimple(WedderburnError):
    """Raised when the field characteristic divides the group order."""


class NotAbelian(WedderburnError):
    pass


class InternalInvariant(WedderburnError):
    """A computed result violates a structural identity.

    Always signals a bug in this library, never a legitimate input state.
    """


class ParseError(WedderburnError):
    def __init__(self, position, reason):
        super().__init__(f"parse error at position {position}: {reason}")
        self.position = position
        self.reason = reason


class MixedCharacteristic(WedderburnError):
    pass


class InadmissibleBase(WedderburnError):
    pass
