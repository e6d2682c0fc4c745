"""Exception types raised across the package."""


class GeomPolyError(Exception):
    """Base class for all errors raised by geompoly."""


class InvalidOrder(GeomPolyError, ValueError):
    """A polynomial order r was not a positive integer."""


class NotPrime(GeomPolyError, ValueError):
    """A modulus that must be prime is not."""


class DenominatorDivisibleByQ(GeomPolyError, ArithmeticError):
    """A rational cannot be reduced mod q because q divides its denominator."""

    def __init__(self, value, q):
        self.value = value
        self.q = q
        super().__init__(f"denominator of {value} is divisible by {q}")


class UnknownIdentity(GeomPolyError, KeyError):
    pass


class UnknownCheck(GeomPolyError, KeyError):
    pass


class ParameterOutOfDomain(GeomPolyError, ValueError):
    pass


class DivergentInput(GeomPolyError, ValueError):
    """The series does not converge at the requested point."""


class TolNotReached(GeomPolyError, RuntimeError):
    """The term cap was hit before the tail bound reached the tolerance."""
