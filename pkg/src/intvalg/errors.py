"""Exception hierarchy shared by every module."""


class IntvalError(Exception):
    """Base class for all errors raised by intvalg."""


class InputError(IntvalError, ValueError):
    """Bad arguments; the CLI maps these to exit code 2."""


class NonPrime(InputError):
    pass


class NotPrimePower(InputError):
    pass


class EvenPrime(InputError):
    pass


class BadModulus(InputError):
    pass


class BadDimension(InputError):
    pass


class BadDivisor(InputError):
    pass


class NonMonic(InputError):
    pass


class NonMonicDivisor(InputError):
    pass


class NotAField(InputError):
    pass


class RingMismatch(InputError):
    pass


class ParseError(InputError):
    pass


class AlgebraError(InputError):
    """Structure constants fail associativity or the unit check."""


class DegreeTooLarge(IntvalError):
    pass


class EnumerationTooLarge(IntvalError):
    """An exhaustive scan would exceed the configured element bound."""


class VerificationError(IntvalError):
    """An internal self-check of a construction failed."""
