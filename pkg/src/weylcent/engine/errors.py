"""Exception hierarchy for the weylcent engine.

Every error raised on purpose by the engine derives from WeylError, so the
CLI and the MCP tools can turn them into a message and an exit code.
"""

from typing import Any


class WeylError(Exception):
    """Base class for engine errors."""


# Coefficient arithmetic


class ZeroInverse(WeylError):
    """Raised when inverting zero in a prime field."""


class NotPrime(WeylError):
    """Raised when a modulus is not a prime number."""

    def __init__(self, value: int):
        self.value = value
        super().__init__(f"{value} is not a prime")


class BadPrime(WeylError):
    """Raised when a prime divides a denominator that must be inverted."""

    def __init__(self, prime: int, coefficient: Any = None, monomial: str | None = None):
        self.prime = prime
        self.coefficient = coefficient
        self.monomial = monomial
        where = ""
        if coefficient is not None:
            where = f" ({coefficient})"
            if monomial:
                where = f" (coefficient {coefficient} of {monomial})"
        super().__init__(f"prime {prime} divides a denominator{where}")


# Algebra


class DimensionMismatch(WeylError):
    """Raised when combining elements of Weyl algebras with different n."""


class DomainMismatch(WeylError):
    """Raised when combining elements over different coefficient domains."""


class ZeroElement(WeylError):
    """Raised when an operation needs a nonzero element."""


class WrongCharacteristic(WeylError):
    """Raised when an operation is only defined in one characteristic."""


# Parsing


class ParseError(WeylError):
    """Base class for operator parsing errors."""


class OperatorSyntaxError(ParseError):
    """Raised when an expression does not follow the operator grammar."""

    def __init__(self, text: str, position: int, expected: list[str] | None = None):
        self.text = text
        self.position = position
        self.expected = sorted(expected or [])
        hint = f", expected one of: {', '.join(self.expected)}" if self.expected else ""
        super().__init__(f"syntax error at position {position} in {text!r}{hint}")


class UnknownVariable(ParseError):
    """Raised for a variable name outside x1..xn, d1..dn."""


class NegativeExponent(ParseError):
    """Raised for a power with a negative exponent."""


class BadLiteral(ParseError):
    """Raised for literals that do not belong to the coefficient domain."""


# Centralizer solver


class NotCommutingInput(WeylError):
    """Raised when the inputs of a witness search do not commute."""


class CentralInput(WeylError):
    """Raised when an operation needs a noncentral element."""


class WitnessNotFound(WeylError):
    """Raised when no fraction witness exists within the degree bound.

    This is inconclusive: a larger bound may still produce one.
    """


# Certifier


class ConstantOperator(WeylError):
    """Raised when the theorem needs a nonconstant operator."""
