"""Exact coefficient arithmetic.

Integers are Python ints, rationals are ``fractions.Fraction`` and prime
field elements are ``FpElem``. The coefficient domains ``QQ`` and ``GF(p)``
let the Weyl algebra code run one arithmetic path for both
characteristics: raw coefficients are combined with ``+`` and ``*`` and then
normalized by the domain.
"""

import logging
from abc import ABC, abstractmethod
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

from sympy import isprime, nextprime

from .errors import BadLiteral, BadPrime, DomainMismatch, NotPrime, ZeroInverse

logger = logging.getLogger(__name__)

Rational = Fraction

# sympy's isprime is deterministic below 2**64
PRIME_LIMIT = 2**64


def is_prime(n: int) -> bool:
    """Deterministic primality test for the sizes used here."""
    return bool(isprime(n))


@dataclass(frozen=True, order=True)
class Prime:
    """A verified prime number."""

    p: int

    def __post_init__(self) -> None:
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise NotPrime(self.p)
        if not is_prime(self.p):
            raise NotPrime(self.p)

    def __int__(self) -> int:
        return self.p

    def __index__(self) -> int:
        return self.p

    def __str__(self) -> str:
        return str(self.p)


def make_prime(p: "int | Prime") -> Prime:
    """Coerce an int to a Prime, raising NotPrime on failure."""
    if isinstance(p, Prime):
        return p
    return Prime(p)


def next_prime(n: int) -> Prime:
    """Smallest prime strictly greater than n."""
    return Prime(int(nextprime(n)))


def primes_from(start: int) -> Iterator[Prime]:
    """Yield the primes >= start in increasing order."""
    if start < 2:
        raise ValueError(f"primes_from needs start >= 2, got {start}")
    current = next_prime(start - 1)
    while True:
        yield current
        current = next_prime(current.p)


@dataclass(frozen=True)
class FpElem:
    """An element of the prime field F_p, stored as a residue in [0, p)."""

    value: int
    modulus: Prime

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value % self.modulus.p)

    def _coerce(self, other: Any) -> "FpElem":
        if isinstance(other, FpElem):
            if other.modulus != self.modulus:
                raise DomainMismatch(f"F_{self.modulus} and F_{other.modulus} elements mixed")
            return other
        if isinstance(other, int):
            return FpElem(other, self.modulus)
        return NotImplemented

    def __add__(self, other: Any) -> "FpElem":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElem(self.value + o.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "FpElem":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElem(self.value - o.value, self.modulus)

    def __rsub__(self, other: Any) -> "FpElem":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElem(o.value - self.value, self.modulus)

    def __mul__(self, other: Any) -> "FpElem":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return FpElem(self.value * o.value, self.modulus)

    __rmul__ = __mul__

    def __neg__(self) -> "FpElem":
        return FpElem(-self.value, self.modulus)

    def __truediv__(self, other: Any) -> "FpElem":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * fp_inv(o)

    def __pow__(self, exponent: int) -> "FpElem":
        if exponent < 0:
            return FpElem(pow(fp_inv(self).value, -exponent, self.modulus.p), self.modulus)
        return FpElem(pow(self.value, exponent, self.modulus.p), self.modulus)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)


def fp_inv(a: FpElem) -> FpElem:
    """Multiplicative inverse in F_p."""
    if a.value == 0:
        raise ZeroInverse(f"0 has no inverse modulo {a.modulus}")
    return FpElem(pow(a.value, -1, a.modulus.p), a.modulus)


def rational_mod_p(r: "Fraction | int", p: "Prime | int") -> FpElem:
    """Image of a rational number in F_p.

    Raises BadPrime when p divides the denominator.
    """
    prime = make_prime(p)
    r = Fraction(r)
    if r.denominator % prime.p == 0:
        raise BadPrime(prime.p, coefficient=r)
    return FpElem(r.numerator * pow(r.denominator, -1, prime.p), prime)


# Coefficient domains


class CoefficientDomain(ABC):
    """A coefficient field for Weyl algebra elements.

    Raw coefficients are Fractions over QQ and ints in [0, p) over GF(p).
    """

    characteristic: int

    @abstractmethod
    def normalize(self, c: Any) -> Any:
        """Bring a raw int/Fraction value into canonical form."""
        ...

    @abstractmethod
    def element(self, c: Any) -> "Fraction | FpElem":
        """Public value of a stored coefficient."""
        ...

    @abstractmethod
    def literal(self, numerator: int, denominator: int = 1) -> Any:
        """Raw coefficient for a parsed literal."""
        ...

    @abstractmethod
    def format(self, c: Any) -> str:
        """Canonical text of a nonzero coefficient."""
        ...

    @abstractmethod
    def is_negative(self, c: Any) -> bool:
        """Whether the coefficient prints with a leading minus sign."""
        ...

    def from_int(self, n: int) -> Any:
        return self.normalize(n)

    @property
    def name(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"

    def __repr__(self) -> str:
        return self.name


class RationalField(CoefficientDomain):
    """The field of rational numbers."""

    characteristic = 0

    def normalize(self, c: Any) -> Fraction:
        if isinstance(c, FpElem):
            raise DomainMismatch("F_p coefficient used over QQ")
        return Fraction(c)

    def element(self, c: Any) -> Fraction:
        return Fraction(c)

    def literal(self, numerator: int, denominator: int = 1) -> Fraction:
        if denominator == 0:
            raise BadLiteral(f"zero denominator in {numerator}/{denominator}")
        return Fraction(numerator, denominator)

    def format(self, c: Any) -> str:
        return str(abs(Fraction(c)))

    def is_negative(self, c: Any) -> bool:
        return c < 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("QQ")


class PrimeField(CoefficientDomain):
    """The prime field F_p."""

    def __init__(self, p: "Prime | int"):
        self.prime = make_prime(p)
        self.characteristic = self.prime.p

    @property
    def p(self) -> int:
        return self.prime.p

    def normalize(self, c: Any) -> int:
        if isinstance(c, FpElem):
            if c.modulus != self.prime:
                raise DomainMismatch(f"F_{c.modulus} coefficient used over F_{self.p}")
            return c.value
        if isinstance(c, Fraction):
            return rational_mod_p(c, self.prime).value
        return c % self.p

    def element(self, c: Any) -> FpElem:
        return FpElem(c, self.prime)

    def literal(self, numerator: int, denominator: int = 1) -> int:
        if denominator != 1:
            raise BadLiteral(
                f"fraction literal {numerator}/{denominator} not allowed over F_{self.p}"
            )
        return numerator % self.p

    def format(self, c: Any) -> str:
        return str(c)

    def is_negative(self, c: Any) -> bool:
        return False

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.prime == self.prime

    def __hash__(self) -> int:
        return hash(("GF", self.p))


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:  # noqa: N802
    """Cached prime field constructor."""
    return PrimeField(int(p))


def domain_for(modulus: "int | Prime | None") -> CoefficientDomain:
    """QQ when modulus is None, otherwise GF(modulus)."""
    if modulus is None:
        return QQ
    return GF(int(modulus))
