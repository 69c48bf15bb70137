"""Sparse normal-form elements of the Weyl algebra A_n over QQ or F_p.

An element is a map from normal-ordered monomials x^i ∂^j (all x's to the
left of all ∂'s) to nonzero coefficients. Products are brought back to
normal form with the per-coordinate identity

    ∂^a x^b = Σ_k k!·C(a,k)·C(b,k) · x^(b-k) ∂^(a-k)

evaluated over the integers and then mapped into the coefficient domain.
"""

import itertools
import logging
import random
from collections.abc import Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Any, NamedTuple

from .errors import (
    BadPrime,
    DimensionMismatch,
    DomainMismatch,
    WrongCharacteristic,
    ZeroElement,
)
from .exact_arith import QQ, CoefficientDomain, FpElem, GF, Prime, make_prime

logger = logging.getLogger(__name__)

# Degree of the zero element; a float so that max/+ keep working.
NEG_INFINITY = float("-inf")


class MonomialKey(NamedTuple):
    """Exponent vectors of the normal-ordered monomial x^xexp ∂^dexp."""

    xexp: tuple[int, ...]
    dexp: tuple[int, ...]

    @property
    def nvars(self) -> int:
        return len(self.xexp)

    @property
    def degree(self) -> int:
        return sum(self.xexp) + sum(self.dexp)

    @classmethod
    def unit(cls, nvars: int) -> "MonomialKey":
        zeros = (0,) * nvars
        return cls(zeros, zeros)


def grlex_key(m: MonomialKey) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
    """Graded lexicographic sort key: total degree, then xexp, then dexp."""
    return (m.degree, m.xexp, m.dexp)


def monomials_up_to(nvars: int, degree: int) -> list[MonomialKey]:
    """All monomials of total degree <= degree, ascending in graded-lex order."""
    keys = []
    for total in range(degree + 1):
        for exps in _compositions(total, 2 * nvars):
            keys.append(MonomialKey(exps[:nvars], exps[nvars:]))
    return sorted(keys, key=grlex_key)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first, *rest)


@lru_cache(maxsize=1 << 16)
def _normal_order(m1: MonomialKey, m2: MonomialKey) -> tuple[tuple[MonomialKey, int], ...]:
    """Integer normal form of (x^a1 ∂^b1)(x^a2 ∂^b2), coordinate by coordinate."""
    per_coordinate = []
    for a1, b1, a2, b2 in zip(m1.xexp, m1.dexp, m2.xexp, m2.dexp):
        per_coordinate.append(
            [
                (a1 + a2 - k, b1 + b2 - k, factorial(k) * comb(b1, k) * comb(a2, k))
                for k in range(min(b1, a2) + 1)
            ]
        )

    out: dict[MonomialKey, int] = {}
    for choice in itertools.product(*per_coordinate):
        coef = 1
        for _, _, c in choice:
            coef *= c
        key = MonomialKey(tuple(c[0] for c in choice), tuple(c[1] for c in choice))
        out[key] = out.get(key, 0) + coef
    return tuple(out.items())


class WeylElement:
    """An element of A_n(R), R = QQ or F_p, in normal form.

    Instances are immutable: every operation returns a new element.
    """

    __slots__ = ("nvars", "domain", "_terms")

    def __init__(
        self,
        nvars: int,
        domain: CoefficientDomain = QQ,
        terms: Mapping[MonomialKey, Any] | None = None,
    ):
        if nvars < 1:
            raise DimensionMismatch(f"nvars must be >= 1, got {nvars}")
        self.nvars = nvars
        self.domain = domain
        clean: dict[MonomialKey, Any] = {}
        for key, raw in (terms or {}).items():
            key = MonomialKey(tuple(key[0]), tuple(key[1]))
            if len(key.xexp) != nvars or len(key.dexp) != nvars:
                raise DimensionMismatch(f"monomial {key} does not have {nvars} variables")
            if any(e < 0 for e in key.xexp + key.dexp):
                raise ValueError(f"negative exponent in {key}")
            value = domain.normalize(raw)
            if value:
                clean[key] = value
        self._terms = clean

    @classmethod
    def _wrap(cls, nvars: int, domain: CoefficientDomain, terms: dict) -> "WeylElement":
        """Build from already-normalized, zero-free terms."""
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.domain = domain
        obj._terms = terms
        return obj

    # Constructors

    @classmethod
    def zero(cls, nvars: int = 1, domain: CoefficientDomain = QQ) -> "WeylElement":
        return cls._wrap(nvars, domain, {})

    @classmethod
    def scalar(cls, value: Any, nvars: int = 1, domain: CoefficientDomain = QQ) -> "WeylElement":
        return cls(nvars, domain, {MonomialKey.unit(nvars): value})

    @classmethod
    def one(cls, nvars: int = 1, domain: CoefficientDomain = QQ) -> "WeylElement":
        return cls.scalar(1, nvars, domain)

    @classmethod
    def monomial(
        cls,
        xexp: Iterable[int],
        dexp: Iterable[int],
        coefficient: Any = 1,
        domain: CoefficientDomain = QQ,
    ) -> "WeylElement":
        key = MonomialKey(tuple(xexp), tuple(dexp))
        return cls(key.nvars, domain, {key: coefficient})

    @classmethod
    def x(cls, i: int = 1, nvars: int = 1, domain: CoefficientDomain = QQ) -> "WeylElement":
        """The generator x_i (1-based)."""
        return cls.monomial(_unit_vector(i, nvars), (0,) * nvars, 1, domain)

    @classmethod
    def d(cls, i: int = 1, nvars: int = 1, domain: CoefficientDomain = QQ) -> "WeylElement":
        """The generator ∂_i (1-based)."""
        return cls.monomial((0,) * nvars, _unit_vector(i, nvars), 1, domain)

    # Accessors

    @property
    def characteristic(self) -> int:
        return self.domain.characteristic

    def items(self) -> list[tuple[MonomialKey, Any]]:
        """Stored (monomial, raw coefficient) pairs, graded-lex descending."""
        return sorted(self._terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True)

    def monomials(self) -> list[MonomialKey]:
        return [k for k, _ in self.items()]

    def raw(self, key: MonomialKey) -> Any:
        """Raw coefficient of key (int over F_p, Fraction over QQ); 0 if absent."""
        return self._terms.get(key, 0)

    def coefficient(self, key: MonomialKey) -> "Fraction | FpElem":
        """Coefficient of key as a Fraction or FpElem."""
        return self.domain.element(self._terms.get(key, 0))

    def leading_monomial(self) -> MonomialKey:
        if not self._terms:
            raise ZeroElement("the zero element has no leading monomial")
        return max(self._terms, key=grlex_key)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def total_degree(self) -> int | float:
        return total_degree(self)

    def leading_form(self) -> "WeylElement":
        return leading_form(self)

    # Arithmetic

    def _check_compatible(self, other: "WeylElement") -> None:
        if self.nvars != other.nvars:
            raise DimensionMismatch(f"A_{self.nvars} and A_{other.nvars} elements mixed")
        if self.domain != other.domain:
            raise DomainMismatch(f"{self.domain} and {other.domain} elements mixed")

    def _coerce(self, other: Any) -> "WeylElement | None":
        if isinstance(other, WeylElement):
            self._check_compatible(other)
            return other
        if isinstance(other, (int, Fraction, FpElem)):
            return WeylElement.scalar(other, self.nvars, self.domain)
        return None

    def __add__(self, other: Any) -> "WeylElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self._terms)
        for key, value in o._terms.items():
            total = self.domain.normalize(terms.get(key, 0) + value)
            if total:
                terms[key] = total
            else:
                terms.pop(key, None)
        return WeylElement._wrap(self.nvars, self.domain, terms)

    __radd__ = __add__

    def __neg__(self) -> "WeylElement":
        return WeylElement._wrap(
            self.nvars,
            self.domain,
            {k: self.domain.normalize(-v) for k, v in self._terms.items()},
        )

    def __sub__(self, other: Any) -> "WeylElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "WeylElement":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def scale(self, c: Any) -> "WeylElement":
        """Multiply by a scalar from the coefficient domain."""
        c = self.domain.normalize(c)
        if not c:
            return WeylElement.zero(self.nvars, self.domain)
        return WeylElement._wrap(
            self.nvars,
            self.domain,
            {k: self.domain.normalize(v * c) for k, v in self._terms.items()},
        )

    def __mul__(self, other: Any) -> "WeylElement":
        if isinstance(other, WeylElement):
            return mul(self, other)
        if isinstance(other, (int, Fraction, FpElem)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: Any) -> "WeylElement":
        if isinstance(other, (int, Fraction, FpElem)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "WeylElement":
        if exponent < 0:
            raise ValueError("Weyl algebra elements have no negative powers")
        result = WeylElement.one(self.nvars, self.domain)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = WeylElement.scalar(other, self.nvars, self.domain)
        if not isinstance(other, WeylElement):
            return NotImplemented
        return (
            self.nvars == other.nvars
            and self.domain == other.domain
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        return hash((self.nvars, self.domain, frozenset(self._terms.items())))

    def __str__(self) -> str:
        from .op_parser import format_element

        return format_element(self)

    def __repr__(self) -> str:
        return f"WeylElement({self}, nvars={self.nvars}, domain={self.domain!r})"


def _unit_vector(i: int, nvars: int) -> tuple[int, ...]:
    if not 1 <= i <= nvars:
        raise DimensionMismatch(f"generator index {i} outside 1..{nvars}")
    return tuple(1 if k == i - 1 else 0 for k in range(nvars))


def generators(nvars: int, domain: CoefficientDomain = QQ) -> list[WeylElement]:
    """x_1..x_n followed by ∂_1..∂_n."""
    xs = [WeylElement.x(i, nvars, domain) for i in range(1, nvars + 1)]
    ds = [WeylElement.d(i, nvars, domain) for i in range(1, nvars + 1)]
    return xs + ds


# Operations


def monomial_mul(m1: MonomialKey, m2: MonomialKey, domain: CoefficientDomain = QQ) -> WeylElement:
    """Normal form of the product of two normal-ordered monomials."""
    if m1.nvars != m2.nvars:
        raise DimensionMismatch(f"monomials with {m1.nvars} and {m2.nvars} variables")
    return WeylElement(m1.nvars, domain, dict(_normal_order(m1, m2)))


def mul(a: WeylElement, b: WeylElement) -> WeylElement:
    """Product a·b in normal form."""
    a._check_compatible(b)
    acc: dict[MonomialKey, Any] = {}
    for k1, c1 in a._terms.items():
        for k2, c2 in b._terms.items():
            c = c1 * c2
            for key, n in _normal_order(k1, k2):
                acc[key] = acc.get(key, 0) + c * n
    return WeylElement(a.nvars, a.domain, acc)


def commutator(a: WeylElement, b: WeylElement) -> WeylElement:
    """[a, b] = ab - ba."""
    return mul(a, b) - mul(b, a)


def total_degree(a: WeylElement) -> int | float:
    """Degree of the total symbol; NEG_INFINITY for zero."""
    if not a._terms:
        return NEG_INFINITY
    return max(k.degree for k in a._terms)


def leading_form(a: WeylElement) -> WeylElement:
    """The monomials of a of maximal total degree."""
    if not a._terms:
        raise ZeroElement("leading form of the zero element")
    top = total_degree(a)
    return WeylElement._wrap(
        a.nvars, a.domain, {k: v for k, v in a._terms.items() if k.degree == top}
    )


def reduce_mod_p(a: WeylElement, p: "Prime | int") -> WeylElement:
    """Coefficientwise image of a rational element in A_n(F_p).

    Raises BadPrime naming the offending monomial if p divides a denominator.
    """
    if a.characteristic != 0:
        raise WrongCharacteristic(f"reduce_mod_p expects a QQ element, got {a.domain}")
    prime = make_prime(p)
    field_ = GF(prime.p)
    terms = {}
    for key, c in a._terms.items():
        if c.denominator % prime.p == 0:
            from .op_parser import format_monomial

            raise BadPrime(prime.p, coefficient=c, monomial=format_monomial(key))
        terms[key] = c.numerator * pow(c.denominator, -1, prime.p)
    return WeylElement(a.nvars, field_, terms)


def is_central(a: WeylElement) -> bool:
    """Whether a lies in the center.

    In characteristic p the center is generated by the x_i^p and ∂_i^p, so
    a is central iff every stored exponent is divisible by p. Over QQ the
    center is the constants.
    """
    p = a.characteristic
    for key in a._terms:
        for e in key.xexp + key.dexp:
            if (p == 0 and e != 0) or (p and e % p):
                return False
    return True


def commutes_with_generators(a: WeylElement) -> bool:
    """Definitional centrality test: [a, g] = 0 for all 2n generators."""
    return all(commutator(a, g).is_zero() for g in generators(a.nvars, a.domain))


@dataclass
class CenterDecomposition:
    """a = Σ z_ij · x^i ∂^j with z_ij central and 0 <= i, j < p."""

    p: Prime
    parts: dict[tuple[int, int], WeylElement] = field(default_factory=dict)

    def part(self, i: int, j: int) -> WeylElement:
        """Central cofactor of x^i ∂^j (zero when absent)."""
        if (i, j) in self.parts:
            return self.parts[(i, j)]
        return WeylElement.zero(1, GF(self.p.p))

    def reconstruct(self) -> WeylElement:
        total = WeylElement.zero(1, GF(self.p.p))
        for (i, j), z in sorted(self.parts.items()):
            total = total + z * WeylElement.monomial((i,), (j,), 1, GF(self.p.p))
        return total

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "p": self.p.p,
            "parts": [
                {"i": i, "j": j, "central": str(z)} for (i, j), z in sorted(self.parts.items())
            ],
        }


def decompose_over_center(a: WeylElement) -> CenterDecomposition:
    """Coordinates of a in the basis x^i ∂^j (0 <= i, j < p) over the center."""
    if a.characteristic == 0:
        raise WrongCharacteristic("decomposition over the center needs characteristic p")
    if a.nvars != 1:
        raise DimensionMismatch("decomposition over the center is implemented for A_1 only")
    p = a.characteristic
    grouped: dict[tuple[int, int], dict[MonomialKey, Any]] = {}
    for key, c in a._terms.items():
        (xa,), (db,) = key.xexp, key.dexp
        central_key = MonomialKey((xa - xa % p,), (db - db % p,))
        grouped.setdefault((xa % p, db % p), {})[central_key] = c
    parts = {ij: WeylElement._wrap(1, a.domain, terms) for ij, terms in grouped.items()}
    return CenterDecomposition(p=make_prime(p), parts=parts)


def oracle_mul(a: WeylElement, b: WeylElement) -> WeylElement:
    """Reference product that only ever rewrites ∂_i x_i -> x_i ∂_i + 1.

    Exponential in the exponents; meant for cross-checking monomial_mul.
    """
    a._check_compatible(b)
    n = a.nvars

    def word(key: MonomialKey) -> tuple[tuple[str, int], ...]:
        letters: list[tuple[str, int]] = []
        for i, e in enumerate(key.xexp):
            letters += [("x", i)] * e
        for i, e in enumerate(key.dexp):
            letters += [("d", i)] * e
        return tuple(letters)

    pending: dict[tuple[tuple[str, int], ...], Any] = {}
    for k1, c1 in a._terms.items():
        for k2, c2 in b._terms.items():
            w = word(k1) + word(k2)
            pending[w] = pending.get(w, 0) + c1 * c2

    done: dict[MonomialKey, Any] = {}
    while pending:
        w, c = pending.popitem()
        pos = next(
            (
                i
                for i in range(len(w) - 1)
                if w[i][0] == "d" and w[i + 1][0] == "x"
            ),
            None,
        )
        if pos is None:
            xexp = [0] * n
            dexp = [0] * n
            for kind, i in w:
                (xexp if kind == "x" else dexp)[i] += 1
            key = MonomialKey(tuple(xexp), tuple(dexp))
            done[key] = done.get(key, 0) + c
            continue
        left, right = w[pos], w[pos + 1]
        swapped = w[:pos] + (right, left) + w[pos + 2 :]
        pending[swapped] = pending.get(swapped, 0) + c
        if left[1] == right[1]:
            dropped = w[:pos] + w[pos + 2 :]
            pending[dropped] = pending.get(dropped, 0) + c
    return WeylElement(n, a.domain, done)


def random_element(
    rng: random.Random,
    nvars: int = 1,
    domain: CoefficientDomain = QQ,
    max_degree: int = 3,
    coefficients: Sequence[Any] = tuple(range(-3, 4)),
    density: float = 0.5,
) -> WeylElement:
    """Random element with monomials of total degree <= max_degree.

    Each monomial is kept with probability ``density`` and given a
    coefficient drawn from ``coefficients``.
    """
    terms = {}
    for key in monomials_up_to(nvars, max_degree):
        if rng.random() < density:
            terms[key] = rng.choice(coefficients)
    return WeylElement(nvars, domain, terms)
