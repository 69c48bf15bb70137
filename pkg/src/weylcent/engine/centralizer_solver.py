"""Degree-truncated centralizers in A_n(F_p).

The centralizer B_a of a is computed slice by slice: the elements of total
degree <= D commuting with a form the kernel of the linear map b -> [a, b],
which is solved exactly over F_p. The slice of Z[a] (center plus a) and
fraction witnesses b = z1 / z2 with z1, z2 in Z[a] are found the same way.
"""

import logging
import random
from dataclasses import dataclass, field
from typing import Any

from .errors import (
    CentralInput,
    DimensionMismatch,
    NotCommutingInput,
    WitnessNotFound,
    WrongCharacteristic,
    ZeroElement,
)
from .exact_arith import GF, Prime, make_prime
from .linalg import nullspace_mod_p, rref_mod_p, zeros
from .weyl_core import (
    MonomialKey,
    WeylElement,
    commutator,
    grlex_key,
    is_central,
    monomials_up_to,
    random_element,
    total_degree,
)

logger = logging.getLogger(__name__)

Witness = tuple[WeylElement, WeylElement]


def _require_char_p(a: WeylElement) -> int:
    if a.characteristic == 0:
        raise WrongCharacteristic("centralizer computations need coefficients in F_p")
    return a.characteristic


def _to_matrix(
    elements: list[WeylElement], monomials: list[MonomialKey], p: int, as_columns: bool
) -> Any:
    index = {m: i for i, m in enumerate(monomials)}
    shape = (len(monomials), len(elements)) if as_columns else (len(elements), len(monomials))
    matrix = zeros(*shape, p)
    for j, element in enumerate(elements):
        for key, c in element.items():
            if as_columns:
                matrix[index[key], j] = c
            else:
                matrix[j, index[key]] = c
    return matrix


class EchelonBasis:
    """Reduced echelon basis of the span of a list of F_p elements.

    The leading monomial of an element is its largest monomial in graded-lex
    order. Every basis element has leading coefficient 1 and its leading
    monomial appears in no other basis element. ``elements`` is sorted by
    ascending leading monomial.
    """

    def __init__(self, elements: list[WeylElement], nvars: int, p: int):
        self.nvars = nvars
        self.p = p
        self.domain = GF(p)
        monomials = sorted(
            {k for e in elements for k in e.monomials()}, key=grlex_key, reverse=True
        )
        self.elements: list[WeylElement] = []
        if monomials:
            R, pivot_cols = rref_mod_p(_to_matrix(elements, monomials, p, False), p)
            for row in range(len(pivot_cols)):
                terms = {monomials[c]: int(R[row, c]) for c in range(len(monomials)) if R[row, c]}
                self.elements.append(WeylElement(nvars, self.domain, terms))
        self.elements.sort(key=lambda e: grlex_key(e.leading_monomial()))
        self._pivots = {e.leading_monomial(): e for e in self.elements}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def leading_monomials(self) -> list[MonomialKey]:
        return [e.leading_monomial() for e in self.elements]

    def reduce(self, b: WeylElement) -> WeylElement:
        """Remainder of b after eliminating every pivot monomial."""
        for lead, row in self._pivots.items():
            c = b.raw(lead)
            if c:
                b = b - row.scale(c)
        return b

    def contains(self, b: WeylElement) -> bool:
        return self.reduce(b).is_zero()


@dataclass
class CentralizerBasis:
    """Basis of the degree <= D slice of the centralizer of a."""

    a: WeylElement
    p: Prime
    degree_bound: int
    basis: list[WeylElement]
    commutative: bool
    witness: Witness | None = None

    def echelon(self) -> EchelonBasis:
        return EchelonBasis(self.basis, self.a.nvars, self.p.p)

    def leading_monomials(self) -> list[MonomialKey]:
        return [b.leading_monomial() for b in self.basis]

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        data: dict[str, Any] = {
            "p": self.p.p,
            "nvars": self.a.nvars,
            "degree": self.degree_bound,
            "basis": [str(b) for b in self.basis],
            "commutative": self.commutative,
        }
        if self.witness is not None:
            data["witness"] = [str(self.witness[0]), str(self.witness[1])]
        return data


def pairwise_commute(basis: list[WeylElement]) -> tuple[bool, Witness | None]:
    """Check [b_i, b_j] = 0 for all i < j; return the first failing pair."""
    for i, left in enumerate(basis):
        for right in basis[i + 1 :]:
            if not commutator(left, right).is_zero():
                return False, (left, right)
    return True, None


def centralizer_basis(a: WeylElement, degree_bound: int) -> CentralizerBasis:
    """Echelon basis of {b : tot(b) <= D, [a, b] = 0} in A_n(F_p)."""
    p = _require_char_p(a)
    if a.is_zero():
        raise ZeroElement("the centralizer of 0 is the whole algebra")
    if degree_bound < 0:
        raise ValueError(f"degree bound must be >= 0, got {degree_bound}")

    sources = monomials_up_to(a.nvars, degree_bound)
    images = [
        commutator(a, WeylElement(a.nvars, a.domain, {m: 1})) for m in sources
    ]
    targets = sorted({k for img in images for k in img.monomials()}, key=grlex_key)

    if targets:
        kernel = nullspace_mod_p(_to_matrix(images, targets, p, True), p)
    else:
        kernel = [[1 if i == j else 0 for i in range(len(sources))] for j in range(len(sources))]

    solutions = [
        WeylElement(a.nvars, a.domain, {sources[c]: v for c, v in enumerate(vector) if v})
        for vector in kernel
    ]
    basis = EchelonBasis(solutions, a.nvars, p).elements
    commutative, witness = pairwise_commute(basis)
    logger.debug(
        f"Centralizer of {a} at degree {degree_bound}: {len(basis)} elements "
        f"({len(sources)} unknowns, {len(targets)} equations), commutative={commutative}"
    )
    return CentralizerBasis(
        a=a,
        p=make_prime(p),
        degree_bound=degree_bound,
        basis=basis,
        commutative=commutative,
        witness=witness,
    )


def _za_generators(a: WeylElement, degree_bound: int) -> list[WeylElement]:
    p = a.characteristic
    tot = int(total_degree(a))
    x_p = WeylElement.monomial((p,), (0,), 1, a.domain)
    d_p = WeylElement.monomial((0,), (p,), 1, a.domain)

    powers_of_a = [WeylElement.one(1, a.domain)]
    if tot > 0:
        while len(powers_of_a) * tot <= degree_bound:
            powers_of_a.append(powers_of_a[-1] * a)

    products = []
    for r in range(degree_bound // p + 1):
        for s in range((degree_bound - p * r) // p + 1):
            central = (x_p**r) * (d_p**s)
            budget = degree_bound - p * r - p * s
            for m, power in enumerate(powers_of_a):
                if m * tot > budget:
                    break
                products.append(central * power)
    return products


def za_echelon(a: WeylElement, degree_bound: int) -> EchelonBasis:
    """Echelon basis of the degree <= D slice of Z[a]."""
    p = _require_char_p(a)
    if a.nvars != 1:
        raise DimensionMismatch("Z[a] slices are implemented for A_1 only")
    if a.is_zero():
        raise ZeroElement("Z[0] is the center; pass a nonzero element")
    return EchelonBasis(_za_generators(a, degree_bound), 1, p)


def za_span(a: WeylElement, degree_bound: int) -> list[WeylElement]:
    """Echelon basis of the span of (x^p)^r (∂^p)^s a^m of total degree <= D."""
    return za_echelon(a, degree_bound).elements


@dataclass
class FractionWitness:
    """b = z1 / z2 with z1, z2 in Z[a] and b·z2 = z1."""

    a: WeylElement
    b: WeylElement
    z1: WeylElement
    z2: WeylElement
    generator_degrees: int

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "p": self.a.characteristic,
            "a": str(self.a),
            "b": str(self.b),
            "z1": str(self.z1),
            "z2": str(self.z2),
            "degree": self.generator_degrees,
            "verified": (self.b * self.z2) == self.z1,
        }


def fraction_witness(a: WeylElement, b: WeylElement, degree_bound: int) -> FractionWitness:
    """Find z1, z2 in the degree <= D slice of Z[a] with b·z2 = z1, z2 != 0.

    Among all solutions the z2 with the smallest leading monomial is returned.
    Raises WitnessNotFound when the slice is too small; that says nothing
    about larger bounds.
    """
    p = _require_char_p(a)
    a._check_compatible(b)
    if a.nvars != 1:
        raise DimensionMismatch("fraction witnesses are implemented for A_1 only")
    if is_central(a):
        raise CentralInput(f"{a} is central")
    if not commutator(a, b).is_zero():
        raise NotCommutingInput(f"[{a}, {b}] != 0")

    za = za_echelon(a, degree_bound)
    basis = za.elements
    k = len(basis)
    # Unknowns (c_1..c_k, d_1..d_k): Σ d_i b·e_i - Σ c_i e_i = 0
    columns = [-e for e in basis] + [b * e for e in basis]
    targets = sorted({m for col in columns for m in col.monomials()}, key=grlex_key)
    kernel = nullspace_mod_p(_to_matrix(columns, targets, p, True), p)

    denominators = []
    for vector in kernel:
        z2 = WeylElement.zero(1, a.domain)
        for coeff, e in zip(vector[k:], basis):
            if coeff:
                z2 = z2 + e.scale(coeff)
        if not z2.is_zero():
            denominators.append(z2)

    if not denominators:
        logger.warning(f"No fraction witness for {b} over Z[{a}] at degree {degree_bound}")
        raise WitnessNotFound(f"no witness for b = {b} within degree {degree_bound}")

    z2 = EchelonBasis(denominators, 1, p).elements[0]
    z1 = b * z2
    if not za.contains(z1):
        raise ArithmeticError(f"numerator {z1} escaped the Z[a] slice")
    return FractionWitness(a=a, b=b, z1=z1, z2=z2, generator_degrees=degree_bound)


@dataclass
class LemmaReport:
    """Commutativity, Z[a] containment and fraction witnesses for one a."""

    centralizer: CentralizerBasis
    # None when the Z[a] slice is not computed (n > 1)
    za_contained: bool | None
    witnesses: dict[str, FractionWitness | None] = field(default_factory=dict)

    @property
    def all_witnessed(self) -> bool:
        return all(w is not None for w in self.witnesses.values())

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            **self.centralizer.to_dict(),
            "za_contained": self.za_contained,
            "witnesses": {
                b: ({"z1": str(w.z1), "z2": str(w.z2)} if w else None)
                for b, w in self.witnesses.items()
            },
        }


def verify_lemma(
    a: WeylElement, degree_bound: int, witness_degree: int | None = None
) -> LemmaReport:
    """Check the commutativity and fraction-field statements on one slice.

    Fraction witnesses are searched in the Z[a] slice of degree
    ``witness_degree`` (default 2·D) for every centralizer basis element.
    """
    if is_central(a):
        raise CentralInput(f"{a} is central")
    centralizer = centralizer_basis(a, degree_bound)
    report = LemmaReport(centralizer=centralizer, za_contained=None)
    if a.nvars != 1:
        return report

    echelon = centralizer.echelon()
    report.za_contained = all(echelon.contains(z) for z in za_span(a, degree_bound))
    bound = 2 * degree_bound if witness_degree is None else witness_degree
    for b in centralizer.basis:
        try:
            report.witnesses[str(b)] = fraction_witness(a, b, bound)
        except WitnessNotFound:
            report.witnesses[str(b)] = None
    return report


@dataclass
class LemmaSample:
    a: WeylElement
    basis_size: int
    commutative: bool


@dataclass
class LemmaSuiteReport:
    """Centralizer commutativity over random noncentral elements of A_1(F_p)."""

    p: Prime
    seed: int
    max_degree: int
    degree_bound: int
    samples: list[LemmaSample] = field(default_factory=list)

    @property
    def all_commutative(self) -> bool:
        return all(s.commutative for s in self.samples)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "p": self.p.p,
            "seed": self.seed,
            "max_degree": self.max_degree,
            "degree": self.degree_bound,
            "samples": [
                {"a": str(s.a), "basis_size": s.basis_size, "commutative": s.commutative}
                for s in self.samples
            ],
            "all_commutative": self.all_commutative,
        }


def random_noncentral(rng: random.Random, p: int, max_degree: int) -> WeylElement:
    """Random noncentral element of A_1(F_p) of total degree <= max_degree."""
    if max_degree < 1:
        raise ValueError("noncentral elements need max_degree >= 1")
    domain = GF(p)
    while True:
        a = random_element(rng, 1, domain, max_degree, tuple(range(p)))
        if not a.is_zero() and not is_central(a):
            return a


def lemma_check(
    p: "Prime | int",
    samples: int = 50,
    seed: int = 0,
    max_degree: int = 3,
    degree_bound: int = 6,
) -> LemmaSuiteReport:
    """Compute the degree-D centralizer of random noncentral a in A_1(F_p)."""
    prime = make_prime(p)
    rng = random.Random(seed)
    report = LemmaSuiteReport(
        p=prime, seed=seed, max_degree=max_degree, degree_bound=degree_bound
    )
    for _ in range(samples):
        a = random_noncentral(rng, prime.p, max_degree)
        result = centralizer_basis(a, degree_bound)
        report.samples.append(LemmaSample(a, len(result.basis), result.commutative))
        if not result.commutative:
            logger.warning(f"Noncommutative centralizer slice for {a}: {result.witness}")
    logger.info(
        f"Lemma check over F_{prime}: {samples} samples, all commutative={report.all_commutative}"
    )
    return report
