"""Commutativity certificates for operators over QQ by reduction mod p.

For P, Q in A_1(QQ) with denominators cleared (Pint = λP, Qint = μQ),
every coefficient of [Pint, Qint] is an integer of absolute value at most
B, the majorant bound. If [P_p, Q_p] = 0 for primes p_1..p_r not dividing
λμ, each of these coefficients is divisible by p_1···p_r, so once that
product exceeds 2B they are all zero and P, Q commute.

``theorem_pipeline`` additionally follows the reduction argument for the
commutativity of centralizers: a nonconstant a with [a, P] = [a, Q] = 0,
the unit u = n!·Π(top coefficients of a), and per good prime the checks
that a_p keeps its degree, is noncentral and commutes with P_p and Q_p.
"""

import logging
from collections.abc import Iterator
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import factorial, lcm, prod
from typing import Any

from .errors import ConstantOperator, DimensionMismatch, WrongCharacteristic
from .exact_arith import Prime, primes_from
from .weyl_core import (
    WeylElement,
    commutator,
    is_central,
    leading_form,
    mul,
    reduce_mod_p,
    total_degree,
)

logger = logging.getLogger(__name__)

DEFAULT_MAX_PRIMES = 64


class Verdict(str, Enum):
    """Outcome of a certificate."""

    COMMUTE = "COMMUTE"
    NOT_COMMUTE = "NOT_COMMUTE"
    INCONCLUSIVE = "INCONCLUSIVE"


class PrimeStatus(str, Enum):
    """What happened at one prime."""

    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


def _require_rational(*elements: WeylElement) -> None:
    for e in elements:
        if e.characteristic != 0:
            raise WrongCharacteristic(f"expected an operator over QQ, got {e.domain}")
        if e.nvars != 1:
            raise DimensionMismatch("certificates are implemented for A_1 only")


def clear_denominators(P: WeylElement) -> tuple[WeylElement, int]:
    """(λ·P, λ) with λ the lcm of the coefficient denominators."""
    _require_rational(P)
    factor = lcm(*(c.denominator for _, c in P.items())) if P else 1
    return P.scale(factor), factor


@dataclass(frozen=True)
class ClearedPair:
    """Integer multiples Pint = λP, Qint = μQ of a pair of operators."""

    Pint: WeylElement
    Qint: WeylElement
    lam: int
    mu: int

    @classmethod
    def of(cls, P: WeylElement, Q: WeylElement) -> "ClearedPair":
        Pint, lam = clear_denominators(P)
        Qint, mu = clear_denominators(Q)
        return cls(Pint=Pint, Qint=Qint, lam=lam, mu=mu)


@dataclass
class GoodPrimeFilter:
    """Primes at which reduction of a keeps its degree and noncentrality.

    A prime is good iff it divides neither u = n!·Π(top coefficients) nor
    any of the denominator-clearing factors in ``extra``.
    """

    n: int
    N: int
    u: int
    extra: list[int] = field(default_factory=list)

    def skip_reason(self, p: int) -> str | None:
        """Why p is not good, or None if it is."""
        if self.u % p == 0:
            return "divides u"
        if any(e % p == 0 for e in self.extra):
            return "divides a denominator"
        return None

    def is_good(self, p: int) -> bool:
        return self.skip_reason(p) is None

    def with_extra(self, *factors: int) -> "GoodPrimeFilter":
        return GoodPrimeFilter(n=self.n, N=self.N, u=self.u, extra=[*self.extra, *factors])

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {"n": self.n, "N": self.N, "u": str(self.u), "extra": self.extra}


def compute_u(a: WeylElement) -> GoodPrimeFilter:
    """Build the good-prime filter of a nonconstant operator a."""
    _require_rational(a)
    n = total_degree(a)
    if n <= 0:
        raise ConstantOperator(f"{a} is constant; the operator must be nonconstant")
    a_int, lam = clear_denominators(a)
    N = factorial(int(n))
    u = N * prod(int(c) for _, c in leading_form(a_int).items())
    return GoodPrimeFilter(n=int(n), N=N, u=u, extra=[lam])


def good_primes(
    prime_filter: GoodPrimeFilter, start: int = 2
) -> Iterator[tuple[Prime, str | None]]:
    """Stream primes >= start with the reason each is skipped (None if good)."""
    for prime in primes_from(start):
        yield prime, prime_filter.skip_reason(prime.p)


def _absolute(a: WeylElement) -> WeylElement:
    return WeylElement(a.nvars, a.domain, {k: abs(c) for k, c in a.items()})


def majorant_bound(Pint: WeylElement, Qint: WeylElement) -> int:
    """Upper bound on the absolute values of the coefficients of [Pint, Qint].

    Normal ordering only adds nonnegative integer multiples, so the
    coefficients of |P|·|Q| + |Q|·|P| dominate those of PQ - QP.
    """
    for e in (Pint, Qint):
        if any(Fraction(c).denominator != 1 for _, c in e.items()):
            raise ValueError("majorant_bound expects integer coefficients")
    abs_p, abs_q = _absolute(Pint), _absolute(Qint)
    majorant = mul(abs_p, abs_q) + mul(abs_q, abs_p)
    return max((int(c) for _, c in majorant.items()), default=0)


@dataclass
class PrimeOutcome:
    """Per-prime record of a certificate run."""

    prime: int
    status: PrimeStatus
    reason: str | None = None
    trace: dict[str, Any] | None = None

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        data: dict[str, Any] = {"p": self.prime, "status": self.status.value}
        if self.reason:
            data["reason"] = self.reason
        if self.trace is not None:
            data["trace"] = self.trace
        return data


@dataclass
class CertificateReport:
    """Verdict of a certificate together with the evidence behind it."""

    verdict: Verdict
    majorant_bound: int = 0
    primes_used: list[PrimeOutcome] = field(default_factory=list)
    cross_check: dict[str, Any] | None = None
    reason: str | None = None
    good_prime_filter: GoodPrimeFilter | None = None

    @property
    def passing_primes(self) -> list[int]:
        return [o.prime for o in self.primes_used if o.status == PrimeStatus.PASS]

    @property
    def pipeline_trace(self) -> list[dict[str, Any]]:
        return [o.trace for o in self.primes_used if o.trace is not None]

    @property
    def certified_modulus(self) -> int:
        return prod(self.passing_primes)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for serialization."""
        data: dict[str, Any] = {
            "verdict": self.verdict.value,
            "majorant_bound": str(self.majorant_bound),
            "certified_modulus": str(self.certified_modulus),
            "primes": [o.to_dict() for o in self.primes_used],
            "cross_check": self.cross_check,
        }
        if self.reason:
            data["reason"] = self.reason
        if self.good_prime_filter is not None:
            data["good_primes"] = self.good_prime_filter.to_dict()
        return data


def _rational_cross_check(P: WeylElement, Q: WeylElement) -> dict[str, Any]:
    C = commutator(P, Q)
    return {"commutator": str(C), "is_zero": C.is_zero()}


def _check_pair(P: WeylElement, Q: WeylElement, p: int) -> bool:
    return commutator(reduce_mod_p(P, p), reduce_mod_p(Q, p)).is_zero()


def _trace_prime(a: WeylElement, P: WeylElement, Q: WeylElement, p: int) -> dict[str, Any]:
    a_p, P_p, Q_p = (reduce_mod_p(e, p) for e in (a, P, Q))
    tot = total_degree(a_p)
    return {
        "tot_a": tot,
        "tot_prime_to_p": tot % p != 0,
        "a_central": is_central(a_p),
        "a_commutes_P": commutator(a_p, P_p).is_zero(),
        "a_commutes_Q": commutator(a_p, Q_p).is_zero(),
        "P_commutes_Q": commutator(P_p, Q_p).is_zero(),
    }


def _run_certificate(
    P: WeylElement,
    Q: WeylElement,
    prime_filter: GoodPrimeFilter,
    max_primes: int,
    workers: int,
    a: WeylElement | None = None,
) -> CertificateReport:
    cleared = ClearedPair.of(P, Q)
    bound = majorant_bound(cleared.Pint, cleared.Qint)
    report = CertificateReport(verdict=Verdict.INCONCLUSIVE, majorant_bound=bound)
    logger.debug(f"Majorant bound for [{P}, {Q}]: {bound}")

    def evaluate(p: int) -> PrimeOutcome:
        if a is not None:
            trace = _trace_prime(a, P, Q, p)
            passed = trace["P_commutes_Q"]
        else:
            trace = None
            passed = _check_pair(P, Q, p)
        status = PrimeStatus.PASS if passed else PrimeStatus.FAIL
        return PrimeOutcome(prime=p, status=status, trace=trace)

    stream = good_primes(prime_filter)
    checked = 0
    modulus = 1
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        while checked < max_primes:
            # skipped primes stay in the batch so the merge below is in prime order
            batch: list[tuple[int, str | None]] = []
            target = min(max(1, workers), max_primes - checked)
            while sum(reason is None for _, reason in batch) < target:
                prime, reason = next(stream)
                batch.append((prime.p, reason))

            # map() yields in submission order
            results = iter(pool.map(evaluate, [p for p, reason in batch if reason is None]))
            for p, reason in batch:
                if reason is not None:
                    logger.debug(f"Skipping prime {p}: {reason}")
                    report.primes_used.append(
                        PrimeOutcome(prime=p, status=PrimeStatus.SKIPPED, reason=reason)
                    )
                    continue
                outcome = next(results)
                report.primes_used.append(outcome)
                checked += 1
                if outcome.status == PrimeStatus.FAIL:
                    report.verdict = Verdict.NOT_COMMUTE
                    return report
                modulus *= outcome.prime
                if modulus > 2 * bound:
                    report.verdict = Verdict.COMMUTE
                    return report

    report.reason = (
        f"prime cap {max_primes} reached: product {modulus} does not exceed 2B = {2 * bound}"
    )
    logger.warning(f"Certificate inconclusive for [{P}, {Q}]: {report.reason}")
    return report


def certify_zero_commutator(
    P: WeylElement,
    Q: WeylElement,
    max_primes: int = DEFAULT_MAX_PRIMES,
    cross_check: bool = True,
    workers: int = 1,
) -> CertificateReport:
    """Decide [P, Q] = 0 over QQ from checks in A_1(F_p) for small primes."""
    _require_rational(P, Q)
    cleared = ClearedPair.of(P, Q)
    prime_filter = GoodPrimeFilter(n=0, N=1, u=1, extra=[cleared.lam, cleared.mu])
    report = _run_certificate(P, Q, prime_filter, max_primes, workers)
    if cross_check:
        report.cross_check = _rational_cross_check(P, Q)
    logger.info(f"Certificate for [{P}, {Q}]: {report.verdict.value}")
    return report


def theorem_pipeline(
    a: WeylElement,
    P: WeylElement,
    Q: WeylElement,
    max_primes: int = DEFAULT_MAX_PRIMES,
    cross_check: bool = True,
    workers: int = 1,
) -> CertificateReport:
    """Certify [P, Q] = 0 for P, Q in the centralizer of a nonconstant a.

    Hypothesis failures are reported as INCONCLUSIVE with the reason named.
    """
    _require_rational(a, P, Q)

    def inconclusive(reason: str) -> CertificateReport:
        logger.info(f"Theorem hypotheses fail: {reason}")
        report = CertificateReport(verdict=Verdict.INCONCLUSIVE, reason=reason)
        if cross_check:
            report.cross_check = _rational_cross_check(P, Q)
        return report

    try:
        prime_filter = compute_u(a)
    except ConstantOperator:
        return inconclusive("a is constant (hypothesis: a nonconstant)")
    if not commutator(a, P).is_zero():
        return inconclusive("[a, P] != 0 (hypothesis: P commutes with a)")
    if not commutator(a, Q).is_zero():
        return inconclusive("[a, Q] != 0 (hypothesis: Q commutes with a)")

    cleared = ClearedPair.of(P, Q)
    prime_filter = prime_filter.with_extra(cleared.lam, cleared.mu)
    report = _run_certificate(P, Q, prime_filter, max_primes, workers, a=a)
    report.good_prime_filter = prime_filter
    if cross_check:
        report.cross_check = _rational_cross_check(P, Q)
    logger.info(f"Theorem pipeline for a = {a}: {report.verdict.value}")
    return report
