"""Tests for primes, F_p elements and coefficient domains."""

import random
from fractions import Fraction
from itertools import islice
from math import gcd

import pytest

from weylcent.engine.errors import BadLiteral, BadPrime, DomainMismatch, NotPrime, ZeroInverse
from weylcent.engine.exact_arith import (
    GF,
    QQ,
    FpElem,
    Prime,
    domain_for,
    fp_inv,
    is_prime,
    make_prime,
    next_prime,
    primes_from,
    rational_mod_p,
)


class TestPrime:
    """Tests for Prime and prime streams."""

    def test_accepts_primes(self):
        """Should wrap primes and behave like an int."""
        p = Prime(7)
        assert int(p) == 7
        assert [0, 1, 2, 3, 4, 5, 6, 7][p] == 7
        assert str(p) == "7"

    @pytest.mark.parametrize("value", [0, 1, 4, 9, 561, -7])
    def test_rejects_non_primes(self, value):
        """Should raise NotPrime for composites, units and negatives."""
        with pytest.raises(NotPrime):
            Prime(value)

    def test_rejects_bool(self):
        """Should not accept True as the prime 1."""
        with pytest.raises(NotPrime):
            Prime(True)

    def test_make_prime_passthrough(self):
        """Should return an existing Prime unchanged."""
        p = Prime(5)
        assert make_prime(p) is p
        assert make_prime(5) == p

    def test_primes_from(self):
        """Should stream primes in increasing order starting at start."""
        assert [p.p for p in islice(primes_from(2), 6)] == [2, 3, 5, 7, 11, 13]
        assert [p.p for p in islice(primes_from(14), 2)] == [17, 19]
        assert next(primes_from(13)).p == 13

    def test_primes_from_rejects_small_start(self):
        """Should refuse to start below 2."""
        with pytest.raises(ValueError):
            next(primes_from(1))

    def test_next_prime_is_strict(self):
        """Should return the next prime strictly above n."""
        assert next_prime(7).p == 11
        assert is_prime(2**61 - 1)


class TestFpElem:
    """Tests for prime field elements."""

    def test_reduces_on_construction(self):
        """Should store the residue in [0, p)."""
        assert FpElem(-1, Prime(5)).value == 4
        assert FpElem(12, Prime(5)).value == 2

    def test_field_operations(self):
        """Should implement field arithmetic mod p."""
        p = Prime(7)
        a, b = FpElem(3, p), FpElem(5, p)
        assert (a + b).value == 1
        assert (a - b).value == 5
        assert (a * b).value == 1
        assert (a / b).value == 2
        assert (-a).value == 4
        assert (a**6).value == 1
        assert (a**-1).value == 5
        assert (2 + a).value == 5
        assert (10 - a).value == 0

    def test_inverse(self):
        """Should invert every nonzero residue."""
        p = Prime(11)
        for v in range(1, 11):
            assert (FpElem(v, p) * fp_inv(FpElem(v, p))).value == 1

    def test_zero_has_no_inverse(self):
        """Should raise ZeroInverse for 0."""
        with pytest.raises(ZeroInverse):
            fp_inv(FpElem(0, Prime(3)))

    @pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
    def test_field_axioms_on_random_triples(self, p):
        """Should be associative, distributive and have inverses."""
        rng = random.Random(p)
        prime = Prime(p)
        for _ in range(50):
            a, b, c = (FpElem(rng.randrange(p), prime) for _ in range(3))
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a + (-a) == FpElem(0, prime)
            if a:
                assert a * fp_inv(a) == FpElem(1, prime)

    def test_mixing_moduli(self):
        """Should refuse to combine elements of different fields."""
        with pytest.raises(DomainMismatch):
            FpElem(1, Prime(3)) + FpElem(1, Prime(5))


class TestRationalModP:
    """Tests for reducing rationals into F_p."""

    def test_image(self):
        """Should map n/d to n * d^-1."""
        assert rational_mod_p(Fraction(1, 2), 5).value == 3
        assert rational_mod_p(Fraction(-3, 4), 7).value == 1
        assert rational_mod_p(9, 7).value == 2

    @pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
    def test_is_a_ring_homomorphism(self, p):
        """Should preserve sums and products when denominators are prime to p."""
        rng = random.Random(40 + p)

        def draw() -> Fraction:
            while True:
                den = rng.randint(1, 30)
                if den % p:
                    return Fraction(rng.randint(-50, 50), den)

        for _ in range(50):
            r, s = draw(), draw()
            assert rational_mod_p(r + s, p) == rational_mod_p(r, p) + rational_mod_p(s, p)
            assert rational_mod_p(r * s, p) == rational_mod_p(r, p) * rational_mod_p(s, p)

    def test_bad_prime(self):
        """Should raise BadPrime when p divides the denominator."""
        with pytest.raises(BadPrime) as exc:
            rational_mod_p(Fraction(1, 6), 3)
        assert exc.value.prime == 3


class TestCoefficientDomains:
    """Tests for QQ and GF(p)."""

    def test_rational_literals_are_canonical(self):
        """Should read back a coprime pair with a positive denominator."""
        rng = random.Random(3)
        for _ in range(100):
            num = rng.randint(-200, 200)
            den = rng.choice([-1, 1]) * rng.randint(1, 200)
            value = QQ.literal(num, den)
            assert value.denominator > 0
            assert gcd(value.numerator, value.denominator) == 1
            assert value * den == num
        assert QQ.literal(0, -7) == Fraction(0, 1)
        assert QQ.literal(0, -7).denominator == 1

    def test_names(self):
        """Should name domains like QQ and GF(p)."""
        assert QQ.name == "QQ"
        assert GF(5).name == "GF(5)"
        assert QQ.characteristic == 0
        assert GF(5).characteristic == 5

    def test_gf_is_cached(self):
        """Should return the same PrimeField instance per prime."""
        assert GF(7) is GF(7)
        assert GF(7) == GF(7)
        assert GF(7) != GF(11)
        assert GF(7) != QQ

    def test_gf_rejects_composite(self):
        """Should raise NotPrime for GF(4)."""
        with pytest.raises(NotPrime):
            GF(4)

    def test_domain_for(self):
        """Should map None to QQ and primes to GF(p)."""
        assert domain_for(None) is QQ
        assert domain_for(3) is GF(3)
        assert domain_for(Prime(3)) is GF(3)

    def test_literals(self):
        """Should parse fractions over QQ and refuse them over F_p."""
        assert QQ.literal(3, 4) == Fraction(3, 4)
        assert GF(5).literal(7) == 2
        with pytest.raises(BadLiteral):
            GF(5).literal(1, 2)
        with pytest.raises(BadLiteral):
            QQ.literal(1, 0)

    def test_format_and_sign(self):
        """Should format magnitudes and report signs separately."""
        assert QQ.format(Fraction(-3, 2)) == "3/2"
        assert QQ.is_negative(Fraction(-3, 2))
        assert GF(5).format(4) == "4"
        assert not GF(5).is_negative(4)

    def test_normalize(self):
        """Should bring raw values into canonical form."""
        assert GF(5).normalize(Fraction(1, 2)) == 3
        assert GF(5).normalize(-1) == 4
        assert GF(5).normalize(FpElem(3, Prime(5))) == 3
        with pytest.raises(DomainMismatch):
            GF(5).normalize(FpElem(1, Prime(7)))
        with pytest.raises(DomainMismatch):
            QQ.normalize(FpElem(1, Prime(7)))
        assert GF(5).element(3) == FpElem(3, Prime(5))
