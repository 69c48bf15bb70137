"""Tests for normal-form Weyl algebra arithmetic."""

import random
from fractions import Fraction

import pytest

from weylcent.engine.errors import (
    BadPrime,
    DimensionMismatch,
    DomainMismatch,
    WrongCharacteristic,
    ZeroElement,
)
from weylcent.engine.exact_arith import GF, QQ
from weylcent.engine.weyl_core import (
    NEG_INFINITY,
    MonomialKey,
    WeylElement,
    commutator,
    commutes_with_generators,
    decompose_over_center,
    generators,
    is_central,
    leading_form,
    monomial_mul,
    monomials_up_to,
    mul,
    oracle_mul,
    random_element,
    reduce_mod_p,
    total_degree,
)

X = WeylElement.x()
D = WeylElement.d()


class TestMonomials:
    """Tests for monomial keys and products."""

    def test_monomials_up_to_count(self):
        """Should list C(D + 2n, 2n) monomials in ascending graded-lex order."""
        keys = monomials_up_to(1, 3)
        assert len(keys) == 10
        assert keys[0] == MonomialKey.unit(1)
        assert [k.degree for k in keys] == sorted(k.degree for k in keys)
        assert len(monomials_up_to(2, 2)) == 15

    def test_d_cubed_times_x_squared(self):
        """Should expand ∂^3 x^2 with factorial-binomial coefficients."""
        product = monomial_mul(MonomialKey((0,), (3,)), MonomialKey((2,), (0,)))
        assert product.raw(MonomialKey((2,), (3,))) == 1
        assert product.raw(MonomialKey((1,), (2,))) == 6
        assert product.raw(MonomialKey((0,), (1,))) == 6
        assert len(product) == 3

    def test_already_normal_ordered(self):
        """Should simply add exponents when no ∂ precedes an x."""
        product = monomial_mul(MonomialKey((2,), (0,)), MonomialKey((1,), (3,)))
        assert product == WeylElement.monomial((3,), (3,))

    def test_distinct_coordinates_commute(self):
        """Should not produce correction terms between different variables."""
        d1 = WeylElement.d(1, 2)
        x2 = WeylElement.x(2, 2)
        assert d1 * x2 == x2 * d1

    def test_dimension_mismatch(self):
        """Should refuse monomials from different algebras."""
        with pytest.raises(DimensionMismatch):
            monomial_mul(MonomialKey((1,), (0,)), MonomialKey((1, 0), (0, 0)))


class TestWeylElement:
    """Tests for element construction and arithmetic."""

    def test_canonical_commutator(self):
        """Should satisfy [∂, x] = 1."""
        assert commutator(D, X) == WeylElement.one()
        assert commutator(X, D) == -WeylElement.one()

    def test_generator_relations_in_two_variables(self):
        """Should satisfy [∂_i, x_j] = δ_ij and commuting x's and ∂'s."""
        x1, x2, d1, d2 = generators(2)
        one = WeylElement.one(2)
        assert commutator(d1, x1) == one
        assert commutator(d2, x2) == one
        assert commutator(d1, x2).is_zero()
        assert commutator(x1, x2).is_zero()
        assert commutator(d1, d2).is_zero()

    def test_commutator_of_squares(self):
        """Should compute [∂^2, x^2] = 4x∂ + 2."""
        expected = WeylElement.monomial((1,), (1,), 4) + 2
        assert commutator(D**2, X**2) == expected

    def test_zero_coefficients_are_dropped(self):
        """Should never store zero coefficients."""
        a = X + D
        assert (a - a).is_zero()
        assert len(a - D) == 1
        assert WeylElement(1, QQ, {MonomialKey((1,), (0,)): 0}).is_zero()

    def test_equality_with_scalars(self):
        """Should compare equal to plain numbers for constants."""
        assert WeylElement.scalar(Fraction(1, 2)) == Fraction(1, 2)
        assert WeylElement.one(1, GF(3)) == 4

    def test_scalar_multiplication(self):
        """Should scale from both sides and vanish in characteristic p."""
        assert (2 * X).raw(MonomialKey((1,), (0,))) == 2
        assert (X * Fraction(1, 3)).raw(MonomialKey((1,), (0,))) == Fraction(1, 3)
        assert (3 * WeylElement.x(1, 1, GF(3))).is_zero()

    def test_power(self):
        """Should compute powers by repeated multiplication."""
        assert D**0 == WeylElement.one()
        assert (X + D) ** 3 == (X + D) * (X + D) * (X + D)
        with pytest.raises(ValueError):
            X**-1

    def test_mixing_algebras(self):
        """Should refuse to mix domains or numbers of variables."""
        with pytest.raises(DomainMismatch):
            X + WeylElement.x(1, 1, GF(3))
        with pytest.raises(DimensionMismatch):
            X * WeylElement.x(1, 2)

    def test_hash_matches_equality(self):
        """Should hash equal elements equally."""
        assert hash(D * X) == hash(X * D + 1)
        assert len({D * X, X * D + 1}) == 1

    def test_bad_generator_index(self):
        """Should reject generator indices outside 1..n."""
        with pytest.raises(DimensionMismatch):
            WeylElement.x(3, 2)

    def test_items_descending(self):
        """Should list monomials in descending graded-lex order."""
        a = 1 + X + D**2 + X * D
        degrees = [k.degree for k in a.monomials()]
        assert degrees == sorted(degrees, reverse=True)
        assert a.leading_monomial() == MonomialKey((1,), (1,))


class TestDegrees:
    """Tests for total degree and leading forms."""

    def test_total_degree(self):
        """Should return the symbol degree and -inf for zero."""
        assert total_degree(X**2 * D + 3 * X) == 3
        assert total_degree(WeylElement.one()) == 0
        assert total_degree(WeylElement.zero()) == NEG_INFINITY

    def test_degree_is_additive(self):
        """Should satisfy tot(ab) = tot(a) + tot(b) over QQ."""
        rng = random.Random(3)
        for _ in range(30):
            a = random_element(rng, 1, QQ, 3)
            b = random_element(rng, 1, QQ, 3)
            if a.is_zero() or b.is_zero():
                continue
            assert total_degree(a * b) == total_degree(a) + total_degree(b)

    def test_commutator_drops_two_degrees(self):
        """Should satisfy tot([a, b]) <= tot(a) + tot(b) - 2."""
        rng = random.Random(4)
        for _ in range(30):
            a = random_element(rng, 1, QQ, 3)
            b = random_element(rng, 1, QQ, 3)
            c = commutator(a, b)
            if c.is_zero():
                continue
            assert total_degree(c) <= total_degree(a) + total_degree(b) - 2

    def test_leading_form(self):
        """Should keep only the top degree monomials."""
        a = X**2 * D + 5 * D**3 + X + 1
        assert leading_form(a) == X**2 * D + 5 * D**3
        with pytest.raises(ZeroElement):
            leading_form(WeylElement.zero())


class TestAlgebraLaws:
    """Seeded property checks against the rewriting oracle."""

    @pytest.mark.parametrize("seed", range(5))
    def test_matches_oracle_qq(self, seed):
        """Should agree with word rewriting over QQ."""
        rng = random.Random(seed)
        for _ in range(10):
            a = random_element(rng, 1, QQ, 3)
            b = random_element(rng, 1, QQ, 3)
            assert mul(a, b) == oracle_mul(a, b)

    def test_matches_oracle_two_variables(self):
        """Should agree with word rewriting in A_2 over F_5."""
        rng = random.Random(11)
        for _ in range(5):
            a = random_element(rng, 2, GF(5), 2, tuple(range(5)), density=0.3)
            b = random_element(rng, 2, GF(5), 2, tuple(range(5)), density=0.3)
            assert mul(a, b) == oracle_mul(a, b)

    @pytest.mark.parametrize("domain", [QQ, GF(2), GF(3), GF(7)])
    def test_associative_and_distributive(self, domain):
        """Should satisfy associativity and both distributive laws."""
        rng = random.Random(domain.characteristic)
        for _ in range(10):
            a, b, c = (random_element(rng, 1, domain, 2) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert (a + b) * c == a * c + b * c

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_ring_axioms_in_two_variables(self, p):
        """Should satisfy the ring axioms in A_2(F_p) up to degree 4."""
        rng = random.Random(100 + p)
        field = GF(p)
        one = WeylElement.one(2, field)
        coeffs = tuple(range(p))
        for _ in range(5):
            a, b, c = (random_element(rng, 2, field, 4, coeffs, density=0.15) for _ in range(3))
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert (a + b) * c == a * c + b * c
            assert one * a == a == a * one

    @pytest.mark.parametrize("domain", [QQ, GF(2), GF(3), GF(5)])
    def test_one_is_two_sided_identity(self, domain):
        """Should leave elements unchanged when multiplied by 1 on either side."""
        rng = random.Random(31)
        one = WeylElement.one(1, domain)
        for _ in range(20):
            a = random_element(rng, 1, domain, 4)
            assert one * a == a
            assert a * one == a

    def test_commutator_is_a_derivation(self):
        """Should satisfy [a, bc] = [a, b]c + b[a, c]."""
        rng = random.Random(13)
        for domain in (QQ, GF(3)):
            for _ in range(15):
                a, b, c = (random_element(rng, 1, domain, 3) for _ in range(3))
                assert commutator(a, b * c) == commutator(a, b) * c + b * commutator(a, c)

    def test_jacobi_identity(self):
        """Should satisfy the Jacobi identity."""
        rng = random.Random(7)
        for _ in range(10):
            a, b, c = (random_element(rng, 1, QQ, 2) for _ in range(3))
            total = (
                commutator(a, commutator(b, c))
                + commutator(b, commutator(c, a))
                + commutator(c, commutator(a, b))
            )
            assert total.is_zero()


class TestReduction:
    """Tests for reduction of rational elements modulo p."""

    def test_reduce(self):
        """Should map coefficients into F_p."""
        a = Fraction(1, 2) * X + 6 * D
        reduced = reduce_mod_p(a, 3)
        assert reduced.domain == GF(3)
        assert reduced == 2 * WeylElement.x(1, 1, GF(3))

    def test_reduction_is_a_homomorphism(self):
        """Should commute with products for primes not dividing denominators."""
        rng = random.Random(5)
        coeffs = (-3, -2, -1, 0, 1, 2, 3, Fraction(1, 2), Fraction(-1, 2))
        for _ in range(20):
            a = random_element(rng, 1, QQ, 3, coeffs)
            b = random_element(rng, 1, QQ, 3, coeffs)
            assert reduce_mod_p(a * b, 5) == reduce_mod_p(a, 5) * reduce_mod_p(b, 5)

    def test_bad_prime_names_monomial(self):
        """Should raise BadPrime naming the offending monomial."""
        with pytest.raises(BadPrime) as exc:
            reduce_mod_p(D**2 - Fraction(3, 2) * X * D, 2)
        assert exc.value.prime == 2
        assert exc.value.monomial == "x*d"

    def test_requires_rational_input(self):
        """Should only reduce elements over QQ."""
        with pytest.raises(WrongCharacteristic):
            reduce_mod_p(WeylElement.x(1, 1, GF(3)), 3)


class TestCenter:
    """Tests for centrality and decomposition over the center."""

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_pth_powers_are_central(self, p):
        """Should find x^p and ∂^p central in characteristic p."""
        field = GF(p)
        xp = WeylElement.x(1, 1, field) ** p
        dp = WeylElement.d(1, 1, field) ** p
        for z in (xp, dp, xp * dp + 1):
            assert is_central(z)
            assert commutes_with_generators(z)

    @pytest.mark.parametrize("p", [2, 3])
    def test_exponent_criterion_matches_definition(self, p):
        """Should agree with commuting against every generator."""
        rng = random.Random(p)
        field = GF(p)
        for _ in range(40):
            a = random_element(rng, 1, field, 2 * p, tuple(range(p)), density=0.2)
            assert is_central(a) == commutes_with_generators(a)

    def test_center_of_qq_is_constants(self):
        """Should only call constants central over QQ."""
        assert is_central(WeylElement.scalar(5))
        assert not is_central(X**2)

    def test_decompose_x_cubed_mod_2(self):
        """Should write x^3 = x^2 · x over F_2."""
        x = WeylElement.x(1, 1, GF(2))
        decomposition = decompose_over_center(x**3)
        assert list(decomposition.parts) == [(1, 0)]
        assert decomposition.part(1, 0) == x**2
        assert decomposition.part(0, 0).is_zero()

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_decomposition_reconstructs(self, p):
        """Should recover a from its central coordinates."""
        rng = random.Random(10 + p)
        field = GF(p)
        for _ in range(100):
            a = random_element(rng, 1, field, 2 * p, tuple(range(p)), density=0.3)
            decomposition = decompose_over_center(a)
            assert decomposition.reconstruct() == a
            for (i, j), z in decomposition.parts.items():
                assert 0 <= i < p and 0 <= j < p
                assert is_central(z)

    @pytest.mark.parametrize("p", [2, 3, 5])
    def test_decomposition_of_zero_is_zero(self, p):
        """Should give no nonzero coordinates for 0."""
        decomposition = decompose_over_center(WeylElement.zero(1, GF(p)))
        assert all(decomposition.part(i, j).is_zero() for i in range(p) for j in range(p))
        assert decomposition.reconstruct().is_zero()

    def test_decompose_requires_characteristic_p(self):
        """Should refuse elements over QQ and in several variables."""
        with pytest.raises(WrongCharacteristic):
            decompose_over_center(X)
        with pytest.raises(DimensionMismatch):
            decompose_over_center(WeylElement.x(1, 2, GF(3)))
