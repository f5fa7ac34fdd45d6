"""Unit and property tests for exact scalar/polynomial arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from darcais.exactnum import (
    ExactPoly,
    binomial,
    poly_add,
    poly_derivative,
    poly_divmod,
    poly_eval,
    poly_gcd,
    poly_mul,
)


def P(*coeffs):
    return ExactPoly(coeffs)


rationals = st.fractions(
    min_value=-50, max_value=50, max_denominator=20
)
small_polys = st.lists(rationals, min_size=0, max_size=8).map(ExactPoly)
nonzero_polys = small_polys.filter(lambda p: not p.is_zero)


class TestStructure:
    def test_zero_poly_has_no_degree(self):
        assert ExactPoly().degree() is None
        assert ExactPoly([0, 0, 0]).degree() is None
        assert ExactPoly([0]).is_zero

    def test_trailing_zeros_stripped(self):
        assert P(1, 2, 0, 0) == P(1, 2)
        assert P(1, 2, 0, 0).coeffs == (Fraction(1), Fraction(2))

    def test_degree_and_leading(self):
        p = P(3, 0, Fraction(1, 2))
        assert p.degree() == 2
        assert p.leading_coefficient() == Fraction(1, 2)

    def test_leading_of_zero_raises(self):
        with pytest.raises(ValueError):
            ExactPoly().leading_coefficient()

    def test_coefficient_beyond_degree_is_zero(self):
        assert P(1, 2).coefficient(17) == 0
        with pytest.raises(ValueError):
            P(1, 2).coefficient(-1)

    def test_hash_consistent_with_eq(self):
        assert hash(P(1, 2)) == hash(P(Fraction(2, 2), Fraction(4, 2)))


class TestArithmetic:
    def test_product_difference_of_squares(self):
        assert P(1, 1) * P(1, -1) == P(1, 0, -1)

    def test_scalar_multiplication(self):
        assert 3 * P(1, 2) == P(3, 6)
        assert P(1, 2) * Fraction(1, 2) == P(Fraction(1, 2), 1)

    def test_eval_exact(self):
        p = P(3, 2, 1)  # 3 + 2x + x^2
        assert poly_eval(p, Fraction(1, 2)) == Fraction(17, 4)
        assert p(-1) == 2

    def test_power(self):
        assert P(1, 1) ** 4 == P(1, 4, 6, 4, 1)
        assert P(2, 1) ** 0 == P(1)
        with pytest.raises(ValueError):
            P(1, 1) ** -1

    def test_derivative(self):
        assert poly_derivative(P(5, 3, 0, 2)) == P(3, 0, 6)
        assert poly_derivative(P(7)).is_zero

    def test_shift_matches_paper_expansion(self):
        # the shift of the counterexample numerator to -5 has a known
        # quadratic head: 1632960 + 1690056 t + 1663164 t^2 + ...
        r = P(6531840, 29758896, 28014804, 10035116, 1709659, 147854, 6496, 134, 1)
        shifted = r.shift(-5)
        assert shifted.coeffs[:3] == (
            Fraction(1632960),
            Fraction(1690056),
            Fraction(1663164),
        )

    def test_shift_simple(self):
        # x^2 + 2 shifted by +1 gives x^2 + 2x + 3
        assert P(2, 0, 1).shift(1) == P(3, 2, 1)

    def test_divmod_known(self):
        q, r = poly_divmod(P(-1, 0, 1), P(1, 1))  # (x^2-1)/(x+1)
        assert q == P(-1, 1)
        assert r.is_zero

    def test_divmod_by_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            poly_divmod(P(1, 1), ExactPoly())


class TestGcd:
    def test_common_factor(self):
        a = P(1, 1) * P(2, 1) * P(-1, 1)
        b = P(1, 1) * P(2, 1)
        g = poly_gcd(a, b)
        assert g == (P(1, 1) * P(2, 1)).monic()

    def test_coprime(self):
        assert poly_gcd(P(1, 1), P(2, 1)).degree() == 0

    def test_gcd_with_zero(self):
        assert poly_gcd(P(2, 4), ExactPoly()) == P(Fraction(1, 2), 1)
        with pytest.raises(ValueError):
            poly_gcd(ExactPoly(), ExactPoly())

    @settings(derandomize=True, max_examples=150)
    @given(nonzero_polys, nonzero_polys)
    def test_gcd_divides_both(self, a, b):
        g = poly_gcd(a, b)
        for p in (a, b):
            _, rem = poly_divmod(p, g)
            assert rem.is_zero
        assert g.leading_coefficient() == 1


class TestRingAxioms:
    @settings(derandomize=True, max_examples=150)
    @given(small_polys, small_polys, small_polys)
    def test_add_mul_axioms(self, a, b, c):
        assert poly_add(a, b) == poly_add(b, a)
        assert poly_mul(a, b) == poly_mul(b, a)
        assert poly_add(poly_add(a, b), c) == poly_add(a, poly_add(b, c))
        assert poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c))
        assert poly_mul(a, poly_add(b, c)) == poly_add(poly_mul(a, b), poly_mul(a, c))

    @settings(derandomize=True, max_examples=100)
    @given(small_polys, small_polys, rationals)
    def test_evaluation_is_a_homomorphism(self, a, b, x):
        assert (a + b)(x) == a(x) + b(x)
        assert (a * b)(x) == a(x) * b(x)

    @settings(derandomize=True, max_examples=100)
    @given(small_polys, small_polys)
    def test_derivative_product_rule(self, a, b):
        lhs = (a * b).derivative()
        rhs = a.derivative() * b + a * b.derivative()
        assert lhs == rhs

    @settings(derandomize=True, max_examples=100)
    @given(small_polys, rationals, rationals)
    def test_shift_agrees_with_evaluation(self, p, c, x):
        assert p.shift(c)(x) == p(x + c)

    @settings(derandomize=True, max_examples=100)
    @given(small_polys, nonzero_polys)
    def test_divmod_identity(self, a, b):
        q, r = poly_divmod(a, b)
        assert q * b + r == a
        assert r.is_zero or r.degree() < b.degree()


class TestKaratsuba:
    def test_large_product_matches_schoolbook(self):
        # cross the cutoff so the divide-and-conquer path actually runs
        a = ExactPoly([(-1) ** k * (k + 1) for k in range(70)])
        b = ExactPoly([(k * k - 3) for k in range(55)])
        expected = [Fraction(0)] * (70 + 55 - 1)
        for i, x in enumerate(a.coeffs):
            for j, y in enumerate(b.coeffs):
                expected[i + j] += x * y
        assert (a * b).coeffs == tuple(expected)

    def test_unbalanced_product(self):
        a = ExactPoly([1] * 100)
        b = ExactPoly([1, 1])
        prod = a * b
        assert prod.coeffs == (1,) + tuple(2 for _ in range(99)) + (1,)


class TestBinomial:
    def test_ordinary_values(self):
        assert binomial(5, 2) == 10
        assert binomial(5, 0) == 1
        assert binomial(3, 7) == 0

    def test_rational_top(self):
        assert binomial(Fraction(1, 2), 2) == Fraction(-1, 8)

    def test_negative_upper_reflection(self):
        # C(k+z, k) == (-1)^k C(-z-1, k); at z = -5, k = 3 both sides
        # evaluate to -4
        z, k = -5, 3
        lhs = binomial(k + z, k)
        rhs = (-1) ** k * binomial(-z - 1, k)
        assert lhs == rhs == -4

    @settings(derandomize=True, max_examples=100)
    @given(st.integers(-30, 30), st.integers(0, 10))
    def test_reflection_identity_everywhere(self, z, k):
        assert binomial(k + z, k) == (-1) ** k * binomial(-z - 1, k)

    def test_negative_k_raises(self):
        with pytest.raises(ValueError):
            binomial(4, -1)


class TestSerialization:
    def test_canonical_text(self):
        assert P(0, Fraction(3, 2), Fraction(1, 2)).to_text() == "0/1 3/2 1/2"
        assert ExactPoly().to_text() == "0/1"

    def test_round_trip(self):
        for p in (P(1, 2, 3), P(0, Fraction(-7, 3)), ExactPoly(), P(Fraction(22, 7))):
            assert ExactPoly.from_text(p.to_text()) == p

    def test_parse_plain_integers(self):
        assert ExactPoly.from_text("3 2 1") == P(3, 2, 1)

    def test_parse_errors_carry_position(self):
        with pytest.raises(ValueError, match="token 3"):
            ExactPoly.from_text("1 2 spam")
        with pytest.raises(ValueError, match="empty"):
            ExactPoly.from_text("   ")

    @settings(derandomize=True, max_examples=100)
    @given(small_polys)
    def test_round_trip_property(self, p):
        assert ExactPoly.from_text(p.to_text()) == p
