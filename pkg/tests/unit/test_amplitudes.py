"""
Unit tests for exact monomials, x-polynomials and log-domain amplitudes.
"""

import math
from fractions import Fraction

import pytest

from rainbowtn.core.amplitudes import LogAmplitude, Monomial, XPolynomial


@pytest.mark.unit
class TestMonomial:
    @pytest.mark.parametrize(
        "power,t,expected",
        [
            (0, Fraction(3), Fraction(1)),
            (2, Fraction(1, 2), Fraction(1, 2)),
            (8, Fraction(2), Fraction(16)),
        ],
    )
    def test_value_at(self, power, t, expected):
        assert Monomial.x_power(power).value_at(t) == expected

    def test_float_t(self):
        assert Monomial.x_power(4).value_at(2.0) == pytest.approx(4.0)

    def test_odd_power_of_rational_t_is_float(self):
        value = Monomial.x_power(1).value_at(Fraction(4))
        assert isinstance(value, float)
        assert value == pytest.approx(2.0)

    def test_abs_sq_at_stays_exact(self):
        assert Monomial(Fraction(1, 2), 3).abs_sq_at(Fraction(4)) == Fraction(16)

    def test_product(self):
        product = Monomial(Fraction(2), 3) * Monomial(Fraction(3), 5)
        assert product == Monomial(Fraction(6), 8)

    def test_sum_of_like_powers(self):
        assert Monomial.x_power(2) + Monomial.x_power(2) == Monomial(Fraction(2), 2)

    def test_sum_of_unlike_powers_promotes(self):
        total = Monomial.one() + Monomial.x_power(4) * 2
        assert isinstance(total, XPolynomial)
        assert total.as_dict() == {0: Fraction(1), 4: Fraction(2)}

    def test_zero(self):
        zero = Monomial.zero()
        assert zero.is_zero
        assert zero + Monomial.x_power(3) == Monomial.x_power(3)
        assert str(zero) == "0"

    def test_str(self):
        assert str(Monomial.x_power(8)) == "x^8"
        assert str(Monomial(Fraction(2), 0)) == "2"

    def test_to_log(self):
        log_amp = Monomial(Fraction(3), 2).to_log(2.0)
        assert log_amp.sign == 1
        assert log_amp.log_magnitude == pytest.approx(math.log(6.0))


@pytest.mark.unit
class TestXPolynomial:
    def test_from_dict_drops_zero_terms(self):
        poly = XPolynomial.from_dict({0: Fraction(1), 2: Fraction(0)})
        assert poly.terms == ((0, Fraction(1)),)
        assert poly.is_monomial

    def test_product(self):
        a = XPolynomial.from_dict({0: Fraction(1), 2: Fraction(1)})
        assert (a * a).as_dict() == {0: 1, 2: 2, 4: 1}

    def test_value_at(self):
        poly = XPolynomial.from_dict({0: Fraction(1), 4: Fraction(2)})
        assert poly.value_at(Fraction(1, 2)) == Fraction(3, 2)

    def test_as_monomial(self):
        assert XPolynomial.from_dict({6: Fraction(5)}).as_monomial() == Monomial(5, 6)
        with pytest.raises(ValueError):
            XPolynomial.from_dict({0: 1, 2: 1}).as_monomial()

    def test_equality_with_scalars(self):
        assert XPolynomial.from_dict({0: Fraction(7)}) == 7


@pytest.mark.unit
class TestLogAmplitude:
    def test_from_value_round_trip(self):
        assert LogAmplitude.from_value(-2.5).value == pytest.approx(-2.5)
        assert LogAmplitude.from_value(0.0).is_zero

    def test_sum_without_overflow(self):
        huge = LogAmplitude(1, 1000.0)
        total = huge + huge
        assert total.log_magnitude == pytest.approx(1000.0 + math.log(2.0))

    def test_cancellation(self):
        a = LogAmplitude.from_value(3.0)
        assert (a + (-a)).is_zero

    def test_difference(self):
        total = LogAmplitude.from_value(3.0) + LogAmplitude.from_value(-1.0)
        assert total.value == pytest.approx(2.0)

    def test_product_and_scaling(self):
        a = LogAmplitude.from_value(2.0) * 3
        assert a.value == pytest.approx(6.0)
        assert a.scaled(math.log(0.5)).value == pytest.approx(3.0)
        assert (a * LogAmplitude.zero()).is_zero

    def test_abs_sq(self):
        assert LogAmplitude.from_value(-3.0).abs_sq_at() == pytest.approx(9.0)
