"""
Amplitude arithmetic.

Exact amplitudes are monomials ``c * x**k`` with a rational coefficient and
x = sqrt(t); sums of unlike powers promote to ``XPolynomial``. Float
amplitudes are kept as (sign, log|value|) so that t**A never overflows.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Tuple, Union

import numpy as np

Scalar = Union[Fraction, float]


def _power_of_x(power: int, t: Scalar) -> Scalar:
    """x**power at concrete t; exact whenever t is rational and power is even."""
    if power == 0:
        return Fraction(1) if isinstance(t, Fraction) else 1.0
    if isinstance(t, Fraction) and power % 2 == 0:
        return t ** (power // 2)
    if t == 0:
        return 0.0
    return math.exp(0.5 * power * math.log(float(t)))


@dataclass(frozen=True)
class Monomial:
    """``coefficient * x**power`` with x = sqrt(t)."""

    coefficient: Fraction = Fraction(1)
    power: int = 0

    def __post_init__(self):
        if not isinstance(self.coefficient, Fraction):
            object.__setattr__(self, "coefficient", Fraction(self.coefficient))
        if self.coefficient == 0 and self.power != 0:
            object.__setattr__(self, "power", 0)

    @classmethod
    def one(cls) -> "Monomial":
        return cls(Fraction(1), 0)

    @classmethod
    def zero(cls) -> "Monomial":
        return cls(Fraction(0), 0)

    @classmethod
    def x_power(cls, power: int) -> "Monomial":
        return cls(Fraction(1), power)

    @property
    def is_zero(self) -> bool:
        return self.coefficient == 0

    def __mul__(self, other):
        if isinstance(other, Monomial):
            return Monomial(
                self.coefficient * other.coefficient, self.power + other.power
            )
        if isinstance(other, XPolynomial):
            return XPolynomial.from_monomial(self) * other
        if isinstance(other, (int, Fraction)):
            return Monomial(self.coefficient * other, self.power)
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Monomial(Fraction(other), 0)
        if isinstance(other, Monomial):
            if other.is_zero:
                return self
            if self.is_zero:
                return other
            if other.power == self.power:
                return Monomial(self.coefficient + other.coefficient, self.power)
            return XPolynomial.from_monomial(self) + other
        if isinstance(other, XPolynomial):
            return other + self
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "Monomial":
        return Monomial(-self.coefficient, self.power)

    def __sub__(self, other):
        return self + (-other)

    def value_at(self, t: Scalar) -> Scalar:
        """Evaluate at concrete t; a Fraction when the result is rational."""
        if self.is_zero:
            return Fraction(0) if isinstance(t, Fraction) else 0.0
        scale = _power_of_x(self.power, t)
        if isinstance(scale, Fraction):
            return self.coefficient * scale
        return float(self.coefficient) * scale

    def abs_sq_at(self, t: Scalar) -> Scalar:
        """|value|**2 = coefficient**2 * t**power, exact for rational t."""
        if isinstance(t, Fraction):
            return self.coefficient**2 * t**self.power
        if self.is_zero:
            return 0.0
        if t == 0:
            return float(self.coefficient) ** 2 if self.power == 0 else 0.0
        return float(self.coefficient) ** 2 * math.exp(self.power * math.log(t))

    def to_log(self, t: Scalar) -> "LogAmplitude":
        if self.is_zero or (t == 0 and self.power != 0):
            return LogAmplitude.zero()
        sign = 1 if self.coefficient > 0 else -1
        log_magnitude = math.log(abs(self.coefficient))
        if self.power:
            log_magnitude += 0.5 * self.power * math.log(float(t))
        return LogAmplitude(sign, log_magnitude)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        if self.power == 0:
            return str(self.coefficient)
        prefix = "" if self.coefficient == 1 else f"{self.coefficient}*"
        return f"{prefix}x^{self.power}"


@dataclass(frozen=True)
class XPolynomial:
    """Polynomial in x = sqrt(t) with rational coefficients."""

    terms: Tuple[Tuple[int, Fraction], ...] = ()

    @classmethod
    def from_dict(cls, terms: Dict[int, Fraction]) -> "XPolynomial":
        return cls(
            tuple(
                (power, Fraction(c)) for power, c in sorted(terms.items()) if c != 0
            )
        )

    @classmethod
    def from_monomial(cls, monomial: Monomial) -> "XPolynomial":
        return cls.from_dict({monomial.power: monomial.coefficient})

    def as_dict(self) -> Dict[int, Fraction]:
        return dict(self.terms)

    def __iter__(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(self.terms)

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) <= 1

    def as_monomial(self) -> Monomial:
        if not self.terms:
            return Monomial.zero()
        if len(self.terms) > 1:
            raise ValueError(f"{self} is not a monomial")
        power, coefficient = self.terms[0]
        return Monomial(coefficient, power)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Monomial(Fraction(other), 0)
        if isinstance(other, Monomial):
            other = XPolynomial.from_monomial(other)
        if not isinstance(other, XPolynomial):
            return NotImplemented
        out = self.as_dict()
        for power, coefficient in other.terms:
            out[power] = out.get(power, Fraction(0)) + coefficient
        return XPolynomial.from_dict(out)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Monomial(Fraction(other), 0)
        if isinstance(other, Monomial):
            other = XPolynomial.from_monomial(other)
        if not isinstance(other, XPolynomial):
            return NotImplemented
        out: Dict[int, Fraction] = {}
        for p1, c1 in self.terms:
            for p2, c2 in other.terms:
                out[p1 + p2] = out.get(p1 + p2, Fraction(0)) + c1 * c2
        return XPolynomial.from_dict(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, Monomial):
            other = XPolynomial.from_monomial(other)
        elif isinstance(other, (int, Fraction)):
            other = XPolynomial.from_dict({0: Fraction(other)})
        if not isinstance(other, XPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def value_at(self, t: Scalar) -> Scalar:
        total: Scalar = Fraction(0) if isinstance(t, Fraction) else 0.0
        for power, coefficient in self.terms:
            total = total + Monomial(coefficient, power).value_at(t)
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(str(Monomial(c, p)) for p, c in self.terms)


@dataclass(frozen=True)
class LogAmplitude:
    """Float amplitude stored as ``sign * exp(log_magnitude)``."""

    sign: int = 1
    log_magnitude: float = 0.0

    @classmethod
    def zero(cls) -> "LogAmplitude":
        return cls(0, -math.inf)

    @classmethod
    def from_value(cls, value: float) -> "LogAmplitude":
        if value == 0:
            return cls.zero()
        return cls(1 if value > 0 else -1, math.log(abs(value)))

    @property
    def is_zero(self) -> bool:
        return self.sign == 0

    @property
    def value(self) -> float:
        if self.is_zero:
            return 0.0
        return self.sign * math.exp(self.log_magnitude)

    def __mul__(self, other):
        if isinstance(other, LogAmplitude):
            if self.is_zero or other.is_zero:
                return LogAmplitude.zero()
            return LogAmplitude(
                self.sign * other.sign, self.log_magnitude + other.log_magnitude
            )
        if isinstance(other, (int, float, Fraction)):
            return self * LogAmplitude.from_value(float(other))
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, LogAmplitude):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.sign == other.sign:
            return LogAmplitude(
                self.sign, float(np.logaddexp(self.log_magnitude, other.log_magnitude))
            )
        big, small = (
            (self, other)
            if self.log_magnitude >= other.log_magnitude
            else (other, self)
        )
        gap = small.log_magnitude - big.log_magnitude
        if gap == 0:
            return LogAmplitude.zero()
        return LogAmplitude(big.sign, big.log_magnitude + math.log1p(-math.exp(gap)))

    def __neg__(self) -> "LogAmplitude":
        return LogAmplitude(-self.sign, self.log_magnitude)

    def scaled(self, log_factor: float) -> "LogAmplitude":
        """Multiply by exp(log_factor)."""
        if self.is_zero:
            return self
        return LogAmplitude(self.sign, self.log_magnitude + log_factor)

    def value_at(self, t: Scalar = None) -> float:
        return self.value

    def abs_sq_at(self, t: Scalar = None) -> float:
        if self.is_zero:
            return 0.0
        return math.exp(2.0 * self.log_magnitude)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        return format(self.value, ".15g")


Amplitude = Union[Monomial, XPolynomial, LogAmplitude]
