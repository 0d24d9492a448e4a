"""Rational functions in v kept in a normalized form."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Literal, Optional, Union

from .laurent import ONE, ZERO, LaurentScalar, laurent_lcm


Scalar = Union[int, LaurentScalar, "RationalScalar"]
LimitPoint = Literal["zero", "infinity"]


@dataclass(frozen=True, eq=False)
class RationalScalar:
    """Element of QQ(v) stored as ``numerator / denominator``.

    The pair is normalized on construction: numerator and denominator are coprime,
    the denominator has minimal exponent 0 and a positive leading coefficient, and
    all powers of v are carried by the numerator.
    """

    numerator: LaurentScalar
    denominator: LaurentScalar = ONE

    def __post_init__(self) -> None:
        num, den = _normalize(self.numerator, self.denominator)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @classmethod
    def lift(cls, value: Scalar) -> "RationalScalar":
        if isinstance(value, RationalScalar):
            return value
        if isinstance(value, LaurentScalar):
            return cls(value)
        if isinstance(value, int):
            return cls(LaurentScalar.constant(value))
        raise TypeError(f"cannot lift {type(value).__name__} to RationalScalar")

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    def __bool__(self) -> bool:
        return not self.numerator.is_zero

    @property
    def is_laurent(self) -> bool:
        return self.denominator == ONE

    def as_laurent(self) -> LaurentScalar:
        if not self.is_laurent:
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.numerator

    # Field operations

    def __add__(self, other: Scalar) -> "RationalScalar":
        rhs = _lift_or_none(other)
        if rhs is None:
            return NotImplemented
        if rhs.is_zero:
            return self
        if self.is_zero:
            return rhs
        if self.denominator == rhs.denominator:
            return RationalScalar(self.numerator + rhs.numerator, self.denominator)
        return RationalScalar(
            self.numerator * rhs.denominator + rhs.numerator * self.denominator,
            self.denominator * rhs.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalScalar":
        return RationalScalar(-self.numerator, self.denominator)

    def __sub__(self, other: Scalar) -> "RationalScalar":
        rhs = _lift_or_none(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Scalar) -> "RationalScalar":
        lhs = _lift_or_none(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def __mul__(self, other: Scalar) -> "RationalScalar":
        rhs = _lift_or_none(other)
        if rhs is None:
            return NotImplemented
        if self.is_zero or rhs.is_zero:
            return R_ZERO
        return RationalScalar(
            self.numerator * rhs.numerator, self.denominator * rhs.denominator
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "RationalScalar":
        rhs = _lift_or_none(other)
        if rhs is None:
            return NotImplemented
        if rhs.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RationalScalar(
            self.numerator * rhs.denominator, self.denominator * rhs.numerator
        )

    def __rtruediv__(self, other: Scalar) -> "RationalScalar":
        lhs = _lift_or_none(other)
        if lhs is None:
            return NotImplemented
        return lhs / self

    def __eq__(self, other: object) -> bool:
        rhs = _lift_or_none(other)
        if rhs is None:
            return NotImplemented
        return self.numerator == rhs.numerator and self.denominator == rhs.denominator

    def __hash__(self) -> int:
        if self.is_laurent:
            return hash(self.numerator)
        return hash((self.numerator, self.denominator))

    def bar(self) -> "RationalScalar":
        return RationalScalar(self.numerator.bar(), self.denominator.bar())

    def specialize(self, point: int) -> Fraction:
        den = self.denominator.specialize(point)
        if den == 0:
            raise ValueError(f"{self} has a pole at v={point}")
        return Fraction(self.numerator.specialize(point), den)

    # Local data at v = 0 and v = infinity

    def valuation(self, at: LimitPoint = "zero") -> Optional[int]:
        """Order of vanishing; None for the zero function."""
        if self.is_zero:
            return None
        if at == "zero":
            return self.numerator.min_exponent
        return self.denominator.max_exponent - self.numerator.max_exponent

    def residue(self, at: LimitPoint = "zero") -> Fraction:
        """Value at the given point; the function must be regular there."""
        val = self.valuation(at)
        if val is None or val > 0:
            return Fraction(0)
        if val < 0:
            raise ValueError(f"{self} has a pole at v={at}")
        if at == "zero":
            return Fraction(self.numerator.coefficient(0), self.denominator.coefficient(0))
        return Fraction(self.numerator.leading_coefficient, self.denominator.leading_coefficient)

    def is_regular(self, at: LimitPoint = "zero") -> bool:
        val = self.valuation(at)
        return val is None or val >= 0

    def expansion_at_zero(self, upto: int) -> Dict[int, Fraction]:
        """Coefficients of the v-adic expansion for all exponents <= upto."""
        if self.is_zero:
            return {}
        start = self.numerator.min_exponent
        den = self.denominator.as_dict()
        d0 = den[0]
        series: Dict[int, Fraction] = {}
        for e in range(start, upto + 1):
            acc = Fraction(self.numerator.coefficient(e))
            for k, dk in den.items():
                if k > 0 and (e - k) in series:
                    acc -= dk * series[e - k]
            series[e] = acc / d0
        return {e: c for e, c in series.items() if c}

    def principal_part(self) -> LaurentScalar:
        """Exponents <= 0 of the expansion at v = 0; integrality is required."""
        coefficients: Dict[int, int] = {}
        for e, c in self.expansion_at_zero(0).items():
            if c.denominator != 1:
                raise ValueError(f"non-integral expansion coefficient {c} of {self}")
            coefficients[e] = int(c)
        return LaurentScalar.from_map(coefficients)

    def __str__(self) -> str:
        if self.is_laurent:
            return str(self.numerator)
        return f"({self.numerator})/({self.denominator})"

    def __repr__(self) -> str:
        return f"RationalScalar({self})"


def _lift_or_none(value: object) -> Optional[RationalScalar]:
    if isinstance(value, (RationalScalar, LaurentScalar, int)):
        return RationalScalar.lift(value)
    return None


def _normalize(num: LaurentScalar, den: LaurentScalar):
    if den.is_zero:
        raise ZeroDivisionError("rational function with zero denominator")
    if num.is_zero:
        return ZERO, ONE
    if den == ONE:
        return num, den
    if den.is_monomial and abs(den.terms[0][1]) == 1:
        e, c = den.terms[0]
        return LaurentScalar(tuple((x - e, y * c) for x, y in num.terms)), ONE
    low_n, p = num.to_poly()
    low_d, q = den.to_poly()
    p, q = p.cancel(q)
    if q.LC < 0:
        p, q = -p, -q
    return LaurentScalar.from_poly(p, low_n - low_d), LaurentScalar.from_poly(q)


def common_denominator(values: Iterable[RationalScalar]) -> LaurentScalar:
    return laurent_lcm(x.denominator for x in values if not x.is_laurent)


R_ZERO = RationalScalar(ZERO)
R_ONE = RationalScalar(ONE)
