"""Integer Laurent polynomials in v with sympy-backed exact division."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple, Union

from sympy import ZZ
from sympy.polys.rings import PolyElement, ring

from ..errors import ExactDivisionError


POLY_RING, _POLY_V = ring("v", ZZ)

Coefficient = Union[int, "LaurentScalar"]


@dataclass(frozen=True, eq=False)
class LaurentScalar:
    """Sparse element of ZZ[v, v^-1].

    ``terms`` holds ``(exponent, coefficient)`` pairs sorted by exponent with no
    zero coefficient, so two equal polynomials always have equal ``terms``.
    """

    terms: Tuple[Tuple[int, int], ...] = ()

    @classmethod
    def from_map(cls, coefficients: Dict[int, int]) -> "LaurentScalar":
        return cls(tuple(sorted((e, c) for e, c in coefficients.items() if c != 0)))

    @classmethod
    def constant(cls, value: int) -> "LaurentScalar":
        return cls(((0, value),)) if value else cls()

    @classmethod
    def monomial(cls, exponent: int, coefficient: int = 1) -> "LaurentScalar":
        return cls(((exponent, coefficient),)) if coefficient else cls()

    @classmethod
    def from_poly(cls, poly: PolyElement, shift: int = 0) -> "LaurentScalar":
        """Convert a sympy ZZ[v] element, multiplied by v^shift."""
        return cls.from_map({monom[0] + shift: int(coeff) for monom, coeff in poly.terms()})

    def to_poly(self) -> Tuple[int, PolyElement]:
        """Return ``(shift, P)`` with ``self = v^shift * P`` and P(0) != 0."""
        if not self.terms:
            return 0, POLY_RING.zero
        low = self.terms[0][0]
        return low, POLY_RING.from_dict({(e - low,): c for e, c in self.terms})

    # Queries

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    @property
    def min_exponent(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no minimal exponent")
        return self.terms[0][0]

    @property
    def max_exponent(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no maximal exponent")
        return self.terms[-1][0]

    @property
    def leading_coefficient(self) -> int:
        return self.terms[-1][1] if self.terms else 0

    @property
    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    @property
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def coefficient(self, exponent: int) -> int:
        for e, c in self.terms:
            if e == exponent:
                return c
        return 0

    def as_dict(self) -> Dict[int, int]:
        return dict(self.terms)

    # Ring operations

    def __add__(self, other: Coefficient) -> "LaurentScalar":
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        if not rhs.terms:
            return self
        if not self.terms:
            return rhs
        acc = dict(self.terms)
        for e, c in rhs.terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentScalar.from_map(acc)

    __radd__ = __add__

    def __neg__(self) -> "LaurentScalar":
        return LaurentScalar(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: Coefficient) -> "LaurentScalar":
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: Coefficient) -> "LaurentScalar":
        lhs = _coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs + (-self)

    def __mul__(self, other: Coefficient) -> "LaurentScalar":
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        if not self.terms or not rhs.terms:
            return LaurentScalar()
        acc: Dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in rhs.terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentScalar.from_map(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentScalar":
        if n < 0:
            if self.is_monomial and abs(self.terms[0][1]) == 1:
                e, c = self.terms[0]
                return LaurentScalar.monomial(e * n, c ** abs(n))
            raise ValueError(f"{self} is not a unit of ZZ[v, v^-1]")
        result = ONE
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        rhs = _coerce(other)
        if rhs is None:
            return NotImplemented
        return self.terms == rhs.terms

    def __hash__(self) -> int:
        if self.is_constant:
            return hash(self.coefficient(0))
        return hash(self.terms)

    def shift(self, k: int) -> "LaurentScalar":
        """Multiply by v^k."""
        return LaurentScalar(tuple((e + k, c) for e, c in self.terms))

    def bar(self) -> "LaurentScalar":
        return LaurentScalar(tuple((-e, c) for e, c in reversed(self.terms)))

    def exact_divide(self, other: "LaurentScalar") -> "LaurentScalar":
        """Quotient in ZZ[v, v^-1]; raises ExactDivisionError on a remainder."""
        if other.is_zero:
            raise ZeroDivisionError("division by the zero Laurent polynomial")
        if self.is_zero:
            return self
        if other.is_monomial and abs(other.terms[0][1]) == 1:
            e, c = other.terms[0]
            return LaurentScalar(tuple((x - e, y * c) for x, y in self.terms))
        low_a, p = self.to_poly()
        low_b, q = other.to_poly()
        quotient, remainder = p.div(q)
        if remainder:
            raise ExactDivisionError(f"({self}) is not divisible by ({other})")
        return LaurentScalar.from_poly(quotient, low_a - low_b)

    def nonpositive_part(self) -> "LaurentScalar":
        return LaurentScalar(tuple((e, c) for e, c in self.terms if e <= 0))

    def evaluate(self, point: Union[int, Fraction]) -> Fraction:
        total = Fraction(0)
        for e, c in self.terms:
            total += c * Fraction(point) ** e
        return total

    def specialize(self, point: int) -> int:
        """Evaluate at v = +1 or v = -1."""
        if point not in (1, -1):
            raise ValueError(f"specialization point must be +1 or -1, got {point}")
        if point == 1:
            return sum(c for _, c in self.terms)
        return sum(c if e % 2 == 0 else -c for e, c in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in reversed(self.terms):
            if e == 0:
                body = str(abs(c))
            else:
                power = "v" if e == 1 else f"v^{e}"
                body = power if abs(c) == 1 else f"{abs(c)}{power}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"LaurentScalar({self})"


def _coerce(value: object) -> Optional[LaurentScalar]:
    if isinstance(value, LaurentScalar):
        return value
    if isinstance(value, int):
        return LaurentScalar.constant(value)
    return None


ZERO = LaurentScalar()
ONE = LaurentScalar.constant(1)
V = LaurentScalar.monomial(1)


def bar_involution(p: LaurentScalar) -> LaurentScalar:
    return p.bar()


def specialize(p: LaurentScalar, point: int) -> int:
    return p.specialize(point)


def symmetric_correction(p: LaurentScalar) -> LaurentScalar:
    """Unique bar-invariant q with p - q in vZZ[v]."""
    acc: Dict[int, int] = {}
    for e, c in p.terms:
        if e > 0:
            continue
        acc[e] = acc.get(e, 0) + c
        if e < 0:
            acc[-e] = acc.get(-e, 0) + c
    return LaurentScalar.from_map(acc)


def laurent_gcd(values: Iterable[LaurentScalar]) -> LaurentScalar:
    """Gcd of the polynomial parts (v-powers removed), with positive leading coefficient."""
    result: Optional[PolyElement] = None
    for value in values:
        if value.is_zero:
            continue
        _, poly = value.to_poly()
        result = poly if result is None else result.gcd(poly)
        if result == POLY_RING.one:
            break
    if result is None:
        return ONE
    if result.LC < 0:
        result = -result
    return LaurentScalar.from_poly(result)


def laurent_lcm(values: Iterable[LaurentScalar]) -> LaurentScalar:
    """Lcm of the polynomial parts, with positive leading coefficient."""
    result = POLY_RING.one
    for value in values:
        if value.is_zero:
            raise ZeroDivisionError("lcm with the zero polynomial")
        _, poly = value.to_poly()
        result = result.lcm(poly)
    if result.LC < 0:
        result = -result
    return LaurentScalar.from_poly(result)
