"""Tests for exact scalar arithmetic and linear algebra."""

import random
from fractions import Fraction

import pytest

from quivercanon.errors import ExactDivisionError
from quivercanon.exactalg import (
    ONE,
    V,
    ZERO,
    IncrementalEchelon,
    LaurentScalar,
    RationalScalar,
    RatMatrix,
    bar_involution,
    inverse,
    lattice_basis,
    matrix_rank,
    quantum_binomial,
    quantum_combinatorics,
    quantum_factorial,
    quantum_integer,
    ratfun_solve,
    solve_matrix,
    symmetric_correction,
)


def laurent(**terms: int) -> LaurentScalar:
    """laurent(m2=1, p1=3) is v^-2 + 3v."""
    coefficients = {}
    for name, c in terms.items():
        exponent = int(name[1:])
        coefficients[-exponent if name[0] == "m" else exponent] = c
    return LaurentScalar.from_map(coefficients)


def random_laurent(rng: random.Random) -> LaurentScalar:
    return LaurentScalar.from_map({e: rng.randint(-3, 3) for e in range(-3, 4)})


class TestLaurentScalar:
    """Ring structure of ZZ[v, v^-1]."""

    def test_canonical_form_drops_zero_coefficients(self):
        p = LaurentScalar.from_map({0: 0, 2: 5, -1: 0})
        assert p.terms == ((2, 5),)
        assert (V - V).is_zero
        assert (V - V) == ZERO

    def test_ring_axioms_on_random_inputs(self):
        rng = random.Random(7)
        for _ in range(50):
            a, b, c = (random_laurent(rng) for _ in range(3))
            assert a + b == b + a
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c

    def test_bar_involution(self):
        p = laurent(m2=1, p1=3, p0=4)
        assert p.bar() == laurent(p2=1, m1=3, p0=4)
        assert p.bar().bar() == p
        assert bar_involution(p) == p.bar()

    def test_specialization(self):
        p = laurent(m2=1, p1=3, p0=4)
        assert p.specialize(1) == 8
        assert p.specialize(-1) == 2
        with pytest.raises(ValueError):
            p.specialize(2)

    def test_exact_division(self):
        product = (V + ONE) * (V - ONE)
        assert product.exact_divide(V + ONE) == V - ONE
        with pytest.raises(ExactDivisionError):
            (V * V + ONE).exact_divide(V + ONE)

    def test_negative_power_only_for_units(self):
        assert V ** -2 == LaurentScalar.monomial(-2)
        with pytest.raises(ValueError):
            (V + ONE) ** -1

    def test_symmetric_correction(self):
        p = laurent(m2=1, m1=3, p0=5, p1=7)
        q = symmetric_correction(p)
        assert q == laurent(m2=1, m1=3, p0=5, p1=3, p2=1)
        assert q.bar() == q
        assert all(e > 0 for e, _ in (p - q).terms)

    def test_string_form(self):
        assert str(laurent(p2=1, p0=-2, m1=3)) == "v^2 - 2 + 3v^-1"
        assert str(ZERO) == "0"


class TestQuantumNumbers:
    def test_quantum_integers(self):
        assert quantum_integer(0) == ZERO
        assert quantum_integer(1) == ONE
        assert quantum_integer(3) == laurent(p2=1, p0=1, m2=1)
        assert quantum_integer(-2) == -quantum_integer(2)

    def test_quantum_integer_formula(self):
        # (v - v^-1)[n] = v^n - v^-n
        for n in range(-5, 6):
            lhs = (V - V ** -1) * quantum_integer(n)
            assert lhs == LaurentScalar.monomial(n) - LaurentScalar.monomial(-n)

    def test_factorial_and_binomial(self):
        assert quantum_factorial(3) == quantum_integer(2) * quantum_integer(3)
        assert quantum_binomial(4, 2) == laurent(p4=1, p2=1, p0=2, m2=1, m4=1)
        assert quantum_binomial(5, 0) == ONE
        assert quantum_binomial(5, 5) == ONE

    def test_binomials_are_bar_invariant(self):
        for n in range(7):
            for k in range(n + 1):
                b = quantum_binomial(n, k)
                assert b.bar() == b

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            quantum_factorial(-1)
        with pytest.raises(ValueError):
            quantum_binomial(3, 4)
        with pytest.raises(ValueError):
            quantum_combinatorics("binomial", 3)

    def test_dispatch(self):
        assert quantum_combinatorics("integer", 2) == quantum_integer(2)
        assert quantum_combinatorics("binomial", 3, 1) == quantum_integer(3)


class TestRationalScalar:
    def test_normalization_cancels_common_factors(self):
        x = RationalScalar(V * V - ONE, V - ONE)
        assert x.is_laurent
        assert x.as_laurent() == V + ONE

    def test_monomial_denominator_becomes_laurent(self):
        x = RationalScalar(V, V * V)
        assert x.is_laurent
        assert x.as_laurent() == V ** -1

    def test_denominator_sign_and_shift(self):
        x = RationalScalar(ONE, -(V + ONE) * V)
        assert x.denominator.leading_coefficient > 0
        assert x.denominator.min_exponent == 0
        assert x * RationalScalar(-(V + ONE) * V) == 1

    def test_field_operations(self):
        a = RationalScalar(ONE, V + ONE)
        b = RationalScalar(V, V - ONE)
        assert (a + b) - b == a
        assert (a * b) / b == a
        with pytest.raises(ZeroDivisionError):
            a / RationalScalar(ZERO)

    def test_valuation_and_residue(self):
        x = RationalScalar(V * V + V, ONE + V)
        assert x.valuation("zero") == 1
        assert x.residue("zero") == 0
        y = RationalScalar(V ** 3, V ** 3 + ONE)
        assert y.valuation("infinity") == 0
        assert y.residue("infinity") == 1
        assert y.residue("zero") == 0
        z = RationalScalar(ONE, V)
        assert not z.is_regular("zero")
        with pytest.raises(ValueError):
            z.residue("zero")

    def test_principal_part(self):
        # 1/(v(1 - v)) = v^-1 + 1 + v + ...
        x = RationalScalar(ONE, V - V * V)
        assert x.principal_part() == V ** -1 + ONE
        with pytest.raises(ValueError):
            RationalScalar(ONE, 2 * V).principal_part()

    def test_specialize_reports_poles(self):
        x = RationalScalar(ONE, V + ONE)
        assert x.specialize(1) == Fraction(1, 2)
        with pytest.raises(ValueError):
            x.specialize(-1)

    def test_bar(self):
        x = RationalScalar(V, V + 2)
        assert x.bar() == RationalScalar(V ** -1, V ** -1 + 2)
        assert x.bar().bar() == x


class TestLinearAlgebra:
    """Exact elimination over QQ(v)."""

    @pytest.fixture
    def gram(self):
        """Gram matrix of the sl2-style pair [[1, v], [v, 1 + v^2]]."""
        return RatMatrix.from_rows([[ONE, V], [V, ONE + V * V]])

    def test_rank_and_inverse(self, gram):
        assert matrix_rank(gram) == 2
        product = gram @ inverse(gram)
        assert product.is_identity()

    def test_singular_rank(self):
        m = RatMatrix.from_rows([[ONE, V], [V, V * V]])
        assert matrix_rank(m) == 1
        with pytest.raises(ValueError):
            inverse(m)

    def test_inconsistent_system_is_reported(self):
        m = RatMatrix.from_rows([[ONE, V], [V, V * V]])
        result = ratfun_solve(m, [ONE, ZERO])
        assert not result.consistent
        assert result.solution is None
        assert not result.unique

    def test_underdetermined_system(self):
        m = RatMatrix.from_rows([[ONE, V]])
        result = ratfun_solve(m, [V])
        assert result.consistent
        assert not result.unique

    def test_solve_matrix(self, gram):
        rhs = RatMatrix.from_rows([[ONE], [ZERO]])
        x = solve_matrix(gram, rhs)
        assert gram @ x == rhs

    def test_specialize_to_sympy(self, gram):
        values = gram.specialize(-1)
        assert values.tolist() == [[1, -1], [-1, 2]]

    def test_incremental_echelon(self):
        echelon = IncrementalEchelon(2)
        assert echelon.add([ONE, V])
        assert not echelon.add([V, V * V])
        assert echelon.add([ZERO, ONE])
        assert echelon.rank == 2

    def test_lattice_basis_keeps_the_regular_span(self):
        # pivoting on v^-1 turns (1, 0) into (1, 0) - v (v^-1, 1) = (0, -v)
        basis = lattice_basis([[ONE, ZERO], [V ** -1, ONE]])
        assert len(basis) == 2
        valuations = sorted(min(x.valuation() for x in vector if x) for vector in basis)
        assert valuations == [-1, 1]
