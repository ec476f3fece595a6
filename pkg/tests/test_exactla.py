"""Unittest for pluckx.exactla."""
from collections import Counter
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from pluckx.exactla import (
    Matrix,
    Poly,
    PolyMatrix,
    RationalFunction,
    Subspace,
    T,
    charpoly,
    kernel,
    pfaffian,
    poly_gcd,
    poly_gcd_many,
    rational_roots,
    resolvent,
    rref,
    solve,
    to_scalar,
)
from pluckx.exceptions import NotSkewSymmetricError, SingularMatrixError, ZeroPolynomialError

small_ints = st.integers(min_value=-6, max_value=6)


def square_matrices(n: int):
    return st.lists(st.lists(small_ints, min_size=n, max_size=n), min_size=n, max_size=n)


def sympy_fraction(value) -> Fraction:
    return Fraction(str(value))


def t(*coeffs) -> Poly:
    return Poly(tuple(coeffs))


class TestScalars:
    def test_accepts_exact_values(self):
        assert to_scalar(3) == Fraction(3)
        assert to_scalar("2/6") == Fraction(1, 3)
        assert to_scalar(Fraction(5, 2)) == Fraction(5, 2)

    @pytest.mark.parametrize("value", [0.5, True, None])
    def test_rejects_inexact_values(self, value):
        with pytest.raises(TypeError):
            to_scalar(value)


class TestMatrix:
    def test_det_small(self):
        assert Matrix.from_rows([[2, 1], [1, 3]]).det() == 5

    @settings(max_examples=40, deadline=None)
    @given(square_matrices(4))
    def test_det_matches_sympy(self, rows):
        assert Matrix.from_rows(rows).det() == sympy_fraction(sympy.Matrix(rows).det())

    def test_inverse(self):
        a = Matrix.from_rows([[2, 1, 0], [0, 1, 4], [1, 0, 1]])
        assert a @ a.inverse() == Matrix.identity(3)
        assert a.inverse() @ a == Matrix.identity(3)

    def test_inverse_of_singular_matrix(self):
        with pytest.raises(SingularMatrixError):
            Matrix.from_rows([[1, 2], [2, 4]]).inverse()

    def test_transpose_and_stacking(self):
        a = Matrix.from_rows([[1, 2, 3], [4, 5, 6]])
        assert a.T == Matrix.from_rows([[1, 4], [2, 5], [3, 6]])
        assert a.vstack(a).rows == 4
        assert a.hstack(a).cols == 6
        assert a.submatrix([1], [0, 2]) == Matrix.from_rows([[4, 6]])


class TestRowReduction:
    def test_rref(self):
        reduced = rref(Matrix.from_rows([[2, 4], [1, 2]]))
        assert reduced.rank == 1
        assert reduced.pivots == (0,)
        assert reduced.matrix.row(0) == (1, 2)

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.lists(small_ints, min_size=5, max_size=5), min_size=1, max_size=4))
    def test_kernel_is_annihilated(self, rows):
        m = Matrix.from_rows(rows)
        null = kernel(m)
        assert null.dim == m.cols - m.rank
        for v in null.vectors():
            assert not any(m.apply(v))

    def test_solve(self):
        m = Matrix.from_rows([[1, 2], [3, 4]])
        x = solve(m, [5, 6])
        assert x == (Fraction(-4), Fraction(9, 2))
        assert m.apply(x) == (5, 6)

    def test_solve_inconsistent(self):
        assert solve(Matrix.from_rows([[1, 1], [1, 1]]), [1, 2]) is None


class TestPfaffian:
    def test_standard_form(self):
        s = Matrix.from_rows([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]])
        assert pfaffian(s) == 1

    @settings(max_examples=30, deadline=None)
    @given(st.lists(small_ints, min_size=15, max_size=15))
    def test_square_is_determinant(self, upper):
        rows = [[Fraction(0)] * 6 for _ in range(6)]
        values = iter(upper)
        for i in range(6):
            for j in range(i + 1, 6):
                rows[i][j] = Fraction(next(values))
                rows[j][i] = -rows[i][j]
        s = Matrix.from_rows(rows)
        assert pfaffian(s) ** 2 == s.det()

    def test_rejects_odd_size(self):
        with pytest.raises(NotSkewSymmetricError):
            pfaffian(Matrix.zeros(3, 3))

    def test_rejects_non_skew(self):
        with pytest.raises(NotSkewSymmetricError):
            pfaffian(Matrix.from_rows([[0, 1], [1, 0]]))


class TestSubspace:
    def test_canonical_form(self):
        assert Subspace.span([[2, 4]], 2) == Subspace.span([[1, 2]], 2)
        assert Subspace.span([[1, 0, 0], [0, 1, 0]], 3) == Subspace.span([[1, 1, 0], [1, -1, 0]], 3)

    def test_intersection_and_sum(self):
        a = Subspace.span([[1, 0, 0], [0, 1, 0]], 3)
        b = Subspace.span([[0, 1, 0], [0, 0, 1]], 3)
        assert a.intersection(b) == Subspace.span([[0, 1, 0]], 3)
        assert a + b == Subspace.full(3)

    def test_annihilator(self):
        a = Subspace.span([[1, 1, 0]], 3)
        ann = a.annihilator()
        assert ann.dim == 2
        assert ann.contains([1, -1, 0])
        assert ann.contains([0, 0, 1])
        assert Subspace.zero(3).annihilator() == Subspace.full(3)

    def test_coordinates(self):
        a = Subspace.span([[1, 0, 2], [0, 1, 3]], 3)
        assert a.coordinates_of([2, 1, 7]) == (2, 1)
        assert a.complement_coordinates([0, 0, 1]) == (1,)
        assert a.contains_subspace(Subspace.span([[1, 1, 5]], 3))


class TestPoly:
    def test_arithmetic(self):
        assert t(1, 1) * t(-1, 1) == t(-1, 0, 1)
        assert t(0, 0, 0, 1).derivative() == t(0, 0, 3)
        assert t(1, 2, 1)(2) == 9
        assert t(1, 1) ** 3 == t(1, 3, 3, 1)
        assert t(1, 2, 0) == t(1, 2)
        assert Poly().degree == -1

    def test_division(self):
        q, r = divmod(t(-1, 0, 1), t(1, 1))
        assert q == t(-1, 1)
        assert r.is_zero
        assert t(1, 0, 1) % t(0, 1) == t(1)
        with pytest.raises(ZeroPolynomialError):
            divmod(t(1), Poly())

    def test_gcd(self):
        f = t(-1, 1) * t(-2, 1)
        g = t(-1, 1) * t(3, 1)
        assert poly_gcd(f, g) == t(-1, 1)
        assert poly_gcd_many([f, g, Poly(), t(-1, 1) * 5]) == t(-1, 1)
        with pytest.raises(ZeroPolynomialError):
            poly_gcd_many([Poly()])

    @settings(max_examples=40, deadline=None)
    @given(st.lists(small_ints, min_size=1, max_size=4), st.lists(small_ints, min_size=1, max_size=4))
    def test_gcd_divides(self, a, b):
        f, g = Poly(tuple(a)), Poly(tuple(b))
        if f.is_zero and g.is_zero:
            return
        d = poly_gcd(f, g)
        assert (f % d).is_zero
        assert (g % d).is_zero

    def test_str(self):
        assert str(t(-1, 0, 2)) == "2*t^2 - 1"
        assert str(t(0, -1)) == "-t"


class TestRationalRoots:
    def test_simple(self):
        report = rational_roots(t(0, 1, 1))
        assert report.roots == ((Fraction(-1), 1), (Fraction(0), 1))
        assert report.nonrational == 0

    def test_multiplicity_and_irrational_part(self):
        f = t(Fraction(-1, 2), 1) ** 2 * t(1, 0, 1)
        report = rational_roots(f)
        assert report.roots == ((Fraction(1, 2), 2),)
        assert report.nonrational == 2

    def test_zero_polynomial(self):
        with pytest.raises(ZeroPolynomialError):
            rational_roots(Poly())

    @settings(max_examples=40, deadline=None)
    @given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=1, max_size=4))
    def test_products_of_linear_factors(self, roots):
        f = t(2, 0, 1)
        for r in roots:
            f = f * t(-r, 1)
        report = rational_roots(f)
        assert dict(report.roots) == dict(Counter(roots))
        assert report.nonrational == 2

    def test_sympy_form_is_exact(self):
        f = t(Fraction(1, 3), 0, Fraction(-5, 2))
        assert f.as_sympy() == sympy.Poly(sympy.Rational(-5, 2) * T**2 + sympy.Rational(1, 3), T, domain="QQ")
        assert Poly.from_sympy(f.as_sympy()) == f
        assert Poly.from_sympy(Poly().as_sympy()).is_zero


class TestRationalFunction:
    def test_lowest_terms(self):
        r = RationalFunction(t(-1, 0, 1), t(-1, 1))
        assert r.num == t(1, 1)
        assert r.den == t(1)
        s = RationalFunction(t(2), t(0, 2))
        assert s.num == t(1)
        assert s.den == t(0, 1)

    def test_derivative(self):
        assert RationalFunction(t(1), t(0, 1)).derivative() == RationalFunction(t(-1), t(0, 0, 1))

    def test_field_operations(self):
        x = RationalFunction(t(0, 1))
        inverse = RationalFunction.of(1) / x
        assert x * inverse == RationalFunction.of(1)
        assert inverse + inverse == RationalFunction(t(2), t(0, 1))

    def test_zero_denominator(self):
        with pytest.raises(ZeroPolynomialError):
            RationalFunction(t(1), Poly())


class TestCharpoly:
    def test_nilpotent(self):
        assert charpoly(Matrix.from_rows([[0, 1], [0, 0]])) == t(0, 0, 1)

    def test_poly_matrix_det(self):
        m = PolyMatrix.from_rows([[t(0, 1), t(1)], [t(1), t(0, 1)]])
        assert m.det() == t(-1, 0, 1)

    @settings(max_examples=25, deadline=None)
    @given(square_matrices(3))
    def test_matches_sympy(self, rows):
        s = sympy.Symbol("s")
        expected = [sympy_fraction(c) for c in reversed(sympy.Matrix(rows).charpoly(s).all_coeffs())]
        assert charpoly(Matrix.from_rows(rows)) == Poly(tuple(expected))

    @settings(max_examples=25, deadline=None)
    @given(square_matrices(3), st.integers(min_value=-4, max_value=4))
    def test_adjugate(self, rows, s):
        a = Matrix.from_rows(rows)
        adjugate, chi = resolvent(a)
        at_s = Matrix.from_rows([[adjugate[i, j](s) for j in range(3)] for i in range(3)])
        assert (Matrix.identity(3) * s - a) @ at_s == Matrix.identity(3) * chi(s)
