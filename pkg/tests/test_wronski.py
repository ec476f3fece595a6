"""Unittest for pluckx.wronski."""
import pytest

from pluckx.exactla import Poly, RationalFunction, Subspace
from pluckx.exalg import Multivector, wedge_all
from pluckx.exceptions import DependentVectorsError, DimensionMismatchError, GradeError, ZeroPolynomialError
from pluckx.sampling import Lcg64
from pluckx.selfadj import DegreeOneReason, VerdictStatus, detect_self_adjoint
from pluckx.wronski import (
    FundamentalSystem,
    Odo,
    build_center,
    formal_adjoint,
    is_self_adjoint_op,
    mu_conjugate,
    odo_from_fundamental_system,
    schubert_degree,
    wronski_coefficients,
    wronski_map,
    wronskian,
)


def t(*coeffs) -> Poly:
    return Poly(tuple(coeffs))


def over_t(numerator: int, power: int) -> RationalFunction:
    return RationalFunction(t(numerator), Poly.monomial(power))


class TestWronskian:
    def test_monomials(self):
        assert wronskian([t(0, 0, 1), t(0, 0, 0, 1)]) == t(0, 0, 0, 0, 1)
        assert wronskian([t(1), t(0, 1)]) == t(1)

    def test_dependent_system(self):
        with pytest.raises(DependentVectorsError):
            FundamentalSystem((t(0, 1), t(0, 2)))
        with pytest.raises(DependentVectorsError):
            FundamentalSystem(())

    def test_combine(self):
        fs = FundamentalSystem.monomials([0, 1, 2])
        assert fs.combine([1, 0, 3]) == t(1, 0, 3)


class TestOperators:
    def test_operator_of_a_fundamental_system(self):
        fs = FundamentalSystem((t(0, 0, 1), t(0, 0, 0, 1)))
        op = odo_from_fundamental_system(fs)
        assert op.coeffs == (over_t(6, 2), over_t(-4, 1))
        assert all(op(f).is_zero for f in fs.polys)

    @pytest.mark.parametrize("exponents", [(0, 1, 2, 3), (0, 1, 2, 4), (0, 2, 5)])
    def test_operator_annihilates_its_solutions(self, exponents):
        fs = FundamentalSystem.monomials(exponents)
        op = odo_from_fundamental_system(fs)
        assert op.order == len(exponents)
        assert all(op(f).is_zero for f in fs.polys)

    def test_formal_adjoint(self):
        op = Odo.from_polys([0, t(0, 1)])
        assert formal_adjoint(op) == Odo.from_polys([-1, t(0, -1)])
        assert not is_self_adjoint_op(op)

    def test_adjoint_is_an_involution(self):
        op = Odo.from_polys([t(0, 0, 1), 1, t(0, 1)])
        assert formal_adjoint(op).sign == -1
        assert formal_adjoint(formal_adjoint(op)) == op

    def test_self_adjoint_operators(self):
        assert is_self_adjoint_op(Odo.from_polys([t(0, 0, 1), 0]))
        assert is_self_adjoint_op(odo_from_fundamental_system(FundamentalSystem.monomials(range(4))))
        assert not is_self_adjoint_op(Odo.from_polys([0, 0, 0]))

    def test_mu_conjugate(self):
        conjugated = mu_conjugate(Odo.from_polys([0, 0]), t(0, 1))
        assert conjugated == Odo((RationalFunction.of(0), over_t(2, 1)))

    def test_mu_conjugate_by_zero(self):
        with pytest.raises(ZeroPolynomialError):
            mu_conjugate(Odo.from_polys([0, 0]), 0)

    def test_sign(self):
        with pytest.raises(DimensionMismatchError):
            Odo.from_polys([0, 0], sign=2)


class TestWronskiCenters:
    def test_fourth_derivative(self):
        built = build_center(FundamentalSystem.monomials(range(4)), 2)
        sigma = Multivector.monomial(4, (1, 4)) - Multivector.monomial(4, (2, 3)) * 3
        assert built.x.dim == 5
        assert built.center.elements() == [sigma]
        verdict = detect_self_adjoint(built.center)
        assert verdict.status is VerdictStatus.SELF_ADJOINT
        assert verdict.sigma == sigma

    def test_sixth_derivative(self):
        built = build_center(FundamentalSystem.monomials(range(6)), 3)
        assert built.center.dim == 10
        assert detect_self_adjoint(built.center).is_self_adjoint

    def test_generic_order_four(self):
        built = build_center(FundamentalSystem.monomials([0, 1, 2, 4]), 2)
        assert built.center.dim == 0
        assert detect_self_adjoint(built.center).status is VerdictStatus.REFUTED_BY_SOLVE

    def test_generic_order_six(self):
        built = build_center(FundamentalSystem.monomials([0, 1, 2, 4, 8, 16]), 3)
        assert built.center.dim == 0
        verdict = detect_self_adjoint(built.center)
        assert verdict.status is VerdictStatus.DEGREE_ONE_EVIDENCE
        assert verdict.reason is DegreeOneReason.SMALL_CENTER

    @pytest.mark.parametrize("exponents,m", [((0, 1, 2, 3), 2), ((0, 1, 2, 3, 4, 5), 3), ((0, 1, 2, 3, 5, 8), 3)])
    def test_center_avoids_the_grassmannian(self, exponents, m):
        center = build_center(FundamentalSystem.monomials(exponents), m).center
        assert center.decomposable_witness(Lcg64(0), 10) is None

    def test_invalid_grade(self):
        with pytest.raises(GradeError):
            build_center(FundamentalSystem.monomials(range(4)), 4)


class TestWronskiMap:
    @pytest.mark.parametrize("seed", range(4))
    def test_map_factors_through_pluecker_coordinates(self, seed):
        fs = FundamentalSystem.monomials([0, 1, 3, 4])
        plane = Lcg64(seed).subspace(4, 2)
        coordinates = wedge_all([Multivector.vector(v) for v in plane.vectors()]).coordinates()
        expected = Poly(tuple(wronski_coefficients(fs, 2).apply(coordinates)))
        assert wronski_map(fs, 2, plane) == expected

    def test_plane_shape(self):
        with pytest.raises(DimensionMismatchError):
            wronski_map(FundamentalSystem.monomials(range(4)), 2, Subspace.full(4))


class TestSchubertDegree:
    @pytest.mark.parametrize(
        "m,n,degree", [(1, 4, 1), (2, 4, 2), (2, 5, 5), (2, 6, 14), (3, 6, 42), (2, 7, 42), (3, 7, 462)]
    )
    def test_values(self, m, n, degree):
        assert schubert_degree(m, n) == degree

    def test_duality(self):
        assert schubert_degree(2, 7) == schubert_degree(5, 7)

    @pytest.mark.parametrize("m,n", [(0, 4), (4, 4)])
    def test_invalid_grade(self, m, n):
        with pytest.raises(GradeError):
            schubert_degree(m, n)
