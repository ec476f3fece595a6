"""Unittest for pluckx.syscon."""
import pytest

from pluckx.demos import SISO_EXAMPLE, SYMMETRIC_2X2, symmetric_3x3
from pluckx.exactla import Matrix, Poly, RationalFunction, charpoly
from pluckx.exceptions import DimensionMismatchError, SingularMatrixError
from pluckx.sampling import Lcg64
from pluckx.selfadj import VerdictRoute, detect_self_adjoint
from pluckx.syscon import (
    Realization,
    curve_transform_matrix,
    curves_equivalent,
    feedback_transform,
    hermann_martin,
    is_controllable,
    is_minimal,
    is_observable,
    is_symmetric,
    pole_placement_poly,
    pole_placement_poly_via_transfer,
    pp_center,
    transfer_function,
    wedge_pairing,
)


def t(*coeffs) -> Poly:
    return Poly(tuple(coeffs))


GAIN = Matrix.from_rows([[3]])


class TestSingleInput:
    def test_transfer_function(self):
        num, den = transfer_function(SISO_EXAMPLE)
        assert den == t(0, 0, 1)
        assert num.det() == t(1)

    def test_pole_placement(self):
        assert pole_placement_poly(SISO_EXAMPLE, GAIN) == t(-3, 0, 1)
        assert pole_placement_poly(SISO_EXAMPLE, Matrix.zeros(1, 1)) == charpoly(SISO_EXAMPLE.a)

    def test_via_transfer(self):
        assert pole_placement_poly_via_transfer(SISO_EXAMPLE, GAIN) == RationalFunction.of(t(-3, 0, 1))

    def test_curve(self):
        curve = hermann_martin(SISO_EXAMPLE)
        assert curve.degree == 2
        assert (curve.m, curve.p) == (1, 1)
        assert wedge_pairing(curve, GAIN).is_proportional(t(-3, 0, 1))

    def test_gain_shape(self):
        with pytest.raises(DimensionMismatchError):
            pole_placement_poly(SISO_EXAMPLE, Matrix.zeros(2, 2))
        with pytest.raises(DimensionMismatchError):
            wedge_pairing(hermann_martin(SISO_EXAMPLE), Matrix.zeros(1, 2))


class TestSymmetricSystem:
    def test_structure(self):
        assert is_symmetric(SYMMETRIC_2X2)
        assert not is_symmetric(SISO_EXAMPLE)
        assert is_minimal(SYMMETRIC_2X2)

    def test_open_loop(self):
        assert pole_placement_poly(SYMMETRIC_2X2, Matrix.zeros(2, 2)) == charpoly(SYMMETRIC_2X2.a)

    @pytest.mark.parametrize("seed", range(4))
    def test_transpose_symmetry(self, seed):
        gain = Lcg64(seed).matrix(2, 2, 3)
        assert pole_placement_poly(SYMMETRIC_2X2, gain) == pole_placement_poly(SYMMETRIC_2X2, gain.T)

    @pytest.mark.parametrize("seed", range(4))
    def test_transfer_identity(self, seed):
        gain = Lcg64(seed).matrix(2, 2, 3)
        expected = pole_placement_poly(SYMMETRIC_2X2, gain)
        assert pole_placement_poly_via_transfer(SYMMETRIC_2X2, gain) == RationalFunction.of(expected)

    @pytest.mark.parametrize("seed", range(4))
    def test_wedge_pairing(self, seed):
        gain = Lcg64(seed).matrix(2, 2, 3)
        curve = hermann_martin(SYMMETRIC_2X2)
        assert wedge_pairing(curve, gain).is_proportional(pole_placement_poly(SYMMETRIC_2X2, gain))

    def test_center_is_self_adjoint(self):
        built = pp_center(SYMMETRIC_2X2)
        assert built.proper
        assert built.center.dim > 0
        assert detect_self_adjoint(built.center).is_self_adjoint


class TestFeedback:
    def test_identity_transform(self):
        one = Matrix.identity(2)
        moved = feedback_transform(SYMMETRIC_2X2, Matrix.identity(4), one, one, Matrix.zeros(2, 2))
        assert moved == SYMMETRIC_2X2

    @pytest.mark.parametrize("seed", range(3))
    def test_curves_are_equivalent(self, seed):
        rng = Lcg64(seed)
        r, w, t_, q = rng.invertible_matrix(4), rng.invertible_matrix(2), rng.invertible_matrix(2), rng.matrix(2, 2, 3)
        moved = feedback_transform(SYMMETRIC_2X2, r, w, t_, q)
        g = curve_transform_matrix(w, t_, q)
        assert curves_equivalent(hermann_martin(SYMMETRIC_2X2), hermann_martin(moved), g)

    def test_unrelated_curves(self):
        curve = hermann_martin(SYMMETRIC_2X2)
        assert not curves_equivalent(curve, hermann_martin(SISO_EXAMPLE), Matrix.identity(4))

    def test_singular_input_change(self):
        one = Matrix.identity(2)
        with pytest.raises(SingularMatrixError):
            feedback_transform(SYMMETRIC_2X2, Matrix.identity(4), Matrix.zeros(2, 2), one, Matrix.zeros(2, 2))

    def test_output_injection_shape(self):
        one = Matrix.identity(2)
        with pytest.raises(DimensionMismatchError):
            feedback_transform(SYMMETRIC_2X2, Matrix.identity(4), one, one, Matrix.zeros(2, 3))


class TestStructure:
    def test_shapes(self):
        with pytest.raises(DimensionMismatchError):
            Realization(Matrix.identity(2), Matrix.zeros(3, 1), Matrix.zeros(1, 2))

    def test_unobservable(self):
        system = Realization(SISO_EXAMPLE.a, SISO_EXAMPLE.b, Matrix.zeros(1, 2))
        assert is_controllable(system)
        assert not is_observable(system)
        assert not is_minimal(system)

    def test_symmetry_needs_square_transfer(self):
        system = Realization(Matrix.identity(2), Matrix.zeros(2, 1), Matrix.zeros(2, 2))
        with pytest.raises(DimensionMismatchError):
            is_symmetric(system)


class TestThreeInputs:
    def test_short_curve_gives_a_large_center(self):
        built = pp_center(symmetric_3x3(9))
        assert hermann_martin(symmetric_3x3(9)).degree == 9
        assert built.center.dim >= 10
        verdict = detect_self_adjoint(built.center)
        assert verdict.route is VerdictRoute.CONTAINMENT
        assert verdict.is_self_adjoint

    def test_long_curve_gives_a_six_dimensional_center(self):
        built = pp_center(symmetric_3x3(13))
        assert built.center.dim == 6
        verdict = detect_self_adjoint(built.center)
        assert verdict.route is VerdictRoute.VERTEX
        assert verdict.is_self_adjoint
