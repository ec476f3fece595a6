"""Pole placement by static output feedback as a linear projection of a Grassmannian.

A realization (A, B, C) with N states, m inputs and p outputs has transfer function
G(s) = C(sI - A)^(-1)B. Its Hermann-Martin curve is the column span of (I_m; G(s)) in
Plücker coordinates. The pole placement polynomial det(sI - A - BKC) is the pairing of
that curve with the p-plane spanned by the columns of (K; I_p).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from pluckx.exactla import (
    Matrix,
    Poly,
    PolyMatrix,
    RationalFunction,
    ScalarLike,
    Subspace,
    charpoly,
    kernel,
    poly_gcd_many,
    resolvent,
)
from pluckx.exalg import Multivector, act, basis_index_sets, top_pairing
from pluckx.exceptions import DimensionMismatchError, SingularMatrixError
from pluckx.grass import Center, pluecker
from pluckx.logger import logger
from pluckx.sampling import Lcg64


@dataclass(frozen=True)
class Realization:
    """State-space triple with A: N×N, B: N×m and C: p×N."""

    a: Matrix
    b: Matrix
    c: Matrix

    def __post_init__(self) -> None:
        n = self.a.rows
        if not self.a.is_square or self.b.rows != n or self.c.cols != n:
            msg = f"Incompatible realization shapes A {self.a.rows}x{self.a.cols}, B {self.b.rows}x{self.b.cols}, C {self.c.rows}x{self.c.cols}"
            raise DimensionMismatchError(msg)

    @property
    def n(self) -> int:
        return self.a.rows

    @property
    def m(self) -> int:
        return self.b.cols

    @property
    def p(self) -> int:
        return self.c.rows


def symmetric_realization(eigenvalues: Sequence[ScalarLike], b: Matrix) -> Realization:
    """(diag(eigenvalues), B, Bᵀ)."""
    return Realization(Matrix.diagonal(eigenvalues), b, b.T)


class TransferFunction(NamedTuple):
    num: PolyMatrix
    den: Poly


def transfer_function(system: Realization) -> TransferFunction:
    """C·adj(sI - A)·B over det(sI - A)."""
    adjugate, den = resolvent(system.a)
    num = PolyMatrix.constant(system.c) @ adjugate @ system.b
    return TransferFunction(num, den)


@dataclass(frozen=True)
class HermannMartinCurve:
    """Polynomial curve Σ s^k·w_k in the m-th exterior power of Q^(m+p), with primitive coordinates."""

    coefficients: tuple[Multivector, ...]
    m: int
    p: int

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coordinate(self, idx: tuple[int, ...]) -> Poly:
        return Poly(tuple(w.coefficient(idx) for w in self.coefficients))


def hermann_martin(system: Realization) -> HermannMartinCurve:
    """Plücker coordinates of the column span of (den·I_m; num), divided by their content."""
    num, den = transfer_function(system)
    m, p = system.m, system.p
    stacked = PolyMatrix.scalar_identity(m, den).vstack(num)
    minors = stacked.minors(m)
    content = poly_gcd_many(minors.values())
    coordinates = {tuple(i + 1 for i in rows): f.exact_div(content) for rows, f in minors.items()}
    degree = max(f.degree for f in coordinates.values())
    coefficients = tuple(
        Multivector(m + p, m, {idx: f.coefficient(k) for idx, f in coordinates.items()}) for k in range(degree + 1)
    )
    logger.debug(f"Hermann-Martin curve of degree {degree} (content {content})")
    return HermannMartinCurve(coefficients, m, p)


class PolePlacementCenter(NamedTuple):
    x: Subspace
    center: Center
    proper: bool


def pp_center(system: Realization, seed: int = 0) -> PolePlacementCenter:
    """X spanned by the curve coefficients and its annihilator Z in the p-th exterior power.

    The center is proper when it is nonzero and no tested element is decomposable.
    """
    curve = hermann_martin(system)
    n = curve.m + curve.p
    ambient = len(basis_index_sets(n, curve.m))
    x = Subspace.span([w.coordinates() for w in curve.coefficients], ambient)
    duals = [Multivector.monomial(n, idx) for idx in basis_index_sets(n, curve.p)]
    rows = [
        [top_pairing(Multivector.from_coordinates(n, curve.m, v), e) for e in duals] for v in x.vectors()
    ]
    z = kernel(Matrix.from_rows(rows, cols=len(duals))) if rows else Subspace.full(len(duals))
    center = Center(n, curve.p, z)
    proper = center.dim > 0 and center.decomposable_witness(Lcg64(seed)) is None
    return PolePlacementCenter(x, center, proper)


def _check_gain(system: Realization, gain: Matrix) -> None:
    if (gain.rows, gain.cols) != (system.m, system.p):
        msg = f"Gain must be {system.m}x{system.p}, got {gain.rows}x{gain.cols}"
        raise DimensionMismatchError(msg)


def pole_placement_poly(system: Realization, gain: Matrix) -> Poly:
    """det(sI - (A + BKC))."""
    _check_gain(system, gain)
    return charpoly(system.a + system.b @ gain @ system.c)


def pole_placement_poly_via_transfer(system: Realization, gain: Matrix) -> RationalFunction:
    """den·det(I_p - G·K) = det(den·I_p - num·K)/den^(p-1)."""
    _check_gain(system, gain)
    num, den = transfer_function(system)
    closed = PolyMatrix.scalar_identity(system.p, den) - num @ gain
    return RationalFunction(closed.det(), den ** (system.p - 1))


def gain_plane(gain: Matrix) -> Multivector:
    """Plücker vector of the column span of (K; I_p)."""
    stacked = gain.vstack(Matrix.identity(gain.cols))
    return pluecker([stacked.col(j) for j in range(stacked.cols)]).vector


def wedge_pairing(curve: HermannMartinCurve, gain: Matrix) -> Poly:
    """Σ_k top_pairing(w_k, plane(K))·s^k, proportional to the pole placement polynomial."""
    if (gain.rows, gain.cols) != (curve.m, curve.p):
        msg = f"Gain must be {curve.m}x{curve.p}, got {gain.rows}x{gain.cols}"
        raise DimensionMismatchError(msg)
    plane = gain_plane(gain)
    return Poly(tuple(top_pairing(w, plane) for w in curve.coefficients))


#####################################
#                                   #
#           STATE FEEDBACK          #
#                                   #
#####################################


def feedback_transform(system: Realization, r: Matrix, w: Matrix, t: Matrix, q: Matrix) -> Realization:
    """(R⁻¹(A + BQT⁻¹C)R, R⁻¹BW, T⁻¹CR).

    Raises:
    ------
        SingularMatrixError: If R, W or T is singular.
    """
    if not w.is_square or w.rows != system.m or not w.det():
        msg = "W must be an invertible m×m matrix"
        raise SingularMatrixError(msg)
    if (q.rows, q.cols) != (system.m, system.p):
        msg = f"Q must be {system.m}x{system.p}, got {q.rows}x{q.cols}"
        raise DimensionMismatchError(msg)
    r_inv, t_inv = r.inverse(), t.inverse()
    a = r_inv @ (system.a + system.b @ q @ t_inv @ system.c) @ r
    return Realization(a, r_inv @ system.b @ w, t_inv @ system.c @ r)


def curve_transform_matrix(w: Matrix, t: Matrix, q: Matrix) -> Matrix:
    """g = [[W⁻¹, -W⁻¹QT⁻¹], [0, T⁻¹]], carrying the curve of Σ to the curve of its transform."""
    w_inv, t_inv = w.inverse(), t.inverse()
    top = w_inv.hstack(-(w_inv @ q @ t_inv))
    bottom = Matrix.zeros(t.rows, w.cols).hstack(t_inv)
    return top.vstack(bottom)


def curves_equivalent(curve: HermannMartinCurve, other: HermannMartinCurve, g: Matrix) -> bool:
    """True when g·curve(s) is a constant multiple of other(s)."""
    if curve.degree != other.degree or (curve.m, curve.p) != (other.m, other.p):
        return False
    moved = [c for w in curve.coefficients for c in act(g, w).coordinates()]
    target = [c for w in other.coefficients for c in w.coordinates()]
    lead = next((i for i, c in enumerate(target) if c), None)
    if lead is None or not moved[lead]:
        return False
    scale = moved[lead] / target[lead]
    return all(a == scale * b for a, b in zip(moved, target))


#####################################
#                                   #
#            STRUCTURE              #
#                                   #
#####################################


def is_symmetric(system: Realization) -> bool:
    """Aᵀ = A and C = Bᵀ."""
    if system.m != system.p:
        msg = f"Symmetry needs as many inputs as outputs, got m={system.m}, p={system.p}"
        raise DimensionMismatchError(msg)
    return system.a == system.a.T and system.c == system.b.T


def is_controllable(system: Realization) -> bool:
    block, blocks = system.b, [system.b]
    for _ in range(system.n - 1):
        block = system.a @ block
        blocks.append(block)
    columns = [blk.col(j) for blk in blocks for j in range(blk.cols)]
    return Subspace.span(columns, system.n).dim == system.n


def is_observable(system: Realization) -> bool:
    return is_controllable(Realization(system.a.T, system.c.T, system.b.T))


def is_minimal(system: Realization) -> bool:
    return is_controllable(system) and is_observable(system)

