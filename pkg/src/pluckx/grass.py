"""The Grassmannian of m-planes in V inside the projectivized m-th exterior power.

Points are Plücker vectors up to scale, centers are linear subspaces of the exterior
power, and projections read coordinates on the complement fixed by the canonical basis
of the center.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence, Union

from pluckx.exactla import Matrix, Poly, ScalarLike, Subspace, kernel, pfaffian, poly_gcd_many, rational_roots
from pluckx.exalg import (
    Multivector,
    basis_index_sets,
    contract,
    interior,
    skew_matrix,
    wedge,
    wedge_all,
)
from pluckx.exceptions import (
    CenterHitError,
    DecomposableCenterError,
    DegenerateFormError,
    DependentVectorsError,
    DimensionMismatchError,
    GradeError,
    NotDecomposableError,
)
from pluckx.logger import logger
from pluckx.sampling import Lcg64


@dataclass(frozen=True)
class PluckerPoint:
    """Nonzero multivector up to scale, stored with first coefficient 1."""

    vector: Multivector

    def __post_init__(self) -> None:
        if self.vector.is_zero:
            msg = "The zero multivector is not a projective point"
            raise DependentVectorsError(msg)
        object.__setattr__(self, "vector", self.vector.normalized())

    @property
    def m(self) -> int:
        return self.vector.grade

    @property
    def dim(self) -> int:
        return self.vector.dim

    def subspace(self) -> Subspace | None:
        return is_decomposable(self.vector)


PointLike = Union[PluckerPoint, Multivector]


def _vector(point: PointLike) -> Multivector:
    return point.vector if isinstance(point, PluckerPoint) else point


def pluecker(basis: Sequence[Sequence[ScalarLike]]) -> PluckerPoint:
    """Plücker point of the span of m independent vectors.

    Raises:
    ------
        DependentVectorsError: If the vectors are linearly dependent.

    Example:
    -------
        ```python
        pluecker([[1, 0, 0, 1, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]]).vector  # e123 + e234
        ```
    """
    if not basis:
        msg = "Plücker vector of an empty basis"
        raise DependentVectorsError(msg)
    n = len(basis[0])
    if Subspace.span(basis, n).dim != len(basis):
        msg = f"{len(basis)} vectors do not span a {len(basis)}-dimensional space"
        raise DependentVectorsError(msg)
    return PluckerPoint(wedge_all([Multivector.vector(v) for v in basis]))


def pluecker_of(plane: Subspace) -> PluckerPoint:
    """Plücker point of a subspace of V given by its canonical basis."""
    return pluecker(plane.vectors())


def wedge_map(w: Multivector) -> Matrix:
    """Matrix of v ↦ v∧w from V to the next exterior power, in the monomial bases."""
    rows = basis_index_sets(w.dim, w.grade + 1)
    columns = [wedge(Multivector.monomial(w.dim, [j], dual=w.dual), w) for j in range(1, w.dim + 1)]
    return Matrix.from_rows([[c.coefficient(idx) for c in columns] for idx in rows], cols=w.dim)


def contraction_map(w: Multivector) -> Matrix:
    """Matrix of phi ↦ phi⌟w from the opposite-variance space, in the monomial bases."""
    rows = basis_index_sets(w.dim, w.grade - 1)
    columns = [contract(Multivector.monomial(w.dim, [j], dual=not w.dual), w) for j in range(1, w.dim + 1)]
    return Matrix.from_rows([[c.coefficient(idx) for c in columns] for idx in rows], cols=w.dim)


def is_decomposable(w: PointLike) -> Subspace | None:
    """The m-plane whose Plücker vector is w, or None when w is not decomposable.

    w is decomposable exactly when {v : v∧w = 0} has dimension m, and that kernel is the plane.
    """
    w = _vector(w)
    if w.is_zero:
        return None
    plane = kernel(wedge_map(w))
    return plane if plane.dim == w.grade else None


def is_decomposable_quadric(w: PointLike) -> bool:
    """Decomposability of a bivector in dimension 4 through the single quadric w∧w = 0."""
    w = _vector(w)
    if (w.grade, w.dim) != (2, 4):
        msg = f"The quadric test applies to 2-forms in dimension 4, got grade {w.grade} in dimension {w.dim}"
        raise GradeError(msg)
    return not w.is_zero and wedge(w, w).is_zero


@dataclass(frozen=True)
class SymplecticForm:
    """Nondegenerate 2-form σ in ∧²V (a form on V*) with its inverse form σ* on V.

    ``inverse`` is the matrix of σ*, the inverse of the skew matrix of σ.
    """

    sigma: Multivector

    def __post_init__(self) -> None:
        if self.sigma.grade != 2 or self.sigma.dim % 2:
            msg = f"A symplectic form needs grade 2 in even dimension, got grade {self.sigma.grade} in {self.sigma.dim}"
            raise DegenerateFormError(msg)
        if not pfaffian(skew_matrix(self.sigma)):
            msg = f"2-form {self.sigma} is degenerate"
            raise DegenerateFormError(msg)

    @property
    def dim(self) -> int:
        return self.sigma.dim

    @property
    def matrix(self) -> Matrix:
        return skew_matrix(self.sigma)

    @property
    def inverse(self) -> Matrix:
        return self.matrix.inverse()

    def pair(self, u: Sequence[ScalarLike], v: Sequence[ScalarLike]) -> Fraction:
        """σ*(u, v) for two vectors of V."""
        return sum((a * b for a, b in zip(u, self.inverse.apply(v))), Fraction(0))


def skew_complement(plane: Subspace, sigma: SymplecticForm) -> Subspace:
    """{w in V : σ*(w, v) = 0 for all v in plane}."""
    if plane.ambient != sigma.dim:
        msg = f"Subspace of dimension-{plane.ambient} space against a form on dimension {sigma.dim}"
        raise DimensionMismatchError(msg)
    if not plane.dim:
        return Subspace.full(plane.ambient)
    omega = sigma.inverse
    return kernel(Matrix.from_rows([omega.apply(v) for v in plane.vectors()], cols=plane.ambient))


#####################################
#                                   #
#        CENTERS AND PROJECTION     #
#                                   #
#####################################


@dataclass(frozen=True)
class Center:
    """Linear center of projection inside the grade-m exterior power of a dim-n space."""

    n: int
    m: int
    space: Subspace

    def __post_init__(self) -> None:
        expected = len(basis_index_sets(self.n, self.m))
        if self.space.ambient != expected:
            msg = f"A center in grade {self.m} of dimension {self.n} lives in a {expected}-dimensional space"
            raise DimensionMismatchError(msg)

    @classmethod
    def span(cls, elements: Sequence[Multivector], n: int | None = None, m: int | None = None) -> Center:
        if not elements and (n is None or m is None):
            msg = "An empty center needs explicit n and m"
            raise DimensionMismatchError(msg)
        n = elements[0].dim if elements else n
        m = elements[0].grade if elements else m
        if any(e.dim != n or e.grade != m for e in elements):
            msg = "Center generators of mixed shape"
            raise DimensionMismatchError(msg)
        ambient = len(basis_index_sets(n, m))
        return cls(n, m, Subspace.span([e.coordinates() for e in elements], ambient))

    @property
    def dim(self) -> int:
        return self.space.dim

    def elements(self) -> list[Multivector]:
        return [Multivector.from_coordinates(self.n, self.m, v) for v in self.space.vectors()]

    def contains(self, w: PointLike) -> bool:
        return self.space.contains(_vector(w).coordinates())

    def samples(self, rng: Lcg64, count: int) -> list[Multivector]:
        """Seeded nonzero random combinations of the canonical basis."""
        basis = self.elements()
        return [rng.combination(basis) for _ in range(count)] if basis else []

    def decomposable_witness(self, rng: Lcg64, count: int = 20) -> Multivector | None:
        """A decomposable basis element or sample, or None when every tested element is off the Grassmannian."""
        for w in self.elements() + self.samples(rng, count):
            if is_decomposable(w) is not None:
                logger.debug(f"Center meets the Grassmannian at {w}")
                return w
        return None


def project(w: PointLike, center: Center) -> tuple[Fraction, ...]:
    """Projective quotient coordinates of w modulo the center.

    Raises:
    ------
        CenterHitError: If w lies in the center.
    """
    w = _vector(w)
    if (w.dim, w.grade) != (center.n, center.m):
        msg = f"Point of grade {w.grade} in dimension {w.dim} against a center of grade {center.m} in dimension {center.n}"
        raise DimensionMismatchError(msg)
    coords = center.space.complement_coordinates(w.coordinates())
    lead = next((c for c in coords if c), None)
    if lead is None:
        msg = f"{w} lies in the center of projection"
        raise CenterHitError(msg)
    return tuple(c / lead for c in coords)


def secant_meets_center(first: PointLike, second: PointLike, center: Center) -> PluckerPoint | None:
    """The point where the line through two Plücker points meets the center, if any."""
    a, b = _vector(first), _vector(second)
    if a.is_proportional(b):
        msg = "The two points coincide, so they span no line"
        raise DependentVectorsError(msg)
    ca = center.space.complement_coordinates(a.coordinates())
    cb = center.space.complement_coordinates(b.coordinates())
    solutions = kernel(Matrix.from_columns([ca, cb], rows=len(ca)))
    if solutions.dim == 0:
        return None
    if solutions.dim == 2:
        msg = "The whole secant line lies in the center"
        raise CenterHitError(msg)
    s, t = solutions.vectors()[0]
    return PluckerPoint(a * s + b * t)


class FiberPartners(NamedTuple):
    partners: tuple[PluckerPoint, ...]
    base_multiplicity: int
    nonrational: int
    gcd: Poly


def decomposability_polynomials(base: Multivector, direction: Multivector) -> list[Poly]:
    """Restrictions of the equations (ι_I ξ)∧ξ = 0 to the pencil ξ = base + t·direction."""
    polys = []
    for idx in basis_index_sets(base.dim, base.grade - 1):
        lb, ld = interior(idx, base), interior(idx, direction)
        c0 = wedge(lb, base)
        c1 = wedge(lb, direction) + wedge(ld, base)
        c2 = wedge(ld, direction)
        keys = set(c0.terms) | set(c1.terms) | set(c2.terms)
        polys.extend(Poly((c0.coefficient(k), c1.coefficient(k), c2.coefficient(k))) for k in sorted(keys))
    return polys


def fiber_partners(plane: PointLike, point: PointLike) -> FiberPartners:
    """Decomposable points other than ``plane`` on the line through ``plane`` and ``point``.

    Every equation vanishes at t = 0; the partners are the nonzero rational common roots,
    and ``base_multiplicity`` is the order of the common root at ``plane`` (2 or more when the
    line is tangent there).

    Raises:
    ------
        NotDecomposableError: If ``plane`` is not a Plücker vector.
        DecomposableCenterError: If ``point`` lies on the Grassmannian.
    """
    base, direction = _vector(plane), _vector(point)
    if is_decomposable(base) is None:
        msg = f"{base} is not decomposable"
        raise NotDecomposableError(msg)
    if is_decomposable(direction) is not None:
        msg = f"The projection point {direction} lies on the Grassmannian"
        raise DecomposableCenterError(msg)
    if base.is_proportional(direction):
        msg = "Plane and projection point coincide"
        raise DependentVectorsError(msg)
    common = poly_gcd_many(decomposability_polynomials(base, direction))
    report = rational_roots(common)
    multiplicity = dict(report.roots).get(Fraction(0), 0)
    partners = tuple(PluckerPoint(base + direction * r) for r, _ in report.roots if r)
    logger.debug(f"Fiber through {base}: gcd {common}, {len(partners)} rational partner(s)")
    return FiberPartners(partners, multiplicity, report.nonrational, common)

