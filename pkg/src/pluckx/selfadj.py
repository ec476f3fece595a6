"""Detection of self-adjoint projection centers.

A center Z in the m-th exterior power is self-adjoint when it contains σ∧b for a
symplectic 2-form σ and every (m-2)-vector b. Projection from such a center identifies a
plane with its skew-orthogonal complement. Points of the second exterior power in
dimension 4 and 3-forms in dimension 6 are decided here.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from pluckx.exactla import Matrix, Subspace, kernel, pfaffian
from pluckx.exalg import Multivector, basis_index_sets, linear_combination, skew_matrix, wedge
from pluckx.exceptions import CenterHitError, DimensionMismatchError, GradeError, UnsupportedShapeError
from pluckx.grass import Center, SymplecticForm, pluecker_of, project, skew_complement
from pluckx.logger import logger
from pluckx.orbits import O5Data, OrbitLabel, OrbitReport, classify_orbit
from pluckx.sampling import Lcg64, derive_seed

VERTEX_SAMPLES = 20
BASIS_ATTEMPTS = 50
SOLUTION_SAMPLES = 20


class VerdictStatus(str, enum.Enum):
    SELF_ADJOINT = "SelfAdjoint"
    REFUTED_BY_ORBIT = "RefutedByOrbit"
    REFUTED_BY_SOLVE = "RefutedBySolve"
    DEGREE_ONE_EVIDENCE = "DegreeOneEvidence"


class VerdictRoute(str, enum.Enum):
    CONTAINMENT = "containment"
    VERTEX = "vertex"
    SHAPE = "shape"


class DegreeOneReason(str, enum.Enum):
    SMALL_CENTER = "center-dimension-at-most-5"
    E_DEGENERATE = "E_Z-degenerate"
    F_DEGENERATE = "F_Z-degenerate"
    NO_VERTEX_BASIS = "no-basis-with-independent-vertices"


@dataclass(frozen=True)
class SelfAdjointVerdict:
    status: VerdictStatus
    route: VerdictRoute
    sigma: Multivector | None = None
    witness: Multivector | None = None
    witness_label: OrbitLabel | None = None
    reason: DegreeOneReason | None = None
    labels: tuple[OrbitLabel, ...] = field(default_factory=tuple)
    e_spans: bool | None = None
    f_spans: bool | None = None
    solution_dim: int | None = None

    @property
    def is_self_adjoint(self) -> bool:
        return self.status is VerdictStatus.SELF_ADJOINT

    @property
    def is_refutation(self) -> bool:
        return self.status in {VerdictStatus.REFUTED_BY_ORBIT, VerdictStatus.REFUTED_BY_SOLVE}


class VertexMaps(NamedTuple):
    elements: tuple[Multivector, ...]
    reports: tuple[OrbitReport, ...]
    e_spans: bool
    f_spans: bool
    witness: Multivector | None = None
    witness_report: OrbitReport | None = None

    @property
    def alphas(self) -> tuple[Subspace, ...]:
        return tuple(r.wedge_kernel for r in self.reports)

    @property
    def hyperplanes(self) -> tuple[Subspace, ...]:
        return tuple(r.o5.hyperplane for r in self.reports if r.o5 is not None)


def contains_sigma_wedge(center: Center, sigma: Multivector, m: int) -> bool:
    """True when σ∧b lies in the center for every monomial b of grade m - 2."""
    if sigma.grade != 2:
        msg = f"Expected a 2-form, got grade {sigma.grade}"
        raise GradeError(msg)
    if (center.n, center.m) != (sigma.dim, m):
        msg = f"Center of grade {center.m} in dimension {center.n} does not match m={m}, dim={sigma.dim}"
        raise DimensionMismatchError(msg)
    return all(
        center.contains(wedge(sigma, Multivector.monomial(sigma.dim, idx)))
        for idx in basis_index_sets(sigma.dim, m - 2)
    )


def sigma_solution_space(center: Center) -> list[Multivector]:
    """Basis of the 2-forms σ with σ∧b in the center for every (m-2)-vector b."""
    n, m = center.n, center.m
    pairs = basis_index_sets(n, 2)
    rows: list[list[Fraction]] = []
    for idx in basis_index_sets(n, m - 2):
        b = Multivector.monomial(n, idx)
        columns = [
            center.space.complement_coordinates(wedge(Multivector.monomial(n, p), b).coordinates()) for p in pairs
        ]
        rows.extend(list(r) for r in zip(*columns))
    solutions = kernel(Matrix.from_rows(rows, cols=len(pairs))) if rows else Subspace.full(len(pairs))
    return [Multivector(n, 2, dict(zip(pairs, v))) for v in solutions.vectors()]


def _nondegenerate_member(candidates: list[Multivector], rng: Lcg64) -> Multivector | None:
    tested = candidates + ([rng.combination(candidates) for _ in range(SOLUTION_SAMPLES)] if candidates else [])
    return next((s for s in tested if pfaffian(skew_matrix(s))), None)


def _containment_verdict(center: Center, rng: Lcg64) -> SelfAdjointVerdict:
    solutions = sigma_solution_space(center)
    sigma = _nondegenerate_member(solutions, rng)
    logger.debug(f"Containment solve: {len(solutions)}-dimensional space of 2-forms")
    if sigma is None:
        return SelfAdjointVerdict(
            VerdictStatus.REFUTED_BY_SOLVE, VerdictRoute.CONTAINMENT, solution_dim=len(solutions)
        )
    return SelfAdjointVerdict(
        VerdictStatus.SELF_ADJOINT, VerdictRoute.CONTAINMENT, sigma=sigma.normalized(), solution_dim=len(solutions)
    )


def vertex_maps(center: Center, seed: int = 0, samples: int = VERTEX_SAMPLES) -> VertexMaps:
    """Vertex data α_ω and A_ω for the canonical basis of the center and seeded samples.

    Stops at the first sampled element outside O5 and returns it as a witness.
    """
    if (center.n, center.m) != (6, 3):
        msg = f"Vertex maps are defined for 3-forms in dimension 6, got grade {center.m} in {center.n}"
        raise UnsupportedShapeError(msg)
    elements = center.elements() + center.samples(Lcg64(seed), samples)
    reports = []
    for w in elements:
        report = classify_orbit(w)
        if report.label is not OrbitLabel.O5:
            logger.info(f"Center element {w} lies in {report.label.value}")
            return VertexMaps(tuple(elements), tuple(reports), False, False, w, report)
        reports.append(report)
    alpha_span = Subspace.span([r.wedge_kernel.vectors()[0] for r in reports], 6)
    normal_span = Subspace.span([r.contraction_kernel.vectors()[0] for r in reports], 6)
    return VertexMaps(tuple(elements), tuple(reports), alpha_span.dim == 6, normal_span.dim == 6)


def _select_basis(maps: VertexMaps, center: Center, rng: Lcg64) -> list[tuple[Multivector, O5Data]]:
    """Greedy choice of 6 elements with independent forms, α's and hyperplane normals."""
    chosen: list[tuple[Multivector, O5Data]] = []
    forms, alphas, normals = Subspace.zero(20), Subspace.zero(6), Subspace.zero(6)

    def consider(w: Multivector, report: OrbitReport) -> None:
        nonlocal forms, alphas, normals
        if report.o5 is None:
            return
        f = Subspace.span([w.coordinates()], 20) + forms
        a = report.wedge_kernel + alphas
        h = report.contraction_kernel + normals
        if (f.dim, a.dim, h.dim) == (forms.dim + 1, alphas.dim + 1, normals.dim + 1):
            forms, alphas, normals = f, a, h
            chosen.append((w, report.o5))

    for w, report in zip(maps.elements, maps.reports):
        consider(w, report)
        if len(chosen) == 6:
            return chosen
    basis = center.elements()
    for _ in range(BASIS_ATTEMPTS):
        w = rng.combination(basis)
        report = classify_orbit(w)
        consider(w, report)
        if len(chosen) == 6:
            return chosen
    return chosen


def recover_symplectic(center: Center, seed: int = 0) -> SelfAdjointVerdict:
    """Decide whether a center of 3-forms in dimension 6 is self-adjoint and recover σ.

    Centers of dimension at most 5 give degree-one evidence without a solve. A 6-dimensional
    center is first screened through its vertex maps, then a basis ω_i with independent
    α_i and A_i is chosen and α_i∧σ = c_i·ω_i is solved for σ and the c_i. Larger centers
    are decided by solving for every σ with σ∧V inside the center.

    Args:
    ----
        center (Center): A center of 3-forms on a 6-dimensional space.
        seed (int): Seed of the sampling stream. Defaults to 0.

    Returns:
    -------
        SelfAdjointVerdict: The verdict with its certificate.
    """
    if (center.n, center.m) != (6, 3):
        msg = f"recover_symplectic decides 3-forms in dimension 6, got grade {center.m} in {center.n}"
        raise UnsupportedShapeError(msg)
    rng = Lcg64(seed)
    if center.dim <= 5:
        return SelfAdjointVerdict(
            VerdictStatus.DEGREE_ONE_EVIDENCE, VerdictRoute.SHAPE, reason=DegreeOneReason.SMALL_CENTER
        )
    if center.dim > 6:
        return _containment_verdict(center, rng)

    maps = vertex_maps(center, seed=derive_seed(seed, 0))
    labels = tuple(r.label for r in maps.reports[: center.dim])
    if maps.witness is not None and maps.witness_report is not None:
        return SelfAdjointVerdict(
            VerdictStatus.REFUTED_BY_ORBIT,
            VerdictRoute.VERTEX,
            witness=maps.witness,
            witness_label=maps.witness_report.label,
            labels=labels,
        )
    if not maps.e_spans or not maps.f_spans:
        reason = DegreeOneReason.E_DEGENERATE if not maps.e_spans else DegreeOneReason.F_DEGENERATE
        return SelfAdjointVerdict(
            VerdictStatus.DEGREE_ONE_EVIDENCE,
            VerdictRoute.VERTEX,
            reason=reason,
            labels=labels,
            e_spans=maps.e_spans,
            f_spans=maps.f_spans,
        )
    chosen = _select_basis(maps, center, rng)
    if len(chosen) < 6:
        logger.info(f"Only {len(chosen)} elements with independent vertices found")
        return SelfAdjointVerdict(
            VerdictStatus.DEGREE_ONE_EVIDENCE,
            VerdictRoute.VERTEX,
            reason=DegreeOneReason.NO_VERTEX_BASIS,
            labels=labels,
            e_spans=True,
            f_spans=True,
        )

    # unknowns: the 15 coefficients of σ, then c_1..c_6
    pairs = basis_index_sets(6, 2)
    rows: list[list[Fraction]] = []
    for i, (w, data) in enumerate(chosen):
        a = data.alpha_vector
        blocks = [wedge(a, Multivector.monomial(6, p)).coordinates() for p in pairs]
        target = w.coordinates()
        for r in range(len(target)):
            scales = [Fraction(0)] * 6
            scales[i] = -target[r]
            rows.append([b[r] for b in blocks] + scales)
    solutions = kernel(Matrix.from_rows(rows, cols=len(pairs) + 6))
    sigmas = [
        s
        for s in (Multivector(6, 2, dict(zip(pairs, v[: len(pairs)]))) for v in solutions.vectors())
        if not s.is_zero
    ]
    logger.debug(f"Vertex solve: {solutions.dim}-dimensional solution space")
    candidates = sigmas + ([rng.combination(sigmas) for _ in range(SOLUTION_SAMPLES)] if sigmas else [])
    for sigma in candidates:
        if pfaffian(skew_matrix(sigma)) and contains_sigma_wedge(center, sigma, 3):
            return SelfAdjointVerdict(
                VerdictStatus.SELF_ADJOINT,
                VerdictRoute.VERTEX,
                sigma=sigma.normalized(),
                labels=labels,
                e_spans=True,
                f_spans=True,
                solution_dim=solutions.dim,
            )
    return SelfAdjointVerdict(
        VerdictStatus.REFUTED_BY_SOLVE,
        VerdictRoute.VERTEX,
        labels=labels,
        e_spans=True,
        f_spans=True,
        solution_dim=solutions.dim,
    )


def detect_self_adjoint(center: Center, seed: int = 0) -> SelfAdjointVerdict:
    """Self-adjointness verdict for points in dimension 4 (m=2) and 3-forms in dimension 6.

    Raises:
    ------
        UnsupportedShapeError: For any other (m, n).
    """
    match (center.m, center.n):
        case (2, 4):
            return _containment_verdict(center, Lcg64(seed))
        case (3, 6):
            return recover_symplectic(center, seed)
        case _:
            msg = f"Self-adjointness is decided for (m, n) in {{(2, 4), (3, 6)}}, got ({center.m}, {center.n})"
            raise UnsupportedShapeError(msg)


def sigma_wedge_center(sigma: Multivector, m: int = 3) -> Center:
    """The center spanned by σ∧b for all (m-2)-vectors b."""
    return Center.span(
        [wedge(sigma, Multivector.monomial(sigma.dim, idx)) for idx in basis_index_sets(sigma.dim, m - 2)],
        n=sigma.dim,
        m=m,
    )


#####################################
#                                   #
#           DOUBLE COVER            #
#                                   #
#####################################


class TrialResult(NamedTuple):
    index: int
    passed: bool
    lagrangian: bool
    center_hit: bool = False


class DoubleCoverReport(NamedTuple):
    trials: tuple[TrialResult, ...]

    @property
    def passes(self) -> int:
        return sum(t.passed for t in self.trials)

    @property
    def failures(self) -> int:
        return len(self.trials) - self.passes

    @property
    def lagrangian(self) -> int:
        return sum(t.lagrangian for t in self.trials)


def verify_double_cover(center: Center, sigma: SymplecticForm, trials: int, seed: int) -> DoubleCoverReport:
    """Check π_Z(Λ^∠) = π_Z(Λ) on seeded random middle-dimensional planes Λ.

    Each trial draws from its own derived stream, so a trial's outcome does not depend on
    the others.
    """
    n, m = center.n, center.m
    if n != 2 * m or sigma.dim != n:
        msg = f"Double cover needs a middle-dimensional center and a form on the same space, got m={m}, n={n}"
        raise DimensionMismatchError(msg)
    results = []
    for index in range(trials):
        rng = Lcg64(derive_seed(seed, index))
        plane = rng.subspace(n, m)
        partner = skew_complement(plane, sigma)
        lagrangian = partner == plane
        try:
            passed = project(pluecker_of(plane), center) == project(pluecker_of(partner), center)
        except CenterHitError:
            results.append(TrialResult(index, False, lagrangian, center_hit=True))
            continue
        if not passed:
            logger.info(f"Double cover fails on trial {index}")
        results.append(TrialResult(index, passed, lagrangian))
    return DoubleCoverReport(tuple(sorted(results)))


def perturbed_center(center: Center, rng: Lcg64, bound: int = 3) -> Center:
    """Replace the last canonical basis element by a random combination leaving the center."""
    basis = center.elements()
    outside = [
        Multivector.from_coordinates(center.n, center.m, v) for v in center.space.annihilator().vectors()
    ]
    while True:
        replacement = basis[-1] + linear_combination(rng.vector(len(outside), bound), outside)
        candidate = Center.span(basis[:-1] + [replacement])
        if candidate.dim == center.dim and candidate != center:
            return candidate
