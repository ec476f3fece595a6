"""Orbits of 3-forms on a 6-dimensional space.

There are four orbits of nonzero 3-forms up to scale:

- O0: the generic forms, such as e123 + e456.
- O1: the tangent directions, such as e126 + e135 + e234.
- O5: forms α∧σ with σ an indecomposable 2-form, such as e1∧(e23 + e45).
- O10: decomposable forms, such as e123.

They are told apart by the kernel of v ↦ v∧ω and by the scalar λ with K² = λ·I, where K
is the endomorphism v* ↦ (v*⌟ω)∧ω read back in V* through the top pairing.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from pluckx.exactla import Matrix, Subspace, kernel, solve
from pluckx.exalg import Multivector, basis_index_sets, contract, top_pairing, wedge
from pluckx.exceptions import (
    DependentVectorsError,
    DimensionMismatchError,
    GradeError,
    InconsistentStateError,
    OrbitError,
)
from pluckx.grass import SymplecticForm, contraction_map, skew_complement, wedge_map
from pluckx.logger import logger


class OrbitLabel(str, enum.Enum):
    O0 = "O0"
    O1 = "O1"
    O5 = "O5"
    O10 = "O10"


class LineType(str, enum.Enum):
    TYPE1 = "Type1"
    TYPE2 = "Type2"
    TYPE3 = "Type3"


NORMAL_FORMS: dict[OrbitLabel, Multivector] = {
    OrbitLabel.O0: Multivector(6, 3, {(1, 2, 3): 1, (4, 5, 6): 1}),
    OrbitLabel.O1: Multivector(6, 3, {(1, 2, 6): 1, (1, 3, 5): 1, (2, 3, 4): 1}),
    OrbitLabel.O5: Multivector(6, 3, {(1, 2, 3): 1, (1, 4, 5): 1}),
    OrbitLabel.O10: Multivector(6, 3, {(1, 2, 3): 1}),
}

# (λ, µ) points of a pencil λ·w1 + µ·w2 checked before a line is classified
PENCIL_SAMPLES: tuple[tuple[int, int], ...] = (
    (1, 0),
    (0, 1),
    (1, 1),
    (1, -1),
    (1, 2),
    (2, 1),
    (1, -2),
    (2, -1),
    (1, 3),
    (3, -2),
)


@dataclass(frozen=True)
class HitchinData:
    K: Matrix  # noqa: N815
    lam: Fraction


@dataclass(frozen=True)
class O5Data:
    """Certificate ω = α∧σ of a form in O5.

    ``alpha`` is the line ker(∧ω), ``hyperplane`` the annihilator of ker(⌟ω) and ``sigma``
    the representative with no term involving the pivot coordinate of ``alpha``.
    """

    alpha: Subspace
    hyperplane: Subspace
    sigma: Multivector

    @property
    def alpha_vector(self) -> Multivector:
        return Multivector.vector(self.alpha.vectors()[0])

    @property
    def pivot(self) -> int:
        return self.alpha.pivots[0] + 1


@dataclass(frozen=True)
class OrbitReport:
    label: OrbitLabel
    wedge_kernel: Subspace
    contraction_kernel: Subspace
    hitchin: HitchinData
    o5: O5Data | None = None


class LineReport(NamedTuple):
    line_type: LineType
    first: O5Data
    second: O5Data
    alpha: Subspace | None = None
    hyperplane: Subspace | None = None
    sigma: Multivector | None = None
    alpha_vectors: tuple[Multivector, Multivector] | None = None


def _require_trivector(w: Multivector) -> None:
    if w.grade != 3:
        msg = f"Expected a 3-form, got grade {w.grade}"
        raise GradeError(msg)
    if w.dim != 6:
        msg = f"Orbit data is defined in dimension 6, got {w.dim}"
        raise DimensionMismatchError(msg)


def hitchin(w: Multivector) -> HitchinData:
    """K[j][i] = top_pairing((e_i*⌟w)∧w, e_j) and the scalar λ with K² = λ·I."""
    _require_trivector(w)
    n = w.dim
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n + 1):
        image = wedge(contract(Multivector.monomial(n, [i], dual=not w.dual), w), w)
        if image.is_zero:
            continue
        for j in range(1, n + 1):
            rows[j - 1][i - 1] = top_pairing(image, Multivector.monomial(n, [j], dual=w.dual))
    k = Matrix.from_rows(rows, cols=n)
    square = k @ k
    lam = square[0, 0]
    if square != Matrix.identity(n) * lam:
        msg = f"K² is not scalar for {w}"
        raise InconsistentStateError(msg)
    return HitchinData(k, lam)


def classify_orbit(w: Multivector) -> OrbitReport:
    """Orbit label of a nonzero 3-form on a 6-dimensional space, with its certificates.

    Args:
    ----
        w (Multivector): A nonzero 3-form with ``dim == 6``.

    Returns:
    -------
        OrbitReport: The label, the kernels of ∧w and ⌟w, the Hitchin data and, for O5,
        the decomposition ω = α∧σ.

    Example:
    -------
        ```python
        classify_orbit(NORMAL_FORMS[OrbitLabel.O1]).label  # OrbitLabel.O1
        ```
    """
    _require_trivector(w)
    if w.is_zero:
        msg = "The zero form lies in no orbit"
        raise OrbitError(msg)
    wedge_kernel = kernel(wedge_map(w))
    contraction_kernel = kernel(contraction_map(w))
    data = hitchin(w)
    match wedge_kernel.dim:
        case 3:
            label = OrbitLabel.O10
        case 1:
            label = OrbitLabel.O5
        case 0:
            label = OrbitLabel.O0 if data.lam else OrbitLabel.O1
        case other:
            msg = f"A nonzero 3-form cannot have a {other}-dimensional wedge kernel"
            raise InconsistentStateError(msg)
    logger.debug(f"{w}: wedge kernel of dimension {wedge_kernel.dim}, lambda={data.lam} -> {label.value}")
    report = OrbitReport(label, wedge_kernel, contraction_kernel, data)
    if label is OrbitLabel.O5:
        report = OrbitReport(label, wedge_kernel, contraction_kernel, data, _decompose(w, report))
    return report


def _decompose(w: Multivector, report: OrbitReport) -> O5Data:
    alpha = report.wedge_kernel
    hyperplane = report.contraction_kernel.annihilator()
    a = Multivector.vector(alpha.vectors()[0])
    p = alpha.pivots[0] + 1
    pairs = [idx for idx in basis_index_sets(w.dim, 2) if p not in idx]
    columns = [wedge(a, Multivector.monomial(w.dim, idx)).coordinates() for idx in pairs]
    solution = solve(Matrix.from_columns(columns), w.coordinates())
    if solution is None:
        msg = f"No 2-form σ with α∧σ = {w}"
        raise InconsistentStateError(msg)
    sigma = Multivector(w.dim, 2, dict(zip(pairs, solution)))
    if wedge(sigma, sigma).is_zero or not alpha.intersection(hyperplane).dim:
        msg = f"O5 certificate of {w} is inconsistent"
        raise InconsistentStateError(msg)
    return O5Data(alpha, hyperplane, sigma)


def o5_decompose(w: Multivector) -> O5Data:
    """α, A and σ with w = α∧σ for a form in O5.

    Raises:
    ------
        OrbitError: If w is not in O5.
    """
    report = classify_orbit(w)
    if report.o5 is None:
        msg = f"{w} lies in {report.label.value}, not O5"
        raise OrbitError(msg)
    return report.o5


def in_schubert(plane: Subspace, alpha: Subspace, hyperplane: Subspace) -> bool:
    """True when alpha ⊆ plane ⊆ hyperplane."""
    if (plane.dim, alpha.dim, hyperplane.dim) != (3, 1, 5):
        msg = f"Expected dimensions (3, 1, 5), got ({plane.dim}, {alpha.dim}, {hyperplane.dim})"
        raise DimensionMismatchError(msg)
    if not hyperplane.contains_subspace(alpha):
        msg = "The line alpha is not contained in the hyperplane"
        raise DimensionMismatchError(msg)
    return plane.contains_subspace(alpha) and hyperplane.contains_subspace(plane)


def schubert_partner(plane: Subspace, data: O5Data) -> Subspace:
    """The plane α + (Λ/α)^∠ built inside A/α, where σ restricts to a symplectic form.

    A/α is modelled by the complement U of α in A cut out by the pivot coordinate of α.
    """
    if not in_schubert(plane, data.alpha, data.hyperplane):
        msg = "The plane does not lie in the Schubert variety of the form"
        raise OrbitError(msg)
    n = plane.ambient
    pivot = data.pivot - 1
    section = Subspace.span([[1 if j == pivot else 0 for j in range(n)]], n).annihilator()
    complement = data.hyperplane.intersection(section)
    u = complement.vectors()
    pairs = basis_index_sets(len(u), 2)
    columns = [
        wedge(Multivector.vector(u[i - 1]), Multivector.vector(u[j - 1])).coordinates() for i, j in pairs
    ]
    solution = solve(Matrix.from_columns(columns), data.sigma.coordinates())
    if solution is None:
        msg = "σ does not lie in the exterior square of the hyperplane"
        raise InconsistentStateError(msg)
    form = SymplecticForm(Multivector(len(u), 2, dict(zip(pairs, solution))))
    local = [complement.coordinates_of(v) for v in plane.intersection(complement).vectors()]
    partner_local = skew_complement(Subspace.span(local, len(u)), form)
    embed = Matrix.from_rows(u).T
    vectors = [embed.apply(coords) for coords in partner_local.vectors()]
    return Subspace.span(vectors + data.alpha.vectors(), n)


def classify_line(first: Multivector, second: Multivector) -> LineReport:
    """Type of the line through two O5 forms, assuming the whole line stays in O5.

    Only the fixed ``PENCIL_SAMPLES`` of the line are checked.

    Raises:
    ------
        DependentVectorsError: If the forms are proportional.
        OrbitError: If a sampled point of the line leaves O5.
    """
    if first.is_zero or second.is_zero or first.is_proportional(second):
        msg = "The two forms do not span a line"
        raise DependentVectorsError(msg)
    for lam, mu in PENCIL_SAMPLES:
        sample = first * lam + second * mu
        label = classify_orbit(sample).label
        if label is not OrbitLabel.O5:
            msg = f"Pencil point {lam}·w1 + {mu}·w2 lies in {label.value}, not O5"
            raise OrbitError(msg)
    d1, d2 = o5_decompose(first), o5_decompose(second)
    if d1.alpha == d2.alpha:
        return LineReport(LineType.TYPE1, d1, d2, alpha=d1.alpha)
    if d1.hyperplane == d2.hyperplane:
        return LineReport(LineType.TYPE3, d1, d2, hyperplane=d1.hyperplane)
    sigma, scale = _common_sigma(d1.alpha_vector, first, d2.alpha_vector, second)
    logger.debug(f"Type2 line with common 2-form {sigma}")
    return LineReport(
        LineType.TYPE2,
        d1,
        d2,
        sigma=sigma,
        alpha_vectors=(d1.alpha_vector, d2.alpha_vector * (1 / scale)),
    )


def _common_sigma(
    a1: Multivector, w1: Multivector, a2: Multivector, w2: Multivector
) -> tuple[Multivector, Fraction]:
    """σ and c ≠ 0 with a1∧σ = w1 and a2∧σ = c·w2."""
    pairs = basis_index_sets(w1.dim, 2)
    size = len(basis_index_sets(w1.dim, 3))
    columns = []
    for idx in pairs:
        e = Multivector.monomial(w1.dim, idx)
        columns.append(wedge(a1, e).coordinates() + wedge(a2, e).coordinates())
    columns.append((Fraction(0),) * size + tuple(-c for c in w2.coordinates()))
    solution = solve(Matrix.from_columns(columns), w1.coordinates() + (Fraction(0),) * size)
    if solution is None or not solution[-1]:
        msg = "The two O5 forms share no common 2-form"
        raise InconsistentStateError(msg)
    return Multivector(w1.dim, 2, dict(zip(pairs, solution[:-1]))), solution[-1]
