"""Exterior algebra over Q with sparse, lexicographically ordered terms.

Index sets are 1-based and strictly increasing, so ``(1, 2, 3)`` is e_123. A multivector
flagged ``dual`` lives in the exterior power of V* and is written with e*_I.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

from pluckx.exactla import ONE, ZERO, Matrix, ScalarLike, to_scalar
from pluckx.exceptions import DimensionMismatchError, GradeError

IndexSet = tuple[int, ...]


def basis_index_sets(n: int, k: int) -> list[IndexSet]:
    """All grade-k index sets of an n-dimensional space in lexicographic order."""
    return list(itertools.combinations(range(1, n + 1), k))


def sort_sign(indices: Sequence[int]) -> int:
    """Sign of the permutation sorting ``indices``; 0 when an index repeats."""
    if len(set(indices)) != len(indices):
        return 0
    inversions = sum(1 for a, b in itertools.combinations(indices, 2) if a > b)
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class Multivector:
    """Homogeneous element of the k-th exterior power of V (or V* when ``dual``).

    Zero coefficients are dropped and terms are kept in lexicographic order of their index
    sets, so equal multivectors always compare and serialize identically.
    """

    dim: int
    grade: int
    terms: Mapping[IndexSet, Fraction] = field(default_factory=dict)
    dual: bool = False

    def __post_init__(self) -> None:
        if self.grade < 0:
            msg = f"Negative grade {self.grade}"
            raise GradeError(msg)
        clean: dict[IndexSet, Fraction] = {}
        for idx, coef in sorted(self.terms.items()):
            c = to_scalar(coef)
            if not c:
                continue
            idx = tuple(idx)
            if len(idx) != self.grade or any(i < 1 or i > self.dim for i in idx) or list(idx) != sorted(set(idx)):
                msg = f"Index set {idx} is not a grade-{self.grade} monomial of a {self.dim}-dimensional space"
                raise GradeError(msg)
            clean[idx] = c
        object.__setattr__(self, "terms", clean)

    def __hash__(self) -> int:
        return hash((self.dim, self.grade, self.dual, tuple(self.terms.items())))

    @classmethod
    def zero(cls, dim: int, grade: int, *, dual: bool = False) -> Multivector:
        return cls(dim, grade, {}, dual)

    @classmethod
    def scalar(cls, dim: int, value: ScalarLike = 1, *, dual: bool = False) -> Multivector:
        return cls(dim, 0, {(): to_scalar(value)}, dual)

    @classmethod
    def monomial(cls, dim: int, idx: Sequence[int], coef: ScalarLike = 1, *, dual: bool = False) -> Multivector:
        """Signed monomial; unsorted indices are sorted with the permutation sign."""
        sign = sort_sign(idx)
        return cls(dim, len(idx), {tuple(sorted(idx)): to_scalar(coef) * sign} if sign else {}, dual)

    @classmethod
    def vector(cls, coords: Sequence[ScalarLike], *, dual: bool = False) -> Multivector:
        return cls(len(coords), 1, {(i + 1,): to_scalar(c) for i, c in enumerate(coords)}, dual)

    @classmethod
    def from_coordinates(
        cls, dim: int, grade: int, coords: Sequence[ScalarLike], *, dual: bool = False
    ) -> Multivector:
        basis = basis_index_sets(dim, grade)
        if len(coords) != len(basis):
            msg = f"Grade-{grade} multivectors in dimension {dim} have {len(basis)} coordinates, got {len(coords)}"
            raise DimensionMismatchError(msg)
        return cls(dim, grade, dict(zip(basis, (to_scalar(c) for c in coords))), dual)

    def coordinates(self) -> tuple[Fraction, ...]:
        """Coefficient vector in the lexicographic monomial basis."""
        return tuple(self.terms.get(idx, ZERO) for idx in basis_index_sets(self.dim, self.grade))

    def coefficient(self, idx: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(idx), ZERO)

    def items(self) -> Iterator[tuple[IndexSet, Fraction]]:
        return iter(self.terms.items())

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def first_coefficient(self) -> Fraction:
        return next(iter(self.terms.values()), ZERO)

    def normalized(self) -> Multivector:
        """Projective representative with first nonzero coefficient equal to one."""
        if self.is_zero:
            return self
        return self * (ONE / self.first_coefficient())

    def is_proportional(self, other: Multivector) -> bool:
        self._require_compatible(other)
        return self.normalized() == other.normalized()

    def _require_compatible(self, other: Multivector, *, same_grade: bool = True) -> None:
        if self.dim != other.dim:
            msg = f"Dimension mismatch: {self.dim} vs {other.dim}"
            raise DimensionMismatchError(msg)
        if self.dual != other.dual:
            msg = "Cannot combine a multivector with a dual multivector here"
            raise DimensionMismatchError(msg)
        if same_grade and self.grade != other.grade:
            msg = f"Grade mismatch: {self.grade} vs {other.grade}"
            raise GradeError(msg)

    def __add__(self, other: Multivector) -> Multivector:
        self._require_compatible(other)
        terms = dict(self.terms)
        for idx, c in other.terms.items():
            terms[idx] = terms.get(idx, ZERO) + c
        return Multivector(self.dim, self.grade, terms, self.dual)

    def __neg__(self) -> Multivector:
        return Multivector(self.dim, self.grade, {i: -c for i, c in self.terms.items()}, self.dual)

    def __sub__(self, other: Multivector) -> Multivector:
        return self + (-other)

    def __mul__(self, scalar: ScalarLike) -> Multivector:
        c = to_scalar(scalar)
        return Multivector(self.dim, self.grade, {i: c * x for i, x in self.terms.items()}, self.dual)

    __rmul__ = __mul__

    def __xor__(self, other: Multivector) -> Multivector:
        return wedge(self, other)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        star = "*" if self.dual else ""
        parts = []
        for idx, c in self.terms.items():
            name = f"e{''.join(map(str, idx)) if self.dim < 10 else '_'.join(map(str, idx))}{star}" if idx else "1"
            mag = abs(c)
            body = name if mag == 1 and idx else f"{mag}*{name}" if idx else str(mag)
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def linear_combination(coefficients: Iterable[ScalarLike], elements: Sequence[Multivector]) -> Multivector:
    """Sum c_i·w_i over a non-empty list of multivectors of equal shape."""
    if not elements:
        msg = "Linear combination of an empty list"
        raise DimensionMismatchError(msg)
    total = Multivector.zero(elements[0].dim, elements[0].grade, dual=elements[0].dual)
    for c, w in zip(coefficients, elements):
        total = total + w * c
    return total


def wedge(a: Multivector, b: Multivector) -> Multivector:
    """Exterior product; grade overflow yields the zero multivector of the summed grade.

    Example:
    -------
        ```python
        e1 = Multivector.monomial(6, [1])
        wedge(e1, Multivector.monomial(6, [2, 3]))  # e123
        ```
    """
    a._require_compatible(b, same_grade=False)
    terms: dict[IndexSet, Fraction] = {}
    if a.grade + b.grade <= a.dim:
        for i, x in a.terms.items():
            for j, y in b.terms.items():
                sign = sort_sign(i + j)
                if sign:
                    key = tuple(sorted(i + j))
                    terms[key] = terms.get(key, ZERO) + (x * y if sign > 0 else -x * y)
    return Multivector(a.dim, a.grade + b.grade, terms, a.dual)


def wedge_all(elements: Sequence[Multivector]) -> Multivector:
    if not elements:
        msg = "Wedge of an empty list"
        raise DimensionMismatchError(msg)
    result = elements[0]
    for w in elements[1:]:
        result = wedge(result, w)
    return result


def contract(phi: Multivector, w: Multivector) -> Multivector:
    """Interior product phi⌟w of a grade-1 element of the opposite variance into w.

    phi⌟(v_1∧…∧v_k) = Σ_i (-1)^(i-1) phi(v_i) v_1∧…v̂_i…∧v_k.
    """
    if phi.grade != 1:
        msg = f"Contraction needs a grade-1 form, got grade {phi.grade}"
        raise GradeError(msg)
    if phi.dim != w.dim:
        msg = f"Dimension mismatch: {phi.dim} vs {w.dim}"
        raise DimensionMismatchError(msg)
    if phi.dual == w.dual:
        msg = "Contraction pairs V* with V; both operands have the same variance"
        raise DimensionMismatchError(msg)
    if w.grade == 0:
        return Multivector.zero(w.dim, 0, dual=w.dual)
    weights = {idx[0]: c for idx, c in phi.terms.items()}
    terms: dict[IndexSet, Fraction] = {}
    for idx, c in w.terms.items():
        for pos, i in enumerate(idx):
            if i in weights:
                key = idx[:pos] + idx[pos + 1 :]
                term = weights[i] * c
                terms[key] = terms.get(key, ZERO) + (-term if pos % 2 else term)
    return Multivector(w.dim, w.grade - 1, terms, w.dual)


def interior(indices: Sequence[int], w: Multivector) -> Multivector:
    """Iterated contraction by the coordinate forms of ``indices``, first index applied first."""
    result = w
    for i in indices:
        result = contract(Multivector.monomial(w.dim, [i], dual=not w.dual), result)
    return result


def top_pairing(a: Multivector, b: Multivector) -> Fraction:
    """Coefficient of e_1..n in a∧b for complementary grades."""
    if a.grade + b.grade != a.dim:
        msg = f"Grades {a.grade} and {b.grade} are not complementary in dimension {a.dim}"
        raise GradeError(msg)
    return wedge(a, b).coefficient(tuple(range(1, a.dim + 1)))


def pairing(xi: Multivector, w: Multivector) -> Fraction:
    """Natural pairing of the k-th exterior powers of V* and V, dual basis to dual basis."""
    if xi.dim != w.dim or xi.grade != w.grade:
        msg = "Natural pairing needs equal dimension and grade"
        raise DimensionMismatchError(msg)
    if xi.dual == w.dual:
        msg = "Natural pairing needs one dual and one primal operand"
        raise DimensionMismatchError(msg)
    return sum((c * w.coefficient(idx) for idx, c in xi.terms.items()), ZERO)


def act(g: Matrix, w: Multivector) -> Multivector:
    """Induced action of g in GL(V); dual multivectors transform by the inverse transpose.

    The coefficient of e_I in g·e_J is the minor of g on rows I and columns J.
    """
    if not g.is_square or g.rows != w.dim:
        msg = f"Cannot act with a {g.rows}x{g.cols} matrix on dimension {w.dim}"
        raise DimensionMismatchError(msg)
    h = g.inverse().T if w.dual else g
    terms: dict[IndexSet, Fraction] = {}
    basis = basis_index_sets(w.dim, w.grade)
    for j, c in w.terms.items():
        cols = [x - 1 for x in j]
        for i in basis:
            minor = h.submatrix([x - 1 for x in i], cols).det() if i else ONE
            if minor:
                terms[i] = terms.get(i, ZERO) + c * minor
    return Multivector(w.dim, w.grade, terms, w.dual)


def skew_matrix(sigma: Multivector) -> Matrix:
    """Skew matrix S of a 2-form, with S[i][j] the coefficient of e_(i+1)(j+1) for i < j."""
    if sigma.grade != 2:
        msg = f"Expected a 2-form, got grade {sigma.grade}"
        raise GradeError(msg)
    n = sigma.dim
    rows = [[ZERO] * n for _ in range(n)]
    for (i, j), c in sigma.terms.items():
        rows[i - 1][j - 1] = c
        rows[j - 1][i - 1] = -c
    return Matrix.from_rows(rows, cols=n)


def from_skew_matrix(matrix: Matrix, *, dual: bool = False) -> Multivector:
    n = matrix.rows
    return Multivector(n, 2, {(i + 1, j + 1): matrix[i, j] for i in range(n) for j in range(i + 1, n)}, dual)
