"""Linear ordinary differential operators with polynomial solutions and their Wronski maps.

An operator is given either by a polynomial fundamental system f_1..f_n or by its monic
coefficient list. The curve c(t)∧c'(t)∧…∧c^(m-1)(t), with c(t) = Σ f_i(t)·f_i*, has the
m×m minors of the derivative matrix as coordinates. Its coefficients span X, and the
annihilator Z of X is the center through which the Wronski map factors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from pluckx.exactla import Matrix, Poly, PolyMatrix, RationalFunction, Subspace
from pluckx.exalg import IndexSet, basis_index_sets
from pluckx.exceptions import DependentVectorsError, DimensionMismatchError, GradeError, ZeroPolynomialError
from pluckx.grass import Center


def derivative_matrix(polys: Sequence[Poly], rows: int) -> PolyMatrix:
    """D[i][j] = f_j^(i) for i < rows."""
    return PolyMatrix.from_rows([[f.derivative(i) for f in polys] for i in range(rows)], cols=len(polys))


def wronskian(polys: Sequence[Poly]) -> Poly:
    """det(f_j^(i)) for i, j < m.

    Example:
    -------
        ```python
        wronskian([Poly((0, 0, 1)), Poly((0, 0, 0, 1))])  # t^4
        ```
    """
    if not polys:
        msg = "Wronskian of an empty list"
        raise DimensionMismatchError(msg)
    return derivative_matrix(polys, len(polys)).det()


@dataclass(frozen=True)
class FundamentalSystem:
    """Basis f_1..f_n of the polynomial solution space of an order-n operator."""

    polys: tuple[Poly, ...]

    def __post_init__(self) -> None:
        if not self.polys:
            msg = "A fundamental system needs at least one solution"
            raise DependentVectorsError(msg)
        if wronskian(self.polys).is_zero:
            msg = "The Wronskian of the fundamental system vanishes identically"
            raise DependentVectorsError(msg)

    @classmethod
    def monomials(cls, exponents: Sequence[int]) -> FundamentalSystem:
        return cls(tuple(Poly.monomial(e) for e in exponents))

    @property
    def n(self) -> int:
        return len(self.polys)

    def combine(self, coefficients: Sequence[Fraction]) -> Poly:
        """Σ c_j f_j."""
        total = Poly()
        for c, f in zip(coefficients, self.polys):
            total = total + f.scale(c)
        return total


@dataclass(frozen=True)
class Odo:
    """sign·(x^(n) + a_(n-1) x^(n-1) + … + a_0 x) with rational-function coefficients a_0..a_(n-1)."""

    coeffs: tuple[RationalFunction, ...]
    sign: int = 1

    def __post_init__(self) -> None:
        if self.sign not in {1, -1}:
            msg = f"Operator sign must be 1 or -1, got {self.sign}"
            raise DimensionMismatchError(msg)
        object.__setattr__(self, "coeffs", tuple(RationalFunction.of(c) for c in self.coeffs))

    @classmethod
    def from_polys(cls, coeffs: Sequence[Poly | int], sign: int = 1) -> Odo:
        return cls(tuple(RationalFunction.of(c) for c in coeffs), sign)

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def coefficient(self, i: int) -> RationalFunction:
        """a_i, with a_n = 1."""
        return RationalFunction.of(1) if i == self.order else self.coeffs[i]

    def __call__(self, f: Poly) -> RationalFunction:
        total = RationalFunction.of(f.derivative(self.order))
        for i, a in enumerate(self.coeffs):
            total = total + a * f.derivative(i)
        return total * self.sign


def formal_adjoint(op: Odo) -> Odo:
    """L*x = Σ (-1)^i (a_i x)^(i), brought to monic form with the leading sign kept in ``sign``.

    The coefficient of x^(j) is Σ_(i≥j) (-1)^i C(i, i-j) a_i^(i-j), and the leading one is (-1)^n.
    """
    n = op.order
    leading = -1 if n % 2 else 1
    coeffs = []
    for j in range(n):
        total = RationalFunction.of(0)
        for i in range(j, n + 1):
            term = op.coefficient(i).derivative(i - j) * math.comb(i, i - j)
            total = total - term if i % 2 else total + term
        coeffs.append(total * leading)
    return Odo(tuple(coeffs), op.sign * leading)


def mu_conjugate(op: Odo, mu: RationalFunction | Poly | int) -> Odo:
    """(1/μ)·L(μx); the coefficient of x^(j) is Σ_(i≥j) a_i C(i, i-j) μ^(i-j)/μ."""
    mu = RationalFunction.of(mu)
    if mu.is_zero:
        msg = "Conjugation by the zero function"
        raise ZeroPolynomialError(msg)
    n = op.order
    coeffs = []
    for j in range(n):
        total = RationalFunction.of(0)
        for i in range(j, n + 1):
            total = total + op.coefficient(i) * mu.derivative(i - j) * math.comb(i, i - j)
        coeffs.append(total / mu)
    return Odo(tuple(coeffs), op.sign)


def is_self_adjoint_op(op: Odo) -> bool:
    return formal_adjoint(op) == op


def odo_from_fundamental_system(fs: FundamentalSystem) -> Odo:
    """The monic operator Wr(f_1, …, f_n, x)/Wr(f_1, …, f_n).

    Expanding along the x column, a_i = (-1)^(i+n)·M_i/W where M_i drops derivative row i.
    """
    n = fs.n
    full = derivative_matrix(fs.polys, n + 1)
    w = wronskian(fs.polys)
    coeffs = []
    for i in range(n):
        minor = full.submatrix([r for r in range(n + 1) if r != i], range(n)).det()
        a = RationalFunction(minor, w)
        coeffs.append(-a if (i + n) % 2 else a)
    return Odo(tuple(coeffs))


#####################################
#                                   #
#          WRONSKI CENTERS          #
#                                   #
#####################################


def _require_grade(m: int, n: int) -> None:
    if not 1 <= m <= n - 1:
        msg = f"m must lie in 1..{n - 1}, got {m}"
        raise GradeError(msg)


def wronski_minors(fs: FundamentalSystem, m: int) -> dict[IndexSet, Poly]:
    """Coordinates of c∧c'∧…∧c^(m-1): the m×m minors of the derivative matrix by column set."""
    _require_grade(m, fs.n)
    matrix = derivative_matrix(fs.polys, m)
    return {idx: matrix.submatrix(range(m), [i - 1 for i in idx]).det() for idx in basis_index_sets(fs.n, m)}


def wronski_coefficients(fs: FundamentalSystem, m: int) -> Matrix:
    """Matrix sending Plücker coordinates of a plane to the coefficients of its Wronskian.

    Row k holds the t^k coefficients of the minors, so its rows span X.
    """
    minors = wronski_minors(fs, m)
    degree = max(p.degree for p in minors.values())
    return Matrix.from_rows([[p.coefficient(k) for p in minors.values()] for k in range(degree + 1)], cols=len(minors))


class WronskiCenter(NamedTuple):
    x: Subspace
    center: Center


def build_center(fs: FundamentalSystem, m: int) -> WronskiCenter:
    """X in the m-th exterior power of V* and its annihilator Z under the natural pairing.

    Args:
    ----
        fs (FundamentalSystem): Polynomial basis of the solution space.
        m (int): Dimension of the planes, 1 <= m <= n - 1.

    Returns:
    -------
        WronskiCenter: X as a subspace of coefficient vectors and the center Z.

    Example:
    -------
        ```python
        build_center(FundamentalSystem.monomials(range(4)), 2).center.dim  # 1
        ```
    """
    coefficients = wronski_coefficients(fs, m)
    x = Subspace.span(coefficients.to_rows(), coefficients.cols)
    return WronskiCenter(x, Center(fs.n, m, x.annihilator()))


def wronski_map(fs: FundamentalSystem, m: int, plane: Subspace) -> Poly:
    """Wronskian of the solutions Σ_j v_j f_j picked out by the canonical basis of the plane."""
    if plane.ambient != fs.n or plane.dim != m:
        msg = f"Expected an {m}-plane in {fs.n} coordinates, got dimension {plane.dim} in {plane.ambient}"
        raise DimensionMismatchError(msg)
    return wronskian([fs.combine(v) for v in plane.vectors()])


def schubert_degree(m: int, n: int) -> int:
    """1!2!…(n-m-1)!·(m(n-m))! / (m!(m+1)!…(n-1)!), the degree of the Grassmannian of m-planes."""
    _require_grade(m, n)
    numerator = math.prod(math.factorial(i) for i in range(1, n - m)) * math.factorial(m * (n - m))
    denominator = math.prod(math.factorial(i) for i in range(m, n))
    return numerator // denominator
