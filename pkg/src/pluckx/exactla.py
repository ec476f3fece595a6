"""Exact linear algebra and univariate polynomials over the rationals.

Everything here is a frozen value type over `fractions.Fraction`: matrices, canonical
subspaces, polynomials, rational functions and polynomial matrices. Row reduction always
takes the first nonzero entry of a column as pivot, so canonical forms are reproducible.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

import sympy
from sympy import QQ, Rational

from pluckx.exceptions import (
    DimensionMismatchError,
    NotSkewSymmetricError,
    SingularMatrixError,
    ZeroPolynomialError,
)

Scalar = Fraction
ScalarLike = Union[int, Fraction, str]

ZERO = Fraction(0)
ONE = Fraction(1)

T = sympy.Symbol("t")


def to_scalar(value: ScalarLike) -> Fraction:
    """Coerces an exact value (int, Fraction or "p/q" string) to a Fraction.

    Floats are rejected: nothing in pluckx is allowed to round.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        msg = f"Not an exact scalar: {value!r}"
        raise TypeError(msg)
    return Fraction(value)


#####################################
#                                   #
#             MATRICES              #
#                                   #
#####################################


@dataclass(frozen=True)
class Matrix:
    """Dense rectangular matrix with exact entries, stored row-major."""

    rows: int
    cols: int
    data: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        data = tuple(to_scalar(x) for x in self.data)
        if len(data) != self.rows * self.cols:
            msg = f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(data)}"
            raise DimensionMismatchError(msg)
        object.__setattr__(self, "data", data)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[ScalarLike]], cols: int | None = None) -> Matrix:
        rows = [list(r) for r in rows]
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        if any(len(r) != width for r in rows):
            msg = "Rows of unequal length"
            raise DimensionMismatchError(msg)
        return cls(len(rows), width, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[ScalarLike]], rows: int | None = None) -> Matrix:
        return cls.from_rows(list(zip(*columns)), cols=len(columns)) if columns else cls.zeros(rows or 0, 0)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls.diagonal([ONE] * n)

    @classmethod
    def diagonal(cls, values: Sequence[ScalarLike]) -> Matrix:
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else ZERO for i in range(n) for j in range(n)))

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self.data[i * self.cols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.data[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple[Fraction, ...]:
        return self.data[j :: self.cols] if self.cols else ()

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def T(self) -> Matrix:  # noqa: N802
        return Matrix.from_rows([self.col(j) for j in range(self.cols)], cols=self.rows)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_zero(self) -> bool:
        return not any(self.data)

    @property
    def rank(self) -> int:
        return rref(self).rank

    def trace(self) -> Fraction:
        self._require_square()
        return sum((self[i, i] for i in range(self.rows)), ZERO)

    def _require_square(self) -> None:
        if not self.is_square:
            msg = f"Expected a square matrix, got {self.rows}x{self.cols}"
            raise DimensionMismatchError(msg)

    def _require_same_shape(self, other: Matrix) -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            msg = f"Shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            raise DimensionMismatchError(msg)

    def __add__(self, other: Matrix) -> Matrix:
        self._require_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.data, other.data)))

    def __sub__(self, other: Matrix) -> Matrix:
        self._require_same_shape(other)
        return Matrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.data, other.data)))

    def __neg__(self) -> Matrix:
        return Matrix(self.rows, self.cols, tuple(-a for a in self.data))

    def __mul__(self, scalar: ScalarLike) -> Matrix:
        c = to_scalar(scalar)
        return Matrix(self.rows, self.cols, tuple(c * a for a in self.data))

    __rmul__ = __mul__

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            msg = f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            raise DimensionMismatchError(msg)
        columns = [other.col(j) for j in range(other.cols)]
        data = []
        for i in range(self.rows):
            r = self.row(i)
            data.extend(sum((a * b for a, b in zip(r, c) if a and b), ZERO) for c in columns)
        return Matrix(self.rows, other.cols, tuple(data))

    def apply(self, vector: Sequence[ScalarLike]) -> tuple[Fraction, ...]:
        """Returns M·v for a coordinate vector v."""
        if len(vector) != self.cols:
            msg = f"Vector of length {len(vector)} does not fit a {self.rows}x{self.cols} matrix"
            raise DimensionMismatchError(msg)
        v = [to_scalar(x) for x in vector]
        return tuple(sum((a * b for a, b in zip(self.row(i), v) if a and b), ZERO) for i in range(self.rows))

    def hstack(self, other: Matrix) -> Matrix:
        if self.rows != other.rows:
            msg = "hstack needs equal row counts"
            raise DimensionMismatchError(msg)
        return Matrix.from_rows([self.row(i) + other.row(i) for i in range(self.rows)], cols=self.cols + other.cols)

    def vstack(self, other: Matrix) -> Matrix:
        if self.cols != other.cols:
            msg = "vstack needs equal column counts"
            raise DimensionMismatchError(msg)
        return Matrix(self.rows + other.rows, self.cols, self.data + other.data)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> Matrix:
        return Matrix.from_rows([[self[i, j] for j in col_idx] for i in row_idx], cols=len(col_idx))

    def det(self) -> Fraction:
        self._require_square()
        rows = self.to_rows()
        n = self.rows
        sign = ONE
        result = ONE
        for c in range(n):
            pivot = next((i for i in range(c, n) if rows[i][c]), None)
            if pivot is None:
                return ZERO
            if pivot != c:
                rows[c], rows[pivot] = rows[pivot], rows[c]
                sign = -sign
            p = rows[c][c]
            result *= p
            for i in range(c + 1, n):
                if rows[i][c]:
                    f = rows[i][c] / p
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
        return sign * result

    def inverse(self) -> Matrix:
        self._require_square()
        n = self.rows
        reduced = rref(self.hstack(Matrix.identity(n)))
        if reduced.pivots[:n] != tuple(range(n)) or reduced.rank < n:
            msg = "Matrix is not invertible"
            raise SingularMatrixError(msg)
        return reduced.matrix.submatrix(range(n), range(n, 2 * n))


class RowEchelon(NamedTuple):
    matrix: Matrix
    rank: int
    pivots: tuple[int, ...]


def rref(matrix: Matrix) -> RowEchelon:
    """Exact Gauss-Jordan reduction.

    Args:
    ----
        matrix (Matrix): Any matrix.

    Returns:
    -------
        RowEchelon: The reduced row echelon form, its rank and the pivot columns.

    Example:
    -------
        ```python
        rref(Matrix.from_rows([[2, 4], [1, 2]])).rank  # 1
        ```
    """
    rows = matrix.to_rows()
    pivots: list[int] = []
    r = 0
    for c in range(matrix.cols):
        if r == len(rows):
            break
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return RowEchelon(Matrix.from_rows(rows, cols=matrix.cols), r, tuple(pivots))


def kernel(matrix: Matrix) -> Subspace:
    """Right null space {v : M·v = 0} in canonical form."""
    reduced = rref(matrix)
    free = [c for c in range(matrix.cols) if c not in reduced.pivots]
    vectors = []
    for f in free:
        v = [ZERO] * matrix.cols
        v[f] = ONE
        for i, p in enumerate(reduced.pivots):
            v[p] = -reduced.matrix[i, f]
        vectors.append(v)
    return Subspace.span(vectors, matrix.cols)


def solve(matrix: Matrix, rhs: Sequence[ScalarLike]) -> tuple[Fraction, ...] | None:
    """Particular solution of M·x = b with every free variable set to zero, or None."""
    if len(rhs) != matrix.rows:
        msg = f"Right-hand side of length {len(rhs)} for {matrix.rows} equations"
        raise DimensionMismatchError(msg)
    augmented = matrix.hstack(Matrix.from_rows([[b] for b in rhs], cols=1))
    reduced = rref(augmented)
    if matrix.cols in reduced.pivots:
        return None
    x = [ZERO] * matrix.cols
    for i, p in enumerate(reduced.pivots):
        x[p] = reduced.matrix[i, matrix.cols]
    return tuple(x)


def pfaffian(matrix: Matrix) -> Fraction:
    """Exact Pfaffian by recursive expansion along the first row.

    Raises:
    ------
        NotSkewSymmetricError: If the matrix is not skew-symmetric of even size.
    """
    n = matrix.rows
    if not matrix.is_square or n % 2:
        msg = f"Pfaffian needs an even square matrix, got {matrix.rows}x{matrix.cols}"
        raise NotSkewSymmetricError(msg)
    if any(matrix[i, j] != -matrix[j, i] for i in range(n) for j in range(i, n)):
        msg = "Pfaffian input is not skew-symmetric"
        raise NotSkewSymmetricError(msg)
    rows = matrix.to_rows()

    def expand(idx: tuple[int, ...]) -> Fraction:
        if not idx:
            return ONE
        first, rest = idx[0], idx[1:]
        total = ZERO
        for k, j in enumerate(rest):
            if rows[first][j]:
                term = rows[first][j] * expand(rest[:k] + rest[k + 1 :])
                total += -term if k % 2 else term
        return total

    return expand(tuple(range(n)))


#####################################
#                                   #
#             SUBSPACES             #
#                                   #
#####################################


@dataclass(frozen=True)
class Subspace:
    """Linear subspace of Q^ambient, held as its reduced row echelon basis.

    Two subspaces are equal exactly when their canonical bases are identical.
    """

    ambient: int
    basis: Matrix

    @classmethod
    def span(cls, vectors: Iterable[Sequence[ScalarLike]], ambient: int) -> Subspace:
        rows = [list(v) for v in vectors]
        if any(len(r) != ambient for r in rows):
            msg = f"Vectors must have length {ambient}"
            raise DimensionMismatchError(msg)
        if not rows:
            return cls.zero(ambient)
        reduced = rref(Matrix.from_rows(rows, cols=ambient))
        return cls(ambient, reduced.matrix.submatrix(range(reduced.rank), range(ambient)))

    @classmethod
    def zero(cls, ambient: int) -> Subspace:
        return cls(ambient, Matrix.zeros(0, ambient))

    @classmethod
    def full(cls, ambient: int) -> Subspace:
        return cls(ambient, Matrix.identity(ambient))

    @property
    def dim(self) -> int:
        return self.basis.rows

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(j for j, x in enumerate(self.basis.row(i)) if x) for i in range(self.dim))

    def vectors(self) -> list[tuple[Fraction, ...]]:
        return [self.basis.row(i) for i in range(self.dim)]

    def reduce(self, vector: Sequence[ScalarLike]) -> tuple[Fraction, ...]:
        """Residual of v after eliminating the pivot coordinates with the basis rows."""
        if len(vector) != self.ambient:
            msg = f"Vector of length {len(vector)} in a space of dimension {self.ambient}"
            raise DimensionMismatchError(msg)
        v = [to_scalar(x) for x in vector]
        for i, p in enumerate(self.pivots):
            if v[p]:
                f = v[p]
                v = [a - f * b for a, b in zip(v, self.basis.row(i))]
        return tuple(v)

    def complement_coordinates(self, vector: Sequence[ScalarLike]) -> tuple[Fraction, ...]:
        """Coordinates of v modulo the subspace, read on the non-pivot coordinates."""
        residual = self.reduce(vector)
        pivots = set(self.pivots)
        return tuple(x for j, x in enumerate(residual) if j not in pivots)

    def coordinates_of(self, vector: Sequence[ScalarLike]) -> tuple[Fraction, ...]:
        """Coefficients of v in the canonical basis; v must lie in the subspace."""
        if not self.contains(vector):
            msg = "Vector does not lie in the subspace"
            raise DimensionMismatchError(msg)
        return tuple(to_scalar(vector[p]) for p in self.pivots)

    def contains(self, vector: Sequence[ScalarLike]) -> bool:
        return not any(self.reduce(vector))

    def contains_subspace(self, other: Subspace) -> bool:
        return all(self.contains(v) for v in other.vectors())

    def __add__(self, other: Subspace) -> Subspace:
        if self.ambient != other.ambient:
            msg = "Subspaces of different ambient spaces"
            raise DimensionMismatchError(msg)
        return Subspace.span(self.vectors() + other.vectors(), self.ambient)

    def annihilator(self) -> Subspace:
        """Subspace of the dual space killing every vector here (natural pairing)."""
        if not self.dim:
            return Subspace.full(self.ambient)
        return kernel(self.basis)

    def intersection(self, other: Subspace) -> Subspace:
        return (self.annihilator() + other.annihilator()).annihilator()


#####################################
#                                   #
#            POLYNOMIALS            #
#                                   #
#####################################


@dataclass(frozen=True)
class Poly:
    """Univariate polynomial, coefficients listed from the constant term up."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        coeffs = [to_scalar(c) for c in self.coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @classmethod
    def constant(cls, value: ScalarLike) -> Poly:
        return cls((value,))

    @classmethod
    def monomial(cls, degree: int, coef: ScalarLike = 1) -> Poly:
        return cls((0,) * degree + (coef,))

    @classmethod
    def variable(cls) -> Poly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else ZERO

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else ZERO

    def __call__(self, x: ScalarLike) -> Fraction:
        x = to_scalar(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: Poly | ScalarLike) -> Poly:
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(tuple(self.coefficient(k) + other.coefficient(k) for k in range(n)))

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: Poly | ScalarLike) -> Poly:
        return self + (-_as_poly(other))

    def __rsub__(self, other: Poly | ScalarLike) -> Poly:
        return _as_poly(other) - self

    def __mul__(self, other: Poly | ScalarLike) -> Poly:
        other = _as_poly(other)
        if self.is_zero or other.is_zero:
            return Poly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return Poly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Poly:
        result = Poly.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def derivative(self, order: int = 1) -> Poly:
        coeffs = self.coeffs
        for _ in range(order):
            coeffs = tuple(k * c for k, c in enumerate(coeffs))[1:]
        return Poly(coeffs)

    def as_sympy(self) -> sympy.Poly:
        coeffs = [Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)]
        return sympy.Poly(coeffs or [0], T, domain=QQ)

    @classmethod
    def from_sympy(cls, p: sympy.Poly) -> Poly:
        return cls(tuple(Fraction(int(c.p), int(c.q)) for c in reversed(p.all_coeffs())))

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if other.is_zero:
            msg = "Division by the zero polynomial"
            raise ZeroPolynomialError(msg)
        quotient, remainder = self.as_sympy().div(other.as_sympy())
        return Poly.from_sympy(quotient), Poly.from_sympy(remainder)

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def exact_div(self, other: Poly) -> Poly:
        quotient, remainder = divmod(self, other)
        if not remainder.is_zero:
            msg = "Polynomial division is not exact"
            raise ZeroPolynomialError(msg)
        return quotient

    def scale(self, c: ScalarLike) -> Poly:
        c = to_scalar(c)
        return Poly(tuple(c * x for x in self.coeffs))

    def monic(self) -> Poly:
        if self.is_zero:
            msg = "The zero polynomial has no monic form"
            raise ZeroPolynomialError(msg)
        return self.scale(1 / self.leading)

    def is_proportional(self, other: Poly) -> bool:
        """True when the two polynomials agree up to a nonzero constant factor."""
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return self.monic() == other.monic()

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            parts.append(("- " if c < 0 else "+ ") + body)
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _as_poly(value: Poly | ScalarLike) -> Poly:
    return value if isinstance(value, Poly) else Poly.constant(value)


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor over Q.

    Raises:
    ------
        ZeroPolynomialError: If both inputs are zero.
    """
    if f.is_zero and g.is_zero:
        msg = "gcd(0, 0) is undefined"
        raise ZeroPolynomialError(msg)
    return Poly.from_sympy(f.as_sympy().gcd(g.as_sympy())).monic()


def poly_gcd_many(polys: Iterable[Poly]) -> Poly:
    """Gcd of all nonzero polynomials, lowest degrees first so the running gcd shrinks early."""
    nonzero = sorted((p for p in polys if not p.is_zero), key=lambda p: p.degree)
    if not nonzero:
        msg = "gcd of zero polynomials is undefined"
        raise ZeroPolynomialError(msg)
    g = nonzero[0].monic()
    for p in nonzero[1:]:
        if g.degree == 0:
            break
        g = poly_gcd(g, p)
    return g


class RootReport(NamedTuple):
    roots: tuple[tuple[Fraction, int], ...]
    nonrational: int


def rational_roots(f: Poly) -> RootReport:
    """All rational roots with multiplicity, read off the linear factors of f over Q.

    The count of roots not found over Q (with multiplicity) is reported alongside, so
    callers can tell that further complex solutions exist.

    Example:
    -------
        ```python
        rational_roots(Poly((0, 1, 1)))  # RootReport(roots=((-1, 1), (0, 1)), nonrational=0)
        ```
    """
    if f.is_zero:
        msg = "The zero polynomial has every number as a root"
        raise ZeroPolynomialError(msg)
    found = {Fraction(int(r.p), int(r.q)): k for r, k in f.as_sympy().ground_roots().items()}
    return RootReport(tuple(sorted(found.items())), f.degree - sum(found.values()))


#####################################
#                                   #
#        RATIONAL FUNCTIONS         #
#                                   #
#####################################


@dataclass(frozen=True)
class RationalFunction:
    """Quotient num/den of polynomials in lowest terms with a monic denominator."""

    num: Poly
    den: Poly = Poly((1,))

    def __post_init__(self) -> None:
        if self.den.is_zero:
            msg = "Rational function with zero denominator"
            raise ZeroPolynomialError(msg)
        if self.num.is_zero:
            object.__setattr__(self, "den", Poly.constant(1))
            return
        g = poly_gcd(self.num, self.den)
        num, den = self.num.exact_div(g), self.den.exact_div(g)
        lead = den.leading
        object.__setattr__(self, "num", num.scale(1 / lead))
        object.__setattr__(self, "den", den.scale(1 / lead))

    @classmethod
    def of(cls, value: RationalFunction | Poly | ScalarLike) -> RationalFunction:
        if isinstance(value, RationalFunction):
            return value
        return cls(_as_poly(value))

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other: RationalFunction | Poly | ScalarLike) -> RationalFunction:
        o = RationalFunction.of(other)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other: RationalFunction | Poly | ScalarLike) -> RationalFunction:
        return self + (-RationalFunction.of(other))

    def __mul__(self, other: RationalFunction | Poly | ScalarLike) -> RationalFunction:
        o = RationalFunction.of(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other: RationalFunction | Poly | ScalarLike) -> RationalFunction:
        o = RationalFunction.of(other)
        if o.is_zero:
            msg = "Division by the zero rational function"
            raise ZeroPolynomialError(msg)
        return RationalFunction(self.num * o.den, self.den * o.num)

    def derivative(self, order: int = 1) -> RationalFunction:
        r = self
        for _ in range(order):
            r = RationalFunction(r.num.derivative() * r.den - r.num * r.den.derivative(), r.den * r.den)
        return r

    def __str__(self) -> str:
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num})/({self.den})"


#####################################
#                                   #
#         POLYNOMIAL MATRICES       #
#                                   #
#####################################


@dataclass(frozen=True)
class PolyMatrix:
    """Matrix with polynomial entries, stored row-major."""

    rows: int
    cols: int
    data: tuple[Poly, ...]

    def __post_init__(self) -> None:
        if len(self.data) != self.rows * self.cols:
            msg = f"{self.rows}x{self.cols} polynomial matrix needs {self.rows * self.cols} entries"
            raise DimensionMismatchError(msg)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Poly]], cols: int | None = None) -> PolyMatrix:
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        return cls(len(rows), width, tuple(_as_poly(p) for r in rows for p in r))

    @classmethod
    def constant(cls, matrix: Matrix) -> PolyMatrix:
        return cls(matrix.rows, matrix.cols, tuple(Poly.constant(x) for x in matrix.data))

    @classmethod
    def scalar_identity(cls, n: int, p: Poly) -> PolyMatrix:
        return cls(n, n, tuple(p if i == j else Poly() for i in range(n) for j in range(n)))

    def __getitem__(self, key: tuple[int, int]) -> Poly:
        i, j = key
        return self.data[i * self.cols + j]

    def row(self, i: int) -> tuple[Poly, ...]:
        return self.data[i * self.cols : (i + 1) * self.cols]

    def __matmul__(self, other: PolyMatrix | Matrix) -> PolyMatrix:
        other = other if isinstance(other, PolyMatrix) else PolyMatrix.constant(other)
        if self.cols != other.rows:
            msg = f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            raise DimensionMismatchError(msg)
        data = []
        for i in range(self.rows):
            for j in range(other.cols):
                acc = Poly()
                for k in range(self.cols):
                    a, b = self[i, k], other[k, j]
                    if not a.is_zero and not b.is_zero:
                        acc = acc + a * b
                data.append(acc)
        return PolyMatrix(self.rows, other.cols, tuple(data))

    def __rmatmul__(self, other: Matrix) -> PolyMatrix:
        return PolyMatrix.constant(other) @ self

    def __sub__(self, other: PolyMatrix) -> PolyMatrix:
        return PolyMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.data, other.data)))

    def vstack(self, other: PolyMatrix) -> PolyMatrix:
        if self.cols != other.cols:
            msg = "vstack needs equal column counts"
            raise DimensionMismatchError(msg)
        return PolyMatrix(self.rows + other.rows, self.cols, self.data + other.data)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> PolyMatrix:
        return PolyMatrix.from_rows([[self[i, j] for j in col_idx] for i in row_idx], cols=len(col_idx))

    def det(self) -> Poly:
        """Determinant by Laplace expansion along the first row (sizes stay small here)."""
        if self.rows != self.cols:
            msg = "Determinant of a non-square polynomial matrix"
            raise DimensionMismatchError(msg)

        def expand(row: int, cols: tuple[int, ...]) -> Poly:
            if not cols:
                return Poly.constant(1)
            total = Poly()
            for k, c in enumerate(cols):
                entry = self[row, c]
                if entry.is_zero:
                    continue
                term = entry * expand(row + 1, cols[:k] + cols[k + 1 :])
                total = total - term if k % 2 else total + term
            return total

        return expand(0, tuple(range(self.cols)))

    def minors(self, size: int) -> dict[tuple[int, ...], Poly]:
        """All maximal-column minors of the given size, keyed by 0-based row subsets."""
        return {
            rows: self.submatrix(rows, range(self.cols)).det()
            for rows in itertools.combinations(range(self.rows), size)
        }


class Resolvent(NamedTuple):
    adjugate: PolyMatrix
    charpoly: Poly


def resolvent(matrix: Matrix) -> Resolvent:
    """adj(sI - A) and det(sI - A) by the Faddeev-LeVerrier recurrence.

    With c_N = 1 and M_0 = 0, iterate M_k = A·M_(k-1) + c_(N-k+1)·I and
    c_(N-k) = -tr(A·M_k)/k; then adj(sI - A) = sum_k M_k s^(N-k).
    """
    if not matrix.is_square:
        msg = f"Resolvent of a non-square {matrix.rows}x{matrix.cols} matrix"
        raise DimensionMismatchError(msg)
    n = matrix.rows
    identity = Matrix.identity(n)
    c = [ZERO] * (n + 1)
    c[n] = ONE
    m_prev = Matrix.zeros(n, n)
    terms = []
    for k in range(1, n + 1):
        m_k = matrix @ m_prev + identity * c[n - k + 1]
        c[n - k] = -(matrix @ m_k).trace() / k
        terms.append(m_k)
        m_prev = m_k
    adjugate = PolyMatrix(
        n,
        n,
        tuple(Poly(tuple(terms[n - 1 - d][i, j] for d in range(n))) for i in range(n) for j in range(n)),
    )
    return Resolvent(adjugate, Poly(tuple(c)))


def charpoly(matrix: Matrix) -> Poly:
    """det(sI - A)."""
    return resolvent(matrix).charpoly
