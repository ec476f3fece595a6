"""Seeded pseudo-random sampling of exact objects.

One generator is used throughout: a 64-bit linear congruential generator with the MMIX
constants, read from its high 32 bits. Given the same seed it yields the same stream on
every platform, so reports built from samples are reproducible.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from pluckx.exactla import Matrix, Subspace, pfaffian
from pluckx.exalg import Multivector, basis_index_sets, linear_combination, skew_matrix

MULTIPLIER = 6364136223846793005
INCREMENT = 1442695040888963407
MASK = (1 << 64) - 1


def derive_seed(seed: int, index: int) -> int:
    """Independent seed for trial ``index`` of a run seeded with ``seed``."""
    mixed = Lcg64((seed & MASK) ^ ((index + 1) * 0x9E3779B97F4A7C15 & MASK))
    mixed.next_u32()
    return (mixed.state ^ index) & MASK


class Lcg64:
    """x ← a·x + c mod 2^64."""

    def __init__(self, seed: int) -> None:
        self.state = seed & MASK

    def next_u32(self) -> int:
        self.state = (MULTIPLIER * self.state + INCREMENT) & MASK
        return self.state >> 32

    def randint(self, low: int, high: int) -> int:
        """Uniform integer in [low, high] (modulo bias is negligible for the small ranges used)."""
        return low + self.next_u32() % (high - low + 1)

    def nonzero_int(self, bound: int) -> int:
        value = self.randint(-bound, bound - 1)
        return value if value < 0 else value + 1

    def rational(self, bound: int = 5) -> Fraction:
        return Fraction(self.randint(-bound, bound), self.randint(1, bound))

    def vector(self, n: int, bound: int = 5) -> list[Fraction]:
        return [Fraction(self.randint(-bound, bound)) for _ in range(n)]

    def matrix(self, rows: int, cols: int, bound: int = 5) -> Matrix:
        return Matrix.from_rows([self.vector(cols, bound) for _ in range(rows)], cols=cols)

    def invertible_matrix(self, n: int, bound: int = 3) -> Matrix:
        while True:
            g = self.matrix(n, n, bound)
            if g.det():
                return g

    def symmetric_matrix(self, n: int, bound: int = 5) -> Matrix:
        m = self.matrix(n, n, bound)
        return Matrix.from_rows([[m[min(i, j), max(i, j)] for j in range(n)] for i in range(n)], cols=n)

    def subspace(self, ambient: int, dim: int, bound: int = 5) -> Subspace:
        """Random subspace of exactly the requested dimension."""
        while True:
            candidate = Subspace.span([self.vector(ambient, bound) for _ in range(dim)], ambient)
            if candidate.dim == dim:
                return candidate

    def combination(self, elements: Sequence[Multivector], bound: int = 5) -> Multivector:
        """Nonzero random integer combination of the given multivectors."""
        while True:
            w = linear_combination(self.vector(len(elements), bound), elements)
            if not w.is_zero:
                return w

    def nondegenerate_two_form(self, n: int, bound: int = 3) -> Multivector:
        """Random 2-form on an even-dimensional space with nonzero Pfaffian."""
        while True:
            sigma = Multivector(n, 2, {idx: self.randint(-bound, bound) for idx in basis_index_sets(n, 2)})
            if pfaffian(skew_matrix(sigma)):
                return sigma
