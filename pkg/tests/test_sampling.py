"""Unittest for pluckx.sampling."""
import pytest

from pluckx.exactla import pfaffian
from pluckx.exalg import Multivector, skew_matrix
from pluckx.sampling import INCREMENT, MASK, MULTIPLIER, Lcg64, derive_seed


class TestLcg64:
    def test_first_step(self):
        rng = Lcg64(0)
        assert rng.next_u32() == INCREMENT >> 32
        assert rng.state == INCREMENT

    def test_recurrence(self):
        rng = Lcg64(12345)
        rng.next_u32()
        assert rng.state == (MULTIPLIER * 12345 + INCREMENT) & MASK

    def test_same_seed_same_stream(self):
        a, b = Lcg64(7), Lcg64(7)
        assert [a.next_u32() for _ in range(10)] == [b.next_u32() for _ in range(10)]
        assert Lcg64(7).matrix(3, 3) == Lcg64(7).matrix(3, 3)

    def test_different_seeds_differ(self):
        assert [Lcg64(1).next_u32() for _ in range(3)] != [Lcg64(2).next_u32() for _ in range(3)]

    def test_bounds(self):
        rng = Lcg64(3)
        values = [rng.randint(-2, 2) for _ in range(200)]
        assert set(values) <= {-2, -1, 0, 1, 2}
        assert len(set(values)) == 5
        assert 0 not in {rng.nonzero_int(2) for _ in range(200)}


class TestDerivedSeeds:
    def test_distinct_per_index(self):
        seeds = {derive_seed(42, i) for i in range(100)}
        assert len(seeds) == 100

    def test_reproducible(self):
        assert derive_seed(5, 3) == derive_seed(5, 3)
        assert derive_seed(5, 3) != derive_seed(6, 3)


class TestExactSamples:
    @pytest.mark.parametrize("seed", range(5))
    def test_invertible_matrix(self, seed):
        assert Lcg64(seed).invertible_matrix(4).det() != 0

    @pytest.mark.parametrize("seed", range(5))
    def test_subspace_dimension(self, seed):
        assert Lcg64(seed).subspace(6, 3).dim == 3

    def test_symmetric_matrix(self):
        m = Lcg64(9).symmetric_matrix(4)
        assert m == m.T

    @pytest.mark.parametrize("seed", range(5))
    def test_nondegenerate_two_form(self, seed):
        sigma = Lcg64(seed).nondegenerate_two_form(6)
        assert pfaffian(skew_matrix(sigma)) != 0

    def test_combination_is_nonzero(self):
        basis = [Multivector.monomial(4, (1, 2)), Multivector.monomial(4, (3, 4))]
        rng = Lcg64(0)
        assert all(not rng.combination(basis).is_zero for _ in range(20))
