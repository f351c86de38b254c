"""Multi-index arithmetic and the prime-power frequency bijection."""

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from polyhardy.multiindex import (
    MAX_FREQUENCY,
    MultiIndex,
    graded_lex_key,
    index_to_multiindex,
    max_frequency_for_simplex,
    multiindex_to_index,
    primes,
    simplex,
    weighted_degree,
)


class TestMultiIndexBasics:
    def test_trailing_zeros_trimmed(self):
        assert MultiIndex([1, 0, 0]) == MultiIndex([1])
        assert len(MultiIndex([1, 0, 0])) == 1
        assert MultiIndex([0, 0]) == MultiIndex()
        assert not MultiIndex()

    def test_equality_and_hash(self):
        assert hash(MultiIndex([2, 1])) == hash(MultiIndex((2, 1, 0)))
        assert MultiIndex([2, 1]) != MultiIndex([1, 2])
        assert len({MultiIndex([1]), MultiIndex([1, 0]), MultiIndex([0, 1])}) == 2

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            MultiIndex([1, -1])

    def test_getitem_beyond_length_is_zero(self):
        alpha = MultiIndex([2, 1])
        assert alpha[0] == 2
        assert alpha[1] == 1
        assert alpha[17] == 0
        with pytest.raises(IndexError):
            alpha[-1]

    def test_add_and_sub(self):
        assert MultiIndex([1, 2]) + MultiIndex([0, 1, 3]) == MultiIndex([1, 3, 3])
        assert MultiIndex([1, 3, 3]) - MultiIndex([0, 1, 3]) == MultiIndex([1, 2])
        with pytest.raises(ValueError):
            MultiIndex([1]) - MultiIndex([2])

    def test_divides(self):
        assert MultiIndex([1, 1]).divides(MultiIndex([2, 1]))
        assert not MultiIndex([1, 1]).divides(MultiIndex([2]))

    def test_string_forms(self):
        assert str(MultiIndex([2, 1])) == "[2,1]"
        assert str(MultiIndex()) == "[]"
        assert MultiIndex.from_string("[2, 1]") == MultiIndex([2, 1])
        assert MultiIndex.from_string("[]") == MultiIndex()
        with pytest.raises(ValueError):
            MultiIndex.from_string("2,1")

    def test_from_items(self):
        alpha = MultiIndex.from_items([(3, 1), (0, 2)])
        assert alpha == MultiIndex([2, 0, 0, 1])
        assert alpha.items() == ((0, 2), (3, 1))


class TestBijection:
    @pytest.mark.parametrize(
        "n, exponents",
        [(1, []), (12, [2, 1]), (50, [1, 0, 2]), (7, [0, 0, 0, 1]), (2, [1])],
    )
    def test_factorization_examples(self, n, exponents):
        assert index_to_multiindex(n) == MultiIndex(exponents)

    @pytest.mark.parametrize(
        "exponents, n", [([], 1), ([0, 0, 0, 1], 7), ([3, 1], 24), ([1, 1, 1], 30)]
    )
    def test_index_examples(self, exponents, n):
        assert multiindex_to_index(MultiIndex(exponents)) == n

    @pytest.mark.parametrize("bad", [0, -3])
    def test_invalid_frequency_rejected(self, bad):
        with pytest.raises(ValueError):
            index_to_multiindex(bad)

    def test_frequency_overflow_reported(self):
        with pytest.raises(OverflowError):
            multiindex_to_index(MultiIndex([64]))  # 2**64 leaves 64-bit range
        with pytest.raises(OverflowError):
            index_to_multiindex(MAX_FREQUENCY + 1)

    @given(st.integers(min_value=1, max_value=10**6))
    @settings(max_examples=300, deadline=None)
    def test_roundtrip(self, n):
        assert multiindex_to_index(index_to_multiindex(n)) == n

    @given(
        st.integers(min_value=1, max_value=5000),
        st.integers(min_value=1, max_value=5000),
    )
    @settings(max_examples=200, deadline=None)
    def test_multiplicativity(self, a, b):
        summed = index_to_multiindex(a) + index_to_multiindex(b)
        assert multiindex_to_index(summed) == a * b

    def test_against_sympy_factorization(self):
        rng = np.random.default_rng(7)
        for n in rng.integers(2, 10**6, size=50):
            n = int(n)
            alpha = index_to_multiindex(n)
            expected = {
                int(p): int(e) for p, e in sympy.factorint(n).items()
            }
            got = {primes(pos + 1)[pos]: e for pos, e in alpha.items()}
            assert got == expected


class TestWeightedDegree:
    @pytest.mark.parametrize(
        "exponents, value", [([], 0), ([2, 1], 4), ([0, 0, 3], 9), ([1], 1)]
    )
    def test_examples(self, exponents, value):
        assert weighted_degree(MultiIndex(exponents)) == value

    @given(
        st.lists(st.integers(min_value=0, max_value=6), max_size=6),
        st.lists(st.integers(min_value=0, max_value=6), max_size=6),
    )
    @settings(max_examples=200, deadline=None)
    def test_additivity(self, a, b):
        alpha, beta = MultiIndex(a), MultiIndex(b)
        assert weighted_degree(alpha + beta) == weighted_degree(alpha) + weighted_degree(beta)

    def test_accepts_plain_iterables(self):
        assert weighted_degree([2, 1]) == 4


class TestEnumeration:
    def test_primes_prefix(self):
        assert primes(10) == (2, 3, 5, 7, 11, 13, 17, 19, 23, 29)
        assert primes(0) == ()

    def test_primes_match_sympy(self):
        ours = primes(2000)
        assert ours[-1] == sympy.prime(2000)
        assert list(ours) == list(sympy.primerange(2, ours[-1] + 1))

    def test_simplex_graded_lex_order(self):
        got = [tuple(a.exponents) for a in simplex(2, 2)]
        assert got == [(), (0, 1), (1,), (0, 2), (1, 1), (2,)]

    def test_simplex_size_is_binomial(self):
        # C(N + D, N) indices of degree <= D in N variables
        assert len(simplex(3, 4)) == 35
        assert len(simplex(1, 50)) == 51

    def test_simplex_sorted_by_key(self):
        members = simplex(3, 3)
        assert list(members) == sorted(members, key=graded_lex_key)

    def test_simplex_validation(self):
        with pytest.raises(ValueError):
            simplex(0, 2)
        with pytest.raises(ValueError):
            simplex(2, -1)

    def test_max_frequency_for_simplex(self):
        assert max_frequency_for_simplex(3, 6) == 5**6
        assert max_frequency_for_simplex(1, 0) == 1
        assert max_frequency_for_simplex(2, 3) == 27
        with pytest.raises(OverflowError):
            max_frequency_for_simplex(1, 64)

    def test_simplex_frequencies_bounded(self):
        bound = max_frequency_for_simplex(3, 4)
        assert all(
            multiindex_to_index(alpha) <= bound for alpha in simplex(3, 4)
        )
