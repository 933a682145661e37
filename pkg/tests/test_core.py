import itertools

import pytest
from hypothesis import given, strategies as st

from blackpeg.core import black_count, code_vector, color_histogram, white_count
from blackpeg.errors import DimensionError
from conftest import all_vectors, white_by_permutation


@pytest.mark.parametrize("guess, secret, expected", [
    ([1, 2, 3], [1, 2, 3], 3),
    ([1, 1, 1], [2, 2, 2], 0),
    ([2, 2, 1, 1], [1, 2, 1, 2], 2),
])
def test_black_count_examples(guess, secret, expected):
    assert black_count(guess, secret) == expected


@pytest.mark.parametrize("guess, secret, expected", [
    ([1, 2, 3, 4], [4, 3, 2, 1], 4),
    ([1, 1, 2], [1, 2, 2], 0),
    ([0, 1, 0, 2], [0, 1, 0, 2], 0),
])
def test_white_count_examples(guess, secret, expected):
    assert white_count(guess, secret) == expected
    assert white_by_permutation(guess, secret) == expected


def test_length_mismatch():
    with pytest.raises(DimensionError):
        black_count([0, 1], [0])
    with pytest.raises(DimensionError):
        white_count([0], [0, 1])


@pytest.mark.parametrize("v, K, lo, hi, expected", [
    ([0, 0, 1], 2, 0, 2, (2, 1)),
    ([0, 0, 1], 2, 2, 2, (0, 1)),
    ([3, 3, 3, 3], 4, 0, 3, (0, 0, 0, 4)),
])
def test_color_histogram(v, K, lo, hi, expected):
    assert color_histogram(v, K, lo, hi) == expected


@pytest.mark.parametrize("lo, hi", [(-1, 1), (2, 1), (0, 3)])
def test_color_histogram_bad_range(lo, hi):
    with pytest.raises(DimensionError):
        color_histogram([0, 1, 0], 2, lo, hi)


def test_code_vector_checks_palette():
    assert code_vector([0, 2, 1], 3) == (0, 2, 1)
    with pytest.raises(DimensionError):
        code_vector([0, 3], 3)


def test_scores_exhaustive_small():
    for N in range(1, 5):
        for K in range(1, 4):
            vecs = list(all_vectors(N, K))
            for a, b in itertools.product(vecs, repeat=2):
                bc = black_count(a, b)
                assert bc == black_count(b, a)
                assert (bc == N) == (a == b)
                wc = white_count(a, b)
                assert 0 <= bc + wc <= N
                assert wc == white_by_permutation(a, b)


pair6 = st.integers(1, 6).flatmap(lambda K: st.tuples(
    st.lists(st.integers(0, K - 1), min_size=6, max_size=6),
    st.lists(st.integers(0, K - 1), min_size=6, max_size=6)))


@given(pair6)
def test_white_count_matches_definition_n6(pair):
    a, b = pair
    assert white_count(a, b) == white_by_permutation(a, b)
    assert black_count(a, b) == black_count(b, a)


@given(st.lists(st.integers(0, 4), min_size=1, max_size=30))
def test_histogram_sums_to_length(v):
    assert sum(color_histogram(v, 5)) == len(v)
