import itertools

import pytest


def all_vectors(N, K):
    return itertools.product(range(K), repeat=N)


def white_by_permutation(guess, secret):
    """White count straight from the definition: best permutation minus black."""
    best = max(
        sum(1 for j in range(len(secret)) if guess[perm[j]] == secret[j])
        for perm in itertools.permutations(range(len(guess)))
    )
    return best - sum(1 for g, s in zip(guess, secret) if g == s)


@pytest.fixture
def tmp_file(tmp_path):
    def make(name, text):
        path = tmp_path / name
        path.write_text(text)
        return path
    return make
