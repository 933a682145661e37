"""Code vectors and the two Mastermind scores.

Colors are plain 0-based integers ``0..K-1`` and a code vector is a tuple of
them. The palette size ``K`` is never stored on the vector; it travels with
whatever context (oracle, instance) the vector belongs to.
"""
from __future__ import annotations

from collections import Counter
from typing import Sequence, Tuple

from blackpeg.errors import DimensionError

Color = int
CodeVector = Tuple[Color, ...]
ColorCensus = Tuple[int, ...]


def code_vector(values: Sequence[int], K: int | None = None) -> CodeVector:
    """Freeze ``values`` into a CodeVector, checking colors against ``K`` if given."""
    vec = tuple(int(v) for v in values)
    if K is not None:
        for j, c in enumerate(vec):
            if not 0 <= c < K:
                raise DimensionError(f"color {c} at position {j} outside [0, {K})")
    return vec


def _check_lengths(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise DimensionError(f"length mismatch: {len(a)} vs {len(b)}")


def black_count(guess: Sequence[int], secret: Sequence[int]) -> int:
    """Number of positions where guess and secret agree."""
    _check_lengths(guess, secret)
    return sum(1 for g, s in zip(guess, secret) if g == s)


def white_count(guess: Sequence[int], secret: Sequence[int]) -> int:
    """Color matches in the wrong place, via the multiset-intersection closed form."""
    _check_lengths(guess, secret)
    gc, sc = Counter(guess), Counter(secret)
    common = sum(min(n, sc[c]) for c, n in gc.items())
    return common - black_count(guess, secret)


def color_histogram(v: Sequence[int], K: int, lo: int = 0, hi: int | None = None) -> ColorCensus:
    """Per-color counts over the inclusive range ``[lo, hi]`` of ``v``.

    ``hi`` defaults to the last position.
    """
    if hi is None:
        hi = len(v) - 1
    if not 0 <= lo <= hi < len(v):
        raise DimensionError(f"range [{lo}, {hi}] out of bounds for length {len(v)}")
    counts = [0] * K
    for c in v[lo:hi + 1]:
        if not 0 <= c < K:
            raise DimensionError(f"color {c} outside [0, {K})")
        counts[c] += 1
    return tuple(counts)
