"""Divide-and-conquer codebreaker for black-peg-only Mastermind.

The breaker first learns every color's total count with ``K`` monochrome
queries. It then recursively halves ranges of the secret; each split of a
range holding ``K_r`` distinct colors costs ``K_r - 1`` queries and yields the
color counts of both halves through a small exact linear solve. A range with a
single color left is known outright.
"""
from __future__ import annotations

import dataclasses
import sys
from dataclasses import dataclass
from typing import Callable, List, Optional, Protocol, Sequence, TextIO, Tuple

from blackpeg.core import CodeVector, ColorCensus, black_count, code_vector
from blackpeg.errors import DimensionError, InconsistentOracle

Query = Tuple[CodeVector, int]


class Oracle(Protocol):
    """Anything that scores a query against a fixed hidden vector."""

    N: int
    K: int

    def answer(self, query: CodeVector) -> int: ...


class HonestOracle:
    """In-memory codemaker holding ``secret``."""

    def __init__(self, secret: Sequence[int], K: int):
        self.secret = code_vector(secret, K)
        self.N = len(self.secret)
        self.K = K

    def answer(self, query: CodeVector) -> int:
        return black_count(query, self.secret)


class InteractiveOracle:
    """Codemaker on the other end of a text stream.

    Each query is written to ``prompt_stream``; the reply must be a single
    integer in ``[0, N]`` on its own line, otherwise the prompt is repeated.
    """

    def __init__(self, N: int, K: int, instream: TextIO | None = None,
                 prompt_stream: TextIO | None = None):
        self.N = N
        self.K = K
        self.instream = instream if instream is not None else sys.stdin
        self.prompt_stream = prompt_stream if prompt_stream is not None else sys.stderr

    def answer(self, query: CodeVector) -> int:
        shown = " ".join(map(str, query))
        while True:
            self.prompt_stream.write(f"guess: {shown}\nblack pegs? ")
            self.prompt_stream.flush()
            line = self.instream.readline()
            if not line:
                raise EOFError("input closed before the secret was deduced")
            try:
                score = int(line.strip())
            except ValueError:
                self.prompt_stream.write(f"not an integer: {line.strip()!r}\n")
                continue
            if 0 <= score <= self.N:
                return score
            self.prompt_stream.write(f"score must lie in [0, {self.N}]\n")


class RecordingOracle:
    """Wraps another oracle and logs every (query, response) pair."""

    def __init__(self, inner: Oracle):
        self.inner = inner
        self.N = inner.N
        self.K = inner.K
        self.log: List[Query] = []

    def answer(self, query: CodeVector) -> int:
        query = tuple(query)
        if len(query) != self.N or any(not 0 <= c < self.K for c in query):
            raise DimensionError(f"illegal query {query} for N={self.N}, K={self.K}")
        score = self.inner.answer(query)
        self.log.append((query, score))
        if not 0 <= score <= self.N:
            raise InconsistentOracle(f"response {score} outside [0, {self.N}]")
        return score


@dataclass(frozen=True)
class SolveTranscript:
    N: int
    K: int
    queries: Tuple[Query, ...]
    recovered: CodeVector

    @property
    def query_count(self) -> int:
        return len(self.queries)

    def to_instance(self):
        """The transcript read as a satisfiability instance."""
        from blackpeg.satisfiability import SatInstance
        return SatInstance(self.N, self.K, self.queries)


@dataclass(frozen=True)
class SplitState:
    """Bookkeeping for splitting ``[l, r]`` at ``m``.

    ``palette`` lists the colors present in the range, smallest first; its
    head is the filler color. ``range_census``, ``x`` and ``y`` are aligned
    with ``palette``. ``d`` counts filler occurrences outside ``[l, r]``.
    """

    l: int
    r: int
    m: int
    palette: Tuple[int, ...]
    range_census: Tuple[int, ...]
    d: int
    b_responses: Tuple[int, ...] = ()
    x: Tuple[int, ...] = ()
    y: Tuple[int, ...] = ()
    y1_numerator: int = 0

    @property
    def filler(self) -> int:
        return self.palette[0]

    @property
    def d_left(self) -> int:
        return self.d + self.y[0]

    @property
    def d_right(self) -> int:
        return self.d + self.x[0]


def initial_census(oracle: Oracle) -> ColorCensus:
    """Ask one monochrome query per color; the scores are the color counts."""
    N, K = oracle.N, oracle.K
    if N < 1 or K < 1:
        raise ValueError("need N >= 1 and K >= 1")
    counts = tuple(oracle.answer((c,) * N) for c in range(K))
    if sum(counts) != N:
        raise InconsistentOracle(f"census {counts} sums to {sum(counts)}, not N={N}")
    return counts


def split_range(oracle: Oracle, state: SplitState) -> SplitState:
    """Issue the ``K_r - 1`` split queries for ``state`` and solve for both halves."""
    l, r, m, d = state.l, state.r, state.m, state.d
    palette, c = state.palette, state.range_census
    k_r = len(palette)
    if k_r < 2:
        raise ValueError("split_range needs at least two colors in the range")
    filler = palette[0]
    N = oracle.N
    left_len = m - l + 1

    b = []
    for color in palette[1:]:
        q = [filler] * N
        q[l:m + 1] = [color] * left_len
        b.append(oracle.answer(tuple(q)))

    numerator = c[0] + sum(bi - d for bi in b) - left_len
    if numerator % k_r:
        raise InconsistentOracle(
            f"range [{l}, {r}]: numerator {numerator} not divisible by {k_r}")
    y1 = numerator // k_r
    x = [c[0] - y1] + [bi - d - y1 for bi in b]
    y = [ci - xi for ci, xi in zip(c, x)]
    if min(x) < 0 or min(y) < 0 or sum(x) != left_len or sum(y) != r - m:
        raise InconsistentOracle(f"range [{l}, {r}]: split gives x={x}, y={y}")
    return dataclasses.replace(state, b_responses=tuple(b), x=tuple(x), y=tuple(y),
                               y1_numerator=numerator)


def solve(oracle: Oracle,
          on_split: Optional[Callable[[SplitState], None]] = None) -> SolveTranscript:
    """Recover the oracle's secret.

    ``on_split`` is called with every completed split, in the order the
    splits happen. On an inconsistency the raised InconsistentOracle carries
    the queries issued so far.
    """
    rec = oracle if isinstance(oracle, RecordingOracle) else RecordingOracle(oracle)
    N = rec.N
    out: List[Optional[int]] = [None] * N
    try:
        census = initial_census(rec)
        top = {color: n for color, n in enumerate(census) if n > 0}
        _solve_range(rec, census, 0, N - 1, top, out, on_split)
    except InconsistentOracle as exc:
        exc.transcript = tuple(rec.log)
        raise
    return SolveTranscript(N, rec.K, tuple(rec.log), tuple(out))


def _solve_range(oracle, census, l, r, counts, out, on_split):
    if l > r:
        return
    palette = tuple(sorted(counts))
    if len(palette) == 1:
        out[l:r + 1] = [palette[0]] * (r - l + 1)
        return
    filler = palette[0]
    state = SplitState(
        l=l, r=r, m=l + (r - l) // 2,
        palette=palette,
        range_census=tuple(counts[c] for c in palette),
        d=census[filler] - counts[filler],
    )
    state = split_range(oracle, state)
    if on_split is not None:
        on_split(state)
    left = {c: n for c, n in zip(palette, state.x) if n > 0}
    right = {c: n for c, n in zip(palette, state.y) if n > 0}
    _solve_range(oracle, census, l, state.m, left, out, on_split)
    _solve_range(oracle, census, state.m + 1, r, right, out, on_split)


def naive_solve(oracle: Oracle) -> SolveTranscript:
    """Baseline: probe every (position, nonzero color) against an all-0 background.

    Always spends ``N * (K - 1) + 1`` queries.
    """
    rec = oracle if isinstance(oracle, RecordingOracle) else RecordingOracle(oracle)
    N, K = rec.N, rec.K
    if N < 1 or K < 1:
        raise ValueError("need N >= 1 and K >= 1")
    try:
        base = rec.answer((0,) * N)
        out = []
        for p in range(N):
            hits = []
            for color in range(1, K):
                q = [0] * N
                q[p] = color
                s = rec.answer(tuple(q))
                if s not in (base - 1, base, base + 1):
                    raise InconsistentOracle(f"position {p}: score {s} vs baseline {base}")
                if s == base + 1:
                    hits.append(color)
            if len(hits) > 1:
                raise InconsistentOracle(f"position {p} matched colors {hits}")
            out.append(hits[0] if hits else 0)
    except InconsistentOracle as exc:
        exc.transcript = tuple(rec.log)
        raise
    return SolveTranscript(N, K, tuple(rec.log), tuple(out))


def ceil_log2(k: int) -> int:
    return (k - 1).bit_length()


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def guess_bound(N: int, K: int) -> int:
    """Query budget of the split solver: N*ceil(log2 K) + ceil((2 - 1/K) N) + K."""
    if N < 1 or K < 1:
        raise ValueError("need N >= 1 and K >= 1")
    return N * ceil_log2(K) + _ceil_div((2 * K - 1) * N, K) + K


def chvatal_bound(N: int, K: int) -> int:
    return 2 * N * ceil_log2(K) + 4 * N


def chen_bound(N: int, K: int) -> int:
    return 2 * N * ceil_log2(N) + 2 * N + _ceil_div(K, N) + 2


def reference_bounds(N: int, K: int) -> Tuple[int, int]:
    """(Chvatal, Chen et al.) query bounds for double-count Mastermind."""
    if N < 1 or K < 1:
        raise ValueError("need N >= 1 and K >= 1")
    return chvatal_bound(N, K), chen_bound(N, K)
