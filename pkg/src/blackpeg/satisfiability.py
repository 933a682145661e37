"""Single-count Mastermind satisfiability.

An instance is a list of (guess, black-peg score) pairs; it is satisfiable if
some vector reproduces every score. Deciding this is NP-complete, so both
solvers here are explicit searches with a resource cap: ``solve_exhaustive``
enumerates the whole space and ``solve_backtracking`` walks positions left to
right with count-based propagation. Neither makes any claim of efficiency
beyond desk-scale instances.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from blackpeg.core import CodeVector, black_count, code_vector
from blackpeg.errors import BudgetExhausted, DimensionError, TooLarge

DEFAULT_EXHAUSTIVE_LIMIT = 10**8
DEFAULT_NODE_BUDGET = 10**6
_CHUNK = 1 << 18


@dataclass(frozen=True)
class SatInstance:
    N: int
    K: int
    constraints: Tuple[Tuple[CodeVector, int], ...] = ()
    comments: Tuple[str, ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.N < 1 or self.K < 1:
            raise DimensionError(f"need N >= 1 and K >= 1, got N={self.N}, K={self.K}")
        cons = []
        for guess, score in self.constraints:
            guess = code_vector(guess, self.K)
            if len(guess) != self.N:
                raise DimensionError(f"guess {guess} has length {len(guess)}, expected {self.N}")
            if not 0 <= score <= self.N:
                raise DimensionError(f"score {score} outside [0, {self.N}]")
            cons.append((guess, int(score)))
        object.__setattr__(self, "constraints", tuple(cons))
        object.__setattr__(self, "comments", tuple(self.comments))

    def with_constraint(self, guess: Sequence[int], score: int) -> "SatInstance":
        return SatInstance(self.N, self.K, self.constraints + ((tuple(guess), score),),
                           self.comments)


def is_consistent(candidate: Sequence[int], inst: SatInstance) -> bool:
    """True iff ``candidate`` reproduces every score of ``inst``."""
    if len(candidate) != inst.N:
        raise DimensionError(f"candidate length {len(candidate)} != N={inst.N}")
    code_vector(candidate, inst.K)
    return all(black_count(g, candidate) == s for g, s in inst.constraints)


def _check_cap(inst: SatInstance, limit: int) -> None:
    cost = inst.K ** inst.N * max(1, len(inst.constraints))
    if cost > limit:
        raise TooLarge(f"K^N * constraints = {cost} exceeds cap {limit}")


def _iter_exhaustive(inst: SatInstance) -> Iterator[np.ndarray]:
    """Yield, chunk by chunk in lexicographic order, the satisfying vectors."""
    N, K = inst.N, inst.K
    total = K ** N
    place = np.array([K ** (N - 1 - p) for p in range(N)], dtype=np.int64)
    guesses = [(np.array(g, dtype=np.int64), s) for g, s in inst.constraints]
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        rows = (idx[:, None] // place) % K
        for g, s in guesses:
            rows = rows[(rows == g).sum(axis=1) == s]
            if not len(rows):
                break
        if len(rows):
            yield rows


def solve_exhaustive(inst: SatInstance,
                     limit: int = DEFAULT_EXHAUSTIVE_LIMIT) -> Optional[CodeVector]:
    """Lexicographically first satisfying vector, or None.

    Raises TooLarge when ``K**N * len(constraints)`` exceeds ``limit``.
    """
    _check_cap(inst, limit)
    for rows in _iter_exhaustive(inst):
        return tuple(int(c) for c in rows[0])
    return None


def all_solutions_exhaustive(inst: SatInstance,
                             limit: int = DEFAULT_EXHAUSTIVE_LIMIT) -> List[CodeVector]:
    """Every satisfying vector, in lexicographic order."""
    _check_cap(inst, limit)
    return [tuple(int(c) for c in row) for rows in _iter_exhaustive(inst) for row in rows]


def solve_backtracking(inst: SatInstance,
                       budget: int = DEFAULT_NODE_BUDGET) -> Optional[CodeVector]:
    """Depth-first search over positions ``0..N-1`` with score-count propagation.

    Each position keeps a domain of still-possible colors. For a constraint,
    ``lo`` counts positions pinned to the guess color and ``hi`` adds those
    that could still take it; ``lo <= score <= hi`` must hold, and when either
    end is tight the undecided positions are forced. Colors are tried in
    increasing order, so the first vector found is the lexicographic minimum.

    ``budget`` caps the number of branching assignments; running out raises
    BudgetExhausted.
    """
    N, K = inst.N, inst.K
    full = (1 << K) - 1
    cons = [([1 << c for c in g], s) for g, s in inst.constraints]
    nodes = 0

    def propagate(dom: List[int]) -> bool:
        changed = True
        while changed:
            changed = False
            for bits, s in cons:
                lo = 0
                open_ = []
                for q, b in enumerate(bits):
                    dq = dom[q]
                    if dq == b:
                        lo += 1
                    elif dq & b:
                        open_.append(q)
                hi = lo + len(open_)
                if lo > s or hi < s:
                    return False
                if open_ and lo == s:
                    for q in open_:
                        dom[q] &= ~bits[q]
                        if not dom[q]:
                            return False
                    changed = True
                elif open_ and hi == s:
                    for q in open_:
                        dom[q] = bits[q]
                    changed = True
        return True

    def search(dom: List[int], p: int) -> Optional[List[int]]:
        nonlocal nodes
        while p < N and dom[p] & (dom[p] - 1) == 0:
            p += 1
        if p == N:
            return dom
        options = dom[p]
        for c in range(K):
            bit = 1 << c
            if not options & bit:
                continue
            nodes += 1
            if nodes > budget:
                raise BudgetExhausted(f"node budget {budget} exhausted")
            child = dom.copy()
            child[p] = bit
            if propagate(child):
                found = search(child, p + 1)
                if found is not None:
                    return found
        return None

    dom = [full] * N
    if not propagate(dom):
        return None
    found = search(dom, 0)
    if found is None:
        return None
    return tuple(b.bit_length() - 1 for b in found)
