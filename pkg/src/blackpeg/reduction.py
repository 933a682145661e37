"""Reduction from 3-Dimensional Matching to single-count Mastermind satisfiability.

The hidden vector has four blocks: ``X_1..X_n``, ``Y_1..Y_n``, ``Z_1..Z_n``
and one slot ``T_s`` per triple. Color layout of the produced instance::

    0      null color (may not appear in a solution)
    1      boolean 0  (triple not chosen)
    s + 1  triple s, for s = 1..m; color 2 doubles as boolean 1 (chosen)

Three enforcer queries ban the null color and force exactly ``n`` of the
``T_s`` to boolean 1 and the rest to boolean 0. For each triple, three
chooser queries of score 1 make ``T_s`` chosen exactly when ``X_{i_s}``,
``Y_{j_s}`` and ``Z_{k_s}`` all carry color ``s + 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from blackpeg.errors import MalformedInstance, NotAWitness, TooLarge
from blackpeg.satisfiability import SatInstance, is_consistent

NULL = 0
FALSE = 1
TRUE = 2

MAX_BRUTE_N = 8
MAX_BRUTE_M = 16


def triple_color(s: int) -> int:
    return s + 1


@dataclass(frozen=True)
class ThreeDMInstance:
    n: int
    triples: Tuple[Tuple[int, int, int], ...]

    def __post_init__(self):
        triples = tuple(tuple(int(v) for v in t) for t in self.triples)
        object.__setattr__(self, "triples", triples)
        if self.n < 1:
            raise MalformedInstance(f"n must be >= 1, got {self.n}")
        if not triples:
            raise MalformedInstance("need at least one triple")
        for s, t in enumerate(triples, 1):
            if len(t) != 3 or any(not 1 <= v <= self.n for v in t):
                raise MalformedInstance(f"triple {s} = {t} has an index outside [1, {self.n}]")

    @property
    def m(self) -> int:
        return len(self.triples)


@dataclass(frozen=True)
class Matching:
    chosen: FrozenSet[int]

    @classmethod
    def of(cls, chosen: Iterable[int]) -> "Matching":
        return cls(frozenset(chosen))


def _t_pos(tdm: ThreeDMInstance, s: int) -> int:
    return 3 * tdm.n + s - 1


def reduce(tdm: ThreeDMInstance) -> SatInstance:
    """Build the satisfiability instance, satisfiable iff ``tdm`` has a perfect matching."""
    n, m = tdm.n, tdm.m
    if m < n:
        raise MalformedInstance(
            f"m={m} < n={n}: no perfect matching is possible and the "
            f"boolean-0 enforcer would need score m-n={m - n}")
    N = 3 * n + m
    K = m + 2
    t_block = range(3 * n, N)

    def vec(assign):
        v = [NULL] * N
        for pos, color in assign:
            v[pos] = color
        return tuple(v)

    cons = [
        (vec([]), 0),
        (vec((p, TRUE) for p in t_block), n),
        (vec((p, FALSE) for p in t_block), m - n),
    ]
    for s, (i, j, k) in enumerate(tdm.triples, 1):
        ts = _t_pos(tdm, s)
        for block, idx in enumerate((i, j, k)):
            cons.append((vec([(block * n + idx - 1, triple_color(s)), (ts, FALSE)]), 1))
    comments = (
        f"3DM reduction: n={n} m={m}; blocks X[0,{n}) Y[{n},{2 * n}) "
        f"Z[{2 * n},{3 * n}) T[{3 * n},{N})",
        "colors: null->0, boolean-0->1, triple s->s+1 (boolean-1 is triple 1 -> 2)",
    )
    return SatInstance(N, K, tuple(cons), comments)


def matching_witness(tdm: ThreeDMInstance, mat: Matching) -> Tuple[int, ...]:
    """Vector that satisfies ``reduce(tdm)`` when ``mat`` is a perfect matching."""
    n = tdm.n
    v = [FALSE] * (3 * n + tdm.m)
    for s in mat.chosen:
        i, j, k = tdm.triples[s - 1]
        v[i - 1] = v[n + j - 1] = v[2 * n + k - 1] = triple_color(s)
        v[_t_pos(tdm, s)] = TRUE
    return tuple(v)


def extract_matching(witness: Sequence[int], tdm: ThreeDMInstance,
                     inst: Optional[SatInstance] = None) -> Matching:
    """Read the chosen triples off a satisfying vector of ``reduce(tdm)``."""
    if inst is None:
        inst = reduce(tdm)
    if len(witness) != inst.N or not is_consistent(witness, inst):
        raise NotAWitness(f"{tuple(witness)} does not satisfy the reduced instance")
    return Matching.of(s for s in range(1, tdm.m + 1) if witness[_t_pos(tdm, s)] == TRUE)


def verify_matching(tdm: ThreeDMInstance, mat: Matching) -> bool:
    """True iff ``mat`` picks ``n`` triples covering every element exactly once."""
    if len(mat.chosen) != tdm.n:
        return False
    seen = [set(), set(), set()]
    for s in mat.chosen:
        if not 1 <= s <= tdm.m:
            return False
        for axis, v in enumerate(tdm.triples[s - 1]):
            if v in seen[axis]:
                return False
            seen[axis].add(v)
    return all(len(axis) == tdm.n for axis in seen)


def solve_3dm_bruteforce(tdm: ThreeDMInstance) -> Optional[Matching]:
    """Perfect matching by exhaustive search, or None.

    Covers X elements in order 1..n, trying every triple that hits the next
    uncovered one without reusing a Y or Z element.
    """
    if tdm.n > MAX_BRUTE_N or tdm.m > MAX_BRUTE_M:
        raise TooLarge(f"n={tdm.n}, m={tdm.m} beyond brute-force limits "
                       f"({MAX_BRUTE_N}, {MAX_BRUTE_M})")
    by_x: List[List[int]] = [[] for _ in range(tdm.n + 1)]
    for s, (i, _, _) in enumerate(tdm.triples, 1):
        by_x[i].append(s)
    used_y, used_z = set(), set()
    chosen: List[int] = []

    def cover(x: int) -> bool:
        if x > tdm.n:
            return True
        for s in by_x[x]:
            _, j, k = tdm.triples[s - 1]
            if j in used_y or k in used_z:
                continue
            used_y.add(j)
            used_z.add(k)
            chosen.append(s)
            if cover(x + 1):
                return True
            chosen.pop()
            used_y.discard(j)
            used_z.discard(k)
        return False

    return Matching.of(chosen) if cover(1) else None
