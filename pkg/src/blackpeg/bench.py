"""Query-count benchmark of the split solver against the published bounds."""
from __future__ import annotations

import csv
import io
import itertools
from dataclasses import astuple, dataclass, fields
from typing import Iterable, Iterator, List, Sequence

import numpy as np

from blackpeg.solver import HonestOracle, chen_bound, chvatal_bound, guess_bound, solve

EXHAUSTIVE_CAP = 10**6


@dataclass(frozen=True)
class BenchRecord:
    N: int
    K: int
    trials: int
    max_queries: int
    mean_queries: float
    our_bound: int
    chvatal_bound: int
    chen_bound: int

    def row(self) -> List[str]:
        return [f"{v:.4f}" if isinstance(v, float) else str(v) for v in astuple(self)]


CSV_HEADER = [f.name for f in fields(BenchRecord)]


def random_secrets(N: int, K: int, trials: int, seed: int) -> np.ndarray:
    """``trials`` secrets, each position uniform over [0, K), seeded per (seed, N, K)."""
    rng = np.random.default_rng([seed, N, K])
    return rng.integers(0, K, size=(trials, N))


def secrets_for(N: int, K: int, trials: int, seed: int, exhaustive: bool) -> Iterator[Sequence[int]]:
    if exhaustive and K ** N <= EXHAUSTIVE_CAP:
        return itertools.product(range(K), repeat=N)
    return iter(random_secrets(N, K, trials, seed).tolist())


def bench_one(N: int, K: int, trials: int, seed: int, exhaustive: bool = False) -> BenchRecord:
    counts = []
    for secret in secrets_for(N, K, trials, seed, exhaustive):
        t = solve(HonestOracle(secret, K))
        if t.recovered != tuple(secret):
            raise AssertionError(f"solver recovered {t.recovered} for secret {tuple(secret)}")
        counts.append(t.query_count)
    return BenchRecord(
        N=N, K=K, trials=len(counts),
        max_queries=max(counts),
        mean_queries=sum(counts) / len(counts),
        our_bound=guess_bound(N, K),
        chvatal_bound=chvatal_bound(N, K),
        chen_bound=chen_bound(N, K),
    )


def run_bench(n_list: Iterable[int], k_list: Iterable[int], trials: int, seed: int,
              exhaustive: bool = False) -> List[BenchRecord]:
    """One record per (N, K) in the cross product, N-major, in input order."""
    k_list = list(k_list)
    return [bench_one(N, K, trials, seed, exhaustive) for N in n_list for K in k_list]


def to_csv(records: Iterable[BenchRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        writer.writerow(rec.row())
    return buf.getvalue()
