"""Shared fixtures: independent oracles, deterministic set pools, scan cache.

The oracles here deliberately avoid the library's interval arithmetic: masks
on a common-denominator grid, with pair sums enumerated by convolution. For a
union whose endpoints all sit on the grid {i/q}, an additivity escape or a
sum-set piece has length at least 1/q, so a grid of step 1/(2q*q) or finer
always contains an interior witness; the oracles are exact on that domain.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Tuple

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from chordsets import (
    HopfSet,
    OpenIntervalUnion,
    canonical_vn,
    corpus,
    isolated_point_set,
    make_hopf,
    make_union,
    maximal_extension,
    normalize,
    picksinwn_construct,
    scan,
)
from chordsets.errors import DomainError

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


# ---- grid oracles ----------------------------------------------------------


def union_mask(v: OpenIntervalUnion, grid: int) -> np.ndarray:
    """mask[i] = 1 iff i/grid lies strictly inside v; index range 0..grid."""
    mask = np.zeros(grid + 1, dtype=np.int64)
    for piece in v:
        lo = int(piece.lo * grid)
        hi = int(piece.hi * grid)
        assert Fraction(lo, grid) == piece.lo and Fraction(hi, grid) == piece.hi, (
            "oracle grid must contain every endpoint"
        )
        mask[lo + 1 : hi] = 1
    return mask


def oracle_additive(v: OpenIntervalUnion, q: int) -> bool:
    """Exhaustive pair-sum check on the grid {i/(2q^2)} for endpoints on {i/q}."""
    grid = 2 * q * q
    mask = union_mask(v, grid)
    sums = np.convolve(mask, mask)
    reachable = sums[: grid + 1] > 0
    return not bool(np.any(reachable & (mask == 0)))


def oracle_minkowski_mask(a: OpenIntervalUnion, b: OpenIntervalUnion, grid: int) -> np.ndarray:
    """mask over {k/grid : 0 <= k <= 2 grid} of brute-force pair sums."""
    return (np.convolve(union_mask(a, grid), union_mask(b, grid)) > 0).astype(np.int64)


# ---- deterministic random sets ---------------------------------------------


def random_union_common_q(rng: random.Random, q: int, max_pieces: int = 3) -> OpenIntervalUnion:
    """Union with every endpoint on {i/q}, inside (0,1), no overlap."""
    while True:
        count = rng.randint(1, max_pieces)
        cuts = sorted(rng.sample(range(1, q), min(2 * count, q - 1)))
        if len(cuts) < 2:
            continue
        pairs = []
        for i in range(0, len(cuts) - 1, 2):
            pairs.append((Fraction(cuts[i], q), Fraction(cuts[i + 1], q)))
        if pairs:
            return normalize(pairs)


def _pool_builders() -> List:
    half = Fraction(1, 2)
    builders = []
    for n in range(1, 5):
        builders.append(lambda n=n: canonical_vn(n))
    for num in (9, 10, 11):
        builders.append(
            lambda num=num: picksinwn_construct(2, make_union((Fraction(num, 24), half)))
        )
    builders.append(lambda: picksinwn_construct(2, make_union((Fraction(3, 8), Fraction(11, 24)))))
    builders.append(lambda: picksinwn_construct(3, make_union((Fraction(7, 24), Fraction(1, 3)))))
    builders.append(lambda: isolated_point_set(Fraction(5, 24)))
    builders.append(lambda: isolated_point_set(Fraction(5, 12)))
    builders.append(lambda: isolated_point_set(Fraction(3, 8)))
    return builders


def make_hopf_pool(size: int, seed: int = 20240817) -> List[HopfSet]:
    """Valid Hopf sets, endpoints with denominator <= 24, deterministic."""
    rng = random.Random(seed)
    builders = _pool_builders()
    pool: List[HopfSet] = [build() for build in builders]
    while len(pool) < size:
        # random low-half seed, extended; rejection keeps only valid outputs
        q = rng.choice((8, 12, 16, 24))
        lo = rng.randint(1, q // 2 - 1)
        hi = rng.randint(lo + 1, q // 2)
        seed_union = make_union((Fraction(lo, q), Fraction(hi, q)))
        try:
            pool.append(maximal_extension(seed_union))
        except DomainError:
            continue
    return pool[:size]


@pytest.fixture(scope="session")
def hopf_pool() -> List[HopfSet]:
    return make_hopf_pool(200)


@pytest.fixture(scope="session")
def corpus_reports() -> dict:
    return {name: scan(spec) for name, spec in corpus()}
