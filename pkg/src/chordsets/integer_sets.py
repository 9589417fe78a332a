"""Integer-endpoint maximal Hopf sets and their census.

An integer Hopf set is a finite list of open intervals with positive integer
endpoints plus a tail (M, inf) starting at the largest endpoint M. Verification
scales by 1/M and reuses the exact unit-interval machinery; a set passes when
the scaled bounded part is additive, the lengths sum to M/2 (maximality), the
endpoint gcd is 1 (primitivity), and no two consecutive intervals touch.

The touching ban deserves a note. Removing an interior point from the upper
half of a maximal set keeps it open, additive and of measure 1/2, so punctured
variants like (2,3) u (3,4) u (4,inf) satisfy the raw definition while being
trivial modifications of a set with fewer intervals. The census is only
meaningful modulo such punctures, and the closed-form family it is checked
against has none, so verify() rejects them with their own diagnosis.

Interval counts always include the tail: (1,2) u (2,inf) has two intervals.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, gcd
from typing import List, Optional, Tuple

from .errors import OutOfRange
from .hopf import HALF, HopfSet, additivity_witness, canonical_vn, make_hopf, picksinwn_construct
from .intervals import (
    EMPTY,
    OpenInterval,
    OpenIntervalUnion,
    intersect,
    k_fold_sum,
    scale,
    union,
)


@dataclass(frozen=True)
class IntegerHopfSet:
    """Finite intervals (lo, hi) with integer endpoints, plus a tail at tail_start."""

    finite_intervals: Tuple[Tuple[int, int], ...]
    tail_start: int

    def __post_init__(self):
        ivs = tuple((int(lo), int(hi)) for lo, hi in self.finite_intervals)
        object.__setattr__(self, "finite_intervals", ivs)
        object.__setattr__(self, "tail_start", int(self.tail_start))
        prev_hi = 0
        for lo, hi in ivs:
            if not 0 < lo < hi:
                raise OutOfRange(f"bad integer interval ({lo}, {hi})")
            if lo < prev_hi:
                raise OutOfRange(f"interval ({lo}, {hi}) overlaps its predecessor")
            prev_hi = hi
        if self.tail_start < prev_hi:
            raise OutOfRange(f"tail start {self.tail_start} below last endpoint {prev_hi}")

    @property
    def n_intervals(self) -> int:
        """Component count, tail included."""
        return len(self.finite_intervals) + 1

    def endpoints(self) -> Tuple[int, ...]:
        flat = [x for iv in self.finite_intervals for x in iv]
        flat.append(self.tail_start)
        return tuple(flat)

    def to_unit(self) -> OpenIntervalUnion:
        """Bounded part scaled by 1/tail_start into (0, 1)."""
        m = self.tail_start
        return OpenIntervalUnion(
            tuple(OpenInterval(Fraction(lo, m), Fraction(hi, m)) for lo, hi in self.finite_intervals)
        )

    def to_json(self) -> dict:
        return {
            "intervals": [[lo, hi] for lo, hi in self.finite_intervals],
            "tail": self.tail_start,
        }

    @classmethod
    def from_json(cls, data: dict) -> "IntegerHopfSet":
        return cls(
            finite_intervals=tuple((lo, hi) for lo, hi in data["intervals"]),
            tail_start=data["tail"],
        )

    def __repr__(self) -> str:
        body = " U ".join(f"({lo},{hi})" for lo, hi in self.finite_intervals)
        return f"{body} U ({self.tail_start},inf)" if body else f"({self.tail_start},inf)"


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    reason: Optional[str] = None
    detail: Optional[dict] = None

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        out: dict = {"ok": self.ok}
        if self.reason is not None:
            out["reason"] = self.reason
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass(frozen=True)
class CensusEntry:
    set: IntegerHopfSet
    n_intervals: int
    max_endpoint: int
    picksinwn_origin: bool

    def to_json(self) -> dict:
        out = self.set.to_json()
        out["n"] = self.n_intervals
        out["picksinwn"] = self.picksinwn_origin
        return out


def verify(s: IntegerHopfSet) -> VerifyResult:
    """Full check: tail placement, maximal measure, no punctures, additive, primitive."""
    if not s.finite_intervals:
        return VerifyResult(False, "no_finite_intervals", {})
    last_hi = s.finite_intervals[-1][1]
    m = s.tail_start
    if last_hi != m:
        return VerifyResult(
            False, "tail_mismatch", {"last_hi": last_hi, "tail_start": m}
        )
    total = sum(hi - lo for lo, hi in s.finite_intervals)
    if 2 * total != m:
        return VerifyResult(
            False, "wrong_measure", {"length_sum": total, "required": str(Fraction(m, 2))}
        )
    for (_, hi), (lo, _) in zip(s.finite_intervals, s.finite_intervals[1:]):
        if hi == lo:
            return VerifyResult(False, "touching_intervals", {"point": hi})
    witness = additivity_witness(s.to_unit())
    if witness is not None:
        x, y, z = witness
        return VerifyResult(
            False,
            "not_additive",
            {"x": str(x * m), "y": str(y * m), "sum": str(z * m)},
        )
    g = gcd(*s.endpoints())
    if g != 1:
        return VerifyResult(False, "not_primitive", {"gcd": g})
    return VerifyResult(True)


def _census_for_m(n_intervals: int, m: int) -> List[IntegerHopfSet]:
    """All verified sets with the given component count and tail exactly at m.

    Verified sets decompose as A u B u tail with A below m/2 and B forced to be
    the reflective complement (m/2, m) \\ closure(m - A): any other upper half
    would either lose measure or introduce a puncture. So it suffices to walk
    the finitely many A choices. Component counts then come out as
    2j + 1 when A's last interval ends exactly at m/2 (j = number of A parts)
    and 2j + 2 otherwise, which pins down the search mode per n.
    """
    if m % 2 != 0:
        return []
    half = m // 2
    found: List[IntegerHopfSet] = []

    if n_intervals == 2:
        candidate = IntegerHopfSet(((half, m),), m)
        if verify(candidate):
            found.append(candidate)
        return found

    if n_intervals % 2 == 1:
        j = (n_intervals - 1) // 2
        end_at_half = True
    else:
        j = (n_intervals - 2) // 2
        end_at_half = False
    if j < 1:
        return []

    def assemble(a_points: Tuple[int, ...]) -> Optional[IntegerHopfSet]:
        a_parts = [(a_points[2 * i], a_points[2 * i + 1]) for i in range(j)]
        mirrored = [(m - hi, m - lo) for lo, hi in reversed(a_parts)]
        b_parts = []
        cursor = half
        for lo, hi in mirrored:
            if lo > cursor:
                b_parts.append((cursor, lo))
            cursor = hi
        if cursor < m:
            b_parts.append((cursor, m))
        intervals = tuple(a_parts + b_parts)
        if len(intervals) + 1 != n_intervals:
            return None
        return IntegerHopfSet(intervals, m)

    if end_at_half:
        pool = range(1, half)
        for combo in itertools.combinations(pool, 2 * j - 1):
            candidate = assemble(combo + (half,))
            if candidate is not None and verify(candidate):
                found.append(candidate)
    else:
        pool = range(1, half)
        for combo in itertools.combinations(pool, 2 * j):
            candidate = assemble(combo)
            if candidate is not None and verify(candidate):
                found.append(candidate)
    return found


def _census_star(args) -> List[IntegerHopfSet]:
    return _census_for_m(*args)


def enumerate_census(n_intervals: int, max_m: int, jobs: int = 1) -> List[CensusEntry]:
    """Every verified integer Hopf set with n_intervals components and tail <= max_m.

    Deterministic order: by tail start, then lexicographically by endpoints.
    """
    if n_intervals < 2:
        raise OutOfRange(f"need at least two intervals (one finite plus tail), got {n_intervals}")
    ms = [m for m in range(2, max_m + 1, 2)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(_census_star, [(n_intervals, m) for m in ms]))
    else:
        batches = [_census_for_m(n_intervals, m) for m in ms]
    sets = sorted(
        (s for batch in batches for s in batch),
        key=lambda s: (s.tail_start, s.endpoints()),
    )
    return [
        CensusEntry(
            set=s,
            n_intervals=s.n_intervals,
            max_endpoint=s.tail_start,
            picksinwn_origin=picksinwn_origin(s),
        )
        for s in sets
    ]


def n3_family(a_max: int) -> List[IntegerHopfSet]:
    """Closed form for three components: (a, b) u (2b-a, 2b) u (2b, inf).

    Requires gcd(a, b) = 1 and a < b <= 3a/2; a = 1 admits no b, so the family
    starts at (2, 3).
    """
    out = []
    for a in range(1, a_max + 1):
        for b in range(a + 1, (3 * a) // 2 + 1):
            if gcd(a, b) == 1:
                out.append(IntegerHopfSet(((a, b), (2 * b - a, 2 * b)), 2 * b))
    return sorted(out, key=lambda s: (s.tail_start, s.endpoints()))


@dataclass(frozen=True)
class OriginDetail:
    origin: bool
    family: Optional[str] = None
    n: Optional[int] = None
    seed: Optional[OpenIntervalUnion] = None


def picksinwn_origin_detail(s: IntegerHopfSet) -> OriginDetail:
    """Decide whether the unit-scaled set arises from the seed construction.

    The candidate seed is forced: with A the lower half of the scaled set,
    n comes from inf(A) in [1/(n+1), 1/n), the seed w is A n J_n, and the set
    must equal both the staged sums of w and the full construction. Sets with
    empty A are the (1,2) u (2,inf) family, reported as origin under the
    one-interval label since the construction needs no seed there.
    """
    v = s.to_unit()
    low = intersect(v, OpenIntervalUnion((OpenInterval(0, HALF),)))
    if not low:
        return OriginDetail(origin=True, family="m1")
    beta = low.intervals[0].lo
    n = ceil(1 / beta) - 1
    if n < 2:
        return OriginDetail(origin=False)
    jn = OpenIntervalUnion((OpenInterval(Fraction(1, n + 1), Fraction(1, n)),))
    w = intersect(low, jn)
    if not w:
        return OriginDetail(origin=False)
    staged = EMPTY
    for j in range(1, n // 2 + 1):
        staged = union(staged, k_fold_sum(w, j))
    if staged != low:
        return OriginDetail(origin=False)
    try:
        built = picksinwn_construct(n, w)
    except OutOfRange:
        return OriginDetail(origin=False)
    if built.v != v:
        return OriginDetail(origin=False)
    return OriginDetail(origin=True, family="picksinwn", n=n, seed=w)


def picksinwn_origin(s: IntegerHopfSet) -> bool:
    return picksinwn_origin_detail(s).origin


def four_interval_example() -> IntegerHopfSet:
    """(4,5) u (6,7) u (8,12) u (12,inf): four components, seed (1/3, 5/12) at n = 2."""
    return IntegerHopfSet(((4, 5), (6, 7), (8, 12)), 12)


def to_hopf(s: IntegerHopfSet) -> HopfSet:
    """Unit-scaled validated Hopf set for a verified integer set."""
    return make_hopf(s.to_unit())
