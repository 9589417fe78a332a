"""Hopf sets: open additive subsets of (0, infinity) of the form V u (1, inf).

A Hopf set is stored as its bounded part V, a finite union of open rational
intervals inside (0, 1); the unbounded tail (1, inf) is a structural flag and
never an interval. Additivity means x + y stays in the set whenever x and y
are in it; for the stored form that reduces to (V + V) n (0, 1] being a subset
of V. These sets are exactly the complements of chord sets of continuous
functions vanishing at 0 and 1, which is why the operations below revolve
around measure 1/2, reflection x -> 1 - x, and the reciprocal points 1/n.

One exceptional value: the full ray (0, inf) is modeled as v = (0, 1) with the
tail flag, and is treated as additive by convention even though the literal
point set (0,1) u (1,inf) is not (1 = 1/2 + 1/2 would be missing). It is the
only Hopf set whose stored form cannot faithfully exclude the point 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Iterable, Optional, Tuple

from .errors import (
    AdditivityViolation,
    IdentityFailure,
    NotMaximal,
    OutOfRange,
    PointInP,
)
from .intervals import (
    EMPTY,
    OpenInterval,
    OpenIntervalUnion,
    as_rational,
    boundary_points,
    complement_in,
    contains,
    intersect,
    is_subset,
    k_fold_sum,
    measure,
    minkowski_sum,
    normalize,
    reflect,
    remove_point,
    uncovered_point,
    union,
)

HALF = Fraction(1, 2)
ONE = Fraction(1)

# v = (0,1): stored form of the exceptional full ray (0, inf)
FULL_RAY_V = OpenIntervalUnion((OpenInterval(0, 1),))

LOW_HALF = OpenIntervalUnion((OpenInterval(0, HALF),))
HIGH_HALF_BOX = OpenInterval(HALF, ONE)


@dataclass(frozen=True)
class HopfSet:
    """Validated Hopf set: bounded part v plus the implicit tail (1, inf)."""

    v: OpenIntervalUnion
    has_tail: bool = True

    def to_json(self) -> dict:
        return {"v": self.v.to_json(), "tail": self.has_tail}

    @classmethod
    def from_json(cls, data: dict) -> "HopfSet":
        return make_hopf(OpenIntervalUnion.from_json(data["v"]))


@dataclass(frozen=True)
class ChordComplementReport:
    """[0,1] minus v, as closed pieces; degenerate pieces are isolated points."""

    closed_pieces: Tuple[Tuple[Fraction, Fraction], ...]
    isolated_points: Tuple[Fraction, ...]

    def to_json(self) -> dict:
        return {
            "closed_pieces": [[str(lo), str(hi)] for lo, hi in self.closed_pieces],
            "isolated_points": [str(p) for p in self.isolated_points],
        }


def _require_unit(v: OpenIntervalUnion) -> None:
    for iv in v:
        if iv.lo < 0 or iv.hi > 1:
            raise OutOfRange(f"interval {iv} is not inside (0, 1)")


def _pair_with_sum(v: OpenIntervalUnion, total: Fraction) -> Tuple[Fraction, Fraction]:
    """Exact x, y in v with x + y = total; total must be attainable."""
    for a in v:
        for b in v:
            lo = max(a.lo, total - b.hi)
            hi = min(a.hi, total - b.lo)
            if lo < hi:
                x = (lo + hi) / 2
                return x, total - x
    raise AssertionError(f"no pair in {v} sums to {total}")


def additivity_witness(v: OpenIntervalUnion) -> Optional[Tuple[Fraction, Fraction, Fraction]]:
    """A violating triple (x, y, x+y) with x, y in v and x+y outside v u (1,inf), or None."""
    _require_unit(v)
    if not v or v == FULL_RAY_V:
        return None
    sums = minkowski_sum(v, v)
    for piece in sums:
        if piece.lo >= ONE:
            break
        top = min(piece.hi, ONE)
        z = uncovered_point(piece.lo, top, v)
        if z is None and piece.hi > ONE:
            # every sum below 1 lands in v, but 1 itself is attained
            z = ONE
        if z is not None:
            x, y = _pair_with_sum(v, z)
            return x, y, z
    return None


def is_additive(v: OpenIntervalUnion) -> bool:
    return additivity_witness(v) is None


def make_hopf(v) -> HopfSet:
    """Validate v inside (0,1) and additive; returns the Hopf set or raises."""
    if not isinstance(v, OpenIntervalUnion):
        v = normalize(v)
    witness = additivity_witness(v)
    if witness is not None:
        raise AdditivityViolation(*witness)
    return HopfSet(v=v, has_tail=True)


def is_maximal(h: HopfSet) -> bool:
    """Maximal means the bounded part has measure exactly 1/2."""
    return measure(h.v) == HALF


def canonical_vn(n: int) -> HopfSet:
    """The staircase family: union of k-fold sums of J_n = (1/(n+1), 1/n), k = 1..n.

    Each k-fold sum is the single interval (k/(n+1), k/n); consecutive pieces
    never touch, so the result has exactly n components and measure 1/2.
    """
    if n < 1:
        raise OutOfRange(f"canonical_vn needs n >= 1, got {n}")
    jn = OpenIntervalUnion((OpenInterval(Fraction(1, n + 1), Fraction(1, n)),))
    parts = EMPTY
    for k in range(1, n + 1):
        parts = union(parts, k_fold_sum(jn, k))
    return make_hopf(parts)


def tail_threshold(i: OpenInterval) -> Fraction:
    """Threshold a(i) with (a(i), inf) inside the additive closure of interval i.

    For i = (a, b) with 0 < a < b, the k-fold sums (ka, kb) overlap one another
    from k = K on, where K = max(floor(a/(b-a)), 1) + 1, and their union from
    K on is exactly ((K)a, inf) shifted to threshold K*a.
    """
    if i.lo <= 0:
        raise OutOfRange(f"tail_threshold needs a positive interval, got {i}")
    k = max(floor(i.lo / (i.hi - i.lo)), 1) + 1
    return k * i.lo


def maximal_extension(h) -> HopfSet:
    """Grow h to a maximal Hopf set containing it.

    Keep A = v n (0, 1/2), then fill the upper half with everything except the
    closure of the reflection of A. The result is additive, contains h, and
    has measure exactly 1/2; applying the extension again is a no-op.

    Accepts a HopfSet or a bare union; only the structure of the input is
    required, and the output is validated, so feeding a non-additive union
    either succeeds (when its lower half already generates everything needed)
    or surfaces the violation.
    """
    v = h.v if isinstance(h, HopfSet) else normalize(h)
    _require_unit(v)
    if v == FULL_RAY_V:
        raise OutOfRange("the full ray (0, inf) has no proper extension")
    low = intersect(v, LOW_HALF)
    high = complement_in(reflect(low), HIGH_HALF_BOX)
    return make_hopf(union(low, high))


def picksinwn_construct(n: int, w) -> HopfSet:
    """Maximal Hopf set generated by a seed w inside J_n = (1/(n+1), 1/n).

    A is the union of the j-fold sums of w for j = 1..floor(n/2); the upper
    half is filled by reflection as in maximal_extension. Requires w nonempty
    and strictly inside J_n.
    """
    if n < 2:
        raise OutOfRange(f"picksinwn_construct needs n >= 2, got {n}")
    if not isinstance(w, OpenIntervalUnion):
        w = normalize(w)
    if not w:
        raise OutOfRange("seed w must be nonempty")
    jn_lo, jn_hi = Fraction(1, n + 1), Fraction(1, n)
    for iv in w:
        if iv.lo < jn_lo or iv.hi > jn_hi:
            raise OutOfRange(f"seed interval {iv} is not inside ({jn_lo}, {jn_hi})")
    low = EMPTY
    for j in range(1, n // 2 + 1):
        low = union(low, k_fold_sum(w, j))
    high = complement_in(reflect(low), HIGH_HALF_BOX)
    return make_hopf(union(low, high))


def isolated_point_set(a) -> HopfSet:
    """Maximal Hopf set whose complement has the single puncture point a isolated.

    a must lie strictly between consecutive reciprocals 1/(n+1) and 1/n; the
    result is canonical_vn(n) with a removed. No pair in the punctured set can
    sum to a (all sums exceed 2/(n+1) >= 1/n > a), so additivity survives.
    """
    a = as_rational(a)
    if not 0 < a < 1:
        raise OutOfRange(f"puncture point must be in (0, 1), got {a}")
    if a.numerator == 1:
        raise PointInP(f"{a} is a reciprocal 1/n and can never be isolated")
    n = floor(1 / a)
    vn = canonical_vn(n)
    punctured = make_hopf(remove_point(vn.v, a))
    # paranoia: a must now be the shared endpoint of two touching components
    hits = [iv for iv in punctured.v if iv.lo == a or iv.hi == a]
    if len(hits) != 2:
        raise IdentityFailure(f"puncture at {a} did not isolate the point")
    return punctured


def _closed_complement(v: OpenIntervalUnion) -> list:
    """[0,1] minus v as closed pieces; [x, x] marks an isolated point."""
    pieces = []
    cursor = Fraction(0)
    for iv in v:
        if cursor <= iv.lo:
            pieces.append((cursor, iv.lo))
        cursor = iv.hi
    if cursor <= 1:
        pieces.append((cursor, ONE))
    return pieces


def _merge_closed(pieces) -> list:
    merged = []
    for lo, hi in sorted(pieces):
        if merged and lo <= merged[-1][1]:
            if hi > merged[-1][1]:
                merged[-1] = (merged[-1][0], hi)
        else:
            merged.append((lo, hi))
    return merged


def symmetry_identity(h: HopfSet) -> ChordComplementReport:
    """Exact identity for maximal h: [0,1] \\ v equals closure(reflect(v)) u bd(v) u {0,1}.

    Both sides are computed independently and compared; a mismatch would be an
    internal error, not a property of the input.
    """
    if not is_maximal(h):
        raise NotMaximal(f"measure {measure(h.v)} != 1/2")
    left = _closed_complement(h.v)
    right_pieces = [(iv.lo, iv.hi) for iv in reflect(h.v)]
    right_pieces += [(p, p) for p in boundary_points(h.v)]
    right_pieces += [(Fraction(0), Fraction(0)), (ONE, ONE)]
    right = _merge_closed(right_pieces)
    if left != right:
        raise IdentityFailure(f"complement {left} != reflection closure {right}")
    isolated = tuple(lo for lo, hi in left if lo == hi)
    return ChordComplementReport(closed_pieces=tuple(left), isolated_points=isolated)
