"""Exact algebra on finite unions of bounded open intervals with rational endpoints.

Endpoints are `fractions.Fraction` values and every operation is exact. All
values are immutable and all functions are pure, so everything here is safe to
share across threads or worker processes.

Canonical form keeps intervals sorted by left endpoint and merges overlaps of
positive length only. Intervals that merely touch, like (a,b) and (b,c), stay
separate: the shared endpoint belongs to neither open interval, and collapsing
the pair would silently add that point to the set. Several constructions in
this package hinge on exactly that excluded point, so it is never normalized
away.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Tuple, Union


class IntervalError(ValueError):
    """Structurally invalid interval data (lo >= hi, float endpoints, overlap)."""


Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or 'p/q' string to Fraction.

    Floats and decimal strings are rejected: this module promises exactness,
    and a float that survived a round trip through binary would defeat it.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _RATIONAL_RE.match(value.strip()):
            raise IntervalError(f"not an exact rational: {value!r}")
        try:
            return Fraction(value)
        except ZeroDivisionError as exc:
            raise IntervalError(f"zero denominator: {value!r}") from exc
    raise IntervalError(f"exact rational required, got {value!r}")


def format_rational(q: Fraction) -> str:
    return str(q)


@dataclass(frozen=True)
class OpenInterval:
    """A nonempty bounded open interval (lo, hi) with rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_rational(self.lo))
        object.__setattr__(self, "hi", as_rational(self.hi))
        if self.lo >= self.hi:
            raise IntervalError(f"empty or inverted interval ({self.lo}, {self.hi})")

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, p: RationalLike) -> bool:
        p = as_rational(p)
        return self.lo < p < self.hi

    def __repr__(self) -> str:
        return f"({self.lo}, {self.hi})"


def _coerce_interval(item) -> OpenInterval:
    if isinstance(item, OpenInterval):
        return item
    lo, hi = item
    return OpenInterval(lo, hi)


@dataclass(frozen=True)
class OpenIntervalUnion:
    """A canonical finite union of disjoint open intervals.

    Construct through normalize()/make_union() unless the intervals are already
    canonical; the constructor only verifies, it does not repair.
    """

    intervals: Tuple[OpenInterval, ...] = ()

    def __post_init__(self):
        ivs = tuple(_coerce_interval(iv) for iv in self.intervals)
        object.__setattr__(self, "intervals", ivs)
        for prev, nxt in zip(ivs, ivs[1:]):
            if nxt.lo < prev.hi:
                raise IntervalError(
                    f"intervals {prev} and {nxt} overlap; build unions with normalize()"
                )

    def __iter__(self) -> Iterator[OpenInterval]:
        return iter(self.intervals)

    def __len__(self) -> int:
        return len(self.intervals)

    def __bool__(self) -> bool:
        return bool(self.intervals)

    def __repr__(self) -> str:
        if not self.intervals:
            return "{}"
        return " U ".join(repr(iv) for iv in self.intervals)

    def to_json(self) -> list:
        return [[format_rational(iv.lo), format_rational(iv.hi)] for iv in self.intervals]

    @classmethod
    def from_json(cls, data: Iterable) -> "OpenIntervalUnion":
        return normalize((as_rational(lo), as_rational(hi)) for lo, hi in data)


EMPTY = OpenIntervalUnion(())


def make_union(*pairs) -> OpenIntervalUnion:
    """Convenience constructor: make_union((lo, hi), ...) with normalization."""
    return normalize(pairs)


def normalize(raw: Iterable) -> OpenIntervalUnion:
    """Sort raw intervals and merge every overlap of positive length.

    Touching intervals are preserved as separate components; see module
    docstring. Raises IntervalError on any lo >= hi.
    """
    # float(Fraction) is monotone, so the float leads and exact values only
    # break float ties; this dodges Fraction.__lt__ for most comparisons
    ivs = sorted(
        (_coerce_interval(item) for item in raw),
        key=lambda iv: (float(iv.lo), iv.lo, float(iv.hi), iv.hi),
    )
    merged: list[OpenInterval] = []
    for iv in ivs:
        if merged and iv.lo < merged[-1].hi:
            last = merged[-1]
            if iv.hi > last.hi:
                merged[-1] = OpenInterval(last.lo, iv.hi)
        else:
            merged.append(iv)
    return OpenIntervalUnion(tuple(merged))


def union(a: OpenIntervalUnion, b: OpenIntervalUnion) -> OpenIntervalUnion:
    return normalize(tuple(a) + tuple(b))


def intersect(a: OpenIntervalUnion, b: OpenIntervalUnion) -> OpenIntervalUnion:
    pieces = []
    for x in a:
        for y in b:
            lo = max(x.lo, y.lo)
            hi = min(x.hi, y.hi)
            if lo < hi:
                pieces.append(OpenInterval(lo, hi))
    return normalize(pieces)


def complement_in(a: OpenIntervalUnion, box: OpenInterval) -> OpenIntervalUnion:
    """Open complement of the *closure* of a within the open box.

    Subtracting closures means endpoints of a never reappear in the result:
    (1/2,1) minus closure((1/2,3/5)) is (3/5,1), and a pair of touching
    intervals removes its shared endpoint as well.
    """
    pieces = []
    cursor = box.lo
    for iv in a:
        if iv.hi <= box.lo or iv.lo >= box.hi:
            continue
        lo = max(iv.lo, box.lo)
        hi = min(iv.hi, box.hi)
        if lo > cursor:
            pieces.append(OpenInterval(cursor, lo))
        if hi > cursor:
            cursor = hi
    if cursor < box.hi:
        pieces.append(OpenInterval(cursor, box.hi))
    return OpenIntervalUnion(tuple(pieces))


def measure(a: OpenIntervalUnion) -> Fraction:
    return sum((iv.length for iv in a), Fraction(0))


def minkowski_sum(a: OpenIntervalUnion, b: OpenIntervalUnion) -> OpenIntervalUnion:
    """Exact set {x + y : x in a, y in b}; empty if either operand is empty.

    The sum of two open intervals is the open interval of summed endpoints,
    and Minkowski sums distribute over unions, so the pairwise formula is
    exact, not an approximation.
    """
    pieces = [
        OpenInterval(x.lo + y.lo, x.hi + y.hi)
        for x in a
        for y in b
    ]
    return normalize(pieces)


def k_fold_sum(a: OpenIntervalUnion, k: int) -> OpenIntervalUnion:
    """k-fold Minkowski sum a + a + ... + a (k >= 1 summands).

    Not the same set as scale(a, k) once a has more than one interval.
    """
    if k < 1:
        raise IntervalError(f"k_fold_sum needs k >= 1, got {k}")
    if len(a.intervals) <= 1:
        # sums of k points from one interval fill (k lo, k hi) exactly
        return scale(a, k) if a else a
    acc = a
    for _ in range(k - 1):
        acc = minkowski_sum(acc, a)
    return acc


def scale(a: OpenIntervalUnion, k: RationalLike) -> OpenIntervalUnion:
    k = as_rational(k)
    if k <= 0:
        raise IntervalError(f"scale factor must be positive, got {k}")
    return OpenIntervalUnion(tuple(OpenInterval(iv.lo * k, iv.hi * k) for iv in a))


def reflect(a: OpenIntervalUnion) -> OpenIntervalUnion:
    """Image under x -> 1 - x; requires a to sit inside [0, 1]."""
    for iv in a:
        if iv.lo < 0 or iv.hi > 1:
            raise IntervalError(f"reflect needs intervals inside [0,1], got {iv}")
    return OpenIntervalUnion(
        tuple(OpenInterval(1 - iv.hi, 1 - iv.lo) for iv in reversed(a.intervals))
    )


def boundary_points(a: OpenIntervalUnion) -> Tuple[Fraction, ...]:
    pts = sorted({iv.lo for iv in a} | {iv.hi for iv in a})
    return tuple(pts)


def remove_point(a: OpenIntervalUnion, p: RationalLike) -> OpenIntervalUnion:
    """Puncture a at p, splitting the covering interval if p is interior."""
    p = as_rational(p)
    pieces = []
    for iv in a:
        if p in iv:
            pieces.append(OpenInterval(iv.lo, p))
            pieces.append(OpenInterval(p, iv.hi))
        else:
            pieces.append(iv)
    return OpenIntervalUnion(tuple(pieces))


def contains(a: OpenIntervalUnion, p: RationalLike) -> bool:
    p = as_rational(p)
    for iv in a:
        if iv.lo >= p:
            return False
        if p < iv.hi:
            return True
    return False


def is_subset(a: OpenIntervalUnion, b: OpenIntervalUnion) -> bool:
    """Whether every point of a lies in b.

    Because b is canonical, an open interval of a can only be covered by a
    single interval of b: two touching b-components exclude their shared
    endpoint, so they can never jointly cover a connected piece of a.
    """
    ivs = b.intervals
    for x in a:
        covered = any(y.lo <= x.lo and x.hi <= y.hi for y in ivs)
        if not covered:
            return False
    return True


def uncovered_point(lo: Fraction, hi: Fraction, u: OpenIntervalUnion) -> Optional[Fraction]:
    """Some point of the open interval (lo, hi) not covered by u, or None.

    Prefers a midpoint of an uncovered gap; when the only uncovered point is
    the shared endpoint of two touching components of u, that point itself is
    returned.
    """
    lo = as_rational(lo)
    hi = as_rational(hi)
    if lo >= hi:
        return None
    cursor = lo
    for iv in u:
        if iv.hi <= cursor:
            continue
        if iv.lo >= hi:
            break
        if iv.lo > cursor:
            return (cursor + iv.lo) / 2
        if iv.lo == cursor and cursor > lo:
            # cursor is the shared endpoint of two touching components
            return cursor
        cursor = iv.hi
    if cursor < hi:
        return (cursor + hi) / 2
    return None
