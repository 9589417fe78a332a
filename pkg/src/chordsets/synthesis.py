"""Candidate functions realizing a target chord-set complement.

The constructive direction: given a Hopf set V, build f on [0,1] with
H(f) = [0,1] minus V. Templates cover three target families ((a) the
canonical V_n, (b) two-interval sets (a,1/2) u (1-a,1), (c) one interval
inside (1/2,1)); anything else is an honest UnsupportedTarget. A template
is never trusted on its own: every candidate is scanned and compared
against the target, and only an empty residual is accepted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import UnsupportedTarget, VerificationFailed
from .functions import FunctionSpec, PiecewiseLinear, SingleSine, SineSum, describe
from .hopf import HopfSet, canonical_vn
from .intervals import OpenIntervalUnion, boundary_points, contains
from .scan import (
    ChordScanReport,
    DEFAULT_ELL_RES,
    DEFAULT_TOL,
    DEFAULT_X_RES,
    scan,
)

FAMILIES = ("vn", "picksinwn", "m1")


@dataclass(frozen=True)
class SynthesisResult:
    candidate: FunctionSpec
    target: HopfSet
    verification: ChordScanReport
    residual: Tuple[float, ...] = ()
    conjectural: bool = False

    @property
    def accepted(self) -> bool:
        return len(self.residual) == 0

    def to_json(self) -> dict:
        out = {
            "candidate": describe(self.candidate),
            "target": self.target.to_json(),
            "conjectural": self.conjectural,
            "accepted": self.accepted,
            "residual": list(self.residual),
            "verification": self.verification.to_json(),
        }
        if isinstance(self.candidate, PiecewiseLinear):
            out["nodes"] = [[str(x), str(y)] for x, y in self.candidate.nodes]
        return out


def _match_vn(v: OpenIntervalUnion) -> Optional[int]:
    n = len(v.intervals)
    if n >= 1 and v == canonical_vn(n).v:
        return n
    return None


def _match_two_bump(v: OpenIntervalUnion) -> Optional[Fraction]:
    """The (a,1/2) u (1-a,1) shape; returns a."""
    if len(v.intervals) != 2:
        return None
    low, high = v.intervals
    a = low.lo
    if (
        Fraction(1, 3) < a < Fraction(1, 2)
        and low.hi == Fraction(1, 2)
        and high.lo == 1 - a
        and high.hi == 1
    ):
        return a
    return None


def _match_single_high(v: OpenIntervalUnion) -> Optional[Tuple[Fraction, Fraction]]:
    if len(v.intervals) != 1:
        return None
    piece = v.intervals[0]
    if Fraction(1, 2) <= piece.lo and piece.hi <= 1:
        return piece.lo, piece.hi
    return None


def _is_punctured(v: OpenIntervalUnion) -> bool:
    pairs = zip(v.intervals, v.intervals[1:])
    return any(left.hi == right.lo for left, right in pairs)


def _two_bump_candidate(a: Fraction) -> PiecewiseLinear:
    # Up-bump over (0,a), shallow zigzag across the middle, down-bump over
    # (1-a,1); the middle amplitude (1/2-a)/(2a) keeps every cross-difference
    # short of opening a chord inside the target.
    half = Fraction(1, 2)
    rho = (half - a) / (2 * a)
    nodes = (
        (Fraction(0), Fraction(0)),
        (a / 2, Fraction(1)),
        (a, Fraction(0)),
        ((a + half) / 2, -rho),
        (half, Fraction(0)),
        (Fraction(3, 4) - a / 2, rho),
        (1 - a, Fraction(0)),
        (1 - a / 2, Fraction(-1)),
        (Fraction(1), Fraction(0)),
    )
    return PiecewiseLinear(nodes)


def _single_high_candidate(beta: Fraction, gamma: Fraction) -> PiecewiseLinear:
    # Flat zero on [0,1-gamma], one valley down to (beta,0), one peak back to
    # (1,0). Chords of length ell exist iff ell <= beta or ell >= gamma.
    zero = Fraction(0)
    one = Fraction(1)
    nodes = [(zero, zero)]
    if gamma != 1:
        nodes.append((one - gamma, zero))
    nodes.append(((one - gamma + beta) / 2, -one))
    nodes.append((beta, zero))
    nodes.append(((one + beta) / 2, one))
    nodes.append((one, zero))
    return PiecewiseLinear(tuple(nodes))


def _residual(report: ChordScanReport, v: OpenIntervalUnion) -> List[float]:
    n = report.ell_count - 1
    margin = 2.0 * report.ell_res
    bounds = [float(b) for b in boundary_points(v)]
    out = []
    for i in range(report.ell_count):
        ell = report.ell_value(i)
        if any(abs(ell - b) < margin for b in bounds):
            continue
        expected = not contains(v, Fraction(i, n))
        if bool(report.presence[i]) != expected:
            out.append(ell)
    return out


def verify_against(
    candidate: FunctionSpec,
    target: HopfSet,
    ell_res: float = DEFAULT_ELL_RES,
    x_res: float = DEFAULT_X_RES,
    tol: float = DEFAULT_TOL,
) -> List[float]:
    """Grid points where scan presence contradicts the target complement.

    Grid points within 2*ell_res of a boundary of target.v are skipped; the
    scanner cannot club those either way.
    """
    report = scan(candidate, ell_res=ell_res, x_res=x_res, tol=tol)
    return _residual(report, target.v)


def synthesize(
    target: HopfSet,
    family_hint: Optional[str] = None,
    *,
    ell_res: float = DEFAULT_ELL_RES,
    x_res: float = DEFAULT_X_RES,
    tol: float = DEFAULT_TOL,
) -> SynthesisResult:
    """Build and verify a candidate whose chord set avoids exactly target.v.

    family_hint restricts matching to one of FAMILIES. Canonical V_n targets
    for n >= 2 get SineSum(n) candidates and are flagged conjectural: the
    identity behind them is checked here only at scan resolution.
    """
    if family_hint is not None and family_hint not in FAMILIES:
        raise UnsupportedTarget(f"unknown family hint {family_hint!r}; expected one of {FAMILIES}")
    v = target.v
    candidate: Optional[FunctionSpec] = None
    conjectural = False

    if family_hint in (None, "vn"):
        n = _match_vn(v)
        if n is not None:
            candidate = SingleSine() if n == 1 else SineSum(n)
            conjectural = n >= 2
    if candidate is None and family_hint in (None, "picksinwn"):
        a = _match_two_bump(v)
        if a is not None:
            candidate = _two_bump_candidate(a)
    if candidate is None and family_hint in (None, "m1"):
        match = _match_single_high(v)
        if match is not None:
            candidate = _single_high_candidate(*match)

    if candidate is None:
        if _is_punctured(v):
            raise UnsupportedTarget(
                "punctured target: carving an isolated point needs a tangency "
                "construction this module does not automate"
            )
        raise UnsupportedTarget("no template for this target family")

    report = scan(candidate, ell_res=ell_res, x_res=x_res, tol=tol)
    residual = tuple(_residual(report, v))
    if residual:
        raise VerificationFailed(
            f"template missed the target at {len(residual)} grid points",
            residual,
        )
    return SynthesisResult(candidate, target, report, residual, conjectural)
