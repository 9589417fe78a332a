"""Grid scanner approximating the chord set H(f) of a corpus function.

For a chord length ell the scanner samples d(x) = f(x+ell) - f(x) on a uniform
x grid over [0, 1-ell] (both endpoints included; the right endpoint carries
the x = 1-ell witness that pairs a zero of f with f(1) = 0). A chord is
detected by a strict sign change between neighboring non-tangential samples,
refined by bisection when witnesses are requested, or by |d| <= tol at a
sample. Long tangential runs mean d vanishes on a whole subinterval; the
multiplicity is then reported as the CONTINUUM sentinel because counting
witnesses is meaningless there.

Everything here is deliberately approximate: honest to the grid, never
snapped to nearby rationals, with exact questions delegated to the interval
algebra modules.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import math

import numpy as np

from .errors import InvariantViolation, OutOfRange
from .functions import Composed, FunctionSpec, Levy, Negate, ReflectX, ScaleY, SineSum, describe, evaluate_array
from .hopf import canonical_vn
from .intervals import OpenIntervalUnion, boundary_points, contains

# Multiplicity sentinel for d == 0 on a subinterval (a continuum of witnesses).
CONTINUUM = 2**30

DEFAULT_ELL_RES = 1e-3
DEFAULT_X_RES = 1e-4
DEFAULT_TOL = 1e-9
DEFAULT_CLUSTER_RADIUS = 1e-3
BISECTION_DEPTH = 40


def _x_grid(ell: float, x_res: float) -> np.ndarray:
    # floor keeps the step >= x_res; both endpoints are always sampled
    span = 1.0 - ell
    if span <= 0.0:
        return np.zeros(1)
    m = max(int(math.floor(span / x_res)), 1)
    return np.linspace(0.0, span, m + 1)


def _diff_profile(spec: FunctionSpec, ell: float, x_res: float):
    xs = _x_grid(ell, x_res)
    upper = np.clip(xs + ell, 0.0, 1.0)
    d = evaluate_array(spec, upper) - evaluate_array(spec, xs)
    return xs, d


def _bracket_mask(d: np.ndarray, tang: np.ndarray) -> np.ndarray:
    if len(d) < 2:
        return np.zeros(0, dtype=bool)
    sign = np.sign(d)
    return (sign[:-1] * sign[1:] < 0) & ~tang[:-1] & ~tang[1:]


def _has_continuum(tang: np.ndarray, step: float, x_res: float, cluster_radius: float) -> bool:
    """True when a tangential run spans a subinterval rather than a point."""
    threshold = max(10.0 * x_res, 2.0 * cluster_radius)
    need = int(math.ceil(threshold / step)) + 1 if step > 0 else 2
    idx = np.flatnonzero(tang)
    if len(idx) < need:
        return False
    # a run of k consecutive indices has extent (k-1)*step
    breaks = np.flatnonzero(np.diff(idx) > 1)
    edges = np.concatenate([[-1], breaks, [len(idx) - 1]])
    longest = int(np.max(np.diff(edges)))
    return (longest - 1) * step >= threshold


def _presence_and_count(
    spec: FunctionSpec, ell: float, x_res: float, tol: float, cluster_radius: float
) -> Tuple[bool, int]:
    xs, d = _diff_profile(spec, ell, x_res)
    tang = np.abs(d) <= tol
    bracket = _bracket_mask(d, tang)
    if not tang.any() and not bracket.any():
        return False, 0
    step = xs[1] - xs[0] if len(xs) > 1 else x_res
    if _has_continuum(tang, step, x_res, cluster_radius):
        return True, CONTINUUM
    pos = np.concatenate([xs[tang], 0.5 * (xs[:-1][bracket] + xs[1:][bracket])])
    pos.sort()
    clusters = 1 + int(np.count_nonzero(np.diff(pos) > cluster_radius))
    return True, clusters


def _refine_brackets(
    spec: FunctionSpec, ell: float, lo: np.ndarray, hi: np.ndarray, flo: np.ndarray
) -> np.ndarray:
    for _ in range(BISECTION_DEPTH):
        mid = 0.5 * (lo + hi)
        upper = np.clip(mid + ell, 0.0, 1.0)
        fmid = evaluate_array(spec, upper) - evaluate_array(spec, mid)
        left = flo * fmid < 0
        hi = np.where(left, mid, hi)
        lo = np.where(left, lo, mid)
        flo = np.where(left, flo, fmid)
    return 0.5 * (lo + hi)


def chord_present(
    spec: FunctionSpec,
    ell: float,
    x_res: float = DEFAULT_X_RES,
    tol: float = DEFAULT_TOL,
) -> Tuple[bool, List[float]]:
    """Whether f has a horizontal chord of length ell, with refined witnesses."""
    ell = float(ell)
    if not 0.0 <= ell <= 1.0:
        raise OutOfRange(f"chord length {ell} outside [0,1]")
    xs, d = _diff_profile(spec, ell, x_res)
    tang = np.abs(d) <= tol
    bracket = _bracket_mask(d, tang)
    witnesses = list(xs[tang])
    if bracket.any():
        roots = _refine_brackets(
            spec, ell, xs[:-1][bracket].copy(), xs[1:][bracket].copy(), d[:-1][bracket].copy()
        )
        witnesses.extend(roots.tolist())
    witnesses.sort()
    return (len(witnesses) > 0), witnesses


def chord_multiplicity(
    spec: FunctionSpec,
    ell: float,
    x_res: float = DEFAULT_X_RES,
    tol: float = DEFAULT_TOL,
    cluster_radius: float = DEFAULT_CLUSTER_RADIUS,
) -> int:
    """Number of witness clusters for the chord ell; CONTINUUM when d vanishes on a run."""
    ell = float(ell)
    if not 0.0 <= ell <= 1.0:
        raise OutOfRange(f"chord length {ell} outside [0,1]")
    _, count = _presence_and_count(spec, ell, x_res, tol, cluster_radius)
    return count


@dataclass(eq=False)
class ChordScanReport:
    fn: str
    ell_res: float
    ell_count: int
    presence: np.ndarray
    multiplicity: np.ndarray
    h_approx: Tuple[Tuple[float, float], ...]
    h_star_approx: Tuple[Tuple[float, float], ...]
    x_res: float
    tol: float
    cluster_radius: float

    def ell_value(self, i: int) -> float:
        return i / (self.ell_count - 1)

    def to_json(self) -> dict:
        runs = []
        i = 0
        p = self.presence
        while i < len(p):
            if p[i]:
                j = i
                while j + 1 < len(p) and p[j + 1]:
                    j += 1
                runs.append([i, j - i + 1])
                i = j + 1
            else:
                i += 1
        sparse = [
            [int(i), int(m)]
            for i, m in enumerate(self.multiplicity)
            if m not in (0, 1)
        ]
        return {
            "fn": self.fn,
            "ell_res": self.ell_res,
            "ell_count": self.ell_count,
            "x_res": self.x_res,
            "tol": self.tol,
            "cluster_radius": self.cluster_radius,
            "presence_runs": runs,
            "multiplicity_sparse": sparse,
            "continuum_sentinel": CONTINUUM,
            "h_approx": [[lo, hi] for lo, hi in self.h_approx],
            "h_star_approx": [[lo, hi] for lo, hi in self.h_star_approx],
        }


def _assemble_bands(presence: np.ndarray, n_grid: int) -> Tuple[tuple, tuple]:
    """Split [0,1] into presence runs and gaps, cutting at band midpoints.

    A run endpoint falling strictly inside the grid is only located to within
    one grid cell, so the boundary is reported halfway between the last
    present and first absent grid points.
    """
    step = 1.0 / (n_grid - 1)
    h: List[Tuple[float, float]] = []
    h_star: List[Tuple[float, float]] = []
    i = 0
    while i < n_grid:
        j = i
        while j + 1 < n_grid and presence[j + 1] == presence[i]:
            j += 1
        lo = 0.0 if i == 0 else (i - 0.5) * step
        hi = 1.0 if j == n_grid - 1 else (j + 0.5) * step
        (h if presence[i] else h_star).append((lo, hi))
        i = j + 1
    return tuple(h), tuple(h_star)


def scan(
    spec: FunctionSpec,
    ell_res: float = DEFAULT_ELL_RES,
    x_res: float = DEFAULT_X_RES,
    tol: float = DEFAULT_TOL,
    cluster_radius: float = DEFAULT_CLUSTER_RADIUS,
) -> ChordScanReport:
    """Presence and multiplicity of every chord length on the ell grid i/N."""
    if not 0.0 < ell_res <= 0.01 or not 0.0 < x_res <= 0.01:
        raise OutOfRange("resolutions must be positive and at most 1/100")
    n = int(round(1.0 / ell_res))
    count = n + 1
    presence = np.zeros(count, dtype=bool)
    multiplicity = np.zeros(count, dtype=np.int64)
    for i in range(count):
        ok, m = _presence_and_count(spec, i / n, x_res, tol, cluster_radius)
        presence[i] = ok
        multiplicity[i] = m
    h_approx, h_star = _assemble_bands(presence, count)
    return ChordScanReport(
        fn=describe(spec),
        ell_res=1.0 / n,
        ell_count=count,
        presence=presence,
        multiplicity=multiplicity,
        h_approx=h_approx,
        h_star_approx=h_star,
        x_res=x_res,
        tol=tol,
        cluster_radius=cluster_radius,
    )


def measure_check(report: ChordScanReport) -> float:
    """Fraction of ell grid points where a chord is present."""
    return float(np.count_nonzero(report.presence)) / report.ell_count


def sign_changes(spec: FunctionSpec, x_res: float = 1e-4) -> int:
    """Sign alternations of f over the interior grid, zeros skipped."""
    if x_res > 1e-3:
        raise OutOfRange("sign counting needs x_res <= 1/1000")
    xs = np.linspace(0.0, 1.0, int(round(1.0 / x_res)) + 1)
    vals = evaluate_array(spec, xs[1:-1])
    signs = np.sign(vals)
    signs = signs[np.abs(vals) > 1e-12]
    if len(signs) == 0:
        return 0
    return int(np.count_nonzero(np.diff(signs) != 0))


def levit_bound_check(spec: FunctionSpec, report: ChordScanReport) -> bool:
    """With n sign changes, [0, 1/floor((n+3)/2)] must be present, one grid step slack."""
    n = sign_changes(spec, min(report.x_res, 1e-3))
    beta = 1.0 / ((n + 3) // 2)
    grid_n = report.ell_count - 1
    top = int(math.floor((beta - report.ell_res) * grid_n))
    return bool(report.presence[: top + 1].all())


def nonisolated_check(report: ChordScanReport, m: int) -> bool:
    """1/m present and accompanied within 10 grid steps on at least one side."""
    if m < 2:
        raise OutOfRange(f"nonisolated_check needs m >= 2, got {m}")
    grid_n = report.ell_count - 1
    center = int(round(grid_n / m))
    if not report.presence[center]:
        raise OutOfRange(f"1/{m} is not present at this resolution; check the precondition")
    lo = max(center - 10, 0)
    hi = min(center + 10, grid_n)
    window = np.concatenate([report.presence[lo:center], report.presence[center + 1 : hi + 1]])
    return bool(window.any())


@dataclass(frozen=True)
class ConjectureKReport:
    n: int
    total: int
    agree: int
    disagreements: Tuple[float, ...]
    margin: float
    ell_res: float

    @property
    def agreement(self) -> float:
        return 1.0 if self.total == 0 else self.agree / self.total

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "total": self.total,
            "agree": self.agree,
            "agreement": self.agreement,
            "disagreements": list(self.disagreements),
            "margin": self.margin,
            "ell_res": self.ell_res,
        }


def conjecture_k_compare(
    n: int,
    ell_res: float = DEFAULT_ELL_RES,
    margin: float = 0.01,
    x_res: float = DEFAULT_X_RES,
    tol: float = DEFAULT_TOL,
) -> ConjectureKReport:
    """Evidence for H(g_n)* = V_n: scan presence vs exact membership, off-boundary.

    Grid points within margin of a boundary point of V_n are skipped; the rest
    must satisfy presence(ell) = not contains(V_n, ell) if the conjecture holds
    at this resolution. Reports counts and the disagreeing lengths; never
    asserts the conjecture.
    """
    report = scan(SineSum(n), ell_res=ell_res, x_res=x_res, tol=tol)
    vn = canonical_vn(n).v
    bounds = [Fraction(b) for b in boundary_points(vn)]
    margin_q = Fraction(margin).limit_denominator(10**6)
    grid_n = report.ell_count - 1
    total = 0
    agree = 0
    bad: List[float] = []
    for i in range(report.ell_count):
        ell_q = Fraction(i, grid_n)
        if any(abs(ell_q - b) <= margin_q for b in bounds):
            continue
        expected = not contains(vn, ell_q)
        total += 1
        if bool(report.presence[i]) == expected:
            agree += 1
        else:
            bad.append(i / grid_n)
    return ConjectureKReport(
        n=n, total=total, agree=agree, disagreements=tuple(bad),
        margin=margin, ell_res=report.ell_res,
    )


def invariance_check(
    spec: FunctionSpec,
    ell_res: float = DEFAULT_ELL_RES,
    x_res: float = DEFAULT_X_RES,
    tol: float = DEFAULT_TOL,
) -> bool:
    """Presence grid must not change under y-negation, y-scaling, or x-reflection."""
    base = scan(spec, ell_res=ell_res, x_res=x_res, tol=tol).presence
    for transform in (Negate(), ScaleY(2), ScaleY(Fraction(1, 2)), ReflectX()):
        other = scan(Composed(spec, transform), ell_res=ell_res, x_res=x_res, tol=tol).presence
        if not np.array_equal(base, other):
            return False
    return True


@dataclass(frozen=True)
class ChordVector:
    """Multiplicities m_k of the chord lengths k/n, k = 1..n.

    total_instances treats the CONTINUUM sentinel as its (huge) numeric value,
    which keeps "at least n instances" comparisons plain integer checks; dist
    counts how many of the n lengths appear at all.
    """

    n: int
    counts: Tuple[int, ...]

    @property
    def total_instances(self) -> int:
        return sum(self.counts)

    @property
    def distinct_lengths(self) -> int:
        return sum(1 for m in self.counts if m >= 1)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "counts": list(self.counts),
            "total_instances": self.total_instances,
            "distinct_lengths": self.distinct_lengths,
            "continuum_sentinel": CONTINUUM,
        }


def chord_vector(
    spec: FunctionSpec,
    n: int,
    x_res: float = DEFAULT_X_RES,
    tol: float = DEFAULT_TOL,
    cluster_radius: float = DEFAULT_CLUSTER_RADIUS,
) -> ChordVector:
    """Witness counts at ell = k/n; raises when the grid is too coarse to see UCT."""
    if n < 1:
        raise OutOfRange(f"chord_vector needs n >= 1, got {n}")
    counts = tuple(
        chord_multiplicity(spec, k / n, x_res=x_res, tol=tol, cluster_radius=cluster_radius)
        for k in range(1, n + 1)
    )
    vec = ChordVector(n=n, counts=counts)
    if counts[0] < 1:
        raise InvariantViolation(
            f"m_1 = 0 at ell = 1/{n}: resolution too coarse to resolve the universal chord"
        )
    if vec.total_instances < n:
        raise InvariantViolation(
            f"sum of multiplicities {vec.total_instances} < n = {n}: resolution too coarse"
        )
    return vec


def levy_constant_residual(spec: Levy, x_res: float = DEFAULT_X_RES) -> float:
    """Max deviation of f(x-ell) - f(x) from the closed form ell*|sin(pi/ell)|."""
    ell = float(spec.ell)
    constant = ell * abs(math.sin(math.pi / ell))
    xs = np.linspace(ell, 1.0, int(round((1.0 - ell) / x_res)) + 1)
    lower = np.clip(xs - ell, 0.0, 1.0)
    diff = evaluate_array(spec, lower) - evaluate_array(spec, xs)
    return float(np.max(np.abs(diff - constant)))
