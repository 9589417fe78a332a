"""Concrete test functions on [0,1] vanishing at both ends.

Every variant evaluates to 0 at x = 0 and x = 1, so horizontal chords of its
graph are exactly the lengths the scanner looks for. The corpus collects the
named specimens used across the experiment scripts: the sine families, the
Levy chord-avoiding function, the countably-many-valleys function f_D, and a
handful of piecewise-linear shapes.

Specs are small frozen dataclasses with a stable text form (describe/parse
round-trip) so scan reports and CLI flags can name them unambiguously.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

import numpy as np

from .errors import OutOfRange
from .intervals import as_rational, format_rational

__all__ = [
    "FunctionSpec",
    "SingleSine",
    "SineSum",
    "Levy",
    "Fd",
    "PiecewiseLinear",
    "Negate",
    "ScaleY",
    "ReflectX",
    "Composed",
    "evaluate",
    "evaluate_array",
    "evaluate_exact",
    "describe",
    "parse_function",
    "corpus",
    "corpus_member",
]


class FunctionSpec:
    """Marker base class; concrete variants below."""

    __slots__ = ()


@dataclass(frozen=True)
class SingleSine(FunctionSpec):
    """sin(2 pi x)."""


@dataclass(frozen=True)
class SineSum(FunctionSpec):
    """g_n(x) = sum_{k=1..n} sin(2 pi k x)."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise OutOfRange(f"sinesum needs n >= 1, got {self.n}")


@dataclass(frozen=True)
class Levy(FunctionSpec):
    """|sin(pi x / ell)| - x |sin(pi / ell)|; avoids the chord length ell."""

    ell: Fraction

    def __post_init__(self):
        object.__setattr__(self, "ell", as_rational(self.ell))
        if not 0 < self.ell < 1:
            raise OutOfRange(f"levy parameter must be in (0,1), got {self.ell}")


@dataclass(frozen=True)
class Fd(FunctionSpec):
    """-|x sin(pi/x)| on (0,1/2], |(1-x) sin(pi/(1-x))| on (1/2,1), 0 at 0,1/2,1.

    The value at 1/2 is 0 from either formula; it is pinned exactly so the
    scanner sees a clean zero instead of a rounding residue.
    """


@dataclass(frozen=True)
class PiecewiseLinear(FunctionSpec):
    """Linear interpolation through rational nodes from (0,0) to (1,0)."""

    nodes: Tuple[Tuple[Fraction, Fraction], ...]

    def __post_init__(self):
        nodes = tuple((as_rational(x), as_rational(y)) for x, y in self.nodes)
        object.__setattr__(self, "nodes", nodes)
        if len(nodes) < 2:
            raise OutOfRange("piecewise linear spec needs at least two nodes")
        if nodes[0] != (0, 0) or nodes[-1] != (1, 0):
            raise OutOfRange("nodes must run from (0,0) to (1,0)")
        xs = [x for x, _ in nodes]
        if any(b <= a for a, b in zip(xs, xs[1:])):
            raise OutOfRange("node x coordinates must be strictly increasing")


@dataclass(frozen=True)
class Negate:
    pass


@dataclass(frozen=True)
class ScaleY:
    c: Fraction

    def __post_init__(self):
        object.__setattr__(self, "c", as_rational(self.c))
        if self.c == 0:
            raise OutOfRange("scaley factor must be nonzero")


@dataclass(frozen=True)
class ReflectX:
    pass


Transform = Union[Negate, ScaleY, ReflectX]


@dataclass(frozen=True)
class Composed(FunctionSpec):
    """base with a y-negation, y-scaling, or the substitution x -> 1-x applied."""

    base: FunctionSpec
    transform: Transform


_TWO_PI = 2.0 * math.pi


def evaluate_array(spec: FunctionSpec, xs: np.ndarray) -> np.ndarray:
    """Vectorized evaluation; xs assumed inside [0,1] up to float jitter."""
    if isinstance(spec, SingleSine):
        return np.sin(_TWO_PI * xs)
    if isinstance(spec, SineSum):
        out = np.zeros_like(xs)
        for k in range(1, spec.n + 1):
            out += np.sin(_TWO_PI * k * xs)
        return out
    if isinstance(spec, Levy):
        ell = float(spec.ell)
        slope = abs(math.sin(math.pi / ell))
        return np.abs(np.sin(np.pi * xs / ell)) - xs * slope
    if isinstance(spec, Fd):
        out = np.zeros_like(xs)
        low = (xs > 0.0) & (xs <= 0.5)
        high = (xs > 0.5) & (xs < 1.0)
        xl = xs[low]
        out[low] = -np.abs(xl * np.sin(np.pi / xl))
        xh = 1.0 - xs[high]
        out[high] = np.abs(xh * np.sin(np.pi / xh))
        out[xs == 0.5] = 0.0
        return out
    if isinstance(spec, PiecewiseLinear):
        xp = np.array([float(x) for x, _ in spec.nodes])
        fp = np.array([float(y) for _, y in spec.nodes])
        return np.interp(xs, xp, fp)
    if isinstance(spec, Composed):
        t = spec.transform
        if isinstance(t, Negate):
            return -evaluate_array(spec.base, xs)
        if isinstance(t, ScaleY):
            return float(t.c) * evaluate_array(spec.base, xs)
        if isinstance(t, ReflectX):
            return evaluate_array(spec.base, 1.0 - xs)
    raise TypeError(f"unknown function spec {spec!r}")


def evaluate(spec: FunctionSpec, x: float) -> float:
    """Pointwise value; rejects x outside [0,1]."""
    xf = float(x)
    if not 0.0 <= xf <= 1.0:
        raise OutOfRange(f"evaluation point {x} outside [0,1]")
    return float(evaluate_array(spec, np.array([xf]))[0])


def evaluate_exact(spec: PiecewiseLinear, x) -> Fraction:
    """Exact rational interpolation, for endpoint and node identities."""
    x = as_rational(x)
    if not 0 <= x <= 1:
        raise OutOfRange(f"evaluation point {x} outside [0,1]")
    nodes = spec.nodes
    for (x0, y0), (x1, y1) in zip(nodes, nodes[1:]):
        if x0 <= x <= x1:
            return y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    raise AssertionError("nodes do not cover [0,1]")


def describe(spec: FunctionSpec) -> str:
    if isinstance(spec, SingleSine):
        return "singlesine"
    if isinstance(spec, SineSum):
        return f"sinesum:{spec.n}"
    if isinstance(spec, Levy):
        return f"levy:{format_rational(spec.ell)}"
    if isinstance(spec, Fd):
        return "fd"
    if isinstance(spec, PiecewiseLinear):
        body = ";".join(
            f"{format_rational(x)},{format_rational(y)}" for x, y in spec.nodes
        )
        return f"pwl:{body}"
    if isinstance(spec, Composed):
        inner = describe(spec.base)
        t = spec.transform
        if isinstance(t, Negate):
            return f"negate({inner})"
        if isinstance(t, ScaleY):
            return f"scaley:{format_rational(t.c)}({inner})"
        if isinstance(t, ReflectX):
            return f"reflectx({inner})"
    raise TypeError(f"unknown function spec {spec!r}")


def parse_function(text: str) -> FunctionSpec:
    """Inverse of describe; also accepts the short corpus names."""
    text = text.strip()
    if text.endswith(")"):
        head, _, rest = text.partition("(")
        inner = rest[:-1]
        if head == "negate":
            return Composed(parse_function(inner), Negate())
        if head == "reflectx":
            return Composed(parse_function(inner), ReflectX())
        if head.startswith("scaley:"):
            return Composed(parse_function(inner), ScaleY(as_rational(head[7:])))
        raise OutOfRange(f"unknown transform {head!r}")
    if text == "singlesine":
        return SingleSine()
    if text.startswith("sinesum:"):
        return SineSum(int(text[8:]))
    if text.startswith("levy:"):
        return Levy(as_rational(text[5:]))
    if text == "fd":
        return Fd()
    if text.startswith("pwl:"):
        nodes = []
        for pair in text[4:].split(";"):
            xs, _, ys = pair.partition(",")
            nodes.append((as_rational(xs.strip()), as_rational(ys.strip())))
        return PiecewiseLinear(tuple(nodes))
    for name, spec in corpus():
        if text == name:
            return spec
    raise OutOfRange(f"unknown function {text!r}")


def _pwl(*nodes) -> PiecewiseLinear:
    return PiecewiseLinear(tuple((Fraction(a), Fraction(b)) for a, b in nodes))


def corpus() -> Tuple[Tuple[str, FunctionSpec], ...]:
    """The named scan corpus: sines, Levy, f_D, and five piecewise-linear shapes."""
    f = Fraction
    return (
        ("singlesine", SingleSine()),
        ("sinesum:1", SineSum(1)),
        ("sinesum:2", SineSum(2)),
        ("sinesum:3", SineSum(3)),
        ("sinesum:4", SineSum(4)),
        ("sinesum:5", SineSum(5)),
        ("levy:3/11", Levy(f(3, 11))),
        ("fd", Fd()),
        ("tent", _pwl((0, 0), (f(1, 2), 1), (1, 0))),
        ("tent-asym", _pwl((0, 0), (f(1, 3), 1), (1, 0))),
        ("mshape", _pwl((0, 0), (f(1, 4), 1), (f(1, 2), f(1, 2)), (f(3, 4), 1), (1, 0))),
        ("zigzag", _pwl((0, 0), (f(1, 4), 1), (f(3, 4), -1), (1, 0))),
        ("sawtooth", _pwl((0, 0), (f(1, 8), 1), (f(3, 8), -1), (f(5, 8), 1), (f(7, 8), -1), (1, 0))),
    )


def corpus_member(name: str) -> FunctionSpec:
    for alias, spec in corpus():
        if alias == name:
            return spec
    raise OutOfRange(f"no corpus member named {name!r}")
