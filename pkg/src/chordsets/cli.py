"""Command-line front end.

One subcommand per library operation. Payloads are deterministic: JSON with
stable key order, or CSV for tabular outputs, never a timestamp. A single
comment line of run metadata precedes the payload unless --no-meta is given.
Exit codes: 0 success (including verify-style results with "ok": false),
1 domain error with a structured JSON diagnosis, 2 usage error.

Set-valued flags accept either the JSON encoding the CLI itself emits
(e.g. '[["2/5","1/2"],["3/5","1"]]') or the compact form "2/5,1/2;3/5,1".
Rational strings are strict: "p/q" or integers, never floats.
"""

from __future__ import annotations

import argparse
import io
import json
import sys
from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import DomainError
from .functions import corpus, parse_function
from .hopf import (
    HopfSet,
    additivity_witness,
    canonical_vn,
    is_maximal,
    isolated_point_set,
    make_hopf,
    maximal_extension,
    picksinwn_construct,
    symmetry_identity,
)
from .integer_sets import (
    IntegerHopfSet,
    enumerate_census,
    n3_family,
    picksinwn_origin_detail,
    verify,
)
from .intervals import (
    OpenIntervalUnion,
    as_rational,
    format_rational,
    make_union,
    measure,
    normalize,
)
from .scan import (
    CONTINUUM,
    DEFAULT_CLUSTER_RADIUS,
    DEFAULT_ELL_RES,
    DEFAULT_TOL,
    DEFAULT_X_RES,
    chord_vector,
    conjecture_k_compare,
    invariance_check,
    scan,
)
from .synthesis import synthesize


def _dumps(data) -> str:
    return json.dumps(data, separators=(", ", ": "))


def _parse_union(text: str) -> OpenIntervalUnion:
    text = text.strip()
    if text.startswith("["):
        return OpenIntervalUnion.from_json(json.loads(text))
    pairs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = [p.strip() for p in chunk.split(",")]
        if len(parts) != 2:
            raise ValueError(f"interval {chunk!r} is not 'lo,hi'")
        pairs.append((as_rational(parts[0]), as_rational(parts[1])))
    if not pairs:
        raise ValueError("empty set literal")
    return normalize(pairs)


def _parse_int_set(intervals: str, tail: int) -> IntegerHopfSet:
    pairs = []
    for chunk in intervals.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = [p.strip() for p in chunk.split(",")]
        if len(parts) != 2:
            raise ValueError(f"interval {chunk!r} is not 'lo,hi'")
        pairs.append((int(parts[0]), int(parts[1])))
    return IntegerHopfSet(tuple(pairs), tail)


def _parse_target(text: str) -> HopfSet:
    """Targets: 'vn:3', 'picksinwn:2:2/5,1/2', 'm1:3/5,4/5', or set JSON/compact."""
    if text.startswith("vn:"):
        return canonical_vn(int(text[3:]))
    if text.startswith("picksinwn:"):
        rest = text[len("picksinwn:") :]
        head, _, w_text = rest.partition(":")
        if not w_text:
            raise ValueError("picksinwn target needs 'picksinwn:<n>:<w set>'")
        return picksinwn_construct(int(head), _parse_union(w_text))
    if text.startswith("m1:"):
        return make_hopf(_parse_union(text[3:]))
    return make_hopf(_parse_union(text))


def _csv(rows: List[list], header: List[str]) -> str:
    buf = io.StringIO()
    buf.write(",".join(header) + "\n")
    for row in rows:
        buf.write(",".join(str(cell) for cell in row) + "\n")
    return buf.getvalue().rstrip("\n")


def _require_json(args, parser):
    if args.format != "json":
        parser.error(f"subcommand {args.subcommand!r} only emits json")


# per-subcommand handlers: return the payload string


def _cmd_hopf_check(args, parser) -> str:
    _require_json(args, parser)
    v = _parse_union(args.set)
    witness = additivity_witness(v)
    out = {
        "ok": witness is None,
        "measure": format_rational(measure(v)),
    }
    if witness is None:
        out["maximal"] = is_maximal(make_hopf(v))
    else:
        x, y, total = witness
        out["witness"] = {"x": str(x), "y": str(y), "sum": str(total)}
    return _dumps(out)


def _cmd_hopf_extend(args, parser) -> str:
    _require_json(args, parser)
    extended = maximal_extension(_parse_union(args.set))
    return _dumps(extended.to_json())


def _cmd_hopf_vn(args, parser) -> str:
    _require_json(args, parser)
    return _dumps(canonical_vn(args.n).to_json())


def _cmd_hopf_isolate(args, parser) -> str:
    _require_json(args, parser)
    return _dumps(isolated_point_set(as_rational(args.a)).to_json())


def _cmd_hopf_symmetry(args, parser) -> str:
    _require_json(args, parser)
    report = symmetry_identity(make_hopf(_parse_union(args.set)))
    return _dumps(report.to_json())


def _cmd_int_verify(args, parser) -> str:
    _require_json(args, parser)
    s = _parse_int_set(args.intervals, args.tail)
    result = verify(s)
    out = result.to_json()
    if result.ok:
        detail = picksinwn_origin_detail(s)
        out["picksinwn"] = detail.origin
        if detail.family is not None:
            out["family"] = detail.family
    return _dumps(out)


def _cmd_int_enumerate(args, parser) -> str:
    entries = enumerate_census(args.n, args.max, jobs=args.jobs)
    if args.format == "csv":
        counts: dict = {}
        for e in entries:
            counts[e.max_endpoint] = counts.get(e.max_endpoint, 0) + 1
        rows = [[args.n, m, counts[m]] for m in sorted(counts)]
        return _csv(rows, ["n", "M", "count"])
    return "\n".join(_dumps(e.to_json()) for e in entries)


def _cmd_int_n3(args, parser) -> str:
    sets = n3_family(args.a_max)
    if args.format == "csv":
        rows = [[s.finite_intervals[0][0], s.finite_intervals[0][1], s.tail_start] for s in sets]
        return _csv(rows, ["a", "b", "tail"])
    lines = []
    for s in sets:
        out = s.to_json()
        out["n"] = s.n_intervals
        out["picksinwn"] = picksinwn_origin_detail(s).origin
        lines.append(_dumps(out))
    return "\n".join(lines)


def _cmd_scan(args, parser) -> str:
    spec = parse_function(args.fn)
    report = scan(
        spec,
        ell_res=args.ell_res,
        x_res=args.x_res,
        tol=args.tol,
        cluster_radius=args.cluster_radius,
    )
    if args.plot_data is not None:
        rows = [
            [report.ell_value(i), int(report.presence[i]), int(report.multiplicity[i])]
            for i in range(report.ell_count)
        ]
        with open(args.plot_data, "w") as fh:
            fh.write(_csv(rows, ["ell", "present", "multiplicity"]) + "\n")
    out = report.to_json()
    if args.snap:
        out["h_star_snapped"] = [
            [str(Fraction(a).limit_denominator(64)), str(Fraction(b).limit_denominator(64))]
            for a, b in report.h_star_approx
        ]
    if args.format == "csv":
        rows = [
            [report.ell_value(i), int(report.presence[i]), int(report.multiplicity[i])]
            for i in range(report.ell_count)
        ]
        return _csv(rows, ["ell", "present", "multiplicity"])
    return _dumps(out)


def _cmd_chord_vector(args, parser) -> str:
    vec = chord_vector(parse_function(args.fn), args.n, x_res=args.x_res, tol=args.tol)
    if args.format == "csv":
        rows = [[k + 1, c] for k, c in enumerate(vec.counts)]
        return _csv(rows, ["k", "count"])
    return _dumps(vec.to_json())


def _cmd_conjecture_k(args, parser) -> str:
    report = conjecture_k_compare(
        args.n, ell_res=args.ell_res, margin=args.margin, x_res=args.x_res, tol=args.tol
    )
    if args.format == "csv":
        rows = [[report.n, report.total, report.agree, report.agreement]]
        return _csv(rows, ["n", "total", "agree", "agreement"])
    return _dumps(report.to_json())


def _cmd_synth(args, parser) -> str:
    _require_json(args, parser)
    target = _parse_target(args.target)
    result = synthesize(target, family_hint=args.family)
    return _dumps(result.to_json())


def _cmd_invariance(args, parser) -> str:
    _require_json(args, parser)
    names = [args.fn] if args.fn else [name for name, _ in corpus()]
    out = {name: invariance_check(parse_function(name)) for name in names}
    return _dumps({"invariant": all(out.values()), "functions": out})


def _add_common(sub):
    sub.add_argument("--out", default=None, help="write output to a file instead of stdout")
    sub.add_argument("--format", choices=("json", "csv"), default="json")
    sub.add_argument("--jobs", type=int, default=1)
    sub.add_argument("--no-meta", action="store_true", help="suppress the leading comment line")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chordsets",
        description="Exact Hopf-set algebra and numerical chord scanning.",
    )
    subs = parser.add_subparsers(dest="subcommand", required=True)

    p = subs.add_parser("hopf-check", help="additivity and maximality of a unit-interval set")
    p.add_argument("--set", required=True, help="open set inside (0,1], JSON or 'lo,hi;...'")
    p.set_defaults(handler=_cmd_hopf_check)

    p = subs.add_parser("hopf-extend", help="extend a set to a maximal Hopf set")
    p.add_argument("--set", required=True)
    p.set_defaults(handler=_cmd_hopf_extend)

    p = subs.add_parser("hopf-vn", help="the canonical n-component maximal set")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_cmd_hopf_vn)

    p = subs.add_parser("hopf-isolate", help="maximal set whose complement isolates the point a")
    p.add_argument("--a", required=True, help="rational point in (0,1) off the reciprocal ladder")
    p.set_defaults(handler=_cmd_hopf_isolate)

    p = subs.add_parser("hopf-symmetry", help="closed-complement symmetry report of a maximal set")
    p.add_argument("--set", required=True)
    p.set_defaults(handler=_cmd_hopf_symmetry)

    p = subs.add_parser("int-verify", help="diagnose an integer-endpoint set")
    p.add_argument("--intervals", required=True, help="finite intervals 'lo,hi;lo,hi;...'")
    p.add_argument("--tail", type=int, required=True, help="start of the infinite tail")
    p.set_defaults(handler=_cmd_int_verify)

    p = subs.add_parser("int-enumerate", help="census of primitive maximal integer sets")
    p.add_argument("--n", type=int, required=True, help="component count, tail included")
    p.add_argument("--max", type=int, required=True, help="largest tail start to search")
    p.set_defaults(handler=_cmd_int_enumerate)

    p = subs.add_parser("int-n3", help="closed-form three-component family")
    p.add_argument("--a-max", type=int, required=True)
    p.set_defaults(handler=_cmd_int_n3)

    p = subs.add_parser("scan", help="chord presence/multiplicity over the length grid")
    p.add_argument("--fn", required=True, help="function spec, e.g. sinesum:3 or fd")
    p.add_argument("--ell-res", type=float, default=DEFAULT_ELL_RES)
    p.add_argument("--x-res", type=float, default=DEFAULT_X_RES)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--cluster-radius", type=float, default=DEFAULT_CLUSTER_RADIUS)
    p.add_argument("--plot-data", default=None, help="also write (ell, present, multiplicity) CSV here")
    p.add_argument("--snap", action="store_true", help="add h_star endpoints snapped to denominator <= 64")
    p.set_defaults(handler=_cmd_scan)

    p = subs.add_parser("chord-vector", help="multiplicity vector at lengths k/n")
    p.add_argument("--fn", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x-res", type=float, default=DEFAULT_X_RES)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(handler=_cmd_chord_vector)

    p = subs.add_parser("conjecture-k", help="sine-sum scan versus the canonical set")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell-res", type=float, default=DEFAULT_ELL_RES)
    p.add_argument("--margin", type=float, default=0.01)
    p.add_argument("--x-res", type=float, default=DEFAULT_X_RES)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(handler=_cmd_conjecture_k)

    p = subs.add_parser("synth", help="build and verify a candidate for a target set")
    p.add_argument("--target", required=True, help="vn:<n> | picksinwn:<n>:<w> | m1:<lo,hi> | set literal")
    p.add_argument("--family", default=None, help="restrict matching: vn, picksinwn, or m1")
    p.set_defaults(handler=_cmd_synth)

    p = subs.add_parser("invariance", help="presence-grid invariance under y/x symmetries")
    p.add_argument("--fn", default=None, help="one function; default checks the whole corpus")
    p.set_defaults(handler=_cmd_invariance)

    for sub in subs.choices.values():
        _add_common(sub)
    return parser


def _meta_line(args) -> str:
    skip = {"handler", "out", "no_meta"}
    parts = [f"{k.replace('_', '-')}={v}" for k, v in sorted(vars(args).items()) if k not in skip and v is not None]
    return "# chordsets " + " ".join(parts)


def _emit(args, text: str) -> None:
    lines = [] if args.no_meta else [_meta_line(args)]
    lines.append(text)
    body = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.handler(args, parser)
    except DomainError as err:
        sys.stdout.write(_dumps(err.payload()) + "\n")
        return 1
    except (ValueError, json.JSONDecodeError) as err:
        parser.error(str(err))
    _emit(args, payload)
    return 0


if __name__ == "__main__":
    sys.exit(main())
