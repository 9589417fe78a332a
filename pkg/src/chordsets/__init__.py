"""Exact algebra on open additive chord-complement sets, plus a grid scanner.

The exact side (intervals, hopf, integer_sets) answers set questions with
rational arithmetic; the numeric side (functions, scan, synthesis) probes
concrete functions for horizontal chords at fixed resolution. The CLI in
chordsets.cli fronts both.
"""

from .errors import (
    AdditivityViolation,
    DomainError,
    IdentityFailure,
    InvariantViolation,
    NotMaximal,
    OutOfRange,
    PointInP,
    UnsupportedTarget,
    VerificationFailed,
)
from .functions import (
    Composed,
    Fd,
    FunctionSpec,
    Levy,
    Negate,
    PiecewiseLinear,
    ReflectX,
    ScaleY,
    SingleSine,
    SineSum,
    corpus,
    corpus_member,
    describe,
    evaluate,
    evaluate_array,
    parse_function,
)
from .hopf import (
    ChordComplementReport,
    HopfSet,
    additivity_witness,
    canonical_vn,
    is_additive,
    is_maximal,
    isolated_point_set,
    make_hopf,
    maximal_extension,
    picksinwn_construct,
    symmetry_identity,
    tail_threshold,
)
from .integer_sets import (
    CensusEntry,
    IntegerHopfSet,
    VerifyResult,
    enumerate_census,
    four_interval_example,
    n3_family,
    picksinwn_origin,
    picksinwn_origin_detail,
    to_hopf,
    verify,
)
from .intervals import (
    EMPTY,
    OpenInterval,
    OpenIntervalUnion,
    as_rational,
    boundary_points,
    complement_in,
    contains,
    format_rational,
    intersect,
    k_fold_sum,
    make_union,
    measure,
    minkowski_sum,
    normalize,
    reflect,
    scale,
    union,
)
from .scan import (
    CONTINUUM,
    ChordScanReport,
    ChordVector,
    ConjectureKReport,
    chord_multiplicity,
    chord_present,
    chord_vector,
    conjecture_k_compare,
    invariance_check,
    levit_bound_check,
    levy_constant_residual,
    measure_check,
    nonisolated_check,
    scan,
    sign_changes,
)
from .synthesis import SynthesisResult, synthesize, verify_against

__version__ = "0.1.0"
