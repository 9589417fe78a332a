"""Hopf sets: additivity, constructions, extension, and the symmetry identity."""

import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from chordsets.errors import (
    AdditivityViolation,
    IdentityFailure,
    NotMaximal,
    OutOfRange,
    PointInP,
)
from chordsets.hopf import (
    FULL_RAY_V,
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
from chordsets.intervals import (
    EMPTY,
    OpenInterval,
    contains,
    intersect,
    is_subset,
    make_union,
    measure,
    reflect,
)

from conftest import oracle_additive, random_union_common_q

F = Fraction


def U(*pairs):
    return make_union(*((F(a), F(b)) for a, b in pairs))


class TestAdditivity:
    def test_empty_and_full_ray_are_additive(self):
        assert is_additive(EMPTY)
        assert is_additive(FULL_RAY_V)

    def test_witness_fields_are_consistent(self):
        v = U(("1/4", "1/3"))
        w = additivity_witness(v)
        assert w is not None
        x, y, z = w
        assert contains(v, x) and contains(v, y)
        assert x + y == z
        assert z <= 1 and not contains(v, z)

    def test_sum_landing_exactly_on_one_is_a_violation(self):
        # every pair sum below 1 stays inside, but 17/48 + 31/48 = 1 escapes
        v = U(("1/3", "1/2"), ("5/8", "1"))
        w = additivity_witness(v)
        assert w is not None and w[2] == 1

    def test_make_hopf_rejects_with_payload(self):
        with pytest.raises(AdditivityViolation) as err:
            make_hopf(U(("1/4", "1/3")))
        payload = err.value.payload()
        assert payload["type"] == "additivity_violation"
        assert set(payload["witness"]) == {"x", "y", "sum"}

    def test_make_hopf_accepts_raw_pairs(self):
        h = make_hopf([(F(1, 3), F(1, 2)), (F(2, 3), F(1))])
        assert isinstance(h, HopfSet)
        assert h.v == canonical_vn(2).v

    def test_out_of_unit_interval_rejected(self):
        with pytest.raises(OutOfRange):
            is_additive(U(("1/2", "3/2")))

    @given(st.integers(min_value=0, max_value=2**32 - 1), st.sampled_from([6, 8, 12, 24]))
    def test_is_additive_matches_grid_oracle(self, seed, q):
        v = random_union_common_q(random.Random(seed), q)
        assert is_additive(v) == oracle_additive(v, q)


class TestCanonical:
    def test_exact_endpoints_and_measure(self):
        for n in range(1, 12):
            h = canonical_vn(n)
            assert len(h.v.intervals) == n
            for k, piece in enumerate(h.v.intervals, start=1):
                assert piece.lo == F(k, n + 1) and piece.hi == F(k, n)
            assert measure(h.v) == F(1, 2)
            assert is_maximal(h)

    def test_consecutive_pieces_never_touch(self):
        for n in range(2, 12):
            pieces = canonical_vn(n).v.intervals
            for a, b in zip(pieces, pieces[1:]):
                assert a.hi < b.lo

    def test_rejects_nonpositive_n(self):
        with pytest.raises(OutOfRange):
            canonical_vn(0)


class TestTailThreshold:
    def test_j_n_reaches_one(self):
        for n in range(1, 10):
            assert tail_threshold(OpenInterval(F(1, n + 1), F(1, n))) == 1

    def test_low_half_interval(self):
        assert tail_threshold(OpenInterval(F(1, 3), F(1, 2))) == 1
        assert tail_threshold(OpenInterval(F(2, 5), F(1, 2))) == 2

    def test_wide_interval_threshold_is_double_lo(self):
        # width >= lo means the 2-fold sum already overlaps everything beyond
        assert tail_threshold(OpenInterval(F(1, 4), F(3, 4))) == F(1, 2)

    def test_requires_positive_lo(self):
        with pytest.raises(OutOfRange):
            tail_threshold(OpenInterval(F(0), F(1, 2)))


class TestExtension:
    def test_single_seed_example(self):
        h = maximal_extension(U(("2/5", "1/2")))
        assert h.v == U(("2/5", "1/2"), ("3/5", "1"))
        assert is_maximal(h)

    def test_two_piece_seed(self):
        h = maximal_extension(U(("1/3", "2/5"), ("13/30", "1/2")))
        assert h.v == U(("1/3", "2/5"), ("13/30", "1/2"), ("17/30", "3/5"), ("2/3", "1"))
        assert measure(h.v) == F(1, 2)

    def test_contains_input_and_idempotent(self, hopf_pool):
        for h in hopf_pool:
            ext = maximal_extension(h)
            assert is_subset(h.v, ext.v) or h.v == ext.v
            assert is_maximal(ext)
            assert maximal_extension(ext).v == ext.v

    def test_already_maximal_is_fixed_point(self):
        for n in range(1, 8):
            h = canonical_vn(n)
            assert maximal_extension(h).v == h.v

    def test_full_ray_has_no_extension(self):
        with pytest.raises(OutOfRange):
            maximal_extension(FULL_RAY_V)

    def test_reflection_disjointness_of_maximal_sets(self, hopf_pool):
        for h in hopf_pool:
            if is_maximal(h):
                assert intersect(reflect(h.v), h.v) == EMPTY

    def test_no_pieces_touch_at_reciprocals(self, hopf_pool):
        # components of an additive set cannot share the endpoint 1/m
        for h in hopf_pool:
            pieces = h.v.intervals
            for a, b in zip(pieces, pieces[1:]):
                if a.hi == b.lo:
                    for m in range(2, 11):
                        assert a.hi != F(1, m)


class TestPicksinwn:
    def test_matches_extension_for_seed_in_j1_range(self):
        h = picksinwn_construct(2, U(("2/5", "1/2")))
        assert h.v == U(("2/5", "1/2"), ("3/5", "1"))

    def test_outputs_are_additive_and_maximal(self):
        cases = [
            (2, U(("3/8", "11/24"))),
            (3, U(("7/24", "1/3"))),
            (4, U(("5/24", "1/4"))),
        ]
        for n, w in cases:
            h = picksinwn_construct(n, w)
            assert is_maximal(h)
            assert is_subset(w, h.v)

    def test_rejects_seed_outside_window(self):
        with pytest.raises(OutOfRange):
            picksinwn_construct(2, U(("1/4", "1/2")))
        with pytest.raises(OutOfRange):
            picksinwn_construct(2, EMPTY)
        with pytest.raises(OutOfRange):
            picksinwn_construct(1, U(("1/2", "1")))


class TestIsolatedPoint:
    def test_structure_around_the_puncture(self):
        a = F(3, 11)
        h = isolated_point_set(a)
        assert h.v == U(("1/4", "3/11"), ("3/11", "1/3"), ("1/2", "2/3"), ("3/4", "1"))
        left = [iv for iv in h.v.intervals if iv.hi == a]
        right = [iv for iv in h.v.intervals if iv.lo == a]
        assert len(left) == 1 and len(right) == 1
        assert not contains(h.v, a)

    def test_still_maximal_and_additive(self):
        for a in (F(5, 24), F(2, 5), F(3, 8)):
            h = isolated_point_set(a)
            assert is_maximal(h)

    def test_reciprocals_can_never_be_isolated(self):
        for n in (2, 3, 7):
            with pytest.raises(PointInP):
                isolated_point_set(F(1, n))

    def test_puncture_must_be_interior(self):
        with pytest.raises(OutOfRange):
            isolated_point_set(F(3, 2))


class TestSymmetryIdentity:
    def test_canonical_v1(self):
        report = symmetry_identity(canonical_vn(1))
        assert report.closed_pieces == ((F(0), F(1, 2)), (F(1), F(1)))
        assert report.isolated_points == (F(1),)

    def test_punctured_set_reports_the_puncture(self):
        report = symmetry_identity(isolated_point_set(F(2, 5)))
        assert report.closed_pieces == (
            (F(0), F(1, 3)),
            (F(2, 5), F(2, 5)),
            (F(1, 2), F(2, 3)),
            (F(1), F(1)),
        )
        assert report.isolated_points == (F(2, 5), F(1))

    def test_holds_exactly_across_canonical_family(self):
        for n in range(1, 11):
            report = symmetry_identity(canonical_vn(n))
            assert report.closed_pieces[0] == (F(0), F(1, n + 1))
            assert report.closed_pieces[-1] == (F(1), F(1))

    def test_holds_for_pool(self, hopf_pool):
        for h in hopf_pool:
            if is_maximal(h):
                report = symmetry_identity(h)
                assert report.closed_pieces[-1] == (F(1), F(1))

    def test_requires_maximality(self):
        with pytest.raises(NotMaximal):
            symmetry_identity(make_hopf(U(("1/2", "3/4"))))

    def test_json_shape(self):
        data = symmetry_identity(canonical_vn(2)).to_json()
        assert data["closed_pieces"][0] == ["0", "1/3"]
        assert data["isolated_points"] == ["1"]


class TestRoundTrip:
    def test_hopf_json(self):
        h = canonical_vn(3)
        assert HopfSet.from_json(h.to_json()) == h
