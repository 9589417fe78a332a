"""Function specimens: evaluation, exact endpoints, text round-trips."""

import math
from fractions import Fraction

import numpy as np
import pytest

from chordsets.errors import OutOfRange
from chordsets.functions import (
    Composed,
    Fd,
    Levy,
    Negate,
    PiecewiseLinear,
    ReflectX,
    ScaleY,
    SineSum,
    SingleSine,
    corpus,
    corpus_member,
    describe,
    evaluate,
    evaluate_array,
    evaluate_exact,
    parse_function,
)

F = Fraction


class TestEvaluation:
    def test_vanishes_at_both_ends(self):
        for name, spec in corpus():
            assert evaluate(spec, 0.0) == pytest.approx(0.0, abs=1e-12), name
            assert evaluate(spec, 1.0) == pytest.approx(0.0, abs=1e-12), name

    def test_single_sine_values(self):
        assert evaluate(SingleSine(), 0.25) == pytest.approx(1.0)
        assert evaluate(SingleSine(), 0.75) == pytest.approx(-1.0)

    def test_sinesum_is_sum_of_harmonics(self):
        xs = np.linspace(0.0, 1.0, 101)
        total = sum(np.sin(2 * math.pi * k * xs) for k in (1, 2, 3))
        assert np.allclose(evaluate_array(SineSum(3), xs), total)

    def test_levy_difference_is_constant(self):
        ell = 3 / 11
        spec = Levy(F(3, 11))
        # the shift difference never vanishes, so ell is not a chord
        step = -ell * abs(math.sin(math.pi / ell))
        for x in np.linspace(0.0, 1.0 - ell, 57):
            diff = evaluate(spec, x + ell) - evaluate(spec, x)
            assert diff == pytest.approx(step, abs=1e-12)

    def test_fd_signs_and_midpoint_pin(self):
        spec = Fd()
        assert evaluate(spec, 0.5) == 0.0
        assert evaluate(spec, 0.3) <= 0.0
        assert evaluate(spec, 0.7) >= 0.0
        # valleys at 1/k: x sin(pi/x) vanishes exactly there
        for k in (3, 4, 5):
            assert evaluate(spec, 1.0 / k) == pytest.approx(0.0, abs=1e-12)

    def test_fd_scalar_vs_array_agree(self):
        xs = np.linspace(0.0, 1.0, 257)
        arr = evaluate_array(Fd(), xs)
        for x, y in zip(xs, arr):
            assert evaluate(Fd(), float(x)) == y

    def test_pwl_interpolates(self):
        tent = corpus_member("tent")
        assert evaluate(tent, 0.25) == pytest.approx(0.5)
        assert evaluate_exact(tent, F(1, 4)) == F(1, 2)
        assert evaluate_exact(tent, F(1, 2)) == 1

    def test_evaluate_rejects_outside_unit(self):
        with pytest.raises(OutOfRange):
            evaluate(SingleSine(), 1.5)
        with pytest.raises(OutOfRange):
            evaluate_exact(corpus_member("tent"), F(-1, 2))


class TestTransforms:
    def test_negate_and_scale(self):
        xs = np.linspace(0.0, 1.0, 41)
        base = evaluate_array(SingleSine(), xs)
        assert np.allclose(evaluate_array(Composed(SingleSine(), Negate()), xs), -base)
        assert np.allclose(
            evaluate_array(Composed(SingleSine(), ScaleY(F(1, 2))), xs), 0.5 * base
        )

    def test_reflectx_substitutes(self):
        xs = np.linspace(0.0, 1.0, 41)
        got = evaluate_array(Composed(corpus_member("tent-asym"), ReflectX()), xs)
        want = evaluate_array(corpus_member("tent-asym"), 1.0 - xs)
        assert np.allclose(got, want)

    def test_scale_factor_must_be_nonzero(self):
        with pytest.raises(OutOfRange):
            ScaleY(0)


class TestSpecValidation:
    def test_pwl_must_anchor_at_zero(self):
        with pytest.raises(OutOfRange):
            PiecewiseLinear(((F(0), F(1)), (F(1), F(0))))
        with pytest.raises(OutOfRange):
            PiecewiseLinear(((F(0), F(0)), (F(1, 2), F(1))))
        with pytest.raises(OutOfRange):
            PiecewiseLinear(((F(0), F(0)), (F(1, 2), F(1)), (F(1, 2), F(0)), (F(1), F(0))))

    def test_parameter_gates(self):
        with pytest.raises(OutOfRange):
            SineSum(0)
        with pytest.raises(OutOfRange):
            Levy(F(3, 2))


class TestTextForm:
    def test_describe_parse_round_trip(self):
        specs = [spec for _, spec in corpus()]
        specs.append(Composed(SineSum(2), Negate()))
        specs.append(Composed(Fd(), ScaleY(F(2, 3))))
        specs.append(Composed(corpus_member("zigzag"), ReflectX()))
        for spec in specs:
            assert parse_function(describe(spec)) == spec

    def test_corpus_names_parse(self):
        for name, spec in corpus():
            assert parse_function(name) == spec
            assert corpus_member(name) == spec

    def test_nested_transform_text(self):
        text = "negate(scaley:1/2(sinesum:3))"
        spec = parse_function(text)
        assert spec == Composed(Composed(SineSum(3), ScaleY(F(1, 2))), Negate())
        assert describe(spec) == text

    def test_unknown_names_rejected(self):
        with pytest.raises(OutOfRange):
            parse_function("parabola")
        with pytest.raises(OutOfRange):
            corpus_member("parabola")
        with pytest.raises(OutOfRange):
            parse_function("fliplr(fd)")


class TestCorpus:
    def test_thirteen_members_distinct(self):
        members = corpus()
        assert len(members) == 13
        assert len({name for name, _ in members}) == 13
        assert len({spec for _, spec in members}) == 13
