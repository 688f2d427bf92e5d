"""Tests for polynomials and rational transfer functions."""

import numpy as np
import pytest

from sea_mtt.core.lti import (
    Polynomial,
    RationalTF,
    eval_jw,
    evaluate,
    feedback,
    freqresp,
    poly_add,
    poly_mul,
    tf_add,
    tf_div,
    tf_mul,
)
from sea_mtt.exceptions import IdenticallySingular, PoleAtFrequency

OMEGAS = np.logspace(-2, 3, 50)


def _random_tf(rng: np.random.Generator) -> RationalTF:
    num = rng.uniform(0.1, 1.0, size=rng.integers(1, 5))
    den = rng.uniform(0.1, 1.0, size=rng.integers(2, 7))
    return RationalTF.from_coeffs(num, den)


class TestPolynomial:
    def test_trailing_zeros_are_dropped(self):
        assert Polynomial([1.0, 2.0, 0.0, 0.0]).coeffs == (1.0, 2.0)
        assert Polynomial([0.0, 0.0]).coeffs == (0.0,)
        assert Polynomial([]).is_zero()

    def test_add_cancels_leading_term(self):
        result = poly_add(Polynomial([1.0, 2.0, 3.0]), Polynomial([0.0, 0.0, -3.0]))
        assert result.coeffs == (1.0, 2.0)
        assert result.degree == 1

    def test_mul_is_convolution(self):
        # (1 + s)(2 + s) = 2 + 3s + s²
        assert poly_mul(Polynomial([1.0, 1.0]), Polynomial([2.0, 1.0])).coeffs == (2.0, 3.0, 1.0)

    def test_evaluates_at_complex_point(self):
        p = Polynomial([1.0, 0.0, 1.0])  # 1 + s²
        assert p(1j) == pytest.approx(0.0)
        assert p(2.0) == pytest.approx(5.0)

    def test_operators(self):
        s = Polynomial.s()
        assert (s * s + 1.0).coeffs == (1.0, 0.0, 1.0)
        assert (s - s).is_zero()


class TestRationalTF:
    def test_zero_denominator_rejected(self):
        with pytest.raises(IdenticallySingular):
            RationalTF.from_coeffs([1.0], [0.0])

    def test_sum_of_integrators(self):
        integrator = RationalTF.from_coeffs([1.0], [0.0, 1.0])
        total = tf_add(integrator, integrator)
        assert eval_jw(total, 1.0) == pytest.approx(-2j)

    def test_product_denominator(self):
        a = RationalTF.from_coeffs([1.0], [1.0, 1.0])
        b = RationalTF.from_coeffs([1.0], [2.0, 1.0])
        assert tf_mul(a, b).den.coeffs == (2.0, 3.0, 1.0)

    def test_division_by_zero_tf(self):
        with pytest.raises(IdenticallySingular):
            tf_div(RationalTF.constant(1.0), RationalTF.constant(0.0))

    def test_magnitude_of_known_plant(self):
        g = RationalTF.from_coeffs([1.0], [0.0, 1.0, 1.0])  # 1/(s² + s)
        assert abs(eval_jw(g, 1.0)) == pytest.approx(1.0 / np.sqrt(2.0), rel=1e-12)

    def test_pole_at_frequency(self):
        integrator = RationalTF.from_coeffs([1.0], [0.0, 1.0])
        with pytest.raises(PoleAtFrequency) as exc:
            eval_jw(integrator, 0.0)
        assert exc.value.omega == 0.0

    def test_negative_frequency_rejected(self):
        with pytest.raises(ValueError):
            eval_jw(RationalTF.constant(1.0), -1.0)

    def test_freqresp_marks_poles_as_nan(self):
        integrator = RationalTF.from_coeffs([1.0], [0.0, 1.0])
        values = freqresp(integrator, [0.0, 1.0])
        assert np.isnan(values[0])
        assert values[1] == pytest.approx(-1j)

    def test_conjugate_symmetry(self):
        rng = np.random.default_rng(7)
        g = _random_tf(rng)
        for w in OMEGAS:
            assert evaluate(g, -1j * w) == pytest.approx(np.conj(evaluate(g, 1j * w)), rel=1e-12)

    def test_product_evaluates_to_product(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            a, b = _random_tf(rng), _random_tf(rng)
            got = freqresp(tf_mul(a, b), OMEGAS)
            want = freqresp(a, OMEGAS) * freqresp(b, OMEGAS)
            np.testing.assert_allclose(got, want, rtol=1e-10)

    def test_sum_evaluates_to_sum(self):
        rng = np.random.default_rng(13)
        for _ in range(20):
            a, b = _random_tf(rng), _random_tf(rng)
            got = freqresp(tf_add(a, b), OMEGAS)
            want = freqresp(a, OMEGAS) + freqresp(b, OMEGAS)
            np.testing.assert_allclose(got, want, rtol=1e-9)

    def test_is_close_compares_pointwise(self):
        g = RationalTF.from_coeffs([1.0], [1.0, 1.0])
        scaled = RationalTF.from_coeffs([2.0], [2.0, 2.0])  # same function, no cancellation
        assert g.is_close(scaled, OMEGAS)
        assert not g.is_close(RationalTF.from_coeffs([1.0], [2.0, 1.0]), OMEGAS)


class TestFeedback:
    def test_unity_feedback_of_integrator(self):
        loop = feedback(RationalTF.from_coeffs([1.0], [0.0, 1.0]), RationalTF.constant(1.0))
        assert loop.num.coeffs == (1.0,)
        assert loop.den.coeffs == (1.0, 1.0)

    def test_constant_gains(self):
        loop = feedback(RationalTF.constant(2.0), RationalTF.constant(3.0))
        assert eval_jw(loop, 5.0) == pytest.approx(2.0 / 7.0)

    def test_zero_loop_returns_forward(self):
        forward = RationalTF.from_coeffs([1.0, 0.5], [3.0, 2.0, 1.0])
        loop = feedback(forward, RationalTF.constant(0.0))
        assert loop.is_close(forward, OMEGAS)

    def test_identically_singular_loop(self):
        with pytest.raises(IdenticallySingular):
            feedback(RationalTF.constant(-1.0), RationalTF.constant(1.0))

    def test_matches_closed_form(self):
        rng = np.random.default_rng(17)
        for _ in range(20):
            forward, loop = _random_tf(rng), _random_tf(rng)
            got = freqresp(feedback(forward, loop), OMEGAS)
            f = freqresp(forward, OMEGAS)
            want = f / (1.0 + f * freqresp(loop, OMEGAS))
            np.testing.assert_allclose(got, want, rtol=1e-9)
