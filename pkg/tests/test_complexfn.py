import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import zetadelta as zd
from zetadelta.backend import kernels
from zetadelta.errors import DomainError, PoleError

from oracles import (
    EULER_GAMMA,
    bisect_root,
    product_log_gamma,
    wrapped_log_difference,
)

TWO_PI = 2.0 * math.pi

# frozen golden value from product_log_gamma(1+2j, 10**6); the slow test
# below re-derives it
LOG_GAMMA_1_2I = complex(-1.8760787864309294, 0.12964631630978873)

# frozen root of theta(t) = 0 from bisect_root on (10, 20)
G0 = 17.845599540410788


class TestLogGamma:
    def test_at_one(self):
        assert abs(zd.log_gamma(1.0)) < 1e-14

    def test_at_half(self):
        assert zd.log_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), abs=1e-14)

    def test_golden_product_value(self):
        assert zd.log_gamma(1 + 2j) == pytest.approx(LOG_GAMMA_1_2I, abs=1e-12)

    def test_product_oracle_rederives_golden(self):
        oracle = product_log_gamma(1 + 2j, 1_000_000)
        assert oracle == pytest.approx(LOG_GAMMA_1_2I, abs=1e-13)

    def test_exp_recovers_gamma(self):
        # Gamma(5) = 24
        assert cmath.exp(zd.log_gamma(5.0)) == pytest.approx(24.0, rel=1e-13)

    @pytest.mark.parametrize("s", [0.0, -1.0, -7.0])
    def test_pole_error(self, s):
        with pytest.raises(PoleError):
            zd.log_gamma(s)

    def test_continuity_near_negative_axis_offsets(self):
        # principal branch: conjugate symmetry off the cut
        for z in [complex(-2.5, 0.3), complex(-0.4, 1.2), complex(-5.1, 40.0)]:
            assert zd.log_gamma(z.conjugate()) == pytest.approx(
                zd.log_gamma(z).conjugate(), rel=1e-13, abs=1e-13
            )


class TestDigamma:
    def test_at_one(self):
        assert zd.digamma(1.0) == pytest.approx(-EULER_GAMMA, abs=1e-13)

    def test_at_two(self):
        assert zd.digamma(2.0) == pytest.approx(1.0 - EULER_GAMMA, abs=1e-13)

    def test_at_half(self):
        assert zd.digamma(0.5) == pytest.approx(
            -EULER_GAMMA - 2.0 * math.log(2.0), abs=1e-13
        )

    def test_pole_error(self):
        with pytest.raises(PoleError):
            zd.digamma(-3.0)

    @given(
        st.floats(-0.9, 2.5),
        st.floats(0.2, 300.0),
    )
    def test_recurrence(self, re, im):
        s = complex(re, im)
        lhs = zd.digamma(s + 1)
        rhs = zd.digamma(s) + 1.0 / s
        assert lhs == pytest.approx(rhs, rel=1e-11, abs=1e-11)


class TestDelta:
    def test_zero_at_nonpositive_even(self):
        assert zd.delta(0.0) == 0
        assert zd.delta(-2.0) == 0
        assert zd.delta(-6.0) == 0

    def test_closed_form_at_minus_one(self):
        assert zd.delta(-1.0) == pytest.approx(-1.0 / (2.0 * math.pi**2), rel=1e-13)

    def test_pole_at_positive_odd(self):
        for s in (1.0, 3.0, 9.0):
            with pytest.raises(PoleError):
                zd.delta(s)

    def test_positive_even_from_reciprocal(self):
        # delta(2) = 1/delta(-1) = -2 pi^2
        assert zd.delta(2.0) == pytest.approx(-2.0 * math.pi**2, rel=1e-13)

    def test_unit_modulus_on_critical_line(self):
        assert abs(abs(zd.delta(complex(0.5, 25.0))) - 1.0) <= 1e-12

    def test_reciprocal_identity_random(self, rng):
        worst = 0.0
        for _ in range(1000):
            s = complex(rng.uniform(-1.0, 2.0), rng.uniform(5.0, 500.0))
            worst = max(worst, abs(zd.delta(s) * zd.delta(1.0 - s) - 1.0))
        assert worst <= 1e-9

    @given(st.floats(-1.0, 2.0), st.floats(5.0, 500.0))
    def test_reciprocal_identity_property(self, sigma, t):
        s = complex(sigma, t)
        assert abs(zd.delta(s) * zd.delta(1.0 - s) - 1.0) <= 1e-9

    @given(st.floats(-1.0, 2.0), st.floats(1.0, 2000.0))
    def test_conjugate_symmetry(self, sigma, t):
        s = complex(sigma, t)
        v = zd.delta(s)
        assert zd.delta(s.conjugate()) == pytest.approx(
            v.conjugate(), rel=1e-12, abs=1e-300
        )

    def test_critical_line_modulus_grid(self):
        ts = np.geomspace(1.0, 1e4, 400)
        worst = max(abs(abs(zd.delta(complex(0.5, t))) - 1.0) for t in ts)
        assert worst <= 1e-10


class TestDeltaLogderiv:
    def test_asymptote_at_50(self):
        v = zd.delta_logderiv(complex(0.5, 50.0))
        assert abs(v - (-math.log(50.0 / TWO_PI))) <= 0.05

    def test_reflection_equality(self):
        # differentiating log of delta(s)delta(1-s)=1 gives equality
        for s in [complex(0.3, 40.0), complex(-0.7, 123.4), complex(1.6, 18.0)]:
            assert zd.delta_logderiv(s) == pytest.approx(
                zd.delta_logderiv(1.0 - s), rel=1e-10
            )

    def test_finite_difference_oracle(self):
        s = complex(-1.3, 0.7)
        fd = wrapped_log_difference(kernels.log_delta, s)
        assert abs(zd.delta_logderiv(s) - fd) <= 1e-6

    def test_finite_difference_random(self, rng):
        for _ in range(25):
            s = complex(rng.uniform(-1.0, 2.0), rng.uniform(0.5, 300.0))
            fd = wrapped_log_difference(kernels.log_delta, s)
            assert abs(zd.delta_logderiv(s) - fd) <= 1e-6

    def test_singular_points(self):
        for s in (2.0, 1.0, -4.0, 7.0):
            with pytest.raises(PoleError):
                zd.delta_logderiv(s)
        # negative odd integers are regular
        zd.delta_logderiv(-1.0)
        zd.delta_logderiv(-5.0)

    def test_asymptote_constant(self, rng):
        worst = 0.0
        for _ in range(400):
            s = complex(rng.uniform(-1.0, 2.0), rng.uniform(50.0, 5000.0))
            dev = abs(zd.delta_logderiv(s) + math.log(s.imag / TWO_PI))
            worst = max(worst, dev * s.imag)
        assert worst <= 10.0


class TestDeltaAsymptotic:
    def test_ratio_to_exact(self):
        s = complex(2.0, 100.0)
        assert abs(zd.delta(s) / zd.delta_asymptotic(s) - 1.0) <= 0.02

    def test_unit_modulus_on_line(self):
        for t in (1.0, 57.3, 4000.0):
            assert abs(abs(zd.delta_asymptotic(complex(0.5, t))) - 1.0) <= 1e-15

    def test_phase_at_two_pi(self):
        v = zd.delta_asymptotic(complex(0.5, TWO_PI))
        assert cmath.phase(v) == pytest.approx(math.pi / 4.0, abs=1e-12)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            zd.delta_asymptotic(complex(0.5, 0.5))
        with pytest.raises(DomainError):
            zd.delta_asymptotic(complex(-2.5, 10.0))


class TestThetaRS:
    def test_root_location(self):
        root = bisect_root(zd.theta_rs, 10.0, 20.0)
        assert root == pytest.approx(G0, abs=1e-9)
        assert abs(zd.theta_rs(G0)) <= 1e-9

    def test_classical_asymptotic(self):
        t = 100.0
        main = 0.5 * t * math.log(t / TWO_PI) - 0.5 * t - math.pi / 8.0
        assert abs(zd.theta_rs(t) - main) <= 1.0 / (48.0 * t) + 1e-4

    def test_matches_delta_phase(self):
        t = 30.0
        assert abs(cmath.exp(-2j * zd.theta_rs(t)) - zd.delta(complex(0.5, t))) <= 1e-9

    def test_domain(self):
        with pytest.raises(DomainError):
            zd.theta_rs(0.0)
