import math

import numpy as np
import pytest

from circledirac import (
    Biquaternion,
    CircleWave,
    DispersionViolation,
    InvalidQuantumNumber,
    NonpositiveMass,
    PlaneWave,
    SuperluminalSpeed,
    bound_solution,
    de_broglie,
    free_solution,
    mass_term,
    plane_wave_solution,
    residual,
)

RNG = np.random.default_rng(11)
POINTS = [RNG.uniform(-2.0, 2.0, size=4) for _ in range(10)]
ZERO_POT = Biquaternion()

# 3-4-5 wave: (nu - eA)^2 = 1 + mu^2 holds exactly in binary
PW = PlaneWave(nu=1.25, mu=0.75, mass=1.0)


def _args(pw):
    a, e = pw.potential()
    return a, e, mass_term(pw.mass)


class TestFreeSolution:
    def test_zero_phase(self):
        wave = free_solution(1.0)
        assert wave.phi1(np.zeros(4)) == Biquaternion(1.0)

    def test_second_component_quarter_phase(self):
        # at rest the second component is i * phi1
        wave = free_solution(2.0)
        p = np.array([0.3, 0, 0, 1.0])
        assert wave.phi2(p).max_abs_diff(1j * wave.phi1(p)) == 0.0

    def test_single_valued_on_quantized_circle(self):
        # phase returns to 1 after a full turn exactly when mass*R0 is an integer
        wave = free_solution(1.0)
        for n_theta in (1, 2, 3):
            p = np.array([2.0 * math.pi * n_theta, 0, 0, 1.0])
            assert wave.phi1(p).max_abs_diff(Biquaternion(1.0)) < 1e-12
        off = np.array([2.0 * math.pi * 2.5, 0, 0, 1.0])
        assert wave.phi1(off).max_abs_diff(Biquaternion(1.0)) > 1.0

    def test_residual_vanishes(self):
        rep = residual(free_solution(1.0), ZERO_POT, 1.0, mass_term(1.0), POINTS, h=1e-5)
        assert rep.analytic <= 1e-12
        assert rep.fd <= 1e-10

    def test_rejects_mass(self):
        with pytest.raises(NonpositiveMass):
            free_solution(0.0)


class TestBoundSolution:
    def test_pythagorean_dispersion_exact(self):
        assert PW.dispersion_residual() == 0.0

    def test_reduces_to_free(self):
        rest = PlaneWave(nu=2.0, mu=0.0, mass=2.0)
        wave = bound_solution(rest)
        free = free_solution(2.0)
        p = np.array([0.7, 0.1, 0.2, 1.0])
        assert wave.phi1(p).max_abs_diff(free.phi1(p)) == 0.0
        assert wave.phi2(p).max_abs_diff(free.phi2(p)) == 0.0

    def test_residual_at_random_points(self):
        rep = residual(bound_solution(PW), *_args(PW), POINTS, h=1e-5)
        assert rep.analytic <= 1e-12
        assert rep.fd <= 1e-8

    def test_residual_with_potential(self):
        mu, eA = 0.6, -0.3
        pw = PlaneWave(nu=eA + math.sqrt(1 + mu * mu), mu=mu, mass=1.0, eA=eA)
        rep = residual(bound_solution(pw), *_args(pw), POINTS, h=1e-5)
        assert rep.analytic <= 1e-12
        assert rep.fd <= 1e-8

    def test_rejects_off_shell(self):
        with pytest.raises(DispersionViolation) as exc:
            bound_solution(PlaneWave(nu=1.5, mu=0.75, mass=1.0))
        assert exc.value.residual > 0.1


class TestResidualHarness:
    def test_convergence_order(self):
        wave = bound_solution(PW)
        a, e, m = _args(PW)
        coarse = residual(wave, a, e, m, POINTS, h=0.05).fd
        fine = residual(wave, a, e, m, POINTS, h=0.025).fd
        order = math.log2(coarse / fine)
        assert abs(order - 2.0) < 0.1

    def test_linearity(self):
        wave = plane_wave_solution(PW.nu + 0.1, PW.mu, PW.mass)
        scaled = type(wave)(wave.phi1.scaled(2.0), wave.phi2.scaled(2.0))
        a, e, m = _args(PW)
        r1 = residual(wave, a, e, m, POINTS, h=1e-4)
        r2 = residual(scaled, a, e, m, POINTS, h=1e-4)
        assert r2.analytic == pytest.approx(2.0 * r1.analytic, rel=1e-10)

    def test_wrong_frequency_detected(self):
        wave = plane_wave_solution(PW.nu + 0.1, PW.mu, PW.mass)
        rep = residual(wave, *_args(PW), POINTS, h=1e-5)
        assert rep.analytic >= 0.01

    def test_dispersion_violation_scale(self):
        # off-shell by >= 1e-3 must leave a residual >= 1e-4
        for delta in (1e-3, 1e-2):
            wave = plane_wave_solution(PW.nu + delta, PW.mu, PW.mass)
            rep = residual(wave, *_args(PW), [np.zeros(4)], h=1e-5)
            assert rep.analytic >= 1e-4


class TestDeBroglie:
    def test_rest(self):
        assert de_broglie(1.5, 0.0) == (1.5, 0.0)

    def test_three_four_five(self):
        eta, mu = de_broglie(1.0, 0.6)
        assert eta == pytest.approx(1.25)
        assert mu == pytest.approx(0.75)

    def test_fine_structure_speed(self):
        alpha = 1.0 / 137.0
        eta, mu = de_broglie(1.0, alpha)
        assert eta == pytest.approx(1.0 / math.sqrt(1.0 - alpha * alpha), rel=1e-15)
        assert mu / eta == pytest.approx(alpha, rel=1e-15)

    def test_mass_shell(self):
        for v in (0.1, 0.5, 0.99):
            eta, mu = de_broglie(2.0, v)
            assert eta * eta - mu * mu == pytest.approx(4.0, rel=1e-12)

    def test_rejects_superluminal(self):
        with pytest.raises(SuperluminalSpeed):
            de_broglie(1.0, 1.0)


class TestCircleWave:
    def test_energy(self):
        assert CircleWave(3, 1.5).eta_l == 2.0

    def test_rejects_zero_mode(self):
        with pytest.raises(InvalidQuantumNumber):
            CircleWave(0, 1.0)
