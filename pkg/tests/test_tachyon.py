import math

import numpy as np
import pytest

from circledirac import (
    Biquaternion,
    DashedKinematics,
    FourVector,
    I0,
    I2,
    NonUnitRotor,
    PlaneWave,
    Reflector,
    TachyonRotor,
    ZeroArcElement,
    bound_solution,
    component_map,
    dashed_energy,
    de_broglie,
    dirac_lhs,
    dirac_rhs,
    embed,
    mass_term,
    norm_form,
    tachyon_double,
    tachyon_fourvector,
    tachyon_fourvector_double,
    tachyon_quaternion,
    tachyon_reflector,
    unit_reflector,
)
from circledirac.reflector import ARC_TIME_UNITS, AnalyticDerivative
from circledirac.tachyon import transform_mass, transform_operator, transform_potential, transform_wave


def rand_bq(rng):
    return Biquaternion(*(complex(a, b) for a, b in
                          zip(rng.standard_normal(4), rng.standard_normal(4))))


class TestFourVector:
    def test_swap(self):
        assert tachyon_fourvector(FourVector(1.0, 2.0, 3.0, 4.0)) == FourVector(2.0, 1.0, 3.0, 4.0)

    def test_transverse_fixed(self):
        x = FourVector(0.0, 0.0, 3.0, 4.0)
        assert tachyon_fourvector(x) == x

    def test_double_is_half_turn(self):
        assert tachyon_fourvector_double(FourVector(1.0, 2.0, 3.0, 4.0)) == \
            FourVector(-1.0, -2.0, 3.0, 4.0)


class TestQuaternionMap:
    def test_component_map_definition(self):
        x = Biquaternion(1 + 2j, 3 - 1j, 0.5, -2j)
        assert component_map(x) == Biquaternion(-(3 - 1j), 1 + 2j, 0.5, -2j)

    def test_rotor_equals_component_map(self):
        rng = np.random.default_rng(21)
        worst = 0.0
        for _ in range(1000):
            x = rand_bq(rng)
            worst = max(worst, tachyon_quaternion(x).max_abs_diff(component_map(x)))
        assert worst <= 1e-14

    def test_embedded_plane_vector(self):
        x0, x1 = 0.9, -0.4
        out = tachyon_quaternion(embed((x0, x1, 0.0, 0.0)))
        assert out.max_abs_diff(Biquaternion(-x1, -1j * x0)) < 1e-15

    def test_transverse_unit_fixed(self):
        assert tachyon_quaternion(I2).max_abs_diff(I2) < 1e-15

    def test_identity_variant_rotor(self):
        rng = np.random.default_rng(22)
        x = rand_bq(rng)
        assert tachyon_quaternion(x, TachyonRotor(I0)) == x

    def test_conjugated_rotor_quarter_turn_back(self):
        # dagger-type quantities rotate the opposite way: (c0, c1) -> (c1, -c0)
        rng = np.random.default_rng(23)
        for _ in range(100):
            x = rand_bq(rng)
            out = tachyon_quaternion(x, conjugated=True)
            expected = Biquaternion(x.c1, -x.c0, x.c2, x.c3)
            assert out.max_abs_diff(expected) <= 1e-14

    def test_double_application_exact(self):
        rng = np.random.default_rng(24)
        for _ in range(200):
            x = rand_bq(rng)
            assert tachyon_double(x) == component_map(component_map(x))
            assert tachyon_double(x) == Biquaternion(-x.c0, -x.c1, x.c2, x.c3)

    def test_two_sandwiches_near_double(self):
        rng = np.random.default_rng(25)
        for _ in range(100):
            x = rand_bq(rng)
            twice = tachyon_quaternion(tachyon_quaternion(x))
            assert twice.max_abs_diff(tachyon_double(x)) <= 1e-14

    def test_norm_preserved_by_general_rotors(self):
        rng = np.random.default_rng(26)
        for _ in range(200):
            raw = rng.standard_normal(4)
            rotor = TachyonRotor(Biquaternion(*(raw / np.linalg.norm(raw))))
            x = rand_bq(rng)
            out = tachyon_quaternion(x, rotor)
            assert abs(norm_form(out) - norm_form(x)) <= 1e-13 * max(1.0, abs(norm_form(x)))

    def test_rejects_non_unit(self):
        with pytest.raises(NonUnitRotor):
            TachyonRotor(Biquaternion(1.0, 1.0))


class TestReflectorTransform:
    def test_identity_rotor(self):
        rng = np.random.default_rng(27)
        r = unit_reflector(rand_bq(rng))
        out = tachyon_reflector(r, TachyonRotor(I0))
        assert out.top == r.top and out.bottom == r.bottom

    def test_blockwise_component_maps(self):
        rng = np.random.default_rng(28)
        for _ in range(100):
            top, bottom = rand_bq(rng), rand_bq(rng)
            out = tachyon_reflector(Reflector(top, bottom))
            assert out.top.max_abs_diff(component_map(top)) <= 1e-14
            expected_bottom = Biquaternion(bottom.c1, -bottom.c0, bottom.c2, bottom.c3)
            assert out.bottom.max_abs_diff(expected_bottom) <= 1e-14

    def test_transformed_wave_solves_transformed_system(self):
        # covariance: transform wave, operator, mass and potential together
        # and the analytic residual stays at zero
        mu, eA = 0.6, -0.3
        pw = PlaneWave(nu=eA + math.sqrt(1 + mu * mu), mu=mu, mass=1.0, eA=eA)
        wave = transform_wave(bound_solution(pw))
        op = transform_operator(ARC_TIME_UNITS)
        a_pot, e = pw.potential()
        a_dashed = transform_potential(a_pot)
        m_dashed = transform_mass(mass_term(pw.mass))
        deriv = AnalyticDerivative()
        worst = 0.0
        for point in np.random.default_rng(29).uniform(-2, 2, size=(10, 4)):
            lhs = dirac_lhs(op, deriv, a_dashed, e, wave, point)
            rhs = dirac_rhs(wave, m_dashed, point)
            worst = max(worst, lhs.max_abs_diff(rhs))
        assert worst <= 1e-12


class TestDashedKinematics:
    def test_plain_exchanges(self):
        d = DashedKinematics.from_undashed(s0=0.5, s1=1.5, eta=1.25, mu=0.75)
        assert (d.s0d, d.s1d, d.etad, d.mud) == (1.5, 0.5, 0.75, 1.25)

    def test_dot_product_invariant(self):
        rng = np.random.default_rng(30)
        for _ in range(200):
            s0, s1, eta, mu = rng.uniform(-3, 3, size=4)
            d = DashedKinematics.from_undashed(s0, s1, eta, mu)
            assert d.etad * d.s0d + d.mud * d.s1d == eta * s0 + mu * s1


class TestDashedEnergy:
    def test_equal_arcs(self):
        v = 1.25 + 0.75
        assert dashed_energy(v, 1.0, 1.0, 1.25, 0.75) == v

    def test_orbit_values(self):
        eta, mu = de_broglie(1.0, 0.6)
        out = dashed_energy((eta + mu * 0.6), 1.0, 0.6, eta, mu)
        assert out == pytest.approx((1.25 + 0.75 * 0.6) / 0.6)

    def test_rest_frame(self):
        assert dashed_energy(2.0, 1.0, 0.5, 2.0, 0.0) == 4.0

    def test_rejects_zero_arc(self):
        with pytest.raises(ZeroArcElement):
            dashed_energy(1.0, 1.0, 0.0, 1.0, 1.0)

    def test_dashed_ratio(self):
        rng = np.random.default_rng(31)
        for _ in range(100):
            ds0, ds1 = rng.uniform(0.1, 2.0, size=2)
            eta, mu = rng.uniform(-2, 2, size=2)
            v = (eta * ds0 + mu * ds1) / ds0
            assert dashed_energy(v, ds0, ds1, eta, mu) == pytest.approx(v * ds0 / ds1)
