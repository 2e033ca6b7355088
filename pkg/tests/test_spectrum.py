import math

import pytest

from circledirac import (
    InvalidQuantumNumber,
    NonpositiveMass,
    QuantumNumbers,
    SpeedDomain,
    bohr_solve,
    circle_quantize,
    circle_wave_energy,
    coupled_solve,
    energy_closed_form,
    lines_to_csv,
    sommerfeld_reference,
    spectrum_table,
)
from circledirac.verify import sommerfeld_expansion

ALPHA = 1.0 / 137.0
CODATA_ALPHA = 7.2973525693e-3
ELECTRON_MASS_EV = 510998.9461


class TestQuantumNumbers:
    def test_principal(self):
        assert QuantumNumbers(2, 3).n == 5

    def test_validation(self):
        with pytest.raises(InvalidQuantumNumber):
            QuantumNumbers(0, 0)
        with pytest.raises(InvalidQuantumNumber):
            QuantumNumbers(1, -1)


class TestCircleQuantization:
    def test_unit_case(self):
        assert circle_quantize(1.0, 1) == 1.0

    def test_scaling(self):
        assert circle_quantize(2.0, 4) == 2.0

    def test_circle_wave_energy(self):
        # eta = n_r/R0 = n_r*mass/n_theta
        qn = QuantumNumbers(3, 2)
        assert circle_wave_energy(1.5, qn) == pytest.approx(2 * 1.5 / 3)

    def test_rejects(self):
        with pytest.raises(NonpositiveMass):
            circle_quantize(0.0, 1)
        with pytest.raises(InvalidQuantumNumber):
            circle_quantize(1.0, 0)


class TestBohrSolve:
    def test_orbit_speed(self):
        assert bohr_solve(ALPHA, 1).v_b == ALPHA
        assert bohr_solve(ALPHA, 3).v_b == pytest.approx(ALPHA / 3)

    def test_weak_coupling_limit(self):
        b = bohr_solve(1e-8, 1)
        assert b.nu_b == pytest.approx(1.0, abs=1e-15)

    def test_strong_orbit_frozen_values(self):
        b = bohr_solve(0.6, 1)
        assert b.v_b == 0.6
        assert b.eta_b == pytest.approx(1.25)
        assert b.mu_b == pytest.approx(0.75)
        assert b.nu_b == pytest.approx(0.8)
        assert b.R1_b == pytest.approx(0.8 / 0.6)
        assert b.eA_b == pytest.approx(-0.45)
        assert b.L == 1.0

    def test_quantization_web(self):
        for n_theta in range(1, 9):
            for alpha in (ALPHA, 0.3, 0.9 * n_theta):
                b = bohr_solve(alpha, n_theta, mass=1.0)
                assert b.R0_l * 1.0 == pytest.approx(n_theta, rel=1e-13)
                assert b.nu_b * b.R0_b == pytest.approx(n_theta, rel=1e-13)
                assert b.eta_b * b.R0_b + b.mu_b * b.R1_hat == pytest.approx(n_theta, rel=1e-13)

    def test_total_energy_chain(self):
        # nu = eta + eA agrees with the closed form mass*sqrt(1 - v^2)
        for alpha in (ALPHA, 0.3, 0.6):
            b = bohr_solve(alpha, 1)
            assert b.nu_b == pytest.approx(b.eta_b + b.eA_b, rel=1e-14)
            assert b.nu_b == pytest.approx(math.sqrt(1 - alpha * alpha), rel=1e-14)

    def test_rejects_speed_domain(self):
        with pytest.raises(SpeedDomain):
            bohr_solve(1.0, 1)
        with pytest.raises(SpeedDomain):
            bohr_solve(2.5, 2)


class TestCoupledSolve:
    def test_reduces_to_bohr_without_vibration(self):
        for n_theta in range(1, 9):
            c = coupled_solve(ALPHA, QuantumNumbers(n_theta, 0))
            assert abs(c.nu_m - c.bohr.nu_b) <= 1e-13

    def test_ground_level(self):
        c = coupled_solve(1.0 / 137.0, QuantumNumbers(1, 0))
        assert c.nu_m == pytest.approx(0.99997336, abs=5e-9)
        assert c.nu_m == pytest.approx(math.sqrt(1 - (1.0 / 137.0) ** 2), rel=1e-15)

    def test_frozen_strong_coupling_state(self):
        # alpha=0.6, one vibration: K = 3, v_m = 1/sqrt(10)
        c = coupled_solve(0.6, QuantumNumbers(1, 1))
        assert c.eta_l == pytest.approx(1.0)
        assert c.v_m == pytest.approx(1 / math.sqrt(10), rel=1e-15)
        assert c.nu_m == pytest.approx(math.sqrt(0.9), rel=1e-15)
        assert c.mu_m == pytest.approx(1.0 / 3.0, rel=1e-14)
        assert c.vprime_m == pytest.approx(3.0, rel=1e-14)
        # heavy electron at the orbital speed
        assert c.nu_h == pytest.approx(1.8)
        assert c.eta_h == pytest.approx(1.8 / 0.64, rel=1e-14)
        assert c.mu_h == pytest.approx(1.8 * 0.6 / 0.64, rel=1e-14)
        assert c.m_h == pytest.approx(2.25, rel=1e-14)

    def test_heavy_electron_relations(self):
        for alpha in (ALPHA, 0.3, 0.6):
            for n_r in range(0, 9):
                c = coupled_solve(alpha, QuantumNumbers(2, n_r))
                assert c.mu_h / c.eta_h == pytest.approx(c.bohr.v_b, rel=1e-13)
                assert c.eta_h ** 2 - c.mu_h ** 2 == pytest.approx(c.m_h ** 2, rel=1e-13)
                assert c.eta_h * c.nu_h == pytest.approx(c.m_h ** 2, rel=1e-13)

    def test_dashed_energy_consistency(self):
        for alpha in (ALPHA, 0.3, 0.6):
            c = coupled_solve(alpha, QuantumNumbers(1, 2))
            assert c.vprime_m == pytest.approx(1.0 / c.mu_m, rel=1e-12)


class TestTwoRoutes:
    def test_agreement_grid(self):
        worst = 0.0
        for alpha in (ALPHA, 0.3, 0.6):
            for n_theta in range(1, 9):
                for n_r in range(0, 9):
                    a = coupled_solve(alpha, QuantumNumbers(n_theta, n_r)).nu_m
                    b = energy_closed_form(alpha, n_theta, n_r)
                    worst = max(worst, abs(a - b))
        assert worst <= 1e-12

    def test_reference_agreement(self):
        for n_theta in range(1, 6):
            for n_r in range(0, 6):
                b = energy_closed_form(ALPHA, n_theta, n_r)
                assert abs(b - sommerfeld_reference(ALPHA, n_theta, n_r)) <= 1e-14

    def test_free_limit(self):
        for n_theta in (1, 2, 5):
            for n_r in (0, 1, 4):
                assert energy_closed_form(0.0, n_theta, n_r) == 1.0

    def test_monotonicity(self):
        values = {(nt, nr): energy_closed_form(ALPHA, nt, nr)
                  for nt in range(1, 9) for nr in range(0, 9)}
        for (nt, nr), v in values.items():
            if nr > 0:
                assert v > values[(nt, nr - 1)]
            if nt > 1:
                assert v > values[(nt - 1, nr)]

    def test_fourth_order_expansion(self):
        for n_theta in range(1, 6):
            for n_r in range(0, 6):
                nu = energy_closed_form(ALPHA, n_theta, n_r)
                assert abs(nu - sommerfeld_expansion(ALPHA, n_theta, n_r)) <= 1e-12

    def test_fine_structure_splitting(self):
        # same principal number, different angular number
        delta = energy_closed_form(ALPHA, 2, 0) - energy_closed_form(ALPHA, 1, 1)
        oracle = ALPHA ** 4 / 32.0
        assert delta == pytest.approx(oracle, rel=0.01)


class TestSpectrumTable:
    def test_row_count_and_order(self):
        lines = spectrum_table(CODATA_ALPHA, ELECTRON_MASS_EV, 3, 3)
        assert len(lines) == 12
        keys = [(line.qn.n, line.qn.n_theta) for line in lines]
        assert keys == sorted(keys)

    def test_degeneracy_count(self):
        lines = spectrum_table(CODATA_ALPHA, ELECTRON_MASS_EV, 4, 3)
        for n in (2, 3, 4):
            assert sum(1 for line in lines if line.qn.n == n) == n

    def test_ground_binding(self):
        lines = spectrum_table(CODATA_ALPHA, ELECTRON_MASS_EV, 1, 0)
        assert lines[0].binding_ev == pytest.approx(-13.61, abs=0.01)

    def test_rows_match_reference(self):
        lines = spectrum_table(CODATA_ALPHA, ELECTRON_MASS_EV, 3, 3)
        assert all(line.abs_diff <= 1e-12 * ELECTRON_MASS_EV for line in lines)

    def test_fine_structure_pair_differs(self):
        lines = {(line.qn.n_theta, line.qn.n_r): line
                 for line in spectrum_table(CODATA_ALPHA, ELECTRON_MASS_EV, 2, 1)}
        assert lines[(2, 0)].energy_ev != lines[(1, 1)].energy_ev

    def test_csv_format(self):
        lines = spectrum_table(CODATA_ALPHA, ELECTRON_MASS_EV, 1, 1)
        text = lines_to_csv(lines)
        rows = text.split("\n")
        assert rows[0] == "n_theta,n_r,n,energy_natural,energy_ev,binding_ev,reference_ev,abs_diff"
        assert text.endswith("\n") and "\r" not in text
        first = rows[1].split(",")
        assert first[0] == "1" and first[1] == "0"
        assert float(first[3]) == lines[0].energy_natural
