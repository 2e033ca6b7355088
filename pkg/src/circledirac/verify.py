"""Seeded, deterministic verification suites behind the command line.

Each suite re-checks one module's algebraic identities against
independent oracles and returns a :class:`VerificationReport`.  Given
the same seed the report is bit-identical across runs: all randomness
flows through a numpy generator seeded with (seed, suite index), and no
timestamps or locale-dependent formatting enter the output.

Most cases report a maximum error that must stay below a tolerance.
Detection cases (where a fault must produce a LARGE residual, or an
ordering must be strict) report the ratio required/actual instead, with
tolerance 1, so that "max_error <= tolerance" uniformly means pass.
"""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass

import numpy as np

from . import circle_spaces as cs
from . import qed
from . import spectrum as sp
from .biquaternion import Biquaternion, FourVector, I1, I2, I3, embed, norm_form
from .planewave import PlaneWave, bound_solution, free_solution, mass_term, plane_wave_solution, residual
from .reflector import DiagPair, reflector_mul
from .spectrum import QuantumNumbers
from .tachyon import DashedKinematics, TachyonRotor, component_map, tachyon_double, tachyon_quaternion

__all__ = [
    "CaseResult",
    "VerificationReport",
    "SUITE_NAMES",
    "run_suite",
    "run_suites",
    "reports_to_json",
    "reports_to_csv",
    "sommerfeld_expansion",
]

_TINY = 1e-300


@dataclass(frozen=True)
class CaseResult:
    id: str
    max_error: float
    tolerance: float
    passed: bool


@dataclass(frozen=True)
class VerificationReport:
    suite: str
    cases: tuple[CaseResult, ...]

    @property
    def overall(self) -> bool:
        return all(case.passed for case in self.cases)


def _case(case_id: str, error: float, tol: float) -> CaseResult:
    return CaseResult(case_id, float(error), float(tol), bool(error <= tol))


def _detect(case_id: str, actual: float, required: float) -> CaseResult:
    """Pass when ``actual`` is at least ``required`` > 0 (ratio semantics)."""
    if not actual > 0.0:
        return _case(case_id, math.inf, 1.0)
    return _case(case_id, required / actual, 1.0)


def _rand_biquaternion(rng: np.random.Generator) -> Biquaternion:
    re = rng.standard_normal(4)
    im = rng.standard_normal(4)
    return Biquaternion(*(complex(a, b) for a, b in zip(re, im)))


def _rand_int_biquaternion(rng: np.random.Generator) -> Biquaternion:
    re = rng.integers(-9, 10, size=4)
    im = rng.integers(-9, 10, size=4)
    return Biquaternion(*(complex(int(a), int(b)) for a, b in zip(re, im)))


# -- algebra -----------------------------------------------------------------

def suite_algebra(rng: np.random.Generator) -> VerificationReport:
    cases = []

    err = 0.0
    for _ in range(1000):
        a, b, c = (_rand_biquaternion(rng) for _ in range(3))
        left = (a * b) * c
        right = a * (b * c)
        err = max(err, left.max_abs_diff(right) / max(left.max_abs(), _TINY))
    cases.append(_case("mul-associative", err, 1e-14))

    err = 0.0
    units = (I1, I2, I3)
    for r in range(3):
        err = max(err, (units[r] * units[r] + Biquaternion(1.0)).max_abs())
        for s in range(3):
            if r != s:
                err = max(err, (units[r] * units[s] + units[s] * units[r]).max_abs())
    cases.append(_case("unit-anticommutation", err, 0.0))

    err = 0.0
    for _ in range(1000):
        x = FourVector(*rng.uniform(-3.0, 3.0, size=4))
        n = norm_form(embed(x))
        expected = x.minkowski_form()
        err = max(err, abs(n - expected) / max(abs(expected), 1.0))
    cases.append(_case("minkowski-embed", err, 1e-14))

    err = 0.0
    for _ in range(200):
        a = _rand_int_biquaternion(rng)
        b = _rand_int_biquaternion(rng)
        err = max(err, (a * b).conj.max_abs_diff(b.conj * a.conj))
    cases.append(_case("conj-antihomomorphism", err, 0.0))

    err = 0.0
    for _ in range(500):
        a = _rand_biquaternion(rng)
        b = _rand_biquaternion(rng)
        lhs = (a * b).to_matrix()
        rhs = a.to_matrix() @ b.to_matrix()
        err = max(err, float(np.max(np.abs(lhs - rhs))) / max(float(np.max(np.abs(lhs))), _TINY))
    cases.append(_case("matrix-representation", err, 1e-13))

    return VerificationReport("algebra", tuple(cases))


# -- charts ------------------------------------------------------------------

def _rand_off_cone_points(rng: np.random.Generator, count: int) -> np.ndarray:
    pts = np.empty((count, 4))
    pts[:, 3] = rng.uniform(0.3, 3.0, size=count)                 # x3 wedge
    pts[:, 0] = pts[:, 3] * rng.uniform(-0.9, 0.9, size=count)    # |x0| < x3
    pts[:, 1] = rng.uniform(-2.0, 2.0, size=count)
    pts[:, 2] = rng.uniform(-2.0, 2.0, size=count)
    return pts


def suite_charts(rng: np.random.Generator) -> VerificationReport:
    cases = []
    chart_l = cs.SpaceChart(cs.ChartKind.L)
    targets = {
        "T": cs.SpaceChart(cs.ChartKind.T, R0=0.7),
        "M": cs.SpaceChart(cs.ChartKind.M, R1=1.3),
        "S": cs.SpaceChart(cs.ChartKind.S, R0=0.7, R1=1.3),
    }
    points = _rand_off_cone_points(rng, 1000)
    for name, chart in targets.items():
        err = 0.0
        for p in points:
            q = cs.chart_map(p, chart_l, chart)
            back = cs.chart_map(q, chart, chart_l)
            err = max(err, float(np.max(np.abs(back - p))))
            # the opposite round trip, starting from the circular chart
            there = cs.chart_map(back, chart_l, chart)
            err = max(err, float(np.max(np.abs(there - q))))
        cases.append(_case(f"roundtrip-L-{name}", err, 1e-12))

    err = 0.0
    identity = DiagPair(Biquaternion(1.0), Biquaternion(1.0))
    for _ in range(100):
        basis = cs.rotated_basis(rng.uniform(-2.5, 2.5), rng.uniform(-math.pi, math.pi))
        units = basis.units
        for i, u in enumerate(units):
            err = max(err, (reflector_mul(u, u) - identity).max_abs())
            for j in range(i + 1, 4):
                anti = reflector_mul(u, units[j]) + reflector_mul(units[j], u)
                err = max(err, anti.max_abs())
    cases.append(_case("rotated-basis-relations", err, 1e-13))

    err = 0.0
    for theta in rng.uniform(-2.5, 2.5, size=100):
        det = float(np.linalg.det(cs.temporal_derivative_matrix(theta)))
        err = max(err, abs(det - 1.0))
    cases.append(_case("derivative-matrix-unimodular", err, 1e-13))

    err = 0.0
    for _ in range(1000):
        r = rng.uniform(0.1, 4.0) * rng.choice([-1.0, 1.0])
        s = rng.uniform(-5.0, 5.0)
        big_r = rng.uniform(0.1, 4.0)
        s_back = cs.arc_map_inverse(r, cs.arc_map(r, s, big_r), big_r)
        err = max(err, abs(s_back - s) / max(abs(s), 1.0))
    cases.append(_case("arc-map-inverse", err, 1e-14))

    err = 0.0
    e = 0.5
    big_r1 = 1.7
    for r1 in rng.uniform(0.05, 5.0, size=200):
        a = embed((e / r1, 0.0, 0.0, 0.0))
        scaled = cs.scale_potential(a, r1, big_r1)
        expected = embed((e / big_r1, 0.0, 0.0, 0.0))
        err = max(err, scaled.max_abs_diff(expected) / expected.max_abs())
    cases.append(_case("inverse-distance-flattens", err, 1e-14))

    return VerificationReport("charts", tuple(cases))


# -- dirac -------------------------------------------------------------------

def suite_dirac(rng: np.random.Generator) -> VerificationReport:
    cases = []
    points = rng.uniform(-2.0, 2.0, size=(10, 4))
    zero_pot = Biquaternion()
    m1 = mass_term(1.0)

    free = free_solution(1.0)
    rep = residual(free, zero_pot, 1.0, m1, points, h=1e-5)
    cases.append(_case("free-analytic", rep.analytic, 1e-12))
    cases.append(_case("free-fd", rep.fd, 1e-8))

    pw = PlaneWave(nu=1.25, mu=0.75, mass=1.0, eA=0.0)
    wave = bound_solution(pw)
    rep = residual(wave, *_potential_args(pw), m1, points, h=1e-5)
    cases.append(_case("bound-analytic", rep.analytic, 1e-12))
    cases.append(_case("bound-fd", rep.fd, 1e-8))

    mu = 0.6
    eA = -0.3
    pw2 = PlaneWave(nu=eA + math.sqrt(1.0 + mu * mu), mu=mu, mass=1.0, eA=eA)
    wave2 = bound_solution(pw2)
    rep2 = residual(wave2, *_potential_args(pw2), m1, points, h=1e-5)
    cases.append(_case("bound-potential-analytic", rep2.analytic, 1e-12))
    cases.append(_case("bound-potential-fd", rep2.fd, 1e-8))

    r_coarse = residual(wave, *_potential_args(pw), m1, points, h=0.05).fd
    r_fine = residual(wave, *_potential_args(pw), m1, points, h=0.025).fd
    order = math.log2(r_coarse / r_fine)
    cases.append(_case("fd-convergence-order", abs(order - 2.0), 0.1))

    off = plane_wave_solution(pw.nu + 0.1, pw.mu, pw.mass, pw.eA)
    rep_off = residual(off, *_potential_args(pw), m1, points, h=1e-5)
    cases.append(_detect("offshell-detected", rep_off.analytic, 1e-4))

    return VerificationReport("dirac", tuple(cases))


def _potential_args(pw: PlaneWave) -> tuple[Biquaternion, float]:
    a, e = pw.potential()
    return a, e


# -- tachyon -----------------------------------------------------------------

def suite_tachyon(rng: np.random.Generator) -> VerificationReport:
    cases = []
    rotor = TachyonRotor()

    err = 0.0
    for _ in range(1000):
        x = _rand_biquaternion(rng)
        err = max(err, tachyon_quaternion(x, rotor).max_abs_diff(component_map(x)))
    cases.append(_case("rotor-vs-component-map", err, 1e-14))

    err = 0.0
    for _ in range(200):
        x = _rand_biquaternion(rng)
        err = max(err, tachyon_double(x).max_abs_diff(component_map(component_map(x))))
    cases.append(_case("double-application-exact", err, 0.0))

    err = 0.0
    for _ in range(1000):
        s0, s1 = rng.uniform(-3.0, 3.0, size=2)
        eta, mu = rng.uniform(-3.0, 3.0, size=2)
        d = DashedKinematics.from_undashed(s0, s1, eta, mu)
        dot = eta * s0 + mu * s1
        dot_dashed = d.etad * d.s0d + d.mud * d.s1d
        err = max(err, abs(dot_dashed - dot))
    cases.append(_case("dot-product-invariance", err, 1e-13))

    err = 0.0
    for _ in range(1000):
        raw = rng.standard_normal(4)
        raw /= np.linalg.norm(raw)
        r = Biquaternion(*raw)
        x = _rand_biquaternion(rng)
        n_before = norm_form(x)
        n_after = norm_form(r * x * r)
        err = max(err, abs(n_after - n_before) / max(abs(n_before), 1.0))
    cases.append(_case("general-rotor-norm-preserved", err, 1e-13))

    return VerificationReport("tachyon", tuple(cases))


# -- spectrum ----------------------------------------------------------------

def sommerfeld_expansion(alpha: float, n_theta: int, n_r: int) -> float:
    """Fourth-order expansion of the level in alpha (independent oracle)."""
    n = n_theta + n_r
    a2 = alpha * alpha
    return 1.0 - a2 / (2.0 * n * n) - (a2 * a2 / (2.0 * n ** 4)) * (n / n_theta - 0.75)


def suite_spectrum(rng: np.random.Generator) -> VerificationReport:
    cases = []
    alphas = (1.0 / 137.0, 0.3, 0.6)

    err = 0.0
    for alpha in alphas:
        for n_theta in range(1, 9):
            for n_r in range(0, 9):
                qn = QuantumNumbers(n_theta, n_r)
                a_route = sp.coupled_solve(alpha, qn).nu_m
                b_route = sp.energy_closed_form(alpha, n_theta, n_r)
                err = max(err, abs(a_route - b_route))
    cases.append(_case("two-route-agreement", err, 1e-12))

    err = 0.0
    for n_theta in range(1, 9):
        for n_r in range(0, 9):
            b_route = sp.energy_closed_form(1.0 / 137.0, n_theta, n_r)
            ref = sp.sommerfeld_reference(1.0 / 137.0, n_theta, n_r)
            err = max(err, abs(b_route - ref))
    cases.append(_case("reference-agreement", err, 1e-12))

    err = 0.0
    for n_theta in range(1, 9):
        for alpha in (1.0 / 137.0, 0.3, 0.9 * n_theta):
            b = sp.bohr_solve(alpha, n_theta)
            err = max(err, abs(1.0 * b.R0_l - n_theta) / n_theta)
            err = max(err, abs(b.nu_b * b.R0_b - n_theta) / n_theta)
            err = max(err, abs(b.eta_b * b.R0_b + b.mu_b * b.R1_hat - n_theta) / n_theta)
    cases.append(_case("quantization-web", err, 1e-13))

    err = 0.0
    for alpha in (1.0 / 137.0, 0.3):
        for n_theta in range(1, 9):
            coupled = sp.coupled_solve(alpha, QuantumNumbers(n_theta, 0))
            err = max(err, abs(coupled.nu_m - coupled.bohr.nu_b))
    cases.append(_case("no-vibration-reduction", err, 1e-13))

    min_step = math.inf
    for alpha in alphas:
        grid = {(nt, nr): sp.energy_closed_form(alpha, nt, nr)
                for nt in range(1, 9) for nr in range(0, 9)}
        for (nt, nr), value in grid.items():
            if nr > 0:
                min_step = min(min_step, value - grid[(nt, nr - 1)])
            if nt > 1:
                min_step = min(min_step, value - grid[(nt - 1, nr)])
    cases.append(_detect("energy-monotonicity", min_step, 1e-15))

    err = 0.0
    for n_theta in range(1, 6):
        for n_r in range(0, 6):
            nu = sp.energy_closed_form(1.0 / 137.0, n_theta, n_r)
            err = max(err, abs(nu - sommerfeld_expansion(1.0 / 137.0, n_theta, n_r)))
    cases.append(_case("fourth-order-expansion", err, 1e-12))

    err = 0.0
    for alpha in alphas:
        for n_theta in range(1, 9):
            for n_r in range(0, 9):
                c = sp.coupled_solve(alpha, QuantumNumbers(n_theta, n_r))
                err = max(err, abs(c.mu_h / c.eta_h - c.bohr.v_b))
                err = max(err, abs(c.m_h ** 2 - (c.eta_h ** 2 - c.mu_h ** 2)) / c.m_h ** 2)
                err = max(err, abs(c.eta_h * c.nu_h - c.m_h ** 2) / c.m_h ** 2)
    cases.append(_case("heavy-electron-closure", err, 1e-13))

    err = 0.0
    for alpha in alphas:
        for n_theta in range(1, 9):
            for n_r in range(0, 9):
                c = sp.coupled_solve(alpha, QuantumNumbers(n_theta, n_r))
                expected = 1.0 / c.mu_m
                err = max(err, abs(c.vprime_m - expected) / abs(expected))
    cases.append(_case("dashed-energy-consistency", err, 1e-12))

    return VerificationReport("spectrum", tuple(cases))


# -- qed ---------------------------------------------------------------------

def suite_qed(rng: np.random.Generator) -> VerificationReport:
    cases = []
    alpha = 1.0 / 137.0

    err = 0.0
    for _ in range(1000):
        a = rng.uniform(-3.0, 3.0)
        mass = rng.uniform(0.0, 2.0)
        e = rng.uniform(0.2, 2.0)
        qn = QuantumNumbers(int(rng.integers(1, 6)), int(rng.integers(0, 6)))
        d_prime = qed.coefficient_d_prime(qn, alpha)
        sol = qed.solve_rho(a, mass, e, d_prime)
        for rho, res in ((sol.rho_plus, sol.residual_plus),
                         (sol.rho_minus, sol.residual_minus)):
            scale = max(rho * rho / (d_prime * e * e), abs(a ** 3 * rho),
                        mass * mass * d_prime * a ** 4, _TINY)
            err = max(err, abs(res) / scale)
    cases.append(_case("root-residuals", err, 1e-12))

    min_d_prime = math.inf
    for n_theta in range(1, 11):
        for n_r in range(0, 11):
            min_d_prime = min(min_d_prime, qed.coefficient_d_prime(QuantumNumbers(n_theta, n_r), alpha))
    cases.append(_detect("d-prime-positive", min_d_prime, 1e-6))

    err = 0.0
    for n_theta in range(1, 11):
        err = max(err, abs(qed.coefficient_d_prime(QuantumNumbers(n_theta, 0), alpha)
                           - qed.coefficient_d(n_theta)))
    cases.append(_case("d-prime-reduces-to-d", err, 0.0))

    err = 0.0
    for _ in range(500):
        n_theta = int(rng.integers(1, 11))
        n_r = int(rng.integers(0, 11))
        a = rng.uniform(0.0, 0.99) * n_theta
        root = qed.replacement_map(n_theta, a)
        bracket = n_theta * n_theta + n_r * n_r + 2.0 * n_r * root
        shifted = (root + n_r) ** 2 + a * a
        err = max(err, abs(shifted - bracket) / bracket)
    cases.append(_case("bracket-identity", err, 1e-14))

    min_gap = math.inf
    for _ in range(200):
        a = rng.uniform(0.01, 3.0)
        mass = rng.uniform(0.0, 2.0)
        e = rng.uniform(0.2, 2.0)
        sol = qed.solve_rho(a, mass, e, qed.coefficient_d_prime(QuantumNumbers(1, 1), alpha))
        min_gap = min(min_gap, sol.rho_plus - sol.rho_minus)
    cases.append(_case("branch-ordering", max(0.0, -min_gap), 0.0))

    return VerificationReport("qed", tuple(cases))


# -- registry ----------------------------------------------------------------

_SUITES = {
    "algebra": (1, suite_algebra),
    "charts": (2, suite_charts),
    "dirac": (3, suite_dirac),
    "tachyon": (4, suite_tachyon),
    "spectrum": (5, suite_spectrum),
    "qed": (6, suite_qed),
}

SUITE_NAMES = tuple(_SUITES)


def run_suite(name: str, seed: int = 0) -> VerificationReport:
    if name not in _SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {SUITE_NAMES + ('all',)}")
    index, fn = _SUITES[name]
    return fn(np.random.default_rng([seed, index]))


def run_suites(names, seed: int = 0) -> list[VerificationReport]:
    return [run_suite(name, seed) for name in names]


def reports_to_json(reports: list[VerificationReport]) -> str:
    payload = {
        "reports": [
            {
                "suite": r.suite,
                "overall": r.overall,
                "cases": [asdict(c) for c in r.cases],
            }
            for r in reports
        ],
        "overall": all(r.overall for r in reports),
    }
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def reports_to_csv(reports: list[VerificationReport]) -> str:
    rows = ["suite,case,max_error,tolerance,pass"]
    for r in reports:
        for c in r.cases:
            rows.append(f"{r.suite},{c.id},{c.max_error!r},{c.tolerance!r},{str(c.passed).lower()}")
    return "\n".join(rows) + "\n"
