"""Plane-wave solutions of the reflector Dirac system and residual checks.

All phases are pure imaginary exponents of real physical products: with
temporal quantities stored real, the bound wave on a circular chart
(s0, s1, r1, r0) reads

    phi1 = exp(i*(mu*s1 - nu*s0))
    phi2 = ((nu - eA) - i*mu*i_1) * inverse(M) * phi1,   M = -i*mass,

and satisfies both component equations of the Dirac system with the
arc-time operator exactly when the dispersion relation

    (nu - eA)^2 = mass^2 + mu^2

holds.  The free wave is the special case mu = 0, eA = 0, nu = mass; its
second component is i*phi1 (the scalar prefactor nu*inverse(M) reduces
to i at rest).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .biquaternion import Biquaternion, I0, embed
from .errors import (
    DispersionViolation,
    InvalidQuantumNumber,
    NonpositiveMass,
    NonpositiveRadiusParameter,
    SuperluminalSpeed,
)
from .reflector import (
    ARC_TIME_UNITS,
    AnalyticDerivative,
    CentralDifference,
    DiracOperator,
    WaveFunction,
    dirac_lhs,
    dirac_rhs,
)

__all__ = [
    "PlaneWave",
    "CircleWave",
    "ExpWave",
    "ResidualReport",
    "mass_term",
    "plane_wave_solution",
    "free_solution",
    "bound_solution",
    "residual",
    "de_broglie",
]


@dataclass(frozen=True)
class PlaneWave:
    """Parameters of a constant-potential plane-wave solution.

    nu is the frequency (total energy), mu the wavenumber, eA the scalar
    potential energy e*A0 (negative for an attractive bound state).  All
    stored real.
    """

    nu: float
    mu: float
    mass: float
    eA: float = 0.0
    charge_sign: int = 1

    def dispersion_residual(self) -> float:
        """Absolute residual of (nu - eA)^2 - mass^2 - mu^2."""
        k = self.nu - self.eA
        return abs(k * k - self.mass * self.mass - self.mu * self.mu)

    def is_on_shell(self, tol: float = 1e-10) -> bool:
        scale = max(1.0, self.mass * self.mass + self.mu * self.mu)
        return self.dispersion_residual() <= tol * scale

    def potential(self) -> tuple[Biquaternion, float]:
        """The embedded potential biquaternion and the charge e.

        Splits eA into e = charge_sign and A0 = eA/e so that the Dirac
        term -i*e*A applied to the wave reproduces the stored product.
        """
        e = float(self.charge_sign)
        return embed((self.eA / e, 0.0, 0.0, 0.0)), e


@dataclass(frozen=True)
class CircleWave:
    """A standing vibration of the temporal circle (neutral quasi-particle)."""

    n_r: int
    R0l: float
    eta_l: float = field(init=False)

    def __post_init__(self):
        if self.n_r < 1 or self.n_r != int(self.n_r):
            raise InvalidQuantumNumber(f"circle wave needs a positive integer n_r, got {self.n_r}")
        if not self.R0l > 0:
            raise NonpositiveRadiusParameter(f"circle radius must be positive, got {self.R0l}")
        object.__setattr__(self, "eta_l", self.n_r / self.R0l)


class ExpWave:
    """prefactor * exp(i * k.x) with a real wavevector k over chart coordinates."""

    __slots__ = ("prefactor", "k")

    def __init__(self, prefactor: Biquaternion, k: Sequence[float]):
        self.prefactor = prefactor
        self.k = np.asarray(k, dtype=float)
        if self.k.shape != (4,):
            raise ValueError("wavevector needs exactly 4 components")

    def phase(self, point: np.ndarray) -> complex:
        return cmath.exp(1j * float(np.dot(self.k, point)))

    def __call__(self, point: np.ndarray) -> Biquaternion:
        return self.prefactor * self.phase(point)

    def derivative(self, point: np.ndarray, mu: int) -> Biquaternion:
        return (1j * self.k[mu]) * self(point)

    def scaled(self, s: complex) -> "ExpWave":
        return ExpWave(s * self.prefactor, self.k)


def mass_term(mass: float) -> Biquaternion:
    """Scalar mass biquaternion -i*mass; its norm form is -mass^2."""
    return Biquaternion(-1j * mass)


def plane_wave_solution(nu: float, mu: float, mass: float, eA: float = 0.0) -> WaveFunction:
    """Assemble the plane-wave pair without checking the dispersion relation.

    Deliberately off-shell waves are useful for exercising the residual
    harness; :func:`bound_solution` is the checked entry point.
    """
    if not mass > 0:
        raise NonpositiveMass(f"mass must be positive, got {mass}")
    k = (-nu, mu, 0.0, 0.0)
    phi1 = ExpWave(I0, k)
    # ((nu - eA)*i_0 - i*mu*i_1) * inverse(-i*mass), inverse = i/mass
    c2 = Biquaternion(1j * (nu - eA) / mass, mu / mass)
    phi2 = ExpWave(c2, k)
    return WaveFunction(phi1, phi2)


def free_solution(mass: float) -> WaveFunction:
    """Rest-frame wave exp(-i*mass*s0) on a temporal circle chart."""
    if not mass > 0:
        raise NonpositiveMass(f"mass must be positive, got {mass}")
    return plane_wave_solution(nu=mass, mu=0.0, mass=mass, eA=0.0)


def bound_solution(pw: PlaneWave) -> WaveFunction:
    """Checked plane-wave solution for a constant potential."""
    if not pw.is_on_shell():
        raise DispersionViolation(pw.dispersion_residual())
    return plane_wave_solution(pw.nu, pw.mu, pw.mass, pw.eA)


@dataclass(frozen=True)
class ResidualReport:
    """Maximum Dirac-equation residual over the sampled points."""

    fd: float
    analytic: float | None

    def worst(self) -> float:
        return self.fd if self.analytic is None else max(self.fd, self.analytic)


def residual(wave: WaveFunction,
             a_pot: Biquaternion,
             e: float,
             m: Biquaternion,
             points: Sequence[np.ndarray],
             h: float = 1e-5,
             operator: DiracOperator = ARC_TIME_UNITS) -> ResidualReport:
    """Max-norm residual of (D - i e A) Phi - Phi M over the given points.

    Always evaluates second-order central differences with step h; adds
    the analytic-derivative residual when both components expose one.
    """
    fd = CentralDifference(h)
    analytic_available = hasattr(wave.phi1, "derivative") and hasattr(wave.phi2, "derivative")
    an = AnalyticDerivative() if analytic_available else None
    worst_fd = 0.0
    worst_an: float | None = 0.0 if analytic_available else None
    for point in points:
        p = np.asarray(point, dtype=float)
        rhs = dirac_rhs(wave, m, p)
        worst_fd = max(worst_fd, dirac_lhs(operator, fd, a_pot, e, wave, p).max_abs_diff(rhs))
        if an is not None:
            worst_an = max(worst_an, dirac_lhs(operator, an, a_pot, e, wave, p).max_abs_diff(rhs))
    return ResidualReport(fd=worst_fd, analytic=worst_an)


def de_broglie(mass: float, v: float) -> tuple[float, float]:
    """Energy and momentum (eta, mu) of a free particle at speed v.

    eta = mass/sqrt(1 - v^2), mu = mass*v/sqrt(1 - v^2); they satisfy
    eta^2 - mu^2 = mass^2 and mu/eta = v.
    """
    if not mass > 0:
        raise NonpositiveMass(f"mass must be positive, got {mass}")
    if not abs(v) < 1.0:
        raise SuperluminalSpeed(f"|v| must be below 1, got {v}")
    gamma = 1.0 / math.sqrt(1.0 - v * v)
    return mass * gamma, mass * v * gamma
