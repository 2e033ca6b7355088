"""Per-point coupling coefficients and the charge-density quadratic.

At every spacetime point the interaction of a charge density rho and a
potential magnitude A is tied together by

    rho^2/(d e^2) - A^3 rho - m^2 d A^4 = 0

with a coupling coefficient d.  For the plain orbital interaction
d = 3*pi/(n^2 h^2) with h = 2*pi; adding a circle vibration replaces
sqrt(n_theta^2 - alpha^2) by sqrt(n_theta^2 - alpha^2) + n_r, giving

    d' = 3*pi / (h^2 * (n_theta^2 + n_r^2 + 2 n_r sqrt(n_theta^2 - alpha^2)))

whose denominator bracket equals (sqrt(n_theta^2 - alpha^2) + n_r)^2
+ alpha^2 identically, so d' is always positive and reduces to
d(n_theta) at n_r = 0.  The quadratic solves in closed form:

    rho = (A^2 e^2 d'/2) * (A +- sqrt(A^2 + 4 m^2/e^2)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import InvalidQuantumNumber, SpeedDomain, ZeroCharge
from .spectrum import QuantumNumbers

__all__ = [
    "H_NATURAL",
    "CouplingCoefficients",
    "ChargeDensitySolution",
    "coefficient_d",
    "coefficient_d_prime",
    "replacement_map",
    "rho_residual",
    "solve_rho",
]

H_NATURAL = 2.0 * math.pi  # Planck's constant with hbar = 1


def coefficient_d(n: int) -> float:
    """Orbital coupling coefficient 3*pi/(n^2 h^2) = 3/(4 pi n^2)."""
    if int(n) != n or n < 1:
        raise InvalidQuantumNumber(f"n must be an integer >= 1, got {n}")
    return 3.0 / (4.0 * math.pi * (n * n))


def replacement_map(n_theta: int, alpha: float) -> float:
    """sqrt(n_theta^2 - alpha^2); callers add n_r to extend the orbit coupling.

    Squaring the shifted value and adding alpha^2 reproduces the
    denominator bracket of :func:`coefficient_d_prime` exactly.
    """
    if int(n_theta) != n_theta or n_theta < 1:
        raise InvalidQuantumNumber(f"n_theta must be an integer >= 1, got {n_theta}")
    if not alpha < n_theta:
        raise SpeedDomain(f"need alpha < n_theta, got alpha={alpha}, n_theta={n_theta}")
    return math.sqrt(n_theta * n_theta - alpha * alpha)


def coefficient_d_prime(qn: QuantumNumbers, alpha: float) -> float:
    """Coupled coefficient; positive, equal to coefficient_d(n_theta) at n_r = 0."""
    root = replacement_map(qn.n_theta, alpha)
    bracket = qn.n_theta * qn.n_theta + qn.n_r * qn.n_r + 2.0 * qn.n_r * root
    return 3.0 / (4.0 * math.pi * bracket)


@dataclass(frozen=True)
class CouplingCoefficients:
    """d and d' for a quantum-number pair at coupling alpha."""

    alpha: float
    qn: QuantumNumbers
    d: float = field(init=False)
    d_prime: float = field(init=False)
    h: float = H_NATURAL

    def __post_init__(self):
        object.__setattr__(self, "d", coefficient_d(self.qn.n))
        object.__setattr__(self, "d_prime", coefficient_d_prime(self.qn, self.alpha))


def rho_residual(rho: float, A: float, mass: float, e: float, d: float) -> float:
    """Residual of the charge-density quadratic at rho (d or d' as supplied)."""
    if e == 0.0:
        raise ZeroCharge("charge e must be nonzero")
    return rho * rho / (d * e * e) - A ** 3 * rho - mass * mass * d * A ** 4


@dataclass(frozen=True)
class ChargeDensitySolution:
    """Both closed-form roots with their residuals in the quadratic."""

    A: float
    rho_plus: float
    rho_minus: float
    residual_plus: float
    residual_minus: float


def solve_rho(A: float, mass: float, e: float, d_prime: float) -> ChargeDensitySolution:
    """Closed-form roots rho = (A^2 e^2 d'/2)(A +- sqrt(A^2 + 4 m^2/e^2)).

    Both branches are returned together with the residual of each in the
    quadratic; physical selection is left to the caller.
    """
    if e == 0.0:
        raise ZeroCharge("charge e must be nonzero")
    if not d_prime > 0:
        raise ValueError(f"d_prime must be positive, got {d_prime}")
    if A == 0.0:
        return ChargeDensitySolution(A=0.0, rho_plus=0.0, rho_minus=0.0,
                                     residual_plus=0.0, residual_minus=0.0)
    s = math.sqrt(A * A + 4.0 * mass * mass / (e * e))
    front = A * A * e * e * d_prime / 2.0
    # A -+ s cancels catastrophically when 4 m^2/e^2 << A^2; take the
    # well-conditioned branch directly and the other from the exact root
    # product rho_plus * rho_minus = -A^4 e^2 d'^2 m^2.
    product = -(A ** 4) * e * e * d_prime * d_prime * mass * mass
    if A > 0.0:
        rho_p = front * (A + s)
        rho_m = product / rho_p + 0.0
    else:
        rho_m = front * (A - s)
        rho_p = product / rho_m + 0.0
    return ChargeDensitySolution(
        A=A,
        rho_plus=rho_p,
        rho_minus=rho_m,
        residual_plus=rho_residual(rho_p, A, mass, e, d_prime),
        residual_minus=rho_residual(rho_m, A, mass, e, d_prime),
    )
