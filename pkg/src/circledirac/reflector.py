"""Reflectors: 2x2 block matrices with zero diagonal and biquaternion blocks.

A :class:`Reflector` represents ``[[0, top], [bottom, 0]]``.  The product
of two reflectors is block-diagonal, represented by :class:`DiagPair`.
The Dirac system is written entirely in terms of such blocks:

    (D - i e A) Phi = Phi M

with D, A, M, Phi all reflectors.  Equating diagonal blocks of both sides
splits it into two quaternionic component equations,

    (D     - i e a     ) phi2 = -phi1 * conj(m)
    (conj. - i e conj(a)) phi1 =  phi2 * m

where lowercase letters are the upper blocks.  The potential multiplies
the wave components on the LEFT and the mass term on the RIGHT; the
block layout forces this ordering and it matters because the algebra
does not commute.

Derivative application is injected (analytic for plane waves, central
finite differences generically) so residual checks can cross-validate
the two routes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .biquaternion import Biquaternion, I0, I1, I2, I3
from .errors import NonUnitRotor

__all__ = [
    "Reflector",
    "DiagPair",
    "WaveFunction",
    "DiracOperator",
    "AnalyticDerivative",
    "CentralDifference",
    "reflector_mul",
    "diag_mul_reflector",
    "reflector_mul_diag",
    "unit_reflector",
    "sandwich",
    "dirac_lhs",
    "dirac_rhs",
    "STANDARD_UNITS",
    "ARC_TIME_UNITS",
]


@dataclass(frozen=True)
class Reflector:
    """Off-diagonal block matrix [[0, top], [bottom, 0]]."""

    top: Biquaternion
    bottom: Biquaternion

    def __add__(self, other: "Reflector") -> "Reflector":
        return Reflector(self.top + other.top, self.bottom + other.bottom)

    def __sub__(self, other: "Reflector") -> "Reflector":
        return Reflector(self.top - other.top, self.bottom - other.bottom)

    def __neg__(self) -> "Reflector":
        return Reflector(-self.top, -self.bottom)

    def scale(self, s: complex) -> "Reflector":
        return Reflector(s * self.top, s * self.bottom)

    def max_abs(self) -> float:
        return max(self.top.max_abs(), self.bottom.max_abs())

    def max_abs_diff(self, other: "Reflector") -> float:
        return (self - other).max_abs()

    def to_matrix(self) -> np.ndarray:
        m = np.zeros((4, 4), dtype=complex)
        m[:2, 2:] = self.top.to_matrix()
        m[2:, :2] = self.bottom.to_matrix()
        return m


@dataclass(frozen=True)
class DiagPair:
    """Block-diagonal matrix [[upper, 0], [0, lower]]."""

    upper: Biquaternion
    lower: Biquaternion

    def __add__(self, other: "DiagPair") -> "DiagPair":
        return DiagPair(self.upper + other.upper, self.lower + other.lower)

    def __sub__(self, other: "DiagPair") -> "DiagPair":
        return DiagPair(self.upper - other.upper, self.lower - other.lower)

    def __neg__(self) -> "DiagPair":
        return DiagPair(-self.upper, -self.lower)

    def max_abs(self) -> float:
        return max(self.upper.max_abs(), self.lower.max_abs())

    def max_abs_diff(self, other: "DiagPair") -> float:
        return (self - other).max_abs()

    def to_matrix(self) -> np.ndarray:
        m = np.zeros((4, 4), dtype=complex)
        m[:2, :2] = self.upper.to_matrix()
        m[2:, 2:] = self.lower.to_matrix()
        return m


def reflector_mul(a: Reflector, b: Reflector) -> DiagPair:
    """Reflector times reflector is block-diagonal."""
    return DiagPair(a.top * b.bottom, a.bottom * b.top)


def diag_mul_reflector(d: DiagPair, r: Reflector) -> Reflector:
    """Diagonal times reflector stays a reflector."""
    return Reflector(d.upper * r.top, d.lower * r.bottom)


def reflector_mul_diag(r: Reflector, d: DiagPair) -> Reflector:
    return Reflector(r.top * d.lower, r.bottom * d.upper)


def unit_reflector(u: Biquaternion) -> Reflector:
    """The reflector (u, conj(u)) carried by a basis unit or operator symbol."""
    return Reflector(u, u.conj)


# -- rotor sandwich ------------------------------------------------------

def _check_unit(r: Biquaternion, tol: float) -> None:
    n = r.norm_form()
    if abs(n - 1.0) > tol:
        raise NonUnitRotor(f"rotor norm form {n} differs from 1 by more than {tol}")


def sandwich(r: Biquaternion, x, tol: float = 1e-12):
    """Same-factor rotor sandwich.

    For a biquaternion x the result is r*x*r.  For a reflector the top
    block is sandwiched with (r, r) and the bottom block with
    (conj(r), conj(r)); this is the diagonal-rotor action
    DiagPair(r, conj(r)) . X . DiagPair(conj(r), r) written out.
    """
    _check_unit(r, tol)
    if isinstance(x, Biquaternion):
        return r * x * r
    if isinstance(x, Reflector):
        rc = r.conj
        return Reflector(r * x.top * r, rc * x.bottom * rc)
    raise TypeError(f"cannot sandwich object of type {type(x).__name__}")


# -- wave functions and derivative strategies ------------------------------

@dataclass(frozen=True)
class WaveFunction:
    """Pointwise reflector Phi = (phi1, phi2) over chart coordinates.

    phi1 and phi2 map a length-4 coordinate array to a Biquaternion.
    Components that expose a ``derivative(point, mu)`` method can be
    differentiated analytically.
    """

    phi1: Callable[[np.ndarray], Biquaternion]
    phi2: Callable[[np.ndarray], Biquaternion]

    def at(self, point: np.ndarray) -> Reflector:
        return Reflector(self.phi1(point), self.phi2(point))


class AnalyticDerivative:
    """Uses the component's own closed-form derivative."""

    def __call__(self, f, point: np.ndarray, mu: int) -> Biquaternion:
        return f.derivative(point, mu)


class CentralDifference:
    """Second-order central difference with step h."""

    def __init__(self, h: float = 1e-5):
        if h <= 0:
            raise ValueError("finite-difference step must be positive")
        self.h = h

    def __call__(self, f, point: np.ndarray, mu: int) -> Biquaternion:
        p_plus = np.array(point, dtype=float)
        p_minus = np.array(point, dtype=float)
        p_plus[mu] += self.h
        p_minus[mu] -= self.h
        return (f(p_plus) - f(p_minus)) / (2.0 * self.h)


@dataclass(frozen=True)
class DiracOperator:
    """First-order operator sum_mu u_mu d/dx_mu given by its upper-block units.

    The lower block applies conjugated units.  On charts built from arc
    coordinates the temporal unit is i*i_0: the temporal arc coordinate
    is stored real while the algebra wants it divided by i, and the
    factor i surfaces in the derivative term.  Plain Minkowski-like
    charts use the bare units.
    """

    units: tuple[Biquaternion, Biquaternion, Biquaternion, Biquaternion]

    def transform(self, f: Callable[[Biquaternion], Biquaternion]) -> "DiracOperator":
        """New operator with every unit mapped through f (e.g. a rotor sandwich)."""
        return DiracOperator(tuple(f(u) for u in self.units))


STANDARD_UNITS = DiracOperator((I0, I1, I2, I3))
ARC_TIME_UNITS = DiracOperator((1j * I0, I1, I2, I3))


def dirac_lhs(operator: DiracOperator,
              deriv,
              a_pot: Biquaternion,
              e: float,
              wave: WaveFunction,
              point: np.ndarray) -> DiagPair:
    """Left-hand side (D - i e A) Phi evaluated at a point, as a DiagPair.

    ``a_pot`` is the embedded potential biquaternion (temporal slot
    already divided by i); it multiplies the wave components on the left.
    """
    upper = Biquaternion()
    lower = Biquaternion()
    for mu, u in enumerate(operator.units):
        upper = upper + u * deriv(wave.phi2, point, mu)
        lower = lower + u.conj * deriv(wave.phi1, point, mu)
    ie = 1j * e
    upper = upper - ie * (a_pot * wave.phi2(point))
    lower = lower - ie * (a_pot.conj * wave.phi1(point))
    return DiagPair(upper, lower)


def dirac_rhs(wave: WaveFunction, m: Biquaternion, point: np.ndarray) -> DiagPair:
    """Right-hand side Phi M as a DiagPair; M multiplies on the right."""
    return DiagPair(-(wave.phi1(point) * m.conj), wave.phi2(point) * m)
