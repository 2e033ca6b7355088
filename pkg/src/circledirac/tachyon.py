"""The infinite-velocity (tachyonic) transformation and dashed-frame relations.

On biquaternion coefficients the transformation is the quarter turn

    (c0, c1, c2, c3)  ->  (-c1, c0, c2, c3),

realised as the same-factor rotor sandwich r*x*r with r = (1 + i_1)/sqrt(2)
for x-type quantities and conj(r)*y*conj(r) for conjugated (y-dagger-type)
quantities.  Applied twice it is the exact half turn in the (0, 1)
coefficient plane, i.e. the sandwich with the composed rotor i_1.

On stored-real four-vectors the transformation exchanges the temporal and
first spatial components; the accumulated factors of -i live in the
coefficient map, not in the real components.  The dashed-frame kinematic
relations are plain exchanges in stored-real form: s0' = s1, s1' = s0,
eta' = mu, mu' = eta, and the arc-form dot product eta*ds0 + mu*ds1 is
invariant under them.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field

from .biquaternion import Biquaternion, FourVector, I1, embed, unembed
from .errors import NonUnitRotor, ZeroArcElement
from .reflector import DiracOperator, Reflector, WaveFunction, sandwich
from .planewave import ExpWave

__all__ = [
    "TachyonRotor",
    "DashedKinematics",
    "component_map",
    "tachyon_quaternion",
    "tachyon_reflector",
    "tachyon_fourvector",
    "tachyon_double",
    "tachyon_fourvector_double",
    "dashed_energy",
    "transform_wave",
    "transform_operator",
    "FAULT_ENV",
]

# Documented test-only fault injection: setting the environment variable
# CIRCLEDIRAC_FAULT to "tachyon-sign" flips one sign in component_map so
# the verification suite must detect the mutation and fail.
FAULT_ENV = "CIRCLEDIRAC_FAULT"

_SQRT_HALF = 1.0 / math.sqrt(2.0)


def _default_rotor() -> Biquaternion:
    return Biquaternion(_SQRT_HALF, _SQRT_HALF)


@dataclass(frozen=True)
class TachyonRotor:
    """A real quaternion of unit modulus; defaults to (1 + i_1)/sqrt(2)."""

    r: Biquaternion = field(default_factory=_default_rotor)
    tol: float = 1e-12

    def __post_init__(self):
        n = self.r.norm_form()
        if abs(n - 1.0) > self.tol:
            raise NonUnitRotor(f"rotor norm form {n} differs from 1 by more than {self.tol}")

    @property
    def conj(self) -> Biquaternion:
        return self.r.conj


def component_map(x: Biquaternion) -> Biquaternion:
    """The transformation written on coefficients: (c0, c1) -> (-c1, c0)."""
    sign = -1.0 if os.environ.get(FAULT_ENV, "") == "tachyon-sign" else 1.0
    return Biquaternion(-x.c1, sign * x.c0, x.c2, x.c3)


def tachyon_quaternion(x: Biquaternion,
                       rotor: TachyonRotor | None = None,
                       conjugated: bool = False) -> Biquaternion:
    """Same-factor sandwich r*x*r (or conj(r)*x*conj(r) for dagger-type x)."""
    rot = rotor if rotor is not None else TachyonRotor()
    r = rot.conj if conjugated else rot.r
    return r * x * r


def tachyon_reflector(x: Reflector, rotor: TachyonRotor | None = None) -> Reflector:
    """Blockwise transform: top with (r, r), bottom with (conj r, conj r)."""
    rot = rotor if rotor is not None else TachyonRotor()
    return sandwich(rot.r, x, tol=rot.tol)


def tachyon_fourvector(x: FourVector) -> FourVector:
    """Dashed-frame stored-real components: temporal and first spatial swap.

    The dashed temporal slot carries what was the first spatial
    component and vice versa; the factors of -i absorbed by the
    stored-real convention are visible only in :func:`component_map`.
    """
    return FourVector(x.x1, x.x0, x.x2, x.x3)


def tachyon_double(x: Biquaternion) -> Biquaternion:
    """Two applications, via the composed rotor i_1: exact (0,1) half turn."""
    return I1 * x * I1


def tachyon_fourvector_double(x: FourVector) -> FourVector:
    """Two applications on an embedded four-vector: (x0, x1) negate."""
    return unembed(tachyon_double(embed(x)))


@dataclass(frozen=True)
class DashedKinematics:
    """Stored-real dashed-frame coordinates and energy-momentum."""

    s0d: float
    s1d: float
    etad: float
    mud: float

    @classmethod
    def from_undashed(cls, s0: float, s1: float, eta: float, mu: float) -> "DashedKinematics":
        return cls(s0d=s1, s1d=s0, etad=mu, mud=eta)


def dashed_energy(v: float, ds0: float, ds1: float, eta: float, mu: float) -> float:
    """Dashed-frame interaction energy (eta*ds0 + mu*ds1)/ds1.

    ``v`` is the undashed arc-form energy (the same dot product divided
    by ds0); the result equals v*ds0/ds1 and the dot product itself is
    invariant under the dashed exchange.
    """
    if ds1 == 0.0:
        raise ZeroArcElement("dashed energy needs a nonzero arc element ds1")
    return (eta * ds0 + mu * ds1) / ds1


# -- covariance of the Dirac system ----------------------------------------

def transform_wave(wave: WaveFunction, rotor: TachyonRotor | None = None) -> WaveFunction:
    """Tachyon-transform a plane wave: sandwich prefactors, swap arc slots.

    Only exponential waves are supported; the phase re-expressed in
    dashed coordinates swaps the wavevector's temporal and first spatial
    components, matching the coordinate exchange.
    """
    rot = rotor if rotor is not None else TachyonRotor()
    if not isinstance(wave.phi1, ExpWave) or not isinstance(wave.phi2, ExpWave):
        raise TypeError("transform_wave requires exponential plane-wave components")
    r, rc = rot.r, rot.conj

    def swap(k):
        return (k[1], k[0], k[2], k[3])

    phi1 = ExpWave(r * wave.phi1.prefactor * r, swap(wave.phi1.k))
    phi2 = ExpWave(rc * wave.phi2.prefactor * rc, swap(wave.phi2.k))
    return WaveFunction(phi1, phi2)


def transform_operator(op: DiracOperator, rotor: TachyonRotor | None = None) -> DiracOperator:
    """Tachyon-transform the operator: sandwich units and swap arc slots."""
    rot = rotor if rotor is not None else TachyonRotor()
    r = rot.r
    u = [r * unit * r for unit in op.units]
    return DiracOperator((u[1], u[0], u[2], u[3]))


def transform_mass(m: Biquaternion, rotor: TachyonRotor | None = None) -> Biquaternion:
    """Upper-block mass quaternion in the dashed frame."""
    rot = rotor if rotor is not None else TachyonRotor()
    return rot.r * m * rot.r


def transform_potential(a: Biquaternion, rotor: TachyonRotor | None = None) -> Biquaternion:
    """Upper-block potential quaternion in the dashed frame."""
    rot = rotor if rotor is not None else TachyonRotor()
    return rot.r * a * rot.r
