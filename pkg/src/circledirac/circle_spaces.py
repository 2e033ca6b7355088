"""Circular spacetime charts and the bijections between them.

Four charts share the same underlying flat spacetime:

===== ======================== ==========================
chart coordinates              circle radii required
===== ======================== ==========================
L     (x0, x1, x2, x3)         none
T     (s0, x1, x2, r0)         R0 (temporal circle)
M     (x0, s1, r1, x3)         R1 (spatial circle)
S     (s0, s1, r1, r0)         R0 and R1
===== ======================== ==========================

The temporal plane (x0, x3) of L is covered (off the light cone, in the
x3 > |x0| wedge) by hyperbolic polar coordinates

    x0 = r0 sinh(theta0),   x3 = r0 cosh(theta0),

and the spatial plane (x1, x2) by ordinary polar coordinates

    x1 = r1 sin(theta1),    x2 = r1 cos(theta1).

A circle chart replaces the true arc length s_tilde = r*theta by the
fixed-radius arc s = R*theta, giving the bijection s_tilde = r*s/R
(:func:`arc_map`), which extends continuously to r = 0.  Only the
inverse hyperbolic polar map rejects on-cone points.

Hyperbolic angles are kept real.  The imaginary rotation angle
theta_hat = -i*theta0 exists only inside :func:`rotate_temporal_basis`,
entering through cos(-i t) = cosh t and sin(-i t) = -i sinh t.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

import numpy as np

from .biquaternion import Biquaternion, I0, I1, I2, I3
from .errors import LightConePoint, NonpositiveRadiusParameter
from .reflector import Reflector, unit_reflector

__all__ = [
    "ChartKind",
    "SpaceChart",
    "TemporalPolar",
    "SpatialPolar",
    "RotatedBasis",
    "arc_map",
    "arc_map_inverse",
    "rotate_temporal_basis",
    "rotate_spatial_basis",
    "rotated_basis",
    "temporal_derivative_matrix",
    "scale_potential",
    "chart_map",
    "chart_point_to_json",
    "chart_point_from_json",
]


class ChartKind(str, Enum):
    L = "L"
    M = "M"
    T = "T"
    S = "S"


@dataclass(frozen=True)
class SpaceChart:
    """A chart label plus the circle radii it needs."""

    kind: ChartKind
    R0: float | None = None
    R1: float | None = None

    def __post_init__(self):
        kind = ChartKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind in (ChartKind.T, ChartKind.S):
            self._require_radius("R0", self.R0)
        if kind in (ChartKind.M, ChartKind.S):
            self._require_radius("R1", self.R1)

    @staticmethod
    def _require_radius(name: str, value):
        if value is None or not value > 0:
            raise NonpositiveRadiusParameter(f"chart requires {name} > 0, got {value}")


@dataclass(frozen=True)
class TemporalPolar:
    """Hyperbolic polar point of the temporal plane (x3 > |x0| wedge)."""

    r0: float
    theta0: float

    @classmethod
    def from_plane(cls, x0: float, x3: float) -> "TemporalPolar":
        w = x3 * x3 - x0 * x0
        if w <= 0.0 or x3 <= 0.0:
            raise LightConePoint(
                f"temporal polar map undefined at (x0, x3) = ({x0}, {x3}); "
                "requires x3 > |x0|"
            )
        r0 = math.sqrt(w)
        return cls(r0, math.asinh(x0 / r0))

    def to_plane(self) -> tuple[float, float]:
        return self.r0 * math.sinh(self.theta0), self.r0 * math.cosh(self.theta0)


@dataclass(frozen=True)
class SpatialPolar:
    """Ordinary polar point of the spatial plane."""

    r1: float
    theta1: float

    @classmethod
    def from_plane(cls, x1: float, x2: float) -> "SpatialPolar":
        return cls(math.hypot(x1, x2), math.atan2(x1, x2))

    def to_plane(self) -> tuple[float, float]:
        return self.r1 * math.sin(self.theta1), self.r1 * math.cos(self.theta1)


def arc_map(r: float, s: float, R: float) -> float:
    """True arc length r*s/R from the chart arc coordinate s.

    Total in r, including the light cone r = 0; bijective in s for
    fixed r != 0.
    """
    if not R > 0:
        raise NonpositiveRadiusParameter(f"arc map requires R > 0, got {R}")
    return r * s / R


def arc_map_inverse(r: float, s_tilde: float, R: float) -> float:
    """Chart arc coordinate R*s_tilde/r; undefined on the cone r = 0."""
    if not R > 0:
        raise NonpositiveRadiusParameter(f"arc map requires R > 0, got {R}")
    if r == 0.0:
        raise LightConePoint("arc map inverse undefined at r = 0")
    return R * s_tilde / r


# -- rotated reflector bases ----------------------------------------------

@dataclass(frozen=True)
class RotatedBasis:
    """Chart-axis reflector units in coordinate-slot order.

    For a temporal rotation the slots hold (arc_0, i_1, i_2, radius_0);
    for a spatial rotation (i_0, arc_1, radius_1, i_3); combining both
    angles gives the full circular-chart basis (arc_0, arc_1, radius_1,
    radius_0).  Every unit keeps the (u, conj(u)) reflector pattern and
    the set satisfies unit squares and pairwise anti-commutation.
    """

    u0: Reflector
    u1: Reflector
    u2: Reflector
    u3: Reflector

    @property
    def units(self) -> tuple[Reflector, Reflector, Reflector, Reflector]:
        return (self.u0, self.u1, self.u2, self.u3)


def rotate_temporal_basis(theta0: float) -> RotatedBasis:
    """Rotate (i_0, i_3) into the arc/radius pair of the temporal circle.

    With theta_hat = -i*theta0 the inverse rotation reads

        arc_0    = i_0 cos(theta_hat) - i_3 sin(theta_hat)
                 = i_0 cosh(theta0) + i i_3 sinh(theta0)
        radius_0 = i_0 sin(theta_hat) + i_3 cos(theta_hat)
                 = -i i_0 sinh(theta0) + i_3 cosh(theta0)

    so theta0 = 0 returns (i_0, i_3) unchanged.
    """
    ch = math.cosh(theta0)
    sh = math.sinh(theta0)
    arc = Biquaternion(ch, 0.0, 0.0, 1j * sh)
    radius = Biquaternion(-1j * sh, 0.0, 0.0, ch)
    return RotatedBasis(unit_reflector(arc), unit_reflector(I1),
                        unit_reflector(I2), unit_reflector(radius))


def rotate_spatial_basis(theta1: float) -> RotatedBasis:
    """Rotate (i_1, i_2) into the arc/radius pair of the spatial circle.

        arc_1    = i_1 cos(theta1) - i_2 sin(theta1)
        radius_1 = i_1 sin(theta1) + i_2 cos(theta1)
    """
    c = math.cos(theta1)
    s = math.sin(theta1)
    arc = Biquaternion(0.0, c, -s, 0.0)
    radius = Biquaternion(0.0, s, c, 0.0)
    return RotatedBasis(unit_reflector(I0), unit_reflector(arc),
                        unit_reflector(radius), unit_reflector(I3))


def rotated_basis(theta0: float, theta1: float) -> RotatedBasis:
    """Full circular-chart basis with both planes rotated."""
    t = rotate_temporal_basis(theta0)
    s = rotate_spatial_basis(theta1)
    return RotatedBasis(t.u0, s.u1, s.u2, t.u3)


def temporal_derivative_matrix(theta0: float) -> np.ndarray:
    """Hyperbolic rotation taking plane derivatives to polar ones.

    Has Lorentz-boost form; its determinant cosh^2 - sinh^2 is 1.
    """
    ch = math.cosh(theta0)
    sh = math.sinh(theta0)
    return np.array([[ch, -sh], [-sh, ch]], dtype=float)


def scale_potential(a: Biquaternion, r1: float, R1: float) -> Biquaternion:
    """Volume-element rescaling (r1/R1)*a of a potential on a spatial circle chart.

    Applied to an inverse-distance potential A0 = e/r1 this yields the
    constant e/R1, independent of r1: the premise of the constant bound
    potential.
    """
    if not R1 > 0:
        raise NonpositiveRadiusParameter(f"potential scaling requires R1 > 0, got {R1}")
    return (r1 / R1) * a


# -- chart-to-chart maps ----------------------------------------------------

def _to_L(coords: np.ndarray, chart: SpaceChart) -> np.ndarray:
    c = np.asarray(coords, dtype=float)
    kind = chart.kind
    if kind is ChartKind.L:
        return c.copy()
    out = c.copy()
    if kind in (ChartKind.T, ChartKind.S):
        theta0 = c[0] / chart.R0
        out[0] = c[3] * math.sinh(theta0)
        out[3] = c[3] * math.cosh(theta0)
    if kind in (ChartKind.M, ChartKind.S):
        theta1 = c[1] / chart.R1
        out[1] = c[2] * math.sin(theta1)
        out[2] = c[2] * math.cos(theta1)
    return out


def _from_L(coords: np.ndarray, chart: SpaceChart) -> np.ndarray:
    c = np.asarray(coords, dtype=float)
    kind = chart.kind
    if kind is ChartKind.L:
        return c.copy()
    out = c.copy()
    if kind in (ChartKind.T, ChartKind.S):
        pol = TemporalPolar.from_plane(c[0], c[3])
        out[0] = chart.R0 * pol.theta0
        out[3] = pol.r0
    if kind in (ChartKind.M, ChartKind.S):
        pol = SpatialPolar.from_plane(c[1], c[2])
        out[1] = chart.R1 * pol.theta1
        out[2] = pol.r1
    return out


def chart_map(coords: Iterable[float], source: SpaceChart, target: SpaceChart) -> np.ndarray:
    """Map a point between charts; round trips are the identity.

    Composes the polar decompositions, the arc maps and the slot
    renaming (arc coordinates occupy the slots of the plane coordinates
    they replace).  Raises LightConePoint when the temporal inversion is
    required at a point with x3 <= |x0|.
    """
    c = np.asarray(list(coords), dtype=float)
    if c.shape != (4,):
        raise ValueError(f"chart point needs exactly 4 coordinates, got shape {c.shape}")
    return _from_L(_to_L(c, source), target)


def chart_point_to_json(chart: SpaceChart, coords: Iterable[float]) -> str:
    """Serialize {chart, coords[4], R0?, R1?} for the mapping CLI."""
    rec: dict = {"chart": chart.kind.value, "coords": [float(x) for x in coords]}
    if chart.R0 is not None:
        rec["R0"] = chart.R0
    if chart.R1 is not None:
        rec["R1"] = chart.R1
    return json.dumps(rec)


def chart_point_from_json(text: str | dict) -> tuple[SpaceChart, np.ndarray]:
    rec = json.loads(text) if isinstance(text, str) else text
    chart = SpaceChart(ChartKind(rec["chart"]), rec.get("R0"), rec.get("R1"))
    coords = np.asarray(rec["coords"], dtype=float)
    if coords.shape != (4,):
        raise ValueError("chart point record needs exactly 4 coordinates")
    return chart, coords
