"""Tour of the circular charts: polar decompositions, arc maps, round trips.

Run:  python demos/02_chart_tour.py
"""

import numpy as np

from circledirac import (
    ChartKind,
    LightConePoint,
    SpaceChart,
    arc_map,
    chart_map,
    embed,
    scale_potential,
)

L = SpaceChart(ChartKind.L)
T = SpaceChart(ChartKind.T, R0=0.7)
S = SpaceChart(ChartKind.S, R0=0.7, R1=1.3)

print("The temporal plane is covered by hyperbolic polar coordinates;")
print("a circle chart pins the arc radius to a constant R0.")
p = np.array([0.4, -0.3, 0.8, 1.5])
print("  point in L:", p)
q = chart_map(p, L, T)
print("  in T      :", q, " (s0 = R0*theta0, r0 = proper radius)")
print("  back in L :", chart_map(q, T, L))

print("\nApplying both circle maps lands in the four-dimensional chart S:")
s = chart_map(p, L, S)
print("  in S      :", s)
print("  round trip error:", np.max(np.abs(chart_map(s, S, L) - p)))

print("\nThe true arc length relates to the chart arc by s_tilde = r*s/R:")
print("  r = 2R, s = 3  ->  s_tilde =", arc_map(2 * 0.7, 3.0, 0.7))

print("\nOn-cone points have no hyperbolic polar decomposition:")
try:
    chart_map([1.0, 0.0, 0.0, 1.0], L, T)
except LightConePoint as exc:
    print("  LightConePoint:", exc)

print("\nThe volume-element rescaling flattens an inverse-distance potential")
print("into a constant on the spatial circle chart:")
e = 0.25
for r1 in (0.5, 1.0, 4.0):
    a = scale_potential(embed((e / r1, 0, 0, 0)), r1, R1=2.0)
    print(f"  r1 = {r1:3}:  scaled temporal coefficient = {a.c0}")
