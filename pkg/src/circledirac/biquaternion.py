"""Quaternions with complex coefficients (biquaternions).

The algebra is generated by the units i_0 = 1, i_1, i_2, i_3 with

    i_r^2 = -1,   i_1 i_2 = i_3  (cyclic),   i_2 i_1 = -i_3  (anti-cyclic),

and complex scalars commuting through everything.  The dagger operation
``conj`` is quaternion conjugation only: it fixes i_0, negates i_1..i_3
and does NOT conjugate the complex coefficients.  It is an
anti-homomorphism, conj(a*b) = conj(b)*conj(a).

Tilde convention
----------------
Temporal-like quantities (potentials A_0, masses, frequencies, arc
coordinates) enter the algebra divided by i.  Throughout this library
such quantities are STORED as their real physical values and the /i
factor is inserted exactly once, by :func:`embed`, which maps a real
four-vector (x0, x1, x2, x3) onto the biquaternion

    -i*x0 * i_0 + x1 * i_1 + x2 * i_2 + x3 * i_3.

With that convention ``norm_form(embed(X))`` is the Minkowski form
-x0^2 + x1^2 + x2^2 + x3^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Complex as _ComplexABC
from typing import Iterable

import numpy as np

__all__ = [
    "Biquaternion",
    "FourVector",
    "ONE",
    "I0",
    "I1",
    "I2",
    "I3",
    "UNITS",
    "mul",
    "conj",
    "norm_form",
    "embed",
    "unembed",
]


class Biquaternion:
    """A quaternion with complex coefficients c0..c3 of i_0..i_3."""

    __slots__ = ("c0", "c1", "c2", "c3")

    def __init__(self, c0=0.0, c1=0.0, c2=0.0, c3=0.0):
        self.c0 = complex(c0)
        self.c1 = complex(c1)
        self.c2 = complex(c2)
        self.c3 = complex(c3)

    @property
    def coeffs(self) -> tuple[complex, complex, complex, complex]:
        return (self.c0, self.c1, self.c2, self.c3)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[complex]) -> "Biquaternion":
        return cls(*coeffs)

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Biquaternion):
            return Biquaternion(self.c0 + other.c0, self.c1 + other.c1,
                                self.c2 + other.c2, self.c3 + other.c3)
        if isinstance(other, _ComplexABC):
            return Biquaternion(self.c0 + other, self.c1, self.c2, self.c3)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Biquaternion):
            return Biquaternion(self.c0 - other.c0, self.c1 - other.c1,
                                self.c2 - other.c2, self.c3 - other.c3)
        if isinstance(other, _ComplexABC):
            return Biquaternion(self.c0 - other, self.c1, self.c2, self.c3)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, _ComplexABC):
            return Biquaternion(other - self.c0, -self.c1, -self.c2, -self.c3)
        return NotImplemented

    def __neg__(self):
        return Biquaternion(-self.c0, -self.c1, -self.c2, -self.c3)

    def __mul__(self, other):
        if isinstance(other, Biquaternion):
            a0, a1, a2, a3 = self.coeffs
            b0, b1, b2, b3 = other.coeffs
            return Biquaternion(
                a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
            )
        if isinstance(other, _ComplexABC):
            return Biquaternion(self.c0 * other, self.c1 * other,
                                self.c2 * other, self.c3 * other)
        return NotImplemented

    def __rmul__(self, other):
        # complex scalars commute with everything
        if isinstance(other, _ComplexABC):
            return Biquaternion(other * self.c0, other * self.c1,
                                other * self.c2, other * self.c3)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, _ComplexABC):
            return Biquaternion(self.c0 / other, self.c1 / other,
                                self.c2 / other, self.c3 / other)
        return NotImplemented

    # -- conjugation and norm --------------------------------------------

    @property
    def conj(self) -> "Biquaternion":
        """Quaternion conjugate: i_0 fixed, i_1..i_3 negated."""
        return Biquaternion(self.c0, -self.c1, -self.c2, -self.c3)

    def norm_form(self) -> complex:
        """The scalar a * conj(a) = c0^2 + c1^2 + c2^2 + c3^2 (complex)."""
        return self.c0 * self.c0 + self.c1 * self.c1 + self.c2 * self.c2 + self.c3 * self.c3

    def inverse(self, tol: float = 1e-300) -> "Biquaternion":
        """Multiplicative inverse conj(a)/norm_form(a).

        Biquaternions with vanishing (complex) norm form are zero
        divisors and have no inverse.
        """
        n = self.norm_form()
        if abs(n) <= tol:
            raise ZeroDivisionError("biquaternion with zero norm form has no inverse")
        return self.conj / n

    # -- structure helpers -------------------------------------------------

    def is_scalar(self, tol: float = 1e-12) -> bool:
        return max(abs(self.c1), abs(self.c2), abs(self.c3)) <= tol

    def max_abs(self) -> float:
        return max(abs(self.c0), abs(self.c1), abs(self.c2), abs(self.c3))

    def max_abs_diff(self, other: "Biquaternion") -> float:
        return (self - other).max_abs()

    def approx_eq(self, other: "Biquaternion", tol: float = 1e-12) -> bool:
        """Componentwise absolute comparison (default tolerance 1e-12)."""
        return self.max_abs_diff(other) <= tol

    def to_matrix(self) -> np.ndarray:
        """Faithful 2x2 complex matrix representation, i_r -> -i sigma_r."""
        c0, c1, c2, c3 = self.coeffs
        return np.array(
            [[c0 - 1j * c3, -1j * c1 - c2],
             [-1j * c1 + c2, c0 + 1j * c3]],
            dtype=complex,
        )

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Biquaternion):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Biquaternion({self.c0!r}, {self.c1!r}, {self.c2!r}, {self.c3!r})"


ONE = Biquaternion(1.0)
I0 = ONE
I1 = Biquaternion(0.0, 1.0)
I2 = Biquaternion(0.0, 0.0, 1.0)
I3 = Biquaternion(0.0, 0.0, 0.0, 1.0)
UNITS = (I0, I1, I2, I3)


@dataclass(frozen=True)
class FourVector:
    """A real four-vector in natural units (hbar = c = 1)."""

    x0: float
    x1: float
    x2: float
    x3: float

    def __iter__(self):
        return iter((self.x0, self.x1, self.x2, self.x3))

    def minkowski_form(self) -> float:
        """-x0^2 + x1^2 + x2^2 + x3^2 (signature matching norm_form(embed))."""
        return -self.x0 * self.x0 + self.x1 * self.x1 + self.x2 * self.x2 + self.x3 * self.x3


def mul(a: Biquaternion, b: Biquaternion) -> Biquaternion:
    """Quaternion product following the multiplication table."""
    return a * b


def conj(a: Biquaternion) -> Biquaternion:
    """Quaternion conjugation; (a*b) -> conj(b)*conj(a)."""
    return a.conj


def norm_form(a: Biquaternion) -> complex:
    """Scalar part of a*conj(a); Minkowski form on embedded four-vectors."""
    return a.norm_form()


def embed(x: FourVector | Iterable[float]) -> Biquaternion:
    """Embed a real four-vector, inserting the /i factor on the temporal slot."""
    x0, x1, x2, x3 = x
    return Biquaternion(-1j * x0, x1, x2, x3)


def unembed(b: Biquaternion, tol: float = 1e-10) -> FourVector:
    """Inverse of :func:`embed`; rejects biquaternions off the embedded slice."""
    off = max(abs(b.c0.real), abs(b.c1.imag), abs(b.c2.imag), abs(b.c3.imag))
    if off > tol:
        raise ValueError(
            f"biquaternion is not the embedding of a real four-vector (off-slice {off:.3e})"
        )
    return FourVector(-b.c0.imag, b.c1.real, b.c2.real, b.c3.real)
