"""Quartic characteristic polynomial of the free (null-input) dynamics.

With u = 0 and U(q, 0) = 0 the learning equation reduces to

    q'''' + b q''' + c q'' + d q' + e q = 0

with b = 2*theta, c = (theta^2*mu + theta*gamma - nu)/mu,
d = (theta^2*gamma - theta*nu)/mu, e = k/mu.  This module analyses the monic
quartic chi(x) = x^4 + b x^3 + c x^2 + d x + e: Routh-Hurwitz stability, the
depressed form zeta(z) = chi(z - b/4), root-reality classification, and root
extraction.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .errors import DegenerateMassError

if TYPE_CHECKING:  # pragma: no cover
    from .params import CALParameters


def _require_finite(name: str, *values: float) -> None:
    for v in values:
        if not np.isfinite(v):
            raise ValueError(f"{name} coefficients must be finite, got {values}")


@dataclass(frozen=True)
class QuarticCoefficients:
    """Monic quartic x^4 + b x^3 + c x^2 + d x + e."""

    b: float
    c: float
    d: float
    e: float

    def __post_init__(self) -> None:
        _require_finite("quartic", self.b, self.c, self.d, self.e)

    def value(self, x: complex) -> complex:
        return (((x + self.b) * x + self.c) * x + self.d) * x + self.e

    def max_abs_coeff(self) -> float:
        return max(abs(self.b), abs(self.c), abs(self.d), abs(self.e))


@dataclass(frozen=True)
class DepressedQuartic:
    """Monic depressed quartic z^4 + q z^2 + r z + s and its discriminant."""

    q: float
    r: float
    s: float
    delta: float

    def __post_init__(self) -> None:
        _require_finite("depressed quartic", self.q, self.r, self.s, self.delta)

    def value(self, z: complex) -> complex:
        return ((z * z + self.q) * z + self.r) * z + self.s


class RealityClass(enum.Enum):
    """Root-reality classes of the depressed quartic (all-real cases 1-5, else complex)."""

    FOUR_DISTINCT_REAL = "FourDistinctReal"
    REAL_TWO_EQUAL = "RealTwoEqual"
    TWO_PAIRS_EQUAL_REAL = "TwoPairsEqualReal"
    REAL_THREE_EQUAL = "RealThreeEqual"
    ALL_ZERO_LIKE = "AllZeroLike"
    HAS_COMPLEX = "HasComplex"


@dataclass(frozen=True)
class RootSet:
    """The four complex roots, sorted by (real part, imaginary part)."""

    roots: tuple[complex, complex, complex, complex]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.roots, dtype=complex)

    def max_real_part(self) -> float:
        return max(z.real for z in self.roots)


def cal_to_charpoly(params: "CALParameters") -> QuarticCoefficients:
    """Characteristic polynomial of the homogeneous fourth-order equation."""
    if params.mu == 0:
        raise DegenerateMassError(
            "mu = 0: no fourth-order characteristic polynomial; "
            "use the gradient-flow mode instead"
        )
    th, mu, nu, ga, k = params.theta, params.mu, params.nu, params.gamma, params.k
    return QuarticCoefficients(
        b=2.0 * th,
        c=(th * th * mu + th * ga - nu) / mu,
        d=(th * th * ga - th * nu) / mu,
        e=k / mu,
    )


def routh_hurwitz_stable(p: QuarticCoefficients) -> bool:
    """All roots in the open left half-plane, by coefficient inequalities only."""
    b, c, d, e = p.b, p.c, p.d, p.e
    return (
        b > 0
        and c > 0
        and 0 < d < b * c
        and 0 < e < (b * c * d - d * d) / (b * b)
    )


def quartic_discriminant(q: float, r: float, s: float) -> float:
    """Discriminant of z^4 + q z^2 + r z + s (vanishes iff a repeated root exists)."""
    return (
        256.0 * s ** 3
        - 128.0 * q ** 2 * s ** 2
        + 144.0 * q * r ** 2 * s
        - 27.0 * r ** 4
        + 16.0 * q ** 4 * s
        - 4.0 * q ** 3 * r ** 2
    )


def depress(p: QuarticCoefficients) -> DepressedQuartic:
    """Shift x = z - b/4 to remove the cubic term."""
    b, c, d, e = p.b, p.c, p.d, p.e
    q = c - 3.0 * b * b / 8.0
    r = b ** 3 / 8.0 - b * c / 2.0 + d
    s = b * b * c / 16.0 - 3.0 * b ** 4 / 256.0 - b * d / 4.0 + e
    return DepressedQuartic(q=q, r=r, s=s, delta=quartic_discriminant(q, r, s))


def equality_tolerance(d: DepressedQuartic) -> float:
    """Absolute tolerance for the measure-zero equalities in the reality test."""
    return 1e-9 * (1.0 + max(abs(d.q), abs(d.r), abs(d.s)))


def classify_reality(d: DepressedQuartic) -> RealityClass:
    """Classify the roots of the depressed quartic.

    The five all-real cases are checked in order, first match wins; the cases
    are not mutually exclusive once the equalities are evaluated with a
    floating-point tolerance.  Strict inequalities are evaluated exactly.
    """
    q, s, delta = d.q, d.s, d.delta
    tol = equality_tolerance(d)

    def eq(x: float, y: float) -> bool:
        return abs(x - y) <= tol

    if q < 0 and 4.0 * s - q * q < 0 and delta > 0:
        return RealityClass.FOUR_DISTINCT_REAL
    if -q * q / 12.0 < s < q * q / 4.0 and eq(delta, 0.0):
        return RealityClass.REAL_TWO_EQUAL
    if q < 0 and eq(s, q * q / 4.0) and eq(delta, 0.0):
        return RealityClass.TWO_PAIRS_EQUAL_REAL
    if q < 0 and eq(s, -q * q / 12.0) and eq(delta, 0.0):
        return RealityClass.REAL_THREE_EQUAL
    if eq(q, 0.0) and eq(s, 0.0) and eq(delta, 0.0):
        return RealityClass.ALL_ZERO_LIKE
    return RealityClass.HAS_COMPLEX


def roots(p: QuarticCoefficients) -> RootSet:
    """All four roots via companion-matrix eigenvalues, sorted by (Re, Im)."""
    rts = np.roots([1.0, p.b, p.c, p.d, p.e])
    ordered = sorted((complex(z) for z in rts), key=lambda z: (z.real, z.imag))
    return RootSet(roots=tuple(ordered))
