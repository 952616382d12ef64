"""Parameter models and admissibility predicates.

The learning functional is specified either through the raw coefficients
(alpha, beta, gamma1, gamma2, k, theta, xi) of the kinetic term or through
the aggregated tuple (theta, mu, nu, gamma, k) that actually enters the
equations of motion, with

    mu = alpha + gamma2**2,   nu = beta + gamma1**2,   gamma = gamma1 * gamma2.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DivisionByZeroError, InvalidThetaError


@dataclass(frozen=True)
class RawParameters:
    """Raw kinetic/regularization coefficients; xi = -1 selects mechanics mode."""

    alpha: float
    beta: float
    gamma1: float
    gamma2: float
    k: float
    theta: float
    xi: int = 1

    def __post_init__(self) -> None:
        if not self.theta > 0:
            raise InvalidThetaError(f"theta must be > 0, got {self.theta}")
        if self.xi not in (-1, 1):
            raise ValueError(f"xi must be -1 or +1, got {self.xi}")


@dataclass(frozen=True)
class CALParameters:
    """Aggregated coefficients of the fourth-order learning equation."""

    theta: float
    mu: float
    nu: float
    gamma: float
    k: float

    def __post_init__(self) -> None:
        if not self.theta > 0:
            raise InvalidThetaError(f"theta must be > 0, got {self.theta}")


def derive(raw: RawParameters) -> CALParameters:
    """Aggregate raw coefficients into the tuple driving the dynamics."""
    if not raw.theta > 0:
        raise InvalidThetaError(f"theta must be > 0, got {raw.theta}")
    return CALParameters(
        theta=raw.theta,
        mu=raw.alpha + raw.gamma2 ** 2,
        nu=raw.beta + raw.gamma1 ** 2,
        gamma=raw.gamma1 * raw.gamma2,
        k=raw.k,
    )


def coercivity_ok(p: CALParameters, raw: RawParameters) -> bool:
    """Conditions under which the action is bounded below and attains a minimum.

    Equivalent to alpha > 0, beta > 0, k > 0 when `p` was derived from `raw`.
    """
    return p.mu > raw.gamma2 ** 2 and p.nu > raw.gamma1 ** 2 and p.k > 0


def proposition_ok(theta: float, mu: float, nu: float,
                   gamma1: float, gamma2: float, k: float) -> bool:
    """Joint parameter conditions claimed to give a minimum plus stable,
    aperiodic free dynamics.

    Implemented with the inequality directions exactly as stated; note they
    run opposite to `coercivity_ok` on mu and nu, so the two predicates are
    mutually exclusive for gamma1, gamma2 != 0.  Whether these directions
    actually deliver stability/aperiodicity is checked empirically, not
    assumed (see the acceptance suite's survey report).
    """
    if not theta > 0:
        raise InvalidThetaError(f"theta must be > 0, got {theta}")
    if mu == 0:
        raise DivisionByZeroError("mu = 0: the k upper bound is undefined")
    sign_branch = (gamma1 < 0 and gamma2 < gamma1 / theta) or (
        gamma1 > 0 and gamma2 > gamma1 / theta
    )
    return (
        mu < gamma2 ** 2
        and nu < gamma1 ** 2
        and nu < theta * gamma1 * gamma2
        and 0 < k < (nu - theta * gamma1 * gamma2) ** 2 / (4 * mu)
        and sign_branch
    )


@dataclass(frozen=True)
class GradientFlowMode:
    """Marker for the reduced second-order equation theta^-1 q'' + q' = -k q - grad U.

    `variant` records how the reduction was obtained: "minimization"
    (mu = nu = 0, gamma = 1/theta**2) or "mechanics" (xi = -1, mu = gamma = 0,
    nu = 1/theta).  Both variants yield the same equation.
    """

    theta: float
    k: float
    variant: str = "minimization"

    @property
    def coefficients(self) -> tuple[float, float, float]:
        return (1.0 / self.theta, 1.0, self.k)


def gradient_flow_params(theta: float, k: float,
                         variant: str = "minimization") -> GradientFlowMode:
    if not theta > 0:
        raise InvalidThetaError(f"theta must be > 0, got {theta}")
    if variant not in ("minimization", "mechanics"):
        raise ValueError(f"unknown gradient-flow variant {variant!r}")
    return GradientFlowMode(theta=theta, k=k, variant=variant)


def sample_proposition_tuples(n: int, seed: int = 0) -> list[tuple[float, float, float, float, float, float]]:
    """Sample (theta, mu, nu, gamma1, gamma2, k) tuples satisfying `proposition_ok`.

    Test/survey helper only; the sampled region is not a certified description
    of the admissible set.  mu is kept strictly positive so that the k window
    (0, (nu - theta*gamma1*gamma2)^2 / (4 mu)) is nonempty.
    """
    rng = np.random.default_rng(seed)
    out: list[tuple[float, float, float, float, float, float]] = []
    while len(out) < n:
        theta = rng.uniform(0.2, 3.0)
        gamma1 = rng.uniform(0.2, 2.0) * rng.choice((-1.0, 1.0))
        margin = rng.uniform(0.05, 3.0)
        gamma2 = gamma1 / theta + math.copysign(margin, gamma1)
        nu_hi = min(gamma1 ** 2, theta * gamma1 * gamma2)
        nu = rng.uniform(-0.5, nu_hi * 0.98)
        mu = rng.uniform(0.02, 0.98) * gamma2 ** 2
        k_hi = (nu - theta * gamma1 * gamma2) ** 2 / (4 * mu)
        k = rng.uniform(0.02, 0.98) * k_hi
        if proposition_ok(theta, mu, nu, gamma1, gamma2, k):
            out.append((theta, mu, nu, gamma1, gamma2, k))
    return out
