"""Loss potentials U(q, u) and time-dependent input signals u(t).

Every built-in potential satisfies U >= 0 and U(q, 0) = 0.  The second
property is required by the free-dynamics analysis and is enforced through an
input-activity gate that is zero exactly on the zero input vector: the
scheduling layer produces exact zeros outside the active intervals, so the
gate never has to fire on "almost zero" inputs.
"""
from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ConfigError, DimensionMismatchError


def input_gate(u: np.ndarray) -> float:
    """1 unless the input is the exact zero vector."""
    return 0.0 if not np.any(u) else 1.0


def _vec(x, dim: int, what: str) -> np.ndarray:
    v = np.atleast_1d(np.asarray(x, dtype=float))
    if v.ndim != 1 or v.shape[0] != dim:
        raise DimensionMismatchError(f"{what} must have length {dim}, got shape {v.shape}")
    return v


class Potential:
    """Differentiable potential with weight dimension n and input dimension m."""

    n: int
    m: int
    is_quadratic: bool = False

    def value(self, q, u) -> float:
        raise NotImplementedError

    def grad(self, q, u) -> np.ndarray:
        raise NotImplementedError

    def quadratic_form(self, u) -> tuple[np.ndarray, np.ndarray, float]:
        """(H, g, c) with U(q, u) = 1/2 q.H.q + g.q + c; quadratic potentials only."""
        raise TypeError(f"{type(self).__name__} is not quadratic in q")

    def describe(self) -> dict:
        return {"kind": type(self).__name__, "n": self.n, "m": self.m}

    def _check(self, q, u) -> tuple[np.ndarray, np.ndarray]:
        return _vec(q, self.n, "q"), _vec(u, self.m, "u")


class ZeroPotential(Potential):
    """U = 0: pure free dynamics."""

    is_quadratic = True

    def __init__(self, n: int, m: int = 1):
        self.n, self.m = n, m

    def value(self, q, u) -> float:
        self._check(q, u)
        return 0.0

    def grad(self, q, u) -> np.ndarray:
        q, _ = self._check(q, u)
        return np.zeros_like(q)

    def quadratic_form(self, u):
        return np.zeros((self.n, self.n)), np.zeros(self.n), 0.0


class QuadraticTracking(Potential):
    """U = gate(u) * w/2 * |q - u|^2: track the input vector (m = n)."""

    is_quadratic = True

    def __init__(self, n: int, weight: float = 1.0):
        if weight < 0:
            raise ValueError(f"weight must be >= 0, got {weight}")
        self.n = self.m = n
        self.weight = weight

    def value(self, q, u) -> float:
        q, u = self._check(q, u)
        r = q - u
        return input_gate(u) * 0.5 * self.weight * float(r @ r)

    def grad(self, q, u) -> np.ndarray:
        q, u = self._check(q, u)
        return input_gate(u) * self.weight * (q - u)

    def quadratic_form(self, u):
        u = _vec(u, self.m, "u")
        g = input_gate(u)
        H = g * self.weight * np.eye(self.n)
        lin = -g * self.weight * u
        const = g * 0.5 * self.weight * float(u @ u)
        return H, lin, const

    def describe(self) -> dict:
        return {"kind": "quadratic_tracking", "n": self.n, "weight": self.weight}


class LinearRegressionLoss(Potential):
    """U = gate(u) * 1/2 (q.x - y)^2 with the input packed as u = (x, y)."""

    is_quadratic = True

    def __init__(self, n: int):
        self.n = n
        self.m = n + 1

    def _split(self, u: np.ndarray) -> tuple[np.ndarray, float]:
        return u[: self.n], float(u[self.n])

    def value(self, q, u) -> float:
        q, u = self._check(q, u)
        x, y = self._split(u)
        return input_gate(u) * 0.5 * (float(q @ x) - y) ** 2

    def grad(self, q, u) -> np.ndarray:
        q, u = self._check(q, u)
        x, y = self._split(u)
        return input_gate(u) * (float(q @ x) - y) * x

    def quadratic_form(self, u):
        u = _vec(u, self.m, "u")
        g = input_gate(u)
        x, y = self._split(u)
        H = g * np.outer(x, x)
        lin = -g * y * x
        const = g * 0.5 * y * y
        return H, lin, const

    def describe(self) -> dict:
        return {"kind": "linear_regression", "n": self.n}


class FeatureDemo(Potential):
    """One-hidden-layer tanh autoencoder, U = gate(u)/2 * |u - decode(encode(u))|^2.

    q packs (W1 [hidden x m], b1 [hidden], W2 [m x hidden], b2 [m]) row-major.
    A nonconvex stand-in loss for feature-extraction experiments.
    """

    def __init__(self, m: int, hidden: int):
        self.m = m
        self.hidden = hidden
        self.n = hidden * m + hidden + m * hidden + m

    def _unpack(self, q: np.ndarray):
        h, m = self.hidden, self.m
        i = 0
        w1 = q[i:i + h * m].reshape(h, m); i += h * m
        b1 = q[i:i + h]; i += h
        w2 = q[i:i + m * h].reshape(m, h); i += m * h
        b2 = q[i:i + m]
        return w1, b1, w2, b2

    def value(self, q, u) -> float:
        q, u = self._check(q, u)
        w1, b1, w2, b2 = self._unpack(q)
        a = np.tanh(w1 @ u + b1)
        r = w2 @ a + b2 - u
        return input_gate(u) * 0.5 * float(r @ r)

    def grad(self, q, u) -> np.ndarray:
        q, u = self._check(q, u)
        w1, b1, w2, b2 = self._unpack(q)
        z = w1 @ u + b1
        a = np.tanh(z)
        r = w2 @ a + b2 - u
        gb2 = r
        gw2 = np.outer(r, a)
        da = w2.T @ r
        dz = da * (1.0 - a * a)
        gb1 = dz
        gw1 = np.outer(dz, u)
        g = np.concatenate([gw1.ravel(), gb1, gw2.ravel(), gb2])
        return input_gate(u) * g

    def describe(self) -> dict:
        return {"kind": "feature_demo", "m": self.m, "hidden": self.hidden}


def fd_check(p: Potential, q, u, step: float) -> float:
    """Max relative disagreement between analytic and central-difference gradients.

    Per-coordinate step is step * (1 + |q_i|); the error is normalised by
    1 + |analytic gradient entry|.
    """
    if not step > 0:
        raise ValueError(f"step must be > 0, got {step}")
    q = _vec(q, p.n, "q")
    u = _vec(u, p.m, "u")
    g = p.grad(q, u)
    worst = 0.0
    for i in range(p.n):
        h = step * (1.0 + abs(q[i]))
        qp = q.copy(); qp[i] += h
        qm = q.copy(); qm[i] -= h
        fd = (p.value(qp, u) - p.value(qm, u)) / (2.0 * h)
        worst = max(worst, abs(g[i] - fd) / (1.0 + abs(g[i])))
    return worst


# ---------------------------------------------------------------------------
# Input signals


class InputSignal:
    """Time-dependent input u(t) with fixed dimension m, evaluable on [0, T]."""

    m: int

    def __call__(self, t: float) -> np.ndarray:
        raise NotImplementedError

    def describe(self) -> dict:
        return {"kind": type(self).__name__, "m": self.m}


class ZeroInput(InputSignal):
    def __init__(self, m: int = 1):
        self.m = m

    def __call__(self, t: float) -> np.ndarray:
        return np.zeros(self.m)


class Sinusoid(InputSignal):
    """u_i(t) = amplitude_i * sin(2 pi frequency_i t)."""

    def __init__(self, amplitudes, frequencies):
        self.amplitudes = np.atleast_1d(np.asarray(amplitudes, dtype=float))
        self.frequencies = np.atleast_1d(np.asarray(frequencies, dtype=float))
        if self.amplitudes.shape != self.frequencies.shape:
            raise DimensionMismatchError("amplitudes and frequencies must have equal length")
        self.m = self.amplitudes.shape[0]

    def __call__(self, t: float) -> np.ndarray:
        return self.amplitudes * np.sin(2.0 * math.pi * self.frequencies * t)

    def describe(self) -> dict:
        return {"kind": "sinusoid", "m": self.m,
                "amplitudes": self.amplitudes.tolist(),
                "frequencies": self.frequencies.tolist()}


class PiecewiseConstant(InputSignal):
    """Right-continuous steps: value index = number of breakpoints <= t."""

    def __init__(self, breakpoints, values):
        self.breakpoints = [float(b) for b in breakpoints]
        if sorted(self.breakpoints) != self.breakpoints:
            raise ValueError("breakpoints must be ascending")
        vals = np.asarray(values, dtype=float)
        if vals.ndim == 1:
            vals = vals[:, None]
        if vals.shape[0] != len(self.breakpoints) + 1:
            raise DimensionMismatchError(
                f"need {len(self.breakpoints) + 1} values, got {vals.shape[0]}")
        self.values = vals
        self.m = vals.shape[1]

    def __call__(self, t: float) -> np.ndarray:
        return self.values[bisect.bisect_right(self.breakpoints, t)].copy()

    def describe(self) -> dict:
        return {"kind": "piecewise_constant", "m": self.m,
                "breakpoints": self.breakpoints}


class SmoothNoise(InputSignal):
    """Band-limited noise from seeded random Fourier coefficients.

    Each channel is sum_j a_j cos(2 pi f_j t) + b_j sin(2 pi f_j t) with
    frequencies drawn uniformly below `bandwidth`; reproducible by seed.
    """

    def __init__(self, m: int = 1, seed: int = 0, bandwidth: float = 1.0, terms: int = 16):
        if not bandwidth > 0:
            raise ValueError(f"bandwidth must be > 0, got {bandwidth}")
        self.m, self.seed, self.bandwidth, self.terms = m, seed, bandwidth, terms
        rng = np.random.default_rng(seed)
        scale = 1.0 / math.sqrt(terms)
        self._freq = rng.uniform(0.0, bandwidth, size=(m, terms))
        self._cos = rng.normal(0.0, scale, size=(m, terms))
        self._sin = rng.normal(0.0, scale, size=(m, terms))

    def __call__(self, t: float) -> np.ndarray:
        w = 2.0 * math.pi * self._freq * t
        return np.sum(self._cos * np.cos(w) + self._sin * np.sin(w), axis=1)

    def describe(self) -> dict:
        return {"kind": "smooth_noise", "m": self.m, "seed": self.seed,
                "bandwidth": self.bandwidth, "terms": self.terms}


class TabulatedInput(InputSignal):
    """Signal read from a delimited text table: column 0 is time (strictly
    increasing), the remaining columns are channels.  Linear interpolation
    between samples, constant beyond the first/last sample.  Lines starting
    with '#' are comments.
    """

    def __init__(self, path: str):
        self.path = str(path)
        try:
            data = np.loadtxt(self.path, comments="#")
        except ValueError:
            data = np.loadtxt(self.path, comments="#", delimiter=",")
        data = np.atleast_2d(data)
        if data.shape[1] < 2:
            raise ConfigError(f"{self.path}: need a time column plus at least one channel")
        t = data[:, 0]
        if np.any(np.diff(t) <= 0):
            raise ConfigError(f"{self.path}: time column must be strictly increasing")
        self._t = t
        self._y = data[:, 1:]
        self.m = self._y.shape[1]

    def __call__(self, t: float) -> np.ndarray:
        return np.array([np.interp(t, self._t, self._y[:, j]) for j in range(self.m)])

    def describe(self) -> dict:
        return {"kind": "from_file", "m": self.m, "path": self.path}
