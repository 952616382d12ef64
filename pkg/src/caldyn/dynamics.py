"""Causal integration of the learning dynamics and the variational oracle.

The fourth-order equation

    mu q'''' + 2 theta mu q''' + (theta^2 mu + theta gamma - nu) q''
             + (theta^2 gamma - theta nu) q' + k q + grad_q U(q, u) = 0

is integrated as a first-order system in (q, q', q'', q''') with classic
fixed-step RK4, so runs are exactly reproducible and the observed convergence
order is clean.  The module also provides:

* the reduced second-order gradient-flow equation and its explicit Euler form;
* the closed-form modal solution of the homogeneous equation (distinct roots);
* right-endpoint residuals of the natural boundary conditions;
* the action value by composite Simpson quadrature;
* a direct minimizer of the finite-difference action for quadratic potentials,
  used as an independent oracle for the differential route.

Exponential weights are always accumulated as exp(theta*(t - T)), which is
bounded by 1 on [0, T]; the unscaled action value is recovered by one final
multiplication with exp(theta*T).
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from .charpoly import cal_to_charpoly, roots as charpoly_roots
from .errors import (
    ConfluentRootsError,
    DegenerateMassError,
    NonFiniteError,
    SingularSystemError,
)
from .params import CALParameters, GradientFlowMode
from .potentials import InputSignal, Potential

TRAJECTORY_SCHEMA = "caldyn-trajectory-v1"


# ---------------------------------------------------------------------------
# State and trajectory containers


@dataclass(frozen=True)
class State:
    """Weights and their first three time derivatives at one instant."""

    t: float
    q: np.ndarray
    dq: np.ndarray
    d2q: np.ndarray
    d3q: np.ndarray

    def __post_init__(self) -> None:
        for name in ("q", "dq", "d2q", "d3q"):
            v = np.atleast_1d(np.asarray(getattr(self, name), dtype=float))
            object.__setattr__(self, name, v)
        n = self.q.shape[0]
        if any(getattr(self, name).shape != (n,) for name in ("dq", "d2q", "d3q")):
            raise ValueError("state blocks must share one dimension")
        if not all(np.all(np.isfinite(getattr(self, name)))
                   for name in ("q", "dq", "d2q", "d3q")):
            raise ValueError("state entries must be finite")

    @property
    def n(self) -> int:
        return self.q.shape[0]

    def max_abs(self) -> float:
        return float(max(np.max(np.abs(v)) for v in (self.q, self.dq, self.d2q, self.d3q)))

    def max_abs_derivative(self) -> float:
        """Max magnitude over the three derivative blocks (not q itself)."""
        return float(max(np.max(np.abs(v)) for v in (self.dq, self.d2q, self.d3q)))

    def packed(self) -> np.ndarray:
        return np.concatenate([self.q, self.dq, self.d2q, self.d3q])


def as_cauchy(values, n: int | None = None) -> tuple[np.ndarray, ...]:
    """Normalise Cauchy data to four equal-length vectors, padding with zeros."""
    vecs = [np.atleast_1d(np.asarray(v, dtype=float)) for v in values]
    if not 1 <= len(vecs) <= 4:
        raise ValueError("cauchy data must provide 1 to 4 blocks")
    dim = n if n is not None else vecs[0].shape[0]
    while len(vecs) < 4:
        vecs.append(np.zeros(dim))
    if any(v.shape != (dim,) for v in vecs):
        raise ValueError("cauchy blocks must share one dimension")
    return tuple(vecs)


@dataclass(frozen=True)
class Trajectory:
    """Uniformly sampled states on [t0, t0 + J h] plus run metadata."""

    t: np.ndarray
    q: np.ndarray
    dq: np.ndarray
    d2q: np.ndarray
    d3q: np.ndarray
    meta: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return self.q.shape[1]

    @property
    def h(self) -> float:
        return float(self.t[1] - self.t[0]) if len(self.t) > 1 else 0.0

    def __len__(self) -> int:
        return self.t.shape[0]

    def state(self, i: int) -> State:
        return State(t=float(self.t[i]), q=self.q[i], dq=self.dq[i],
                     d2q=self.d2q[i], d3q=self.d3q[i])

    def final_state(self) -> State:
        return self.state(len(self) - 1)


def sup_distance(a: Trajectory, b: Trajectory) -> float:
    """Sup-norm distance between the q components on a common grid."""
    if a.q.shape != b.q.shape:
        raise ValueError(f"trajectory shapes differ: {a.q.shape} vs {b.q.shape}")
    return float(np.max(np.abs(a.q - b.q)))


# ---------------------------------------------------------------------------
# Right-hand sides and the RK4 engine


def rhs(params: CALParameters, potential: Potential, u_t, state: State) -> np.ndarray:
    """The top derivative q'''' solved from the fourth-order equation."""
    if params.mu == 0:
        raise DegenerateMassError("mu = 0: fourth-order dynamics undefined")
    th, mu, nu, ga, k = params.theta, params.mu, params.nu, params.gamma, params.k
    grad = potential.grad(state.q, u_t)
    return -(
        2.0 * th * mu * state.d3q
        + (th * th * mu + th * ga - nu) * state.d2q
        + (th * th * ga - th * nu) * state.dq
        + k * state.q
        + grad
    ) / mu


def _cal_vector_field(params: CALParameters, potential: Potential, signal: InputSignal):
    if params.mu == 0:
        raise DegenerateMassError("mu = 0: fourth-order dynamics undefined")
    th, mu, nu, ga, k = params.theta, params.mu, params.nu, params.gamma, params.k
    c3 = 2.0 * th * mu
    c2 = th * th * mu + th * ga - nu
    c1 = th * th * ga - th * nu
    n = potential.n

    def f(t: float, y: np.ndarray) -> np.ndarray:
        q, dq, d2q, d3q = y[:n], y[n:2 * n], y[2 * n:3 * n], y[3 * n:]
        grad = potential.grad(q, signal(t))
        d4q = -(c3 * d3q + c2 * d2q + c1 * dq + k * q + grad) / mu
        return np.concatenate([dq, d2q, d3q, d4q])

    return f


def _rk4_step(f, t: float, y: np.ndarray, h: float) -> np.ndarray:
    k1 = f(t, y)
    k2 = f(t + 0.5 * h, y + 0.5 * h * k1)
    k3 = f(t + 0.5 * h, y + 0.5 * h * k2)
    k4 = f(t + h, y + h * k3)
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def _check_step_count(T: float, h: float) -> int:
    if not (T > 0 and 0 < h <= T):
        raise ValueError(f"need 0 < h <= T, got h={h}, T={T}")
    steps = int(round(T / h))
    if steps < 1 or abs(steps * h - T) > 1e-9 * max(1.0, abs(T)):
        raise ValueError(f"step h={h} must divide the horizon T={T}")
    return steps


def integrate(params: CALParameters, potential: Potential, signal: InputSignal,
              cauchy, T: float, h: float, *, t0: float = 0.0) -> Trajectory:
    """Fixed-step RK4 on the 4n-dimensional first-order system.

    `cauchy` is (q0, q1, q2_0, q3_0); the unspecified higher Cauchy data of a
    causal run should be passed as zeros.  Raises NonFiniteError with the
    blow-up time when the state leaves the finite range (expected for
    parameterizations with characteristic roots in the right half-plane).
    """
    q0, q1, q2, q3 = as_cauchy(cauchy, n=potential.n)
    steps = _check_step_count(T, h)
    f = _cal_vector_field(params, potential, signal)
    y = np.concatenate([q0, q1, q2, q3])
    out = np.empty((steps + 1, y.shape[0]))
    out[0] = y
    ts = t0 + np.arange(steps + 1) * h
    for j in range(steps):
        y = _rk4_step(f, float(ts[j]), y, h)
        if not np.all(np.isfinite(y)):
            raise NonFiniteError(
                f"state non-finite at t={ts[j + 1]:.6g}", time=float(ts[j + 1]))
        out[j + 1] = y
    n = potential.n
    meta = {
        "kind": "rk4",
        "h": h,
        "parameters": _params_dict(params),
        "potential": potential.describe(),
        "input": signal.describe(),
    }
    return Trajectory(t=ts, q=out[:, :n], dq=out[:, n:2 * n],
                      d2q=out[:, 2 * n:3 * n], d3q=out[:, 3 * n:], meta=meta)


def integrate_gradient_flow(mode: GradientFlowMode, potential: Potential,
                            signal: InputSignal, cauchy, T: float, h: float,
                            *, t0: float = 0.0) -> Trajectory:
    """RK4 on the reduced equation theta^-1 q'' + q' = -k q - grad U.

    The stored second derivative is recomputed from the equation itself; the
    third derivative is not defined by this reduced model and is stored as
    zero (meta["order"] = 2).
    """
    q0, q1 = (np.atleast_1d(np.asarray(v, dtype=float)) for v in cauchy)
    steps = _check_step_count(T, h)
    th, k = mode.theta, mode.k
    n = potential.n

    def f(t: float, y: np.ndarray) -> np.ndarray:
        q, dq = y[:n], y[n:]
        ddq = th * (-dq - k * q - potential.grad(q, signal(t)))
        return np.concatenate([dq, ddq])

    y = np.concatenate([q0, q1])
    out = np.empty((steps + 1, 2 * n))
    out[0] = y
    ts = t0 + np.arange(steps + 1) * h
    for j in range(steps):
        y = _rk4_step(f, float(ts[j]), y, h)
        if not np.all(np.isfinite(y)):
            raise NonFiniteError(
                f"state non-finite at t={ts[j + 1]:.6g}", time=float(ts[j + 1]))
        out[j + 1] = y
    q, dq = out[:, :n], out[:, n:]
    d2q = np.empty_like(q)
    for j in range(steps + 1):
        d2q[j] = th * (-dq[j] - k * q[j] - potential.grad(q[j], signal(float(ts[j]))))
    meta = {
        "kind": "gradient_flow_rk4",
        "order": 2,
        "h": h,
        "mode": {"theta": th, "k": k, "variant": mode.variant},
        "potential": potential.describe(),
        "input": signal.describe(),
    }
    return Trajectory(t=ts, q=q, dq=dq, d2q=d2q, d3q=np.zeros_like(q), meta=meta)


def euler_descent(k: float, potential: Potential, signal: InputSignal,
                  q0, n_steps: int, eta: float = 1.0) -> np.ndarray:
    """Explicit Euler / gradient-descent updates q <- q - eta (k q + grad U).

    eta = 1 reproduces the bare printed update; smaller eta is needed for
    stability when k or the loss curvature is large.  The input is sampled at
    t = step * eta.  Returns the (n_steps + 1, n) iterate history.
    """
    q = np.atleast_1d(np.asarray(q0, dtype=float)).copy()
    hist = np.empty((n_steps + 1, q.shape[0]))
    hist[0] = q
    for j in range(n_steps):
        u = signal(j * eta)
        q = q - eta * (k * q + potential.grad(q, u))
        hist[j + 1] = q
    return hist


# ---------------------------------------------------------------------------
# Closed-form free dynamics (distinct characteristic roots)


class ModalSolution:
    """q(t0 + tau) = sum_i C_i exp(lambda_i tau) fitted to a full state at t0."""

    def __init__(self, lam: np.ndarray, coeffs: np.ndarray, t0: float):
        self.lam = lam          # (4,) complex
        self.coeffs = coeffs    # (4, n) complex
        self.t0 = t0

    def derivatives(self, tau) -> tuple[np.ndarray, ...]:
        """(q, dq, d2q, d3q) arrays of shape (len(tau), n) at offsets tau."""
        tau = np.atleast_1d(np.asarray(tau, dtype=float))
        e = np.exp(np.outer(tau, self.lam))           # (nt, 4)
        blocks = []
        for order in range(4):
            w = e * self.lam ** order
            blocks.append(np.real(w @ self.coeffs))
        return tuple(blocks)

    def state_at(self, tau: float) -> State:
        q, dq, d2q, d3q = (b[0] for b in self.derivatives([tau]))
        return State(t=self.t0 + tau, q=q, dq=dq, d2q=d2q, d3q=d3q)


def modal_solution(params: CALParameters, state0: State) -> ModalSolution:
    """Fit the four-mode solution of the homogeneous equation to `state0`.

    Requires pairwise distinct characteristic roots (relative gap above
    1e-6 * max |root|); otherwise the Vandermonde fit is ill-posed and
    ConfluentRootsError is raised.
    """
    lam = charpoly_roots(cal_to_charpoly(params)).as_array()
    scale = float(np.max(np.abs(lam)))
    gap = min(abs(lam[i] - lam[j]) for i in range(4) for j in range(i + 1, 4))
    if not gap > 1e-6 * scale:
        raise ConfluentRootsError(
            f"characteristic roots too close for the modal solution "
            f"(gap {gap:.3e}, scale {scale:.3e})")
    vander = np.vander(lam, 4, increasing=True).T      # rows: powers 0..3
    rhs_mat = np.stack([state0.q, state0.dq, state0.d2q, state0.d3q]).astype(complex)
    coeffs = np.linalg.solve(vander, rhs_mat)
    return ModalSolution(lam=lam, coeffs=coeffs, t0=state0.t)


def closed_form_free(params: CALParameters, cauchy, t: float) -> State:
    """Exact free-dynamics state at time t for the given Cauchy data."""
    q0, q1, q2, q3 = as_cauchy(cauchy)
    state0 = State(t=0.0, q=q0, dq=q1, d2q=q2, d3q=q3)
    return modal_solution(params, state0).state_at(t)


def free_trajectory(params: CALParameters, cauchy, T: float, h: float) -> Trajectory:
    """Closed-form free dynamics sampled on the uniform grid (oracle use)."""
    q0, q1, q2, q3 = as_cauchy(cauchy)
    steps = _check_step_count(T, h)
    sol = modal_solution(params, State(t=0.0, q=q0, dq=q1, d2q=q2, d3q=q3))
    ts = np.arange(steps + 1) * h
    q, dq, d2q, d3q = sol.derivatives(ts)
    meta = {"kind": "closed_form_free", "h": h, "parameters": _params_dict(params)}
    return Trajectory(t=ts, q=q, dq=dq, d2q=d2q, d3q=d3q, meta=meta)


# ---------------------------------------------------------------------------
# Boundary residuals and the action value


@dataclass(frozen=True)
class BoundaryResidual:
    """Right-endpoint residuals of the natural (Neumann-like) conditions.

    After dividing out the exponential weight:
        r1 = mu q''(T) + gamma q'(T)
        r2 = mu q'''(T) + theta mu q''(T) + (theta gamma - nu) q'(T)
    `normalized` quantities divide by 1 + max |state entry at T|.
    """

    r1: np.ndarray
    r2: np.ndarray
    r1_norm: float
    r2_norm: float
    r1_normalized: float
    r2_normalized: float


def boundary_residual(traj: Trajectory, params: CALParameters) -> BoundaryResidual:
    if len(traj) == 0:
        raise ValueError("trajectory is empty")
    final = traj.final_state()
    th, mu, nu, ga = params.theta, params.mu, params.nu, params.gamma
    r1 = mu * final.d2q + ga * final.dq
    r2 = mu * final.d3q + th * mu * final.d2q + (th * ga - nu) * final.dq
    scale = 1.0 + final.max_abs()
    n1, n2 = float(np.linalg.norm(r1)), float(np.linalg.norm(r2))
    return BoundaryResidual(r1=r1, r2=r2, r1_norm=n1, r2_norm=n2,
                            r1_normalized=n1 / scale, r2_normalized=n2 / scale)


def quadrature_weights(n_samples: int, h: float) -> np.ndarray:
    """Composite Simpson weights; an odd interval count gets one trapezoid panel
    at the end."""
    if n_samples < 1:
        raise ValueError("need at least one sample")
    w = np.zeros(n_samples)
    n = n_samples - 1
    if n == 0:
        return w
    if n == 1:
        w[:] = h / 2.0
        return w
    m = n if n % 2 == 0 else n - 1
    w[0] += h / 3.0
    w[m] += h / 3.0
    w[1:m:2] += 4.0 * h / 3.0
    w[2:m:2] += 2.0 * h / 3.0
    if n % 2 == 1:
        w[n - 1] += h / 2.0
        w[n] += h / 2.0
    return w


def action_value(traj: Trajectory, params: CALParameters, potential: Potential,
                 signal: InputSignal) -> float:
    """Action of a sampled trajectory by composite Simpson quadrature.

    The integrand is accumulated with the bounded weight exp(theta*(t - T));
    the conventional exp(theta*t)-weighted value is restored by the final
    factor exp(theta*T), which overflows for theta*T beyond ~700.
    """
    t = traj.t
    T = float(t[-1])
    h = traj.h
    th, mu, nu, ga, k = params.theta, params.mu, params.nu, params.gamma, params.k
    w = quadrature_weights(len(traj), h)
    kinetic = (
        0.5 * mu * np.sum(traj.d2q ** 2, axis=1)
        + 0.5 * nu * np.sum(traj.dq ** 2, axis=1)
        + ga * np.sum(traj.dq * traj.d2q, axis=1)
        + 0.5 * k * np.sum(traj.q ** 2, axis=1)
    )
    u_vals = np.array([potential.value(traj.q[j], signal(float(t[j])))
                       for j in range(len(traj))])
    weight = np.exp(th * (t - T))
    return float(np.exp(th * T) * np.sum(w * weight * (kinetic + u_vals)))


# ---------------------------------------------------------------------------
# Discrete direct minimization of the action (quadratic potentials)


def _derivative_operators(n_nodes: int, h: float):
    """Sparse first/second/third derivative matrices on a uniform grid.

    Central differences inside, second-order one-sided stencils at the ends;
    all stencils are second-order accurate so grid reconstructions converge
    at O(h^2).
    """
    if n_nodes < 7:
        raise ValueError("need at least 7 grid nodes for the derivative stencils")
    d1 = sp.lil_matrix((n_nodes, n_nodes))
    d2 = sp.lil_matrix((n_nodes, n_nodes))
    d3 = sp.lil_matrix((n_nodes, n_nodes))
    for j in range(1, n_nodes - 1):
        d1[j, j - 1], d1[j, j + 1] = -0.5, 0.5
        d2[j, j - 1], d2[j, j], d2[j, j + 1] = 1.0, -2.0, 1.0
    d1[0, 0:3] = [-1.5, 2.0, -0.5]
    d1[-1, -3:] = [0.5, -2.0, 1.5]
    d2[0, 0:4] = [2.0, -5.0, 4.0, -1.0]
    d2[-1, -4:] = [-1.0, 4.0, -5.0, 2.0]
    for j in range(2, n_nodes - 2):
        d3[j, j - 2:j + 3] = [-0.5, 1.0, 0.0, -1.0, 0.5]
    d3[0, 0:5] = [-2.5, 9.0, -12.0, 7.0, -1.5]
    d3[1, 0:5] = [-1.5, 5.0, -6.0, 3.0, -0.5]
    d3[-2, -5:] = [0.5, -3.0, 6.0, -5.0, 1.5]
    d3[-1, -5:] = [1.5, -7.0, 12.0, -9.0, 2.5]
    return (d1.tocsr() / h, d2.tocsr() / h ** 2, d3.tocsr() / h ** 3)


def trajectory_from_grid(q_grid: np.ndarray, h: float, *, t0: float = 0.0,
                         meta: dict | None = None) -> Trajectory:
    """Trajectory whose derivative samples are finite differences of `q_grid`.

    This is the reconstruction used by `minimize_discrete_action`; applying it
    to a perturbed grid therefore evaluates the same discrete functional.
    """
    q = np.asarray(q_grid, dtype=float)
    if q.ndim == 1:
        q = q[:, None]
    d1, d2, d3 = _derivative_operators(q.shape[0], h)
    ts = t0 + np.arange(q.shape[0]) * h
    return Trajectory(t=ts, q=q, dq=d1 @ q, d2q=d2 @ q, d3q=d3 @ q,
                      meta=dict(meta or {"kind": "grid"}))


def minimize_discrete_action(params: CALParameters, potential: Potential,
                             signal: InputSignal, q0, q1,
                             T: float, h: float) -> Trajectory:
    """Directly minimize the finite-difference action for a quadratic potential.

    The discrete functional is exactly `action_value` composed with the
    finite-difference reconstruction of `trajectory_from_grid`: Simpson
    weights, exponential factors exp(theta*(t - T)), central second/first
    differences.  The left constraints q(0) = q0 and (q(h) - q(0))/h = q1 are
    imposed by elimination; the right end is free, so the discrete minimizer
    satisfies the natural boundary conditions up to discretization error.
    For quadratic U the problem is a sparse banded linear system.
    """
    if not potential.is_quadratic:
        raise ValueError("direct minimization requires a potential quadratic in q")
    steps = _check_step_count(T, h)
    n_nodes = steps + 1
    n = potential.n
    q0 = np.atleast_1d(np.asarray(q0, dtype=float))
    q1 = np.atleast_1d(np.asarray(q1, dtype=float))
    d1, d2, _ = _derivative_operators(n_nodes, h)
    ts = np.arange(n_nodes) * h
    th, mu, nu, ga, k = params.theta, params.mu, params.nu, params.gamma, params.k
    m_diag = quadrature_weights(n_nodes, h) * np.exp(th * (ts - T))
    m_mat = sp.diags(m_diag)

    a_time = (mu * d2.T @ m_mat @ d2
              + nu * d1.T @ m_mat @ d1
              + ga * (d1.T @ m_mat @ d2 + d2.T @ m_mat @ d1)
              + k * m_mat)
    if n == 1:
        a_full = a_time.tolil()
    else:
        a_full = sp.kron(a_time, sp.eye(n)).tolil()
    b = np.zeros(n_nodes * n)
    for j in range(n_nodes):
        hess, lin, _ = potential.quadratic_form(signal(float(ts[j])))
        if np.any(hess) or np.any(lin):
            sl = slice(j * n, (j + 1) * n)
            a_full[sl, sl] = a_full[sl, sl] + m_diag[j] * hess
            b[sl] = m_diag[j] * lin
    a_full = a_full.tocsr()

    fixed = np.concatenate([q0, q0 + h * q1])
    con = np.arange(2 * n)
    free = np.arange(2 * n, n_nodes * n)
    a_ff = a_full[free][:, free].tocsc()
    a_fc = a_full[free][:, con]
    rhs_vec = -(b[free] + a_fc @ fixed)
    try:
        x_free = spla.spsolve(a_ff, rhs_vec)
    except RuntimeError as exc:
        raise SingularSystemError(f"discrete normal equations singular: {exc}") from exc
    if not np.all(np.isfinite(x_free)):
        raise SingularSystemError("discrete normal equations singular (non-finite solve)")

    grid = np.empty(n_nodes * n)
    grid[con] = fixed
    grid[free] = x_free
    meta = {
        "kind": "discrete_action_minimizer",
        "h": h,
        "parameters": _params_dict(params),
        "potential": potential.describe(),
        "input": signal.describe(),
    }
    return trajectory_from_grid(grid.reshape(n_nodes, n), h, meta=meta)


# ---------------------------------------------------------------------------
# Export


def _params_dict(params: CALParameters) -> dict:
    return {"theta": params.theta, "mu": params.mu, "nu": params.nu,
            "gamma": params.gamma, "k": params.k}


def trajectory_to_csv(traj: Trajectory, path) -> None:
    """Columns t, q_1..q_n, dq_1..dq_n, d2q_1..d2q_n, d3q_1..d3q_n."""
    n = traj.n
    header = ",".join(
        ["t"]
        + [f"q_{i + 1}" for i in range(n)]
        + [f"dq_{i + 1}" for i in range(n)]
        + [f"d2q_{i + 1}" for i in range(n)]
        + [f"d3q_{i + 1}" for i in range(n)]
    )
    data = np.column_stack([traj.t, traj.q, traj.dq, traj.d2q, traj.d3q])
    np.savetxt(path, data, fmt="%.17g", delimiter=",", header=header, comments="")


def write_trajectory(traj: Trajectory, csv_path, sidecar_path=None) -> str:
    """Write the CSV plus a JSON sidecar with metadata and a content checksum."""
    csv_path = str(csv_path)
    trajectory_to_csv(traj, csv_path)
    with open(csv_path, "rb") as fh:
        digest = hashlib.sha256(fh.read()).hexdigest()
    sidecar = {
        "schema": TRAJECTORY_SCHEMA,
        "n": traj.n,
        "samples": len(traj),
        "h": traj.h,
        "metadata": traj.meta,
        "sha256": digest,
    }
    sidecar_path = str(sidecar_path) if sidecar_path else csv_path + ".meta.json"
    with open(sidecar_path, "w", encoding="utf-8") as fh:
        json.dump(sidecar, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return sidecar_path
