"""Numeric geodesic integration in coordinates.

A chart supplies the metric matrix and its analytic first partials;
Christoffel symbols come from the standard formula and trajectories from
classical fixed-step RK4 on the first-order system (position, velocity).
The four built-in charts (g0, g1, h1, h2) have polynomial coefficients, so
the partials are written out by hand; finite differences appear only in
tests that cross-validate them.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .base import InputError, NumericalError
from .groups import (GeodesicSpec, GroupElement, coordinate_metric, frame,
                     geodesic_closed_form, group_identity)

CSV_HEADER = "s,t,x,y,z,vt,vx,vy,vz"


@dataclass
class MetricChart:
    """Coordinate metric with analytic partial derivatives.

    ``partials_at(p)[k]`` is the matrix of d g_ij / d x_k at p.
    """

    name: str
    dim: int
    metric_at: Callable[[np.ndarray], np.ndarray]
    partials_at: Callable[[np.ndarray], np.ndarray]


def _g0g1_partials(name):
    def partials(p):
        out = np.zeros((4, 4, 4))
        # only g_tx = y/2 and g_ty = -x/2 depend on the point
        out[2, 0, 1] = out[2, 1, 0] = 0.5
        out[1, 0, 2] = out[1, 2, 0] = -0.5
        return out
    return partials


def _h1_partials(p):
    x, y, _ = p
    out = np.zeros((3, 3, 3))
    out[1, 0, 0] = -y / 2
    out[0, 1, 1] = -x / 2
    out[0, 0, 1] = out[0, 1, 0] = y / 4
    out[1, 0, 1] = out[1, 1, 0] = x / 4
    out[1, 0, 2] = out[1, 2, 0] = -0.5
    out[0, 1, 2] = out[0, 2, 1] = 0.5
    return out


def _h2_partials(p):
    x, y, _ = p
    out = np.zeros((3, 3, 3))
    out[1, 0, 0] = y / 2
    out[0, 1, 1] = x / 2
    out[0, 0, 1] = out[0, 1, 0] = -y / 4
    out[1, 0, 1] = out[1, 1, 0] = -x / 4
    out[1, 0, 2] = out[1, 2, 0] = 0.5
    out[0, 1, 2] = out[0, 2, 1] = -0.5
    return out


def chart(name: str) -> MetricChart:
    """Built-in charts: g0, g1 (4-dim) and h1, h2 (3-dim on H3)."""
    if name in ("g0", "g1"):
        return MetricChart(name, 4, lambda p, n=name: coordinate_metric(n, p),
                           _g0g1_partials(name))
    if name == "h1":
        return MetricChart(name, 3, lambda p: coordinate_metric("h1", p),
                           _h1_partials)
    if name == "h2":
        return MetricChart(name, 3, lambda p: coordinate_metric("h2", p),
                           _h2_partials)
    raise InputError(f"no chart named {name!r}; have g0, g1, h1, h2")


def christoffel(ch: MetricChart, p: Sequence) -> np.ndarray:
    """Gamma^k_ij = g^kl (d_i g_jl + d_j g_il - d_l g_ij) / 2 at p."""
    p = np.asarray(p, dtype=float)
    g = ch.metric_at(p)
    try:
        ginv = np.linalg.inv(g)
    except np.linalg.LinAlgError:
        raise NumericalError(f"metric of chart {ch.name} singular at {p.tolist()}")
    dg = ch.partials_at(p)
    # T[i,j,l] = d_i g_jl + d_j g_il - d_l g_ij  (dg[k,i,j] = d_k g_ij)
    T = dg + dg.transpose(1, 0, 2) - dg.transpose(1, 2, 0)
    return 0.5 * np.einsum("kl,ijl->kij", ginv, T)


def geodesic_rhs(ch: MetricChart, pos: np.ndarray, vel: np.ndarray) -> tuple:
    gam = christoffel(ch, pos)
    acc = -np.einsum("kij,i,j->k", gam, vel, vel)
    return vel, acc


@dataclass
class Trajectory:
    """Uniform-step samples (s, position, velocity) of one integration."""

    s: np.ndarray
    positions: np.ndarray
    velocities: np.ndarray
    step: float
    method: str = "rk4"
    aborted: bool = False

    def __len__(self):
        return len(self.s)


def integrate_geodesic(ch: MetricChart, p0: Sequence, v0: Sequence,
                       s_end: float, step: float = 1e-3) -> Trajectory:
    """Classical RK4 on (position, velocity).

    A non-finite state aborts the run; the trajectory then carries the
    samples up to the last valid one and is flagged ``aborted``.
    """
    if step <= 0:
        raise InputError("step must be positive")
    nsteps = max(1, int(round(s_end / step)))
    pos = np.asarray(p0, dtype=float)
    vel = np.asarray(v0, dtype=float)
    ss = [0.0]
    ps = [pos.copy()]
    vs = [vel.copy()]
    aborted = False
    for k in range(nsteps):
        try:
            pos, vel = _rk4_step(ch, pos, vel, step)
        except NumericalError:
            aborted = True
            break
        if not (np.all(np.isfinite(pos)) and np.all(np.isfinite(vel))):
            aborted = True
            break
        ss.append((k + 1) * step)
        ps.append(pos.copy())
        vs.append(vel.copy())
    return Trajectory(np.array(ss), np.array(ps), np.array(vs), step,
                      aborted=aborted)


def _rk4_step(ch, pos, vel, h):
    k1p, k1v = geodesic_rhs(ch, pos, vel)
    k2p, k2v = geodesic_rhs(ch, pos + 0.5 * h * k1p, vel + 0.5 * h * k1v)
    k3p, k3v = geodesic_rhs(ch, pos + 0.5 * h * k2p, vel + 0.5 * h * k2v)
    k4p, k4v = geodesic_rhs(ch, pos + h * k3p, vel + h * k3v)
    return (pos + h / 6.0 * (k1p + 2 * k2p + 2 * k3p + k4p),
            vel + h / 6.0 * (k1v + 2 * k2v + 2 * k3v + k4v))


def energy_series(ch: MetricChart, traj: Trajectory) -> np.ndarray:
    """g(gamma', gamma') along a trajectory; constant for true geodesics."""
    return np.array([v @ ch.metric_at(p) @ v
                     for p, v in zip(traj.positions, traj.velocities)])


def initial_velocity(model: str, base: GroupElement, a: Sequence) -> np.ndarray:
    """Coordinate velocity of the frame combination sum a_i X_i at base."""
    return frame(model, base) @ np.asarray(a, dtype=float)


def integrate_spec(spec: GeodesicSpec, s_end: float,
                   step: float = 1e-3) -> Trajectory:
    name = {"G0": "g0", "G1": "g1"}.get(spec.model)
    if name is None:
        raise InputError("integrate_spec covers G0 and G1; use an h1/h2 chart"
                         " with explicit initial data for H3")
    ch = chart(name)
    v0 = initial_velocity(spec.model, spec.base, spec.a)
    return integrate_geodesic(ch, [float(c) for c in spec.base.coords], v0,
                              s_end, step)


def compare_to_closed_form(spec: GeodesicSpec, s_grid: Sequence[float],
                           step: float = 1e-3) -> float:
    """Sup-norm coordinate error of RK4 against the closed-form geodesic
    at the grid values (each snapped to the nearest sample)."""
    s_end = max(s_grid)
    traj = integrate_spec(spec, s_end, step)
    if traj.aborted:
        raise NumericalError("integration aborted before the grid end")
    worst = 0.0
    for s in s_grid:
        idx = min(int(round(s / step)), len(traj) - 1)
        have = traj.positions[idx]
        want = np.array(geodesic_closed_form(spec, traj.s[idx]).coords)
        worst = max(worst, float(np.max(np.abs(have - want))))
    return worst


def flow_left_invariant_field(model: str, a: Sequence, s_end: float,
                              step: float = 1e-3) -> GroupElement:
    """RK4 integral curve of the left-invariant field sum a_i X_i from the
    identity; coincides with exp(s_end a) on G0/G1."""
    if step <= 0:
        raise InputError("step must be positive")
    a = np.asarray(a, dtype=float)
    pos = np.array([float(c) for c in group_identity(model).coords])

    def rhs(p):
        return frame(model, GroupElement(model, tuple(p))) @ a

    nsteps = max(1, int(round(s_end / step)))
    for _ in range(nsteps):
        k1 = rhs(pos)
        k2 = rhs(pos + 0.5 * step * k1)
        k3 = rhs(pos + 0.5 * step * k2)
        k4 = rhs(pos + step * k3)
        pos = pos + step / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)
        if not np.all(np.isfinite(pos)):
            raise NumericalError("flow left the finite range")
    return GroupElement(model, tuple(pos))


def write_trajectory_csv(traj: Trajectory, stream, model: str = "G0") -> None:
    """Delimited output, one row per sample: s,t,x,y,z,vt,vx,vy,vz.

    Three-dimensional (H3) trajectories fill the t and vt columns with 0.
    Values carry 17 significant digits so doubles round-trip.
    """
    stream.write(CSV_HEADER + "\n")
    pad = model == "H3" or traj.positions.shape[1] == 3
    for s, p, v in zip(traj.s, traj.positions, traj.velocities):
        if pad:
            row = [s, 0.0, *p, 0.0, *v]
        else:
            row = [s, *p, *v]
        stream.write(",".join(format(x, ".17g") for x in row) + "\n")
