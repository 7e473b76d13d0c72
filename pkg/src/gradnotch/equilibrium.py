"""Sector equilibrium of singular eigenfields.

A near-tip eigenfield must keep every sector r <= r0 in equilibrium under
its leading tractions: the total-traction resultants transmitted across
the arc r = r0 plus the concentrated corner forces that the dipolar
stress produces where the arc meets the faces. The corner force at a
boundary corner is the jump of n_j k_p m_jpq across it, with n the
outward normal and k the corner-pointing tangent of each meeting surface;
for the arc-face corners of the sector this evaluates to

    E_q(A) = + (m_rtq + m_trq) at (r0, +a)
    E_q(B) = - (m_rtq + m_trq) at (r0, -a).

Both routes to the arc resultants are computed: exact angular integration
of the series, and adaptive Gauss-Legendre quadrature; they must agree to
near machine precision or the check aborts rather than report a
fortuitous balance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import DisplacementField, MaterialParams, PolarSeries
from .fields import dipolar_series, total_r_series

__all__ = [
    "QuadratureDisagreement",
    "CornerForces",
    "ArcResultants",
    "EquilibriumReport",
    "edge_forces",
    "resultant_on_arc",
    "check_equilibrium",
]

_QUAD_START = 64
_QUAD_MAX = 4096
_QUAD_RTOL = 1e-12
_AGREE_TOL = 1e-8
EQUILIBRIUM_TOL = 1e-8


class QuadratureDisagreement(Exception):
    """Exact and quadrature arc resultants disagree beyond tolerance."""


@dataclass(frozen=True)
class CornerForces:
    """Concentrated corner forces at the arc-face corners, in the local
    polar components of each corner and in Cartesian components."""

    e_r_a: float
    e_t_a: float
    e_r_b: float
    e_t_b: float
    e_x_a: float
    e_y_a: float
    e_x_b: float
    e_y_b: float


@dataclass(frozen=True)
class ArcResultants:
    """Force and moment resultants transmitted across the arc r = r0 by
    the leading total tractions (moment about the tip, with the couple
    carried by the normal double traction included)."""

    h: float
    v: float
    t: float


@dataclass(frozen=True)
class EquilibriumReport:
    r0: float
    half_angle_a: float
    arc: ArcResultants
    corners: CornerForces
    sum_fx: float
    sum_fy: float
    sum_moment: float
    scale: float
    tol: float
    residuals: tuple
    passed: bool


def _require_plane(field: DisplacementField) -> None:
    if not field.mode.is_plane:
        raise ValueError(
            "sector equilibrium is implemented for plane modes; the "
            "anti-plane arc resultant involves the radial-face total "
            "traction component that the leading face conditions do not "
            "control")


def edge_forces(field: DisplacementField, material: MaterialParams,
                r0: float, half_angle_a: float) -> CornerForces:
    """Corner forces of the sector r <= r0 at theta = +/- a."""
    _require_plane(field)
    m = dipolar_series(field, material)
    a = half_angle_a
    jump_r = m["m_rrt"] + m["m_trr"]
    jump_t = m["m_rtt"] + m["m_ttr"]
    e_r_a = jump_r.eval(r0, a)
    e_t_a = jump_t.eval(r0, a)
    e_r_b = -jump_r.eval(r0, -a)
    e_t_b = -jump_t.eval(r0, -a)
    ca, sa = math.cos(a), math.sin(a)
    return CornerForces(
        e_r_a=e_r_a, e_t_a=e_t_a, e_r_b=e_r_b, e_t_b=e_t_b,
        e_x_a=e_r_a * ca - e_t_a * sa,
        e_y_a=e_r_a * sa + e_t_a * ca,
        e_x_b=e_r_b * ca + e_t_b * sa,
        e_y_b=-e_r_b * sa + e_t_b * ca,
    )


def _quad_arc(series_list, r0: float, a: float) -> tuple:
    """Adaptive Gauss-Legendre integrals of series over theta in [-a, a]."""
    prev = None
    n = _QUAD_START
    while True:
        nodes, weights = np.polynomial.legendre.leggauss(n)
        theta = nodes * a
        w = weights * a
        vals = tuple(
            float(np.dot(w, s.eval(r0, theta))) for s in series_list)
        if prev is not None:
            err = max(abs(x - y) for x, y in zip(vals, prev))
            if err <= _QUAD_RTOL * max(1.0, max(abs(x) for x in vals)):
                return vals
        if n >= _QUAD_MAX:
            return vals
        prev = vals
        n *= 2


def resultant_on_arc(field: DisplacementField, material: MaterialParams,
                     r0: float, half_angle_a: float) -> ArcResultants:
    """Leading-traction resultants across the arc r = r0.

    H and V are the Cartesian force components, T the moment about the
    tip (traction lever arm plus the in-plane couple of the normal double
    traction). Computed by exact angular integration and cross-checked by
    quadrature; QuadratureDisagreement on mismatch.
    """
    _require_plane(field)
    a = half_angle_a
    t_arc = total_r_series(field, material)
    m = dipolar_series(field, material)
    cos1 = PolarSeries.single(1.0, 0.0, 1.0, "cos")
    sin1 = PolarSeries.single(1.0, 0.0, 1.0, "sin")
    t_x = t_arc["t_rr"] * cos1 - t_arc["t_rt"] * sin1
    t_y = t_arc["t_rr"] * sin1 + t_arc["t_rt"] * cos1

    h = r0 * t_x.integrate_theta(a).eval(r0, 0.0)
    v = r0 * t_y.integrate_theta(a).eval(r0, 0.0)
    t_mom = (r0 * r0 * t_arc["t_rt"].integrate_theta(a).eval(r0, 0.0)
             + r0 * m["m_rrt"].integrate_theta(a).eval(r0, 0.0))

    qx, qy, qt, qc = _quad_arc(
        (t_x, t_y, t_arc["t_rt"], m["m_rrt"]), r0, a)
    quad = (r0 * qx, r0 * qy, r0 * r0 * qt + r0 * qc)
    exact = (h, v, t_mom)
    scale = max(1.0, *(abs(x) for x in exact))
    worst = max(abs(x - y) for x, y in zip(exact, quad))
    if worst > _AGREE_TOL * scale:
        raise QuadratureDisagreement(
            f"exact and quadrature arc resultants differ by {worst:.3e} "
            f"(scale {scale:.3e})")
    return ArcResultants(h=h, v=v, t=t_mom)


def check_equilibrium(field: DisplacementField, material: MaterialParams,
                      r0: float, half_angle_a: float,
                      tol: float = EQUILIBRIUM_TOL) -> EquilibriumReport:
    """Force and moment balance of the sector r <= r0.

    The faces carry no leading tractions for an eigenfield, so balance
    requires the arc resultants to cancel against the corner forces:

        sum Fx = H + Ex(A) + Ex(B)
        sum Fy = V + Ey(A) + Ey(B)
        sum M  = T + r0 (Et(A) + Et(B))

    Residuals are measured against the natural magnitude of the
    participating resultants; the moment residual carries a 1/r0 factor
    so all three are commensurate.
    """
    arc = resultant_on_arc(field, material, r0, half_angle_a)
    corners = edge_forces(field, material, r0, half_angle_a)
    sum_fx = arc.h + corners.e_x_a + corners.e_x_b
    sum_fy = arc.v + corners.e_y_a + corners.e_y_b
    sum_moment = arc.t + r0 * (corners.e_t_a + corners.e_t_b)
    scale = (abs(arc.h) + abs(arc.v) + abs(arc.t) / r0
             + math.hypot(corners.e_r_a, corners.e_t_a)
             + math.hypot(corners.e_r_b, corners.e_t_b))
    scale = max(scale, 1e-300)
    residuals = (abs(sum_fx), abs(sum_fy), abs(sum_moment) / r0)
    passed = all(res <= tol * scale for res in residuals)
    return EquilibriumReport(
        r0=r0, half_angle_a=half_angle_a, arc=arc, corners=corners,
        sum_fx=sum_fx, sum_fy=sum_fy, sum_moment=sum_moment,
        scale=scale, tol=tol, residuals=residuals, passed=passed)
