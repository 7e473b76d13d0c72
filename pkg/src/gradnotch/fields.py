"""Field quantities derived from a displacement field.

The constitutive pipeline runs entirely on exact series: strains from the
polar strain-displacement relations, monopolar stresses from the isotropic
law, dipolar stresses as the gradient coefficient times the gradient of the
monopolar stress, leading total tractions from the divergence combinations
of the dipolar stress, and the positive-definite energy density from the
quadratic form in strain and strain gradient.

The exposed total tractions are the leading (gradient) part — the dominant
near-tip contribution, two powers of r more singular than the monopolar
term, and the part that enters the face conditions and sector equilibrium
for homogeneous eigenfields.

The module also carries literal closed-form transcriptions of the crack-tip
fields (crack_reference_fields) and of the general-exponent fields
(reference_general_series). Both are written directly from the closed
forms, independent of the pipeline, so they serve as oracles for it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .model import (
    DisplacementField,
    EigenSolution,
    MaterialParams,
    Mode,
    PolarPoint,
    PolarSeries,
)

__all__ = [
    "StrainTensor",
    "MonopolarStress",
    "DipolarStress",
    "TotalTraction",
    "strain_series",
    "monopolar_series",
    "dipolar_series",
    "total_theta_series",
    "total_r_series",
    "energy_density_series",
    "field_series_map",
    "displacement",
    "strain",
    "monopolar_stress",
    "dipolar_stress",
    "total_stress_theta",
    "total_stress_r",
    "strain_energy_density",
    "crack_reference_fields",
    "crack_mode_std_amplitudes",
    "crack_mode_p1_constants",
    "reference_general_series",
]


# ----------------------------------------------------------------------
# pointwise value containers (unused components stay None)
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class StrainTensor:
    eps_rr: float | None = None
    eps_tt: float | None = None
    eps_rt: float | None = None
    eps_rz: float | None = None
    eps_tz: float | None = None


@dataclass(frozen=True)
class MonopolarStress:
    tau_rr: float | None = None
    tau_tt: float | None = None
    tau_rt: float | None = None
    tau_zz: float | None = None
    tau_rz: float | None = None
    tau_tz: float | None = None


@dataclass(frozen=True)
class DipolarStress:
    m_rrr: float | None = None
    m_rrt: float | None = None
    m_rtt: float | None = None
    m_trr: float | None = None
    m_ttr: float | None = None
    m_ttt: float | None = None
    m_rrz: float | None = None
    m_rtz: float | None = None
    m_trz: float | None = None
    m_ttz: float | None = None


@dataclass(frozen=True)
class TotalTraction:
    t_tr: float | None = None
    t_tt: float | None = None
    t_rr: float | None = None
    t_rt: float | None = None
    t_tz: float | None = None


# ----------------------------------------------------------------------
# constitutive pipeline on series
# ----------------------------------------------------------------------

def strain_series(field: DisplacementField) -> dict:
    """Strain components as exact series."""
    if field.mode.is_plane:
        u_r, u_t = field.u_r, field.u_theta
        eps_rr = u_r.dr()
        eps_tt = (u_r + u_t.dtheta()).div_r()
        eps_rt = (u_r.dtheta().div_r() + u_t.dr() - u_t.div_r()).scaled(0.5)
        return {"eps_rr": eps_rr, "eps_tt": eps_tt, "eps_rt": eps_rt}
    w = field.w
    return {"eps_rz": w.dr().scaled(0.5),
            "eps_tz": w.dtheta().div_r().scaled(0.5)}


def monopolar_series(field: DisplacementField, material: MaterialParams) -> dict:
    """Monopolar (Cauchy-like) stresses from the isotropic law."""
    eps = strain_series(field)
    mu, lam = material.mu, material.lam
    if field.mode.is_plane:
        trace = eps["eps_rr"] + eps["eps_tt"]
        return {
            "tau_rr": trace.scaled(lam) + eps["eps_rr"].scaled(2.0 * mu),
            "tau_tt": trace.scaled(lam) + eps["eps_tt"].scaled(2.0 * mu),
            "tau_rt": eps["eps_rt"].scaled(2.0 * mu),
            "tau_zz": trace.scaled(lam),
        }
    return {"tau_rz": eps["eps_rz"].scaled(2.0 * mu),
            "tau_tz": eps["eps_tz"].scaled(2.0 * mu)}


def dipolar_series(field: DisplacementField, material: MaterialParams) -> dict:
    """Dipolar stresses m = c * grad(tau) in polar components."""
    tau = monopolar_series(field, material)
    c = material.c
    if field.mode.is_plane:
        t_rr, t_tt, t_rt = tau["tau_rr"], tau["tau_tt"], tau["tau_rt"]
        return {
            "m_rrr": t_rr.dr().scaled(c),
            "m_rrt": t_rt.dr().scaled(c),
            "m_rtt": t_tt.dr().scaled(c),
            "m_trr": (t_rr.dtheta() - t_rt.scaled(2.0)).div_r().scaled(c),
            "m_ttr": (t_rt.dtheta() + t_rr - t_tt).div_r().scaled(c),
            "m_ttt": (t_tt.dtheta() + t_rt.scaled(2.0)).div_r().scaled(c),
        }
    t_rz, t_tz = tau["tau_rz"], tau["tau_tz"]
    return {
        "m_rrz": t_rz.dr().scaled(c),
        "m_rtz": t_tz.dr().scaled(c),
        "m_trz": (t_rz.dtheta() - t_tz).div_r().scaled(c),
        "m_ttz": (t_tz.dtheta() + t_rz).div_r().scaled(c),
    }


def total_theta_series(field: DisplacementField, material: MaterialParams) -> dict:
    """Leading total tractions on theta = const faces."""
    m = dipolar_series(field, material)
    if field.mode.is_plane:
        mix = m["m_trr"] + m["m_rrt"]
        t_tr = -(mix.dr() + m["m_ttr"].dtheta().div_r() + mix.div_r()
                 - m["m_ttt"].div_r())
        t_tt = -((m["m_ttr"] + m["m_rtt"]).dr() + m["m_ttt"].dtheta().div_r()
                 + m["m_rtt"].div_r() + m["m_ttr"].div_r().scaled(2.0))
        return {"t_tr": t_tr, "t_tt": t_tt}
    mix = m["m_rtz"] + m["m_trz"]
    t_tz = -(mix.dr() + m["m_ttz"].dtheta().div_r() + mix.div_r())
    return {"t_tz": t_tz}


def total_r_series(field: DisplacementField, material: MaterialParams) -> dict:
    """Leading total tractions on r = const arcs (plane modes only)."""
    if not field.mode.is_plane:
        raise ValueError("arc total tractions are provided for plane modes only")
    m = dipolar_series(field, material)
    mix = m["m_trr"] + m["m_rrt"]
    t_rr = -(m["m_rrr"].dr() + mix.dtheta().div_r() + m["m_rrr"].div_r()
             - m["m_ttr"].div_r().scaled(2.0) - m["m_rtt"].div_r())
    t_rt = -(m["m_rrt"].dr() + (m["m_rtt"] + m["m_ttr"]).dtheta().div_r()
             + m["m_trr"].div_r() + m["m_rrt"].div_r().scaled(2.0)
             - m["m_ttt"].div_r())
    return {"t_rr": t_rr, "t_rt": t_rt}


def energy_density_series(field: DisplacementField,
                          material: MaterialParams) -> PolarSeries:
    """Strain-energy density as an exact series (positive definite)."""
    eps = strain_series(field)
    mu, lam, c = material.mu, material.lam, material.c
    if field.mode.is_plane:
        e_rr, e_tt, e_rt = eps["eps_rr"], eps["eps_tt"], eps["eps_rt"]
        trace = e_rr + e_tt
        w = (trace * trace).scaled(0.5 * lam)
        w = w + (e_rr * e_rr + e_tt * e_tt + (e_rt * e_rt).scaled(2.0)).scaled(mu)
        tr_r = trace.dr()
        tr_t = trace.dtheta().div_r()
        w = w + (tr_r * tr_r + tr_t * tr_t).scaled(0.5 * lam * c)
        g_rrr = e_rr.dr()
        g_rrt = e_rt.dr()
        g_rtt = e_tt.dr()
        g_trr = (e_rr.dtheta() - e_rt.scaled(2.0)).div_r()
        g_trt = (e_rt.dtheta() + e_rr - e_tt).div_r()
        g_ttt = (e_tt.dtheta() + e_rt.scaled(2.0)).div_r()
        grad2 = (g_rrr * g_rrr + g_rtt * g_rtt + (g_rrt * g_rrt).scaled(2.0)
                 + g_trr * g_trr + g_ttt * g_ttt + (g_trt * g_trt).scaled(2.0))
        return w + grad2.scaled(mu * c)
    e_rz, e_tz = eps["eps_rz"], eps["eps_tz"]
    w = (e_rz * e_rz + e_tz * e_tz).scaled(2.0 * mu)
    g_rrz = e_rz.dr()
    g_rtz = e_tz.dr()
    g_trz = (e_rz.dtheta() - e_tz).div_r()
    g_ttz = (e_tz.dtheta() + e_rz).div_r()
    grad2 = g_rrz * g_rrz + g_rtz * g_rtz + g_trz * g_trz + g_ttz * g_ttz
    return w + grad2.scaled(2.0 * mu * c)


# CSV ordering of derived components per mode
PLANE_FIELD_KEYS = (
    "u_r", "u_t",
    "eps_rr", "eps_tt", "eps_rt",
    "tau_rr", "tau_tt", "tau_rt", "tau_zz",
    "m_rrr", "m_rrt", "m_rtt", "m_trr", "m_ttr", "m_ttt",
    "t_tr", "t_tt", "t_rr", "t_rt",
    "W",
)
ANTIPLANE_FIELD_KEYS = (
    "w",
    "eps_rz", "eps_tz",
    "tau_rz", "tau_tz",
    "m_rrz", "m_rtz", "m_trz", "m_ttz",
    "t_tz",
    "W",
)


def field_series_map(field: DisplacementField, material: MaterialParams) -> dict:
    """Every derived component (plus displacement and energy) as series."""
    out = {}
    if field.mode.is_plane:
        out["u_r"] = field.u_r
        out["u_t"] = field.u_theta
    else:
        out["w"] = field.w
    out.update(strain_series(field))
    out.update(monopolar_series(field, material))
    out.update(dipolar_series(field, material))
    out.update(total_theta_series(field, material))
    if field.mode.is_plane:
        out.update(total_r_series(field, material))
    out["W"] = energy_density_series(field, material)
    return out


# ----------------------------------------------------------------------
# pointwise API on eigensolutions
# ----------------------------------------------------------------------

def _resolved(sol: EigenSolution, amp, include_p1=True) -> DisplacementField:
    return sol.combined_field(amp, include_p1=include_p1)


def displacement(sol: EigenSolution, amp_index, point: PolarPoint,
                 include_p1: bool = True) -> tuple:
    """Displacement components at a point: (u_r, u_theta) or (w,)."""
    f = _resolved(sol, amp_index, include_p1)
    if f.mode.is_plane:
        return (f.u_r.eval(point.r, point.theta),
                f.u_theta.eval(point.r, point.theta))
    return (f.w.eval(point.r, point.theta),)


def strain(sol: EigenSolution, amp_index, point: PolarPoint) -> StrainTensor:
    f = _resolved(sol, amp_index)
    vals = {k: s.eval(point.r, point.theta)
            for k, s in strain_series(f).items()}
    return StrainTensor(**vals)


def monopolar_stress(sol: EigenSolution, amp_index,
                     point: PolarPoint) -> MonopolarStress:
    f = _resolved(sol, amp_index)
    vals = {k: s.eval(point.r, point.theta)
            for k, s in monopolar_series(f, sol.material).items()}
    return MonopolarStress(**vals)


def dipolar_stress(sol: EigenSolution, amp_index,
                   point: PolarPoint) -> DipolarStress:
    f = _resolved(sol, amp_index)
    vals = {k: s.eval(point.r, point.theta)
            for k, s in dipolar_series(f, sol.material).items()}
    return DipolarStress(**vals)


def total_stress_theta(sol: EigenSolution, amp_index,
                       point: PolarPoint) -> TotalTraction:
    f = _resolved(sol, amp_index)
    vals = {k: s.eval(point.r, point.theta)
            for k, s in total_theta_series(f, sol.material).items()}
    return TotalTraction(**vals)


def total_stress_r(sol: EigenSolution, amp_index,
                   point: PolarPoint) -> TotalTraction:
    f = _resolved(sol, amp_index)
    vals = {k: s.eval(point.r, point.theta)
            for k, s in total_r_series(f, sol.material).items()}
    return TotalTraction(**vals)


def strain_energy_density(sol: EigenSolution, amp_index,
                          point: PolarPoint) -> float:
    f = _resolved(sol, amp_index)
    return energy_density_series(f, sol.material).eval(point.r, point.theta)


# ----------------------------------------------------------------------
# crack-tip closed forms (literal transcriptions; oracles for the pipeline)
# ----------------------------------------------------------------------

def crack_reference_fields(mode_label: str, amplitudes, material: MaterialParams,
                           point: PolarPoint) -> dict:
    """Closed-form crack-tip fields, independent of the pipeline.

    mode_label "I" takes amplitudes (C1, C3, A1, A2); "II" takes
    (C2, B1, B2); "III" takes (E, D). Returns a dict of pointwise values
    keyed like the pipeline components (total tractions are the leading
    part throughout).
    """
    mu, c, nu = material.mu, material.c, material.nu
    r, th = point.r, point.theta
    h1, h2, h3, h5 = th / 2.0, 2.0 * th, 3.0 * th / 2.0, 5.0 * th / 2.0
    s = math.sqrt(r)
    cos, sin = math.cos, math.sin

    if mode_label == "I":
        c1, c3, a1, a2 = (float(x) for x in amplitudes)
        q = 41.0 - 32.0 * nu
        out = {}
        out["u_r"] = (r * (c1 + c3 * cos(h2))
                      + a1 * r * s * ((3 - 8 * nu) * cos(h1)
                                      + 3 * (11 - 16 * nu) / q * cos(h3))
                      - a2 * r * s * (3 * (11 - 16 * nu) / q * cos(h3) - cos(h5)))
        out["u_t"] = (-c3 * r * sin(h2)
                      + a1 * r * s * ((9 - 8 * nu) * sin(h1)
                                      - 3 * (13 - 16 * nu) / q * sin(h3))
                      + a2 * r * s * (3 * (13 - 16 * nu) / q * sin(h3) - sin(h5)))
        out["eps_rr"] = (c1 + c3 * cos(h2)
                         + 1.5 * a1 * s * ((33 - 48 * nu) / q * cos(h3)
                                           + (3 - 8 * nu) * cos(h1))
                         - 1.5 * a2 * s * ((33 - 48 * nu) / q * cos(h3) - cos(h5)))
        out["eps_tt"] = (c1 - c3 * cos(h2)
                         - 1.5 * a1 * s * ((17 - 16 * nu) / q * cos(h3)
                                           - (5 - 8 * nu) * cos(h1))
                         + 1.5 * a2 * s * ((17 - 16 * nu) / q * cos(h3) - cos(h5)))
        out["eps_rt"] = (-c3 * sin(h2)
                         - 1.5 * a1 * s * ((23 - 32 * nu) / q * sin(h3) - sin(h1))
                         + 1.5 * a2 * s * ((23 - 32 * nu) / q * sin(h3) - sin(h5)))
        out["tau_rr"] = (2 * mu * c1 / (1 - 2 * nu) + 2 * mu * c3 * cos(h2)
                         + 3 * mu * a1 * s * (3 * cos(h1)
                                              + (33 - 32 * nu) / q * cos(h3))
                         - 3 * mu * a2 * s * ((33 - 32 * nu) / q * cos(h3)
                                              - cos(h5)))
        out["tau_tt"] = (2 * mu * c1 / (1 - 2 * nu) - 2 * mu * c3 * cos(h2)
                         + 3 * mu * a1 * s * (5 * cos(h1)
                                              - (17 - 32 * nu) / q * cos(h3))
                         - 3 * mu * a2 * s * (-(17 - 32 * nu) / q * cos(h3)
                                              + cos(h5)))
        out["tau_rt"] = (-2 * mu * c3 * sin(h2)
                         + 3 * mu * a1 * s * (sin(h1)
                                              - (23 - 32 * nu) / q * sin(h3))
                         - 3 * mu * a2 * s * (-(23 - 32 * nu) / q * sin(h3)
                                              + sin(h5)))
        f = 1.5 * mu * c / s
        out["m_ttr"] = (f * a1 * (-3 * cos(h1) + (31 - 32 * nu) / q * cos(h3))
                        - f * a2 * ((31 - 32 * nu) / q * cos(h3) + cos(h5)))
        out["m_ttt"] = (-f * a1 * (sin(h1) + sin(h3))
                        + f * a2 * (sin(h3) + sin(h5)))
        out["m_rrr"] = (f * a1 * (3 * cos(h1) + (33 - 32 * nu) / q * cos(h3))
                        - f * a2 * ((33 - 32 * nu) / q * cos(h3) - cos(h5)))
        out["m_rrt"] = (f * a1 * (sin(h1) - (23 - 32 * nu) / q * sin(h3))
                        + f * a2 * ((23 - 32 * nu) / q * sin(h3) - sin(h5)))
        out["m_trr"] = (-f * a1 * (7 * sin(h1) + (7 + 32 * nu) / q * sin(h3))
                        + f * a2 * ((7 + 32 * nu) / q * sin(h3) - sin(h5)))
        out["m_rtt"] = (f * a1 * (5 * cos(h1) - (17 - 32 * nu) / q * cos(h3))
                        + f * a2 * ((17 - 32 * nu) / q * cos(h3) - cos(h5)))
        g = 0.75 * mu * c / (r * s)
        out["t_tr"] = (g * a1 * (sin(h1) + sin(h3))
                       - g * a2 * (sin(h3) + sin(h5)))
        out["t_tt"] = (g * a1 * ((47 - 32 * nu) / q * cos(h3) + 5 * cos(h1))
                       - g * a2 * ((47 - 32 * nu) / q * cos(h3) + cos(h5)))
        gq = 3 * c * mu / (4 * q * r * s)
        out["t_rr"] = (gq * a1 * ((147 - 32 * nu) * cos(h3) + q * cos(h1))
                       + gq * a2 * ((123 - 96 * nu) * cos(h5)
                                    - (147 - 32 * nu) * cos(h3)))
        out["t_rt"] = (gq * a1 * ((43 + 32 * nu) * sin(h3)
                                  + (451 - 352 * nu) * sin(h1))
                       - gq * a2 * ((123 - 96 * nu) * sin(h5)
                                    + (43 + 32 * nu) * sin(h3)))
        return out

    if mode_label == "II":
        c2, b1, b2 = (float(x) for x in amplitudes)
        d = 37.0 - 32.0 * nu
        w12 = 1.0 - 2.0 * nu
        out = {}
        out["u_r"] = (c2 * r * sin(h2) + b1 * r * s * sin(h1)
                      + b2 * r * s * (-3 * (11 - 16 * nu) / d * sin(h3)
                                      + sin(h5)))
        out["u_t"] = (c2 * r * cos(h2) - b1 * r * s * cos(h1)
                      + b2 * r * s * (cos(h5) - 3 * (13 - 16 * nu) / d * cos(h3)
                                      + 12 / d * cos(h1)))
        out["eps_rr"] = (c2 * sin(h2) + 1.5 * b1 * s * sin(h1)
                         - 1.5 * b2 * s * ((33 - 48 * nu) / d * sin(h3)
                                           - sin(h5)))
        out["eps_tt"] = (-c2 * sin(h2) + 1.5 * b1 * s * sin(h1)
                         - 1.5 * b2 * s * (4 / d * sin(h1)
                                           - (17 - 16 * nu) / d * sin(h3)
                                           + sin(h5)))
        out["eps_rt"] = (c2 * cos(h2)
                         + 1.5 * b2 * s * (2 / d * cos(h1)
                                           - (23 - 32 * nu) / d * cos(h3)
                                           + cos(h5)))
        out["tau_rr"] = (2 * mu * c2 * sin(h2)
                         - 3 * mu * b2 * s * (4 * nu / (w12 * d) * sin(h1)
                                              + (33 - 32 * nu) / d * sin(h3)
                                              - sin(h5))
                         + 3 * mu / w12 * b1 * s * sin(h1))
        out["tau_tt"] = (-2 * mu * c2 * sin(h2)
                         - 3 * mu * b2 * s * (4 * (1 - nu) / (w12 * d) * sin(h1)
                                              - (17 - 32 * nu) / d * sin(h3)
                                              + sin(h5))
                         + 3 * mu / w12 * b1 * s * sin(h1))
        out["tau_rt"] = (2 * mu * c2 * cos(h2)
                         + 3 * mu * b2 * s * (2 / d * cos(h1)
                                              - (23 - 32 * nu) / d * cos(h3)
                                              + cos(h5)))
        f = 1.5 * mu * c / s
        out["m_ttt"] = (-f * b2 * (-4 * (1 - 3 * nu) / (w12 * d) * cos(h1)
                                   + (41 - 32 * nu) / d * cos(h3) + cos(h5))
                        + f / w12 * b1 * cos(h1))
        out["m_ttr"] = -f * b2 * (-6 / d * sin(h1)
                                  + (31 - 32 * nu) / d * sin(h3) + sin(h5))
        out["m_rrr"] = (-f * b2 * (-sin(h5) + (33 - 32 * nu) / d * sin(h3)
                                   + 4 * nu / (d * w12) * sin(h1))
                        + f / w12 * b1 * sin(h1))
        out["m_trr"] = (-f * b2 * (4 * (2 - 3 * nu) / (w12 * d) * cos(h1)
                                   + (7 + 32 * nu) / d * cos(h3) - cos(h5))
                        + f / w12 * b1 * cos(h1))
        out["m_rrt"] = -f * b2 * (-2 / d * cos(h1)
                                  + (23 - 32 * nu) / d * cos(h3) - cos(h5))
        out["m_rtt"] = (-f * b2 * (4 * (1 - nu) / (d * w12) * sin(h1)
                                   - (17 - 32 * nu) / d * sin(h3) + sin(h5))
                        + f / w12 * b1 * sin(h1))
        g = 0.75 * mu * c / (r * s)
        out["t_tr"] = (g * b2 * (4 * (2 - 5 * nu) / (w12 * d) * cos(h1)
                                 + (41 - 32 * nu) / d * cos(h3) + cos(h5))
                       + g / w12 * b1 * cos(h1))
        out["t_tt"] = -g * b2 * (10 / d * sin(h1)
                                 + (47 - 32 * nu) / d * sin(h3) + sin(h5))
        gd = 3 * mu * c / (4 * d * r * s)
        out["t_rr"] = (gd * b2 * ((10 - 28 * nu) / w12 * sin(h1)
                                  + 3 * d * sin(h5)
                                  - (147 - 32 * nu) * sin(h3))
                       + 3 * c * mu / (2 * w12 * r * s) * b1 * sin(h1))
        out["t_rt"] = (gd * b2 * ((16 - 28 * nu) / w12 * cos(h1)
                                  + 3 * d * cos(h5)
                                  + (43 + 32 * nu) * cos(h3))
                       - 3 * c * mu / (4 * w12 * r * s) * b1 * cos(h1))
        return out

    if mode_label == "III":
        e_amp, d_amp = (float(x) for x in amplitudes)
        out = {}
        out["w"] = (e_amp * r * sin(th)
                    + d_amp / 3.0 * r * s * (5 * sin(h3) - 3 * sin(h1)))
        out["tau_rz"] = (mu * e_amp * sin(th)
                         + 0.5 * mu * d_amp * s * (5 * sin(h3) - 3 * sin(h1)))
        out["tau_tz"] = (mu * e_amp * cos(th)
                         + 0.5 * mu * d_amp * s * (5 * cos(h3) - cos(h1)))
        out["eps_rz"] = out["tau_rz"] / (2 * mu)
        out["eps_tz"] = out["tau_tz"] / (2 * mu)
        f = 0.25 * mu * c * d_amp / s
        out["m_trz"] = f * (5 * cos(h3) - cos(h1))
        out["m_rtz"] = out["m_trz"]
        out["m_ttz"] = -5 * f * (sin(h3) + sin(h1))
        out["m_rrz"] = f * (5 * sin(h3) - 3 * sin(h1))
        out["t_tz"] = (mu * c * d_amp / (8 * r * s)
                       * (5 * cos(h3) + 7 * cos(h1)))
        return out

    raise ValueError(f"unknown crack mode {mode_label!r}")


def crack_mode_std_amplitudes(mode_label: str, amps, nu: float) -> tuple:
    """Standard basis-member coordinates of the crack closed-form fields.

    Maps the crack amplitude pairs (A1, A2) / (B1, B2) / (D,) onto the
    standard column amplitudes at p = 3/2 (the degree-p part only; the
    constant-strain amplitudes map via crack_mode_p1_constants).
    """
    if mode_label == "I":
        a1, a2 = (float(x) for x in amps)
        q = 41.0 - 32.0 * nu
        return ((3.0 - 8.0 * nu) * a1,
                a2,
                3.0 * (11.0 - 16.0 * nu) / q * (a1 - a2),
                (9.0 - 8.0 * nu) * a1)
    if mode_label == "II":
        b1, b2 = (float(x) for x in amps)
        d = 37.0 - 32.0 * nu
        return (b1,
                b2,
                3.0 * (11.0 - 16.0 * nu) / d * b2,
                -b1 + 12.0 / d * b2)
    if mode_label == "III":
        (d_amp,) = (float(x) for x in amps)
        return (5.0 * d_amp / 3.0, d_amp)
    raise ValueError(f"unknown crack mode {mode_label!r}")


def crack_mode_p1_constants(mode_label: str, amps) -> tuple:
    """Constant-strain coefficients for each crack mode's p = 1 part."""
    if mode_label == "I":
        c1, c3 = (float(x) for x in amps)
        return (c1, c3)
    if mode_label == "II":
        (c2,) = (float(x) for x in amps)
        return (c2,)
    if mode_label == "III":
        (e_amp,) = (float(x) for x in amps)
        return (e_amp,)
    raise ValueError(f"unknown crack mode {mode_label!r}")


# ----------------------------------------------------------------------
# general-exponent closed forms (literal transcriptions; second route for
# the dual-construction checks)
# ----------------------------------------------------------------------

def reference_general_series(mode: Mode, p: float, nu: float, amps,
                             material: MaterialParams) -> dict:
    """Closed-form series for a general degree-p field, given standard
    basis amplitudes (4 for plane modes, 2 for the anti-plane mode).

    Transcribed directly from the general closed forms, independent of the
    constitutive pipeline. Covers strains, monopolar stresses (without the
    out-of-plane component), dipolar stresses, and the theta-face total
    tractions.
    """
    mu, c = material.mu, material.c
    if mode is Mode.ANTIPLANE_ODD:
        d1, d2 = (float(x) for x in amps)
        fp, fm = p, p - 2.0

        def ser(r_exp, pref, c1, c2, kind):
            return PolarSeries(((pref * c1 * d1, r_exp, fp, kind),
                                (pref * c2 * d2, r_exp, fm, kind)))

        out = {
            "eps_rz": ser(p - 1, 0.5 * p, 1.0, 1.0, "sin"),
            "eps_tz": ser(p - 1, 0.5, p, p - 2.0, "cos"),
            "tau_rz": ser(p - 1, mu * p, 1.0, 1.0, "sin"),
            "tau_tz": ser(p - 1, mu, p, p - 2.0, "cos"),
            "m_trz": ser(p - 2, mu * c * (p - 1), p, p - 2.0, "cos"),
            "m_ttz": ser(p - 2, -mu * c * (p - 1), p, p - 4.0, "sin"),
            "m_rrz": ser(p - 2, mu * c * p * (p - 1), 1.0, 1.0, "sin"),
            "t_tz": ser(p - 3, -mu * c * (p - 1) * (p - 2), p, p + 2.0, "cos"),
        }
        out["m_rtz"] = out["m_trz"]
        return out

    if len(tuple(amps)) != 4:
        raise ValueError("plane modes take 4 standard amplitudes")
    a = [float(x) for x in amps]
    sym = mode is Mode.PLANE_SYM
    f1, f2, f3 = p - 1.0, p + 1.0, p - 3.0
    pole = p + 8.0 * nu - 7.0
    w12 = 1.0 - 2.0 * nu

    def build(r_exp, pref, rows):
        # rows: (amp_index, sym_coef, anti_coef, freq, sym_kind)
        terms = []
        for i, cs, ca, freq, kind in rows:
            if sym:
                terms.append((pref * cs * a[i], r_exp, freq, kind))
            else:
                flip = "sin" if kind == "cos" else "cos"
                terms.append((pref * ca * a[i], r_exp, freq, flip))
        return PolarSeries(tuple(terms))

    q2 = (p * p + p - 8.0 * p * nu + 16.0 * nu - 8.0) / pole
    q3 = (p * p - 3.0 * p - 8.0 * nu + 8.0) / pole
    k1 = (p + nu - p * nu) / w12
    k3 = (p * p - 7.0 * p + 8.0 * nu) / pole
    k1b = (1.0 - nu + p * nu) / w12
    k3b = (p * p + p + 8.0 * nu - 8.0) / pole
    g1 = (3.0 * nu - 2.0 - p * nu) / w12
    g3 = (p * p - 3.0 * p + 8.0 * nu - 8.0) / pole
    g4 = (2.0 - p - 3.0 * nu + p * nu) / w12
    h1 = (1.0 - 3.0 * nu - p + p * nu) / w12
    h3 = (p * p - 11.0 * p + 8.0 * nu + 16.0) / pole
    h4 = (1.0 - 3.0 * nu + p * nu) / w12
    e1 = (1.0 + p) * (1.0 - nu) / w12
    e4 = (nu - 1.0 + p * nu) / w12

    rows_tau_rr = [(0, k1, k1, f1, "cos"), (1, p, p, f2, "cos"),
                   (2, k3, k3, f3, "cos"),
                   (3, nu * f1 / w12, -nu * f1 / w12, f1, "cos")]
    rows_tau_tt = [(0, k1b, k1b, f1, "cos"), (1, -p, -p, f2, "cos"),
                   (2, -k3b, -k3b, f3, "cos"),
                   (3, (1.0 - nu) * f1 / w12, -(1.0 - nu) * f1 / w12,
                    f1, "cos")]
    rows_tau_rt = [(0, -f1, f1, f1, "sin"), (1, -2.0 * p, 2.0 * p, f2, "sin"),
                   (2, -2.0 * q3, 2.0 * q3, f3, "sin"),
                   (3, f1, f1, f1, "sin")]

    out = {
        "eps_rr": build(p - 1, 1.0, [(0, p, p, f1, "cos"),
                                     (1, p, p, f2, "cos"),
                                     (2, p, p, f3, "cos")]),
        "eps_tt": build(p - 1, 1.0, [(0, 1.0, 1.0, f1, "cos"),
                                     (1, -p, -p, f2, "cos"),
                                     (2, -q2, -q2, f3, "cos"),
                                     (3, f1, -f1, f1, "cos")]),
        "eps_rt": build(p - 1, 1.0, [(0, -0.5 * f1, 0.5 * f1, f1, "sin"),
                                     (1, -p, p, f2, "sin"),
                                     (2, -q3, q3, f3, "sin"),
                                     (3, 0.5 * f1, 0.5 * f1, f1, "sin")]),
        "tau_rr": build(p - 1, 2.0 * mu, rows_tau_rr),
        "tau_tt": build(p - 1, 2.0 * mu, rows_tau_tt),
        "tau_rt": build(p - 1, mu, rows_tau_rt),
        "m_rrr": build(p - 2, 2.0 * c * mu * f1, rows_tau_rr),
        "m_ttt": build(p - 2, 2.0 * c * mu * f1,
                       [(0, g1, -g1, f1, "sin"), (1, p, -p, f2, "sin"),
                        (2, g3, -g3, f3, "sin"), (3, g4, g4, f1, "sin")]),
        "m_ttr": build(p - 2, -c * mu * f1,
                       [(0, p - 3.0, p - 3.0, f1, "cos"),
                        (1, 2.0 * p, 2.0 * p, f2, "cos"),
                        (2, 2.0 * (p * p - 7.0 * p - 8.0 * nu + 16.0) / pole,
                         2.0 * (p * p - 7.0 * p - 8.0 * nu + 16.0) / pole,
                         f3, "cos"),
                        (3, -(p - 3.0), p - 3.0, f1, "cos")]),
        "m_rrt": build(p - 2, c * mu * f1, rows_tau_rt),
        "m_trr": build(p - 2, 2.0 * c * mu * f1,
                       [(0, h1, -h1, f1, "sin"), (1, -p, p, f2, "sin"),
                        (2, -h3, h3, f3, "sin"), (3, -h4, -h4, f1, "sin")]),
        "m_rtt": build(p - 2, 2.0 * c * mu * f1, rows_tau_tt),
        "t_tr": build(p - 3, 2.0 * c * mu * f1 * (p - 2.0),
                      [(0, e1, -e1, f1, "sin"), (1, p, -p, f2, "sin"),
                       (2, g3, -g3, f3, "sin"), (3, e4, e4, f1, "sin")]),
        "t_tt": build(p - 3, c * mu * f1 * (p - 2.0),
                      [(0, p + 1.0, p + 1.0, f1, "cos"),
                       (1, 2.0 * p, 2.0 * p, f2, "cos"),
                       (2, 2.0 * (p * p + p - 8.0 * nu + 8.0) / pole,
                        2.0 * (p * p + p - 8.0 * nu + 8.0) / pole, f3, "cos"),
                       (3, -(p + 1.0), p + 1.0, f1, "cos")]),
    }
    return out
