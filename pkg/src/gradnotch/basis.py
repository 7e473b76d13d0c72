"""Separable solution basis and the traction-free face conditions.

For a wedge occupying |theta| <= a, each symmetry class admits a finite
basis of degree-p displacement fields solving the leading field equations.
Traction-free faces impose the vanishing of the total tractions and the
dipolar (double) tractions on theta = +/-a; by symmetry it suffices to
enforce them on theta = +a, giving a square linear system in the basis
amplitudes. Eigenvalues p are where that system is singular; eigenfields
are its null vectors.

Degeneracies handled here:

* at p = 2 the anti-plane second member vanishes identically (its angular
  frequency is zero), so it is dropped and the system loses a column;
* at p = 2 the plane third member coincides with a combination of the
  first and fourth, so the system is singular for every wedge angle and
  the null space picks up a direction with identically zero field, which
  eigenfield filters out by sampling;
* the third-member coupling ratio has a pole at p = 7 - 8 nu, where the
  member is rescaled by the pole factor to stay finite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .model import (
    DisplacementField,
    EigenSolution,
    MaterialParams,
    Mode,
    PolarSeries,
    WedgeCase,
    validate_case,
)
from .fields import dipolar_series, total_theta_series

__all__ = [
    "DegenerateBasis",
    "EmptyNullSpace",
    "BCSystem",
    "third_member_ratio",
    "basis_fields",
    "apply_bc_operators",
    "bc_matrix",
    "bc_det",
    "null_space",
    "singular_ratio",
    "eigenfield",
    "special_p1_field",
    "special_p1_solution",
    "solution_from_amplitudes",
    "attach_p1",
]

_POLE_TOL = 1e-6
NULL_TOL = 1e-6
_BC_MATERIAL_MU = 1.0
_BC_MATERIAL_C = 1.0


class DegenerateBasis(Exception):
    """A basis member degenerates to the zero field at this exponent."""


class EmptyNullSpace(Exception):
    """The face-condition system has no null vector at this exponent."""


def third_member_ratio(p: float, nu: float) -> float:
    """Tangential/radial coupling ratio of the third plane basis member.

    Has a simple pole at p = 7 - 8 nu; callers near the pole should use the
    rescaled member produced by basis_fields instead.
    """
    return (p + 5.0 - 8.0 * nu) / (p - 7.0 + 8.0 * nu)


def _single(coef, r_exp, freq, kind):
    return PolarSeries(((coef, r_exp, freq, kind),))


def basis_fields(case: WedgeCase, p: float, nu: float | None = None, *,
                 strict: bool = False, keep_zero: bool = False
                 ) -> tuple[tuple, tuple]:
    """Standard degree-p basis members for the given symmetry class.

    Returns (fields, kept_indices). Members that degenerate to the zero
    field are dropped (kept_indices records the survivors) unless
    keep_zero is set; with strict=True a degenerate member raises
    DegenerateBasis instead. Plane modes require nu.
    """
    mode = case.mode
    members: list[DisplacementField] = []
    if mode is Mode.ANTIPLANE_ODD:
        members.append(DisplacementField.antiplane(_single(1.0, p, p, "sin")))
        members.append(
            DisplacementField.antiplane(_single(1.0, p, p - 2.0, "sin")))
    else:
        if nu is None:
            raise ValueError("plane-mode basis members require nu")
        pole = p - 7.0 + 8.0 * nu
        if abs(pole) < _POLE_TOL:
            c_r3, c_t3 = pole, p + 5.0 - 8.0 * nu
        else:
            c_r3, c_t3 = 1.0, third_member_ratio(p, nu)
        if mode is Mode.PLANE_SYM:
            members.append(DisplacementField.plane(
                mode, _single(1.0, p, p - 1.0, "cos"), PolarSeries.zero()))
            members.append(DisplacementField.plane(
                mode, _single(1.0, p, p + 1.0, "cos"),
                _single(-1.0, p, p + 1.0, "sin")))
            members.append(DisplacementField.plane(
                mode, _single(c_r3, p, p - 3.0, "cos"),
                _single(-c_t3, p, p - 3.0, "sin")))
            members.append(DisplacementField.plane(
                mode, PolarSeries.zero(), _single(1.0, p, p - 1.0, "sin")))
        else:
            members.append(DisplacementField.plane(
                mode, _single(1.0, p, p - 1.0, "sin"), PolarSeries.zero()))
            members.append(DisplacementField.plane(
                mode, _single(1.0, p, p + 1.0, "sin"),
                _single(1.0, p, p + 1.0, "cos")))
            members.append(DisplacementField.plane(
                mode, _single(c_r3, p, p - 3.0, "sin"),
                _single(c_t3, p, p - 3.0, "cos")))
            members.append(DisplacementField.plane(
                mode, PolarSeries.zero(), _single(1.0, p, p - 1.0, "cos")))

    fields, kept = [], []
    for j, member in enumerate(members):
        if member.is_zero:
            if strict:
                raise DegenerateBasis(
                    f"basis member {j} vanishes identically at p = {p}")
            if not keep_zero:
                continue
        fields.append(member)
        kept.append(j)
    return tuple(fields), tuple(kept)


def apply_bc_operators(field: DisplacementField, nu: float) -> tuple:
    """Face-condition operators of a field, as series in (r, theta).

    Plane modes: (r^3 t_tr, r^3 t_tt, m_ttr, m_ttt); anti-plane:
    (r^3 t_tz, r^2 m_ttz). Evaluated with unit stiffness and unit gradient
    coefficient: the face conditions are homogeneous, so material scaling
    drops out and only nu enters.
    """
    material = MaterialParams(nu=nu, mu=_BC_MATERIAL_MU, c=_BC_MATERIAL_C)
    m = dipolar_series(field, material)
    t = total_theta_series(field, material)
    if field.mode.is_plane:
        return (t["t_tr"].times_r_power(3), t["t_tt"].times_r_power(3),
                m["m_ttr"], m["m_ttt"])
    return (t["t_tz"].times_r_power(3), m["m_ttz"].times_r_power(2))


@dataclass(frozen=True)
class BCSystem:
    """Face-condition system: matrix rows are the operators at theta = a,
    columns the kept basis members; col_scales are each column's natural
    coefficient magnitudes, used to normalize before rank decisions."""

    case: WedgeCase
    p: float
    nu: float
    fields: tuple
    kept: tuple
    matrix: np.ndarray
    col_scales: np.ndarray


def bc_matrix(case: WedgeCase, p: float, nu: float, *,
              keep_zero: bool = False) -> BCSystem:
    """Assemble the face-condition system at exponent p."""
    fields, kept = basis_fields(case, p, nu, keep_zero=keep_zero)
    a = case.half_angle_a
    n_rows = 4 if case.mode.is_plane else 2
    matrix = np.zeros((n_rows, len(fields)))
    scales = np.zeros(len(fields))
    for j, member in enumerate(fields):
        ops = apply_bc_operators(member, nu)
        for i, series in enumerate(ops):
            if not series.is_zero and series.degree() is None:
                raise ValueError(
                    "face-condition series of a single-degree member is "
                    "not homogeneous")
            matrix[i, j] = series.eval(1.0, a)
        scales[j] = max(s.max_abs_coef() for s in ops)
    return BCSystem(case=case, p=p, nu=nu, fields=fields, kept=kept,
                    matrix=matrix, col_scales=scales)


def bc_det(case: WedgeCase, p: float, nu: float) -> float:
    """Determinant of the raw square face-condition matrix (degenerate
    members kept, so the determinant vanishes with them)."""
    system = bc_matrix(case, p, nu, keep_zero=True)
    return float(np.linalg.det(system.matrix))


def _normalized(system: BCSystem) -> np.ndarray:
    scales = np.maximum(system.col_scales, 1e-300)
    return system.matrix / scales[np.newaxis, :]


def null_space(system: BCSystem, tol: float = NULL_TOL) -> list:
    """Null vectors of the face-condition system, in kept-member
    amplitudes (unit norm, largest component positive).

    Columns are normalized by their coefficient scales first, so "small"
    is measured against the natural size of each member's face operators;
    a singular value counts as null below tol relative to the larger of
    the top singular value and the unit column scale.
    """
    norm = _normalized(system)
    n_cols = norm.shape[1]
    if n_cols == 0:
        return []
    _, sigma, vh = np.linalg.svd(norm)
    sigma = np.concatenate([sigma, np.zeros(n_cols - len(sigma))])
    cutoff = tol * max(float(sigma[0]) if len(sigma) else 0.0, 1.0)
    vectors = []
    scales = np.maximum(system.col_scales, 1e-300)
    for i in range(n_cols):
        if sigma[i] < cutoff:
            v = vh[i, :] / scales
            v = v / np.linalg.norm(v)
            if v[np.argmax(np.abs(v))] < 0:
                v = -v
            vectors.append(v)
    return vectors


def singular_ratio(case: WedgeCase, p: float, nu: float) -> float:
    """Smallest-to-largest singular value of the normalized system.

    The denominator is floored at the unit column scale so the ratio stays
    meaningful for one-column systems. Near an eigenvalue the ratio drops
    toward zero; away from eigenvalues it is order one.
    """
    norm = _normalized(bc_matrix(case, p, nu))
    sigma = np.linalg.svd(norm, compute_uv=False)
    if len(sigma) == 0:
        return 0.0
    return float(sigma[-1]) / max(float(sigma[0]), 1.0)


_SAMPLE_ANGLES = 13


def _field_samples(fields, a: float) -> np.ndarray:
    angles = np.linspace(-a, a, _SAMPLE_ANGLES)
    cols = []
    for member in fields:
        rows = []
        for comp in member.components():
            rows.extend(comp.eval(1.0, t) for t in angles)
        cols.append(rows)
    return np.array(cols).T


def eigenfield(case: WedgeCase, material: MaterialParams, p: float, *,
               null_tol: float = NULL_TOL) -> EigenSolution:
    """Eigenfields of the wedge at exponent p.

    For p = 1 returns the constant-strain family (valid at every wedge
    angle). Otherwise solves the face conditions, filters out null-space
    directions whose displacement field is identically zero (basis
    collapse at p = 2), and packages the survivors. Raises EmptyNullSpace
    if no genuine eigenfield exists at p.
    """
    validate_case(material, case)
    if abs(p - 1.0) <= 1e-12:
        return special_p1_solution(case, material)
    system = bc_matrix(case, p, material.nu)
    vectors = null_space(system, tol=null_tol)
    if not vectors:
        raise EmptyNullSpace(
            f"no eigenfield at p = {p} for mode {case.mode.value} with "
            f"half-angle {case.half_angle_a}")

    v_mat = np.column_stack(vectors)
    b_mat = _field_samples(system.fields, case.half_angle_a)
    sigma_b = np.linalg.svd(b_mat, compute_uv=False)
    g_mat = b_mat @ v_mat
    _, sigma_g, wh = np.linalg.svd(g_mat)
    sigma_g = np.concatenate(
        [sigma_g, np.zeros(v_mat.shape[1] - len(sigma_g))])
    cutoff = 1e-6 * float(sigma_b[0])
    amps, fields = [], []
    for i in range(v_mat.shape[1]):
        if sigma_g[i] <= cutoff:
            continue
        v = v_mat @ wh[i, :]
        v = v / np.linalg.norm(v)
        if v[np.argmax(np.abs(v))] < 0:
            v = -v
        combo = None
        for coef, member in zip(v, system.fields):
            part = member.scaled(float(coef))
            combo = part if combo is None else combo + part
        amps.append(tuple(float(x) for x in v))
        fields.append(combo)
    if not fields:
        raise EmptyNullSpace(
            f"face-condition null space at p = {p} contains only "
            f"zero-field directions (basis collapse)")
    return EigenSolution(case=case, material=material, p=p,
                         kind="bracket_root", nullity=len(fields),
                         amplitudes=tuple(amps), fields=tuple(fields))


def special_p1_field(mode: Mode, constants) -> DisplacementField:
    """Constant-strain field of a symmetry class, from its constants.

    Takes (C1, C3) for the symmetric plane class, (C2,) for the
    antisymmetric one, and (E,) for the anti-plane class. The field has
    zero dipolar stress, so it satisfies the full equations and the face
    conditions for every wedge angle.
    """
    vals = tuple(float(x) for x in constants)
    if mode is Mode.PLANE_SYM:
        if len(vals) != 2:
            raise ValueError("symmetric plane constants are (C1, C3)")
        c1, c3 = vals
        u_r = PolarSeries(((c1, 1.0, 0.0, "cos"), (c3, 1.0, 2.0, "cos")))
        u_t = _single(-c3, 1.0, 2.0, "sin")
        return DisplacementField.plane(mode, u_r, u_t)
    if mode is Mode.PLANE_ANTI:
        if len(vals) != 1:
            raise ValueError("antisymmetric plane constant is (C2,)")
        (c2,) = vals
        return DisplacementField.plane(mode, _single(c2, 1.0, 2.0, "sin"),
                                       _single(c2, 1.0, 2.0, "cos"))
    if len(vals) != 1:
        raise ValueError("anti-plane constant is (E,)")
    (e_amp,) = vals
    return DisplacementField.antiplane(_single(e_amp, 1.0, 1.0, "sin"))


def special_p1_solution(case: WedgeCase,
                        material: MaterialParams) -> EigenSolution:
    """The p = 1 constant-strain family as an eigensolution."""
    validate_case(material, case)
    mode = case.mode
    if mode is Mode.PLANE_SYM:
        units = ((1.0, 0.0), (0.0, 1.0))
    else:
        units = ((1.0,),)
    fields = tuple(special_p1_field(mode, u) for u in units)
    return EigenSolution(case=case, material=material, p=1.0,
                         kind="special_p1", nullity=len(fields),
                         amplitudes=units, fields=fields)


def solution_from_amplitudes(case: WedgeCase, material: MaterialParams,
                             p: float, amp_vectors, *,
                             p1_constants=None) -> EigenSolution:
    """Package given basis amplitudes as an eigensolution without solving
    the face conditions (for injected configurations and direct checks).

    Each amplitude vector spans the kept basis members at exponent p;
    p1_constants optionally attaches a constant-strain part.
    """
    validate_case(material, case)
    members, _ = basis_fields(case, p, material.nu)
    amps, fields = [], []
    for vec in amp_vectors:
        v = tuple(float(x) for x in vec)
        if len(v) != len(members):
            raise ValueError(
                f"amplitude vector length {len(v)} != basis size "
                f"{len(members)} at p = {p}")
        combo = None
        for coef, member in zip(v, members):
            part = member.scaled(coef)
            combo = part if combo is None else combo + part
        amps.append(v)
        fields.append(combo)
    p1_field = None
    p1_vals = None
    if p1_constants is not None:
        p1_field = special_p1_field(case.mode, p1_constants)
        p1_vals = tuple(float(x) for x in p1_constants)
    return EigenSolution(case=case, material=material, p=p,
                         kind="bracket_root", nullity=len(fields),
                         amplitudes=tuple(amps), fields=tuple(fields),
                         p1_coefficients=p1_vals, p1_field=p1_field)


def attach_p1(sol: EigenSolution, constants) -> EigenSolution:
    """Return a copy of sol carrying a constant-strain part."""
    import dataclasses

    field = special_p1_field(sol.case.mode, constants)
    return dataclasses.replace(
        sol, p1_coefficients=tuple(float(x) for x in constants),
        p1_field=field)
