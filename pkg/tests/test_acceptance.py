"""Acceptance gate: one test per shipped guarantee, at its stated tolerance.

Each test performs the full computation behind one numbered guarantee,
records a pass/fail row on the session recorder (printed as a summary
block at the end of the run), and asserts the same outcome so the run
goes red if any guarantee fails.
"""

from __future__ import annotations

import math
import random
import time

import numpy as np
import pytest

import oracles
from gradnotch.basis import eigenfield, solution_from_amplitudes, \
    special_p1_solution, basis_fields, singular_ratio
from gradnotch.charfn import char_bracket
from gradnotch.cli import main as cli_main
from gradnotch.eigensolver import find_roots, smallest_exponents
from gradnotch.equilibrium import check_equilibrium, edge_forces
from gradnotch.fields import (crack_mode_std_amplitudes,
                              crack_reference_fields, dipolar_series,
                              field_series_map, monopolar_series,
                              total_r_series, total_theta_series)
from gradnotch.model import (MaterialParams, Mode, PolarPoint, WedgeCase)
from gradnotch.verify import DivergentEnergy, bc_residual, energy_scaling, \
    pde_residual

PLANE_MODES = (Mode.PLANE_SYM, Mode.PLANE_ANTI)
ALL_MODES = PLANE_MODES + (Mode.ANTIPLANE_ODD,)


def _case(angle_deg, mode):
    return WedgeCase(half_angle_a=math.radians(angle_deg), mode=mode)


def _mat(nu, mu=1.0, c=1.0):
    return MaterialParams(nu=0.0 if nu is None else nu, mu=mu, c=c)


def _smallest(angle_deg, mode, nu):
    return smallest_exponents(_case(angle_deg, mode), nu).p


# ----------------------------------------------------------------------
# 1. crack limit
# ----------------------------------------------------------------------

def test_criterion_01_crack_limit(acceptance):
    runs = [(mode, nu) for mode in PLANE_MODES for nu in (0.0, 0.25, 0.49)]
    runs.append((Mode.ANTIPLANE_ODD, None))
    t0 = time.perf_counter()
    worst = max(abs(_smallest(180.0, mode, nu) - 1.5) for mode, nu in runs)
    elapsed = time.perf_counter() - t0
    ok = worst < 1e-9 and elapsed < 1.0
    assert acceptance.record(
        1, "crack-limit smallest exponent is 1.5 in every mode", ok,
        f"worst |p - 1.5| = {worst:.2e}, runtime {elapsed:.3f} s")


# ----------------------------------------------------------------------
# 2. half-space limit
# ----------------------------------------------------------------------

def test_criterion_02_half_space_limit(acceptance):
    worst_first = max(abs(_smallest(90.0, mode, 0.3
                                    if mode.is_plane else None) - 2.0)
                      for mode in ALL_MODES)
    worst_second = 0.0
    for mode in PLANE_MODES:
        roots = find_roots(_case(90.0, mode), 0.3)
        worst_second = max(worst_second, abs(roots[1] - 3.0))
    ok = worst_first < 1e-9 and worst_second < 1e-9
    assert acceptance.record(
        2, "half-space exponents are 2 (all modes) then 3 (plane modes)",
        ok, f"|p1 - 2| <= {worst_first:.2e}, |p2 - 3| <= {worst_second:.2e}")


# ----------------------------------------------------------------------
# 3. angle sweep through the CLI
# ----------------------------------------------------------------------

def test_criterion_03_sweep_monotone_with_known_endpoints(acceptance, capsys):
    ok = True
    details = []
    for mode_label, nu_args in [("ps-sym", ["--nu", "0.25"]),
                                ("ps-anti", ["--nu", "0.25"]), ("ap", [])]:
        rc = cli_main(["sweep", "--mode", mode_label, "--from", "90",
                       "--to", "180", "--step", "1"] + nu_args)
        out = capsys.readouterr().out
        ok &= rc == 0
        body = [line.split(",") for line in out.strip().split("\n")[1:]]
        ok &= len(body) == 91
        p_col = [float(row[3]) for row in body]
        total = [float(row[5]) for row in body]
        mono = [float(row[4]) for row in body]
        decreasing = all(a > b for a, b in zip(p_col, p_col[1:]))
        end_err = max(abs(total[0] + 1.0), abs(total[-1] + 1.5))
        in_band = all(0.5 - 1e-9 <= v <= 1.0 + 1e-9 for v in mono)
        ok &= decreasing and end_err < 1e-6 and in_band
        details.append(f"{mode_label}: endpoints off by {end_err:.1e}")
    assert acceptance.record(
        3, "1-degree sweeps decrease strictly with pinned endpoints", ok,
        "; ".join(details))


# ----------------------------------------------------------------------
# 4. crack null-space structure
# ----------------------------------------------------------------------

def test_criterion_04_crack_null_space(acceptance):
    sym = eigenfield(_case(180.0, Mode.PLANE_SYM), _mat(0.25), 1.5)
    anti = eigenfield(_case(180.0, Mode.PLANE_ANTI), _mat(0.25), 1.5)
    ap = eigenfield(_case(180.0, Mode.ANTIPLANE_ODD), _mat(None), 1.5)
    amp = ap.amplitudes[0]
    ratio_err = abs(amp[0] / amp[1] - 5.0 / 3.0)
    ok = (sym.nullity == 2 and anti.nullity == 2 and ap.nullity == 1
          and ratio_err < 1e-9)
    assert acceptance.record(
        4, "crack nullities 2/2/1 with anti-plane amplitudes 5:3", ok,
        f"nullities {sym.nullity}/{anti.nullity}/{ap.nullity}, "
        f"|ratio - 5/3| = {ratio_err:.2e}")


# ----------------------------------------------------------------------
# 5. face-condition residuals of random eigenfields
# ----------------------------------------------------------------------

def test_criterion_05_face_residuals_random_cases(acceptance):
    rng = random.Random(20240501)
    worst = 0.0
    for mode in ALL_MODES:
        for _ in range(10):
            angle = rng.uniform(90.0, 180.0)
            nu = rng.uniform(0.0, 0.49) if mode.is_plane else None
            case = _case(angle, mode)
            p = smallest_exponents(case, nu).p
            sol = eigenfield(case, _mat(nu), p)
            worst = max(worst, bc_residual(sol, radii=(0.5, 1.0, 2.0)))
    ok = worst < 1e-8
    assert acceptance.record(
        5, "face tractions of random eigenfields vanish to 1e-8", ok,
        f"worst relative face residual = {worst:.2e} over 30 cases")


# ----------------------------------------------------------------------
# 6. governing-equation residuals and finite-difference spot checks
# ----------------------------------------------------------------------

def test_criterion_06_pde_residuals(acceptance):
    rng = random.Random(20240502)
    worst = 0.0
    for mode in ALL_MODES:
        for _ in range(5):
            angle = rng.uniform(90.0, 180.0)
            nu = rng.uniform(0.0, 0.45) if mode.is_plane else 0.3
            p = rng.uniform(1.05, 3.9)
            if mode.is_plane and abs(p - (7.0 - 8.0 * nu)) < 0.1:
                p += 0.2
            members, _ = basis_fields(_case(angle, mode), p,
                                      nu if mode.is_plane else None)
            for member in members:
                worst = max(worst, pde_residual(member, nu).leading)

    # independent numeric route: series derivatives must agree with
    # centered finite differences at second order in the step
    field = eigenfield(_case(180.0, Mode.PLANE_SYM), _mat(0.3),
                       1.5).fields[0]
    u = field.u_r
    du = u.dr()
    r0, th0 = 1.1, 0.7
    ratios = []
    for h in (2e-3,):
        e1 = abs(oracles.fd1(lambda r: u.eval(r, th0), r0, h)
                 - du.eval(r0, th0))
        e2 = abs(oracles.fd1(lambda r: u.eval(r, th0), r0, h / 2.0)
                 - du.eval(r0, th0))
        ratios.append(e1 / e2)
    dth2 = u.dtheta().dtheta()
    e1 = abs(oracles.fd2(lambda t: u.eval(r0, t), th0, 2e-3)
             - dth2.eval(r0, th0))
    e2 = abs(oracles.fd2(lambda t: u.eval(r0, t), th0, 1e-3)
             - dth2.eval(r0, th0))
    ratios.append(e1 / e2)
    fd_ok = all(3.2 < ratio < 4.8 for ratio in ratios)

    ok = worst < 1e-12 and fd_ok
    assert acceptance.record(
        6, "basis fields solve the leading equations; derivatives check "
           "out against finite differences at O(h^2)", ok,
        f"worst leading residual = {worst:.2e}, "
        f"FD error ratios {['%.2f' % r for r in ratios]}")


# ----------------------------------------------------------------------
# 7. face-system singularity exactly on the characteristic zero set
# ----------------------------------------------------------------------

def test_criterion_07_matrix_singularity_matches_roots(acceptance):
    rng = random.Random(20240503)
    cases = []
    for mode in ALL_MODES:
        for angle in (115.7, 148.2, 180.0):
            nu = rng.uniform(0.0, 0.45) if mode.is_plane else None
            cases.append((_case(angle, mode), nu))

    worst_at_root = 0.0
    roots_by_case = []
    for case, nu in cases:
        roots = find_roots(case, nu)
        roots_by_case.append(roots)
        for p in roots:
            worst_at_root = max(
                worst_at_root,
                singular_ratio(case, p, 0.0 if nu is None else nu))

    # p = 1 and p = 2 are polynomial-prefactor zeros of the determinant at
    # every angle (the degree-2 family has identically zero total stress),
    # and the plane third-member rescaling zeroes it at the pole exponent,
    # so genuine non-root draws must stay away from all of those.
    worst_off = math.inf
    accepted = 0
    attempts = 0
    while accepted < 50 and attempts < 5000:
        attempts += 1
        i = rng.randrange(len(cases))
        case, nu = cases[i]
        p = rng.uniform(1.001, 4.0)
        excluded = list(roots_by_case[i]) + [1.0, 2.0]
        if case.mode.is_plane:
            excluded.append(7.0 - 8.0 * nu)
        if min(abs(p - x) for x in excluded) <= 0.05:
            continue
        accepted += 1
        worst_off = min(worst_off,
                        singular_ratio(case, p, 0.0 if nu is None else nu))

    ok = worst_at_root < 1e-6 and worst_off > 1e-4 and accepted == 50
    assert acceptance.record(
        7, "face system is singular exactly at the characteristic roots",
        ok, f"max ratio at roots = {worst_at_root:.2e}, "
            f"min ratio at {accepted} non-roots = {worst_off:.2e}")


# ----------------------------------------------------------------------
# 8. crack closed forms recovered by the general pipeline
# ----------------------------------------------------------------------

def test_criterion_08_crack_closed_form_equivalence(acceptance):
    rng = random.Random(20240504)
    reference_amps = {"I": (0.3, -0.2, 1.1, 0.7),
                      "II": (0.4, 0.9, -0.6),
                      "III": (0.25, 1.3)}
    mode_of = {"I": Mode.PLANE_SYM, "II": Mode.PLANE_ANTI,
               "III": Mode.ANTIPLANE_ODD}
    worst = 0.0
    for label, amps in reference_amps.items():
        mode = mode_of[label]
        nu = 0.3
        mat = _mat(nu, mu=1.0, c=1.0)
        case = _case(180.0, mode)
        points = [PolarPoint(rng.uniform(0.3, 2.0),
                             rng.uniform(-math.pi, math.pi))
                  for _ in range(100)]

        # fit the pipeline's eigenfield + constant-strain basis to the
        # closed-form displacements by least squares, then compare every
        # component at the same points
        columns = list(eigenfield(case, mat, 1.5).fields)
        columns += list(special_p1_solution(case, mat).fields)
        design = np.array([
            [value for pt in points
             for value in (col.u_r.eval(pt.r, pt.theta),
                           col.u_theta.eval(pt.r, pt.theta))]
            if mode.is_plane else
            [col.w.eval(pt.r, pt.theta) for pt in points]
            for col in columns]).T
        refs = [crack_reference_fields(label, amps, mat, pt)
                for pt in points]
        if mode.is_plane:
            rhs = np.array([v for ref in refs
                            for v in (ref["u_r"], ref["u_t"])])
        else:
            rhs = np.array([ref["w"] for ref in refs])
        coefs, *_ = np.linalg.lstsq(design, rhs, rcond=None)

        combined = columns[0].scaled(coefs[0])
        for col, k in zip(columns[1:], coefs[1:]):
            combined = combined + col.scaled(k)
        series = field_series_map(combined, mat)
        if mode.is_plane:
            series.update(total_r_series(combined, mat))

        for pt, ref in zip(points, refs):
            for key, want in ref.items():
                got = series[key].eval(pt.r, pt.theta)
                scale = max(abs(want), series[key].max_abs_coef(), 1.0)
                worst = max(worst, abs(got - want) / scale)
    ok = worst < 1e-10
    assert acceptance.record(
        8, "general pipeline reproduces the crack closed forms", ok,
        f"worst relative error = {worst:.2e} at 100 points x 3 modes")


# ----------------------------------------------------------------------
# 9. dipolar stress is the radial gradient of the monopolar stress
# ----------------------------------------------------------------------

def test_criterion_09_dipolar_is_c_radial_gradient(acceptance):
    pairs_plane = [("m_rrr", "tau_rr"), ("m_rrt", "tau_rt"),
                   ("m_rtt", "tau_tt")]
    pairs_ap = [("m_rrz", "tau_rz"), ("m_rtz", "tau_tz")]
    pool = [
        (180.0, Mode.PLANE_SYM, 0.3, 1.5),
        (180.0, Mode.PLANE_ANTI, 0.2, 1.5),
        (180.0, Mode.ANTIPLANE_ODD, None, 1.5),
        (90.0, Mode.PLANE_SYM, 0.1, 2.0),
        (90.0, Mode.ANTIPLANE_ODD, None, 2.0),
    ]
    worst = 0.0
    for angle, mode, nu, p in pool:
        mat = _mat(nu, mu=1.3, c=1.7)
        sol = eigenfield(_case(angle, mode), mat, p)
        pairs = pairs_plane if mode.is_plane else pairs_ap
        for field in sol.fields:
            tau = monopolar_series(field, mat)
            m = dipolar_series(field, mat)
            for m_key, tau_key in pairs:
                want = tau[tau_key].dr().scaled(mat.c)
                scale = max(want.max_abs_coef(), m[m_key].max_abs_coef())
                if scale == 0.0:
                    continue
                diff = (m[m_key] - want).max_abs_coef()
                worst = max(worst, diff / scale)
    ok = worst < 1e-12
    assert acceptance.record(
        9, "dipolar stress equals c times the radial stress gradient,"
           " term for term", ok, f"worst relative coefficient mismatch = "
                                 f"{worst:.2e}")


# ----------------------------------------------------------------------
# 10. sector equilibrium with corner forces
# ----------------------------------------------------------------------

def test_criterion_10_sector_equilibrium(acceptance):
    rng = random.Random(20240505)
    worst = 0.0

    def residual(report):
        return max(abs(report.sum_fx), abs(report.sum_fy),
                   abs(report.sum_moment)) / report.scale

    for label, mode in [("I", Mode.PLANE_SYM), ("II", Mode.PLANE_ANTI)]:
        amps = (rng.uniform(0.5, 1.5), rng.uniform(-1.0, 1.0))
        nu = 0.3
        mat = _mat(nu)
        case = _case(180.0, mode)
        std = crack_mode_std_amplitudes(label, amps, nu)
        field = solution_from_amplitudes(case, mat, 1.5,
                                         [std]).fields[0]
        for r0 in (0.1, 1.0):
            worst = max(worst, residual(
                check_equilibrium(field, mat, r0, math.pi)))

    case = _case(114.6, Mode.PLANE_SYM)
    mat = _mat(0.3)
    p = smallest_exponents(case, 0.3).p
    field = eigenfield(case, mat, p).combined_field([1.0],
                                                    include_p1=False)
    for r0 in (0.1, 1.0):
        worst = max(worst, residual(
            check_equilibrium(field, mat, r0, case.half_angle_a)))

    std = crack_mode_std_amplitudes("I", (1.0, 0.0), 0.3)
    field = solution_from_amplitudes(_case(180.0, Mode.PLANE_SYM),
                                     _mat(0.3), 1.5, [std]).fields[0]
    corner = edge_forces(field, _mat(0.3), 1.0, math.pi).e_r_a
    corner_err = abs(corner / -7.56688 - 1.0)
    oracle_err = abs(corner - oracles.corner_force_mode1_radial(
        1.0, 0.0, 0.3, r0=1.0))

    ok = worst < 1e-8 and corner_err < 1e-5
    assert acceptance.record(
        10, "force and moment balance with corner forces; pinned corner "
            "value", ok,
        f"worst balance residual = {worst:.2e}, corner value {corner:.6f} "
        f"(off pinned by {corner_err:.1e}, off closed form by "
        f"{oracle_err:.1e})")


# ----------------------------------------------------------------------
# 11. energy scaling and the divergence guard
# ----------------------------------------------------------------------

def test_criterion_11_energy_scaling(acceptance):
    pool = [
        (180.0, Mode.PLANE_SYM, 0.3, 1.5),
        (180.0, Mode.ANTIPLANE_ODD, None, 1.5),
        (90.0, Mode.PLANE_SYM, 0.3, 2.0),
        (90.0, Mode.PLANE_ANTI, 0.2, 2.0),
        (90.0, Mode.ANTIPLANE_ODD, None, 2.0),
    ]
    worst = 0.0
    for angle, mode, nu, p in pool:
        sol = eigenfield(_case(angle, mode), _mat(nu), p)
        scaling = energy_scaling(sol)
        worst = max(worst, abs(scaling.exponent_exact - (2.0 * p - 2.0)),
                    abs(scaling.exponent_estimate - (2.0 * p - 2.0)))

    divergent_raised = False
    sub_unit = solution_from_amplitudes(
        _case(180.0, Mode.ANTIPLANE_ODD), _mat(None), 0.5, [(1.0, 0.5)])
    try:
        energy_scaling(sub_unit)
    except DivergentEnergy:
        divergent_raised = True

    ok = worst < 1e-6 and divergent_raised
    assert acceptance.record(
        11, "sector energy scales as r^(2p-2); exponents below one are "
            "rejected as divergent", ok,
        f"worst exponent error = {worst:.2e}, "
        f"divergence guard raised = {divergent_raised}")


# ----------------------------------------------------------------------
# 12. degree-2 eigenfields carry zero total stress
# ----------------------------------------------------------------------

def test_criterion_12_degree_two_zero_total_stress(acceptance):
    runs = [(90.0, Mode.PLANE_SYM, 0.1), (90.0, Mode.PLANE_SYM, 0.3),
            (90.0, Mode.PLANE_ANTI, 0.1), (90.0, Mode.PLANE_ANTI, 0.3),
            (90.0, Mode.ANTIPLANE_ODD, None),
            (135.0, Mode.PLANE_SYM, 0.3), (135.0, Mode.PLANE_ANTI, 0.3)]
    worst_coef = 0.0
    all_nonzero = True
    for angle, mode, nu in runs:
        mat = _mat(nu)
        sol = eigenfield(_case(angle, mode), mat, 2.0)
        for field in sol.fields:
            u_scale = max(s.max_abs_coef() for s in field.components())
            all_nonzero &= u_scale > 1e-3
            for series in total_theta_series(field, mat).values():
                worst_coef = max(worst_coef, series.max_abs_coef())
    ok = worst_coef < 1e-14 and all_nonzero
    assert acceptance.record(
        12, "degree-2 eigenfields have identically zero total "
            "theta-tractions", ok,
        f"largest total-traction coefficient = {worst_coef:.2e} across "
        f"{len(runs)} cases")
