"""Root scanning for the characteristic brackets.

The wedge brackets are transcendental with a mix of simple (sign-change)
roots and even-multiplicity roots where the function touches zero without
crossing — at the crack and half-space limits every in-plane root is of the
latter type, and near those limits touch roots split into pairs of simple
roots closer together than any practical grid. The scanner therefore
combines three detectors on a uniform grid: exact grid zeros, bracketed
sign changes (polished with Brent), and interior local minima of |f| with
no grid sign change. The last are resolved by a finer sub-grid (crossing
pairs), then by bounded minimization polished with a bracketed root find
on the centered difference of f (the derivative crosses zero at an even
root). Even-multiplicity candidates are accepted only if the refined |f|
is below 1e-10 of the grid scale; accepted and rejected candidates both
emit a NoSignChange warning.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq, minimize_scalar

from .charfn import char_bracket
from .model import WedgeCase

__all__ = [
    "RootScanOptions",
    "NoSignChange",
    "NoRootFound",
    "AdmissibleRoot",
    "ExponentSummary",
    "find_roots",
    "admissible_eigenvalues",
    "smallest_exponents",
]

# local-minimum candidate filter and acceptance threshold, relative to the
# grid scale max(1, max|f|)
_CANDIDATE_REL = 1e-3
_ACCEPT_REL = 1e-10
_FD_STEP = 1e-6


class NoSignChange(UserWarning):
    """A bracket touched zero (or dipped) without changing sign."""

    def __init__(self, p_approx, f_value, accepted):
        self.p_approx = p_approx
        self.f_value = f_value
        self.accepted = accepted
        what = ("even-multiplicity root accepted"
                if accepted else "positive local minimum rejected")
        super().__init__(f"{what} near p = {p_approx:.12g} (|f| = {abs(f_value):.3e})")


class NoRootFound(Exception):
    """No admissible bracket root exists in the scanned interval."""


@dataclass(frozen=True)
class RootScanOptions:
    """Scan window and tolerances for find_roots.

    The window opens just above p = 1 because every bracket vanishes at
    p = 1 for every wedge angle (the constant-strain solution is handled
    separately, not by scanning).
    """

    p_min: float = 1.0 + 1e-6
    p_max: float = 4.0
    grid_step: float = 1e-3
    refine_tol: float = 1e-12
    cluster_merge: float = 1e-9


@dataclass(frozen=True)
class AdmissibleRoot:
    """One entry of the admissible-exponent list."""

    p: float
    kind: str          # "special_p1" | "bracket_root"
    admissible: bool
    reason: str


@dataclass(frozen=True)
class ExponentSummary:
    """Leading exponent p with the derived field growth rates.

    Displacements grow like r**p, strains and monopolar stresses like
    r**(p-1), dipolar stresses like r**(p-2), total stresses like r**(p-3).
    """

    p: float
    exp_monopolar: float
    exp_dipolar: float
    exp_total: float

    @classmethod
    def from_p(cls, p: float) -> "ExponentSummary":
        return cls(p=p, exp_monopolar=p - 1.0, exp_dipolar=p - 2.0,
                   exp_total=p - 3.0)


def find_roots(case: WedgeCase, nu=None, options: RootScanOptions | None = None):
    """All bracket roots in (p_min, p_max], sorted ascending.

    Roots are refined to interval width below refine_tol and merged within
    cluster_merge. NoSignChange warnings are emitted for even-multiplicity
    roots and for rejected no-sign-change local minima.
    """
    opts = options or RootScanOptions()
    if not opts.p_max > opts.p_min:
        raise ValueError("p_max must exceed p_min")

    def f(p):
        return float(char_bracket(p, case, nu))

    step = opts.grid_step
    n = int(round((opts.p_max - opts.p_min) / step))
    n = max(n, 2)
    # two extra cells past p_max so endpoint roots are still bracketed
    grid = opts.p_min + step * np.arange(n + 3)
    vals = np.asarray(char_bracket(grid, case, nu), dtype=float)
    in_window = grid <= opts.p_max + opts.cluster_merge
    scale = max(1.0, float(np.max(np.abs(vals[in_window]))))

    found = []

    # exact zeros on the grid
    for i in np.nonzero(vals == 0.0)[0]:
        found.append(float(grid[i]))

    # bracketed sign changes
    for i in np.nonzero(vals[:-1] * vals[1:] < 0.0)[0]:
        root = brentq(f, float(grid[i]), float(grid[i + 1]),
                      xtol=opts.refine_tol, rtol=4.0 * np.finfo(float).eps)
        found.append(float(root))

    # no-sign-change candidates: interior local minima of |f|
    absv = np.abs(vals)
    interior = np.arange(1, len(grid) - 1)
    is_min = (absv[interior] <= absv[interior - 1]) & (absv[interior] <= absv[interior + 1])
    same_sign = (np.sign(vals[interior - 1]) == np.sign(vals[interior])) \
        & (np.sign(vals[interior]) == np.sign(vals[interior + 1]))
    small = absv[interior] < _CANDIDATE_REL * scale
    for i in interior[is_min & same_sign & small]:
        roots, note = _refine_candidate(
            f, float(grid[i - 1]), float(grid[i + 1]), step, scale, opts)
        if note is not None:
            warnings.warn(NoSignChange(*note), stacklevel=2)
        found.extend(roots)

    found = [p for p in found if opts.p_min < p <= opts.p_max + opts.cluster_merge]
    return _merge_clusters(sorted(found), opts.cluster_merge, f)


_SUBGRID = 81


def _refine_candidate(f, lo, hi, step, scale, opts):
    """Resolve the structure behind a dip of |f| with no grid sign change.

    Three outcomes, in order of trial:

    * the dip hides a sign excursion narrower than the grid step — a pair
      of nearby simple roots: a finer sub-grid (or the bracketed sign of f
      at its interior extremum) exposes the crossings, and both roots are
      polished with Brent (no warning: these are ordinary roots); pairs
      tighter than about (hi - lo) / 80 that are not yet exact touches are
      beyond the resolution and reported only via the rejection warning;
    * the refined extremum has |f| at the roundoff floor — an
      even-multiplicity touch root, accepted with a NoSignChange warning;
    * otherwise a genuinely positive dip, rejected with a warning.

    Returns (roots, warning_args_or_None).
    """
    rtol = 4.0 * np.finfo(float).eps

    # sub-grid sweep for crossings hidden inside the cells; a crossing is
    # trusted only if both cell ends are clearly above the roundoff floor
    xs = np.linspace(lo, hi, _SUBGRID)
    fv = np.array([f(x) for x in xs])
    floor = _ACCEPT_REL * scale * 1e-2
    cells = np.nonzero((fv[:-1] * fv[1:] < 0.0)
                       & (np.abs(fv[:-1]) > floor)
                       & (np.abs(fv[1:]) > floor))[0]
    if len(cells):
        roots = [float(brentq(f, float(xs[i]), float(xs[i + 1]),
                              xtol=opts.refine_tol, rtol=rtol))
                 for i in cells]
        return roots, None

    # bounded |f| minimization, then polish via the bracketed zero of the
    # centered-difference derivative (an even root is a derivative zero)
    res = minimize_scalar(lambda x: abs(f(x)), bounds=(lo, hi),
                          method="bounded", options={"xatol": 1e-13})
    x0 = float(res.x)

    def g(x):
        return (f(x + _FD_STEP) - f(x - _FD_STEP)) / (2.0 * _FD_STEP)

    if g(x0 - step) * g(x0 + step) < 0.0:
        x0 = float(brentq(g, x0 - step, x0 + step, xtol=1e-14, rtol=rtol))
    f0 = f(x0)
    if abs(f0) < _ACCEPT_REL * scale:
        return [x0], (x0, f0, True)
    if f0 * f(lo) < 0.0:
        # extremum overshoots zero: a crossing pair after all
        roots = [float(brentq(f, lo, x0, xtol=opts.refine_tol, rtol=rtol)),
                 float(brentq(f, x0, hi, xtol=opts.refine_tol, rtol=rtol))]
        return roots, None
    return [], (x0, f0, False)


def _merge_clusters(roots, merge_tol, f):
    """Merge refined roots closer than merge_tol, keeping the best |f|."""
    out = []
    group = []
    for p in roots:
        if group and p - group[-1] > merge_tol:
            out.append(min(group, key=lambda x: abs(f(x))))
            group = []
        group.append(p)
    if group:
        out.append(min(group, key=lambda x: abs(f(x))))
    return out


def admissible_eigenvalues(case: WedgeCase, nu=None,
                           options: RootScanOptions | None = None):
    """Admissible exponents: the p = 1 special solution, then bracket roots.

    The constant-strain p = 1 solution exists for every wedge angle (its
    gradient stresses vanish identically, so it satisfies the complete
    field equations, and it carries bounded energy). Bracket roots at or
    below p = 1 — possible only with a user-lowered p_min — are reported
    but flagged inadmissible.
    """
    entries = [AdmissibleRoot(p=1.0, kind="special_p1", admissible=True,
                              reason="constant-strain solution valid for "
                                     "every wedge angle")]
    for p in find_roots(case, nu, options):
        if p > 1.0:
            entries.append(AdmissibleRoot(p=p, kind="bracket_root",
                                          admissible=True,
                                          reason="bracket root with bounded "
                                                 "energy (p > 1)"))
        else:
            entries.append(AdmissibleRoot(p=p, kind="bracket_root",
                                          admissible=False,
                                          reason="unbounded energy"))
    return entries


def smallest_exponents(case: WedgeCase, nu=None,
                       options: RootScanOptions | None = None) -> ExponentSummary:
    """Exponent summary for the smallest admissible bracket root."""
    for entry in admissible_eigenvalues(case, nu, options):
        if entry.kind == "bracket_root" and entry.admissible:
            return ExponentSummary.from_p(entry.p)
    raise NoRootFound(
        f"no admissible bracket root for mode {case.mode.value} at "
        f"half-angle {case.half_angle_a:.6g}")
