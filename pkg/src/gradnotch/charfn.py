"""Characteristic functions for the wedge eigenvalue problem.

For each loading mode the vanishing of a transcendental "bracket" function
of the exponent p selects the admissible power-law solutions. The full
characteristic function is the bracket times a polynomial prefactor whose
roots (p = 1, p = 2) correspond to degenerate basis configurations rather
than genuine eigenvalues, so root scanning operates on the bracket alone.

All functions are vectorized over p.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .model import Mode, WedgeCase

__all__ = [
    "CharKind",
    "char_plane_sym",
    "char_plane_anti",
    "char_antiplane",
    "prefactor_plane",
    "prefactor_antiplane",
    "char_bracket",
    "char_full",
]


class CharKind(Enum):
    """Tags naming each characteristic-function flavor."""

    PLANE_SYM_BRACKET = "plane-sym-bracket"
    PLANE_ANTI_BRACKET = "plane-anti-bracket"
    ANTIPLANE_BRACKET = "antiplane-bracket"
    PLANE_SYM_FULL = "plane-sym-full"
    PLANE_ANTI_FULL = "plane-anti-full"
    ANTIPLANE_FULL = "antiplane-full"


def char_plane_sym(p, a, nu):
    """Bracket whose zeros are the symmetric in-plane exponents.

    At a = pi it reduces to 2(5-4nu)(1 - cos 4 pi p) >= 0 and at a = pi/2 to
    2(5-4nu)(1 - cos 2 pi p) >= 0, so every root at those angles is a
    no-sign-change (even multiplicity) root.
    """
    p = np.asarray(p, dtype=float)
    q = p - 1.0
    part = 2.0 * q * (np.cos(2.0 * q * a) + np.cos(4.0 * a) - 1.0)
    part -= (p - 2.0) * np.cos(2.0 * (p + 1.0) * a)
    part -= p * np.cos(2.0 * (p - 3.0) * a)
    out = q * part + 2.0 * (5.0 - 4.0 * nu) * (1.0 - np.cos(4.0 * q * a))
    return out if out.ndim else float(out)


def char_plane_anti(p, a, nu):
    """Bracket whose zeros are the anti-symmetric in-plane exponents.

    At a = pi it reduces to -2(5-4nu)(1 - cos 4 pi p) <= 0 and at a = pi/2
    to -2(5-4nu)(1 - cos 2 pi p) <= 0; zero sets coincide with the
    symmetric bracket at those two angles.
    """
    p = np.asarray(p, dtype=float)
    q = p - 1.0
    part = 2.0 * q * (np.cos(2.0 * q * a) - np.cos(4.0 * a) + 1.0)
    part -= (p - 2.0) * np.cos(2.0 * (p + 1.0) * a)
    part -= p * np.cos(2.0 * (p - 3.0) * a)
    out = q * part - 2.0 * (5.0 - 4.0 * nu) * (1.0 - np.cos(4.0 * q * a))
    return out if out.ndim else float(out)


def char_antiplane(p, a):
    """Bracket whose zeros are the anti-plane (odd) exponents.

    Reduces to 3 sin(2 pi p) at a = pi and to -3 sin(pi p) at a = pi/2;
    simple roots at both limits.
    """
    p = np.asarray(p, dtype=float)
    out = (p - 1.0) * np.sin(2.0 * a) + 3.0 * np.sin(2.0 * (p - 1.0) * a)
    return out if out.ndim else float(out)


def prefactor_plane(p):
    """Polynomial prefactor (p-1)^4 (p-2)^2 of the full plane functions."""
    p = np.asarray(p, dtype=float)
    out = (p - 1.0) ** 4 * (p - 2.0) ** 2
    return out if out.ndim else float(out)


def prefactor_antiplane(p):
    """Polynomial prefactor (p-1)^2 (p-2) of the full anti-plane function."""
    p = np.asarray(p, dtype=float)
    out = (p - 1.0) ** 2 * (p - 2.0)
    return out if out.ndim else float(out)


def char_bracket(p, case: WedgeCase, nu=None):
    """Dispatch to the bracket function for the case's mode."""
    a = case.half_angle_a
    if case.mode is Mode.PLANE_SYM:
        return char_plane_sym(p, a, _require_nu(nu))
    if case.mode is Mode.PLANE_ANTI:
        return char_plane_anti(p, a, _require_nu(nu))
    return char_antiplane(p, a)


def char_full(p, case: WedgeCase, nu=None):
    """Bracket times polynomial prefactor (the complete determinant form)."""
    bracket = char_bracket(p, case, nu)
    if case.mode.is_plane:
        return prefactor_plane(p) * bracket
    return prefactor_antiplane(p) * bracket


def _require_nu(nu):
    if nu is None:
        raise ValueError("plane modes require a Poisson ratio")
    return float(nu)
