"""Independent oracles used by the test suite.

Everything in this module is written directly from closed-form expressions
and elementary numerics, without importing the package under test, so that
test comparisons are made against a genuinely independent code path:

- a plain bisection root finder and second transcriptions of the three
  characteristic bracket functions;
- closed-form crack-tip corner forces and arc tractions for the symmetric
  and anti-symmetric in-plane crack modes;
- the u_theta/u_r coupling ratio of the third plane basis member;
- centered finite-difference derivative helpers;
- adaptive quadrature (scipy.integrate.quad) for arc resultants.
"""

import math

from scipy.integrate import quad


# ----------------------------------------------------------------------
# root finding
# ----------------------------------------------------------------------

def bisect(f, lo, hi, tol=1e-14, maxit=200):
    """Plain bisection for a sign-changing root of f on [lo, hi]."""
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0:
        raise ValueError("no sign change on [%g, %g]" % (lo, hi))
    for _ in range(maxit):
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if fmid == 0.0 or hi - lo < tol:
            return mid
        if flo * fmid < 0:
            hi, fhi = mid, fmid
        else:
            lo, flo = mid, fmid
    return 0.5 * (lo + hi)


def min_of_abs(f, lo, hi, n=20001):
    """Coarse grid minimizer of |f| on [lo, hi] followed by golden-section."""
    xs = [lo + (hi - lo) * i / (n - 1) for i in range(n)]
    vals = [abs(f(x)) for x in xs]
    i = vals.index(min(vals))
    a = xs[max(i - 1, 0)]
    b = xs[min(i + 1, n - 1)]
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = abs(f(c)), abs(f(d))
    for _ in range(200):
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = abs(f(c))
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = abs(f(d))
        if b - a < 1e-13:
            break
    return 0.5 * (a + b)


# ----------------------------------------------------------------------
# characteristic brackets (independent transcription)
# ----------------------------------------------------------------------

def bracket_plane_sym(p, a, nu):
    q = p - 1.0
    part = 2.0 * q * (math.cos(2.0 * q * a) + math.cos(4.0 * a) - 1.0)
    part -= (p - 2.0) * math.cos(2.0 * (p + 1.0) * a)
    part -= p * math.cos(2.0 * (p - 3.0) * a)
    return q * part + 2.0 * (5.0 - 4.0 * nu) * (1.0 - math.cos(4.0 * q * a))


def bracket_plane_anti(p, a, nu):
    q = p - 1.0
    part = 2.0 * q * (math.cos(2.0 * q * a) - math.cos(4.0 * a) + 1.0)
    part -= (p - 2.0) * math.cos(2.0 * (p + 1.0) * a)
    part -= p * math.cos(2.0 * (p - 3.0) * a)
    return q * part - 2.0 * (5.0 - 4.0 * nu) * (1.0 - math.cos(4.0 * q * a))


def bracket_antiplane(p, a):
    return (p - 1.0) * math.sin(2.0 * a) + 3.0 * math.sin(2.0 * (p - 1.0) * a)


def antiplane_root(a, lo=1.0 + 1e-6, hi=2.5):
    """Smallest sign-changing zero of the anti-plane bracket above p = 1."""
    n = 4000
    prev_x, prev_f = lo, bracket_antiplane(lo, a)
    for i in range(1, n + 1):
        x = lo + (hi - lo) * i / n
        fx = bracket_antiplane(x, a)
        if prev_f * fx <= 0.0:
            return bisect(lambda p: bracket_antiplane(p, a), prev_x, x)
        prev_x, prev_f = x, fx
    raise ValueError("no root found")


# ----------------------------------------------------------------------
# crack-tip closed forms (symmetric mode I / anti-symmetric mode II)
# ----------------------------------------------------------------------

def corner_force_mode1_radial(a1, a2, nu, mu=1.0, c=1.0, r0=1.0):
    """Radial corner force at the upper crack face for the symmetric mode."""
    return (-12.0 * c * mu / ((41.0 - 32.0 * nu) * math.sqrt(r0))
            * (a1 * (27.0 - 24.0 * nu) + a2 * (14.0 - 8.0 * nu)))


def corner_force_mode2_tangential(b1, b2, nu, mu=1.0, c=1.0, r0=1.0):
    """Tangential corner force at the upper crack face, anti-symmetric mode."""
    return (3.0 * c * mu / (2.0 * (1.0 - 2.0 * nu) * math.sqrt(r0))
            * (b1 - b2 * 2.0 * (64.0 * nu**2 - 88.0 * nu + 29.0)
               / (37.0 - 32.0 * nu)))


def mode1_arc_tractions(theta, a1, a2, nu, mu=1.0, c=1.0, r0=1.0):
    """(t_rr, t_rt) on the arc r = r0 for the symmetric crack mode."""
    d = 41.0 - 32.0 * nu
    f = 3.0 * c * mu * r0**-1.5 / (4.0 * d)
    h1, h3, h5 = theta / 2.0, 3.0 * theta / 2.0, 5.0 * theta / 2.0
    t_rr = f * a1 * ((147.0 - 32.0 * nu) * math.cos(h3) + d * math.cos(h1))
    t_rr += f * a2 * ((123.0 - 96.0 * nu) * math.cos(h5)
                      - (147.0 - 32.0 * nu) * math.cos(h3))
    t_rt = f * a1 * ((43.0 + 32.0 * nu) * math.sin(h3)
                     + (451.0 - 352.0 * nu) * math.sin(h1))
    t_rt -= f * a2 * ((123.0 - 96.0 * nu) * math.sin(h5)
                      + (43.0 + 32.0 * nu) * math.sin(h3))
    return t_rr, t_rt


def mode2_arc_tractions(theta, b1, b2, nu, mu=1.0, c=1.0, r0=1.0):
    """(t_rr, t_rt) on the arc r = r0 for the anti-symmetric crack mode."""
    d = 37.0 - 32.0 * nu
    f = 3.0 * mu * c * r0**-1.5 / (4.0 * d)
    g = 3.0 * c * mu * r0**-1.5 / (1.0 - 2.0 * nu)
    h1, h3, h5 = theta / 2.0, 3.0 * theta / 2.0, 5.0 * theta / 2.0
    t_rr = f * b2 * ((10.0 - 28.0 * nu) / (1.0 - 2.0 * nu) * math.sin(h1)
                     + 3.0 * d * math.sin(h5)
                     - (147.0 - 32.0 * nu) * math.sin(h3))
    t_rr += 0.5 * g * b1 * math.sin(h1)
    t_rt = f * b2 * ((16.0 - 28.0 * nu) / (1.0 - 2.0 * nu) * math.cos(h1)
                     + 3.0 * d * math.cos(h5)
                     + (43.0 + 32.0 * nu) * math.cos(h3))
    t_rt -= 0.25 * g * b1 * math.cos(h1)
    return t_rr, t_rt


def mode3_crack_total_traction(theta, d_amp, mu=1.0, c=1.0, r0=1.0):
    """t_tz on the arc r = r0 for the anti-plane crack mode."""
    return (mu * c * d_amp / 8.0 * r0**-1.5
            * (5.0 * math.cos(1.5 * theta) + 7.0 * math.cos(0.5 * theta)))


def utheta_ratio(p, nu):
    """u_theta/u_r coupling factor K of the third plane basis member."""
    return (p + 5.0 - 8.0 * nu) / (p - 7.0 + 8.0 * nu)


# ----------------------------------------------------------------------
# numerics
# ----------------------------------------------------------------------

def fd1(f, x, h):
    """Centered first derivative, O(h^2)."""
    return (f(x + h) - f(x - h)) / (2.0 * h)


def fd2(f, x, h):
    """Centered second derivative, O(h^2)."""
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)


def quad_arc(f, a, tol=1e-12):
    """Adaptive quadrature of f(theta) over [-a, a]."""
    val, _err = quad(f, -a, a, epsabs=tol, epsrel=tol, limit=400)
    return val
