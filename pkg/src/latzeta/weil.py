"""Weil's elliptic functions E_k(a, W) and the Eisenstein series G_k(W).

Two independent evaluation routes:

* ``weil_direct``: iterated lattice summation, inner index first with
  symmetric limits (the Eisenstein summation convention, which also
  defines the conditionally convergent cases k = 1, 2).  Rows are summed
  with +/-n pairing and Richardson acceleration; row pairs +/-m decay
  exponentially once the inner sums are accurate, so the outer sum
  terminates quickly.
* ``weil_integral``: the integral representation J1 + J2 + J3 obtained
  from the two-dimensional Euler-MacLaurin formula: a full-line integral
  along the two edges y0 +/- eps of the excluded band around the pole
  row, plus two half-strip double integrals above and below the band.
  Only supported for k >= 3 (the 2-D pieces are not absolutely
  convergent below that).

(x0, y0) are the lattice coordinates of -a; when y0 falls on an integer
row no band of width < 1 can exclude that row from both strips, so the
dropped row is summed directly (the pole then lies on that row's line,
which rules out integrating along it) and reported as
``row_correction``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bernoulli import p1
from .errors import PointOnLattice, PoleHit, SlowConvergence, UnsupportedDecay
from .lattice import Lattice, lattice_coordinates
from .quadrature import (
    LineMode,
    _accelerate,
    integrate_half_strip,
    integrate_line,
)

#: lattice-coordinate distance below which a counts as a lattice point
LATTICE_POINT_TOL = 1e-9

_ROW_N_CAP = 1 << 21
_ROW_M_CAP = 2048


@dataclass(frozen=True)
class WeilParams:
    lat: Lattice
    a: complex
    k: int

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        if not (isinstance(self.k, (int, np.integer)) and self.k >= 1):
            raise ValueError(f"k must be an integer >= 1, got {self.k}")
        object.__setattr__(self, "k", int(self.k))
        c = lattice_coordinates(self.lat, -self.a)
        if (
            abs(c.x0 - round(c.x0)) <= LATTICE_POINT_TOL
            and abs(c.y0 - round(c.y0)) <= LATTICE_POINT_TOL
        ):
            raise PointOnLattice(f"a = {self.a} lies on the lattice")


@dataclass(frozen=True)
class WeilReport:
    value: complex
    method: str  # "direct" | "integral"
    err: float
    j1: complex = 0j
    j2: complex = 0j
    j3: complex = 0j
    eps_used: float = 0.0
    row_correction: complex = 0j


def weil_integrand(p: WeilParams, x: float, y: float):
    """Closed-form integrand values at (x, y): the function
    1/(a + x w1 + y w2)^k and its first and mixed partials.

    Integer powers are taken on the complex base directly (no logarithms,
    hence no branch ambiguity)."""
    w1, w2, k = p.lat.w1, p.lat.w2, p.k
    base = p.a + x * w1 + y * w2
    if abs(base) <= 1e-12:
        raise PoleHit(f"evaluation at (x, y) = ({x}, {y}) hits the pole")
    inv_k = base ** (-k)
    inv_k1 = base ** (-(k + 1))
    f = inv_k
    df_dx = -k * w1 * inv_k1
    df_dy = -k * w2 * inv_k1
    d2f_dxdy = k * (k + 1) * w1 * w2 * base ** (-(k + 2))
    return f, df_dx, df_dy, d2f_dxdy


def _row_sum(c: complex, w1: complex, k: int, tol: float):
    """Sum of (c + n w1)^(-k) over all integers n, as the symmetric limit.

    Terms are paired n, -n (which reproduces the symmetric partial sums
    exactly) and the N-doubling partial sums are extrapolated; the paired
    tail has a smooth 1/N expansion, so this converges for every k >= 1."""
    partial = complex(c ** (-k))
    levels = []
    prev_n = 0
    n_hi = 256
    while n_hi <= _ROW_N_CAP:
        n = np.arange(prev_n + 1, n_hi + 1, dtype=float)
        partial += complex(np.sum((c + n * w1) ** (-k) + (c - n * w1) ** (-k)))
        levels.append(partial)
        est, inc = _accelerate(levels)
        if inc <= tol:
            return est, inc
        prev_n, n_hi = n_hi, 2 * n_hi
    raise SlowConvergence(f"row sum at c = {c} did not converge to {tol}", best=partial)


def weil_direct(p: WeilParams, tol: float = 1e-10) -> WeilReport:
    """E_k(a, W) by Eisenstein summation: inner symmetric sums over n,
    then the outer symmetric sum over m."""
    w1, w2 = p.lat.w1, p.lat.w2
    row_tol = tol / 64
    value, err = _row_sum(p.a, w1, p.k, row_tol)
    pair_tol = tol / 8
    small_streak = 0
    m = 1
    while m <= _ROW_M_CAP:
        up, e_up = _row_sum(p.a + m * w2, w1, p.k, row_tol)
        dn, e_dn = _row_sum(p.a - m * w2, w1, p.k, row_tol)
        pair = up + dn
        value += pair
        err += e_up + e_dn
        # outer row pairs decay exponentially; two consecutive small pairs
        # bound the remaining tail comfortably
        if abs(pair) < pair_tol:
            small_streak += 1
            if small_streak >= 2 and m >= 4:
                err += 2 * abs(pair)
                break
        else:
            small_streak = 0
        m += 1
    else:
        raise SlowConvergence(
            f"outer Eisenstein sum did not settle within {_ROW_M_CAP} rows"
        )
    return WeilReport(value=value, method="direct", err=err)


def eisenstein_series(lat: Lattice, k: int, tol: float = 1e-10) -> complex:
    """G_k(W): sum of w^(-k) over nonzero lattice points, k >= 3."""
    if not (isinstance(k, (int, np.integer)) and k >= 3):
        raise UnsupportedDecay("eisenstein_series requires integer k >= 3")
    w1, w2 = lat.w1, lat.w2
    row_tol = tol / 64
    if k % 2 == 1:
        value = 0j  # the n <-> -n pairing cancels exactly on the m = 0 row
        err = 0.0
    else:
        # m = 0 row without the origin: paired sum of (n w1)^(-k)
        levels = []
        partial = 0j
        prev_n, n_hi = 0, 256
        while True:
            n = np.arange(prev_n + 1, n_hi + 1, dtype=float)
            partial += complex(np.sum(2.0 * (n * w1) ** (-float(k))))
            levels.append(partial)
            est, inc = _accelerate(levels)
            if inc <= row_tol:
                value, err = est, inc
                break
            if n_hi > _ROW_N_CAP:
                raise SlowConvergence("central row of G_k did not converge")
            prev_n, n_hi = n_hi, 2 * n_hi
    pair_tol = tol / 8
    small_streak = 0
    m = 1
    while m <= _ROW_M_CAP:
        up, e_up = _row_sum(m * w2, w1, k, row_tol)
        dn, e_dn = _row_sum(-m * w2, w1, k, row_tol)
        pair = up + dn
        value += pair
        err += e_up + e_dn
        if abs(pair) < pair_tol:
            small_streak += 1
            if small_streak >= 2 and m >= 4:
                break
        else:
            small_streak = 0
        m += 1
    else:
        raise SlowConvergence(f"G_k outer sum did not settle within {_ROW_M_CAP} rows")
    return value


def _choose_eps(y0: float, eps: float):
    """Adjust eps so the open-closed band (y0 - eps, y0 + eps] contains no
    integer, or flag the integer row that cannot be avoided.

    Returns (eps_used, integer_row or None)."""
    nearest = round(y0)
    d = abs(y0 - nearest)
    if d <= LATTICE_POINT_TOL:
        # no band of half-width < 1 can exclude this row; cap eps so no
        # second integer enters and sum the row separately
        return min(eps, 0.45), int(nearest)
    d_up = math.floor(y0) + 1 - y0
    d_down = y0 - math.floor(y0)
    limit = min(d_up, d_down)
    if eps < limit:
        return eps, None
    return 0.9 * limit, None


def weil_integral(p: WeilParams, eps: float = 0.25, tol: float = 1e-8) -> WeilReport:
    """E_k(a, W) via the integral representation J1 + J2 + J3 (k >= 3)."""
    if p.k <= 2:
        raise UnsupportedDecay(
            "the 2-D integrals are not absolutely convergent for k <= 2; "
            "use weil_direct (Eisenstein summation)"
        )
    if not 0 < eps < 0.5:
        raise ValueError("eps must lie in (0, 1/2)")
    w1, w2, a, k = p.lat.w1, p.lat.w2, p.a, p.k
    coords = lattice_coordinates(p.lat, -a)
    x0, y0 = coords.x0, coords.y0
    eps_used, missed_row = _choose_eps(y0, eps)
    y_up = y0 + eps_used
    y_dn = y0 - eps_used
    part_tol = tol / 4

    def base(x, y):
        return a + x * w1 + y * w2

    # edge integrals along y0 +/- eps, with the P1(x)-weighted derivative
    # correction from the strips' boundary terms
    p1_up = p1(y_up)
    p1_dn = p1(y_dn)

    def edge_integrand(x):
        b_up = base(x, y_up)
        b_dn = base(x, y_dn)
        return (
            b_up ** (-k) * p1_up
            - b_dn ** (-k) * p1_dn
            + k * w1 * b_dn ** (-(k + 1)) * p1(x) * p1_dn
            - k * w1 * b_up ** (-(k + 1)) * p1(x) * p1_up
        )

    q1 = integrate_line(
        edge_integrand, LineMode.ABSOLUTE, decay_order=float(k), tol=part_tol
    )

    def strip_integrand(x, y):
        b = base(x, y)
        inv_k1 = b ** (-(k + 1))
        return (
            b ** (-k)
            - k * w1 * inv_k1 * p1(x)
            - k * w2 * inv_k1 * p1(y)
            + k * (k + 1) * w1 * w2 * b ** (-(k + 2)) * p1(x) * p1(y)
        )

    def pole_distance(x, y):
        return abs(base(x, y))

    q2 = integrate_half_strip(
        strip_integrand,
        y_up,
        "up",
        decay_order=float(k),
        tol=part_tol,
        hot_x=x0,
        pole=pole_distance,
    )
    q3 = integrate_half_strip(
        strip_integrand,
        y_dn,
        "down",
        decay_order=float(k),
        tol=part_tol,
        hot_x=x0,
        pole=pole_distance,
    )

    row_correction = 0j
    row_err = 0.0
    if missed_row is not None:
        # the pole sits on this row's line, so the row cannot go through the
        # 1-D integral identity; its lattice points are summed directly
        row_correction, row_err = _row_sum(a + missed_row * w2, w1, k, part_tol)

    value = q1.value + q2.value + q3.value + row_correction
    err = q1.err + q2.err + q3.err + row_err
    return WeilReport(
        value=value,
        method="integral",
        err=err,
        j1=q1.value,
        j2=q2.value,
        j3=q3.value,
        eps_used=eps_used,
        row_correction=row_correction,
    )
