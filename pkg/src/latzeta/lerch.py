"""Hurwitz-Lerch zeta by direct series and by Coffey's integral
representation, with Hurwitz and Riemann zeta as specializations.

The series sum_{n>=0} z^n / (a+n)^s converges for |z| < 1 (any s) and for
|z| = 1 with Re(s) > 1.  The integral representation evaluates

    1/a^s + z/(2 (a+1)^s)
        + int_1^inf z^x / (x+a)^s dx
        + int_1^inf [z^x ln z / (x+a)^s - s z^x / (x+a)^{s+1}] P1(x) dx

with z^x = exp(x Log z) on the principal branch.  The integral path is
deliberately restricted to Re(a) > 0 and z off the cut (-inf, 0] (and to
z = 1 exactly on the unit circle) so that all branches are unambiguous
and the two methods are directly comparable.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .bernoulli import p1
from .errors import DomainError, SlowConvergence
from .quadrature import integrate_ray, integrate_segment, vectorize1

SERIES_TERM_BUDGET = 10**8
_CHUNK = 1 << 16


@dataclass(frozen=True)
class LerchParams:
    z: complex
    s: complex
    a: complex

    def __post_init__(self):
        object.__setattr__(self, "z", complex(self.z))
        object.__setattr__(self, "s", complex(self.s))
        object.__setattr__(self, "a", complex(self.a))
        a = self.a
        if a.real <= 0.5 and abs(a.imag) < 1e-9:
            nearest = round(a.real)
            if nearest <= 0 and abs(a.real - nearest) <= 1e-9:
                raise DomainError(f"a = {a} is (nearly) a non-positive integer")
        r = abs(self.z)
        if r > 1 + 1e-12:
            raise DomainError(f"|z| = {r} > 1 is outside the convergence region")
        if abs(r - 1) <= 1e-12 and self.s.real <= 1:
            raise DomainError("|z| = 1 requires Re(s) > 1")

    def require_integral_path(self):
        """Extra restrictions for the integral representation."""
        if self.a.real <= 0:
            raise DomainError("integral representation requires Re(a) > 0")
        z = self.z
        if z == 0:
            raise DomainError("integral representation requires z != 0")
        if z.imag == 0 and z.real < 0:
            raise DomainError("z on the branch cut (-inf, 0]")
        if abs(abs(z) - 1) <= 1e-12 and z != 1:
            raise DomainError("on the unit circle only z = 1 is supported")


def lerch_series(p: LerchParams, tol: float = 1e-10) -> complex:
    """Partial sums of the defining series until a tail bound is below tol.

    |z| < 1 uses the geometric tail bound; |z| = 1 uses comparison with
    the tail integral of (x - |a|)^(-Re s)."""
    z, s, a = p.z, p.s, p.a
    r = abs(z)
    if r == 0:
        return a ** (-s)  # 0^0 == 1: only the n = 0 term survives
    sigma = s.real
    # real parameters at z = 1 take the pure-real power path: it is several
    # times faster, which matters when the integral-comparison bound needs
    # ~1e8 terms
    real_path = z == 1 and s.imag == 0 and a.imag == 0
    total = 0j
    n0 = 0
    while n0 < SERIES_TERM_BUDGET:
        hi = min(n0 + _CHUNK, SERIES_TERM_BUDGET)
        n = np.arange(n0, hi, dtype=float)
        if real_path:
            total += complex(np.sum((a.real + n) ** (-sigma)))
        else:
            total += complex(np.sum(z**n * (a + n) ** (-s)))
        n0 = hi
        last = n0 - 1
        if r < 1 - 1e-12:
            denom = max(abs(a + last), 1e-9)
            tail = r ** (last + 1) / ((1.0 - r) * denom**sigma)
        else:
            edge = last + 1 - abs(a)
            tail = math.inf if edge <= 1 else edge ** (1.0 - sigma) / (sigma - 1.0)
        if tail < tol:
            return total
    raise SlowConvergence(
        f"series needs more than {SERIES_TERM_BUDGET} terms for tol {tol}", best=total
    )


def lerch_coffey(p: LerchParams, tol: float = 1e-10) -> complex:
    """Coffey's integral representation on the principal branches."""
    p.require_integral_path()
    z, s, a = p.z, p.s, p.a
    head = a ** (-s) + z / (2.0 * (a + 1.0) ** s)
    log_z = cmath.log(z)
    sigma = s.real

    def zpow(x):
        return np.exp(np.asarray(x, float) * log_z)

    def plain(x):
        return zpow(x) * (x + a) ** (-s)

    def weighted(x):
        zx = zpow(x)
        return (zx * log_z * (x + a) ** (-s) - s * zx * (x + a) ** (-s - 1.0)) * p1(x)

    if abs(z) < 1 - 1e-12:
        rate = -math.log(abs(z))
        # truncation radius from the exponential tail bound
        radius = 16
        while radius < 1 << 20:
            bound = (
                abs(z) ** radius
                / (radius + a.real) ** sigma
                * (1.0 + abs(log_z) + abs(s) / radius)
            )
            if bound < tol / 4:
                break
            radius *= 2
        q1 = integrate_segment(plain, 1.0, 1.0 + radius, tol=tol / 4, integer_breakpoints=True)
        q2 = integrate_segment(weighted, 1.0, 1.0 + radius, tol=tol / 4, integer_breakpoints=True)
        return head + q1.value + q2.value
    # z = 1: algebraic decay x^(-sigma) and x^(-sigma-1)
    q1 = integrate_ray(plain, 1.0, decay_order=sigma, tol=tol / 2)
    q2 = integrate_ray(weighted, 1.0, decay_order=sigma + 1.0, tol=tol / 2)
    return head + q1.value + q2.value


def hurwitz_zeta(s: complex, a: complex, tol: float = 1e-10) -> complex:
    """Hurwitz zeta for Re(s) > 1 via the integral representation at z = 1."""
    s = complex(s)
    if s.real <= 1:
        raise DomainError("hurwitz_zeta requires Re(s) > 1")
    return lerch_coffey(LerchParams(z=1.0, s=s, a=a), tol=tol)


def riemann_zeta(s: complex, tol: float = 1e-10) -> complex:
    """Riemann zeta for Re(s) > 1."""
    return hurwitz_zeta(s, 1.0, tol=tol)
