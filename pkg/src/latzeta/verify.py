"""Seeded self-verification suites.

Each suite runs a list of invariant checks whose expected values come
from independent oracles (brute-force summation, closed forms, or a
second evaluation route) and reports the measured error against a
tolerance.  The CLI ``verify`` subcommand and the test suite both drive
these functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .em2d import Function2D, Rect, brute_force_sum_2d, em_sum_1d, em_sum_2d
from .lattice import lattice_new
from .lerch import LerchParams, lerch_coffey, lerch_series
from .weil import WeilParams, eisenstein_series, weil_direct, weil_integral

SUITES = ("em2d", "weil", "lerch")


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    error: float
    tol: float

    @property
    def passed(self) -> bool:
        return self.error <= self.tol


def _seeded_poly_function(rng: np.random.Generator) -> Function2D:
    """A random low-degree polynomial with exact partial derivatives."""
    c = rng.uniform(-2.0, 2.0, size=6)  # 1, x, y, x^2, x*y, y^2

    def phi(x, y):
        return c[0] + c[1] * x + c[2] * y + c[3] * x * x + c[4] * x * y + c[5] * y * y

    def fx(x, y):
        return c[1] + 2 * c[3] * x + c[4] * y

    def fy(x, y):
        return c[2] + c[4] * x + 2 * c[5] * y

    def fxy(x, y):
        return c[4] + 0.0 * x + 0.0 * y

    return Function2D(phi, fx, fy, fxy)


def _seeded_wave_function(rng: np.random.Generator) -> Function2D:
    """A random smooth oscillatory function with exact partials."""
    u = rng.uniform(0.2, 0.8)
    v = rng.uniform(0.2, 0.8)
    s = rng.uniform(-1.0, 1.0)

    def phi(x, y):
        return np.cos(u * x + s) * np.sin(v * y)

    def fx(x, y):
        return -u * np.sin(u * x + s) * np.sin(v * y)

    def fy(x, y):
        return v * np.cos(u * x + s) * np.cos(v * y)

    def fxy(x, y):
        return -u * v * np.sin(u * x + s) * np.cos(v * y)

    return Function2D(phi, fx, fy, fxy)


def verify_em2d(seed: int = 42, tol: float = 1e-8) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    out = []

    # 1-D identity against a direct sum
    alpha = rng.uniform(-3.0, -1.0)
    beta = rng.uniform(5.0, 9.0)
    c0, c1 = rng.uniform(-1.0, 1.0, size=2)
    got = em_sum_1d(
        lambda x: c0 * x * x + c1 * x,
        lambda x: 2 * c0 * x + c1,
        alpha,
        beta,
        tol=tol / 10,
    )
    want = sum(c0 * n * n + c1 * n for n in range(math.floor(alpha) + 1, math.floor(beta) + 1))
    out.append(CheckResult("em2d", "1d-identity-vs-direct-sum", abs(got - want), tol))

    # 2-D identity against brute force for seeded polynomial and wave
    for label, maker in (("poly", _seeded_poly_function), ("wave", _seeded_wave_function)):
        f = maker(rng)
        r = Rect(
            rng.uniform(-2.0, 0.0),
            rng.uniform(4.0, 7.0),
            rng.uniform(-2.0, 0.0),
            rng.uniform(4.0, 7.0),
        )
        br = em_sum_2d(f, r, tol=tol / 10)
        want = brute_force_sum_2d(f.phi, r)
        scale = 1.0 + abs(want)
        out.append(
            CheckResult("em2d", f"2d-identity-{label}-vs-brute-force", abs(br.total - want) / scale, tol)
        )

    # 2-D identity on a complex integrand with rapid decay
    a0 = complex(rng.uniform(0.3, 0.7), rng.uniform(0.3, 0.7))

    def cphi(x, y):
        return (a0 + x + 1j * y) ** -3

    f = Function2D(
        cphi,
        lambda x, y: -3 * (a0 + x + 1j * y) ** -4,
        lambda x, y: -3j * (a0 + x + 1j * y) ** -4,
        lambda x, y: 12j * (a0 + x + 1j * y) ** -5,
    )
    r = Rect(2.0, 9.0, 2.0, 9.0)
    br = em_sum_2d(f, r, tol=tol / 10)
    want = brute_force_sum_2d(cphi, r)
    out.append(CheckResult("em2d", "2d-identity-complex-vs-brute-force", abs(br.total - want), tol))
    return out


def verify_weil(seed: int = 42, tol: float = 1e-8) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    out = []
    w2 = complex(rng.uniform(-0.3, 0.3), rng.uniform(0.8, 1.3))
    lat = lattice_new(1.0, w2)
    a = complex(rng.uniform(0.1, 0.8), rng.uniform(0.1, 0.6))
    k = int(rng.integers(3, 6))
    inner_tol = tol / 10

    e = weil_direct(WeilParams(lat, a, k), tol=inner_tol).value
    scale = 1.0 + abs(e)

    # periodicity: shifting a by a lattice vector re-indexes the sum
    for label, w in (("w1", lat.w1), ("w2", lat.w2)):
        shifted = weil_direct(WeilParams(lat, a + w, k), tol=inner_tol).value
        out.append(CheckResult("weil", f"periodicity-{label}", abs(shifted - e) / scale, tol))

    # parity: E_k(-a) = (-1)^k E_k(a)
    neg = weil_direct(WeilParams(lat, -a, k), tol=inner_tol).value
    out.append(CheckResult("weil", "parity", abs(neg - (-1) ** k * e) / scale, tol))

    # homogeneity: E_k(la, lW) = l^-k E_k(a, W)
    lam = 2j
    lat2 = lattice_new(lam * lat.w1, lam * lat.w2)
    hom = weil_direct(WeilParams(lat2, lam * a, k), tol=inner_tol).value
    out.append(CheckResult("weil", "homogeneity", abs(hom - lam ** (-k) * e) / scale, tol))

    # method equivalence: summation vs integral representation
    q = weil_integral(WeilParams(lat, a, k), tol=inner_tol)
    out.append(CheckResult("weil", "direct-vs-integral", abs(q.value - e) / scale, tol))

    # structural zero: odd Eisenstein series vanish
    out.append(CheckResult("weil", "eisenstein-odd-zero", abs(eisenstein_series(lat, 5, tol=inner_tol)), tol))
    return out


def verify_lerch(seed: int = 42, tol: float = 1e-8) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    out = []
    inner_tol = tol / 10

    # series vs integral representation at seeded interior points
    for i in range(3):
        p = LerchParams(
            z=rng.uniform(0.1, 0.85),
            s=complex(rng.uniform(1.2, 4.0), rng.uniform(-1.0, 1.0)),
            a=rng.uniform(0.5, 3.0),
        )
        s_val = lerch_series(p, tol=inner_tol)
        c_val = lerch_coffey(p, tol=inner_tol)
        scale = 1.0 + abs(s_val)
        out.append(CheckResult("lerch", f"series-vs-integral-{i}", abs(s_val - c_val) / scale, tol))

    # closed form: zeta(2) = pi^2/6 through the integral path
    z2 = lerch_coffey(LerchParams(1.0, 2.0, 1.0), tol=inner_tol)
    out.append(CheckResult("lerch", "zeta2-closed-form", abs(z2 - math.pi**2 / 6), tol))

    # ladder: Phi(z,s,a) - z*Phi(z,s,a+1) = a^-s
    z, s, a = 0.6, 2.5, rng.uniform(0.5, 2.0)
    lhs = lerch_series(LerchParams(z, s, a), tol=inner_tol) - z * lerch_series(
        LerchParams(z, s, a + 1.0), tol=inner_tol
    )
    out.append(CheckResult("lerch", "contiguous-ladder", abs(lhs - a ** -s), tol))
    return out


def run_suite(suite: str, seed: int = 42, tol: float = 1e-8) -> list[CheckResult]:
    if suite == "all":
        results = []
        for name in SUITES:
            results.extend(run_suite(name, seed=seed, tol=tol))
        return results
    table = {"em2d": verify_em2d, "weil": verify_weil, "lerch": verify_lerch}
    if suite not in table:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES + ('all',)}")
    return table[suite](seed=seed, tol=tol)
