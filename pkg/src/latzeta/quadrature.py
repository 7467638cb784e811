"""Numerical integration of piecewise-smooth complex-valued integrands.

Three families of routines:

* ``integrate_segment``: adaptive Gauss-Legendre (order 16, bisection on a
  Richardson error estimate) on a finite segment, with panels split at
  caller breakpoints and optionally at every integer (the periodized
  Bernoulli weight P1 is non-smooth exactly at integers).
* ``integrate_line`` / ``integrate_ray``: improper 1-D integrals.  The
  domain is truncated at integer-aligned radii that double geometrically
  and the partial values are accelerated with iterated Aitken
  extrapolation; a sampled algebraic tail bound is used as well when the
  decay is fast enough to make it sharp.  ``LineMode.SYMMETRIC`` realizes
  the symmetric-limit convention lim_N int_{-N}^{N} for conditionally
  convergent integrands.
* ``integrate_half_strip`` / ``integrate_rect``: 2-D tensor-product panel
  integration on integer cells, adaptive on finite rectangles, truncated
  plus extrapolated on half-infinite strips.

Integrands may be numpy-vectorized (preferred, arrays in / arrays out) or
plain scalar callables; scalar callables are detected and looped over.
"""

from __future__ import annotations

import heapq
import math
import os
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import (
    NoConvergence,
    TailEstimateFailed,
    UnsupportedDecay,
)

DEFAULT_PANEL_BUDGET = 1 << 16

_GL16_X, _GL16_W = np.polynomial.legendre.leggauss(16)
_GL8_X, _GL8_W = np.polynomial.legendre.leggauss(8)
_GL4_X, _GL4_W = np.polynomial.legendre.leggauss(4)

#: relative roundoff floor entering every reported error
_EPS_FLOOR = 4e-16


def panel_budget(override=None) -> int:
    """Effective panel budget; LATZETA_PANEL_BUDGET overrides the default."""
    if override is not None:
        return int(override)
    env = os.environ.get("LATZETA_PANEL_BUDGET")
    return int(float(env)) if env else DEFAULT_PANEL_BUDGET


class LineMode(Enum):
    ABSOLUTE = "absolute"
    SYMMETRIC = "symmetric"


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    err: float
    panels: int
    evals: int

    def __post_init__(self):
        if not (self.err >= 0 and math.isfinite(self.err)):
            raise ValueError(f"invalid error estimate {self.err}")
        if not (math.isfinite(self.value.real) and math.isfinite(self.value.imag)):
            raise ValueError(f"non-finite integral value {self.value}")


# ---------------------------------------------------------------------------
# integrand vectorization


def vectorize1(f):
    """Wrap a 1-D integrand so it maps float arrays to complex arrays."""

    def g(xs: np.ndarray) -> np.ndarray:
        try:
            ys = np.asarray(f(xs), dtype=complex)
        except (TypeError, ValueError, AttributeError, IndexError):
            return np.array([complex(f(float(x))) for x in xs], dtype=complex)
        if ys.shape != xs.shape:
            ys = np.broadcast_to(ys, xs.shape).astype(complex)
        return ys

    return g


def vectorize2(f):
    """Wrap a 2-D integrand so it maps coordinate arrays to complex arrays."""

    def g(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        xb, yb = np.broadcast_arrays(xs, ys)
        try:
            zs = np.asarray(f(xb, yb), dtype=complex)
        except (TypeError, ValueError, AttributeError, IndexError):
            flat = np.array(
                [complex(f(float(x), float(y))) for x, y in zip(xb.ravel(), yb.ravel())],
                dtype=complex,
            )
            return flat.reshape(xb.shape)
        if zs.shape != xb.shape:
            zs = np.broadcast_to(zs, xb.shape).astype(complex)
        return zs

    return g


# ---------------------------------------------------------------------------
# sequence acceleration


def shanks_extrapolate(seq):
    """Iterated Aitken extrapolation of a sequence of partial values.

    Returns (best, increment) where increment is the magnitude of the last
    contraction step of the table; it serves as the error estimate of the
    accelerated limit.
    """
    s = [complex(v) for v in seq]
    if len(s) == 1:
        return s[0], math.inf
    best = s[-1]
    best_inc = abs(s[-1] - s[-2])
    cur = s
    while len(cur) >= 3:
        nxt = []
        for s0, s1, s2 in zip(cur, cur[1:], cur[2:]):
            d = (s2 - s1) - (s1 - s0)
            if abs(d) < 1e-30 * (abs(s2) + 1.0):
                nxt.append(s2)
            else:
                nxt.append(s2 - (s2 - s1) ** 2 / d)
        # judge each column by its own tail increment; a column of length 1
        # only offers its distance to the parent column as a (conservative)
        # proxy
        if len(nxt) >= 2:
            inc = abs(nxt[-1] - nxt[-2])
        else:
            inc = abs(nxt[-1] - cur[-1])
        if inc <= best_inc:
            best, best_inc = nxt[-1], inc
        elif inc > 10 * best_inc + 1e-30:
            break  # deeper columns are amplifying noise
        cur = nxt
    return best, best_inc


def richardson_extrapolate(seq, ratio: float = 2.0):
    """Richardson (Neville) extrapolation assuming an error expansion in
    successive integer powers of 1/ratio per level.

    This is the natural accelerator for domain truncations at
    integer-aligned radii that double per level.  Returns (best,
    increment) with the increment taken along the table diagonal."""
    s = [complex(v) for v in seq]
    rows = [[s[0]]]
    for j in range(1, len(s)):
        row = [s[j]]
        for m in range(1, j + 1):
            f = ratio**m
            row.append((f * row[m - 1] - rows[j - 1][m - 1]) / (f - 1.0))
        rows.append(row)
    diag = [rows[j][j] for j in range(len(s))]
    if len(diag) < 2:
        return diag[-1], math.inf
    return diag[-1], abs(diag[-1] - diag[-2])


def _accelerate(levels):
    """Best of Richardson (integer powers) and iterated Aitken."""
    est_r, inc_r = richardson_extrapolate(levels)
    est_a, inc_a = shanks_extrapolate(levels)
    return (est_r, inc_r) if inc_r <= inc_a else (est_a, inc_a)


# ---------------------------------------------------------------------------
# finite segments


def _cutpoints(a, b, breakpoints, integer_breakpoints, max_width=None):
    cuts = {float(a), float(b)}
    for p in breakpoints:
        p = float(p)
        if a < p < b:
            cuts.add(p)
    if integer_breakpoints:
        n0 = math.floor(a) + 1
        n1 = math.ceil(b) - 1
        # guard against pathological spans; the adaptive stage can still split
        if n1 - n0 <= 4 * DEFAULT_PANEL_BUDGET:
            cuts.update(float(n) for n in range(n0, n1 + 1))
    pts = sorted(cuts)
    if max_width is not None:
        refined = [pts[0]]
        for lo, hi in zip(pts, pts[1:]):
            k = int(math.ceil((hi - lo) / max_width))
            for j in range(1, k):
                refined.append(lo + (hi - lo) * j / k)
            refined.append(hi)
        pts = refined
    return pts


def _panel_nodes(lo, hi):
    """48 evaluation nodes per panel: whole-panel GL16 plus the two halves."""
    mid = 0.5 * (lo + hi)
    n0 = 0.5 * (hi - lo) * _GL16_X + 0.5 * (lo + hi)
    n1 = 0.5 * (mid - lo) * _GL16_X + 0.5 * (lo + mid)
    n2 = 0.5 * (hi - mid) * _GL16_X + 0.5 * (mid + hi)
    return np.concatenate([n0, n1, n2])


def _eval_panel_batch(fv, bounds):
    """Evaluate panels in one vectorized call.

    Returns per-panel (refined value, error estimate, sum of |values|)."""
    nodes = np.concatenate([_panel_nodes(lo, hi) for lo, hi in bounds])
    ys = fv(nodes)
    out = []
    for i, (lo, hi) in enumerate(bounds):
        chunk = ys[48 * i : 48 * (i + 1)]
        h = 0.5 * (hi - lo)
        coarse = h * np.dot(_GL16_W, chunk[:16])
        fine = 0.5 * h * (np.dot(_GL16_W, chunk[16:32]) + np.dot(_GL16_W, chunk[32:48]))
        absmass = 0.5 * h * float(np.dot(_GL16_W, np.abs(chunk[16:48]).reshape(2, 16).sum(axis=0)))
        out.append((complex(fine), abs(fine - coarse), absmass))
    return out


def integrate_segment(
    f,
    a: float,
    b: float,
    breakpoints=(),
    tol: float = 1e-10,
    integer_breakpoints: bool = False,
    budget=None,
) -> QuadratureResult:
    """Adaptively integrate f over [a, b].

    Panels are pre-split at every breakpoint (and at every integer when
    requested) and then bisected where the Richardson estimate is largest
    until the summed estimate satisfies err <= tol * (1 + |value|).
    """
    if not a <= b:
        raise ValueError(f"need a <= b, got [{a}, {b}]")
    if tol <= 0:
        raise ValueError("tol must be positive")
    if a == b:
        return QuadratureResult(0j, 0.0, 0, 0)
    fv = vectorize1(f)
    max_panels = panel_budget(budget)

    pts = _cutpoints(a, b, breakpoints, integer_breakpoints)
    bounds = list(zip(pts, pts[1:]))
    evals = 48 * len(bounds)
    results = _eval_panel_batch(fv, bounds)
    heap = []  # (-err, id, lo, hi, value, err)
    uid = 0
    value = 0j
    err_sum = 0.0
    absmass = 0.0
    for (lo, hi), (v, e, m) in zip(bounds, results):
        heapq.heappush(heap, (-e, uid, lo, hi, v, e))
        uid += 1
        value += v
        err_sum += e
        absmass += m
    n_panels = len(bounds)

    def floor_err():
        return _EPS_FLOOR * (absmass + abs(value) + 1.0)

    while err_sum > tol * (1.0 + abs(value)) + floor_err():
        # refine the worst panels in one batched evaluation
        batch = []
        target = tol * (1.0 + abs(value)) / max(n_panels, 1)
        while heap and len(batch) < 64:
            neg_e, _, lo, hi, v, e = heap[0]
            if -neg_e <= target or hi - lo < 1e-13 * (1 + abs(lo)):
                break
            heapq.heappop(heap)
            batch.append((lo, hi, v, e))
        if not batch:
            break
        if n_panels + len(batch) > max_panels:
            best = QuadratureResult(value, err_sum + floor_err(), n_panels, evals)
            raise NoConvergence(
                f"segment [{a}, {b}]: panel budget {max_panels} exhausted", best=best
            )
        children = []
        for lo, hi, v, e in batch:
            mid = 0.5 * (lo + hi)
            children.extend([(lo, mid), (mid, hi)])
            value -= v
            err_sum -= e
        evals += 48 * len(children)
        n_panels += len(batch)
        for (lo, hi), (v, e, m) in zip(children, _eval_panel_batch(fv, children)):
            heapq.heappush(heap, (-e, uid, lo, hi, v, e))
            uid += 1
            value += v
            err_sum += e
            absmass += m

    return QuadratureResult(value, err_sum + floor_err(), n_panels, evals)


# ---------------------------------------------------------------------------
# improper 1-D integrals


def _sample_tail_constant(fv, probes, decay_order):
    """Estimate C in |f| <= C r^(-q) by sampling, and reject non-decay."""
    rs = np.asarray(probes, dtype=float)
    mags = np.abs(fv(rs))
    scaled = mags * np.abs(rs) ** decay_order
    nz = scaled[mags > 0]
    if nz.size == 0:
        return 0.0
    # growth of |f| r^q across the probe span means the claimed decay is absent
    if scaled[-1] > 50.0 * (scaled[0] + 1e-300) and mags[-1] > 1e-13:
        raise TailEstimateFailed(
            f"integrand does not decay like r^-{decay_order} (sampled growth)"
        )
    return float(np.max(scaled))


def _improper_1d(fv, segment_for, start_radius, max_radius, tol, tail_bound, budget):
    """Common driver: cumulative integrals at doubling radii + acceleration.

    ``segment_for(r_prev, r)`` integrates the newly added portion of the
    domain.  ``tail_bound(r)`` is an analytic bound on the neglected tail
    (may be inf).  Stops when either the plain bound or the extrapolation
    increment meets tol.
    """
    levels = []
    quad_err = 0.0
    panels = 0
    evals = 0
    value = 0j
    r_prev = None
    r = start_radius
    while True:
        res = segment_for(r_prev, r)
        value += res.value
        quad_err += res.err
        panels += res.panels
        evals += res.evals
        levels.append(value)
        plain_tail = tail_bound(r)
        est, inc = _accelerate(levels)
        scale = 1.0 + abs(est)
        if plain_tail <= tol * scale / 4 and plain_tail <= inc:
            return QuadratureResult(value, quad_err + plain_tail, panels, evals)
        if len(levels) >= 4 and inc <= tol * scale / 4:
            return QuadratureResult(est, quad_err + inc + _EPS_FLOOR * scale, panels, evals)
        if r >= max_radius:
            best_v, best_e = (est, inc) if inc < plain_tail else (value, plain_tail)
            if not math.isfinite(best_e):
                best_e = abs(levels[-1] - levels[-2]) if len(levels) > 1 else abs(best_v)
            best = QuadratureResult(best_v, quad_err + best_e, panels, evals)
            raise NoConvergence(
                f"improper integral not converged at radius {max_radius}", best=best
            )
        r_prev, r = r, 2 * r


def integrate_line(
    f,
    mode: LineMode,
    decay_order: float | None = None,
    tol: float = 1e-8,
    budget=None,
    max_radius: int = 1 << 13,
) -> QuadratureResult:
    """Integrate f over the whole real line.

    ABSOLUTE mode requires decay_order > 1 and validates it by sampling;
    SYMMETRIC mode evaluates the symmetric partial integrals at doubling
    radii and extrapolates (the defining convention for conditionally
    convergent integrands)."""
    fv = vectorize1(f)
    seg_tol = tol / 8

    if mode is LineMode.ABSOLUTE:
        if decay_order is None or decay_order <= 1:
            raise UnsupportedDecay("ABSOLUTE line mode needs decay_order > 1")
        probes = [32.0, 64.0, 128.0, 256.0, -32.0, -64.0, -128.0, -256.0]
        c = _sample_tail_constant(fv, probes, decay_order)
        q = decay_order

        def tail_bound(r):
            return 2.0 * c * r ** (1.0 - q) / (q - 1.0)

    else:

        def tail_bound(r):
            return math.inf

    def segment_for(r_prev, r):
        if r_prev is None:
            return integrate_segment(
                fv, -r, r, tol=seg_tol, integer_breakpoints=True, budget=budget
            )
        left = integrate_segment(
            fv, -r, -r_prev, tol=seg_tol, integer_breakpoints=True, budget=budget
        )
        right = integrate_segment(
            fv, r_prev, r, tol=seg_tol, integer_breakpoints=True, budget=budget
        )
        return QuadratureResult(
            left.value + right.value,
            left.err + right.err,
            left.panels + right.panels,
            left.evals + right.evals,
        )

    return _improper_1d(fv, segment_for, 16, max_radius, tol, tail_bound, budget)


def integrate_ray(
    f,
    start: float,
    decay_order: float | None = None,
    exp_rate: float = 0.0,
    tol: float = 1e-8,
    budget=None,
    max_radius: int = 1 << 14,
) -> QuadratureResult:
    """Integrate f over [start, infinity).

    Either an algebraic decay order (> 1) or an exponential rate
    (|f| ~ e^{-rate * x}) must describe the tail; with exponential decay
    the plain truncation bound alone usually terminates the doubling."""
    fv = vectorize1(f)
    seg_tol = tol / 8

    if exp_rate > 0:
        probes = [start + 8.0, start + 16.0, start + 32.0]
        mags = np.abs(fv(np.asarray(probes)))
        c = float(np.max(mags * np.exp(exp_rate * (np.asarray(probes) - start)))) if mags.size else 0.0

        def tail_bound(r):
            return c * math.exp(-exp_rate * (r - start)) / exp_rate

    elif decay_order is not None and decay_order > 1:
        probes = [start + 32.0, start + 128.0, start + 512.0]
        c = _sample_tail_constant(fv, probes, decay_order)
        q = decay_order

        def tail_bound(r):
            return c * r ** (1.0 - q) / (q - 1.0)

    else:
        raise UnsupportedDecay("integrate_ray needs decay_order > 1 or exp_rate > 0")

    def segment_for(r_prev, r):
        lo = start if r_prev is None else start + r_prev
        return integrate_segment(
            fv, lo, start + r, tol=seg_tol, integer_breakpoints=True, budget=budget
        )

    return _improper_1d(fv, segment_for, 16, max_radius, tol, tail_bound, budget)


# ---------------------------------------------------------------------------
# 2-D rectangles


def _axis_panels(lo, hi, integer_breakpoints, max_width=1.0):
    pts = _cutpoints(lo, hi, (), integer_breakpoints, max_width=max_width)
    return np.asarray(pts)


def _tensor_nodes(edges, order_x, order_w):
    """Per-axis nodes and weights for a sequence of panel edges."""
    lows = edges[:-1]
    highs = edges[1:]
    half = 0.5 * (highs - lows)
    mid = 0.5 * (highs + lows)
    nodes = (half[:, None] * order_x[None, :] + mid[:, None]).ravel()
    weights = (half[:, None] * order_w[None, :]).ravel()
    return nodes, weights


def _rect_fixed(fv2, x_edges, y_edges, gl_x=_GL8_X, gl_w=_GL8_W):
    """Tensor-product fixed-order integral over the panel grid.

    Evaluated in row chunks to bound peak memory on large truncation
    rectangles."""
    xn, xw = _tensor_nodes(np.asarray(x_edges, float), gl_x, gl_w)
    yn, yw = _tensor_nodes(np.asarray(y_edges, float), gl_x, gl_w)
    total = 0j
    chunk = max(1, (1 << 21) // max(xn.size, 1))
    for i in range(0, yn.size, chunk):
        vals = fv2(xn[None, :], yn[i : i + chunk, None])
        total += complex(yw[i : i + chunk] @ vals @ xw)
    return total, xn.size * yn.size


def _split_edges(edges, factor):
    edges = np.asarray(edges, float)
    out = [edges[0]]
    for lo, hi in zip(edges, edges[1:]):
        for j in range(1, factor + 1):
            out.append(lo + (hi - lo) * j / factor)
    return np.asarray(out)


def integrate_rect(
    f,
    x_lo: float,
    x_hi: float,
    y_lo: float,
    y_hi: float,
    tol: float = 1e-10,
    integer_breakpoints: bool = True,
    budget=None,
) -> QuadratureResult:
    """Adaptive tensor-product integration over a finite rectangle.

    Cells follow the integer grid; each cell compares a GL8xGL8 rule with
    its 2x2-split refinement and the worst cells are subdivided until the
    summed estimate meets tol."""
    if not (x_lo < x_hi and y_lo < y_hi):
        raise ValueError("rectangle bounds must be increasing")
    fv2 = vectorize2(f)
    max_panels = panel_budget(budget)

    xs = _axis_panels(x_lo, x_hi, integer_breakpoints, max_width=max(1.0, (x_hi - x_lo) / 4))
    ys = _axis_panels(y_lo, y_hi, integer_breakpoints, max_width=max(1.0, (y_hi - y_lo) / 4))
    cells = [
        (float(a), float(b), float(c), float(d))
        for a, b in zip(xs, xs[1:])
        for c, d in zip(ys, ys[1:])
    ]

    evals = 0

    def eval_cells(batch):
        nonlocal evals
        # coarse 8x8 plus fine (2x2 split, 8x8 each) in one flattened call
        nx_list, ny_list, slices = [], [], []
        for (a, b, c, d) in batch:
            for ex, ey in (
                (np.array([a, b]), np.array([c, d])),
                (np.array([a, 0.5 * (a + b), b]), np.array([c, 0.5 * (c + d), d])),
            ):
                xn, xw = _tensor_nodes(ex, _GL8_X, _GL8_W)
                yn, yw = _tensor_nodes(ey, _GL8_X, _GL8_W)
                slices.append((xn, xw, yn, yw))
        out = []
        for i in range(0, len(batch)):
            xn0, xw0, yn0, yw0 = slices[2 * i]
            xn1, xw1, yn1, yw1 = slices[2 * i + 1]
            v0 = fv2(xn0[None, :], yn0[:, None])
            v1 = fv2(xn1[None, :], yn1[:, None])
            coarse = complex(yw0 @ v0 @ xw0)
            fine = complex(yw1 @ v1 @ xw1)
            evals += xn0.size * yn0.size + xn1.size * yn1.size
            out.append((fine, abs(fine - coarse)))
        return out

    heap = []
    uid = 0
    value = 0j
    err_sum = 0.0
    for cell, (v, e) in zip(cells, eval_cells(cells)):
        heapq.heappush(heap, (-e, uid, cell, v, e))
        uid += 1
        value += v
        err_sum += e
    n_cells = len(cells)

    while err_sum > tol * (1.0 + abs(value)) + _EPS_FLOOR * (1.0 + abs(value)):
        neg_e, _, (a, b, c, d), v, e = heap[0]
        if -neg_e <= tol * (1.0 + abs(value)) / max(n_cells, 1):
            break
        if min(b - a, d - c) < 1e-12:
            break
        if n_cells + 3 > max_panels:
            best = QuadratureResult(value, err_sum, n_cells, evals)
            raise NoConvergence("rectangle cell budget exhausted", best=best)
        heapq.heappop(heap)
        value -= v
        err_sum -= e
        mx, my = 0.5 * (a + b), 0.5 * (c + d)
        quads = [(a, mx, c, my), (mx, b, c, my), (a, mx, my, d), (mx, b, my, d)]
        for cell, (cv, ce) in zip(quads, eval_cells(quads)):
            heapq.heappush(heap, (-ce, uid, cell, cv, ce))
            uid += 1
            value += cv
            err_sum += ce
        n_cells += 3

    err = err_sum + _EPS_FLOOR * (1.0 + abs(value))
    return QuadratureResult(value, err, n_cells, evals)


# ---------------------------------------------------------------------------
# half-infinite strips


def _strip_rect(fv2, x_lo, x_hi, y_lo, y_hi, hot_x, hot_y, gl=None):
    """Integral over one finite rectangle of a strip level.

    Far cells use fixed-order tensor panels on the integer grid; the
    neighborhood of (hot_x, hot_y) (where the integrand peaks, next to the
    excluded pole row) is recomputed on a 4x-split grid and the difference
    doubles as the quadrature error estimate."""
    gl_x, gl_w = gl if gl is not None else (_GL8_X, _GL8_W)
    x_edges = _axis_panels(x_lo, x_hi, True)
    y_edges = _axis_panels(y_lo, y_hi, True)
    base, n_base = _rect_fixed(fv2, x_edges, y_edges, gl_x, gl_w)
    evals = n_base
    err = 0.0
    # near-field correction
    nx_lo = max(x_lo, math.floor(hot_x) - 4)
    nx_hi = min(x_hi, math.ceil(hot_x) + 4)
    ny_lo = max(y_lo, hot_y - 4)
    ny_hi = min(y_hi, hot_y + 4)
    if nx_lo < nx_hi and ny_lo < ny_hi:
        xe = _axis_panels(nx_lo, nx_hi, True)
        ye = _axis_panels(ny_lo, ny_hi, True)
        coarse, n0 = _rect_fixed(fv2, xe, ye, gl_x, gl_w)
        fine, n1 = _rect_fixed(fv2, _split_edges(xe, 4), _split_edges(ye, 4))
        finer, n2 = _rect_fixed(fv2, _split_edges(xe, 8), _split_edges(ye, 8))
        base += finer - coarse
        err = abs(finer - fine)
        evals += n0 + n1 + n2
    n_panels = (len(x_edges) - 1) * (len(y_edges) - 1)
    return base, err, n_panels, evals


def integrate_half_strip(
    f,
    y_edge: float,
    direction: str,
    decay_order: float,
    tol: float = 1e-8,
    budget=None,
    hot_x: float = 0.0,
    pole=None,
    max_radius: int = 1024,
) -> QuadratureResult:
    """Integrate f over the half-strip x in (-inf, inf), y above (direction
    'up') or below (direction 'down') y_edge.

    Requires decay_order > 2 (slower 2-D decay is not absolutely
    convergent).  The strip is truncated to growing rectangles whose radius
    doubles; the truncated values carry a smooth expansion in the inverse
    radius when the cuts are integer-aligned, so iterated Aitken
    extrapolation supplies the tail.  ``hot_x`` locates the integrand peak
    along the edge (refined near-field); ``pole`` is an optional callable
    (x, y) -> distance used to refuse regions within 1e-6 of a pole."""
    if decay_order <= 2:
        raise UnsupportedDecay(
            f"half-strip integration needs decay_order > 2, got {decay_order}"
        )
    if direction not in ("up", "down"):
        raise ValueError("direction must be 'up' or 'down'")
    sign = 1.0 if direction == "up" else -1.0
    fv2 = vectorize2(f)

    if pole is not None:
        probe_y = y_edge + sign * np.array([0.0, 0.25, 0.5, 1.0])
        probe_x = hot_x + np.array([-1.0, -0.5, 0.0, 0.5, 1.0])
        dmin = min(
            float(pole(float(x), float(y))) for x in probe_x for y in probe_y
        )
        if dmin < 1e-6:
            from .errors import PoleNearDomain

            raise PoleNearDomain(
                f"half-strip boundary passes within {dmin:.2e} of an integrand pole"
            )

    # sampled tail constant along representative rays in the strip
    rr = np.array([16.0, 32.0, 64.0, 128.0])
    pts = []
    for r in rr:
        pts.append((hot_x, y_edge + sign * r))
        pts.append((hot_x + r, y_edge + sign * r / 2))
        pts.append((hot_x - r, y_edge + sign * r / 2))
    px = np.array([p[0] for p in pts])
    py = np.array([p[1] for p in pts])
    mags = np.abs(fv2(px, py))
    rads = np.hypot(px - hot_x, py - y_edge)
    scaled = mags * rads ** decay_order
    if scaled.size and scaled[-3:].max() > 50.0 * (scaled[:3].max() + 1e-300) and mags[-3:].max() > 1e-13:
        raise TailEstimateFailed("half-strip integrand shows no decay in sampling")
    c = float(scaled.max()) if scaled.size else 0.0
    q = decay_order

    def tail_bound(r):
        # 2-D tail of C r^-q over the region beyond radius r
        return 2.0 * math.pi * c * r ** (2.0 - q) / (q - 2.0)

    panels = 0
    evals = 0
    quad_err = 0.0
    levels = []
    value = 0j
    r_prev = None
    r = 8
    x_center = math.floor(hot_x) + 0.5
    while True:
        if r_prev is None:
            # the innermost rectangle contains the integrand peak: hand it
            # to the fully adaptive 2-D routine so its error is controlled,
            # and keep fixed-order cells for the smooth outer slabs only
            if direction == "up":
                ya, yb = y_edge, y_edge + r
            else:
                ya, yb = y_edge - r, y_edge
            q0 = integrate_rect(
                fv2,
                x_center - r,
                x_center + r,
                ya,
                yb,
                tol=tol / 4,
                budget=budget,
            )
            value += q0.value
            quad_err += q0.err
            panels += q0.panels
            evals += q0.evals
            levels.append(value)
            plain_tail = tail_bound(r)
            r_prev, r = r, 2 * r
            continue
        else:
            rects = [
                (x_center - r, x_center - r_prev, 0.0, float(r_prev)),
                (x_center + r_prev, x_center + r, 0.0, float(r_prev)),
                (x_center - r, x_center + r, float(r_prev), float(r)),
            ]
        # slabs at distance >= 64 from the peak hold only slowly varying
        # integrand mass; a 4-point rule per unit cell is already exact to
        # roundoff there
        gl = (_GL4_X, _GL4_W) if (r_prev is not None and r_prev >= 64) else None
        for (xa, xb, d0, d1) in rects:
            if direction == "up":
                ya, yb = y_edge + d0, y_edge + d1
            else:
                ya, yb = y_edge - d1, y_edge - d0
            v, e, np_, ne = _strip_rect(fv2, xa, xb, ya, yb, hot_x, y_edge + sign * 0.0, gl)
            value += v
            quad_err += e
            panels += np_
            evals += ne
        levels.append(value)
        plain_tail = tail_bound(r)
        est, inc = _accelerate(levels)
        scale = 1.0 + abs(est)
        if plain_tail <= tol * scale / 4 and plain_tail <= inc:
            return QuadratureResult(value, quad_err + plain_tail, panels, evals)
        if len(levels) >= 4 and inc <= tol * scale / 4:
            return QuadratureResult(est, quad_err + inc + _EPS_FLOOR * scale, panels, evals)
        # fixed-order unit cells are far cheaper than adaptive panels; the
        # panel budget applies with a 64x allowance here
        if r >= max_radius or panels > 64 * panel_budget(budget):
            best_v, best_e = (est, inc) if inc < plain_tail else (value, plain_tail)
            if not math.isfinite(best_e):
                best_e = abs(levels[-1] - levels[-2]) if len(levels) > 1 else abs(best_v)
            best = QuadratureResult(best_v, quad_err + best_e, panels, evals)
            raise NoConvergence(
                f"half-strip not converged at radius {r} (tol {tol})", best=best
            )
        r_prev, r = r, 2 * r
