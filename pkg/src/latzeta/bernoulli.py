"""Fractional part and the first periodized Bernoulli polynomial.

The integer-point convention p1(n) = -1/2 is deliberate: it is the one
under which the first-order Euler-MacLaurin identity over a half-open
interval is exact (see em2d and its linear-polynomial oracle test).
Both functions accept floats or numpy arrays.
"""

import numpy as np


def frac(x):
    """Fractional part x - floor(x), always in [0, 1)."""
    f = x - np.floor(x)
    # x - floor(x) can round up to exactly 1.0 for tiny negative x
    return np.where(f >= 1.0, 0.0, f) if isinstance(f, np.ndarray) else (0.0 if f >= 1.0 else f)


def p1(x):
    """First periodized Bernoulli polynomial, frac(x) - 1/2; p1(n) = -1/2 at integers."""
    return frac(x) - 0.5
