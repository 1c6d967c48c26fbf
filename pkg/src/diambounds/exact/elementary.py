"""Rigorous lower/upper bounds for ln, exp and sqrt at rational points.

Every routine works in fixed point with ``w`` fractional bits and rounds each
intermediate step in the direction of the bound it produces, so the returned
pair always brackets the true value. Widths are roughly ``2**-w`` times a
small factor.
"""

from __future__ import annotations

import functools
import math
from fractions import Fraction


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _atanh_lower(num: int, den: int, w: int) -> int:
    # z = num/den in [0, 1/3); every term truncated down, tail dropped
    one = 1 << w
    z = (num << w) // den
    z2 = (z * z) >> w
    p, s, k = z, 0, 0
    while p:
        s += p // (2 * k + 1)
        p = (p * z2) >> w
        k += 1
    return s


def _atanh_upper(num: int, den: int, w: int) -> int:
    one = 1 << w
    z = _ceil_div(num << w, den)
    z2 = _ceil_div(z * z, one)
    p, s, k = z, 0, 0
    while p > 1:
        s += _ceil_div(p, 2 * k + 1)
        p = _ceil_div(p * z2, one)
        k += 1
    # remaining tail is below (9/8) * p <= 9/8 ulp since z**2 < 1/9
    return s + 2


@functools.lru_cache(maxsize=64)
def ln2_bounds(w: int) -> tuple[Fraction, Fraction]:
    """Enclosure of ln 2 = 2 atanh(1/3)."""
    scale = 1 << w
    return (
        Fraction(2 * _atanh_lower(1, 3, w), scale),
        Fraction(2 * _atanh_upper(1, 3, w), scale),
    )


def floor_log2_rat(q: Fraction) -> int:
    """floor(log2(q)) for rational q > 0."""
    num, den = q.numerator, q.denominator
    e = num.bit_length() - den.bit_length()
    # now 2**(e-1) < q < 2**(e+1)
    if e >= 0:
        if num < den << e:
            e -= 1
    elif num << -e < den:
        e -= 1
    return e


def ln_bounds(x: Fraction, w: int) -> tuple[Fraction, Fraction]:
    """Enclosure of ln(x) for rational x > 0."""
    if x <= 0:
        raise ValueError("ln of non-positive value")
    if x == 1:
        return Fraction(0), Fraction(0)
    e = floor_log2_rat(x)
    y = x / (Fraction(2) ** e)  # y in [1, 2)
    zn, zd = y.numerator - y.denominator, y.numerator + y.denominator
    wk = w + e.bit_length() + 4
    scale = 1 << wk
    a_lo = Fraction(2 * _atanh_lower(zn, zd, wk), scale)
    a_hi = Fraction(2 * _atanh_upper(zn, zd, wk), scale)
    l2lo, l2hi = ln2_bounds(wk)
    if e >= 0:
        return a_lo + e * l2lo, a_hi + e * l2hi
    return a_lo + e * l2hi, a_hi + e * l2lo


def _exp_unit_lower(r: Fraction, w: int) -> int:
    # exp(r) * 2**w from below, r in [0, 1)
    one = 1 << w
    rr = (r.numerator << w) // r.denominator
    s, t, j = one, one, 1
    while t:
        t = (t * rr) // (j << w)
        s += t
        j += 1
    return s


def _exp_unit_upper(r: Fraction, w: int) -> int:
    one = 1 << w
    rr = _ceil_div(r.numerator << w, r.denominator)
    s, t, j = one, one, 1
    while True:
        t = _ceil_div(t * rr, j << w)
        s += t
        if t <= 1:
            break
        j += 1
    # tail after term j is at most t/j <= 1 ulp
    return s + 2


def exp_bounds(t: Fraction, w: int) -> tuple[Fraction, Fraction]:
    """Enclosure of exp(t) for rational t."""
    if t == 0:
        return Fraction(1), Fraction(1)
    wk = w + abs(math.floor(t)).bit_length() + 8
    l2lo, l2hi = ln2_bounds(wk)
    # k*ln2 <= t for the chosen k, so the reduced argument is in [0, 1)
    k = math.floor(t / l2hi) if t >= 0 else math.floor(t / l2lo)
    if k >= 0:
        r_lo, r_hi = t - k * l2hi, t - k * l2lo
    else:
        r_lo, r_hi = t - k * l2lo, t - k * l2hi
    r_lo = max(r_lo, Fraction(0))
    scale = Fraction(2) ** k / (1 << wk)
    return (
        _exp_unit_lower(r_lo, wk) * scale,
        _exp_unit_upper(r_hi, wk) * scale,
    )


def sqrt_bounds(x: Fraction, w: int) -> tuple[Fraction, Fraction]:
    """Enclosure of sqrt(x) for rational x >= 0."""
    if x < 0:
        raise ValueError("sqrt of negative value")
    num, den = x.numerator << (2 * w), x.denominator
    lo = math.isqrt(num // den)
    hi_sq = _ceil_div(num, den)
    hi = math.isqrt(hi_sq)
    if hi * hi < hi_sq:
        hi += 1
    scale = 1 << w
    return Fraction(lo, scale), Fraction(hi, scale)
