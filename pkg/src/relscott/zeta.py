"""Riemann and Hurwitz zeta for real s > 1 via Euler-Maclaurin.

zeta(s, a) = sum_{k=0}^{M-1} (a+k)^-s
           + T^(1-s)/(s-1) + T^-s/2
           + sum_{r=1}^{R} B_{2r}/(2r)! * s(s+1)...(s+2r-2) * T^(-s-2r+1)

with T = a + M.  For real s > 1 the truncation error is bounded by the first
omitted correction term; with T >= max(12, s) and R = 9 that term is far below
1e-16 for every s used here, so results are accurate to double rounding
(absolute error well under 1e-14).
"""

from __future__ import annotations

import math
from fractions import Fraction

# B_{2r}/(2r)! for r = 1..10
_EM_COEFFS = tuple(
    float(b / Fraction(math.factorial(2 * r)))
    for r, b in enumerate(
        (
            Fraction(1, 6),
            Fraction(-1, 30),
            Fraction(1, 42),
            Fraction(-1, 30),
            Fraction(5, 66),
            Fraction(-691, 2730),
            Fraction(7, 6),
            Fraction(-3617, 510),
            Fraction(43867, 798),
            Fraction(-174611, 330),
        ),
        start=1,
    )
)


def hurwitz_zeta(s: float, a: float) -> float:
    """Hurwitz zeta sum_{k>=0} (a+k)^-s for real s > 1, a > 0."""
    if not s > 1.0:
        raise ValueError(f"hurwitz_zeta requires s > 1, got s={s}")
    if not a > 0.0:
        raise ValueError(f"hurwitz_zeta requires a > 0, got a={a}")

    t_min = max(12.0, s)
    m = max(0, int(math.ceil(t_min - a)))
    head = 0.0
    comp = 0.0
    for k in range(m - 1, -1, -1):  # ascending term size; compensated
        term = (a + k) ** (-s)
        y = term - comp
        t = head + y
        comp = (t - head) - y
        head = t

    big_t = a + m
    tail = big_t ** (1.0 - s) / (s - 1.0) + 0.5 * big_t ** (-s)
    poch = s  # s(s+1)...(s+2r-2), starts at r=1 with single factor s
    tpow = big_t ** (-s - 1.0)
    inv_t2 = 1.0 / (big_t * big_t)
    for r, coef in enumerate(_EM_COEFFS, start=1):
        tail += coef * poch * tpow
        poch *= (s + 2.0 * r - 1.0) * (s + 2.0 * r)
        tpow *= inv_t2
    return head + tail


def riemann_zeta(s: float) -> float:
    """Riemann zeta(s) for real s > 1."""
    return hurwitz_zeta(s, 1.0)


ZETA_2 = math.pi**2 / 6.0
ZETA_3 = 1.2020569031595943  # riemann_zeta(3.0), frozen for import-time constants
ZETA_4 = math.pi**4 / 90.0
