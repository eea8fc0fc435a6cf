"""Exact arithmetic on binary forms given by coefficient lists.

A form of degree n is a list ``c`` with ``c[i]`` the coefficient of
``x^i z^(n-i)``.  Entries may be ``int`` or ``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial


def _dx(c):
    return [i * c[i] for i in range(1, len(c))]


def _dz(c):
    n = len(c) - 1
    return [(n - i) * c[i] for i in range(n)]


def _partial(c, kx, kz):
    for _ in range(kx):
        c = _dx(c)
    for _ in range(kz):
        c = _dz(c)
    return c


def mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def transvectant(f, g, k):
    """The k-th transvectant (f, g)_k, normalized by (m-k)!(n-k)!/(m!n!)."""
    m, n = len(f) - 1, len(g) - 1
    if k > min(m, n):
        raise ValueError("transvectant order exceeds a degree")
    out = [0] * (m + n - 2 * k + 1)
    for j in range(k + 1):
        s = (-1) ** j * comb(k, j)
        for i, t in enumerate(mul(_partial(f, k - j, j), _partial(g, j, k - j))):
            out[i] += s * t
    fac = Fraction(factorial(m - k) * factorial(n - k), factorial(m) * factorial(n))
    return [fac * x for x in out]


def covariants(f):
    """Return (i, delta, y1, y2, y3) for a sextic f."""
    i = transvectant(f, f, 4)
    delta = transvectant(i, i, 2)
    y1 = transvectant(f, i, 4)
    y2 = transvectant(i, y1, 2)
    y3 = transvectant(i, y2, 2)
    return i, delta, y1, y2, y3


def clebsch_invariants(f):
    """Clebsch invariants (A, B, C, D) of a binary sextic, as Fractions."""
    f = [Fraction(a) for a in f]
    i, delta, y1, _, y3 = covariants(f)
    A = transvectant(f, f, 6)[0]
    B = transvectant(i, i, 4)[0]
    C = transvectant(i, delta, 4)[0]
    D = transvectant(y3, y1, 2)[0]
    return A, B, C, D


def clebsch_to_igusa(A, B, C, D):
    I2 = -120 * A
    I4 = -720 * A**2 + 6750 * B
    I6 = 8640 * A**3 - 108000 * A * B + 202500 * C
    I10 = (-62208 * A**5 + 972000 * A**3 * B + 1620000 * A**2 * C
           - 3037500 * A * B**2 - 6075000 * B * C - 4556250 * D)
    return I2, I4, I6, I10


def igusa_to_clebsch(I2, I4, I6, I10):
    I2, I4, I6, I10 = (Fraction(v) for v in (I2, I4, I6, I10))
    A = -I2 / 120
    B = (I4 + 720 * A**2) / 6750
    C = (I6 - 8640 * A**3 + 108000 * A * B) / 202500
    D = (I10 + 62208 * A**5 - 972000 * A**3 * B - 1620000 * A**2 * C
         + 3037500 * A * B**2 + 6075000 * B * C) / -4556250
    return A, B, C, D
