"""Small integer helpers shared by the number-theoretic modules."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from sympy import factorint


def factor(n: int) -> dict:
    """Prime factorization of |n| as {prime: exponent}; empty for 0 and 1."""
    return dict(_factor(abs(int(n))))


@lru_cache(maxsize=4096)
def _factor(n: int) -> tuple:
    if n < 2:
        return ()
    return tuple((int(p), int(e)) for p, e in factorint(n).items())


def squarefree_decomposition(n: int):
    """Write n = s * r^2 with s squarefree (sign kept on s).  Returns (s, r)."""
    if n == 0:
        raise ValueError("zero has no squarefree part")
    return squarefree_from_factors(1 if n > 0 else -1, factor(n))


def squarefree_from_factors(sign: int, *factorizations):
    """Squarefree decomposition (s, r) of sign * prod of the factored numbers."""
    exps = {}
    for fac in factorizations:
        for p, e in fac.items():
            exps[p] = exps.get(p, 0) + e
    s, r = sign, 1
    for p, e in exps.items():
        r *= p ** (e // 2)
        if e % 2:
            s *= p
    return s, r


def common_denominator(values) -> int:
    return lcm(1, *(Fraction(v).denominator for v in values))


def primitive(values):
    """Scale a list of rationals to coprime integers (sign of first nonzero kept)."""
    vals = [Fraction(v) for v in values]
    d = common_denominator(vals)
    ints = [int(v * d) for v in vals]
    g = gcd(*ints)
    if g == 0:
        return ints
    return [v // g for v in ints]
