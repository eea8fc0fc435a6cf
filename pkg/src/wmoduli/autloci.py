"""Automorphism groups of genus-2 curves read off from their moduli point.

A curve with an involution besides the hyperelliptic one can be written
y^2 = x^6 - s1 x^4 + s2 x^2 - 1.  With u = s1^3 + s2^3 and v = s1 s2 its
invariants are polynomials in (u, v); the D4 and D6 sub-loci are curves in
the (u, v)-plane.  The extra-involution locus in terms of J2..J10 is the
determinant of the Mestre conic (up to a constant), taken from _tables.
"""

from __future__ import annotations

import enum
from collections import Counter
from functools import lru_cache

import sympy

from . import _tables
from .igusa import _eval_terms
from .wpspace import COMPACT, WeightedPoint, canonicalize


class AutClass(str, enum.Enum):
    """Tag of the full automorphism group (hyperelliptic involution included)."""

    C2 = "C2"
    V4 = "V4"
    D4 = "D4"
    D6 = "D6"
    C10 = "C10"
    G24 = "G24"
    G48 = "G48"
    # listed for completeness of the tag set; no genus-2 curve in
    # characteristic 0 has a reduced automorphism group of order 3 alone
    C3_FAMILY = "C3-family"

    def __str__(self):
        return self.value

    @property
    def order(self) -> int:
        return {"C2": 2, "V4": 4, "D4": 8, "D6": 12, "C10": 10, "G24": 24, "G48": 48,
                "C3-family": 6}[self.value]


# canonical points of y^2 = x^6 - 1 and y^2 = x^5 - x
G24_POINT = (40, 45, 555, 6)
G48_POINT = (20, -20, -40, 8)


def extra_involution(J) -> int:
    """Value of the extra-involution locus polynomial at (J2, J4, J6, J10)."""
    return _eval_terms(_tables.EXTRA_INVOLUTION, tuple(J))


def dihedral_invariants(u, v):
    """J2..J10 of y^2 = x^6 - s1 x^4 + s2 x^2 - 1 with u = s1^3+s2^3, v = s1 s2."""
    J2 = 16 * (v + 15)
    J4 = 4 * (12 * u + v**2 - 126 * v + 405)
    J6 = 8 * (20 * u * v + 12 * u + 3 * v**3 - 53 * v**2 - 2583 * v + 14985)
    J10 = 64 * (4 * u - v**2 - 18 * v + 27) ** 2
    return J2, J4, J6, J10


_u, _v, _m, _z = sympy.symbols("u v m z")
D4_LOCUS = _u**2 - 4 * _v**3
D6_LOCUS = 4 * _u - _v**2 + 110 * _v - 1125


def _system(J):
    fam = dihedral_invariants(_u, _v)
    eqs = [f - _m**w * x for f, w, x in zip(fam, (1, 2, 3, 5), J)]
    return eqs + [_m * _z - 1]


@lru_cache(maxsize=256)
def _consistent(J, extra) -> bool:
    eqs = _system(J)
    if extra is not None:
        eqs.append(extra)
    G = sympy.groebner(eqs, _z, _m, _u, _v, order="lex")
    return list(G.exprs) != [1]


@lru_cache(maxsize=256)
def dihedral_parameters(J) -> tuple:
    """Rational pairs (u, v) whose dihedral curve has moduli point J."""
    G = sympy.groebner(_system(J), _z, _m, _u, _v, order="lex")
    out = []
    for sol in sympy.solve(list(G.exprs), [_z, _m, _u, _v], dict=True):
        u, v = sol.get(_u), sol.get(_v)
        if u is None or v is None:
            continue
        if u.is_Rational and v.is_Rational:
            pair = (sympy.Rational(u), sympy.Rational(v))
            if pair not in out:
                out.append(pair)
    return tuple(sorted(out))


def classify(p: WeightedPoint) -> AutClass:
    J = tuple(p.coords)
    if J[3] == 0:
        raise ValueError("J10 = 0 is not a moduli point")
    if J[0] == J[1] == J[2] == 0:
        return AutClass.C10
    if extra_involution(J) != 0:
        return AutClass.C2
    c = canonicalize(WeightedPoint(J, COMPACT)).coords
    if c == G48_POINT:
        return AutClass.G48
    if c == G24_POINT:
        return AutClass.G24
    if _consistent(c, D4_LOCUS):
        return AutClass.D4
    if _consistent(c, D6_LOCUS):
        return AutClass.D6
    return AutClass.V4


def count_by_class(points) -> dict:
    tally = Counter({t: 0 for t in AutClass})
    for p in points:
        tally[classify(p)] += 1
    return dict(tally)
