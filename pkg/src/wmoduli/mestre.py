"""Mestre's conic and cubic attached to a moduli point.

For a sextic f with covariants y1, y2, y3 the conic has matrix
A_ij = (y_i, y_j)_2 and the cubic has coefficients a_ijk = (f, y_i y_j y_k)_6.
Both are polynomials in the invariants; _tables stores them in terms of
J2..J10 with integer coefficients.  When the conic has a rational point,
composing the cubic with a parametrization of the conic gives a sextic over
Q with the prescribed invariants.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from math import factorial, gcd

from . import _tables
from .binforms import mul
from .conic import TernaryForm, parametrize
from .igusa import BinarySextic, _eval_terms

_MULTIPLICITY = {
    t: factorial(3) // (factorial(t.count(0)) * factorial(t.count(1)) * factorial(t.count(2)))
    for t in combinations_with_replacement(range(3), 3)
}


def conic_form(J) -> TernaryForm:
    J = tuple(J)
    L = [[0] * 3 for _ in range(3)]
    for (i, j), terms in _tables.CONIC.items():
        L[i][j] = L[j][i] = _eval_terms(terms, J)
    g = gcd(*(x for row in L for x in row))
    if g > 1:
        L = [[x // g for x in row] for row in L]
    return TernaryForm(tuple(tuple(r) for r in L))


def cubic_coefficients(J) -> dict:
    J = tuple(J)
    return {t: _eval_terms(terms, J) for t, terms in _tables.CUBIC.items()}


def curve_from_point(J, witness, form: TernaryForm | None = None) -> BinarySextic:
    """Sextic M(phi(x, 1)) where phi parametrizes the conic through witness."""
    if form is None:
        form = conic_form(J)
    quads = parametrize(form, witness).quadratics
    cubic = cubic_coefficients(J)
    out = [0] * 7
    for t, a in cubic.items():
        if not a:
            continue
        prod = mul(mul(quads[t[0]], quads[t[1]]), quads[t[2]])
        k = a * _MULTIPLICITY[t]
        for n, c in enumerate(prod):
            out[n] += k * c
    return BinarySextic(tuple(out))
