"""Curves over Q from moduli points, and the fine/coarse decision."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

import sympy

from . import _tables
from .arith import primitive, squarefree_decomposition
from .autloci import (G24_POINT, G48_POINT, AutClass, classify, dihedral_parameters,
                      extra_involution)
from .conic import ConicVerdict, has_rational_point
from .igusa import BinarySextic, SingularCurveError, _eval_terms, igusa_invariants
from .mestre import conic_form, curve_from_point
from .wpspace import COMPACT, WeightedPoint, canonicalize, equivalent


class ReconstructionError(RuntimeError):
    pass


class CaseTag(str, enum.Enum):
    GENERAL = "general"
    J2ZERO = "J2zero"
    LOCUS_III = "locusIII"
    LOCUS_IV = "locusIV"
    LOCUS_V = "locusV"
    EXTRA_AUT = "extra-aut"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ReconstructionResult:
    curve: Optional[BinarySextic]
    fine: bool
    obstruction: Optional[ConicVerdict]
    case_tag: CaseTag


def reduce_sextic(coeffs) -> BinarySextic:
    """Primitive integer twist with positive leading coefficient."""
    c = primitive(coeffs)
    lead = next(x for x in reversed(c) if x)
    if lead < 0:
        c = [-x for x in c]
    return BinarySextic(tuple(c))


# ---------------------------------------------------------------- special loci

def _nonsingular(coeffs, what) -> BinarySextic:
    if not any(coeffs):
        raise SingularCurveError(f"{what}: zero polynomial")
    f = BinarySextic(tuple(coeffs))
    if igusa_invariants(f).J10 == 0:
        raise SingularCurveError(f"{what}: sextic is singular")
    return f


def special_locus_iii(J4: int, J10: int) -> BinarySextic:
    """Curve with J2 = J6 = 0 and the given J4, J10 (up to weighted scaling)."""
    if J4 * J10 == 0:
        raise ValueError("need J4 * J10 != 0")
    nu = Fraction(J4**5, 2**2 * 3**5 * 5**5 * J10**2)
    o = 1 - nu
    coeffs = [-o**3, 6 * o**3, 5 * (2 * nu - 3) * o**2, 20 * o**2, -15 * o,
              2 * o * (4 * nu + 3), (4 * nu + 1) * (2 * nu - 1)]
    return _nonsingular(coeffs, f"locus iii at nu = {nu}")


def special_locus_iv(J6: int, J10: int) -> BinarySextic:
    """Curve with J2 = J4 = 0 and the given J6, J10 (up to weighted scaling)."""
    if J6 * J10 == 0:
        raise ValueError("need J6 * J10 != 0")
    mu = Fraction(J6**5, 2**4 * 3**4 * 5**5 * J10**3)
    o = 1 - mu
    coeffs = [(4 * mu - 13) * o**3, -60 * o**3, 15 * (4 * mu - 7) * o**2, -80 * o**2,
              -15 * o, 12 * o, Fraction(5)]
    return _nonsingular(coeffs, f"locus iv at mu = {mu}")


# ---------------------------------------------------------------- extra automorphisms

def dihedral_model(u, v) -> BinarySextic:
    """A sextic over Q whose extra involution has dihedral parameters (u, v).

    Start from w' s^6 + v^2 s^4 + v^2 s^2 + w with w, w' = (u +- r)/2,
    r^2 = u^2 - 4 v^3, move the involution to s -> -s by s = (t-1)/(t+1)
    and rescale t = x / sqrt(d) where r = m sqrt(d); every coefficient is
    then rational.
    """
    u, v = Fraction(u), Fraction(v)
    if v == 0:
        return reduce_sextic([-1, 0, 0, 0, -u, 0, u])
    disc = u * u - 4 * v**3
    if disc == 0:
        d, m = 1, Fraction(0)
    else:
        d, r = squarefree_decomposition(disc.numerator * disc.denominator)
        m = Fraction(r, disc.denominator)
    g = {0: 2 * v * v, 2: -2 * v * v, 4: -2 * v * v, 6: 2 * v * v}
    coeffs = []
    for k in range(7):
        if k % 2 == 0:
            coeffs.append(Fraction(d) ** (3 - k // 2) * (u * comb(6, k) + g[k]))
        else:
            coeffs.append(Fraction(d) ** (3 - (k - 1) // 2) * m * comb(6, k))
    return reduce_sextic(coeffs)


_t = sympy.Symbol("t")
# one-parameter families covering the D4 and D6 loci
_D4_FAMILY = (0, _t, 0, 1, 0, 1, 0)  # x^5 + x^3 + t x
_D6_FAMILY = (_t, 0, 0, 1, 0, 0, 1)  # x^6 + x^3 + t


def _family_member(family, J) -> Optional[BinarySextic]:
    """Rational t with J(family(t)) equal to J in WP(1,2,3,5), if one exists."""
    inv = [sympy.expand(_eval_terms(_tables.IGUSA[k], family)) for k in ("J2", "J4", "J6", "J10")]
    w = (1, 2, 3, 5)
    g = sympy.Integer(0)
    for i in range(4):
        for j in range(i + 1, 4):
            e = sympy.expand(inv[i] ** w[j] * J[j] ** w[i] - inv[j] ** w[i] * J[i] ** w[j])
            g = sympy.gcd(g, e)
    if g == 0:
        return None
    for root in sorted(sympy.Poly(g, _t).ground_roots()):
        vals = [sympy.Rational(sympy.sympify(c).subs(_t, root)) for c in family]
        f = BinarySextic(tuple(Fraction(int(v.p), int(v.q)) for v in vals))
        if igusa_invariants(f).J10 != 0:
            return reduce_sextic(f.coeffs)
    return None


def extra_aut_model(p: WeightedPoint, aut: AutClass) -> BinarySextic:
    c = canonicalize(WeightedPoint(p.coords, COMPACT)).coords
    if aut is AutClass.C10:
        return BinarySextic((0, -1, 0, 0, 0, 0, 1))
    if c == G48_POINT:
        return BinarySextic((0, -1, 0, 0, 0, 1, 0))
    if c == G24_POINT:
        return BinarySextic((-1, 0, 0, 0, 0, 0, 1))
    candidates = []
    if aut is AutClass.D4:
        candidates.append(lambda: _family_member(_D4_FAMILY, c))
    if aut is AutClass.D6:
        candidates.append(lambda: _family_member(_D6_FAMILY, c))
    for u, v in dihedral_parameters(c):
        candidates.append(lambda u=u, v=v: dihedral_model(u, v))
    for make in candidates:
        f = make()
        if f is not None and has_point(f, p):
            return f
    raise ReconstructionError(f"no rational model found for {aut} point {p}")


# ---------------------------------------------------------------- dispatch

def _check_point(p: WeightedPoint):
    if p.coords[3] == 0:
        raise SingularCurveError("J10 = 0 is not a moduli point")


def has_point(f: BinarySextic, p: WeightedPoint) -> bool:
    """Whether the moduli point of y^2 = f is p, compared in WP(1,2,3,5)."""
    J = WeightedPoint(tuple(igusa_invariants(f)), COMPACT)
    if J[3] == 0:
        return False
    target = WeightedPoint(p.coords, COMPACT)
    if target[0] == target[1] == target[2] == 0:
        # every [0,0,0,c] is the same curve over Qbar
        return J[0] == J[1] == J[2] == 0
    return equivalent(J, target)


def _round_trip(f: BinarySextic, p: WeightedPoint, what: str) -> BinarySextic:
    if not has_point(f, p):
        raise ReconstructionError(f"{what}: curve {f} does not have moduli point {p}")
    return f


def reconstruct(p: WeightedPoint) -> ReconstructionResult:
    _check_point(p)
    J2, J4, J6, J10 = p.coords
    if J2 == J4 == J6 == 0:
        f = BinarySextic((0, -1, 0, 0, 0, 0, 1))
        return ReconstructionResult(f, True, None, CaseTag.LOCUS_V)
    if J2 == 0 and J4 == 0:
        try:
            f = reduce_sextic(special_locus_iv(J6, J10).coeffs)
            return ReconstructionResult(_round_trip(f, p, "locus iv"), True, None,
                                        CaseTag.LOCUS_IV)
        except SingularCurveError:
            pass
    if J2 == 0 and J6 == 0:
        try:
            f = reduce_sextic(special_locus_iii(J4, J10).coeffs)
            return ReconstructionResult(_round_trip(f, p, "locus iii"), True, None,
                                        CaseTag.LOCUS_III)
        except SingularCurveError:
            pass
    aut = classify(p)
    if aut is not AutClass.C2:
        f = extra_aut_model(p, aut)
        return ReconstructionResult(f, True, None, CaseTag.EXTRA_AUT)
    tag = CaseTag.J2ZERO if J2 == 0 else CaseTag.GENERAL
    form = conic_form(p.coords)
    verdict = has_rational_point(form)
    if not verdict.solvable:
        return ReconstructionResult(None, False, verdict, tag)
    f = reduce_sextic(curve_from_point(p.coords, verdict.witness, form).coeffs)
    return ReconstructionResult(_round_trip(f, p, "general case"), True, verdict, tag)


def is_fine(p: WeightedPoint) -> bool:
    """Fine iff some curve over Q has moduli point p.

    Same verdict as reconstruct(p).fine, without building the curve.
    """
    _check_point(p)
    J2, J4, J6, J10 = p.coords
    if J2 == J4 == J6 == 0:
        return True
    try:
        if J2 == 0 and J4 == 0:
            special_locus_iv(J6, J10)
            return True
        if J2 == 0 and J6 == 0:
            special_locus_iii(J4, J10)
            return True
    except SingularCurveError:
        pass
    if extra_involution(p.coords) == 0:
        return True
    return has_rational_point(conic_form(p.coords), find_witness=False).solvable


__all__ = [
    "CaseTag", "ReconstructionResult", "ReconstructionError", "reconstruct", "is_fine",
    "special_locus_iii", "special_locus_iv", "dihedral_model", "extra_aut_model",
    "reduce_sextic", "has_point",
]
