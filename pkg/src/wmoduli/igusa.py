"""Binary sextics and their Igusa invariants J2, J4, J6, J10."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from . import _tables
from .arith import common_denominator
from .binforms import mul
from .wpspace import COMPACT, ExactHeight, WeightedPoint, WeightSystem, canonicalize

# Coefficient-size bounds H(J_2i(f)) <= BOUND * H(f)^(2i) from the literature.
# Only the final weighted-height inequality is tested; these are kept for reference.
COEFFICIENT_BOUNDS = {
    2: 2**6 * 3 * 5 * 7,
    4: 2**3 * 3**5 * 5**2 * 7,
    6: 2**5 * 3**5 * 5 * 7 * 11 * 37,
    10: 2**9 * 3**5 * 5 * 7 * 11 * 13,
}

# h(p) <= 8 sqrt(105) H(f); squared constant
HEIGHT_BOUND_SQUARED = 64 * 105


class SingularCurveError(ValueError):
    pass


@dataclass(frozen=True)
class BinarySextic:
    """f(x) = a6 x^6 + ... + a0 with exact rational coefficients."""

    coeffs: tuple

    def __post_init__(self):
        c = tuple(Fraction(v) for v in self.coeffs)
        if len(c) != 7:
            raise ValueError("a sextic has 7 coefficients a0..a6")
        if not any(c):
            raise ValueError("the zero polynomial is not a sextic")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def parse(cls, text: str) -> "BinarySextic":
        return cls(tuple(Fraction(t.strip()) for t in text.split(",")))

    def __str__(self):
        return ",".join(str(c) for c in self.coeffs)

    def pretty(self) -> str:
        out = ""
        for i in range(6, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mon = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            mag = "" if mon and abs(c) == 1 else str(abs(c)) + ("*" if mon else "")
            sign = "-" if c < 0 else "+"
            out += (("-" if c < 0 else "") if not out else f" {sign} ") + mag + mon
        return out

    def scaled(self, c) -> "BinarySextic":
        return BinarySextic(tuple(c * a for a in self.coeffs))

    def integral(self) -> tuple:
        d = common_denominator(self.coeffs)
        return d, tuple(int(a * d) for a in self.coeffs)


class IgusaTuple(NamedTuple):
    J2: int
    J4: int
    J6: int
    J10: int


def _eval_terms(terms, values):
    powers = [{0: 1} for _ in values]
    total = 0
    for exps, c in terms:
        t = c
        for v, e, pw in zip(values, exps, powers):
            if e:
                if not v:
                    t = 0
                    break
                if e not in pw:
                    pw[e] = v**e
                t *= pw[e]
        total += t
    return total


def _invariants_int(a) -> IgusaTuple:
    return IgusaTuple(*(_eval_terms(_tables.IGUSA[k], a) for k in ("J2", "J4", "J6", "J10")))


def igusa_invariants(f: BinarySextic) -> IgusaTuple:
    """Exact J2..J10.  Rational inputs are scaled to integers first, so the
    result is J(d*f) = (d^2 J2, d^4 J4, d^6 J6, d^10 J10) for the common
    denominator d of the coefficients."""
    _, a = f.integral()
    return _invariants_int(a)


def moduli_point(f: BinarySextic, system: WeightSystem = COMPACT) -> WeightedPoint:
    J = igusa_invariants(f)
    if J.J10 == 0:
        raise SingularCurveError(f"y^2 = {f.pretty()} is singular (J10 = 0)")
    return canonicalize(WeightedPoint(tuple(J), system))


def naive_height(f: BinarySextic) -> Fraction:
    return max(abs(a) for a in f.coeffs)


@dataclass(frozen=True)
class HeightBoundCheck:
    holds: bool
    witness: int  # weight 2i of the coordinate attaining the weighted height
    height: ExactHeight  # weighted height of the raw (unnormalized) tuple
    naive: int


def check_height_bound(f: BinarySextic) -> HeightBoundCheck:
    """Check h(J(f)) <= 8 sqrt(105) H(f) exactly, on the unnormalized tuple.

    Both sides scale the same way under f -> d f, so rational inputs are
    cleared to integers first.  Coordinatewise: |J_2i| <= (6720 H^2)^i.
    """
    _, a = f.integral()
    J = _invariants_int(a)
    if J.J10 == 0:
        raise SingularCurveError("singular sextic")
    H = max(abs(v) for v in a)
    best_w, best = 2, None
    for v, w in zip(J, (2, 4, 6, 10)):
        h = ExactHeight(abs(v), w)
        if best is None or h > best:
            best_w, best = w, h
    holds = best.base <= (HEIGHT_BOUND_SQUARED * H * H) ** (best_w // 2)
    return HeightBoundCheck(holds, best_w, best, H)


def _form_power(lin, k):
    out = [1]
    for _ in range(k):
        out = mul(out, lin)
    return out


def transform_sextic(f: BinarySextic, M) -> BinarySextic:
    """Substitute (x, z) -> (a x + b z, c x + d z) in the homogenized sextic."""
    (a, b), (c, d) = M
    a, b, c, d = (Fraction(v) for v in (a, b, c, d))
    if a * d - b * c == 0:
        raise ValueError("singular transformation matrix")
    # linear forms as coefficient lists in x (index = power of x)
    num = [b, a]
    den = [d, c]
    out = [Fraction(0)] * 7
    for i, coef in enumerate(f.coeffs):
        if not coef:
            continue
        term = mul(_form_power(num, i), _form_power(den, 6 - i))
        for k, t in enumerate(term):
            out[k] += coef * t
    return BinarySextic(tuple(out))
