"""Points of the weighted projective spaces WP(2,4,6,10) and WP(1,2,3,5) over Q.

Everything here works on integer representatives.  Heights are kept as
exact ``base^(1/root)`` pairs so that cutoffs never touch floating point.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from math import gcd

from sympy import integer_nthroot

from .arith import factor


class InvalidPointError(ValueError):
    pass


class ScalingError(ValueError):
    pass


@dataclass(frozen=True)
class WeightSystem:
    weights: tuple

    def __post_init__(self):
        w = tuple(self.weights)
        if w not in ((2, 4, 6, 10), (1, 2, 3, 5)):
            raise ValueError(f"unsupported weight system {w}")
        object.__setattr__(self, "weights", w)

    def __str__(self):
        return ",".join(map(str, self.weights))

    @classmethod
    def parse(cls, text: str) -> "WeightSystem":
        return cls(tuple(int(t) for t in text.split(",")))


IGUSA = WeightSystem((2, 4, 6, 10))
COMPACT = WeightSystem((1, 2, 3, 5))


@dataclass(frozen=True)
class WeightedPoint:
    coords: tuple
    system: WeightSystem = COMPACT

    def __post_init__(self):
        c = tuple(int(v) for v in self.coords)
        if len(c) != 4:
            raise InvalidPointError("a point has exactly four coordinates")
        object.__setattr__(self, "coords", c)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __str__(self):
        return "[" + ",".join(map(str, self.coords)) + "]"

    def with_coords(self, coords) -> "WeightedPoint":
        return WeightedPoint(tuple(coords), self.system)


_TUPLE_RE = re.compile(r"^\s*\[\s*([^\]]*)\]\s*$")


def parse_point(text: str, system: WeightSystem = COMPACT) -> WeightedPoint:
    """Parse the ``[J2,J4,J6,J10]`` text format."""
    m = _TUPLE_RE.match(text)
    if not m:
        raise InvalidPointError(f"not a tuple: {text!r}")
    parts = [s.strip() for s in m.group(1).split(",")]
    if len(parts) != 4:
        raise InvalidPointError(f"expected 4 coordinates: {text!r}")
    try:
        return WeightedPoint(tuple(int(s) for s in parts), system)
    except ValueError as exc:
        raise InvalidPointError(str(exc)) from None


def _check_nonzero(p: WeightedPoint):
    if not any(p.coords):
        raise InvalidPointError("all-zero tuple")


def _valuation(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def wgcd(p: WeightedPoint) -> int:
    """Largest d >= 1 with d^q_i | J_i for every coordinate."""
    _check_nonzero(p)
    if p.system == COMPACT and max(abs(c) for c in p.coords).bit_length() > _BIG:
        d = _wgcd_by_ratio(p)
        if d is not None:
            return d
    return _wgcd_by_factoring(p)


# above this many bits, factoring the gcd of the coordinates gets expensive
_BIG = 96


def _weight_one_ratio(c):
    """A rational r of weight 1 in the coordinates (J2, J4, J6, J10), or None."""
    J2, J4, J6, J10 = c
    if J2:
        return Fraction(J2)
    if J4 and J6:
        return Fraction(J6, J4)
    if J4 and J10:
        return Fraction(J10, J4 * J4)
    if J6 and J10:
        return Fraction(J6 * J6, J10)
    return None


def _wgcd_by_ratio(p: WeightedPoint):
    """wgcd for (1,2,3,5) tuples without factoring their (large) gcd.

    If p = d * y with y normalized, rescaling p by a weight-1 ratio r gives
    a tuple of small rationals; clearing denominators and normalizing that
    only factors small numbers, and d is read off from y.
    """
    r = _weight_one_ratio(p.coords)
    if r is None:
        return None
    w = p.system.weights
    small = [Fraction(c) / r**q for c, q in zip(p.coords, w)]
    den = 1
    for v in small:
        den = den * v.denominator // gcd(den, v.denominator)
    z = WeightedPoint(tuple(int(v * den**q) for v, q in zip(small, w)), p.system)
    y = z.with_coords(c // _wgcd_by_factoring(z) ** q for c, q in zip(z.coords, w))
    # p = kappa * y; any coordinate fixes kappa^q, the weight-1 ratio fixes kappa
    ry = _weight_one_ratio(y.coords)
    kappa = abs(r / ry)
    if kappa.denominator != 1:
        return None
    d = kappa.numerator
    if any(c != yc * d**q and c != -yc * d**q for c, yc, q in zip(p.coords, y.coords, w)):
        return None
    return d


def _wgcd_by_factoring(p: WeightedPoint) -> int:
    nz = [(abs(c), q) for c, q in zip(p.coords, p.system.weights) if c]
    g = 0
    for c, _ in nz:
        g = gcd(g, c)
    if g == 1:
        return 1
    d = 1
    for prime in sorted(factor(g)):
        e = min(_valuation(c, prime) // q for c, q in nz)
        d *= prime**e
    return d


def star_scale(p: WeightedPoint, lam) -> WeightedPoint:
    """lam * p = (lam^q0 x0, ..., lam^q3 x3)."""
    lam = Fraction(lam)
    if lam == 0:
        raise ScalingError("scalar must be nonzero")
    out = []
    for c, q in zip(p.coords, p.system.weights):
        v = c * lam**q
        if v.denominator != 1:
            raise ScalingError(f"{lam} * {p} is not integral")
        out.append(v.numerator)
    return p.with_coords(out)


def normalize(p: WeightedPoint) -> WeightedPoint:
    d = wgcd(p)
    if d == 1:
        return p
    return p.with_coords(c // d**q for c, q in zip(p.coords, p.system.weights))


def absolute_normalize(p: WeightedPoint) -> WeightedPoint:
    """Normalize over Qbar: scalars with lam^2 integral, i.e. (1,2,3,5) normalization."""
    if p.system != IGUSA:
        raise InvalidPointError("absolute normalization expects weights (2,4,6,10)")
    return normalize(WeightedPoint(p.coords, COMPACT))


def equivalent(p: WeightedPoint, q: WeightedPoint) -> bool:
    """p = lam * q for some rational lam != 0, tested without normalizing."""
    if p.system != q.system:
        raise InvalidPointError("points use different weight systems")
    _check_nonzero(p)
    _check_nonzero(q)
    w = p.system.weights
    if any((a == 0) != (b == 0) for a, b in zip(p.coords, q.coords)):
        return False
    nz = [i for i in range(4) if p[i]]
    for i in nz:
        for j in nz:
            if i < j and p[i] ** w[j] * q[j] ** w[i] != q[i] ** w[j] * p[j] ** w[i]:
                return False
    # now p = lam * q over Qbar; rho = lam^g is rational for g the gcd of the
    # weights in use, and lam can be chosen rational iff rho is a g-th power
    if len(nz) == 1:
        i = nz[0]
        return _is_power(Fraction(p[i], q[i]), w[i])
    # any two of 1,2,3,5 are coprime, so g = w[0] and the weight-1 ratio gives rho
    rho = _weight_one_ratio(p.coords) / _weight_one_ratio(q.coords)
    return _is_power(rho, w[0])


def _is_power(x: Fraction, k: int) -> bool:
    """x has a rational k-th root."""
    x = Fraction(x)
    if x < 0:
        return k % 2 == 1 and _is_power(-x, k)
    return integer_nthroot(x.numerator, k)[1] and integer_nthroot(x.denominator, k)[1]


def sign_companion(p: WeightedPoint) -> WeightedPoint:
    J2, J4, J6, J10 = p.coords
    return p.with_coords((-J2, J4, -J6, -J10))


def canonicalize(p: WeightedPoint) -> WeightedPoint:
    """Canonical normalized representative of {p, sign_companion(p)}.

    Sign rule: J2 > 0, else J6 > 0, else J10 > 0.  Tuples [0,0,0,c] all
    describe the same curve over Qbar and collapse to [0,0,0,1].
    """
    J2, J4, J6, J10 = p.coords
    if J10 == 0:
        raise InvalidPointError("J10 = 0 is not a moduli point")
    if J2 == J4 == J6 == 0:
        return p.with_coords((0, 0, 0, 1))
    q = normalize(p)
    lead = next(c for c in (q[0], q[2], q[3]) if c)
    return q if lead > 0 else sign_companion(q)


@total_ordering
class ExactHeight:
    """The real number base^(1/root), compared exactly by cross powers."""

    __slots__ = ("base", "root")

    def __init__(self, base: int, root: int):
        if base < 0 or root < 1:
            raise ValueError("need base >= 0 and root >= 1")
        self.base = int(base)
        self.root = int(root)

    @staticmethod
    def _coerce(other):
        if isinstance(other, ExactHeight):
            return other
        if isinstance(other, int) and other >= 0:
            return ExactHeight(other, 1)
        return NotImplemented

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.base**o.root == o.base**self.root

    def __lt__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self.base**o.root < o.base**self.root

    def __hash__(self):
        # equal values share the same reduced form only after extracting roots,
        # so hash the float rendering rounded hard; equality stays exact
        return hash(round(float(self), 9))

    def __float__(self):
        return float(self.base) ** (1.0 / self.root)

    def __repr__(self):
        return f"ExactHeight({self.base}, {self.root})"

    def __str__(self):
        return f"{float(self):.6g}"


def weighted_height(p: WeightedPoint) -> ExactHeight:
    """max |J_i|^(1/q_i) over the normalized representative of p."""
    q = normalize(p)
    best = None
    for c, w in zip(q.coords, q.system.weights):
        h = ExactHeight(abs(c), w)
        if best is None or h > best:
            best = h
    return best


def height_leq(h: ExactHeight, bound: int) -> bool:
    return h.base <= bound**h.root


def height_gt(h: ExactHeight, bound: int) -> bool:
    return h.base > bound**h.root


def moduli_height(p: WeightedPoint) -> int:
    return max(abs(c) for c in p.coords)
