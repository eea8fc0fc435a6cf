"""Canonical normalized points of WP(1,2,3,5)(Q) with bounded weighted height.

A point is listed once per class: wgcd = 1 and the canonical sign rule
(J2 > 0, else J6 > 0, else J10 > 0), with all of [0,0,0,c] collapsed to
[0,0,0,1].  Points stream in lexicographic order of (J2, J4, J6, J10) and
can be split into shards by J10 range.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod

from sympy import primerange

from .wpspace import COMPACT, ExactHeight, WeightedPoint, weighted_height


@dataclass(frozen=True)
class HeightBand:
    """Points with lo < h <= hi."""

    lo: int
    hi: int

    def __post_init__(self):
        if not 0 <= self.lo < self.hi:
            raise ValueError("need 0 <= lo < hi")

    def __contains__(self, h: ExactHeight) -> bool:
        return self.lo**h.root < h.base <= self.hi**h.root

    def __str__(self):
        return f"({self.lo},{self.hi}]"

    @classmethod
    def parse(cls, text: str) -> "HeightBand":
        lo, hi = text.strip().strip("(]").split(",")
        return cls(int(lo), int(hi))


def unit_bands(h: int):
    return [HeightBand(k, k + 1) for k in range(h)]


def band_of(p: WeightedPoint) -> HeightBand:
    """The unit band (k, k+1] containing the height of p."""
    hgt = weighted_height(p)
    k = 0
    while hgt not in HeightBand(k, k + 1):
        k += 1
    return HeightBand(k, k + 1)


@dataclass(frozen=True)
class EnumerationShard:
    """Points of height <= height whose J10 lies in [lo, hi) (possibly empty)."""

    lo: int
    hi: int
    height: int

    def __post_init__(self):
        if self.height < 1:
            raise ValueError("height bound must be >= 1")
        top = self.height**5
        if not (-top <= self.lo <= self.hi <= top + 1):
            raise ValueError(f"invalid shard range [{self.lo}, {self.hi}) for h = {self.height}")


def full_shard(h: int) -> EnumerationShard:
    return EnumerationShard(-(h**5), h**5 + 1, h)


def split_shards(h: int, k: int) -> list:
    """Partition the J10 range of height h into k contiguous shards; with
    more shards than J10 values some shards are empty."""
    if k < 1:
        raise ValueError("need at least one shard")
    lo, hi = -(h**5), h**5 + 1
    n = hi - lo
    cuts = [lo + (n * i) // k for i in range(k + 1)]
    return [EnumerationShard(cuts[i], cuts[i + 1], h) for i in range(k)]


def check_partition(shards) -> None:
    ss = sorted(shards, key=lambda s: s.lo)
    for a, b in zip(ss, ss[1:]):
        if a.height != b.height:
            raise ValueError("shards use different height bounds")
        if a.hi > b.lo:
            raise ValueError(f"shards overlap: [{a.lo},{a.hi}) and [{b.lo},{b.hi})")


def count_grid(h: int) -> int:
    """Number of integer tuples in the enumeration box: 2h^5 (h+1)(2h^2+1)(2h^3+1)."""
    if h < 1:
        raise ValueError("h must be >= 1")
    return 2 * h**5 * (h + 1) * (2 * h * h + 1) * (2 * h**3 + 1)


def _prefix_primes(primes, J2, J4, J6):
    """Primes p with p | J2, p^2 | J4, p^3 | J6 (so only J10 can stop p)."""
    return [p for p in primes if J2 % p == 0 and J4 % (p * p) == 0 and J6 % (p**3) == 0]


def _prefixes(h: int):
    """(J2, J4, J6, J10 sign rule) in lexicographic order; sign rule is
    'any' (J10 of both signs), 'pos' (J10 > 0 only), or 'one' (J10 = 1)."""
    for J2 in range(0, h + 1):
        for J4 in range(-h * h, h * h + 1):
            for J6 in range(-(h**3), h**3 + 1):
                if J2 > 0:
                    yield J2, J4, J6, "any"
                elif J6 > 0:
                    yield J2, J4, J6, "any"
                elif J6 == 0:
                    yield J2, J4, J6, ("one" if J4 == 0 else "pos")


def _j10_values(rule, lo, hi, bad_moduli):
    if rule == "one":
        rng = range(1, 2) if lo <= 1 < hi else range(0)
    elif rule == "pos":
        rng = range(max(lo, 1), hi)
    else:
        rng = range(lo, hi)
    for J10 in rng:
        if J10 == 0:
            continue
        if bad_moduli and any(J10 % m == 0 for m in bad_moduli):
            continue
        yield J10


def enumerate_shard(s: EnumerationShard):
    h = s.height
    primes = list(primerange(2, h + 1))
    top = h**5
    for J2, J4, J6, rule in _prefixes(h):
        bad = [p**5 for p in _prefix_primes(primes, J2, J4, J6) if p**5 <= top]
        for J10 in _j10_values(rule, s.lo, s.hi, bad):
            yield WeightedPoint((J2, J4, J6, J10), COMPACT)


def enumerate_points(h: int):
    return enumerate_shard(full_shard(h))


def _count_multiples_free(lo, hi, moduli):
    """#{n in [lo, hi), n != 0, m does not divide n for every m in moduli}."""
    def multiples(m):
        # multiples of m in [lo, hi) excluding 0
        c = (hi - 1) // m - (lo - 1) // m
        return c - (1 if lo <= 0 < hi else 0)

    total = 0
    for r in range(len(moduli) + 1):
        for sub in combinations(moduli, r):
            total += (-1) ** r * multiples(prod(sub))
    return total


def count_shard(s: EnumerationShard) -> int:
    """Number of points enumerate_shard(s) yields, without materializing them."""
    h = s.height
    primes = list(primerange(2, h + 1))
    top = h**5
    total = 0
    for J2, J4, J6, rule in _prefixes(h):
        if rule == "one":
            total += 1 if s.lo <= 1 < s.hi else 0
            continue
        lo, hi = (max(s.lo, 1), s.hi) if rule == "pos" else (s.lo, s.hi)
        if lo >= hi:
            continue
        bad = [p**5 for p in _prefix_primes(primes, J2, J4, J6) if p**5 <= top]
        total += _count_multiples_free(lo, hi, bad)
    return total


def count_points(h: int) -> int:
    return count_shard(full_shard(h))


def band_filter(points, band: HeightBand):
    for p in points:
        if weighted_height(p) in band:
            yield p
