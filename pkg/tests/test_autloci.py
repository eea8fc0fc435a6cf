import random
from fractions import Fraction

import pytest

from oracles import reduced_automorphism_count
from wmoduli.autloci import (
    G24_POINT, G48_POINT, AutClass, classify, count_by_class, dihedral_invariants,
    extra_involution,
)
from wmoduli.enumerate import enumerate_points
from wmoduli.igusa import BinarySextic, igusa_invariants, moduli_point, transform_sextic
from wmoduli.reconstruct import dihedral_model
from wmoduli.wpspace import COMPACT, WeightedPoint, canonicalize

# reduced automorphism group order (Aut / hyperelliptic involution) per tag
REDUCED = {AutClass.C2: 1, AutClass.V4: 2, AutClass.D4: 4, AutClass.D6: 6, AutClass.C10: 5,
           AutClass.G24: 12, AutClass.G48: 24}

KNOWN = {
    AutClass.G24: (-1, 0, 0, 0, 0, 0, 1),
    AutClass.G48: (0, -1, 0, 0, 0, 1, 0),
    AutClass.C10: (0, -1, 0, 0, 0, 0, 1),
    AutClass.D4: (0, -1, 0, 4, 0, 4, 0),
    AutClass.D6: (1, 0, 0, 31, 0, 0, 31),
    AutClass.V4: (1, 0, 3, 0, 2, 0, 7),
    AutClass.C2: (1, 2, 0, -3, 1, 0, 5),
}


def finite_roots(a):
    """Move every root off infinity so the numerical oracle sees six roots."""
    for M in (((1, 0), (0, 1)), ((2, 1), (1, 3)), ((3, 1), (1, -2)), ((5, 2), (1, 7))):
        f = transform_sextic(BinarySextic(a), M)
        if f.coeffs[6]:
            return [int(c) for c in f.coeffs]
    raise AssertionError("no chart with a6 != 0")


def tag_of(a):
    return classify(moduli_point(BinarySextic(a)))


def test_orders():
    assert AutClass.G48.order == 48
    assert AutClass.C3_FAMILY.order == 6
    assert str(AutClass.C3_FAMILY) == "C3-family"


def test_known_curves():
    for tag, a in KNOWN.items():
        assert tag_of(a) is tag
        assert reduced_automorphism_count(finite_roots(a)) == REDUCED[tag]


def test_special_points():
    assert classify(WeightedPoint(G24_POINT)) is AutClass.G24
    assert classify(WeightedPoint(G48_POINT)) is AutClass.G48
    assert classify(WeightedPoint((-20, -20, 40, -8))) is AutClass.G48
    assert classify(WeightedPoint((0, 0, 0, 1))) is AutClass.C10
    assert classify(WeightedPoint((0, 0, 0, -32))) is AutClass.C10
    with pytest.raises(ValueError):
        classify(WeightedPoint((1, 1, 1, 0)))


def test_random_curves_against_oracle():
    rng = random.Random(3)
    checked = 0
    while checked < 25:
        a = [rng.randint(-5, 5) for _ in range(6)] + [rng.choice([1, 2, -1])]
        if rng.random() < 0.5:
            # even sextics always carry the extra involution x -> -x
            a = [c if i % 2 == 0 else 0 for i, c in enumerate(a)]
        f = BinarySextic(a)
        if igusa_invariants(f).J10 == 0:
            continue
        assert REDUCED[classify(moduli_point(f))] == reduced_automorphism_count(a)
        checked += 1


def integral_point(J):
    """Clear denominators of a rational tuple by weighted scaling."""
    den = 1
    for x, w in zip(J, (1, 2, 3, 5)):
        while (x * den**w).denominator != 1:
            den *= x.denominator
    return WeightedPoint(tuple(int(x * den**w) for x, w in zip(J, (1, 2, 3, 5))))


def test_extra_involution_vanishes_on_dihedral_family():
    rng = random.Random(1)
    for _ in range(30):
        u = Fraction(rng.randint(-50, 50), rng.randint(1, 5))
        v = Fraction(rng.randint(-50, 50), rng.randint(1, 5))
        J = dihedral_invariants(u, v)
        if J[3] == 0:
            continue
        assert extra_involution(integral_point(J).coords) == 0


def test_dihedral_model_round_trip():
    rng = random.Random(4)
    done = 0
    while done < 15:
        u, v = rng.randint(-60, 60), rng.randint(-20, 20)
        J = dihedral_invariants(u, v)
        if J[3] == 0:
            continue
        f = dihedral_model(u, v)
        assert moduli_point(f) == canonicalize(integral_point(J))
        assert reduced_automorphism_count(finite_roots(f.coeffs)) >= 2
        done += 1


def test_h1_tally():
    tally = count_by_class(enumerate_points(1))
    assert tally[AutClass.C2] == 26 and tally[AutClass.C10] == 1
    assert sum(tally.values()) == 27


def test_count_by_class_empty():
    tally = count_by_class([])
    assert set(tally) == set(AutClass) and not any(tally.values())


def test_classify_uses_compact_canonical_form():
    p = WeightedPoint((40, 45, 555, 6), COMPACT)
    assert classify(WeightedPoint((240, 1620, 119880, 46656))) is classify(p)
