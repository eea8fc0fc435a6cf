import itertools
import random
from fractions import Fraction

import pytest

from wmoduli.autloci import AutClass, classify
from wmoduli.conic import diagonalize
from wmoduli.enumerate import enumerate_points
from wmoduli.igusa import BinarySextic, SingularCurveError, igusa_invariants, moduli_point
from wmoduli.mestre import conic_form, cubic_coefficients, curve_from_point
from wmoduli.reconstruct import (
    CaseTag, extra_aut_model, has_point, is_fine, reconstruct, reduce_sextic, special_locus_iii,
    special_locus_iv,
)
from wmoduli.wpspace import COMPACT, IGUSA, WeightedPoint

H1_FINE = {
    (0, -1, 0, 1), (0, -1, 1, 1), (0, 0, 0, 1), (0, 0, 1, -1), (0, 0, 1, 1), (0, 1, 0, 1),
    (1, -1, -1, 1), (1, -1, 1, -1), (1, 0, -1, 1), (1, 0, 0, -1), (1, 0, 0, 1), (1, 0, 1, 1),
    (1, 1, -1, 1), (1, 1, 1, -1), (1, 1, 1, 1),
}


def pt(c):
    return WeightedPoint(tuple(c), COMPACT)


def no_local_zero(a, b, c, place):
    """Brute-force evidence that a x^2 + b y^2 + c z^2 has no zero at place.

    a, b, c squarefree and pairwise coprime.  Real: definite.  Odd p dividing
    exactly one coefficient, say a: a primitive zero would reduce to a
    nonzero zero of b y^2 + c z^2 mod p.  p = 2: no primitive zero mod 16.
    """
    if place == "real":
        return (a > 0) == (b > 0) == (c > 0)
    p = place
    if p == 2:
        for v in itertools.product(range(16), repeat=3):
            if any(x % 2 for x in v) and (a * v[0] ** 2 + b * v[1] ** 2 + c * v[2] ** 2) % 16 == 0:
                return False
        return True
    coeffs = [a, b, c]
    hit = [i for i in range(3) if coeffs[i] % p == 0]
    if len(hit) != 1:
        return False
    r, s = (coeffs[i] for i in range(3) if i != hit[0])
    return all((r * y * y + s * z * z) % p for y in range(p) for z in range(p) if y or z)


def test_h1_fine_set():
    pts = list(enumerate_points(1))
    assert {p.coords for p in pts if is_fine(p)} == H1_FINE
    for p in pts:
        r = reconstruct(p)
        assert r.fine == (p.coords in H1_FINE)
        if r.fine:
            assert has_point(r.curve, p)
        else:
            assert r.curve is None and r.obstruction is not None


def test_h1_obstructions_confirmed():
    checked = 0
    for p in enumerate_points(1):
        r = reconstruct(p)
        if r.fine:
            continue
        D = diagonalize(conic_form(p.coords))
        place = r.obstruction.failing_place
        if place == "real" or place < 200:
            assert no_local_zero(D.a, D.b, D.c, place)
            checked += 1
    assert checked >= 4


def test_case_tags():
    assert reconstruct(pt((0, 0, 0, 1))).case_tag is CaseTag.LOCUS_V
    assert reconstruct(pt((0, 0, 1, 1))).case_tag is CaseTag.LOCUS_IV
    assert reconstruct(pt((0, 1, 0, 1))).case_tag is CaseTag.LOCUS_III
    assert reconstruct(pt((0, -1, 1, 1))).case_tag is CaseTag.J2ZERO
    assert reconstruct(pt((1, 1, 1, 1))).case_tag is CaseTag.GENERAL
    assert reconstruct(pt((40, 45, 555, 6))).case_tag is CaseTag.EXTRA_AUT
    assert str(CaseTag.J2ZERO) == "J2zero"


def test_locus_v_curve():
    r = reconstruct(pt((0, 0, 0, 1)))
    assert r.curve == BinarySextic((0, -1, 0, 0, 0, 0, 1))


def test_special_loci_formulas():
    rng = random.Random(8)
    for _ in range(40):
        J4, J10 = rng.choice([1, -1]) * rng.randint(1, 10**4), rng.choice([1, -1]) * rng.randint(1, 10**5)
        try:
            f = special_locus_iii(J4, J10)
        except SingularCurveError:
            continue
        J = igusa_invariants(f)
        assert J.J2 == 0 and J.J6 == 0
        assert has_point(f, pt((0, J4, 0, J10)))
    for _ in range(40):
        J6, J10 = rng.choice([1, -1]) * rng.randint(1, 10**4), rng.choice([1, -1]) * rng.randint(1, 10**5)
        try:
            f = special_locus_iv(J6, J10)
        except SingularCurveError:
            continue
        J = igusa_invariants(f)
        assert J.J2 == 0 and J.J4 == 0
        assert has_point(f, pt((0, 0, J6, J10)))


def test_special_loci_errors():
    with pytest.raises(ValueError):
        special_locus_iii(0, 1)
    with pytest.raises(ValueError):
        special_locus_iv(1, 0)


def test_reconstruct_point_of_random_curve():
    # the point of a curve over Q is fine, so the construction must succeed
    rng = random.Random(12)
    done = 0
    while done < 40:
        a = [rng.randint(-6, 6) for _ in range(7)]
        if not any(a):
            continue
        f = BinarySextic(a)
        if igusa_invariants(f).J10 == 0:
            continue
        p = moduli_point(f)
        r = reconstruct(p)
        assert r.fine and has_point(r.curve, p)
        assert is_fine(p)
        done += 1


def test_extra_aut_models():
    for a in ((-1, 0, 0, 0, 0, 0, 1), (0, -1, 0, 0, 0, 1, 0), (0, -1, 0, 4, 0, 4, 0),
              (1, 0, 0, 31, 0, 0, 31), (1, 0, 3, 0, 2, 0, 7), (3, 0, -1, 0, 5, 0, 2)):
        p = moduli_point(BinarySextic(a))
        aut = classify(p)
        assert aut is not AutClass.C2
        f = extra_aut_model(p, aut)
        assert has_point(f, p)
        r = reconstruct(p)
        assert r.fine and r.case_tag is CaseTag.EXTRA_AUT and has_point(r.curve, p)


def test_is_fine_matches_reconstruct_h2_sample():
    rng = random.Random(21)
    pts = rng.sample(list(enumerate_points(2)), 300)
    for p in pts:
        r = reconstruct(p)
        assert is_fine(p) == r.fine
        if r.fine:
            assert has_point(r.curve, p)


def test_reduce_sextic():
    f = reduce_sextic([Fraction(-2, 3), 0, 0, 0, 0, 0, Fraction(-4, 3)])
    assert f.coeffs == tuple(Fraction(c) for c in (1, 0, 0, 0, 0, 0, 2))


def test_has_point():
    f = BinarySextic((-1, 0, 0, 0, 0, 0, 1))
    assert has_point(f, pt((40, 45, 555, 6)))
    assert has_point(f, pt((240, 1620, 119880, 46656)))
    assert not has_point(f, pt((40, 45, 555, 7)))
    assert not has_point(BinarySextic((0, 0, 0, 0, 0, 1, 1)), pt((1, 1, 1, 1)))


def test_singular_input():
    with pytest.raises(SingularCurveError):
        reconstruct(pt((1, 1, 1, 0)))
    with pytest.raises(SingularCurveError):
        is_fine(pt((1, 1, 1, 0)))


def test_mestre_pieces():
    J = (1, 1, 1, 1)
    Q = conic_form(J)
    assert Q.det() != 0
    assert len(cubic_coefficients(J)) == 10
    r = reconstruct(pt(J))
    f = curve_from_point(J, r.obstruction.witness, Q)
    assert has_point(f, pt(J))


def test_igusa_system_input():
    r = reconstruct(WeightedPoint((1, 1, 1, 1), IGUSA))
    assert r.fine
