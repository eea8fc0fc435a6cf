"""Acceptance criteria: one PASS/FAIL line per criterion.

Long checks (h = 4 count, band (3,4] tally, band (2,3] fine count) run only
with WMODULI_LONG=1.
"""

import os
import random
import time
from collections import Counter

import pytest

from wmoduli.autloci import classify
from wmoduli.conic import TernaryForm, has_rational_point
from wmoduli.db import build_database, load_records, summarize, truncate3
from wmoduli.enumerate import count_grid, count_points, enumerate_points
from wmoduli.igusa import BinarySextic, check_height_bound, igusa_invariants, moduli_point
from wmoduli.reconstruct import is_fine, reconstruct, special_locus_iii, special_locus_iv
from wmoduli.wpspace import IGUSA, ExactHeight, WeightedPoint, absolute_normalize, canonicalize, weighted_height

LONG = os.environ.get("WMODULI_LONG") == "1"


@pytest.fixture
def report(capsys):
    def emit(n, name, ok, detail=""):
        with capsys.disabled():
            print(f"\n[criterion {n:>2}] {'PASS' if ok else 'FAIL'}  {name}  {detail}")
        assert ok, f"criterion {n}: {name} {detail}"
    return emit


def skip_long(capsys, n, name):
    with capsys.disabled():
        print(f"\n[criterion {n:>2}] SKIP  {name}  (long check, set WMODULI_LONG=1)")
    pytest.skip("long check")


def band_index(p):
    """0, 1, 2, 3 for the unit bands (0,1] ... (3,4]; exact integer comparisons."""
    k = 0
    while not all(abs(c) <= (k + 1) ** q for c, q in zip(p.coords, (1, 2, 3, 5))):
        k += 1
    return k


@pytest.fixture(scope="module")
def h2_builds(tmp_path_factory):
    root = tmp_path_factory.mktemp("acceptance")
    one = build_database(2, root / "k1", shards=1)
    four = build_database(2, root / "k4", shards=4)
    return one, four


X6M1 = BinarySextic((-1, 0, 0, 0, 0, 0, 1))
X5MX = BinarySextic((0, -1, 0, 0, 0, 1, 0))
X6MX = BinarySextic((0, -1, 0, 0, 0, 0, 1))


def test_c01_calibration(report):
    got = [tuple(igusa_invariants(f)) for f in (X6M1, X5MX, X6MX)]
    want = [(240, 1620, 119880, 46656), (-40, -80, 320, -256), (0, 0, 0, 3125)]
    report(1, "invariant calibration", got == want, f"{got}")


def test_c02_minimal_tuples_and_heights(report):
    got, hs = [], []
    for f in (X6M1, X5MX, X6MX):
        p = absolute_normalize(WeightedPoint(tuple(igusa_invariants(f)), IGUSA))
        got.append(p.coords)
        hs.append(weighted_height(WeightedPoint(p.coords, IGUSA)))
    ok = got == [(40, 45, 555, 6), (-20, -20, 40, -8), (0, 0, 0, 1)]
    ok = ok and hs[0] == ExactHeight(40, 2) and hs[1] == ExactHeight(20, 2) and hs[2] == 1
    report(2, "minimal tuples and heights", ok, f"{got} heights {[(h.base, h.root) for h in hs]}")


def test_c03_count_grid(report):
    got = [count_grid(h) for h in range(1, 5)]
    report(3, "count_grid h=1..4", got == [36, 29376, 2031480, 43591680], f"{got}")


def test_c04_enumeration_counts(report):
    t = time.time()
    got = [sum(1 for _ in enumerate_points(h)) for h in (1, 2, 3)]
    dt = time.time() - t
    report(4, "enumeration counts h=1..3", got == [27, 24423, 1776549] and dt < 60,
           f"{got} in {dt:.1f}s; closed-form h=4 count {count_points(4)}")


def test_c04_long_h4(report, capsys):
    if not LONG:
        skip_long(capsys, 4, "streamed h=4 count")
    n = sum(1 for _ in enumerate_points(4))
    report(4, "streamed h=4 count", n == 39206865, f"{n}")


TABLE_H1 = [
    (0, -1, 0, 1), (0, 1, 0, 1), (0, -1, 1, 1), (0, 0, 0, 1), (0, 0, 1, -1), (0, 0, 1, 1),
    (1, 0, -1, 1), (1, 0, 0, -1), (1, 0, 0, 1), (1, 0, 1, 1), (1, -1, -1, 1), (1, 1, -1, 1),
    (1, 1, 1, -1), (1, -1, 1, -1), (1, 1, 1, 1), (1, 0, -1, -1), (0, -1, 1, -1), (0, 1, 1, -1),
    (0, 1, 1, 1), (1, 0, 1, -1), (1, -1, -1, -1), (1, 1, -1, -1), (1, -1, 0, -1), (1, 1, 0, -1),
    (1, 1, 0, 1), (1, -1, 0, 1), (1, -1, 1, 1),
]
TWISTS_H1 = [
    ((0, -1, -1, -1), (0, -1, 1, 1)), ((0, -1, -1, 1), (0, -1, 1, -1)),
    ((0, -1, 0, -1), (0, -1, 0, 1)), ((0, 0, -1, -1), (0, 0, 1, 1)),
    ((0, 0, -1, 1), (0, 0, 1, -1)), ((0, 0, 0, -1), (0, 0, 0, 1)),
    ((0, 1, -1, -1), (0, 1, 1, 1)), ((0, 1, -1, 1), (0, 1, 1, -1)),
    ((0, 1, 0, -1), (0, 1, 0, 1)),
]


def test_c05_h1_point_set(report):
    pts = {p.coords for p in enumerate_points(1)}
    table = {canonicalize(WeightedPoint(t)).coords for t in TABLE_H1}
    classes = set()
    for p, q in TWISTS_H1:
        a, b = canonicalize(WeightedPoint(p)).coords, canonicalize(WeightedPoint(q)).coords
        if a == b and a in pts:
            classes.add(a)
    ok = pts == table and len(pts) == 27 and len(classes) == 9
    report(5, "h=1 point set and twist pairs", ok, f"{len(pts)} points, {len(classes)} twist classes")


def tally(points, bands):
    out = {b: Counter() for b in bands}
    for p in points:
        k = band_index(p)
        if k in out:
            out[k][str(classify(p))] += 1
    return out


def test_c06_aut_tallies(report):
    got = tally(enumerate_points(3), (0, 1, 2))
    want = {0: {"C2": 26, "C10": 1}, 1: {"C2": 24396}, 2: {"C2": 1752124, "V4": 2}}
    ok = all(dict(got[k]) == want[k] for k in want)
    report(6, "aut tallies (0,1] (1,2] (2,3]", ok, f"{[dict(got[k]) for k in (0, 1, 2)]}")


def test_c06_long_band4(report, capsys):
    if not LONG:
        skip_long(capsys, 6, "aut tally (3,4]")
    got = tally(enumerate_points(4), (3,))[3]
    extra = {t: n for t, n in got.items() if t != "C2"}
    report(6, "aut tally (3,4] non-C2", extra == {"D4": 1, "V4": 14}, f"{extra}")


def test_c07_fine_counts(report, h2_builds):
    h, records = load_records(h2_builds[0])
    b1, b2 = summarize(records, h).bands
    got = (b1.fine, b2.fine, truncate3(b1.ratio), truncate3(b2.ratio))
    report(7, "fine counts (0,1] (1,2]", got == (15, 9423, "0.555", "0.386"), f"{got}")


def test_c07_long_band3(report, capsys):
    if not LONG:
        skip_long(capsys, 7, "fine count (2,3]")
    n = sum(1 for p in enumerate_points(3) if band_index(p) == 2 and is_fine(p))
    report(7, "fine count (2,3]", n == 596818, f"{n}")


def test_c08_height_bound(report):
    rng = random.Random(8)
    t = time.time()
    done = bad = 0
    while done < 10000:
        a = [rng.randint(-100, 100) for _ in range(7)]
        if not any(a):
            continue
        f = BinarySextic(a)
        if igusa_invariants(f).J10 == 0:
            continue
        bad += not check_height_bound(f).holds
        done += 1
    dt = time.time() - t
    report(8, "height bound on 10000 sextics", bad == 0 and dt < 60, f"{bad} violations in {dt:.1f}s")


def test_c09_conic_oracle(report):
    # a zero exists iff one exists below the Cassels bound 3H = 90
    t = time.time()
    R = [x for x in range(-30, 31) if x]
    sq = [x * x for x in range(91)]
    bad = n = 0
    solvable = []
    for a in R:
        for b in R:
            S = {a * X + b * Y for i, X in enumerate(sq) for j, Y in enumerate(sq) if i or j}
            for c in R:
                found = any(-c * Z in S for Z in sq)
                v = has_rational_point(TernaryForm.diagonal(a, b, c), find_witness=False)
                bad += v.solvable != found
                n += 1
                if found:
                    solvable.append((a, b, c))
    dt = time.time() - t
    for a, b, c in random.Random(9).sample(solvable, 500):
        w = has_rational_point(TernaryForm.diagonal(a, b, c)).witness
        bad += a * w[0] ** 2 + b * w[1] ** 2 + c * w[2] ** 2 != 0 or not any(w)
    report(9, "conic oracle |a|,|b|,|c|<=30", bad == 0 and dt < 60,
           f"{n} forms, {bad} disagreements, {dt:.1f}s")


def test_c10_round_trip(report):
    t = time.time()
    fine = [p for p in enumerate_points(2) if is_fine(p)]
    dt_select = time.time() - t
    t = time.time()
    bad = sum(canonicalize(moduli_point(reconstruct(p).curve)) != p for p in fine)
    dt = time.time() - t
    loci = Counter()
    for p in enumerate_points(2):
        J2, J4, J6, J10 = p.coords
        if J2 or (J4 and J6):
            continue
        if J4:
            f, tag = special_locus_iii(J4, J10), "iii"
        elif J6:
            f, tag = special_locus_iv(J6, J10), "iv"
        else:
            f, tag = X6MX, "v"
        bad += moduli_point(f) != p
        loci[tag] += 1
    ok = bad == 0 and len(fine) == 9438 and dt < 60
    report(10, "round trip h<=2 and loci iii/iv/v", ok,
           f"{len(fine)} fine points round-tripped in {dt:.1f}s (selection {dt_select:.1f}s), "
           f"loci {dict(loci)}, {bad} mismatches")


def test_c11_determinism(report, h2_builds):
    one, four = h2_builds
    report(11, "h=2 build 1 vs 4 shards byte-identical", one.read_bytes() == four.read_bytes(),
           f"{one.stat().st_size} bytes")
