"""Regenerate src/wmoduli/_tables.py.

The tables are integer polynomials:

* J2, J4, J6, J10 in the sextic coefficients a0..a6 (J10 is the discriminant),
* the entries of the Mestre conic and cubic in J2, J4, J6, J10,
* the conic determinant divided by its content (the extra-involution locus).

The conic entries (y_i, y_j)_2 and cubic entries (f, y_i y_j y_k)_6 are
fitted as polynomials in the Clebsch invariants from exact evaluations on
random sextics, then rewritten in terms of the J's.

Run:  python3 tools/gen_tables.py > src/wmoduli/_tables.py
"""

import itertools
import random
import sys
from fractions import Fraction
from pathlib import Path

import sympy

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))
from wmoduli import binforms as bf  # noqa: E402

a = sympy.symbols("a0:7")
A, B, C, D = sympy.symbols("A B C D")
J = sympy.symbols("J2 J4 J6 J10")


def generic_invariants():
    f = list(a)
    i = _tv(f, f, 4)
    delta = _tv(i, i, 2)
    A_ = _tv(f, f, 6)[0]
    B_ = _tv(i, i, 4)[0]
    C_ = _tv(i, delta, 4)[0]
    J2 = sympy.expand(-120 * A_)
    J4 = sympy.expand(-720 * A_**2 + 6750 * B_)
    J6 = sympy.expand(8640 * A_**3 - 108000 * A_ * B_ + 202500 * C_)
    x = sympy.Symbol("x")
    J10 = sympy.expand(sympy.discriminant(sum(a[k] * x**k for k in range(7)), x))
    return J2, J4, J6, J10


def _tv(f, g, k):
    m, n = len(f) - 1, len(g) - 1
    out = [0] * (m + n - 2 * k + 1)
    for j in range(k + 1):
        fx = f
        for _ in range(k - j):
            fx = [t * fx[t] for t in range(1, len(fx))]
        for _ in range(j):
            fx = [(len(fx) - 1 - t) * fx[t] for t in range(len(fx) - 1)]
        gx = g
        for _ in range(j):
            gx = [t * gx[t] for t in range(1, len(gx))]
        for _ in range(k - j):
            gx = [(len(gx) - 1 - t) * gx[t] for t in range(len(gx) - 1)]
        s = (-1) ** j * sympy.binomial(k, j)
        for u, p in enumerate(fx):
            for v, q in enumerate(gx):
                out[u + v] += s * p * q
    fac = sympy.Rational(sympy.factorial(m - k) * sympy.factorial(n - k),
                         sympy.factorial(m) * sympy.factorial(n))
    return [sympy.expand(fac * t) for t in out]


def monomials(weight):
    out = []
    for d in range(weight // 5 + 1):
        for c in range((weight - 5 * d) // 3 + 1):
            for b in range((weight - 5 * d - 3 * c) // 2 + 1):
                out.append((weight - 5 * d - 3 * c - 2 * b, b, c, d))
    return out


def fit_mestre(samples=80, seed=1):
    rng = random.Random(seed)
    rows = []
    for _ in range(samples):
        f = [Fraction(rng.randint(-9, 9)) for _ in range(7)]
        abcd = bf.clebsch_invariants(f)
        _, _, y1, y2, y3 = bf.covariants(f)
        ys = (y1, y2, y3)
        conic = {ij: bf.transvectant(ys[ij[0]], ys[ij[1]], 2)[0]
                 for ij in itertools.combinations_with_replacement(range(3), 2)}
        cubic = {}
        for t in itertools.combinations_with_replacement(range(3), 3):
            g = bf.mul(bf.mul(ys[t[0]], ys[t[1]]), ys[t[2]])
            cubic[t] = bf.transvectant(f, g, 6)[0]
        rows.append((abcd, conic, cubic))
    # weights of y1, y2, y3 coefficients in (A,B,C,D) units
    yw = (3, 5, 7)

    def fit(which, key, weight):
        ms = monomials(weight // 2)
        M = sympy.Matrix([[sympy.Rational(x**m[0] * y**m[1] * z**m[2] * w**m[3])
                           for m in ms] for (x, y, z, w), *_ in rows])
        v = sympy.Matrix([sympy.Rational(r[which][key]) for r in rows])
        sol, params = M.gauss_jordan_solve(v)
        sol = sol.subs({p: 0 for p in params})
        assert M * sol == v
        return sum(c * A**m[0] * B**m[1] * C**m[2] * D**m[3] for m, c in zip(ms, sol))

    conic = {ij: fit(1, ij, yw[ij[0]] + yw[ij[1]])
             for ij in itertools.combinations_with_replacement(range(3), 2)}
    cubic = {t: fit(2, t, 2 + sum(yw[k] for k in t))
             for t in itertools.combinations_with_replacement(range(3), 3)}
    return conic, cubic


def to_igusa(expr):
    J2, J4, J6, J10 = J
    a_ = -J2 / 120
    b_ = (J4 + 720 * a_**2) / 6750
    c_ = (J6 - 8640 * a_**3 + 108000 * a_ * b_) / 202500
    d_ = (J10 + 62208 * a_**5 - 972000 * a_**3 * b_ - 1620000 * a_**2 * c_
          + 3037500 * a_ * b_**2 + 6075000 * b_ * c_) / -4556250
    return sympy.expand(expr.subs({A: a_, B: b_, C: c_, D: d_}, simultaneous=True))


def integer_terms(expr, gens, scale=1):
    P = sympy.Poly(sympy.expand(expr * scale), *gens)
    terms = []
    for mon, c in sorted(P.terms()):
        assert c.is_integer
        terms.append((tuple(int(e) for e in mon), int(c)))
    return terms


def main():
    J2a, J4a, J6a, J10a = generic_invariants()
    conic, cubic = fit_mestre()
    conicJ = {k: to_igusa(v) for k, v in conic.items()}
    cubicJ = {k: to_igusa(v) for k, v in cubic.items()}
    den_l = sympy.ilcm(*[c.q for v in conicJ.values() for c in sympy.Poly(v, *J).coeffs()])
    den_m = sympy.ilcm(*[c.q for v in cubicJ.values() for c in sympy.Poly(v, *J).coeffs()])
    L = sympy.zeros(3, 3)
    for (i, j), v in conicJ.items():
        L[i, j] = L[j, i] = sympy.expand(v * den_l)
    det = sympy.Poly(sympy.expand(L.det()), *J)
    content = sympy.igcd(*[int(c) for c in det.coeffs()])
    locus = sympy.expand(det.as_expr() / content)

    out = ['"""Generated by tools/gen_tables.py; do not edit."""', ""]
    out.append("IGUSA = {")
    for name, e in zip(("J2", "J4", "J6", "J10"), (J2a, J4a, J6a, J10a)):
        out.append(f"    {name!r}: {integer_terms(e, a)!r},")
    out.append("}")
    out.append("")
    out.append(f"CONIC_SCALE = {int(den_l)}")
    out.append("CONIC = {")
    for k, v in sorted(conicJ.items()):
        out.append(f"    {k!r}: {integer_terms(v, J, den_l)!r},")
    out.append("}")
    out.append("")
    out.append(f"CUBIC_SCALE = {int(den_m)}")
    out.append("CUBIC = {")
    for k, v in sorted(cubicJ.items()):
        out.append(f"    {k!r}: {integer_terms(v, J, den_m)!r},")
    out.append("}")
    out.append("")
    out.append(f"LOCUS_CONTENT = {content}")
    out.append(f"EXTRA_INVOLUTION = {integer_terms(locus, J)!r}")
    print("\n".join(out))


if __name__ == "__main__":
    main()
