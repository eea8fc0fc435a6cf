"""Rational points on ternary conics over Q.

Solvability is decided with Hilbert symbols on a diagonalized form; when a
point exists it is found by lattice reduction and mapped back to the input
form.  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd, isqrt
from typing import Optional, Union

from sympy import Matrix, gcdex, sqrt_mod
from sympy.matrices.normalforms import hermite_normal_form
from sympy.ntheory.modular import crt
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.solvers.diophantine.diophantine import descent

from .arith import factor, primitive, squarefree_decomposition, squarefree_from_factors

Place = Union[int, str]  # a prime, or "real"


class DegenerateFormError(ValueError):
    pass


@dataclass(frozen=True)
class TernaryForm:
    """Q(v) = v^T A v for a symmetric integer matrix A."""

    entries: tuple

    def __post_init__(self):
        A = tuple(tuple(int(x) for x in row) for row in self.entries)
        if len(A) != 3 or any(len(r) != 3 for r in A):
            raise ValueError("need a 3x3 matrix")
        if any(A[i][j] != A[j][i] for i in range(3) for j in range(3)):
            raise ValueError("matrix must be symmetric")
        object.__setattr__(self, "entries", A)

    @classmethod
    def diagonal(cls, a, b, c) -> "TernaryForm":
        return cls(((a, 0, 0), (0, b, 0), (0, 0, c)))

    @classmethod
    def from_rational(cls, rows) -> "TernaryForm":
        """Clear denominators of a rational symmetric matrix (same conic)."""
        flat = primitive([x for r in rows for x in r])
        return cls(tuple(tuple(flat[3 * i:3 * i + 3]) for i in range(3)))

    def __call__(self, v) -> Fraction:
        A = self.entries
        return sum(A[i][j] * v[i] * v[j] for i in range(3) for j in range(3))

    def bilinear(self, u, v):
        A = self.entries
        return sum(A[i][j] * u[i] * v[j] for i in range(3) for j in range(3))

    def det(self) -> int:
        (a, b, c), (d, e, f), (g, h, i) = self.entries
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


@dataclass(frozen=True)
class DiagonalForm:
    a: int
    b: int
    c: int
    transform: tuple  # 3x3 Fractions; columns are the new basis vectors

    def to_original(self, v):
        T = self.transform
        return [sum(T[i][j] * v[j] for j in range(3)) for i in range(3)]


@dataclass(frozen=True)
class ConicVerdict:
    solvable: bool
    witness: Optional[tuple] = None
    failing_place: Optional[Place] = None


# ---------------------------------------------------------------- Hilbert symbols

def _split(n: int, p: int):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def _legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def hilbert_symbol(a: int, b: int, place: Place) -> int:
    """(a, b)_v for nonzero integers a, b; v a prime or "real"."""
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol needs nonzero arguments")
    if place == "real":
        return -1 if a < 0 and b < 0 else 1
    p = int(place)
    al, u = _split(a, p)
    be, v = _split(b, p)
    if p == 2:
        def eps(x):
            return ((x - 1) // 2) % 2

        def omega(x):
            return ((x * x - 1) // 8) % 2

        s = eps(u) * eps(v) + al * omega(v) + be * omega(u)
        return -1 if s % 2 else 1
    s = -1 if (al * be * ((p - 1) // 2)) % 2 else 1
    if al % 2:
        s *= _legendre(v, p)
    if be % 2:
        s *= _legendre(u, p)
    return s


# ---------------------------------------------------------------- diagonalization

def _matrix(Q: TernaryForm):
    return [[Fraction(x) for x in row] for row in Q.entries]


def _qf(A, u, v):
    return sum(A[i][j] * u[i] * v[j] for i in range(3) for j in range(3))


def _lagrange(A):
    """Orthogonal basis for the symmetric matrix A (assumed nondegenerate)."""
    span = [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    basis, diag = [], []
    while span:
        pick = None
        for i, w in enumerate(span):
            if _qf(A, w, w):
                pick, drop = w, i
                break
        if pick is None:
            for i in range(len(span)):
                for j in range(i + 1, len(span)):
                    w = [x + y for x, y in zip(span[i], span[j])]
                    if _qf(A, w, w):
                        pick, drop = w, j
                        break
                if pick is not None:
                    break
        if pick is None:
            raise DegenerateFormError("form is degenerate")
        q = _qf(A, pick, pick)
        basis.append(pick)
        diag.append(q)
        rest = []
        for i, w in enumerate(span):
            if i == drop:
                continue
            k = _qf(A, w, pick) / q
            rest.append([x - k * y for x, y in zip(w, pick)])
        span = rest
    return diag, basis


def diagonalize(Q: TernaryForm) -> DiagonalForm:
    """Congruent form a x^2 + b y^2 + c z^2 (up to a nonzero scalar) with a, b, c
    squarefree and pairwise coprime."""
    det = Q.det()
    if det == 0:
        raise DegenerateFormError("form is degenerate")
    A = Q.entries
    m2 = A[0][0] * A[1][1] - A[0][1] ** 2
    if A[0][0] and m2:
        # Gram-Schmidt on e1, e2, e3 with integral vectors; the values are
        # A00, A00*m2, m2*det, so three small factorizations suffice
        f1, f2, f3 = factor(A[0][0]), factor(m2), factor(det)
        cols = [
            [Fraction(1), Fraction(0), Fraction(0)],
            [Fraction(-A[0][1]), Fraction(A[0][0]), Fraction(0)],
            [Fraction(A[0][1] * A[1][2] - A[1][1] * A[0][2]),
             Fraction(A[0][1] * A[0][2] - A[0][0] * A[1][2]), Fraction(m2)],
        ]
        parts = [squarefree_from_factors(1 if A[0][0] > 0 else -1, f1),
                 squarefree_from_factors(1 if A[0][0] * m2 > 0 else -1, f1, f2),
                 squarefree_from_factors(1 if m2 * det > 0 else -1, f2, f3)]
        d = []
        for (s, r), col in zip(parts, cols):
            d.append(s)
            col[:] = [x / r for x in col]
    else:
        diag, cols = _lagrange(_matrix(Q))
        d = []
        for q, col in zip(diag, cols):
            # q * den^2 is integral; then strip the square part
            s, r = squarefree_decomposition(q.numerator * q.denominator)
            d.append(s)
            col[:] = [x * Fraction(q.denominator, r) for x in col]
    changed = True
    while changed:
        changed = False
        for i in range(3):
            for j in range(i + 1, 3):
                g = gcd(d[i], d[j])
                if g == 1:
                    continue
                k = 3 - i - j
                d[i] //= g
                d[j] //= g
                cols[i] = [x / g for x in cols[i]]
                cols[j] = [x / g for x in cols[j]]
                h = gcd(g, d[k])
                d[k] = g * d[k] // (h * h)
                cols[k] = [x / h for x in cols[k]]
                changed = True
    T = tuple(tuple(cols[j][i] for j in range(3)) for i in range(3))
    return DiagonalForm(d[0], d[1], d[2], T)


# ---------------------------------------------------------------- solvability

def _local_failure(a: int, b: int, c: int) -> Optional[Place]:
    if (a > 0) == (b > 0) == (c > 0):
        return "real"
    A, B = -a * c, -b * c
    primes = set()
    for x in (a, b, c):
        primes.update(factor(x))
    for p in sorted(primes - {2}):
        if hilbert_symbol(A, B, p) != 1:
            return p
    if hilbert_symbol(A, B, 2) != 1:
        return 2
    return None


def _root_mod(num: int, den: int, m: int) -> int:
    """r with den r^2 + num = 0 mod the squarefree |m| (the root exists when
    the diagonal form is locally solvable)."""
    mods, res = [], []
    for p in factor(m):
        mods.append(p)
        res.append(sqrt_mod((-num * pow(den, -1, p)) % p, p))
    return int(crt(mods, res)[0]) if mods else 0


def _legendre_lattice(a: int, b: int, c: int) -> int:
    """Basis of the index-|abc| lattice on which a x^2 + b y^2 + c z^2 = 0 mod abc.

    It is cut out by y = al z (mod a), z = be x (mod b), x = ga y (mod c),
    combined by CRT into one congruence L.v = 0 mod N.
    """
    al, be, ga = _root_mod(c, b, a), _root_mod(a, c, b), _root_mod(b, a, c)
    A, B, C = abs(a), abs(b), abs(c)
    N = A * B * C

    def glue(ra, rb, rc):
        return int(crt([A, B, C], [ra % A, rb % B, rc % C])[0])

    L = [glue(0, -be, 1), glue(1, 0, -ga), glue(-al, 1, 0)]
    while gcd(*L) != 1:
        L[0] += N
    s, t, g = gcdex(L[0], L[1])
    u, w, _ = gcdex(g, L[2])
    bez = (int(u * s), int(u * t), int(w))
    gens = [[L[1], -L[0], 0], [L[2], 0, -L[0]], [0, L[2], -L[1]], [N * x for x in bez]]
    H = hermite_normal_form(Matrix(gens).T)
    return [[int(H[i, j]) for i in range(3)] for j in range(H.shape[1])]


def _diagonal_witness(a: int, b: int, c: int):
    """Nonzero integer zero of a x^2 + b y^2 + c z^2 (a, b, c squarefree coprime)."""
    for (x, y, z), val in (((1, 0, 0), a), ((0, 1, 0), b), ((0, 0, 1), c)):
        if val == 0:
            return x, y, z
    # LLL-reduce the congruence lattice under |a| x^2 + |b| y^2 + |c| z^2
    # (scaled by integer approximations of the square roots); its short
    # vectors have |Q| < 2|abc| and Q = 0 mod abc, so zeros turn up among
    # small combinations of the reduced basis
    basis = _legendre_lattice(a, b, c)
    sc = [isqrt(abs(x) << 40) + 1 for x in (a, b, c)]
    M = DomainMatrix([[ZZ(v[i] * sc[i]) for i in range(3)] for v in basis], (3, 3), ZZ).lll()
    red = [[int(M[r, i].element) // sc[i] for i in range(3)] for r in range(3)]
    for k in _SMALL_COMBOS:
        v = [sum(k[r] * red[r][i] for r in range(3)) for i in range(3)]
        if a * v[0] ** 2 + b * v[1] ** 2 + c * v[2] ** 2 == 0:
            return tuple(v)
    # (c z)^2 = -ac x^2 - bc y^2; Lagrange descent as a fallback
    w, x, y = descent(-a * c, -b * c)
    return c * x, c * y, w


_SMALL_COMBOS = sorted((k for k in product(range(-2, 3), repeat=3) if any(k)),
                       key=lambda k: (sum(map(abs, k)), k))


def has_rational_point(Q: TernaryForm, find_witness: bool = True) -> ConicVerdict:
    """Decide whether Q = 0 has a rational point; with find_witness, also
    return a primitive integer point of the original form."""
    if Q.det() == 0:
        return ConicVerdict(True, _kernel_vector(Q) if find_witness else None)
    D = diagonalize(Q)
    bad = _local_failure(D.a, D.b, D.c)
    if bad is not None:
        return ConicVerdict(False, None, bad)
    if not find_witness:
        return ConicVerdict(True)
    v = D.to_original(_diagonal_witness(D.a, D.b, D.c))
    w = tuple(primitive(v))
    if Q(w) != 0:
        raise AssertionError("witness does not lie on the conic")
    return ConicVerdict(True, w)


def _kernel_vector(Q: TernaryForm):
    ns = Matrix(Q.entries).nullspace()
    v = primitive([Fraction(int(x.p), int(x.q)) for x in ns[0]])
    return tuple(v)


# ---------------------------------------------------------------- parametrization

class ConicParametrization:
    """All points of a conic through a known point P.

    For the direction e(u, w) = u e_i + w e_j the second intersection of the
    line through P is Q(e) P - 2 B(P, e) e, a triple of binary quadratics in
    (u, w).  The parameter t stands for (u, w) = (1, t); t = None is (0, 1).
    """

    def __init__(self, Q: TernaryForm, witness):
        P = tuple(int(x) for x in witness)
        if not any(P) or Q(P) != 0:
            raise ValueError("witness is not a point of the conic")
        self.form = Q
        self.witness = P
        k = next(i for i in range(3) if P[i])
        i, j = [m for m in range(3) if m != k]
        A = Q.entries
        AP = [sum(A[r][s] * P[s] for s in range(3)) for r in range(3)]
        # Q(e) = A_ii u^2 + 2 A_ij u w + A_jj w^2 ; B(P, e) = AP_i u + AP_j w
        qe = (A[j][j], 2 * A[i][j], A[i][i])  # coefficients of w^2, uw, u^2
        be = (AP[j], AP[i])  # coefficients of w, u
        quads = []
        for m in range(3):
            c = [qe[n] * P[m] for n in range(3)]
            if m == i:
                c[1] -= 2 * be[0]
                c[2] -= 2 * be[1]
            elif m == j:
                c[0] -= 2 * be[0]
                c[1] -= 2 * be[1]
            quads.append(tuple(c))
        # quads[m][n] is the coefficient of u^n w^(2-n)
        self.quadratics = tuple(quads)

    def at(self, u, w):
        return [sum(c * u**n * w ** (2 - n) for n, c in enumerate(q)) for q in self.quadratics]

    def __call__(self, t=None):
        if t is None:
            v = self.at(0, 1)
        else:
            t = Fraction(t)
            v = self.at(t.denominator, t.numerator)
        if not any(v):
            return self.witness
        return tuple(primitive(v))


def parametrize(Q: TernaryForm, witness) -> ConicParametrization:
    return ConicParametrization(Q, witness)


def brute_force_point(Q: TernaryForm, bound: int):
    """Search |x|, |y|, |z| <= bound; used as a test oracle."""
    for x in range(0, bound + 1):
        for y in range(-bound, bound + 1):
            for z in range(-bound, bound + 1):
                if (x, y, z) != (0, 0, 0) and Q((x, y, z)) == 0:
                    return x, y, z
    return None


__all__ = [
    "TernaryForm", "DiagonalForm", "ConicVerdict", "DegenerateFormError",
    "hilbert_symbol", "diagonalize", "has_rational_point", "parametrize",
    "ConicParametrization", "brute_force_point",
]
