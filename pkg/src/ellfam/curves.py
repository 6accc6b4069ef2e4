"""Exact elliptic curves: group law, torsion certification, isomorphism.

Curves are long Weierstrass models whose coefficients live in any exact
field implementing Python arithmetic operators: ``Fraction`` for curves over
Q, ``RatFunc`` for curves over Q(u).  The group law, invariants and
coordinate changes are written generically; torsion certification and
isomorphism testing apply to curves over Q.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .arith import is_prime, primes_below, square_test
from .polyq import PolyQ, RatFunc

FieldElem = Union[Fraction, RatFunc]


class OffCurve(Exception):
    """A point failed the curve equation."""


def _is_zero(x) -> bool:
    if isinstance(x, RatFunc):
        return x.is_zero()
    return x == 0


@dataclass(frozen=True)
class CurvePoint:
    """Affine point (x, y) or the point at infinity (x = y = None)."""

    x: Optional[FieldElem] = None
    y: Optional[FieldElem] = None

    @staticmethod
    def infinity() -> "CurvePoint":
        return CurvePoint(None, None)

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self):
        return "O" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = CurvePoint.infinity()


class WeierstrassCurve:
    """y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 with nonzero discriminant."""

    __slots__ = ("a1", "a2", "a3", "a4", "a6", "_cache")

    def __init__(self, a1, a2, a3, a4, a6, check: bool = True):
        vals = [a1, a2, a3, a4, a6]
        vals = [Fraction(v) if isinstance(v, int) else v for v in vals]
        for name, v in zip(("a1", "a2", "a3", "a4", "a6"), vals):
            object.__setattr__(self, name, v)
        object.__setattr__(self, "_cache", {})
        if check and _is_zero(self.disc):
            raise ValueError("singular model: discriminant is zero")

    def __setattr__(self, *a):
        raise AttributeError("WeierstrassCurve is immutable")

    # -- invariants -------------------------------------------------------
    def _inv(self, key, fn):
        c = self._cache
        if key not in c:
            c[key] = fn()
        return c[key]

    @property
    def b2(self):
        return self._inv("b2", lambda: self.a1 * self.a1 + 4 * self.a2)

    @property
    def b4(self):
        return self._inv("b4", lambda: 2 * self.a4 + self.a1 * self.a3)

    @property
    def b6(self):
        return self._inv("b6", lambda: self.a3 * self.a3 + 4 * self.a6)

    @property
    def b8(self):
        return self._inv(
            "b8",
            lambda: self.a1 * self.a1 * self.a6
            + 4 * self.a2 * self.a6
            - self.a1 * self.a3 * self.a4
            + self.a2 * self.a3 * self.a3
            - self.a4 * self.a4,
        )

    @property
    def c4(self):
        return self._inv("c4", lambda: self.b2 * self.b2 - 24 * self.b4)

    @property
    def c6(self):
        return self._inv(
            "c6", lambda: -self.b2 * self.b2 * self.b2 + 36 * self.b2 * self.b4 - 216 * self.b6
        )

    @property
    def disc(self):
        def compute():
            b2, b4, b6, b8 = self.b2, self.b4, self.b6, self.b8
            return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6

        return self._inv("disc", compute)

    @property
    def j(self):
        return self._inv("j", lambda: self.c4 * self.c4 * self.c4 / self.disc)

    def a_invariants(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def __eq__(self, other):
        if not isinstance(other, WeierstrassCurve):
            return NotImplemented
        return self.a_invariants() == other.a_invariants()

    def __hash__(self):
        return hash(self.a_invariants())

    def __repr__(self):
        return f"WeierstrassCurve{self.a_invariants()}"

    # -- membership and group law ----------------------------------------
    def equation_value(self, P: CurvePoint):
        x, y = P.x, P.y
        return (
            y * y
            + self.a1 * x * y
            + self.a3 * y
            - (x * x * x + self.a2 * x * x + self.a4 * x + self.a6)
        )

    def contains(self, P: CurvePoint) -> bool:
        if P.is_infinity:
            return True
        return _is_zero(self.equation_value(P))

    def _require(self, P: CurvePoint):
        if not self.contains(P):
            raise OffCurve(f"{P} is not on {self!r}")

    def neg(self, P: CurvePoint) -> CurvePoint:
        if P.is_infinity:
            return P
        return CurvePoint(P.x, -P.y - self.a1 * P.x - self.a3)

    def add(self, P: CurvePoint, Q: CurvePoint, check: bool = True) -> CurvePoint:
        if check:
            self._require(P)
            self._require(Q)
        if P.is_infinity:
            return Q
        if Q.is_infinity:
            return P
        x1, y1, x2, y2 = P.x, P.y, Q.x, Q.y
        if _is_zero(x1 - x2):
            if _is_zero(y1 + y2 + self.a1 * x2 + self.a3):
                return INFINITY
            # doubling
            lam = (3 * x1 * x1 + 2 * self.a2 * x1 + self.a4 - self.a1 * y1) / (
                2 * y1 + self.a1 * x1 + self.a3
            )
        else:
            lam = (y2 - y1) / (x2 - x1)
        x3 = lam * lam + self.a1 * lam - self.a2 - x1 - x2
        y3 = lam * (x1 - x3) - y1 - self.a1 * x3 - self.a3
        return CurvePoint(x3, y3)

    def sub(self, P: CurvePoint, Q: CurvePoint) -> CurvePoint:
        return self.add(P, self.neg(Q))

    def mul(self, n: int, P: CurvePoint, check: bool = True) -> CurvePoint:
        if check:
            self._require(P)
        if n < 0:
            return self.mul(-n, self.neg(P), check=False)
        R = INFINITY
        Q = P
        while n:
            if n & 1:
                R = self.add(R, Q, check=False)
            Q = self.add(Q, Q, check=False)
            n >>= 1
        return R

    def point_order(self, P: CurvePoint, bound: int = 12) -> Optional[int]:
        """Exact order of P if <= bound, else None."""
        R = P
        for n in range(1, bound + 1):
            if R.is_infinity:
                return n
            R = self.add(R, P, check=False)
        return None

    # -- coordinate changes ----------------------------------------------
    def transform(self, u, r, s, t) -> tuple["WeierstrassCurve", "PointMap"]:
        """Standard change of coordinates x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.

        Returns the new model together with the point map old -> new.
        """
        if isinstance(u, int):
            u = Fraction(u)
        a1, a2, a3, a4, a6 = self.a_invariants()
        na1 = (a1 + 2 * s) / u
        na2 = (a2 - s * a1 + 3 * r - s * s) / (u * u)
        na3 = (a3 + r * a1 + 2 * t) / (u * u * u)
        na4 = (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / (u**2 * u**2)
        na6 = (a6 + r * a4 + r * r * a2 + r**2 * r - t * a3 - t * t - r * t * a1) / (u**3 * u**3)
        new = WeierstrassCurve(na1, na2, na3, na4, na6, check=False)
        return new, PointMap(u, r, s, t)

    def is_integral(self) -> bool:
        return all(
            isinstance(a, Fraction) and a.denominator == 1 for a in self.a_invariants()
        )

    def integral_model(self) -> tuple["WeierstrassCurve", "PointMap"]:
        """Clear denominators by (x, y) -> (L^2 x, L^3 y) scaling."""
        dens = [a.denominator for a in self.a_invariants()]
        L = 1
        for d in dens:
            L = L * d // math.gcd(L, d)
        new, pm = self.transform(Fraction(1, L), 0, 0, 0)
        return new, pm

    def short_model(self) -> tuple["WeierstrassCurve", "PointMap"]:
        """Complete the square: model with a1 = a3 = 0 (and a2 kept)."""
        new, pm = self.transform(1, 0, -self.a1 / 2, -self.a3 / 2)
        return new, pm


@dataclass(frozen=True)
class PointMap:
    """The point part of a Weierstrass change of coordinates (old -> new)."""

    u: FieldElem
    r: FieldElem
    s: FieldElem
    t: FieldElem

    def forward(self, P: CurvePoint) -> CurvePoint:
        if P.is_infinity:
            return P
        u, r, s, t = self.u, self.r, self.s, self.t
        x = (P.x - r) / (u * u)
        y = (P.y - s * (P.x - r) - t) / (u * u * u)
        return CurvePoint(x, y)

    def backward(self, P: CurvePoint) -> CurvePoint:
        if P.is_infinity:
            return P
        u, r, s, t = self.u, self.r, self.s, self.t
        x = u * u * P.x + r
        y = u * u * u * P.y + s * u * u * P.x + t
        return CurvePoint(x, y)

    def compose(self, then: "PointMap") -> "PointMap":
        """Map applying self first, then ``then``."""
        u1, r1, s1, t1 = self.u, self.r, self.s, self.t
        u2, r2, s2, t2 = then.u, then.r, then.s, then.t
        # x'' = (x - (r1 + u1^2 r2))/(u1 u2)^2, and matching y composition
        return PointMap(
            u1 * u2,
            r1 + u1 * u1 * r2,
            s1 + u1 * s2,
            t1 + s1 * u1 * u1 * r2 + u1 * u1 * u1 * t2,
        )


class ShiftedABCurve:
    """y^2 = x^3 + A x^2 + B x: the shape carrying all catalog curves."""

    __slots__ = ("A", "B")

    def __init__(self, A, B):
        A = Fraction(A) if isinstance(A, int) else A
        B = Fraction(B) if isinstance(B, int) else B
        if _is_zero(B) or _is_zero(A * A - 4 * B):
            raise ValueError("singular: need B != 0 and A^2 != 4B")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)

    def __setattr__(self, *a):
        raise AttributeError("immutable")

    def weierstrass(self) -> WeierstrassCurve:
        zero = self.A * 0
        return WeierstrassCurve(zero, self.A, zero, self.B, zero)

    def two_torsion_origin(self) -> CurvePoint:
        return CurvePoint(self.A * 0, self.A * 0)

    def __repr__(self):
        return f"ShiftedABCurve(A={self.A}, B={self.B})"


def to_shifted_ab(E: WeierstrassCurve, T: CurvePoint) -> tuple[ShiftedABCurve, PointMap]:
    """Move a rational 2-torsion point T to (0,0) and kill a1, a3.

    Returns the y^2 = x^3 + A x^2 + B x model and the point map E -> model.
    """
    if T.is_infinity or not _is_zero(2 * T.y + E.a1 * T.x + E.a3):
        raise ValueError("T is not a 2-torsion point")
    one = _one_like(E.a2)
    short, pm1 = E.transform(one, T.x, -E.a1 / 2, -(E.a3 + E.a1 * T.x) / 2)
    if not (_is_zero(short.a1) and _is_zero(short.a3) and _is_zero(short.a6)):
        raise ValueError("shift did not produce y^2 = x^3 + Ax^2 + Bx")
    return ShiftedABCurve(short.a2, short.a4), pm1


def _one_like(x):
    if isinstance(x, RatFunc):
        return RatFunc.const(1, x.var)
    return Fraction(1)


def j_invariant(E: WeierstrassCurve):
    return E.j


# -- point counting over F_p ---------------------------------------------

def count_points_mod_p(E: WeierstrassCurve, p: int) -> int:
    """#E(F_p) for odd p of good reduction, via the completed square."""
    b2 = int(E.b2) % p
    b4 = int(E.b4) % p
    b6 = int(E.b6) % p
    count = 1  # infinity
    half = (p - 1) // 2
    for x in range(p):
        t = (((4 * x + b2) * x + 2 * b4) * x + b6) % p
        if t == 0:
            count += 1
        elif pow(t, half, p) == 1:
            count += 2
    return count


def good_odd_primes(E: WeierstrassCurve, how_many: int, start: int = 5) -> list[int]:
    disc_num = E.disc.numerator * E.disc.denominator
    out = []
    for p in primes_below(100000):
        if p < start:
            continue
        if disc_num % p:
            out.append(p)
            if len(out) >= how_many:
                break
    return out


# -- division polynomials -------------------------------------------------

def _division_poly_cache(E: WeierstrassCurve) -> dict:
    c = E._cache
    if "divpoly" not in c:
        x = PolyQ.variable("x")
        f = 4 * x**3 + E.b2 * x**2 + 2 * E.b4 * x + E.b6
        g3 = 3 * x**4 + E.b2 * x**3 + 3 * E.b4 * x**2 + 3 * E.b6 * x + E.b8
        g4 = (
            2 * x**6
            + E.b2 * x**5
            + 5 * E.b4 * x**4
            + 10 * E.b6 * x**3
            + 10 * E.b8 * x**2
            + (E.b2 * E.b8 - E.b4 * E.b6) * x
            + (E.b4 * E.b8 - E.b6 * E.b6)
        )
        c["divpoly"] = {"f": f, 1: PolyQ([1], "x"), 2: PolyQ([1], "x"), 3: g3, 4: g4}
    return c["divpoly"]


def division_poly(E: WeierstrassCurve, n: int) -> PolyQ:
    """The x-polynomial part g_n of the n-th division polynomial.

    psi_n = g_n for odd n and psi_n = g_n * psi_2 for even n, with
    psi_2^2 = 4x^3 + b2 x^2 + 2 b4 x + b6.  Roots of g_n are x-coordinates of
    the points killed by n that are not 2-torsion (plus possibly others'
    component for composite n).
    """
    if n < 1:
        raise ValueError("n must be positive")
    cache = _division_poly_cache(E)
    if n in cache:
        return cache[n]
    f = cache["f"]

    def g(k: int) -> PolyQ:
        if k == 0:
            return PolyQ([], "x")
        if k == -1:
            return PolyQ([-1], "x")
        if k in cache:
            return cache[k]
        if k % 2:
            m = (k - 1) // 2
            if m % 2 == 0:
                val = f * f * g(m + 2) * g(m) ** 3 - g(m - 1) * g(m + 1) ** 3
            else:
                val = g(m + 2) * g(m) ** 3 - f * f * g(m - 1) * g(m + 1) ** 3
        else:
            m = k // 2
            val = g(m) * (g(m + 2) * g(m - 1) ** 2 - g(m - 2) * g(m + 1) ** 2)
        cache[k] = val
        return val

    return g(n)


def rational_roots(p: PolyQ) -> list[Fraction]:
    if p.is_zero():
        raise ValueError("zero polynomial")
    _, parts = p.factor()
    roots = []
    for f, _e in parts:
        if f.degree == 1:
            roots.append(-f.coeffs[0] / f.coeffs[1])
    return roots


def lift_x(E: WeierstrassCurve, x: Fraction) -> Optional[CurvePoint]:
    """A rational point of E with the given x-coordinate, if one exists."""
    # y^2 + (a1 x + a3) y - (x^3 + a2 x^2 + a4 x + a6) = 0
    b = E.a1 * x + E.a3
    c = -(x**3 + E.a2 * x * x + E.a4 * x + E.a6)
    disc = b * b - 4 * c
    r = square_test(disc)
    if r is None:
        return None
    return CurvePoint(x, (-b + r) / 2)


# -- torsion --------------------------------------------------------------

@dataclass(frozen=True)
class TorsionGroup:
    """structure: (n,) for Z/n or (2, 2m) for Z/2 x Z/2m; generators included."""

    structure: tuple[int, ...]
    generators: tuple[CurvePoint, ...]

    @property
    def order(self) -> int:
        out = 1
        for n in self.structure:
            out *= n
        return out

    def label(self) -> str:
        if self.structure == (1,):
            return "trivial"
        return " x ".join(f"Z/{n}" for n in self.structure)


def torsion_bound(E: WeierstrassCurve, primes: int = 16) -> int:
    """gcd of #E(F_p) over good odd primes: the torsion order divides this."""
    Ei, _ = E.integral_model()
    g = 0
    for p in good_odd_primes(Ei, primes):
        g = math.gcd(g, count_points_mod_p(Ei, p))
        if g == 1:
            break
    return g


def two_torsion_points(E: WeierstrassCurve) -> list[CurvePoint]:
    """All rational points of exact order 2."""
    x = PolyQ.variable("x")
    f = 4 * x**3 + E.b2 * x**2 + 2 * E.b4 * x + E.b6
    pts = []
    for r in rational_roots(f):
        y = -(E.a1 * r + E.a3) / 2
        pts.append(CurvePoint(r, y))
    return pts


def torsion_subgroup(
    E: WeierstrassCurve,
    hints: Sequence[CurvePoint] = (),
    gcd_primes: int = 16,
) -> TorsionGroup:
    """Exact rational torsion subgroup, certified by explicit points.

    The #E(F_p) gcd over good primes gives an upper bound; points of the
    claimed orders (from hints, 2-torsion cubic roots, and division
    polynomial rational roots) realize it.  Mazur's classification closes the
    remaining gap in the two ambiguous cases.
    """
    bound = torsion_bound(E, gcd_primes)
    t2 = two_torsion_points(E)
    best: tuple[int, CurvePoint] = (1, INFINITY)
    for P in list(hints) + t2:
        if P.is_infinity or not E.contains(P):
            continue
        n = E.point_order(P)
        if n is None:
            continue
        if n > best[0]:
            best = (n, P)

    # Search maximal cyclic orders still allowed by the gcd bound and the
    # 2-torsion count, largest first.  With full 2-torsion the group is
    # Z/2 x Z/2m (order 4m), so the candidate order 2m must have 2*(2m)
    # dividing the bound; with one 2-torsion point the cyclic order is even;
    # with none it is odd.
    if len(t2) == 3:
        candidates = [n for n in (8, 6, 4) if bound % (2 * n) == 0]
    elif len(t2) == 1:
        candidates = [n for n in (12, 10, 8, 6, 4) if bound % n == 0]
    else:
        candidates = [n for n in (9, 7, 5, 3) if bound % n == 0]
    for n in candidates:
        if n <= best[0]:
            break
        found = _point_of_exact_order(E, n)
        if found is not None:
            best = (n, found)
            break

    n, P = best
    if len(t2) < 3:
        if n == 1:
            return TorsionGroup((1,), ())
        return TorsionGroup((n,), (P,))
    # full 2-torsion: group is Z/2 x Z/2m with 2m = max point order (>= 2)
    if n % 2:
        # odd n with full 2-torsion: combine with a 2-torsion point
        T = t2[0]
        P = E.add(P, T)
        n *= 2
    half = E.mul(n // 2, P)
    other = next(T for T in t2 if T.x != half.x)
    return TorsionGroup((2, n), (other, P))


def _point_of_exact_order(E: WeierstrassCurve, n: int) -> Optional[CurvePoint]:
    g = division_poly(E, n)
    for x in rational_roots(g):
        P = lift_x(E, x)
        if P is None:
            continue
        if E.point_order(P) == n:
            return P
    return None


# -- isomorphism over Q ---------------------------------------------------

def _nth_root_rational(q: Fraction, n: int) -> Optional[Fraction]:
    if q <= 0 and n % 2 == 0:
        return None
    sign = 1
    if q < 0:
        sign, q = -1, -q
    num = round(q.numerator ** (1.0 / n))
    # exact check around the float guess
    for cand in (num - 1, num, num + 1):
        if cand > 0 and cand**n == q.numerator:
            den_f = round(q.denominator ** (1.0 / n))
            for cand_d in (den_f - 1, den_f, den_f + 1):
                if cand_d > 0 and cand_d**n == q.denominator:
                    return Fraction(sign * cand, cand_d)
    return None


def isomorphic_over_Q(
    E1: WeierstrassCurve, E2: WeierstrassCurve
) -> Optional[tuple[Fraction, Fraction, Fraction, Fraction]]:
    """The (u, r, s, t) with transform(E1, u, r, s, t) == E2, if one exists."""
    if E1.j != E2.j:
        return None
    j = E1.j
    candidates: list[Fraction] = []
    if j != 0 and j != 1728:
        u2 = (E2.c4 * E1.c6) / (E1.c4 * E2.c6)
        u = square_test(u2)
        if u is None:
            return None
        candidates = [u, -u]
    elif j == 1728:
        ratio = E1.c4 / E2.c4
        u = _nth_root_rational(ratio, 4)
        if u is None:
            # allow a square factor: u^4 = ratio has no rational solution
            return None
        candidates = [u, -u]
    else:  # j == 0
        ratio = E1.c6 / E2.c6
        u = _nth_root_rational(ratio, 6)
        if u is None:
            return None
        candidates = [u, -u]
    for u in candidates:
        if u == 0:
            continue
        s = (u * E2.a1 - E1.a1) / 2
        r = (u * u * E2.a2 - E1.a2 + s * E1.a1 + s * s) / 3
        t = (u**3 * E2.a3 - E1.a3 - r * E1.a1) / 2
        try:
            cand, _ = E1.transform(u, r, s, t)
        except ZeroDivisionError:
            continue
        if cand == E2:
            return (u, r, s, t)
    return None
