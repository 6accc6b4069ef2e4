"""Parametric curve families with torsion Z/8 and Z/2 x Z/6 over Q(u).

The two base models are derived, not transcribed: starting from the Tate
normal form y^2 + (1-c)xy - by = x^3 - bx^2 with the order-8 (resp. order-6)
relations between b and c, the curve is moved to the y^2 = x^3 + Ax^2 + Bx
shape by a symbolic change of coordinates, carrying the torsion generator
along.  Every further family in the catalog is produced by substituting a
rational function into the parameter and renormalizing; the section points
(x-coordinates of infinite-order points) are the only data that cannot be
derived and are stored explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Optional, Sequence

from .arith import DEFAULT_BUDGET, FactorBudget, factor, valuation_fraction
from .curves import (
    CurvePoint,
    PointMap,
    ShiftedABCurve,
    WeierstrassCurve,
    to_shifted_ab,
)
from .polyq import NotASquare, PolyQ, RatFunc, poly_sqrt, ratfunc_substitute


def tate_normal_curve(b, c) -> WeierstrassCurve:
    """y^2 + (1-c)xy - by = x^3 - bx^2, with P = (0,0) on it."""
    zero = b * 0
    return WeierstrassCurve(1 - c, -b, -b, zero, zero, check=False)


def tate_point_multiples(b, c, upto: int = 4) -> dict[int, CurvePoint]:
    """Multiples n*P of P = (0,0) on the Tate normal curve, |n| <= upto."""
    E = tate_normal_curve(b, c)
    zero = b * 0
    P = CurvePoint(zero, zero)
    out = {0: CurvePoint.infinity()}
    R = P
    for n in range(1, upto + 1):
        out[n] = R
        out[-n] = E.neg(R)
        if n < upto:
            R = E.add(R, P, check=False)
    return out


def ratfunc_sqrt(f: RatFunc) -> RatFunc:
    """Exact square root in Q(u), or raise NotASquare."""
    num, den = f.num, f.den
    # den is monic; f = num/den is a square iff both parts are
    return RatFunc(poly_sqrt(num * den), den)


@dataclass(frozen=True)
class SpecializedCurve:
    """A member of a family at a rational parameter value, in integral form."""

    label: str
    value: Fraction
    A: int
    B: int
    points: tuple[CurvePoint, ...]
    torsion_points: tuple[CurvePoint, ...]

    def curve(self) -> WeierstrassCurve:
        return ShiftedABCurve(self.A, self.B).weierstrass()


@dataclass(frozen=True)
class CurveFamily:
    """y^2 = x^3 + A(t)x^2 + B(t)x over Q(t) with prescribed torsion."""

    label: str
    torsion: tuple[int, ...]
    var: str
    A: PolyQ
    B: PolyQ
    torsion_points: tuple[CurvePoint, ...] = ()
    sections: tuple[CurvePoint, ...] = ()
    rank: int = 0
    parent: Optional[str] = None
    substitution: Optional[RatFunc] = None
    condition: Optional[PolyQ] = None
    spec_hint: Optional[Fraction] = None

    def curve(self) -> WeierstrassCurve:
        zero = RatFunc.const(0, self.var)
        return WeierstrassCurve(
            zero, RatFunc(self.A), zero, RatFunc(self.B), zero, check=False
        )

    def j_invariant(self) -> RatFunc:
        return self.curve().j

    def torsion_label(self) -> str:
        return " x ".join(f"Z/{n}" for n in self.torsion)

    def verify(self) -> bool:
        """Check all stored points actually lie on the family curve."""
        E = self.curve()
        return all(E.contains(P) for P in self.torsion_points + self.sections)

    def specialize(
        self, value: Fraction | int, budget: FactorBudget = DEFAULT_BUDGET
    ) -> SpecializedCurve:
        value = Fraction(value)
        A0, B0 = self.A(value), self.B(value)
        A1, B1, lam = normalize_shifted_ab(A0, B0, budget)

        def spec_point(P: CurvePoint) -> CurvePoint:
            return CurvePoint(lam * lam * P.x(value), lam**3 * P.y(value))

        return SpecializedCurve(
            label=self.label,
            value=value,
            A=int(A1),
            B=int(B1),
            points=tuple(spec_point(P) for P in self.sections),
            torsion_points=tuple(spec_point(P) for P in self.torsion_points),
        )


def normalize_shifted_ab(
    A0: Fraction, B0: Fraction, budget: FactorBudget = DEFAULT_BUDGET
) -> tuple[Fraction, Fraction, Fraction]:
    """Scale (A, B) -> (l^2 A, l^4 B) into integral, square-reduced form.

    Returns (A', B', l).  Square reduction strips every prime p with
    p^2 | A' and p^4 | B', keeping the model as small as the factoring
    budget allows; an unfactored residue is simply left in place.
    """
    if A0 == 0 or B0 == 0:
        raise ValueError("degenerate model")
    exps: dict[int, int] = {}
    for q, weight in ((A0, 2), (B0, 4)):
        for p, e in factor(q.denominator, budget).factors:
            need = -(-e // weight)  # ceil(e / weight)
            exps[p] = max(exps.get(p, 0), need)
    lam = Fraction(1)
    for p, e in exps.items():
        lam *= Fraction(p) ** e
    A1 = lam * lam * A0
    B1 = lam**4 * B0
    # strip square content common to both (weighted)
    fa = factor(A1.numerator, budget)
    reduce_by = 1
    for p, e in fa.factors:
        k = min(e // 2, valuation_fraction(B1, p) // 4)
        if k > 0:
            reduce_by *= p**k
    if reduce_by > 1:
        lam /= reduce_by
        A1 /= reduce_by**2
        B1 /= reduce_by**4
    return A1, B1, lam


def _integer_pair(sub: RatFunc) -> tuple[PolyQ, PolyQ]:
    """Rewrite sub = n/d with coprime integer coefficients, leading(d) > 0."""
    num, den = sub.num, sub.den
    scale = 1
    for c in num.coeffs + den.coeffs:
        scale = scale * c.denominator // math.gcd(scale, c.denominator)
    n = num * scale
    d = den * scale
    g = 0
    for c in n.coeffs + d.coeffs:
        g = math.gcd(g, abs(int(c)))
    if g > 1:
        n = n * Fraction(1, g)
        d = d * Fraction(1, g)
    if d.leading() < 0:
        n, d = -n, -d
    return n, d


def _square_content_reduction(A: PolyQ, B: PolyQ, budget: FactorBudget) -> int:
    """Largest integer c with c^2 dividing A and c^4 dividing B coefficientwise."""

    def content(p: PolyQ) -> int:
        g = 0
        for c in p.coeffs:
            g = math.gcd(g, abs(int(c)))
        return g

    ca, cb = content(A), content(B)
    if ca == 0 or cb == 0:
        raise ValueError("zero polynomial")
    out = 1
    fb = factor(cb, budget)
    for p, e in factor(ca, budget).factors:
        k = min(e // 2, fb.exponent(p) // 4)
        if k > 0:
            out *= p**k
    return out


def substitute_parameter(
    family: CurveFamily,
    sub: RatFunc,
    label: str,
    rank: Optional[int] = None,
    sections: Sequence[RatFunc] = (),
    lift_sections: Sequence[RatFunc] = (),
    keep_sections: bool = False,
    condition: Optional[PolyQ] = None,
    spec_hint: Optional[Fraction | int] = None,
    budget: FactorBudget = DEFAULT_BUDGET,
) -> CurveFamily:
    """Plug t := sub(new parameter) into a family and renormalize.

    The substituted model is cleared of denominators by (x, y) ->
    (l^2 x, l^3 y) with l = d^s, where d is the integer denominator of the
    substitution and s = max(ceil(deg A / 2), ceil(deg B / 4)); the largest
    rational square content is then stripped.  Torsion generators are
    transported; ``sections`` provides the x-coordinates of new
    infinite-order points (their y-coordinates must exist in the new
    function field), ``lift_sections`` provides x-coordinates still written
    in the parent's parameter (they only acquire rational y-coordinates
    after the substitution), and keep_sections additionally transports the
    parent's sections.
    """
    n, d = _integer_pair(sub)
    new_var = sub.var
    s = max(-(-family.A.degree // 2), -(-family.B.degree // 4))
    lam = RatFunc(d) ** s
    A1 = lam * lam * ratfunc_substitute(RatFunc(family.A), sub)
    B1 = lam * lam * lam * lam * ratfunc_substitute(RatFunc(family.B), sub)
    if not (A1.is_polynomial() and B1.is_polynomial()):
        raise ValueError(f"substitution does not clear denominators for {label}")
    Ap, Bp = A1.as_poly(), B1.as_poly()
    c = _square_content_reduction(Ap, Bp, budget)
    Ap = Ap * Fraction(1, c * c)
    Bp = Bp * Fraction(1, c**4)
    scale = lam * Fraction(1, c)

    def transport(P: CurvePoint) -> CurvePoint:
        x = scale * scale * ratfunc_substitute(P.x, sub)
        y = scale**3 * ratfunc_substitute(P.y, sub)
        return CurvePoint(x, y)

    new = CurveFamily(
        label=label,
        torsion=family.torsion,
        var=new_var,
        A=Ap,
        B=Bp,
        torsion_points=tuple(transport(P) for P in family.torsion_points),
        rank=family.rank if rank is None else rank,
        parent=family.label,
        substitution=sub,
        condition=condition,
        spec_hint=None if spec_hint is None else Fraction(spec_hint),
    )
    pts: list[CurvePoint] = []
    if keep_sections:
        pts.extend(transport(P) for P in family.sections)
    for x in lift_sections:
        pts.append(verify_section(new, scale * scale * ratfunc_substitute(x, sub)))
    for x in sections:
        pts.append(verify_section(new, x))
    new = replace(new, sections=tuple(pts))
    if not new.verify():
        raise ValueError(f"transported points left the curve for {label}")
    return new


def verify_section(family: CurveFamily, x: RatFunc | PolyQ) -> CurvePoint:
    """Lift an x-coordinate to a point of the family, or raise NotASquare."""
    if isinstance(x, PolyQ):
        x = RatFunc(x)
    f = x * x * x + RatFunc(family.A) * x * x + RatFunc(family.B) * x
    y = ratfunc_sqrt(f)
    return CurvePoint(x, y)


# -- base models ----------------------------------------------------------

def model_z8(var: str = "v") -> CurveFamily:
    """The universal Z/8 family y^2 = x^3 + A8(v) x^2 + B8(v) x.

    Derived from the Tate normal form with b = (2v-1)(v-1), c = b/v, whose
    point (0,0) has order 8: the 2-torsion point 4P is moved to the origin
    and the model is rescaled by l = 2v.
    """
    v = RatFunc.variable(var)
    b = (2 * v - 1) * (v - 1)
    c = b / v
    E = tate_normal_curve(b, c)
    mult = tate_point_multiples(b, c)
    S, pm = to_shifted_ab(E, mult[4])
    W = S.weierstrass()
    # rescale (x, y) -> ((2v)^2 x, (2v)^3 y)
    W2, pm2 = W.transform(1 / (2 * v), RatFunc.const(0, var), RatFunc.const(0, var), RatFunc.const(0, var))
    gen = pm2.forward(pm.forward(CurvePoint(b * 0, b * 0)))
    A, B = W2.a2, W2.a4
    if not (A.is_polynomial() and B.is_polynomial()):
        raise AssertionError("Z/8 model derivation failed")
    return CurveFamily(
        label="Z8",
        torsion=(8,),
        var=var,
        A=A.as_poly(),
        B=B.as_poly(),
        torsion_points=(gen,),
        rank=0,
    )


def model_z2x6(var: str = "v") -> CurveFamily:
    """The universal Z/2 x Z/6 family y^2 = x^3 + A26(v) x^2 + B26(v) x.

    The Tate normal form with b = d + d^2, c = d has a point of order 6;
    moving the 2-torsion point 3P to the origin and rescaling by 2 gives
    y^2 = x^3 + (1+6d-3d^2) x^2 - 16d^3 x, whose cubic splits completely
    exactly when (d+1)(9d+1) is a square.  Substituting
    d = (v^2-1)/(2(5-3v)), which parametrizes (d+1)(9d+1) = (3d+v)^2,
    yields the universal Z/2 x Z/6 model.
    """
    d = RatFunc.variable(var)
    b = d + d * d
    c = d
    E = tate_normal_curve(b, c)
    mult = tate_point_multiples(b, c)
    S, pm = to_shifted_ab(E, mult[3])
    W = S.weierstrass()
    dd = PolyQ.variable(var)
    A6 = RatFunc(1 + 6 * dd - 3 * dd**2)
    lam2 = A6 / W.a2
    lam = ratfunc_sqrt(lam2)
    W2, pm2 = W.transform(1 / lam, RatFunc.const(0, var), RatFunc.const(0, var), RatFunc.const(0, var))
    if W2.a2 != A6 or W2.a4 != RatFunc(-16 * dd**3):
        raise AssertionError("Z/6 model derivation failed")
    gen6 = pm2.forward(pm.forward(CurvePoint(b * 0, b * 0)))
    base = CurveFamily(
        label="Z6",
        torsion=(6,),
        var=var,
        A=W2.a2.as_poly(),
        B=W2.a4.as_poly(),
        torsion_points=(gen6,),
        rank=0,
    )
    # d = (v^2 - 1) / (2(5 - 3v)) splits the 2-torsion completely
    v = RatFunc.variable(var)
    sub = (v * v - 1) / (2 * (5 - 3 * v))
    fam = substitute_parameter(base, sub, label="Z2x6")
    # second 2-torsion generator: a nonzero root of x^2 + Ax + B
    disc_root = poly_sqrt(fam.A * fam.A - 4 * fam.B)
    x2 = RatFunc(-1 * fam.A + disc_root) * Fraction(1, 2)
    T2 = CurvePoint(x2, RatFunc.const(0, var))
    fam = replace(
        fam,
        torsion=(2, 6),
        torsion_points=(T2,) + fam.torsion_points,
    )
    if not fam.verify():
        raise AssertionError("Z/2 x Z/6 model derivation failed")
    return fam


# -- catalog --------------------------------------------------------------

def _z8_rank1_data():
    """(section x(v), square condition c(v), substitution v(w)) per entry."""
    v = RatFunc.variable("v")
    w = RatFunc.variable("w")
    return [
        (4 * v**4,
         4 * v**2 - 4 * v + 5,
         (5 - w * w) / (4 * (w + 1))),
        (-(v - 1) * v,
         1 + v - v * v,
         (w - 2) * w / (w * w + 1)),
        (-4 * v**3 * (3 * v - 2),
         -(2 + v) * (3 * v - 2),
         -2 * (w - 1) * (w + 1) / (w * w + 3)),
        (16 * (v - 1) ** 2 * v**2 * (1 - 2 * v + 2 * v * v),
         1 - 2 * v + 2 * v * v,
         (w - 2) * w / (w * w - 2)),
        (-2 * v**2 * (2 * v * v - 1),
         1 - 2 * v * v,
         -2 * w / (w * w + 2)),
        (-((v - 1) ** 2) * (1 - 6 * v + 4 * v * v),
         -1 + 6 * v - 4 * v * v,
         (w * w - 2 * w + 2) / (w * w + 4)),
        (-4 * (v - 1) ** 4 * (6 * v - 1) / (2 * v - 3),
         -(2 * v - 3) * (6 * v - 1),
         (3 * w * w + 1) / (2 * (w * w + 3))),
        (-4 * (v - 1) ** 4 * (4 * v - 1) / (4 * v - 3),
         -(4 * v - 3) * (4 * v - 1),
         (w * w + 3) / (4 * (w * w + 1))),
        (-((v - 1) ** 4) * (8 * v - 5) * (18 * v - 5) / (4 * (3 * v - 2) ** 2),
         -(8 * v - 5) * (18 * v - 5),
         5 * (w * w + 1) / (2 * (4 * w * w + 9))),
        ((-4 * v * v + 4 * v + 1) * Fraction(1, 8),
         -2 * (4 * v * v - 4 * v - 1),
         (w * w - 4 * w + 2) / (2 * (w * w + 2))),
        (-((v - 1) ** 2) * (2 * v - 5) ** 2 * (36 * v * v - 70 * v + 25) / (6 * v - 7) ** 2,
         -25 + 70 * v - 36 * v * v,
         (w * w - 6 * w + 34) / (w * w + 36)),
        (-4 * (v - 1) ** 3 * v * (2 * v + 1) ** 2 / (2 * v - 3) ** 2,
         -16 * (28 * v * v - 28 * v - 9),
         -2 * (3 * w - 14) / (w * w + 28)),
        (-4 * (v - 1) ** 3 * v * (10 * v - 1) / (10 * v - 9),
         (10 * v - 9) * (10 * v - 1),
         (3 * w - 1) * (3 * w + 1) / (10 * (w - 1) * (w + 1))),
        (-(v - 1) * v * Fraction(27, 2),
         -6 * (v - 3) * (v + 2),
         -2 * (w - 3) * (w + 3) / (w * w + 6)),
        (-((16 * v * v - 16 * v + 1) ** 2) * Fraction(1, 64),
         7 - 128 * v + 128 * v * v,
         -(w * w + 80 * w + 1152) / (8 * (w * w - 128))),
        ((v - 1) ** 2 * (4 * v - 1) ** 2 * (10 * v - 1) / (8 * (3 * v - 1)),
         2 * (3 * v - 1) * (10 * v - 1),
         (2 * w * w - 1) / (2 * (3 * w * w - 5))),
        (-((v - 1) ** 2) * (2 * v + 1) ** 2 * (8 * v + 1) / (8 * (v - 3)),
         -2 * (v - 3) * (8 * v + 1),
         (6 * w * w - 1) / (2 * (w * w + 4))),
        (4 * (4 * v - 3) ** 2 * (10 * v - 9) * (18 * v * v - 26 * v + 9) ** 2
         / ((6 * v - 5) ** 2 * (18 * v - 13)),
         (10 * v - 9) * (18 * v - 13),
         (9 * w * w - 13) / (2 * (5 * w * w - 9))),
    ]


def _z8_rank2_data():
    """(parent index, substitution w(u), condition in w, spec value, [X1, X2])."""
    u = RatFunc.variable("u")
    w = RatFunc.variable("w")
    return [
        (3, (11 - u * u) / (10 * u), 25 * w * w + 11, 22,
         [-16 * (u - 11) ** 3 * (u - 1) * (u + 1) ** 3 * (u + 11)
          * (3 * u**4 + 34 * u * u + 363) ** 2,
          (u - 11) ** 2 * (u - 1) ** 2 * (u + 1) ** 2 * (u + 11) ** 2
          * (u * u + 11) ** 2 * (7 * u**4 + 346 * u * u + 847) ** 2
          / (64 * u * u)]),
        (3, (u * u - 12 * u + 29) / (u * u - 29), 29 * w * w + 7, 19,
         [16 * (u - 6) * u * (6 * u - 29) ** 3
          * (u**4 - 18 * u**3 + 137 * u * u - 522 * u + 841) ** 2,
          (u - 6) ** 2 * u * u * (6 * u - 29) ** 2 * (3 * u * u - 29 * u + 87) ** 2
          * (3 * u**4 - 66 * u**3 + 541 * u * u - 1914 * u + 2523) ** 2
          / (4 * (u * u - 12 * u + 29) ** 2)]),
        (3, (u * u - 12 * u + 15) / (u * u - 15),
         -(w - 1) * (w + 1) * (3 * w * w + 1), 11,
         [1728 * (u - 6) ** 3 * u**3 * (2 * u - 5) ** 3 * (u * u - 12 * u + 15) ** 2,
          81 * (u - 6) * u * (2 * u - 5) * (u * u - 15 * u + 75) * (u * u - 3 * u + 3)
          * (u**4 - 6 * u**3 + 21 * u * u - 90 * u + 225) ** 2]),
        (12, -(u - 28) * (u + 28) / (2 * (u - 63)), None, 17,
         [16 * (u - 63) * (u - 28) ** 3 * (u - 14) ** 3 * (u + 2) ** 3 * (u + 28) ** 3
          * (u + 42) * (3 * u - 98)
          * (u**4 + 24 * u**3 - 2744 * u * u - 61152 * u + 3133648) ** 2
          / (3 * u**4 - 24 * u**3 - 3080 * u * u + 4704 * u + 1103088) ** 2,
          -1024 * (u - 63) ** 2 * (u - 28) ** 3 * (u - 14) ** 2 * (u + 2) ** 2
          * (u + 28) ** 3 * (u + 42) ** 3 * (3 * u - 98) ** 3
          / (u * u - 28 * u + 980) ** 2]),
        (13, -(3 * u * u - 80 * u + 510) / (u * u - 170),
         10 * (17 * w * w + 7), 3,
         [-u * (3 * u - 40) * (4 * u - 51) ** 4 * (2 * u * u - 60 * u + 425)
          * (u**3 - 44 * u * u + 660 * u - 3400) ** 2,
          -u * (3 * u - 40) * (4 * u - 51) ** 2 * (2 * u * u - 60 * u + 425)
          * (35 * u**3 - 1236 * u * u + 14620 * u - 57800) ** 2]),
        (17, 3 * (u * u - 20 * u + 60) / (2 * (u * u - 60)),
         30 * (2 * w * w + 3), -48,
         [104976 * (u - 10) ** 2 * (u - 6) ** 2 * u * u * (u * u - 20 * u + 60) ** 2
          * (5 * u**4 - 168 * u**3 + 2088 * u * u - 10080 * u + 18000) ** 2
          / (u * u - 60) ** 2,
          1944 * (u - 10) * (u - 6) * u * (u * u - 36 * u + 300)
          * (5 * u * u - 36 * u + 60)
          * (5 * u**4 - 72 * u**3 + 552 * u * u - 4320 * u + 18000) ** 2]),
        (18, (u * u - 6 * u + 21) / (u * u - 14 * u + 21),
         7 * w * w - 3, 10,
         [(u * u - 8 * u + 3) ** 2
          * (u**4 - 32 * u**3 + 278 * u * u - 672 * u + 441)
          * (2 * u**5 - 55 * u**4 + 508 * u**3 - 1834 * u * u + 3234 * u - 3087) ** 2,
          u * u * (u * u - 56 * u + 147) ** 2 * (u * u - 8 * u + 3) ** 4
          * (u**4 - 32 * u**3 + 278 * u * u - 672 * u + 441) ** 3
          / (u**5 - 22 * u**4 + 262 * u**3 - 1524 * u * u + 3465 * u - 2646) ** 2]),
    ]


def _z2x6_rank1_data():
    v = RatFunc.variable("v")
    w = RatFunc.variable("w")
    return [
        (16 * (v - 2) * (1 + v) ** 2,
         3 * (v - 2) * v,
         -6 / (w * w - 3)),
        (64 * (v - 1) ** 2 * (v + 1) ** 3 / (v + 5) ** 2,
         -6 * (v - 7) * (3 + v),
         3 * (14 * w * w - 1) / (6 * w * w + 1)),
        ((1 + v) ** 2 * (7 - 4 * v + v * v) ** 2,
         6 - 2 * v + v * v,
         (2 * w * w - 4 * w - 1) / (2 * w - 3)),
        ((v - 1) * (v + 1) * (3 * v - 1) ** 2 * Fraction(64, 3),
         6 * (2 * v - 1) * (7 * v - 1),
         (6 * w * w - 1) / (12 * w * w - 7)),
    ]


def _z2x6_rank2_data():
    u = RatFunc.variable("u")
    w = RatFunc.variable("w")
    return [
        (1, 3 * (u * u - 8 * u + 14) / (u * u - 14),
         -(w * w - 3) * (7 * w * w + 9), 15,
         [-27 * (u - 4) ** 2 * u * u * (2 * u - 7) ** 2 * (u * u - 8 * u + 14) ** 2
          * (u**4 - 24 * u**3 + 152 * u * u - 336 * u + 196),
          -(u - 4) ** 2 * u * u * (2 * u - 7) ** 2 * (u * u - 7 * u + 14) ** 2
          * (u**4 - 24 * u**3 + 152 * u * u - 336 * u + 196) * Fraction(27, 4)]),
        (1, (u * u - 8 * u + 6) / (u * u - 6),
         (w * w - 9) * (w * w - 3) * (7 * w * w + 9), 17,
         [(u - 3) ** 2 * (u - 2) ** 2 * (u + 1) ** 2 * (u + 6) ** 2
          * (u * u - 8 * u + 6) ** 2
          * (u**4 + 8 * u**3 - 56 * u * u + 48 * u + 36),
          (u - 3) * (u - 2) * (u + 1) * (u + 6)
          * (u**4 + 8 * u**3 - 56 * u * u + 48 * u + 36)
          * (2 * u**4 - 14 * u**3 + 53 * u * u - 84 * u + 72) ** 2 * Fraction(1, 4)]),
        (2, (u * u - 30 * u + 180) / (3 * (u * u - 180)),
         (36 * w * w + 1) * (48 * w * w - 7), 22,
         [18432 * (u - 15) ** 2 * (u - 12) ** 2 * u * u
          * (u**4 - 96 * u**3 + 2232 * u * u - 17280 * u + 32400) ** 3
          * (u**4 - 24 * u**3 + 288 * u * u - 4320 * u + 32400)
          / (u * u - 24 * u + 180) ** 4,
          -15552 * (u - 15) ** 2 * (u - 12) ** 2 * u * u * (u * u - 24 * u + 180) ** 2
          * (u**4 + 192 * u**3 - 5544 * u * u + 34560 * u + 32400)]),
        (3, -(4 * u + 9) / (u * u - 3), None, 19,
         [-4 * (u - 6) * u * (u + 2) * (3 * u + 4) * (u * u + 3 * u + 1)
          * (u * u + 9 * u + 9)
          * (2 * u**4 + 8 * u**3 + 22 * u * u + 48 * u + 45) ** 2,
          (6 - u) * (2 + u) * (1 + 3 * u + u * u) * (9 + 9 * u + u * u)
          * (3 + 4 * u + 2 * u * u) ** 3 * (21 + 12 * u + 2 * u * u)
          * (9 + 8 * u + 3 * u * u)]),
        (4, 4 * (u * u + 1) / (5 * (u * u - 1)),
         -(12 * w * w - 7) * (21 * w * w - 16), 20,
         [192 * (u - 3) ** 2 * (u + 3) * (3 * u + 1) * (u * u - 5 * u + 1)
          * (11 * u * u + 1) ** 2 * (u**3 + 28 * u * u + 11 * u + 8) ** 2,
          243 * (u - 3) ** 2 * (u + 3) ** 2 * (3 * u - 1) ** 2 * (1 + 3 * u) ** 2
          * (1 - 5 * u + u * u) * (1 + 5 * u + u * u)
          * (17 + 734 * u * u + 17 * u**4)]),
    ]


_CATALOG_CACHE: dict[str, CurveFamily] = {}


def catalog() -> dict[str, CurveFamily]:
    """All families keyed by label: the base models, the rank-1 entries
    obtained from them by a single quadratic-section substitution, and the
    rank-2 entries obtained by one more.
    """
    if _CATALOG_CACHE:
        return dict(_CATALOG_CACHE)
    out: dict[str, CurveFamily] = {}
    z8 = model_z8()
    z26 = model_z2x6()
    out["Z8"] = z8
    out["Z2x6"] = z26
    for i, (x, cond, sub) in enumerate(_z8_rank1_data(), start=1):
        cond_poly = cond.as_poly() if isinstance(cond, RatFunc) else cond
        out[f"Z8-{i}"] = substitute_parameter(
            z8, sub, label=f"Z8-{i}", rank=1, lift_sections=[x],
            condition=cond_poly,
        )
    for i, (parent, sub, cond, hint, xs) in enumerate(_z8_rank2_data(), start=1):
        cond_poly = None if cond is None else cond.as_poly()
        out[f"Z8R2-{i}"] = substitute_parameter(
            out[f"Z8-{parent}"], sub, label=f"Z8R2-{i}", rank=2,
            sections=xs, condition=cond_poly, spec_hint=hint,
        )
    for i, (x, cond, sub) in enumerate(_z2x6_rank1_data(), start=1):
        cond_poly = cond.as_poly() if isinstance(cond, RatFunc) else cond
        out[f"Z2x6-{i}"] = substitute_parameter(
            z26, sub, label=f"Z2x6-{i}", rank=1, lift_sections=[x],
            condition=cond_poly,
        )
    for i, (parent, sub, cond, hint, xs) in enumerate(_z2x6_rank2_data(), start=1):
        cond_poly = None if cond is None else cond.as_poly()
        out[f"Z2x6R2-{i}"] = substitute_parameter(
            out[f"Z2x6-{parent}"], sub, label=f"Z2x6R2-{i}", rank=2,
            sections=xs, condition=cond_poly, spec_hint=hint,
        )
    _CATALOG_CACHE.update(out)
    return dict(out)
