"""Quadratic sections: divisor conditions, conics, and quartic-to-cubic maps.

A family y^2 = x^3 + A x^2 + B x acquires a new section at x = d whenever
d + A + B/d is a square; more generally x = d U^2/V^2 works when the
biquadratic form d U^4 + A U^2 V^2 + (B/d) V^4 takes a square value.  The
degree-2 conditions are conics, solved and parametrized exactly here; the
degree-4 conditions with a known rational point are converted to their
Jacobian elliptic curves.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, Optional, Sequence

import sympy
from sympy.solvers.diophantine import diophantine

from .arith import (
    DEFAULT_BUDGET,
    FactorBudget,
    Unfactored,
    factor,
    hilbert_symbol,
    squarefree_decompose,
)
from .curves import INFINITY, CurvePoint, WeierstrassCurve
from .polyq import NotASquare, PolyQ, RatFunc, square_decompose_poly


class DegenerateQuartic(ValueError):
    """Raised when a quartic model is singular (not squarefree)."""


# ---------------------------------------------------------------------------
# divisor-driven conditions
# ---------------------------------------------------------------------------


def _divisors_of(n: int) -> list[int]:
    fi = factor(n)
    if not fi.complete:
        raise Unfactored(f"cannot enumerate divisors of {n}")
    divs = [1]
    for p, e in fi.factors:
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def divisor_conditions(
    family, *, limit: int = 4096, budget: FactorBudget = DEFAULT_BUDGET
) -> list[tuple[RatFunc, PolyQ]]:
    """Enumerate candidate sections x = d over the divisors d of B.

    For each divisor d = unit * (product of polynomial factors of B) the
    squarefree part of d + A + B/d is returned; a new section at x = d
    exists exactly when that polynomial takes a square value.
    """
    A, B = family.A, family.B
    content, parts = B.factor()
    if content.denominator != 1:
        raise ValueError("expected an integer-content B")
    unit_divs = _divisors_of(abs(content.numerator))
    shape = list(parts)
    count = 2 * len(unit_divs)
    for _f, e in shape:
        count *= e + 1
    if count > limit:
        raise ValueError(
            f"divisor enumeration would produce {count} candidates (limit {limit})"
        )
    out: list[tuple[RatFunc, PolyQ]] = []
    seen: set[str] = set()
    exp_ranges = [range(e + 1) for _f, e in shape]
    for unit in unit_divs:
        for sign in (1, -1):
            for exps in itertools.product(*exp_ranges):
                d_poly = PolyQ.const(Fraction(sign * unit), A.var)
                for (f, _e), k in zip(shape, exps):
                    if k:
                        d_poly = d_poly * f**k
                d = RatFunc(d_poly)
                cond_rf = d + RatFunc(A) + RatFunc(B) / d
                cond = cond_rf.as_poly()
                if cond.is_zero():
                    continue
                _s, core = square_decompose_poly(cond)
                key = str(core)
                if key in seen:
                    continue
                seen.add(key)
                out.append((d, core))
    return out


def section_condition(family, x: RatFunc) -> PolyQ:
    """Squarefree polynomial whose square values make x a section.

    x is a section of y^2 = x^3 + A x^2 + B x exactly when x + A + B/x is a
    square; the squarefree part of its numerator-times-denominator is the
    obstruction, well defined up to squares.
    """
    val = x + RatFunc(family.A) + RatFunc(family.B) / x
    if val.is_zero():
        raise ValueError("x is a 2-torsion abscissa, not a candidate section")
    _s, core = square_decompose_poly(val.num * val.den)
    return core


@dataclass(frozen=True)
class BiquadraticForm:
    """The form d U^4 + A U^2 V^2 + (B/d) V^4 attached to a divisor d."""

    d: RatFunc
    A: RatFunc
    B_over_d: RatFunc

    def evaluate(self, U: RatFunc, V: RatFunc) -> RatFunc:
        return (
            self.d * U**4 + self.A * U * U * V * V + self.B_over_d * V**4
        )


def homogeneous_space(family, d: RatFunc) -> BiquadraticForm:
    """Biquadratic form whose square values give sections x = d U^2 / V^2."""
    quotient = RatFunc(family.B) / d
    return BiquadraticForm(d, RatFunc(family.A), quotient)


# ---------------------------------------------------------------------------
# conics
# ---------------------------------------------------------------------------


def _content_reduce_matrix(M) -> tuple[tuple[int, ...], ...]:
    entries = [int(x) for row in M for x in row]
    g = 0
    for x in entries:
        g = gcd(g, abs(x))
    g = g or 1
    return tuple(tuple(int(x) // g for x in row) for row in M)


@dataclass(frozen=True)
class Conic:
    """Projective conic x^T M x = 0 with a symmetric integer matrix M."""

    M: tuple[tuple[int, ...], ...]

    def __init__(self, M: Sequence[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in M)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("conic matrix must be 3x3")
        for i in range(3):
            for j in range(3):
                if rows[i][j] != rows[j][i]:
                    raise ValueError("conic matrix must be symmetric")
        rows = _content_reduce_matrix(rows)
        if _det3(rows) == 0:
            raise ValueError("degenerate conic")
        object.__setattr__(self, "M", rows)

    def value(self, pt: Sequence[Fraction]) -> Fraction:
        x = [Fraction(c) for c in pt]
        return sum(
            self.M[i][j] * x[i] * x[j] for i in range(3) for j in range(3)
        )

    @staticmethod
    def from_quadratic(a: int, b: int, c: int, d: int, e: int, f: int) -> "Conic":
        """Conic of a x^2 + b y^2 + c z^2 + d xy + e xz + f yz = 0."""
        return Conic(
            [
                [2 * a, d, e],
                [d, 2 * b, f],
                [e, f, 2 * c],
            ]
        )


def _det3(M) -> int:
    return (
        M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
        - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
        + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0])
    )


def _diagonalize(M) -> tuple[list[Fraction], list[list[Fraction]], Optional[tuple]]:
    """Congruence-diagonalize M over Q.

    Returns (diag, T, point) where x = T y maps diagonal solutions back to M,
    or point is an immediate rational solution discovered along the way
    (an isotropic basis vector).
    """
    A = [[Fraction(M[i][j]) for j in range(3)] for i in range(3)]
    T = [[Fraction(int(i == j)) for j in range(3)] for i in range(3)]
    for k in range(3):
        if A[k][k] == 0:
            # find a later index with nonzero diagonal to swap in
            swap = next((i for i in range(k + 1, 3) if A[i][i] != 0), None)
            if swap is None:
                # all remaining diagonal entries vanish: basis vector e_k of
                # the current coordinates is on the conic
                pt = tuple(T[i][k] for i in range(3))
                return [], [], pt
            for i in range(3):
                A[k][i], A[swap][i] = A[swap][i], A[k][i]
            for i in range(3):
                A[i][k], A[i][swap] = A[i][swap], A[i][k]
            for i in range(3):
                T[i][k], T[i][swap] = T[i][swap], T[i][k]
        for i in range(k + 1, 3):
            if A[k][i] != 0:
                lam = -A[k][i] / A[k][k]
                # column operation C_i += lam C_k, and same row operation
                for j in range(3):
                    A[j][i] += lam * A[j][k]
                for j in range(3):
                    A[i][j] += lam * A[k][j]
                for j in range(3):
                    T[j][i] += lam * T[j][k]
    return [A[0][0], A[1][1], A[2][2]], T, None


def _squarefree_scale(q: Fraction, budget: FactorBudget) -> tuple[int, Fraction]:
    """Write q = sf * scale^2 with sf a squarefree integer."""
    n = q.numerator * q.denominator
    s, f = squarefree_decompose(n, budget)
    return f, Fraction(s, q.denominator)


REAL_PLACE = "real"


def local_obstruction(C: Conic, budget: FactorBudget = DEFAULT_BUDGET):
    """Return a place obstructing solvability (REAL_PLACE or a prime), or
    None when the conic is locally solvable everywhere."""
    diag, _T, pt = _diagonalize(C.M)
    if pt is not None:
        return None
    coeffs = []
    for q in diag:
        f, _scale = _squarefree_scale(q, budget)
        coeffs.append(f)
    a, b, c = coeffs
    # a x^2 + b y^2 + c z^2 = 0  <=>  (-a c) X^2 + (-b c) Y^2 = Z^2
    places = {None, 2}
    for n in (a, b, c):
        fi = factor(abs(n), budget)
        if not fi.complete:
            raise Unfactored(f"cannot certify conic solvability: {n}")
        places.update(fi.primes())
    for p in sorted(places, key=lambda x: (x is not None, x or 0)):
        if hilbert_symbol(-a * c, -b * c, p) != 1:
            return REAL_PLACE if p is None else p
    return None


def solve_conic(
    C: Conic, budget: FactorBudget = DEFAULT_BUDGET
) -> Optional[tuple[Fraction, Fraction, Fraction]]:
    """An exact projective point on the conic, or None when none exists.

    Emptiness is certified by a local obstruction (see local_obstruction),
    never by giving up on a search.
    """
    diag, T, pt = _diagonalize(C.M)
    if pt is not None:
        sol = tuple(Fraction(v) for v in pt)
        assert C.value(sol) == 0
        return sol
    if local_obstruction(C, budget) is not None:
        return None
    # solvable; find a diagonal solution with sympy's ternary machinery
    sf: list[int] = []
    scales: list[Fraction] = []
    for q in diag:
        f, scale = _squarefree_scale(q, budget)
        sf.append(f)
        scales.append(scale)
    x, y, z = sympy.symbols("x y z", integer=True)
    eq = sf[0] * x**2 + sf[1] * y**2 + sf[2] * z**2
    vals = None
    for sol in diophantine(eq):
        symbols = sorted(
            {s for expr in sol for s in sympy.sympify(expr).free_symbols},
            key=str,
        )
        if not symbols:
            cand = [Fraction(int(v)) for v in sol]
            if any(cand):
                vals = cand
                break
            continue
        # parametric family: substitute small integers until a nonzero
        # representative appears
        for assignment in itertools.product(range(-3, 4), repeat=len(symbols)):
            subs = dict(zip(symbols, assignment))
            cand = [Fraction(int(sympy.sympify(expr).subs(subs))) for expr in sol]
            if any(cand):
                vals = cand
                break
        if vals is not None:
            break
    if vals is None:  # pragma: no cover - contradicts the local certificate
        raise RuntimeError("no point found for a locally solvable conic")
    # undo the squarefree scaling, then the diagonalizing change of basis
    yvec = [v / s for v, s in zip(vals, scales)]
    out = tuple(
        sum(T[i][j] * yvec[j] for j in range(3)) for i in range(3)
    )
    assert C.value(out) == 0 and any(out)
    return out


def parametrize_conic(
    C: Conic, p0: Sequence[Fraction], var: str = "t"
) -> tuple[PolyQ, PolyQ, PolyQ]:
    """Sweep the lines through p0: degree-2 polynomials (x(t), y(t), z(t))
    with x^T M x identically zero and p0 among the values."""
    p = [Fraction(c) for c in p0]
    if C.value(p) != 0:
        raise ValueError("base point is not on the conic")

    def bilinear(u, w):
        return sum(C.M[i][j] * u[i] * w[j] for i in range(3) for j in range(3))

    # direction r(t) = e_i + t e_j with p, e_i, e_j independent and the
    # tangency parameter B(p, r(t)) = 0 attainable (so p0 itself is swept)
    basis = [
        [Fraction(int(i == k)) for i in range(3)] for k in range(3)
    ]
    choice = None
    for i, j in itertools.permutations(range(3), 2):
        e_i, e_j = basis[i], basis[j]
        if bilinear(p, e_j) == 0:
            continue
        det = _det3([p, e_i, e_j])
        if det != 0:
            choice = (e_i, e_j)
            break
    if choice is None:  # pragma: no cover - impossible for nondegenerate conics
        raise RuntimeError("no sweeping direction found")
    e_i, e_j = choice
    t = PolyQ.variable(var)
    r = [PolyQ.const(e_i[k], var) + t * e_j[k] for k in range(3)]
    # second intersection of the line p + s r with the conic:
    # Q(r) p - 2 B(p, r) r
    Qr = sum(
        r[a] * r[b] * C.M[a][b] for a in range(3) for b in range(3)
    )
    Bpr = sum(
        r[b] * C.M[a][b] * p[a] for a in range(3) for b in range(3)
    )
    out = tuple(Qr * PolyQ.const(p[k], var) - 2 * Bpr * r[k] for k in range(3))
    check = sum(
        out[a] * out[b] * C.M[a][b] for a in range(3) for b in range(3)
    )
    assert check.is_zero()
    return out


# ---------------------------------------------------------------------------
# quartics with a rational point
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuarticModel:
    """t^2 = q(u) with q of degree at most 4 and an optional known point."""

    q: PolyQ
    known_point: Optional[tuple[Fraction, Fraction]] = None

    def __post_init__(self):
        if self.q.degree > 4 or self.q.is_zero():
            raise ValueError("expected a nonzero polynomial of degree <= 4")
        _content, parts = self.q.factor()
        if any(e > 1 for _f, e in parts):
            raise DegenerateQuartic(str(self.q))
        if self.known_point is not None:
            u0, t0 = self.known_point
            if Fraction(t0) ** 2 != self.q(Fraction(u0)):
                raise ValueError("known point does not satisfy the equation")


def quartic_jacobian(
    Q: QuarticModel,
) -> tuple[WeierstrassCurve, Callable, Callable]:
    """Elliptic model of t^2 = q(u) built from the known rational point.

    Returns (E, forward, inverse): forward maps a point (u, t) of the
    quartic to a CurvePoint of E, inverse maps a CurvePoint back.  Both are
    exact and mutually inverse wherever defined.
    """
    if Q.known_point is None:
        raise ValueError("a known rational point is required")
    u0, t0 = Fraction(Q.known_point[0]), Fraction(Q.known_point[1])
    # shift the known point to u = 0
    var = Q.q.var
    shifted = Q.q(PolyQ.variable(var) + u0)
    cs = list(shifted.coeffs) + [Fraction(0)] * (5 - len(shifted.coeffs))
    _e, d, c, b, a = cs[:5]
    if t0 == 0:
        return _root_case(Q, u0, a, b, c, d)
    q0 = t0
    a1 = d / q0
    a2 = c - d * d / (4 * q0 * q0)
    a3 = 2 * q0 * b
    a4 = -4 * q0 * q0 * a
    a6 = a * (d * d - 4 * q0 * q0 * c)
    E = WeierstrassCurve(a1, a2, a3, a4, a6)

    def forward(u: Fraction, t: Fraction) -> CurvePoint:
        u = Fraction(u) - u0
        t = Fraction(t)
        if u == 0:
            if t == q0:
                return INFINITY
            # the point (u0, -q0) maps to the limit of the generic formula
            X = d * d / (4 * q0 * q0) - c
            P = CurvePoint(X, -a1 * X - a3)
            assert E.contains(P)
            return P
        X = (2 * q0 * (t + q0) + d * u) / (u * u)
        Y = (
            4 * q0 * q0 * (t + q0)
            + 2 * q0 * (d * u + c * u * u)
            - d * d * u * u / (2 * q0)
        ) / (u**3)
        P = CurvePoint(X, Y)
        assert E.contains(P)
        return P

    def inverse(P: CurvePoint) -> tuple[Fraction, Fraction]:
        if P.is_infinity:
            return (u0, q0)
        X, Y = P.x, P.y
        denom = 2 * q0 * Y
        if denom == 0:
            raise ValueError("map undefined at this point")
        u = (4 * q0 * q0 * (X + c) - d * d) / denom
        if u == 0:
            return (u0, -q0)
        t = (X * u * u - d * u) / (2 * q0) - q0
        assert t * t == Q.q(u + u0)
        return (u + u0, t)

    return E, forward, inverse


def _root_case(Q: QuarticModel, u0, a, b, c, d):
    """Known point is a root of the quartic: u |-> d/u turns t^2 = q into a
    cubic directly."""
    if d == 0:
        raise DegenerateQuartic("repeated root at the known point")
    # t^2 = a u^4 + b u^3 + c u^2 + d u  with  u = d/U, t = d V / U^2
    # gives V^2 = U^3 + c U^2 + b d U + a d^2
    E = WeierstrassCurve(0, c, 0, b * d, a * d * d)

    def forward(u: Fraction, t: Fraction) -> CurvePoint:
        u = Fraction(u) - u0
        if u == 0:
            return INFINITY
        U = d / u
        V = d * Fraction(t) / (u * u)
        P = CurvePoint(U, V)
        assert E.contains(P)
        return P

    def inverse(P: CurvePoint) -> tuple[Fraction, Fraction]:
        if P.is_infinity:
            return (u0, Fraction(0))
        if P.x == 0:
            raise ValueError("map undefined at this point")
        u = d / P.x
        t = P.y * u * u / d
        assert t * t == Q.q(u + u0)
        return (u + u0, t)

    return E, forward, inverse
