"""Minimal models, Tate's algorithm and conductors over Q.

All computations are exact over the integers: reductions are handled through
p-adic valuations of the integral coefficients, never through floating point
or truncated p-adic expansions.
"""

from __future__ import annotations

import math

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .arith import (
    DEFAULT_BUDGET,
    FactorBudget,
    FactoredInt,
    Unfactored,
    factor,
    jacobi,
    valuation,
)
from .curves import PointMap, WeierstrassCurve


@dataclass(frozen=True)
class LocalData:
    """Reduction data of a minimal model at one prime."""

    p: int
    kodaira: str  # "I0", "In", "II", "III", "IV", "I0*", "In*", "IV*", "III*", "II*"
    f_p: int
    c_p: int
    reduction: str  # good | split-multiplicative | nonsplit-multiplicative | additive
    vp_disc_min: int

    def components(self) -> int:
        """Number of components of the special fiber (with multiplicity 1
        counting), as used in the conductor-discriminant relation."""
        k = self.kodaira
        named = {"II": 1, "III": 2, "IV": 3, "IV*": 7, "III*": 8, "II*": 9}
        if k in named:
            return named[k]
        if k.endswith("*"):
            return int(k[1:-1]) + 5
        return max(int(k[1:]), 1)


def _int_invariants(E: WeierstrassCurve) -> tuple[int, int, int, int, int]:
    ai = []
    for a in (E.a1, E.a2, E.a3, E.a4, E.a6):
        a = Fraction(a)
        if a.denominator != 1:
            raise ValueError("integral model required")
        ai.append(a.numerator)
    return tuple(ai)


# ---------------------------------------------------------------------------
# minimal models (Laska-Kraus-Connell)
# ---------------------------------------------------------------------------


def _kraus_ok(c4: int, c6: int, p: int) -> bool:
    """Whether (c4, c6) arises from some integral model over Z_p."""
    if p == 3:
        return valuation(c6, 3) != 2 if c6 else True
    if p == 2:
        if c6 % 4 == 3:
            return True
        return c4 % 16 == 0 and c6 % 32 in (0, 8)
    return True


def _curve_from_c4c6(c4: int, c6: int) -> WeierstrassCurve:
    """Integral model with the given invariants (Kraus conditions assumed)."""
    b2 = (-c6) % 12
    if b2 > 6:
        b2 -= 12
    b4 = (b2 * b2 - c4) // 24
    b6 = (-b2**3 + 36 * b2 * b4 - c6) // 216
    a1 = b2 % 2
    a2 = (b2 - a1) // 4
    a3 = b6 % 2
    a4 = (b4 - a1 * a3) // 2
    a6 = (b6 - a3) // 4
    E = WeierstrassCurve(a1, a2, a3, a4, a6)
    assert (E.c4, E.c6) == (c4, c6)
    return E


def minimal_model(
    E: WeierstrassCurve, budget: FactorBudget = DEFAULT_BUDGET
) -> tuple[WeierstrassCurve, PointMap]:
    """Global minimal model over Q, with the point map onto it.

    A prime p can be scaled away only when p^4 | c4 and p^6 | c6, so the
    candidate primes are read off a factorization of gcd(c4, c6) (of the
    nonzero invariant when the other vanishes).  The discriminant itself is
    never factored; an unfactorable gcd residue raises Unfactored unless it
    is certifiably 4th-power-free.
    """
    if not E.is_integral():
        E, _pm = E.integral_model()
    _int_invariants(E)
    c4, c6 = int(E.c4), int(E.c6)
    g = math.gcd(c4, c6) if c4 and c6 else abs(c4 or c6)
    fi = factor(g, budget)
    if not fi.complete:
        # every prime factor of the residue exceeds the trial bound, so a
        # hidden candidate prime p (with p^4 dividing the residue) would
        # force the residue to be at least trial_bound^4
        if fi.residue >= budget.trial_bound**4:
            raise Unfactored(
                "gcd(c4, c6) residue could hide a 4th power; "
                "minimality cannot be certified"
            )
    u = 1
    disc = int(E.disc)
    for p, e in fi.factors:
        if p >= 5 and e < 4:
            continue
        while True:
            g4, g6 = valuation(c4, p) if c4 else 10**9, valuation(c6, p) if c6 else 10**9
            if g4 < 4 or g6 < 6 or valuation(disc, p) < 12:
                break
            nc4, nc6 = c4 // p**4, c6 // p**6
            if p in (2, 3) and not _kraus_ok(nc4, nc6, p):
                break
            c4, c6, disc = nc4, nc6, disc // p**12
            u *= p
    Emin = _curve_from_c4c6(c4, c6)
    # the map E -> Emin: compose scaling by u with the translation aligning
    # the (c4, c6)-standard model
    pm = _isomorphism_with_scale(E, Emin, Fraction(u))
    return Emin, pm


def _isomorphism_with_scale(E1, E2, u: Fraction) -> PointMap:
    """PointMap from E1 to E2 for a known scale factor u (c4_2 = c4_1/u^4)."""
    s = (u * E2.a1 - E1.a1) / 2
    r = (u * u * E2.a2 - E1.a2 + s * E1.a1 + s * s) / 3
    t = (u**3 * E2.a3 - E1.a3 - r * E1.a1) / 2
    check, pm = E1.transform(u, r, s, t)
    assert check == E2
    return pm


# ---------------------------------------------------------------------------
# Tate's algorithm
# ---------------------------------------------------------------------------


def _vp(n: int, p: int) -> int:
    return valuation(n, p) if n else 10**9


def _poly_roots_mod_p(coeffs: list[int], p: int) -> list[int]:
    """Roots in F_p of a polynomial given by ascending coefficients."""
    cs = [c % p for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if not cs:
        return list(range(p))
    if p <= 50:
        return [x for x in range(p) if sum(c * pow(x, i, p) for i, c in enumerate(cs)) % p == 0]
    deg = len(cs) - 1
    if deg == 1:
        return [(-cs[0] * pow(cs[1], -1, p)) % p]
    if deg == 2:
        return sorted(set(_quad_roots(cs, p)))
    # cubic: the gcd with x^p - x is the product of the distinct linear factors
    g = _gcd_mod_p(cs, _xp_minus_x_mod(cs, p), p)
    gdeg = len(g) - 1
    if gdeg == 0:
        return []
    if gdeg == 1:
        return [(-g[0] * pow(g[1], -1, p)) % p]
    if gdeg == 2:
        return sorted(set(_quad_roots(g, p)))
    # fully split cubic: extract one root, deflate, finish with the formula
    r = _one_root_split_cubic(g, p)
    return sorted(set([r] + _quad_roots(_deflate(g, r, p), p)))


def sqrt_mod(a: int, p: int) -> int:
    """Square root modulo an odd prime (Tonelli-Shanks)."""
    a %= p
    if a == 0:
        return 0
    assert jacobi(a, p) == 1
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # Tonelli-Shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while jacobi(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c, t, r = i, b * b % p, t * b * b % p, r * b % p
    return r


def _quad_roots(cs: list[int], p: int) -> list[int]:
    a, b, c = cs[2] % p, cs[1] % p, cs[0] % p
    disc = (b * b - 4 * a * c) % p
    if disc == 0:
        return [(-b * pow(2 * a, -1, p)) % p]
    if jacobi(disc, p) != 1:
        return []
    s = sqrt_mod(disc, p)
    inv2a = pow(2 * a, -1, p)
    return [((-b + s) * inv2a) % p, ((-b - s) * inv2a) % p]


def _one_root_split_cubic(cs: list[int], p: int) -> int:
    """A root of a cubic known to split completely mod p (p odd, large)."""
    # depress and use the fact that gcd((x+a)^((p-1)/2) - 1, f) is a proper
    # factor for random a; a handful of tries suffices
    import random

    rng = random.Random(p)
    for _ in range(64):
        a = rng.randrange(p)
        g = _gcd_mod_p(cs, _power_poly_mod(cs, a, (p - 1) // 2, p), p)
        if 1 <= len(g) - 1 < len(cs) - 1:
            if len(g) - 1 == 1:
                return (-g[0] * pow(g[1], -1, p)) % p
            return _quad_roots(g, p)[0]
    raise RuntimeError("root extraction failed")  # pragma: no cover


def _polymulmod(a, b, mod, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _polyrem(out, mod, p)


def _polyrem(a, mod, p):
    a = [x % p for x in a]
    dm = len(mod) - 1
    inv = pow(mod[-1], -1, p)
    while len(a) - 1 >= dm and any(a):
        while a and a[-1] % p == 0:
            a.pop()
        if len(a) - 1 < dm:
            break
        coef = a[-1] * inv % p
        shift = len(a) - 1 - dm
        for i, m in enumerate(mod):
            a[shift + i] = (a[shift + i] - coef * m) % p
        while a and a[-1] % p == 0:
            a.pop()
    return a if a else [0]


def _xp_minus_x_mod(f, p):
    """x^p - x reduced mod (f, p)."""
    base = [0, 1]
    result = [1]
    e = p
    cur = base
    while e:
        if e & 1:
            result = _polymulmod(result, cur, f, p)
        cur = _polymulmod(cur, cur, f, p)
        e >>= 1
    # subtract x
    out = list(result) + [0] * max(0, 2 - len(result))
    out[1] = (out[1] - 1) % p
    return out


def _power_poly_mod(f, shift, e, p):
    """(x + shift)^e - 1 reduced mod (f, p)."""
    cur = [shift % p, 1]
    result = [1]
    while e:
        if e & 1:
            result = _polymulmod(result, cur, f, p)
        cur = _polymulmod(cur, cur, f, p)
        e >>= 1
    out = list(result)
    out[0] = (out[0] - 1) % p
    return out


def _gcd_mod_p(a, b, p):
    def trim(c):
        c = [x % p for x in c]
        while c and c[-1] == 0:
            c.pop()
        return c

    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, trim(_polyrem(a, b, p))
    if not a:
        return [0]
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def _deflate(cs, r, p):
    """Divide a polynomial by (x - r) mod p."""
    out = [0] * (len(cs) - 1)
    acc = 0
    for i in range(len(cs) - 1, 0, -1):
        acc = (acc * r + cs[i]) % p
        out[i - 1] = acc
    return out


def _count_roots_cubic(cs: list[int], p: int) -> int:
    if p <= 50:
        return len(_poly_roots_mod_p(cs, p))
    g = _gcd_mod_p(cs, _xp_minus_x_mod(cs, p), p)
    return len(g) - 1


class _Model:
    """Mutable integral model while Tate's algorithm runs."""

    def __init__(self, ai):
        self.a1, self.a2, self.a3, self.a4, self.a6 = [int(a) for a in ai]

    def invariants(self):
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        c4 = b2 * b2 - 24 * b4
        c6 = -(b2**3) + 36 * b2 * b4 - 216 * b6
        disc = (
            -(b2 * b2 * b8) - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
        )
        return b2, b4, b6, b8, c4, c6, disc

    def translate(self, r: int, s: int, t: int):
        """Apply (x, y) -> (x + r, y + s x + t): the u = 1 coordinate change."""
        a1, a2, a3, a4, a6 = self.a1, self.a2, self.a3, self.a4, self.a6
        self.a1 = a1 + 2 * s
        self.a2 = a2 - s * a1 + 3 * r - s * s
        self.a3 = a3 + r * a1 + 2 * t
        self.a4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t
        self.a6 = a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1

    def unscale(self, p: int):
        self.a1 //= p
        self.a2 //= p * p
        self.a3 //= p**3
        self.a4 //= p**4
        self.a6 //= p**6


def tate_local(E: WeierstrassCurve, p: int) -> LocalData:
    """Complete local reduction data at p (Tate's algorithm)."""
    M = _Model(_int_invariants(E))
    while True:
        b2, b4, b6, b8, c4, c6, disc = M.invariants()
        assert disc != 0
        n = _vp(disc, p)
        if n == 0:
            return LocalData(p, "I0", 0, 1, "good", 0)
        # move the singular point of the reduction to (0, 0)
        _move_singular_point(M, p)
        b2, b4, b6, b8, c4, c6, disc = M.invariants()
        if c4 % p != 0:
            # multiplicative reduction, type In
            split = _tangent_splits(M, p)
            if split:
                red, c = "split-multiplicative", n
            else:
                red, c = "nonsplit-multiplicative", (2 if n % 2 == 0 else 1)
            return LocalData(p, f"I{n}", 1, c, red, n)
        p2, p3, p4 = p * p, p**3, p**4
        if M.a6 % p2 != 0:
            return LocalData(p, "II", n, 1, "additive", n)
        if b8 % p3 != 0:
            return LocalData(p, "III", n - 1, 2, "additive", n)
        if b6 % p3 != 0:
            # type IV: c depends on Y^2 + (a3/p) Y - a6/p^2 splitting
            roots = _poly_roots_mod_p([-(M.a6 // p2), M.a3 // p, 1], p)
            return LocalData(p, "IV", n - 2, 3 if roots else 1, "additive", n)
        _arrange_step7(M, p)
        assert M.a1 % p == 0 and M.a2 % p == 0
        assert M.a3 % p2 == 0 and M.a4 % p2 == 0 and M.a6 % p3 == 0
        # cubic P(T) = T^3 + (a2/p) T^2 + (a4/p^2) T + a6/p^3 mod p
        cub = [M.a6 // p3, M.a4 // p2, M.a2 // p, 1]
        disc_cub = _cubic_disc(cub) % p
        if disc_cub != 0:
            c = 1 + _count_roots_cubic(cub, p)
            return LocalData(p, "I0*", n - 4, c, "additive", n)
        if _cubic_has_triple_root(cub, p):
            r0 = _cubic_triple_root(cub, p)
            M.translate(p * r0, 0, 0)
            return _steps_8_to_11(M, p, n)
        # double (not triple) root: the In* family
        r0 = _cubic_double_root(cub, p)
        M.translate(p * r0, 0, 0)
        return _instar_loop(M, p, n)


def _move_singular_point(M: _Model, p: int):
    if p <= 3:
        for r in range(p):
            for t in range(p):
                T = _Model((M.a1, M.a2, M.a3, M.a4, M.a6))
                T.translate(r, 0, t)
                if T.a3 % p == 0 and T.a4 % p == 0 and T.a6 % p == 0:
                    M.translate(r, 0, t)
                    return
        raise RuntimeError("no singular point found")  # pragma: no cover
    b2, b4, b6, b8, c4, c6, disc = M.invariants()
    # double root of 4x^3 + b2 x^2 + 2 b4 x + b6 mod p
    cub = [b6 % p, (2 * b4) % p, b2 % p, 4 % p]
    dcub = [(2 * b4) % p, (2 * b2) % p, 12 % p]
    g = _gcd_mod_p(cub, dcub, p)
    if len(g) - 1 == 1:
        x0 = (-g[0] * pow(g[1], -1, p)) % p
    elif len(g) - 1 == 2:
        rts = _quad_roots(g, p)
        x0 = next(r for r in rts if sum(c * pow(r, i, p) for i, c in enumerate(cub)) % p == 0)
    else:  # triple root of the cubic
        x0 = (-b2 * pow(12, -1, p)) % p
    y0 = (-(M.a1 * x0 + M.a3) * pow(2, -1, p)) % p
    M.translate(x0, 0, y0)
    assert M.a3 % p == 0 and M.a4 % p == 0 and M.a6 % p == 0


def _tangent_splits(M: _Model, p: int) -> bool:
    """Split vs nonsplit multiplicative: do the tangent directions at the
    node lie in F_p?  They are the roots of T^2 + a1 T - a2."""
    if p == 2:
        return (-M.a2) % 2 == 0 or (1 + M.a1 - M.a2) % 2 == 0
    b2 = M.a1 * M.a1 + 4 * M.a2
    return jacobi(b2 % p, p) == 1


def _arrange_step7(M: _Model, p: int):
    """Translate so that p | a1, a2; p^2 | a3, a4; p^3 | a6."""
    if p == 2:
        for r in (0, 2, 4, 6):
            for s in (0, 1):
                for t in range(8):
                    T = _Model((M.a1, M.a2, M.a3, M.a4, M.a6))
                    T.translate(r, s, t)
                    if (
                        T.a1 % 2 == 0
                        and T.a2 % 2 == 0
                        and T.a3 % 4 == 0
                        and T.a4 % 4 == 0
                        and T.a6 % 8 == 0
                    ):
                        M.translate(r, s, t)
                        return
        raise RuntimeError("step 7 arrangement failed")  # pragma: no cover
    # p odd: kill a1 and a3 modulo p^3; the remaining valuations then follow
    # from the b6 and b8 divisibility already established
    p3 = p**3
    inv2 = pow(2, -1, p3)
    s = (-M.a1 * inv2) % p3
    M.translate(0, s, 0)
    t = (-M.a3 * inv2) % p3
    M.translate(0, 0, t)


def _cubic_disc(cs) -> int:
    d, c, b, a = cs  # a T^3 + b T^2 + c T + d with a = 1
    return (
        18 * a * b * c * d - 4 * b**3 * d + b * b * c * c - 4 * a * c**3 - 27 * a * a * d * d
    )


def _cubic_has_triple_root(cs, p) -> bool:
    # monic cubic T^3 + bT^2 + cT + d has a triple root mod p iff it equals
    # (T + b/3)^3, i.e. b^2 = 3c and b c = 9 d (valid for p != 3 via the
    # depressed form; check directly mod p)
    d, c, b, _a = [x % p for x in cs]
    if p == 3:
        # triple root r satisfies r^3 = -(d) and c = 0 and b = 0 mod 3 after
        # depressing is unavailable; test all residues
        for r in range(3):
            if all(
                x % 3 == 0
                for x in _expand_shift_cubic(cs, r)
            ):
                return True
        return False
    return (b * b - 3 * c) % p == 0 and (b * c - 9 * d) % p == 0


def _expand_shift_cubic(cs, r):
    """Coefficients (below leading) of the cubic shifted by T -> T + r."""
    d, c, b, a = cs
    # (T + r)^3 + b (T + r)^2 + c (T + r) + d
    nb = 3 * r * a + b
    nc = 3 * r * r * a + 2 * b * r + c
    nd = a * r**3 + b * r * r + c * r + d
    return [nd, nc, nb]


def _cubic_triple_root(cs, p) -> int:
    if p == 3:
        for r in range(3):
            if all(x % 3 == 0 for x in _expand_shift_cubic(cs, r)):
                return r
        raise RuntimeError("triple root lost")  # pragma: no cover
    b = cs[2]
    return (-b * pow(3, -1, p)) % p


def _cubic_double_root(cs, p) -> int:
    if p <= 3:
        for r in range(p):
            nd, nc, _nb = _expand_shift_cubic(cs, r)
            if nd % p == 0 and nc % p == 0:
                return r
        raise RuntimeError("double root lost")  # pragma: no cover
    d, c, b, _a = cs
    der = [c % p, (2 * b) % p, 3 % p]
    g = _gcd_mod_p([d, c, b, 1], der, p)
    assert len(g) - 1 == 1
    return (-g[0] * pow(g[1], -1, p)) % p


def _instar_loop(M: _Model, p: int, n: int) -> LocalData:
    """Types Im* for m >= 1: the double-root sub-procedure."""
    q = 2
    while True:
        # quadratic in Y: Y^2 + (a3/p^q) Y - a6/p^(2q)
        m = 2 * q - 3
        a3t = M.a3 // p**q
        a6t = M.a6 // p ** (2 * q)
        if (a3t * a3t + 4 * a6t) % p != 0:
            roots = _poly_roots_mod_p([-a6t, a3t, 1], p)
            c = 4 if roots else 2
            return LocalData(p, f"I{m}*", n - 4 - m, c, "additive", n)
        if p == 2:
            alpha = next(
                y for y in range(2) if (y * y + a3t * y - a6t) % 2 == 0
            )
        else:
            alpha = (-a3t * pow(2, -1, p)) % p
        M.translate(0, 0, p**q * alpha)
        # quadratic in X: (a2/p) X^2 + (a4/p^(q+1)) X + a6/p^(2q+1)
        m = 2 * q - 2
        a2t = M.a2 // p
        a4t = M.a4 // p ** (q + 1)
        a6t = M.a6 // p ** (2 * q + 1)
        if (a4t * a4t - 4 * a2t * a6t) % p != 0:
            roots = _poly_roots_mod_p([a6t, a4t, a2t], p)
            c = 4 if roots else 2
            return LocalData(p, f"I{m}*", n - 4 - m, c, "additive", n)
        if p == 2:
            alpha = next(
                x for x in range(2) if (a2t * x * x + a4t * x + a6t) % 2 == 0
            )
        else:
            alpha = (-a4t * pow(2 * a2t, -1, p)) % p
        M.translate(p**q * alpha, 0, 0)
        q += 1


def _steps_8_to_11(M: _Model, p: int, n: int) -> LocalData:
    """Triple-root tail of the algorithm: IV*, III*, II* or restart."""
    p2, p3, p4, p5, p6 = p * p, p**3, p**4, p**5, p**6
    # quadratic Y^2 + (a3/p^2) Y - a6/p^4 mod p
    a3t = M.a3 // p2
    a6t = M.a6 // p4
    if (a3t * a3t + 4 * a6t) % p != 0:
        roots = _poly_roots_mod_p([-a6t, a3t, 1], p)
        return LocalData(p, "IV*", n - 6, 3 if roots else 1, "additive", n)
    if p == 2:
        alpha = next(y for y in range(2) if (y * y + a3t * y - a6t) % 2 == 0)
    else:
        alpha = (-a3t * pow(2, -1, p)) % p
    M.translate(0, 0, p2 * alpha)
    if M.a4 % p4 != 0:
        return LocalData(p, "III*", n - 7, 2, "additive", n)
    if M.a6 % p6 != 0:
        return LocalData(p, "II*", n - 8, 1, "additive", n)
    # non-minimal at p: rescale and rerun
    M.unscale(p)
    return tate_local(WeierstrassCurve(M.a1, M.a2, M.a3, M.a4, M.a6), p)


# ---------------------------------------------------------------------------
# conductor
# ---------------------------------------------------------------------------


def conductor(
    E: WeierstrassCurve, budget: FactorBudget = DEFAULT_BUDGET, partial: bool = False
) -> FactoredInt:
    """Conductor of E as a factored integer.

    When the minimal discriminant cannot be fully factored within budget,
    Unfactored is raised by default; with partial=True the best-effort
    value is returned instead, carrying the unfactored discriminant residue
    so the incompleteness stays explicit (complete=False).  The listed prime
    part is exact either way.
    """
    Emin, _pm = minimal_model(E, budget)
    disc = int(Emin.disc)
    fi = factor(abs(disc), budget)
    if not fi.complete and not partial:
        raise Unfactored("discriminant factorization incomplete")
    out = []
    for p, _e in fi.factors:
        ld = tate_local(Emin, p)
        if ld.f_p:
            out.append((p, ld.f_p))
    return FactoredInt(1, tuple(out), fi.residue)


def local_data_all(
    E: WeierstrassCurve, budget: FactorBudget = DEFAULT_BUDGET
) -> list[LocalData]:
    """LocalData at every prime dividing the minimal discriminant."""
    Emin, _pm = minimal_model(E, budget)
    disc = int(Emin.disc)
    fi = factor(abs(disc), budget)
    if not fi.complete:
        raise Unfactored("discriminant factorization incomplete")
    return [tate_local(Emin, p) for p, _e in fi.factors]
