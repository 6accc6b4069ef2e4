"""Univariate polynomials and rational functions over Q.

This is the symbolic engine in which curve families, parameter substitutions
and section identities live.  Polynomials are dense lists of ``Fraction``
coefficients (index = degree); rational functions are reduced num/den pairs
with monic denominator, so equality of canonical forms is structural
equality.

Heavy algebra (gcd, factorization into irreducibles over Q) is delegated to
sympy's polynomial core; everything else is implemented directly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

import sympy

from .arith import square_test

Scalar = Union[int, Fraction]


class NotASquare(Exception):
    """The polynomial is not the square of a polynomial over Q."""


class ZeroDenominator(ZeroDivisionError):
    pass


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, sympy.Rational):
        return Fraction(int(x.p), int(x.q))
    raise TypeError(f"not a rational scalar: {x!r}")


_symbols: dict[str, sympy.Symbol] = {}


def _sym(var: str) -> sympy.Symbol:
    if var not in _symbols:
        _symbols[var] = sympy.Symbol(var)
    return _symbols[var]


class PolyQ:
    """Dense univariate polynomial over Q. Immutable."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Scalar] = (), var: str = "u"):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))
        object.__setattr__(self, "var", var)

    def __setattr__(self, *a):
        raise AttributeError("PolyQ is immutable")

    # -- constructors -----------------------------------------------------
    @staticmethod
    def const(c: Scalar, var: str = "u") -> "PolyQ":
        return PolyQ([c], var)

    @staticmethod
    def variable(var: str = "u") -> "PolyQ":
        return PolyQ([0, 1], var)

    @staticmethod
    def from_sympy(expr, var: str) -> "PolyQ":
        p = sympy.Poly(expr, _sym(var), domain="QQ")
        if p.is_zero:
            return PolyQ([], var)
        cs = [0] * (p.degree() + 1)
        for (e,), c in p.terms():
            cs[e] = _frac(c)
        return PolyQ(cs, var)

    def to_sympy(self):
        x = _sym(self.var)
        return sum((sympy.Rational(c.numerator, c.denominator) * x**i for i, c in enumerate(self.coeffs)), sympy.Integer(0))

    # -- basic queries ----------------------------------------------------
    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def __hash__(self):
        return hash((self.coeffs, self.var if not self.is_constant() else ""))

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PolyQ([other], self.var)
        if isinstance(other, RatFunc):
            return NotImplemented
        if not isinstance(other, PolyQ):
            return NotImplemented
        return self.coeffs == other.coeffs

    def _join_var(self, other: "PolyQ") -> str:
        if self.is_constant():
            return other.var
        if other.is_constant() or other.var == self.var:
            return self.var
        raise ValueError(f"variable mismatch: {self.var} vs {other.var}")

    # -- ring operations --------------------------------------------------
    def __add__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            other = PolyQ([other], self.var)
        var = self._join_var(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            a[i] += c
        return PolyQ(a, var)

    __radd__ = __add__

    def __neg__(self):
        return PolyQ([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-other if isinstance(other, (PolyQ, int, Fraction)) else NotImplemented)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            return PolyQ([c * other for c in self.coeffs], self.var)
        if not isinstance(other, PolyQ):
            return NotImplemented
        var = self._join_var(other)
        if self.is_zero() or other.is_zero():
            return PolyQ([], var)
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return PolyQ(out, var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial; use RatFunc")
        result = PolyQ([1], self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "PolyQ"):
        if isinstance(other, (int, Fraction)):
            other = PolyQ([other], self.var)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        var = self._join_var(other)
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return PolyQ([], var), self
        quo = [Fraction(0)] * (dq + 1)
        inv_lc = 1 / other.leading()
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] * inv_lc
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return PolyQ(quo, var), PolyQ(rem[: other.degree], var)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, PolyQ):
            return RatFunc(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        return RatFunc(PolyQ.const(other, self.var) if isinstance(other, (int, Fraction)) else other, self)

    def exact_div(self, other: "PolyQ") -> "PolyQ":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError("division is not exact")
        return q

    # -- calculus-ish -----------------------------------------------------
    def derivative(self) -> "PolyQ":
        return PolyQ([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def __call__(self, x):
        """Evaluate by Horner; x may be a scalar, PolyQ or RatFunc."""
        if isinstance(x, int):
            x = Fraction(x)
        acc = None
        for c in reversed(self.coeffs):
            if acc is None:
                acc = c if isinstance(x, Fraction) else 0 * x + c
            else:
                acc = acc * x + c
        if acc is None:
            return Fraction(0) if isinstance(x, Fraction) else 0 * x
        return acc

    # -- gcd / factorization (sympy-backed) -------------------------------
    def monic(self) -> "PolyQ":
        if self.is_zero():
            return self
        lc = self.leading()
        return PolyQ([c / lc for c in self.coeffs], self.var)

    def gcd(self, other: "PolyQ") -> "PolyQ":
        if self.is_zero():
            return other.monic()
        if other.is_zero():
            return self.monic()
        var = self._join_var(other)
        x = _sym(var)
        g = sympy.gcd(sympy.Poly(self.to_sympy(), x, domain="QQ"), sympy.Poly(other.to_sympy(), x, domain="QQ"))
        return PolyQ.from_sympy(g.as_expr() if isinstance(g, sympy.Poly) else g, var).monic()

    def factor(self) -> tuple[Fraction, list[tuple["PolyQ", int]]]:
        """Factor into content * prod(irreducible**e) over Q.

        Irreducible parts are primitive with positive leading integer
        coefficients.
        """
        if self.is_zero():
            raise ValueError("cannot factor the zero polynomial")
        x = _sym(self.var)
        c, parts = sympy.factor_list(sympy.Poly(self.to_sympy(), x, domain="QQ"))
        content = _frac(sympy.Rational(c))
        out = []
        for f, e in parts:
            p = PolyQ.from_sympy(f.as_expr(), self.var)
            out.append((p, int(e)))
        return content, out

    def content_and_primitive(self) -> tuple[Fraction, "PolyQ"]:
        """Positive rational content c and primitive integer part p, self = c*p."""
        if self.is_zero():
            return Fraction(0), self
        import math as _m

        num_gcd = 0
        den_lcm = 1
        for c in self.coeffs:
            num_gcd = _m.gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // _m.gcd(den_lcm, c.denominator)
        content = Fraction(num_gcd, den_lcm)
        return content, PolyQ([c / content for c in self.coeffs], self.var)

    def squarefree_part(self) -> "PolyQ":
        return self.exact_div_gcd_derivative().monic()

    def exact_div_gcd_derivative(self) -> "PolyQ":
        g = self.gcd(self.derivative())
        return self.exact_div(g)

    # -- display ----------------------------------------------------------
    def __repr__(self):
        return f"PolyQ({to_string(self)!r})"

    def __str__(self):
        return to_string(self)


def square_decompose_poly(p: PolyQ) -> tuple[PolyQ, PolyQ]:
    """Write p = s*s*q with q free of repeated polynomial factors.

    The largest rational square dividing the content goes into s as well, and
    s is normalized to a positive leading coefficient.
    """
    if p.is_zero():
        raise ValueError("zero polynomial")
    from .arith import squarefree_decompose

    content, parts = p.factor()
    sign = -1 if content < 0 else 1
    cn, cfree_n = _int_square_split(abs(content.numerator))
    cd, cfree_d = _int_square_split(content.denominator)
    s = PolyQ([Fraction(cn, cd)], p.var)
    q = PolyQ([Fraction(sign * cfree_n, cfree_d)], p.var)
    for f, e in parts:
        if e // 2:
            s = s * f ** (e // 2)
        if e % 2:
            q = q * f
    if s.leading() < 0:
        s = -s
    return s, q


def _int_square_split(n: int) -> tuple[int, int]:
    """n = s*s*f with f squarefree, for positive n (small contents only)."""
    from .arith import squarefree_decompose

    if n == 1:
        return 1, 1
    return squarefree_decompose(n)


def poly_sqrt(p: PolyQ) -> PolyQ:
    """Exact polynomial square root, or raise NotASquare."""
    if p.is_zero():
        return p
    if p.degree % 2:
        raise NotASquare("odd degree")
    m = p.degree // 2
    lc = p.leading()
    r = square_test(lc)
    if r is None:
        raise NotASquare("leading coefficient is not a rational square")
    s = [Fraction(0)] * (m + 1)
    s[m] = r
    inv2lc = 1 / (2 * r)
    for k in range(m - 1, -1, -1):
        acc = p.coeffs[m + k] if m + k < len(p.coeffs) else Fraction(0)
        for i in range(k + 1, m):
            j = m + k - i
            if k < j <= m:
                acc -= s[i] * s[j]
        s[k] = acc * inv2lc
    cand = PolyQ(s, p.var)
    if cand * cand == p:
        return cand
    raise NotASquare("not a perfect square")


def disc_shifted_cubic(A: PolyQ | Scalar, B: PolyQ | Scalar) -> PolyQ:
    """Discriminant-style quantity B^2(A^2-4B) of X^3+A X^2+B X."""
    if isinstance(A, (int, Fraction)):
        A = PolyQ([A], B.var if isinstance(B, PolyQ) else "u")
    if isinstance(B, (int, Fraction)):
        B = PolyQ([B], A.var)
    return B * B * (A * A - 4 * B)


class RatFunc:
    """Reduced rational function num/den over Q with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, var: str = "u"):
        if den is None:
            den = PolyQ([1], var)
        if isinstance(num, (int, Fraction)):
            num = PolyQ([num], den.var if isinstance(den, PolyQ) else var)
        if isinstance(den, (int, Fraction)):
            den = PolyQ([den], num.var)
        if den.is_zero():
            raise ZeroDenominator("zero denominator")
        if not num.is_zero():
            g = num.gcd(den)
            if not g.is_constant():
                num = num.exact_div(g)
                den = den.exact_div(g)
        lc = den.leading()
        if lc != 1:
            num = num * (1 / lc)
            den = den * (1 / lc)
        if num.is_zero():
            den = PolyQ([1], den.var)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def variable(var: str = "u") -> "RatFunc":
        return RatFunc(PolyQ.variable(var))

    @staticmethod
    def const(c: Scalar, var: str = "u") -> "RatFunc":
        return RatFunc(PolyQ.const(c, var))

    @property
    def var(self) -> str:
        return self.num.var if not self.num.is_constant() else self.den.var

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_poly(self) -> PolyQ:
        if not self.is_polynomial():
            raise ValueError(f"not a polynomial: denominator {self.den}")
        return self.num * (1 / self.den.constant_value())

    def constant_value(self) -> Fraction:
        return self.as_poly().constant_value()

    def __hash__(self):
        return hash((self.num, self.den))

    def __eq__(self, other) -> bool:
        other = _coerce(other, self.var)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __add__(self, other):
        other = _coerce(other, self.var)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce(other, self.var)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other, self.var)
        if other is None:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other, self.var)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _coerce(other, self.var)
        return other / self

    def __pow__(self, n: int):
        if n < 0:
            return RatFunc(self.den, self.num) ** (-n)
        return RatFunc(self.num**n, self.den**n)

    def __call__(self, x):
        """Evaluate; x may be Fraction/int (returns Fraction) or Rat/PolyQ."""
        if isinstance(x, int):
            x = Fraction(x)
        num = self.num(x)
        den = self.den(x)
        if isinstance(x, Fraction):
            if den == 0:
                raise ZeroDivisionError(f"pole at {x}")
            return num / den
        return _coerce(num, self.var if not isinstance(x, (PolyQ, RatFunc)) else x.var) / den

    def substitute(self, sub: "RatFunc") -> "RatFunc":
        """Exact composition self(sub), reduced to canonical form."""
        return ratfunc_substitute(self, sub)

    def derivative(self) -> "RatFunc":
        return RatFunc(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def __repr__(self):
        return f"RatFunc({to_string(self)!r})"

    def __str__(self):
        return to_string(self)


def _coerce(x, var: str) -> Optional[RatFunc]:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, PolyQ):
        return RatFunc(x, PolyQ([1], x.var))
    if isinstance(x, (int, Fraction)):
        return RatFunc(PolyQ([x], var), PolyQ([1], var))
    return None


def ratfunc_substitute(f: Union[RatFunc, PolyQ], sub: RatFunc) -> RatFunc:
    """Compose f with u := sub(w), exactly."""
    if isinstance(f, PolyQ):
        f = RatFunc(f, PolyQ([1], f.var))
    if isinstance(sub, PolyQ):
        sub = RatFunc(sub, PolyQ([1], sub.var))
    num = f.num(sub)
    den = f.den(sub)
    if not isinstance(num, RatFunc):
        num = RatFunc.const(num, sub.var)
    if not isinstance(den, RatFunc):
        den = RatFunc.const(den, sub.var)
    return num / den


# -- textual serialization ------------------------------------------------

def to_string(p: Union[PolyQ, RatFunc]) -> str:
    """Sparse 'coeff*u^k' sum with exact rationals."""
    if isinstance(p, RatFunc):
        if p.den == PolyQ([1], p.den.var):
            return to_string(p.num)
        return f"({to_string(p.num)}) / ({to_string(p.den)})"
    if p.is_zero():
        return "0"
    terms = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if i == 0:
            body = str(c)
        else:
            xpow = p.var if i == 1 else f"{p.var}^{i}"
            body = xpow if c == 1 else f"{c}*{xpow}"
        terms.append((sign, body))
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def poly_from_string(s: str, var: str = "u") -> PolyQ:
    """Parse the serialization produced by to_string (polynomials only)."""
    expr = sympy.sympify(s.replace("^", "**"), locals={var: _sym(var)}, rational=True)
    return PolyQ.from_sympy(expr, var)
