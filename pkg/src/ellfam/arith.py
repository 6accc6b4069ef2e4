"""Exact integer and rational arithmetic kernel.

Everything downstream (polynomials, curves, local data, scans) sits on top of
this module: budgeted integer factorization, primality testing, rational
square detection and Jacobi symbols.  All values are immutable and all
functions are pure, so they are safe to share across threads.

Rationals are plain ``fractions.Fraction`` objects; the stdlib type already
keeps gcd(num, den) = 1 and den >= 1, which is exactly the canonical form we
need.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional


class Unfactored(Exception):
    """A factorization budget ran out before the answer was certain."""


# deterministic Miller-Rabin witness set, valid for n < 3.317e24
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_LIMIT = 3317044064679887385961981

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_prime(n: int, extra_rounds: int = 16) -> bool:
    """Miller-Rabin primality test.

    Deterministic below 3.317e24; above that the fixed witnesses are
    supplemented with ``extra_rounds`` pseudo-random bases, making a false
    positive astronomically unlikely.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    witnesses = list(_MR_WITNESSES)
    if n >= _MR_DETERMINISTIC_LIMIT:
        # deterministic seeding keeps results reproducible
        rng_state = n
        for _ in range(extra_rounds):
            rng_state = (rng_state * 6364136223846793005 + 1442695040888963407) % (1 << 64)
            witnesses.append(2 + rng_state % (n - 3))
    for a in witnesses:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FactorBudget:
    """Effort limit for integer factorization.

    trial_bound: trial-divide by primes up to this bound.
    rho_iterations: total Brent-rho iteration allowance per factor() call.
    time_cap: wall-clock seconds per factor() call (None = unlimited).
    """

    trial_bound: int = 10**6
    rho_iterations: int = 2 * 10**6
    time_cap: Optional[float] = None

    def tiny(self) -> "FactorBudget":
        return FactorBudget(trial_bound=min(self.trial_bound, 10**4), rho_iterations=0)


DEFAULT_BUDGET = FactorBudget()


@dataclass(frozen=True)
class FactoredInt:
    """A partially factored integer: value = sign * prod(p**e) * residue.

    ``residue`` is 1 when the factorization is complete; otherwise it is a
    composite (or unproven) leftover with no prime factor below the trial
    bound that was used.  Every prime listed in ``factors`` has passed
    Miller-Rabin.
    """

    sign: int
    factors: tuple[tuple[int, int], ...]
    residue: int = 1

    @property
    def complete(self) -> bool:
        return self.residue == 1

    def value(self) -> int:
        v = self.sign
        for p, e in self.factors:
            v *= p**e
        return v * self.residue

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __mul__(self, other: "FactoredInt") -> "FactoredInt":
        merged: dict[int, int] = dict(self.factors)
        for p, e in other.factors:
            merged[p] = merged.get(p, 0) + e
        return FactoredInt(
            self.sign * other.sign,
            tuple(sorted(merged.items())),
            self.residue * other.residue,
        )

    def __str__(self) -> str:
        parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors]
        if self.residue != 1:
            parts.append(f"[{self.residue}]")
        body = "*".join(parts) if parts else "1"
        return ("-" if self.sign < 0 else "") + body


_sieve_cache: dict[int, list[int]] = {}


def primes_below(bound: int) -> list[int]:
    """Cached prime list via sieve of Eratosthenes."""
    key = bound
    got = _sieve_cache.get(key)
    if got is not None:
        return got
    sieve = bytearray([1]) * bound if bound > 0 else bytearray()
    out = []
    if bound > 2:
        sieve[0] = sieve[1] = 0
        for i in range(2, int(math.isqrt(bound - 1)) + 1):
            if sieve[i]:
                sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
        out = [i for i in range(2, bound) if sieve[i]]
    _sieve_cache[key] = out
    return out


def _brent_rho(n: int, max_iters: int, deadline: Optional[float]) -> Optional[int]:
    """Brent's cycle variant of Pollard rho. Returns a nontrivial factor or None."""
    if n % 2 == 0:
        return 2
    seed = 1
    iters_left = max_iters
    while iters_left > 0:
        y, c, m = (seed * 2862933555777941757 + 3037000493) % n, seed % (n - 1) + 1, 128
        g, r, q = 1, 1, 1
        x = ys = y
        while g == 1 and iters_left > 0:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
                iters_left -= min(m, r - k + m)
            r *= 2
            if deadline is not None and time.monotonic() > deadline:
                return None
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
                iters_left -= 1
        if 1 < g < n:
            return g
        seed += 1
    return None


def factor(n: int, budget: FactorBudget = DEFAULT_BUDGET) -> FactoredInt:
    """Factor ``n`` as far as the budget allows.

    Partial results are encoded in the residue, never raised as errors.
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    sign = -1 if n < 0 else 1
    n = abs(n)
    deadline = None if budget.time_cap is None else time.monotonic() + budget.time_cap
    found: dict[int, int] = {}

    limit = budget.trial_bound
    if n > 1:
        limit = min(limit, math.isqrt(n) + 1)
    for p in primes_below(max(limit, 2)):
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
        if deadline is not None and time.monotonic() > deadline:
            break

    # remaining part: peel off factors with rho until budget exhausted
    residue = 1
    stack = [n] if n > 1 else []
    iters = budget.rho_iterations
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            found[m] = found.get(m, 0) + 1
            continue
        root = math.isqrt(m)
        if root * root == m:
            stack.extend([root, root])
            continue
        d = None
        if iters > 0 and (deadline is None or time.monotonic() <= deadline):
            d = _brent_rho(m, iters, deadline)
            iters = max(0, iters - 10**4)
        if d is None:
            residue *= m
        else:
            stack.extend([d, m // d])
    return FactoredInt(sign, tuple(sorted(found.items())), residue)


def isqrt_exact(n: int) -> Optional[int]:
    """Integer square root if n is a perfect square, else None."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def square_test(q: Fraction | int) -> Optional[Fraction]:
    """Return r >= 0 with r*r == q when q is a rational square, else None."""
    q = Fraction(q)
    if q < 0:
        return None
    rn = isqrt_exact(q.numerator)
    if rn is None:
        return None
    rd = isqrt_exact(q.denominator)
    if rd is None:
        return None
    return Fraction(rn, rd)


def squarefree_decompose(n: int, budget: FactorBudget = DEFAULT_BUDGET) -> tuple[int, int]:
    """Write n = s*s*f with f squarefree (sign carried by f).

    Raises Unfactored if the budget runs out before the squarefree part is
    certain.
    """
    if n == 0:
        raise ValueError("n must be nonzero")
    fi = factor(n, budget)
    if not fi.complete:
        # a perfect-square residue would still be fine, anything else is not
        r = isqrt_exact(fi.residue)
        if r is None:
            raise Unfactored(f"residue {fi.residue} left while decomposing {n}")
        s_extra, extra_free = r, 1
    else:
        s_extra, extra_free = 1, 1
    s, f = s_extra, extra_free * fi.sign
    for p, e in fi.factors:
        s *= p ** (e // 2)
        if e % 2:
            f *= p
    return s, f


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a|n) for odd positive n."""
    if n <= 0 or n % 2 == 0:
        raise ValueError("n must be odd and positive")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def valuation(n: int, p: int) -> int:
    """p-adic valuation of a nonzero integer."""
    if n == 0:
        raise ValueError("valuation of 0")
    v = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation_fraction(q: Fraction, p: int) -> int:
    if q == 0:
        raise ValueError("valuation of 0")
    return valuation(q.numerator, p) - valuation(q.denominator, p)


def hilbert_symbol(a: Fraction | int, b: Fraction | int, p: Optional[int]) -> int:
    """Hilbert symbol (a, b)_p over Q_p (p=None means the real place)."""
    a, b = Fraction(a), Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("hilbert symbol needs nonzero arguments")
    if p is None:
        return -1 if a < 0 and b < 0 else 1
    alpha = valuation_fraction(a, p)
    beta = valuation_fraction(b, p)
    # unit parts as integers modulo enough powers of p
    ua = a / Fraction(p) ** alpha
    ub = b / Fraction(p) ** beta
    if p != 2:
        ra = ua.numerator * pow(ua.denominator, -1, p) % p
        rb = ub.numerator * pow(ub.denominator, -1, p) % p
        s = 1
        if beta % 2:
            s *= jacobi(ra, p)
        if alpha % 2:
            s *= jacobi(rb, p)
        if alpha % 2 and beta % 2 and p % 4 == 3:
            s = -s
        return s
    # p = 2
    m8 = 1 << 3
    ra = ua.numerator * pow(ua.denominator, -1, m8) % m8
    rb = ub.numerator * pow(ub.denominator, -1, m8) % m8
    e = ((ra - 1) // 2) * ((rb - 1) // 2)
    e += alpha * ((rb * rb - 1) // 8) + beta * ((ra * ra - 1) // 8)
    return -1 if e % 2 else 1


def rational_from_string(s: str) -> Fraction:
    """Parse 'p/q' or 'p' into an exact Fraction."""
    return Fraction(s)


def rational_to_string(q: Fraction) -> str:
    return str(q)
