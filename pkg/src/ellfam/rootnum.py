"""Local and global root numbers of elliptic curves over Q.

Local factors: +1 at good and nonsplit multiplicative primes, -1 at split
multiplicative primes.  For additive reduction the curve is either
potentially multiplicative — then the local root number is the Hilbert
symbol (-c6*c4, -1)_p — or potentially good: for p >= 5 a Kronecker symbol
driven by v_p(disc_min), and for p in {2, 3} a frozen finite case table
(see _rootnum_tables).  All three rules were validated exhaustively against
a numeric functional-equation oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .arith import (
    DEFAULT_BUDGET,
    FactorBudget,
    Unfactored,
    factor,
    hilbert_symbol,
    jacobi,
    valuation,
)
from .curves import WeierstrassCurve
from .localdata import LocalData, minimal_model, tate_local
from ._rootnum_tables import RESIDUE_CLASS, TABLE_MODULI, TABLE_P2, TABLE_P3


class MissingLocalCase(Exception):
    """An additive configuration at p in {2, 3} outside the frozen tables."""


@dataclass(frozen=True)
class RootNumber:
    """Sign of the functional equation with its local decomposition.

    value = (-1) * product of local_breakdown values; complete is False
    when an unfactored discriminant residue could hide further bad primes,
    making value a best-effort guess rather than a certified sign.
    """

    value: int
    local_breakdown: Mapping[int, int]
    complete: bool

    def __post_init__(self):
        prod = -1
        for w in self.local_breakdown.values():
            prod *= w
        assert self.value == prod


def _potentially_multiplicative(E: WeierstrassCurve, p: int) -> bool:
    c4 = int(E.c4)
    return c4 != 0 and 3 * valuation(c4, p) < valuation(abs(int(E.disc)), p)


def _table_key(E: WeierstrassCurve, p: int, kodaira: str) -> tuple:
    m4, m6, md = TABLE_MODULI[p]
    c4, c6, disc = int(E.c4), int(E.c6), int(E.disc)
    v4 = valuation(c4, p) if c4 else 99
    v6 = valuation(c6, p) if c6 else 99
    vd = valuation(abs(disc), p)
    c4u = (c4 // p**v4) % m4 if c4 else 0
    c6u = (c6 // p**v6) % m6 if c6 else 0
    du = (disc // p**vd) % md
    return (kodaira, min(v4, 12), min(v6, 12), vd, c4u, c6u, du)


def local_root_number(E: WeierstrassCurve, ld: LocalData) -> int:
    """Local root number at ld.p for a minimal integral model E."""
    if ld.reduction == "good":
        return 1
    if ld.reduction == "nonsplit-multiplicative":
        return 1
    if ld.reduction == "split-multiplicative":
        return -1
    p = ld.p
    if _potentially_multiplicative(E, p):
        # quadratic twist of a Tate curve; the sign is chi(-1) for the
        # twisting character, uniformly a Hilbert symbol
        return hilbert_symbol(-int(E.c6) * int(E.c4), -1, p)
    if p >= 5:
        return jacobi(RESIDUE_CLASS[ld.vp_disc_min] % p, p)
    table = TABLE_P2 if p == 2 else TABLE_P3
    key = _table_key(E, p, ld.kodaira)
    try:
        return table[key]
    except KeyError:
        raise MissingLocalCase(f"p={p} key={key}") from None


def global_root_number(
    E: WeierstrassCurve, budget: FactorBudget = DEFAULT_BUDGET
) -> RootNumber:
    """Product of the archimedean factor (-1) and all finite local factors.

    When the minimal discriminant cannot be fully factored, the value covers
    the known bad primes only and complete=False records that the sign is
    not certified — never a silent wrong sign.
    """
    Emin, _pm = minimal_model(E, budget)
    fi = factor(abs(int(Emin.disc)), budget)
    breakdown: dict[int, int] = {}
    value = -1
    for p, _e in fi.factors:
        ld = tate_local(Emin, p)
        if ld.reduction == "good":
            continue
        w = local_root_number(Emin, ld)
        breakdown[p] = w
        value *= w
    return RootNumber(value=value, local_breakdown=breakdown, complete=fi.complete)
