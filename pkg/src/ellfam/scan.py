"""Mordell-Weil lattice scans over the curve catalog.

A scan walks lattice points ``n*G1 + m*G2`` on a rank-2 parametrizing
elliptic curve, sends each one to a rational parameter value of a rank-2
catalog family (where the lattice point supplies one further section), and
records the global root number of the specialized curve in a grid.

The parameter map is built from a square-reduced quartic ``t^2 = q(r)``:
the parametrizing curve is identified with the quartic's elliptic model by
an exact Q-isomorphism, a point then determines ``r`` through the inverse
quartic map, and - when a biquadratic compatibility curve links two
families - the companion coordinate ``s`` by the quadratic formula.  The
sign conventions are pinned so the group origin lands on a designated base
point; ``negate`` composes the identification with [-1] for the other
equally valid choice.

Cells are independent tasks; results are merged in (n, m) order, so the
grid is deterministic for a fixed spec and budget regardless of the number
of workers.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

import sympy

from .arith import (
    DEFAULT_BUDGET,
    FactorBudget,
    Unfactored,
    rational_to_string,
    squarefree_decompose,
)
from .curves import (
    INFINITY,
    CurvePoint,
    WeierstrassCurve,
    isomorphic_over_Q,
    torsion_subgroup,
)
from .families import CurveFamily, catalog
from .localdata import minimal_model
from .polyq import PolyQ
from .rootnum import MissingLocalCase, global_root_number
from .sections import QuarticModel, quartic_jacobian

Scalar = Union[int, Fraction]


class DegenerateFiber(Exception):
    """The quadratic fiber (or the parameter map) degenerates at the point."""


# ---------------------------------------------------------------------------
# biquadratic curves and their involutions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BiquadraticCurve:
    """F(r, s) = sum coeffs[i][j] * r^i * s^j = 0 with degree <= 2 per variable.

    Invariants: F is irreducible over Q and has degree exactly 2 in at
    least one variable, so the curve carries at least one fiber-swap
    involution.
    """

    coeffs: tuple[tuple[Fraction, Fraction, Fraction], ...]

    def __post_init__(self):
        rows = tuple(
            tuple(Fraction(c) for c in row) for row in self.coeffs
        )
        if len(rows) != 3 or any(len(row) != 3 for row in rows):
            raise ValueError("expected a 3 x 3 coefficient array")
        object.__setattr__(self, "coeffs", rows)
        deg_r = max((i for i in range(3) for j in range(3) if rows[i][j]), default=-1)
        deg_s = max((j for i in range(3) for j in range(3) if rows[i][j]), default=-1)
        if deg_r != 2 and deg_s != 2:
            raise ValueError("degree must be exactly 2 in at least one variable")
        if not self._is_irreducible():
            raise ValueError("the defining polynomial must be irreducible")

    def _is_irreducible(self) -> bool:
        r, s = sympy.symbols("r s")
        expr = sum(
            sympy.Rational(c.numerator, c.denominator) * r**i * s**j
            for i, row in enumerate(self.coeffs)
            for j, c in enumerate(row)
            if c
        )
        _const, parts = sympy.factor_list(expr, r, s)
        return len(parts) == 1 and parts[0][1] == 1

    def value(self, r: Scalar, s: Scalar) -> Fraction:
        r, s = Fraction(r), Fraction(s)
        return sum(
            c * r**i * s**j
            for i, row in enumerate(self.coeffs)
            for j, c in enumerate(row)
        )

    def contains(self, pt: tuple[Scalar, Scalar]) -> bool:
        return self.value(*pt) == 0

    def quadratic_polys(self, var: str) -> tuple[PolyQ, PolyQ, PolyQ]:
        """(a, b, c) with F = a*x^2 + b*x + c, x the eliminated variable
        ``var`` and a, b, c polynomials in the other variable."""
        if var not in ("r", "s"):
            raise ValueError("var must be 'r' or 's'")
        other = "s" if var == "r" else "r"
        x = PolyQ.variable(other)
        out = []
        for k in (2, 1, 0):
            if var == "s":
                poly = sum((self.coeffs[i][k] * x**i for i in range(3)), PolyQ.const(0, other))
            else:
                poly = sum((self.coeffs[k][j] * x**j for j in range(3)), PolyQ.const(0, other))
            out.append(poly)
        return tuple(out)

    def quadratic_at(self, var: str, value: Scalar) -> tuple[Fraction, Fraction, Fraction]:
        """Coefficients (a, b, c) of the quadratic in ``var`` at a fixed
        value of the other variable."""
        a, b, c = self.quadratic_polys(var)
        v = Fraction(value)
        return a(v), b(v), c(v)


def involutions(
    C: BiquadraticCurve, pt: tuple[Scalar, Scalar]
) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
    """The two fiber-swap images (tau1(pt), tau2(pt)) of a point of C.

    tau1 fixes r and replaces s by the second root of the quadratic in s;
    tau2 does the same with the roles of r and s exchanged.  Both images
    lie on C exactly and each map is an involution.

    Raises DegenerateFiber when the relevant leading coefficient vanishes
    at the point, and ValueError when the point is not on the curve.
    """
    r, s = Fraction(pt[0]), Fraction(pt[1])
    if C.value(r, s) != 0:
        raise ValueError("point is not on the curve")
    a_s, b_s, _ = C.quadratic_at("s", r)
    if a_s == 0:
        raise DegenerateFiber("the quadratic in s degenerates at this point")
    tau1 = (r, -b_s / a_s - s)
    a_r, b_r, _ = C.quadratic_at("r", s)
    if a_r == 0:
        raise DegenerateFiber("the quadratic in r degenerates at this point")
    tau2 = (-b_r / a_r - r, s)
    assert C.value(*tau1) == 0 and C.value(*tau2) == 0
    return tau1, tau2


def _square_reduced_disc(C: BiquadraticCurve, eliminate: str) -> tuple[PolyQ, PolyQ]:
    """(q, mult) with disc = mult^2 * q, q squarefree with squarefree
    integer content; disc is the discriminant of the quadratic in the
    eliminated variable."""
    a, b, c = C.quadratic_polys(eliminate)
    disc = b * b - 4 * a * c
    if disc.is_zero():
        raise ValueError("degenerate correspondence: zero discriminant")
    content, parts = disc.factor()
    n = content.numerator * content.denominator
    root, free = squarefree_decompose(n)
    var = disc.var
    q = PolyQ.const(Fraction(free), var)
    mult = PolyQ.const(Fraction(root, content.denominator), var)
    for f, e in parts:
        q = q * f ** (e % 2)
        mult = mult * f ** (e // 2)
    assert mult * mult * q == disc
    return q, mult


def quartic_correspondence(C: BiquadraticCurve, eliminate: str) -> QuarticModel:
    """Quartic model t^2 = q(x) whose square values give the rational
    fibers of C over the kept variable.

    q is the discriminant of the quadratic in the eliminated variable,
    reduced modulo square factors (squarefree, with squarefree integer
    content).  A curve already of the shape t^2 = q(x) (degree < 2 in the
    eliminated variable would be rejected, so pass ``s`` for
    F = s^2 - q(r)) returns q itself.
    """
    q, _ = _square_reduced_disc(C, eliminate)
    return QuarticModel(q)


# ---------------------------------------------------------------------------
# parameter maps
# ---------------------------------------------------------------------------


class ParameterMap:
    """Exact map from parametrizer points to family parameter values.

    ``parameter(P)`` gives the kept coordinate r; ``coordinates(P)`` also
    returns the companion coordinate on the attached biquadratic curve.
    Points sitting over the quartic's fiber at infinity raise
    DegenerateFiber.
    """

    def __init__(
        self,
        parametrizer: WeierstrassCurve,
        quartic: QuarticModel,
        correspondence: Optional[BiquadraticCurve] = None,
        eliminated: str = "s",
        companion_sign: int = 1,
        negate: bool = False,
    ):
        if quartic.known_point is None:
            raise ValueError("the quartic needs a known rational point")
        self.parametrizer = parametrizer
        self.quartic = quartic
        self.correspondence = correspondence
        self.companion_sign = companion_sign
        self.negate = negate
        self._jacobian, self._fwd, self._inv = quartic_jacobian(quartic)
        iso = isomorphic_over_Q(parametrizer, self._jacobian)
        if iso is None:
            raise ValueError("parametrizer is not isomorphic to the quartic model")
        _, self._pm = parametrizer.transform(*iso)
        if correspondence is not None:
            a, b, _ = correspondence.quadratic_polys(eliminated)
            _, mult = _square_reduced_disc(correspondence, eliminated)
            self._companion = (a, b, mult)
        else:
            self._companion = None

    def _quartic_point(self, P: CurvePoint) -> tuple[Fraction, Fraction]:
        Q = self._pm.forward(P)
        if self.negate:
            Q = self._jacobian.mul(-1, Q)
        try:
            return self._inv(Q)
        except ValueError:
            raise DegenerateFiber("point lies over the fiber at infinity") from None

    def parameter(self, P: CurvePoint) -> Fraction:
        """The family parameter carried by P."""
        return self._quartic_point(P)[0]

    def coordinates(self, P: CurvePoint) -> tuple[Fraction, Fraction]:
        """(r, s) on the attached biquadratic curve."""
        if self._companion is None:
            raise ValueError("no biquadratic correspondence attached")
        r, t = self._quartic_point(P)
        a, b, mult = self._companion
        av = a(r)
        if av == 0:
            raise DegenerateFiber("companion fiber degenerates at this parameter")
        s = (-b(r) + self.companion_sign * mult(r) * t) / (2 * av)
        return r, s


# ---------------------------------------------------------------------------
# scan specification and grid
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ScanSpec:
    """Everything needed to run one lattice scan.

    ``symmetry = (a, b)`` declares that the cells (n, m) and (a-n, b-m)
    carry Q-isomorphic curves.  ``identified_translates`` lists the
    torsion translates of the lattice under which cells are identified
    (the grid enumerates one representative per coset).
    """

    name: str
    parametrizer: WeierstrassCurve
    generators: tuple[CurvePoint, CurvePoint]
    torsion_generators: tuple[CurvePoint, ...]
    family: CurveFamily
    mapping: ParameterMap
    symmetry: tuple[int, int]
    radius: int = 2
    identified_translates: tuple[CurvePoint, ...] = ()
    companion: Optional[BiquadraticCurve] = None
    companion_family: Optional[CurveFamily] = None
    budget: FactorBudget = DEFAULT_BUDGET

    def __post_init__(self):
        if self.radius < 0:
            raise ValueError("radius must be nonnegative")
        for P in self.generators + self.torsion_generators + self.identified_translates:
            if not self.parametrizer.contains(P):
                raise ValueError("all designated points must lie on the parametrizer")

    def lattice_point(self, n: int, m: int) -> CurvePoint:
        E = self.parametrizer
        return E.add(E.mul(n, self.generators[0]), E.mul(m, self.generators[1]))

    def validate(self, budget: Optional[FactorBudget] = None) -> None:
        """Exact consistency checks of the parameter map.

        The base cell lands on the designated base point of the
        correspondence; a generator's image satisfies the biquadratic
        equation exactly; and when a companion family is attached, the two
        coordinates specialize both families to Q-isomorphic curves.
        """
        budget = budget or self.budget
        E = self.parametrizer
        G = None
        for cand in (
            self.generators[0],
            self.generators[1],
            E.add(self.generators[0], self.generators[1]),
        ):
            try:
                self.mapping.parameter(cand)
            except DegenerateFiber:
                continue
            G = cand
            break
        if G is None:
            raise AssertionError("no test point avoids the degenerate fibers")
        if self.companion is not None:
            r, s = self.mapping.coordinates(G)
            if self.companion.value(r, s) != 0:
                raise AssertionError("generator image misses the correspondence")
            if self.companion_family is not None:
                Ea = self.family.specialize(r, budget).curve()
                Eb = self.companion_family.specialize(s, budget).curve()
                if isomorphic_over_Q(Ea, Eb) is None:
                    raise AssertionError(
                        "companion family member is not isomorphic at the mapped pair"
                    )
        else:
            r = self.mapping.parameter(G)
            self.family.specialize(r, budget)


@dataclass(frozen=True)
class ScanCell:
    n: int
    m: int
    root: Optional[int]
    complete: bool
    skipped: bool
    parameter: Optional[Fraction] = None


@dataclass(frozen=True)
class ScanGrid:
    """Scan results: one cell per lattice point, with tallied counts
    (#+1 among complete, #-1 among complete, #incomplete, #skipped)."""

    name: str
    radius: int
    cells: tuple[ScanCell, ...]
    counts: tuple[int, int, int, int]

    def __post_init__(self):
        assert self.counts == _tally(self.cells), "counts must equal cell tallies"

    def cell(self, n: int, m: int) -> ScanCell:
        for c in self.cells:
            if (c.n, c.m) == (n, m):
                return c
        raise KeyError((n, m))

    def to_csv(self) -> str:
        lines = ["n,m,root,complete,skipped"]
        for c in self.cells:
            root = "" if c.root is None else str(c.root)
            lines.append(
                f"{c.n},{c.m},{root},{str(c.complete).lower()},{str(c.skipped).lower()}"
            )
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "name": self.name,
            "radius": self.radius,
            "counts": {
                "plus": self.counts[0],
                "minus": self.counts[1],
                "incomplete": self.counts[2],
                "skipped": self.counts[3],
            },
            "cells": [
                {
                    "n": c.n,
                    "m": c.m,
                    "root": c.root,
                    "complete": c.complete,
                    "skipped": c.skipped,
                    "parameter": None
                    if c.parameter is None
                    else rational_to_string(c.parameter),
                }
                for c in self.cells
            ],
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _tally(cells: Sequence[ScanCell]) -> tuple[int, int, int, int]:
    plus = sum(1 for c in cells if c.complete and c.root == 1)
    minus = sum(1 for c in cells if c.complete and c.root == -1)
    skipped = sum(1 for c in cells if c.skipped)
    incomplete = sum(1 for c in cells if not c.skipped and not c.complete)
    return (plus, minus, incomplete, skipped)


def _scan_cell(spec: ScanSpec, n: int, m: int) -> ScanCell:
    T = spec.lattice_point(n, m)
    try:
        param = spec.mapping.parameter(T)
    except DegenerateFiber:
        return ScanCell(n, m, root=None, complete=False, skipped=True)
    try:
        sp = spec.family.specialize(param, spec.budget)
    except (ValueError, ZeroDivisionError):
        # the parameter hits a vanishing-discriminant locus of the family
        return ScanCell(n, m, root=None, complete=False, skipped=True, parameter=param)
    E = sp.curve()
    tg = torsion_subgroup(E, hints=sp.torsion_points)
    if tg.structure != spec.family.torsion:
        # outside the family's generic isomorphism class
        return ScanCell(n, m, root=None, complete=False, skipped=True, parameter=param)
    try:
        rn = global_root_number(E, spec.budget)
    except (Unfactored, MissingLocalCase):
        return ScanCell(n, m, root=None, complete=False, skipped=False, parameter=param)
    return ScanCell(
        n, m, root=rn.value, complete=rn.complete, skipped=False, parameter=param
    )


def lattice_scan(spec: ScanSpec, workers: int = 1) -> ScanGrid:
    """Run the scan over the full (2*radius+1)^2 grid.

    Per-cell failures never abort the scan: degenerate parameters are
    flagged skipped, and cells whose discriminants exceed the factoring
    budget are flagged incomplete.  The output is deterministic and
    independent of ``workers``.
    """
    coords = [
        (n, m)
        for n in range(-spec.radius, spec.radius + 1)
        for m in range(-spec.radius, spec.radius + 1)
    ]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda c: _scan_cell(spec, *c), coords))
    else:
        results = [_scan_cell(spec, n, m) for n, m in coords]
    cells = tuple(sorted(results, key=lambda c: (c.n, c.m)))
    return ScanGrid(
        name=spec.name, radius=spec.radius, cells=cells, counts=_tally(cells)
    )


# ---------------------------------------------------------------------------
# symmetry audit
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SymmetryReport:
    checked_pairs: int
    violations: tuple[tuple[tuple[int, int], tuple[int, int]], ...]
    isomorphism_samples: int
    isomorphism_failures: tuple[tuple[tuple[int, int], tuple[int, int]], ...]

    @property
    def ok(self) -> bool:
        return not self.violations and not self.isomorphism_failures


def symmetry_audit(
    grid: ScanGrid,
    symmetry: Union[tuple[int, int], Callable[[int, int], tuple[int, int]]],
    spec: Optional[ScanSpec] = None,
    samples: int = 2,
) -> SymmetryReport:
    """Check that symmetric cells carry equal root numbers.

    ``symmetry`` is either a pair (a, b), declaring the involution
    (n, m) -> (a - n, b - m), or an arbitrary callable on cell indices.
    Complete symmetric pairs with differing signs are reported as
    violations.  When the spec is supplied, the first ``samples``
    non-skipped symmetric pairs are additionally certified by an exact
    Q-isomorphism of the underlying curves.
    """
    if callable(symmetry):
        sym = symmetry
    else:
        a, b = symmetry
        sym = lambda n, m: (a - n, b - m)
    index = {(c.n, c.m): c for c in grid.cells}
    checked = 0
    violations = []
    sampled = 0
    iso_failures = []
    for c in grid.cells:
        o = sym(c.n, c.m)
        if o not in index or o < (c.n, c.m):
            continue
        oc = index[o]
        if c.complete and oc.complete and c.root is not None and oc.root is not None:
            checked += 1
            if c.root != oc.root:
                violations.append(((c.n, c.m), o))
        if (
            spec is not None
            and sampled < samples
            and o != (c.n, c.m)
            and not c.skipped
            and not oc.skipped
            and c.parameter is not None
            and oc.parameter is not None
        ):
            sampled += 1
            Ea = spec.family.specialize(c.parameter, spec.budget).curve()
            Eb = spec.family.specialize(oc.parameter, spec.budget).curve()
            if isomorphic_over_Q(Ea, Eb) is None:
                iso_failures.append(((c.n, c.m), o))
    return SymmetryReport(
        checked_pairs=checked,
        violations=tuple(violations),
        isomorphism_samples=sampled,
        isomorphism_failures=tuple(iso_failures),
    )


# ---------------------------------------------------------------------------
# the three built-in scans
# ---------------------------------------------------------------------------

# Compatibility curve linking the parameters of Z8R2-1 (variable r) and
# Z8R2-2 (variable s): a point (r, s) means both families specialize to the
# same curve, which then carries the sections of both.
CURVE_C = BiquadraticCurve((
    (Fraction(319), Fraction(0), Fraction(-11)),
    (Fraction(290), Fraction(-120), Fraction(10)),
    (Fraction(-29), Fraction(0), Fraction(1)),
))

# Two equivalent compatibility curves linking the parameters of Z2x6R2-3
# (variable r) and Z2x6R2-1 (variable s).  Their discriminants with respect
# to either variable agree up to square factors, so they parametrize the
# same set of (r, s) pairs.
CURVE_D1 = BiquadraticCurve((
    (Fraction(5040), Fraction(-2700), Fraction(360)),
    (Fraction(-336), Fraction(168), Fraction(-24)),
    (Fraction(0), Fraction(1), Fraction(0)),
))

CURVE_D2 = BiquadraticCurve((
    (Fraction(0), Fraction(90), Fraction(0)),
    (Fraction(-168), Fraction(84), Fraction(-12)),
    (Fraction(14), Fraction(-15, 2), Fraction(1)),
))


def _quartic_with_point(
    C: BiquadraticCurve, eliminate: str, point: tuple[Scalar, Scalar]
) -> QuarticModel:
    q, _ = _square_reduced_disc(C, eliminate)
    return QuarticModel(q, (Fraction(point[0]), Fraction(point[1])))


def scan_spec_z8_first(
    radius: int = 2,
    budget: FactorBudget = DEFAULT_BUDGET,
    negate: bool = False,
) -> ScanSpec:
    """Scan of Z8R2-1 members carrying a second independent section.

    Parameter pairs live on CURVE_C; the base cell maps to its rational
    point (-1, 0).  Cells (n, m) and (1-n, -1-m) carry the same curve, as
    do cells differing by any of the three 2-torsion translates.
    """
    E = WeierstrassCurve(1, 1, 1, -1595, -4768)
    G1 = CurvePoint(Fraction(-57, 4), Fraction(1043, 8))
    G2 = CurvePoint(Fraction(42), Fraction(-89))
    T1 = CurvePoint(Fraction(-3), Fraction(1))
    T2 = CurvePoint(Fraction(-39), Fraction(19))
    quartic = _quartic_with_point(CURVE_C, "s", (-1, 60))
    mapping = ParameterMap(E, quartic, CURVE_C, "s", companion_sign=1, negate=negate)
    cat = catalog()
    return ScanSpec(
        name="Z8-scan-1",
        parametrizer=E,
        generators=(G1, G2),
        torsion_generators=(T1, T2),
        family=cat["Z8R2-1"],
        mapping=mapping,
        symmetry=(1, -1),
        radius=radius,
        identified_translates=(T1, T2, E.add(T1, T2)),
        companion=CURVE_C,
        companion_family=cat["Z8R2-2"],
        budget=budget,
    )


def scan_spec_z8_second(
    radius: int = 2,
    budget: FactorBudget = DEFAULT_BUDGET,
    negate: bool = False,
) -> ScanSpec:
    """Scan of Z8R2-2 members carrying a second independent section.

    The extra-section condition is the single quartic t^2 = q(u); the base
    cell maps to u = 0.  Cells (n, m) and (-1-n, -m) carry the same curve.
    """
    E = WeierstrassCurve(0, 0, 0, -105987, 11743634)
    G1 = CurvePoint(Fraction(-77), Fraction(-4410))
    G2 = CurvePoint(Fraction(805), Fraction(21168))
    u = PolyQ.variable("u")
    q = 9 * u**4 - 90 * u**3 + 453 * u * u - 2610 * u + 7569
    quartic = QuarticModel(q, (Fraction(0), Fraction(87)))
    mapping = ParameterMap(E, quartic, negate=negate)
    torsion = tuple(
        sorted(
            (P for P in _two_torsion(E)), key=lambda P: (P.x, P.y)
        )
    )
    return ScanSpec(
        name="Z8-scan-2",
        parametrizer=E,
        generators=(G1, G2),
        torsion_generators=torsion,
        family=catalog()["Z8R2-2"],
        mapping=mapping,
        symmetry=(-1, 0),
        radius=radius,
        identified_translates=torsion,
        budget=budget,
    )


def scan_spec_z2x6(
    radius: int = 2,
    budget: FactorBudget = DEFAULT_BUDGET,
    negate: bool = False,
) -> ScanSpec:
    """Scan of Z2x6R2-3 members carrying a second independent section.

    Parameter pairs live on CURVE_D1 (equivalently CURVE_D2); the base
    cell maps to its rational point (0, 4).  Cells (n, m) and
    (1-n, 1-m) carry the same curve.
    """
    E = WeierstrassCurve(0, -1, 0, -456, 3456)
    G1 = CurvePoint(Fraction(20), Fraction(-44))
    G2 = CurvePoint(Fraction(4, 9), Fraction(-1540, 27))
    quartic = _quartic_with_point(CURVE_D1, "s", (0, 180))
    mapping = ParameterMap(E, quartic, CURVE_D1, "s", companion_sign=1, negate=negate)
    cat = catalog()
    torsion = tuple(sorted(_two_torsion(E), key=lambda P: (P.x, P.y)))
    return ScanSpec(
        name="Z2x6-scan-1",
        parametrizer=E,
        generators=(G1, G2),
        torsion_generators=torsion,
        family=cat["Z2x6R2-3"],
        mapping=mapping,
        symmetry=(1, 1),
        radius=radius,
        identified_translates=torsion,
        companion=CURVE_D1,
        companion_family=cat["Z2x6R2-1"],
        budget=budget,
    )


def _two_torsion(E: WeierstrassCurve):
    from .curves import two_torsion_points

    return two_torsion_points(E)


def builtin_scans(
    radius: int = 2,
    budget: FactorBudget = DEFAULT_BUDGET,
    negate: bool = False,
) -> dict[str, ScanSpec]:
    """The three shipped scan setups keyed by name."""
    specs = [
        scan_spec_z8_first(radius, budget, negate),
        scan_spec_z8_second(radius, budget, negate),
        scan_spec_z2x6(radius, budget, negate),
    ]
    return {s.name: s for s in specs}
